//! Exact field arithmetic over ℚ and the prime fields 𝔽_p.
//!
//! A [`Field`] is identified by its characteristic alone. Elements are
//! [`Scalar`]s, which carry enough information to know which field they live
//! in, so mixing fields is detected instead of silently producing garbage.
//! Rationals use arbitrary-precision integers; nothing is ever rounded.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num::{BigInt, BigRational, One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("characteristic {0} is neither 0 nor a prime")]
    NotPrime(u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields (characteristic {left} vs {right})")]
    FieldMismatch { left: u64, right: u64 },
    #[error("binary operation {0:?} is missing its second operand")]
    MissingOperand(ArithOp),
}

/// A field of coefficients: ℚ (characteristic 0) or 𝔽_p.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Field {
    characteristic: u64,
}

impl Field {
    pub const RATIONALS: Field = Field { characteristic: 0 };

    pub fn new(characteristic: u64) -> Result<Self, ScalarError> {
        if characteristic == 0 || is_prime(characteristic) {
            Ok(Field { characteristic })
        } else {
            Err(ScalarError::NotPrime(characteristic))
        }
    }

    pub fn characteristic(self) -> u64 {
        self.characteristic
    }

    pub fn is_rational(self) -> bool {
        self.characteristic == 0
    }

    pub fn zero(self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(self, value: i64) -> Scalar {
        match self.characteristic {
            0 => Scalar::Rational(BigRational::from_integer(BigInt::from(value))),
            p => Scalar::Modular {
                residue: value.rem_euclid(p as i64) as u64,
                modulus: p,
            },
        }
    }

    /// `a / b` as a field element; `None` when `b` vanishes in this field.
    pub fn fraction(self, numer: i64, denom: i64) -> Option<Scalar> {
        self.from_i64(numer).checked_div(&self.from_i64(denom)).ok()
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.characteristic {
            0 => write!(f, "Q"),
            p => write!(f, "F{p}"),
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// True iff the characteristic of `field` is a prime dividing `2T + 1`.
///
/// Always false over ℚ, and always false in characteristic 2 since `2T + 1`
/// is odd.
pub fn divides_two_t_plus_one(field: Field, t: u32) -> bool {
    match field.characteristic() {
        0 => false,
        p => (2 * t as u64 + 1).is_multiple_of(p),
    }
}

/// An element of ℚ or of 𝔽_p.
///
/// Rationals are kept in lowest terms with a positive denominator (this is
/// what [`BigRational`] maintains); residues are canonical in `[0, p)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Modular { residue: u64, modulus: u64 },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
    Neg,
    Inv,
}

/// Single entry point for checked field arithmetic. Unary operations ignore
/// `b`; binary operations require it.
pub fn field_arith(op: ArithOp, a: &Scalar, b: Option<&Scalar>) -> Result<Scalar, ScalarError> {
    let rhs = || b.ok_or(ScalarError::MissingOperand(op));
    match op {
        ArithOp::Add => a.checked_add(rhs()?),
        ArithOp::Sub => a.checked_sub(rhs()?),
        ArithOp::Mul => a.checked_mul(rhs()?),
        ArithOp::Div => a.checked_div(rhs()?),
        ArithOp::Neg => Ok(-a),
        ArithOp::Inv => a.inv(),
    }
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Rational(_) => Field::RATIONALS,
            Scalar::Modular { modulus, .. } => Field {
                characteristic: *modulus,
            },
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Modular { residue, .. } => *residue == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_one(),
            Scalar::Modular { residue, .. } => *residue == 1,
        }
    }

    /// The value as a small integer, when it is one. Residues are read in
    /// the symmetric range so that `p - 1` reports as `-1`.
    pub fn to_i64(&self) -> Option<i64> {
        match self {
            Scalar::Rational(q) if q.is_integer() => q.numer().to_i64(),
            Scalar::Rational(_) => None,
            Scalar::Modular { residue, modulus } => {
                let r = *residue as i64;
                let p = *modulus as i64;
                Some(if r > p / 2 { r - p } else { r })
            }
        }
    }

    fn check_same(&self, other: &Scalar) -> Result<(), ScalarError> {
        let (l, r) = (self.field(), other.field());
        if l == r {
            Ok(())
        } else {
            Err(ScalarError::FieldMismatch {
                left: l.characteristic(),
                right: r.characteristic(),
            })
        }
    }

    pub fn checked_add(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        self.check_same(other)?;
        Ok(match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Modular { residue: a, modulus }, Scalar::Modular { residue: b, .. }) => Scalar::Modular {
                residue: ((*a as u128 + *b as u128) % *modulus as u128) as u64,
                modulus: *modulus,
            },
            _ => unreachable!(),
        })
    }

    pub fn checked_sub(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        self.check_same(other)?;
        Ok(match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Modular { residue: a, modulus }, Scalar::Modular { residue: b, .. }) => Scalar::Modular {
                residue: ((*a as u128 * *b as u128) % *modulus as u128) as u64,
                modulus: *modulus,
            },
            _ => unreachable!(),
        })
    }

    pub fn checked_div(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        self.check_same(other)?;
        self.checked_mul(&other.inv()?)
    }

    pub fn inv(&self) -> Result<Scalar, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(match self {
            Scalar::Rational(q) => Scalar::Rational(q.recip()),
            Scalar::Modular { residue, modulus } => Scalar::Modular {
                residue: mod_pow(*residue, *modulus - 2, *modulus),
                modulus: *modulus,
            },
        })
    }
}

fn mod_pow(base: u64, mut exp: u64, modulus: u64) -> u64 {
    let m = modulus as u128;
    let mut acc: u128 = 1 % m;
    let mut b = base as u128 % m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    acc as u64
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(q) => {
                if q.is_integer() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            Scalar::Modular { residue, .. } => write!(f, "{residue}"),
        }
    }
}

// Operator impls panic on mixed fields. Internal code only combines scalars
// created from a single `Field`; callers that cannot guarantee this use the
// `checked_*` methods.

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(q) => Scalar::Rational(-q),
            Scalar::Modular { residue, modulus } => Scalar::Modular {
                residue: (*modulus - *residue) % *modulus,
                modulus: *modulus,
            },
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                self.$checked(rhs).expect("scalar arithmetic across fields")
            }
        }
        impl $trait<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$checked(&rhs).expect("scalar arithmetic across fields")
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => *a += b,
            (Scalar::Modular { residue, modulus }, Scalar::Modular { residue: b, modulus: q }) if modulus == q => {
                *residue = ((*residue as u128 + *b as u128) % *modulus as u128) as u64;
            }
            _ => panic!("scalar arithmetic across fields"),
        }
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        *self += &-rhs;
    }
}

impl Scalar {
    /// Sign of a rational value; residues report their symmetric sign.
    pub fn signum(&self) -> i64 {
        match self {
            Scalar::Rational(q) => q.signum().to_i64().unwrap_or(0),
            Scalar::Modular { .. } => self.to_i64().map(i64::signum).unwrap_or(0),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> Scalar {
        Field::RATIONALS.fraction(n, d).unwrap()
    }

    #[test]
    fn rational_addition_is_exact() {
        assert_eq!(q(1, 2) + q(1, 3), q(5, 6));
        assert_eq!(format!("{}", q(5, 6)), "5/6");
        assert_eq!(q(2, 4), q(1, 2));
    }

    #[test]
    fn inverse_mod_five() {
        let f5 = Field::new(5).unwrap();
        assert_eq!(f5.from_i64(2).inv().unwrap(), f5.from_i64(3));
    }

    #[test]
    fn negating_zero() {
        for f in [Field::RATIONALS, Field::new(2).unwrap(), Field::new(7).unwrap()] {
            assert!((-f.zero()).is_zero());
        }
    }

    #[test]
    fn errors_are_explicit() {
        let f3 = Field::new(3).unwrap();
        assert_eq!(
            f3.from_i64(1).checked_div(&f3.from_i64(3)),
            Err(ScalarError::DivisionByZero)
        );
        assert!(matches!(
            f3.one().checked_add(&Field::RATIONALS.one()),
            Err(ScalarError::FieldMismatch { left: 3, right: 0 })
        ));
        assert_eq!(Field::new(9), Err(ScalarError::NotPrime(9)));
        assert_eq!(Field::new(1), Err(ScalarError::NotPrime(1)));
        assert!(matches!(
            field_arith(ArithOp::Add, &f3.one(), None),
            Err(ScalarError::MissingOperand(ArithOp::Add))
        ));
        assert_eq!(
            field_arith(ArithOp::Inv, &Field::RATIONALS.zero(), None),
            Err(ScalarError::DivisionByZero)
        );
    }

    #[test]
    fn field_arith_dispatch() {
        let add = field_arith(ArithOp::Add, &q(1, 2), Some(&q(1, 3))).unwrap();
        assert_eq!(add, q(5, 6));
        let f5 = Field::new(5).unwrap();
        assert_eq!(
            field_arith(ArithOp::Inv, &f5.from_i64(2), None).unwrap(),
            f5.from_i64(3)
        );
        assert_eq!(field_arith(ArithOp::Neg, &f5.zero(), None).unwrap(), f5.zero());
    }

    #[test]
    fn divisibility_predicate() {
        assert!(divides_two_t_plus_one(Field::new(3).unwrap(), 1));
        assert!(!divides_two_t_plus_one(Field::RATIONALS, 7));
        assert!(divides_two_t_plus_one(Field::new(5).unwrap(), 2));
        assert!(!divides_two_t_plus_one(Field::new(3).unwrap(), 2));
    }

    #[test]
    fn symmetric_integer_readout() {
        let f7 = Field::new(7).unwrap();
        assert_eq!(f7.from_i64(-1).to_i64(), Some(-1));
        assert_eq!(q(-3, 1).to_i64(), Some(-3));
        assert_eq!(q(1, 2).to_i64(), None);
    }

    fn field_strategy() -> impl Strategy<Value = Field> {
        prop_oneof![Just(0u64), Just(2), Just(3), Just(5), Just(7), Just(1_000_000_007)]
            .prop_map(|c| Field::new(c).unwrap())
    }

    proptest! {
        #[test]
        fn characteristic_two_never_divides(t in 0u32..10_000) {
            prop_assert!(!divides_two_t_plus_one(Field::new(2).unwrap(), t));
        }

        #[test]
        fn field_axioms(f in field_strategy(), a in -50i64..50, b in -50i64..50, c in -50i64..50, d in 1i64..20) {
            let (a, b, c) = (f.from_i64(a), f.fraction(b, d).unwrap_or_else(|| f.from_i64(b)), f.from_i64(c));
            prop_assert_eq!((&a + &b) + c.clone(), &a + &(&b + &c));
            prop_assert_eq!((&a * &b) * c.clone(), &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert!((&a - &a).is_zero());
            if !a.is_zero() {
                prop_assert!((&a * &a.inv().unwrap()).is_one());
            }
        }
    }
}
