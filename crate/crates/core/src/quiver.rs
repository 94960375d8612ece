//! The circular quiver on four vertices with doubled arrows, its free path
//! algebra, and the quotient algebra `A_T = KΓ / ⟨xy, x^{4T+2} + y^{4T+2}, yx⟩`.
//!
//! Here `x = Σ a_i` and `y = Σ b_i`, so every path made of a single kind of
//! arrow is `e_i x^j` or `e_i y^j`. Paths are read left to right and every
//! arrow advances the vertex by one (mod 4).
//!
//! Normal forms keep the literal basis `{e_i x^j, e_i y^l | 0 ≤ j ≤ 4T+2,
//! 1 ≤ l ≤ 4T+1}`; `e_i y^{4T+2}` is always rewritten to `-e_i x^{4T+2}`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::SparseVec;
use crate::scalar::{Field, Scalar};

pub const VERTEX_COUNT: usize = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Vertex(u8);

impl Vertex {
    pub fn new(i: i64) -> Self {
        Vertex(i.rem_euclid(VERTEX_COUNT as i64) as u8)
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn shift(self, k: i64) -> Vertex {
        Vertex::new(self.0 as i64 + k)
    }

    pub fn is_even(self) -> bool {
        self.0.is_multiple_of(2)
    }

    pub fn all() -> impl Iterator<Item = Vertex> {
        (0..VERTEX_COUNT as i64).map(Vertex::new)
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Arrow {
    /// `a_i`, a summand of `x`.
    A,
    /// `b_i`, a summand of `y`.
    B,
}

/// A path of the quiver. The start vertex and the arrow kinds determine it,
/// since the `k`-th arrow starts at `start + k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FreePath {
    start: Vertex,
    letters: Vec<Arrow>,
}

impl FreePath {
    pub fn trivial(v: Vertex) -> Self {
        FreePath {
            start: v,
            letters: Vec::new(),
        }
    }

    pub fn new(start: Vertex, letters: Vec<Arrow>) -> Self {
        FreePath { start, letters }
    }

    pub fn start(&self) -> Vertex {
        self.start
    }

    pub fn end(&self) -> Vertex {
        self.start.shift(self.letters.len() as i64)
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[Arrow] {
        &self.letters
    }

    /// This path followed by `count` arrows of kind `arrow`.
    pub fn then(&self, arrow: Arrow, count: usize) -> FreePath {
        let mut letters = self.letters.clone();
        letters.extend(std::iter::repeat_n(arrow, count));
        FreePath {
            start: self.start,
            letters,
        }
    }

    pub fn concat(&self, other: &FreePath) -> Option<FreePath> {
        (other.start == self.end()).then(|| {
            let mut letters = self.letters.clone();
            letters.extend_from_slice(&other.letters);
            FreePath {
                start: self.start,
                letters,
            }
        })
    }

    /// The unique `s` with `prefix · s = self`, if `prefix` is a prefix.
    pub fn strip_prefix(&self, prefix: &FreePath) -> Option<FreePath> {
        if prefix.start != self.start || !self.letters.starts_with(&prefix.letters) {
            return None;
        }
        Some(FreePath {
            start: prefix.end(),
            letters: self.letters[prefix.letters.len()..].to_vec(),
        })
    }
}

impl fmt::Display for FreePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "e{}", self.start);
        }
        for (k, a) in self.letters.iter().enumerate() {
            let v = self.start.shift(k as i64);
            let name = match a {
                Arrow::A => "a",
                Arrow::B => "b",
            };
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{name}{v}")?;
        }
        Ok(())
    }
}

/// A finite linear combination of paths in `KΓ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeElement {
    field: Field,
    terms: BTreeMap<FreePath, Scalar>,
}

impl FreeElement {
    pub fn zero(field: Field) -> Self {
        FreeElement {
            field,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_path(path: FreePath, field: Field) -> Self {
        let mut e = FreeElement::zero(field);
        e.add_term(path, field.one());
        e
    }

    /// `e_i x^k` (`arrow = A`) or `e_i y^k` (`arrow = B`) as a path.
    pub fn power(start: Vertex, arrow: Arrow, k: usize, field: Field) -> Self {
        FreeElement::from_path(FreePath::trivial(start).then(arrow, k), field)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn add_term(&mut self, path: FreePath, coeff: Scalar) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(path.clone()).or_insert_with(|| self.field.zero());
        *slot += &coeff;
        if slot.is_zero() {
            self.terms.remove(&path);
        }
    }

    pub fn add(&self, other: &FreeElement) -> FreeElement {
        let mut out = self.clone();
        for (p, c) in &other.terms {
            out.add_term(p.clone(), c.clone());
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&FreePath, &Scalar)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Right multiplication by `x^k` or `y^k`.
    pub fn times_power(&self, arrow: Arrow, k: usize) -> FreeElement {
        FreeElement {
            field: self.field,
            terms: self.terms.iter().map(|(p, c)| (p.then(arrow, k), c.clone())).collect(),
        }
    }

    /// `Some((origin, terminus))` when every path shares one origin and one
    /// terminus.
    pub fn uniform_endpoints(&self) -> Option<(Vertex, Vertex)> {
        let mut it = self.terms.keys();
        let first = it.next()?;
        let ends = (first.start(), first.end());
        it.all(|p| (p.start(), p.end()) == ends).then_some(ends)
    }
}

impl fmt::Display for FreeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (p, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            if c.is_one() {
                write!(f, "{p}")?;
            } else {
                write!(f, "{c}·({p})")?;
            }
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Letter {
    E,
    X,
    Y,
}

/// A normal-form basis monomial `e_i`, `e_i x^j` or `e_i y^l` of `A_T`.
///
/// Only the origin vertex is stored; the terminus is `vertex + exponent`.
/// The derived order is (vertex, E < X < Y, exponent), which is the basis
/// order used everywhere downstream.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Monomial {
    vertex: Vertex,
    letter: Letter,
    exponent: u32,
}

impl Monomial {
    pub fn idempotent(v: Vertex) -> Self {
        Monomial {
            vertex: v,
            letter: Letter::E,
            exponent: 0,
        }
    }

    /// `e_v x^k`; `k = 0` gives `e_v`.
    pub fn x(v: Vertex, k: u32) -> Self {
        Monomial::power(v, Letter::X, k)
    }

    /// `e_v y^k`; `k = 0` gives `e_v`.
    pub fn y(v: Vertex, k: u32) -> Self {
        Monomial::power(v, Letter::Y, k)
    }

    pub fn power(v: Vertex, letter: Letter, k: u32) -> Self {
        if k == 0 || letter == Letter::E {
            Monomial::idempotent(v)
        } else {
            Monomial {
                vertex: v,
                letter,
                exponent: k,
            }
        }
    }

    pub fn vertex(self) -> Vertex {
        self.vertex
    }

    pub fn letter(self) -> Letter {
        self.letter
    }

    pub fn exponent(self) -> u32 {
        self.exponent
    }

    pub fn end(self) -> Vertex {
        self.vertex.shift(self.exponent as i64)
    }

    pub fn is_radical(self) -> bool {
        self.exponent > 0
    }

    pub fn is_valid(self, t: u32) -> bool {
        match self.letter {
            Letter::E => self.exponent == 0,
            Letter::X => (1..=4 * t + 2).contains(&self.exponent),
            Letter::Y => (1..=4 * t + 1).contains(&self.exponent),
        }
    }

    /// Product in `A_T` as `±monomial`, or `None` when it vanishes.
    pub fn times(self, other: Monomial, t: u32) -> Option<(i64, Monomial)> {
        if other.vertex != self.end() {
            return None;
        }
        let top = 4 * t + 2;
        let e = self.exponent + other.exponent;
        match (self.letter, other.letter) {
            (Letter::E, _) => Some((1, other)),
            (_, Letter::E) => Some((1, self)),
            (Letter::X, Letter::X) => (e <= top).then(|| (1, Monomial::x(self.vertex, e))),
            (Letter::Y, Letter::Y) if e < top => Some((1, Monomial::y(self.vertex, e))),
            (Letter::Y, Letter::Y) if e == top => Some((-1, Monomial::x(self.vertex, top))),
            _ => None,
        }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v = self.vertex;
        match (self.letter, self.exponent) {
            (Letter::E, _) => write!(f, "e{v}"),
            (Letter::X, 1) => write!(f, "e{v}x"),
            (Letter::Y, 1) => write!(f, "e{v}y"),
            (Letter::X, k) => write!(f, "e{v}x^{k}"),
            (Letter::Y, k) => write!(f, "e{v}y^{k}"),
        }
    }
}

/// The algebra `A_T` over a fixed field.
#[derive(Clone, Debug)]
pub struct Algebra {
    t: u32,
    field: Field,
    basis: Vec<Monomial>,
}

impl Algebra {
    pub fn new(t: u32, field: Field) -> Self {
        let mut basis = Vec::new();
        for v in Vertex::all() {
            basis.push(Monomial::idempotent(v));
            basis.extend((1..=4 * t + 2).map(|k| Monomial::x(v, k)));
            basis.extend((1..=4 * t + 1).map(|k| Monomial::y(v, k)));
        }
        Algebra { t, field, basis }
    }

    pub fn t(&self) -> u32 {
        self.t
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn basis(&self) -> &[Monomial] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    fn block(&self) -> usize {
        8 * self.t as usize + 4
    }

    pub fn index_of(&self, m: Monomial) -> Option<usize> {
        if !m.is_valid(self.t) {
            return None;
        }
        let offset = match m.letter {
            Letter::E => 0,
            Letter::X => m.exponent as usize,
            Letter::Y => 4 * self.t as usize + 2 + m.exponent as usize,
        };
        Some(m.vertex.index() * self.block() + offset)
    }

    pub fn monomial(&self, v: Vertex, letter: Letter, k: u32) -> Result<Monomial> {
        let m = Monomial::power(v, letter, k);
        if (letter == Letter::E && k > 0) || !m.is_valid(self.t) {
            return Err(Error::InvalidMonomial(format!(
                "{letter:?}^{k} at vertex {v} is not a basis monomial for T={}",
                self.t
            )));
        }
        Ok(m)
    }

    /// Basis monomials leaving `v`, in basis order.
    pub fn monomials_from(&self, v: Vertex) -> impl Iterator<Item = Monomial> + '_ {
        let block = self.block();
        self.basis[v.index() * block..(v.index() + 1) * block].iter().copied()
    }

    /// Basis monomials from `v` to `w`.
    pub fn monomials_between(&self, v: Vertex, w: Vertex) -> Vec<Monomial> {
        let block = self.block();
        self.basis[v.index() * block..(v.index() + 1) * block]
            .iter()
            .copied()
            .filter(|m| m.end() == w)
            .collect()
    }

    pub fn radical_monomials(&self) -> impl Iterator<Item = Monomial> + '_ {
        self.basis.iter().copied().filter(|m| m.is_radical())
    }

    pub fn mul_monomials(&self, a: Monomial, b: Monomial) -> Option<(i64, Monomial)> {
        a.times(b, self.t)
    }

    fn check(&self, e: &AlgebraElement) -> Result<()> {
        if e.t != self.t || e.field != self.field {
            return Err(Error::ContextMismatch {
                expected: format!("A_{} over {}", self.t, self.field),
                found: format!("A_{} over {}", e.t, e.field),
            });
        }
        Ok(())
    }

    pub fn zero(&self) -> AlgebraElement {
        AlgebraElement {
            t: self.t,
            field: self.field,
            terms: BTreeMap::new(),
        }
    }

    pub fn element(&self, m: Monomial) -> AlgebraElement {
        self.scaled(m, self.field.one())
    }

    pub fn scaled(&self, m: Monomial, c: Scalar) -> AlgebraElement {
        let mut e = self.zero();
        e.add_term(m, c);
        e
    }

    /// The unit `Σ e_i`.
    pub fn one(&self) -> AlgebraElement {
        let mut e = self.zero();
        for v in Vertex::all() {
            e.add_term(Monomial::idempotent(v), self.field.one());
        }
        e
    }

    /// `Σ_i e_i x^k` (or `y^k`), the images of the free elements `x^k`, `y^k`.
    pub fn power_sum(&self, letter: Letter, k: u32) -> AlgebraElement {
        let arrow = match letter {
            Letter::Y => Arrow::B,
            _ => Arrow::A,
        };
        let k = if letter == Letter::E { 0 } else { k as usize };
        let mut e = self.zero();
        for v in Vertex::all() {
            if let Some((s, m)) = self.path_image(&FreePath::trivial(v).then(arrow, k)) {
                e.add_term(m, self.field.from_i64(s));
            }
        }
        e
    }

    /// Image of a single path in `A_T`.
    pub fn path_image(&self, p: &FreePath) -> Option<(i64, Monomial)> {
        let letters = p.letters();
        let Some(&first) = letters.first() else {
            return Some((1, Monomial::idempotent(p.start())));
        };
        if letters.iter().any(|&a| a != first) {
            return None;
        }
        let k = letters.len() as u32;
        let top = 4 * self.t + 2;
        match first {
            Arrow::A => (k <= top).then(|| (1, Monomial::x(p.start(), k))),
            Arrow::B if k < top => Some((1, Monomial::y(p.start(), k))),
            Arrow::B if k == top => Some((-1, Monomial::x(p.start(), top))),
            Arrow::B => None,
        }
    }

    /// Image of a free element under `KΓ → A_T`.
    pub fn normal_form(&self, e: &FreeElement) -> Result<AlgebraElement> {
        if e.field() != self.field {
            return Err(Error::ContextMismatch {
                expected: format!("coefficients in {}", self.field),
                found: format!("coefficients in {}", e.field()),
            });
        }
        let mut out = self.zero();
        for (p, c) in e.terms() {
            if let Some((s, m)) = self.path_image(p) {
                out.add_term(m, c * &self.field.from_i64(s));
            }
        }
        Ok(out)
    }

    /// The free path algebra representative of a normal form: the inverse
    /// direction of [`Algebra::normal_form`] on basis monomials.
    pub fn embed(&self, e: &AlgebraElement) -> FreeElement {
        let mut out = FreeElement::zero(self.field);
        for (m, c) in e.terms() {
            let arrow = match m.letter {
                Letter::Y => Arrow::B,
                _ => Arrow::A,
            };
            out.add_term(FreePath::trivial(m.vertex).then(arrow, m.exponent as usize), c.clone());
        }
        out
    }

    pub fn multiply(&self, a: &AlgebraElement, b: &AlgebraElement) -> Result<AlgebraElement> {
        self.check(a)?;
        self.check(b)?;
        let mut out = self.zero();
        for (ma, ca) in a.terms() {
            for (mb, cb) in b.terms() {
                if let Some((s, m)) = ma.times(*mb, self.t) {
                    out.add_term(m, &(ca * cb) * &self.field.from_i64(s));
                }
            }
        }
        Ok(out)
    }

    pub fn to_vector(&self, e: &AlgebraElement) -> SparseVec {
        e.terms()
            .map(|(m, c)| (self.index_of(*m).expect("normal-form monomial"), c.clone()))
            .collect()
    }

    pub fn from_vector(&self, v: &SparseVec) -> AlgebraElement {
        let mut out = self.zero();
        for (i, c) in v.iter() {
            out.add_term(self.basis[*i], c.clone());
        }
        out
    }
}

/// An element of `A_T`: a combination of normal-form monomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraElement {
    t: u32,
    field: Field,
    terms: BTreeMap<Monomial, Scalar>,
}

impl AlgebraElement {
    pub fn t(&self) -> u32 {
        self.t
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn add_term(&mut self, m: Monomial, coeff: Scalar) {
        debug_assert!(m.is_valid(self.t), "{m} is not a basis monomial for T={}", self.t);
        if coeff.is_zero() {
            return;
        }
        let field = self.field;
        let slot = self.terms.entry(m).or_insert_with(|| field.zero());
        *slot += &coeff;
        if slot.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn add_scaled(&mut self, other: &AlgebraElement, c: &Scalar) {
        for (m, d) in &other.terms {
            self.add_term(*m, c * d);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: Monomial) -> Scalar {
        self.terms.get(&m).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &Scalar) -> AlgebraElement {
        let mut out = AlgebraElement {
            t: self.t,
            field: self.field,
            terms: BTreeMap::new(),
        };
        out.add_scaled(self, c);
        out
    }

    pub fn sub(&self, other: &AlgebraElement) -> AlgebraElement {
        let mut out = self.clone();
        out.add_scaled(other, &self.field.from_i64(-1));
        out
    }

    pub fn plus(&self, other: &AlgebraElement) -> AlgebraElement {
        let mut out = self.clone();
        out.add_scaled(other, &self.field.one());
        out
    }

    /// True iff every monomial has positive length.
    pub fn in_radical(&self) -> bool {
        self.terms.keys().all(|m| m.is_radical())
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            if c.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "({c}){m}")?;
            }
        }
        Ok(())
    }
}
