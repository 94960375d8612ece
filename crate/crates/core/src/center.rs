//! The center `Z(A_T)` by brute-force centrality, and its comparison with
//! `K[X, Y] / (X^{T+1}, XY, Y^{T+1})` where `X = Σ e_i x^4`, `Y = Σ e_i y^4`.

use crate::linalg::{relations, Echelon, SparseVec};
use crate::quiver::{Algebra, AlgebraElement, Letter};
use crate::report::CheckReport;

#[derive(Clone, Debug)]
pub struct Center {
    pub basis: Vec<AlgebraElement>,
    /// `structure[a][b]`: coordinates of `basis[a] · basis[b]` in `basis`.
    pub structure: Vec<Vec<SparseVec>>,
    pub presentation: CheckReport,
}

impl Center {
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }
}

/// The commutator vector `(zb − bz)_b` over all basis monomials `b`.
fn commutators(alg: &Algebra, z: &AlgebraElement) -> SparseVec {
    let dim = alg.dim();
    let mut pairs = Vec::new();
    for (k, b) in alg.basis().iter().enumerate() {
        let b = alg.element(*b);
        let c = alg
            .multiply(z, &b)
            .expect("same algebra")
            .sub(&alg.multiply(&b, z).expect("same algebra"));
        pairs.extend(alg.to_vector(&c).iter().map(|(i, v)| (k * dim + i, v.clone())));
    }
    SparseVec::from_pairs(pairs)
}

pub fn is_central(alg: &Algebra, z: &AlgebraElement) -> bool {
    commutators(alg, z).is_zero()
}

pub fn compute_center(alg: &Algebra) -> Center {
    let columns: Vec<SparseVec> = alg.basis().iter().map(|m| commutators(alg, &alg.element(*m))).collect();
    let basis: Vec<AlgebraElement> = relations(alg.field(), columns)
        .iter()
        .map(|r| alg.from_vector(r))
        .collect();

    let mut ech = Echelon::with_tracking(alg.field());
    for z in &basis {
        ech.insert(alg.to_vector(z)).expect("relations are independent");
    }
    let structure = basis
        .iter()
        .map(|a| {
            basis
                .iter()
                .map(|b| {
                    let p = alg.multiply(a, b).expect("same algebra");
                    ech.express(&alg.to_vector(&p)).expect("center is a subalgebra")
                })
                .collect()
        })
        .collect();
    let presentation = verify_presentation(alg, &basis);
    Center {
        basis,
        structure,
        presentation,
    }
}

/// `X^a` and `Y^a` as elements of `A_T`.
pub fn presentation_power(alg: &Algebra, letter: Letter, a: u32) -> AlgebraElement {
    if a == 0 {
        alg.one()
    } else {
        alg.power_sum(letter, 4 * a)
    }
}

fn verify_presentation(alg: &Algebra, center: &[AlgebraElement]) -> CheckReport {
    let t = alg.t();
    let mut report = CheckReport::new(
        format!("center presentation T={t} over {}", alg.field()),
        "Z(A_T) ≅ K[X,Y]/(X^{T+1}, XY, Y^{T+1}) with X = Σ e_i x^4, Y = Σ e_i y^4",
    );
    let x = presentation_power(alg, Letter::X, 1);
    let y = presentation_power(alg, Letter::Y, 1);

    let mut span = Echelon::new(alg.field());
    for z in center {
        let _ = span.insert(alg.to_vector(z));
    }
    // monomials 1, X^a, Y^b: central, independent, spanning
    let mut named = vec![("1".to_string(), alg.one())];
    for a in 1..=t {
        named.push((format!("X^{a}"), presentation_power(alg, Letter::X, a)));
        named.push((format!("Y^{a}"), presentation_power(alg, Letter::Y, a)));
    }
    let mut independent = Echelon::new(alg.field());
    for (name, e) in &named {
        report.check(span.contains(&alg.to_vector(e)), || format!("{name} is not central"));
        report.check(independent.insert(alg.to_vector(e)).is_ok(), || {
            format!("{name} depends on the previous monomials")
        });
    }
    report.check(named.len() == center.len(), || {
        format!("{} monomials but dim Z = {}", named.len(), center.len())
    });

    // multiplication table against the presentation
    let mul = |a: &AlgebraElement, b: &AlgebraElement| alg.multiply(a, b).expect("same algebra");
    let mut xp = alg.one();
    let mut yp = alg.one();
    for a in 1..=t + 1 {
        xp = mul(&xp, &x);
        yp = mul(&yp, &y);
        let (want_x, want_y) = if a <= t {
            (
                presentation_power(alg, Letter::X, a),
                presentation_power(alg, Letter::Y, a),
            )
        } else {
            (alg.zero(), alg.zero())
        };
        report.check(xp == want_x, || format!("X^{a} computed as {xp}"));
        report.check(yp == want_y, || format!("Y^{a} computed as {yp}"));
    }
    for a in 1..=t {
        for b in 1..=t {
            let xa = presentation_power(alg, Letter::X, a);
            let yb = presentation_power(alg, Letter::Y, b);
            report.check(mul(&xa, &yb).is_zero(), || format!("X^{a} Y^{b} ≠ 0"));
            report.check(mul(&yb, &xa).is_zero(), || format!("Y^{b} X^{a} ≠ 0"));
        }
    }
    report
}
