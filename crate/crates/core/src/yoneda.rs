//! Yoneda products on `HH^*(A_T)` through liftings along the resolution:
//! the explicit maps `σ^k_j` for `T = 0`, a generic lifting solver, and the
//! checks of the presentation of `HH^{4*}(A_0)`.

use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::hochschild::{bases::hh_basis, hom_matrix, precompose_values, Cochain, CochainSpace};
use crate::linalg::{Echelon, SparseVec};
use crate::quiver::{Algebra, Monomial, Vertex};
use crate::report::CheckReport;
use crate::resolution::{differential, BimoduleMap, GeneratorIndex};
use crate::scalar::{Field, Scalar};

/// `σ^k_j : Q^{k+4} → Q^k`, `a^{k+4}_{r,s} ↦ a^k_{r,s−j}` when `0 ≤ s − j ≤ k`.
pub fn sigma_lifting(j: usize, k: usize, field: Field) -> BimoduleMap {
    let mut map = BimoduleMap::zero(k + 4, k);
    for src in GeneratorIndex::all(k + 4) {
        if src.j >= j && src.j - j <= k {
            let tgt = GeneratorIndex::new(k, src.i, src.j - j);
            map.add_term(
                src,
                tgt,
                Monomial::idempotent(src.origin()),
                Monomial::idempotent(src.terminus()),
                field.one(),
            );
        }
    }
    map
}

/// `z_j = Σ_i β^{4,0}_{i,j}` as a degree-4 cochain of `A_0`.
pub fn z_generator(alg: &Algebra, j: usize) -> Cochain {
    let space = CochainSpace::new(alg, 4);
    let mut coords = SparseVec::new();
    for i in 0..4 {
        coords = coords.add(&space.beta(0, i, j), alg.field());
    }
    Cochain { degree: 4, coords }
}

/// Checks `z_j = μ ∘ σ^0_j` and `σ^l_j ∘ ∂^{l+5} = ∂^{l+1} ∘ σ^{l+1}_j` for
/// `0 ≤ j ≤ 4`, `l ≤ cap`.
pub fn verify_sigma_liftings(cap: usize, field: Field) -> Result<CheckReport> {
    let alg = Algebra::new(0, field);
    let mut report = CheckReport::new(
        format!("σ liftings l ≤ {cap} over {field}"),
        "σ^l_j ∂^{l+5} = ∂^{l+1} σ^{l+1}_j and z_j = σ^0_j ∂^0",
    );
    let space = CochainSpace::new(&alg, 4);
    for j in 0..=4 {
        let values = sigma_lifting(j, 0, field).multiply_out(&alg)?;
        let z = z_generator(&alg, j);
        report.check(space.from_values(&values)? == z.coords, || {
            format!("σ^0_{j} does not reproduce z_{j}")
        });
    }
    let results: Vec<(usize, usize, bool, bool)> = (0..=4usize)
        .flat_map(|j| (0..=cap).map(move |l| (j, l)))
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|(j, l)| {
            let lhs = sigma_lifting(j, l, field).compose(&differential(0, l + 5, field), &alg)?;
            let upper = sigma_lifting(j, l + 1, field);
            let rhs = differential(0, l + 1, field).compose(&upper, &alg)?;
            Ok((j, l, lhs.entries == rhs.entries, upper.is_vertex_compatible()))
        })
        .collect::<Result<_>>()?;
    for (j, l, ok, compatible) in results {
        report.check(ok, || format!("lifting identity fails for j={j}, l={l}"));
        report.check(compatible, || format!("σ^{}_{j} is not vertex compatible", l + 1));
    }
    Ok(report)
}

/// A chain of maps `f_k : Q^{d+k} → Q^k` lifting a degree-`d` cocycle.
#[derive(Clone, Debug)]
pub struct LiftingChain {
    pub degree: usize,
    pub maps: Vec<BimoduleMap>,
}

impl LiftingChain {
    pub fn steps(&self) -> usize {
        self.maps.len() - 1
    }

    /// Checks `μ ∘ f_0 = c` and `∂^{k+1} f_{k+1} = f_k ∂^{d+k+1}`.
    pub fn verify(&self, alg: &Algebra, cocycle: &Cochain) -> Result<bool> {
        let space = CochainSpace::new(alg, self.degree);
        if space.from_values(&self.maps[0].multiply_out(alg)?)? != cocycle.coords {
            return Ok(false);
        }
        for k in 0..self.steps() {
            let lhs = differential(alg.t(), k + 1, alg.field()).compose(&self.maps[k + 1], alg)?;
            let d = differential(alg.t(), self.degree + k + 1, alg.field());
            let rhs = self.maps[k].compose(&d, alg)?;
            if lhs.entries != rhs.entries {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

type Slot = (GeneratorIndex, Monomial, Monomial);

/// Coordinates of elements of `e_o Q^n e_t` keyed by `(generator, left, right)`.
#[derive(Default)]
struct SlotIndex {
    index: HashMap<Slot, usize>,
}

impl SlotIndex {
    fn vector(&mut self, terms: impl IntoIterator<Item = (Slot, Scalar)>, field: Field) -> SparseVec {
        let mut v = SparseVec::new();
        for (slot, c) in terms {
            let next = self.index.len();
            let k = *self.index.entry(slot).or_insert(next);
            v.axpy(&c, &SparseVec::unit(k, field));
        }
        v
    }
}

/// Lifts a degree-`d` cocycle through `steps` degrees of the resolution.
/// Each step solves, generator by generator, `∂^{k+1}(f_{k+1}(g)) = f_k(∂(g))`.
pub fn lift_cocycle(alg: &Algebra, cocycle: &Cochain, steps: usize) -> Result<LiftingChain> {
    let t = alg.t();
    let field = alg.field();
    let d = cocycle.degree;
    let space = CochainSpace::new(alg, d);
    let mut f0 = BimoduleMap::zero(d, 0);
    for (g, value) in space.values(&cocycle.coords) {
        let tgt = GeneratorIndex::new(0, g.origin(), 0);
        for (m, c) in value.terms() {
            f0.add_term(g, tgt, Monomial::idempotent(g.origin()), *m, c.clone());
        }
    }
    let mut maps = vec![f0];
    for k in 0..steps {
        let lower = differential(t, k + 1, field);
        let along = differential(t, d + k + 1, field);
        let rhs = maps[k].compose(&along, alg)?;
        let solved: Vec<BimoduleMap> = GeneratorIndex::all(d + k + 1)
            .collect::<Vec<_>>()
            .into_par_iter()
            .map(|g| solve_at(alg, &lower, &rhs, g, d, k))
            .collect::<Result<_>>()?;
        let mut next = BimoduleMap::zero(d + k + 1, k + 1);
        for part in solved {
            next.entries.extend(part.entries);
        }
        maps.push(next);
    }
    Ok(LiftingChain { degree: d, maps })
}

fn solve_at(
    alg: &Algebra,
    lower: &BimoduleMap,
    rhs: &BimoduleMap,
    g: GeneratorIndex,
    d: usize,
    k: usize,
) -> Result<BimoduleMap> {
    let field = alg.field();
    let mut slots = SlotIndex::default();
    let target: SparseVec = slots.vector(
        rhs.image_of(g)
            .flat_map(|(h, e)| e.terms().map(move |((p, q), c)| ((*h, *p, *q), c.clone()))),
        field,
    );
    let mut unknowns: Vec<Slot> = Vec::new();
    let mut ech = Echelon::with_tracking(field);
    for h in GeneratorIndex::all(k + 1) {
        for p in alg.monomials_between(g.origin(), h.origin()) {
            for q in alg.monomials_between(h.terminus(), g.terminus()) {
                let mut image = Vec::new();
                for (h2, e) in lower.image_of(h) {
                    for ((p2, q2), c) in e.terms() {
                        let Some((s1, left)) = alg.mul_monomials(p, *p2) else {
                            continue;
                        };
                        let Some((s2, right)) = alg.mul_monomials(*q2, q) else {
                            continue;
                        };
                        image.push(((*h2, left, right), c * &field.from_i64(s1 * s2)));
                    }
                }
                let v = slots.vector(image, field);
                let _ = ech.insert(v);
                unknowns.push((h, p, q));
            }
        }
    }
    let coeffs = ech.express(&target).ok_or(Error::NoLift {
        degree: d,
        step: k + 1,
        generator: g.to_string(),
    })?;
    let mut out = BimoduleMap::zero(d + k + 1, k + 1);
    for (u, c) in coeffs.iter() {
        let (h, p, q) = unknowns[*u];
        out.add_term(g, h, p, q, c.clone());
    }
    Ok(out)
}

/// `c1 × c2 = c1 ∘ f_m`, where `f` lifts `c2` and `m = deg c1`.
pub fn yoneda_product(alg: &Algebra, c1: &Cochain, chain: &LiftingChain) -> Result<Cochain> {
    let m = c1.degree;
    let f = chain
        .maps
        .get(m)
        .ok_or_else(|| Error::InvalidArgument(format!("lifting has {} steps, product needs {m}", chain.steps())))?;
    let values = CochainSpace::new(alg, m).values(&c1.coords);
    let degree = m + chain.degree;
    let coords = CochainSpace::new(alg, degree).from_values(&precompose_values(alg, f, &values))?;
    Ok(Cochain { degree, coords })
}

/// Product of a cochain with `z_j` on the right, through `σ`.
pub fn times_z_sigma(alg: &Algebra, c: &Cochain, j: usize) -> Result<Cochain> {
    let sigma = sigma_lifting(j, c.degree, alg.field());
    let values = CochainSpace::new(alg, c.degree).values(&c.coords);
    let degree = c.degree + 4;
    let coords = CochainSpace::new(alg, degree).from_values(&precompose_values(alg, &sigma, &values))?;
    Ok(Cochain { degree, coords })
}

/// The cochain `a^{4w}_{r,s} ↦ e_r` for `s = total`, zero elsewhere.
pub fn diagonal_cochain(alg: &Algebra, w: usize, total: usize) -> Cochain {
    let space = CochainSpace::new(alg, 4 * w);
    let mut coords = SparseVec::new();
    for i in 0..4 {
        coords = coords.add(&space.beta(0, i, total), alg.field());
    }
    Cochain { degree: 4 * w, coords }
}

/// The six quadratic relations, as index quadruples for `z_a z_b − z_c z_d`.
pub const RELATIONS: [[usize; 4]; 6] = [
    [0, 2, 1, 1],
    [0, 3, 1, 2],
    [0, 4, 2, 2],
    [0, 4, 1, 3],
    [1, 4, 2, 3],
    [2, 4, 3, 3],
];

/// `dim` of the degree-`w` part of `K[z_0, …, z_4] / (RELATIONS)`.
pub fn presentation_hilbert_function(w: usize) -> usize {
    let field = Field::RATIONALS;
    let monomials = exponent_vectors(w);
    let index: HashMap<[usize; 5], usize> = monomials.iter().enumerate().map(|(k, e)| (*e, k)).collect();
    let mut ech = Echelon::new(field);
    if w >= 2 {
        for cof in exponent_vectors(w - 2) {
            for [a, b, c, d] in RELATIONS {
                let mut plus = cof;
                plus[a] += 1;
                plus[b] += 1;
                let mut minus = cof;
                minus[c] += 1;
                minus[d] += 1;
                let v = SparseVec::unit(index[&plus], field).sub(&SparseVec::unit(index[&minus], field), field);
                let _ = ech.insert(v);
            }
        }
    }
    monomials.len() - ech.rank()
}

fn exponent_vectors(w: usize) -> Vec<[usize; 5]> {
    let mut out = Vec::new();
    let mut e = [0usize; 5];
    fn fill(pos: usize, left: usize, e: &mut [usize; 5], out: &mut Vec<[usize; 5]>) {
        if pos == 4 {
            e[4] = left;
            out.push(*e);
            return;
        }
        for a in 0..=left {
            e[pos] = a;
            fill(pos + 1, left - a, e, out);
        }
    }
    fill(0, w, &mut e, &mut out);
    out
}

/// All words `z_{i_1} ⋯ z_{i_w}` of length `w` over `0..=4`.
fn words(w: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..w {
        out = out
            .into_iter()
            .flat_map(|word| {
                (0..=4).map(move |i| {
                    let mut next = word.clone();
                    next.push(i);
                    next
                })
            })
            .collect();
    }
    out
}

/// The product formula, the six relations, the count of distinct products
/// against `dim HH^{4w}(A_0) = 4w + 1`, non-vanishing of every product, the
/// Hilbert function of the presentation, and agreement of the `σ` route with
/// the generic solver (including associativity and commutativity samples).
pub fn verify_ring_presentation(w_max: usize, field: Field) -> Result<CheckReport> {
    let alg = Algebra::new(0, field);
    let mut report = CheckReport::new(
        format!("HH^{{4*}}(A_0) presentation w ≤ {w_max} over {field}"),
        "HH^{4*}(A_0) ≅ K[z_0,…,z_4]/(six binomials), z_{i_1}⋯z_{i_w} ↦ (a^{4w}_{r,s} ↦ e_r iff s = Σ i_p)",
    );
    let z: Vec<Cochain> = (0..=4).map(|j| z_generator(&alg, j)).collect();

    // σ route, every word up to length w_max
    let mut products: BTreeMap<Vec<usize>, Cochain> = z.iter().enumerate().map(|(j, c)| (vec![j], c.clone())).collect();
    for w in 2..=w_max {
        let previous: Vec<(Vec<usize>, Cochain)> = products
            .iter()
            .filter(|(k, _)| k.len() == w - 1)
            .map(|(k, v)| (k.clone(), v.clone()))
            .collect();
        let next: Vec<(Vec<usize>, Cochain)> = previous
            .par_iter()
            .flat_map(|(word, c)| {
                (0..=4)
                    .map(|j| {
                        let mut key = word.clone();
                        key.push(j);
                        times_z_sigma(&alg, c, j).map(|p| (key, p))
                    })
                    .collect::<Vec<_>>()
            })
            .collect::<Result<_>>()?;
        products.extend(next);
    }

    for w in 1..=w_max {
        let hh = crate::hochschild::cohomology_dimensions(0, 4 * w, field)?.hh;
        let mut distinct: Vec<&SparseVec> = Vec::new();
        let mut span = Echelon::new(field);
        for word in words(w) {
            let p = &products[&word];
            let total: usize = word.iter().sum();
            report.check(p.coords == diagonal_cochain(&alg, w, total).coords, || {
                format!("product {word:?} differs from the formula with s = {total}")
            });
            report.check(!p.coords.is_zero(), || format!("product {word:?} vanishes"));
            if !distinct.contains(&&p.coords) {
                distinct.push(&p.coords);
                let _ = span.insert(p.coords.clone());
            }
        }
        report.check(distinct.len() == 4 * w + 1, || {
            format!("{} distinct products in degree {}", distinct.len(), 4 * w)
        });
        report.check(span.rank() == hh, || {
            format!("products span {} of dim HH^{} = {hh}", span.rank(), 4 * w)
        });
        let hilbert = presentation_hilbert_function(w);
        report.check(hilbert == hh, || {
            format!(
                "presentation has dimension {hilbert} in degree {w}, HH^{} has {hh}",
                4 * w
            )
        });
        // equal exactly when the index sums agree
        for a in words(w) {
            for b in words(w) {
                let same = a.iter().sum::<usize>() == b.iter().sum::<usize>();
                if a < b {
                    report.check((products[&a].coords == products[&b].coords) == same, || {
                        format!("products {a:?}, {b:?}: equality should be {same}")
                    });
                }
            }
        }
    }
    if w_max >= 2 {
        for [a, b, c, d] in RELATIONS {
            let lhs = &products[&vec![a, b]].coords;
            let rhs = &products[&vec![c, d]].coords;
            report.check(lhs.sub(rhs, field).is_zero(), || {
                format!("z_{a} z_{b} − z_{c} z_{d} ≠ 0")
            });
        }
    }
    for w in 1..=w_max {
        let zero_power = &products[&vec![0; w]];
        report.check(!zero_power.coords.is_zero(), || format!("z_0^{w} = 0"));
    }

    // solver route
    let chains: Vec<LiftingChain> = (0..=4).map(|j| lift_cocycle(&alg, &z[j], 8)).collect::<Result<_>>()?;
    for (j, (chain, zj)) in chains.iter().zip(&z).enumerate() {
        report.check(chain.verify(&alg, zj)?, || {
            format!("solver lifting of z_{j} is not a chain map")
        });
    }
    for u in 0..=4 {
        for v in 0..=4 {
            let p = yoneda_product(&alg, &z[v], &chains[u])?;
            report.check(p.coords == products[&vec![v, u]].coords, || {
                format!("z_{v} × z_{u}: solver and σ routes differ")
            });
            let q = yoneda_product(&alg, &z[u], &chains[v])?;
            report.check(p.coords == q.coords, || format!("z_{v} × z_{u} ≠ z_{u} × z_{v}"));
        }
    }
    if w_max >= 3 {
        for (a, b, c) in [(0, 1, 2), (4, 3, 1), (2, 2, 2), (0, 4, 3)] {
            // (z_a z_b) z_c against z_a (z_b z_c)
            let ab = yoneda_product(&alg, &z[a], &chains[b])?;
            let left = yoneda_product(&alg, &ab, &chains[c])?;
            let bc = yoneda_product(&alg, &z[b], &chains[c])?;
            let bc_chain = lift_cocycle(&alg, &bc, 4)?;
            let right = yoneda_product(&alg, &z[a], &bc_chain)?;
            report.check(left.coords == right.coords, || {
                format!("associativity fails for ({a}, {b}, {c})")
            });
            report.check(left.coords == products[&vec![a, b, c]].coords, || {
                format!("solver triple product ({a}, {b}, {c}) differs from the σ route")
            });
        }
    }
    Ok(report)
}

/// Representative of the unit of `HH^0`: `a^0_{i,0} ↦ e_i`.
pub fn unit_cochain(alg: &Algebra) -> Cochain {
    let space = CochainSpace::new(alg, 0);
    let mut coords = SparseVec::new();
    for i in Vertex::all() {
        coords = coords.add(&space.beta(0, i.index() as i64, 0), alg.field());
    }
    Cochain { degree: 0, coords }
}

fn is_coboundary(alg: &Algebra, c: &Cochain) -> Result<bool> {
    if c.degree == 0 {
        return Ok(c.coords.is_zero());
    }
    let mut span = Echelon::new(alg.field());
    for col in hom_matrix(alg, c.degree)?.matrix.columns {
        let _ = span.insert(col);
    }
    Ok(span.contains(&c.coords))
}

/// Squares of the `HH^1` and `HH^2` basis classes of `A_0` are coboundaries;
/// the unit is not; graded commutativity on those classes; the unit acts as
/// the identity on them.
pub fn verify_nilpotent_part(field: Field) -> Result<CheckReport> {
    let alg = Algebra::new(0, field);
    let mut report = CheckReport::new(
        format!("nilpotent classes of HH^*(A_0) over {field}"),
        "classes of HH^1(A_0) and HH^2(A_0) square to zero in cohomology",
    );
    let divides = crate::scalar::divides_two_t_plus_one(field, 0);
    let mut classes: Vec<(String, Cochain)> = Vec::new();
    for d in [1usize, 2] {
        for e in hh_basis(&CochainSpace::new(&alg, d), divides) {
            classes.push((
                e.name,
                Cochain {
                    degree: d,
                    coords: e.coords,
                },
            ));
        }
    }
    let chains: Vec<LiftingChain> = classes
        .par_iter()
        .map(|(_, c)| lift_cocycle(&alg, c, 2))
        .collect::<Result<_>>()?;
    let unit = unit_cochain(&alg);
    let unit_chain = lift_cocycle(&alg, &unit, 2)?;
    for ((name, c), chain) in classes.iter().zip(&chains) {
        report.check(chain.verify(&alg, c)?, || {
            format!("lifting of {name} is not a chain map")
        });
        let square = yoneda_product(&alg, c, chain)?;
        report.check(is_coboundary(&alg, &square)?, || {
            format!("({name})² is not a coboundary")
        });
        let by_unit = yoneda_product(&alg, c, &unit_chain)?;
        let diff = Cochain {
            degree: c.degree,
            coords: by_unit.coords.sub(&c.coords, field),
        };
        report.check(is_coboundary(&alg, &diff)?, || format!("({name}) × 1 ≠ {name}"));
    }
    for (a, (na, ca)) in classes.iter().enumerate() {
        for (b, (nb, cb)) in classes.iter().enumerate() {
            if a >= b {
                continue;
            }
            let ab = yoneda_product(&alg, ca, &chains[b])?;
            let ba = yoneda_product(&alg, cb, &chains[a])?;
            let sign = if ca.degree * cb.degree % 2 == 0 { 1 } else { -1 };
            let diff = Cochain {
                degree: ab.degree,
                coords: ab.coords.sub(&ba.coords.scale(&field.from_i64(sign)), field),
            };
            report.check(is_coboundary(&alg, &diff)?, || {
                format!("{na} × {nb} and {nb} × {na} are not graded-commuting")
            });
        }
    }
    let square = yoneda_product(&alg, &unit, &unit_chain)?;
    report.check(!is_coboundary(&alg, &square)?, || {
        "the unit squares to a coboundary".into()
    });
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sigma_examples() {
        let q = Field::RATIONALS;
        let s = sigma_lifting(0, 0, q);
        assert_eq!(s.entries.len(), 4);
        assert!(s
            .terms()
            .all(|(src, tgt, ..)| src.j == 0 && tgt == GeneratorIndex::new(0, src.i, 0)));
        let s = sigma_lifting(4, 0, q);
        assert!(s.terms().all(|(src, ..)| src.j == 4));
        let s = sigma_lifting(2, 1, q);
        assert_eq!(s.entries.len(), 8);
        assert!(s
            .terms()
            .all(|(src, tgt, ..)| (2..=3).contains(&src.j) && tgt.j == src.j - 2));
    }

    #[test]
    fn sigma_liftings_hold() {
        for p in [0u64, 3] {
            let r = verify_sigma_liftings(5, Field::new(p).unwrap()).unwrap();
            assert!(r.passed(), "{:?}", r.failures);
        }
    }

    #[test]
    fn degree_two_lifting_exists() {
        let alg = Algebra::new(0, Field::RATIONALS);
        let space = CochainSpace::new(&alg, 2);
        let c = Cochain {
            degree: 2,
            coords: space.beta(0, 0, 0),
        };
        let chain = lift_cocycle(&alg, &c, 4).unwrap();
        assert!(chain.verify(&alg, &c).unwrap());
    }

    #[test]
    fn non_cocycle_has_no_lift() {
        let alg = Algebra::new(0, Field::RATIONALS);
        let space = CochainSpace::new(&alg, 1);
        // a single β^{1,0} is not in the kernel of Hom(∂^2)
        let c = Cochain {
            degree: 1,
            coords: space.beta(0, 0, 0),
        };
        assert!(matches!(lift_cocycle(&alg, &c, 2), Err(Error::NoLift { .. })));
    }

    #[test]
    fn hilbert_function_of_presentation() {
        for w in 0..6 {
            assert_eq!(presentation_hilbert_function(w), 4 * w + 1);
        }
    }

    #[test]
    fn unit_law() {
        let alg = Algebra::new(1, Field::RATIONALS);
        let unit = unit_cochain(&alg);
        let chain = lift_cocycle(&alg, &unit, 3).unwrap();
        assert!(chain.verify(&alg, &unit).unwrap());
        for c in crate::hochschild::cocycle_basis(&alg, 3).unwrap() {
            let c = Cochain { degree: 3, coords: c };
            let p = yoneda_product(&alg, &c, &chain).unwrap();
            let diff = Cochain {
                degree: 3,
                coords: p.coords.sub(&c.coords, alg.field()),
            };
            assert!(is_coboundary(&alg, &diff).unwrap());
        }
    }

    #[test]
    fn ring_presentation_small() {
        let r = verify_ring_presentation(3, Field::RATIONALS).unwrap();
        assert!(r.passed(), "{:?}", r.failures);
    }

    #[test]
    fn nilpotent_part() {
        for p in [0u64, 3] {
            let r = verify_nilpotent_part(Field::new(p).unwrap()).unwrap();
            assert!(r.passed(), "{:?}", r.failures);
        }
    }
}
