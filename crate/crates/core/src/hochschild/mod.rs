//! The cochain complex `Hom_{A^e}(Q•, A_T)`.
//!
//! A cochain of degree `n` is determined by its values on the generators
//! `a^n_{i,j}`, and the value at `a^n_{i,j}` lies in `e_i A e_{i+n}`. With
//! `t = n mod 4` that corner is spanned by the monomials `e_i x^{4l+t}` and
//! `e_i y^{4l+t}`, which is where the `β^{n,l}_{i,j}` and `γ^{n,l}_{i,j}`
//! come from. The coordinates of a cochain are taken with respect to the
//! canonical list of those maps.

pub mod bases;
pub mod formulas;
#[cfg(test)]
mod image_maps;

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::center::compute_center;
use crate::error::{Error, Result};
use crate::linalg::{relations, Echelon, LinearMap, SparseVec};
use crate::quiver::{Algebra, AlgebraElement, Monomial, Vertex};
use crate::report::CheckReport;
use crate::resolution::{differential, BimoduleMap, GeneratorIndex};
use crate::scalar::Field;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Kind {
    Beta,
    Gamma,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CochainBasisElement {
    pub kind: Kind,
    pub n: usize,
    pub l: u32,
    pub i: Vertex,
    pub j: usize,
}

impl CochainBasisElement {
    pub fn generator(&self) -> GeneratorIndex {
        GeneratorIndex::new(self.n, self.i, self.j)
    }

    /// The value at `a^n_{i,j}`: `e_i x^{4l+t}` or `e_i y^{4l+t}`.
    pub fn value(&self) -> Monomial {
        let e = 4 * self.l + (self.n % 4) as u32;
        match self.kind {
            Kind::Beta => Monomial::x(self.i, e),
            Kind::Gamma => Monomial::y(self.i, e),
        }
    }
}

impl fmt::Display for CochainBasisElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.kind {
            Kind::Beta => "β",
            Kind::Gamma => "γ",
        };
        write!(f, "{name}^{{{},{}}}_{{{},{}}}", self.n, self.l, self.i, self.j)
    }
}

/// Levels present for `(kind, n mod 4)`; the γ duplicates at `(t=0, l=0)`
/// and `(t=2, l=T)` are left out.
fn levels(t: u32, residue: usize, kind: Kind) -> std::ops::Range<u32> {
    match (residue, kind) {
        (0, Kind::Beta) | (1, _) | (2, Kind::Beta) => 0..t + 1,
        (0, Kind::Gamma) => 1..t + 1,
        _ => 0..t,
    }
}

/// The canonical basis of `Hom(Q^n, A_T)` in `(kind, l, i, j)` order.
pub fn cochain_basis(t: u32, n: usize) -> Vec<CochainBasisElement> {
    let mut out = Vec::new();
    for kind in [Kind::Beta, Kind::Gamma] {
        for l in levels(t, n % 4, kind) {
            for i in Vertex::all() {
                for j in 0..=n {
                    out.push(CochainBasisElement { kind, n, l, i, j });
                }
            }
        }
    }
    out
}

/// Coordinates for degree-`n` cochains over a fixed algebra.
#[derive(Clone, Debug)]
pub struct CochainSpace {
    alg: Algebra,
    n: usize,
    basis: Vec<CochainBasisElement>,
    index: HashMap<(GeneratorIndex, Monomial), usize>,
}

impl CochainSpace {
    pub fn new(alg: &Algebra, n: usize) -> Self {
        let basis = cochain_basis(alg.t(), n);
        let index = basis
            .iter()
            .enumerate()
            .map(|(k, b)| ((b.generator(), b.value()), k))
            .collect();
        CochainSpace {
            alg: alg.clone(),
            n,
            basis,
            index,
        }
    }

    pub fn algebra(&self) -> &Algebra {
        &self.alg
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[CochainBasisElement] {
        &self.basis
    }

    fn unit(&self, gen: GeneratorIndex, m: Monomial, sign: i64) -> SparseVec {
        let k = *self
            .index
            .get(&(gen, m))
            .unwrap_or_else(|| panic!("{m} at {gen} is not a basis value in degree {}", self.n));
        SparseVec::from_pairs([(k, self.alg.field().from_i64(sign))])
    }

    /// `β^{n,l}_{i,j}`, with `i` read mod 4.
    pub fn beta(&self, l: u32, i: i64, j: usize) -> SparseVec {
        let v = Vertex::new(i);
        let e = 4 * l + (self.n % 4) as u32;
        self.unit(GeneratorIndex::new(self.n, v, j), Monomial::x(v, e), 1)
    }

    /// `γ^{n,l}_{i,j}`, with `i` read mod 4. The degenerate cases are sent to
    /// their β representatives: `γ^{4k,0} = β^{4k,0}`, `γ^{4k+2,T} = −β^{4k+2,T}`.
    pub fn gamma(&self, l: u32, i: i64, j: usize) -> SparseVec {
        let v = Vertex::new(i);
        let e = 4 * l + (self.n % 4) as u32;
        let gen = GeneratorIndex::new(self.n, v, j);
        if e == 0 {
            self.unit(gen, Monomial::idempotent(v), 1)
        } else if e == 4 * self.alg.t() + 2 {
            self.unit(gen, Monomial::x(v, e), -1)
        } else {
            self.unit(gen, Monomial::y(v, e), 1)
        }
    }

    /// Coordinates of the cochain with the given value at one generator and
    /// zero elsewhere.
    pub fn coordinates_at(&self, gen: GeneratorIndex, value: &AlgebraElement) -> Result<SparseVec> {
        let mut pairs = Vec::with_capacity(value.len());
        for (m, c) in value.terms() {
            let k = self.index.get(&(gen, *m)).ok_or_else(|| {
                Error::Structural(format!(
                    "value {m} at {gen} lies outside e_{} A e_{}",
                    gen.origin(),
                    gen.terminus()
                ))
            })?;
            pairs.push((*k, c.clone()));
        }
        Ok(SparseVec::from_pairs(pairs))
    }

    pub fn from_values(&self, values: &BTreeMap<GeneratorIndex, AlgebraElement>) -> Result<SparseVec> {
        let mut out = SparseVec::new();
        let one = self.alg.field().one();
        for (g, v) in values {
            out.axpy(&one, &self.coordinates_at(*g, v)?);
        }
        Ok(out)
    }

    pub fn values(&self, coords: &SparseVec) -> BTreeMap<GeneratorIndex, AlgebraElement> {
        let mut out: BTreeMap<GeneratorIndex, AlgebraElement> = BTreeMap::new();
        for (k, c) in coords.iter() {
            let b = &self.basis[*k];
            out.entry(b.generator())
                .or_insert_with(|| self.alg.zero())
                .add_term(b.value(), c.clone());
        }
        out
    }

    pub fn describe(&self, coords: &SparseVec) -> String {
        if coords.is_zero() {
            return "0".into();
        }
        coords
            .iter()
            .map(|(k, c)| {
                if c.is_one() {
                    self.basis[*k].to_string()
                } else {
                    format!("({c}){}", self.basis[*k])
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// A cochain together with its degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cochain {
    pub degree: usize,
    pub coords: SparseVec,
}

/// `ψ ∘ F` for a bimodule map `F : Q^d → Q^k` and a cochain `ψ` of degree `k`,
/// given by values on generators.
pub fn precompose_values(
    alg: &Algebra,
    map: &BimoduleMap,
    psi: &BTreeMap<GeneratorIndex, AlgebraElement>,
) -> BTreeMap<GeneratorIndex, AlgebraElement> {
    let field = alg.field();
    let mut out: BTreeMap<GeneratorIndex, AlgebraElement> = BTreeMap::new();
    for ((src, tgt), e) in &map.entries {
        let Some(value) = psi.get(tgt) else { continue };
        for ((p, q), c) in e.terms() {
            for (m, d) in value.terms() {
                let Some((s1, pm)) = alg.mul_monomials(*p, *m) else {
                    continue;
                };
                let Some((s2, pmq)) = alg.mul_monomials(pm, *q) else {
                    continue;
                };
                out.entry(*src)
                    .or_insert_with(|| alg.zero())
                    .add_term(pmq, &(c * d) * &field.from_i64(s1 * s2));
            }
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

/// `Hom(∂^n, A_T)` as a map from degree `n−1` to degree `n` cochains, columns
/// indexed by the canonical degree-`(n−1)` basis.
#[derive(Clone, Debug)]
pub struct HomMatrix {
    pub n: usize,
    pub matrix: LinearMap,
}

pub fn hom_matrix(alg: &Algebra, n: usize) -> Result<HomMatrix> {
    if n == 0 {
        return Err(Error::InvalidArgument("Hom(∂^n) needs n ≥ 1".into()));
    }
    let source = CochainSpace::new(alg, n - 1);
    let target = CochainSpace::new(alg, n);
    let d = differential(alg.t(), n, alg.field());
    let columns = (0..source.dim())
        .map(|k| {
            let psi = source.values(&SparseVec::unit(k, alg.field()));
            target.from_values(&precompose_values(alg, &d, &psi))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(HomMatrix {
        n,
        matrix: LinearMap::new(target.dim(), columns),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CohomologyDims {
    pub n: usize,
    /// `dim C^n`.
    pub cochains: usize,
    /// `dim Ker Hom(∂^{n+1})`.
    pub ker: usize,
    /// `dim Im Hom(∂^n)`; zero for `n = 0`.
    pub im: usize,
    pub hh: usize,
}

/// Ranks of `Hom(∂^k)` for `1 ≤ k ≤ n_max + 1`, and the resulting dimensions
/// for `0 ≤ n ≤ n_max`.
pub fn cohomology_table(t: u32, n_max: usize, field: Field) -> Result<Vec<CohomologyDims>> {
    let alg = Algebra::new(t, field);
    let ranks: Vec<usize> = (1..=n_max + 1)
        .into_par_iter()
        .map(|k| hom_matrix(&alg, k).map(|h| h.matrix.rank(field)))
        .collect::<Result<_>>()?;
    Ok((0..=n_max)
        .map(|n| {
            let cochains = cochain_basis(t, n).len();
            let ker = cochains - ranks[n];
            let im = if n == 0 { 0 } else { ranks[n - 1] };
            CohomologyDims {
                n,
                cochains,
                ker,
                im,
                hh: ker - im,
            }
        })
        .collect())
}

pub fn cohomology_dimensions(t: u32, n: usize, field: Field) -> Result<CohomologyDims> {
    let alg = Algebra::new(t, field);
    let cochains = cochain_basis(t, n).len();
    let ker = cochains - hom_matrix(&alg, n + 1)?.matrix.rank(field);
    let im = if n == 0 {
        0
    } else {
        hom_matrix(&alg, n)?.matrix.rank(field)
    };
    Ok(CohomologyDims {
        n,
        cochains,
        ker,
        im,
        hh: ker - im,
    })
}

/// Basis of `Ker Hom(∂^{n+1})` in degree-`n` coordinates.
pub fn cocycle_basis(alg: &Algebra, n: usize) -> Result<Vec<SparseVec>> {
    let h = hom_matrix(alg, n + 1)?;
    Ok(relations(alg.field(), h.matrix.columns))
}

/// `HH^0 → Z(A_T)`, `φ ↦ Σ_i φ(a^0_{i,0})`: the images of a cocycle basis are
/// central and form a basis of the computed center.
pub fn verify_hh0_center(t: u32, field: Field) -> Result<CheckReport> {
    let alg = Algebra::new(t, field);
    let mut report = CheckReport::new(
        format!("HH^0 and the center T={t} over {field}"),
        "φ ↦ φ(Σ e_i ⊗ e_i) maps HH^0(A_T) isomorphically onto Z(A_T)",
    );
    let space = CochainSpace::new(&alg, 0);
    let center = compute_center(&alg);
    let mut center_span = Echelon::new(field);
    for z in &center.basis {
        let _ = center_span.insert(alg.to_vector(z));
    }
    let cocycles = cocycle_basis(&alg, 0)?;
    report.check(cocycles.len() == center.dimension(), || {
        format!("dim HH^0 = {} but dim Z = {}", cocycles.len(), center.dimension())
    });
    let mut images = Echelon::new(field);
    for c in &cocycles {
        let mut z = alg.zero();
        for v in space.values(c).values() {
            z.add_scaled(v, &field.one());
        }
        report.check(center_span.contains(&alg.to_vector(&z)), || {
            format!("{z} is not central")
        });
        report.check(images.insert(alg.to_vector(&z)).is_ok(), || {
            format!("image {z} depends on earlier images")
        });
    }
    Ok(report)
}
