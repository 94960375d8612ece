//! Sparse exact linear algebra: sparse vectors and an incremental row-echelon
//! basis supporting rank, membership, relation (kernel) extraction and
//! solving.
//!
//! Pivoting is deterministic: vectors are processed in insertion order and
//! each is reduced on its leading (smallest-index) entry.

use std::collections::HashMap;

use crate::scalar::{Field, Scalar};

/// A sparse vector: strictly increasing indices, no stored zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SparseVec {
    entries: Vec<(usize, Scalar)>,
}

impl SparseVec {
    pub fn new() -> Self {
        SparseVec::default()
    }

    pub fn unit(index: usize, field: Field) -> Self {
        SparseVec {
            entries: vec![(index, field.one())],
        }
    }

    /// Builds a vector from unordered `(index, value)` pairs, summing repeats.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (usize, Scalar)>) -> Self {
        let mut acc: std::collections::BTreeMap<usize, Scalar> = Default::default();
        for (i, v) in pairs {
            match acc.get_mut(&i) {
                Some(slot) => *slot += &v,
                None => {
                    acc.insert(i, v);
                }
            }
        }
        SparseVec {
            entries: acc.into_iter().filter(|(_, v)| !v.is_zero()).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn leading(&self) -> Option<&(usize, Scalar)> {
        self.entries.first()
    }

    pub fn get(&self, index: usize) -> Option<&Scalar> {
        self.entries
            .binary_search_by_key(&index, |(i, _)| *i)
            .ok()
            .map(|k| &self.entries[k].1)
    }

    pub fn iter(&self) -> impl Iterator<Item = &(usize, Scalar)> {
        self.entries.iter()
    }

    pub fn scale(&self, c: &Scalar) -> SparseVec {
        if c.is_zero() {
            return SparseVec::new();
        }
        SparseVec {
            entries: self.entries.iter().map(|(i, v)| (*i, v * c)).collect(),
        }
    }

    /// `self += c * other`.
    pub fn axpy(&mut self, c: &Scalar, other: &SparseVec) {
        if c.is_zero() || other.is_zero() {
            return;
        }
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let mut a = std::mem::take(&mut self.entries).into_iter().peekable();
        let mut b = other.entries.iter().peekable();
        loop {
            match (a.peek(), b.peek()) {
                (Some((ia, _)), Some((ib, _))) if ia < ib => out.push(a.next().unwrap()),
                (Some((ia, _)), Some((ib, _))) if ia > ib => {
                    let (i, v) = b.next().unwrap();
                    out.push((*i, c * v));
                }
                (Some(_), Some(_)) => {
                    let (i, mut v) = a.next().unwrap();
                    let (_, w) = b.next().unwrap();
                    v += &(c * w);
                    if !v.is_zero() {
                        out.push((i, v));
                    }
                }
                (Some(_), None) => out.push(a.next().unwrap()),
                (None, Some(_)) => {
                    let (i, v) = b.next().unwrap();
                    out.push((*i, c * v));
                }
                (None, None) => break,
            }
        }
        self.entries = out;
    }

    pub fn add(&self, other: &SparseVec, field: Field) -> SparseVec {
        let mut out = self.clone();
        out.axpy(&field.one(), other);
        out
    }

    pub fn sub(&self, other: &SparseVec, field: Field) -> SparseVec {
        let mut out = self.clone();
        out.axpy(&field.from_i64(-1), other);
        out
    }

    /// Dense view of length `dim`.
    pub fn to_dense(&self, dim: usize, field: Field) -> Vec<Scalar> {
        let mut out = vec![field.zero(); dim];
        for (i, v) in &self.entries {
            out[*i] = v.clone();
        }
        out
    }
}

impl FromIterator<(usize, Scalar)> for SparseVec {
    fn from_iter<I: IntoIterator<Item = (usize, Scalar)>>(iter: I) -> Self {
        SparseVec::from_pairs(iter)
    }
}

/// Incrementally built semi-echelon basis of a subspace.
///
/// Every stored row has leading coefficient 1 and a leading index distinct
/// from every other stored row. With tracking enabled, each row also
/// remembers which combination of the inserted vectors produced it, which
/// is what [`Echelon::express`] and the relations returned by
/// [`Echelon::insert`] are built from.
#[derive(Clone, Debug)]
pub struct Echelon {
    field: Field,
    rows: Vec<SparseVec>,
    combos: Vec<SparseVec>,
    pivot_row: HashMap<usize, usize>,
    tracking: bool,
    inserted: usize,
}

impl Echelon {
    pub fn new(field: Field) -> Self {
        Echelon {
            field,
            rows: Vec::new(),
            combos: Vec::new(),
            pivot_row: HashMap::new(),
            tracking: false,
            inserted: 0,
        }
    }

    pub fn with_tracking(field: Field) -> Self {
        Echelon {
            tracking: true,
            ..Echelon::new(field)
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn inserted(&self) -> usize {
        self.inserted
    }

    /// Reduces `v` until its leading index has no pivot (or it vanishes).
    /// Returns the remainder and the accumulated multiple of stored combos
    /// that was subtracted.
    fn reduce(&self, mut v: SparseVec, want_combo: bool) -> (SparseVec, SparseVec) {
        let mut used = SparseVec::new();
        while let Some((lead, coeff)) = v.leading().cloned() {
            let Some(&r) = self.pivot_row.get(&lead) else {
                break;
            };
            v.axpy(&-&coeff, &self.rows[r]);
            if want_combo {
                used.axpy(&coeff, &self.combos[r]);
            }
        }
        (v, used)
    }

    /// Inserts `v`. Returns `Ok(())` when it enlarged the span, and
    /// `Err(relation)` when it was dependent; with tracking the relation is
    /// a combination of inserted vectors that sums to zero (coefficient 1 on
    /// `v` itself), otherwise it is empty.
    pub fn insert(&mut self, v: SparseVec) -> Result<(), SparseVec> {
        let index = self.inserted;
        self.inserted += 1;
        let (rem, used) = self.reduce(v, self.tracking);
        let mut combo = if self.tracking {
            let mut c = SparseVec::unit(index, self.field);
            c.axpy(&self.field.from_i64(-1), &used);
            c
        } else {
            SparseVec::new()
        };
        match rem.leading().cloned() {
            None => Err(combo),
            Some((lead, coeff)) => {
                let inv = coeff.inv().expect("leading entry is nonzero");
                let row = rem.scale(&inv);
                if self.tracking {
                    combo = combo.scale(&inv);
                }
                self.pivot_row.insert(lead, self.rows.len());
                self.rows.push(row);
                self.combos.push(combo);
                Ok(())
            }
        }
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v.clone(), false).0.is_zero()
    }

    /// Coefficients `c` (indexed by insertion order) with `Σ c_k v_k = target`,
    /// or `None` if `target` is outside the span. Requires tracking.
    pub fn express(&self, target: &SparseVec) -> Option<SparseVec> {
        assert!(self.tracking, "express requires a tracking echelon");
        let (rem, used) = self.reduce(target.clone(), true);
        rem.is_zero().then_some(used)
    }
}

/// Rank of a list of vectors.
pub fn rank(field: Field, vectors: impl IntoIterator<Item = SparseVec>) -> usize {
    let mut ech = Echelon::new(field);
    for v in vectors {
        let _ = ech.insert(v);
    }
    ech.rank()
}

/// Basis of the relation space `{c : Σ c_k v_k = 0}`.
pub fn relations(field: Field, vectors: impl IntoIterator<Item = SparseVec>) -> Vec<SparseVec> {
    let mut ech = Echelon::with_tracking(field);
    let mut out = Vec::new();
    for v in vectors {
        if let Err(rel) = ech.insert(v) {
            out.push(rel);
        }
    }
    out
}

/// Linear combination `Σ c_k v_k`.
pub fn combine(coeffs: &SparseVec, vectors: &[SparseVec]) -> SparseVec {
    let mut out = SparseVec::new();
    for (k, c) in coeffs.iter() {
        out.axpy(c, &vectors[*k]);
    }
    out
}

/// A linear map stored by the images of the domain basis vectors.
#[derive(Clone, Debug)]
pub struct LinearMap {
    pub domain: usize,
    pub codomain: usize,
    pub columns: Vec<SparseVec>,
}

impl LinearMap {
    pub fn new(codomain: usize, columns: Vec<SparseVec>) -> Self {
        LinearMap {
            domain: columns.len(),
            codomain,
            columns,
        }
    }

    pub fn apply(&self, v: &SparseVec) -> SparseVec {
        combine(v, &self.columns)
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &LinearMap) -> LinearMap {
        LinearMap::new(self.codomain, inner.columns.iter().map(|c| self.apply(c)).collect())
    }

    pub fn rank(&self, field: Field) -> usize {
        rank(field, self.columns.iter().cloned())
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(SparseVec::is_zero)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn v(field: Field, dense: &[i64]) -> SparseVec {
        dense.iter().enumerate().map(|(i, x)| (i, field.from_i64(*x))).collect()
    }

    #[test]
    fn rank_of_small_matrix() {
        let q = Field::RATIONALS;
        let rows = vec![v(q, &[1, 2, 1]), v(q, &[2, 4, 0]), v(q, &[3, 6, 0])];
        assert_eq!(rank(q, rows.clone()), 2);
        let f2 = Field::new(2).unwrap();
        assert_eq!(
            rank(f2, vec![v(f2, &[1, 1, 0]), v(f2, &[1, 0, 1]), v(f2, &[0, 1, 1])]),
            2
        );
    }

    #[test]
    fn relations_span_kernel() {
        let q = Field::RATIONALS;
        let rows = vec![v(q, &[1, 2, 1]), v(q, &[2, 4, 0]), v(q, &[3, 6, 0]), v(q, &[0, 0, 5])];
        let rels = relations(q, rows.clone());
        assert_eq!(rels.len(), 2);
        for r in &rels {
            assert!(combine(r, &rows).is_zero());
        }
    }

    #[test]
    fn express_and_contains() {
        let f5 = Field::new(5).unwrap();
        let rows = vec![v(f5, &[1, 0, 2]), v(f5, &[0, 1, 3])];
        let mut ech = Echelon::with_tracking(f5);
        for r in rows.clone() {
            ech.insert(r).unwrap();
        }
        let target = v(f5, &[2, 3, 13]);
        let c = ech.express(&target).unwrap();
        assert_eq!(combine(&c, &rows), target);
        assert!(ech.contains(&target));
        assert!(!ech.contains(&v(f5, &[0, 0, 1])));
        assert!(ech.express(&v(f5, &[0, 0, 1])).is_none());
    }

    #[test]
    fn linear_map_composition() {
        let q = Field::RATIONALS;
        // d(e0) = e1, d(e1) = 0: d∘d = 0 and rank 1
        let d = LinearMap::new(2, vec![v(q, &[0, 1]), v(q, &[0, 0])]);
        assert!(d.compose(&d).is_zero());
        assert_eq!(d.rank(q), 1);
        assert_eq!(d.apply(&v(q, &[3, 5])), v(q, &[0, 3]));
    }

    proptest! {
        #[test]
        fn rank_nullity(entries in proptest::collection::vec(-3i64..4, 20)) {
            let q = Field::RATIONALS;
            let rows: Vec<SparseVec> = entries.chunks(4).map(|c| v(q, c)).collect();
            let r = rank(q, rows.clone());
            let rels = relations(q, rows.clone());
            prop_assert_eq!(r + rels.len(), rows.len());
            for rel in rels {
                prop_assert!(combine(&rel, &rows).is_zero());
            }
        }

        #[test]
        fn axpy_matches_dense(a in proptest::collection::vec(-3i64..4, 6), b in proptest::collection::vec(-3i64..4, 6), c in -3i64..4) {
            let f7 = Field::new(7).unwrap();
            let mut x = v(f7, &a);
            x.axpy(&f7.from_i64(c), &v(f7, &b));
            let dense: Vec<i64> = a.iter().zip(&b).map(|(p, q)| p + c * q).collect();
            prop_assert_eq!(x, v(f7, &dense));
        }
    }
}
