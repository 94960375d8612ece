//! `HH^*(A_T)` from the bar complex reduced relative to the vertex subalgebra
//! `E = ⊕ K e_i`. Cochains are `E`-bimodule maps `r^{⊗_E n} → A_T`, so a basis
//! is given by pairs (chain of radical monomials `m_1 ⋯ m_n` matched at the
//! vertices, monomial of `e_{s(m_1)} A e_{t(m_n)}`). Shares nothing with the
//! resolution beyond monomial multiplication.

use std::collections::HashMap;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::linalg::{Echelon, SparseVec};
use crate::quiver::{Algebra, Monomial, Vertex};
use crate::scalar::{Field, Scalar};

/// Largest cochain space (columns of a differential) the oracle will build.
pub const COLUMN_BUDGET: usize = 10_000;

/// Degrees the oracle accepts: `n ≤ 4` for `T = 0`, `n ≤ 2` for `T = 1`.
pub fn in_budget(t: u32, n: usize) -> bool {
    matches!((t, n), (0, 0..=4) | (1, 0..=2))
}

type Chain = Vec<Monomial>;

#[derive(Clone, Debug)]
pub struct ReducedBarComplex {
    alg: Algebra,
    chains: Vec<Vec<Chain>>,
}

impl ReducedBarComplex {
    /// Builds the chains of length `0..=n_max`.
    pub fn new(alg: &Algebra, n_max: usize) -> Self {
        let radical: Vec<Monomial> = alg.radical_monomials().collect();
        let mut chains: Vec<Vec<Chain>> = vec![Vertex::all().map(|v| vec![Monomial::idempotent(v)]).collect()];
        for n in 1..=n_max {
            let next = chains[n - 1]
                .iter()
                .flat_map(|c| {
                    let end = c.last().expect("nonempty").end();
                    let base = if n == 1 { Vec::new() } else { c.clone() };
                    radical.iter().filter(move |m| m.vertex() == end).map(move |m| {
                        let mut d = base.clone();
                        d.push(*m);
                        d
                    })
                })
                .collect();
            chains.push(next);
        }
        ReducedBarComplex {
            alg: alg.clone(),
            chains,
        }
    }

    fn endpoints(chain: &Chain) -> (Vertex, Vertex) {
        (chain[0].vertex(), chain.last().expect("nonempty").end())
    }

    /// Basis of `C^n`: `(chain index, value monomial)`.
    pub fn cochain_basis(&self, n: usize) -> Vec<(usize, Monomial)> {
        self.chains[n]
            .iter()
            .enumerate()
            .flat_map(|(k, c)| {
                let (s, e) = Self::endpoints(c);
                self.alg.monomials_between(s, e).into_iter().map(move |m| (k, m))
            })
            .collect()
    }

    pub fn cochain_dim(&self, n: usize) -> usize {
        self.cochain_basis(n).len()
    }

    /// Matrix of `δ : C^n → C^{n+1}`, one column per basis element of `C^n`.
    pub fn differential_columns(&self, n: usize) -> Vec<SparseVec> {
        let alg = &self.alg;
        let field = alg.field();
        let source = self.cochain_basis(n);
        let source_index: HashMap<(usize, Monomial), usize> = source.iter().enumerate().map(|(k, b)| (*b, k)).collect();
        let chain_index: HashMap<&Chain, usize> = self.chains[n].iter().enumerate().map(|(k, c)| (c, k)).collect();
        let target_index: HashMap<(usize, Monomial), usize> = self
            .cochain_basis(n + 1)
            .into_iter()
            .enumerate()
            .map(|(k, b)| (b, k))
            .collect();

        // entries (column, row, coefficient)
        let entries: Vec<(usize, usize, Scalar)> = self.chains[n + 1]
            .par_iter()
            .enumerate()
            .flat_map_iter(|(a_idx, a)| {
                let mut out = Vec::new();
                let (s, e) = Self::endpoints(a);
                let mut emit = |sub: &Chain, sign: i64, left: Option<Monomial>, right: Option<Monomial>| {
                    let c = chain_index[sub];
                    let (cs, ce) = Self::endpoints(sub);
                    for m in alg.monomials_between(cs, ce) {
                        let mut value = (sign, m);
                        if let Some(l) = left {
                            match alg.mul_monomials(l, value.1) {
                                Some((s1, v)) => value = (value.0 * s1, v),
                                None => continue,
                            }
                        }
                        if let Some(r) = right {
                            match alg.mul_monomials(value.1, r) {
                                Some((s1, v)) => value = (value.0 * s1, v),
                                None => continue,
                            }
                        }
                        debug_assert_eq!((value.1.vertex(), value.1.end()), (s, e));
                        out.push((
                            source_index[&(c, m)],
                            target_index[&(a_idx, value.1)],
                            field.from_i64(value.0),
                        ));
                    }
                };
                let len = a.len();
                // a_1 f(a_2 … a_{n+1})
                let tail = if n == 0 {
                    vec![Monomial::idempotent(a[0].end())]
                } else {
                    a[1..].to_vec()
                };
                emit(&tail, 1, Some(a[0]), None);
                // Σ (−1)^k f(… a_k a_{k+1} …)
                for k in 1..len {
                    if let Some((s1, b)) = alg.mul_monomials(a[k - 1], a[k]) {
                        let mut sub = a[..k - 1].to_vec();
                        sub.push(b);
                        sub.extend_from_slice(&a[k + 1..]);
                        emit(&sub, if k % 2 == 0 { s1 } else { -s1 }, None, None);
                    }
                }
                // (−1)^{n+1} f(a_1 … a_n) a_{n+1}
                let head = if n == 0 {
                    vec![Monomial::idempotent(a[0].vertex())]
                } else {
                    a[..len - 1].to_vec()
                };
                let sign = if (n + 1).is_multiple_of(2) { 1 } else { -1 };
                emit(&head, sign, None, Some(a[len - 1]));
                out
            })
            .collect();

        let mut columns: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); source.len()];
        for (col, row, c) in entries {
            columns[col].push((row, c));
        }
        columns.into_iter().map(SparseVec::from_pairs).collect()
    }

    pub fn differential_rank(&self, n: usize) -> usize {
        let mut ech = Echelon::new(self.alg.field());
        for c in self.differential_columns(n) {
            let _ = ech.insert(c);
        }
        ech.rank()
    }
}

/// `dim C^n` from the vertex-graded dimensions of `r` and `A_T` alone.
pub fn cochain_dimension_count(t: u32, n: usize) -> usize {
    // dim e_i r e_{i+d}: exponents 1..=4T+2 of x and 1..=4T+1 of y, by residue d
    let mut rad = [0usize; 4];
    for k in 1..=4 * t as usize + 2 {
        rad[k % 4] += 1;
    }
    for k in 1..=4 * t as usize + 1 {
        rad[k % 4] += 1;
    }
    let mut corner = rad;
    corner[0] += 1;
    // paths[d]: number of chains of length n from a vertex with total shift d
    let mut paths = [0usize; 4];
    paths[0] = 1;
    for _ in 0..n {
        let mut next = [0usize; 4];
        for (d, p) in paths.iter().enumerate() {
            for (s, r) in rad.iter().enumerate() {
                next[(d + s) % 4] += p * r;
            }
        }
        paths = next;
    }
    4 * (0..4).map(|d| paths[d] * corner[d]).sum::<usize>()
}

/// `dim HH^n(A_T)` from the reduced bar complex.
pub fn bar_hh_dimension(t: u32, n: usize, field: Field) -> Result<usize> {
    if !in_budget(t, n) {
        return Err(Error::OutOfBudget {
            t,
            n,
            reason: "reduced bar oracle covers n ≤ 4 for T = 0 and n ≤ 2 for T = 1".into(),
        });
    }
    let columns = cochain_dimension_count(t, n);
    if columns > COLUMN_BUDGET {
        return Err(Error::OutOfBudget {
            t,
            n,
            reason: format!("{columns} columns exceed the budget of {COLUMN_BUDGET}"),
        });
    }
    let alg = Algebra::new(t, field);
    let complex = ReducedBarComplex::new(&alg, n + 1);
    let below = if n == 0 { 0 } else { complex.differential_rank(n - 1) };
    let here = complex.differential_rank(n);
    Ok(complex.cochain_dim(n) - here - below)
}
