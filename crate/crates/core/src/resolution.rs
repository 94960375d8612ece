//! The projective bimodule complex `(Q•, ∂)`. `Q^n` is free on the
//! generators `a^n_{i,j} = e_i ⊗ e_{i+n}`, and a bimodule map is stored as the
//! image of each generator: a sum of terms `p · a_{tgt} · q` with monomials
//! `p`, `q`.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::gsz::{extract_right_differential, generator_position, parity_arrows, RightDifferential};
use crate::quiver::{Algebra, AlgebraElement, Arrow, Monomial, Vertex, VERTEX_COUNT};
use crate::report::CheckReport;
use crate::scalar::{Field, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct GeneratorIndex {
    pub n: usize,
    pub i: Vertex,
    pub j: usize,
}

impl GeneratorIndex {
    pub fn new(n: usize, i: Vertex, j: usize) -> Self {
        assert!(j <= n, "a^{n}_{{{i},{j}}} does not exist");
        GeneratorIndex { n, i, j }
    }

    pub fn position(self) -> usize {
        generator_position(self.n, self.i, self.j)
    }

    /// Left idempotent `e_i`.
    pub fn origin(self) -> Vertex {
        self.i
    }

    /// Right idempotent `e_{i+n}`.
    pub fn terminus(self) -> Vertex {
        self.i.shift(self.n as i64)
    }

    /// All generators of `Q^n` in position order.
    pub fn all(n: usize) -> impl Iterator<Item = GeneratorIndex> {
        Vertex::all().flat_map(move |i| (0..=n).map(move |j| GeneratorIndex { n, i, j }))
    }
}

impl fmt::Display for GeneratorIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a^{}_{{{},{}}}", self.n, self.i, self.j)
    }
}

/// A sum of pure tensors `p ⊗ q` of monomials.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TensorElement {
    terms: BTreeMap<(Monomial, Monomial), Scalar>,
}

impl TensorElement {
    pub fn add_term(&mut self, left: Monomial, right: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&(left, right)) {
            Some(slot) => {
                *slot += &c;
                if slot.is_zero() {
                    self.terms.remove(&(left, right));
                }
            }
            None => {
                self.terms.insert((left, right), c);
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Monomial, Monomial), &Scalar)> {
        self.terms.iter()
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
}

/// A bimodule map `Q^m → Q^n` given on generators.
#[derive(Clone, Debug)]
pub struct BimoduleMap {
    pub source_degree: usize,
    pub target_degree: usize,
    pub entries: BTreeMap<(GeneratorIndex, GeneratorIndex), TensorElement>,
}

impl BimoduleMap {
    pub fn zero(source_degree: usize, target_degree: usize) -> Self {
        BimoduleMap {
            source_degree,
            target_degree,
            entries: BTreeMap::new(),
        }
    }

    /// Adds `c · p·a_tgt·q` to the image of `src`.
    pub fn add_term(&mut self, src: GeneratorIndex, tgt: GeneratorIndex, left: Monomial, right: Monomial, c: Scalar) {
        debug_assert_eq!(src.n, self.source_degree);
        debug_assert_eq!(tgt.n, self.target_degree);
        let entry = self.entries.entry((src, tgt)).or_default();
        entry.add_term(left, right, c);
        if entry.is_zero() {
            self.entries.remove(&(src, tgt));
        }
    }

    /// `(src, tgt, left, right, coefficient)` for every stored term.
    pub fn terms(&self) -> impl Iterator<Item = (GeneratorIndex, GeneratorIndex, Monomial, Monomial, &Scalar)> {
        self.entries
            .iter()
            .flat_map(|((s, t), e)| e.terms().map(move |((p, q), c)| (*s, *t, *p, *q, c)))
    }

    pub fn image_of(&self, src: GeneratorIndex) -> impl Iterator<Item = (&GeneratorIndex, &TensorElement)> {
        self.entries
            .range(
                (
                    src,
                    GeneratorIndex {
                        n: 0,
                        i: Vertex::new(0),
                        j: 0,
                    },
                )..,
            )
            .take_while(move |((s, _), _)| *s == src)
            .map(|((_, t), e)| (t, e))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// Every term lies in `e_{o(src)} A e_{o(tgt)} ⊗ e_{t(tgt)} A e_{t(src)}`.
    pub fn is_vertex_compatible(&self) -> bool {
        self.terms().all(|(s, t, p, q, _)| {
            p.vertex() == s.origin() && p.end() == t.origin() && q.vertex() == t.terminus() && q.end() == s.terminus()
        })
    }

    /// `self ∘ inner` for `inner : Q^m → Q^k` and `self : Q^k → Q^n`.
    pub fn compose(&self, inner: &BimoduleMap, alg: &Algebra) -> Result<BimoduleMap> {
        if inner.target_degree != self.source_degree {
            return Err(Error::InvalidArgument(format!(
                "cannot compose Q^{}→Q^{} after Q^{}→Q^{}",
                self.source_degree, self.target_degree, inner.source_degree, inner.target_degree
            )));
        }
        let field = alg.field();
        let mut out = BimoduleMap::zero(inner.source_degree, self.target_degree);
        for ((src, mid), e) in &inner.entries {
            for (tgt, f) in self.image_of(*mid) {
                for ((p, q), c) in e.terms() {
                    for ((p2, q2), c2) in f.terms() {
                        let Some((s1, left)) = alg.mul_monomials(*p, *p2) else {
                            continue;
                        };
                        let Some((s2, right)) = alg.mul_monomials(*q2, *q) else {
                            continue;
                        };
                        let coeff = &(c * c2) * &field.from_i64(s1 * s2);
                        out.add_term(*src, *tgt, left, right, coeff);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Composite with the multiplication map `Q^0 → A_T`, when the target
    /// degree is 0: each source generator goes to `Σ c · p q`.
    pub fn multiply_out(&self, alg: &Algebra) -> Result<BTreeMap<GeneratorIndex, AlgebraElement>> {
        if self.target_degree != 0 {
            return Err(Error::InvalidArgument(
                "multiplication map needs target degree 0".into(),
            ));
        }
        let mut out: BTreeMap<GeneratorIndex, AlgebraElement> = BTreeMap::new();
        for (s, _, p, q, c) in self.terms() {
            if let Some((sign, m)) = alg.mul_monomials(p, q) {
                out.entry(s)
                    .or_insert_with(|| alg.zero())
                    .add_term(m, c * &alg.field().from_i64(sign));
            }
        }
        out.retain(|_, e| !e.is_zero());
        Ok(out)
    }
}

fn power(v: Vertex, arrow: Arrow, k: u32) -> Monomial {
    match arrow {
        Arrow::A => Monomial::x(v, k),
        Arrow::B => Monomial::y(v, k),
    }
}

/// One term `sign · P^{l} a^{n-1}_{i+di, j'} P^{r}` of `∂^n(a^n_{i,j})`,
/// with each side given as `(arrow, exponent)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DifferentialTerm {
    pub sign: i64,
    pub left: (Arrow, u32),
    pub shift: i64,
    pub j: usize,
    pub right: (Arrow, u32),
}

/// The case table of `∂^n` at `a^n_{i,j}` for `n ≥ 1`.
pub fn differential_terms(t: u32, n: usize, i: Vertex, j: usize) -> Vec<DifferentialTerm> {
    assert!(n >= 1 && j <= n);
    let (p, q) = parity_arrows(i);
    let long = 4 * t + 1;
    let m = n / 2;
    let e = (p, 0);
    let term = |sign, left, shift, j, right| DifferentialTerm {
        sign,
        left,
        shift,
        j,
        right,
    };
    let mut out = Vec::new();
    if n % 2 == 1 {
        if j == 0 {
            out.push(term(1, e, 0, 0, (p, 1)));
            out.push(term(-1, (p, 1), 1, 0, e));
        } else if j == n {
            out.push(term(1, e, 0, n - 1, (q, 1)));
            out.push(term(-1, (q, 1), 1, n - 1, e));
        } else if j <= m {
            out.push(term(1, e, 0, j - 1, (q, long)));
            out.push(term(1, e, 0, j, (p, 1)));
            out.push(term(-1, (p, 1), 1, j, e));
            out.push(term(-1, (q, long), 1, j - 1, e));
        } else {
            out.push(term(1, e, 0, j - 1, (q, 1)));
            out.push(term(1, e, 0, j, (p, long)));
            out.push(term(-1, (p, long), 1, j, e));
            out.push(term(-1, (q, 1), 1, j - 1, e));
        }
    } else if j == 0 {
        out.push(term(1, e, 0, 0, (q, 1)));
        out.push(term(1, (p, 1), 1, 0, e));
    } else if j == n {
        out.push(term(1, e, 0, n - 1, (p, 1)));
        out.push(term(1, (q, 1), 1, n - 1, e));
    } else if j < m {
        out.push(term(1, e, 0, j - 1, (p, long)));
        out.push(term(1, e, 0, j, (q, 1)));
        out.push(term(1, (p, 1), 1, j, e));
        out.push(term(1, (q, long), 1, j - 1, e));
    } else if j == m {
        let t4 = 4 * t;
        for s in 0..=t {
            let s4 = 4 * s;
            out.push(term(1, (p, s4), 0, m - 1, (p, t4 - s4 + 1)));
            out.push(term(1, (p, s4 + 1), 1, m, (p, t4 - s4)));
            out.push(term(1, (q, s4), 0, m, (q, t4 - s4 + 1)));
            out.push(term(1, (q, s4 + 1), 1, m - 1, (q, t4 - s4)));
        }
        for s in 0..t {
            let s4 = 4 * s;
            out.push(term(1, (p, s4 + 2), 2, m - 1, (p, t4 - s4 - 1)));
            out.push(term(1, (p, s4 + 3), 3, m, (p, t4 - s4 - 2)));
            out.push(term(1, (q, s4 + 2), 2, m, (q, t4 - s4 - 1)));
            out.push(term(1, (q, s4 + 3), 3, m - 1, (q, t4 - s4 - 2)));
        }
    } else {
        out.push(term(1, e, 0, j - 1, (p, 1)));
        out.push(term(1, e, 0, j, (q, long)));
        out.push(term(1, (p, long), 1, j, e));
        out.push(term(1, (q, 1), 1, j - 1, e));
    }
    out
}

/// `∂^n : Q^n → Q^{n-1}` for `n ≥ 1`.
pub fn differential(t: u32, n: usize, field: Field) -> BimoduleMap {
    assert!(n >= 1, "∂^0 is the multiplication map");
    let mut map = BimoduleMap::zero(n, n - 1);
    for src in GeneratorIndex::all(n) {
        for d in differential_terms(t, n, src.i, src.j) {
            let tgt = GeneratorIndex::new(n - 1, src.i.shift(d.shift), d.j);
            let left = power(src.i, d.left.0, d.left.1);
            let right = power(tgt.terminus(), d.right.0, d.right.1);
            map.add_term(src, tgt, left, right, field.from_i64(d.sign));
        }
    }
    map
}

/// Checks `∂^n ∂^{n+1} = 0` for `0 ≤ n < N`, with `∂^0` the multiplication.
pub fn verify_complex(t: u32, n_max: usize, field: Field) -> CheckReport {
    let alg = Algebra::new(t, field);
    let diffs: Vec<BimoduleMap> = (1..=n_max).into_par_iter().map(|n| differential(t, n, field)).collect();
    let parts: Vec<CheckReport> = (0..n_max)
        .into_par_iter()
        .map(|n| {
            let mut r = CheckReport::new(format!("∂^{n}∂^{}", n + 1), "");
            if n == 0 {
                let image = diffs[0].multiply_out(&alg).expect("degree 0 target");
                r.check(image.is_empty(), || {
                    let (g, e) = image.iter().next().unwrap();
                    format!("n=0 generator {g}: residual {e}")
                });
            } else {
                let comp = diffs[n - 1].compose(&diffs[n], &alg).expect("degrees match");
                r.check(comp.is_zero(), || {
                    let ((s, _), e) = comp.entries.iter().next().unwrap();
                    format!("n={n} generator {s}: {} residual terms", e.len())
                });
            }
            r
        })
        .collect();
    let mut report = CheckReport::new(
        format!("complex T={t} N={n_max} over {field}"),
        "the composite of consecutive bimodule differentials is zero",
    );
    for p in parts {
        report.absorb(p);
    }
    report
}

/// Checks that every pure tensor in `∂^n`, `1 ≤ n ≤ N`, has a side of
/// positive length.
pub fn verify_minimality(t: u32, n_max: usize) -> CheckReport {
    let mut report = CheckReport::new(
        format!("minimality T={t} N={n_max}"),
        "the image of each bimodule differential lies in rad·Q + Q·rad",
    );
    for n in 1..=n_max {
        let d = differential(t, n, Field::RATIONALS);
        report.check(d.is_vertex_compatible(), || {
            format!("∂^{n} has a vertex-incompatible term")
        });
        for (s, tg, p, q, _) in d.terms() {
            report.check(p.is_radical() || q.is_radical(), || {
                format!("∂^{n}: term {p} ⊗ {q} at ({s}, {tg}) has no radical side")
            });
        }
    }
    report
}

/// `A_T/rad ⊗_{A_T} ∂^n`: keep the terms whose left side is an idempotent.
pub fn induced_right_complex(t: u32, n: usize, field: Field) -> RightDifferential {
    let alg = Algebra::new(t, field);
    let d = differential(t, n, field);
    let mut entries: BTreeMap<(usize, usize), AlgebraElement> = BTreeMap::new();
    for (s, tg, p, q, c) in d.terms() {
        if p.is_radical() {
            continue;
        }
        entries
            .entry((s.position(), tg.position()))
            .or_insert_with(|| alg.zero())
            .add_term(q, c.clone());
    }
    entries.retain(|_, e| !e.is_zero());
    RightDifferential { n, entries }
}

/// Entrywise comparison of the induced right complex with the right
/// differential extracted from `G^n`, for `1 ≤ n ≤ N`.
pub fn compare_induced_with_gsz(t: u32, n_max: usize, field: Field) -> Result<CheckReport> {
    let mut report = CheckReport::new(
        format!("induced right complex T={t} N={n_max} over {field}"),
        "A_T/rad ⊗ (Q•, ∂) coincides with (P•, d) under a^n_{i,j} ↦ t(g^n_{i,j})",
    );
    let parts: Vec<Result<CheckReport>> = (1..=n_max)
        .into_par_iter()
        .map(|n| {
            let mut r = CheckReport::new(format!("n={n}"), "");
            let induced = induced_right_complex(t, n, field);
            let direct = extract_right_differential(t, n, field)?;
            let keys: std::collections::BTreeSet<_> = induced.entries.keys().chain(direct.entries.keys()).collect();
            for k in keys {
                let a = induced.entries.get(k);
                let b = direct.entries.get(k);
                r.check(a == b, || format!("entry {k:?}: induced {a:?} vs factorization {b:?}"));
            }
            Ok(r)
        })
        .collect();
    for p in parts {
        report.absorb(p?);
    }
    Ok(report)
}

/// Number of generators of `Q^n`.
pub fn rank_of_q(n: usize) -> usize {
    VERTEX_COUNT * (n + 1)
}
