//! Hand-written images of the canonical cochains under `Hom(∂^n, A_T)`,
//! compared column by column with the matrices built from the resolution.

use super::{hom_matrix, CochainBasisElement, CochainSpace, Kind};
use crate::linalg::SparseVec;
use crate::quiver::Algebra;
use crate::scalar::Field;

/// `e ∘ ∂^{n+1}` in coordinates of `target` (degree `n + 1`).
fn table_image(target: &CochainSpace, e: &CochainBasisElement) -> SparseVec {
    let t = target.algebra().t();
    let field = target.algebra().field();
    let n = e.n;
    let (l, j) = (e.l, e.j);
    let i = e.i.index() as i64;
    let even = i % 2 == 0;
    let mut v = SparseVec::new();
    let mut add = |c: i64, kind: Kind, l: u32, i: i64, j: usize| {
        let unit = match kind {
            Kind::Beta => target.beta(l, i, j),
            Kind::Gamma => target.gamma(l, i, j),
        };
        v.axpy(&field.from_i64(c), &unit);
    };
    use Kind::{Beta as B, Gamma as G};
    let tt = t as i64;
    match n % 4 {
        1 => {
            let m = (n - 1) / 4;
            let k = e.kind;
            if l == 0 {
                // the two kinds trade the roles of even and odd vertices
                let first = (k == B) == even;
                let centre = match (k, even) {
                    (B, true) | (G, false) => j == 2 * m,
                    (B, false) | (G, true) => j == 2 * m + 1,
                };
                if centre {
                    add(tt + 1, k, t, i, 2 * m + 1);
                    add(tt, k, t, i + 1, 2 * m + 1);
                    add(tt, k, t, i + 2, 2 * m + 1);
                    add(tt + 1, k, t, i + 3, 2 * m + 1);
                } else {
                    // β at even / γ at odd vertices shift j; the others keep it
                    let low = j < 2 * m + 1;
                    let (lev, jj) = match (first, low) {
                        (true, true) => (t, j + 1),
                        (true, false) => (0, j + 1),
                        (false, true) => (0, j),
                        (false, false) => (t, j),
                    };
                    add(1, k, lev, i, jj);
                    add(1, k, lev, i - 1, jj);
                }
            } else {
                let low = j <= 2 * m;
                let (live, jj) = match (k, even, low) {
                    (B, false, true) | (G, true, true) => (true, j),
                    (B, true, false) | (G, false, false) => (true, j + 1),
                    _ => (false, 0),
                };
                if live {
                    add(1, k, l, i, jj);
                    add(1, k, l, i - 1, jj);
                }
            }
        }
        2 => {
            let m = (n - 2) / 4;
            if l == t {
                return v;
            }
            let k = e.kind;
            // β and γ follow the same pattern with the vertex parity swapped
            let lead = (k == B) == even;
            if j <= 2 * m {
                if lead {
                    add(1, k, l, i, j);
                } else {
                    add(-1, k, l, i - 1, j);
                }
            } else if j == 2 * m + 1 {
                let (a, b) = if lead {
                    (2 * m + 1, 2 * m + 2)
                } else {
                    (2 * m + 2, 2 * m + 1)
                };
                add(1, k, l, i, a);
                add(-1, k, l, i - 1, b);
            } else if lead {
                add(-1, k, l, i - 1, j + 1);
            } else {
                add(1, k, l, i, j + 1);
            }
        }
        3 => {
            let m = (n - 3) / 4;
            let k = e.kind;
            // γ uses the opposite vertex parity to β here
            let even = even != (k == G);
            if !even && j <= 2 * m + 1 {
                add(1, k, l + 1, i, j);
                add(1, k, l + 1, i - 1, j);
            } else if even && j >= 2 * m + 2 {
                add(1, k, l + 1, i, j + 1);
                add(1, k, l + 1, i - 1, j + 1);
            }
        }
        _ => {
            let m = n / 4;
            if l == 0 {
                // β^{4m,0} = γ^{4m,0}, so only the β form is in the basis
                let (p, q) = if even { (B, G) } else { (G, B) };
                let (l1, l2, j1, j2) = if j < 2 * m {
                    (0, t, j, j + 1)
                } else if j == 2 * m {
                    (0, 0, 2 * m, 2 * m + 1)
                } else {
                    (t, 0, j, j + 1)
                };
                add(1, p, l1, i, j1);
                add(-1, q, l1, i - 1, j1);
                add(1, q, l2, i, j2);
                add(-1, p, l2, i - 1, j2);
            } else {
                let lead = (e.kind == B) == even;
                let k = e.kind;
                if j < 2 * m {
                    if lead {
                        add(1, k, l, i, j);
                    } else {
                        add(-1, k, l, i - 1, j);
                    }
                } else if j == 2 * m {
                    let (a, b) = if (k == B) == even {
                        (2 * m, 2 * m + 1)
                    } else {
                        (2 * m + 1, 2 * m)
                    };
                    add(1, k, l, i, a);
                    add(-1, k, l, i - 1, b);
                } else if lead {
                    add(-1, k, l, i - 1, j + 1);
                } else {
                    add(1, k, l, i, j + 1);
                }
            }
        }
    }
    v
}

fn check(t: u32, n: usize, field: Field) {
    let alg = Algebra::new(t, field);
    let source = CochainSpace::new(&alg, n - 1);
    let target = CochainSpace::new(&alg, n);
    let matrix = hom_matrix(&alg, n).unwrap().matrix;
    for (k, e) in source.basis().iter().enumerate() {
        let want = table_image(&target, e);
        assert_eq!(
            matrix.columns[k],
            want,
            "T={t} {field}: {e} ∘ ∂^{n} is {} but the table gives {}",
            target.describe(&matrix.columns[k]),
            target.describe(&want)
        );
    }
}

#[test]
fn table_matches_resolution() {
    for t in 0..3 {
        for p in [0u64, 3, 5] {
            for n in 1..10 {
                check(t, n, Field::new(p).unwrap());
            }
        }
    }
}
