//! Acceptance criteria 1–10. Each prints one PASS/FAIL line with its time
//! budget; the test fails if any criterion does.

use std::time::{Duration, Instant};

use hochschild_core::bar::bar_hh_dimension;
use hochschild_core::center::compute_center;
use hochschild_core::gsz::{check_koszul_linearity, verify_right_resolution};
use hochschild_core::hochschild::bases::verify_explicit_bases;
use hochschild_core::hochschild::formulas::expected_dims;
use hochschild_core::hochschild::{cohomology_dimensions, cohomology_table, verify_hh0_center};
use hochschild_core::resolution::{compare_induced_with_gsz, verify_complex, verify_minimality};
use hochschild_core::scalar::divides_two_t_plus_one;
use hochschild_core::yoneda::{verify_nilpotent_part, verify_ring_presentation, verify_sigma_liftings};
use hochschild_core::{Algebra, CheckReport, Field};

fn field(p: u64) -> Field {
    Field::new(p).unwrap()
}

const CHARS: [u64; 4] = [0, 2, 3, 5];

struct Outcome {
    ok: bool,
    detail: Vec<String>,
}

impl Outcome {
    fn new() -> Self {
        Outcome {
            ok: true,
            detail: Vec::new(),
        }
    }

    fn require(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.ok = false;
            if self.detail.len() < 10 {
                self.detail.push(what());
            }
        }
    }

    fn report(&mut self, r: &CheckReport) {
        self.require(r.passed, || {
            format!("{}: {:?}", r.name, r.failures.iter().take(3).collect::<Vec<_>>())
        });
    }
}

fn criterion(number: u32, title: &str, budget: Option<Duration>, body: impl FnOnce(&mut Outcome)) -> bool {
    let start = Instant::now();
    let mut out = Outcome::new();
    body(&mut out);
    let elapsed = start.elapsed();
    let in_time = budget.is_none_or(|b| elapsed <= b);
    let pass = out.ok && in_time;
    let timing = match budget {
        Some(b) => format!("{:.2}s / {}s", elapsed.as_secs_f64(), b.as_secs()),
        None => format!("{:.2}s", elapsed.as_secs_f64()),
    };
    println!(
        "{} {number:>2}  {title}  [{timing}]",
        if pass { "PASS" } else { "FAIL" }
    );
    for d in &out.detail {
        println!("         {d}");
    }
    if !in_time {
        println!("         over the time budget");
    }
    pass
}

fn c1() -> bool {
    criterion(
        1,
        "dim A_T = 16(2T+1), T ≤ 4, char 0,2,3,5",
        Some(Duration::from_secs(1)),
        |o| {
            for t in 0..=4 {
                for p in CHARS {
                    let alg = Algebra::new(t, field(p));
                    let want = 16 * (2 * t as usize + 1);
                    o.require(alg.dim() == want, || format!("T={t} p={p}: dim {}", alg.dim()));
                    o.require(alg.basis().len() == want, || format!("T={t} p={p}: basis list"));
                }
            }
        },
    )
}

fn c2() -> bool {
    criterion(
        2,
        "∂∂ = 0 and minimality, T ≤ 3, n ≤ 11, char 0,2,3,5",
        Some(Duration::from_secs(60)),
        |o| {
            for t in 0..=3 {
                for p in CHARS {
                    o.report(&verify_complex(t, 12, field(p)));
                }
                o.report(&verify_minimality(t, 11));
            }
        },
    )
}

fn c3() -> bool {
    criterion(
        3,
        "induced right complex = GSZ and exactness to degree 8, T ≤ 2",
        Some(Duration::from_secs(60)),
        |o| {
            for t in 0..=2 {
                for p in [0, 2, 3] {
                    o.report(&compare_induced_with_gsz(t, 8, field(p)).unwrap());
                    o.report(&verify_right_resolution(t, 8, field(p)).unwrap());
                }
            }
        },
    )
}

fn c4() -> bool {
    criterion(4, "Koszul linearity for T = 0 up to degree 10", None, |o| {
        o.require(check_koszul_linearity(0, 10), || {
            "some path has the wrong length".into()
        });
    })
}

fn c5() -> bool {
    criterion(
        5,
        "(im, ker, hh) match the formulas, T ≤ 3, n ≤ 11",
        Some(Duration::from_secs(300)),
        |o| {
            let mut cells: Vec<(u32, u64, bool)> = (0..=3).map(|t| (t, 0, false)).collect();
            cells.extend([(1, 3, true), (2, 5, true), (0, 3, false), (2, 3, false)]);
            for (t, p, divides) in cells {
                let f = field(p);
                o.require(divides_two_t_plus_one(f, t) == divides, || {
                    format!("T={t} p={p}: divisibility flag should be {divides}")
                });
                for d in cohomology_table(t, 11, f).unwrap() {
                    let want = expected_dims(t, d.n, divides).unwrap();
                    o.require((d.ker, d.im, d.hh) == want, || {
                        format!("T={t} p={p} n={}: {:?} vs {want:?}", d.n, (d.ker, d.im, d.hh))
                    });
                }
            }
        },
    )
}

fn c6() -> bool {
    criterion(
        6,
        "explicit image, kernel and HH bases, m = 0, 1, both branches",
        None,
        |o| {
            let cells = [(0, 0), (1, 0), (2, 0), (3, 0), (1, 3), (2, 5), (0, 3), (2, 3)];
            for (t, p) in cells {
                for n in 0..=8 {
                    o.report(&verify_explicit_bases(t, n, field(p)).unwrap());
                }
            }
        },
    )
}

fn c7() -> bool {
    criterion(7, "center: dim 2T+1, presentation, HH^0 → Z", None, |o| {
        for t in 0..=3 {
            for p in CHARS {
                let z = compute_center(&Algebra::new(t, field(p)));
                o.require(z.dimension() == 2 * t as usize + 1, || {
                    format!("T={t} p={p}: dim Z = {}", z.dimension())
                });
                o.report(&z.presentation);
                o.report(&verify_hh0_center(t, field(p)).unwrap());
            }
        }
    })
}

fn c8() -> bool {
    criterion(
        8,
        "HH^{4*}(A_0): σ liftings l ≤ 7, products w ≤ 4, relations",
        Some(Duration::from_secs(60)),
        |o| {
            for p in [0, 3] {
                o.report(&verify_sigma_liftings(7, field(p)).unwrap());
                o.report(&verify_ring_presentation(4, field(p)).unwrap());
            }
        },
    )
}

fn c9() -> bool {
    criterion(
        9,
        "squares of HH^1(A_0), HH^2(A_0) basis classes are coboundaries",
        None,
        |o| {
            for p in [0, 3, 5] {
                o.report(&verify_nilpotent_part(field(p)).unwrap());
            }
        },
    )
}

fn c10() -> bool {
    criterion(
        10,
        "reduced bar HH^n = resolution HH^n",
        Some(Duration::from_secs(600)),
        |o| {
            for p in [0, 3] {
                for (t, n_max) in [(0, 4), (1, 2)] {
                    for n in 0..=n_max {
                        let bar = bar_hh_dimension(t, n, field(p)).unwrap();
                        let res = cohomology_dimensions(t, n, field(p)).unwrap().hh;
                        o.require(bar == res, || format!("T={t} p={p} n={n}: bar {bar}, resolution {res}"));
                    }
                }
            }
        },
    )
}

#[test]
fn acceptance() {
    let results = [c1(), c2(), c3(), c4(), c5(), c6(), c7(), c8(), c9(), c10()];
    let failed: Vec<usize> = results
        .iter()
        .enumerate()
        .filter(|(_, ok)| !**ok)
        .map(|(k, _)| k + 1)
        .collect();
    assert!(failed.is_empty(), "criteria failed: {failed:?}");
}
