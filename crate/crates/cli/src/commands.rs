use std::error::Error;
use std::io::{self, Write};

use hochschild_core::bar::{bar_hh_dimension, in_budget};
use hochschild_core::center::compute_center;
use hochschild_core::gsz::{check_koszul_linearity, verify_right_resolution};
use hochschild_core::hochschild::bases::verify_explicit_bases;
use hochschild_core::hochschild::formulas::expected_dims;
use hochschild_core::hochschild::{cohomology_dimensions, cohomology_table, verify_hh0_center};
use hochschild_core::resolution::{compare_induced_with_gsz, verify_complex, verify_minimality};
use hochschild_core::scalar::divides_two_t_plus_one;
use hochschild_core::yoneda::{
    presentation_hilbert_function, verify_nilpotent_part, verify_ring_presentation, verify_sigma_liftings, RELATIONS,
};
use hochschild_core::{Algebra, CheckReport, Field};
use rayon::prelude::*;
use serde::Serialize;

use crate::{Check, Config, Emit};

type Outcome = Result<bool, Box<dyn Error>>;

#[derive(Serialize, Debug, Clone)]
pub struct DimRecord {
    #[serde(rename = "T")]
    pub t: u32,
    pub char: u64,
    pub n: usize,
    pub dim_hh: usize,
    pub dim_ker: usize,
    pub dim_im: usize,
    pub formula_hh: usize,
    pub divides: bool,
    #[serde(rename = "match")]
    pub matches: bool,
}

fn cells(config: &Config) -> Vec<(u32, Field)> {
    config
        .ts
        .iter()
        .flat_map(|t| config.fields.iter().map(move |f| (*t, *f)))
        .collect()
}

fn records(config: &Config) -> Result<Vec<DimRecord>, Box<dyn Error>> {
    let tables = cells(config)
        .into_par_iter()
        .map(|(t, field)| {
            let divides = divides_two_t_plus_one(field, t);
            cohomology_table(t, config.max_n, field)?
                .into_iter()
                .map(|d| {
                    let (_, _, formula_hh) = expected_dims(t, d.n, divides)?;
                    Ok(DimRecord {
                        t,
                        char: field.characteristic(),
                        n: d.n,
                        dim_hh: d.hh,
                        dim_ker: d.ker,
                        dim_im: d.im,
                        formula_hh,
                        divides,
                        matches: d.hh == formula_hh,
                    })
                })
                .collect::<hochschild_core::Result<Vec<_>>>()
        })
        .collect::<hochschild_core::Result<Vec<_>>>()?;
    Ok(tables.into_iter().flatten().collect())
}

pub fn dims(config: &Config) -> Outcome {
    let rows = records(config)?;
    let out = io::stdout();
    let mut out = out.lock();
    match config.emit {
        Emit::Csv => {
            let mut w = csv::Writer::from_writer(&mut out);
            for r in &rows {
                w.serialize(r)?;
            }
            w.flush()?;
        }
        Emit::Json => {
            serde_json::to_writer_pretty(&mut out, &rows)?;
            writeln!(out)?;
        }
    }
    Ok(rows.iter().all(|r| r.matches))
}

#[derive(Serialize)]
struct VerifyReport {
    passed: bool,
    checks: Vec<CheckReport>,
}

fn wants(only: Option<Check>, c: Check) -> bool {
    only.is_none_or(|o| o == c)
}

fn per_cell(config: &Config, only: Option<Check>) -> Result<Vec<CheckReport>, Box<dyn Error>> {
    let n = config.max_n;
    let reports = cells(config)
        .into_par_iter()
        .map(|(t, field)| {
            let mut out = Vec::new();
            if wants(only, Check::Complex) {
                out.push(verify_complex(t, n, field));
            }
            if wants(only, Check::Minimality) && field == config.fields[0] {
                out.push(verify_minimality(t, n));
            }
            if wants(only, Check::Resolution) {
                out.push(verify_right_resolution(t, n, field)?);
                out.push(compare_induced_with_gsz(t, n, field)?);
            }
            if wants(only, Check::Koszul) && t == 0 && field == config.fields[0] {
                let mut r = CheckReport::new(
                    format!("Koszul linearity n ≤ {n}"),
                    "every path of every g^n_{i,j} has length n when T = 0",
                );
                r.check(check_koszul_linearity(0, n), || "a path of the wrong length".into());
                out.push(r);
            }
            if wants(only, Check::Dims) {
                let divides = divides_two_t_plus_one(field, t);
                let mut r = CheckReport::new(
                    format!("dimension formulas T={t} over {field}"),
                    "dim Im, dim Ker and dim HH agree with the closed formulas",
                );
                for d in cohomology_table(t, n, field)? {
                    let want = expected_dims(t, d.n, divides)?;
                    r.check((d.ker, d.im, d.hh) == want, || {
                        format!("n={}: computed {:?}, formula {want:?}", d.n, (d.ker, d.im, d.hh))
                    });
                }
                out.push(r);
            }
            if wants(only, Check::Bases) {
                for k in 0..=n.min(8) {
                    out.push(verify_explicit_bases(t, k, field)?);
                }
            }
            if wants(only, Check::Center) {
                let alg = Algebra::new(t, field);
                let z = compute_center(&alg);
                let mut r = z.presentation.clone();
                r.check(z.dimension() == 2 * t as usize + 1, || {
                    format!("dim Z = {}", z.dimension())
                });
                out.push(r);
                out.push(verify_hh0_center(t, field)?);
            }
            if wants(only, Check::Oracle) && t <= 1 {
                let mut r = CheckReport::new(
                    format!("reduced bar oracle T={t} over {field}"),
                    "HH^n from the reduced bar complex equals HH^n from the resolution",
                );
                for k in (0..=n).filter(|k| in_budget(t, *k)) {
                    let bar = bar_hh_dimension(t, k, field)?;
                    let res = cohomology_dimensions(t, k, field)?.hh;
                    r.check(bar == res, || format!("n={k}: bar {bar}, resolution {res}"));
                }
                out.push(r);
            }
            Ok(out)
        })
        .collect::<Result<Vec<_>, hochschild_core::Error>>()?;
    Ok(reports.into_iter().flatten().collect())
}

pub fn verify(config: &Config, only: Option<Check>, wmax: usize) -> Outcome {
    let mut checks = per_cell(config, only)?;
    if config.ts.contains(&0) {
        for field in &config.fields {
            if wants(only, Check::Sigma) {
                checks.push(verify_sigma_liftings(7, *field)?);
            }
            if wants(only, Check::Ring) {
                checks.push(verify_ring_presentation(wmax, *field)?);
            }
            if wants(only, Check::Nilpotence) && field.characteristic() != 2 {
                checks.push(verify_nilpotent_part(*field)?);
            }
        }
    }
    let passed = checks.iter().all(|c| c.passed);
    let out = io::stdout();
    let mut out = out.lock();
    serde_json::to_writer_pretty(&mut out, &VerifyReport { passed, checks })?;
    writeln!(out)?;
    Ok(passed)
}

pub fn ring(wmax: usize, chars: &[u64]) -> Outcome {
    let out = io::stdout();
    let mut out = out.lock();
    writeln!(out, "HH^{{4*}}(A_0) = K[z_0, z_1, z_2, z_3, z_4] / I, deg z_j = 4")?;
    writeln!(out, "z_j = sum_i beta^{{4,0}}_{{i,j}}")?;
    writeln!(out, "relations ({}):", RELATIONS.len())?;
    for [a, b, c, d] in RELATIONS {
        writeln!(out, "  z_{a} z_{b} - z_{c} z_{d}")?;
    }
    let mut passed = true;
    for p in chars {
        let field = Field::new(*p)?;
        writeln!(out, "over {field}:")?;
        writeln!(out, "  w  presentation  dim HH^4w")?;
        for w in 0..=wmax {
            let h = presentation_hilbert_function(w);
            let hh = cohomology_dimensions(0, 4 * w, field)?.hh;
            passed &= h == hh;
            writeln!(out, "  {w}  {h:>12}  {hh:>9}")?;
        }
        let report = verify_ring_presentation(wmax, field)?;
        passed &= report.passed;
        writeln!(
            out,
            "  product checks: {} ({} assertions)",
            if report.passed { "pass" } else { "FAIL" },
            report.checks
        )?;
        for f in &report.failures {
            writeln!(out, "    {f}")?;
        }
    }
    Ok(passed)
}
