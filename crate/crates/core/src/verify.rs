//! Batch harness behind the `cmdeg` binary: check the degree/Eisenstein
//! identity over α and y grids, tabulate either side, and run the built-in
//! self-test suites.

use std::path::{Path, PathBuf};

use rayon::prelude::*;

use crate::config::RunConfig;
use crate::deformation::{epsilon, order_profile};
use crate::degree::arithmetic_degree;
use crate::eisenstein::{
    b_phi, b_phi_closed, b_phi_closed_with, coeff_derivative_for_class, degree_from_b_phi, diff_set, enumerate_xi,
    value_at_zero,
};
use crate::error::{Error, Result};
use crate::field::ElementF;
use crate::ideal::{rho, IdealF};
use crate::oracle;
use crate::report::{fmt_e, join_y, Csv, IdentityRecord, IdentityReport, Summary, TowerSummary, SCHEMA_VERSION};
use crate::tower::{build_tower, validate_conditions, FieldConfig, FieldTower};
use crate::{beta, ideal};

pub const REPORT_DIR_ENV: &str = "CMDEG_REPORT_DIR";
pub const DEFAULT_REPORT_DIR: &str = "cmdeg-reports";

pub const EXIT_PASS: i32 = 0;
pub const EXIT_IDENTITY_FAILURE: i32 = 1;
pub const EXIT_CONFIG: i32 = 2;

/// Values whose absolute difference is below this count as equal.
pub const ABS_FLOOR: f64 = 1e-12;

/// A validated tower with its expanded grids.
pub struct Prepared {
    pub tower: FieldTower,
    pub alphas: Vec<ElementF>,
    pub ys: Vec<Vec<f64>>,
    pub tolerance: f64,
}

/// Build the tower, check both ramification conditions and expand the grids.
/// Every error here maps to exit code 2.
pub fn prepare(cfg: &RunConfig) -> Result<Prepared> {
    let tower = build_tower(&cfg.field)?;
    let diagnostics = validate_conditions(&tower);
    if !diagnostics.passed() {
        return Err(Error::InvalidTower(diagnostics.to_string()));
    }
    let alphas = cfg.alpha_grid(&tower)?;
    let ys = cfg.y_grid(tower.field().places())?;
    Ok(Prepared { tower, alphas, ys, tolerance: cfg.tolerance })
}

pub fn relative_error(a: f64, b: f64) -> f64 {
    let scale = a.abs().max(b.abs());
    if scale == 0.0 {
        0.0
    } else {
        (a - b).abs() / scale
    }
}

pub fn agrees(a: f64, b: f64, tolerance: f64) -> bool {
    (a - b).abs() <= ABS_FLOOR || relative_error(a, b) <= tolerance
}

fn grid(p: &Prepared) -> Vec<(&ElementF, &Vec<f64>)> {
    p.alphas.iter().flat_map(|a| p.ys.iter().map(move |y| (a, y))).collect()
}

pub fn identity_record(tower: &FieldTower, alpha: &ElementF, y: &[f64], tolerance: f64) -> Result<IdentityRecord> {
    let degree = arithmetic_degree(tower, alpha, y)?;
    let sum_route = b_phi(tower, alpha, y)?;
    let closed_route = b_phi_closed(tower, alpha, y)?;
    let rhs = degree_from_b_phi(tower, sum_route);
    let pass = agrees(degree.total, rhs, tolerance) && agrees(sum_route, closed_route, tolerance);
    Ok(IdentityRecord {
        alpha: alpha.to_string(),
        y: y.to_vec(),
        case_tag: degree.case_tag.as_str(),
        degree_total: degree.total,
        b_phi_sum_route: sum_route,
        b_phi_closed_route: closed_route,
        rhs,
        abs_err: (degree.total - rhs).abs(),
        rel_err: relative_error(degree.total, rhs),
        route_rel_err: relative_error(sum_route, closed_route),
        pass,
    })
}

pub fn check_identity(p: &Prepared) -> Result<IdentityReport> {
    let records = grid(p)
        .par_iter()
        .map(|(alpha, y)| identity_record(&p.tower, alpha, y, p.tolerance))
        .collect::<Result<Vec<_>>>()?;
    let summary = Summary {
        n_checked: records.len(),
        n_pass: records.iter().filter(|r| r.pass).count(),
        max_rel_err: records.iter().map(|r| r.rel_err.max(r.route_rel_err)).fold(0.0, f64::max),
    };
    Ok(IdentityReport {
        schema: SCHEMA_VERSION,
        command: "check-identity",
        tower: TowerSummary::of(&p.tower),
        tolerance: p.tolerance,
        records,
        summary,
    })
}

pub fn exit_code(report: &IdentityReport) -> i32 {
    if report.all_pass() {
        EXIT_PASS
    } else {
        EXIT_IDENTITY_FAILURE
    }
}

/// One row per contributing prime (or a single row when none contribute).
pub fn degree_table(p: &Prepared) -> Result<String> {
    let mut csv = Csv::new(&[
        "alpha",
        "y",
        "case_tag",
        "total",
        "green_term",
        "prime",
        "splitting",
        "ord",
        "rho_shifted",
        "length",
        "term",
    ]);
    let rows = grid(p)
        .par_iter()
        .map(|(alpha, y)| arithmetic_degree(&p.tower, alpha, y).map(|d| (alpha.to_string(), join_y(y), d)))
        .collect::<Result<Vec<_>>>()?;
    for (alpha, y, d) in rows {
        let head = [alpha, y, d.case_tag.as_str().to_string(), fmt_e(d.total), fmt_e(d.green_term)];
        if d.per_prime.is_empty() {
            csv.row(&[head.to_vec(), vec![String::new(); 6]].concat());
        }
        for t in &d.per_prime {
            let tail = [
                t.prime.to_string(),
                t.splitting.to_string(),
                t.ord.to_string(),
                t.rho_shifted.to_string(),
                t.length.to_string(),
                fmt_e(t.term),
            ];
            csv.row(&[head.to_vec(), tail.to_vec()].concat());
        }
    }
    Ok(csv.finish())
}

/// One row per (α, y, c).
pub fn eisenstein_table(p: &Prepared) -> Result<String> {
    let mut csv =
        Csv::new(&["alpha", "y", "class", "diff", "value_at_zero", "coeff_derivative", "b_phi", "b_phi_closed"]);
    let classes = enumerate_xi(&p.tower);
    let rows = grid(p)
        .par_iter()
        .map(|(alpha, y)| -> Result<Vec<Vec<String>>> {
            let total = b_phi(&p.tower, alpha, y)?;
            let closed = b_phi_closed(&p.tower, alpha, y)?;
            classes
                .iter()
                .map(|c| {
                    Ok(vec![
                        alpha.to_string(),
                        join_y(y),
                        c.to_string(),
                        diff_set(&p.tower, alpha, c).to_string(),
                        fmt_e(value_at_zero(&p.tower, alpha, y, c)?),
                        fmt_e(coeff_derivative_for_class(&p.tower, alpha, y, c)?),
                        fmt_e(total),
                        fmt_e(closed),
                    ])
                })
                .collect()
        })
        .collect::<Result<Vec<_>>>()?;
    for row in rows.into_iter().flatten() {
        csv.row(&row);
    }
    Ok(csv.finish())
}

/// `--out`, then the environment variable, then the default.
pub fn report_dir(cli: Option<&Path>) -> PathBuf {
    if let Some(dir) = cli {
        return dir.to_path_buf();
    }
    match std::env::var_os(REPORT_DIR_ENV) {
        Some(dir) if !dir.is_empty() => PathBuf::from(dir),
        _ => PathBuf::from(DEFAULT_REPORT_DIR),
    }
}

pub fn write_report(dir: &Path, name: &str, contents: &str) -> Result<PathBuf> {
    std::fs::create_dir_all(dir)?;
    let path = dir.join(name);
    std::fs::write(&path, contents)?;
    Ok(path)
}

#[derive(Clone, Debug)]
pub struct Check {
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
}

impl std::fmt::Display for Check {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let status = if self.pass { "pass" } else { "FAIL" };
        write!(f, "{status} {}: {}", self.name, self.detail)
    }
}

const SELFTEST_DELTAS: [i64; 3] = [-7, -11, -23];
const SELFTEST_YS: [f64; 3] = [0.5, 1.0, 5.0];

fn selftest_towers() -> Result<Vec<FieldTower>> {
    SELFTEST_DELTAS.iter().map(|&d| build_tower(&FieldConfig::imaginary_quadratic(d))).collect()
}

fn selftest_alphas(tower: &FieldTower) -> Result<Vec<ElementF>> {
    (1..=50).flat_map(|a| [a, -a]).map(|a| tower.element(a, 0)).collect()
}

/// The invariant suites, each reduced to one line.
pub fn selftest() -> Result<Vec<Check>> {
    let towers = selftest_towers()?;
    let mut checks = Vec::new();

    let mut mismatches = 0;
    for (t, &d) in towers.iter().zip(&SELFTEST_DELTAS) {
        for m in 1..=500u64 {
            let ideal = principal_ideal_of_int(t, m)?;
            if rho(t, &ideal) != oracle::ideals_of_norm(d, m) {
                mismatches += 1;
            }
        }
    }
    checks.push(Check {
        name: "rho_oracle",
        pass: mismatches == 0,
        detail: format!("{mismatches} mismatches over m <= 500 on 3 towers"),
    });

    let mut worst: f64 = 0.0;
    for i in 0..50 {
        let t = 0.1 * 500f64.powf(i as f64 / 49.0);
        worst = worst.max(relative_error(beta::beta1(t)?, oracle::beta1_quadrature(t)));
    }
    checks.push(Check {
        name: "beta1_oracle",
        pass: worst <= 1e-10,
        detail: format!("max rel err {} on 50 points in [0.1, 50]", fmt_e(worst)),
    });

    let mut bad = 0;
    for d in (2..=20).step_by(2) {
        for i in 0..d {
            let profile = order_profile(d, i)?;
            let antipodal = (0..d).all(|r| profile[r] + profile[(r + d / 2) % d] == 1);
            if !antipodal || profile != oracle::order_profile_recurrence(d, i) {
                bad += 1;
            }
        }
    }
    checks.push(Check {
        name: "order_profile",
        pass: bad == 0,
        detail: format!("{bad} bad profiles for even d <= 20"),
    });

    let mut xi_ok = true;
    for d in [-7, -15, -231] {
        let t = build_tower(&FieldConfig::imaginary_quadratic(d))?;
        let expected = 1usize << (t.r() - t.degree() - 1);
        xi_ok &= enumerate_xi(&t).len() == expected;
    }
    checks.push(Check {
        name: "xi_cardinality",
        pass: xi_ok,
        detail: "|Xi| = 2^(m-1) for 1, 2, 3 ramified primes".into(),
    });

    let (mut route_fail, mut identity_fail, mut nonzero_values, mut n) = (0, 0, 0, 0);
    let (mut eps_caught, mut sign_caught) = (false, false);
    for t in &towers {
        let classes = enumerate_xi(t);
        for alpha in selftest_alphas(t)? {
            for y in SELFTEST_YS {
                let y = [y];
                n += 1;
                let rec = identity_record(t, &alpha, &y, 1e-9)?;
                route_fail += usize::from(!agrees(rec.b_phi_sum_route, rec.b_phi_closed_route, 1e-9));
                identity_fail += usize::from(!agrees(rec.degree_total, rec.rhs, 1e-9));
                for c in &classes {
                    nonzero_values += usize::from(value_at_zero(t, &alpha, &y, c)?.to_bits() != 0);
                }
                let flipped = |st| epsilon(st).map(|e| 1 - e);
                let mutated = b_phi_closed_with(t, &alpha, &y, flipped, -1.0)?;
                eps_caught |= !agrees(mutated, rec.b_phi_sum_route, 1e-9);
                let wrong_sign = degree_from_b_phi(t, b_phi_closed_with(t, &alpha, &y, epsilon, 1.0)?);
                sign_caught |= !agrees(rec.degree_total, wrong_sign, 1e-9);
            }
        }
    }
    checks.push(Check {
        name: "two_route",
        pass: route_fail == 0,
        detail: format!("{route_fail} of {n} (alpha, y) points disagree"),
    });
    checks.push(Check {
        name: "identity",
        pass: identity_fail == 0,
        detail: format!("{identity_fail} of {n} (alpha, y) points fail"),
    });
    checks.push(Check {
        name: "value_at_zero",
        pass: nonzero_values == 0,
        detail: format!("{nonzero_values} nonzero central values"),
    });
    checks.push(Check {
        name: "mutation_epsilon",
        pass: eps_caught,
        detail: "flipped epsilon convention breaks the two-route equality".into(),
    });
    checks.push(Check {
        name: "mutation_sign",
        pass: sign_caught,
        detail: "flipped global sign breaks the identity".into(),
    });
    Ok(checks)
}

fn principal_ideal_of_int(t: &FieldTower, m: u64) -> Result<IdealF> {
    Ok(ideal::principal_ideal(&t.element(m as i128, 0)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn failing_record_sets_exit_code() {
        let cfg: RunConfig = "delta = -7\nalphas = 3; 5\n".parse().unwrap();
        let mut report = check_identity(&prepare(&cfg).unwrap()).unwrap();
        assert_eq!(exit_code(&report), EXIT_PASS);
        report.records[1].pass = false;
        report.summary.n_pass -= 1;
        assert_eq!(exit_code(&report), EXIT_IDENTITY_FAILURE);
    }

    #[test]
    fn agreement_rule() {
        assert!(agrees(0.0, 5e-13, 1e-9));
        assert!(agrees(1.0, 1.0 + 1e-10, 1e-9));
        assert!(!agrees(1.0, 1.0 + 1e-8, 1e-9));
        assert_eq!(relative_error(0.0, 0.0), 0.0);
    }
}
