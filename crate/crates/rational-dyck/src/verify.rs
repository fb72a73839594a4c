//! The cross-check suite: formulas against the brute-force oracle, the
//! identity family, and the bijection round-trip, packaged so the CLI and
//! the test suite share one implementation.

use std::collections::BTreeMap;

use num::bigint::BigInt;

use crate::bell::{rat, Rational};
use crate::bijection::{from_colored, to_colored};
use crate::oracle;
use crate::sequences::{
    f_from_phi, f_from_theta, f_n, phi_bizley, phi_from_theta, psi_identities, psi_n, r_nk,
    theta_n, theta_seq,
};
use crate::series::{duchon_check, gf_relations_check};
use crate::words::Slope;

#[derive(Debug, Clone)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone)]
pub struct VerifyConfig {
    pub slopes: Vec<Slope>,
    pub n_max: usize,
    pub budget: u64,
    /// Negative control: perturb the theta sequence fed to the Duchon
    /// check. A correct implementation must then fail that check.
    pub perturb_theta: bool,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            slopes: default_slopes(),
            n_max: 8,
            budget: oracle::DEFAULT_BUDGET,
            perturb_theta: false,
        }
    }
}

pub fn default_slopes() -> Vec<Slope> {
    [(1u64, 1u64), (1, 2), (1, 3), (2, 3), (2, 5), (3, 4)]
        .iter()
        .map(|&(alpha, beta)| Slope::new(alpha, beta).expect("coprime"))
        .collect()
}

fn push(results: &mut Vec<CheckResult>, name: String, passed: bool, detail: String) {
    results.push(CheckResult {
        name,
        passed,
        detail,
    });
}

/// Runs the whole suite. Every check is exact; a failed check carries a
/// short mismatch description.
pub fn run(config: &VerifyConfig) -> Vec<CheckResult> {
    let mut results = Vec::new();
    for &slope in &config.slopes {
        check_oracle_vs_formula(slope, config, &mut results);
        check_identities(slope, config.n_max, config.perturb_theta, &mut results);
        check_bijection(slope, config, &mut results);
    }
    results
}

fn check_oracle_vs_formula(slope: Slope, config: &VerifyConfig, results: &mut Vec<CheckResult>) {
    for n in 1..=config.n_max {
        let report = match oracle::report(slope, n, config.budget) {
            Ok(r) => r,
            Err(_) => break,
        };
        let theta = theta_seq(slope, n).expect("theta computable");
        let phi = phi_bizley(slope, n).expect("phi computable");
        let th = theta_n(slope, n).expect("theta computable");
        let ps = psi_n(slope, n).expect("psi computable");
        let mut formula_hist: BTreeMap<usize, u64> = BTreeMap::new();
        for k in 1..=n {
            let v = r_nk(slope, n, k, &theta).expect("r computable");
            let count: u64 = v.to_string().parse().unwrap_or(u64::MAX);
            if count > 0 {
                formula_hist.insert(k, count);
            }
        }
        let ok = BigInt::from(report.total) == phi
            && BigInt::from(report.factor_free) == th
            && BigInt::from(report.strongly_below) == ps
            && report.rl_histogram == formula_hist;
        push(
            results,
            format!("oracle-vs-formula slope {slope} n={n}"),
            ok,
            format!(
                "oracle total={} ff={} sb={} hist={:?}; formula phi={} theta={} psi={}",
                report.total,
                report.factor_free,
                report.strongly_below,
                report.rl_histogram,
                phi,
                th,
                ps
            ),
        );
    }
}

fn check_identities(slope: Slope, n_max: usize, perturb: bool, results: &mut Vec<CheckResult>) {
    let theta = theta_seq(slope, n_max).expect("theta computable");
    let phi: Vec<Rational> = (1..=n_max)
        .map(|n| Rational::from_integer(phi_bizley(slope, n).expect("phi computable")))
        .collect();

    let mut bizley_eq_theta_form = true;
    let mut f_recovered = true;
    let mut psi_ok = true;
    let mut duchon_ok = true;
    for n in 1..=n_max {
        if phi_from_theta(slope, n, &theta).expect("computable")
            != phi_bizley(slope, n).expect("computable")
        {
            bizley_eq_theta_form = false;
        }
        let expected_f = f_n(slope, n);
        if f_from_phi(n, &phi).expect("computable") != expected_f
            || f_from_theta(slope, n, &theta).expect("computable") != expected_f
        {
            f_recovered = false;
        }
        if !psi_identities(slope, n).expect("computable").all_ok() {
            psi_ok = false;
        }
        let mut duchon_theta = theta.clone();
        if perturb {
            let last = duchon_theta.len() - 1;
            duchon_theta[last] += rat(1);
        }
        let (lhs, rhs) = duchon_check(slope, n, &duchon_theta).expect("computable");
        if lhs != rhs {
            duchon_ok = false;
        }
    }
    push(
        results,
        format!("identity phi(Bizley) == phi(theta) slope {slope}"),
        bizley_eq_theta_form,
        format!("n <= {n_max}"),
    );
    push(
        results,
        format!("identity f recovered from phi and theta slope {slope}"),
        f_recovered,
        format!("n <= {n_max}"),
    );
    push(
        results,
        format!("identity psi family (f, invert, theta) slope {slope}"),
        psi_ok,
        format!("n <= {n_max}"),
    );
    push(
        results,
        format!("identity Duchon coefficient extraction slope {slope}"),
        duchon_ok,
        format!(
            "n <= {n_max}{}",
            if perturb { ", theta perturbed" } else { "" }
        ),
    );
    let gf = gf_relations_check(slope, n_max.min(6)).expect("computable");
    push(
        results,
        format!("generating-function relations slope {slope}"),
        gf,
        format!("order {}", n_max.min(6)),
    );
}

fn check_bijection(slope: Slope, config: &VerifyConfig, results: &mut Vec<CheckResult>) {
    // Exhaustive round-trip on small sizes only; the oracle budget bounds
    // the work.
    let bijection_budget = config.budget.min(100_000);
    for n in 1..=config.n_max {
        if oracle::report(slope, n, bijection_budget).is_err() {
            break;
        }
        let mut ok = true;
        let mut images = std::collections::HashSet::new();
        let mut count = 0u64;
        oracle::for_each_word(slope, n, &mut |w| {
            count += 1;
            let path = to_colored(w).expect("valid word maps");
            if from_colored(&path).expect("valid path inverts") != *w {
                ok = false;
            }
            if path.peak_count() != w.reducibility_level() {
                ok = false;
            }
            if !images.insert(path.to_json()) {
                ok = false;
            }
        });
        let phi = phi_bizley(slope, n).expect("computable");
        let ok = ok && BigInt::from(images.len() as u64) == phi && BigInt::from(count) == phi;
        push(
            results,
            format!("bijection round-trip slope {slope} n={n}"),
            ok,
            format!("{count} words, {} distinct images", images.len()),
        );
    }
}
