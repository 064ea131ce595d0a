//! Exact checks of the operator identities and extraction of the critical twists.

mod checks;
mod report;

pub use checks::{
    check_abelian, check_closure, check_critical, check_delta, check_ft, check_h_module, check_innw,
    check_jordan_calculus, check_jordan_invariants, check_lemma_one, check_lemma_pi, check_lemma_two,
    check_lowest_weight, critical_values, expected_k_dim, lemma_pi_at, lemma_two_at, monomials_up_to,
    predicted_quadratic, LemmaTwo, VerifyError,
};
pub use report::{CheckResult, Report, Status};

use rayon::prelude::*;

use crate::jordan::JordanAlgebra;

/// Every check, in report order.
pub const CHECK_NAMES: &[&str] = &[
    "jordan-invariants",
    "jordan-calculus",
    "ft",
    "abelian",
    "closure",
    "lemma-one",
    "lemma-pi",
    "lemma-two",
    "critical",
    "innw",
    "delta",
    "h-module",
    "lowest-weight",
];

/// Expand `all`, `lemmas`, or a comma-separated list into check names.
pub fn parse_selection(s: &str) -> Result<Vec<&'static str>, String> {
    let mut out: Vec<&'static str> = Vec::new();
    for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let names: Vec<&'static str> = match part {
            "all" => CHECK_NAMES.to_vec(),
            "lemmas" => vec!["lemma-one", "lemma-pi", "lemma-two"],
            "jordan" => vec!["jordan-invariants", "jordan-calculus"],
            other => match CHECK_NAMES.iter().find(|n| **n == other) {
                Some(n) => vec![*n],
                None => return Err(format!("unknown check `{other}`; known: all, lemmas, {}", CHECK_NAMES.join(", "))),
            },
        };
        for n in names {
            if !out.contains(&n) {
                out.push(n);
            }
        }
    }
    if out.is_empty() {
        return Err("empty check selection".into());
    }
    out.sort_by_key(|n| CHECK_NAMES.iter().position(|m| m == n));
    Ok(out)
}

#[derive(Clone, Copy, Debug)]
pub struct SuiteOptions {
    pub seed: u64,
    pub parallel: bool,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions { seed: 0x5eed, parallel: true }
    }
}

pub fn run_check(j: &JordanAlgebra, name: &str, opts: &SuiteOptions) -> CheckResult {
    match name {
        "jordan-invariants" => check_jordan_invariants(j, opts.seed),
        "jordan-calculus" => check_jordan_calculus(j, opts.seed),
        "ft" => check_ft(j),
        "abelian" => check_abelian(j),
        "closure" => check_closure(j),
        "lemma-one" => check_lemma_one(j),
        "lemma-pi" => check_lemma_pi(j),
        "lemma-two" => check_lemma_two(j),
        "critical" => check_critical(j),
        "innw" => check_innw(j),
        "delta" => check_delta(j),
        "h-module" => check_h_module(j),
        "lowest-weight" => check_lowest_weight(j),
        other => CheckResult::run(other, || Err(format!("unknown check `{other}`"))),
    }
}

pub fn run_suite(j: &JordanAlgebra, selection: &str, opts: &SuiteOptions) -> Result<Report, String> {
    let names = parse_selection(selection)?;
    let checks: Vec<CheckResult> = if opts.parallel {
        names.par_iter().map(|n| run_check(j, n, opts)).collect()
    } else {
        names.iter().map(|n| run_check(j, n, opts)).collect()
    };
    Ok(Report::new(j.name(), selection, checks))
}
