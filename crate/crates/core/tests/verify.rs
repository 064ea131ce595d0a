use twistop::jordan::{JElem, JordanAlgebra};
use twistop::ring::{LambdaPoly, Scalar};
use twistop::verify::{
    check_jordan_invariants, check_lemma_two, critical_values, lemma_pi_at, lemma_two_at, parse_selection, run_suite,
    Report, SuiteOptions, VerifyError, CHECK_NAMES,
};

/// `1/2 ∓ 1/(4m)` with `m = n / r`.
fn oracle(j: &JordanAlgebra) -> (Scalar, Scalar) {
    let m = Scalar::frac(j.n() as i64, j.r() as i64);
    let d = (Scalar::from_int(4) * m).inv().unwrap();
    let half = Scalar::frac(1, 2);
    (&half - &d, &half + &d)
}

#[test]
fn critical_values_match_closed_form() {
    for sel in ["full:1", "full:2", "sym:1", "sym:2", "sym:3", "spin:2", "spin:3", "spin:4", "spin:5", "spin:6"] {
        let j = JordanAlgebra::from_selector(sel).unwrap();
        assert_eq!(critical_values(&j).unwrap(), oracle(&j), "{sel}");
    }
    let j = JordanAlgebra::make_full(1).unwrap();
    assert_eq!(oracle(&j), (Scalar::frac(1, 4), Scalar::frac(3, 4)));
}

#[test]
fn rank_one_quadratic() {
    let j = JordanAlgebra::make_full(1).unwrap();
    let res = lemma_two_at(&j, &j.identity()).unwrap();
    let expected = LambdaPoly::from_coeffs(vec![Scalar::frac(-3, 16), Scalar::one(), Scalar::from_int(-1)]);
    assert_eq!(res.quadratic, expected);
    assert!(res.matches_prediction);
}

#[test]
fn suites_pass() {
    let opts = SuiteOptions { seed: 3, parallel: true };
    for sel in ["full:1", "full:2", "sym:2", "spin:3", "spin:4", "spin:5"] {
        let j = JordanAlgebra::from_selector(sel).unwrap();
        let report = run_suite(&j, "all", &opts).unwrap();
        let bad: Vec<_> = report.checks.iter().filter(|c| !c.passed()).map(|c| (&c.name, &c.witness)).collect();
        assert!(report.passed(), "{sel}: {bad:?}");
        assert_eq!(report.checks.len(), CHECK_NAMES.len());
    }
}

#[test]
fn report_order_is_independent_of_parallelism() {
    let j = JordanAlgebra::make_spin(3).unwrap();
    let seq = run_suite(&j, "all", &SuiteOptions { seed: 1, parallel: false }).unwrap();
    let par = run_suite(&j, "all", &SuiteOptions { seed: 1, parallel: true }).unwrap();
    let names = |r: &Report| r.checks.iter().map(|c| (c.name.clone(), c.status, c.witness.clone())).collect::<Vec<_>>();
    assert_eq!(names(&seq), names(&par));
}

#[test]
fn report_json_round_trip() {
    let j = JordanAlgebra::make_full(1).unwrap();
    let report = run_suite(&j, "critical,lemmas", &SuiteOptions::default()).unwrap();
    let back: Report = serde_json::from_str(&report.to_json()).unwrap();
    assert_eq!(back, report);
    let v: serde_json::Value = serde_json::from_str(&report.to_json()).unwrap();
    assert_eq!(v["overall"], "pass");
    assert_eq!(v["checks"][0]["name"], "lemma-one");
    assert!(report.to_text().contains("λ = 1/4, 3/4"));
}

#[test]
fn selections() {
    assert_eq!(parse_selection("lemmas").unwrap(), vec!["lemma-one", "lemma-pi", "lemma-two"]);
    assert_eq!(parse_selection("critical,ft,critical").unwrap(), vec!["ft", "critical"]);
    assert_eq!(parse_selection("all").unwrap().len(), CHECK_NAMES.len());
    assert!(parse_selection("bogus").is_err());
    assert!(parse_selection("").is_err());
}

#[test]
fn non_idempotent_is_rejected() {
    let j = JordanAlgebra::make_full(2).unwrap();
    let not_idem = JElem::new(vec![Scalar::from_int(2), Scalar::zero(), Scalar::zero(), Scalar::zero()]);
    assert!(matches!(lemma_pi_at(&j, &not_idem), Err(VerifyError::NotPrimitiveIdempotent(_))));
    assert!(matches!(lemma_two_at(&j, &not_idem), Err(VerifyError::NotPrimitiveIdempotent(_))));
    // the identity is idempotent but not primitive once r > 1
    assert!(lemma_two_at(&j, &j.identity()).is_err());
}

#[test]
fn wrong_m_moves_the_roots() {
    let j = JordanAlgebra::make_spin(4).unwrap();
    let bent = j.with_m_override(Scalar::from_int(3));
    let roots = critical_values(&bent).unwrap();
    assert_ne!(roots, oracle(&j));
    let inv = check_jordan_invariants(&bent, 5);
    assert!(!inv.passed());
    assert!(inv.witness.as_deref().is_some_and(|w| !w.is_empty()));
}

#[test]
fn perturbed_constant_breaks_the_suite() {
    let j = JordanAlgebra::make_full(2).unwrap().with_perturbed_constant(0, 1, 1, Scalar::frac(1, 5));
    let report = run_suite(&j, "jordan-invariants", &SuiteOptions::default()).unwrap();
    assert!(!report.passed());
    let c = &report.checks[0];
    assert!(c.witness.as_deref().is_some_and(|w| !w.is_empty()));
    assert!(check_lemma_two(&JordanAlgebra::make_full(2).unwrap()).passed());
}
