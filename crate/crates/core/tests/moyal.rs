use std::collections::BTreeMap;

use proptest::prelude::*;
use twistop::moyal::{
    bracket, bridge_check, c_component, circle, dequantize, pairing, pairing_table, run_moyal_suite, supertrace,
    symmetrize, MoyalError, PolyZX, WOp,
};
use twistop::ring::Scalar;

/// Apply `op` to a polynomial in `w`, given as exponent → coefficient.
fn act(op: &WOp, f: &BTreeMap<u32, Scalar>) -> BTreeMap<u32, Scalar> {
    let mut out: BTreeMap<u32, Scalar> = BTreeMap::new();
    for (&(a, b), c) in op.terms() {
        for (&k, v) in f {
            if k < b {
                continue;
            }
            let fall = (0..b).fold(Scalar::one(), |acc, i| &acc * &Scalar::from_int((k - i) as i64));
            let e = out.entry(k - b + a).or_default();
            *e += &(&(c * v) * &fall);
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

fn wop() -> impl Strategy<Value = WOp> {
    prop::collection::vec((0u32..4, 0u32..4, -3i64..=3), 1..4).prop_map(|terms| {
        terms.into_iter().fold(WOp::zero(), |acc, (a, b, c)| acc.add(&WOp::term(a, b, Scalar::from_int(c))))
    })
}

fn poly_zx(max: u32) -> impl Strategy<Value = PolyZX> {
    prop::collection::vec((0..=max, 0..=max, -3i64..=3, 1i64..=3), 1..4).prop_map(|terms| {
        terms.into_iter().fold(PolyZX::zero(), |acc, (a, b, n, d)| acc.add(&PolyZX::term(a, b, Scalar::frac(n, d))))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn weyl_product_is_composition(a in wop(), b in wop(), k in 0u32..8) {
        let f: BTreeMap<u32, Scalar> = [(k, Scalar::one()), (k + 1, Scalar::from_int(2))].into_iter().collect();
        prop_assert_eq!(act(&a.mul(&b), &f), act(&a, &act(&b, &f)));
    }

    #[test]
    fn quantization_round_trip(p in poly_zx(4)) {
        prop_assert_eq!(dequantize(&symmetrize(&p)), p);
    }

    #[test]
    fn circle_is_associative(a in poly_zx(2), b in poly_zx(2), c in poly_zx(2)) {
        prop_assert_eq!(circle(&circle(&a, &b), &c), circle(&a, &circle(&b, &c)));
    }

    #[test]
    fn unit_and_linearity(a in poly_zx(3), b in poly_zx(3), c in poly_zx(3)) {
        prop_assert_eq!(circle(&PolyZX::one(), &a), a.clone());
        prop_assert_eq!(circle(&a, &b.add(&c)), circle(&a, &b).add(&circle(&a, &c)));
    }

    #[test]
    fn bracket_is_antisymmetric(a in poly_zx(3), b in poly_zx(3)) {
        prop_assert_eq!(bracket(&a, &b), bracket(&b, &a).scale(&Scalar::from_int(-1)));
    }
}

#[test]
fn quantization_of_generators() {
    assert_eq!(symmetrize(&PolyZX::monomial(2, 0)), WOp::term(2, 0, Scalar::one()));
    assert_eq!(
        symmetrize(&PolyZX::monomial(1, 1)),
        WOp::term(1, 1, Scalar::one()).add(&WOp::term(0, 0, Scalar::frac(1, 2)))
    );
    assert_eq!(symmetrize(&PolyZX::monomial(0, 2)), WOp::term(0, 2, Scalar::one()));
    assert_eq!(dequantize(&WOp::term(0, 0, Scalar::one())), PolyZX::one());
}

#[test]
fn basic_products() {
    let (z, x) = (PolyZX::zeta(), PolyZX::xi());
    assert_eq!(circle(&x, &z).sub(&circle(&z, &x)), PolyZX::one());
    assert_eq!(bracket(&x, &z), PolyZX::one());
    assert_eq!(circle(&z, &x), PolyZX::monomial(1, 1).add(&PolyZX::term(0, 0, Scalar::frac(-1, 2))));
    assert_eq!(supertrace(&PolyZX::one()), Scalar::one());
    assert_eq!(pairing(&z, &z), Scalar::zero());
}

#[test]
fn pairing_values() {
    for p in 0..=6u32 {
        let fact: i64 = (1..=p as i64).product();
        let expected = Scalar::frac(fact, 1 << p);
        assert_eq!(pairing(&PolyZX::monomial(0, p), &PolyZX::monomial(p, 0)), expected, "p = {p}");
    }
    let rows = pairing_table(4);
    assert_eq!(rows.len(), 25);
    assert!(rows.contains(&"Q(ξ³,ζ³) = 3/4".to_string()));
    assert!(rows.contains(&"Q(1,1) = 1".to_string()));
}

#[test]
fn components_reject_mixed_degrees() {
    let mixed = PolyZX::one().add(&PolyZX::zeta());
    assert_eq!(c_component(&mixed, &PolyZX::xi(), 0), Err(MoyalError::NotHomogeneous));
    let c2 = c_component(&PolyZX::monomial(2, 0), &PolyZX::monomial(0, 2), 2).unwrap();
    assert_eq!(c2, PolyZX::term(0, 0, Scalar::frac(1, 2)));
}

#[test]
fn rank_one_bridge() {
    assert!(bridge_check().passed());
}

#[test]
fn suite_passes() {
    let report = run_moyal_suite();
    let bad: Vec<_> = report.checks.iter().filter(|c| !c.passed()).map(|c| (&c.name, &c.witness)).collect();
    assert!(report.passed(), "{bad:?}");
    assert!(report.checks.len() >= 12);
}
