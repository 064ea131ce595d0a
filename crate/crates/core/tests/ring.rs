use std::sync::Arc;

use proptest::prelude::*;
use twistop::ring::{
    format_superfn_terms, parse_superfn, Grade, LambdaPoly, LocFn, Monomial, RingCtx, Scalar, SuperFn, ZPoly,
};

fn det2() -> Arc<RingCtx> {
    let z = |i| ZPoly::var(4, i);
    RingCtx::new(4, 2, &(&z(0) * &z(3)) - &(&z(1) * &z(2)))
}

fn poly(n: usize, max_exp: u16) -> impl Strategy<Value = ZPoly> {
    let term = (prop::collection::vec(0..=max_exp, n), -4i64..=4, -2i64..=2);
    prop::collection::vec(term, 0..5).prop_map(move |terms| {
        let mut p = ZPoly::zero(n);
        for (exps, c0, c1) in terms {
            let lp = LambdaPoly::from_coeffs(vec![Scalar::from_int(c0), Scalar::from_int(c1)]);
            p.add_term(Monomial::from_exponents(&exps), lp);
        }
        p
    })
}

fn superfn(ctx: Arc<RingCtx>) -> impl Strategy<Value = SuperFn> {
    let n = ctx.n();
    (poly(n, 2), 0u32..3, poly(n, 2), 0u32..3)
        .prop_map(move |(a, k, b, l)| SuperFn::from_parts(LocFn::new(&ctx, a, k), LocFn::new(&ctx, b, l)).unwrap())
}

/// `c · z^μ · w^ε / F^k`, homogeneous by construction.
fn homogeneous(ctx: Arc<RingCtx>) -> impl Strategy<Value = SuperFn> {
    let n = ctx.n();
    (prop::collection::vec(0u16..3, n), 1i64..5, any::<bool>(), 0u32..3).prop_map(move |(exps, c, odd, k)| {
        let num = ZPoly::monomial(Monomial::from_exponents(&exps), LambdaPoly::constant(Scalar::from_int(c)));
        let loc = LocFn::new(&ctx, num, k);
        if odd {
            SuperFn::from_odd(loc)
        } else {
            SuperFn::from_even(loc)
        }
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn partials_commute(f in superfn(det2()), i in 0usize..4, j in 0usize..4) {
        prop_assert_eq!(f.derive(i).derive(j), f.derive(j).derive(i));
    }

    #[test]
    fn leibniz_rule(f in superfn(det2()), g in superfn(det2()), i in 0usize..4) {
        let lhs = (&f * &g).derive(i);
        let rhs = &(&f.derive(i) * &g) + &(&f * &g.derive(i));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn locfn_representation_is_unique(p in poly(4, 2), a in 0u32..3, k in 0u32..3) {
        let ctx = det2();
        let padded = &p * &ctx.norm_pow(a);
        let x = LocFn::new(&ctx, padded, k + a);
        let y = LocFn::new(&ctx, p, k);
        prop_assert_eq!(x.denom_exp(), y.denom_exp());
        prop_assert_eq!(x, y);
    }

    #[test]
    fn ring_laws(a in poly(3, 2), b in poly(3, 2), c in poly(3, 2)) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn grade_is_additive(f in homogeneous(det2()), g in homogeneous(det2())) {
        let gf = f.grade().unwrap();
        let gg = g.grade().unwrap();
        prop_assert_eq!((&f * &g).grade().unwrap(), gf + gg);
    }

    #[test]
    fn text_round_trip(f in superfn(det2())) {
        let ctx = det2();
        let text = format_superfn_terms(&f);
        prop_assert_eq!(parse_superfn(&ctx, &text).unwrap(), f);
    }

    #[test]
    fn evaluation_is_a_homomorphism(f in superfn(det2()), g in superfn(det2())) {
        // F(3, 1, 0, 3) = 9, so w = 3 is a consistent value
        let point: Vec<Scalar> = [3, 1, 0, 3].iter().map(|&v| Scalar::from_int(v)).collect();
        let w = Scalar::from_int(3);
        let fg = (&f * &g).eval(&point, &w).unwrap();
        prop_assert_eq!(fg, &f.eval(&point, &w).unwrap() * &g.eval(&point, &w).unwrap());
    }
}

#[test]
fn w_squared_and_gradient() {
    let ctx = det2();
    let w = SuperFn::w(&ctx);
    assert_eq!(&w * &w, SuperFn::norm(&ctx));
    for i in 0..4 {
        // 2 w ∂ᵢw = ∂ᵢF
        let lhs = (&w * &w.derive(i)).scale(&Scalar::from_int(2));
        assert_eq!(lhs, SuperFn::from_poly(&ctx, ctx.norm().derive(i)));
    }
    assert_eq!(&w * &SuperFn::w_inv(&ctx), SuperFn::one(&ctx));
}

#[test]
fn grades_of_generators() {
    let ctx = det2();
    assert_eq!(SuperFn::var(&ctx, 0).grade().unwrap(), Grade::from_int(1));
    assert_eq!(SuperFn::w(&ctx).grade().unwrap(), Grade::from_int(1));
    assert_eq!(SuperFn::norm_inv(&ctx).grade().unwrap(), Grade::from_int(-2));
    assert_eq!(SuperFn::zero(&ctx).grade().unwrap(), Grade::NegInfinity);
    let rank_one = RingCtx::new(1, 1, ZPoly::var(1, 0));
    assert_eq!(SuperFn::w(&rank_one).grade().unwrap().to_string(), "1/2");
    let mixed = &SuperFn::one(&ctx) + &SuperFn::var(&ctx, 1);
    assert!(mixed.grade().is_err());
}
