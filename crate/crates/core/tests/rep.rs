use twistop::jordan::{JElem, JordanAlgebra};
use twistop::rep::{
    act_on_h, at_lambda, eta_minus, eta_plus, generic_lambda, k_span, pi_minus, pi_plus, show, OpSelector,
};
use twistop::ring::{LambdaPoly, LocFn, Monomial, Scalar, SuperFn, ZPoly};
use twistop::weyl::DiffOp;

fn s(v: i64) -> Scalar {
    Scalar::from_int(v)
}

/// `(a₀, a)∘(b₀, b) = (a₀b₀ + a·b, a₀b + b₀a)`, written out by hand.
fn spin_mul(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    let p = a.len();
    let mut out = vec![Scalar::zero(); p];
    out[0] = (0..p).fold(Scalar::zero(), |acc, i| &acc + &(&a[i] * &b[i]));
    for i in 1..p {
        out[i] = &(&a[0] * &b[i]) + &(&b[0] * &a[i]);
    }
    out
}

fn spin_triple(a: &[Scalar], b: &[Scalar], c: &[Scalar]) -> Vec<Scalar> {
    let ab_c = spin_mul(&spin_mul(a, b), c);
    let cb_a = spin_mul(&spin_mul(c, b), a);
    let ac_b = spin_mul(&spin_mul(a, c), b);
    (0..a.len()).map(|i| &(&ab_c[i] + &cb_a[i]) - &ac_b[i]).collect()
}

#[test]
fn spin4_idempotent_operator_matches_expansion() {
    let p = 4;
    let j = JordanAlgebra::make_spin(p).unwrap();
    let ctx = j.ctx();
    let half = Scalar::frac(1, 2);
    let y: Vec<Scalar> = vec![half.clone(), half.clone(), Scalar::zero(), Scalar::zero()];
    // tr(bᵢ∘bⱼ) = 2δᵢⱼ, so bⁱ = ½bᵢ and tr(x∘q) = 2 Σ xᵢzᵢ
    let dual = |i: usize| (0..p).map(|k| if k == i { half.clone() } else { Scalar::zero() }).collect::<Vec<_>>();
    let form = |x: &[Scalar]| ZPoly::linear(&x.iter().map(|c| c * &s(2)).collect::<Vec<_>>());
    let mut expected = DiffOp::zero(ctx);
    for i in 0..p {
        for k in 0..p {
            let t = spin_triple(&dual(i), &y, &dual(k));
            let coef = form(&t).scale(&s(-1));
            expected.add_term(Monomial::var(p, i).mul(&Monomial::var(p, k)), SuperFn::from_poly(ctx, coef));
        }
    }
    // m = p/2 = 2
    let two_m_lambda = LambdaPoly::lambda().scale(&s(-4));
    expected = expected.add(&DiffOp::directional(ctx, &y).scale_lambda(&two_m_lambda));
    assert_eq!(pi_minus(&j, &JElem::new(y)), expected);
    assert_eq!(j.idempotent(), JElem::new(vec![half.clone(), half, Scalar::zero(), Scalar::zero()]));
}

#[test]
fn rank_one_operators() {
    let j = JordanAlgebra::make_full(1).unwrap();
    let ctx = j.ctx();
    let e = j.identity();
    assert_eq!(pi_plus(&j, &e), DiffOp::mul_fn(SuperFn::var(ctx, 0)));
    let expected = DiffOp::parse(ctx, "(-1)*z * d1^2 + (-2)(L) * d1").unwrap();
    assert_eq!(pi_minus(&j, &e), expected);
    assert!(pi_plus(&j, &JElem::zero(1)).is_zero());
    assert_eq!(show(&j, &"p-:1".parse::<OpSelector>().unwrap(), None).unwrap(), "(-1)*z * d1^2 + (-2)(L) * d1");
    assert_eq!(show(&j, &"eta+:1".parse::<OpSelector>().unwrap(), None).unwrap(), "(-1) * du1");
    assert_eq!(
        show(&j, &"eta-:1".parse::<OpSelector>().unwrap(), Some(&Scalar::frac(1, 4))).unwrap(),
        "(1)*u^2 * du1 + (1/2)*u"
    );
}

#[test]
fn full2_multiplication_operator() {
    // tr(E₁₂∘q) picks the E₂₁ coordinate
    let j = JordanAlgebra::make_full(2).unwrap();
    assert_eq!(j.labels()[2], "E21");
    assert_eq!(pi_plus(&j, &j.basis(1)), DiffOp::mul_fn(SuperFn::var(j.ctx(), 2)));
}

#[test]
fn pi_minus_kills_constants() {
    for sel in ["full:1", "full:2", "sym:2", "sym:3", "spin:3", "spin:5"] {
        let j = JordanAlgebra::from_selector(sel).unwrap();
        let one = SuperFn::one(j.ctx());
        for i in 0..j.n() {
            assert!(pi_minus(&j, &j.basis(i)).apply(&one).is_zero(), "{sel} b{i}");
        }
    }
}

#[test]
fn eta_field_at_identity_is_y() {
    for sel in ["full:2", "sym:2", "spin:4"] {
        let j = JordanAlgebra::from_selector(sel).unwrap();
        let e = j.identity();
        for i in 0..j.n() {
            let y = j.basis(i);
            let op = eta_minus(&j, &y);
            for k in 0..j.n() {
                let ck = op.coeff(&Monomial::var(j.n(), k)).eval(e.coords());
                assert_eq!(ck, LambdaPoly::constant(y.coords()[k].clone()), "{sel} y={i} k={k}");
            }
        }
        assert_eq!(eta_plus(&j, &e).order(), Some(1));
    }
}

#[test]
fn k_dimensions() {
    let lambda = generic_lambda();
    for (sel, dim) in [("full:1", 1), ("full:2", 7), ("sym:2", 4), ("spin:3", 4), ("spin:4", 7)] {
        let j = JordanAlgebra::from_selector(sel).unwrap();
        assert_eq!(k_span(&j, &lambda).dim(), dim, "{sel}");
    }
}

#[test]
fn rank_one_k_is_spanned_by_h() {
    let j = JordanAlgebra::make_full(1).unwrap();
    let h = pi_plus(&j, &j.identity()).commutator(&pi_minus(&j, &j.identity()));
    assert_eq!(h, DiffOp::parse(j.ctx(), "(2)*z * d1 + (2)(L)").unwrap());
    let lambda = generic_lambda();
    assert!(k_span(&j, &lambda).contains(&at_lambda(&h, &lambda)));
}

#[test]
fn h_module_membership() {
    let j = JordanAlgebra::make_full(2).unwrap();
    let ctx = j.ctx();
    let w = SuperFn::w(ctx);
    let wz = w.mul_loc(&LocFn::from_poly(ctx, ZPoly::var(4, 0)));
    let y = j.basis(0);
    let at0 = at_lambda(&pi_minus(&j, &y), &j.lambda_0());
    let (out, member) = act_on_h(&at0, &w);
    assert!(out.is_zero() && member);
    let (_, member) = act_on_h(&DiffOp::w(ctx), &SuperFn::var(ctx, 0));
    assert!(member);
    assert!(act_on_h(&at0, &wz).1);
    let generic = at_lambda(&pi_minus(&j, &y), &generic_lambda());
    let (out, member) = act_on_h(&generic, &wz);
    assert!(!member);
    assert!(out.max_denom_exp() >= 1);
}
