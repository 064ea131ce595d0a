use thiserror::Error;

use crate::jordan::{invariant_checks, verify_jordan_calculus, JElem, JordanAlgebra, Kind};
use crate::rep::{
    act_on_h, at_lambda, d_norm, eta_minus, eta_plus, generic_lambda, k_span, pi_minus, pi_plus, span_of,
};
use crate::ring::{LambdaPoly, LocFn, Monomial, RingError, Scalar, SuperFn, ZPoly};
use crate::weyl::{fourier, DiffOp};

use super::CheckResult;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum VerifyError {
    #[error("y = {0} is not a primitive idempotent")]
    NotPrimitiveIdempotent(String),
    #[error("double commutator has order {0}, expected 0")]
    ResidualOrder(u32),
    #[error("function part is not a multiple of w·tr(y q⁻¹)²: {0}")]
    Division(String),
    #[error(transparent)]
    Ring(#[from] RingError),
}

type Outcome = Result<Option<String>, String>;

fn all_ok(failures: Vec<String>) -> Outcome {
    if failures.is_empty() {
        Ok(None)
    } else {
        let shown: Vec<&str> = failures.iter().take(3).map(String::as_str).collect();
        Err(format!("{} failure(s); {}", failures.len(), shown.join("; ")))
    }
}

fn residual(what: String, lhs: &DiffOp, rhs: &DiffOp) -> Option<String> {
    let diff = lhs.sub(rhs);
    (!diff.is_zero()).then(|| format!("{what}: residual {diff}"))
}

pub fn check_jordan_invariants(j: &JordanAlgebra, seed: u64) -> CheckResult {
    CheckResult::run("jordan-invariants", || {
        let checks = invariant_checks(j, seed);
        let failed: Vec<String> = checks
            .iter()
            .filter(|c| !c.passed())
            .map(|c| format!("{}: {}", c.name, c.witness.clone().unwrap_or_default()))
            .collect();
        all_ok(failed).map(|_| Some(format!("{} invariants", checks.len())))
    })
}

pub fn check_jordan_calculus(j: &JordanAlgebra, seed: u64) -> CheckResult {
    CheckResult::run("jordan-calculus", || {
        let report = verify_jordan_calculus(j, seed);
        let failed: Vec<String> = report
            .checks
            .iter()
            .filter(|c| !c.passed())
            .map(|c| format!("{}: {}", c.name, c.witness.clone().unwrap_or_default()))
            .collect();
        let note = report.checks.first().and_then(|c| c.witness.clone());
        all_ok(failed).map(|_| note)
    })
}

/// `fourier(−η^x) = π^x` on both sides, for every basis element.
pub fn check_ft(j: &JordanAlgebra) -> CheckResult {
    CheckResult::run("ft", || {
        let mut bad = Vec::new();
        for i in 0..j.n() {
            let b = j.basis(i);
            bad.extend(residual(format!("p+ b{i}"), &fourier(j, &eta_plus(j, &b).neg()), &pi_plus(j, &b)));
            bad.extend(residual(format!("p- b{i}"), &fourier(j, &eta_minus(j, &b).neg()), &pi_minus(j, &b)));
        }
        all_ok(bad)
    })
}

pub fn check_abelian(j: &JordanAlgebra) -> CheckResult {
    CheckResult::run("abelian", || {
        let n = j.n();
        let plus: Vec<DiffOp> = (0..n).map(|i| pi_plus(j, &j.basis(i))).collect();
        let minus: Vec<DiffOp> = (0..n).map(|i| pi_minus(j, &j.basis(i))).collect();
        let mut bad = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                for (side, ops) in [("p+", &plus), ("p-", &minus)] {
                    let c = ops[a].commutator(&ops[b]);
                    if !c.is_zero() {
                        bad.push(format!("{side} [b{a}, b{b}] = {c}"));
                    }
                }
            }
        }
        all_ok(bad)
    })
}

/// Dimension of `k` predicted by the algebra type.
pub fn expected_k_dim(kind: Kind) -> usize {
    match kind {
        Kind::Sym(r) => r * r,
        Kind::Full(r) => 2 * r * r - 1,
        Kind::Spin(p) => 1 + p * (p - 1) / 2,
    }
}

pub fn check_closure(j: &JordanAlgebra) -> CheckResult {
    CheckResult::run("closure", || {
        let lambda = generic_lambda();
        let k = k_span(j, &lambda);
        let expected = expected_k_dim(j.kind());
        let mut bad = Vec::new();
        if k.dim() != expected {
            bad.push(format!("dim k = {}, expected {expected}", k.dim()));
        }
        let n = j.n();
        let plus: Vec<DiffOp> = (0..n).map(|i| pi_plus(j, &j.basis(i))).collect();
        let minus: Vec<DiffOp> = (0..n).map(|i| at_lambda(&pi_minus(j, &j.basis(i)), &lambda)).collect();
        let plus_span = span_of(&plus);
        let minus_span = span_of(&minus);
        for (a, ka) in k.basis.iter().enumerate() {
            for i in 0..n {
                if !plus_span.contains(&ka.commutator(&plus[i]).vectorize(0)) {
                    bad.push(format!("[K{a}, p+ b{i}] leaves p+"));
                }
                if !minus_span.contains(&ka.commutator(&minus[i]).vectorize(0)) {
                    bad.push(format!("[K{a}, p- b{i}] leaves p-"));
                }
            }
            for (b, kb) in k.basis.iter().enumerate().skip(a + 1) {
                if !k.contains(&ka.commutator(kb)) {
                    bad.push(format!("[K{a}, K{b}] leaves k"));
                }
            }
        }
        all_ok(bad).map(|_| Some(format!("dim k = {}", k.dim())))
    })
}

/// `−w∂^y − 2m(λ−λ₀)·½ w tr(y q⁻¹)`.
fn lemma_one_rhs(j: &JordanAlgebra, y: &JElem<Scalar>) -> DiffOp {
    let ctx = j.ctx();
    let lead = DiffOp::w(ctx).compose(&DiffOp::directional(ctx, y.coords())).neg();
    // −m(λ − λ₀) = −mλ + mλ₀
    let factor = LambdaPoly::from_coeffs(vec![j.m() * &j.lambda_0(), -j.m().clone()]);
    let f = SuperFn::from_odd(j.tr_v_qinv(y)).scale_lambda(&factor);
    lead.add(&DiffOp::mul_fn(f))
}

pub fn check_lemma_one(j: &JordanAlgebra) -> CheckResult {
    CheckResult::run("lemma-one", || {
        let w = DiffOp::w(j.ctx());
        let l0 = j.lambda_0();
        let mut bad = Vec::new();
        for i in 0..j.n() {
            let y = j.basis(i);
            let lhs = pi_minus(j, &y).commutator(&w);
            bad.extend(residual(format!("y=b{i}"), &lhs, &lemma_one_rhs(j, &y)));
            let at_l0 = at_lambda(&lhs, &l0);
            let reduced = w.compose(&DiffOp::directional(j.ctx(), y.coords())).neg();
            bad.extend(residual(format!("y=b{i} at λ₀"), &at_l0, &reduced));
        }
        all_ok(bad)
    })
}

fn guard(j: &JordanAlgebra, y: &JElem<Scalar>) -> Result<(), VerifyError> {
    j.check_primitive_idempotent(y).map_err(|_| VerifyError::NotPrimitiveIdempotent(j.describe(y)))
}

/// `[π_λ^y, ∂^y] = (∂^y)²` at a primitive idempotent `y`.
pub fn lemma_pi_at(j: &JordanAlgebra, y: &JElem<Scalar>) -> Result<Option<String>, VerifyError> {
    guard(j, y)?;
    let d = DiffOp::directional(j.ctx(), y.coords());
    let lhs = pi_minus(j, y).commutator(&d);
    match residual("".into(), &lhs, &d.compose(&d)) {
        None => Ok(None),
        Some(r) => Err(VerifyError::Division(r)),
    }
}

pub fn check_lemma_pi(j: &JordanAlgebra) -> CheckResult {
    CheckResult::run("lemma-pi", || lemma_pi_at(j, &j.idempotent()).map_err(|e| e.to_string()))
}

/// Outcome of the double-commutator computation at an idempotent.
#[derive(Clone, Debug)]
pub struct LemmaTwo {
    /// `c(λ)` with `[π^y,[π^y,w]] = c(λ)·w·tr(y q⁻¹)²`.
    pub quadratic: LambdaPoly,
    /// `c(λ) = −m²(λ−λ₀)(λ−λ₀′)` exactly.
    pub matches_prediction: bool,
}

/// `−m²(λ−λ₀)(λ−λ₀′)`.
pub fn predicted_quadratic(j: &JordanAlgebra) -> LambdaPoly {
    let a = LambdaPoly::from_coeffs(vec![-j.lambda_0(), Scalar::one()]);
    let b = LambdaPoly::from_coeffs(vec![-j.lambda_0_prime(), Scalar::one()]);
    (&a * &b).scale(&-(j.m() * j.m()))
}

/// Compute `D = [π_λ^y, [π_λ^y, w]]` and divide out `w·tr(y q⁻¹)²`.
pub fn lemma_two_at(j: &JordanAlgebra, y: &JElem<Scalar>) -> Result<LemmaTwo, VerifyError> {
    guard(j, y)?;
    let ctx = j.ctx();
    let pi = pi_minus(j, y);
    let d = pi.commutator(&pi.commutator(&DiffOp::w(ctx)));
    // the vector-field part must vanish identically in λ
    if let Some(order) = d.order() {
        if order > 0 {
            return Err(VerifyError::ResidualOrder(order));
        }
    }
    let g = d.coeff(&Monomial::one(j.n()));
    if !g.even().is_zero() {
        return Err(VerifyError::Division("function part has an even component".into()));
    }
    let n_poly = g.odd().num();
    let k = g.odd().denom_exp();
    // t = tr(y∘adj q), so tr(y q⁻¹)² = t² / F²; compare N·F² with c·t²·F^k
    let t = j.tr_v_qinv(y);
    let t2 = t.num() * t.num();
    let lhs = n_poly * &ctx.norm_pow(2 * t.denom_exp());
    let basis_poly = &t2 * &ctx.norm_pow(k);
    let quadratic = if lhs.is_zero() {
        LambdaPoly::zero()
    } else {
        let (mono, lead) = basis_poly.leading().ok_or_else(|| VerifyError::Division("tr(y q⁻¹) vanishes".into()))?;
        let inv = lead.coeff(0).inv()?;
        lhs.coeff(mono).scale(&inv)
    };
    if basis_poly.scale_lambda(&quadratic) != lhs {
        let residue = LocFn::new(ctx, &lhs - &basis_poly.scale_lambda(&quadratic), k + 2);
        return Err(VerifyError::Division(format!("{:?}", residue.num().leading())));
    }
    let matches_prediction = quadratic == predicted_quadratic(j);
    Ok(LemmaTwo { quadratic, matches_prediction })
}

pub fn check_lemma_two(j: &JordanAlgebra) -> CheckResult {
    CheckResult::run("lemma-two", || {
        let y = j.idempotent();
        let res = lemma_two_at(j, &y).map_err(|e| e.to_string())?;
        if !res.matches_prediction {
            return Err(format!("c(λ) = {}, predicted {}", res.quadratic, predicted_quadratic(j)));
        }
        // D vanishes at both critical values
        let pi = pi_minus(j, &y);
        let d = pi.commutator(&pi.commutator(&DiffOp::w(j.ctx())));
        for l in [j.lambda_0(), j.lambda_0_prime()] {
            if !at_lambda(&d, &l).is_zero() {
                return Err(format!("D ≠ 0 at λ = {l}"));
            }
        }
        Ok(Some(format!("c(λ) = {}", res.quadratic)))
    })
}

/// Roots of the extracted quadratic at the canonical idempotent.
pub fn critical_values(j: &JordanAlgebra) -> Result<(Scalar, Scalar), VerifyError> {
    let res = lemma_two_at(j, &j.idempotent())?;
    Ok(res.quadratic.quadratic_roots()?)
}

pub fn check_critical(j: &JordanAlgebra) -> CheckResult {
    CheckResult::run("critical", || {
        let (a, b) = critical_values(j).map_err(|e| e.to_string())?;
        let text = format!("λ = {a}, {b}");
        if a == j.lambda_0() && b == j.lambda_0_prime() {
            Ok(Some(text))
        } else {
            Err(format!("{text}; expected {}, {}", j.lambda_0(), j.lambda_0_prime()))
        }
    })
}

/// `w π_{λ₀′}^x w⁻¹ = π_{λ₀}^x` on both sides.
pub fn check_innw(j: &JordanAlgebra) -> CheckResult {
    CheckResult::run("innw", || {
        let (l0, l0p) = (j.lambda_0(), j.lambda_0_prime());
        let mut bad = Vec::new();
        for i in 0..j.n() {
            let b = j.basis(i);
            let p = pi_plus(j, &b);
            bad.extend(residual(format!("p+ b{i}"), &p.inn_w(), &p));
            let m = pi_minus(j, &b);
            bad.extend(residual(format!("p- b{i}"), &at_lambda(&m, &l0p).inn_w(), &at_lambda(&m, &l0)));
        }
        all_ok(bad)
    })
}

pub fn check_delta(j: &JordanAlgebra) -> CheckResult {
    CheckResult::run("delta", || {
        let ctx = j.ctx();
        let flip = LambdaPoly::from_coeffs(vec![Scalar::one(), Scalar::from_int(-1)]);
        let l0 = j.lambda_0();
        let beta = |a: &DiffOp| at_lambda(a, &l0).delta().subst_lambda(&flip).inn_w();
        let mut bad = Vec::new();
        for i in 0..j.n() {
            let b = j.basis(i);
            for (side, op) in [("p+", pi_plus(j, &b)), ("p-", pi_minus(j, &b))] {
                bad.extend(residual(format!("δ {side} b{i}"), &op.delta(), &op.subst_lambda(&flip).neg()));
                let at_l0 = at_lambda(&op, &l0);
                bad.extend(residual(format!("β {side} b{i}"), &beta(&op), &at_l0.neg()));
            }
        }
        let w = DiffOp::w(ctx);
        let ir = Scalar::i_pow(j.r() as i64);
        let bw = w.delta().inn_w();
        bad.extend(residual("β(w)".into(), &bw, &w.scale(&ir)));
        let sign = Scalar::from_int(if j.r().is_multiple_of(2) { 1 } else { -1 });
        bad.extend(residual("β²(w)".into(), &bw.delta().inn_w(), &w.scale(&sign)));
        all_ok(bad)
    })
}

/// Monomials of total degree at most `d` in `n` variables.
pub fn monomials_up_to(n: usize, d: u16) -> Vec<Monomial> {
    let mut out = vec![Monomial::one(n)];
    let mut frontier = out.clone();
    for _ in 0..d {
        let mut next = Vec::new();
        for m in &frontier {
            // only raise indices at or after the last nonzero one, so each monomial appears once
            let start = m.exponents().iter().rposition(|&e| e > 0).unwrap_or(0);
            for i in start..n {
                next.push(m.with(i, m.get(i) + 1));
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

pub fn check_h_module(j: &JordanAlgebra) -> CheckResult {
    CheckResult::run("h-module", || {
        let ctx = j.ctx();
        let n = j.n();
        let l0 = j.lambda_0();
        let mut bad = Vec::new();
        let monos = monomials_up_to(n, 3);
        for i in 0..n {
            let pi = at_lambda(&pi_minus(j, &j.basis(i)), &l0);
            for m in &monos {
                let h = SuperFn::w(ctx).mul_loc(&LocFn::from_poly(ctx, ZPoly::monomial(m.clone(), LambdaPoly::one())));
                let (_, member) = act_on_h(&pi, &h);
                if !member {
                    bad.push(format!("π(b{i}) w·{m:?} leaves H"));
                }
            }
        }
        // away from λ₀ some π^y(w·P) with deg P ≤ 1 picks up F⁻¹
        let generic = generic_lambda();
        let probes: Vec<SuperFn> =
            std::iter::once(SuperFn::w(ctx)).chain((0..n).map(|k| SuperFn::var(ctx, k).mul_w())).collect();
        let leaks = (0..n).any(|i| {
            let pi = at_lambda(&pi_minus(j, &j.basis(i)), &generic);
            probes.iter().any(|h| !act_on_h(&pi, h).1)
        });
        if !leaks {
            bad.push(format!("no F⁻¹ term at λ = {generic}"));
        }
        all_ok(bad).map(|_| Some(format!("{} monomials per generator", monos.len())))
    })
}

pub fn check_lowest_weight(j: &JordanAlgebra) -> CheckResult {
    CheckResult::run("lowest-weight", || {
        let ctx = j.ctx();
        let l0 = j.lambda_0();
        let t = DiffOp::w(ctx).compose(&d_norm(j));
        let mut bad = Vec::new();
        for i in 0..j.n() {
            let pi = at_lambda(&pi_minus(j, &j.basis(i)), &l0);
            if !pi.apply(&SuperFn::one(ctx)).is_zero() {
                bad.push(format!("π(b{i})·1 ≠ 0"));
            }
            if !pi.apply(&SuperFn::w(ctx)).is_zero() {
                bad.push(format!("π(b{i})·w ≠ 0"));
            }
            let c = pi.commutator(&t);
            if !c.is_zero() {
                bad.push(format!("[π(b{i}), w∂^F] = {c}"));
            }
        }
        all_ok(bad)
    })
}
