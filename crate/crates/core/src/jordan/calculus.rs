//! Invariant suite and the derivative identities for `F`, `w` and `tr(v q⁻¹)`.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{JElem, JordanAlgebra};
use crate::ring::{LocFn, Scalar, SuperFn, ZPoly};
use crate::verify::{CheckResult, Report};

/// Above this dimension the derivative identities are checked at sample points.
const SYMBOLIC_MAX_N: usize = 6;
const SAMPLES: usize = 20;

pub fn random_point(j: &JordanAlgebra, rng: &mut impl Rng) -> JElem<Scalar> {
    JElem::new((0..j.n()).map(|_| Scalar::frac(rng.gen_range(-4..=4), rng.gen_range(1..=3))).collect())
}

pub fn random_invertible_point(j: &JordanAlgebra, rng: &mut impl Rng) -> JElem<Scalar> {
    loop {
        let p = random_point(j, rng);
        if !j.norm_eval(&p).is_zero() {
            return p;
        }
    }
}

fn expect_eq<T: PartialEq + std::fmt::Debug>(what: String, lhs: &T, rhs: &T) -> Result<(), String> {
    if lhs == rhs {
        Ok(())
    } else {
        Err(format!("{what}: {lhs:?} != {rhs:?}"))
    }
}

fn collect(results: impl IntoIterator<Item = Result<(), String>>) -> Result<Option<String>, String> {
    let failures: Vec<String> = results.into_iter().filter_map(Result::err).collect();
    if failures.is_empty() {
        Ok(None)
    } else {
        let shown: Vec<&str> = failures.iter().take(3).map(String::as_str).collect();
        Err(format!("{} failure(s); {}", failures.len(), shown.join("; ")))
    }
}

pub fn invariant_checks(j: &JordanAlgebra, seed: u64) -> Vec<CheckResult> {
    let n = j.n();
    let e = j.identity();
    let mut checks = Vec::new();

    checks.push(CheckResult::run("commutative", || {
        collect((0..n).flat_map(|a| (0..n).map(move |b| (a, b))).map(|(a, b)| {
            let mut x = j.structure_constants(a, b).to_vec();
            let mut y = j.structure_constants(b, a).to_vec();
            x.sort_by_key(|p| p.0);
            y.sort_by_key(|p| p.0);
            expect_eq(format!("c[{a},{b}] vs c[{b},{a}]"), &x, &y)
        }))
    }));
    checks.push(CheckResult::run("identity", || {
        collect((0..n).map(|i| expect_eq(format!("e∘b{i}"), &j.mul(&e, &j.basis(i)), &j.basis(i))))
    }));
    checks.push(CheckResult::run("trace-of-identity", || {
        expect_eq("tr(e)".into(), &j.trace(&e), &Scalar::from_int(j.r() as i64)).map(|_| None)
    }));
    checks.push(CheckResult::run("norm-of-identity", || {
        expect_eq("F(e)".into(), &j.norm_eval(&e), &Scalar::one()).map(|_| None)
    }));
    checks.push(CheckResult::run("adjugate", || {
        let lhs = j.mul(&j.generic(), &j.adjugate());
        let rhs = JElem::lift(&e, n);
        let rhs = JElem::new(rhs.coords().iter().map(|c| c * j.norm()).collect());
        collect((0..n).map(|k| expect_eq(format!("(q∘adj q)[{k}]"), &lhs.coords()[k], &rhs.coords()[k])))
    }));
    checks.push(CheckResult::run("completeness", || {
        let sum = (0..n).fold(JElem::zero(n), |acc, i| acc.add(&j.mul(&j.basis(i), &j.dual_basis(i))));
        expect_eq("Σ bᵢ∘bⁱ".into(), &sum, &e.scale(j.m())).map(|_| None)
    }));
    checks.push(CheckResult::run("trace-normalization", || {
        collect((0..n).map(|i| {
            let x = j.basis(i);
            let tr_l = (0..n).fold(Scalar::zero(), |acc, k| &acc + &j.mul(&x, &j.basis(k)).coords()[k]);
            expect_eq(format!("Tr L_b{i}"), &tr_l, &(j.m() * &j.trace(&x)))
        }))
    }));

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    checks.push(CheckResult::run("power-associative", || {
        collect((0..SAMPLES).map(|s| {
            let a = random_point(j, &mut rng);
            let b = random_point(j, &mut rng);
            let a2 = j.mul(&a, &a);
            let lhs = j.mul(&a2, &j.mul(&a, &b));
            let rhs = j.mul(&a, &j.mul(&a2, &b));
            expect_eq(format!("sample {s}"), &lhs, &rhs)
        }))
    }));
    checks.push(CheckResult::run("projection", || {
        let y = j.idempotent();
        if !j.is_idempotent(&y) {
            return Err(format!("{} is not idempotent", j.describe(&y)));
        }
        collect((0..n).map(|i| {
            let x = j.basis(i);
            let lhs = j.triple(&y, &x, &y);
            expect_eq(format!("{{y,b{i},y}}"), &lhs, &y.scale(&j.trace_form(&x, &y)))
        }))
    }));
    checks.push(CheckResult::run("shift", || {
        let mut out = Vec::new();
        for s in 0..5 {
            let q = random_invertible_point(j, &mut rng);
            let qi = j.inverse(&q).map_err(|e| e.to_string())?;
            for i in 0..n {
                let v = j.basis(i);
                let lhs = j.triple(&j.triple(&qi, &v, &qi), &q, &v);
                let rhs = j.mul(&qi, &j.mul(&v, &v));
                out.push(expect_eq(format!("sample {s}, v=b{i}"), &lhs, &rhs));
            }
        }
        collect(out)
    }));
    checks.push(CheckResult::run("fundamental", || {
        collect((0..10).map(|s| {
            let (a, b, c) = (random_point(j, &mut rng), random_point(j, &mut rng), random_point(j, &mut rng));
            let lhs = j.triple(&a, &j.triple(&b, &a, &c), &a);
            let rhs = j.triple(&j.triple(&a, &b, &a), &c, &a);
            expect_eq(format!("sample {s}"), &lhs, &rhs)
        }))
    }));
    checks.push(CheckResult::run("inverse-triple", || {
        let mut out = Vec::new();
        for s in 0..10 {
            let a = random_point(j, &mut rng);
            let b = random_invertible_point(j, &mut rng);
            let bi = j.inverse(&b).map_err(|e| e.to_string())?;
            out.push(expect_eq(format!("sample {s}"), &j.triple(&a, &b, &bi), &a));
        }
        collect(out)
    }));
    checks
}

/// `tr(b_v ∘ X)` for a polynomial element `X`.
fn tr_basis(j: &JordanAlgebra, v: usize, x: &JElem<ZPoly>) -> ZPoly {
    let g = &j.gram()[v];
    x.coords().iter().zip(g).filter(|(_, c)| !c.is_zero()).fold(ZPoly::zero(j.n()), |acc, (p, c)| &acc + &p.scale(c))
}

/// Check the first and second derivative formulas for `F`, `w` and `tr(v q⁻¹)`
/// along every pair of basis directions.
pub fn verify_jordan_calculus(j: &JordanAlgebra, seed: u64) -> Report {
    let checks = if j.n() <= SYMBOLIC_MAX_N { symbolic_calculus(j) } else { sampled_calculus(j, seed) };
    Report::new(j.name(), "jordan-calculus", checks)
}

fn symbolic_calculus(j: &JordanAlgebra) -> Vec<CheckResult> {
    let n = j.n();
    let ctx = j.ctx();
    let adj = j.adjugate();
    let half = Scalar::frac(1, 2);
    let quarter = Scalar::frac(1, 4);
    let w = SuperFn::w(ctx);
    let tvs: Vec<LocFn> = (0..n).map(|v| j.tr_v_qinv(&j.basis(v))).collect();
    let dw: Vec<SuperFn> = (0..n).map(|v| w.derive(v)).collect();
    // {adj q, b_u, adj q} = F² {q⁻¹, b_u, q⁻¹}
    let trip: Vec<JElem<ZPoly>> = (0..n).map(|u| j.triple(&adj, &JElem::lift(&j.basis(u), n), &adj)).collect();
    let pairs = || (0..n).flat_map(|u| (0..n).map(move |v| (u, v)));

    vec![
        CheckResult::run("d-norm", || {
            collect((0..n).map(|v| expect_eq(format!("v=b{v}"), &j.norm().derive(v), &tr_basis(j, v, &adj))))
        }),
        CheckResult::run("d-w", || {
            collect((0..n).map(|v| {
                let rhs = SuperFn::from_odd(tvs[v].scale(&half));
                expect_eq(format!("v=b{v}"), &dw[v], &rhs)
            }))
        }),
        CheckResult::run("d-trace-inverse", || {
            collect(pairs().map(|(u, v)| {
                let rhs = -&LocFn::new(ctx, tr_basis(j, v, &trip[u]), 2);
                expect_eq(format!("u=b{u}, v=b{v}"), &tvs[v].derive(u), &rhs)
            }))
        }),
        CheckResult::run("dd-w", || {
            collect(pairs().map(|(u, v)| {
                let prod = (&tvs[u] * &tvs[v]).scale(&quarter);
                let corr = LocFn::new(ctx, tr_basis(j, v, &trip[u]), 2).scale(&half);
                let rhs = SuperFn::from_odd(&prod - &corr);
                expect_eq(format!("u=b{u}, v=b{v}"), &dw[v].derive(u), &rhs)
            }))
        }),
    ]
}

fn sampled_calculus(j: &JordanAlgebra, seed: u64) -> Vec<CheckResult> {
    let n = j.n();
    let ctx = j.ctx();
    let w = SuperFn::w(ctx);
    let half = Scalar::frac(1, 2);
    let quarter = Scalar::frac(1, 4);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let points: Vec<JElem<Scalar>> = (0..SAMPLES).map(|_| random_invertible_point(j, &mut rng)).collect();
    let tvs: Vec<LocFn> = (0..n).map(|v| j.tr_v_qinv(&j.basis(v))).collect();
    let dw: Vec<SuperFn> = (0..n).map(|v| w.derive(v)).collect();
    let at = |f: &LocFn, p: &JElem<Scalar>| f.eval(p.coords()).map(|l| l.coeff(0)).map_err(|e| e.to_string());
    let pairs = || (0..n).flat_map(|u| (0..n).map(move |v| (u, v)));
    let dual_route = |p: &JElem<Scalar>| -> Result<(JElem<Scalar>, Vec<Scalar>), String> {
        let pi = j.inverse(p).map_err(|e| e.to_string())?;
        let tr: Vec<Scalar> = (0..n).map(|v| j.trace_form(&j.basis(v), &pi)).collect();
        Ok((pi, tr))
    };

    vec![
        CheckResult::run("d-norm", || {
            let mut out = Vec::new();
            for (s, p) in points.iter().enumerate() {
                let adj = j.adjugate_eval(p);
                for v in 0..n {
                    let lhs = j.norm().derive(v).eval(p.coords()).coeff(0);
                    out.push(expect_eq(format!("point {s}, v=b{v}"), &lhs, &j.trace_form(&j.basis(v), &adj)));
                }
            }
            collect(out).map(|_| Some(format!("{} sample points", points.len())))
        }),
        CheckResult::run("d-w", || {
            let mut out = Vec::new();
            for (s, p) in points.iter().enumerate() {
                let (_, tr) = dual_route(p)?;
                for v in 0..n {
                    if !dw[v].even().is_zero() {
                        out.push(Err(format!("v=b{v}: even part present")));
                    }
                    let lhs = at(dw[v].odd(), p)?;
                    out.push(expect_eq(format!("point {s}, v=b{v}"), &lhs, &(&tr[v] * &half)));
                }
            }
            collect(out).map(|_| Some(format!("{} sample points", points.len())))
        }),
        CheckResult::run("d-trace-inverse", || {
            let mut out = Vec::new();
            let derivs: Vec<Vec<LocFn>> = (0..n).map(|v| (0..n).map(|u| tvs[v].derive(u)).collect()).collect();
            for (s, p) in points.iter().enumerate() {
                let (pi, _) = dual_route(p)?;
                for (u, v) in pairs() {
                    let lhs = at(&derivs[v][u], p)?;
                    let rhs = -j.trace_form(&j.basis(v), &j.triple(&pi, &j.basis(u), &pi));
                    out.push(expect_eq(format!("point {s}, u=b{u}, v=b{v}"), &lhs, &rhs));
                }
            }
            collect(out).map(|_| Some(format!("{} sample points", points.len())))
        }),
        CheckResult::run("dd-w", || {
            let mut out = Vec::new();
            let derivs: Vec<Vec<SuperFn>> = (0..n).map(|v| (0..n).map(|u| dw[v].derive(u)).collect()).collect();
            for (s, p) in points.iter().enumerate() {
                let (pi, tr) = dual_route(p)?;
                for (u, v) in pairs() {
                    let lhs = at(derivs[v][u].odd(), p)?;
                    let t = j.trace_form(&j.basis(v), &j.triple(&pi, &j.basis(u), &pi));
                    let rhs = &(&(&tr[u] * &tr[v]) * &quarter) - &(&t * &half);
                    out.push(expect_eq(format!("point {s}, u=b{u}, v=b{v}"), &lhs, &rhs));
                }
            }
            collect(out).map(|_| Some(format!("{} sample points", points.len())))
        }),
    ]
}
