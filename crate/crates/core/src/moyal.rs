//! The sl(2) star-product laboratory: Weyl symmetrization into `C[w, ∂_w]`,
//! the circle product on `C[ζ, ξ]`, its graded components, supertrace and pairing.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::jordan::JordanAlgebra;
use crate::rep::{at_lambda, pi_minus};
use crate::ring::{LocFn, Scalar, SuperFn, ZPoly};
use crate::verify::{CheckResult, Report};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MoyalError {
    #[error("input is not homogeneous")]
    NotHomogeneous,
    #[error("unknown generator `{0}` (expected zeta2, zetaxi or xi2)")]
    UnknownGenerator(String),
}

fn binom(n: u32, k: u32) -> Scalar {
    Scalar::from_int((0..k as i64).fold(1i64, |acc, i| acc * (n as i64 - i) / (i + 1)))
}

fn factorial(k: u32) -> Scalar {
    Scalar::from_int((1..=k as i64).product())
}

/// `n (n−1) ⋯ (n−k+1)`.
fn falling(n: u32, k: u32) -> Scalar {
    Scalar::from_int((0..k as i64).map(|i| n as i64 - i).product())
}

fn add_into(map: &mut BTreeMap<(u32, u32), Scalar>, key: (u32, u32), c: Scalar) {
    if c.is_zero() {
        return;
    }
    let e = map.entry(key).or_insert_with(Scalar::zero);
    *e += &c;
    if e.is_zero() {
        map.remove(&key);
    }
}

/// `Σ c_{ab} w^a ∂_w^b`.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct WOp {
    terms: BTreeMap<(u32, u32), Scalar>,
}

impl WOp {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn term(a: u32, b: u32, c: Scalar) -> Self {
        let mut op = Self::zero();
        add_into(&mut op.terms, (a, b), c);
        op
    }

    pub fn w() -> Self {
        Self::term(1, 0, Scalar::one())
    }

    pub fn d() -> Self {
        Self::term(0, 1, Scalar::one())
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, a: u32, b: u32) -> Scalar {
        self.terms.get(&(a, b)).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, o: &WOp) -> WOp {
        let mut out = self.clone();
        for (k, c) in &o.terms {
            add_into(&mut out.terms, *k, c.clone());
        }
        out
    }

    pub fn scale(&self, s: &Scalar) -> WOp {
        let mut out = WOp::zero();
        for (k, c) in &self.terms {
            add_into(&mut out.terms, *k, c * s);
        }
        out
    }

    /// `w^a∂^b · w^c∂^d = Σₖ C(b,k) (c)ₖ w^{a+c−k} ∂^{b+d−k}`.
    pub fn mul(&self, o: &WOp) -> WOp {
        let mut out = WOp::zero();
        for (&(a, b), x) in &self.terms {
            for (&(c, d), y) in &o.terms {
                let xy = x * y;
                for k in 0..=b.min(c) {
                    let coef = &(&binom(b, k) * &falling(c, k)) * &xy;
                    add_into(&mut out.terms, (a + c - k, b + d - k), coef);
                }
            }
        }
        out
    }
}

impl fmt::Display for WOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(&(a, b), c)| {
                let mut s = format!("({c})");
                if a > 0 {
                    s.push_str(&if a == 1 { "*w".into() } else { format!("*w^{a}") });
                }
                if b > 0 {
                    s.push_str(&if b == 1 { "*dw".into() } else { format!("*dw^{b}") });
                }
                s
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// `Σ c_{ab} ζ^a ξ^b`.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct PolyZX {
    terms: BTreeMap<(u32, u32), Scalar>,
}

impl PolyZX {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 0)
    }

    pub fn monomial(a: u32, b: u32) -> Self {
        Self::term(a, b, Scalar::one())
    }

    pub fn term(a: u32, b: u32, c: Scalar) -> Self {
        let mut p = Self::zero();
        add_into(&mut p.terms, (a, b), c);
        p
    }

    pub fn zeta() -> Self {
        Self::monomial(1, 0)
    }

    pub fn xi() -> Self {
        Self::monomial(0, 1)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, a: u32, b: u32) -> Scalar {
        self.terms.get(&(a, b)).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, o: &PolyZX) -> PolyZX {
        let mut out = self.clone();
        for (k, c) in &o.terms {
            add_into(&mut out.terms, *k, c.clone());
        }
        out
    }

    pub fn sub(&self, o: &PolyZX) -> PolyZX {
        self.add(&o.scale(&Scalar::from_int(-1)))
    }

    pub fn scale(&self, s: &Scalar) -> PolyZX {
        let mut out = PolyZX::zero();
        for (k, c) in &self.terms {
            add_into(&mut out.terms, *k, c * s);
        }
        out
    }

    pub fn mul(&self, o: &PolyZX) -> PolyZX {
        let mut out = PolyZX::zero();
        for (&(a, b), x) in &self.terms {
            for (&(c, d), y) in &o.terms {
                add_into(&mut out.terms, (a + c, b + d), x * y);
            }
        }
        out
    }

    pub fn d_zeta(&self) -> PolyZX {
        let mut out = PolyZX::zero();
        for (&(a, b), c) in &self.terms {
            if a > 0 {
                add_into(&mut out.terms, (a - 1, b), c * &Scalar::from_int(a as i64));
            }
        }
        out
    }

    pub fn d_xi(&self) -> PolyZX {
        let mut out = PolyZX::zero();
        for (&(a, b), c) in &self.terms {
            if b > 0 {
                add_into(&mut out.terms, (a, b - 1), c * &Scalar::from_int(b as i64));
            }
        }
        out
    }

    /// Total degree, which is twice the Euler degree; error unless homogeneous.
    pub fn degree(&self) -> Result<Option<u32>, MoyalError> {
        let mut degs = self.terms.keys().map(|(a, b)| a + b);
        match degs.next() {
            None => Ok(None),
            Some(d) if degs.all(|e| e == d) => Ok(Some(d)),
            Some(_) => Err(MoyalError::NotHomogeneous),
        }
    }

    /// Piece of total degree `d`.
    pub fn part_of_degree(&self, d: u32) -> PolyZX {
        PolyZX { terms: self.terms.iter().filter(|((a, b), _)| a + b == d).map(|(k, c)| (*k, c.clone())).collect() }
    }
}

fn power(sym: &str, e: u32) -> String {
    const SUP: [&str; 10] = ["⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"];
    match e {
        0 => String::new(),
        1 => sym.to_string(),
        _ => format!("{sym}{}", e.to_string().chars().map(|c| SUP[c as usize - '0' as usize]).collect::<String>()),
    }
}

/// `ζ^a ξ^b` in compact form, `1` for the constant monomial.
pub fn monomial_name(a: u32, b: u32) -> String {
    let s = format!("{}{}", power("ζ", a), power("ξ", b));
    if s.is_empty() {
        "1".into()
    } else {
        s
    }
}

impl fmt::Display for PolyZX {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(&(a, b), c)| match (a + b, c.is_one()) {
                (0, _) => c.to_string(),
                (_, true) => monomial_name(a, b),
                _ => format!("({c}){}", monomial_name(a, b)),
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Weyl symmetrization: `ζ^a ξ^b ↦ Σₖ C(a,k) C(b,k) k! 2^{−k} w^{a−k} ∂^{b−k}`.
pub fn symmetrize(p: &PolyZX) -> WOp {
    let mut out = WOp::zero();
    let half = Scalar::frac(1, 2);
    for (&(a, b), c) in &p.terms {
        for k in 0..=a.min(b) {
            let coef = &(&(&binom(a, k) * &binom(b, k)) * &factorial(k)) * &(&half.pow(k) * c);
            add_into(&mut out.terms, (a - k, b - k), coef);
        }
    }
    out
}

/// Inverse of `symmetrize`, peeling off the highest-degree term each round.
pub fn dequantize(op: &WOp) -> PolyZX {
    let mut rest = op.clone();
    let mut out = PolyZX::zero();
    while let Some((&(a, b), c)) = rest.terms.iter().max_by_key(|((a, b), _)| (a + b, *a)) {
        let c = c.clone();
        let piece = PolyZX::term(a, b, c);
        rest = rest.add(&symmetrize(&piece).scale(&Scalar::from_int(-1)));
        out = out.add(&piece);
    }
    out
}

/// `φ∘ψ = bq⁻¹(bq(φ) bq(ψ))`.
pub fn circle(phi: &PolyZX, psi: &PolyZX) -> PolyZX {
    dequantize(&symmetrize(phi).mul(&symmetrize(psi)))
}

/// The piece of `φ∘ψ` of Euler degree `j + k − p`.
pub fn c_component(phi: &PolyZX, psi: &PolyZX, p: u32) -> Result<PolyZX, MoyalError> {
    let (Some(dp), Some(dq)) = (phi.degree()?, psi.degree()?) else {
        return Ok(PolyZX::zero());
    };
    if 2 * p > dp + dq {
        return Ok(PolyZX::zero());
    }
    Ok(circle(phi, psi).part_of_degree(dp + dq - 2 * p))
}

/// Projection to the constant term.
pub fn supertrace(phi: &PolyZX) -> Scalar {
    phi.coeff(0, 0)
}

/// `Q(φ, ψ) = T(φ∘ψ)`.
pub fn pairing(phi: &PolyZX, psi: &PolyZX) -> Scalar {
    supertrace(&circle(phi, psi))
}

/// `{φ, ψ} = φ_ξ ψ_ζ − φ_ζ ψ_ξ`.
pub fn bracket(phi: &PolyZX, psi: &PolyZX) -> PolyZX {
    phi.d_xi().mul(&psi.d_zeta()).sub(&phi.d_zeta().mul(&psi.d_xi()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Generator {
    ZetaSq,
    ZetaXi,
    XiSq,
}

impl Generator {
    pub const ALL: [Generator; 3] = [Generator::ZetaSq, Generator::ZetaXi, Generator::XiSq];

    pub fn function(self) -> PolyZX {
        match self {
            Generator::ZetaSq => PolyZX::monomial(2, 0),
            Generator::ZetaXi => PolyZX::monomial(1, 1),
            Generator::XiSq => PolyZX::monomial(0, 2),
        }
    }
}

impl FromStr for Generator {
    type Err = MoyalError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "zeta2" | "ζ²" => Ok(Generator::ZetaSq),
            "zetaxi" | "ζξ" => Ok(Generator::ZetaXi),
            "xi2" | "ξ²" => Ok(Generator::XiSq),
            other => Err(MoyalError::UnknownGenerator(other.into())),
        }
    }
}

/// `Λ^{ζ²} = ¼∂²_ξ`, `Λ^{ζξ} = −¼∂_ξ∂_ζ`, `Λ^{ξ²} = ¼∂²_ζ`.
pub fn lambda_op(x: Generator, psi: &PolyZX) -> PolyZX {
    let quarter = Scalar::frac(1, 4);
    match x {
        Generator::ZetaSq => psi.d_xi().d_xi().scale(&quarter),
        Generator::ZetaXi => psi.d_xi().d_zeta().scale(&-quarter),
        Generator::XiSq => psi.d_zeta().d_zeta().scale(&quarter),
    }
}

/// All monomials `ζ^a ξ^b` with `a + b ≤ d`.
pub fn monomials(d: u32) -> Vec<(u32, u32)> {
    (0..=d).flat_map(|t| (0..=t).map(move |a| (a, t - a))).collect()
}

/// `Q(ξ^p, ζ^q)` for `0 ≤ p, q ≤ d`, as text rows.
pub fn pairing_table(d: u32) -> Vec<String> {
    let mut rows = Vec::new();
    for p in 0..=d {
        for q in 0..=d {
            let v = pairing(&PolyZX::monomial(0, p), &PolyZX::monomial(q, 0));
            rows.push(format!("Q({},{}) = {v}", monomial_name(0, p), monomial_name(q, 0)));
        }
    }
    rows
}

/// Nonzero `C_p(φ, ψ)` over monomial pairs of total degree `≤ d`, as text rows.
pub fn component_table(d: u32) -> Vec<String> {
    let mut rows = Vec::new();
    for &(a, b) in &monomials(d) {
        for &(c, e) in &monomials(d) {
            if a + b + c + e > d {
                continue;
            }
            let (phi, psi) = (PolyZX::monomial(a, b), PolyZX::monomial(c, e));
            for p in 0..=(a + b).min(c + e) {
                let comp = c_component(&phi, &psi, p).expect("monomials are homogeneous");
                if !comp.is_zero() {
                    rows.push(format!("C{p}({},{}) = {comp}", monomial_name(a, b), monomial_name(c, e)));
                }
            }
        }
    }
    rows
}

fn outcome(failures: Vec<String>) -> Result<Option<String>, String> {
    if failures.is_empty() {
        Ok(None)
    } else {
        Err(format!(
            "{} failure(s); {}",
            failures.len(),
            failures.iter().take(3).cloned().collect::<Vec<_>>().join("; ")
        ))
    }
}

/// The image of `π_{λ₀}^{ē}` on `w^k` agrees with `−¼∂_w²` for `k = 0..=8`.
pub fn bridge_check() -> CheckResult {
    CheckResult::run("bridge", || {
        let j = JordanAlgebra::make_full(1).expect("rank 1");
        let ctx = j.ctx();
        let pi = at_lambda(&pi_minus(&j, &j.identity()), &j.lambda_0());
        let w_pow = |k: u32| {
            let zk = LocFn::from_poly(ctx, ZPoly::var(1, 0).pow(k / 2));
            if k.is_multiple_of(2) {
                SuperFn::from_even(zk)
            } else {
                SuperFn::from_odd(zk)
            }
        };
        let mut bad = Vec::new();
        for k in 0..=8u32 {
            let lhs = pi.apply(&w_pow(k));
            let c = Scalar::frac(-((k * k.saturating_sub(1)) as i64), 4);
            let rhs = if k >= 2 { w_pow(k - 2).scale(&c) } else { SuperFn::zero(ctx) };
            if lhs != rhs {
                bad.push(format!("k={k}"));
            }
        }
        outcome(bad)
    })
}

/// Run every star-product identity up to the given degree bounds.
pub fn run_moyal_suite() -> Report {
    let mono6 = monomials(6);
    let pairs6: Vec<((u32, u32), (u32, u32))> = mono6
        .iter()
        .flat_map(|&x| mono6.iter().map(move |&y| (x, y)))
        .filter(|((a, b), (c, d))| a + b + c + d <= 6)
        .collect();
    let m = |(a, b): (u32, u32)| PolyZX::monomial(a, b);
    let half = Scalar::frac(1, 2);

    let checks = vec![
        CheckResult::run("pairing-table", || {
            let mut bad = Vec::new();
            for p in 0..=6u32 {
                for q in 0..=6u32 {
                    let got = pairing(&PolyZX::monomial(0, p), &PolyZX::monomial(q, 0));
                    let want = if p == q { &factorial(p) * &half.pow(p) } else { Scalar::zero() };
                    if got != want {
                        bad.push(format!("Q(ξ^{p},ζ^{q}) = {got}, expected {want}"));
                    }
                }
            }
            outcome(bad)
        }),
        CheckResult::run("parity", || {
            let mut bad = Vec::new();
            for &(x, y) in &pairs6 {
                for p in 0..=6 {
                    let a = c_component(&m(x), &m(y), p).map_err(|e| e.to_string())?;
                    let b = c_component(&m(y), &m(x), p).map_err(|e| e.to_string())?;
                    let sign = Scalar::from_int(if p % 2 == 0 { 1 } else { -1 });
                    if a != b.scale(&sign) {
                        bad.push(format!("C{p}({x:?},{y:?})"));
                    }
                }
            }
            outcome(bad)
        }),
        CheckResult::run("band", || {
            let mut bad = Vec::new();
            for &(x, y) in &pairs6 {
                let bound = (x.0 + x.1).min(y.0 + y.1);
                let total =
                    (0..=bound).try_fold(PolyZX::zero(), |acc, p| c_component(&m(x), &m(y), p).map(|c| acc.add(&c)));
                let total = total.map_err(|e| e.to_string())?;
                if total != circle(&m(x), &m(y)) {
                    bad.push(format!("{x:?}∘{y:?} has components beyond p = {bound}"));
                }
            }
            outcome(bad)
        }),
        CheckResult::run("leading-terms", || {
            let mut bad = Vec::new();
            for &(x, y) in &pairs6 {
                let (phi, psi) = (m(x), m(y));
                if c_component(&phi, &psi, 0).map_err(|e| e.to_string())? != phi.mul(&psi) {
                    bad.push(format!("c0 {x:?},{y:?}"));
                }
                if c_component(&phi, &psi, 1).map_err(|e| e.to_string())? != bracket(&phi, &psi).scale(&half) {
                    bad.push(format!("c1 {x:?},{y:?}"));
                }
            }
            outcome(bad)
        }),
        CheckResult::run("bracket", || {
            let mut bad = Vec::new();
            for phi in [PolyZX::zeta(), PolyZX::xi()] {
                for &y in &monomials(6) {
                    let psi = m(y);
                    if circle(&phi, &psi).sub(&circle(&psi, &phi)) != bracket(&phi, &psi) {
                        bad.push(format!("{phi} with {psi}"));
                    }
                }
            }
            outcome(bad)
        }),
        CheckResult::run("generator-law", || {
            let mut bad = Vec::new();
            let scaled = Scalar::frac(-1, 4);
            for g in Generator::ALL {
                for (phi_scale, label) in [(Scalar::one(), ""), (scaled.clone(), "scaled ")] {
                    let phi = g.function().scale(&phi_scale);
                    for &y in &monomials(5) {
                        let psi = m(y);
                        let want = phi
                            .mul(&psi)
                            .add(&bracket(&phi, &psi).scale(&half))
                            .add(&lambda_op(g, &psi).scale(&phi_scale));
                        if circle(&phi, &psi) != want {
                            bad.push(format!("{label}{g:?} with {psi}"));
                        }
                    }
                }
            }
            outcome(bad)
        }),
        CheckResult::run("lambda-ops", || {
            let mut bad = Vec::new();
            let cases = [
                (Generator::ZetaSq, m((0, 2)), PolyZX::term(0, 0, half.clone())),
                (Generator::ZetaXi, m((1, 1)), PolyZX::term(0, 0, Scalar::frac(-1, 4))),
                (Generator::XiSq, m((3, 0)), PolyZX::term(1, 0, Scalar::frac(3, 2))),
            ];
            for (g, psi, want) in cases {
                let got = lambda_op(g, &psi);
                if got != want {
                    bad.push(format!("Λ^{g:?}({psi}) = {got}, expected {want}"));
                }
            }
            outcome(bad)
        }),
        CheckResult::run("adjoint", || {
            let mut bad = Vec::new();
            for g in Generator::ALL {
                for &a in &monomials(5) {
                    for &b in &monomials(5) {
                        let lhs = pairing(&g.function().mul(&m(a)), &m(b));
                        let rhs = pairing(&m(a), &lambda_op(g, &m(b)));
                        if lhs != rhs {
                            bad.push(format!("{g:?}: Q(x·{a:?},{b:?}) = {lhs} vs {rhs}"));
                        }
                    }
                }
            }
            outcome(bad)
        }),
        CheckResult::run("supertrace", || {
            let mut bad = Vec::new();
            for &(x, y) in &pairs6 {
                let (dx, dy) = (x.0 + x.1, y.0 + y.1);
                let ab = pairing(&m(x), &m(y));
                let ba = pairing(&m(y), &m(x));
                let sign = Scalar::from_int(if (dx * dy) % 2 == 0 { 1 } else { -1 });
                if ab != &sign * &ba {
                    bad.push(format!("T({x:?}∘{y:?}) = {ab}, T({y:?}∘{x:?}) = {ba}"));
                }
                if (dx + dy) % 2 == 1 && !ab.is_zero() {
                    bad.push(format!("cross parity {x:?},{y:?}"));
                }
            }
            outcome(bad)
        }),
        CheckResult::run("orthogonality", || {
            let mut bad = Vec::new();
            for &x in &monomials(6) {
                for &y in &monomials(6) {
                    if x.0 + x.1 != y.0 + y.1 && !pairing(&m(x), &m(y)).is_zero() {
                        bad.push(format!("Q({x:?},{y:?}) ≠ 0"));
                    }
                }
            }
            outcome(bad)
        }),
        CheckResult::run("abelian", || {
            let mut bad = Vec::new();
            for a in 0..=6 {
                for b in 0..=6 {
                    if circle(&PolyZX::monomial(a, 0), &PolyZX::monomial(b, 0)) != PolyZX::monomial(a + b, 0) {
                        bad.push(format!("ζ^{a}∘ζ^{b}"));
                    }
                }
            }
            outcome(bad)
        }),
        CheckResult::run("round-trip", || {
            let mut bad = Vec::new();
            for &x in &monomials(8) {
                if dequantize(&symmetrize(&m(x))) != m(x) {
                    bad.push(format!("{x:?}"));
                }
            }
            outcome(bad)
        }),
        bridge_check(),
    ];
    Report::new("full:1", "moyal", checks)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Average of every ordering of `a` copies of `w` and `b` copies of `∂`.
    fn brute_symmetrize(a: u32, b: u32) -> WOp {
        fn go(a: u32, b: u32, acc: WOp, out: &mut Vec<WOp>) {
            if a == 0 && b == 0 {
                out.push(acc);
                return;
            }
            if a > 0 {
                go(a - 1, b, acc.mul(&WOp::w()), out);
            }
            if b > 0 {
                go(a, b - 1, acc.mul(&WOp::d()), out);
            }
        }
        let mut all = Vec::new();
        go(a, b, WOp::term(0, 0, Scalar::one()), &mut all);
        let count = Scalar::from_int(all.len() as i64);
        all.iter().fold(WOp::zero(), |acc, x| acc.add(x)).scale(&count.inv().unwrap())
    }

    #[test]
    fn closed_form_matches_interleavings() {
        for a in 0..=4 {
            for b in 0..=4 {
                assert_eq!(symmetrize(&PolyZX::monomial(a, b)), brute_symmetrize(a, b), "ζ^{a} ξ^{b}");
            }
        }
    }

    #[test]
    fn quantization_examples() {
        assert_eq!(symmetrize(&PolyZX::monomial(2, 0)), WOp::term(2, 0, Scalar::one()));
        let h = WOp::term(1, 1, Scalar::one()).add(&WOp::term(0, 0, Scalar::frac(1, 2)));
        assert_eq!(symmetrize(&PolyZX::monomial(1, 1)), h);
        assert_eq!(symmetrize(&PolyZX::monomial(0, 2)), WOp::term(0, 2, Scalar::one()));
        let back = PolyZX::monomial(1, 1).add(&PolyZX::term(0, 0, Scalar::frac(-1, 2)));
        assert_eq!(dequantize(&WOp::term(1, 1, Scalar::one())), back);
        assert_eq!(dequantize(&WOp::term(0, 0, Scalar::one())), PolyZX::one());
    }

    #[test]
    fn circle_examples() {
        let (z, x) = (PolyZX::zeta(), PolyZX::xi());
        assert_eq!(circle(&x, &z).sub(&circle(&z, &x)), PolyZX::one());
        assert_eq!(circle(&z, &x), PolyZX::monomial(1, 1).add(&PolyZX::term(0, 0, Scalar::frac(-1, 2))));
        assert_eq!(circle(&PolyZX::monomial(2, 0), &PolyZX::monomial(3, 0)), PolyZX::monomial(5, 0));
        // ζ²∘ξ² = ζ²ξ² − 2ζξ + ½
        let want = PolyZX::monomial(2, 2).add(&PolyZX::term(1, 1, Scalar::from_int(-2))).add(&PolyZX::term(
            0,
            0,
            Scalar::frac(1, 2),
        ));
        assert_eq!(circle(&PolyZX::monomial(2, 0), &PolyZX::monomial(0, 2)), want);
        assert!(c_component(&PolyZX::one().add(&z), &z, 0).is_err());
    }

    #[test]
    fn pairing_examples() {
        assert_eq!(supertrace(&PolyZX::one()), Scalar::one());
        assert_eq!(pairing(&PolyZX::zeta(), &PolyZX::zeta()), Scalar::zero());
        assert_eq!(pairing(&PolyZX::monomial(0, 3), &PolyZX::monomial(3, 0)), Scalar::frac(3, 4));
        assert!(pairing_table(4).contains(&"Q(ξ³,ζ³) = 3/4".to_string()));
    }

    #[test]
    fn lambda_examples() {
        assert_eq!(lambda_op(Generator::ZetaSq, &PolyZX::monomial(0, 2)), PolyZX::term(0, 0, Scalar::frac(1, 2)));
        assert_eq!("xi2".parse::<Generator>(), Ok(Generator::XiSq));
        assert!("eta".parse::<Generator>().is_err());
    }
}
