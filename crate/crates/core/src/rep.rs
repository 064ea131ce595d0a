//! The operators `π_λ^x` on `p⁻`, their Fourier pre-images `η_λ^x` on `p⁺`,
//! the commutator-generated `k`-part, and the action on `H = S(p⁺) ⊕ w S(p⁺)`.

use std::str::FromStr;

use thiserror::Error;

use crate::jordan::{JElem, JordanAlgebra};
use crate::linalg::Span;
use crate::ring::{LambdaPoly, Monomial, Scalar, SuperFn, ZPoly};
use crate::weyl::{DiffOp, PolyOpPlus, VecKey};

/// Generic rational value of `λ` used for rank computations.
pub fn generic_lambda() -> Scalar {
    Scalar::frac(5, 7)
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RepError {
    #[error("bad generator selector `{0}` (expected p+:<i>, p-:<j>, idem, eta+:<i>, eta-:<j>)")]
    BadSelector(String),
    #[error("basis index {index} out of range 1..={n}")]
    OutOfRange { index: usize, n: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Plus,
    Minus,
}

/// A generator of `p⁺` or `p⁻`, given by its coordinates in `J`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GGenerator {
    pub side: Side,
    pub element: JElem<Scalar>,
}

/// What `show` can print.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OpSelector {
    Pi(Side, Option<usize>),
    Eta(Side, usize),
}

impl FromStr for OpSelector {
    type Err = RepError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || RepError::BadSelector(s.to_string());
        if s == "idem" {
            return Ok(OpSelector::Pi(Side::Minus, None));
        }
        let (head, idx) = s.split_once(':').ok_or_else(bad)?;
        let idx: usize = idx.parse().map_err(|_| bad())?;
        match head {
            "p+" => Ok(OpSelector::Pi(Side::Plus, Some(idx))),
            "p-" => Ok(OpSelector::Pi(Side::Minus, Some(idx))),
            "eta+" => Ok(OpSelector::Eta(Side::Plus, idx)),
            "eta-" => Ok(OpSelector::Eta(Side::Minus, idx)),
            _ => Err(bad()),
        }
    }
}

/// The operator a selector names, printed in canonical text form, with `λ`
/// left formal or specialised to `lambda`.
pub fn show(j: &JordanAlgebra, sel: &OpSelector, lambda: Option<&Scalar>) -> Result<String, RepError> {
    let basis = |i: usize| {
        if i == 0 || i > j.n() {
            Err(RepError::OutOfRange { index: i, n: j.n() })
        } else {
            Ok(j.basis(i - 1))
        }
    };
    let pi = |op: DiffOp| match lambda {
        Some(v) => at_lambda(&op, v).to_string(),
        None => op.to_string(),
    };
    let eta = |op: PolyOpPlus| match lambda {
        Some(v) => op.subst_lambda(&LambdaPoly::constant(v.clone())).to_string(),
        None => op.to_string(),
    };
    Ok(match sel {
        OpSelector::Pi(Side::Plus, Some(i)) => pi(pi_plus(j, &basis(*i)?)),
        OpSelector::Pi(Side::Minus, Some(i)) => pi(pi_minus(j, &basis(*i)?)),
        OpSelector::Pi(_, None) => pi(pi_minus(j, &j.idempotent())),
        OpSelector::Eta(Side::Plus, i) => eta(eta_plus(j, &basis(*i)?)),
        OpSelector::Eta(Side::Minus, i) => eta(eta_minus(j, &basis(*i)?)),
    })
}

impl GGenerator {
    pub fn op(&self, j: &JordanAlgebra) -> DiffOp {
        match self.side {
            Side::Plus => pi_plus(j, &self.element),
            Side::Minus => pi_minus(j, &self.element),
        }
    }
}

/// Multiplication by `q ↦ tr(x∘q)`.
pub fn pi_plus(j: &JordanAlgebra, x: &JElem<Scalar>) -> DiffOp {
    DiffOp::mul_fn(SuperFn::from_poly(j.ctx(), j.linear_form(x)))
}

/// `−Σᵢⱼ tr({bⁱ, y, bʲ}∘q) ∂ᵢ∂ⱼ − 2mλ ∂^y`, with formal `λ`.
pub fn pi_minus(j: &JordanAlgebra, y: &JElem<Scalar>) -> DiffOp {
    let n = j.n();
    let ctx = j.ctx();
    let mut op = DiffOp::zero(ctx);
    let duals: Vec<JElem<Scalar>> = (0..n).map(|i| j.dual_basis(i)).collect();
    for i in 0..n {
        for k in i..n {
            let t = j.triple(&duals[i], y, &duals[k]);
            if t.is_zero() {
                continue;
            }
            // (i,k) and (k,i) give the same ∂ᵢ∂ₖ
            let mult = if i == k { -1 } else { -2 };
            let coeff = j.linear_form(&t).scale(&Scalar::from_int(mult));
            op.add_term(Monomial::var(n, i).mul(&Monomial::var(n, k)), SuperFn::from_poly(ctx, coeff));
        }
    }
    let two_m_lambda = LambdaPoly::lambda().scale(&(Scalar::from_int(-2) * j.m()));
    op.add(&DiffOp::directional(ctx, y.coords()).scale_lambda(&two_m_lambda))
}

/// `η^x = −∂^x_u` on `p⁺`.
pub fn eta_plus(j: &JordanAlgebra, x: &JElem<Scalar>) -> PolyOpPlus {
    PolyOpPlus::directional(&j.n(), x.coords()).neg()
}

/// The vector field `u ↦ {u, y, u}` plus the function `2mλ tr(y∘u)`.
pub fn eta_minus(j: &JordanAlgebra, y: &JElem<Scalar>) -> PolyOpPlus {
    let n = j.n();
    let u = j.generic();
    let field = j.triple(&u, &JElem::lift(y, n), &u);
    let mut op = PolyOpPlus::zero(&n);
    for (k, xk) in field.coords().iter().enumerate() {
        op.add_term(Monomial::var(n, k), xk.clone());
    }
    let two_m_lambda = LambdaPoly::lambda().scale(&(Scalar::from_int(2) * j.m()));
    op.add(&PolyOpPlus::from_coeff(j.linear_form(y).scale_lambda(&two_m_lambda), &n))
}

/// Specialise the formal `λ` in an operator.
pub fn at_lambda(op: &DiffOp, value: &Scalar) -> DiffOp {
    op.subst_lambda(&LambdaPoly::constant(value.clone()))
}

/// The constant-coefficient operator `∂^F`: the norm evaluated at the element
/// whose `k`-th coordinate is `Σᵢ (G⁻¹)ᵢₖ ∂ᵢ`.
pub fn d_norm(j: &JordanAlgebra) -> DiffOp {
    let n = j.n();
    let images: Vec<ZPoly> =
        (0..n).map(|k| ZPoly::linear(&(0..n).map(|i| j.dual_gram()[i][k].clone()).collect::<Vec<_>>())).collect();
    let symbol = j.norm().compose(&images);
    let mut op = DiffOp::zero(j.ctx());
    for (beta, c) in symbol.terms() {
        op.add_term(beta.clone(), SuperFn::constant(j.ctx(), c.clone()));
    }
    op
}

/// A basis of `span{[π^{bᵢ}, π_λ^{bⱼ}]}` at a specialised `λ`.
#[derive(Clone, Debug)]
pub struct KSpan {
    pub lambda: Scalar,
    pub basis: Vec<DiffOp>,
    pub span: Span<VecKey>,
}

impl KSpan {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn contains(&self, op: &DiffOp) -> bool {
        self.span.contains(&op.vectorize(op.max_denom_exp()))
    }
}

pub fn k_span(j: &JordanAlgebra, lambda: &Scalar) -> KSpan {
    let n = j.n();
    let plus: Vec<DiffOp> = (0..n).map(|i| pi_plus(j, &j.basis(i))).collect();
    let minus: Vec<DiffOp> = (0..n).map(|i| at_lambda(&pi_minus(j, &j.basis(i)), lambda)).collect();
    let mut span = Span::new();
    let mut basis = Vec::new();
    for p in &plus {
        for m in &minus {
            let c = p.commutator(m);
            if span.insert(&c.vectorize(c.max_denom_exp())) {
                basis.push(c);
            }
        }
    }
    KSpan { lambda: lambda.clone(), basis, span }
}

/// Span of a list of operators, all with polynomial coefficients.
pub fn span_of(ops: &[DiffOp]) -> Span<VecKey> {
    let mut span = Span::new();
    for op in ops {
        span.insert(&op.vectorize(0));
    }
    span
}

/// Both parts polynomial, i.e. `f ∈ S(p⁺) ⊕ w S(p⁺)`.
pub fn h_membership(f: &SuperFn) -> bool {
    f.is_polynomial()
}

/// Apply `a` to `h` and report whether the result stays in `H`.
pub fn act_on_h(a: &DiffOp, h: &SuperFn) -> (SuperFn, bool) {
    let out = a.apply(h);
    let member = h_membership(&out);
    (out, member)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_one_operators() {
        let j = JordanAlgebra::make_full(1).unwrap();
        let e = j.identity();
        assert_eq!(pi_plus(&j, &e), DiffOp::mul_fn(SuperFn::var(j.ctx(), 0)));
        assert_eq!(pi_minus(&j, &e).to_string(), "(-1)*z * d1^2 + (-2)(L) * d1");
        assert_eq!(eta_minus(&j, &e).to_string(), "(1)*u^2 * du1 + (2*L)*u");
        assert_eq!(eta_plus(&j, &e).to_string(), "(-1) * du1");
        assert!(pi_plus(&j, &JElem::zero(1)).is_zero());
        let h = pi_plus(&j, &e).commutator(&pi_minus(&j, &e));
        assert_eq!(h, DiffOp::parse(j.ctx(), "(2)*z * d1 + (2)(L)").unwrap());
    }

    #[test]
    fn selectors() {
        assert_eq!("p-:1".parse::<OpSelector>(), Ok(OpSelector::Pi(Side::Minus, Some(1))));
        assert_eq!("idem".parse::<OpSelector>(), Ok(OpSelector::Pi(Side::Minus, None)));
        assert!("q:1".parse::<OpSelector>().is_err());
        let j = JordanAlgebra::make_full(1).unwrap();
        assert!(show(&j, &OpSelector::Pi(Side::Plus, Some(2)), None).is_err());
    }
}
