//! Operators on the double cover with coefficients in `R(Z̃)`.

use std::fmt;
use std::sync::Arc;

use super::Operator;
use crate::linalg::SparseVec;
use crate::ring::{
    parse_superfn, superfn_terms, text::split_top_level, Grade, Monomial, RingCtx, RingError, Scalar, SuperFn,
};

pub type DiffOp = Operator<SuperFn>;

/// Coordinate of an operator in the vector space spanned by
/// `λ^p · z^μ · w^ε / F^K · ∂^β`: `(β, ε, μ, p)`.
pub type VecKey = (Monomial, bool, Monomial, usize);

impl Operator<SuperFn> {
    pub fn ctx(&self) -> &Arc<RingCtx> {
        self.space()
    }

    /// Multiplication by `f`.
    pub fn mul_fn(f: SuperFn) -> DiffOp {
        let ctx = f.ctx().clone();
        DiffOp::from_coeff(f, &ctx)
    }

    /// Multiplication by `w`.
    pub fn w(ctx: &Arc<RingCtx>) -> DiffOp {
        DiffOp::mul_fn(SuperFn::w(ctx))
    }

    pub fn max_denom_exp(&self) -> u32 {
        self.terms().map(|(_, c)| c.max_denom_exp()).max().unwrap_or(0)
    }

    /// Largest Euler grade of a coefficient's homogeneous piece.
    pub fn sharp_degree(&self) -> Grade {
        self.terms().map(|(_, c)| c.max_grade()).max().unwrap_or(Grade::NegInfinity)
    }

    /// The anti-automorphism fixing each `∂ᵢ`, negating each `zᵢ`, and sending `w ↦ iʳ w`.
    pub fn delta(&self) -> DiffOp {
        let ctx = self.ctx().clone();
        let twist = Scalar::i_pow(ctx.r() as i64);
        let mut out = DiffOp::zero(&ctx);
        for (beta, c) in self.terms() {
            let image = SuperFn::from_parts(c.even().reflect(), c.odd().reflect().scale(&twist))
                .expect("parts share a context");
            let d = DiffOp::term(beta.clone(), SuperFn::one(&ctx), &ctx);
            out = out.add(&d.compose(&DiffOp::mul_fn(image)));
        }
        out
    }

    /// `w ∘ A ∘ w⁻¹`.
    pub fn inn_w(&self) -> DiffOp {
        let ctx = self.ctx();
        DiffOp::w(ctx).compose(self).compose(&DiffOp::mul_fn(SuperFn::w_inv(ctx)))
    }

    /// `w⁻¹ ∘ A ∘ w`.
    pub fn inn_w_inv(&self) -> DiffOp {
        let ctx = self.ctx();
        DiffOp::mul_fn(SuperFn::w_inv(ctx)).compose(self).compose(&DiffOp::w(ctx))
    }

    /// Coordinates over the common denominator `F^k` (with `k ≥ max_denom_exp`).
    pub fn vectorize(&self, k: u32) -> SparseVec<VecKey> {
        let mut v = SparseVec::new();
        for (beta, c) in self.terms() {
            for (loc, odd) in [(c.even(), false), (c.odd(), true)] {
                if loc.is_zero() {
                    continue;
                }
                for (mono, lp) in loc.num_over(k).terms() {
                    for (p, s) in lp.coeffs().iter().enumerate() {
                        if !s.is_zero() {
                            v.insert((beta.clone(), odd, mono.clone(), p), s.clone());
                        }
                    }
                }
            }
        }
        v
    }

    pub fn parse(ctx: &Arc<RingCtx>, s: &str) -> Result<DiffOp, RingError> {
        let s = s.trim();
        let mut out = DiffOp::zero(ctx);
        if s == "0" {
            return Ok(out);
        }
        let n = ctx.n();
        for term in split_top_level(s, " + ") {
            let (coef, derivs) = match term.split_once(" * ") {
                Some((c, d)) => (c, Some(d)),
                None => (term, None),
            };
            let mut exps = vec![0u16; n];
            if let Some(d) = derivs {
                for factor in d.split('*') {
                    let bad = || RingError::Parse(format!("bad derivative `{factor}`"));
                    let body = factor.strip_prefix('d').ok_or_else(bad)?;
                    let (idx, e) = match body.split_once('^') {
                        Some((i, e)) => (i, e.parse::<u16>().map_err(|_| bad())?),
                        None => (body, 1),
                    };
                    let idx: usize = idx.parse().map_err(|_| bad())?;
                    if idx == 0 || idx > n {
                        return Err(bad());
                    }
                    exps[idx - 1] += e;
                }
            }
            let c = parse_superfn(ctx, coef)?;
            out.add_term(Monomial::from_exponents(&exps), c);
        }
        Ok(out)
    }
}

fn derivative_text(beta: &Monomial) -> String {
    beta.exponents()
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(i, &e)| if e == 1 { format!("d{}", i + 1) } else { format!("d{}^{e}", i + 1) })
        .collect::<Vec<_>>()
        .join("*")
}

/// Terms with the highest derivative multi-index first.
impl fmt::Display for Operator<SuperFn> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (beta, c) in self.terms().rev() {
            let suffix = if beta.is_one() { String::new() } else { format!(" * {}", derivative_text(beta)) };
            for t in superfn_terms(c) {
                parts.push(format!("{t}{suffix}"));
            }
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{LocFn, ZPoly};

    fn line() -> Arc<RingCtx> {
        RingCtx::new(1, 1, ZPoly::var(1, 0))
    }

    #[test]
    fn canonical_commutation() {
        let ctx = RingCtx::new(2, 1, ZPoly::var(2, 0));
        let d1 = DiffOp::partial(&ctx, 0);
        let z1 = DiffOp::mul_fn(SuperFn::var(&ctx, 0));
        let z2 = DiffOp::mul_fn(SuperFn::var(&ctx, 1));
        let expected = DiffOp::term(Monomial::var(2, 0), SuperFn::var(&ctx, 0), &ctx).add(&DiffOp::identity(&ctx));
        assert_eq!(d1.compose(&z1), expected);
        assert_eq!(d1.commutator(&z1), DiffOp::identity(&ctx));
        assert!(z1.commutator(&z2).is_zero());
    }

    #[test]
    fn w_products() {
        let ctx = line();
        let w = DiffOp::w(&ctx);
        assert_eq!(w.compose(&w), DiffOp::mul_fn(SuperFn::norm(&ctx)));
        // ∂ ∘ w = w∂ + ½ z⁻¹ w
        let d = DiffOp::partial(&ctx, 0);
        let half_w_over_z = SuperFn::from_odd(LocFn::norm_inv(&ctx).scale(&Scalar::frac(1, 2)));
        let expected = DiffOp::term(Monomial::var(1, 0), SuperFn::w(&ctx), &ctx).add(&DiffOp::mul_fn(half_w_over_z));
        assert_eq!(d.compose(&w), expected);
    }

    #[test]
    fn inner_by_w() {
        let ctx = line();
        let z = DiffOp::mul_fn(SuperFn::var(&ctx, 0));
        assert_eq!(z.inn_w(), z);
        assert_eq!(DiffOp::w(&ctx).inn_w(), DiffOp::w(&ctx));
        let d = DiffOp::partial(&ctx, 0);
        let expected = d.sub(&DiffOp::mul_fn(SuperFn::norm_inv(&ctx).scale(&Scalar::frac(1, 2))));
        assert_eq!(d.inn_w(), expected);
        assert_eq!(d.inn_w().inn_w_inv(), d);
    }

    #[test]
    fn delta_examples() {
        let ctx = RingCtx::new(4, 2, {
            let z = |i| ZPoly::var(4, i);
            &(&z(0) * &z(3)) - &(&z(1) * &z(2))
        });
        let z1d1 = DiffOp::term(Monomial::var(4, 0), SuperFn::var(&ctx, 0), &ctx);
        assert_eq!(z1d1.delta(), z1d1.neg().sub(&DiffOp::identity(&ctx)));
        assert_eq!(DiffOp::w(&ctx).delta(), DiffOp::w(&ctx).neg());
        let z1 = DiffOp::mul_fn(SuperFn::var(&ctx, 0));
        assert_eq!(z1.delta().delta(), z1);
    }

    #[test]
    fn text_round_trip() {
        let ctx = line();
        let op = DiffOp::parse(&ctx, "(-1)*z * d1^2 + (-2)(L) * d1").unwrap();
        assert_eq!(op.to_string(), "(-1)*z * d1^2 + (-2)(L) * d1");
        let op2 = DiffOp::w(&ctx).compose(&op);
        assert_eq!(DiffOp::parse(&ctx, &op2.to_string()).unwrap(), op2);
        assert!(DiffOp::parse(&ctx, "(1) * d2").is_err());
    }

    #[test]
    fn sharp_degrees() {
        let ctx = line();
        let w = DiffOp::w(&ctx);
        assert_eq!(w.sharp_degree(), Grade::Half(1));
        let w4 = (0..3).fold(w.clone(), |acc, _| acc.compose(&w));
        let op = w4.compose(&DiffOp::term(Monomial::var(1, 0).with(0, 2), SuperFn::one(&ctx), &ctx));
        assert_eq!(op.sharp_degree(), Grade::from_int(2));
        assert_eq!(op.order(), Some(2));
    }
}
