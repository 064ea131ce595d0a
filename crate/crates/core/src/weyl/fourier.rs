//! Operators on `p⁺` with polynomial coefficients in `u₁..uₙ`, and the Fourier
//! anti-isomorphism onto constant-denominator operators on `p⁻`.

use std::fmt;

use super::{DiffOp, Operator};
use crate::jordan::JordanAlgebra;
use crate::ring::{LocFn, Monomial, SuperFn, ZPoly};

pub type PolyOpPlus = Operator<ZPoly>;

fn u_name(n: usize, i: usize) -> String {
    if n == 1 {
        "u".into()
    } else {
        format!("u{}", i + 1)
    }
}

impl fmt::Display for Operator<ZPoly> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.nvars();
        let mut parts = Vec::new();
        for (beta, c) in self.terms().rev() {
            let mut suffix = String::new();
            for (i, &e) in beta.exponents().iter().enumerate() {
                if e > 0 {
                    suffix.push_str(if suffix.is_empty() { " * " } else { "*" });
                    suffix.push_str(&format!("du{}", i + 1));
                    if e > 1 {
                        suffix.push_str(&format!("^{e}"));
                    }
                }
            }
            for (m, coef) in c.terms().rev() {
                let mut t = format!("({coef})");
                for (i, &e) in m.exponents().iter().enumerate() {
                    match e {
                        0 => {}
                        1 => t.push_str(&format!("*{}", u_name(n, i))),
                        _ => t.push_str(&format!("*{}^{e}", u_name(n, i))),
                    }
                }
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

/// The anti-isomorphism with `uᵢ ↦ ∂^{bⁱ} = Σₗ (G⁻¹)ᵢₗ ∂ₗ` and
/// `∂_{uₖ} ↦ tr(bₖ∘q)`.
///
/// `c(u) ∂_u^β` maps to `(Π Lₖ^{βₖ}) · c(D)`, which is already normal-ordered
/// because the image of `∂_u^β` is a function and `c(D)` has constant coefficients.
pub fn fourier(j: &JordanAlgebra, a: &PolyOpPlus) -> DiffOp {
    let n = j.n();
    let ctx = j.ctx();
    let images: Vec<ZPoly> = (0..n).map(|i| ZPoly::linear(&j.dual_gram()[i])).collect();
    let forms: Vec<ZPoly> = (0..n).map(|k| j.linear_form(&j.basis(k))).collect();
    let mut out = DiffOp::zero(ctx);
    for (beta, c) in a.terms() {
        let mut left = ZPoly::one(n);
        for (k, &e) in beta.exponents().iter().enumerate() {
            for _ in 0..e {
                left = &left * &forms[k];
            }
        }
        // exponents of c(D) are derivative multi-indices
        let c_of_d = c.compose(&images);
        for (gamma, coef) in c_of_d.terms() {
            let f = left.scale_lambda(coef);
            out.add_term(gamma.clone(), SuperFn::from_even(LocFn::from_poly(ctx, f)));
        }
    }
    out
}

/// `u^μ` as a multiplication operator.
pub fn u_monomial(n: usize, mono: Monomial) -> PolyOpPlus {
    PolyOpPlus::from_coeff(ZPoly::monomial(mono, crate::ring::LambdaPoly::one()), &n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{LambdaPoly, Scalar};

    #[test]
    fn rank_one_examples() {
        let j = JordanAlgebra::make_full(1).unwrap();
        let ctx = j.ctx();
        let du = PolyOpPlus::partial(&1, 0);
        let z = DiffOp::mul_fn(SuperFn::var(ctx, 0));
        assert_eq!(fourier(&j, &du), z);
        let u = u_monomial(1, Monomial::var(1, 0));
        let u_du = u.compose(&du);
        assert_eq!(fourier(&j, &u_du), z.compose(&DiffOp::partial(ctx, 0)));
        // v²∂_v + 2λv  ↦  z∂² + 2λ∂
        let v2 = u_monomial(1, Monomial::from_exponents(&[2]));
        let two_lambda = LambdaPoly::lambda().scale(&Scalar::from_int(2));
        let eta = v2.compose(&du).add(&u.scale_lambda(&two_lambda));
        let expected = DiffOp::parse(ctx, "(1)*z * d1^2 + (2)(L) * d1").unwrap();
        assert_eq!(fourier(&j, &eta), expected);
    }

    #[test]
    fn polyop_display() {
        let du = PolyOpPlus::partial(&2, 1);
        assert_eq!(du.to_string(), "(1) * du2");
    }
}
