//! Functions on the double cover: `even + odd·w` with `w² = F`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use super::{LambdaPoly, LocFn, RingCtx, RingError, Scalar, ZPoly};

/// Euler degree: a half-integer, or `−∞` for the zero function.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum Grade {
    NegInfinity,
    /// `Half(h)` is the degree `h / 2`.
    Half(i64),
}

impl Grade {
    pub fn from_int(d: i64) -> Self {
        Grade::Half(2 * d)
    }

    pub fn halves(self) -> Option<i64> {
        match self {
            Grade::NegInfinity => None,
            Grade::Half(h) => Some(h),
        }
    }
}

impl Ord for Grade {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Grade::NegInfinity, Grade::NegInfinity) => Ordering::Equal,
            (Grade::NegInfinity, _) => Ordering::Less,
            (_, Grade::NegInfinity) => Ordering::Greater,
            (Grade::Half(a), Grade::Half(b)) => a.cmp(b),
        }
    }
}

impl PartialOrd for Grade {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for Grade {
    type Output = Grade;
    fn add(self, rhs: Grade) -> Grade {
        match (self, rhs) {
            (Grade::Half(a), Grade::Half(b)) => Grade::Half(a + b),
            _ => Grade::NegInfinity,
        }
    }
}

impl fmt::Display for Grade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Grade::NegInfinity => write!(f, "-inf"),
            Grade::Half(h) if h % 2 == 0 => write!(f, "{}", h / 2),
            Grade::Half(h) => write!(f, "{h}/2"),
        }
    }
}

/// `even + odd·w`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SuperFn {
    even: LocFn,
    odd: LocFn,
}

impl SuperFn {
    pub fn from_parts(even: LocFn, odd: LocFn) -> Result<Self, RingError> {
        if !RingCtx::same(even.ctx(), odd.ctx()) {
            return Err(RingError::ContextMismatch);
        }
        Ok(SuperFn { even, odd })
    }

    pub fn from_even(even: LocFn) -> Self {
        let odd = LocFn::zero(even.ctx());
        SuperFn { even, odd }
    }

    pub fn from_odd(odd: LocFn) -> Self {
        let even = LocFn::zero(odd.ctx());
        SuperFn { even, odd }
    }

    pub fn zero(ctx: &Arc<RingCtx>) -> Self {
        Self::from_even(LocFn::zero(ctx))
    }

    pub fn one(ctx: &Arc<RingCtx>) -> Self {
        Self::from_even(LocFn::one(ctx))
    }

    pub fn from_poly(ctx: &Arc<RingCtx>, p: ZPoly) -> Self {
        Self::from_even(LocFn::from_poly(ctx, p))
    }

    pub fn constant(ctx: &Arc<RingCtx>, c: LambdaPoly) -> Self {
        Self::from_poly(ctx, ZPoly::constant(ctx.n(), c))
    }

    pub fn scalar(ctx: &Arc<RingCtx>, c: Scalar) -> Self {
        Self::from_poly(ctx, ZPoly::scalar(ctx.n(), c))
    }

    pub fn var(ctx: &Arc<RingCtx>, i: usize) -> Self {
        Self::from_poly(ctx, ZPoly::var(ctx.n(), i))
    }

    pub fn norm(ctx: &Arc<RingCtx>) -> Self {
        Self::from_poly(ctx, ctx.norm().clone())
    }

    /// The square root `w` of `F`.
    pub fn w(ctx: &Arc<RingCtx>) -> Self {
        Self::from_odd(LocFn::one(ctx))
    }

    /// `w⁻¹ = w / F`.
    pub fn w_inv(ctx: &Arc<RingCtx>) -> Self {
        Self::from_odd(LocFn::norm_inv(ctx))
    }

    /// `1 / F`.
    pub fn norm_inv(ctx: &Arc<RingCtx>) -> Self {
        Self::from_even(LocFn::norm_inv(ctx))
    }

    pub fn even(&self) -> &LocFn {
        &self.even
    }

    pub fn odd(&self) -> &LocFn {
        &self.odd
    }

    pub fn ctx(&self) -> &Arc<RingCtx> {
        self.even.ctx()
    }

    pub fn is_zero(&self) -> bool {
        self.even.is_zero() && self.odd.is_zero()
    }

    /// Both parts are polynomials (no `F` in a denominator).
    pub fn is_polynomial(&self) -> bool {
        self.even.is_poly() && self.odd.is_poly()
    }

    pub fn max_denom_exp(&self) -> u32 {
        self.even.denom_exp().max(self.odd.denom_exp())
    }

    pub fn try_add(&self, other: &SuperFn) -> Result<SuperFn, RingError> {
        Ok(SuperFn { even: self.even.try_add(&other.even)?, odd: self.odd.try_add(&other.odd)? })
    }

    pub fn try_mul(&self, other: &SuperFn) -> Result<SuperFn, RingError> {
        let mut even = self.even.try_mul(&other.even)?;
        if !self.odd.is_zero() && !other.odd.is_zero() {
            even = even.try_add(&self.odd.try_mul(&other.odd)?.mul_norm())?;
        }
        let odd = self.even.try_mul(&other.odd)?.try_add(&self.odd.try_mul(&other.even)?)?;
        Ok(SuperFn { even, odd })
    }

    /// Multiply by `w`.
    pub fn mul_w(&self) -> SuperFn {
        SuperFn { even: self.odd.mul_norm(), odd: self.even.clone() }
    }

    pub fn mul_loc(&self, f: &LocFn) -> SuperFn {
        SuperFn { even: &self.even * f, odd: &self.odd * f }
    }

    pub fn scale(&self, s: &Scalar) -> SuperFn {
        SuperFn { even: self.even.scale(s), odd: self.odd.scale(s) }
    }

    pub fn scale_lambda(&self, s: &LambdaPoly) -> SuperFn {
        SuperFn { even: self.even.scale_lambda(s), odd: self.odd.scale_lambda(s) }
    }

    pub fn subst_lambda(&self, value: &LambdaPoly) -> SuperFn {
        SuperFn { even: self.even.subst_lambda(value), odd: self.odd.subst_lambda(value) }
    }

    /// `∂ᵢ(a + bw) = ∂ᵢa + (∂ᵢb + ½ b ∂ᵢF / F) w`.
    pub fn derive(&self, i: usize) -> SuperFn {
        let even = self.even.derive(i);
        let odd = if self.odd.is_zero() {
            self.odd.clone()
        } else {
            let chain = self.odd.mul_poly(self.ctx().norm_grad(i)).div_norm().scale(&Scalar::frac(1, 2));
            &self.odd.derive(i) + &chain
        };
        SuperFn { even, odd }
    }

    /// Euler degree with `deg zᵢ = 1`, `deg w = r/2`, `deg F⁻¹ = −r`.
    pub fn grade(&self) -> Result<Grade, RingError> {
        let r = self.ctx().r() as i64;
        let e = self.even.half_degree()?;
        let o = self.odd.half_degree()?.map(|h| h + r);
        match (e, o) {
            (None, None) => Ok(Grade::NegInfinity),
            (Some(h), None) | (None, Some(h)) => Ok(Grade::Half(h)),
            (Some(a), Some(b)) if a == b => Ok(Grade::Half(a)),
            _ => Err(RingError::NotHomogeneous),
        }
    }

    /// Split into Euler-homogeneous pieces, keyed by grade.
    pub fn homogeneous_parts(&self) -> Vec<(Grade, SuperFn)> {
        let ctx = self.ctx();
        let r = ctx.r() as i64;
        let mut parts: std::collections::BTreeMap<i64, SuperFn> = Default::default();
        for (loc, shift, odd) in [(&self.even, 0, false), (&self.odd, r, true)] {
            let k = loc.denom_exp();
            for (m, c) in loc.num().terms() {
                let h = 2 * (m.degree() as i64 - r * k as i64) + shift;
                let piece = LocFn::new(ctx, ZPoly::monomial(m.clone(), c.clone()), k);
                let f = if odd { SuperFn::from_odd(piece) } else { SuperFn::from_even(piece) };
                let slot = parts.entry(h).or_insert_with(|| SuperFn::zero(ctx));
                *slot = &*slot + &f;
            }
        }
        parts.into_iter().filter(|(_, f)| !f.is_zero()).map(|(h, f)| (Grade::Half(h), f)).collect()
    }

    /// Largest grade among homogeneous pieces.
    pub fn max_grade(&self) -> Grade {
        self.homogeneous_parts().last().map_or(Grade::NegInfinity, |(g, _)| *g)
    }

    pub fn eval(&self, point: &[Scalar], w_value: &Scalar) -> Result<LambdaPoly, RingError> {
        let e = self.even.eval(point)?;
        let o = self.odd.eval(point)?;
        Ok(&e + &o.scale(w_value))
    }
}

impl Neg for &SuperFn {
    type Output = SuperFn;
    fn neg(self) -> SuperFn {
        SuperFn { even: -&self.even, odd: -&self.odd }
    }
}

impl<'a> Add<&'a SuperFn> for &'a SuperFn {
    type Output = SuperFn;
    fn add(self, rhs: &'a SuperFn) -> SuperFn {
        self.try_add(rhs).expect("SuperFn context mismatch")
    }
}

impl<'a> Sub<&'a SuperFn> for &'a SuperFn {
    type Output = SuperFn;
    fn sub(self, rhs: &'a SuperFn) -> SuperFn {
        self.try_add(&-rhs).expect("SuperFn context mismatch")
    }
}

impl<'a> Mul<&'a SuperFn> for &'a SuperFn {
    type Output = SuperFn;
    fn mul(self, rhs: &'a SuperFn) -> SuperFn {
        self.try_mul(rhs).expect("SuperFn context mismatch")
    }
}
