//! Fractions `p / F^k` over a fixed norm polynomial `F`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, RwLock};

use super::{LambdaPoly, RingError, Scalar, ZPoly};

/// The ambient data shared by every function over one algebra: the number of
/// coordinates, the rank `r = deg F`, the norm `F` and its gradient.
pub struct RingCtx {
    n: usize,
    r: usize,
    norm: ZPoly,
    grad: Vec<ZPoly>,
    powers: RwLock<Vec<ZPoly>>,
}

impl RingCtx {
    pub fn new(n: usize, r: usize, norm: ZPoly) -> Arc<Self> {
        let grad = (0..n).map(|i| norm.derive(i)).collect();
        let powers = RwLock::new(vec![ZPoly::one(n), norm.clone()]);
        Arc::new(RingCtx { n, r, norm, grad, powers })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn norm(&self) -> &ZPoly {
        &self.norm
    }

    pub fn norm_grad(&self, i: usize) -> &ZPoly {
        &self.grad[i]
    }

    /// `F^k`, memoised.
    pub fn norm_pow(&self, k: u32) -> ZPoly {
        let k = k as usize;
        if let Some(p) = self.powers.read().unwrap().get(k) {
            return p.clone();
        }
        let mut cache = self.powers.write().unwrap();
        while cache.len() <= k {
            let next = &cache[cache.len() - 1] * &self.norm;
            cache.push(next);
        }
        cache[k].clone()
    }

    pub fn same(a: &Arc<RingCtx>, b: &Arc<RingCtx>) -> bool {
        Arc::ptr_eq(a, b) || (a.n == b.n && a.r == b.r && a.norm == b.norm)
    }
}

impl fmt::Debug for RingCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RingCtx").field("n", &self.n).field("r", &self.r).finish()
    }
}

/// `num / F^k` with `k` minimal.
#[derive(Clone)]
pub struct LocFn {
    num: ZPoly,
    k: u32,
    ctx: Arc<RingCtx>,
}

impl PartialEq for LocFn {
    fn eq(&self, other: &Self) -> bool {
        self.k == other.k && self.num == other.num
    }
}

impl Eq for LocFn {}

impl fmt::Debug for LocFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LocFn({:?} / F^{})", self.num, self.k)
    }
}

impl LocFn {
    /// Build `num / F^k` and cancel common powers of `F`.
    pub fn new(ctx: &Arc<RingCtx>, num: ZPoly, k: u32) -> Self {
        let mut f = LocFn { num, k, ctx: ctx.clone() };
        f.canonicalize();
        f
    }

    pub fn from_poly(ctx: &Arc<RingCtx>, num: ZPoly) -> Self {
        LocFn { num, k: 0, ctx: ctx.clone() }
    }

    pub fn zero(ctx: &Arc<RingCtx>) -> Self {
        Self::from_poly(ctx, ZPoly::zero(ctx.n))
    }

    pub fn one(ctx: &Arc<RingCtx>) -> Self {
        Self::from_poly(ctx, ZPoly::one(ctx.n))
    }

    /// `1 / F`.
    pub fn norm_inv(ctx: &Arc<RingCtx>) -> Self {
        LocFn { num: ZPoly::one(ctx.n), k: 1, ctx: ctx.clone() }
    }

    fn canonicalize(&mut self) {
        if self.num.is_zero() {
            self.k = 0;
            return;
        }
        while self.k > 0 {
            match self.num.div_exact(&self.ctx.norm) {
                Some(q) => {
                    self.num = q;
                    self.k -= 1;
                }
                None => break,
            }
        }
    }

    pub fn num(&self) -> &ZPoly {
        &self.num
    }

    pub fn denom_exp(&self) -> u32 {
        self.k
    }

    pub fn ctx(&self) -> &Arc<RingCtx> {
        &self.ctx
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_poly(&self) -> bool {
        self.k == 0
    }

    fn check(&self, other: &LocFn) -> Result<(), RingError> {
        if RingCtx::same(&self.ctx, &other.ctx) {
            Ok(())
        } else {
            Err(RingError::ContextMismatch)
        }
    }

    /// Numerator over the common denominator `F^k`, for `k >= self.k`.
    pub fn num_over(&self, k: u32) -> ZPoly {
        debug_assert!(k >= self.k);
        if k == self.k {
            self.num.clone()
        } else {
            &self.num * &self.ctx.norm_pow(k - self.k)
        }
    }

    pub fn try_add(&self, other: &LocFn) -> Result<LocFn, RingError> {
        self.check(other)?;
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.is_zero() {
            return Ok(other.clone());
        }
        let k = self.k.max(other.k);
        let num = &self.num_over(k) + &other.num_over(k);
        // equal exponents can cancel; otherwise the larger one survives
        if self.k == other.k {
            Ok(LocFn::new(&self.ctx, num, k))
        } else {
            Ok(LocFn { num, k, ctx: self.ctx.clone() })
        }
    }

    pub fn try_sub(&self, other: &LocFn) -> Result<LocFn, RingError> {
        self.try_add(&-other)
    }

    pub fn try_mul(&self, other: &LocFn) -> Result<LocFn, RingError> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(LocFn::zero(&self.ctx));
        }
        // F ∤ a and F ∤ b need not imply F ∤ ab when F is reducible
        Ok(LocFn::new(&self.ctx, &self.num * &other.num, self.k + other.k))
    }

    pub fn mul_poly(&self, p: &ZPoly) -> LocFn {
        LocFn::new(&self.ctx, &self.num * p, self.k)
    }

    /// Multiply by `F`.
    pub fn mul_norm(&self) -> LocFn {
        if self.is_zero() {
            return self.clone();
        }
        if self.k > 0 {
            LocFn { num: self.num.clone(), k: self.k - 1, ctx: self.ctx.clone() }
        } else {
            LocFn { num: &self.num * &self.ctx.norm, k: 0, ctx: self.ctx.clone() }
        }
    }

    /// Divide by `F`.
    pub fn div_norm(&self) -> LocFn {
        if self.is_zero() {
            return self.clone();
        }
        LocFn { num: self.num.clone(), k: self.k + 1, ctx: self.ctx.clone() }
    }

    pub fn scale(&self, s: &Scalar) -> LocFn {
        LocFn { num: self.num.scale(s), k: if s.is_zero() { 0 } else { self.k }, ctx: self.ctx.clone() }
    }

    pub fn scale_lambda(&self, s: &LambdaPoly) -> LocFn {
        LocFn::new(&self.ctx, self.num.scale_lambda(s), self.k)
    }

    pub fn subst_lambda(&self, value: &LambdaPoly) -> LocFn {
        LocFn::new(&self.ctx, self.num.subst_lambda(value), self.k)
    }

    /// `∂ᵢ(p/F^k) = (F ∂ᵢp − k p ∂ᵢF) / F^{k+1}`.
    pub fn derive(&self, i: usize) -> LocFn {
        let dp = self.num.derive(i);
        if self.k == 0 {
            return LocFn::from_poly(&self.ctx, dp);
        }
        let a = &self.ctx.norm * &dp;
        let b = (&self.num * &self.ctx.grad[i]).scale(&Scalar::from_int(self.k as i64));
        LocFn::new(&self.ctx, &a - &b, self.k + 1)
    }

    /// The function `q ↦ f(−q)`; uses that `F` is homogeneous of degree `r`.
    pub fn reflect(&self) -> LocFn {
        let sign = if (self.ctx.r as u64 * self.k as u64) % 2 == 1 { -1 } else { 1 };
        LocFn { num: self.num.reflect().scale(&Scalar::from_int(sign)), k: self.k, ctx: self.ctx.clone() }
    }

    /// Value at a point with `F(point) ≠ 0`.
    pub fn eval(&self, point: &[Scalar]) -> Result<LambdaPoly, RingError> {
        let f = self.ctx.norm.eval(point);
        let fv = f.coeff(0);
        let inv = fv.inv()?.pow(self.k);
        Ok(self.num.eval(point).scale(&inv))
    }

    /// Twice the Euler degree, `None` for zero.
    pub fn half_degree(&self) -> Result<Option<i64>, RingError> {
        if self.is_zero() {
            return Ok(None);
        }
        if !self.num.is_homogeneous() {
            return Err(RingError::NotHomogeneous);
        }
        let d = self.num.total_degree().unwrap_or(0) as i64;
        Ok(Some(2 * (d - self.ctx.r as i64 * self.k as i64)))
    }
}

impl Neg for &LocFn {
    type Output = LocFn;
    fn neg(self) -> LocFn {
        LocFn { num: -&self.num, k: self.k, ctx: self.ctx.clone() }
    }
}

impl<'a> Add<&'a LocFn> for &'a LocFn {
    type Output = LocFn;
    fn add(self, rhs: &'a LocFn) -> LocFn {
        self.try_add(rhs).expect("LocFn context mismatch")
    }
}

impl<'a> Sub<&'a LocFn> for &'a LocFn {
    type Output = LocFn;
    fn sub(self, rhs: &'a LocFn) -> LocFn {
        self.try_sub(rhs).expect("LocFn context mismatch")
    }
}

impl<'a> Mul<&'a LocFn> for &'a LocFn {
    type Output = LocFn;
    fn mul(self, rhs: &'a LocFn) -> LocFn {
        self.try_mul(rhs).expect("LocFn context mismatch")
    }
}
