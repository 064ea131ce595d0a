//! Normal-ordered differential operators: coefficients on the left, derivatives on the right.

mod diffop;
mod fourier;

pub use diffop::{DiffOp, VecKey};
pub use fourier::{fourier, u_monomial, PolyOpPlus};

use std::collections::{BTreeMap, HashMap};
use std::fmt::Debug;
use std::sync::Arc;

use crate::ring::{LambdaPoly, Monomial, RingCtx, Scalar, SuperFn, ZPoly};

/// Coefficient rings an operator can carry.
pub trait OpCoeff: Clone + PartialEq + Debug + Send + Sync {
    type Space: Clone + Debug + Send + Sync;
    fn zero_in(space: &Self::Space) -> Self;
    fn one_in(space: &Self::Space) -> Self;
    fn nvars(space: &Self::Space) -> usize;
    fn same_space(a: &Self::Space, b: &Self::Space) -> bool;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn derive(&self, i: usize) -> Self;
    fn scale(&self, s: &Scalar) -> Self;
    fn scale_lambda(&self, s: &LambdaPoly) -> Self;
    fn subst_lambda(&self, v: &LambdaPoly) -> Self;
}

impl OpCoeff for SuperFn {
    type Space = Arc<RingCtx>;
    fn zero_in(space: &Self::Space) -> Self {
        SuperFn::zero(space)
    }
    fn one_in(space: &Self::Space) -> Self {
        SuperFn::one(space)
    }
    fn nvars(space: &Self::Space) -> usize {
        space.n()
    }
    fn same_space(a: &Self::Space, b: &Self::Space) -> bool {
        RingCtx::same(a, b)
    }
    fn is_zero(&self) -> bool {
        SuperFn::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn derive(&self, i: usize) -> Self {
        SuperFn::derive(self, i)
    }
    fn scale(&self, s: &Scalar) -> Self {
        SuperFn::scale(self, s)
    }
    fn scale_lambda(&self, s: &LambdaPoly) -> Self {
        SuperFn::scale_lambda(self, s)
    }
    fn subst_lambda(&self, v: &LambdaPoly) -> Self {
        SuperFn::subst_lambda(self, v)
    }
}

impl OpCoeff for ZPoly {
    type Space = usize;
    fn zero_in(space: &usize) -> Self {
        ZPoly::zero(*space)
    }
    fn one_in(space: &usize) -> Self {
        ZPoly::one(*space)
    }
    fn nvars(space: &usize) -> usize {
        *space
    }
    fn same_space(a: &usize, b: &usize) -> bool {
        a == b
    }
    fn is_zero(&self) -> bool {
        ZPoly::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn derive(&self, i: usize) -> Self {
        ZPoly::derive(self, i)
    }
    fn scale(&self, s: &Scalar) -> Self {
        ZPoly::scale(self, s)
    }
    fn scale_lambda(&self, s: &LambdaPoly) -> Self {
        ZPoly::scale_lambda(self, s)
    }
    fn subst_lambda(&self, v: &LambdaPoly) -> Self {
        ZPoly::subst_lambda(self, v)
    }
}

/// `Σ_β c_β ∂^β`, with no zero coefficient stored.
#[derive(Clone, Debug)]
pub struct Operator<C: OpCoeff> {
    space: C::Space,
    terms: BTreeMap<Monomial, C>,
}

impl<C: OpCoeff> PartialEq for Operator<C> {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

fn binomial(n: u16, k: u16) -> i64 {
    (0..k as i64).fold(1i64, |acc, i| acc * (n as i64 - i) / (i + 1))
}

/// Every multi-index `γ ≤ α`.
fn sub_indices(alpha: &Monomial) -> Vec<Monomial> {
    let mut out = vec![Monomial::one(alpha.len())];
    for (i, &a) in alpha.exponents().iter().enumerate() {
        if a == 0 {
            continue;
        }
        let prev = std::mem::take(&mut out);
        for g in prev {
            for e in 0..=a {
                out.push(g.with(i, e));
            }
        }
    }
    out
}

impl<C: OpCoeff> Operator<C> {
    pub fn zero(space: &C::Space) -> Self {
        Operator { space: space.clone(), terms: BTreeMap::new() }
    }

    pub fn identity(space: &C::Space) -> Self {
        Self::from_coeff(C::one_in(space), space)
    }

    /// Multiplication by `c`.
    pub fn from_coeff(c: C, space: &C::Space) -> Self {
        let mut op = Self::zero(space);
        op.add_term(Monomial::one(C::nvars(space)), c);
        op
    }

    pub fn term(beta: Monomial, c: C, space: &C::Space) -> Self {
        let mut op = Self::zero(space);
        op.add_term(beta, c);
        op
    }

    /// `∂ᵢ`.
    pub fn partial(space: &C::Space, i: usize) -> Self {
        Self::term(Monomial::var(C::nvars(space), i), C::one_in(space), space)
    }

    /// `∂^v = Σ vᵢ ∂ᵢ`.
    pub fn directional(space: &C::Space, v: &[Scalar]) -> Self {
        let mut op = Self::zero(space);
        for (i, c) in v.iter().enumerate() {
            if !c.is_zero() {
                op.add_term(Monomial::var(C::nvars(space), i), C::one_in(space).scale(c));
            }
        }
        op
    }

    pub fn space(&self) -> &C::Space {
        &self.space
    }

    pub fn nvars(&self) -> usize {
        C::nvars(&self.space)
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &C)> {
        self.terms.iter()
    }

    pub fn coeff(&self, beta: &Monomial) -> C {
        self.terms.get(beta).cloned().unwrap_or_else(|| C::zero_in(&self.space))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, beta: Monomial, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(beta) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().add(&c);
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    fn assert_same(&self, other: &Self) {
        assert!(C::same_space(&self.space, &other.space), "operator context mismatch");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.assert_same(other);
        let mut out = self.clone();
        for (b, c) in &other.terms {
            out.add_term(b.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&Scalar::from_int(-1))
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        self.map(|c| c.scale(s))
    }

    pub fn scale_lambda(&self, s: &LambdaPoly) -> Self {
        self.map(|c| c.scale_lambda(s))
    }

    pub fn subst_lambda(&self, v: &LambdaPoly) -> Self {
        self.map(|c| c.subst_lambda(v))
    }

    pub fn map(&self, f: impl Fn(&C) -> C) -> Self {
        let mut out = Self::zero(&self.space);
        for (b, c) in &self.terms {
            out.add_term(b.clone(), f(c));
        }
        out
    }

    /// Left multiplication by a coefficient: `c ∘ A`.
    pub fn mul_left(&self, c: &C) -> Self {
        self.map(|a| c.mul(a))
    }

    /// Normal-ordered product `self ∘ other`, moving derivatives right by Leibniz:
    /// `∂^α b = Σ_{γ≤α} C(α,γ) ∂^γ(b) ∂^{α−γ}`.
    pub fn compose(&self, other: &Self) -> Self {
        self.assert_same(other);
        let mut out = Self::zero(&self.space);
        let mut cache: Vec<HashMap<Monomial, C>> = vec![HashMap::new(); other.terms.len()];
        let mut subs: HashMap<Monomial, Vec<Monomial>> = HashMap::new();
        for (alpha, a) in &self.terms {
            let gammas = subs.entry(alpha.clone()).or_insert_with(|| sub_indices(alpha)).clone();
            for (bi, (beta, b)) in other.terms.iter().enumerate() {
                for gamma in &gammas {
                    let db = derivative(&mut cache[bi], b, gamma);
                    if db.is_zero() {
                        continue;
                    }
                    let mult: i64 =
                        alpha.exponents().iter().zip(gamma.exponents()).map(|(&x, &g)| binomial(x, g)).product();
                    let mut c = a.mul(&db);
                    if mult != 1 {
                        c = c.scale(&Scalar::from_int(mult));
                    }
                    out.add_term(alpha.div(gamma).mul(beta), c);
                }
            }
        }
        out
    }

    /// `[A, B] = AB − BA`.
    pub fn commutator(&self, other: &Self) -> Self {
        self.compose(other).sub(&other.compose(self))
    }

    /// `Σ c_β ∂^β(f)`.
    pub fn apply(&self, f: &C) -> C {
        let mut cache = HashMap::new();
        let mut acc = C::zero_in(&self.space);
        for (beta, c) in &self.terms {
            let d = derivative(&mut cache, f, beta);
            if !d.is_zero() {
                acc = acc.add(&c.mul(&d));
            }
        }
        acc
    }

    /// Highest total derivative order; `None` for the zero operator.
    pub fn order(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// The part of exact order `k`.
    pub fn part_of_order(&self, k: u32) -> Self {
        let mut out = Self::zero(&self.space);
        for (b, c) in &self.terms {
            if b.degree() == k {
                out.add_term(b.clone(), c.clone());
            }
        }
        out
    }
}

fn derivative<C: OpCoeff>(cache: &mut HashMap<Monomial, C>, f: &C, gamma: &Monomial) -> C {
    if gamma.is_one() {
        return f.clone();
    }
    if let Some(d) = cache.get(gamma) {
        return d.clone();
    }
    let i = gamma.exponents().iter().position(|&e| e > 0).expect("nonzero index");
    let prev = gamma.with(i, gamma.get(i) - 1);
    let d = derivative(cache, f, &prev).derive(i);
    cache.insert(gamma.clone(), d.clone());
    d
}
