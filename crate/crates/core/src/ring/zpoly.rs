//! Sparse multivariate polynomials in `z1..zn` with `λ`-polynomial coefficients.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use smallvec::SmallVec;

use super::{LambdaPoly, Scalar};

/// Exponent vector; ordered graded-lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(SmallVec<[u16; 10]>);

impl Monomial {
    pub fn one(n: usize) -> Self {
        Monomial(SmallVec::from_elem(0, n))
    }

    pub fn var(n: usize, i: usize) -> Self {
        let mut m = Self::one(n);
        m.0[i] = 1;
        m
    }

    pub fn from_exponents(exps: &[u16]) -> Self {
        Monomial(SmallVec::from_slice(exps))
    }

    pub fn exponents(&self) -> &[u16] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `self / other`, assuming `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn get(&self, i: usize) -> u16 {
        self.0[i]
    }

    pub fn with(&self, i: usize, e: u16) -> Monomial {
        let mut m = self.clone();
        m.0[i] = e;
        m
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A polynomial in `n` coordinates; zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ZPoly {
    nvars: usize,
    terms: BTreeMap<Monomial, LambdaPoly>,
}

impl ZPoly {
    pub fn zero(nvars: usize) -> Self {
        ZPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: LambdaPoly) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(Monomial::one(nvars), c);
        p
    }

    pub fn scalar(nvars: usize, c: Scalar) -> Self {
        Self::constant(nvars, LambdaPoly::constant(c))
    }

    pub fn one(nvars: usize) -> Self {
        Self::scalar(nvars, Scalar::one())
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(Monomial::var(nvars, i), LambdaPoly::one());
        p
    }

    pub fn monomial(mono: Monomial, c: LambdaPoly) -> Self {
        let mut p = Self::zero(mono.len());
        p.add_term(mono, c);
        p
    }

    /// The linear form `Σ coeffs[i] z_i`.
    pub fn linear(coeffs: &[Scalar]) -> Self {
        let n = coeffs.len();
        let mut p = Self::zero(n);
        for (i, c) in coeffs.iter().enumerate() {
            p.add_term(Monomial::var(n, i), LambdaPoly::constant(c.clone()));
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &LambdaPoly)> {
        self.terms.iter()
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

    pub fn coeff(&self, m: &Monomial) -> LambdaPoly {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, m: Monomial, c: LambdaPoly) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    /// Largest term under graded-lex order.
    pub fn leading(&self) -> Option<(&Monomial, &LambdaPoly)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Maximal λ-degree over all coefficients.
    pub fn lambda_degree(&self) -> Option<usize> {
        self.terms.values().filter_map(LambdaPoly::degree).max()
    }

    pub fn scale(&self, s: &Scalar) -> ZPoly {
        if s.is_zero() {
            return ZPoly::zero(self.nvars);
        }
        ZPoly { nvars: self.nvars, terms: self.terms.iter().map(|(m, c)| (m.clone(), c.scale(s))).collect() }
    }

    pub fn scale_lambda(&self, s: &LambdaPoly) -> ZPoly {
        let mut out = ZPoly::zero(self.nvars);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), c * s);
        }
        out
    }

    pub fn mul_monomial(&self, mono: &Monomial, c: &LambdaPoly) -> ZPoly {
        let mut out = ZPoly::zero(self.nvars);
        for (m, a) in &self.terms {
            out.add_term(m.mul(mono), a * c);
        }
        out
    }

    pub fn pow(&self, k: u32) -> ZPoly {
        let mut acc = ZPoly::one(self.nvars);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    pub fn derive(&self, i: usize) -> ZPoly {
        let mut out = ZPoly::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.get(i);
            if e > 0 {
                out.add_term(m.with(i, e - 1), c.scale(&Scalar::from_int(e as i64)));
            }
        }
        out
    }

    pub fn eval(&self, point: &[Scalar]) -> LambdaPoly {
        let mut acc = LambdaPoly::zero();
        for (m, c) in &self.terms {
            let mut v = Scalar::one();
            for (x, &e) in point.iter().zip(m.exponents()) {
                if e > 0 {
                    v = &v * &x.pow(e as u32);
                }
            }
            acc = &acc + &c.scale(&v);
        }
        acc
    }

    /// Substitute `z_i ↦ images[i]`.
    pub fn compose(&self, images: &[ZPoly]) -> ZPoly {
        let nv = images.first().map_or(self.nvars, ZPoly::nvars);
        let mut out = ZPoly::zero(nv);
        for (m, c) in &self.terms {
            let mut t = ZPoly::constant(nv, c.clone());
            for (img, &e) in images.iter().zip(m.exponents()) {
                for _ in 0..e {
                    t = &t * img;
                }
            }
            out = &out + &t;
        }
        out
    }

    /// `p(-z)`.
    pub fn reflect(&self) -> ZPoly {
        ZPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), if m.degree() % 2 == 1 { -c } else { c.clone() }))
                .collect(),
        }
    }

    pub fn map_coeffs(&self, f: impl Fn(&LambdaPoly) -> LambdaPoly) -> ZPoly {
        let mut out = ZPoly::zero(self.nvars);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), f(c));
        }
        out
    }

    pub fn subst_lambda(&self, value: &LambdaPoly) -> ZPoly {
        self.map_coeffs(|c| c.subst(value))
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`.
    ///
    /// `d` must have a λ-free leading coefficient. With a single divisor the
    /// division algorithm leaves a zero remainder iff `d | self`, so the first
    /// leading term not divisible by `lt(d)` settles the question.
    pub fn div_exact(&self, d: &ZPoly) -> Option<ZPoly> {
        let (lm_d, lc_d) = d.leading()?;
        if !lc_d.is_constant() {
            return None;
        }
        let inv = lc_d.coeff(0).inv().ok()?;
        let mut rem = self.clone();
        let mut quot = ZPoly::zero(self.nvars);
        while let Some((lm, lc)) = rem.leading() {
            if !lm_d.divides(lm) {
                return None;
            }
            let shift = lm.div(lm_d);
            let qc = lc.scale(&inv);
            rem.sub_shifted(d, &shift, &qc);
            quot.add_term(shift, qc);
        }
        Some(quot)
    }

    fn sub_shifted(&mut self, d: &ZPoly, shift: &Monomial, c: &LambdaPoly) {
        for (m, a) in &d.terms {
            self.add_term(m.mul(shift), -(a * c));
        }
    }
}

impl<'a> Add<&'a ZPoly> for &'a ZPoly {
    type Output = ZPoly;
    fn add(self, rhs: &'a ZPoly) -> ZPoly {
        let (mut big, small) =
            if self.terms.len() >= rhs.terms.len() { (self.clone(), rhs) } else { (rhs.clone(), self) };
        for (m, c) in &small.terms {
            big.add_term(m.clone(), c.clone());
        }
        big
    }
}

impl<'a> Sub<&'a ZPoly> for &'a ZPoly {
    type Output = ZPoly;
    fn sub(self, rhs: &'a ZPoly) -> ZPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl<'a> Mul<&'a ZPoly> for &'a ZPoly {
    type Output = ZPoly;
    fn mul(self, rhs: &'a ZPoly) -> ZPoly {
        let mut out = ZPoly::zero(self.nvars.max(rhs.nvars));
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Neg for &ZPoly {
    type Output = ZPoly;
    fn neg(self) -> ZPoly {
        ZPoly { nvars: self.nvars, terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
}

impl Neg for ZPoly {
    type Output = ZPoly;
    fn neg(self) -> ZPoly {
        -&self
    }
}
