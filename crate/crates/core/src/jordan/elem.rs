use crate::ring::{Scalar, ZPoly};

/// Coordinates a Jordan element can carry: numbers or polynomials in `z`.
pub trait Coeff: Clone + PartialEq + std::fmt::Debug {
    fn zero_like(&self) -> Self;
    fn c_is_zero(&self) -> bool;
    fn c_add(&self, o: &Self) -> Self;
    fn c_sub(&self, o: &Self) -> Self;
    fn c_mul(&self, o: &Self) -> Self;
    fn c_scale(&self, s: &Scalar) -> Self;
}

impl Coeff for Scalar {
    fn zero_like(&self) -> Self {
        Scalar::zero()
    }
    fn c_is_zero(&self) -> bool {
        self.is_zero()
    }
    fn c_add(&self, o: &Self) -> Self {
        self + o
    }
    fn c_sub(&self, o: &Self) -> Self {
        self - o
    }
    fn c_mul(&self, o: &Self) -> Self {
        self * o
    }
    fn c_scale(&self, s: &Scalar) -> Self {
        self * s
    }
}

impl Coeff for ZPoly {
    fn zero_like(&self) -> Self {
        ZPoly::zero(self.nvars())
    }
    fn c_is_zero(&self) -> bool {
        self.is_zero()
    }
    fn c_add(&self, o: &Self) -> Self {
        self + o
    }
    fn c_sub(&self, o: &Self) -> Self {
        self - o
    }
    fn c_mul(&self, o: &Self) -> Self {
        self * o
    }
    fn c_scale(&self, s: &Scalar) -> Self {
        self.scale(s)
    }
}

/// A Jordan element in basis coordinates.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct JElem<T> {
    coords: Vec<T>,
}

impl<T: Coeff> JElem<T> {
    pub fn new(coords: Vec<T>) -> Self {
        JElem { coords }
    }

    pub fn coords(&self) -> &[T] {
        &self.coords
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Coeff::c_is_zero)
    }

    pub fn add(&self, o: &Self) -> Self {
        JElem::new(self.coords.iter().zip(&o.coords).map(|(a, b)| a.c_add(b)).collect())
    }

    pub fn sub(&self, o: &Self) -> Self {
        JElem::new(self.coords.iter().zip(&o.coords).map(|(a, b)| a.c_sub(b)).collect())
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        JElem::new(self.coords.iter().map(|a| a.c_scale(s)).collect())
    }
}

impl JElem<Scalar> {
    pub fn basis(n: usize, i: usize) -> Self {
        let mut c = vec![Scalar::zero(); n];
        c[i] = Scalar::one();
        JElem::new(c)
    }

    pub fn zero(n: usize) -> Self {
        JElem::new(vec![Scalar::zero(); n])
    }
}

impl JElem<ZPoly> {
    /// Constant polynomial coordinates in `nvars` variables.
    pub fn lift(x: &JElem<Scalar>, nvars: usize) -> Self {
        JElem::new(x.coords.iter().map(|c| ZPoly::scalar(nvars, c.clone())).collect())
    }
}
