//! Gaussian rationals `a + b i` with arbitrary-precision parts.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::RingError;

/// An exact element of `Q(i)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Scalar {
    re: BigRational,
    im: BigRational,
}

impl Scalar {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Scalar { re, im }
    }

    pub fn real(re: BigRational) -> Self {
        Scalar { re, im: BigRational::zero() }
    }

    pub fn from_int(v: i64) -> Self {
        Self::real(BigRational::from_integer(BigInt::from(v)))
    }

    /// `num / den` as a real scalar. Panics if `den == 0`.
    pub fn frac(num: i64, den: i64) -> Self {
        Self::real(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn i() -> Self {
        Scalar { re: BigRational::zero(), im: BigRational::one() }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn re(&self) -> &BigRational {
        &self.re
    }

    pub fn im(&self) -> &BigRational {
        &self.im
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    /// `i^k` for any integer `k`.
    pub fn i_pow(k: i64) -> Self {
        match k.rem_euclid(4) {
            0 => Self::one(),
            1 => Self::i(),
            2 => Self::from_int(-1),
            _ => -Self::i(),
        }
    }

    pub fn inv(&self) -> Result<Scalar, RingError> {
        if self.is_zero() {
            return Err(RingError::DivisionByZero);
        }
        let norm = &self.re * &self.re + &self.im * &self.im;
        Ok(Scalar { re: &self.re / &norm, im: -(&self.im / &norm) })
    }

    pub fn div(&self, other: &Scalar) -> Result<Scalar, RingError> {
        Ok(self * &other.inv()?)
    }

    pub fn pow(&self, k: u32) -> Scalar {
        let mut acc = Scalar::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// An exact square root in `Q(i)`, if one exists.
    pub fn sqrt(&self) -> Option<Scalar> {
        if self.is_zero() {
            return Some(Scalar::zero());
        }
        if self.im.is_zero() {
            let root = rational_sqrt(&self.re.abs())?;
            return Some(if self.re.is_negative() {
                Scalar { re: BigRational::zero(), im: root }
            } else {
                Scalar::real(root)
            });
        }
        // (x + iy)^2 = a + bi  =>  x^2 = (a + |z|) / 2, y = b / (2x)
        let modulus = rational_sqrt(&(&self.re * &self.re + &self.im * &self.im))?;
        let two = BigRational::from_integer(BigInt::from(2));
        let x = rational_sqrt(&((&self.re + &modulus) / &two))?;
        if x.is_zero() {
            return None;
        }
        let y = &self.im / (&two * &x);
        Some(Scalar { re: x, im: y })
    }

    /// Canonical total order: by real part, then imaginary part.
    pub fn cmp_lex(&self, other: &Scalar) -> Ordering {
        self.re.cmp(&other.re).then_with(|| self.im.cmp(&other.im))
    }

    fn fmt_rational(q: &BigRational) -> String {
        if q.is_integer() {
            q.numer().to_string()
        } else {
            format!("{}/{}", q.numer(), q.denom())
        }
    }
}

fn rational_sqrt(q: &BigRational) -> Option<BigRational> {
    if q.is_negative() {
        return None;
    }
    let n = q.numer().sqrt();
    let d = q.denom().sqrt();
    if &(&n * &n) == q.numer() && &(&d * &d) == q.denom() {
        Some(BigRational::new(n, d))
    } else {
        None
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let re = Self::fmt_rational(&self.re);
        let im = Self::fmt_rational(&self.im);
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{re}"),
            (true, false) => write!(f, "{im}i"),
            (false, false) => {
                if self.im.is_negative() {
                    write!(f, "{re}{im}i")
                } else {
                    write!(f, "{re}+{im}i")
                }
            }
        }
    }
}

fn parse_rational(s: &str) -> Result<BigRational, RingError> {
    let s = s.trim();
    let bad = || RingError::Parse(format!("bad rational `{s}`"));
    if s.is_empty() {
        return Err(bad());
    }
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

impl FromStr for Scalar {
    type Err = RingError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let Some(body) = s.strip_suffix('i') else {
            return Ok(Scalar::real(parse_rational(s)?));
        };
        // split re/im at the last sign that is not the leading one
        let split = body.char_indices().skip(1).filter(|(_, c)| *c == '+' || *c == '-').map(|(idx, _)| idx).last();
        match split {
            Some(idx) => {
                let re = parse_rational(&body[..idx])?;
                let im_str = &body[idx..];
                let im = if im_str == "+" || im_str == "-" {
                    parse_rational(&format!("{im_str}1"))?
                } else {
                    parse_rational(im_str.trim_start_matches('+'))?
                };
                Ok(Scalar { re, im })
            }
            None => {
                let im = match body {
                    "" | "+" => BigRational::one(),
                    "-" => -BigRational::one(),
                    b => parse_rational(b)?,
                };
                Ok(Scalar { re: BigRational::zero(), im })
            }
        }
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &'a Scalar) -> Scalar {
        Scalar { re: &self.re + &rhs.re, im: &self.im + &rhs.im }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &'a Scalar) -> Scalar {
        Scalar { re: &self.re - &rhs.re, im: &self.im - &rhs.im }
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &'a Scalar) -> Scalar {
        if self.im.is_zero() && rhs.im.is_zero() {
            return Scalar::real(&self.re * &rhs.re);
        }
        Scalar { re: &self.re * &rhs.re - &self.im * &rhs.im, im: &self.re * &rhs.im + &self.im * &rhs.re }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &'a Scalar) -> Scalar {
                (&self).$method(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { re: -self.re, im: -self.im }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { re: -&self.re, im: -&self.im }
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = &*self * rhs;
    }
}

impl From<i64> for Scalar {
    fn from(v: i64) -> Self {
        Scalar::from_int(v)
    }
}

impl From<BigRational> for Scalar {
    fn from(v: BigRational) -> Self {
        Scalar::real(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_examples() {
        assert_eq!(Scalar::frac(1, 2) + Scalar::frac(1, 3), Scalar::frac(5, 6));
        assert_eq!(Scalar::i() * Scalar::i(), Scalar::from_int(-1));
        assert_eq!(Scalar::from_int(2).inv().unwrap(), Scalar::frac(1, 2));
    }

    #[test]
    fn inverse_of_zero_is_an_error() {
        assert!(matches!(Scalar::zero().inv(), Err(RingError::DivisionByZero)));
    }

    #[test]
    fn complex_inverse() {
        let z: Scalar = "3+4i".parse().unwrap();
        assert_eq!(&z * &z.inv().unwrap(), Scalar::one());
    }

    #[test]
    fn display_and_parse() {
        for s in ["0", "-3/4", "2i", "-1/2i", "1/2+3i", "5-7/3i"] {
            let v: Scalar = s.parse().unwrap();
            assert_eq!(v.to_string(), s);
        }
        assert_eq!("i".parse::<Scalar>().unwrap(), Scalar::i());
        assert_eq!("-i".parse::<Scalar>().unwrap(), -Scalar::i());
        assert!("1/0".parse::<Scalar>().is_err());
        assert!("x".parse::<Scalar>().is_err());
    }

    #[test]
    fn square_roots() {
        assert_eq!(Scalar::frac(9, 4).sqrt(), Some(Scalar::frac(3, 2)));
        assert_eq!(Scalar::from_int(-4).sqrt(), Some(Scalar::from_int(2) * Scalar::i()));
        assert_eq!(Scalar::from_int(2).sqrt(), None);
        // (1 + 2i)^2 = -3 + 4i
        let z: Scalar = "-3+4i".parse().unwrap();
        let r = z.sqrt().unwrap();
        assert_eq!(&r * &r, z);
    }

    #[test]
    fn powers_of_i() {
        assert_eq!(Scalar::i_pow(2), Scalar::from_int(-1));
        assert_eq!(Scalar::i_pow(-1), -Scalar::i());
        assert_eq!(Scalar::i_pow(4), Scalar::one());
    }
}
