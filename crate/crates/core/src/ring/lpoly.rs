//! Univariate polynomials in the twist parameter `λ`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{RingError, Scalar};

/// `c0 + c1 λ + c2 λ^2 + ...` with trailing zeros stripped.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct LambdaPoly {
    coeffs: Vec<Scalar>,
}

impl LambdaPoly {
    pub fn zero() -> Self {
        LambdaPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Scalar::one())
    }

    pub fn constant(c: Scalar) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The parameter `λ` itself.
    pub fn lambda() -> Self {
        Self::from_coeffs(vec![Scalar::zero(), Scalar::one()])
    }

    pub fn from_coeffs(mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        LambdaPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Scalar {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading(&self) -> Option<&Scalar> {
        self.coeffs.last()
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        LambdaPoly { coeffs: self.coeffs.iter().map(|c| c * s).collect() }
    }

    pub fn eval(&self, at: &Scalar) -> Scalar {
        self.coeffs.iter().rev().fold(Scalar::zero(), |acc, c| &(&acc * at) + c)
    }

    /// Replace `λ` by `value` and expand.
    pub fn subst(&self, value: &LambdaPoly) -> LambdaPoly {
        self.coeffs.iter().rev().fold(LambdaPoly::zero(), |acc, c| &(&acc * value) + &LambdaPoly::constant(c.clone()))
    }

    /// The two roots of a quadratic, sorted by real part.
    pub fn quadratic_roots(&self) -> Result<(Scalar, Scalar), RingError> {
        if self.degree() != Some(2) {
            return Err(RingError::Degree { expected: 2, found: self.degree() });
        }
        let (c, b, a) = (&self.coeffs[0], &self.coeffs[1], &self.coeffs[2]);
        let disc = b * b - Scalar::from_int(4) * a * c;
        let root = disc.sqrt().ok_or_else(|| RingError::IrrationalRoot { discriminant: disc.to_string() })?;
        let two_a = Scalar::from_int(2) * a;
        let r1 = (-b - &root).div(&two_a)?;
        let r2 = (-b + &root).div(&two_a)?;
        if r1.cmp_lex(&r2).is_le() {
            Ok((r1, r2))
        } else {
            Ok((r2, r1))
        }
    }

    /// Divide by the leading coefficient; returns that coefficient and the monic remainder.
    pub fn split_content(&self) -> Option<(Scalar, LambdaPoly)> {
        let lead = self.leading()?.clone();
        let inv = lead.inv().ok()?;
        Some((lead, self.scale(&inv)))
    }
}

impl<'a> Add<&'a LambdaPoly> for &'a LambdaPoly {
    type Output = LambdaPoly;
    fn add(self, rhs: &'a LambdaPoly) -> LambdaPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..len)
            .map(|k| match (self.coeffs.get(k), rhs.coeffs.get(k)) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            })
            .collect();
        LambdaPoly::from_coeffs(coeffs)
    }
}

impl<'a> Sub<&'a LambdaPoly> for &'a LambdaPoly {
    type Output = LambdaPoly;
    fn sub(self, rhs: &'a LambdaPoly) -> LambdaPoly {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a LambdaPoly> for &'a LambdaPoly {
    type Output = LambdaPoly;
    fn mul(self, rhs: &'a LambdaPoly) -> LambdaPoly {
        if self.is_zero() || rhs.is_zero() {
            return LambdaPoly::zero();
        }
        if rhs.coeffs.len() == 1 {
            return self.scale(&rhs.coeffs[0]);
        }
        if self.coeffs.len() == 1 {
            return rhs.scale(&self.coeffs[0]);
        }
        let mut out = vec![Scalar::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        LambdaPoly::from_coeffs(out)
    }
}

impl Neg for &LambdaPoly {
    type Output = LambdaPoly;
    fn neg(self) -> LambdaPoly {
        LambdaPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Neg for LambdaPoly {
    type Output = LambdaPoly;
    fn neg(self) -> LambdaPoly {
        -&self
    }
}

impl From<Scalar> for LambdaPoly {
    fn from(c: Scalar) -> Self {
        LambdaPoly::constant(c)
    }
}

fn wrap_scalar(s: &Scalar) -> String {
    let text = s.to_string();
    if s.is_real() {
        text
    } else {
        format!("({text})")
    }
}

/// Ascending `c0 + c1*L + c2*L^2`; unit coefficients on positive powers are elided.
impl fmt::Display for LambdaPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let power = match k {
                0 => String::new(),
                1 => "L".to_string(),
                _ => format!("L^{k}"),
            };
            match (k, c.is_one()) {
                (0, _) => write!(f, "{}", wrap_scalar(c))?,
                (_, true) => write!(f, "{power}")?,
                (_, false) => write!(f, "{}*{power}", wrap_scalar(c))?,
            }
        }
        Ok(())
    }
}

impl std::str::FromStr for LambdaPoly {
    type Err = RingError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut acc = LambdaPoly::zero();
        for raw in s.split(" + ") {
            let term = raw.trim();
            let strip = |t: &str| t.trim_start_matches('(').trim_end_matches(')').to_string();
            let (coeff, power) = match term.find('L') {
                None => (strip(term).parse::<Scalar>()?, 0usize),
                Some(pos) => {
                    let head = term[..pos].trim_end_matches('*');
                    let coeff = if head.is_empty() { Scalar::one() } else { strip(head).parse()? };
                    let tail = &term[pos + 1..];
                    let power = match tail.strip_prefix('^') {
                        Some(p) => p.parse().map_err(|_| RingError::Parse(format!("bad λ power in `{term}`")))?,
                        None if tail.is_empty() => 1,
                        None => return Err(RingError::Parse(format!("bad λ term `{term}`"))),
                    };
                    (coeff, power)
                }
            };
            let mut coeffs = vec![Scalar::zero(); power + 1];
            coeffs[power] = coeff;
            acc = &acc + &LambdaPoly::from_coeffs(coeffs);
        }
        Ok(acc)
    }
}
