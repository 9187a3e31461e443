//! Scalar backends.
//!
//! Every operator in this crate is generic over [`Scalar`]. The exact backend
//! is the field of Gaussian rationals `Q(i)`, represented as a complex number
//! with arbitrary-precision rational parts; the float backend is `Complex64`.

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::{Complex, Complex64};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{NcgError, Result};

/// A complex number with exact rational real and imaginary parts.
pub type ExactComplex = Complex<BigRational>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Backend {
    Exact,
    Float,
}

impl std::fmt::Display for Backend {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Backend::Exact => f.write_str("exact"),
            Backend::Float => f.write_str("float"),
        }
    }
}

impl FromStr for Backend {
    type Err = NcgError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exact" => Ok(Backend::Exact),
            "float" => Ok(Backend::Float),
            other => Err(NcgError::Parse(format!("unknown backend `{other}`"))),
        }
    }
}

pub trait Scalar:
    Clone
    + Debug
    + PartialEq
    + Send
    + Sync
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    const BACKEND: Backend;

    fn conj(&self) -> Self;

    /// Multiplicative inverse; the caller guarantees `self` is not negligible.
    fn recip(&self) -> Self;

    /// Exact backends ignore `tol` and test for zero.
    fn is_negligible(&self, tol: f64) -> bool;

    fn modulus(&self) -> f64;

    fn from_exact(z: &ExactComplex) -> Self;

    /// Returns `None` on backends that cannot hold an irrational value.
    fn from_f64_parts(re: f64, im: f64) -> Option<Self>;

    /// Real and imaginary parts, formatted for coordinate dumps.
    fn format_parts(&self) -> (String, String);

    fn from_i64(n: i64) -> Self {
        Self::from_exact(&ExactComplex::new(rat(n, 1), BigRational::zero()))
    }

    fn i() -> Self {
        Self::from_exact(&ExactComplex::new(BigRational::zero(), BigRational::one()))
    }
}

impl Scalar for ExactComplex {
    const BACKEND: Backend = Backend::Exact;

    fn conj(&self) -> Self {
        Complex::new(self.re.clone(), -self.im.clone())
    }

    fn recip(&self) -> Self {
        let norm = &self.re * &self.re + &self.im * &self.im;
        Complex::new(&self.re / &norm, -(&self.im / &norm))
    }

    fn is_negligible(&self, _tol: f64) -> bool {
        self.is_zero()
    }

    fn modulus(&self) -> f64 {
        let re = rational_to_f64(&self.re);
        let im = rational_to_f64(&self.im);
        re.hypot(im)
    }

    fn from_exact(z: &ExactComplex) -> Self {
        z.clone()
    }

    fn from_f64_parts(_re: f64, _im: f64) -> Option<Self> {
        None
    }

    fn format_parts(&self) -> (String, String) {
        (format_rational(&self.re), format_rational(&self.im))
    }
}

impl Scalar for Complex64 {
    const BACKEND: Backend = Backend::Float;

    fn conj(&self) -> Self {
        Complex::conj(self)
    }

    fn recip(&self) -> Self {
        self.inv()
    }

    fn is_negligible(&self, tol: f64) -> bool {
        self.norm() <= tol
    }

    fn modulus(&self) -> f64 {
        self.norm()
    }

    fn from_exact(z: &ExactComplex) -> Self {
        Complex64::new(rational_to_f64(&z.re), rational_to_f64(&z.im))
    }

    fn from_f64_parts(re: f64, im: f64) -> Option<Self> {
        Some(Complex64::new(re, im))
    }

    fn format_parts(&self) -> (String, String) {
        (format!("{:e}", self.re), format!("{:e}", self.im))
    }
}

pub fn rat(numer: i64, denom: i64) -> BigRational {
    BigRational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn cq(re: BigRational, im: BigRational) -> ExactComplex {
    Complex::new(re, im)
}

pub fn real(numer: i64, denom: i64) -> ExactComplex {
    Complex::new(rat(numer, denom), BigRational::zero())
}

pub fn imag(numer: i64, denom: i64) -> ExactComplex {
    Complex::new(BigRational::zero(), rat(numer, denom))
}

pub fn rational_to_f64(q: &BigRational) -> f64 {
    let n: f64 = q.numer().to_string().parse().unwrap_or(f64::NAN);
    let d: f64 = q.denom().to_string().parse().unwrap_or(f64::NAN);
    n / d
}

/// Always `p/q`, including integers (`3/1`), so the wire format never
/// needs a decimal point.
pub fn format_rational(q: &BigRational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

/// `1`, `-1/2`, `3/4 + 1/2i`, `-i`: integers without a denominator.
pub fn format_scalar(z: &ExactComplex) -> String {
    let part = |q: &BigRational| if q.is_integer() { q.numer().to_string() } else { q.to_string() };
    match (z.re.is_zero(), z.im.is_zero()) {
        (_, true) => part(&z.re),
        (true, false) => format!("{}i", part(&z.im)),
        (false, false) if z.im < BigRational::zero() => format!("{} - {}i", part(&z.re), part(&-z.im.clone())),
        (false, false) => format!("{} + {}i", part(&z.re), part(&z.im)),
    }
}

pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| NcgError::Parse(format!("bad rational `{s}`")))?;
    let d: BigInt = d.parse().map_err(|_| NcgError::Parse(format!("bad rational `{s}`")))?;
    if d.is_zero() {
        return Err(NcgError::Parse(format!("zero denominator in `{s}`")));
    }
    Ok(BigRational::new(n, d))
}

/// The integer value of an exact scalar, if it is a real integer.
pub fn as_integer(z: &ExactComplex) -> Option<i64> {
    if !z.im.is_zero() || !z.re.is_integer() {
        return None;
    }
    let n = z.re.to_integer();
    if n.abs() > BigInt::from(i64::MAX) {
        return None;
    }
    n.to_string().parse().ok()
}

pub fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scalar_display() {
        assert_eq!(format_scalar(&real(1, 1)), "1");
        assert_eq!(format_scalar(&real(-1, 2)), "-1/2");
        assert_eq!(format_scalar(&imag(2, 1)), "2i");
        assert_eq!(format_scalar(&cq(rat(3, 4), rat(-1, 2))), "3/4 - 1/2i");
    }

    #[test]
    fn rational_round_trip() {
        for s in ["3/4", "-1/2", "0/1", "7/1"] {
            assert_eq!(format_rational(&parse_rational(s).unwrap()), s);
        }
        assert_eq!(parse_rational("5").unwrap(), rat(5, 1));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("0.5").is_err());
    }

    #[test]
    fn exact_recip() {
        let z = cq(rat(1, 2), rat(-3, 1));
        assert_eq!(z.clone() * Scalar::recip(&z), ExactComplex::one());
    }

    #[test]
    fn integer_extraction() {
        assert_eq!(as_integer(&real(-4, 1)), Some(-4));
        assert_eq!(as_integer(&real(1, 2)), None);
        assert_eq!(as_integer(&imag(1, 1)), None);
    }
}
