//! Exact Gaussian-rational scalars: `re + im*i` with arbitrary-precision
//! rational parts. Every algebraic module stores its matrix entries, phases
//! and eigenvalues in this type, so no rounding ever happens outside the
//! Klein-bottle float module.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

/// A Gaussian rational, always in lowest terms (guaranteed by `BigRational`).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GaussScalar {
    pub re: BigRational,
    pub im: BigRational,
}

impl GaussScalar {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        GaussScalar { re, im }
    }

    pub fn zero() -> Self {
        GaussScalar::new(BigRational::zero(), BigRational::zero())
    }

    pub fn one() -> Self {
        GaussScalar::new(BigRational::one(), BigRational::zero())
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        GaussScalar::new(BigRational::zero(), BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        GaussScalar::new(BigRational::from_integer(BigInt::from(n)), BigRational::zero())
    }

    /// p/q as a real scalar. Panics if q == 0.
    pub fn from_ratio(p: i64, q: i64) -> Self {
        GaussScalar::new(
            BigRational::new(BigInt::from(p), BigInt::from(q)),
            BigRational::zero(),
        )
    }

    /// (p/q) + (r/s) i.
    pub fn from_parts(p: i64, q: i64, r: i64, s: i64) -> Self {
        GaussScalar::new(
            BigRational::new(BigInt::from(p), BigInt::from(q)),
            BigRational::new(BigInt::from(r), BigInt::from(s)),
        )
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

    pub fn is_imaginary(&self) -> bool {
        self.re.is_zero() && !self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussScalar::new(self.re.clone(), -self.im.clone())
    }

    /// |z|² = z z̄, a nonnegative rational.
    pub fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Multiplicative inverse; None for zero.
    pub fn inv(&self) -> Option<Self> {
        let n = self.norm_sqr();
        if n.is_zero() {
            return None;
        }
        Some(GaussScalar::new(&self.re / &n, -&self.im / &n))
    }

    /// True when the value is one of {1, −1, i, −i}.
    pub fn is_fourth_root_of_unity(&self) -> bool {
        let one = BigRational::one();
        (self.im.is_zero() && (self.re == one || self.re == -one.clone()))
            || (self.re.is_zero() && (self.im == one || self.im == -one))
    }

    /// Real part as f64 (for the float-mode consumers).
    /// Compact rendering: integers print bare, `i` prints as `i`, and the
    /// general value falls back to `re+im i`.
    pub fn compact(&self) -> String {
        let rat = |r: &BigRational| {
            if r.denom().is_one() {
                r.numer().to_string()
            } else {
                format!("{}/{}", r.numer(), r.denom())
            }
        };
        if self.im.is_zero() {
            rat(&self.re)
        } else if self.re.is_zero() {
            if self.im.is_one() {
                "i".to_string()
            } else if (-&self.im).is_one() {
                "-i".to_string()
            } else {
                format!("{} i", rat(&self.im))
            }
        } else {
            let sep = if self.im < BigRational::zero() { "" } else { "+" };
            format!("{}{sep}{} i", rat(&self.re), rat(&self.im))
        }
    }

    pub fn re_f64(&self) -> f64 {
        ratio_to_f64(&self.re)
    }

    pub fn im_f64(&self) -> f64 {
        ratio_to_f64(&self.im)
    }
}

pub fn ratio_to_f64(r: &BigRational) -> f64 {
    let num = r.numer();
    let den = r.denom();
    // Exact when the parts fit in i128; falls back to string conversion
    // for pathological sizes (never hit by the shipped configurations).
    match (i128::try_from(num), i128::try_from(den)) {
        (Ok(n), Ok(d)) => n as f64 / d as f64,
        _ => num.to_string().parse::<f64>().unwrap_or(f64::NAN)
            / den.to_string().parse::<f64>().unwrap_or(f64::NAN),
    }
}

impl fmt::Display for GaussScalar {
    /// Canonical form `p/q+r/s*i` in lowest terms; the sign sits on the
    /// numerators. Round-trips bit-identically through `FromStr`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}/{}+{}/{}*i",
            self.re.numer(),
            self.re.denom(),
            self.im.numer(),
            self.im.denom()
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid GaussScalar literal: {0}")]
pub struct ParseScalarError(String);

impl serde::Serialize for GaussScalar {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl FromStr for GaussScalar {
    type Err = ParseScalarError;

    /// Parses the canonical `p/q+r/s*i` form (`+` separates the parts; the
    /// imaginary numerator carries its own sign) plus the shorthands `p`,
    /// `p/q`, and `r*i`/`r/s*i` with denominators omitted.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let body = s.trim();
        let err = || ParseScalarError(s.to_string());
        let parse_ratio = |t: &str| -> Result<BigRational, ParseScalarError> {
            let (n, d) = t.split_once('/').unwrap_or((t, "1"));
            let n: BigInt = n.trim().parse().map_err(|_| err())?;
            let d: BigInt = d.trim().parse().map_err(|_| err())?;
            if d.is_zero() {
                return Err(err());
            }
            Ok(BigRational::new(n, d))
        };
        match body.strip_suffix("*i") {
            Some(tail) if !tail.is_empty() => {
                // Split on the `+` that separates the two rationals: it is
                // the last `+` that is not the leading sign of a numerator.
                match tail[1..].rfind('+').map(|k| k + 1) {
                    Some(plus) => Ok(GaussScalar::new(
                        parse_ratio(&tail[..plus])?,
                        parse_ratio(&tail[plus + 1..])?,
                    )),
                    None => Ok(GaussScalar::new(BigRational::zero(), parse_ratio(tail)?)),
                }
            }
            _ => Ok(GaussScalar::new(parse_ratio(body)?, BigRational::zero())),
        }
    }
}

impl Add for GaussScalar {
    type Output = GaussScalar;
    fn add(self, rhs: GaussScalar) -> GaussScalar {
        GaussScalar::new(self.re + rhs.re, self.im + rhs.im)
    }
}

impl<'a> Add<&'a GaussScalar> for GaussScalar {
    type Output = GaussScalar;
    fn add(self, rhs: &GaussScalar) -> GaussScalar {
        GaussScalar::new(self.re + &rhs.re, self.im + &rhs.im)
    }
}

impl AddAssign for GaussScalar {
    fn add_assign(&mut self, rhs: GaussScalar) {
        self.re += rhs.re;
        self.im += rhs.im;
    }
}

impl Sub for GaussScalar {
    type Output = GaussScalar;
    fn sub(self, rhs: GaussScalar) -> GaussScalar {
        GaussScalar::new(self.re - rhs.re, self.im - rhs.im)
    }
}

impl SubAssign for GaussScalar {
    fn sub_assign(&mut self, rhs: GaussScalar) {
        self.re -= rhs.re;
        self.im -= rhs.im;
    }
}

impl Neg for GaussScalar {
    type Output = GaussScalar;
    fn neg(self) -> GaussScalar {
        GaussScalar::new(-self.re, -self.im)
    }
}

impl Mul for GaussScalar {
    type Output = GaussScalar;
    fn mul(self, rhs: GaussScalar) -> GaussScalar {
        &self * &rhs
    }
}

impl<'a, 'b> Mul<&'b GaussScalar> for &'a GaussScalar {
    type Output = GaussScalar;
    fn mul(self, rhs: &GaussScalar) -> GaussScalar {
        GaussScalar::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

impl MulAssign for GaussScalar {
    fn mul_assign(&mut self, rhs: GaussScalar) {
        *self = &*self * &rhs;
    }
}

impl Div for GaussScalar {
    type Output = GaussScalar;
    /// Panics on division by zero (callers check or use `inv`).
    fn div(self, rhs: GaussScalar) -> GaussScalar {
        let inv = rhs.inv().expect("division by zero GaussScalar");
        &self * &inv
    }
}

/// Sign of a nonzero rational: +1 / −1.
pub fn ratio_sign(r: &BigRational) -> i32 {
    if r.is_positive() {
        1
    } else {
        -1
    }
}
