//! Scalar backends.
//!
//! Every algebraic object in this crate is generic over a [`Scalar`]: exact
//! `BigRational` arithmetic for the identities that must hold on the nose
//! (star products, matrix homomorphism, zero/jet round trips), and `f64` for
//! the transcendental layer (exp*/log*, multiplicative splitting, root
//! clustering).

use std::fmt::{Debug, Display};
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, One, Signed, ToPrimitive, Zero};

/// The exact backend scalar.
pub type Rat = BigRational;

/// Field operations shared by the two backends.
///
/// `sqrt_exact` returns `None` when the square root is not representable in
/// the backend (a non-square rational); callers that genuinely need the root
/// surface [`crate::Error::IrrationalNorm`].
pub trait Scalar:
    Clone
    + PartialEq
    + PartialOrd
    + Debug
    + Display
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + 'static
{
    /// True for backends whose arithmetic is exact.
    const EXACT: bool;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_int(n: i64) -> Self;
    /// n / d. Panics if `d == 0`.
    fn from_ratio(n: i64, d: i64) -> Self;
    /// Exact conversion of an IEEE-754 value (binary expansion for rationals).
    fn from_f64(x: f64) -> Self;
    /// Parses "p/q", integer, or plain decimal strings; decimal strings
    /// are read exactly (base-10) in the rational backend.
    fn parse(text: &str) -> Option<Self>;
    fn is_zero(&self) -> bool;
    fn abs(&self) -> Self;
    fn sqrt_exact(&self) -> Option<Self>;
    fn to_f64(&self) -> f64;
    fn recip(&self) -> Self;
}

impl Scalar for f64 {
    const EXACT: bool = false;

    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn from_int(n: i64) -> Self {
        n as f64
    }
    fn from_ratio(n: i64, d: i64) -> Self {
        assert!(d != 0, "zero denominator");
        n as f64 / d as f64
    }
    fn from_f64(x: f64) -> Self {
        x
    }
    fn parse(text: &str) -> Option<Self> {
        let text = text.trim();
        if let Some((n, d)) = text.split_once('/') {
            let n: f64 = n.trim().parse().ok()?;
            let d: f64 = d.trim().parse().ok()?;
            if d == 0.0 {
                return None;
            }
            return Some(n / d);
        }
        text.parse().ok()
    }
    fn is_zero(&self) -> bool {
        *self == 0.0
    }
    fn abs(&self) -> Self {
        f64::abs(*self)
    }
    fn sqrt_exact(&self) -> Option<Self> {
        if *self < 0.0 {
            None
        } else {
            Some(self.sqrt())
        }
    }
    fn to_f64(&self) -> f64 {
        *self
    }
    fn recip(&self) -> Self {
        1.0 / *self
    }
}

impl Scalar for BigRational {
    const EXACT: bool = true;

    fn zero() -> Self {
        <BigRational as Zero>::zero()
    }
    fn one() -> Self {
        <BigRational as One>::one()
    }
    fn from_int(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }
    fn from_ratio(n: i64, d: i64) -> Self {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }
    fn from_f64(x: f64) -> Self {
        <BigRational as FromPrimitive>::from_f64(x).expect("finite float")
    }
    fn parse(text: &str) -> Option<Self> {
        let text = text.trim();
        if let Some((n, d)) = text.split_once('/') {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if Zero::is_zero(&d) {
                return None;
            }
            return Some(BigRational::new(n, d));
        }
        if let Some((int_part, frac_part)) = text.split_once('.') {
            let neg = int_part.trim_start().starts_with('-');
            let int_part: BigInt = if int_part.is_empty() || int_part == "-" {
                BigInt::from(0)
            } else {
                int_part.parse().ok()?
            };
            if frac_part.is_empty() || !frac_part.bytes().all(|b| b.is_ascii_digit()) {
                return None;
            }
            let frac: BigInt = frac_part.parse().ok()?;
            let den = BigInt::from(10).pow(frac_part.len() as u32);
            let frac_rat = BigRational::new(frac, den);
            let int_rat = BigRational::from_integer(int_part);
            return Some(if neg {
                int_rat - frac_rat
            } else {
                int_rat + frac_rat
            });
        }
        let n: BigInt = text.parse().ok()?;
        Some(BigRational::from_integer(n))
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn abs(&self) -> Self {
        Signed::abs(self)
    }
    fn sqrt_exact(&self) -> Option<Self> {
        if Signed::is_negative(self) {
            return None;
        }
        if Zero::is_zero(self) {
            return Some(<BigRational as Zero>::zero());
        }
        let ns = self.numer().sqrt();
        let ds = self.denom().sqrt();
        if &ns.clone() * &ns == *self.numer() && &ds.clone() * &ds == *self.denom() {
            Some(BigRational::new(ns, ds))
        } else {
            None
        }
    }
    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }
    fn recip(&self) -> Self {
        BigRational::recip(self)
    }
}

/// Continued-fraction rationalization of a float: the first convergent p/q
/// with `q <= max_den` and `|x - p/q| <= tol`, if any.
///
/// Used to lift floating root estimates back into the exact backend, where
/// every lift is verified by exact division before being trusted.
pub fn rationalize(x: f64, max_den: u64, tol: f64) -> Option<(i64, i64)> {
    if !x.is_finite() || x.abs() > 1e15 {
        return None;
    }
    let (mut p0, mut q0, mut p1, mut q1) = (1i128, 0i128, x.floor() as i128, 1i128);
    let mut frac = x - x.floor();
    for _ in 0..64 {
        if q1 > 0 && q1 as u64 <= max_den {
            let approx = p1 as f64 / q1 as f64;
            if (approx - x).abs() <= tol {
                return Some((i64::try_from(p1).ok()?, i64::try_from(q1).ok()?));
            }
        }
        if frac.abs() < 1e-18 {
            break;
        }
        let inv = 1.0 / frac;
        let a = inv.floor();
        if !a.is_finite() || a.abs() > 1e15 {
            break;
        }
        frac = inv - a;
        let a = a as i128;
        let p2 = a.checked_mul(p1)?.checked_add(p0)?;
        let q2 = a.checked_mul(q1)?.checked_add(q0)?;
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        if q1 as u64 > max_den.saturating_mul(1000) {
            break;
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_sqrt_of_squares() {
        let x = Rat::from_ratio(9, 4);
        assert_eq!(x.sqrt_exact(), Some(Rat::from_ratio(3, 2)));
        assert_eq!(Rat::from_int(2).sqrt_exact(), None);
        assert_eq!(Rat::from_int(-1).sqrt_exact(), None);
        assert_eq!(Rat::from_int(0).sqrt_exact(), Some(<Rat as Scalar>::zero()));
    }

    #[test]
    fn rationalize_recovers_small_fractions() {
        assert_eq!(rationalize(0.5, 100, 1e-9), Some((1, 2)));
        assert_eq!(rationalize(-2.0 / 3.0, 100, 1e-9), Some((-2, 3)));
        let (p, q) = rationalize(3.25, 100, 1e-9).unwrap();
        assert_eq!((p, q), (13, 4));
        assert!(rationalize(f64::NAN, 100, 1e-9).is_none());
    }

    #[test]
    fn float_roundtrip_is_exact_in_rationals() {
        let r = <Rat as Scalar>::from_f64(0.1);
        assert!((Scalar::to_f64(&r) - 0.1).abs() == 0.0);
    }
}
