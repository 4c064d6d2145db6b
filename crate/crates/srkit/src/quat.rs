//! Quaternion arithmetic and slice/sphere geometry.
//!
//! A quaternion q = w + xi + yj + zk decomposes (uniquely off the real axis)
//! as q = x0 + I*y0 with y0 >= 0 and I a unit imaginary; the sphere through q
//! is S(Re q, |Im q|). Everything downstream (slice functions, zero sets,
//! spherical jets) is phrased in these coordinates.
//!
//! Values are immutable; all operations are pure functions.

use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Element of H with components in the chosen scalar backend.
#[derive(Clone, PartialEq)]
pub struct Quaternion<S> {
    pub w: S,
    pub x: S,
    pub y: S,
    pub z: S,
}

impl<S: Scalar> Quaternion<S> {
    pub fn new(w: S, x: S, y: S, z: S) -> Self {
        Quaternion { w, x, y, z }
    }

    pub fn zero() -> Self {
        Self::new(S::zero(), S::zero(), S::zero(), S::zero())
    }

    pub fn one() -> Self {
        Self::from_real(S::one())
    }

    pub fn i() -> Self {
        Self::new(S::zero(), S::one(), S::zero(), S::zero())
    }

    pub fn j() -> Self {
        Self::new(S::zero(), S::zero(), S::one(), S::zero())
    }

    pub fn k() -> Self {
        Self::new(S::zero(), S::zero(), S::zero(), S::one())
    }

    pub fn from_real(w: S) -> Self {
        Self::new(w, S::zero(), S::zero(), S::zero())
    }

    /// Convenience constructor from integer components.
    pub fn from_ints(w: i64, x: i64, y: i64, z: i64) -> Self {
        Self::new(
            S::from_int(w),
            S::from_int(x),
            S::from_int(y),
            S::from_int(z),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.w.is_zero() && self.x.is_zero() && self.y.is_zero() && self.z.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.x.is_zero() && self.y.is_zero() && self.z.is_zero()
    }

    pub fn re(&self) -> S {
        self.w.clone()
    }

    /// Imaginary part xi + yj + zk as a quaternion.
    pub fn im(&self) -> Self {
        Self::new(S::zero(), self.x.clone(), self.y.clone(), self.z.clone())
    }

    pub fn conj(&self) -> Self {
        Self::new(
            self.w.clone(),
            -self.x.clone(),
            -self.y.clone(),
            -self.z.clone(),
        )
    }

    /// Squared Euclidean norm w^2 + x^2 + y^2 + z^2; exact in the rational
    /// backend, so membership and unit tests stay deterministic.
    pub fn norm_sq(&self) -> S {
        self.w.clone() * self.w.clone()
            + self.x.clone() * self.x.clone()
            + self.y.clone() * self.y.clone()
            + self.z.clone() * self.z.clone()
    }

    /// 1-norm |w| + |x| + |y| + |z| (the matrix row-sum norm of M_q).
    pub fn norm_one(&self) -> S {
        self.w.abs() + self.x.abs() + self.y.abs() + self.z.abs()
    }

    /// Euclidean norm as f64, for measurement and gating.
    pub fn abs_f64(&self) -> f64 {
        self.norm_sq().to_f64().sqrt()
    }

    /// Multiplicative inverse conj(q) / |q|^2; `None` for zero.
    pub fn inverse(&self) -> Option<Self> {
        let n = self.norm_sq();
        if n.is_zero() {
            return None;
        }
        Some(self.conj().scale(&n.recip()))
    }

    /// Componentwise multiplication by a real scalar (central in H).
    pub fn scale(&self, s: &S) -> Self {
        Self::new(
            self.w.clone() * s.clone(),
            self.x.clone() * s.clone(),
            self.y.clone() * s.clone(),
            self.z.clone() * s.clone(),
        )
    }

    /// Real scalar product of the two quaternions seen as vectors in R^4.
    pub fn dot(&self, other: &Self) -> S {
        self.w.clone() * other.w.clone()
            + self.x.clone() * other.x.clone()
            + self.y.clone() * other.y.clone()
            + self.z.clone() * other.z.clone()
    }

    /// Unit imaginary test: purely imaginary with |v|^2 = 1, exact in the
    /// rational backend, within 1e-12 of 1 in the float backend.
    pub fn is_unit_imaginary(&self) -> bool {
        if !self.w.is_zero() {
            return false;
        }
        let n = self.norm_sq();
        if S::EXACT {
            n == S::one()
        } else {
            (n.to_f64() - 1.0).abs() <= 1e-12
        }
    }

    /// The imaginary unit I with q in C_I^+, i.e. Im(q)/|Im(q)|.
    ///
    /// Not defined on the real axis; in the exact backend the imaginary part
    /// must have rational norm.
    pub fn imaginary_unit(&self) -> Result<Self> {
        let im = self.im();
        let nsq = im.norm_sq();
        if nsq.is_zero() {
            return Err(Error::RealArgument);
        }
        let n = nsq.sqrt_exact().ok_or(Error::IrrationalNorm)?;
        Ok(im.scale(&n.recip()))
    }

    /// Normal form q = x + I*y with y >= 0; I absent on the real axis.
    pub fn slice_decompose(&self) -> Result<SliceCoords<S>> {
        let im = self.im();
        let nsq = im.norm_sq();
        if nsq.is_zero() {
            return Ok(SliceCoords {
                x: self.re(),
                y: S::zero(),
                unit: None,
            });
        }
        let y = nsq.sqrt_exact().ok_or(Error::IrrationalNorm)?;
        Ok(SliceCoords {
            x: self.re(),
            unit: Some(im.scale(&y.recip())),
            y,
        })
    }

    /// The sphere S(Re q, |Im q|) through q; degenerate for real q.
    pub fn symmetrize(&self) -> Sphere<S> {
        Sphere::from_radius_sq(self.re(), self.im().norm_sq())
    }

    /// Conjugation p^{-1} q p of `self` by a nonzero quaternion; preserves
    /// the sphere of `self`.
    pub fn conjugate_by(&self, p: &Self) -> Option<Self> {
        let pinv = p.inverse()?;
        Some(&(&pinv * self) * p)
    }

    pub fn to_f64_quat(&self) -> Quaternion<f64> {
        Quaternion::new(
            self.w.to_f64(),
            self.x.to_f64(),
            self.y.to_f64(),
            self.z.to_f64(),
        )
    }

    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        (self.clone() - other.clone()).abs_f64() <= tol
    }
}

impl<S: Scalar> std::fmt::Debug for Quaternion<S> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({} {} {} {})", self.w, self.x, self.y, self.z)
    }
}

impl<S: Scalar> Mul for &Quaternion<S> {
    type Output = Quaternion<S>;

    /// Hamilton product: i*j = k, j*k = i, k*i = j, i^2 = j^2 = k^2 = -1.
    fn mul(self, rhs: Self) -> Quaternion<S> {
        let (a, b) = (self, rhs);
        Quaternion::new(
            a.w.clone() * b.w.clone()
                - a.x.clone() * b.x.clone()
                - a.y.clone() * b.y.clone()
                - a.z.clone() * b.z.clone(),
            a.w.clone() * b.x.clone() + a.x.clone() * b.w.clone() + a.y.clone() * b.z.clone()
                - a.z.clone() * b.y.clone(),
            a.w.clone() * b.y.clone() - a.x.clone() * b.z.clone()
                + a.y.clone() * b.w.clone()
                + a.z.clone() * b.x.clone(),
            a.w.clone() * b.z.clone() + a.x.clone() * b.y.clone() - a.y.clone() * b.x.clone()
                + a.z.clone() * b.w.clone(),
        )
    }
}

impl<S: Scalar> Mul for Quaternion<S> {
    type Output = Quaternion<S>;
    fn mul(self, rhs: Self) -> Quaternion<S> {
        &self * &rhs
    }
}

impl<S: Scalar> Add for &Quaternion<S> {
    type Output = Quaternion<S>;
    fn add(self, rhs: Self) -> Quaternion<S> {
        Quaternion::new(
            self.w.clone() + rhs.w.clone(),
            self.x.clone() + rhs.x.clone(),
            self.y.clone() + rhs.y.clone(),
            self.z.clone() + rhs.z.clone(),
        )
    }
}

impl<S: Scalar> Add for Quaternion<S> {
    type Output = Quaternion<S>;
    fn add(self, rhs: Self) -> Quaternion<S> {
        &self + &rhs
    }
}

impl<S: Scalar> Sub for &Quaternion<S> {
    type Output = Quaternion<S>;
    fn sub(self, rhs: Self) -> Quaternion<S> {
        Quaternion::new(
            self.w.clone() - rhs.w.clone(),
            self.x.clone() - rhs.x.clone(),
            self.y.clone() - rhs.y.clone(),
            self.z.clone() - rhs.z.clone(),
        )
    }
}

impl<S: Scalar> Sub for Quaternion<S> {
    type Output = Quaternion<S>;
    fn sub(self, rhs: Self) -> Quaternion<S> {
        &self - &rhs
    }
}

impl<S: Scalar> Neg for Quaternion<S> {
    type Output = Quaternion<S>;
    fn neg(self) -> Quaternion<S> {
        Quaternion::new(-self.w, -self.x, -self.y, -self.z)
    }
}

/// Slice normal form x + I*y of a quaternion, y >= 0.
#[derive(Clone, PartialEq)]
pub struct SliceCoords<S> {
    pub x: S,
    pub y: S,
    /// Unit imaginary I with I^2 = -1; absent for real points.
    pub unit: Option<Quaternion<S>>,
}

impl<S: Scalar> std::fmt::Debug for SliceCoords<S> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match &self.unit {
            Some(i) => write!(f, "{} + {:?}·{}", self.x, i, self.y),
            None => write!(f, "{}", self.x),
        }
    }
}

impl<S: Scalar> SliceCoords<S> {
    /// x + I*y; recovers the source quaternion.
    pub fn reconstruct(&self) -> Quaternion<S> {
        match &self.unit {
            None => Quaternion::from_real(self.x.clone()),
            Some(i) => Quaternion::from_real(self.x.clone()) + i.scale(&self.y),
        }
    }
}

/// The sphere S(a, r) = {a + rI : I in S}; stored by center and squared
/// radius so exact zero-set computations never need square roots.
#[derive(Clone, PartialEq)]
pub struct Sphere<S> {
    center: S,
    radius_sq: S,
}

impl<S: Scalar> std::fmt::Debug for Sphere<S> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "S(a={}, r²={})", self.center, self.radius_sq)
    }
}

impl<S: Scalar> Sphere<S> {
    pub fn from_radius(center: S, radius: S) -> Self {
        let radius_sq = radius.clone() * radius;
        Sphere { center, radius_sq }
    }

    pub fn from_radius_sq(center: S, radius_sq: S) -> Self {
        debug_assert!(radius_sq >= S::zero(), "negative squared radius");
        Sphere { center, radius_sq }
    }

    pub fn center(&self) -> S {
        self.center.clone()
    }

    pub fn radius_sq(&self) -> S {
        self.radius_sq.clone()
    }

    /// The radius itself when representable in the backend.
    pub fn radius(&self) -> Option<S> {
        self.radius_sq.sqrt_exact()
    }

    pub fn radius_f64(&self) -> f64 {
        self.radius_sq.to_f64().sqrt()
    }

    /// Degenerate iff the radius vanishes, i.e. the sphere is the real
    /// point {center}.
    pub fn is_point(&self) -> bool {
        self.radius_sq.is_zero()
    }

    /// Exact membership: Re(q) = a and |Im(q)|^2 = r^2.
    pub fn contains(&self, q: &Quaternion<S>) -> bool {
        q.re() == self.center && q.im().norm_sq() == self.radius_sq
    }

    pub fn contains_approx(&self, q: &Quaternion<S>, tol: f64) -> bool {
        (q.re().to_f64() - self.center.to_f64()).abs() <= tol
            && (q.im().norm_sq().to_f64().sqrt() - self.radius_f64()).abs() <= tol
    }

    /// Float comparison of centers and radii, default tolerance 1e-9.
    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        (self.center.to_f64() - other.center.to_f64()).abs() <= tol
            && (self.radius_f64() - other.radius_f64()).abs() <= tol
    }

    /// The monic real quadratic q^2 - 2aq + (a^2 + r^2) vanishing exactly on
    /// the sphere; coefficients [constant, linear, quadratic].
    pub fn minimal_quadratic(&self) -> [S; 3] {
        let a = self.center.clone();
        [
            a.clone() * a.clone() + self.radius_sq.clone(),
            -(S::from_int(2) * a),
            S::one(),
        ]
    }
}
