//! The *-algebra of slice-regular Laurent polynomials.
//!
//! A [`QPoly`] is a finite sum f(q) = sum_{n=m}^{N} q^n a_n with right
//! quaternion coefficients; m may be negative. With coefficients on the
//! right, the regular product f*g is the plain Cauchy product
//! c_n = sum_k a_k b_{n-k} (order of factors matters: a before b).
//!
//! Slice-preserving functions are exactly the real-coefficient polynomials;
//! they are central for the *-product, and the regular conjugate f^c
//! (coefficients conjugated), symmetrization f^s = f * f^c and *-inverse
//! f^{-*} = f^c / f^s are all coefficient-level constructions.
//!
//! Canonical form: leading/trailing zero coefficients are trimmed; the zero
//! polynomial has empty coefficients and min_degree 0.

use std::ops::{Add, Neg, Sub};

use crate::error::{Error, Result};
use crate::quat::Quaternion;
use crate::scalar::Scalar;
use crate::zeros::SemiRegularFn;

/// Laurent polynomial sum q^n a_n, a_n in H, canonical (trimmed) form.
#[derive(Clone, PartialEq)]
pub struct QPoly<S> {
    min_degree: i64,
    coeffs: Vec<Quaternion<S>>,
}

impl<S: Scalar> QPoly<S> {
    pub fn zero() -> Self {
        QPoly {
            min_degree: 0,
            coeffs: Vec::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(Quaternion::one())
    }

    pub fn constant(c: Quaternion<S>) -> Self {
        Self::from_terms(0, vec![c])
    }

    pub fn constant_real(s: S) -> Self {
        Self::constant(Quaternion::from_real(s))
    }

    /// The identity function q.
    pub fn variable() -> Self {
        Self::monomial(1, Quaternion::one())
    }

    /// q^n * c.
    pub fn monomial(n: i64, c: Quaternion<S>) -> Self {
        Self::from_terms(n, vec![c])
    }

    /// q - q0, the basic left factor.
    pub fn linear(q0: &Quaternion<S>) -> Self {
        Self::from_terms(0, vec![-q0.clone(), Quaternion::one()])
    }

    /// Builds from coefficients a_m, ..., a_N starting at degree m; trims to
    /// canonical form.
    pub fn from_terms(min_degree: i64, coeffs: Vec<Quaternion<S>>) -> Self {
        let mut p = QPoly { min_degree, coeffs };
        p.normalize();
        p
    }

    pub fn from_real_terms(min_degree: i64, coeffs: Vec<S>) -> Self {
        Self::from_terms(
            min_degree,
            coeffs.into_iter().map(Quaternion::from_real).collect(),
        )
    }

    fn normalize(&mut self) {
        while matches!(self.coeffs.last(), Some(c) if c.is_zero()) {
            self.coeffs.pop();
        }
        let lead_zeros = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead_zeros > 0 {
            self.coeffs.drain(..lead_zeros);
            self.min_degree += lead_zeros as i64;
        }
        if self.coeffs.is_empty() {
            self.min_degree = 0;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Lowest exponent with nonzero coefficient (0 for the zero polynomial).
    pub fn min_degree(&self) -> i64 {
        self.min_degree
    }

    /// Highest exponent with nonzero coefficient (0 for the zero polynomial).
    pub fn max_degree(&self) -> i64 {
        if self.coeffs.is_empty() {
            0
        } else {
            self.min_degree + self.coeffs.len() as i64 - 1
        }
    }

    pub fn coeff(&self, n: i64) -> Quaternion<S> {
        let idx = n - self.min_degree;
        if idx < 0 || idx >= self.coeffs.len() as i64 {
            Quaternion::zero()
        } else {
            self.coeffs[idx as usize].clone()
        }
    }

    pub fn coeffs(&self) -> &[Quaternion<S>] {
        &self.coeffs
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &Quaternion<S>)> {
        let m = self.min_degree;
        self.coeffs
            .iter()
            .enumerate()
            .map(move |(k, c)| (m + k as i64, c))
    }

    /// True iff every coefficient is real, i.e. f is slice-preserving.
    pub fn is_slice_preserving(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_real())
    }

    /// Multiplication by q^k.
    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        QPoly {
            min_degree: self.min_degree + k,
            coeffs: self.coeffs.clone(),
        }
    }

    /// The regular product: Cauchy product of coefficient sequences, with
    /// factor order preserved inside each coefficient product.
    pub fn star_mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let n = self.coeffs.len() + rhs.coeffs.len() - 1;
        let mut out = vec![Quaternion::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] = out[i + j].clone() + a * b;
            }
        }
        Self::from_terms(self.min_degree + rhs.min_degree, out)
    }

    /// n-th *-power.
    pub fn pow_star(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = acc.star_mul(self);
        }
        acc
    }

    /// Regular conjugate f^c: coefficients conjugated. Equals f_0 - f_v.
    pub fn regular_conjugate(&self) -> Self {
        QPoly {
            min_degree: self.min_degree,
            coeffs: self.coeffs.iter().map(|c| c.conj()).collect(),
        }
    }

    /// Symmetrization f^s = f * f^c = f^c * f; real coefficients, degree
    /// span twice that of f.
    pub fn symmetrization(&self) -> Self {
        self.star_mul(&self.regular_conjugate())
    }

    /// Splits f = f_0 + f_v into the slice-preserving scalar part
    /// (f + f^c)/2 and the vectorial part.
    pub fn scalar_vector_split(&self) -> (Self, Self) {
        let mut f0 = QPoly {
            min_degree: self.min_degree,
            coeffs: self
                .coeffs
                .iter()
                .map(|c| Quaternion::from_real(c.re()))
                .collect(),
        };
        let mut fv = QPoly {
            min_degree: self.min_degree,
            coeffs: self.coeffs.iter().map(|c| c.im()).collect(),
        };
        f0.normalize();
        fv.normalize();
        (f0, fv)
    }

    /// The four slice-preserving components with f = f_0 + f_1 i + f_2 j + f_3 k.
    pub fn component_decompose(&self) -> [Self; 4] {
        let pick = |get: fn(&Quaternion<S>) -> S| -> Self {
            let mut p = QPoly {
                min_degree: self.min_degree,
                coeffs: self
                    .coeffs
                    .iter()
                    .map(|c| Quaternion::from_real(get(c)))
                    .collect(),
            };
            p.normalize();
            p
        };
        [
            pick(|c| c.w.clone()),
            pick(|c| c.x.clone()),
            pick(|c| c.y.clone()),
            pick(|c| c.z.clone()),
        ]
    }

    /// Inverse of [`QPoly::component_decompose`].
    pub fn recompose(parts: &[Self; 4]) -> Self {
        let units = [
            Quaternion::one(),
            Quaternion::i(),
            Quaternion::j(),
            Quaternion::k(),
        ];
        let mut acc = Self::zero();
        for (part, unit) in parts.iter().zip(units.iter()) {
            acc = &acc + &part.scale_right(unit);
        }
        acc
    }

    /// f * c for a constant quaternion on the right.
    pub fn scale_right(&self, c: &Quaternion<S>) -> Self {
        QPoly::from_terms(self.min_degree, self.coeffs.iter().map(|a| a * c).collect())
    }

    /// c * f for a constant quaternion on the left.
    pub fn scale_left(&self, c: &Quaternion<S>) -> Self {
        QPoly::from_terms(self.min_degree, self.coeffs.iter().map(|a| c * a).collect())
    }

    /// Multiplication by a real scalar (central).
    pub fn scale_real(&self, s: &S) -> Self {
        QPoly::from_terms(
            self.min_degree,
            self.coeffs.iter().map(|a| a.scale(s)).collect(),
        )
    }

    /// The *-inverse f^{-*} = f^c / f^s as a semiregular function.
    pub fn star_inverse(&self) -> Result<SemiRegularFn<S>> {
        if self.is_zero() {
            return Err(Error::ZeroFunction);
        }
        let fs = self.symmetrization();
        let shift = fs.min_degree();
        SemiRegularFn::new(self.regular_conjugate().shift(-shift), fs.shift(-shift))
    }

    /// Pointwise value at q (Horner with right coefficients). Laurent parts
    /// need q != 0.
    pub fn evaluate(&self, q: &Quaternion<S>) -> Result<Quaternion<S>> {
        if self.is_zero() {
            return Ok(Quaternion::zero());
        }
        if self.min_degree < 0 && q.is_zero() {
            return Err(Error::PoleAtZero);
        }
        let mut acc = Quaternion::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(q * &acc) + c;
        }
        // multiply by q^{min_degree} on the left
        if self.min_degree > 0 {
            for _ in 0..self.min_degree {
                acc = q * &acc;
            }
        } else if self.min_degree < 0 {
            let qinv = q.inverse().ok_or(Error::PoleAtZero)?;
            for _ in 0..(-self.min_degree) {
                acc = &qinv * &acc;
            }
        }
        Ok(acc)
    }

    /// The stem value F(x + iota y) = F1 + iota F2 from complex evaluation
    /// of the coefficient sequence.
    pub fn stem_value(&self, x: &S, y: &S) -> Result<StemValue<S>> {
        let mut f1 = Quaternion::zero();
        let mut f2 = Quaternion::zero();
        let norm_sq = x.clone() * x.clone() + y.clone() * y.clone();
        if self.min_degree < 0 && norm_sq.is_zero() {
            return Err(Error::PoleAtZero);
        }
        let step_up = |re: &S, im: &S| -> (S, S) {
            (
                re.clone() * x.clone() - im.clone() * y.clone(),
                re.clone() * y.clone() + im.clone() * x.clone(),
            )
        };
        // z^{min_degree}, then walk the exponents upward.
        let (mut re, mut im) = (S::one(), S::zero());
        if self.min_degree >= 0 {
            for _ in 0..self.min_degree {
                let (r, i) = step_up(&re, &im);
                re = r;
                im = i;
            }
        } else {
            // z^{-1} = (x - iy) / |z|^2
            let xi = x.clone() / norm_sq.clone();
            let yi = -(y.clone() / norm_sq);
            for _ in 0..(-self.min_degree) {
                let (r, i) = (
                    re.clone() * xi.clone() - im.clone() * yi.clone(),
                    re.clone() * yi.clone() + im.clone() * xi.clone(),
                );
                re = r;
                im = i;
            }
        }
        for c in &self.coeffs {
            f1 = f1 + c.scale(&re);
            f2 = f2 + c.scale(&im);
            let (r, i) = step_up(&re, &im);
            re = r;
            im = i;
        }
        Ok(StemValue { f1, f2 })
    }

    /// phi_J(F)(x + Jy) = F1 + J * F2. Must agree with [`QPoly::evaluate`]
    /// at x + Jy for every unit imaginary J.
    pub fn stem_evaluate(&self, x: &S, y: &S, j: &Quaternion<S>) -> Result<Quaternion<S>> {
        if !j.is_unit_imaginary() {
            return Err(Error::NotUnitImaginary);
        }
        let StemValue { f1, f2 } = self.stem_value(x, y)?;
        Ok(f1 + (j * &f2))
    }

    /// Membership in the constant vectorial class of `tag`: every
    /// coefficient lies in span{1, v} (all real for the zero tag).
    pub fn in_vector_class(&self, tag: &VectorClassTag<S>) -> bool {
        match tag {
            VectorClassTag::Zero => self.is_slice_preserving(),
            VectorClassTag::Direction(v) => self.coeffs.iter().all(|c| {
                let t = c.im().dot(v);
                c.im() == v.scale(&t)
            }),
        }
    }

    /// Left division by (q - q0): returns (g, r) with f = (q - q0) * g + r,
    /// r constant. r equals f(q0), so the division is exact at zeros.
    pub fn left_divide_linear(&self, q0: &Quaternion<S>) -> Result<(Self, Quaternion<S>)> {
        if self.min_degree < 0 {
            return Err(Error::NotPolynomial);
        }
        if self.is_zero() {
            return Ok((Self::zero(), Quaternion::zero()));
        }
        let deg = self.max_degree() as usize;
        let mut dense = vec![Quaternion::zero(); deg + 1];
        for (n, c) in self.terms() {
            dense[n as usize] = c.clone();
        }
        let mut quot = vec![Quaternion::zero(); deg.max(1)];
        let mut carry = Quaternion::zero();
        for n in (1..=deg).rev() {
            let b = &dense[n] + &(q0 * &carry);
            quot[n - 1] = b.clone();
            carry = b;
        }
        let rem = &dense[0] + &(q0 * &carry);
        Ok((Self::from_terms(0, quot), rem))
    }

    /// Division with remainder by a real-coefficient (slice-preserving)
    /// polynomial d: f = d * quot + rem with deg rem < deg d.
    pub fn divide_by_real(&self, d: &Self) -> Result<(Self, Self)> {
        if d.is_zero() {
            return Err(Error::ZeroFunction);
        }
        if !d.is_slice_preserving() {
            return Err(Error::NotInClass);
        }
        if self.min_degree < 0 || d.min_degree < 0 {
            return Err(Error::NotPolynomial);
        }
        if self.is_zero() {
            return Ok((Self::zero(), Self::zero()));
        }
        let dd = d.max_degree();
        let lead_inv = d.coeff(dd).re().recip();
        let mut rem: Vec<Quaternion<S>> = {
            let deg = self.max_degree() as usize;
            let mut dense = vec![Quaternion::zero(); deg + 1];
            for (n, c) in self.terms() {
                dense[n as usize] = c.clone();
            }
            dense
        };
        let fd = rem.len() as i64 - 1;
        if fd < dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![Quaternion::zero(); (fd - dd + 1) as usize];
        for n in (0..=(fd - dd)).rev() {
            let c = rem[(n + dd) as usize].scale(&lead_inv);
            if !c.is_zero() {
                for (k, dk) in d.terms() {
                    let s = dk.re();
                    let idx = (n + k) as usize;
                    rem[idx] = rem[idx].clone() - c.scale(&s);
                }
            }
            quot[n as usize] = c;
        }
        Ok((Self::from_terms(0, quot), Self::from_terms(0, rem)))
    }

    /// Exact division by a real polynomial; error if the remainder is nonzero.
    pub fn divide_exact_by_real(&self, d: &Self) -> Result<Self> {
        let (q, r) = self.divide_by_real(d)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::Internal("inexact division by real polynomial"))
        }
    }

    /// Max coefficient 1-norm, as f64.
    pub fn max_coeff_norm(&self) -> f64 {
        self.coeffs
            .iter()
            .map(|c| c.norm_one().to_f64())
            .fold(0.0, f64::max)
    }

    /// sum_n ||a_n||_1 * max_r r^n over the given radii; an upper bound for
    /// the sup of the matrix norm |M_f| on the corresponding annulus.
    pub fn weighted_norm(&self, radii: &[f64]) -> f64 {
        self.terms()
            .map(|(n, c)| {
                let w = radii.iter().map(|r| r.powi(n as i32)).fold(0.0, f64::max);
                c.norm_one().to_f64() * w
            })
            .sum()
    }

    /// Drops coefficients with 1-norm below `tol` (float backend cleanup in
    /// iterative splitting).
    pub fn trim_below(&self, tol: f64) -> Self {
        QPoly::from_terms(
            self.min_degree,
            self.coeffs
                .iter()
                .map(|c| {
                    if c.norm_one().to_f64() < tol {
                        Quaternion::zero()
                    } else {
                        c.clone()
                    }
                })
                .collect(),
        )
    }

    pub fn to_f64_poly(&self) -> QPoly<f64> {
        QPoly::from_terms(
            self.min_degree,
            self.coeffs.iter().map(|c| c.to_f64_quat()).collect(),
        )
    }

    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        let lo = self.min_degree.min(other.min_degree);
        let hi = self.max_degree().max(other.max_degree());
        (lo..=hi).all(|n| self.coeff(n).approx_eq(&other.coeff(n), tol))
    }
}

impl<S: Scalar> std::fmt::Debug for QPoly<S> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (n, c) in self.terms() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if n == 0 {
                write!(f, "{c:?}")?;
            } else {
                write!(f, "q^{n}·{c:?}")?;
            }
        }
        Ok(())
    }
}

impl<S: Scalar> Add for &QPoly<S> {
    type Output = QPoly<S>;
    fn add(self, rhs: Self) -> QPoly<S> {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let lo = self.min_degree.min(rhs.min_degree);
        let hi = self.max_degree().max(rhs.max_degree());
        let mut out = Vec::with_capacity((hi - lo + 1) as usize);
        for n in lo..=hi {
            out.push(self.coeff(n) + rhs.coeff(n));
        }
        QPoly::from_terms(lo, out)
    }
}

impl<S: Scalar> Add for QPoly<S> {
    type Output = QPoly<S>;
    fn add(self, rhs: Self) -> QPoly<S> {
        &self + &rhs
    }
}

impl<S: Scalar> Sub for &QPoly<S> {
    type Output = QPoly<S>;
    fn sub(self, rhs: Self) -> QPoly<S> {
        self + &(-rhs.clone())
    }
}

impl<S: Scalar> Sub for QPoly<S> {
    type Output = QPoly<S>;
    fn sub(self, rhs: Self) -> QPoly<S> {
        &self - &rhs
    }
}

impl<S: Scalar> Neg for QPoly<S> {
    type Output = QPoly<S>;
    fn neg(self) -> QPoly<S> {
        QPoly {
            min_degree: self.min_degree,
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

/// Value of a stem function at a complex point: F = F1 + iota F2.
///
/// Conjugate symmetry F(conj z) = conj_iota(F(z)) holds by construction:
/// F1 is even and F2 odd in y.
#[derive(Clone, PartialEq)]
pub struct StemValue<S> {
    pub f1: Quaternion<S>,
    pub f2: Quaternion<S>,
}

impl<S: Scalar> std::fmt::Debug for StemValue<S> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{:?} + ι·{:?}", self.f1, self.f2)
    }
}

/// A constant vectorial class: the zero tag (slice-preserving functions) or
/// a constant unit imaginary direction v with v^2 = -1.
#[derive(Clone, PartialEq)]
pub enum VectorClassTag<S> {
    Zero,
    Direction(Quaternion<S>),
}

impl<S: Scalar> std::fmt::Debug for VectorClassTag<S> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            VectorClassTag::Zero => write!(f, "[0]"),
            VectorClassTag::Direction(v) => write!(f, "[{v:?}]"),
        }
    }
}

impl<S: Scalar> VectorClassTag<S> {
    /// Tag for the class SR_[v]; v must be a unit imaginary.
    pub fn direction(v: Quaternion<S>) -> Result<Self> {
        if v.is_unit_imaginary() {
            Ok(VectorClassTag::Direction(v))
        } else {
            Err(Error::NotUnitImaginary)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rat;

    type Q = Quaternion<Rat>;
    type P = QPoly<Rat>;

    fn q_minus(c: Q) -> P {
        P::linear(&c)
    }

    /// Independent route for the *-product: the four real-component
    /// bilinear formulas
    ///   (f*g)_0 = f0 g0 - f1 g1 - f2 g2 - f3 g3
    ///   (f*g)_1 = f0 g1 + f1 g0 + f2 g3 - f3 g2
    ///   (f*g)_2 = f0 g2 - f1 g3 + f2 g0 + f3 g1
    ///   (f*g)_3 = f0 g3 + f1 g2 - f2 g1 + f3 g0
    /// with commuting real-coefficient components.
    fn star_mul_by_components(f: &P, g: &P) -> P {
        let fc = f.component_decompose();
        let gc = g.component_decompose();
        let m = |a: usize, b: usize| fc[a].star_mul(&gc[b]);
        let c0 = &(&m(0, 0) - &m(1, 1)) - &(&m(2, 2) + &m(3, 3));
        let c1 = &(&m(0, 1) + &m(1, 0)) + &(&m(2, 3) - &m(3, 2));
        let c2 = &(&m(0, 2) - &m(1, 3)) + &(&m(2, 0) + &m(3, 1));
        let c3 = &(&m(0, 3) + &m(1, 2)) + &(&m(3, 0) - &m(2, 1));
        P::recompose(&[c0, c1, c2, c3])
    }

    fn q2_plus_1() -> P {
        P::from_real_terms(0, vec![Rat::from_int(1), Rat::zero(), Rat::from_int(1)])
    }

    #[test]
    fn star_product_frozen_example() {
        // (q - i)*(q - j) = q^2 + q(-i-j) + k
        let f = q_minus(Q::i());
        let g = q_minus(Q::j());
        let prod = f.star_mul(&g);
        let expected = P::from_terms(0, vec![Q::k(), -(Q::i() + Q::j()), Q::one()]);
        assert_eq!(prod, expected);
        assert_eq!(star_mul_by_components(&f, &g), expected);
    }

    #[test]
    fn star_product_conjugate_pair() {
        // (q - i)*(q + i) = q^2 + 1
        let prod = q_minus(Q::i()).star_mul(&q_minus(-Q::i()));
        assert_eq!(prod, q2_plus_1());
    }

    #[test]
    fn unit_and_component_route_agree() {
        let f = P::from_terms(
            0,
            vec![Q::from_ints(1, 2, 0, -1), Q::from_ints(0, 1, 1, 0), Q::k()],
        );
        assert_eq!(P::one().star_mul(&f), f);
        assert_eq!(f.star_mul(&P::one()), f);
        let g = P::from_terms(
            -1,
            vec![Q::from_ints(2, 0, 1, 0), Q::from_ints(1, -1, 0, 3)],
        );
        assert_eq!(f.star_mul(&g), star_mul_by_components(&f, &g));
        assert_eq!(g.star_mul(&f), star_mul_by_components(&g, &f));
    }

    #[test]
    fn slice_preserving_factor_commutes_pointwise() {
        let sp = P::from_real_terms(
            0,
            vec![Rat::from_int(2), Rat::from_int(-1), Rat::from_int(1)],
        );
        let g = P::from_terms(0, vec![Q::from_ints(0, 1, 2, 0), Q::from_ints(1, 0, 0, 1)]);
        assert_eq!(sp.star_mul(&g), g.star_mul(&sp));
        for qv in [
            Q::from_ints(1, 2, 0, 0),
            Q::from_ints(0, 1, 1, 1),
            Q::from_ints(-2, 0, 3, 1),
        ] {
            let lhs = sp.star_mul(&g).evaluate(&qv).unwrap();
            let rhs = sp.evaluate(&qv).unwrap() * g.evaluate(&qv).unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn regular_conjugate_examples() {
        assert_eq!(q_minus(Q::i()).regular_conjugate(), q_minus(-Q::i()));
        let real = P::from_real_terms(0, vec![Rat::from_int(3), Rat::from_int(1)]);
        assert_eq!(real.regular_conjugate(), real);
        // coefficients [j, k] -> [-j, -k]
        let f = P::from_terms(0, vec![Q::j(), Q::k()]);
        assert_eq!(
            f.regular_conjugate(),
            P::from_terms(0, vec![-Q::j(), -Q::k()])
        );
        // f^c = f_0 - f_v
        let f = P::from_terms(0, vec![Q::from_ints(1, 2, 3, 4), Q::from_ints(0, -1, 0, 2)]);
        let (f0, fv) = f.scalar_vector_split();
        assert_eq!(f.regular_conjugate(), &f0 - &fv);
    }

    #[test]
    fn symmetrization_examples() {
        let f = q_minus(Q::i());
        let fs = f.symmetrization();
        assert_eq!(fs, q2_plus_1());
        assert!(fs.is_slice_preserving());
        assert_eq!(P::zero().symmetrization(), P::zero());
        // multiplicative on *-factors: ((q-i)*(q-j))^s = (q^2+1)^2
        let prod = q_minus(Q::i()).star_mul(&q_minus(Q::j()));
        let s = prod.symmetrization();
        assert_eq!(s, q2_plus_1().star_mul(&q2_plus_1()));
        // two-sided
        assert_eq!(prod.regular_conjugate().star_mul(&prod), s);
    }

    #[test]
    fn split_and_components() {
        // q + i -> (q, i)
        let f = &P::variable() + &P::constant(Q::i());
        let (f0, fv) = f.scalar_vector_split();
        assert_eq!(f0, P::variable());
        assert_eq!(fv, P::constant(Q::i()));
        // real f -> (f, 0)
        let real = P::from_real_terms(0, vec![Rat::from_int(5), Rat::from_int(-2)]);
        let (r0, rv) = real.scalar_vector_split();
        assert_eq!(r0, real);
        assert!(rv.is_zero());
        // q(1+j) + k -> (q, qj + k)
        let f = &P::monomial(1, Q::from_ints(1, 0, 1, 0)) + &P::constant(Q::k());
        let (f0, fv) = f.scalar_vector_split();
        assert_eq!(f0, P::variable());
        assert_eq!(fv, &P::monomial(1, Q::j()) + &P::constant(Q::k()));
        // component examples
        let parts = P::constant(Q::i()).component_decompose();
        assert!(parts[0].is_zero());
        assert_eq!(parts[1], P::one());
        assert!(parts[2].is_zero() && parts[3].is_zero());
        let f = &P::monomial(2, Q::k()) - &P::constant_real(Rat::from_int(3));
        let parts = f.component_decompose();
        assert_eq!(parts[0], P::constant_real(Rat::from_int(-3)));
        assert!(parts[1].is_zero() && parts[2].is_zero());
        assert_eq!(parts[3], P::monomial(2, Q::one()));
        assert_eq!(P::recompose(&parts), f);
    }

    #[test]
    fn star_inverse_examples() {
        // constant 2i: inverse -i/2
        let f = P::constant(Q::i().scale(&Rat::from_int(2)));
        let inv = f.star_inverse().unwrap();
        let val = inv.evaluate(&Q::from_ints(1, 1, 0, 0)).unwrap();
        assert_eq!(val, Q::i().scale(&Rat::from_ratio(-1, 2)));
        // (q - i)^{-*} = (q + i)/(q^2 + 1)
        let inv = q_minus(Q::i()).star_inverse().unwrap();
        assert_eq!(inv.numerator(), &q_minus(-Q::i()));
        assert_eq!(inv.denominator(), &q2_plus_1());
        assert_eq!(P::zero().star_inverse(), Err(Error::ZeroFunction));
    }

    #[test]
    fn evaluation_examples() {
        // q^2 at j = -1
        let sq = P::monomial(2, Q::one());
        assert_eq!(sq.evaluate(&Q::j()).unwrap(), -Q::one());
        // q·i at j: j·i = -k
        let f = P::monomial(1, Q::i());
        assert_eq!(f.evaluate(&Q::j()).unwrap(), -Q::k());
        // left-factor zero propagates to the product
        let prod = q_minus(Q::i()).star_mul(&q_minus(Q::j()));
        assert_eq!(prod.evaluate(&Q::i()).unwrap(), Q::zero());
        // Laurent pole at zero
        let laurent = P::monomial(-1, Q::one());
        assert_eq!(laurent.evaluate(&Q::zero()), Err(Error::PoleAtZero));
        assert_eq!(
            laurent.evaluate(&Q::from_ints(2, 0, 0, 0)).unwrap(),
            Q::from_real(Rat::from_ratio(1, 2))
        );
    }

    #[test]
    fn stem_evaluation_matches_direct() {
        let cases = [
            (
                P::monomial(2, Q::one()),
                Rat::zero(),
                Rat::from_int(1),
                Q::k(),
            ),
            (
                P::monomial(1, Q::i()),
                Rat::zero(),
                Rat::from_int(1),
                Q::j(),
            ),
            (
                P::constant(Q::from_ints(3, -1, 2, 0)),
                Rat::from_int(2),
                Rat::from_int(5),
                Q::i(),
            ),
        ];
        for (f, x, y, j) in cases {
            let via_stem = f.stem_evaluate(&x, &y, &j).unwrap();
            let point = Quaternion::from_real(x) + j.scale(&y);
            assert_eq!(via_stem, f.evaluate(&point).unwrap());
        }
        // q^2 at (0,1,k) -> -1
        let sq = P::monomial(2, Q::one());
        assert_eq!(
            sq.stem_evaluate(&Rat::zero(), &Rat::from_int(1), &Q::k())
                .unwrap(),
            -Q::one()
        );
        // non-unit J rejected
        assert_eq!(
            sq.stem_evaluate(&Rat::zero(), &Rat::one(), &Q::from_ints(0, 2, 0, 0)),
            Err(Error::NotUnitImaginary)
        );
        // Laurent stem with negative powers agrees too
        let laurent = P::from_terms(-1, vec![Q::j(), Q::one(), Q::from_ints(0, 0, 0, 2)]);
        let (x, y, j) = (Rat::from_int(1), Rat::from_int(2), Q::k());
        let point = Quaternion::from_real(x.clone()) + j.scale(&y);
        assert_eq!(
            laurent.stem_evaluate(&x, &y, &j).unwrap(),
            laurent.evaluate(&point).unwrap()
        );
    }

    #[test]
    fn stem_values_have_conjugate_symmetry() {
        // F(conj z) = conj_iota(F(z)): F1 even in y, F2 odd in y
        let f = P::from_terms(
            -1,
            vec![Q::from_ints(1, 2, 0, 3), Q::from_ints(0, 1, 1, 0), Q::k()],
        );
        let (x, y) = (Rat::from_ratio(3, 2), Rat::from_ratio(5, 4));
        let sv = f.stem_value(&x, &y).unwrap();
        let sv_conj = f.stem_value(&x, &(-y)).unwrap();
        assert_eq!(sv_conj.f1, sv.f1);
        assert_eq!(sv_conj.f2, -sv.f2);
    }

    #[test]
    fn vector_class_membership() {
        let tag_i = VectorClassTag::direction(Q::i()).unwrap();
        let f = &P::variable() + &P::constant(Q::i().scale(&Rat::from_int(3)));
        assert!(f.in_vector_class(&tag_i));
        let g = &P::variable() + &P::constant(Q::j());
        assert!(!g.in_vector_class(&tag_i));
        let real = P::from_real_terms(0, vec![Rat::from_int(1), Rat::from_int(2)]);
        assert!(real.in_vector_class(&VectorClassTag::Zero));
        assert!(real.in_vector_class(&tag_i));
        assert!(!f.in_vector_class(&VectorClassTag::Zero));
        // same-class commutativity
        let h = &P::monomial(2, Q::from_ints(2, 1, 0, 0)) + &P::constant(Q::from_ints(0, -1, 0, 0));
        assert!(h.in_vector_class(&tag_i));
        assert_eq!(f.star_mul(&h), h.star_mul(&f));
        // invalid tag direction
        assert_eq!(
            VectorClassTag::direction(Q::from_ints(0, 2, 0, 0)),
            Err(Error::NotUnitImaginary)
        );
    }

    #[test]
    fn left_division_by_linear() {
        let f = q_minus(Q::i()).star_mul(&q_minus(Q::j()));
        let (g, r) = f.left_divide_linear(&Q::i()).unwrap();
        assert!(r.is_zero());
        assert_eq!(g, q_minus(Q::j()));
        // remainder equals the value
        let (_, r) = f.left_divide_linear(&Q::j()).unwrap();
        assert_eq!(r, f.evaluate(&Q::j()).unwrap());
    }

    #[test]
    fn division_by_real_polynomial() {
        let s = q2_plus_1();
        let f = s.star_mul(&q_minus(Q::k()));
        let (quot, rem) = f.divide_by_real(&s).unwrap();
        assert!(rem.is_zero());
        assert_eq!(quot, q_minus(Q::k()));
        let (_, rem) = q_minus(Q::i())
            .star_mul(&q_minus(Q::j()))
            .divide_by_real(&s)
            .unwrap();
        // remainder (k-1) + q(-i-j)
        assert_eq!(
            rem,
            P::from_terms(0, vec![Q::k() - Q::one(), -(Q::i() + Q::j())])
        );
        assert!(f.divide_by_real(&q_minus(Q::i())).is_err());
    }

    #[test]
    fn canonical_form_trims() {
        let p = P::from_terms(-1, vec![Q::zero(), Q::one(), Q::zero()]);
        assert_eq!(p.min_degree(), 0);
        assert_eq!(p.max_degree(), 0);
        assert_eq!(p, P::one());
        assert!(P::from_terms(3, vec![Q::zero()]).is_zero());
    }
}
