//! Matrix representations of slice functions, with exp* and log*.
//!
//! A slice function f = f_0 + f_1 i + f_2 j + f_3 k maps to the 4x4 matrix
//! M_f = f_0 1 + f_1 I + f_2 J + f_3 K over the commuting ring of
//! slice-preserving (real-coefficient) polynomials; star products become
//! matrix products, f^c becomes the transpose, and det M_f = (f^s)^2.
//!
//! exp* and log* are truncated *-series computed in the polynomial algebra
//! itself; the matrix exponential is kept as an independent cross-check
//! route (the correspondence exp M_f <-> exp*(f) is a testable theorem
//! here, not a definition).

use crate::error::{Error, Result};
use crate::quat::Quaternion;
use crate::scalar::Scalar;
use crate::starpoly::{QPoly, VectorClassTag};

/// Hard cap on adaptive series continuation.
const SERIES_CAP: usize = 1024;
/// Adaptive early-exit threshold on a term's coefficient norm.
const SERIES_TOL: f64 = 1e-14;

/// The 4x4 representation M_f with real-coefficient polynomial entries.
#[derive(Clone, PartialEq)]
pub struct MatRep4<S> {
    entries: [[QPoly<S>; 4]; 4],
}

impl<S: Scalar> std::fmt::Debug for MatRep4<S> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for row in &self.entries {
            writeln!(
                f,
                "[{:?}, {:?}, {:?}, {:?}]",
                row[0], row[1], row[2], row[3]
            )?;
        }
        Ok(())
    }
}

impl<S: Scalar> MatRep4<S> {
    /// The identity matrix 1.
    pub fn identity() -> Self {
        Self::from_components(&[QPoly::one(), QPoly::zero(), QPoly::zero(), QPoly::zero()])
    }

    /// Builds f_0 1 + f_1 I + f_2 J + f_3 K from the four slice-preserving
    /// generators:
    ///
    /// ```text
    /// [ f0 -f1 -f2 -f3 ]
    /// [ f1  f0 -f3  f2 ]
    /// [ f2  f3  f0 -f1 ]
    /// [ f3 -f2  f1  f0 ]
    /// ```
    pub fn from_components(c: &[QPoly<S>; 4]) -> Self {
        let p = |k: usize| c[k].clone();
        let n = |k: usize| -c[k].clone();
        MatRep4 {
            entries: [
                [p(0), n(1), n(2), n(3)],
                [p(1), p(0), n(3), p(2)],
                [p(2), p(3), p(0), n(1)],
                [p(3), n(2), p(1), p(0)],
            ],
        }
    }

    pub fn entries(&self) -> &[[QPoly<S>; 4]; 4] {
        &self.entries
    }

    /// The generators (f_0, f_1, f_2, f_3), read off the first column.
    pub fn components(&self) -> [QPoly<S>; 4] {
        [
            self.entries[0][0].clone(),
            self.entries[1][0].clone(),
            self.entries[2][0].clone(),
            self.entries[3][0].clone(),
        ]
    }

    /// The represented slice function f_0 + f_1 i + f_2 j + f_3 k.
    pub fn to_qpoly(&self) -> QPoly<S> {
        QPoly::recompose(&self.components())
    }

    pub fn transpose(&self) -> Self {
        let mut entries = self.entries.clone();
        for (r, row) in entries.iter_mut().enumerate() {
            for (c, e) in row.iter_mut().enumerate() {
                *e = self.entries[c][r].clone();
            }
        }
        MatRep4 { entries }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut entries = self.entries.clone();
        for (r, row) in entries.iter_mut().enumerate() {
            for (c, e) in row.iter_mut().enumerate() {
                *e = &self.entries[r][c] + &other.entries[r][c];
            }
        }
        MatRep4 { entries }
    }

    /// Matrix product; entries are real-coefficient polynomials, so entry
    /// products commute and ordinary matrix multiplication applies.
    pub fn mul(&self, other: &Self) -> Self {
        let mut entries: [[QPoly<S>; 4]; 4] =
            std::array::from_fn(|_| std::array::from_fn(|_| QPoly::zero()));
        for (r, row) in entries.iter_mut().enumerate() {
            for (c, e) in row.iter_mut().enumerate() {
                let mut acc = QPoly::zero();
                for k in 0..4 {
                    acc = &acc + &self.entries[r][k].star_mul(&other.entries[k][c]);
                }
                *e = acc;
            }
        }
        MatRep4 { entries }
    }

    pub fn scale_real(&self, s: &S) -> Self {
        let mut entries = self.entries.clone();
        for row in entries.iter_mut() {
            for e in row.iter_mut() {
                *e = e.scale_real(s);
            }
        }
        MatRep4 { entries }
    }

    /// Determinant by cofactor expansion over the commutative entry ring.
    pub fn det(&self) -> QPoly<S> {
        fn det3<S: Scalar>(m: &[[&QPoly<S>; 3]; 3]) -> QPoly<S> {
            let a = m[0][0].star_mul(&(&m[1][1].star_mul(m[2][2]) - &m[1][2].star_mul(m[2][1])));
            let b = m[0][1].star_mul(&(&m[1][0].star_mul(m[2][2]) - &m[1][2].star_mul(m[2][0])));
            let c = m[0][2].star_mul(&(&m[1][0].star_mul(m[2][1]) - &m[1][1].star_mul(m[2][0])));
            &(&a - &b) + &c
        }
        let mut acc = QPoly::zero();
        for col in 0..4 {
            let minor: [[&QPoly<S>; 3]; 3] = std::array::from_fn(|r| {
                let mut cs = (0..4).filter(|&c| c != col);
                std::array::from_fn(|_| &self.entries[r + 1][cs.next().unwrap()])
            });
            let term = self.entries[0][col].star_mul(&det3(&minor));
            if col % 2 == 0 {
                acc = &acc + &term;
            } else {
                acc = &acc - &term;
            }
        }
        acc
    }

    /// Truncated matrix exponential sum M^n / n!; the independent
    /// cross-check route for [`exp_star`].
    pub fn exp(&self, trunc: usize) -> Self {
        let mut sum = Self::identity();
        let mut term = Self::identity();
        for n in 1..=trunc.max(1) {
            term = term.mul(self).scale_real(&S::from_int(n as i64).recip());
            sum = sum.add(&term);
            let m = term
                .entries
                .iter()
                .flatten()
                .map(|p| p.max_coeff_norm())
                .fold(0.0, f64::max);
            if m < SERIES_TOL {
                break;
            }
        }
        sum
    }

    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.entries
            .iter()
            .flatten()
            .zip(other.entries.iter().flatten())
            .all(|(a, b)| a.approx_eq(b, tol))
    }
}

/// M_f for a slice function f; an algebra homomorphism:
/// to_matrix(f*g) = to_matrix(f) * to_matrix(g) and transposition is the
/// regular conjugate.
pub fn to_matrix<S: Scalar>(f: &QPoly<S>) -> MatRep4<S> {
    MatRep4::from_components(&f.component_decompose())
}

/// det M_f, asserting det M_f = (f^s)^2 (exactly in the exact backend,
/// within 1e-6 of the coefficient scale in floats).
pub fn det_check<S: Scalar>(f: &QPoly<S>) -> QPoly<S> {
    let det = to_matrix(f).det();
    let fs = f.symmetrization();
    let expected = fs.star_mul(&fs);
    if S::EXACT {
        assert!(det == expected, "det M_f != (f^s)^2");
    } else {
        let tol = 1e-6 * (1.0 + expected.max_coeff_norm());
        assert!(det.approx_eq(&expected, tol), "det M_f != (f^s)^2");
    }
    det
}

/// Row-sum norm report of M_f at a point.
#[derive(Clone, PartialEq)]
pub struct MatNormReport<S> {
    pub point: Quaternion<S>,
    /// |M_f(z)| = sum_l |f_l(z)| (all rows agree).
    pub m_norm: f64,
    /// |f(z)|.
    pub f_abs: f64,
}

impl<S: Scalar> std::fmt::Debug for MatNormReport<S> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "|M_f| = {} and |f| = {} at {:?}",
            self.m_norm, self.f_abs, self.point
        )
    }
}

/// The matrix norm |M_f(z)| = sum_l |f_l(z)| at the point q, together with
/// |f(q)|; checks |f| <= |M_f| <= 4|f| and |M_f| = |M_{f^c}|.
pub fn mat_norm_at<S: Scalar>(f: &QPoly<S>, q: &Quaternion<S>) -> Result<MatNormReport<S>> {
    let comps = f.component_decompose();
    let mut m_norm = 0.0;
    for c in &comps {
        m_norm += c.evaluate(q)?.abs_f64();
    }
    let f_abs = f.evaluate(q)?.abs_f64();
    let slack = 1e-9 * (1.0 + m_norm);
    assert!(
        f_abs <= m_norm + slack && m_norm <= 4.0 * f_abs + slack,
        "matrix norm inequality violated: |f| = {f_abs}, |M_f| = {m_norm}"
    );
    let mut conj_norm = 0.0;
    for c in &f.regular_conjugate().component_decompose() {
        conj_norm += c.evaluate(q)?.abs_f64();
    }
    assert!(
        (conj_norm - m_norm).abs() <= slack,
        "|M_f| != |M_(f^c)| at the point"
    );
    Ok(MatNormReport {
        point: q.clone(),
        m_norm,
        f_abs,
    })
}

fn require_float<S: Scalar>() -> Result<()> {
    if S::EXACT {
        Err(Error::UnsupportedBackend)
    } else {
        Ok(())
    }
}

/// Truncated *-exponential series over any Laurent support; shared by
/// [`exp_star`] and the multiplicative splitting in the cousin module.
pub(crate) fn star_exp_series<S: Scalar>(f: &QPoly<S>, trunc: usize) -> (QPoly<S>, usize) {
    let mut sum = QPoly::one();
    let mut term = QPoly::one();
    let mut depth = 0;
    for n in 1..=SERIES_CAP {
        term = term.star_mul(f).scale_real(&S::from_int(n as i64).recip());
        sum = &sum + &term;
        depth = n;
        if n >= trunc && term.max_coeff_norm() < SERIES_TOL {
            break;
        }
        if term.max_coeff_norm() < SERIES_TOL {
            break;
        }
    }
    (sum, depth)
}

/// exp*(f) as the truncated series sum f^{*n}/n!, with adaptive
/// continuation past `trunc` until a term's coefficient norm drops below
/// 1e-14. Float backend; ordinary polynomials only.
pub fn exp_star<S: Scalar>(f: &QPoly<S>, trunc: usize) -> Result<QPoly<S>> {
    Ok(exp_star_report(f, trunc)?.0)
}

/// exp* together with the number of series terms used.
///
/// Everything in sight lies in the commutative subalgebra of *-polynomials
/// in f, so scaling and squaring applies: exp*(f) = exp*(f / 2^k)^{*2^k}.
/// Large arguments are scaled below 1 first, which keeps every series term
/// below 1 and the evaluation near machine precision.
pub fn exp_star_report<S: Scalar>(f: &QPoly<S>, trunc: usize) -> Result<(QPoly<S>, usize)> {
    require_float::<S>()?;
    if f.min_degree() < 0 {
        return Err(Error::NotPolynomial);
    }
    let norm = f.weighted_norm(&[1.0]);
    let k = if norm > 0.5 {
        (norm / 0.5).log2().ceil() as u32
    } else {
        0
    };
    let scaled = f.scale_real(&S::from_f64(0.5f64.powi(k as i32)));
    let (mut e, depth) = star_exp_series(&scaled, trunc);
    let trim = 1e-18 * (1.0 + e.max_coeff_norm());
    for _ in 0..k {
        e = e.star_mul(&e).trim_below(trim);
    }
    Ok((e, depth))
}

/// log*(f) = -sum_{n>=1} (1-f)^{*n}/n, gated by the coefficient-sum norm of
/// 1 - f on the closed disk of radius `radius` (the concrete stand-in for
/// |M_{1-f}|_Omega < 1). Float backend.
pub fn log_star_radius<S: Scalar>(
    f: &QPoly<S>,
    trunc: usize,
    radius: f64,
) -> Result<(QPoly<S>, usize)> {
    require_float::<S>()?;
    if f.min_degree() < 0 {
        return Err(Error::NotPolynomial);
    }
    let g = &QPoly::one() - f;
    if g.weighted_norm(&[radius]) >= 1.0 {
        return Err(Error::OutsideConvergence);
    }
    let mut sum = QPoly::zero();
    let mut power = QPoly::one();
    let mut depth = 0;
    for n in 1..=SERIES_CAP.max(trunc) {
        power = power.star_mul(&g);
        sum = &sum - &power.scale_real(&S::from_int(n as i64).recip());
        depth = n;
        if power.max_coeff_norm() / (n as f64) < SERIES_TOL {
            break;
        }
    }
    Ok((sum, depth))
}

/// log* on the default unit disk.
pub fn log_star<S: Scalar>(f: &QPoly<S>, trunc: usize) -> Result<QPoly<S>> {
    Ok(log_star_radius(f, trunc, 1.0)?.0)
}

/// The 2x2 representation [[f0, -f1], [f1, f0]] of a function in the
/// constant vectorial class [v]: f = f_0 + f_1 v with v^2 = -1.
#[derive(Clone, PartialEq)]
pub struct MatRep2<S> {
    pub f0: QPoly<S>,
    pub f1: QPoly<S>,
    pub v: Quaternion<S>,
}

impl<S: Scalar> std::fmt::Debug for MatRep2<S> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "[[{:?}, {:?}], [{:?}, {:?}]] (v = {:?})",
            self.f0,
            -self.f1.clone(),
            self.f1,
            self.f0,
            self.v
        )
    }
}

impl<S: Scalar> MatRep2<S> {
    /// Same-class product; commutative.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.v != other.v {
            return Err(Error::NotInClass);
        }
        Ok(MatRep2 {
            f0: &self.f0.star_mul(&other.f0) - &self.f1.star_mul(&other.f1),
            f1: &self.f0.star_mul(&other.f1) + &self.f1.star_mul(&other.f0),
            v: self.v.clone(),
        })
    }

    /// det = f_0^2 + f_1^2 = f^s.
    pub fn det(&self) -> QPoly<S> {
        &self.f0.star_mul(&self.f0) + &self.f1.star_mul(&self.f1)
    }

    /// The represented function f_0 + f_1 v.
    pub fn to_qpoly(&self) -> QPoly<S> {
        &self.f0 + &self.f1.scale_right(&self.v)
    }
}

/// The 2x2 vectorial-class representation; requires membership in the
/// (non-zero) class.
pub fn to_matrix2<S: Scalar>(f: &QPoly<S>, tag: &VectorClassTag<S>) -> Result<MatRep2<S>> {
    let v = match tag {
        VectorClassTag::Zero => return Err(Error::NotInClass),
        VectorClassTag::Direction(v) => v.clone(),
    };
    if !f.in_vector_class(tag) {
        return Err(Error::NotInClass);
    }
    let (f0, fv) = f.scalar_vector_split();
    // f_v = f_1 v with f_1 real: project coefficientwise onto v
    let f1 = if fv.is_zero() {
        QPoly::zero()
    } else {
        QPoly::from_terms(
            fv.min_degree(),
            (fv.min_degree()..=fv.max_degree())
                .map(|n| Quaternion::from_real(fv.coeff(n).dot(&v)))
                .collect(),
        )
    };
    Ok(MatRep2 { f0, f1, v })
}
