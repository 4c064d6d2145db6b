//! Zero sets, prescribed zeros, and principal divisors at finite scale.
//!
//! The zero set of a nonzero polynomial is a finite union of real points,
//! isolated nonreal points and whole spheres S(a, r). Classification runs
//! through the symmetrization f^s (a genuine real polynomial): real roots of
//! f^s give real zeros at half the multiplicity; a conjugate root pair
//! x0 +- iy0 flags the sphere S(x0, y0), and the remainder of f modulo the
//! sphere's real quadratic decides between a spherical zero and an isolated
//! point, the latter carrying the residual multiplicity.
//!
//! The builders run the other way: `build_with_zeros` realizes a finite
//! positive divisor as a polynomial, `divisor_build` realizes zero/pole
//! prescriptions as a semiregular quotient N * D^{-1} with slice-preserving
//! denominator D.

use crate::error::{Error, Result};
use crate::quat::{Quaternion, Sphere};
use crate::rpoly::{self, FsRoot};
use crate::scalar::Scalar;
use crate::starpoly::QPoly;

/// A divisor/jet node: a real point, a nonreal point, or a whole sphere.
#[derive(Clone, PartialEq)]
pub enum Node<S> {
    Real(S),
    Point(Quaternion<S>),
    Sphere(Sphere<S>),
}

impl<S: Scalar> std::fmt::Debug for Node<S> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Node::Real(x) => write!(f, "Real({x})"),
            Node::Point(q) => write!(f, "Point({q:?})"),
            Node::Sphere(s) => write!(f, "{s:?}"),
        }
    }
}

impl<S: Scalar> Node<S> {
    /// The axial symmetrization of the node (a degenerate sphere for real
    /// points).
    pub fn sphere(&self) -> Sphere<S> {
        match self {
            Node::Real(x) => Sphere::from_radius_sq(x.clone(), S::zero()),
            Node::Point(q) => q.symmetrize(),
            Node::Sphere(s) => s.clone(),
        }
    }

    fn validate(&self) -> Result<()> {
        match self {
            Node::Real(_) => Ok(()),
            Node::Point(q) => {
                if q.is_real() {
                    Err(Error::RealArgument)
                } else {
                    Ok(())
                }
            }
            Node::Sphere(s) => {
                if s.is_point() {
                    Err(Error::DegenerateSphere)
                } else {
                    Ok(())
                }
            }
        }
    }

    fn sort_key(&self) -> (u8, f64, f64, f64, f64, f64) {
        match self {
            Node::Real(x) => (0, x.to_f64(), 0.0, 0.0, 0.0, 0.0),
            Node::Point(q) => (
                1,
                q.w.to_f64(),
                q.x.to_f64(),
                q.y.to_f64(),
                q.z.to_f64(),
                0.0,
            ),
            Node::Sphere(s) => (
                2,
                s.center().to_f64(),
                s.radius_sq().to_f64(),
                0.0,
                0.0,
                0.0,
            ),
        }
    }
}

/// One node with a nonzero integer order (zeros positive, poles negative).
#[derive(Clone, PartialEq)]
pub struct DivisorEntry<S> {
    pub node: Node<S>,
    pub order: i64,
}

impl<S: Scalar> std::fmt::Debug for DivisorEntry<S> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({:?}, {})", self.node, self.order)
    }
}

/// A finite validated divisor.
///
/// Invariants: nodes pairwise distinct; at most one nonreal point per
/// sphere; sphere orders even; a sphere node and a point node on it must
/// carry the same sign.
#[derive(Clone, PartialEq)]
pub struct Divisor<S> {
    entries: Vec<DivisorEntry<S>>,
}

impl<S: Scalar> std::fmt::Debug for Divisor<S> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_list().entries(&self.entries).finish()
    }
}

impl<S: Scalar> Divisor<S> {
    pub fn empty() -> Self {
        Divisor {
            entries: Vec::new(),
        }
    }

    pub fn new(entries: Vec<DivisorEntry<S>>) -> Result<Self> {
        for e in &entries {
            e.node.validate()?;
            if e.order == 0 {
                return Err(Error::InvalidOrder);
            }
            if matches!(e.node, Node::Sphere(_)) && e.order % 2 != 0 {
                return Err(Error::InvalidOrder);
            }
        }
        for (i, a) in entries.iter().enumerate() {
            for b in entries.iter().skip(i + 1) {
                if a.node == b.node {
                    if a.order.signum() != b.order.signum() {
                        return Err(Error::OverlappingZeroPole);
                    }
                    return Err(Error::ConflictingNodes);
                }
                let same_sphere = a.node.sphere() == b.node.sphere();
                if !same_sphere {
                    continue;
                }
                match (&a.node, &b.node) {
                    // a function vanishing at two points of one sphere
                    // vanishes on the whole sphere
                    (Node::Point(_), Node::Point(_)) => return Err(Error::ConflictingNodes),
                    (Node::Point(_), Node::Sphere(_)) | (Node::Sphere(_), Node::Point(_)) => {
                        if a.order.signum() != b.order.signum() {
                            return Err(Error::OverlappingZeroPole);
                        }
                    }
                    _ => return Err(Error::ConflictingNodes),
                }
            }
        }
        Ok(Divisor { entries })
    }

    pub fn entries(&self) -> &[DivisorEntry<S>] {
        &self.entries
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn all_positive(&self) -> bool {
        self.entries.iter().all(|e| e.order > 0)
    }

    /// Entries with positive order, as a divisor.
    pub fn positive_part(&self) -> Self {
        Divisor {
            entries: self
                .entries
                .iter()
                .filter(|e| e.order > 0)
                .cloned()
                .collect(),
        }
    }

    /// Entries with negative order, with orders negated to positive.
    pub fn negated_negative_part(&self) -> Self {
        Divisor {
            entries: self
                .entries
                .iter()
                .filter(|e| e.order < 0)
                .map(|e| DivisorEntry {
                    node: e.node.clone(),
                    order: -e.order,
                })
                .collect(),
        }
    }

    /// Canonically sorted copy of the entries (for comparisons).
    pub fn sorted_entries(&self) -> Vec<DivisorEntry<S>> {
        let mut v = self.entries.clone();
        v.sort_by(|a, b| {
            a.node
                .sort_key()
                .partial_cmp(&b.node.sort_key())
                .unwrap_or(std::cmp::Ordering::Equal)
        });
        v
    }
}

/// A classified zero of a polynomial.
#[derive(Clone, PartialEq)]
pub enum ZeroRecord<S> {
    RealPoint {
        location: S,
        multiplicity: u32,
    },
    IsolatedPoint {
        location: Quaternion<S>,
        multiplicity: u32,
    },
    SphericalZero {
        sphere: Sphere<S>,
        multiplicity: u32,
    },
}

impl<S: Scalar> std::fmt::Debug for ZeroRecord<S> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ZeroRecord::RealPoint {
                location,
                multiplicity,
            } => write!(f, "RealPoint({location}, m={multiplicity})"),
            ZeroRecord::IsolatedPoint {
                location,
                multiplicity,
            } => write!(f, "IsolatedPoint({location:?}, m={multiplicity})"),
            ZeroRecord::SphericalZero {
                sphere,
                multiplicity,
            } => write!(f, "SphericalZero({sphere:?}, m={multiplicity})"),
        }
    }
}

impl<S: Scalar> ZeroRecord<S> {
    pub fn multiplicity(&self) -> u32 {
        match self {
            ZeroRecord::RealPoint { multiplicity, .. }
            | ZeroRecord::IsolatedPoint { multiplicity, .. }
            | ZeroRecord::SphericalZero { multiplicity, .. } => *multiplicity,
        }
    }

    /// A representative point of the zero locus (center + i*r for spheres).
    pub fn witness_point(&self) -> Quaternion<S> {
        match self {
            ZeroRecord::RealPoint { location, .. } => Quaternion::from_real(location.clone()),
            ZeroRecord::IsolatedPoint { location, .. } => location.clone(),
            ZeroRecord::SphericalZero { sphere, .. } => {
                let r = sphere
                    .radius()
                    .unwrap_or_else(|| S::from_f64(sphere.radius_f64()));
                Quaternion::from_real(sphere.center()) + Quaternion::i().scale(&r)
            }
        }
    }

    /// The record as a divisor entry (node + positive order).
    pub fn to_entry(&self) -> DivisorEntry<S> {
        match self {
            ZeroRecord::RealPoint {
                location,
                multiplicity,
            } => DivisorEntry {
                node: Node::Real(location.clone()),
                order: *multiplicity as i64,
            },
            ZeroRecord::IsolatedPoint {
                location,
                multiplicity,
            } => DivisorEntry {
                node: Node::Point(location.clone()),
                order: *multiplicity as i64,
            },
            ZeroRecord::SphericalZero {
                sphere,
                multiplicity,
            } => DivisorEntry {
                node: Node::Sphere(sphere.clone()),
                order: *multiplicity as i64,
            },
        }
    }

    fn sort_key(&self) -> (u8, f64, f64, f64, f64, f64) {
        self.to_entry().node.sort_key()
    }
}

/// Tolerances for float-backend classification.
#[derive(Clone, Debug)]
pub struct ZeroConfig {
    /// Root clustering / real-axis tolerance.
    pub cluster_tol: f64,
    /// Threshold for treating residual polynomials and values as zero,
    /// relative to the coefficient scale.
    pub value_tol: f64,
}

impl Default for ZeroConfig {
    fn default() -> Self {
        ZeroConfig {
            cluster_tol: 1e-8,
            value_tol: 1e-8,
        }
    }
}

/// The classified zero set of a nonzero polynomial, canonically sorted.
pub fn zero_set<S: Scalar>(f: &QPoly<S>) -> Result<Vec<ZeroRecord<S>>> {
    zero_set_with(f, &ZeroConfig::default())
}

pub fn zero_set_with<S: Scalar>(f: &QPoly<S>, cfg: &ZeroConfig) -> Result<Vec<ZeroRecord<S>>> {
    if f.is_zero() {
        return Err(Error::ZeroFunction);
    }
    if f.min_degree() < 0 {
        return Err(Error::NotPolynomial);
    }
    let fs = f.symmetrization();
    let fs_real: Vec<S> = (0..=fs.max_degree()).map(|n| fs.coeff(n).re()).collect();
    let mut records = if S::EXACT {
        classify(f, &fs, rpoly::roots_exact(&fs_real), cfg)?
    } else {
        // a multiplicity-m root scatters the float root estimates like
        // eps^(1/m), so no single clustering radius is right; walk a ladder
        // of radii and accept the first candidate set whose classification
        // is certified by division remainders and the degree count
        let mut outcome = Err(Error::Internal("no clustering rung attempted"));
        for pre_tol in [2e-4, 2e-3, 2e-2, 8e-2] {
            let candidates = rpoly::roots_float(&fs_real, cfg.cluster_tol, pre_tol);
            outcome = classify(f, &fs, candidates, cfg);
            if outcome.is_ok() {
                break;
            }
        }
        outcome?
    };
    records.sort_by(|a, b| {
        a.sort_key()
            .partial_cmp(&b.sort_key())
            .unwrap_or(std::cmp::Ordering::Equal)
    });
    Ok(records)
}

/// Division-certified classification of candidate f^s roots. Every
/// multiplicity is re-derived from remainders of divisions of f itself; the
/// candidate multiplicities and the total f^s degree must agree exactly, so
/// a wrong clustering cannot produce a quietly wrong answer.
fn classify<S: Scalar>(
    f: &QPoly<S>,
    fs: &QPoly<S>,
    candidates: Vec<FsRoot<S>>,
    cfg: &ZeroConfig,
) -> Result<Vec<ZeroRecord<S>>> {
    let scale = f.max_coeff_norm().max(1.0);
    let zero_poly = |p: &QPoly<S>| -> bool {
        if S::EXACT {
            p.is_zero()
        } else {
            p.max_coeff_norm() <= cfg.value_tol * scale
        }
    };
    let zero_val = |v: &Quaternion<S>| -> bool {
        if S::EXACT {
            v.is_zero()
        } else {
            v.norm_one().to_f64() <= cfg.value_tol * scale
        }
    };
    let mut records = Vec::new();
    let mut total_fs_degree = 0i64;
    for root in candidates {
        match root {
            FsRoot::Real { x, mult } => {
                // a real zero of f of order m contributes 2m to f^s;
                // certify m by dividing f by (q - x) until the value at x
                // stops vanishing
                let point = Quaternion::from_real(x.clone());
                let mut g = f.clone();
                let mut m = 0u32;
                loop {
                    let (quot, rem) = g.left_divide_linear(&point)?;
                    if zero_val(&rem) && !quot.is_zero() {
                        g = quot;
                        m += 1;
                    } else {
                        break;
                    }
                }
                if m == 0 || 2 * m as u64 != mult as u64 {
                    return Err(Error::Internal("real multiplicity disagrees with f^s"));
                }
                total_fs_degree += 2 * m as i64;
                records.push(ZeroRecord::RealPoint {
                    location: x,
                    multiplicity: m,
                });
            }
            FsRoot::Pair { x, y_sq, mult } => {
                let sphere = Sphere::from_radius_sq(x, y_sq);
                let s = QPoly::from_real_terms(0, sphere.minimal_quadratic().to_vec());
                // peel off the spherical part f = s^m * g, s not dividing g
                let mut g = f.clone();
                let mut m_spherical = 0u32;
                loop {
                    let (quot, rem) = g.divide_by_real(&s)?;
                    if zero_poly(&rem) && !quot.is_zero() {
                        g = quot;
                        m_spherical += 1;
                    } else {
                        break;
                    }
                }
                let residual = mult as i64 - 2 * m_spherical as i64;
                if residual > 0 {
                    // the remainder r0 + q r1 locates the isolated zero
                    let (_, rem) = g.divide_by_real(&s)?;
                    let r1 = rem.coeff(1);
                    if zero_val(&r1) {
                        return Err(Error::Internal("missing isolated zero on sphere"));
                    }
                    let r1_inv = r1.inverse().ok_or(Error::Internal("zero r1"))?;
                    let q0 = -(&rem.coeff(0) * &r1_inv);
                    let on_sphere = if S::EXACT {
                        sphere.contains(&q0)
                    } else {
                        sphere.contains_approx(&q0, cfg.value_tol * scale)
                    };
                    if !on_sphere {
                        return Err(Error::Internal("computed zero off its sphere"));
                    }
                    // certify the carried multiplicity by the division chain
                    let mut h = g.clone();
                    let mut count = 0i64;
                    let mut cur = q0.clone();
                    loop {
                        let (quot, val) = h.left_divide_linear(&cur)?;
                        if !zero_val(&val) {
                            break;
                        }
                        h = quot;
                        count += 1;
                        let (_, rem2) = h.divide_by_real(&s)?;
                        let r1b = rem2.coeff(1);
                        if zero_val(&r1b) {
                            break;
                        }
                        let cand = -(&rem2.coeff(0) * &r1b.inverse().unwrap());
                        let cand_on_sphere = if S::EXACT {
                            sphere.contains(&cand)
                        } else {
                            sphere.contains_approx(&cand, cfg.value_tol * scale)
                        };
                        if !cand_on_sphere {
                            break;
                        }
                        cur = cand;
                    }
                    if count != residual {
                        return Err(Error::Internal("division chain disagrees with f^s"));
                    }
                    records.push(ZeroRecord::IsolatedPoint {
                        location: q0,
                        multiplicity: residual as u32,
                    });
                } else if residual < 0 {
                    return Err(Error::Internal("spherical part exceeds f^s multiplicity"));
                }
                if m_spherical > 0 {
                    records.push(ZeroRecord::SphericalZero {
                        sphere,
                        multiplicity: 2 * m_spherical,
                    });
                }
                total_fs_degree += 2 * mult as i64;
            }
        }
    }
    // completeness: the certified multiplicities exhaust deg f^s
    if total_fs_degree != fs.max_degree() {
        return Err(Error::Internal("classified multiplicities miss f^s roots"));
    }
    Ok(records)
}

/// A polynomial with exactly the prescribed zeros.
///
/// Real points and spheres contribute central real factors. Successive
/// nonreal nodes z are planted by the conjugation trick: with the partial
/// product p, the factor (q - p(z)^{-1} z p(z))^{*order} makes the product
/// vanish at z; right factors never disturb zeros already placed.
pub fn build_with_zeros<S: Scalar>(spec: &Divisor<S>) -> Result<QPoly<S>> {
    if !spec.all_positive() {
        return Err(Error::InvalidOrder);
    }
    let entries = spec.sorted_entries();
    let mut p = QPoly::one();
    for e in &entries {
        if let Node::Point(z) = &e.node {
            let val = p.evaluate(z)?;
            let w = match z.conjugate_by(&val) {
                Some(w) => w,
                None => return Err(Error::Internal("partial product vanishes at a new node")),
            };
            p = p.star_mul(&QPoly::linear(&w).pow_star(e.order as u32));
        }
    }
    for e in &entries {
        match &e.node {
            Node::Real(x) => {
                let lin = QPoly::linear(&Quaternion::from_real(x.clone()));
                p = p.star_mul(&lin.pow_star(e.order as u32));
            }
            Node::Sphere(s) => {
                let quad = QPoly::from_real_terms(0, s.minimal_quadratic().to_vec());
                p = p.star_mul(&quad.pow_star((e.order / 2) as u32));
            }
            Node::Point(_) => {}
        }
    }
    Ok(p)
}

/// A semiregular function realizing a zero/pole prescription.
///
/// Positive entries become numerator zeros; negative real points and
/// spheres become denominator factors. A nonreal point pole of order n is
/// the factor (q - z)^{-*n} = (q - conj z)^{*n} / s^n: the denominator
/// acquires the sphere's quadratic and the numerator a compensating
/// conjugate zero.
pub fn divisor_build<S: Scalar>(spec: &Divisor<S>) -> Result<SemiRegularFn<S>> {
    let positive = spec.positive_part();
    let mut num = build_with_zeros(&positive)?;
    let mut den = QPoly::one();
    for e in spec.entries() {
        if e.order >= 0 {
            continue;
        }
        let n = (-e.order) as u32;
        match &e.node {
            Node::Real(x) => {
                let lin = QPoly::linear(&Quaternion::from_real(x.clone()));
                den = den.star_mul(&lin.pow_star(n));
            }
            Node::Sphere(s) => {
                let quad = QPoly::from_real_terms(0, s.minimal_quadratic().to_vec());
                den = den.star_mul(&quad.pow_star(n / 2));
            }
            Node::Point(z) => {
                // right-multiply by (q - z)^{-*n} = (q - conj z)^{*n} / s^n
                num = num.star_mul(&QPoly::linear(&z.conj()).pow_star(n));
                let quad = QPoly::from_real_terms(0, z.symmetrize().minimal_quadratic().to_vec());
                den = den.star_mul(&quad.pow_star(n));
            }
        }
    }
    SemiRegularFn::new(num, den)
}

/// Quotient N * D^{-1} of a slice-regular numerator by a nonzero
/// slice-preserving denominator; the carrier for inverses and divisors.
///
/// Canonical form: monic denominator and, in the exact backend, no real
/// polynomial factor common to the denominator and all four components of
/// the numerator.
#[derive(Clone, PartialEq)]
pub struct SemiRegularFn<S> {
    numerator: QPoly<S>,
    denominator: QPoly<S>,
}

impl<S: Scalar> std::fmt::Debug for SemiRegularFn<S> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({:?}) / ({:?})", self.numerator, self.denominator)
    }
}

impl<S: Scalar> SemiRegularFn<S> {
    pub fn new(numerator: QPoly<S>, denominator: QPoly<S>) -> Result<Self> {
        if denominator.is_zero() {
            return Err(Error::ZeroFunction);
        }
        if !denominator.is_slice_preserving() {
            return Err(Error::NotInClass);
        }
        let mut f = SemiRegularFn {
            numerator,
            denominator,
        };
        f.canonicalize();
        Ok(f)
    }

    pub fn from_poly(p: QPoly<S>) -> Self {
        SemiRegularFn {
            numerator: p,
            denominator: QPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_poly(QPoly::one())
    }

    pub fn numerator(&self) -> &QPoly<S> {
        &self.numerator
    }

    pub fn denominator(&self) -> &QPoly<S> {
        &self.denominator
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    /// True when the denominator reduced to 1.
    pub fn is_polynomial(&self) -> bool {
        self.denominator == QPoly::one()
    }

    fn canonicalize(&mut self) {
        if self.numerator.is_zero() {
            self.denominator = QPoly::one();
            return;
        }
        if S::EXACT {
            // dense-from-0 when the numerator is a polynomial (so common
            // q-powers cancel through the gcd); a Laurent numerator only
            // contributes its polynomial part
            let num_shift = self.numerator.min_degree().min(0);
            let num0 = self.numerator.shift(-num_shift);
            let den_vec: Vec<S> = (0..=self.denominator.max_degree())
                .map(|n| self.denominator.coeff(n).re())
                .collect();
            let mut g = den_vec.clone();
            for part in num0.component_decompose() {
                if part.is_zero() {
                    continue;
                }
                let pv: Vec<S> = (0..=part.max_degree())
                    .map(|n| part.coeff(n).re())
                    .collect();
                g = rpoly::gcd_monic(&g, &pv);
                if rpoly::deg(&g) == Some(0) {
                    break;
                }
            }
            if rpoly::deg(&g).is_some_and(|d| d > 0) {
                let gp = QPoly::from_real_terms(0, g);
                self.numerator = num0
                    .divide_exact_by_real(&gp)
                    .expect("gcd divides numerator")
                    .shift(num_shift);
                self.denominator = self
                    .denominator
                    .divide_exact_by_real(&gp)
                    .expect("gcd divides denominator");
            }
        }
        // monic denominator
        let lead = self.denominator.coeff(self.denominator.max_degree()).re();
        if lead != S::one() {
            let inv = lead.recip();
            self.numerator = self.numerator.scale_real(&inv);
            self.denominator = self.denominator.scale_real(&inv);
        }
    }

    /// Pointwise value D(q)^{-1} * N(q); the slice-preserving factor's value
    /// multiplies on the left.
    pub fn evaluate(&self, q: &Quaternion<S>) -> Result<Quaternion<S>> {
        let dval = self.denominator.evaluate(q)?;
        let dinv = dval.inverse().ok_or(Error::AtPole)?;
        let nval = self.numerator.evaluate(q)?;
        Ok(&dinv * &nval)
    }

    /// Closure of semiregular functions under the *-product: numerators
    /// star-multiply, real denominators commute and multiply.
    pub fn star_mul(&self, other: &Self) -> Result<Self> {
        SemiRegularFn::new(
            self.numerator.star_mul(&other.numerator),
            self.denominator.star_mul(&other.denominator),
        )
    }

    /// (N * D^{-1})^{-*} = D * N^c / N^s.
    pub fn star_inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroFunction);
        }
        SemiRegularFn::new(
            self.numerator
                .regular_conjugate()
                .star_mul(&self.denominator),
            self.numerator.symmetrization(),
        )
    }
}

/// Free-function alias for [`SemiRegularFn::star_mul`].
pub fn semi_mul<S: Scalar>(f: &SemiRegularFn<S>, g: &SemiRegularFn<S>) -> Result<SemiRegularFn<S>> {
    f.star_mul(g)
}
