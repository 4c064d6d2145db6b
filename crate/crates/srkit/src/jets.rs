//! Taylor and spherical expansions, jets, and jet interpolation.
//!
//! Taylor coefficients at q0 come from iterated exact left division:
//! f = A_0 + (q - q0) * (A_1 + (q - q0) * (...)). Spherical coefficients at
//! an anchor q0 on S(x0, y0) come from the alternating division
//! f = A_0 + (q - q0) * (A_1 + (q - conj q0) * (...)), which realizes the
//! expansion f = sum_n s^n (A_{2n} + (q - q0) A_{2n+1}) with
//! s = (q - x0)^2 + y0^2.
//!
//! Both extraction maps send sum q^n c_n to sum kappa_n * c_n with fixed
//! quaternions kappa_n = (extraction of q^n), so interpolation is a linear
//! system over the division ring H, solved exactly by Gaussian elimination
//! at the smallest consistent degree.

use crate::error::{Error, Result};
use crate::quat::{Quaternion, Sphere};
use crate::scalar::Scalar;
use crate::starpoly::QPoly;
use crate::zeros::Node;

/// A Taylor jet: f = sum (q - center)^{*n} coeffs[n] + higher order.
#[derive(Clone, PartialEq)]
pub struct TaylorJet<S> {
    pub center: Quaternion<S>,
    pub coeffs: Vec<Quaternion<S>>,
}

impl<S: Scalar> std::fmt::Debug for TaylorJet<S> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "TaylorJet@{:?} {:?}", self.center, self.coeffs)
    }
}

impl<S: Scalar> TaylorJet<S> {
    /// The polynomial sum (q - center)^{*n} coeffs[n].
    pub fn reconstruct(&self) -> QPoly<S> {
        let lin = QPoly::linear(&self.center);
        let mut acc = QPoly::zero();
        for a in self.coeffs.iter().rev() {
            acc = lin.star_mul(&acc) + QPoly::constant(a.clone());
        }
        acc
    }
}

/// A spherical jet A_0, ..., A_{2l+1} at an anchor on a sphere; odd
/// coefficients vanish when the anchor is absent.
#[derive(Clone, PartialEq)]
pub struct SphericalJet<S> {
    pub sphere: Sphere<S>,
    pub anchor: Option<Quaternion<S>>,
    pub coeffs: Vec<Quaternion<S>>,
}

impl<S: Scalar> std::fmt::Debug for SphericalJet<S> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "SphericalJet@{:?} (anchor {:?}) {:?}",
            self.sphere, self.anchor, self.coeffs
        )
    }
}

impl<S: Scalar> SphericalJet<S> {
    /// sum_n s^n (A_{2n} + (q - q0) A_{2n+1}).
    pub fn reconstruct(&self) -> Result<QPoly<S>> {
        let s = QPoly::from_real_terms(0, self.sphere.minimal_quadratic().to_vec());
        let lin = match &self.anchor {
            Some(q0) => QPoly::linear(q0),
            None => {
                // without an anchor all odd coefficients are zero and the
                // linear factor never contributes
                QPoly::zero()
            }
        };
        let mut acc = QPoly::zero();
        let mut power = QPoly::one();
        for pair in self.coeffs.chunks(2) {
            let mut block = QPoly::constant(pair[0].clone());
            if pair.len() > 1 && !pair[1].is_zero() {
                block = &block + &lin.scale_right(&pair[1]);
            }
            acc = &acc + &power.star_mul(&block);
            power = power.star_mul(&s);
        }
        Ok(acc)
    }

    /// The spherical multiplicity 2m read from the first nonvanishing
    /// coefficient A_{2m} or A_{2m+1}; `None` when the whole jet vanishes.
    pub fn spherical_multiplicity(&self) -> Option<u32> {
        self.coeffs
            .iter()
            .position(|c| !c.is_zero())
            .map(|idx| (idx as u32 / 2) * 2)
    }
}

/// The Taylor jet of order `order` at q0: coefficients by iterated exact
/// *-division by (q - q0).
pub fn taylor_jet<S: Scalar>(f: &QPoly<S>, q0: &Quaternion<S>, order: u32) -> Result<TaylorJet<S>> {
    if f.min_degree() < 0 {
        return Err(Error::NotPolynomial);
    }
    let mut coeffs = Vec::with_capacity(order as usize + 1);
    let mut g = f.clone();
    for _ in 0..=order {
        let a = g.evaluate(q0)?;
        let (quot, rem) = (&g - &QPoly::constant(a.clone())).left_divide_linear(q0)?;
        debug_assert!(rem.is_zero());
        coeffs.push(a);
        g = quot;
    }
    Ok(TaylorJet {
        center: q0.clone(),
        coeffs,
    })
}

/// The spherical jet of order 2*order+1 at the anchor q0 on `sphere`,
/// by alternating exact division by (q - q0) and (q - conj q0).
pub fn spherical_expand<S: Scalar>(
    f: &QPoly<S>,
    sphere: &Sphere<S>,
    q0: &Quaternion<S>,
    order: u32,
) -> Result<SphericalJet<S>> {
    if sphere.is_point() {
        return Err(Error::DegenerateSphere);
    }
    let on_sphere = if S::EXACT {
        sphere.contains(q0)
    } else {
        sphere.contains_approx(q0, 1e-9 * (1.0 + q0.abs_f64()))
    };
    if !on_sphere {
        return Err(Error::AnchorOffSphere);
    }
    if f.min_degree() < 0 {
        return Err(Error::NotPolynomial);
    }
    let conj = q0.conj();
    let mut coeffs = Vec::with_capacity(2 * (order as usize + 1));
    let mut g = f.clone();
    for _ in 0..=order {
        let a_even = g.evaluate(q0)?;
        let (quot, _) = (&g - &QPoly::constant(a_even.clone())).left_divide_linear(q0)?;
        g = quot;
        let a_odd = g.evaluate(&conj)?;
        let (quot, _) = (&g - &QPoly::constant(a_odd.clone())).left_divide_linear(&conj)?;
        g = quot;
        coeffs.push(a_even);
        coeffs.push(a_odd);
    }
    Ok(SphericalJet {
        sphere: sphere.clone(),
        anchor: Some(q0.clone()),
        coeffs,
    })
}

/// A jet prescription attached to a node.
#[derive(Clone, PartialEq)]
pub enum JetData<S> {
    /// Taylor coefficients A_0..A_l at a (real or nonreal) point.
    Taylor(Vec<Quaternion<S>>),
    /// Spherical coefficients A_0..A_{2l+1}; odd entries must vanish when
    /// the anchor is absent.
    Spherical {
        anchor: Option<Quaternion<S>>,
        coeffs: Vec<Quaternion<S>>,
    },
}

impl<S: Scalar> std::fmt::Debug for JetData<S> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            JetData::Taylor(c) => write!(f, "Taylor{c:?}"),
            JetData::Spherical { anchor, coeffs } => {
                write!(f, "Spherical(anchor {anchor:?}){coeffs:?}")
            }
        }
    }
}

#[derive(Clone, PartialEq)]
pub struct JetSpecEntry<S> {
    pub node: Node<S>,
    pub jet: JetData<S>,
}

impl<S: Scalar> std::fmt::Debug for JetSpecEntry<S> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({:?}, {:?})", self.node, self.jet)
    }
}

/// A finite validated jet interpolation prescription: pairwise distinct
/// nodes on pairwise distinct spheres.
#[derive(Clone, PartialEq)]
pub struct JetSpec<S> {
    entries: Vec<JetSpecEntry<S>>,
}

impl<S: Scalar> std::fmt::Debug for JetSpec<S> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_list().entries(&self.entries).finish()
    }
}

impl<S: Scalar> JetSpec<S> {
    pub fn new(entries: Vec<JetSpecEntry<S>>) -> Result<Self> {
        for e in &entries {
            match (&e.node, &e.jet) {
                (Node::Real(_) | Node::Point(_), JetData::Taylor(coeffs)) => {
                    if coeffs.is_empty() {
                        return Err(Error::InvalidOrder);
                    }
                    if let Node::Point(q) = &e.node {
                        if q.is_real() {
                            return Err(Error::RealArgument);
                        }
                    }
                }
                (Node::Sphere(s), JetData::Spherical { anchor, coeffs }) => {
                    if s.is_point() {
                        return Err(Error::DegenerateSphere);
                    }
                    if coeffs.is_empty() || coeffs.len() % 2 != 0 {
                        return Err(Error::InvalidOrder);
                    }
                    match anchor {
                        Some(q0) => {
                            let ok = if S::EXACT {
                                s.contains(q0)
                            } else {
                                s.contains_approx(q0, 1e-9 * (1.0 + q0.abs_f64()))
                            };
                            if !ok {
                                return Err(Error::AnchorOffSphere);
                            }
                        }
                        None => {
                            if coeffs.iter().skip(1).step_by(2).any(|c| !c.is_zero()) {
                                return Err(Error::InvalidOrder);
                            }
                        }
                    }
                }
                _ => return Err(Error::InvalidOrder),
            }
        }
        // prescriptions live on pairwise distinct spheres
        for (i, a) in entries.iter().enumerate() {
            for b in entries.iter().skip(i + 1) {
                if a.node.sphere() == b.node.sphere() {
                    return Err(Error::ConflictingNodes);
                }
            }
        }
        Ok(JetSpec { entries })
    }

    pub fn entries(&self) -> &[JetSpecEntry<S>] {
        &self.entries
    }

    fn anchor_for(&self, entry: &JetSpecEntry<S>) -> Result<Option<Quaternion<S>>> {
        match (&entry.node, &entry.jet) {
            (Node::Sphere(s), JetData::Spherical { anchor, .. }) => match anchor {
                Some(q0) => Ok(Some(q0.clone())),
                None => {
                    let r = s.radius().ok_or(Error::IrrationalNorm)?;
                    Ok(Some(
                        Quaternion::from_real(s.center()) + Quaternion::i().scale(&r),
                    ))
                }
            },
            _ => Ok(None),
        }
    }

    /// Extracts this entry's jet coefficients from `f`.
    fn extract(&self, entry: &JetSpecEntry<S>, f: &QPoly<S>) -> Result<Vec<Quaternion<S>>> {
        match (&entry.node, &entry.jet) {
            (Node::Real(x), JetData::Taylor(coeffs)) => Ok(taylor_jet(
                f,
                &Quaternion::from_real(x.clone()),
                coeffs.len() as u32 - 1,
            )?
            .coeffs),
            (Node::Point(q0), JetData::Taylor(coeffs)) => {
                Ok(taylor_jet(f, q0, coeffs.len() as u32 - 1)?.coeffs)
            }
            (Node::Sphere(s), JetData::Spherical { coeffs, .. }) => {
                let anchor = self.anchor_for(entry)?.expect("sphere entry has anchor");
                Ok(spherical_expand(f, s, &anchor, coeffs.len() as u32 / 2 - 1)?.coeffs)
            }
            _ => Err(Error::Internal("mismatched jet entry")),
        }
    }

    fn prescribed<'a>(&self, entry: &'a JetSpecEntry<S>) -> &'a [Quaternion<S>] {
        match &entry.jet {
            JetData::Taylor(c) => c,
            JetData::Spherical { coeffs, .. } => coeffs,
        }
    }
}

/// Left-coefficient Gaussian elimination over the division ring H.
/// Returns `None` when the system is inconsistent; free unknowns are 0.
#[allow(clippy::needless_range_loop)]
fn solve_quaternion_system<S: Scalar>(
    mut a: Vec<Vec<Quaternion<S>>>,
    mut b: Vec<Quaternion<S>>,
) -> Option<Vec<Quaternion<S>>> {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let tol = if S::EXACT {
        0.0
    } else {
        let scale = a
            .iter()
            .flatten()
            .map(|q| q.norm_one().to_f64())
            .fold(1.0, f64::max);
        1e-10 * scale
    };
    let nonzero = |q: &Quaternion<S>| -> bool {
        if S::EXACT {
            !q.is_zero()
        } else {
            q.norm_one().to_f64() > tol
        }
    };
    let mut pivot_of_col = vec![usize::MAX; cols];
    let mut rank = 0;
    for col in 0..cols {
        let pivot = (rank..rows).find(|&r| nonzero(&a[r][col]));
        let Some(pr) = pivot else { continue };
        a.swap(rank, pr);
        b.swap(rank, pr);
        let inv = a[rank][col].inverse()?;
        for c in col..cols {
            a[rank][c] = &inv * &a[rank][c];
        }
        b[rank] = &inv * &b[rank];
        for r in 0..rows {
            if r != rank && nonzero(&a[r][col]) {
                let factor = a[r][col].clone();
                for c in col..cols {
                    a[r][c] = &a[r][c] - &(&factor * &a[rank][c]);
                }
                b[r] = &b[r] - &(&factor * &b[rank]);
            }
        }
        pivot_of_col[col] = rank;
        rank += 1;
        if rank == rows {
            break;
        }
    }
    // consistency: zero rows must have zero rhs
    for r in rank..rows {
        let consistent = if S::EXACT {
            b[r].is_zero()
        } else {
            b[r].norm_one().to_f64() <= (tol * 100.0).max(1e-8)
        };
        if !consistent {
            return None;
        }
    }
    let mut x = vec![Quaternion::zero(); cols];
    for (col, &pr) in pivot_of_col.iter().enumerate() {
        if pr != usize::MAX {
            x[col] = b[pr].clone();
        }
    }
    Some(x)
}

/// A polynomial of minimal found degree reproducing every prescribed jet.
///
/// Unknown coefficients enter each extracted jet coefficient left-linearly,
/// so the problem is one quaternionic linear system per candidate degree;
/// the degree grows until the system is consistent.
pub fn jet_interpolate<S: Scalar>(spec: &JetSpec<S>) -> Result<QPoly<S>> {
    let total: usize = spec.entries.iter().map(|e| spec.prescribed(e).len()).sum();
    if total == 0 {
        return Ok(QPoly::zero());
    }
    let cap = total as i64 + 4;
    let rhs: Vec<Quaternion<S>> = spec
        .entries
        .iter()
        .flat_map(|e| spec.prescribed(e).iter().cloned())
        .collect();
    // kappa columns (extraction applied to the monomials q^n) grow with the
    // candidate degree; each solve reuses all previous columns
    let mut rows: Vec<Vec<Quaternion<S>>> = vec![Vec::new(); total];
    for d in 0..=cap {
        let monomial = QPoly::monomial(d, Quaternion::one());
        let mut row_idx = 0;
        for e in &spec.entries {
            for kappa in spec.extract(e, &monomial)? {
                rows[row_idx].push(kappa);
                row_idx += 1;
            }
        }
        if let Some(sol) = solve_quaternion_system(rows.clone(), rhs.clone()) {
            let f = QPoly::from_terms(0, sol);
            return Ok(f);
        }
    }
    Err(Error::Internal("jet interpolation exceeded degree cap"))
}

/// The single-node local polynomial with the prescribed jet (the building
/// block P of the gluing proof): the plain jet reconstruction.
pub fn hermite_local<S: Scalar>(node: &Node<S>, jet: &JetData<S>) -> Result<QPoly<S>> {
    let spec = JetSpec::new(vec![JetSpecEntry {
        node: node.clone(),
        jet: jet.clone(),
    }])?;
    let entry = &spec.entries()[0];
    match (&entry.node, &entry.jet) {
        (Node::Real(x), JetData::Taylor(coeffs)) => Ok(TaylorJet {
            center: Quaternion::from_real(x.clone()),
            coeffs: coeffs.clone(),
        }
        .reconstruct()),
        (Node::Point(q0), JetData::Taylor(coeffs)) => Ok(TaylorJet {
            center: q0.clone(),
            coeffs: coeffs.clone(),
        }
        .reconstruct()),
        (Node::Sphere(s), JetData::Spherical { coeffs, .. }) => SphericalJet {
            sphere: s.clone(),
            anchor: spec.anchor_for(entry)?,
            coeffs: coeffs.clone(),
        }
        .reconstruct(),
        _ => Err(Error::Internal("mismatched jet entry")),
    }
}
