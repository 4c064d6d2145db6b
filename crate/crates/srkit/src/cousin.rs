//! Additive and multiplicative Cartan splitting on concentric annuli, and
//! finite chain gluing.
//!
//! The Cartan pair is specialized to the one geometry where splitting has an
//! exact finite form: A is the outer region |q| >= r_inner (negative powers
//! live there), B the closed ball |q| <= r_outer (nonnegative powers), and
//! C = A ∩ B the closed annulus. Additive splitting is then the Laurent
//! coefficient partition, and the estimate constant D of the splitting lemma
//! is *measured* on boundary samples rather than asserted.
//!
//! Multiplicative splitting for slice-preserving inputs goes through the
//! log route; the general (noncommutative) case runs the alternating
//! absorb-and-shrink iteration of the matrix splitting theorem, gated by a
//! closeness-to-1 requirement in place of the Runge approximation pre-step.

use crate::error::{Error, Result};
use crate::matrep::star_exp_series;
use crate::quat::Quaternion;
use crate::sampling::circle_samples;
use crate::scalar::Scalar;
use crate::starpoly::QPoly;

/// The annular Cartan pair: A = {|q| >= r_inner}, B = {|q| <= r_outer},
/// C = A ∩ B.
#[derive(Clone, Debug, PartialEq)]
pub struct AnnularPair {
    r_inner: f64,
    r_outer: f64,
}

impl Default for AnnularPair {
    fn default() -> Self {
        AnnularPair {
            r_inner: 0.5,
            r_outer: 2.0,
        }
    }
}

impl AnnularPair {
    pub fn new(r_inner: f64, r_outer: f64) -> Result<Self> {
        if !(r_inner.is_finite() && r_outer.is_finite()) || r_inner <= 0.0 || r_inner >= r_outer {
            return Err(Error::Internal("invalid annulus radii"));
        }
        Ok(AnnularPair { r_inner, r_outer })
    }

    pub fn r_inner(&self) -> f64 {
        self.r_inner
    }

    pub fn r_outer(&self) -> f64 {
        self.r_outer
    }

    /// 200 samples on the two boundary spheres of C.
    pub fn boundary_samples(&self) -> Vec<Quaternion<f64>> {
        circle_samples(&[self.r_inner, self.r_outer], 25)
    }

    /// Samples on the outer boundary of A's relevant region (|q| = r_inner),
    /// where negative powers peak.
    pub fn a_side_samples(&self) -> Vec<Quaternion<f64>> {
        circle_samples(&[self.r_inner], 50)
    }

    fn radii(&self) -> [f64; 2] {
        [self.r_inner, self.r_outer]
    }
}

/// Outcome of an additive split.
#[derive(Clone, PartialEq)]
pub struct SplitResult<S> {
    /// Negative-power part, regular on A.
    pub alpha: QPoly<S>,
    /// Nonnegative-power part, regular on B.
    pub beta: QPoly<S>,
    /// Measured splitting constant: sup |alpha| over boundary samples
    /// divided by sup |gamma| over the same samples.
    pub d_constant: f64,
}

impl<S: Scalar> std::fmt::Debug for SplitResult<S> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "alpha = {:?}, beta = {:?}, D = {}",
            self.alpha, self.beta, self.d_constant
        )
    }
}

/// Splits gamma into its negative-power part (regular on A) and its
/// nonnegative-power part (regular on B). Exact partition: alpha + beta
/// equals gamma coefficient by coefficient, and both closure properties of
/// the splitting lemma (slice-preserving parts, vectorial-class parts) are
/// inherited coefficientwise.
pub fn additive_split<S: Scalar>(gamma: &QPoly<S>, pair: &AnnularPair) -> SplitResult<S> {
    let mut alpha_terms = Vec::new();
    let mut beta_terms = Vec::new();
    for (n, c) in gamma.terms() {
        if n < 0 {
            alpha_terms.push((n, c.clone()));
        } else {
            beta_terms.push((n, c.clone()));
        }
    }
    let build = |terms: Vec<(i64, Quaternion<S>)>| -> QPoly<S> {
        let mut acc = QPoly::zero();
        for (n, c) in terms {
            acc = &acc + &QPoly::monomial(n, c);
        }
        acc
    };
    let alpha = build(alpha_terms);
    let beta = build(beta_terms);
    let samples = pair.boundary_samples();
    let gf = gamma.to_f64_poly();
    let af = alpha.to_f64_poly();
    let sup_gamma = samples
        .iter()
        .map(|q| gf.evaluate(q).map(|v| v.abs_f64()).unwrap_or(f64::INFINITY))
        .fold(0.0, f64::max);
    let sup_alpha = samples
        .iter()
        .map(|q| af.evaluate(q).map(|v| v.abs_f64()).unwrap_or(f64::INFINITY))
        .fold(0.0, f64::max);
    let d_constant = if sup_gamma == 0.0 {
        0.0
    } else {
        sup_alpha / sup_gamma
    };
    SplitResult {
        alpha,
        beta,
        d_constant,
    }
}

fn require_float<S: Scalar>() -> Result<()> {
    if S::EXACT {
        Err(Error::UnsupportedBackend)
    } else {
        Ok(())
    }
}

/// Max |f - 1| over the C boundary samples.
fn deviation_on_c<S: Scalar>(f: &QPoly<S>, pair: &AnnularPair) -> f64 {
    let g = (f - &QPoly::one()).to_f64_poly();
    pair.boundary_samples()
        .iter()
        .map(|q| g.evaluate(q).map(|v| v.abs_f64()).unwrap_or(f64::INFINITY))
        .fold(0.0, f64::max)
}

/// Truncated log series -sum (1-c)^{*n}/n with the annulus-weighted norm
/// driving the adaptive cutoff.
fn log_series_on_annulus<S: Scalar>(c: &QPoly<S>, pair: &AnnularPair) -> Result<QPoly<S>> {
    let g = &QPoly::one() - c;
    let radii = pair.radii();
    if g.weighted_norm(&radii) >= 1.0 {
        return Err(Error::OutsideConvergence);
    }
    let mut sum = QPoly::zero();
    let mut power = QPoly::one();
    for n in 1..=2048usize {
        power = power.star_mul(&g);
        sum = &sum - &power.scale_real(&S::from_int(n as i64).recip());
        if power.weighted_norm(&radii) / (n as f64) < 1e-16 {
            break;
        }
    }
    Ok(sum)
}

/// Multiplicative splitting for slice-preserving c: c = a * b on C with a
/// slice-preserving nonvanishing on A and b on B, via
/// exp(additive split of log c). Checks |a - 1|_A <= eps on samples.
pub fn multiplicative_split_sp<S: Scalar>(
    c: &QPoly<S>,
    pair: &AnnularPair,
    eps: f64,
) -> Result<(QPoly<S>, QPoly<S>)> {
    require_float::<S>()?;
    if !c.is_slice_preserving() {
        return Err(Error::NotInClass);
    }
    let samples = pair.boundary_samples();
    let cf = c.to_f64_poly();
    let min_abs = samples
        .iter()
        .map(|q| cf.evaluate(q).map(|v| v.abs_f64()).unwrap_or(0.0))
        .fold(f64::INFINITY, f64::min);
    if min_abs < 1e-12 {
        return Err(Error::VanishingOnC);
    }
    if deviation_on_c(c, pair) >= 1.0 {
        return Err(Error::OutsideConvergence);
    }
    let gamma = log_series_on_annulus(c, pair)?;
    let split = additive_split(&gamma, pair);
    let (a, _) = star_exp_series(&split.alpha, 64);
    let (b, _) = star_exp_series(&split.beta, 64);
    let sup_a_dev = {
        let af = (&a - &QPoly::one()).to_f64_poly();
        pair.a_side_samples()
            .iter()
            .map(|q| af.evaluate(q).map(|v| v.abs_f64()).unwrap_or(f64::INFINITY))
            .fold(0.0, f64::max)
    };
    if sup_a_dev > eps {
        return Err(Error::OutsideConvergence);
    }
    Ok((a, b))
}

/// Which side of the product carries the outer (negative-power) factors.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum FactorOrder {
    /// c = a * b with a on A (outer) and b on B (inner).
    AFirst,
    /// c = b * a with the roles of the sets interchanged.
    BFirst,
}

/// Truncated Neumann inverse of 1 + d for small d.
fn neumann_inverse<S: Scalar>(one_plus: &QPoly<S>, radii: &[f64]) -> Result<QPoly<S>> {
    let d = one_plus - &QPoly::one();
    if d.weighted_norm(radii) >= 0.95 {
        return Err(Error::OutsideConvergence);
    }
    let mut sum = QPoly::one();
    let mut power = QPoly::one();
    for _ in 1..=512usize {
        power = power.star_mul(&d).trim_below(1e-18);
        if power.is_zero() {
            break;
        }
        sum = &sum - &power;
        power = -power;
        if power.weighted_norm(radii) < 1e-16 {
            break;
        }
    }
    Ok(sum)
}

/// The alternating absorb-and-shrink iteration behind the general
/// multiplicative splitting: peel the deviation, absorb (1 + alpha_n) into
/// the `left_outer` side and (1 + beta_n) into the other, and iterate on
/// the conjugated residual until it is below 1e-10.
fn iterate_split<S: Scalar>(
    c: &QPoly<S>,
    pair: &AnnularPair,
    outer_left: bool,
) -> Result<(QPoly<S>, QPoly<S>)> {
    let radii = pair.radii();
    let mut left = QPoly::one();
    let mut right = QPoly::one();
    let mut residual = c.clone();
    let mut prev_norm = f64::INFINITY;
    let mut stall = 0;
    for _ in 0..200 {
        let gamma = &residual - &QPoly::one();
        let norm = gamma.weighted_norm(&radii);
        if norm < 1e-10 {
            break;
        }
        if norm >= prev_norm {
            stall += 1;
            if stall >= 5 {
                return Err(Error::OutsideConvergence);
            }
        } else {
            stall = 0;
        }
        prev_norm = norm;
        let split = additive_split(&gamma, pair);
        let (outer_factor, inner_factor) =
            (&QPoly::one() + &split.alpha, &QPoly::one() + &split.beta);
        let (lf, rf) = if outer_left {
            (outer_factor, inner_factor)
        } else {
            (inner_factor, outer_factor)
        };
        left = left.star_mul(&lf).trim_below(1e-18);
        right = rf.star_mul(&right).trim_below(1e-18);
        let li = neumann_inverse(&lf, &radii)?;
        let ri = neumann_inverse(&rf, &radii)?;
        residual = li.star_mul(&residual).star_mul(&ri).trim_below(1e-18);
    }
    Ok((left, right))
}

/// General multiplicative splitting: for |c - 1|_C < rho, factors with
/// star_mul-reconstruction within 1e-8 on C samples and |a - 1|_A < eps.
///
/// With `FactorOrder::AFirst` the result is (a, b) with c = a * b; with
/// `BFirst`, c = b * a. In both, a is the outer factor (1 + negative
/// powers), so the eps bound is a statement about the input's
/// negative-power content.
pub fn multiplicative_split_general<S: Scalar>(
    c: &QPoly<S>,
    pair: &AnnularPair,
    eps: f64,
    rho: f64,
    order: FactorOrder,
) -> Result<(QPoly<S>, QPoly<S>)> {
    require_float::<S>()?;
    if deviation_on_c(c, pair) >= rho {
        return Err(Error::OutsideConvergence);
    }
    let (left, right) = iterate_split(c, pair, order == FactorOrder::AFirst)?;
    let (a, b) = match order {
        FactorOrder::AFirst => (left, right),
        FactorOrder::BFirst => (right, left),
    };
    let sup_a_dev = {
        let af = (&a - &QPoly::one()).to_f64_poly();
        pair.a_side_samples()
            .iter()
            .map(|q| af.evaluate(q).map(|v| v.abs_f64()).unwrap_or(f64::INFINITY))
            .fold(0.0, f64::max)
    };
    if sup_a_dev > eps {
        return Err(Error::OutsideConvergence);
    }
    Ok((a, b))
}

/// Additive or multiplicative mode for chain gluing.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum GlueMode {
    Additive,
    Multiplicative,
}

/// Given transitions v_{k,k+1} on the overlaps of a finite chain of
/// concentric annular regions (region 0 innermost), returns per-region
/// functions v_k with v_{k,k+1} = v_k - v_{k+1} (additive; exact) or
/// v_{k,k+1} = v_{k+1} * v_k^{-*} (multiplicative, within series
/// truncation). Region 0 keeps nonnegative powers only.
pub fn glue_chain<S: Scalar>(
    data: &[((usize, usize), QPoly<S>)],
    mode: GlueMode,
) -> Result<Vec<QPoly<S>>> {
    let n_regions = data.len() + 1;
    let mut transitions: Vec<Option<QPoly<S>>> = vec![None; data.len()];
    for ((k, l), f) in data {
        if *l != k + 1 || *k >= data.len() || transitions[*k].is_some() {
            return Err(Error::IncompatibleChain);
        }
        transitions[*k] = Some(f.clone());
    }
    let transitions: Vec<QPoly<S>> = transitions.into_iter().map(|t| t.unwrap()).collect();
    let pair = AnnularPair::default();
    let radii = pair.radii();
    let mut vs: Vec<QPoly<S>> = Vec::with_capacity(n_regions);
    match mode {
        GlueMode::Additive => {
            vs.push(QPoly::zero());
            for (k, t) in transitions.iter().enumerate() {
                // c = v_{k,k+1} - v_k splits; the inner part shifts every
                // settled region, the outer part defines the new one
                let c = t - &vs[k];
                let split = additive_split(&c, &pair);
                for v in vs.iter_mut() {
                    *v = &*v + &split.beta;
                }
                vs.push(-split.alpha);
            }
        }
        GlueMode::Multiplicative => {
            require_float::<S>()?;
            vs.push(QPoly::one());
            for (k, t) in transitions.iter().enumerate() {
                if deviation_on_c(t, &pair) >= 0.5 {
                    return Err(Error::IncompatibleChain);
                }
                // c = v_{k,k+1} * v_k splits as b * a with a inner
                let c = t.star_mul(&vs[k]).trim_below(1e-18);
                let (b, a) = iterate_split(&c, &pair, true)?;
                let a_inv = neumann_inverse(&a, &radii)?;
                for v in vs.iter_mut() {
                    *v = v.star_mul(&a_inv).trim_below(1e-16);
                }
                vs.push(b);
            }
        }
    }
    Ok(vs)
}
