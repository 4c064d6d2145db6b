//! Real-coefficient polynomial utilities backing zero-set computation.
//!
//! Dense representation: `p[k]` is the coefficient of q^k. The exact backend
//! gets Euclidean gcd, Yun square-free decomposition and verified rational
//! reconstruction of float root estimates; the float backend gets a
//! deterministic Durand-Kerner iteration with conjugate folding, clustering
//! and derivative-polished multiple roots.

use crate::scalar::{rationalize, Scalar};

pub(crate) fn trim<S: Scalar>(p: &mut Vec<S>) {
    while matches!(p.last(), Some(c) if c.is_zero()) {
        p.pop();
    }
}

pub(crate) fn deg<S: Scalar>(p: &[S]) -> Option<usize> {
    let mut d = p.len();
    while d > 0 && p[d - 1].is_zero() {
        d -= 1;
    }
    d.checked_sub(1)
}

pub(crate) fn eval<S: Scalar>(p: &[S], x: &S) -> S {
    let mut acc = S::zero();
    for c in p.iter().rev() {
        acc = acc * x.clone() + c.clone();
    }
    acc
}

pub(crate) fn derivative<S: Scalar>(p: &[S]) -> Vec<S> {
    if p.len() <= 1 {
        return Vec::new();
    }
    p.iter()
        .enumerate()
        .skip(1)
        .map(|(n, c)| c.clone() * S::from_int(n as i64))
        .collect()
}

#[cfg(test)]
pub(crate) fn mul<S: Scalar>(a: &[S], b: &[S]) -> Vec<S> {
    if deg(a).is_none() || deg(b).is_none() {
        return Vec::new();
    }
    let mut out = vec![S::zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            out[i + j] = out[i + j].clone() + ai.clone() * bj.clone();
        }
    }
    trim(&mut out);
    out
}

/// (quotient, remainder) with deg rem < deg b. Panics on zero divisor.
pub(crate) fn div_rem<S: Scalar>(a: &[S], b: &[S]) -> (Vec<S>, Vec<S>) {
    let db = deg(b).expect("division by zero polynomial");
    let mut rem: Vec<S> = a.to_vec();
    trim(&mut rem);
    let da = match deg(&rem) {
        None => return (Vec::new(), Vec::new()),
        Some(d) => d,
    };
    if da < db {
        return (Vec::new(), rem);
    }
    let lead_inv = b[db].recip();
    let mut quot = vec![S::zero(); da - db + 1];
    for n in (0..=(da - db)).rev() {
        let c = rem[n + db].clone() * lead_inv.clone();
        if !c.is_zero() {
            for (k, bk) in b.iter().enumerate().take(db + 1) {
                rem[n + k] = rem[n + k].clone() - c.clone() * bk.clone();
            }
        }
        quot[n] = c;
    }
    trim(&mut rem);
    trim(&mut quot);
    (quot, rem)
}

pub(crate) fn monic<S: Scalar>(p: &[S]) -> Vec<S> {
    match deg(p) {
        None => Vec::new(),
        Some(d) => {
            let inv = p[d].recip();
            let mut out: Vec<S> = p[..=d].iter().map(|c| c.clone() * inv.clone()).collect();
            trim(&mut out);
            out
        }
    }
}

/// Monic gcd by the Euclidean algorithm; exact backend only.
pub(crate) fn gcd_monic<S: Scalar>(a: &[S], b: &[S]) -> Vec<S> {
    let mut a = monic(a);
    let mut b = monic(b);
    while deg(&b).is_some() {
        let (_, r) = div_rem(&a, &b);
        a = b;
        b = monic(&r);
    }
    a
}

/// Yun square-free decomposition: returns pairs (g, e) of monic square-free
/// factors of multiplicity e, product of g^e giving p up to a constant.
pub(crate) fn squarefree_layers<S: Scalar>(p: &[S]) -> Vec<(Vec<S>, u32)> {
    let p = monic(p);
    if deg(&p).is_none_or(|d| d == 0) {
        return Vec::new();
    }
    let dp = derivative(&p);
    let a0 = gcd_monic(&p, &dp);
    let mut b = div_rem(&p, &a0).0;
    let mut c = div_rem(&dp, &a0).0;
    let mut d: Vec<S> = sub(&c, &derivative(&b));
    let mut out = Vec::new();
    let mut i = 1u32;
    while deg(&b).is_some_and(|db| db > 0) {
        let ai = gcd_monic(&b, &d);
        if deg(&ai).is_some_and(|da| da > 0) {
            out.push((ai.clone(), i));
        }
        b = div_rem(&b, &ai).0;
        c = div_rem(&d, &ai).0;
        d = sub(&c, &derivative(&b));
        i += 1;
    }
    out
}

fn sub<S: Scalar>(a: &[S], b: &[S]) -> Vec<S> {
    let n = a.len().max(b.len());
    let get = |p: &[S], k: usize| p.get(k).cloned().unwrap_or_else(S::zero);
    let mut out: Vec<S> = (0..n).map(|k| get(a, k) - get(b, k)).collect();
    trim(&mut out);
    out
}

// ---------------------------------------------------------------------------
// float root finding

#[derive(Clone, Copy, Debug)]
struct C {
    re: f64,
    im: f64,
}

impl C {
    fn new(re: f64, im: f64) -> Self {
        C { re, im }
    }
    fn abs(self) -> f64 {
        self.re.hypot(self.im)
    }
    fn mul(self, o: C) -> C {
        C::new(
            self.re * o.re - self.im * o.im,
            self.re * o.im + self.im * o.re,
        )
    }
    fn sub(self, o: C) -> C {
        C::new(self.re - o.re, self.im - o.im)
    }
    fn div(self, o: C) -> C {
        let n = o.re * o.re + o.im * o.im;
        C::new(
            (self.re * o.re + self.im * o.im) / n,
            (self.im * o.re - self.re * o.im) / n,
        )
    }
}

fn ceval(p: &[f64], z: C) -> C {
    let mut acc = C::new(0.0, 0.0);
    for &c in p.iter().rev() {
        acc = acc.mul(z);
        acc.re += c;
    }
    acc
}

/// Durand-Kerner with the standard (0.4 + 0.9i)^k start; deterministic
/// iteration order, 1000-step cap.
pub(crate) fn durand_kerner(p: &[f64]) -> Vec<(f64, f64)> {
    let d = match deg(p) {
        None | Some(0) => return Vec::new(),
        Some(d) => d,
    };
    let lead = p[d];
    let mono: Vec<f64> = p[..=d].iter().map(|c| c / lead).collect();
    let seed = C::new(0.4, 0.9);
    let mut zs: Vec<C> = Vec::with_capacity(d);
    let mut acc = C::new(1.0, 0.0);
    for _ in 0..d {
        acc = acc.mul(seed);
        zs.push(acc);
    }
    for _ in 0..1000 {
        let mut max_step = 0.0f64;
        for k in 0..d {
            let mut denom = C::new(1.0, 0.0);
            for j in 0..d {
                if j != k {
                    denom = denom.mul(zs[k].sub(zs[j]));
                }
            }
            if denom.abs() < 1e-300 {
                // nudge coincident iterates apart, deterministically
                zs[k] = C::new(zs[k].re + 1e-6 * (k as f64 + 1.0), zs[k].im + 1e-6);
                max_step = f64::MAX;
                continue;
            }
            let delta = ceval(&mono, zs[k]).div(denom);
            zs[k] = zs[k].sub(delta);
            let scale = 1.0 + zs[k].abs();
            max_step = max_step.max(delta.abs() / scale);
        }
        if max_step < 1e-15 {
            break;
        }
    }
    zs.iter().map(|z| (z.re, z.im)).collect()
}

/// Newton polish of a simple root of `p` starting at z0.
fn newton_polish(p: &[f64], mut z: C, iters: usize) -> C {
    let dp = derivative(p);
    for _ in 0..iters {
        let d = ceval(&dp, z);
        if d.abs() < 1e-300 {
            break;
        }
        let step = ceval(p, z).div(d);
        z = z.sub(step);
        if step.abs() < 1e-16 * (1.0 + z.abs()) {
            break;
        }
    }
    z
}

/// Root of the symmetrization, grouped: either a real root or a conjugate
/// pair x +- iy, with its multiplicity in the polynomial.
#[derive(Clone, Debug, PartialEq)]
pub(crate) enum FsRoot<S> {
    Real { x: S, mult: u32 },
    Pair { x: S, y_sq: S, mult: u32 },
}

/// Roots of a real-coefficient polynomial over C for the exact backend,
/// grouped into real roots and conjugate pairs with multiplicities.
///
/// Square-free layers peel off multiplicities; float estimates of each
/// (simple-rooted) layer are lifted by rational reconstruction and kept
/// only when exact division certifies them; uncertified roots fall back to
/// the exact image of the float value.
pub(crate) fn roots_exact<S: Scalar>(p: &[S]) -> Vec<FsRoot<S>> {
    debug_assert!(S::EXACT);
    roots_exact_impl(p)
}

fn roots_exact_impl<S: Scalar>(p: &[S]) -> Vec<FsRoot<S>> {
    let mut out = Vec::new();
    for (layer, mult) in squarefree_layers(p) {
        let pf: Vec<f64> = layer.iter().map(|c| c.to_f64()).collect();
        let approx = durand_kerner(&pf);
        let folded = fold_conjugates(&approx, 1e-7);
        for f in folded {
            match f {
                Folded::Real(xf) => {
                    let x = lift_real(&layer, xf).unwrap_or_else(|| S::from_f64(xf));
                    out.push(FsRoot::Real { x, mult });
                }
                Folded::Pair(xf, yf) => {
                    let (x, y_sq) = lift_pair(&layer, xf, yf)
                        .unwrap_or_else(|| (S::from_f64(xf), S::from_f64(yf * yf)));
                    out.push(FsRoot::Pair { x, y_sq, mult });
                }
            }
        }
    }
    out
}

enum Folded {
    Real(f64),
    Pair(f64, f64),
}

/// Groups simple float roots into reals and upper-half-plane pair
/// representatives; only for square-free input.
fn fold_conjugates(roots: &[(f64, f64)], im_tol: f64) -> Vec<Folded> {
    let mut out = Vec::new();
    let scale = roots
        .iter()
        .map(|(re, im)| re.hypot(*im))
        .fold(1.0, f64::max);
    for &(re, im) in roots {
        if im.abs() <= im_tol * scale {
            out.push(Folded::Real(re));
        } else if im > 0.0 {
            out.push(Folded::Pair(re, im));
        }
    }
    out
}

/// Certify a rational real root from a float estimate: reconstruct and
/// verify by exact evaluation.
fn lift_real<S: Scalar>(layer: &[S], xf: f64) -> Option<S> {
    let (n, d) = rationalize(xf, 1_000_000, 1e-6)?;
    let x = S::from_ratio(n, d);
    if eval(layer, &x).is_zero() {
        Some(x)
    } else {
        None
    }
}

/// Certify the monic quadratic q^2 - 2xq + (x^2 + y^2) of a conjugate pair
/// by exact division.
fn lift_pair<S: Scalar>(layer: &[S], xf: f64, yf: f64) -> Option<(S, S)> {
    let (xn, xd) = rationalize(xf, 1_000_000, 1e-6)?;
    let (sn, sd) = rationalize(yf * yf, 1_000_000, 1e-6)?;
    let x = S::from_ratio(xn, xd);
    let y_sq = S::from_ratio(sn, sd);
    let quad = vec![
        x.clone() * x.clone() + y_sq.clone(),
        -(S::from_int(2) * x.clone()),
        S::one(),
    ];
    let (_, rem) = div_rem(layer, &quad);
    if deg(&rem).is_none() {
        Some((x, y_sq))
    } else {
        None
    }
}

/// Float root candidates grouped at a caller-chosen clustering radius.
///
/// Multiple roots scatter like eps^(1/m), so no single radius is right for
/// every multiplicity; the zero-set classifier tries a ladder of radii and
/// certifies each candidate set by division before trusting it.
pub(crate) fn roots_float<S: Scalar>(
    p: &[S],
    cluster_tol: f64,
    pre_tol_rel: f64,
) -> Vec<FsRoot<S>> {
    let pf: Vec<f64> = p.iter().map(|c| c.to_f64()).collect();
    let raw = durand_kerner(&pf);
    if raw.is_empty() {
        return Vec::new();
    }
    let scale = raw.iter().map(|(re, im)| re.hypot(*im)).fold(1.0, f64::max);
    // fold to the closed upper half plane
    let mut pts: Vec<(f64, f64)> = raw.iter().map(|&(re, im)| (re, im.abs())).collect();
    pts.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let pre_tol = (pre_tol_rel * scale).max(cluster_tol);
    let mut clusters: Vec<(f64, f64, usize)> = Vec::new(); // (re, im, count)
    for (re, im) in pts {
        match clusters.iter_mut().find(|(cre, cim, n)| {
            let inv = 1.0 / *n as f64;
            ((cre * inv) - re).hypot((cim * inv) - im) <= pre_tol
        }) {
            Some((cre, cim, n)) => {
                *cre += re;
                *cim += im;
                *n += 1;
            }
            None => clusters.push((re, im, 1)),
        }
    }
    let real_tol = cluster_tol * scale.max(1.0);
    // the pair-hypothesis polish converges only linearly on real roots of
    // high multiplicity, so the on-axis decision gets a tolerance tied to
    // the clustering rung, not to the final cluster_tol
    let axis_tol = real_tol.max(0.05 * pre_tol_rel * scale.max(1.0));
    // polish on the (m-1)-th derivative, where the hypothesized root is
    // simple and Newton is quadratic
    let polish_at = |mult: usize, z0: C| -> C {
        let mut dp = pf.clone();
        for _ in 1..mult {
            dp = derivative(&dp);
        }
        newton_polish(&dp, z0, 40)
    };
    let mut out: Vec<FsRoot<S>> = Vec::new();
    for (sre, sim, count) in clusters {
        let inv = 1.0 / count as f64;
        let (cre, cim) = (sre * inv, sim * inv);
        // a real root of multiplicity m scatters its estimates off the
        // axis, so the fold can masquerade as a pair; decide real vs pair
        // only after polishing, and repolish under the real hypothesis
        // (full count, not count/2) when the pair polish lands on the axis
        let mult_pair = count / 2;
        let polished_pair = if cim > axis_tol && mult_pair > 0 {
            Some(polish_at(mult_pair, C::new(cre, cim)))
        } else {
            None
        };
        match polished_pair {
            Some(z) if z.im.abs() > axis_tol => {
                out.push(FsRoot::Pair {
                    x: S::from_f64(z.re),
                    y_sq: S::from_f64(z.im * z.im),
                    mult: mult_pair as u32,
                });
            }
            maybe_real => {
                let re0 = maybe_real.map(|z| z.re).unwrap_or(cre);
                let z = polish_at(count, C::new(re0, 0.0));
                out.push(FsRoot::Real {
                    x: S::from_f64(z.re),
                    mult: count as u32,
                });
            }
        }
    }
    // merge clusters that polishing brought together
    let mut merged: Vec<FsRoot<S>> = Vec::new();
    for r in out {
        let mut absorbed = false;
        for m in merged.iter_mut() {
            match (&r, &mut *m) {
                (FsRoot::Real { x, mult }, FsRoot::Real { x: mx, mult: mm })
                    if (x.to_f64() - mx.to_f64()).abs() <= real_tol =>
                {
                    *mm += mult;
                    absorbed = true;
                }
                (
                    FsRoot::Pair { x, y_sq, mult },
                    FsRoot::Pair {
                        x: mx,
                        y_sq: my,
                        mult: mm,
                    },
                ) if (x.to_f64() - mx.to_f64()).abs() <= real_tol
                    && (y_sq.to_f64().sqrt() - my.to_f64().sqrt()).abs() <= real_tol =>
                {
                    *mm += mult;
                    absorbed = true;
                }
                _ => {}
            }
            if absorbed {
                break;
            }
        }
        if !absorbed {
            merged.push(r);
        }
    }
    merged
}
