//! Deterministic sample-point generators.
//!
//! Splitting constants, reconstruction residuals and the zero-set sampling
//! oracle are all measured on fixed grids so identical inputs give
//! identical diagnostics.

use crate::quat::Quaternion;

/// The four reference imaginary units used in grid checks:
/// i, j, k and (i+j+k)/sqrt(3).
pub fn reference_units() -> Vec<Quaternion<f64>> {
    let r3 = 3.0f64.sqrt().recip();
    vec![
        Quaternion::i(),
        Quaternion::j(),
        Quaternion::k(),
        Quaternion::new(0.0, r3, r3, r3),
    ]
}

/// `n_angles` points per circle of each radius, swept over the reference
/// units: q = r cos(t) + r sin(t) I.
pub fn circle_samples(radii: &[f64], n_angles: usize) -> Vec<Quaternion<f64>> {
    let units = reference_units();
    let mut out = Vec::with_capacity(radii.len() * n_angles * units.len());
    for &r in radii {
        for i in 0..n_angles {
            let t = std::f64::consts::TAU * (i as f64 + 0.5) / n_angles as f64;
            let (s, c) = t.sin_cos();
            for u in &units {
                out.push(Quaternion::from_real(r * c) + u.scale(&(r * s)));
            }
        }
    }
    out
}

/// `n` quasi-uniform points on the sphere S(a, r), spiral-distributed over
/// the unit imaginary directions.
pub fn sphere_samples(center: f64, radius: f64, n: usize) -> Vec<Quaternion<f64>> {
    let golden = std::f64::consts::PI * (3.0 - 5.0f64.sqrt());
    (0..n)
        .map(|k| {
            let z = 1.0 - 2.0 * (k as f64 + 0.5) / n as f64;
            let rho = (1.0 - z * z).sqrt();
            let phi = golden * k as f64;
            let unit = Quaternion::new(0.0, rho * phi.cos(), rho * phi.sin(), z);
            Quaternion::from_real(center) + unit.scale(&radius)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn samplers_are_deterministic_and_sized() {
        let a = circle_samples(&[0.5, 2.0], 25);
        let b = circle_samples(&[0.5, 2.0], 25);
        assert_eq!(a.len(), 200);
        assert_eq!(a, b);
        let s = sphere_samples(1.0, 2.0, 100);
        assert_eq!(s.len(), 100);
        for q in &s {
            assert!((q.re() - 1.0).abs() < 1e-12);
            assert!((q.im().abs_f64() - 2.0).abs() < 1e-12);
        }
    }
}
