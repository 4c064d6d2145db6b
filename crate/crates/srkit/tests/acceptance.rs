//! Acceptance suite: one test per criterion, each printing a PASS/FAIL line.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see the lines.

mod common;

use std::time::Instant;

use rand::Rng;

use srkit::cousin::{
    additive_split, multiplicative_split_general, multiplicative_split_sp, AnnularPair, FactorOrder,
};
use srkit::jets::{jet_interpolate, spherical_expand, taylor_jet, JetData};
use srkit::matrep::{det_check, exp_star, to_matrix};
use srkit::sampling::sphere_samples;
use srkit::scalar::Rat;
use srkit::zeros::{build_with_zeros, divisor_build, zero_set, Node, ZeroRecord};
use srkit::{QPoly, Quaternion, Scalar};

type P = QPoly<Rat>;
type Q = Quaternion<Rat>;
type Pf = QPoly<f64>;
type Qf = Quaternion<f64>;

const TAU: f64 = std::f64::consts::TAU;

fn check(n: u32, name: &str, ok: bool, detail: String) {
    let verdict = if ok { "PASS" } else { "FAIL" };
    println!("ACCEPTANCE {n:02} {name}: {verdict} ({detail})");
    assert!(ok, "criterion {n} failed: {detail}");
}

#[test]
fn criterion_01_star_algebra_identities_exact() {
    let start = Instant::now();
    let mut r = common::rng(101);
    let mut failures = 0;
    for _ in 0..200 {
        let f = common::rand_poly(&mut r, 0, 8);
        let g = common::rand_poly(&mut r, 0, 8);
        let h = common::rand_poly(&mut r, 0, 8);
        if f.star_mul(&g).star_mul(&h) != f.star_mul(&g.star_mul(&h)) {
            failures += 1;
        }
        if (&f + &g).star_mul(&h) != &f.star_mul(&h) + &g.star_mul(&h) {
            failures += 1;
        }
        if f.star_mul(&g).regular_conjugate()
            != g.regular_conjugate().star_mul(&f.regular_conjugate())
        {
            failures += 1;
        }
        let fs = f.symmetrization();
        if !fs.is_slice_preserving()
            || fs != f.regular_conjugate().star_mul(&f)
            || fs != f.star_mul(&f.regular_conjugate())
        {
            failures += 1;
        }
    }
    let elapsed = start.elapsed().as_secs_f64();
    check(
        1,
        "star-algebra identities (exact, 200 samples)",
        failures == 0 && elapsed < 5.0,
        format!("failures: {failures}, elapsed: {elapsed:.2}s (< 5s)"),
    );
}

#[test]
fn criterion_02_matrix_homomorphism() {
    let mut r = common::rng(102);
    let mut failures = 0;
    for _ in 0..100 {
        let f = common::rand_poly(&mut r, 0, 6);
        let g = common::rand_poly(&mut r, 0, 6);
        if to_matrix(&f.star_mul(&g)) != to_matrix(&f).mul(&to_matrix(&g)) {
            failures += 1;
        }
        let fs = f.symmetrization();
        if det_check(&f) != fs.star_mul(&fs) {
            failures += 1;
        }
    }
    check(
        2,
        "matrix representation homomorphism and determinant (100 pairs)",
        failures == 0,
        format!("failures: {failures}"),
    );
}

#[test]
fn criterion_03_exp_counterexample_value() {
    let e_sum = exp_star(&Pf::constant(Qf::new(0.0, TAU, TAU, 0.0)), 64).unwrap();
    let angle = 2.0 * std::f64::consts::SQRT_2 * std::f64::consts::PI;
    let s = angle.sin() / std::f64::consts::SQRT_2;
    let expected = Pf::constant(Qf::new(angle.cos(), s, s, 0.0));
    let dev_sum = (&e_sum - &expected).max_coeff_norm();
    let dev_i = (&exp_star(&Pf::constant(Qf::new(0.0, TAU, 0.0, 0.0)), 64).unwrap() - &Pf::one())
        .max_coeff_norm();
    let dev_j = (&exp_star(&Pf::constant(Qf::new(0.0, 0.0, TAU, 0.0)), 64).unwrap() - &Pf::one())
        .max_coeff_norm();
    let non_additive = (&e_sum - &Pf::one()).max_coeff_norm();
    check(
        3,
        "exp* counterexample: exp*(2pi i + 2pi j)",
        dev_sum < 1e-6 && dev_i < 1e-9 && dev_j < 1e-9 && non_additive > 0.5,
        format!(
            "|expr - cos(2sqrt2 pi) - (i+j)/sqrt2 sin(2sqrt2 pi)| = {dev_sum:.2e}, \
             |exp(2pi i) - 1| = {dev_i:.2e}, |exp(2pi j) - 1| = {dev_j:.2e}, \
             |exp(sum) - 1| = {non_additive:.2}"
        ),
    );
}

#[test]
fn criterion_04_exp_kernel_sweep() {
    let r2 = std::f64::consts::SQRT_2.recip();
    let r3 = 3.0f64.sqrt().recip();
    let units = [
        Qf::new(0.0, 1.0, 0.0, 0.0),
        Qf::new(0.0, 0.0, 1.0, 0.0),
        Qf::new(0.0, 0.0, 0.0, 1.0),
        Qf::new(0.0, r2, r2, 0.0),
        Qf::new(0.0, r3, r3, r3),
    ];
    let mut worst: f64 = 0.0;
    for v in &units {
        for n in 1..=3 {
            let f = Pf::constant(v.scale(&(TAU * n as f64)));
            let dev = (&exp_star(&f, 64).unwrap() - &Pf::one()).max_coeff_norm();
            worst = worst.max(dev);
        }
    }
    check(
        4,
        "exp* kernel sweep exp*(2 pi n v) = 1",
        worst < 1e-9,
        format!("worst deviation {worst:.2e} over 5 directions x n in 1..3"),
    );
}

#[test]
fn criterion_05_zero_round_trip() {
    let mut r = common::rng(105);
    let mut failures = 0;
    for _ in 0..100 {
        let spec = common::rand_zero_spec(&mut r, 4);
        let f = build_with_zeros(&spec).unwrap();
        let records = zero_set(&f).unwrap();
        let recovered: Vec<_> = records.iter().map(|rec| rec.to_entry()).collect();
        let mut expected = spec.sorted_entries();
        let mut got = recovered;
        got.sort_by(|a, b| {
            format!("{a:?}")
                .partial_cmp(&format!("{b:?}"))
                .unwrap_or(std::cmp::Ordering::Equal)
        });
        expected.sort_by(|a, b| {
            format!("{a:?}")
                .partial_cmp(&format!("{b:?}"))
                .unwrap_or(std::cmp::Ordering::Equal)
        });
        if got != expected {
            failures += 1;
        }
    }
    // the (q-i)*(q-j) classification, cross-checked by dense sampling
    let f = P::linear(&Q::i()).star_mul(&P::linear(&Q::j()));
    let recs = zero_set(&f).unwrap();
    let classified_ok = recs
        == vec![ZeroRecord::IsolatedPoint {
            location: Q::i(),
            multiplicity: 2,
        }];
    let ff = f.to_f64_poly();
    let hits = sphere_samples(0.0, 1.0, 5000)
        .iter()
        .filter(|q| ff.evaluate(q).unwrap().abs_f64() <= 1e-8)
        .count();
    let near_i = ff.evaluate(&Qf::new(0.0, 1.0, 0.0, 0.0)).unwrap().abs_f64();
    check(
        5,
        "zero-set round trip (100 specs) and (q-i)*(q-j) classification",
        failures == 0 && classified_ok && hits < 50 && near_i < 1e-12,
        format!(
            "round-trip failures: {failures}, single isolated zero at i with multiplicity 2: \
             {classified_ok}, sphere samples near zero: {hits}/5000, |f(i)| = {near_i:.1e}"
        ),
    );
}

#[test]
fn criterion_06_jet_round_trip() {
    let start = Instant::now();
    let mut r = common::rng(106);
    let mut failures = 0;
    for _ in 0..100 {
        let spec = common::rand_jet_spec(&mut r, 3);
        let f = jet_interpolate(&spec).unwrap();
        for entry in spec.entries() {
            let ok = match (&entry.node, &entry.jet) {
                (Node::Real(x), JetData::Taylor(coeffs)) => {
                    taylor_jet(
                        &f,
                        &Quaternion::from_real(x.clone()),
                        coeffs.len() as u32 - 1,
                    )
                    .unwrap()
                    .coeffs
                        == *coeffs
                }
                (Node::Point(q0), JetData::Taylor(coeffs)) => {
                    taylor_jet(&f, q0, coeffs.len() as u32 - 1).unwrap().coeffs == *coeffs
                }
                (Node::Sphere(s), JetData::Spherical { anchor, coeffs }) => {
                    let q0 = anchor.clone().unwrap_or_else(|| {
                        Quaternion::from_real(s.center())
                            + Quaternion::i().scale(&s.radius().unwrap())
                    });
                    spherical_expand(&f, s, &q0, coeffs.len() as u32 / 2 - 1)
                        .unwrap()
                        .coeffs
                        == *coeffs
                }
                _ => false,
            };
            if !ok {
                failures += 1;
            }
        }
    }
    let elapsed = start.elapsed().as_secs_f64();
    check(
        6,
        "jet interpolation round trip (100 specs, exact)",
        failures == 0 && elapsed < 30.0,
        format!("failures: {failures}, elapsed: {elapsed:.2}s (< 30s)"),
    );
}

#[test]
fn criterion_07_divisor_principality() {
    let mut r = common::rng(107);
    let mut failures = 0;
    for _ in 0..50 {
        let spec = common::rand_divisor(&mut r, 4);
        let f = divisor_build(&spec).unwrap();
        let num_records: Vec<_> = zero_set(f.numerator())
            .map(|rs| rs.iter().map(|rec| rec.to_entry()).collect())
            .unwrap_or_default();
        let den_records: Vec<_> = if f.denominator() == &P::one() {
            Vec::new()
        } else {
            zero_set(f.denominator())
                .unwrap()
                .iter()
                .map(|rec| rec.to_entry())
                .collect()
        };
        let sort = |mut v: Vec<srkit::DivisorEntry<Rat>>| {
            v.sort_by(|a, b| {
                format!("{a:?}")
                    .partial_cmp(&format!("{b:?}"))
                    .unwrap_or(std::cmp::Ordering::Equal)
            });
            v
        };
        let pos_ok = sort(num_records) == sort(spec.positive_part().sorted_entries());
        let neg_ok = sort(den_records) == sort(spec.negated_negative_part().sorted_entries());
        if !pos_ok || !neg_ok {
            failures += 1;
        }
    }
    check(
        7,
        "divisor principality (50 random divisors)",
        failures == 0,
        format!("failures: {failures}"),
    );
}

#[test]
fn criterion_08_additive_split_exactness() {
    let mut r = common::rng(108);
    let pair = AnnularPair::default();
    let mut failures = 0;
    let mut max_d: f64 = 0.0;
    for k in 0..100 {
        let gamma = if k % 3 == 0 {
            // slice-preserving input
            let p = common::rand_poly(&mut r, -4, 4);
            p.component_decompose()[0].clone()
        } else {
            common::rand_poly(&mut r, -4, 4)
        };
        let result = additive_split(&gamma, &pair);
        if &result.alpha + &result.beta != gamma {
            failures += 1;
        }
        if gamma.is_slice_preserving()
            && !(result.alpha.is_slice_preserving() && result.beta.is_slice_preserving())
        {
            failures += 1;
        }
        if !result.d_constant.is_finite() {
            failures += 1;
        }
        max_d = max_d.max(result.d_constant);
    }
    check(
        8,
        "additive split exactness (100 Laurent inputs)",
        failures == 0 && max_d.is_finite(),
        format!("failures: {failures}, measured D up to {max_d:.3}"),
    );
}

#[test]
fn criterion_09_multiplicative_splits() {
    let mut r = common::rng(109);
    let pair = AnnularPair::default();
    let samples = pair.boundary_samples();
    let residual = |recon: &Pf, c: &Pf| -> f64 {
        let d = recon - c;
        samples
            .iter()
            .map(|q| d.evaluate(q).unwrap().abs_f64())
            .fold(0.0, f64::max)
    };
    let mut worst_residual: f64 = 0.0;
    let mut failures = 0;
    for _ in 0..10 {
        // gated class: |c - 1|_C < 1/8 by construction
        let mut dev = Pf::zero();
        for n in -2i64..=2 {
            if r.gen_bool(0.7) {
                let c = Qf::new(
                    r.gen_range(-0.01..0.01),
                    r.gen_range(-0.01..0.01),
                    r.gen_range(-0.01..0.01),
                    r.gen_range(-0.01..0.01),
                );
                dev = &dev + &Pf::monomial(n, c);
            }
        }
        let c = &Pf::one() + &dev;
        let (a, b) =
            multiplicative_split_general(&c, &pair, 1.0, 0.125, FactorOrder::AFirst).unwrap();
        let res = residual(&a.star_mul(&b), &c);
        worst_residual = worst_residual.max(res);
        if res >= 1e-8 {
            failures += 1;
        }
        // order-swapped variant
        let (a2, b2) =
            multiplicative_split_general(&c, &pair, 1.0, 0.125, FactorOrder::BFirst).unwrap();
        let res2 = residual(&b2.star_mul(&a2), &c);
        worst_residual = worst_residual.max(res2);
        if res2 >= 1e-8 {
            failures += 1;
        }
        // slice-preserving route
        let scalar_dev = dev.component_decompose()[0].clone();
        let csp = &Pf::one() + &scalar_dev;
        let (asp, bsp) = multiplicative_split_sp(&csp, &pair, 1.0).unwrap();
        let res3 = residual(&asp.star_mul(&bsp), &csp);
        worst_residual = worst_residual.max(res3);
        if res3 >= 1e-8 {
            failures += 1;
        }
    }
    // eps contract: negative-power content small enough for eps = 1e-3
    let mut worst_eps: f64 = 0.0;
    for _ in 0..5 {
        let c = &(&Pf::one()
            + &Pf::monomial(
                1,
                Qf::new(
                    r.gen_range(-0.03..0.03),
                    r.gen_range(-0.03..0.03),
                    0.0,
                    r.gen_range(-0.03..0.03),
                ),
            ))
            + &Pf::monomial(-1, Qf::new(0.0, r.gen_range(-1e-5..1e-5), 1e-5, 0.0));
        let (a, b) =
            multiplicative_split_general(&c, &pair, 1e-3, 0.125, FactorOrder::AFirst).unwrap();
        if residual(&a.star_mul(&b), &c) >= 1e-8 {
            failures += 1;
        }
        let adev = (&a - &Pf::one()).to_f64_poly();
        let sup = pair
            .a_side_samples()
            .iter()
            .map(|q| adev.evaluate(q).unwrap().abs_f64())
            .fold(0.0, f64::max);
        worst_eps = worst_eps.max(sup);
        if sup >= 1e-3 {
            failures += 1;
        }
    }
    check(
        9,
        "multiplicative splits reconstruct and honor eps",
        failures == 0,
        format!(
            "failures: {failures}, worst residual {worst_residual:.2e} (< 1e-8), \
             worst |a-1|_A {worst_eps:.2e} (< 1e-3 on the eps class)"
        ),
    );
}

#[test]
fn criterion_10_stem_evaluation_consistency() {
    // exact backend: zero deviation on a 20 x 20 x 4 grid for 50 polynomials
    let mut r = common::rng(110);
    let units_exact = [
        Q::i(),
        Q::j(),
        Q::k(),
        Quaternion::new(
            Rat::from_int(0),
            Rat::from_ratio(1, 3),
            Rat::from_ratio(2, 3),
            Rat::from_ratio(2, 3),
        ),
    ];
    let mut exact_failures = 0;
    for _ in 0..50 {
        let f = common::rand_poly(&mut r, 0, 6);
        for xi in 0..20 {
            let x = Rat::from_ratio(xi - 10, 4);
            for yi in 0..20 {
                let y = Rat::from_ratio(yi + 1, 7);
                for unit in &units_exact {
                    let via_stem = f.stem_evaluate(&x, &y, unit).unwrap();
                    let point = Quaternion::from_real(x.clone()) + unit.scale(&y);
                    if via_stem != f.evaluate(&point).unwrap() {
                        exact_failures += 1;
                    }
                }
            }
        }
    }
    // float backend: < 1e-12 on the same grid shape, coefficients
    // normalized to unit scale
    let mut worst: f64 = 0.0;
    let units_float: Vec<Qf> = srkit::sampling::reference_units();
    for _ in 0..50 {
        let raw = common::rand_poly(&mut r, 0, 6).to_f64_poly();
        let f = raw.scale_real(&raw.max_coeff_norm().recip());
        for xi in 0..20 {
            let x = (xi as f64 - 10.0) / 8.0;
            for yi in 0..20 {
                let y = (yi as f64 + 1.0) / 20.0;
                for unit in &units_float {
                    let via_stem = f.stem_evaluate(&x, &y, unit).unwrap();
                    let point = Quaternion::from_real(x) + unit.scale(&y);
                    let dev = (via_stem - f.evaluate(&point).unwrap()).abs_f64();
                    worst = worst.max(dev);
                }
            }
        }
    }
    check(
        10,
        "stem evaluation = direct evaluation (20x20x4 grid, 50 polys)",
        exact_failures == 0 && worst < 1e-12,
        format!("exact failures: {exact_failures}, float max deviation: {worst:.2e}"),
    );
}
