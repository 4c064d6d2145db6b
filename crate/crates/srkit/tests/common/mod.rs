//! Shared deterministic generators for the integration suites.
#![allow(dead_code)] // each test target uses a different subset

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use srkit::jets::{JetData, JetSpec, JetSpecEntry};
use srkit::scalar::Rat;
use srkit::zeros::{Divisor, DivisorEntry, Node};
use srkit::{QPoly, Quaternion, Scalar, Sphere};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn rand_rat(r: &mut ChaCha8Rng, max_num: i64, max_den: i64) -> Rat {
    let d = r.gen_range(1..=max_den);
    let n = r.gen_range(-max_num..=max_num);
    Rat::from_ratio(n, d)
}

pub fn rand_quat(r: &mut ChaCha8Rng) -> Quaternion<Rat> {
    Quaternion::new(
        rand_rat(r, 6, 3),
        rand_rat(r, 6, 3),
        rand_rat(r, 6, 3),
        rand_rat(r, 6, 3),
    )
}

/// Random polynomial with degree span inside [min_deg, max_deg]; may have
/// interior zero coefficients but is never the zero polynomial.
pub fn rand_poly(r: &mut ChaCha8Rng, min_deg: i64, max_deg: i64) -> QPoly<Rat> {
    loop {
        let lo = r.gen_range(min_deg..=max_deg);
        let hi = r.gen_range(lo..=max_deg);
        let coeffs: Vec<Quaternion<Rat>> = (lo..=hi)
            .map(|_| {
                if r.gen_bool(0.15) {
                    Quaternion::zero()
                } else {
                    rand_quat(r)
                }
            })
            .collect();
        let p = QPoly::from_terms(lo, coeffs);
        if !p.is_zero() {
            return p;
        }
    }
}

/// Unit imaginary directions with rational coordinates (Pythagorean
/// quadruples), randomly signed and permuted.
pub fn rand_unit_imaginary(r: &mut ChaCha8Rng) -> Quaternion<Rat> {
    const QUADS: [(i64, i64, i64, i64); 8] = [
        (1, 0, 0, 1),
        (0, 1, 0, 1),
        (0, 0, 1, 1),
        (3, 4, 0, 5),
        (0, 3, 4, 5),
        (1, 2, 2, 3),
        (2, 3, 6, 7),
        (1, 4, 8, 9),
    ];
    let (a, b, c, d) = *QUADS.choose(r).unwrap();
    let mut comps = [
        Rat::from_ratio(a, d),
        Rat::from_ratio(b, d),
        Rat::from_ratio(c, d),
    ];
    comps.shuffle(r);
    let sign = |r: &mut ChaCha8Rng, v: Rat| if r.gen_bool(0.5) { -v } else { v };
    let q = Quaternion::new(
        Rat::from_int(0),
        sign(r, comps[0].clone()),
        sign(r, comps[1].clone()),
        sign(r, comps[2].clone()),
    );
    assert!(q.is_unit_imaginary());
    q
}

/// A nonreal point x + I y with rational slice coordinates.
pub fn rand_nonreal_point(r: &mut ChaCha8Rng) -> Quaternion<Rat> {
    let x = rand_rat(r, 4, 2);
    let y = Rat::from_ratio(r.gen_range(1..=6), r.gen_range(1..=2));
    let unit = rand_unit_imaginary(r);
    Quaternion::from_real(x) + unit.scale(&y)
}

fn sphere_key(s: &Sphere<Rat>) -> (Rat, Rat) {
    (s.center(), s.radius_sq())
}

/// A random valid all-positive zero prescription: up to `max_nodes` nodes,
/// point/real orders up to 3, sphere orders 2, occasionally a sphere node
/// together with one prescribed point on it.
pub fn rand_zero_spec(r: &mut ChaCha8Rng, max_nodes: usize) -> Divisor<Rat> {
    let n_nodes = r.gen_range(1..=max_nodes);
    let mut entries: Vec<DivisorEntry<Rat>> = Vec::new();
    let mut used_spheres: Vec<(Rat, Rat)> = Vec::new();
    let mut guard = 0;
    while entries.len() < n_nodes && guard < 200 {
        guard += 1;
        let kind = r.gen_range(0..10);
        if kind < 3 {
            // real point
            let x = rand_rat(r, 4, 2);
            let key = (x.clone(), Rat::from_int(0));
            if used_spheres.contains(&key) {
                continue;
            }
            used_spheres.push(key);
            entries.push(DivisorEntry {
                node: Node::Real(x),
                order: r.gen_range(1..=3),
            });
        } else if kind < 6 {
            // sphere, possibly with one point on it
            let a = rand_rat(r, 3, 2);
            let rad = Rat::from_ratio(r.gen_range(1..=5), r.gen_range(1..=2));
            let sphere = Sphere::from_radius(a.clone(), rad.clone());
            if used_spheres.contains(&sphere_key(&sphere)) {
                continue;
            }
            used_spheres.push(sphere_key(&sphere));
            entries.push(DivisorEntry {
                node: Node::Sphere(sphere),
                order: 2,
            });
            if entries.len() < n_nodes && r.gen_bool(0.4) {
                let unit = rand_unit_imaginary(r);
                let z = Quaternion::from_real(a) + unit.scale(&rad);
                entries.push(DivisorEntry {
                    node: Node::Point(z),
                    order: r.gen_range(1..=3),
                });
            }
        } else {
            // nonreal point
            let z = rand_nonreal_point(r);
            let key = sphere_key(&z.symmetrize());
            if used_spheres.contains(&key) {
                continue;
            }
            used_spheres.push(key);
            entries.push(DivisorEntry {
                node: Node::Point(z),
                order: r.gen_range(1..=3),
            });
        }
    }
    Divisor::new(entries).expect("generated spec is valid")
}

/// A random mixed zero/pole divisor; poles only on real points and spheres
/// (a slice-preserving denominator cannot vanish at an isolated nonreal
/// point).
pub fn rand_divisor(r: &mut ChaCha8Rng, max_nodes: usize) -> Divisor<Rat> {
    let n_nodes = r.gen_range(1..=max_nodes);
    let mut entries: Vec<DivisorEntry<Rat>> = Vec::new();
    let mut used_spheres: Vec<(Rat, Rat)> = Vec::new();
    let mut guard = 0;
    while entries.len() < n_nodes && guard < 200 {
        guard += 1;
        let negative = r.gen_bool(0.4);
        let kind = r.gen_range(0..2);
        if kind == 0 || negative {
            if r.gen_bool(0.5) {
                let x = rand_rat(r, 4, 2);
                let key = (x.clone(), Rat::from_int(0));
                if used_spheres.contains(&key) {
                    continue;
                }
                used_spheres.push(key);
                let mag = r.gen_range(1..=3);
                entries.push(DivisorEntry {
                    node: Node::Real(x),
                    order: if negative { -mag } else { mag },
                });
            } else {
                let a = rand_rat(r, 3, 2);
                let rad = Rat::from_ratio(r.gen_range(1..=5), r.gen_range(1..=2));
                let sphere = Sphere::from_radius(a, rad);
                if used_spheres.contains(&sphere_key(&sphere)) {
                    continue;
                }
                used_spheres.push(sphere_key(&sphere));
                entries.push(DivisorEntry {
                    node: Node::Sphere(sphere),
                    order: if negative { -2 } else { 2 },
                });
            }
        } else {
            let z = rand_nonreal_point(r);
            let key = sphere_key(&z.symmetrize());
            if used_spheres.contains(&key) {
                continue;
            }
            used_spheres.push(key);
            entries.push(DivisorEntry {
                node: Node::Point(z),
                order: r.gen_range(1..=3),
            });
        }
    }
    Divisor::new(entries).expect("generated divisor is valid")
}

/// A random jet prescription: up to `max_nodes` nodes mixing real points,
/// nonreal points and spheres (anchored or anchor-free), jet orders <= 2.
pub fn rand_jet_spec(r: &mut ChaCha8Rng, max_nodes: usize) -> JetSpec<Rat> {
    let n_nodes = r.gen_range(1..=max_nodes);
    let mut entries = Vec::new();
    let mut used_spheres: Vec<(Rat, Rat)> = Vec::new();
    let mut guard = 0;
    while entries.len() < n_nodes && guard < 200 {
        guard += 1;
        match r.gen_range(0..3) {
            0 => {
                let x = rand_rat(r, 4, 2);
                let key = (x.clone(), Rat::from_int(0));
                if used_spheres.contains(&key) {
                    continue;
                }
                used_spheres.push(key);
                let order = r.gen_range(0..=2);
                entries.push(JetSpecEntry {
                    node: Node::Real(x),
                    jet: JetData::Taylor((0..=order).map(|_| rand_quat(r)).collect()),
                });
            }
            1 => {
                let z = rand_nonreal_point(r);
                let key = sphere_key(&z.symmetrize());
                if used_spheres.contains(&key) {
                    continue;
                }
                used_spheres.push(key);
                let order = r.gen_range(0..=2);
                entries.push(JetSpecEntry {
                    node: Node::Point(z),
                    jet: JetData::Taylor((0..=order).map(|_| rand_quat(r)).collect()),
                });
            }
            _ => {
                let a = rand_rat(r, 3, 2);
                let rad = Rat::from_ratio(r.gen_range(1..=5), r.gen_range(1..=2));
                let sphere = Sphere::from_radius(a.clone(), rad.clone());
                if used_spheres.contains(&sphere_key(&sphere)) {
                    continue;
                }
                used_spheres.push(sphere_key(&sphere));
                let l = r.gen_range(0..=2usize);
                let anchored = r.gen_bool(0.5);
                let coeffs: Vec<Quaternion<Rat>> = (0..2 * (l + 1))
                    .map(|idx| {
                        if !anchored && idx % 2 == 1 {
                            Quaternion::zero()
                        } else {
                            rand_quat(r)
                        }
                    })
                    .collect();
                let anchor = if anchored {
                    Some(Quaternion::from_real(a) + rand_unit_imaginary(r).scale(&rad))
                } else {
                    None
                };
                entries.push(JetSpecEntry {
                    node: Node::Sphere(sphere),
                    jet: JetData::Spherical { anchor, coeffs },
                });
            }
        }
    }
    JetSpec::new(entries).expect("generated jet spec is valid")
}
