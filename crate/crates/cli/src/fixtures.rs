//! Deterministic fixture generation: Heronian triangles (integer sides and
//! integer area, rationally placed — the exact backend's fixture class) and
//! separation-guarded random float triangles.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use homolog_core::projective::PPoint;
use homolog_core::scalar::Scalar;
use homolog_core::triangle::Triangle;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Integer side triple of a Heronian triangle, `a ≥ b ≥ c`.
pub type HeronianSides = (i64, i64, i64);

fn heronian_pool(max_side: i64) -> Arc<Vec<HeronianSides>> {
    static POOLS: OnceLock<Mutex<HashMap<i64, Arc<Vec<HeronianSides>>>>> = OnceLock::new();
    let pools = POOLS.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = pools.lock().expect("pool lock");
    if let Some(pool) = guard.get(&max_side) {
        return Arc::clone(pool);
    }
    // Brute force over the side cube; this enumeration *is* the oracle for
    // the sampler.
    let mut pool = Vec::new();
    for a in 3..=max_side {
        for b in 2..=a {
            let cmin = (a - b + 1).max(1);
            for c in cmin..=b {
                let s16 = (a + b + c) as i128
                    * (-a + b + c) as i128
                    * (a - b + c) as i128
                    * (a + b - c) as i128;
                if s16 <= 0 {
                    continue;
                }
                let k = (s16 as f64).sqrt().round() as i128;
                let k = [k - 1, k, k + 1].into_iter().find(|k| k * k == s16);
                if let Some(k) = k {
                    // 16 S² = k², so S is integral exactly when 4 | k
                    if k % 4 == 0 {
                        pool.push((a, b, c));
                    }
                }
            }
        }
    }
    let pool = Arc::new(pool);
    guard.insert(max_side, Arc::clone(&pool));
    pool
}

/// Rational placement of integer sides: `B = (0,0)`, `C = (a, 0)`,
/// `A = ((a² + c² − b²)/(2a), 2S/a)`.
pub fn place_heronian(sides: HeronianSides) -> Triangle {
    let (a, b, c) = sides;
    let s16 = (a + b + c) * (-a + b + c) * (a - b + c) * (a + b - c);
    let s4 = (s16 as f64).sqrt().round() as i64; // 4S, exact by pool construction
    debug_assert_eq!(s4 * s4, s16);
    let ax = Scalar::ratio(a * a + c * c - b * b, 2 * a);
    let ay = Scalar::ratio(s4, 2 * a); // 2S/a = (4S)/(2a)
    Triangle::new(
        PPoint::from_cartesian(ax, ay),
        PPoint::at(0, 0),
        PPoint::at(a, 0),
    )
    .expect("positive area")
}

/// Deterministic sequence of `n` Heronian triangles with sides up to
/// `max_side`. The same seed yields the identical sequence; side roles are
/// shuffled so all placements appear.
pub fn heronian_sample(seed: u64, n: usize, max_side: i64) -> Vec<Triangle> {
    assert!(max_side >= 5, "max_side must be at least 5");
    let pool = heronian_pool(max_side);
    assert!(!pool.is_empty(), "no Heronian triangles up to {max_side}");
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x48_45_52_4f);
    let mut out = Vec::with_capacity(n);
    for _ in 0..n {
        let (a, b, c) = pool[rng.gen_range(0..pool.len())];
        let perm = rng.gen_range(0..6u8);
        let sides = match perm {
            0 => (a, b, c),
            1 => (a, c, b),
            2 => (b, a, c),
            3 => (b, c, a),
            4 => (c, a, b),
            _ => (c, b, a),
        };
        out.push(place_heronian(sides));
    }
    out
}

/// The raw pool, exposed for the sampler's own oracle test.
pub fn heronian_pool_sides(max_side: i64) -> Vec<HeronianSides> {
    heronian_pool(max_side).as_ref().clone()
}

/// Deterministic float triangles with vertices uniform in `[−10, 10]²`,
/// rejecting those with minimum angle or area below `separation`. The
/// relative comparison tolerance `tol` is attached to every coordinate.
pub fn random_triangle_float(seed: u64, n: usize, separation: f64, tol: f64) -> Vec<Triangle> {
    assert!(separation > 0.0);
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x46_4c_4f_41);
    let mut out = Vec::with_capacity(n);
    while out.len() < n {
        let coord = |rng: &mut ChaCha8Rng| rng.gen_range(-10.0..10.0);
        let pts = [
            (coord(&mut rng), coord(&mut rng)),
            (coord(&mut rng), coord(&mut rng)),
            (coord(&mut rng), coord(&mut rng)),
        ];
        if min_angle(&pts) < separation || area(&pts).abs() < separation {
            continue;
        }
        let fv = |v: f64| Scalar::float_with_tol(v, tol);
        let t = Triangle::new(
            PPoint::from_cartesian(fv(pts[0].0), fv(pts[0].1)),
            PPoint::from_cartesian(fv(pts[1].0), fv(pts[1].1)),
            PPoint::from_cartesian(fv(pts[2].0), fv(pts[2].1)),
        );
        if let Ok(t) = t {
            out.push(t);
        }
    }
    out
}

fn area(p: &[(f64, f64); 3]) -> f64 {
    0.5 * ((p[1].0 - p[0].0) * (p[2].1 - p[0].1) - (p[2].0 - p[0].0) * (p[1].1 - p[0].1))
}

fn min_angle(p: &[(f64, f64); 3]) -> f64 {
    let mut min = f64::MAX;
    for i in 0..3 {
        let a = p[i];
        let b = p[(i + 1) % 3];
        let c = p[(i + 2) % 3];
        let u = (b.0 - a.0, b.1 - a.1);
        let v = (c.0 - a.0, c.1 - a.1);
        let dot = u.0 * v.0 + u.1 * v.1;
        let nu = (u.0 * u.0 + u.1 * u.1).sqrt();
        let nv = (v.0 * v.0 + v.1 * v.1).sqrt();
        if nu == 0.0 || nv == 0.0 {
            return 0.0;
        }
        min = min.min((dot / (nu * nv)).clamp(-1.0, 1.0).acos());
    }
    min
}

/// Deterministic per-(check, fixture) RNG for constructed sub-fixtures.
pub fn rng_for(seed: u64, check_id: &str, index: usize) -> ChaCha8Rng {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in check_id.bytes() {
        h ^= b as u64;
        h = h.wrapping_mul(0x1000_0000_01b3);
    }
    ChaCha8Rng::seed_from_u64(seed ^ h ^ ((index as u64) << 32))
}

/// Small random rational in `[−max_num, max_num] / [1, max_den]`, never
/// equal (as a value) to any of the excluded integers.
pub fn random_rational(
    rng: &mut ChaCha8Rng,
    max_num: i64,
    max_den: i64,
    exclude: &[i64],
) -> Scalar {
    loop {
        let num = rng.gen_range(-max_num..=max_num);
        let den = rng.gen_range(1..=max_den);
        let s = Scalar::ratio(num, den);
        if exclude.iter().any(|e| s == Scalar::from_int(*e)) {
            continue;
        }
        return s;
    }
}

/// Random lattice point in a box, excluding a set of forbidden points.
pub fn random_lattice_point(rng: &mut ChaCha8Rng, span: i64, forbidden: &[&PPoint]) -> PPoint {
    loop {
        let p = PPoint::at(rng.gen_range(-span..=span), rng.gen_range(-span..=span));
        if forbidden.iter().all(|f| *f != &p) {
            return p;
        }
    }
}
