//! Shared construction helpers for registry checks: randomized perspective
//! pairs, rational circle points, and guarded random picks.

use homolog_core::error::Result as GeomResult;
use homolog_core::homology::scaled_copy;
use homolog_core::metric::{second_intersection, Circle};
use homolog_core::projective::{join, PLine, PPoint};
use homolog_core::scalar::Scalar;
use homolog_core::triangle::{Triangle, Vertex};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::fixtures::{random_lattice_point, random_rational};

/// A random point avoiding the triangle's vertices and side lines (and
/// optionally its circumcircle).
pub fn point_off_sides(rng: &mut ChaCha8Rng, t: &Triangle, avoid_circumcircle: bool) -> PPoint {
    let circ = t.circumcircle();
    loop {
        let num = |rng: &mut ChaCha8Rng| rng.gen_range(-60i64..=60);
        let den = rng.gen_range(1i64..=4);
        let p = PPoint::from_cartesian(Scalar::ratio(num(rng), den), Scalar::ratio(num(rng), den));
        if Vertex::ALL.iter().any(|v| t.vertex(*v) == &p) {
            continue;
        }
        if Vertex::ALL.iter().any(|v| t.side_line(*v).contains(&p)) {
            continue;
        }
        if avoid_circumcircle && circ.contains(&p) {
            continue;
        }
        return p;
    }
}

/// Three pairwise-distinct nonzero ratios for a per-vertex scaling.
pub fn distinct_ratios(rng: &mut ChaCha8Rng) -> [Scalar; 3] {
    loop {
        let r: Vec<Scalar> = (0..3)
            .map(|_| random_rational(rng, 6, 3, &[0, 1]))
            .collect();
        if r[0] != r[1] && r[1] != r[2] && r[0] != r[2] {
            return [r[0].clone(), r[1].clone(), r[2].clone()];
        }
    }
}

/// A perspective copy of `t` about a random center with random per-vertex
/// ratios; returns the pair's center.
pub fn perspective_copy(rng: &mut ChaCha8Rng, t: &Triangle) -> (Triangle, PPoint) {
    loop {
        let center = point_off_sides(rng, t, false);
        let ratios = distinct_ratios(rng);
        if let Ok(copy) = scaled_copy(t, &center, ratios) {
            let distinct = Vertex::ALL.iter().all(|v| copy.vertex(*v) != t.vertex(*v));
            if distinct {
                return (copy, center);
            }
        }
    }
}

/// A random rational point on a circle reachable from a known rational
/// point: the second intersection of a random-slope chord.
pub fn circle_point_from(
    rng: &mut ChaCha8Rng,
    circle: &Circle,
    base: &PPoint,
) -> GeomResult<PPoint> {
    loop {
        let dx = random_rational(rng, 9, 4, &[]);
        let dy = random_rational(rng, 9, 4, &[]);
        let (bx, by) = base.xy()?;
        let other = PPoint::from_cartesian(bx + dx, by + dy);
        if &other == base {
            continue;
        }
        let chord = join(base, &other)?;
        let p = second_intersection(circle, base, &chord)?;
        if &p != base {
            return Ok(p);
        }
    }
}

/// `n` pairwise-distinct rational points on the circumcircle of `t`,
/// avoiding the vertices.
pub fn distinct_circle_points(
    rng: &mut ChaCha8Rng,
    t: &Triangle,
    n: usize,
) -> GeomResult<Vec<PPoint>> {
    let circle = t.circumcircle();
    let mut out: Vec<PPoint> = Vec::with_capacity(n);
    let mut guard = 0;
    while out.len() < n {
        guard += 1;
        if guard > 200 {
            // practically unreachable; distinct slopes give distinct points
            return Err(homolog_core::GeomError::NotDefined);
        }
        let p = circle_point_from(rng, &circle, t.a())?;
        if out.iter().all(|q| q != &p) && Vertex::ALL.iter().all(|v| t.vertex(*v) != &p) {
            out.push(p);
        }
    }
    Ok(out)
}

/// Sort points on a circle into cyclic order around its center.
pub fn cyclic_order(circle: &Circle, points: &mut [PPoint]) {
    let center = circle.center();
    let (cx, cy) = center.xy().expect("finite center");
    let (cx, cy) = (cx.to_f64(), cy.to_f64());
    points.sort_by(|p, q| {
        let ang = |p: &PPoint| {
            let (x, y) = p.xy().expect("finite circle point");
            (y.to_f64() - cy).atan2(x.to_f64() - cx)
        };
        ang(p).partial_cmp(&ang(q)).expect("finite angles")
    });
}

/// A random line that misses all three vertices of `t`.
pub fn transversal_line(rng: &mut ChaCha8Rng, t: &Triangle) -> PLine {
    loop {
        let p = random_lattice_point(rng, 25, &[]);
        let q = random_lattice_point(rng, 25, &[&p]);
        if p == q {
            continue;
        }
        let l = join(&p, &q).expect("distinct points");
        if Vertex::ALL.iter().all(|v| !l.contains(t.vertex(*v))) {
            return l;
        }
    }
}

/// Triangle from three lines with the `from_lines` vertex convention
/// (vertex i faces line i).
pub fn triangle_from_lines(la: &PLine, lb: &PLine, lc: &PLine) -> GeomResult<Triangle> {
    let a = homolog_core::projective::meet(lb, lc)?;
    let b = homolog_core::projective::meet(lc, la)?;
    let c = homolog_core::projective::meet(la, lb)?;
    Triangle::new(a, b, c)
}
