//! Euclidean straightedge constructions on points and lines: midpoints,
//! parallels, perpendiculars, projections and reflections. All of them are
//! rational, so the exact backend stays closed over them.

use crate::error::{GeomError, Result};
use crate::projective::{join, PLine, PPoint};
use crate::scalar::Scalar;

/// Affine combination `Σ wᵢ Pᵢ / Σ wᵢ` of finite points. A zero total weight
/// yields the direction `Σ wᵢ Pᵢ` at infinity.
pub fn lincomb(terms: &[(Scalar, &PPoint)]) -> Result<PPoint> {
    let mut sx = Scalar::zero();
    let mut sy = Scalar::zero();
    let mut sw = Scalar::zero();
    for (w, p) in terms {
        let (x, y) = p.xy()?;
        sx = sx + w.clone() * x;
        sy = sy + w.clone() * y;
        sw = sw + w.clone();
    }
    PPoint::from_homogeneous(sx, sy, sw)
}

pub fn midpoint(a: &PPoint, b: &PPoint) -> Result<PPoint> {
    lincomb(&[(Scalar::one(), a), (Scalar::one(), b)])
}

/// The point dividing `A → B` at parameter `t`: `A + t (B − A)`.
pub fn point_on_segment(a: &PPoint, b: &PPoint, t: Scalar) -> Result<PPoint> {
    lincomb(&[(Scalar::one() - t.clone(), a), (t, b)])
}

pub fn distance2(a: &PPoint, b: &PPoint) -> Result<Scalar> {
    let (ax, ay) = a.xy()?;
    let (bx, by) = b.xy()?;
    let dx = ax - bx;
    let dy = ay - by;
    Ok(dx.squared() + dy.squared())
}

pub fn translate(p: &PPoint, dx: &Scalar, dy: &Scalar) -> Result<PPoint> {
    let (x, y) = p.xy()?;
    Ok(PPoint::from_cartesian(x + dx.clone(), y + dy.clone()))
}

/// Parallel to `l` through `p` (finite line, finite point).
pub fn parallel_through(l: &PLine, p: &PPoint) -> Result<PLine> {
    if l.is_at_infinity() {
        return Err(GeomError::AtInfinity);
    }
    let [u, v, _] = l.coeffs();
    let (x, y) = p.xy()?;
    let t = -(u.clone() * x + v.clone() * y);
    PLine::from_coeffs(u, v, t)
}

/// Perpendicular to `l` through `p`.
pub fn perpendicular_through(l: &PLine, p: &PPoint) -> Result<PLine> {
    if l.is_at_infinity() {
        return Err(GeomError::AtInfinity);
    }
    let [u, v, _] = l.coeffs();
    let (x, y) = p.xy()?;
    // direction of l is (v, −u); the perpendicular has normal (v, −u)
    let t = -(v.clone() * x - u.clone() * y);
    PLine::from_coeffs(v, -u, t)
}

/// Perpendicular to the segment direction `a → b` through `p`.
pub fn perpendicular_to_segment_through(a: &PPoint, b: &PPoint, p: &PPoint) -> Result<PLine> {
    perpendicular_through(&join(a, b)?, p)
}

pub fn perpendicular_bisector(a: &PPoint, b: &PPoint) -> Result<PLine> {
    perpendicular_to_segment_through(a, b, &midpoint(a, b)?)
}

/// Orthogonal projection of `p` onto `l`.
pub fn project_onto_line(p: &PPoint, l: &PLine) -> Result<PPoint> {
    let [u, v, t] = l.coeffs();
    let (x, y) = p.xy()?;
    let n2 = u.squared() + v.squared();
    if n2.is_zero() {
        return Err(GeomError::AtInfinity);
    }
    let s = (u.clone() * x.clone() + v.clone() * y.clone() + t).checked_div(&n2)?;
    Ok(PPoint::from_cartesian(x - s.clone() * u, y - s * v))
}

/// Reflection of `p` across `l`.
pub fn reflect_point_over_line(p: &PPoint, l: &PLine) -> Result<PPoint> {
    let foot = project_onto_line(p, l)?;
    lincomb(&[(Scalar::from_int(2), &foot), (Scalar::from_int(-1), p)])
}

/// Reflection of `p` through the center `c`.
pub fn reflect_point_through(p: &PPoint, c: &PPoint) -> Result<PPoint> {
    lincomb(&[(Scalar::from_int(2), c), (Scalar::from_int(-1), p)])
}

/// Two distinct finite points spanning a finite line.
pub fn points_on_line(l: &PLine) -> Result<[PPoint; 2]> {
    if l.is_at_infinity() {
        return Err(GeomError::AtInfinity);
    }
    let [u, v, t] = l.coeffs();
    let n2 = u.squared() + v.squared();
    // Foot of the perpendicular from the origin, then one step along the
    // direction (v, −u).
    let px = -(t.clone() * u.clone()).checked_div(&n2)?;
    let py = -(t * v.clone()).checked_div(&n2)?;
    let p0 = PPoint::from_cartesian(px.clone(), py.clone());
    let p1 = PPoint::from_cartesian(px + v, py - u);
    Ok([p0, p1])
}

/// Reflection of the line `m` across the line `axis`.
pub fn reflect_line_over_line(m: &PLine, axis: &PLine) -> Result<PLine> {
    let [p0, p1] = points_on_line(m)?;
    let q0 = reflect_point_over_line(&p0, axis)?;
    let q1 = reflect_point_over_line(&p1, axis)?;
    join(&q0, &q1)
}

/// Dot product of segment directions `a→b` and `c→d`; zero means
/// perpendicular.
pub fn segments_dot(a: &PPoint, b: &PPoint, c: &PPoint, d: &PPoint) -> Result<Scalar> {
    let (ax, ay) = a.xy()?;
    let (bx, by) = b.xy()?;
    let (cx, cy) = c.xy()?;
    let (dx, dy) = d.xy()?;
    Ok((bx - ax.clone()) * (dx - cx.clone()) + (by - ay.clone()) * (dy - cy.clone()))
}
