//! The Brocard apparatus: the two Brocard points from adjunct circles, the
//! Brocard angle, the Brocard circle and the first Brocard triangle.

use crate::construct::{perpendicular_bisector, perpendicular_through, project_onto_line};
use crate::error::{GeomError, Result};
use crate::metric::{radical_axis, second_intersection, Circle};
use crate::projective::{meet, PPoint};
use crate::scalar::Scalar;
use crate::triangle::centers::named_center;
use crate::triangle::{CenterId, Triangle, Vertex};

/// Circle through `p` and `q`, tangent at `q` to the line `qr`: its center
/// is the meet of the perpendicular to `qr` at `q` with the perpendicular
/// bisector of `(p, q)`.
fn adjunct_circle(p: &PPoint, q: &PPoint, r: &PPoint) -> Result<Circle> {
    let tangent_side = crate::projective::join(q, r)?;
    let center = meet(
        &perpendicular_through(&tangent_side, q)?,
        &perpendicular_bisector(p, q)?,
    )?;
    let r2 = crate::construct::distance2(&center, q)?;
    Circle::from_center_radius2(&center, r2)
}

/// Second common point of two circles sharing the known point `common`.
fn second_common_point(c1: &Circle, c2: &Circle, common: &PPoint) -> Result<PPoint> {
    let axis = radical_axis(c1, c2)?;
    second_intersection(c1, common, &axis)
}

/// The two Brocard points `(Ω, Ω′)`: second intersections of adjunct-circle
/// families. Rational whenever the triangle is (the circles share a vertex).
pub fn brocard_points(t: &Triangle) -> Result<(PPoint, PPoint)> {
    let (a, b, c) = (t.a(), t.b(), t.c());
    // Ω: circle through A,B tangent at B to BC, and through B,C tangent at
    // C to CA; they share the vertex B (the first) / C-side family meets at
    // B as well through the tangency chain.
    let ab = adjunct_circle(a, b, c)?; // through A,B tangent at B to BC
    let bc = adjunct_circle(b, c, a)?; // through B,C tangent at C to CA
    let omega = second_common_point(&ab, &bc, b)?;

    // Ω′: circle through B,A tangent at A to AC, and through C,B tangent at
    // B to BA; they share the vertex B.
    let ba = adjunct_circle(b, a, c)?; // through B,A tangent at A to AC
    let cb = adjunct_circle(c, b, a)?; // through C,B tangent at B to BA
    let omega2 = second_common_point(&ba, &cb, b)?;
    Ok((omega, omega2))
}

/// `cot ω = (a² + b² + c²) / (4S)`, exact.
pub fn brocard_angle_cot(t: &Triangle) -> Scalar {
    t.metrics().cot_omega.clone()
}

/// Circle on the diameter joining the symmedian point and the circumcenter.
pub fn brocard_circle(t: &Triangle) -> Result<Circle> {
    let k = named_center(t, &CenterId::Symmedian)?;
    let o = named_center(t, &CenterId::Circumcenter)?;
    let center = crate::construct::midpoint(&k, &o)?;
    let r2 = crate::construct::distance2(&center, &k)?;
    Circle::from_center_radius2(&center, r2).map_err(|_| GeomError::NotDefined)
}

/// First Brocard triangle: projections of the symmedian point onto the
/// perpendicular bisectors of the sides, indexed by the faced vertex.
pub fn first_brocard_triangle(t: &Triangle) -> Result<Triangle> {
    let k = named_center(t, &CenterId::Symmedian)?;
    let mut verts = Vec::with_capacity(3);
    for v in Vertex::ALL {
        verts.push(project_onto_line(&k, &t.side_perpendicular_bisector(v))?);
    }
    Triangle::new(verts[0].clone(), verts[1].clone(), verts[2].clone())
        .map_err(|_| GeomError::DegenerateDerived)
}
