//! Real circles stored by their equation coefficients, the power of a point,
//! radical axes and centers, and rational circle intersections.
//!
//! A circle is `x² + y² + Dx + Ey + F = 0`. Storing `(D, E, F)` keeps the
//! exact backend closed: the center and radius² are rational even when the
//! radius itself is not.

use crate::construct::distance2;
use crate::error::{GeomError, Result};
#[cfg(test)]
use crate::projective::join;
use crate::projective::{is_collinear, meet, PLine, PPoint};
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq)]
pub struct Circle {
    d: Scalar,
    e: Scalar,
    f: Scalar,
}

impl Circle {
    /// Build from equation coefficients; rejects point circles and imaginary
    /// circles (radius² must be positive).
    pub fn from_coeffs(d: Scalar, e: Scalar, f: Scalar) -> Result<Circle> {
        let c = Circle { d, e, f };
        if !c.radius2().is_positive() {
            return Err(GeomError::NotARealCircle);
        }
        Ok(c)
    }

    pub fn from_center_radius2(center: &PPoint, radius2: Scalar) -> Result<Circle> {
        let (cx, cy) = center.xy()?;
        let two = Scalar::from_int(2);
        let f = cx.squared() + cy.squared() - radius2;
        Circle::from_coeffs(-(two.clone() * cx), -(two * cy), f)
    }

    pub fn coeffs(&self) -> [Scalar; 3] {
        [self.d.clone(), self.e.clone(), self.f.clone()]
    }

    pub fn center(&self) -> PPoint {
        let half = Scalar::ratio(-1, 2);
        PPoint::from_cartesian(half.clone() * self.d.clone(), half * self.e.clone())
    }

    pub fn radius2(&self) -> Scalar {
        let quarter = Scalar::ratio(1, 4);
        quarter * (self.d.squared() + self.e.squared()) - self.f.clone()
    }

    /// The circle polynomial evaluated at a finite point; this equals the
    /// power of the point.
    pub fn eval(&self, p: &PPoint) -> Result<Scalar> {
        let (x, y) = p.xy()?;
        Ok(x.squared() + y.squared() + self.d.clone() * x + self.e.clone() * y + self.f.clone())
    }

    pub fn contains(&self, p: &PPoint) -> bool {
        match self.eval(p) {
            Ok(v) => v.is_zero(),
            Err(_) => false,
        }
    }
}

/// The unique circle through three finite non-collinear points.
pub fn circle_through(p: &PPoint, q: &PPoint, r: &PPoint) -> Result<Circle> {
    if is_collinear(p, q, r) {
        return Err(GeomError::CollinearPoints);
    }
    // Subtracting the circle equation at two points gives a linear equation
    // in (D, E, F); two such differences and one evaluation solve the system.
    // Equivalently: the center is the perpendicular-bisector meet.
    let center = meet(
        &crate::construct::perpendicular_bisector(p, q)?,
        &crate::construct::perpendicular_bisector(p, r)?,
    )?;
    let r2 = distance2(&center, p)?;
    Circle::from_center_radius2(&center, r2)
}

/// `d² − r²`: negative inside, zero on the circle, positive outside.
pub fn power_of_point(p: &PPoint, c: &Circle) -> Result<Scalar> {
    c.eval(p)
}

/// The line of points with equal power with respect to both circles.
pub fn radical_axis(c1: &Circle, c2: &Circle) -> Result<PLine> {
    let [d1, e1, f1] = c1.coeffs();
    let [d2, e2, f2] = c2.coeffs();
    let u = d1 - d2;
    let v = e1 - e2;
    if u.is_zero() && v.is_zero() {
        return Err(GeomError::Concentric);
    }
    PLine::from_coeffs(u, v, f1 - f2)
}

/// The unique point with equal power with respect to all three circles.
pub fn radical_center(c1: &Circle, c2: &Circle, c3: &Circle) -> Result<PPoint> {
    let a12 = radical_axis(c1, c2)?;
    let a13 = radical_axis(c1, c3)?;
    if a12 == a13 {
        // Coaxial circles: the locus is the whole common axis.
        return Err(GeomError::NonUnique);
    }
    if is_collinear(&c1.center(), &c2.center(), &c3.center()) {
        return Err(GeomError::CollinearCenters);
    }
    meet(&a12, &a13)
}

/// Second intersection of `l` with `c`, given the known intersection `p` on
/// both. Factoring out the known root keeps the result rational. A tangent
/// line returns `p` itself.
pub fn second_intersection(c: &Circle, p: &PPoint, l: &PLine) -> Result<PPoint> {
    if !c.contains(p) {
        return Err(GeomError::NotOnCircle);
    }
    if !l.contains(p) {
        return Err(GeomError::NotIncident);
    }
    let (px, py) = p.xy()?;
    let [u, v, _] = l.coeffs();
    // direction of l
    let (dx, dy) = (v, -u);
    // Substitute (px + t dx, py + t dy) into the circle equation. The
    // constant term vanishes because p is on c, leaving t (α t + β) = 0.
    let alpha = dx.squared() + dy.squared();
    let two = Scalar::from_int(2);
    let beta = two.clone() * (px.clone() * dx.clone() + py.clone() * dy.clone())
        + c.d.clone() * dx.clone()
        + c.e.clone() * dy.clone();
    let t = (-beta).checked_div(&alpha)?;
    Ok(PPoint::from_cartesian(px + t.clone() * dx, py + t * dy))
}

/// Tangent line to `c` at a point of `c` (the polar of a point on the
/// circle).
pub fn tangent_line_at(c: &Circle, p: &PPoint) -> Result<PLine> {
    if !c.contains(p) {
        return Err(GeomError::NotOnCircle);
    }
    polar_line(c, p)
}

/// Polar line of an arbitrary finite point (used by the transform layer; for
/// points on the circle it is the tangent).
pub(crate) fn polar_line(c: &Circle, p: &PPoint) -> Result<PLine> {
    let (x0, y0) = p.xy()?;
    let half = Scalar::ratio(1, 2);
    let u = x0.clone() + half.clone() * c.d.clone();
    let v = y0.clone() + half.clone() * c.e.clone();
    let t = half * (c.d.clone() * x0 + c.e.clone() * y0) + c.f.clone();
    PLine::from_coeffs(u, v, t).map_err(|_| GeomError::AtCenter)
}

/// Half the determinant convention: positive for a counterclockwise triple.
pub fn signed_area(a: &PPoint, b: &PPoint, c: &PPoint) -> Result<Scalar> {
    let (ax, ay) = a.xy()?;
    let (bx, by) = b.xy()?;
    let (cx, cy) = c.xy()?;
    let half = Scalar::ratio(1, 2);
    Ok(half
        * ((bx.clone() - ax.clone()) * (cy.clone() - ay.clone())
            - (cx.clone() - ax) * (by.clone() - ay)))
}

/// Both intersection points of a line with a circle (float backend only —
/// fresh square roots leave the rational field).
pub fn line_circle_intersections_float(c: &Circle, l: &PLine) -> Result<Vec<PPoint>> {
    let [u, v, t] = l.coeffs();
    let (u, v, t) = (u.to_f64(), v.to_f64(), t.to_f64());
    let [d, e, f] = c.coeffs();
    let (d, e, f) = (d.to_f64(), e.to_f64(), f.to_f64());
    let n2 = u * u + v * v;
    if n2 == 0.0 {
        return Err(GeomError::AtInfinity);
    }
    // Closest point to the center on the line, then offset along direction.
    let (cx, cy) = (-d / 2.0, -e / 2.0);
    let s = (u * cx + v * cy + t) / n2;
    let (px, py) = (cx - s * u, cy - s * v);
    let r2 = (d * d + e * e) / 4.0 - f;
    let h2 = r2 - s * s * n2;
    if h2 < 0.0 {
        return Ok(vec![]);
    }
    let h = (h2 / n2).sqrt();
    let (dx, dy) = (v, -u);
    let mk =
        |t: f64| PPoint::from_cartesian(Scalar::float(px + t * dx), Scalar::float(py + t * dy));
    if h == 0.0 {
        Ok(vec![mk(0.0)])
    } else {
        Ok(vec![mk(h), mk(-h)])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(x: i64, y: i64) -> PPoint {
        PPoint::at(x, y)
    }

    fn sc(n: i64) -> Scalar {
        Scalar::from_int(n)
    }

    fn frac(n: i64, d: i64) -> Scalar {
        Scalar::ratio(n, d)
    }

    #[test]
    fn circle_through_fixture_vertices() {
        // 3-4-5 right triangle A(0,3) B(0,0) C(4,0)
        let c = circle_through(&pt(0, 3), &pt(0, 0), &pt(4, 0)).unwrap();
        assert_eq!(c.coeffs(), [sc(-4), sc(-3), sc(0)]);
        assert_eq!(c.center(), PPoint::from_cartesian(sc(2), frac(3, 2)));
        assert_eq!(c.radius2(), frac(25, 4));

        let unit = circle_through(&pt(1, 0), &pt(-1, 0), &pt(0, 1)).unwrap();
        assert_eq!(unit.coeffs(), [sc(0), sc(0), sc(-1)]);

        // 13-14-15 triangle A(5,12) B(0,0) C(14,0)
        let c2 = circle_through(&pt(5, 12), &pt(0, 0), &pt(14, 0)).unwrap();
        assert_eq!(c2.center(), PPoint::from_cartesian(sc(7), frac(33, 8)));
        assert_eq!(c2.radius2(), frac(4225, 64));

        assert_eq!(
            circle_through(&pt(0, 0), &pt(1, 1), &pt(2, 2)),
            Err(GeomError::CollinearPoints)
        );
    }

    #[test]
    fn power_of_point_values() {
        let unit = Circle::from_coeffs(sc(0), sc(0), sc(-1)).unwrap();
        assert_eq!(power_of_point(&pt(3, 0), &unit).unwrap(), sc(8));
        assert_eq!(power_of_point(&pt(1, 0), &unit).unwrap(), sc(0));
        assert_eq!(power_of_point(&pt(0, 0), &unit).unwrap(), sc(-1));
    }

    #[test]
    fn radical_axis_cases() {
        let c1 = Circle::from_coeffs(sc(0), sc(0), sc(-1)).unwrap();
        // (x−3)² + y² = 4  ->  x² + y² − 6x + 5 = 0
        let c2 = Circle::from_coeffs(sc(-6), sc(0), sc(5)).unwrap();
        let ax = radical_axis(&c1, &c2).unwrap();
        assert!(ax.contains(&pt(1, 0)));
        assert!(ax.contains(&pt(1, 5)));

        // congruent circles: perpendicular bisector of the center segment
        let c3 = Circle::from_coeffs(sc(-6), sc(0), sc(8)).unwrap(); // center (3,0), r=1
        let ax = radical_axis(&c1, &c3).unwrap();
        let bisector =
            crate::construct::perpendicular_bisector(&c1.center(), &c3.center()).unwrap();
        assert_eq!(ax, bisector);

        // tangent circles share the tangent at the contact point
        let c4 = Circle::from_coeffs(sc(-4), sc(0), sc(3)).unwrap(); // center (2,0), r=1
        let ax = radical_axis(&c1, &c4).unwrap();
        assert!(ax.contains(&pt(1, 0)));
        assert!(ax.contains(&pt(1, 9)));

        assert_eq!(
            radical_axis(
                &c1,
                &Circle::from_coeffs(sc(0), sc(0), frac(-1, 4)).unwrap()
            ),
            Err(GeomError::Concentric)
        );
    }

    #[test]
    fn radical_center_cases() {
        let unit_at = |x: i64, y: i64| Circle::from_center_radius2(&pt(x, y), sc(1)).unwrap();
        let p = radical_center(&unit_at(0, 0), &unit_at(4, 0), &unit_at(0, 4)).unwrap();
        assert_eq!(p, pt(2, 2));
        for c in [unit_at(0, 0), unit_at(4, 0), unit_at(0, 4)] {
            assert_eq!(power_of_point(&p, &c).unwrap(), sc(7));
        }

        assert_eq!(
            radical_center(&unit_at(0, 0), &unit_at(4, 0), &unit_at(8, 0)),
            Err(GeomError::CollinearCenters)
        );

        // three circles through two common points: coaxial -> NonUnique
        let through = |x: i64, y: i64| circle_through(&pt(0, 1), &pt(0, -1), &pt(x, y)).unwrap();
        assert_eq!(
            radical_center(&through(1, 1), &through(2, 1), &through(3, 1)),
            Err(GeomError::NonUnique)
        );
    }

    #[test]
    fn second_intersection_cases() {
        let unit = Circle::from_coeffs(sc(0), sc(0), sc(-1)).unwrap();
        let xaxis = join(&pt(1, 0), &pt(-1, 0)).unwrap();
        assert_eq!(
            second_intersection(&unit, &pt(1, 0), &xaxis).unwrap(),
            pt(-1, 0)
        );

        // tangent: returns the point itself
        let tangent = join(&pt(1, 0), &pt(1, 1)).unwrap();
        assert_eq!(
            second_intersection(&unit, &pt(1, 0), &tangent).unwrap(),
            pt(1, 0)
        );

        // F1 circumcircle, chord from A(0,3) through the incenter (1,1):
        // lands on the arc midpoint of BC
        let circ = circle_through(&pt(0, 3), &pt(0, 0), &pt(4, 0)).unwrap();
        let l = join(&pt(0, 3), &pt(1, 1)).unwrap();
        assert_eq!(
            second_intersection(&circ, &pt(0, 3), &l).unwrap(),
            pt(2, -1)
        );

        assert_eq!(
            second_intersection(&unit, &pt(2, 0), &xaxis),
            Err(GeomError::NotOnCircle)
        );
        let other = join(&pt(1, 0), &pt(2, 5)).unwrap();
        assert_eq!(
            second_intersection(&unit, &pt(-1, 0), &other),
            Err(GeomError::NotIncident)
        );
    }

    #[test]
    fn second_intersection_is_an_involution() {
        let circ = circle_through(&pt(0, 3), &pt(0, 0), &pt(4, 0)).unwrap();
        let l = join(&pt(0, 3), &pt(1, 1)).unwrap();
        let q = second_intersection(&circ, &pt(0, 3), &l).unwrap();
        let back = second_intersection(&circ, &q, &l).unwrap();
        assert_eq!(back, pt(0, 3));
    }

    #[test]
    fn tangents_at_fixture_vertices() {
        let unit = Circle::from_coeffs(sc(0), sc(0), sc(-1)).unwrap();
        let t = tangent_line_at(&unit, &pt(1, 0)).unwrap();
        assert!(t.contains(&pt(1, 5)) && t.contains(&pt(1, -5)));

        let circ = circle_through(&pt(0, 3), &pt(0, 0), &pt(4, 0)).unwrap();
        // at B(0,0): 4x + 3y = 0
        let tb = tangent_line_at(&circ, &pt(0, 0)).unwrap();
        assert!(tb.contains(&pt(3, -4)));
        // at C(4,0): 4x − 3y = 16
        let tc = tangent_line_at(&circ, &pt(4, 0)).unwrap();
        assert!(tc.contains(&pt(4, 0)) && tc.contains(&pt(7, 4)));
    }

    #[test]
    fn signed_area_convention() {
        // F1 as listed (A, B, C) runs counterclockwise
        let s = signed_area(&pt(0, 3), &pt(0, 0), &pt(4, 0)).unwrap();
        assert_eq!(s, sc(6));
        let s2 = signed_area(&pt(0, 0), &pt(0, 3), &pt(4, 0)).unwrap();
        assert_eq!(s2, sc(-6));
        assert!(signed_area(&pt(0, 0), &pt(1, 1), &pt(2, 2))
            .unwrap()
            .is_zero());
    }

    #[test]
    fn radical_axis_perpendicular_to_center_line() {
        let c1 = Circle::from_center_radius2(&pt(0, 1), sc(4)).unwrap();
        let c2 = Circle::from_center_radius2(&pt(5, 3), sc(9)).unwrap();
        let ax = radical_axis(&c1, &c2).unwrap();
        let [u, v, _] = ax.coeffs();
        let (c1c, c2c) = (c1.center(), c2.center());
        let (x1, y1) = c1c.xy().unwrap();
        let (x2, y2) = c2c.xy().unwrap();
        // direction of axis is (v, −u); dot with center direction = 0
        let dot = v * (x2 - x1) + (-u) * (y2 - y1);
        assert!(dot.is_zero());
    }
}
