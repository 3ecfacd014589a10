//! The reference triangle: metrics, barycentric coordinates, attached
//! circles, named centers, cevian machinery and the Brocard apparatus.

mod brocard;
mod centers;
mod cevian;
mod identities;

pub use brocard::{brocard_angle_cot, brocard_circle, brocard_points, first_brocard_triangle};
pub use centers::{named_center, CenterId};
pub use cevian::{
    anticevian_triangle, ceva_product, cevian_traces, isogonal_conjugate, isotomic_conjugate,
    isotomic_of_side_point, menelaus_product, trilinear_polar, trilinear_pole,
};
pub use identities::{annex_identity_ids, evaluate_annex_identity, IdentityId, IdentityStatus};

use crate::construct::{distance2, lincomb, midpoint, perpendicular_through};
use crate::error::{GeomError, Result};
use crate::metric::{circle_through, signed_area, Circle};
use crate::projective::{join, meet, PLine, PPoint};
use crate::scalar::Scalar;

/// Vertex selector; `A` faces side `a = BC`, and cyclically.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Vertex {
    A,
    B,
    C,
}

impl Vertex {
    pub const ALL: [Vertex; 3] = [Vertex::A, Vertex::B, Vertex::C];

    pub fn index(self) -> usize {
        match self {
            Vertex::A => 0,
            Vertex::B => 1,
            Vertex::C => 2,
        }
    }

    /// The other two vertices in cyclic order (A -> (B, C), B -> (C, A), ...).
    pub fn others(self) -> (Vertex, Vertex) {
        match self {
            Vertex::A => (Vertex::B, Vertex::C),
            Vertex::B => (Vertex::C, Vertex::A),
            Vertex::C => (Vertex::A, Vertex::B),
        }
    }
}

/// Side lengths, semiperimeter, area and the attached radii of a triangle.
///
/// Squared side lengths are always exactly representable. The lengths
/// themselves are exact only when the squares are perfect squares of
/// rationals (guaranteed for the Heronian fixture class); otherwise they fall
/// back to the float backend and `sides_exact` is `false`.
#[derive(Debug, Clone)]
pub struct TriangleMetrics {
    pub a2: Scalar,
    pub b2: Scalar,
    pub c2: Scalar,
    pub a: Scalar,
    pub b: Scalar,
    pub c: Scalar,
    pub sides_exact: bool,
    /// Semiperimeter.
    pub p: Scalar,
    /// Unsigned area.
    pub area: Scalar,
    /// Inradius.
    pub r: Scalar,
    /// Circumradius.
    pub big_r: Scalar,
    pub r_a: Scalar,
    pub r_b: Scalar,
    pub r_c: Scalar,
    /// Cotangent of the Brocard angle: `(a² + b² + c²) / (4S)`.
    pub cot_omega: Scalar,
}

impl TriangleMetrics {
    pub fn side2(&self, v: Vertex) -> &Scalar {
        match v {
            Vertex::A => &self.a2,
            Vertex::B => &self.b2,
            Vertex::C => &self.c2,
        }
    }

    pub fn side(&self, v: Vertex) -> &Scalar {
        match v {
            Vertex::A => &self.a,
            Vertex::B => &self.b,
            Vertex::C => &self.c,
        }
    }

    pub fn exradius(&self, v: Vertex) -> &Scalar {
        match v {
            Vertex::A => &self.r_a,
            Vertex::B => &self.r_b,
            Vertex::C => &self.r_c,
        }
    }

    pub fn is_isosceles(&self) -> bool {
        self.a2 == self.b2 || self.b2 == self.c2 || self.c2 == self.a2
    }

    pub fn is_right(&self) -> bool {
        let sum_ab = self.a2.clone() + self.b2.clone();
        let sum_bc = self.b2.clone() + self.c2.clone();
        let sum_ca = self.c2.clone() + self.a2.clone();
        sum_ab == self.c2 || sum_bc == self.a2 || sum_ca == self.b2
    }
}

/// Ordered vertex triple with eagerly computed metrics.
#[derive(Debug, Clone)]
pub struct Triangle {
    vertices: [PPoint; 3],
    metrics: TriangleMetrics,
}

impl PartialEq for Triangle {
    /// Ordered vertex equality; the cached metrics follow from the vertices.
    fn eq(&self, other: &Self) -> bool {
        self.vertices == other.vertices
    }
}

impl Triangle {
    pub fn new(a: PPoint, b: PPoint, c: PPoint) -> Result<Triangle> {
        if !(a.is_finite() && b.is_finite() && c.is_finite()) {
            return Err(GeomError::AtInfinity);
        }
        let s = signed_area(&a, &b, &c)?;
        if s.is_zero() {
            return Err(GeomError::Degenerate);
        }
        let metrics = compute_metrics(&a, &b, &c, &s)?;
        Ok(Triangle {
            vertices: [a, b, c],
            metrics,
        })
    }

    pub fn from_coords(coords: [(i64, i64); 3]) -> Result<Triangle> {
        Triangle::new(
            PPoint::at(coords[0].0, coords[0].1),
            PPoint::at(coords[1].0, coords[1].1),
            PPoint::at(coords[2].0, coords[2].1),
        )
    }

    pub fn a(&self) -> &PPoint {
        &self.vertices[0]
    }

    pub fn b(&self) -> &PPoint {
        &self.vertices[1]
    }

    pub fn c(&self) -> &PPoint {
        &self.vertices[2]
    }

    pub fn vertices(&self) -> &[PPoint; 3] {
        &self.vertices
    }

    pub fn vertex(&self, v: Vertex) -> &PPoint {
        &self.vertices[v.index()]
    }

    pub fn metrics(&self) -> &TriangleMetrics {
        &self.metrics
    }

    /// The side line opposite `v`.
    pub fn side_line(&self, v: Vertex) -> PLine {
        let (p, q) = v.others();
        join(self.vertex(p), self.vertex(q)).expect("triangle vertices are distinct")
    }

    pub fn side_midpoint(&self, v: Vertex) -> PPoint {
        let (p, q) = v.others();
        midpoint(self.vertex(p), self.vertex(q)).expect("finite vertices")
    }

    pub fn signed_area(&self) -> Scalar {
        signed_area(self.a(), self.b(), self.c()).expect("finite vertices")
    }

    /// Reorder or re-orient the vertex triple.
    pub fn permuted(&self, order: [Vertex; 3]) -> Triangle {
        Triangle::new(
            self.vertex(order[0]).clone(),
            self.vertex(order[1]).clone(),
            self.vertex(order[2]).clone(),
        )
        .expect("permutation preserves non-degeneracy")
    }

    pub fn circumcircle(&self) -> Circle {
        circle_through(self.a(), self.b(), self.c()).expect("non-degenerate triangle")
    }

    pub fn circumcenter(&self) -> PPoint {
        self.circumcircle().center()
    }

    /// Incircle; exact only when the side lengths are (Heronian placement).
    pub fn incircle(&self) -> Result<Circle> {
        let i = named_center(self, &CenterId::Incenter)?;
        let m = self.metrics();
        let r2 = m.r.squared();
        Circle::from_center_radius2(&i, r2)
    }

    /// Excenter opposite `v`, by intersecting an internal and an external
    /// bisector (the external bisector is the perpendicular to the internal
    /// one at its vertex).
    pub fn excenter(&self, v: Vertex) -> Result<PPoint> {
        let (p, _) = v.others();
        let internal_v = self.internal_bisector_line(v)?;
        let internal_p = self.internal_bisector_line(p)?;
        let external_p = perpendicular_through(&internal_p, self.vertex(p))?;
        meet(&internal_v, &external_p)
    }

    pub fn excircle(&self, v: Vertex) -> Result<Circle> {
        let center = self.excenter(v)?;
        let r2 = self.metrics().exradius(v).squared();
        Circle::from_center_radius2(&center, r2)
    }

    /// Internal bisector from `v` (through the foot dividing the opposite
    /// side in the ratio of the adjacent sides).
    pub fn internal_bisector_line(&self, v: Vertex) -> Result<PLine> {
        let (p, q) = v.others();
        let m = self.metrics();
        // From A the foot F on BC satisfies BF/FC = c/b, i.e.
        // F = (bB + cC)/(b + c): each vertex is weighted by its own
        // opposite side.
        let wp = m.side(p).clone();
        let wq = m.side(q).clone();
        let foot = lincomb(&[(wp, self.vertex(p)), (wq, self.vertex(q))])?;
        join(self.vertex(v), &foot)
    }

    pub fn external_bisector_line(&self, v: Vertex) -> Result<PLine> {
        perpendicular_through(&self.internal_bisector_line(v)?, self.vertex(v))
    }

    /// Median line from `v`.
    pub fn median_line(&self, v: Vertex) -> PLine {
        join(self.vertex(v), &self.side_midpoint(v)).expect("vertex is off the opposite side")
    }

    /// Altitude line from `v`.
    pub fn altitude_line(&self, v: Vertex) -> PLine {
        perpendicular_through(&self.side_line(v), self.vertex(v)).expect("finite side line")
    }

    /// Perpendicular bisector of the side opposite `v`.
    pub fn side_perpendicular_bisector(&self, v: Vertex) -> PLine {
        let (p, q) = v.others();
        crate::construct::perpendicular_bisector(self.vertex(p), self.vertex(q))
            .expect("distinct vertices")
    }

    /// Symmedian from `v`: foot divides the opposite side `(P, Q)` in the
    /// squared side ratio.
    pub fn symmedian_line(&self, v: Vertex) -> Result<PLine> {
        let (p, q) = v.others();
        let m = self.metrics();
        let wp = m.side2(p).clone();
        let wq = m.side2(q).clone();
        let foot = lincomb(&[(wp, self.vertex(p)), (wq, self.vertex(q))])?;
        join(self.vertex(v), &foot)
    }

    /// Contact point of the incircle on the side opposite `v`: at distance
    /// `p − side(next)` from the first of the other two vertices.
    pub fn incircle_contact(&self, v: Vertex) -> Result<PPoint> {
        let (pv, qv) = v.others();
        let m = self.metrics();
        // e.g. on BC: BCa = p − b, CCa = p − c
        let w_p = m.p.clone() - m.side(qv).clone();
        let w_q = m.p.clone() - m.side(pv).clone();
        lincomb(&[(w_p, self.vertex(pv)), (w_q, self.vertex(qv))])
    }

    /// Contact point of the excircle opposite `v` with the side line
    /// opposite `v` (the isometric of the incircle contact).
    pub fn excircle_contact_on_side(&self, v: Vertex) -> Result<PPoint> {
        let (pv, qv) = v.others();
        let m = self.metrics();
        // e.g. on BC: B Ja = p − c, C Ja = p − b
        let w_p = m.p.clone() - m.side(pv).clone();
        let w_q = m.p.clone() - m.side(qv).clone();
        lincomb(&[(w_p, self.vertex(pv)), (w_q, self.vertex(qv))])
    }

    pub fn to_float_backend(&self) -> Triangle {
        Triangle::new(
            self.a().to_float_backend(),
            self.b().to_float_backend(),
            self.c().to_float_backend(),
        )
        .expect("float image of a non-degenerate triangle")
    }
}

fn compute_metrics(a: &PPoint, b: &PPoint, c: &PPoint, signed: &Scalar) -> Result<TriangleMetrics> {
    let a2 = distance2(b, c)?;
    let b2 = distance2(c, a)?;
    let c2 = distance2(a, b)?;
    let side_a = a2.sqrt()?;
    let side_b = b2.sqrt()?;
    let side_c = c2.sqrt()?;
    let sides_exact = side_a.is_exact() && side_b.is_exact() && side_c.is_exact();
    let area = signed.abs();
    let two = Scalar::from_int(2);
    let four = Scalar::from_int(4);
    let p = (side_a.clone() + side_b.clone() + side_c.clone()).checked_div(&two)?;
    let r = area.checked_div(&p)?;
    let big_r = (side_a.clone() * side_b.clone() * side_c.clone())
        .checked_div(&(four.clone() * area.clone()))?;
    let r_a = area.checked_div(&(p.clone() - side_a.clone()))?;
    let r_b = area.checked_div(&(p.clone() - side_b.clone()))?;
    let r_c = area.checked_div(&(p.clone() - side_c.clone()))?;
    let cot_omega = (a2.clone() + b2.clone() + c2.clone()).checked_div(&(four * area.clone()))?;
    Ok(TriangleMetrics {
        a2,
        b2,
        c2,
        a: side_a,
        b: side_b,
        c: side_c,
        sides_exact,
        p,
        area,
        r,
        big_r,
        r_a,
        r_b,
        r_c,
        cot_omega,
    })
}

/// Homogeneous barycentric coordinates with respect to a triangle.
#[derive(Debug, Clone, PartialEq)]
pub struct BarycentricCoords {
    pub alpha: Scalar,
    pub beta: Scalar,
    pub gamma: Scalar,
}

impl BarycentricCoords {
    pub fn new(alpha: Scalar, beta: Scalar, gamma: Scalar) -> Result<BarycentricCoords> {
        if alpha.is_zero() && beta.is_zero() && gamma.is_zero() {
            return Err(GeomError::ZeroTriple);
        }
        Ok(BarycentricCoords { alpha, beta, gamma })
    }

    pub fn mass(&self) -> Scalar {
        self.alpha.clone() + self.beta.clone() + self.gamma.clone()
    }
}

/// Areal barycentric coordinates of a finite point: signed areas
/// `([PBC], [PCA], [PAB])`.
pub fn barycentric_of(t: &Triangle, p: &PPoint) -> Result<BarycentricCoords> {
    let alpha = signed_area(p, t.b(), t.c())?;
    let beta = signed_area(p, t.c(), t.a())?;
    let gamma = signed_area(p, t.a(), t.b())?;
    BarycentricCoords::new(alpha, beta, gamma)
}

/// Point realizing barycentric coordinates; zero total mass is an error.
pub fn barycentric_point(t: &Triangle, bc: &BarycentricCoords) -> Result<PPoint> {
    if bc.mass().is_zero() {
        return Err(GeomError::PointAtInfinity);
    }
    barycentric_point_projective(t, bc)
}

/// Point realizing barycentric coordinates, allowing a point at infinity for
/// zero total mass.
pub fn barycentric_point_projective(t: &Triangle, bc: &BarycentricCoords) -> Result<PPoint> {
    lincomb(&[
        (bc.alpha.clone(), t.a()),
        (bc.beta.clone(), t.b()),
        (bc.gamma.clone(), t.c()),
    ])
}


#[cfg(test)]
mod tests {
    use super::fixtures::{f1, f2};
    use super::*;

    fn frac(n: i64, d: i64) -> Scalar {
        Scalar::ratio(n, d)
    }

    fn sc(n: i64) -> Scalar {
        Scalar::from_int(n)
    }

    #[test]
    fn metrics_of_the_canonical_fixtures() {
        let m = f1().metrics().clone();
        assert!(m.sides_exact);
        assert_eq!(m.a, sc(4));
        assert_eq!(m.b, sc(5));
        assert_eq!(m.c, sc(3));
        assert_eq!(m.p, sc(6));
        assert_eq!(m.area, sc(6));
        assert_eq!(m.r, sc(1));
        assert_eq!(m.big_r, frac(5, 2));
        assert_eq!(m.cot_omega, frac(25, 12));
        assert!(m.is_right());
        assert!(!m.is_isosceles());

        let m = f2().metrics().clone();
        assert_eq!(m.p, sc(21));
        assert_eq!(m.area, sc(84));
        assert_eq!(m.r, sc(4));
        assert_eq!(m.big_r, frac(65, 8));
        assert_eq!(m.cot_omega, frac(295, 168));
        assert!(!m.is_right());
    }

    #[test]
    fn non_heronian_sides_fall_back_to_float() {
        // equilateral-ish lattice triangle: sides √2, √2, 2
        let t = Triangle::from_coords([(0, 0), (1, 1), (2, 0)]).unwrap();
        let m = t.metrics();
        assert!(!m.sides_exact);
        assert_eq!(m.a2, sc(2));
        assert_eq!(m.a, Scalar::float(2f64.sqrt()));
    }

    #[test]
    fn equilateral_cot_omega_is_sqrt3() {
        // side 2 equilateral, one irrational vertex -> float backend value
        let t = Triangle::new(
            PPoint::from_cartesian(Scalar::float(1.0), Scalar::float(3f64.sqrt())),
            PPoint::from_cartesian(Scalar::float(0.0), Scalar::float(0.0)),
            PPoint::from_cartesian(Scalar::float(2.0), Scalar::float(0.0)),
        )
        .unwrap();
        assert_eq!(t.metrics().cot_omega, Scalar::float(3f64.sqrt()));
    }

    #[test]
    fn degenerate_triangles_are_rejected() {
        assert_eq!(
            Triangle::from_coords([(0, 0), (1, 1), (2, 2)]).unwrap_err(),
            GeomError::Degenerate
        );
    }

    #[test]
    fn barycentric_round_trip() {
        let t = f1();
        let g =
            barycentric_point(&t, &BarycentricCoords::new(sc(1), sc(1), sc(1)).unwrap()).unwrap();
        assert_eq!(g, PPoint::from_cartesian(frac(4, 3), sc(1)));

        // (a, b, c) weights give the incenter
        let i =
            barycentric_point(&t, &BarycentricCoords::new(sc(4), sc(5), sc(3)).unwrap()).unwrap();
        assert_eq!(i, PPoint::at(1, 1));

        // (0, 1, 0) is vertex B
        let b =
            barycentric_point(&t, &BarycentricCoords::new(sc(0), sc(1), sc(0)).unwrap()).unwrap();
        assert_eq!(&b, t.b());

        let back = barycentric_of(&t, &PPoint::at(1, 1)).unwrap();
        let rebuilt = barycentric_point(&t, &back).unwrap();
        assert_eq!(rebuilt, PPoint::at(1, 1));
    }

    #[test]
    fn contact_points_match_touch_distances() {
        let t = f1();
        assert_eq!(t.incircle_contact(Vertex::A).unwrap(), PPoint::at(1, 0));
        assert_eq!(
            t.incircle_contact(Vertex::B).unwrap(),
            PPoint::from_cartesian(frac(8, 5), frac(9, 5))
        );
        assert_eq!(t.incircle_contact(Vertex::C).unwrap(), PPoint::at(0, 1));
        // excircle contact is the isometric point: BJa = p − c = 3
        assert_eq!(
            t.excircle_contact_on_side(Vertex::A).unwrap(),
            PPoint::at(3, 0)
        );
    }

    #[test]
    fn excenters_and_excircles() {
        let t = f1();
        let ia = t.excenter(Vertex::A).unwrap();
        assert_eq!(ia, PPoint::at(3, -3));
        let circle = t.excircle(Vertex::A).unwrap();
        assert_eq!(circle.radius2(), sc(9));
        // tangent to BC (y = 0): distance from (3,−3) is 3 = r_a
        assert!(circle.contains(&PPoint::at(3, 0)));
    }
}
