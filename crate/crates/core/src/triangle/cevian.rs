//! Cevian machinery: traces, the signed Menelaus/Ceva products, isogonal and
//! isotomic conjugation, and the trilinear pole/polar pair.
//!
//! Sign convention: all segment ratios are signed vector ratios. A transversal
//! has Menelaus product `+1`; concurrent cevians have Ceva product `−1`.

use crate::construct::reflect_point_through;
use crate::error::{GeomError, Result};
use crate::projective::{
    harmonic_conjugate, is_collinear, join, meet, signed_ratio, PLine, PPoint,
};
use crate::scalar::Scalar;
use crate::triangle::{
    barycentric_of, barycentric_point_projective, BarycentricCoords, Triangle, Vertex,
};

fn check_off_sides(t: &Triangle, p: &PPoint) -> Result<()> {
    for v in Vertex::ALL {
        if p == t.vertex(v) {
            return Err(GeomError::AtVertex);
        }
    }
    for v in Vertex::ALL {
        if t.side_line(v).contains(p) {
            return Err(GeomError::OnSideLine);
        }
    }
    Ok(())
}

/// Meets of the cevians through `p` with the opposite side lines (the
/// cevian triangle's vertices), indexed by the vertex they face.
pub fn cevian_traces(t: &Triangle, p: &PPoint) -> Result<[PPoint; 3]> {
    check_off_sides(t, p)?;
    let mut out = Vec::with_capacity(3);
    for v in Vertex::ALL {
        let cevian = join(t.vertex(v), p)?;
        out.push(meet(&cevian, &t.side_line(v))?);
    }
    Ok([out[0].clone(), out[1].clone(), out[2].clone()])
}

/// Signed ratio `PA/PB` extended to a point at infinity on the line
/// (the limit value `1`).
fn side_ratio(p: &PPoint, a: &PPoint, b: &PPoint) -> Result<Scalar> {
    if p.is_at_infinity() {
        if !is_collinear(p, a, b) {
            return Err(GeomError::NotOnLine);
        }
        return Ok(Scalar::one());
    }
    signed_ratio(p, a, b)
}

fn feet_product(t: &Triangle, a1: &PPoint, b1: &PPoint, c1: &PPoint) -> Result<Scalar> {
    for (foot, v) in [(a1, Vertex::A), (b1, Vertex::B), (c1, Vertex::C)] {
        let (p, q) = v.others();
        if foot == t.vertex(p) || foot == t.vertex(q) {
            return Err(GeomError::AtVertex);
        }
        if !t.side_line(v).contains(foot) {
            return Err(GeomError::NotOnLine);
        }
    }
    let r1 = side_ratio(a1, t.b(), t.c())?;
    let r2 = side_ratio(b1, t.c(), t.a())?;
    let r3 = side_ratio(c1, t.a(), t.b())?;
    Ok(r1 * r2 * r3)
}

/// Signed product `(A₁B/A₁C)(B₁C/B₁A)(C₁A/C₁B)`; equals `+1` exactly when
/// the three points are collinear (a transversal).
pub fn menelaus_product(t: &Triangle, a1: &PPoint, b1: &PPoint, c1: &PPoint) -> Result<Scalar> {
    feet_product(t, a1, b1, c1)
}

/// The same signed product; equals `−1` exactly when the cevians to the
/// three points concur.
pub fn ceva_product(t: &Triangle, a1: &PPoint, b1: &PPoint, c1: &PPoint) -> Result<Scalar> {
    feet_product(t, a1, b1, c1)
}

/// Isogonal conjugate via the barycentric map
/// `(α : β : γ) ↦ (a²βγ : b²γα : c²αβ)`.
///
/// A point on the circumcircle conjugates to a point at infinity, reported
/// as an error.
pub fn isogonal_conjugate(t: &Triangle, p: &PPoint) -> Result<PPoint> {
    check_off_sides(t, p)?;
    let bc = barycentric_of(t, p)?;
    let m = t.metrics();
    let conj = BarycentricCoords::new(
        m.a2.clone() * bc.beta.clone() * bc.gamma.clone(),
        m.b2.clone() * bc.gamma.clone() * bc.alpha.clone(),
        m.c2.clone() * bc.alpha * bc.beta,
    )?;
    if conj.mass().is_zero() {
        return Err(GeomError::AtInfinity);
    }
    barycentric_point_projective(t, &conj)
}

/// Isotomic conjugate via `(α : β : γ) ↦ (βγ : γα : αβ)`.
pub fn isotomic_conjugate(t: &Triangle, p: &PPoint) -> Result<PPoint> {
    check_off_sides(t, p)?;
    let bc = barycentric_of(t, p)?;
    let conj = BarycentricCoords::new(
        bc.beta.clone() * bc.gamma.clone(),
        bc.gamma.clone() * bc.alpha.clone(),
        bc.alpha * bc.beta,
    )?;
    if conj.mass().is_zero() {
        return Err(GeomError::AtInfinity);
    }
    barycentric_point_projective(t, &conj)
}

/// Reflection of a point of the side line opposite `v` in that side's
/// midpoint (its isometric point).
pub fn isotomic_of_side_point(t: &Triangle, v: Vertex, p: &PPoint) -> Result<PPoint> {
    if !t.side_line(v).contains(p) {
        return Err(GeomError::NotOnLine);
    }
    if p.is_at_infinity() {
        return Ok(p.clone());
    }
    reflect_point_through(p, &t.side_midpoint(v))
}

/// The line through the harmonic conjugates of the cevian feet of `p` with
/// respect to the side endpoints. The centroid maps to the line at infinity.
pub fn trilinear_polar(t: &Triangle, p: &PPoint) -> Result<PLine> {
    let feet = cevian_traces(t, p)?;
    let mut conjugates = Vec::with_capacity(3);
    for (foot, v) in feet.iter().zip(Vertex::ALL) {
        let (pv, qv) = v.others();
        conjugates.push(harmonic_conjugate(foot, t.vertex(pv), t.vertex(qv))?);
    }
    let line = join(&conjugates[0], &conjugates[1])?;
    debug_assert!(line.contains(&conjugates[2]));
    Ok(line)
}

/// Inverse of [`trilinear_polar`]: the point whose cevian-feet harmonic
/// conjugates lie on `l`.
pub fn trilinear_pole(t: &Triangle, l: &PLine) -> Result<PPoint> {
    for v in Vertex::ALL {
        if l.contains(t.vertex(v)) {
            return Err(GeomError::ThroughVertex);
        }
    }
    let mut feet = Vec::with_capacity(3);
    for v in Vertex::ALL {
        let (pv, qv) = v.others();
        let on_side = meet(l, &t.side_line(v))?;
        feet.push(harmonic_conjugate(&on_side, t.vertex(pv), t.vertex(qv))?);
    }
    let c1 = join(t.a(), &feet[0])?;
    let c2 = join(t.b(), &feet[1])?;
    let pole = meet(&c1, &c2)?;
    debug_assert!(join(t.c(), &feet[2])?.contains(&pole));
    Ok(pole)
}

/// Anticevian triangle of `p`: the triangle whose cevian triangle with
/// respect to itself is `t`; vertex facing `v` is the harmonic conjugate of
/// `p` with respect to `v` and the cevian foot.
pub fn anticevian_triangle(t: &Triangle, p: &PPoint) -> Result<Triangle> {
    let feet = cevian_traces(t, p)?;
    let mut verts = Vec::with_capacity(3);
    for (foot, v) in feet.iter().zip(Vertex::ALL) {
        let conj = harmonic_conjugate(p, t.vertex(v), foot)?;
        if conj.is_at_infinity() {
            return Err(GeomError::AtInfinity);
        }
        verts.push(conj);
    }
    Triangle::new(verts[0].clone(), verts[1].clone(), verts[2].clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::triangle::fixtures::{f1, f2};
    use crate::triangle::{named_center, CenterId};

    fn pt(x: i64, y: i64) -> PPoint {
        PPoint::at(x, y)
    }

    fn frac(n: i64, d: i64) -> Scalar {
        Scalar::ratio(n, d)
    }

    #[test]
    fn centroid_traces_are_midpoints() {
        let t = f1();
        let g = named_center(&t, &CenterId::Centroid).unwrap();
        let traces = cevian_traces(&t, &g).unwrap();
        assert_eq!(traces[0], t.side_midpoint(Vertex::A));
        assert_eq!(traces[1], t.side_midpoint(Vertex::B));
        assert_eq!(traces[2], t.side_midpoint(Vertex::C));
    }

    #[test]
    fn gergonne_traces_are_contact_points() {
        let t = f1();
        let gamma = named_center(&t, &CenterId::Gergonne).unwrap();
        let traces = cevian_traces(&t, &gamma).unwrap();
        assert_eq!(traces[0], pt(1, 0));
        assert_eq!(traces[1], PPoint::from_cartesian(frac(8, 5), frac(9, 5)));
        assert_eq!(traces[2], pt(0, 1));
        let prod = ceva_product(&t, &traces[0], &traces[1], &traces[2]).unwrap();
        assert_eq!(prod, Scalar::from_int(-1));
    }

    #[test]
    fn cevian_traces_errors() {
        let t = f1();
        assert_eq!(cevian_traces(&t, t.a()), Err(GeomError::AtVertex));
        assert_eq!(cevian_traces(&t, &pt(2, 0)), Err(GeomError::OnSideLine));
    }

    #[test]
    fn menelaus_transversal_is_plus_one() {
        let t = f1();
        // transversal y = 1 − x/8
        let a1 = pt(8, 0);
        let b1 = PPoint::from_cartesian(frac(16, 5), frac(3, 5));
        let c1 = pt(0, 1);
        assert_eq!(menelaus_product(&t, &a1, &b1, &c1).unwrap(), Scalar::one());
        // midpoints are not a transversal
        let prod = menelaus_product(
            &t,
            &t.side_midpoint(Vertex::A),
            &t.side_midpoint(Vertex::B),
            &t.side_midpoint(Vertex::C),
        )
        .unwrap();
        assert_eq!(prod, Scalar::from_int(-1));
        // generic triple is neither
        let p = ceva_product(&t, &pt(1, 0), &pt(2, 0).clone(), &pt(0, 2)).unwrap_err();
        assert_eq!(p, GeomError::NotOnLine);
        let generic = ceva_product(
            &t,
            &pt(1, 0),
            &PPoint::from_cartesian(frac(16, 5), frac(3, 5)),
            &pt(0, 2),
        )
        .unwrap();
        assert!(generic != Scalar::one() && generic != Scalar::from_int(-1));
    }

    #[test]
    fn isogonal_conjugate_pairs() {
        // H ↔ O on the non-right fixture (on F1 the orthocenter is the
        // right-angle vertex itself, where conjugation is undefined)
        let t = f2();
        let h = named_center(&t, &CenterId::Orthocenter).unwrap();
        let o = named_center(&t, &CenterId::Circumcenter).unwrap();
        assert_eq!(isogonal_conjugate(&t, &h).unwrap(), o);

        let t = f1();
        assert_eq!(
            isogonal_conjugate(&t, &named_center(&t, &CenterId::Orthocenter).unwrap()),
            Err(GeomError::AtVertex)
        );
        // incenter is a fixed point
        let i = named_center(&t, &CenterId::Incenter).unwrap();
        assert_eq!(isogonal_conjugate(&t, &i).unwrap(), i);
        // involution
        let p = pt(1, 2);
        let q = isogonal_conjugate(&t, &p).unwrap();
        assert_eq!(isogonal_conjugate(&t, &q).unwrap(), p);
        // a circumcircle point conjugates to infinity
        let on_circle = pt(4, 3);
        assert!(t.circumcircle().contains(&on_circle));
        assert_eq!(
            isogonal_conjugate(&t, &on_circle),
            Err(GeomError::AtInfinity)
        );
    }

    #[test]
    fn isotomic_conjugate_pairs() {
        let t = f1();
        let gamma = named_center(&t, &CenterId::Gergonne).unwrap();
        let nagel = named_center(&t, &CenterId::Nagel).unwrap();
        assert_eq!(isotomic_conjugate(&t, &gamma).unwrap(), nagel);
        let g = named_center(&t, &CenterId::Centroid).unwrap();
        assert_eq!(isotomic_conjugate(&t, &g).unwrap(), g);
        let p = pt(1, 2);
        let q = isotomic_conjugate(&t, &p).unwrap();
        assert_eq!(isotomic_conjugate(&t, &q).unwrap(), p);
    }

    #[test]
    fn conjugates_match_reflection_construction_oracles() {
        // Oracle for the isogonal conjugate: reflect the cevians in the
        // bisectors and intersect. Oracle for the isotomic: reflect each
        // cevian foot in the side midpoint and intersect.
        for t in [f1(), f2()] {
            let p = pt(1, 2);
            let feet = cevian_traces(&t, &p).unwrap();

            let mut isog_lines = Vec::new();
            let mut isot_lines = Vec::new();
            for (foot, v) in feet.iter().zip(Vertex::ALL) {
                let bisector = t.internal_bisector_line(v).unwrap();
                let cevian = join(t.vertex(v), &p).unwrap();
                isog_lines
                    .push(crate::construct::reflect_line_over_line(&cevian, &bisector).unwrap());
                let mirrored = isotomic_of_side_point(&t, v, foot).unwrap();
                isot_lines.push(join(t.vertex(v), &mirrored).unwrap());
            }
            let isog = meet(&isog_lines[0], &isog_lines[1]).unwrap();
            assert!(isog_lines[2].contains(&isog));
            assert_eq!(isog, isogonal_conjugate(&t, &p).unwrap());

            let isot = meet(&isot_lines[0], &isot_lines[1]).unwrap();
            assert!(isot_lines[2].contains(&isot));
            assert_eq!(isot, isotomic_conjugate(&t, &p).unwrap());
        }
    }

    #[test]
    fn trilinear_polar_of_incenter_is_the_external_bisector_axis() {
        let t = f1();
        let i = named_center(&t, &CenterId::Incenter).unwrap();
        let polar = trilinear_polar(&t, &i).unwrap();
        // 2x + y + 12 = 0 through (−6,0), (−12,12), (0,−12)
        assert!(polar.contains(&pt(-6, 0)));
        assert!(polar.contains(&pt(-12, 12)));
        assert!(polar.contains(&pt(0, -12)));
        // round trip
        assert_eq!(trilinear_pole(&t, &polar).unwrap(), i);
    }

    #[test]
    fn trilinear_polar_of_centroid_is_the_line_at_infinity() {
        let t = f1();
        let g = named_center(&t, &CenterId::Centroid).unwrap();
        assert_eq!(trilinear_polar(&t, &g).unwrap(), PLine::at_infinity());
        assert_eq!(trilinear_pole(&t, &PLine::at_infinity()).unwrap(), g);
    }

    #[test]
    fn lemoine_line_is_the_polar_of_the_symmedian_point() {
        let t = f2();
        let k = named_center(&t, &CenterId::Symmedian).unwrap();
        let lemoine = trilinear_polar(&t, &k).unwrap();
        assert_eq!(trilinear_pole(&t, &lemoine).unwrap(), k);
    }

    #[test]
    fn anticevian_of_a_point_has_it_as_perspector() {
        let t = f1();
        let p = pt(1, 2);
        let anti = anticevian_triangle(&t, &p).unwrap();
        // the cevian triangle of p with respect to anti is t
        let feet = cevian_traces(&anti, &p).unwrap();
        assert_eq!(&feet[0], t.a());
        assert_eq!(&feet[1], t.b());
        assert_eq!(&feet[2], t.c());
    }
}
