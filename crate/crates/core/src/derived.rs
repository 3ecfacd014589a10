//! Construction of the remarkable triangles derived from a reference
//! triangle (and a point, where the construction needs one).
//!
//! Vertex correspondence is always "derived vertex indexed by the reference
//! vertex it faces"; every perspectivity claim downstream depends on this
//! pairing.

use crate::construct::{
    parallel_through, perpendicular_bisector, perpendicular_through, project_onto_line,
    reflect_line_over_line,
};
use crate::error::{GeomError, Result};
use crate::metric::{circle_through, second_intersection, tangent_line_at};
use crate::projective::{join, meet, PLine, PPoint};
use crate::scalar::Scalar;
use crate::triangle::{
    cevian_traces, first_brocard_triangle, isotomic_conjugate, named_center, CenterId, Triangle,
    Vertex,
};

/// Which derived triangle to build. Parameterized kinds carry their point.
#[derive(Debug, Clone, PartialEq)]
pub enum DerivedKind {
    Orthic,
    Medial,
    Contact,
    Cotangent,
    Tangential,
    AntiSupplemental,
    ExTangential,
    AntiComplementary,
    Pedal(PPoint),
    Antipedal(PPoint),
    Circumpedal(PPoint),
    Cevian(PPoint),
    FirstBrocard,
    Neuberg,
    Cosnita,
    GergonneAdjoint,
    NagelAdjoint,
    CasparyFirst(PPoint),
    SharyginFirst,
}

impl DerivedKind {
    pub fn name(&self) -> &'static str {
        match self {
            DerivedKind::Orthic => "orthic",
            DerivedKind::Medial => "medial",
            DerivedKind::Contact => "contact",
            DerivedKind::Cotangent => "cotangent",
            DerivedKind::Tangential => "tangential",
            DerivedKind::AntiSupplemental => "anti_supplemental",
            DerivedKind::ExTangential => "ex_tangential",
            DerivedKind::AntiComplementary => "anti_complementary",
            DerivedKind::Pedal(_) => "pedal",
            DerivedKind::Antipedal(_) => "antipedal",
            DerivedKind::Circumpedal(_) => "circumpedal",
            DerivedKind::Cevian(_) => "cevian",
            DerivedKind::FirstBrocard => "first_brocard",
            DerivedKind::Neuberg => "neuberg",
            DerivedKind::Cosnita => "cosnita",
            DerivedKind::GergonneAdjoint => "gergonne_adjoint",
            DerivedKind::NagelAdjoint => "nagel_adjoint",
            DerivedKind::CasparyFirst(_) => "caspary_first",
            DerivedKind::SharyginFirst => "sharygin_first",
        }
    }

    /// Parse a parameter-free kind name.
    pub fn parse_simple(s: &str) -> Option<DerivedKind> {
        Some(match s {
            "orthic" => DerivedKind::Orthic,
            "medial" => DerivedKind::Medial,
            "contact" => DerivedKind::Contact,
            "cotangent" => DerivedKind::Cotangent,
            "tangential" => DerivedKind::Tangential,
            "anti_supplemental" => DerivedKind::AntiSupplemental,
            "ex_tangential" => DerivedKind::ExTangential,
            "anti_complementary" => DerivedKind::AntiComplementary,
            "first_brocard" => DerivedKind::FirstBrocard,
            "neuberg" => DerivedKind::Neuberg,
            "cosnita" => DerivedKind::Cosnita,
            "gergonne_adjoint" => DerivedKind::GergonneAdjoint,
            "nagel_adjoint" => DerivedKind::NagelAdjoint,
            "sharygin_first" => DerivedKind::SharyginFirst,
            _ => return None,
        })
    }

    /// Parse a point-parameterized kind name.
    pub fn parse_with_point(s: &str, p: PPoint) -> Option<DerivedKind> {
        Some(match s {
            "pedal" => DerivedKind::Pedal(p),
            "antipedal" => DerivedKind::Antipedal(p),
            "circumpedal" => DerivedKind::Circumpedal(p),
            "cevian" => DerivedKind::Cevian(p),
            "caspary_first" => DerivedKind::CasparyFirst(p),
            _ => return None,
        })
    }
}

fn tri(verts: [PPoint; 3]) -> Result<Triangle> {
    for v in &verts {
        if v.is_at_infinity() {
            return Err(GeomError::DegenerateDerived);
        }
    }
    let [a, b, c] = verts;
    Triangle::new(a, b, c).map_err(|_| GeomError::DegenerateDerived)
}

fn from_lines(la: &PLine, lb: &PLine, lc: &PLine) -> Result<Triangle> {
    let a = meet(lb, lc).map_err(|_| GeomError::DegenerateDerived)?;
    let b = meet(lc, la).map_err(|_| GeomError::DegenerateDerived)?;
    let c = meet(la, lb).map_err(|_| GeomError::DegenerateDerived)?;
    tri([a, b, c])
}

fn per_vertex(t: &Triangle, f: impl Fn(&Triangle, Vertex) -> Result<PPoint>) -> Result<Triangle> {
    let a = f(t, Vertex::A)?;
    let b = f(t, Vertex::B)?;
    let c = f(t, Vertex::C)?;
    tri([a, b, c])
}

pub fn derive(t: &Triangle, kind: &DerivedKind) -> Result<Triangle> {
    match kind {
        DerivedKind::Orthic => {
            per_vertex(t, |t, v| project_onto_line(t.vertex(v), &t.side_line(v)))
        }
        DerivedKind::Medial => per_vertex(t, |t, v| Ok(t.side_midpoint(v))),
        DerivedKind::Contact => per_vertex(t, |t, v| t.incircle_contact(v)),
        DerivedKind::Cotangent => per_vertex(t, |t, v| t.excircle_contact_on_side(v)),
        DerivedKind::Tangential => {
            if t.metrics().is_right() {
                // tangents at the ends of a diameter are parallel
                return Err(GeomError::NotDefined);
            }
            let circ = t.circumcircle();
            let ta = tangent_line_at(&circ, t.a())?;
            let tb = tangent_line_at(&circ, t.b())?;
            let tc = tangent_line_at(&circ, t.c())?;
            from_lines(&ta, &tb, &tc)
        }
        DerivedKind::AntiSupplemental => per_vertex(t, |t, v| t.excenter(v)),
        DerivedKind::ExTangential => {
            let m = t.metrics();
            if m.is_isosceles() || m.is_right() {
                return Err(GeomError::NotDefined);
            }
            let mut tangents = Vec::with_capacity(3);
            for v in Vertex::ALL {
                let (p, q) = v.others();
                let center_line = join(&t.excenter(p)?, &t.excenter(q)?)?;
                // The side line and the sought tangent are the two common
                // tangents through the direct homothety center of the two
                // excircles, so they are mirror images in the center line.
                tangents.push(reflect_line_over_line(&t.side_line(v), &center_line)?);
            }
            from_lines(&tangents[0], &tangents[1], &tangents[2])
        }
        DerivedKind::AntiComplementary => {
            let la = parallel_through(&t.side_line(Vertex::A), t.a())?;
            let lb = parallel_through(&t.side_line(Vertex::B), t.b())?;
            let lc = parallel_through(&t.side_line(Vertex::C), t.c())?;
            from_lines(&la, &lb, &lc)
        }
        DerivedKind::Pedal(p) => {
            if !p.is_finite() {
                return Err(GeomError::AtInfinity);
            }
            per_vertex(t, |t, v| project_onto_line(p, &t.side_line(v)))
        }
        DerivedKind::Antipedal(p) => {
            if !p.is_finite() {
                return Err(GeomError::AtInfinity);
            }
            let mut lines = Vec::with_capacity(3);
            for v in Vertex::ALL {
                if p == t.vertex(v) {
                    return Err(GeomError::AtVertex);
                }
                lines.push(perpendicular_through(&join(t.vertex(v), p)?, t.vertex(v))?);
            }
            from_lines(&lines[0], &lines[1], &lines[2])
        }
        DerivedKind::Circumpedal(p) => {
            let circ = t.circumcircle();
            per_vertex(t, |t, v| {
                if p == t.vertex(v) {
                    return Err(GeomError::AtVertex);
                }
                let chord = join(t.vertex(v), p)?;
                let other = second_intersection(&circ, t.vertex(v), &chord)?;
                if &other == t.vertex(v) {
                    return Err(GeomError::DegenerateDerived);
                }
                Ok(other)
            })
        }
        DerivedKind::Cevian(p) => {
            let feet = cevian_traces(t, p)?;
            tri(feet)
        }
        DerivedKind::FirstBrocard => first_brocard_triangle(t),
        DerivedKind::Neuberg => {
            let circles = neuberg_circles(t)?;
            tri([
                circles[0].center.clone(),
                circles[1].center.clone(),
                circles[2].center.clone(),
            ])
        }
        DerivedKind::Cosnita => {
            let o = named_center(t, &CenterId::Circumcenter)?;
            per_vertex(t, |t, v| {
                let (p, q) = v.others();
                Ok(circle_through(t.vertex(p), &o, t.vertex(q))
                    .map_err(|_| GeomError::NotDefined)?
                    .center())
            })
        }
        DerivedKind::GergonneAdjoint => per_vertex(t, gergonne_adjoint_point),
        DerivedKind::NagelAdjoint => per_vertex(t, nagel_adjoint_point),
        DerivedKind::CasparyFirst(x) => {
            let y = isotomic_conjugate(t, x)?;
            per_vertex(t, |t, v| {
                let par = parallel_through(&t.side_line(v), x)?;
                let cevian = join(t.vertex(v), &y)?;
                meet(&par, &cevian).map_err(|_| GeomError::DegenerateDerived)
            })
        }
        DerivedKind::SharyginFirst => {
            let mut mediators = Vec::with_capacity(3);
            for v in Vertex::ALL {
                let foot = meet(&t.internal_bisector_line(v)?, &t.side_line(v))?;
                mediators.push(perpendicular_bisector(t.vertex(v), &foot)?);
            }
            from_lines(&mediators[0], &mediators[1], &mediators[2])
        }
    }
}

/// Touch point of the excircle opposite `ex` with the side line from the
/// vertex `ex` toward `toward` — at distance `p` (the semiperimeter) from
/// the vertex.
fn excircle_touch_beyond(t: &Triangle, ex: Vertex, toward: Vertex) -> Result<PPoint> {
    let m = t.metrics();
    let third = match (ex, toward) {
        (Vertex::A, Vertex::B) | (Vertex::B, Vertex::A) => Vertex::C,
        (Vertex::B, Vertex::C) | (Vertex::C, Vertex::B) => Vertex::A,
        _ => Vertex::B,
    };
    let ray_len = m.side(third).clone();
    let tparam = m.p.clone().checked_div(&ray_len)?;
    crate::construct::point_on_segment(t.vertex(ex), t.vertex(toward), tparam)
}

/// Concurrency point of the cevians to the three touch points of the
/// excircle opposite `v` (an adjoint of the Gergonne point).
fn gergonne_adjoint_point(t: &Triangle, v: Vertex) -> Result<PPoint> {
    let (p, q) = v.others();
    let on_side = t.excircle_contact_on_side(v)?;
    // touch on the line through v and q, and on the line through v and p:
    // each remaining vertex is joined to the touch point on the line it
    // does not lie on
    let toward_q = excircle_touch_beyond(t, v, q)?;
    let toward_p = excircle_touch_beyond(t, v, p)?;
    let c1 = join(t.vertex(v), &on_side)?;
    let c2 = join(t.vertex(p), &toward_q)?;
    let c3 = join(t.vertex(q), &toward_p)?;
    let x = meet(&c1, &c2)?;
    if !c3.contains(&x) {
        return Err(GeomError::DegenerateDerived);
    }
    Ok(x)
}

/// Concurrency point of the incircle-contact cevian from `v` with the two
/// far-excircle-touch cevians from the other vertices (an adjoint of the
/// Nagel point).
fn nagel_adjoint_point(t: &Triangle, v: Vertex) -> Result<PPoint> {
    let (p, q) = v.others();
    let c1 = join(t.vertex(v), &t.incircle_contact(v)?)?;
    let tp = excircle_touch_beyond(t, q, v)?;
    let c2 = join(t.vertex(p), &tp)?;
    let tq = excircle_touch_beyond(t, p, v)?;
    let c3 = join(t.vertex(q), &tq)?;
    let x = meet(&c1, &c2)?;
    if !c3.contains(&x) {
        return Err(GeomError::DegenerateDerived);
    }
    Ok(x)
}

/// An equi-Brocard circle: center and squared radius.
#[derive(Debug, Clone, PartialEq)]
pub struct NeubergCircle {
    pub center: PPoint,
    pub radius2: Scalar,
}

/// The three equi-Brocard circles, one per side, centered on the side
/// perpendicular bisectors at signed height `(side/2)·cot ω` toward the
/// opposite vertex, with `radius² = (side²/4)(cot²ω − 3)`.
pub fn neuberg_circles(t: &Triangle) -> Result<[NeubergCircle; 3]> {
    let m = t.metrics();
    let cot = m.cot_omega.clone();
    let excess = cot.squared() - Scalar::from_int(3);
    if !excess.is_positive() {
        return Err(GeomError::DegenerateNeuberg);
    }
    let half = Scalar::ratio(1, 2);
    let quarter = Scalar::ratio(1, 4);
    let mut out = Vec::with_capacity(3);
    for v in Vertex::ALL {
        let (p, q) = v.others();
        let mid = t.side_midpoint(v);
        let (px, py) = t.vertex(p).xy()?;
        let (qx, qy) = t.vertex(q).xy()?;
        // rotate the side direction by 90°; |n| equals the side length, so
        // mid + (cot ω / 2) n sits at height (side/2) cot ω
        let n = (-(qy.clone() - py.clone()), qx - px);
        let (mx, my) = mid.xy()?;
        let (vx, vy) = t.vertex(v).xy()?;
        let toward = n.0.clone() * (vx - mx.clone()) + n.1.clone() * (vy - my.clone());
        let sign = if toward.is_negative() {
            Scalar::from_int(-1)
        } else {
            Scalar::one()
        };
        let step = half.clone() * cot.clone() * sign;
        let center = PPoint::from_cartesian(mx + step.clone() * n.0, my + step * n.1);
        let radius2 = quarter.clone() * m.side2(v).clone() * excess.clone();
        out.push(NeubergCircle { center, radius2 });
    }
    Ok([out[0].clone(), out[1].clone(), out[2].clone()])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::lincomb;
    use crate::triangle::fixtures::{f1, f2};
    use crate::triangle::{brocard_angle_cot, ceva_product};

    fn pt(x: i64, y: i64) -> PPoint {
        PPoint::at(x, y)
    }

    fn frac(n: i64, d: i64) -> Scalar {
        Scalar::ratio(n, d)
    }

    fn sc(n: i64) -> Scalar {
        Scalar::from_int(n)
    }

    #[test]
    fn medial_is_the_midpoint_triangle() {
        let t = f1();
        let m = derive(&t, &DerivedKind::Medial).unwrap();
        assert_eq!(m.a(), &pt(2, 0));
        assert_eq!(m.b(), &PPoint::from_cartesian(sc(2), frac(3, 2)));
        assert_eq!(m.c(), &PPoint::from_cartesian(sc(0), frac(3, 2)));
    }

    #[test]
    fn contact_and_cotangent_touch_points() {
        let t = f1();
        let contact = derive(&t, &DerivedKind::Contact).unwrap();
        assert_eq!(contact.a(), &pt(1, 0));
        assert_eq!(contact.b(), &PPoint::from_cartesian(frac(8, 5), frac(9, 5)));
        assert_eq!(contact.c(), &pt(0, 1));
        let cotangent = derive(&t, &DerivedKind::Cotangent).unwrap();
        assert_eq!(cotangent.a(), &pt(3, 0));
        // isometric pairs: reflected in the side midpoints
        for v in Vertex::ALL {
            let mid = t.side_midpoint(v);
            let reflected =
                crate::construct::reflect_point_through(contact.vertex(v), &mid).unwrap();
            assert_eq!(&reflected, cotangent.vertex(v));
        }
    }

    #[test]
    fn orthic_of_a_right_triangle_degenerates() {
        assert_eq!(
            derive(&f1(), &DerivedKind::Orthic),
            Err(GeomError::DegenerateDerived)
        );
        let orthic = derive(&f2(), &DerivedKind::Orthic).unwrap();
        assert_eq!(orthic.a(), &pt(5, 0));
    }

    #[test]
    fn tangential_vertices_are_tangent_meets() {
        let t = f1();
        // F1 is right-angled: tangents at A and C are parallel
        assert_eq!(
            derive(&t, &DerivedKind::Tangential),
            Err(GeomError::NotDefined)
        );

        let t = f2();
        let tt = derive(&t, &DerivedKind::Tangential).unwrap();
        let circ = t.circumcircle();
        // each tangential side line is the tangent at the matching vertex
        for v in Vertex::ALL {
            assert_eq!(
                tt.side_line(v),
                tangent_line_at(&circ, t.vertex(v)).unwrap()
            );
        }
    }

    #[test]
    fn tangent_meet_of_the_right_fixture() {
        // the tangents at B and C of F1 still meet finitely, at (2, −8/3)
        let t = f1();
        let circ = t.circumcircle();
        let tb = tangent_line_at(&circ, t.b()).unwrap();
        let tc = tangent_line_at(&circ, t.c()).unwrap();
        assert_eq!(
            meet(&tb, &tc).unwrap(),
            PPoint::from_cartesian(sc(2), frac(-8, 3))
        );
    }

    #[test]
    fn anti_supplemental_has_the_reference_as_orthic() {
        let t = f2();
        let anti = derive(&t, &DerivedKind::AntiSupplemental).unwrap();
        let orthic = derive(&anti, &DerivedKind::Orthic).unwrap();
        assert_eq!(orthic.a(), t.a());
        assert_eq!(orthic.b(), t.b());
        assert_eq!(orthic.c(), t.c());
    }

    #[test]
    fn cevian_triangle_products() {
        let t = f2();
        let cev = derive(&t, &DerivedKind::Cevian(pt(6, 4))).unwrap();
        let prod = ceva_product(&t, cev.a(), cev.b(), cev.c()).unwrap();
        assert_eq!(prod, sc(-1));
    }

    #[test]
    fn circumpedal_of_orthocenter_reflects_it_over_the_sides() {
        let t = f2();
        let h = named_center(&t, &CenterId::Orthocenter).unwrap();
        let cp = derive(&t, &DerivedKind::Circumpedal(h.clone())).unwrap();
        let circ = t.circumcircle();
        for v in Vertex::ALL {
            let reflected = crate::construct::reflect_point_over_line(&h, &t.side_line(v)).unwrap();
            assert!(circ.contains(&reflected));
            assert_eq!(&reflected, cp.vertex(v));
        }
    }

    #[test]
    fn pedal_cases() {
        let t = f1();
        // (4,3) lies on the circumcircle: its pedal triangle is a line
        assert_eq!(
            derive(&t, &DerivedKind::Pedal(pt(4, 3))),
            Err(GeomError::DegenerateDerived)
        );
        // pedal of the incenter is the contact triangle
        let i = named_center(&t, &CenterId::Incenter).unwrap();
        let pedal = derive(&t, &DerivedKind::Pedal(i)).unwrap();
        let contact = derive(&t, &DerivedKind::Contact).unwrap();
        assert_eq!(pedal.a(), contact.a());
        assert_eq!(pedal.b(), contact.b());
        assert_eq!(pedal.c(), contact.c());
    }

    #[test]
    fn antipedal_inverts_the_pedal_construction() {
        let t = f2();
        let p = pt(7, 5);
        let anti = derive(&t, &DerivedKind::Antipedal(p.clone())).unwrap();
        let back = derive(&anti, &DerivedKind::Pedal(p)).unwrap();
        assert_eq!(back.a(), t.a());
        assert_eq!(back.b(), t.b());
        assert_eq!(back.c(), t.c());
    }

    #[test]
    fn neuberg_circle_of_f1() {
        let t = f1();
        let circles = neuberg_circles(&t).unwrap();
        assert_eq!(
            circles[0].center,
            PPoint::from_cartesian(sc(2), frac(25, 6))
        );
        assert_eq!(circles[0].radius2, frac(193, 36));
    }

    #[test]
    fn neuberg_equilateral_degenerates() {
        let s3 = 3f64.sqrt();
        let t = Triangle::new(
            PPoint::from_cartesian(Scalar::float(1.0), Scalar::float(s3)),
            PPoint::from_cartesian(Scalar::float(0.0), Scalar::float(0.0)),
            PPoint::from_cartesian(Scalar::float(2.0), Scalar::float(0.0)),
        )
        .unwrap();
        assert_eq!(neuberg_circles(&t), Err(GeomError::DegenerateNeuberg));
    }

    #[test]
    fn neuberg_locus_preserves_the_brocard_angle() {
        // sample points on the A-Neuberg circle (float) and check each
        // triangle MBC keeps the reference cot ω
        let t = f2().to_float_backend();
        let circles = neuberg_circles(&t).unwrap();
        let (cx, cy) = circles[0].center.xy().unwrap();
        let r = circles[0].radius2.to_f64().sqrt();
        for angle in [0.3_f64, 1.7, 4.0] {
            let mx = cx.to_f64() + r * angle.cos();
            let my = cy.to_f64() + r * angle.sin();
            let m = PPoint::from_cartesian(Scalar::float(mx), Scalar::float(my));
            let mbc = Triangle::new(m, t.b().clone(), t.c().clone()).unwrap();
            let got = brocard_angle_cot(&mbc).to_f64();
            let want = brocard_angle_cot(&t).to_f64();
            assert!((got - want).abs() <= 1e-9 * want.abs().max(1.0));
        }
    }

    #[test]
    fn adjoint_point_cevian_pairings() {
        // A Γ_a is the A-Nagel cevian and A H_a is the A-Gergonne cevian
        let t = f2();
        let ga = derive(&t, &DerivedKind::GergonneAdjoint).unwrap();
        let n = named_center(&t, &CenterId::Nagel).unwrap();
        for v in Vertex::ALL {
            assert!(join(t.vertex(v), ga.vertex(v)).unwrap().contains(&n));
        }
        let na = derive(&t, &DerivedKind::NagelAdjoint).unwrap();
        let gamma = named_center(&t, &CenterId::Gergonne).unwrap();
        for v in Vertex::ALL {
            assert!(join(t.vertex(v), na.vertex(v)).unwrap().contains(&gamma));
        }
    }

    #[test]
    fn medial_of_medial_is_homothetic_quarter() {
        let t = f2();
        let mm = derive(
            &derive(&t, &DerivedKind::Medial).unwrap(),
            &DerivedKind::Medial,
        )
        .unwrap();
        let g = named_center(&t, &CenterId::Centroid).unwrap();
        for v in Vertex::ALL {
            let image = lincomb(&[(frac(3, 4), &g), (frac(1, 4), t.vertex(v))]).unwrap();
            assert_eq!(&image, mm.vertex(v));
        }
    }

    #[test]
    fn ex_tangential_lines_touch_the_excircles() {
        let t = f2();
        let et = derive(&t, &DerivedKind::ExTangential).unwrap();
        for v in Vertex::ALL {
            let (p, q) = v.others();
            let side = et.side_line(v);
            for other in [p, q] {
                let circle = t.excircle(other).unwrap();
                let foot = project_onto_line(&circle.center(), &side).unwrap();
                let d2 = crate::construct::distance2(&circle.center(), &foot).unwrap();
                assert_eq!(d2, circle.radius2());
            }
            assert!(side != t.side_line(v));
        }
    }

    #[test]
    fn first_brocard_pairing_is_by_perpendicular_bisector() {
        let t = f2();
        let fb = derive(&t, &DerivedKind::FirstBrocard).unwrap();
        for v in Vertex::ALL {
            assert!(t.side_perpendicular_bisector(v).contains(fb.vertex(v)));
        }
    }

    #[test]
    fn caspary_first_triangle_sits_on_the_conjugate_cevians() {
        let t = f2();
        let x = pt(6, 5);
        let caspary = derive(&t, &DerivedKind::CasparyFirst(x.clone())).unwrap();
        let y = isotomic_conjugate(&t, &x).unwrap();
        for v in Vertex::ALL {
            assert!(join(t.vertex(v), &y).unwrap().contains(caspary.vertex(v)));
        }
    }

    #[test]
    fn sharygin_side_lines_are_bisector_mediators() {
        let t = f2();
        let sh = derive(&t, &DerivedKind::SharyginFirst).unwrap();
        for v in Vertex::ALL {
            let foot = meet(&t.internal_bisector_line(v).unwrap(), &t.side_line(v)).unwrap();
            let mediator = perpendicular_bisector(t.vertex(v), &foot).unwrap();
            assert_eq!(sh.side_line(v), mediator);
        }
    }
}
