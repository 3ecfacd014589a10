//! Named triangle centers, each produced by its defining construction
//! rather than a memorized coordinate formula. Barycentric shortcuts are
//! used only where the defining construction *is* a conjugation (and those
//! are validated against reflection oracles in the test suite).

use crate::construct::{lincomb, parallel_through, perpendicular_through, project_onto_line};
use crate::error::{GeomError, Result};
use crate::metric::circle_through;
use crate::projective::{join, meet, PPoint};
use crate::scalar::Scalar;
use crate::triangle::brocard::first_brocard_triangle;
use crate::triangle::cevian::isotomic_conjugate;
use crate::triangle::{Triangle, Vertex};

/// Identifier of a named center. String forms (for the CLI and the script
/// language) are stable: `parse` and `name` round-trip.
#[derive(Debug, Clone, PartialEq)]
pub enum CenterId {
    Incenter,
    Circumcenter,
    Orthocenter,
    Centroid,
    /// Lemoine / symmedian point.
    Symmedian,
    Gergonne,
    Nagel,
    NinePoint,
    /// First Brocard point Ω.
    BrocardFirst,
    /// Second Brocard point Ω′.
    BrocardSecond,
    /// Third Brocard point Ω″ (isotomic conjugate of the symmedian point).
    BrocardThird,
    Tarry,
    Steiner,
    Cosnita,
    /// Kariya point with the signed multiple of the inradius along the
    /// contact perpendiculars.
    Kariya(Scalar),
}

impl CenterId {
    pub fn name(&self) -> &'static str {
        match self {
            CenterId::Incenter => "incenter",
            CenterId::Circumcenter => "circumcenter",
            CenterId::Orthocenter => "orthocenter",
            CenterId::Centroid => "centroid",
            CenterId::Symmedian => "symmedian_point",
            CenterId::Gergonne => "gergonne",
            CenterId::Nagel => "nagel",
            CenterId::NinePoint => "nine_point_center",
            CenterId::BrocardFirst => "brocard_first",
            CenterId::BrocardSecond => "brocard_second",
            CenterId::BrocardThird => "brocard_third",
            CenterId::Tarry => "tarry",
            CenterId::Steiner => "steiner",
            CenterId::Cosnita => "cosnita",
            CenterId::Kariya(_) => "kariya",
        }
    }

    /// Parse a stable name; single-letter aliases follow the usual notation
    /// (I, O, H, G, K, N).
    pub fn parse(s: &str) -> Option<CenterId> {
        Some(match s {
            "incenter" | "I" => CenterId::Incenter,
            "circumcenter" | "O" => CenterId::Circumcenter,
            "orthocenter" | "H" => CenterId::Orthocenter,
            "centroid" | "G" => CenterId::Centroid,
            "symmedian_point" | "lemoine" | "K" => CenterId::Symmedian,
            "gergonne" => CenterId::Gergonne,
            "nagel" | "N" => CenterId::Nagel,
            "nine_point_center" | "O9" => CenterId::NinePoint,
            "brocard_first" => CenterId::BrocardFirst,
            "brocard_second" => CenterId::BrocardSecond,
            "brocard_third" => CenterId::BrocardThird,
            "tarry" => CenterId::Tarry,
            "steiner" => CenterId::Steiner,
            "cosnita" => CenterId::Cosnita,
            _ => return None,
        })
    }

    pub fn all_fixed() -> Vec<CenterId> {
        vec![
            CenterId::Incenter,
            CenterId::Circumcenter,
            CenterId::Orthocenter,
            CenterId::Centroid,
            CenterId::Symmedian,
            CenterId::Gergonne,
            CenterId::Nagel,
            CenterId::NinePoint,
            CenterId::BrocardFirst,
            CenterId::BrocardSecond,
            CenterId::BrocardThird,
            CenterId::Tarry,
            CenterId::Steiner,
            CenterId::Cosnita,
        ]
    }
}

pub fn named_center(t: &Triangle, id: &CenterId) -> Result<PPoint> {
    match id {
        CenterId::Incenter => meet(
            &t.internal_bisector_line(Vertex::A)?,
            &t.internal_bisector_line(Vertex::B)?,
        ),
        CenterId::Circumcenter => meet(
            &t.side_perpendicular_bisector(Vertex::A),
            &t.side_perpendicular_bisector(Vertex::B),
        ),
        CenterId::Orthocenter => meet(&t.altitude_line(Vertex::A), &t.altitude_line(Vertex::B)),
        CenterId::Centroid => meet(&t.median_line(Vertex::A), &t.median_line(Vertex::B)),
        CenterId::Symmedian => meet(&t.symmedian_line(Vertex::A)?, &t.symmedian_line(Vertex::B)?),
        CenterId::Gergonne => {
            let ca = t.incircle_contact(Vertex::A)?;
            let cb = t.incircle_contact(Vertex::B)?;
            meet(&join(t.a(), &ca)?, &join(t.b(), &cb)?)
        }
        CenterId::Nagel => {
            let ja = t.excircle_contact_on_side(Vertex::A)?;
            let jb = t.excircle_contact_on_side(Vertex::B)?;
            meet(&join(t.a(), &ja)?, &join(t.b(), &jb)?)
        }
        CenterId::NinePoint => {
            let ma = t.side_midpoint(Vertex::A);
            let mb = t.side_midpoint(Vertex::B);
            let mc = t.side_midpoint(Vertex::C);
            Ok(circle_through(&ma, &mb, &mc)?.center())
        }
        CenterId::BrocardFirst => Ok(crate::triangle::brocard::brocard_points(t)?.0),
        CenterId::BrocardSecond => Ok(crate::triangle::brocard::brocard_points(t)?.1),
        CenterId::BrocardThird => {
            let k = named_center(t, &CenterId::Symmedian)?;
            isotomic_conjugate(t, &k).map_err(|_| GeomError::NotDefined)
        }
        CenterId::Tarry => {
            let fb = first_brocard_triangle(t)?;
            let la = perpendicular_through(&fb.side_line(Vertex::A), t.a())?;
            let lb = perpendicular_through(&fb.side_line(Vertex::B), t.b())?;
            let tarry = meet(&la, &lb).map_err(|_| GeomError::NotDefined)?;
            if tarry.is_at_infinity() {
                return Err(GeomError::NotDefined);
            }
            Ok(tarry)
        }
        CenterId::Steiner => {
            let fb = first_brocard_triangle(t)?;
            let la = parallel_through(&fb.side_line(Vertex::A), t.a())?;
            let lb = parallel_through(&fb.side_line(Vertex::B), t.b())?;
            let s = meet(&la, &lb).map_err(|_| GeomError::NotDefined)?;
            if s.is_at_infinity() {
                return Err(GeomError::NotDefined);
            }
            Ok(s)
        }
        CenterId::Cosnita => {
            let o = named_center(t, &CenterId::Circumcenter)?;
            let oa = circle_through(t.b(), &o, t.c())
                .map_err(|_| GeomError::NotDefined)?
                .center();
            let ob = circle_through(t.c(), &o, t.a())
                .map_err(|_| GeomError::NotDefined)?
                .center();
            meet(&join(t.a(), &oa)?, &join(t.b(), &ob)?).map_err(|_| GeomError::NotDefined)
        }
        CenterId::Kariya(k) => {
            let i = named_center(t, &CenterId::Incenter)?;
            let mut lines = Vec::with_capacity(2);
            for v in [Vertex::A, Vertex::B] {
                let contact = project_onto_line(&i, &t.side_line(v))?;
                let shifted = lincomb(&[(Scalar::one() - k.clone(), &i), (k.clone(), &contact)])?;
                lines.push(join(t.vertex(v), &shifted)?);
            }
            meet(&lines[0], &lines[1]).map_err(|_| GeomError::NotDefined)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::midpoint;
    use crate::projective::{is_collinear, signed_ratio};
    use crate::triangle::cevian::isogonal_conjugate;

    fn euler_points(t: &Triangle) -> (PPoint, PPoint, PPoint) {
        (
            named_center(t, &CenterId::Circumcenter).unwrap(),
            named_center(t, &CenterId::Centroid).unwrap(),
            named_center(t, &CenterId::Orthocenter).unwrap(),
        )
    }
    use crate::triangle::fixtures::{f1, f2};

    fn frac(n: i64, d: i64) -> Scalar {
        Scalar::ratio(n, d)
    }

    fn sc(n: i64) -> Scalar {
        Scalar::from_int(n)
    }

    fn cpt(x: Scalar, y: Scalar) -> PPoint {
        PPoint::from_cartesian(x, y)
    }

    #[test]
    fn classic_centers_on_the_right_fixture() {
        let t = f1();
        assert_eq!(
            named_center(&t, &CenterId::Incenter).unwrap(),
            PPoint::at(1, 1)
        );
        assert_eq!(
            named_center(&t, &CenterId::Circumcenter).unwrap(),
            cpt(sc(2), frac(3, 2))
        );
        assert_eq!(
            named_center(&t, &CenterId::Orthocenter).unwrap(),
            PPoint::at(0, 0)
        );
        assert_eq!(
            named_center(&t, &CenterId::Centroid).unwrap(),
            cpt(frac(4, 3), sc(1))
        );
        assert_eq!(
            named_center(&t, &CenterId::Gergonne).unwrap(),
            cpt(frac(8, 11), frac(9, 11))
        );
        assert_eq!(
            named_center(&t, &CenterId::Nagel).unwrap(),
            PPoint::at(2, 1)
        );
        assert_eq!(
            named_center(&t, &CenterId::Symmedian).unwrap(),
            cpt(frac(18, 25), frac(24, 25))
        );
        assert_eq!(
            named_center(&t, &CenterId::NinePoint).unwrap(),
            cpt(sc(1), frac(3, 4))
        );
    }

    #[test]
    fn heronian_fixture_centers() {
        let t = f2();
        assert_eq!(
            named_center(&t, &CenterId::Circumcenter).unwrap(),
            cpt(sc(7), frac(33, 8))
        );
        assert_eq!(
            named_center(&t, &CenterId::Incenter).unwrap(),
            PPoint::at(6, 4)
        );
    }

    #[test]
    fn symmedian_point_is_the_isogonal_of_the_centroid() {
        for t in [f1(), f2()] {
            let g = named_center(&t, &CenterId::Centroid).unwrap();
            let k = named_center(&t, &CenterId::Symmedian).unwrap();
            assert_eq!(isogonal_conjugate(&t, &g).unwrap(), k);
        }
    }

    #[test]
    fn euler_line_with_signed_ratio() {
        for t in [f1(), f2()] {
            let (o, g, h) = euler_points(&t);
            assert!(is_collinear(&o, &g, &h));
            // HG = 2 · GO as a signed relation: G divides so that
            // (H − G) = −2 (O − G).
            let r = signed_ratio(&g, &h, &o).unwrap();
            assert_eq!(r, sc(-2));
        }
    }

    #[test]
    fn nine_point_center_is_midpoint_of_o_and_h() {
        for t in [f1(), f2()] {
            let (o, _, h) = euler_points(&t);
            let o9 = named_center(&t, &CenterId::NinePoint).unwrap();
            assert_eq!(o9, midpoint(&o, &h).unwrap());
        }
    }

    #[test]
    fn cosnita_point_is_the_isogonal_of_the_nine_point_center() {
        let t = f2();
        let k0 = named_center(&t, &CenterId::Cosnita).unwrap();
        let o9 = named_center(&t, &CenterId::NinePoint).unwrap();
        assert_eq!(k0, isogonal_conjugate(&t, &o9).unwrap());
    }

    #[test]
    fn tarry_and_steiner_are_antipodal_on_the_circumcircle() {
        let t = f2();
        let tarry = named_center(&t, &CenterId::Tarry).unwrap();
        let steiner = named_center(&t, &CenterId::Steiner).unwrap();
        let circ = t.circumcircle();
        assert!(circ.contains(&tarry));
        assert!(circ.contains(&steiner));
        assert_eq!(midpoint(&tarry, &steiner).unwrap(), circ.center());
    }

    #[test]
    fn kariya_point_with_unit_parameter_is_defined() {
        let t = f2();
        // k = 1 places the shifted points at the contact points, so the
        // Kariya cevians are the Gergonne cevians.
        let k1 = named_center(&t, &CenterId::Kariya(sc(1))).unwrap();
        assert_eq!(k1, named_center(&t, &CenterId::Gergonne).unwrap());

        // a generic parameter still yields a concurrency point; verify the
        // third cevian passes through it
        let kp = named_center(&t, &CenterId::Kariya(frac(7, 3))).unwrap();
        let i = named_center(&t, &CenterId::Incenter).unwrap();
        let contact_c = project_onto_line(&i, &t.side_line(Vertex::C)).unwrap();
        let shifted = lincomb(&[(sc(1) - frac(7, 3), &i), (frac(7, 3), &contact_c)]).unwrap();
        assert!(join(t.c(), &shifted).unwrap().contains(&kp));
    }

    #[test]
    fn center_names_round_trip() {
        for id in CenterId::all_fixed() {
            assert_eq!(CenterId::parse(id.name()), Some(id));
        }
    }
}
