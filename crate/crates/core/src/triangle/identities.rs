//! Distance identities between remarkable points, plus the side-symmetric
//! closed forms. Each identity compares a squared distance computed from
//! constructed centers against a closed form in `p, r, R, r_a, S` and the
//! side powers; the residual is `lhs − rhs`, zero when the identity holds.
//!
//! One catalogued identity circulates with a sign error (`HI²` with `−4Rr`);
//! it is kept here, flagged, so suites can document the failing printed form
//! next to the corrected one.

use crate::construct::distance2;
use crate::error::Result;
use crate::projective::PPoint;
use crate::scalar::Scalar;
use crate::triangle::centers::named_center;
use crate::triangle::{CenterId, Triangle, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IdentityId {
    Og2,
    Oh2,
    Oi2,
    OEx2(Vertex),
    Ok2,
    OGamma2,
    On2,
    Gh2,
    Gi2,
    GEx2(Vertex),
    Gk2,
    GGamma2,
    Gn2,
    Hi2,
    /// The misprinted `HI²` variant (`−4Rr`); residual is nonzero by design.
    Hi2PrintedMisprint,
    HEx2(Vertex),
    Hk2,
    HGamma2,
    Hn2,
    IEx2(Vertex),
    IGamma2,
    In2,
    Ik2,
    /// `a² + b² + c² = 2(p² − r² − 4Rr)`
    SumSquares,
    /// `ab + bc + ca = p² + r² + 4Rr`
    SumPairProducts,
    /// `abc = 4Rpr`
    ProductAbc,
    /// `16S² = 2(a²b² + b²c² + c²a²) − (a⁴ + b⁴ + c⁴)`
    SixteenAreaSq,
    /// `IO₉² = (R/2 − r)²` — incircle tangency distance to the Euler circle.
    InNinePoint2,
    /// `I_aO₉² = (R/2 + r_a)²` — excircle tangency distance.
    ExNinePoint2(Vertex),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IdentityStatus {
    /// Residual must be zero.
    Verified,
    /// Documented misprint: residual is expected to be nonzero.
    PrintedMisprint,
}

impl IdentityId {
    pub fn status(&self) -> IdentityStatus {
        match self {
            IdentityId::Hi2PrintedMisprint => IdentityStatus::PrintedMisprint,
            _ => IdentityStatus::Verified,
        }
    }

    pub fn name(&self) -> String {
        let ex = |v: &Vertex| match v {
            Vertex::A => "a",
            Vertex::B => "b",
            Vertex::C => "c",
        };
        match self {
            IdentityId::Og2 => "OG2".into(),
            IdentityId::Oh2 => "OH2".into(),
            IdentityId::Oi2 => "OI2".into(),
            IdentityId::OEx2(v) => format!("OI{}2", ex(v)),
            IdentityId::Ok2 => "OK2".into(),
            IdentityId::OGamma2 => "OGamma2".into(),
            IdentityId::On2 => "ON2".into(),
            IdentityId::Gh2 => "GH2".into(),
            IdentityId::Gi2 => "GI2".into(),
            IdentityId::GEx2(v) => format!("GI{}2", ex(v)),
            IdentityId::Gk2 => "GK2".into(),
            IdentityId::GGamma2 => "GGamma2".into(),
            IdentityId::Gn2 => "GN2".into(),
            IdentityId::Hi2 => "HI2".into(),
            IdentityId::Hi2PrintedMisprint => "HI2_printed".into(),
            IdentityId::HEx2(v) => format!("HI{}2", ex(v)),
            IdentityId::Hk2 => "HK2".into(),
            IdentityId::HGamma2 => "HGamma2".into(),
            IdentityId::Hn2 => "HN2".into(),
            IdentityId::IEx2(v) => format!("II{}2", ex(v)),
            IdentityId::IGamma2 => "IGamma2".into(),
            IdentityId::In2 => "IN2".into(),
            IdentityId::Ik2 => "IK2".into(),
            IdentityId::SumSquares => "sum_squares".into(),
            IdentityId::SumPairProducts => "sum_pair_products".into(),
            IdentityId::ProductAbc => "abc_4Rpr".into(),
            IdentityId::SixteenAreaSq => "sixteen_area_sq".into(),
            IdentityId::InNinePoint2 => "IO9_2".into(),
            IdentityId::ExNinePoint2(v) => format!("I{}O9_2", ex(v)),
        }
    }

    pub fn parse(s: &str) -> Option<IdentityId> {
        annex_identity_ids().into_iter().find(|id| id.name() == s)
    }
}

/// Every catalogued identity, excircle variants expanded.
pub fn annex_identity_ids() -> Vec<IdentityId> {
    let mut ids = vec![
        IdentityId::Og2,
        IdentityId::Oh2,
        IdentityId::Oi2,
        IdentityId::Ok2,
        IdentityId::OGamma2,
        IdentityId::On2,
        IdentityId::Gh2,
        IdentityId::Gi2,
        IdentityId::Gk2,
        IdentityId::GGamma2,
        IdentityId::Gn2,
        IdentityId::Hi2,
        IdentityId::Hi2PrintedMisprint,
        IdentityId::Hk2,
        IdentityId::HGamma2,
        IdentityId::Hn2,
        IdentityId::IGamma2,
        IdentityId::In2,
        IdentityId::Ik2,
        IdentityId::SumSquares,
        IdentityId::SumPairProducts,
        IdentityId::ProductAbc,
        IdentityId::SixteenAreaSq,
        IdentityId::InNinePoint2,
    ];
    for v in Vertex::ALL {
        ids.push(IdentityId::OEx2(v));
        ids.push(IdentityId::GEx2(v));
        ids.push(IdentityId::HEx2(v));
        ids.push(IdentityId::IEx2(v));
        ids.push(IdentityId::ExNinePoint2(v));
    }
    ids
}

struct Frame {
    p: Scalar,
    r: Scalar,
    big_r: Scalar,
    area: Scalar,
    a: Scalar,
    b: Scalar,
    c: Scalar,
    a2: Scalar,
    b2: Scalar,
    c2: Scalar,
}

impl Frame {
    fn of(t: &Triangle) -> Frame {
        let m = t.metrics();
        Frame {
            p: m.p.clone(),
            r: m.r.clone(),
            big_r: m.big_r.clone(),
            area: m.area.clone(),
            a: m.a.clone(),
            b: m.b.clone(),
            c: m.c.clone(),
            a2: m.a2.clone(),
            b2: m.b2.clone(),
            c2: m.c2.clone(),
        }
    }

    fn sum_sq(&self) -> Scalar {
        self.a2.clone() + self.b2.clone() + self.c2.clone()
    }

    fn sum_sq_products(&self) -> Scalar {
        self.a2.clone() * self.b2.clone()
            + self.b2.clone() * self.c2.clone()
            + self.c2.clone() * self.a2.clone()
    }

    fn sum_fourth(&self) -> Scalar {
        self.a2.squared() + self.b2.squared() + self.c2.squared()
    }

    /// `a²b²c² = (4RS)²`, kept in squared side powers.
    fn sq_product(&self) -> Scalar {
        self.a2.clone() * self.b2.clone() * self.c2.clone()
    }
}

fn sc(n: i64) -> Scalar {
    Scalar::from_int(n)
}

fn frac(n: i64, d: i64) -> Scalar {
    Scalar::ratio(n, d)
}

fn center(t: &Triangle, id: CenterId) -> Result<PPoint> {
    named_center(t, &id)
}

fn dist2_centers(t: &Triangle, x: CenterId, y: CenterId) -> Result<Scalar> {
    distance2(&center(t, x)?, &center(t, y)?)
}

fn dist2_center_excenter(t: &Triangle, x: CenterId, v: Vertex) -> Result<Scalar> {
    distance2(&center(t, x)?, &t.excenter(v)?)
}

/// Residual `lhs − rhs` of the identity on this triangle; zero when it
/// holds (under the backend's equality policy).
pub fn evaluate_annex_identity(id: &IdentityId, t: &Triangle) -> Result<Scalar> {
    let f = Frame::of(t);
    let (p, r, big_r) = (f.p.clone(), f.r.clone(), f.big_r.clone());
    let p2 = p.squared();
    let r2 = r.squared();
    let rr2 = big_r.squared();
    use CenterId::*;
    let (lhs, rhs): (Scalar, Scalar) = match id {
        IdentityId::Og2 => (
            dist2_centers(t, Circumcenter, Centroid)?,
            frac(1, 9)
                * (sc(9) * rr2 - sc(2) * p2 + sc(2) * r2 + sc(8) * big_r.clone() * r.clone()),
        ),
        IdentityId::Oh2 => (
            dist2_centers(t, Circumcenter, Orthocenter)?,
            sc(9) * rr2 - sc(2) * p2 + sc(2) * r2 + sc(8) * big_r.clone() * r.clone(),
        ),
        IdentityId::Oi2 => (
            dist2_centers(t, Circumcenter, Incenter)?,
            rr2 - sc(2) * big_r.clone() * r.clone(),
        ),
        IdentityId::OEx2(v) => (
            dist2_center_excenter(t, Circumcenter, *v)?,
            rr2 + sc(2) * big_r.clone() * t.metrics().exradius(*v).clone(),
        ),
        IdentityId::Ok2 => (
            dist2_centers(t, Circumcenter, Symmedian)?,
            rr2 - sc(3) * f.sq_product().checked_div(&f.sum_sq().squared())?,
        ),
        IdentityId::OGamma2 => {
            let four_r_plus_r = sc(4) * big_r.clone() + r.clone();
            (
                dist2_centers(t, Circumcenter, Gergonne)?,
                rr2 - (sc(4) * p2 * r.clone() * (big_r.clone() + r.clone()))
                    .checked_div(&four_r_plus_r.squared())?,
            )
        }
        IdentityId::On2 => (
            dist2_centers(t, Circumcenter, Nagel)?,
            (big_r.clone() - sc(2) * r.clone()).squared(),
        ),
        IdentityId::Gh2 => (
            dist2_centers(t, Centroid, Orthocenter)?,
            frac(4, 9)
                * (sc(9) * rr2 - sc(2) * p2 + sc(2) * r2 + sc(8) * big_r.clone() * r.clone()),
        ),
        IdentityId::Gi2 => (
            dist2_centers(t, Centroid, Incenter)?,
            frac(1, 9) * (p2 + sc(5) * r2 - sc(16) * big_r.clone() * r.clone()),
        ),
        IdentityId::GEx2(v) => {
            let (side, side2) = match v {
                Vertex::A => (f.a.clone(), f.a2.clone()),
                Vertex::B => (f.b.clone(), f.b2.clone()),
                Vertex::C => (f.c.clone(), f.c2.clone()),
            };
            let cubes = f.a2.clone() * f.a.clone()
                + f.b2.clone() * f.b.clone()
                + f.c2.clone() * f.c.clone()
                - sc(2) * side2 * side.clone();
            (
                dist2_center_excenter(t, Centroid, *v)?,
                frac(2, 9) * f.sum_sq() - cubes.checked_div(&(sc(6) * (p.clone() - side)))?
                    + sc(2) * big_r.clone() * t.metrics().exradius(*v).clone(),
            )
        }
        IdentityId::Gk2 => {
            let s = f.sum_sq();
            (
                dist2_centers(t, Centroid, Symmedian)?,
                (sc(2) * s.clone() * s.clone() * s.clone()
                    - sc(3) * s.clone() * f.sum_fourth()
                    - sc(27) * f.sq_product())
                .checked_div(&(sc(9) * s.squared()))?,
            )
        }
        IdentityId::GGamma2 => {
            let q = sc(4) * big_r.clone() + r.clone();
            (
                dist2_centers(t, Centroid, Gergonne)?,
                (sc(4)
                    * (p2 * (sc(4) * rr2 + sc(8) * big_r.clone() * r.clone() - sc(5) * r2)
                        - r.clone() * q.clone() * q.clone() * q.clone()))
                .checked_div(&(sc(9) * q.squared()))?,
            )
        }
        IdentityId::Gn2 => (
            dist2_centers(t, Centroid, Nagel)?,
            frac(4, 9) * (p2 + sc(5) * r2 - sc(16) * big_r.clone() * r.clone()),
        ),
        IdentityId::Hi2 => (
            dist2_centers(t, Orthocenter, Incenter)?,
            sc(4) * rr2 + sc(4) * big_r.clone() * r.clone() + sc(3) * r2 - p2,
        ),
        IdentityId::Hi2PrintedMisprint => (
            dist2_centers(t, Orthocenter, Incenter)?,
            sc(4) * rr2 - sc(4) * big_r.clone() * r.clone() + sc(3) * r2 - p2,
        ),
        IdentityId::HEx2(v) => (
            dist2_center_excenter(t, Orthocenter, *v)?,
            sc(4) * rr2
                + sc(2) * t.metrics().exradius(*v).squared()
                + r2
                + sc(4) * big_r.clone() * r.clone()
                - p2,
        ),
        IdentityId::Hk2 => {
            let s = f.sum_sq();
            (
                dist2_centers(t, Orthocenter, Symmedian)?,
                sc(4) * rr2 - s.clone()
                    + (sc(2) * s.clone() * f.sum_sq_products() - sc(3) * f.sq_product())
                        .checked_div(&s.squared())?,
            )
        }
        IdentityId::HGamma2 => {
            let q = sc(4) * big_r.clone() + r.clone();
            (
                dist2_centers(t, Orthocenter, Gergonne)?,
                sc(4)
                    * rr2.clone()
                    * (Scalar::one()
                        - (sc(2) * p2 * (sc(2) * big_r.clone() - r.clone()))
                            .checked_div(&(big_r.clone() * q.squared()))?),
            )
        }
        IdentityId::Hn2 => (
            dist2_centers(t, Orthocenter, Nagel)?,
            sc(4) * big_r.clone() * (big_r.clone() - sc(2) * r.clone()),
        ),
        IdentityId::IEx2(v) => (
            dist2_center_excenter(t, Incenter, *v)?,
            sc(4) * big_r.clone() * (t.metrics().exradius(*v).clone() - r.clone()),
        ),
        IdentityId::IGamma2 => {
            let q = sc(4) * big_r.clone() + r.clone();
            (
                dist2_centers(t, Incenter, Gergonne)?,
                r2 * (Scalar::one() - (sc(3) * p2).checked_div(&q.squared())?),
            )
        }
        IdentityId::In2 => (
            dist2_centers(t, Incenter, Nagel)?,
            p2 + sc(5) * r2 - sc(16) * big_r.clone() * r.clone(),
        ),
        IdentityId::Ik2 => {
            let q = sc(4) * big_r.clone() + r.clone();
            let den = (p2.clone() - r2.clone() - sc(4) * big_r.clone() * r.clone()).squared();
            (
                dist2_centers(t, Incenter, Symmedian)?,
                (sc(4)
                    * r2.clone()
                    * big_r.clone()
                    * (p2 * (big_r.clone() + r.clone()) - r.clone() * q.squared()))
                .checked_div(&den)?,
            )
        }
        IdentityId::SumSquares => (
            f.sum_sq(),
            sc(2) * (p2 - r2 - sc(4) * big_r.clone() * r.clone()),
        ),
        IdentityId::SumPairProducts => (
            f.a.clone() * f.b.clone() + f.b.clone() * f.c.clone() + f.c.clone() * f.a.clone(),
            p2 + r2 + sc(4) * big_r.clone() * r.clone(),
        ),
        IdentityId::ProductAbc => (
            f.a.clone() * f.b.clone() * f.c.clone(),
            sc(4) * big_r.clone() * p.clone() * r.clone(),
        ),
        IdentityId::SixteenAreaSq => (
            sc(16) * f.area.squared(),
            sc(2) * f.sum_sq_products() - f.sum_fourth(),
        ),
        IdentityId::InNinePoint2 => (
            dist2_centers(t, Incenter, NinePoint)?,
            (big_r.clone().checked_div(&sc(2))? - r.clone()).squared(),
        ),
        IdentityId::ExNinePoint2(v) => (
            dist2_center_excenter(t, NinePoint, *v)?,
            (big_r.clone().checked_div(&sc(2))? + t.metrics().exradius(*v).clone()).squared(),
        ),
    };
    Ok(lhs - rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::triangle::fixtures::{f1, f2};

    #[test]
    fn all_verified_identities_vanish_on_both_fixtures() {
        for t in [f1(), f2()] {
            for id in annex_identity_ids() {
                let residual = evaluate_annex_identity(&id, &t).unwrap();
                match id.status() {
                    IdentityStatus::Verified => {
                        assert!(
                            residual.is_zero(),
                            "identity {} residual {} on fixture",
                            id.name(),
                            residual
                        );
                    }
                    IdentityStatus::PrintedMisprint => {
                        assert!(
                            !residual.is_zero(),
                            "misprinted identity {} unexpectedly holds",
                            id.name()
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn spot_values_from_the_fixtures() {
        let t = f2();
        // OI² = 65/64 both ways
        let o = named_center(&t, &CenterId::Circumcenter).unwrap();
        let i = named_center(&t, &CenterId::Incenter).unwrap();
        assert_eq!(distance2(&o, &i).unwrap(), frac(65, 64));

        let t = f1();
        // ON² = 1/4, HI² = 2
        let o = named_center(&t, &CenterId::Circumcenter).unwrap();
        let n = named_center(&t, &CenterId::Nagel).unwrap();
        assert_eq!(distance2(&o, &n).unwrap(), frac(1, 4));
        let h = named_center(&t, &CenterId::Orthocenter).unwrap();
        let i = named_center(&t, &CenterId::Incenter).unwrap();
        assert_eq!(distance2(&h, &i).unwrap(), sc(2));
        // the printed HI² misprint is off by exactly 8Rr = 20
        let res = evaluate_annex_identity(&IdentityId::Hi2PrintedMisprint, &t).unwrap();
        assert_eq!(res, sc(20));
    }

    #[test]
    fn identity_names_round_trip() {
        for id in annex_identity_ids() {
            assert_eq!(IdentityId::parse(&id.name()), Some(id));
        }
    }
}
