//! Concrete plane transforms: homothety, circle inversion and pole–polar
//! duality, acting on points, lines, circles, triangles and scenes.

use crate::construct::{distance2, lincomb, parallel_through};
use crate::error::{GeomError, Result};
use crate::metric::{polar_line, Circle};
use crate::projective::{join, meet, PLine, PPoint};
use crate::scalar::Scalar;
use crate::scene::{Assertion, Element, Scene};
use crate::triangle::Triangle;

/// `M ↦ center + ratio (M − center)`, ratio nonzero.
#[derive(Debug, Clone, PartialEq)]
pub struct Homothety {
    center: PPoint,
    ratio: Scalar,
}

impl Homothety {
    pub fn new(center: PPoint, ratio: Scalar) -> Result<Homothety> {
        if ratio.is_zero() {
            return Err(GeomError::DivisionByZero);
        }
        if !center.is_finite() {
            return Err(GeomError::AtInfinity);
        }
        Ok(Homothety { center, ratio })
    }

    pub fn center(&self) -> &PPoint {
        &self.center
    }

    pub fn ratio(&self) -> &Scalar {
        &self.ratio
    }

    pub fn apply_point(&self, p: &PPoint) -> Result<PPoint> {
        lincomb(&[
            (Scalar::one() - self.ratio.clone(), &self.center),
            (self.ratio.clone(), p),
        ])
    }

    /// Lines map to parallel lines (a line through the center maps to
    /// itself).
    pub fn apply_line(&self, l: &PLine) -> Result<PLine> {
        let [p0, p1] = crate::construct::points_on_line(l)?;
        join(&self.apply_point(&p0)?, &self.apply_point(&p1)?)
    }

    /// Circles map to circles with `radius²` scaled by `ratio²`.
    pub fn apply_circle(&self, c: &Circle) -> Result<Circle> {
        let center = self.apply_point(&c.center())?;
        Circle::from_center_radius2(&center, self.ratio.squared() * c.radius2())
    }

    pub fn apply_triangle(&self, t: &Triangle) -> Result<Triangle> {
        Triangle::new(
            self.apply_point(t.a())?,
            self.apply_point(t.b())?,
            self.apply_point(t.c())?,
        )
    }

    pub fn inverse(&self) -> Homothety {
        Homothety {
            center: self.center.clone(),
            ratio: Scalar::one()
                .checked_div(&self.ratio)
                .expect("nonzero ratio"),
        }
    }
}

/// Plane translation (the ratio-product-one composition case).
#[derive(Debug, Clone, PartialEq)]
pub struct Translation {
    pub dx: Scalar,
    pub dy: Scalar,
}

impl Translation {
    pub fn apply_point(&self, p: &PPoint) -> Result<PPoint> {
        crate::construct::translate(p, &self.dx, &self.dy)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum HomothetyComposition {
    Homothety(Homothety),
    Translation(Translation),
}

/// Composition `first ∘ second` (apply `second`, then `first`). The result
/// is a homothety with the product ratio and center on the line of centers,
/// or a translation when the ratios multiply to one.
pub fn compose_homotheties(first: &Homothety, second: &Homothety) -> Result<HomothetyComposition> {
    let k = first.ratio.clone() * second.ratio.clone();
    // track the image of one probe point to solve for the fixed point
    let probe = PPoint::at(0, 0);
    let image = first.apply_point(&second.apply_point(&probe)?)?;
    let (ix, iy) = image.xy()?;
    if k.is_one() {
        return Ok(HomothetyComposition::Translation(Translation {
            dx: ix,
            dy: iy,
        }));
    }
    // image = k · probe + t  =>  fixed point F = t / (1 − k)
    let one_minus = Scalar::one() - k.clone();
    let fx = ix.checked_div(&one_minus)?;
    let fy = iy.checked_div(&one_minus)?;
    Ok(HomothetyComposition::Homothety(Homothety::new(
        PPoint::from_cartesian(fx, fy),
        k,
    )?))
}

/// The pair of homotheties exchanging two non-concentric circles.
#[derive(Debug, Clone)]
pub struct CirclePairHomothety {
    /// Maps the first circle onto the second with positive ratio; absent for
    /// congruent circles (the direct center recedes to infinity and the map
    /// degenerates to a translation).
    pub direct: Option<Homothety>,
    /// Always defined: negative-ratio exchange through the internal center.
    pub inverse: Homothety,
}

impl CirclePairHomothety {
    pub fn direct_center(&self) -> Option<PPoint> {
        self.direct.as_ref().map(|h| h.center().clone())
    }

    pub fn inverse_center(&self) -> PPoint {
        self.inverse.center().clone()
    }
}

/// Direct and inverse homothety centers of two circles. The radius ratio is
/// `√(r₁²/r₂²)`, exact whenever that quotient is a perfect square.
pub fn homothety_between_circles(c1: &Circle, c2: &Circle) -> Result<CirclePairHomothety> {
    let o1 = c1.center();
    let o2 = c2.center();
    if o1 == o2 {
        return Err(GeomError::Concentric);
    }
    let ratio2 = c2.radius2().checked_div(&c1.radius2())?;
    let rho = ratio2.sqrt()?; // r2 / r1
    let inverse_center = lincomb(&[(Scalar::one(), &o2), (rho.clone(), &o1)])?;
    let inverse = Homothety::new(inverse_center, -rho.clone())?;
    let direct = if rho.is_one() {
        None
    } else {
        // external division: (o2 − rho·o1) / (1 − rho)
        let center = lincomb(&[(Scalar::one(), &o2), (-rho.clone(), &o1)])?;
        Some(Homothety::new(center, rho)?)
    };
    Ok(CirclePairHomothety { direct, inverse })
}

/// Inversion with pole and nonzero power; positive power has the fundamental
/// circle `radius² = power`.
#[derive(Debug, Clone, PartialEq)]
pub struct Inversion {
    pole: PPoint,
    power: Scalar,
}

/// Image of a line under inversion.
#[derive(Debug, Clone)]
pub enum LineImage {
    /// A through-pole line maps to itself.
    Line(PLine),
    /// Other lines map to a circle through the pole; the pole itself is
    /// excluded from the image, carried as the `punctured` flag.
    Circle { circle: Circle, punctured: bool },
}

/// Image of a circle under inversion.
#[derive(Debug, Clone)]
pub enum CircleImage {
    /// A through-pole circle maps to a line (punctured at the pole).
    Line(PLine),
    Circle(Circle),
}

impl Inversion {
    pub fn new(pole: PPoint, power: Scalar) -> Result<Inversion> {
        if power.is_zero() {
            return Err(GeomError::DivisionByZero);
        }
        if !pole.is_finite() {
            return Err(GeomError::AtInfinity);
        }
        Ok(Inversion { pole, power })
    }

    pub fn pole(&self) -> &PPoint {
        &self.pole
    }

    pub fn power(&self) -> &Scalar {
        &self.power
    }

    /// Fundamental circle (positive power only).
    pub fn fundamental_circle(&self) -> Result<Circle> {
        Circle::from_center_radius2(&self.pole, self.power.clone())
    }

    /// `P′ = pole + power (P − pole) / |P − pole|²` — the algebraic form
    /// needs only the squared distance, so the exact backend stays rational.
    pub fn invert_point(&self, p: &PPoint) -> Result<PPoint> {
        if p == &self.pole {
            return Err(GeomError::AtPole);
        }
        if !p.is_finite() {
            return Err(GeomError::AtInfinity);
        }
        let d2 = distance2(p, &self.pole)?;
        let s = self.power.checked_div(&d2)?;
        lincomb(&[(Scalar::one() - s.clone(), &self.pole), (s, p)])
    }

    pub fn invert_line(&self, l: &PLine) -> Result<LineImage> {
        if l.is_at_infinity() {
            return Err(GeomError::AtInfinity);
        }
        if l.contains(&self.pole) {
            return Ok(LineImage::Line(l.clone()));
        }
        // diameter endpoints: the pole and the inverse of the foot of the
        // perpendicular from the pole
        let foot = crate::construct::project_onto_line(&self.pole, l)?;
        let far = self.invert_point(&foot)?;
        let center = crate::construct::midpoint(&self.pole, &far)?;
        let r2 = distance2(&center, &self.pole)?;
        Ok(LineImage::Circle {
            circle: Circle::from_center_radius2(&center, r2)?,
            punctured: true,
        })
    }

    pub fn invert_circle(&self, c: &Circle) -> Result<CircleImage> {
        let p = crate::metric::power_of_point(&self.pole, c)?;
        if p.is_zero() {
            // through-pole circle -> line: invert two other circle points.
            // One is the diametric opposite of the pole; the second comes
            // from a chord through it that avoids the pole.
            let center = c.center();
            let d = crate::construct::reflect_point_through(&self.pole, &center)?;
            let (cx, cy) = center.xy()?;
            let (px, py) = self.pole.xy()?;
            let half = Scalar::ratio(1, 2);
            let m = PPoint::from_cartesian(
                cx.clone() - half.clone() * (cy.clone() - py),
                cy + half * (cx - px),
            );
            let chord = join(&d, &m)?;
            let q = crate::metric::second_intersection(c, &d, &chord)?;
            let i1 = self.invert_point(&d)?;
            let i2 = self.invert_point(&q)?;
            return Ok(CircleImage::Line(join(&i1, &i2)?));
        }
        // otherwise: the homothety with ratio power / p maps c to the image
        let ratio = self.power.checked_div(&p)?;
        let h = Homothety::new(self.pole.clone(), ratio)?;
        Ok(CircleImage::Circle(h.apply_circle(c)?))
    }

    /// Residual of the distance transformation law
    /// `|M′N′|² (|OM|² |ON|²) − power² |MN|²`; exactly zero.
    pub fn distance_check(&self, m: &PPoint, n: &PPoint) -> Result<Scalar> {
        let m1 = self.invert_point(m)?;
        let n1 = self.invert_point(n)?;
        let lhs = distance2(&m1, &n1)? * distance2(m, &self.pole)? * distance2(n, &self.pole)?;
        let rhs = self.power.squared() * distance2(m, n)?;
        Ok(lhs - rhs)
    }
}

/// Polar line of a finite point distinct from the center.
pub fn polar(c: &Circle, p: &PPoint) -> Result<PLine> {
    if p == &c.center() {
        return Err(GeomError::AtCenter);
    }
    polar_line(c, p)
}

/// Pole of a line not through the center (inverse of [`polar`]).
pub fn pole(c: &Circle, l: &PLine) -> Result<PPoint> {
    if l.contains(&c.center()) {
        return Err(GeomError::ThroughCenter);
    }
    let [d, e, _f] = c.coeffs();
    let [u, v, t] = l.coeffs();
    let half = Scalar::ratio(1, 2);
    let denom = half.clone() * (d.clone() * u.clone() + e.clone() * v.clone()) - t;
    let s = c.radius2().checked_div(&denom)?;
    Ok(PPoint::from_cartesian(
        u * s.clone() - half.clone() * d,
        v * s - half * e,
    ))
}

/// Two points are conjugate when each lies on the other's polar.
pub fn are_conjugate(c: &Circle, p: &PPoint, q: &PPoint) -> Result<bool> {
    Ok(polar(c, p)?.contains(q))
}

/// Swap every point with its polar and every line with its pole; incidence
/// assertions map to their duals and are re-verified. Scene circles and
/// triangles are not dualized (conic polarity is out of scope).
pub fn duality_transform(c: &Circle, scene: &Scene) -> Result<Scene> {
    let center = c.center();
    let mut out = Scene::new();
    for (name, element) in scene.iter() {
        match element {
            Element::Point(p) => {
                if p == &center {
                    return Err(GeomError::CenterIncident(name.to_string()));
                }
                out.insert(name, Element::Line(polar(c, p)?))?;
            }
            Element::Line(l) => {
                if l.contains(&center) {
                    return Err(GeomError::CenterIncident(name.to_string()));
                }
                out.insert(name, Element::Point(pole(c, l)?))?;
            }
            _ => return Err(GeomError::UnsupportedElement(name.to_string())),
        }
    }
    for assertion in scene.assertions() {
        let dual = match assertion {
            Assertion::Collinear(names) => Assertion::Concurrent(names.clone()),
            Assertion::Concurrent(names) => Assertion::Collinear(names.clone()),
            Assertion::OnLine(p, l) => Assertion::OnLine(l.clone(), p.clone()),
            Assertion::Eq(x, y) => Assertion::Eq(x.clone(), y.clone()),
            other => {
                return Err(GeomError::UnsupportedElement(format!("{other:?}")));
            }
        };
        out.assert_that(dual);
    }
    Ok(out)
}

/// Meet of a line with another, wrapped for callers that only need the
/// existence check.
pub fn lines_meet_at(l: &PLine, m: &PLine) -> Result<PPoint> {
    meet(l, m)
}

/// Parallel transport helper used by perspectivity fixtures: the image of
/// `t` under translating so lines stay parallel.
pub fn parallel_line_through(l: &PLine, p: &PPoint) -> Result<PLine> {
    parallel_through(l, p)
}
