//! Homogeneous-coordinate points and lines, incidence predicates, signed
//! ratios, cross-ratio and harmonic conjugation.
//!
//! Exact-backend triples are stored canonically: integer coordinates with
//! gcd 1 and the first nonzero coordinate positive, so equality is bit-exact
//! and values are usable as regression anchors. Float triples are normalized
//! to unit max-magnitude with the same sign rule.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{GeomError, Result};
use crate::scalar::{Scalar, DEFAULT_TOL};

/// Canonicalized homogeneous triple shared by points and lines.
#[derive(Debug, Clone)]
pub(crate) enum Triple {
    Exact([BigInt; 3]),
    Float { v: [f64; 3], tol: f64 },
}

impl Triple {
    pub(crate) fn from_scalars(coords: [Scalar; 3]) -> Result<Triple> {
        let all_exact = coords.iter().all(|c| c.is_exact());
        if all_exact {
            let rats: Vec<&BigRational> = coords
                .iter()
                .map(|c| c.as_rational().expect("checked exact"))
                .collect();
            // Clear denominators: multiply through by the product of the
            // denominators, then reduce by the gcd.
            let d01 = rats[0].denom() * rats[1].denom();
            let den_all = &d01 * rats[2].denom();
            let ints = [
                rats[0].numer() * (&den_all / rats[0].denom()),
                rats[1].numer() * (&den_all / rats[1].denom()),
                rats[2].numer() * (&den_all / rats[2].denom()),
            ];
            Triple::exact_canonical(ints)
        } else {
            let tol = coords.iter().fold(0.0_f64, |t, c| t.max(c.tol()));
            let tol = if tol == 0.0 { DEFAULT_TOL } else { tol };
            Triple::float_canonical(
                [coords[0].to_f64(), coords[1].to_f64(), coords[2].to_f64()],
                tol,
            )
        }
    }

    pub(crate) fn exact_canonical(ints: [BigInt; 3]) -> Result<Triple> {
        if ints.iter().all(|x| x.is_zero()) {
            return Err(GeomError::ZeroTriple);
        }
        let g = ints[0].gcd(&ints[1]).gcd(&ints[2]);
        let mut out = [&ints[0] / &g, &ints[1] / &g, &ints[2] / &g];
        let flip = out
            .iter()
            .find(|x| !x.is_zero())
            .map(|x| x.is_negative())
            .unwrap_or(false);
        if flip {
            for x in &mut out {
                *x = -std::mem::take(x);
            }
        }
        Ok(Triple::Exact(out))
    }

    pub(crate) fn float_canonical(v: [f64; 3], tol: f64) -> Result<Triple> {
        let m = v.iter().fold(0.0_f64, |a, x| a.max(x.abs()));
        if m == 0.0 || !m.is_finite() {
            return Err(GeomError::ZeroTriple);
        }
        let mut out = [v[0] / m, v[1] / m, v[2] / m];
        let flip = out
            .iter()
            .find(|x| x.abs() > 1e-12)
            .map(|x| *x < 0.0)
            .unwrap_or(false);
        if flip {
            for x in &mut out {
                *x = -*x;
            }
        }
        Ok(Triple::Float { v: out, tol })
    }

    pub(crate) fn coord(&self, i: usize) -> Scalar {
        match self {
            Triple::Exact(v) => Scalar::from_rational(BigRational::from_integer(v[i].clone())),
            Triple::Float { v, tol } => Scalar::float_with_tol(v[i], *tol),
        }
    }

    pub(crate) fn tol(&self) -> f64 {
        match self {
            Triple::Exact(_) => DEFAULT_TOL,
            Triple::Float { tol, .. } => *tol,
        }
    }

    fn to_f64(&self) -> [f64; 3] {
        match self {
            Triple::Exact(v) => {
                let m = [&v[0], &v[1], &v[2]]
                    .iter()
                    .map(|x| x.abs())
                    .max()
                    .expect("nonempty");
                // Scale down so huge integers still convert faithfully.
                let fv = |x: &BigInt| {
                    let r = BigRational::new(x.clone(), m.clone());
                    r.to_f64().unwrap_or(0.0)
                };
                [fv(&v[0]), fv(&v[1]), fv(&v[2])]
            }
            Triple::Float { v, .. } => *v,
        }
    }

    /// Cross product, canonicalized. Errors when the operands are
    /// proportional (zero cross product).
    pub(crate) fn cross(&self, other: &Triple) -> Result<Triple> {
        match (self, other) {
            (Triple::Exact(a), Triple::Exact(b)) => Triple::exact_canonical([
                &a[1] * &b[2] - &a[2] * &b[1],
                &a[2] * &b[0] - &a[0] * &b[2],
                &a[0] * &b[1] - &a[1] * &b[0],
            ]),
            _ => {
                let a = self.to_f64();
                let b = other.to_f64();
                let v = [
                    a[1] * b[2] - a[2] * b[1],
                    a[2] * b[0] - a[0] * b[2],
                    a[0] * b[1] - a[1] * b[0],
                ];
                let tol = self.tol().max(other.tol());
                // Proportional triples: cross is zero relative to |a||b| ~ 1.
                let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
                if norm <= tol * 10.0 {
                    return Err(GeomError::ZeroTriple);
                }
                Triple::float_canonical(v, tol)
            }
        }
    }

    /// Incidence form `a0 b0 + a1 b1 + a2 b2 = 0` under the backend policy.
    pub(crate) fn dot_is_zero(&self, other: &Triple) -> bool {
        match (self, other) {
            (Triple::Exact(a), Triple::Exact(b)) => {
                (&a[0] * &b[0] + &a[1] * &b[1] + &a[2] * &b[2]).is_zero()
            }
            _ => {
                let a = self.to_f64();
                let b = other.to_f64();
                let terms = [a[0] * b[0], a[1] * b[1], a[2] * b[2]];
                let s = terms.iter().sum::<f64>();
                let m = terms.iter().fold(0.0_f64, |acc, t| acc.max(t.abs()));
                let tol = self.tol().max(other.tol());
                m == 0.0 || s.abs() <= tol * m
            }
        }
    }

    pub(crate) fn proportional(&self, other: &Triple) -> bool {
        match (self, other) {
            (Triple::Exact(a), Triple::Exact(b)) => a == b,
            _ => {
                let a = self.to_f64();
                let b = other.to_f64();
                let v = [
                    a[1] * b[2] - a[2] * b[1],
                    a[2] * b[0] - a[0] * b[2],
                    a[0] * b[1] - a[1] * b[0],
                ];
                let tol = self.tol().max(other.tol());
                let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
                norm <= tol * 10.0
            }
        }
    }

    fn det3_is_zero(a: &Triple, b: &Triple, c: &Triple) -> bool {
        match (a, b, c) {
            (Triple::Exact(x), Triple::Exact(y), Triple::Exact(z)) => {
                let d = &x[0] * (&y[1] * &z[2] - &y[2] * &z[1])
                    - &x[1] * (&y[0] * &z[2] - &y[2] * &z[0])
                    + &x[2] * (&y[0] * &z[1] - &y[1] * &z[0]);
                d.is_zero()
            }
            _ => {
                let (x, y, z) = (a.to_f64(), b.to_f64(), c.to_f64());
                let t1 = x[0] * (y[1] * z[2] - y[2] * z[1]);
                let t2 = x[1] * (y[0] * z[2] - y[2] * z[0]);
                let t3 = x[2] * (y[0] * z[1] - y[1] * z[0]);
                let d = t1 - t2 + t3;
                let m = t1.abs().max(t2.abs()).max(t3.abs());
                let tol = a.tol().max(b.tol()).max(c.tol());
                m == 0.0 || d.abs() <= tol * m.max(1e-9)
            }
        }
    }
}

impl PartialEq for Triple {
    fn eq(&self, other: &Self) -> bool {
        self.proportional(other)
    }
}

/// Projective point in homogeneous coordinates `(x : y : w)`; `w = 0` is a
/// point at infinity (a direction).
#[derive(Debug, Clone, PartialEq)]
pub struct PPoint(pub(crate) Triple);

/// Projective line `u x + v y + t w = 0`; `(0 : 0 : 1)` is the line at
/// infinity.
#[derive(Debug, Clone, PartialEq)]
pub struct PLine(pub(crate) Triple);

impl PPoint {
    pub fn from_homogeneous(x: Scalar, y: Scalar, w: Scalar) -> Result<PPoint> {
        Ok(PPoint(Triple::from_scalars([x, y, w])?))
    }

    pub fn from_cartesian(x: Scalar, y: Scalar) -> PPoint {
        PPoint(Triple::from_scalars([x, y, Scalar::one()]).expect("w = 1 is nonzero"))
    }

    /// Integer convenience constructor.
    pub fn at(x: i64, y: i64) -> PPoint {
        PPoint::from_cartesian(Scalar::from_int(x), Scalar::from_int(y))
    }

    /// Direction `(dx : dy : 0)` — a point at infinity.
    pub fn direction(dx: Scalar, dy: Scalar) -> Result<PPoint> {
        PPoint::from_homogeneous(dx, dy, Scalar::zero())
    }

    pub fn coords(&self) -> [Scalar; 3] {
        [self.0.coord(0), self.0.coord(1), self.0.coord(2)]
    }

    pub fn is_at_infinity(&self) -> bool {
        self.0.coord(2).is_zero()
    }

    pub fn is_finite(&self) -> bool {
        !self.is_at_infinity()
    }

    /// Cartesian abscissa; errors for a point at infinity.
    pub fn x(&self) -> Result<Scalar> {
        let w = self.0.coord(2);
        if w.is_zero() {
            return Err(GeomError::AtInfinity);
        }
        self.0.coord(0).checked_div(&w)
    }

    /// Cartesian ordinate; errors for a point at infinity.
    pub fn y(&self) -> Result<Scalar> {
        let w = self.0.coord(2);
        if w.is_zero() {
            return Err(GeomError::AtInfinity);
        }
        self.0.coord(1).checked_div(&w)
    }

    pub fn xy(&self) -> Result<(Scalar, Scalar)> {
        Ok((self.x()?, self.y()?))
    }

    pub fn on_line(&self, l: &PLine) -> bool {
        self.0.dot_is_zero(&l.0)
    }

    /// Reinterpret under the float backend.
    pub fn to_float_backend(&self) -> PPoint {
        match &self.0 {
            Triple::Float { .. } => self.clone(),
            t => {
                let [x, y, w] = [t.coord(0), t.coord(1), t.coord(2)];
                PPoint(
                    Triple::float_canonical([x.to_f64(), y.to_f64(), w.to_f64()], DEFAULT_TOL)
                        .expect("canonical triple is nonzero"),
                )
            }
        }
    }
}

impl PLine {
    pub fn from_coeffs(u: Scalar, v: Scalar, t: Scalar) -> Result<PLine> {
        Ok(PLine(Triple::from_scalars([u, v, t])?))
    }

    /// The line at infinity `(0 : 0 : 1)`.
    pub fn at_infinity() -> PLine {
        PLine::from_coeffs(Scalar::zero(), Scalar::zero(), Scalar::one()).expect("nonzero triple")
    }

    pub fn coeffs(&self) -> [Scalar; 3] {
        [self.0.coord(0), self.0.coord(1), self.0.coord(2)]
    }

    pub fn is_at_infinity(&self) -> bool {
        self.0.coord(0).is_zero() && self.0.coord(1).is_zero()
    }

    pub fn contains(&self, p: &PPoint) -> bool {
        p.on_line(self)
    }

    /// The direction of a finite line, as a point at infinity.
    pub fn direction_point(&self) -> Result<PPoint> {
        if self.is_at_infinity() {
            return Err(GeomError::AtInfinity);
        }
        let [u, v, _] = self.coeffs();
        PPoint::from_homogeneous(v, -u, Scalar::zero())
    }

    pub fn is_parallel_to(&self, other: &PLine) -> bool {
        if self.is_at_infinity() || other.is_at_infinity() {
            return false;
        }
        match self.direction_point() {
            Ok(d) => other.contains(&d) || d == other.direction_point().expect("finite line"),
            Err(_) => false,
        }
    }
}

/// Line through two distinct points.
pub fn join(p: &PPoint, q: &PPoint) -> Result<PLine> {
    match p.0.cross(&q.0) {
        Ok(t) => Ok(PLine(t)),
        Err(GeomError::ZeroTriple) => Err(GeomError::CoincidentPoints),
        Err(e) => Err(e),
    }
}

/// Intersection point of two distinct lines; parallel finite lines meet at
/// infinity.
pub fn meet(l: &PLine, m: &PLine) -> Result<PPoint> {
    match l.0.cross(&m.0) {
        Ok(t) => Ok(PPoint(t)),
        Err(GeomError::ZeroTriple) => Err(GeomError::CoincidentLines),
        Err(e) => Err(e),
    }
}

pub fn is_collinear(p: &PPoint, q: &PPoint, r: &PPoint) -> bool {
    Triple::det3_is_zero(&p.0, &q.0, &r.0)
}

/// Three parallels count as concurrent: they share a point at infinity.
pub fn is_concurrent(l: &PLine, m: &PLine, n: &PLine) -> bool {
    Triple::det3_is_zero(&l.0, &m.0, &n.0)
}

/// The scalar `λ` with `(A − P) = λ (B − P)` in cartesian form, i.e. the
/// signed ratio `PA/PB` along the common line.
pub fn signed_ratio(p: &PPoint, a: &PPoint, b: &PPoint) -> Result<Scalar> {
    if !(p.is_finite() && a.is_finite() && b.is_finite()) {
        return Err(GeomError::AtInfinity);
    }
    if a == b {
        return Err(GeomError::CoincidentPoints);
    }
    if !is_collinear(p, a, b) {
        return Err(GeomError::NotOnLine);
    }
    if p == b {
        return Err(GeomError::DivisionByZero);
    }
    let (px, py) = p.xy()?;
    let (ax, ay) = a.xy()?;
    let (bx, by) = b.xy()?;
    let num_x = ax - px.clone();
    let den_x = bx - px;
    let num_y = ay - py.clone();
    let den_y = by - py;
    // Use the better-conditioned coordinate.
    if den_x.is_zero() {
        num_y.checked_div(&den_y)
    } else if den_y.is_zero() {
        num_x.checked_div(&den_x)
    } else if den_x.abs().to_f64() >= den_y.abs().to_f64() {
        num_x.checked_div(&den_x)
    } else {
        num_y.checked_div(&den_y)
    }
}

/// Projective parameters `(α : β)` of `r` in the base `(p, q)` spanning its
/// line: `r = α p + β q` homogeneously.
fn line_params(r: &Triple, p: &Triple, q: &Triple) -> Result<(Scalar, Scalar)> {
    let line = p.cross(q).map_err(|_| GeomError::CoincidentPoints)?;
    // r × q = α (p × q) and r × p = −β (p × q); read the component where the
    // line triple is largest.
    let idx = {
        let c = [line.coord(0), line.coord(1), line.coord(2)];
        let mags = [
            c[0].abs().to_f64(),
            c[1].abs().to_f64(),
            c[2].abs().to_f64(),
        ];
        let mut best = 0;
        for i in 1..3 {
            if mags[i] > mags[best] {
                best = i;
            }
        }
        best
    };
    let alpha = match r.cross(q) {
        Ok(t) => {
            if !t.proportional(&line) {
                return Err(GeomError::NotCollinear);
            }
            // Recover the ratio with sign: t = ±line after canonicalization
            // loses scale, so recompute the raw component instead.
            raw_cross_component(r, q, idx)
        }
        Err(_) => Scalar::zero(),
    };
    let beta = match r.cross(p) {
        Ok(t) => {
            if !t.proportional(&line) {
                return Err(GeomError::NotCollinear);
            }
            -raw_cross_component(r, p, idx)
        }
        Err(_) => Scalar::zero(),
    };
    let scale = raw_cross_component(p, q, idx);
    if scale.is_zero() {
        return Err(GeomError::CoincidentPoints);
    }
    Ok((alpha.checked_div(&scale)?, beta.checked_div(&scale)?))
}

fn raw_cross_component(a: &Triple, b: &Triple, idx: usize) -> Scalar {
    let (i, j) = match idx {
        0 => (1, 2),
        1 => (2, 0),
        _ => (0, 1),
    };
    a.coord(i) * b.coord(j) - a.coord(j) * b.coord(i)
}

/// Cross-ratio `(ABCD) = (BA/BC) : (DA/DC)` of four collinear points; `D`
/// may be the point at infinity of the line.
pub fn cross_ratio(a: &PPoint, b: &PPoint, c: &PPoint, d: &PPoint) -> Result<Scalar> {
    if a == c {
        return Err(GeomError::CoincidentPoints);
    }
    let (aa, ab) = (Scalar::one(), Scalar::zero());
    let (ca, cb) = (Scalar::zero(), Scalar::one());
    let (ba, bb) = line_params(&b.0, &a.0, &c.0)?;
    let (da, db) = line_params(&d.0, &a.0, &c.0)?;
    let det = |xa: &Scalar, xb: &Scalar, ya: &Scalar, yb: &Scalar| xa * yb - xb * ya;
    // In affine parameters this is ((A−B)(C−D)) / ((C−B)(A−D)).
    let num = det(&aa, &ab, &ba, &bb) * det(&ca, &cb, &da, &db);
    let den = det(&ca, &cb, &ba, &bb) * det(&aa, &ab, &da, &db);
    num.checked_div(&den)
        .map_err(|_| GeomError::CoincidentPoints)
}

/// The unique `D` with `(A,B;C,D)` harmonic: `CA/CB = −DA/DB`. Returns the
/// line's point at infinity when `C` is the midpoint of `(A,B)`.
pub fn harmonic_conjugate(c: &PPoint, a: &PPoint, b: &PPoint) -> Result<PPoint> {
    if c == a || c == b {
        return Err(GeomError::DegenerateHarmonic);
    }
    if a == b {
        return Err(GeomError::CoincidentPoints);
    }
    let (alpha, beta) = line_params(&c.0, &a.0, &b.0)?;
    let [ax, ay, aw] = [a.0.coord(0), a.0.coord(1), a.0.coord(2)];
    let [bx, by, bw] = [b.0.coord(0), b.0.coord(1), b.0.coord(2)];
    PPoint::from_homogeneous(
        alpha.clone() * ax - beta.clone() * bx,
        alpha.clone() * ay - beta.clone() * by,
        alpha * aw - beta * bw,
    )
    .map_err(|_| GeomError::DegenerateHarmonic)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(x: i64, y: i64) -> PPoint {
        PPoint::at(x, y)
    }

    fn frac(n: i64, d: i64) -> Scalar {
        Scalar::ratio(n, d)
    }

    #[test]
    fn cartesian_points_canonicalize() {
        let p = PPoint::from_cartesian(frac(8, 5), frac(9, 5));
        let q = PPoint::from_homogeneous(
            Scalar::from_int(8),
            Scalar::from_int(9),
            Scalar::from_int(5),
        )
        .unwrap();
        assert_eq!(p, q);
        assert_eq!(pt(0, 0).coords().map(|c| c.to_f64()), [0.0, 0.0, 1.0]);
    }

    #[test]
    fn join_and_meet_basics() {
        // x-axis through (0,0) and (1,0)
        let l = join(&pt(0, 0), &pt(1, 0)).unwrap();
        assert!(l.contains(&pt(7, 0)));
        // 3x + 4y − 12 = 0 through (0,3) and (4,0)
        let m = join(&pt(0, 3), &pt(4, 0)).unwrap();
        let expect = PLine::from_coeffs(frac(3, 1), frac(4, 1), Scalar::from_int(-12)).unwrap();
        assert_eq!(m, expect);
        // two directions join into the line at infinity
        let dx = PPoint::direction(Scalar::one(), Scalar::zero()).unwrap();
        let dy = PPoint::direction(Scalar::zero(), Scalar::one()).unwrap();
        assert_eq!(join(&dx, &dy).unwrap(), PLine::at_infinity());

        assert_eq!(join(&pt(1, 1), &pt(1, 1)), Err(GeomError::CoincidentPoints));

        // y = 1 and y = 2 meet at the horizontal direction
        let y1 = PLine::from_coeffs(Scalar::zero(), Scalar::one(), Scalar::from_int(-1)).unwrap();
        let y2 = PLine::from_coeffs(Scalar::zero(), Scalar::one(), Scalar::from_int(-2)).unwrap();
        let p = meet(&y1, &y2).unwrap();
        assert!(p.is_at_infinity());
        assert_eq!(p, PPoint::direction(Scalar::one(), Scalar::zero()).unwrap());

        // 3x+4y=12 and 4x+7y=31 meet at (−8, 9)
        let l1 = PLine::from_coeffs(frac(3, 1), frac(4, 1), Scalar::from_int(-12)).unwrap();
        let l2 = PLine::from_coeffs(frac(4, 1), frac(7, 1), Scalar::from_int(-31)).unwrap();
        assert_eq!(meet(&l1, &l2).unwrap(), pt(-8, 9));
    }

    #[test]
    fn collinearity_and_concurrency() {
        assert!(is_collinear(&pt(0, 0), &pt(1, 1), &pt(2, 2)));
        assert!(!is_collinear(&pt(0, 0), &pt(1, 1), &pt(2, 3)));
        assert!(is_collinear(&pt(-32, 0), &pt(0, 12), &pt(-8, 9)));

        let x0 = PLine::from_coeffs(Scalar::one(), Scalar::zero(), Scalar::zero()).unwrap();
        let y0 = PLine::from_coeffs(Scalar::zero(), Scalar::one(), Scalar::zero()).unwrap();
        let d0 = PLine::from_coeffs(Scalar::one(), Scalar::one(), Scalar::zero()).unwrap();
        let d1 = PLine::from_coeffs(Scalar::one(), Scalar::one(), Scalar::from_int(-1)).unwrap();
        assert!(is_concurrent(&x0, &y0, &d0));
        assert!(!is_concurrent(&x0, &y0, &d1));
    }

    #[test]
    fn signed_ratio_cases() {
        // midpoint
        assert_eq!(
            signed_ratio(&pt(2, 0), &pt(0, 0), &pt(4, 0)).unwrap(),
            Scalar::from_int(-1)
        );
        assert_eq!(
            signed_ratio(&pt(8, 0), &pt(0, 0), &pt(4, 0)).unwrap(),
            Scalar::from_int(2)
        );
        assert_eq!(
            signed_ratio(&pt(0, 0), &pt(0, 0), &pt(4, 0)).unwrap(),
            Scalar::zero()
        );
        assert_eq!(
            signed_ratio(&pt(4, 0), &pt(0, 0), &pt(4, 0)),
            Err(GeomError::DivisionByZero)
        );
        assert_eq!(
            signed_ratio(&pt(1, 1), &pt(0, 0), &pt(4, 0)),
            Err(GeomError::NotOnLine)
        );
    }

    #[test]
    fn cross_ratio_values() {
        let r = cross_ratio(&pt(0, 0), &pt(1, 0), &pt(2, 0), &pt(3, 0)).unwrap();
        assert_eq!(r, frac(-1, 3));

        // B midway between A and C, D at infinity: harmonic
        let inf = PPoint::direction(Scalar::one(), Scalar::zero()).unwrap();
        let r = cross_ratio(&pt(0, 0), &pt(1, 0), &pt(2, 0), &inf).unwrap();
        assert_eq!(r, Scalar::from_int(-1));

        // D at infinity reduces the rapport to BA/BC
        let r = cross_ratio(&pt(0, 0), &pt(3, 0), &pt(4, 0), &inf).unwrap();
        assert_eq!(r, signed_ratio(&pt(3, 0), &pt(0, 0), &pt(4, 0)).unwrap());

        // harmonic_conjugate output satisfies the harmonic rapport
        let d = harmonic_conjugate(&pt(1, 0), &pt(0, 0), &pt(3, 0)).unwrap();
        let r = cross_ratio(&pt(0, 0), &pt(1, 0), &pt(3, 0), &d).unwrap();
        assert_eq!(r, Scalar::from_int(-1));

        assert_eq!(
            cross_ratio(&pt(0, 0), &pt(1, 1), &pt(2, 0), &pt(3, 0)),
            Err(GeomError::NotCollinear)
        );
    }

    #[test]
    fn harmonic_conjugate_cases() {
        // C midpoint of (A,B) -> point at infinity
        let d = harmonic_conjugate(&pt(1, 0), &pt(0, 0), &pt(2, 0)).unwrap();
        assert!(d.is_at_infinity());

        // A=0, B=3, C=1 -> D=−3 (solve the harmonic relation linearly)
        let d = harmonic_conjugate(&pt(1, 0), &pt(0, 0), &pt(3, 0)).unwrap();
        assert_eq!(d, pt(-3, 0));

        // involution
        let c = harmonic_conjugate(&d, &pt(0, 0), &pt(3, 0)).unwrap();
        assert_eq!(c, pt(1, 0));

        // the defining relation CA/CB = −DA/DB holds exactly
        let (a, b, c) = (pt(0, 0), pt(5, 0), pt(2, 0));
        let d = harmonic_conjugate(&c, &a, &b).unwrap();
        let lhs = signed_ratio(&c, &a, &b).unwrap();
        let rhs = signed_ratio(&d, &a, &b).unwrap();
        assert_eq!(lhs, -rhs);

        assert_eq!(
            harmonic_conjugate(&pt(0, 0), &pt(0, 0), &pt(1, 0)),
            Err(GeomError::DegenerateHarmonic)
        );
    }

    #[test]
    fn meet_join_duality() {
        let (p, q, r) = (pt(1, 2), pt(4, -1), pt(0, 5));
        let back = meet(&join(&p, &q).unwrap(), &join(&p, &r).unwrap()).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn scaling_inputs_leaves_canonical_outputs_unchanged() {
        let p1 = PPoint::from_homogeneous(frac(2, 1), frac(4, 1), frac(2, 1)).unwrap();
        let p2 = PPoint::from_homogeneous(frac(-3, 1), frac(-6, 1), frac(-3, 1)).unwrap();
        assert_eq!(p1, p2);
        match (&p1.0, &p2.0) {
            (Triple::Exact(a), Triple::Exact(b)) => assert_eq!(a, b),
            _ => panic!("expected exact triples"),
        }
    }
}
