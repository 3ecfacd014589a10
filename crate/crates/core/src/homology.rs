//! Perspectivity analysis for triangle pairs and triplets: centers, axes,
//! the signed-area criterion, multi-perspectivity over vertex pairings, and
//! the cross-meet (Véronèse) triangle.
//!
//! "Homological" is decided projectively: concurrency at a point at infinity
//! counts, and a pair of homothetic triangles has the line at infinity as
//! its axis. Reports flag the perspector-at-infinity case so callers wanting
//! the affine notion can filter.

use crate::error::{GeomError, Result};
use crate::metric::signed_area;
use crate::projective::{is_collinear, is_concurrent, join, meet, PLine, PPoint};
use crate::scalar::Scalar;
use crate::triangle::{Triangle, Vertex};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Degeneracy {
    SharedVertex(Vertex),
    SharedSideLine(Vertex),
    PerspectorAtInfinity,
    AxisAtInfinity,
    /// All three side meets coincide; the axis is not unique.
    AxisIndeterminate,
}

/// Verdict record for a triangle pair under the identity pairing.
#[derive(Debug, Clone)]
pub struct HomologyReport {
    pub homological: bool,
    pub center: Option<PPoint>,
    pub axis: Option<PLine>,
    /// Vertex correspondence used (reference order against these indices of
    /// the second triangle).
    pub pairing: [Vertex; 3],
    pub degeneracies: Vec<Degeneracy>,
}

/// The common point of the vertex joins, if they concur.
pub fn homology_center(t1: &Triangle, t2: &Triangle) -> Result<Option<PPoint>> {
    for v in Vertex::ALL {
        if t1.vertex(v) == t2.vertex(v) {
            return Err(GeomError::SharedVertex);
        }
    }
    let ja = join(t1.a(), t2.a())?;
    let jb = join(t1.b(), t2.b())?;
    let jc = join(t1.c(), t2.c())?;
    if !is_concurrent(&ja, &jb, &jc) {
        return Ok(None);
    }
    Ok(Some(meet(&ja, &jb)?))
}

/// The common line of the side meets, if they are collinear. Homothetic
/// pairs yield the line at infinity.
pub fn homology_axis(t1: &Triangle, t2: &Triangle) -> Result<Option<PLine>> {
    let mut meets = Vec::with_capacity(3);
    for v in Vertex::ALL {
        let l1 = t1.side_line(v);
        let l2 = t2.side_line(v);
        if l1 == l2 {
            return Err(GeomError::SharedSideLine);
        }
        meets.push(meet(&l1, &l2)?);
    }
    if !is_collinear(&meets[0], &meets[1], &meets[2]) {
        return Ok(None);
    }
    // pick two distinct meets to span the axis
    for (i, j) in [(0usize, 1usize), (0, 2), (1, 2)] {
        if meets[i] != meets[j] {
            return Ok(Some(join(&meets[i], &meets[j])?));
        }
    }
    // all three meets coincide: the axis is indeterminate
    Ok(None)
}

/// Full report with degeneracies flagged instead of thrown.
pub fn analyze(t1: &Triangle, t2: &Triangle) -> HomologyReport {
    let mut degeneracies = Vec::new();
    let mut shared_vertices = 0;
    for v in Vertex::ALL {
        if t1.vertex(v) == t2.vertex(v) {
            degeneracies.push(Degeneracy::SharedVertex(v));
            shared_vertices += 1;
        }
        if t1.side_line(v) == t2.side_line(v) {
            degeneracies.push(Degeneracy::SharedSideLine(v));
        }
    }

    let center = if shared_vertices == 0 {
        homology_center(t1, t2).unwrap_or(None)
    } else {
        None
    };
    let axis = homology_axis(t1, t2).unwrap_or(None);

    if let Some(c) = &center {
        if c.is_at_infinity() {
            degeneracies.push(Degeneracy::PerspectorAtInfinity);
        }
        if axis.is_none()
            && degeneracies
                .iter()
                .all(|d| !matches!(d, Degeneracy::SharedSideLine(_)))
        {
            degeneracies.push(Degeneracy::AxisIndeterminate);
        }
    }
    if let Some(a) = &axis {
        if a.is_at_infinity() {
            degeneracies.push(Degeneracy::AxisAtInfinity);
        }
    }

    HomologyReport {
        homological: center.is_some(),
        center,
        axis,
        pairing: [Vertex::A, Vertex::B, Vertex::C],
        degeneracies,
    }
}

/// Product of the three signed-area ratios
/// `([A₁AB]/[A₁AC]) ([B₁BC]/[B₁BA]) ([C₁CA]/[C₁CB])`; equals `−1` exactly
/// when the pair is perspective.
pub fn area_criterion(t1: &Triangle, t2: &Triangle) -> Result<Scalar> {
    let (a, b, c) = (t1.a(), t1.b(), t1.c());
    let (a1, b1, c1) = (t2.a(), t2.b(), t2.c());
    let ratio = |p: &PPoint, x: &PPoint, y: &PPoint, z: &PPoint| -> Result<Scalar> {
        let num = signed_area(p, x, y)?;
        let den = signed_area(p, x, z)?;
        if den.is_zero() {
            return Err(GeomError::DegenerateArea);
        }
        num.checked_div(&den)
    };
    let r1 = ratio(a1, a, b, c)?;
    let r2 = ratio(b1, b, c, a)?;
    let r3 = ratio(c1, c, a, b)?;
    Ok(r1 * r2 * r3)
}

/// Perspectivity counts over the cyclic (direct) and anticyclic (inverse)
/// vertex pairings, with the centers of the perspective pairings.
///
/// A pairing whose joins concur at a vertex of either triangle is not
/// counted: for inscribed configurations two of the joins degenerate to
/// side lines and every such pairing would count vacuously.
#[derive(Debug, Clone)]
pub struct MultiHomology {
    pub direct: usize,
    pub inverse: usize,
    pub direct_centers: Vec<PPoint>,
    pub inverse_centers: Vec<PPoint>,
}

const CYCLIC: [[Vertex; 3]; 3] = [
    [Vertex::A, Vertex::B, Vertex::C],
    [Vertex::B, Vertex::C, Vertex::A],
    [Vertex::C, Vertex::A, Vertex::B],
];

const ANTICYCLIC: [[Vertex; 3]; 3] = [
    [Vertex::A, Vertex::C, Vertex::B],
    [Vertex::C, Vertex::B, Vertex::A],
    [Vertex::B, Vertex::A, Vertex::C],
];

pub fn multi_homology(t1: &Triangle, t2: &Triangle) -> MultiHomology {
    let mut out = MultiHomology {
        direct: 0,
        inverse: 0,
        direct_centers: Vec::new(),
        inverse_centers: Vec::new(),
    };
    let is_vertex =
        |c: &PPoint| t1.vertices().iter().any(|v| v == c) || t2.vertices().iter().any(|v| v == c);
    for pairing in CYCLIC {
        if let Ok(Some(c)) = homology_center(t1, &t2.permuted(pairing)) {
            if !is_vertex(&c) {
                out.direct += 1;
                out.direct_centers.push(c);
            }
        }
    }
    for pairing in ANTICYCLIC {
        if let Ok(Some(c)) = homology_center(t1, &t2.permuted(pairing)) {
            if !is_vertex(&c) {
                out.inverse += 1;
                out.inverse_centers.push(c);
            }
        }
    }
    out
}

/// Pairwise centers/axes of a triplet with the two verdicts.
#[derive(Debug, Clone)]
pub struct TripletAnalysis {
    /// Axes of (T1,T2), (T2,T3), (T1,T3).
    pub axes: [PLine; 3],
    /// Centers of (T1,T2), (T2,T3), (T1,T3).
    pub centers: [PPoint; 3],
    pub axes_concurrent: bool,
    pub centers_collinear: bool,
    pub axes_all_equal: bool,
    /// The axes' common point is at infinity (parallel axes).
    pub axes_meet_at_infinity: bool,
}

pub fn triplet_analysis(t1: &Triangle, t2: &Triangle, t3: &Triangle) -> Result<TripletAnalysis> {
    let pairs = [(t1, t2), (t2, t3), (t1, t3)];
    let mut axes = Vec::with_capacity(3);
    let mut centers = Vec::with_capacity(3);
    for (x, y) in pairs {
        let center = homology_center(x, y)?.ok_or(GeomError::NotHomologicalPair)?;
        let axis = homology_axis(x, y)?.ok_or(GeomError::NotHomologicalPair)?;
        centers.push(center);
        axes.push(axis);
    }
    let axes_concurrent = is_concurrent(&axes[0], &axes[1], &axes[2]);
    let centers_collinear = is_collinear(&centers[0], &centers[1], &centers[2]);
    let axes_all_equal = axes[0] == axes[1] && axes[1] == axes[2];
    let axes_meet_at_infinity = if axes_concurrent && !axes_all_equal {
        match (0..3)
            .flat_map(|i| ((i + 1)..3).map(move |j| (i, j)))
            .find(|(i, j)| axes[*i] != axes[*j])
        {
            Some((i, j)) => meet(&axes[i], &axes[j])?.is_at_infinity(),
            None => false,
        }
    } else {
        false
    };
    Ok(TripletAnalysis {
        axes: [axes[0].clone(), axes[1].clone(), axes[2].clone()],
        centers: [centers[0].clone(), centers[1].clone(), centers[2].clone()],
        axes_concurrent,
        centers_collinear,
        axes_all_equal,
        axes_meet_at_infinity,
    })
}

/// Cross-meet triangle of a perspective pair: its vertices are
/// `B₁C₂ ∩ B₂C₁`, `A₁C₂ ∩ C₁A₂`, `A₁B₂ ∩ B₁A₂`.
pub fn veronese_triangle(t1: &Triangle, t2: &Triangle) -> Result<Triangle> {
    if homology_center(t1, t2)?.is_none() {
        return Err(GeomError::NotHomologicalPair);
    }
    let cross = |p1: &PPoint, q2: &PPoint, p2: &PPoint, q1: &PPoint| -> Result<PPoint> {
        let l1 = join(p1, q2).map_err(|_| GeomError::DegenerateVeronese)?;
        let l2 = join(p2, q1).map_err(|_| GeomError::DegenerateVeronese)?;
        meet(&l1, &l2).map_err(|_| GeomError::DegenerateVeronese)
    };
    let a3 = cross(t1.b(), t2.c(), t2.b(), t1.c())?;
    let b3 = cross(t1.c(), t2.a(), t2.c(), t1.a())?;
    let c3 = cross(t1.a(), t2.b(), t2.a(), t1.b())?;
    Triangle::new(a3, b3, c3).map_err(|_| GeomError::DegenerateVeronese)
}

/// Per-vertex scaling of `t` about `center` with three ratios — a
/// perspective copy by construction.
pub fn scaled_copy(t: &Triangle, center: &PPoint, ratios: [Scalar; 3]) -> Result<Triangle> {
    let map = |p: &PPoint, k: &Scalar| {
        crate::construct::lincomb(&[(Scalar::one() - k.clone(), center), (k.clone(), p)])
    };
    Triangle::new(
        map(t.a(), &ratios[0])?,
        map(t.b(), &ratios[1])?,
        map(t.c(), &ratios[2])?,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::translate;
    use crate::derived::{derive, DerivedKind};
    use crate::triangle::fixtures::{f1, f2};
    use crate::triangle::{named_center, CenterId};

    fn pt(x: i64, y: i64) -> PPoint {
        PPoint::at(x, y)
    }

    fn sc(n: i64) -> Scalar {
        Scalar::from_int(n)
    }

    /// The worked perspective pair: F1 scaled per-vertex about (1,1) with
    /// ratios (2,3,4).
    fn desargues_pair() -> (Triangle, Triangle) {
        let t1 = f1();
        let t2 = scaled_copy(&t1, &pt(1, 1), [sc(2), sc(3), sc(4)]).unwrap();
        (t1, t2)
    }

    #[test]
    fn worked_fixture_center_and_axis() {
        let (t1, t2) = desargues_pair();
        assert_eq!(t2.a(), &pt(-1, 5));
        assert_eq!(t2.b(), &pt(-2, -2));
        assert_eq!(t2.c(), &pt(13, -3));

        let center = homology_center(&t1, &t2).unwrap().unwrap();
        assert_eq!(center, pt(1, 1));

        let axis = homology_axis(&t1, &t2).unwrap().unwrap();
        // 3x − 8y + 96 = 0
        for p in [pt(-32, 0), pt(0, 12), pt(-8, 9)] {
            assert!(axis.contains(&p));
        }

        let report = analyze(&t1, &t2);
        assert!(report.homological);
        assert_eq!(report.center.unwrap(), pt(1, 1));
        assert_eq!(report.axis.unwrap(), axis);
        assert!(report.degeneracies.is_empty());
    }

    #[test]
    fn translated_copy_has_perspector_at_infinity() {
        let t1 = f1();
        let t2 = Triangle::new(
            translate(t1.a(), &sc(1), &sc(0)).unwrap(),
            translate(t1.b(), &sc(1), &sc(0)).unwrap(),
            translate(t1.c(), &sc(1), &sc(0)).unwrap(),
        )
        .unwrap();
        let c = homology_center(&t1, &t2).unwrap().unwrap();
        assert!(c.is_at_infinity());
        let report = analyze(&t1, &t2);
        assert!(report.homological);
        assert!(report
            .degeneracies
            .contains(&Degeneracy::PerspectorAtInfinity));
    }

    #[test]
    fn homothetic_copy_has_axis_at_infinity() {
        let t1 = f1();
        let t2 = scaled_copy(&t1, &pt(1, 1), [sc(2), sc(2), sc(2)]).unwrap();
        let axis = homology_axis(&t1, &t2).unwrap().unwrap();
        assert!(axis.is_at_infinity());
        let report = analyze(&t1, &t2);
        assert!(report.homological);
        assert!(report.degeneracies.contains(&Degeneracy::AxisAtInfinity));
    }

    #[test]
    fn one_parallel_side_pair_puts_its_direction_on_the_axis() {
        // equal ratio for A and C makes A₁C₁ parallel to AC
        let t1 = f1();
        let t2 = scaled_copy(&t1, &pt(1, 1), [sc(2), sc(5), sc(2)]).unwrap();
        let axis = homology_axis(&t1, &t2).unwrap().unwrap();
        assert!(!axis.is_at_infinity());
        let dir = t1.side_line(Vertex::B).direction_point().unwrap();
        assert!(axis.contains(&dir));
    }

    #[test]
    fn generic_pair_is_not_perspective() {
        let t1 = f1();
        let t2 = Triangle::from_coords([(0, 4), (-2, -2), (13, -3)]).unwrap();
        assert_eq!(homology_center(&t1, &t2).unwrap(), None);
        let report = analyze(&t1, &t2);
        assert!(!report.homological);
        assert!(report.center.is_none());
    }

    #[test]
    fn identical_triangles_are_flagged() {
        let t = f1();
        let report = analyze(&t, &t.clone());
        let shared = report
            .degeneracies
            .iter()
            .filter(|d| matches!(d, Degeneracy::SharedVertex(_)))
            .count();
        assert_eq!(shared, 3);
        assert_eq!(
            homology_center(&t, &t.clone()),
            Err(GeomError::SharedVertex)
        );
    }

    #[test]
    fn area_criterion_matches_perspectivity() {
        let (t1, t2) = desargues_pair();
        assert_eq!(area_criterion(&t1, &t2).unwrap(), sc(-1));

        let generic = Triangle::from_coords([(0, 4), (-2, -2), (13, -3)]).unwrap();
        assert!(area_criterion(&t1, &generic).unwrap() != sc(-1));
    }

    #[test]
    fn medial_pair_is_direct_once() {
        let t = f1();
        let medial = derive(&t, &DerivedKind::Medial).unwrap();
        let mh = multi_homology(&t, &medial);
        assert_eq!(mh.direct, 1);
        assert_eq!(mh.inverse, 0);
        let g = named_center(&t, &CenterId::Centroid).unwrap();
        assert_eq!(mh.direct_centers[0], g);
    }

    #[test]
    fn generic_pair_has_no_perspective_pairing() {
        let t1 = f1();
        let t2 = Triangle::from_coords([(1, 7), (-3, -2), (11, -5)]).unwrap();
        let mh = multi_homology(&t1, &t2);
        assert_eq!(mh.direct, 0);
        assert_eq!(mh.inverse, 0);
    }

    #[test]
    fn common_center_triplet_has_concurrent_axes() {
        let t1 = f2();
        let o = pt(7, 5);
        let t2 = scaled_copy(&t1, &o, [sc(2), sc(3), sc(4)]).unwrap();
        let t3 = scaled_copy(&t1, &o, [sc(-1), sc(5), sc(2)]).unwrap();
        let ta = triplet_analysis(&t1, &t2, &t3).unwrap();
        assert!(ta.axes_concurrent);
        for c in &ta.centers {
            assert_eq!(c, &o);
        }
        assert!(ta.centers_collinear);
    }

    #[test]
    fn veronese_triplet_has_collinear_centers_and_common_axis() {
        let (t1, t2) = desargues_pair();
        let t3 = veronese_triangle(&t1, &t2).unwrap();
        let ta = triplet_analysis(&t1, &t2, &t3).unwrap();
        assert!(ta.centers_collinear);
        assert!(ta.axes_all_equal);

        // symmetric input order yields the same vertex set
        let t3_swapped = veronese_triangle(&t2, &t1).unwrap();
        let mut found = 0;
        for v in t3.vertices() {
            if t3_swapped.vertices().iter().any(|w| w == v) {
                found += 1;
            }
        }
        assert_eq!(found, 3);
    }
}
