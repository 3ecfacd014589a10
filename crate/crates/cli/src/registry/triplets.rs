//! Registry entries R34–R45: triplet theorems — common-center and
//! common-axis triplets, the cross-meet triangle, the Brocard/Neuberg
//! apparatus and the adjoint-point triangles.

use homolog_core::derived::{derive, neuberg_circles, DerivedKind};
use homolog_core::homology::{
    homology_axis, homology_center, scaled_copy, triplet_analysis, veronese_triangle,
};
use homolog_core::projective::{is_collinear, join, meet};
use homolog_core::scalar::Scalar;
use homolog_core::triangle::{
    brocard_angle_cot, brocard_circle, named_center, CenterId, Triangle, Vertex,
};

use crate::checks::{BackendReq, CheckSpec, FixtureClass};
use crate::registry::support::{distinct_ratios, perspective_copy, point_off_sides};

pub fn entries() -> Vec<CheckSpec> {
    vec![
        CheckSpec {
            id: "R34",
            title: "Common-center triplet has concurrent axes",
            statement: "two pairs sharing a perspector make the third pair perspective from it, and the three axes are concurrent, parallel or equal",
            backend: BackendReq::Both,
            fixture: FixtureClass::Constructed("two scaled copies about one center"),
            run: |ctx| {
                let t1 = ctx.triangle().clone();
                let o = point_off_sides(&mut ctx.rng, &t1, false);
                let r1 = distinct_ratios(&mut ctx.rng);
                let r2 = distinct_ratios(&mut ctx.rng);
                let (Ok(t2), Ok(t3)) = (scaled_copy(&t1, &o, r1), scaled_copy(&t1, &o, r2)) else {
                    ctx.skip("degenerate scaled copy");
                    return;
                };
                let Some(ta) = ctx.try_or_skip(
                    triplet_analysis(&t1, &t2, &t3),
                    "degenerate triplet",
                ) else {
                    return;
                };
                for c in &ta.centers {
                    ctx.require_eq_points(c, &o, "every pairwise center is the common one");
                }
                ctx.require(ta.axes_concurrent, "axes concurrent (projectively)");
            },
        },
        CheckSpec {
            id: "R35",
            title: "Common-axis triplet has collinear centers",
            statement: "pairwise perspective triangles sharing one axis have collinear perspectors",
            backend: BackendReq::Exact,
            fixture: FixtureClass::Constructed("two axis-first copies"),
            run: |ctx| {
                let t1 = ctx.triangle().clone();
                for _ in 0..10 {
                    let Some((t2, axis)) = axis_first_copy(ctx, &t1, None) else { continue };
                    let Some((t3, _)) = axis_first_copy(ctx, &t1, Some(&axis)) else { continue };
                    let Ok(ta) = triplet_analysis(&t1, &t2, &t3) else { continue };
                    ctx.require(ta.axes_all_equal, "triplet shares the axis");
                    ctx.require(ta.centers_collinear, "perspectors collinear");
                    return;
                }
                ctx.skip("no generic common-axis triplet found");
            },
        },
        CheckSpec {
            id: "R36",
            title: "Cross-meet triangle",
            statement: "Véronèse: the cross-meet triangle of a perspective pair completes a triplet with collinear perspectors and one common axis",
            backend: BackendReq::Exact,
            fixture: FixtureClass::Constructed("perspective pair"),
            run: |ctx| {
                let t1 = ctx.triangle().clone();
                let (t2, _) = perspective_copy(&mut ctx.rng, &t1);
                let Some(t3) = ctx.try_or_skip(veronese_triangle(&t1, &t2), "degenerate cross-meet")
                else {
                    return;
                };
                let Some(ta) = ctx.try_or_skip(triplet_analysis(&t1, &t2, &t3), "triplet degenerate")
                else {
                    return;
                };
                ctx.require(ta.centers_collinear, "three perspectors collinear");
                ctx.require(ta.axes_all_equal, "common axis");
            },
        },
        CheckSpec {
            id: "R37",
            title: "First Brocard triangle pair",
            statement: "Neuberg (1886): the first Brocard triangle is perspective with the reference; the intersection route recovers the isotomic conjugate of the symmedian point",
            backend: BackendReq::Exact,
            fixture: FixtureClass::Triangles,
            run: |ctx| {
                let t = ctx.triangle().clone();
                let Some(fb) = ctx.try_or_skip(
                    derive(&t, &DerivedKind::FirstBrocard),
                    "degenerate Brocard triangle",
                ) else {
                    return;
                };
                let Some(center_opt) = ctx.try_or_skip(
                    homology_center(&t, &fb),
                    "shared vertex with the Brocard triangle",
                ) else {
                    return;
                };
                let Some(center) = center_opt else {
                    ctx.fail("pair must be perspective");
                    return;
                };
                let Some(omega3) = ctx.try_or_skip(
                    named_center(&t, &CenterId::BrocardThird),
                    "third Brocard point undefined",
                ) else {
                    return;
                };
                ctx.require_eq_points(&center, &omega3, "perspector is the third Brocard point");
            },
        },
        CheckSpec {
            id: "R38",
            title: "Perpendiculars to the Brocard triangle sides",
            statement: "the perpendiculars from the vertices to the corresponding first-Brocard sides concur on the circumcircle (the Tarry point)",
            backend: BackendReq::Exact,
            fixture: FixtureClass::Triangles,
            run: |ctx| {
                let t = ctx.triangle().clone();
                let Some(tarry) =
                    ctx.try_or_skip(named_center(&t, &CenterId::Tarry), "Tarry point undefined")
                else {
                    return;
                };
                ctx.require_on_circle(&tarry, &t.circumcircle(), "Tarry point on the circumcircle");
                let fb = derive(&t, &DerivedKind::FirstBrocard).expect("brocard triangle");
                for v in Vertex::ALL {
                    let perp = homolog_core::construct::perpendicular_through(
                        &fb.side_line(v),
                        t.vertex(v),
                    )
                    .expect("perpendicular");
                    ctx.require_on_line(&tarry, &perp, "third perpendicular concurs");
                }
            },
        },
        CheckSpec {
            id: "R39",
            title: "Parallels to the Brocard triangle sides",
            statement: "the parallels from the vertices to the corresponding first-Brocard sides concur on the circumcircle, diametrically opposite the Tarry point (the Steiner point)",
            backend: BackendReq::Exact,
            fixture: FixtureClass::Triangles,
            run: |ctx| {
                let t = ctx.triangle().clone();
                let Some(steiner) =
                    ctx.try_or_skip(named_center(&t, &CenterId::Steiner), "Steiner point undefined")
                else {
                    return;
                };
                let Some(tarry) =
                    ctx.try_or_skip(named_center(&t, &CenterId::Tarry), "Tarry point undefined")
                else {
                    return;
                };
                let circ = t.circumcircle();
                ctx.require_on_circle(&steiner, &circ, "Steiner point on the circumcircle");
                let mid = homolog_core::construct::midpoint(&steiner, &tarry).expect("midpoint");
                ctx.require_eq_points(&mid, &circ.center(), "Steiner and Tarry are antipodal");
            },
        },
        CheckSpec {
            id: "R40",
            title: "Equi-Brocard circle locus",
            statement: "Neuberg: points forming with one side a triangle of equal Brocard angle lie on the circle at height (side/2)·cot ω with radius² = (side²/4)(cot²ω − 3)",
            backend: BackendReq::Float,
            fixture: FixtureClass::Triangles,
            run: |ctx| {
                let t = ctx.triangle().clone();
                let Some(circles) =
                    ctx.try_or_skip(neuberg_circles(&t), "equilateral degeneracy")
                else {
                    return;
                };
                let want = brocard_angle_cot(&t);
                let (cx, cy) = circles[0].center.xy().expect("finite center");
                let r = circles[0].radius2.to_f64().sqrt();
                for angle in [0.4_f64, 2.1, 3.9, 5.5] {
                    let m = homolog_core::projective::PPoint::from_cartesian(
                        Scalar::float(cx.to_f64() + r * angle.cos()),
                        Scalar::float(cy.to_f64() + r * angle.sin()),
                    );
                    let Ok(mbc) = Triangle::new(m, t.b().clone(), t.c().clone()) else {
                        continue;
                    };
                    ctx.require_eq_scalars(
                        &brocard_angle_cot(&mbc),
                        &want,
                        "sampled point is equi-Brocard",
                    );
                }
            },
        },
        CheckSpec {
            id: "R41",
            title: "Neuberg-centers triangle pair",
            statement: "the triangle of equi-Brocard circle centers is perspective with the reference from the Tarry point",
            backend: BackendReq::Exact,
            fixture: FixtureClass::Triangles,
            run: |ctx| {
                let t = ctx.triangle().clone();
                let Some(neu) =
                    ctx.try_or_skip(derive(&t, &DerivedKind::Neuberg), "Neuberg degenerate")
                else {
                    return;
                };
                let Some(tarry) =
                    ctx.try_or_skip(named_center(&t, &CenterId::Tarry), "Tarry point undefined")
                else {
                    return;
                };
                match ctx.try_or_skip(homology_center(&t, &neu), "shared vertex") {
                    Some(Some(c)) => ctx.require_eq_points(&c, &tarry, "perspector is the Tarry point"),
                    Some(None) => ctx.fail("pair must be perspective"),
                    None => {}
                }
            },
        },
        CheckSpec {
            id: "R42",
            title: "Brocard–Neuberg triplet",
            statement: "reference, first Brocard and Neuberg-centers triangles are pairwise perspective with collinear perspectors (third Brocard point, Tarry point, circumcenter) and one common axis",
            backend: BackendReq::Exact,
            fixture: FixtureClass::Triangles,
            run: |ctx| {
                let t = ctx.triangle().clone();
                let (Ok(fb), Ok(neu)) = (
                    derive(&t, &DerivedKind::FirstBrocard),
                    derive(&t, &DerivedKind::Neuberg),
                ) else {
                    ctx.skip("Brocard/Neuberg degenerate");
                    return;
                };
                let Some(ta) = ctx.try_or_skip(triplet_analysis(&t, &fb, &neu), "triplet degenerate")
                else {
                    return;
                };
                ctx.require(ta.centers_collinear, "perspectors collinear");
                ctx.require(ta.axes_all_equal, "common axis");
                let o = named_center(&t, &CenterId::Circumcenter).expect("circumcenter");
                ctx.require_eq_points(&ta.centers[1], &o, "Brocard/Neuberg perspector is O");
                if let Some(omega3) = ctx.try_or_skip(
                    named_center(&t, &CenterId::BrocardThird),
                    "third Brocard point undefined",
                ) {
                    ctx.require_eq_points(&ta.centers[0], &omega3, "reference/Brocard perspector");
                }
                if let Some(tarry) =
                    ctx.try_or_skip(named_center(&t, &CenterId::Tarry), "Tarry point undefined")
                {
                    ctx.require_eq_points(&ta.centers[2], &tarry, "reference/Neuberg perspector");
                }
                // the Brocard-triangle vertices sit on the circle with
                // diameter K O
                if let Some(bc) = ctx.try_or_skip(brocard_circle(&t), "Brocard circle degenerate") {
                    for v in Vertex::ALL {
                        ctx.require_on_circle(fb.vertex(v), &bc, "Brocard vertex on Brocard circle");
                    }
                }
            },
        },
        CheckSpec {
            id: "R43",
            title: "Far-touch concurrency triangle vs reference",
            statement: "the triangle of excircle far-touch perspectors is perspective with the reference from the Nagel point",
            backend: BackendReq::Exact,
            fixture: FixtureClass::Triangles,
            run: |ctx| {
                let t = ctx.triangle().clone();
                let Some(ga) = ctx.try_or_skip(
                    derive(&t, &DerivedKind::GergonneAdjoint),
                    "adjoint degenerate",
                ) else {
                    return;
                };
                let n = named_center(&t, &CenterId::Nagel).expect("nagel");
                match ctx.try_or_skip(homology_center(&t, &ga), "shared vertex") {
                    Some(Some(c)) => ctx.require_eq_points(&c, &n, "perspector is the Nagel point"),
                    Some(None) => ctx.fail("pair must be perspective"),
                    None => {}
                }
            },
        },
        CheckSpec {
            id: "R44",
            title: "Mixed-touch concurrency triangle vs reference",
            statement: "the triangle of mixed incircle/excircle touch perspectors is perspective with the reference from the Gergonne point",
            backend: BackendReq::Exact,
            fixture: FixtureClass::Triangles,
            run: |ctx| {
                let t = ctx.triangle().clone();
                let Some(na) = ctx.try_or_skip(
                    derive(&t, &DerivedKind::NagelAdjoint),
                    "adjoint degenerate",
                ) else {
                    return;
                };
                let gamma = named_center(&t, &CenterId::Gergonne).expect("gergonne");
                match ctx.try_or_skip(homology_center(&t, &na), "shared vertex") {
                    Some(Some(c)) => ctx.require_eq_points(&c, &gamma, "perspector is the Gergonne point"),
                    Some(None) => ctx.fail("pair must be perspective"),
                    None => {}
                }
            },
        },
        CheckSpec {
            id: "R45",
            title: "Adjoint triangles' perspector lies on the Gergonne–Nagel line",
            statement: "the two touch-perspector triangles are perspective with center on the line through the Gergonne and Nagel points, and the triplet shares one axis",
            backend: BackendReq::Exact,
            fixture: FixtureClass::Triangles,
            run: |ctx| {
                let t = ctx.triangle().clone();
                let (Ok(ga), Ok(na)) = (
                    derive(&t, &DerivedKind::GergonneAdjoint),
                    derive(&t, &DerivedKind::NagelAdjoint),
                ) else {
                    ctx.skip("adjoint degenerate");
                    return;
                };
                let Some(center_opt) =
                    ctx.try_or_skip(homology_center(&ga, &na), "shared vertex")
                else {
                    return;
                };
                let Some(center) = center_opt else {
                    ctx.fail("adjoint pair must be perspective");
                    return;
                };
                let gamma = named_center(&t, &CenterId::Gergonne).expect("gergonne");
                let n = named_center(&t, &CenterId::Nagel).expect("nagel");
                ctx.require(
                    is_collinear(&gamma, &n, &center),
                    "perspector on the Gergonne–Nagel line",
                );
                if let Some(ta) = ctx.try_or_skip(triplet_analysis(&t, &ga, &na), "triplet degenerate")
                {
                    ctx.require(ta.centers_collinear, "collinear perspectors");
                    ctx.require(ta.axes_all_equal, "common axis");
                }
            },
        },
    ]
}

/// Construct a copy of `t1` whose side meets with `t1` land on a chosen
/// axis (drawn fresh unless `fixed_axis` is given). Returns the copy and
/// the axis.
fn axis_first_copy(
    ctx: &mut crate::checks::Ctx,
    t1: &Triangle,
    fixed_axis: Option<&homolog_core::projective::PLine>,
) -> Option<(Triangle, homolog_core::projective::PLine)> {
    use crate::registry::support::transversal_line;
    let axis = match fixed_axis {
        Some(a) => a.clone(),
        None => transversal_line(&mut ctx.rng, t1),
    };
    let n = meet(&axis, &t1.side_line(Vertex::C)).ok()?;
    let m = meet(&axis, &t1.side_line(Vertex::A)).ok()?;
    let p = meet(&axis, &t1.side_line(Vertex::B)).ok()?;
    let a1 = point_off_sides(&mut ctx.rng, t1, false);
    if a1 == n || a1 == m || a1 == p || axis.contains(&a1) {
        return None;
    }
    let tparam = crate::fixtures::random_rational(&mut ctx.rng, 5, 3, &[0, 1]);
    let b1 = homolog_core::construct::point_on_segment(&n, &a1, tparam).ok()?;
    if b1 == a1 || b1 == n {
        return None;
    }
    let mb1 = join(&m, &b1).ok()?;
    let pa1 = join(&p, &a1).ok()?;
    let c1 = meet(&mb1, &pa1).ok()?;
    if c1.is_at_infinity() {
        return None;
    }
    let t2 = Triangle::new(a1, b1, c1).ok()?;
    // confirm the construction delivered the intended axis
    match homology_axis(t1, &t2).ok()? {
        Some(built) if built == axis => Some((t2, axis)),
        _ => None,
    }
}
