//! Registry entries R58–R70: circle-based theorems — the six-point side
//! products, Terquem, Pascal and Brianchon with their degenerate relatives,
//! reciprocal polar pairs, Aubert, the isogonal six-point circle, Alasia,
//! the tangential pair transfer, Jerabeck, and the isotomic circumcevian
//! closing theorem.

use homolog_core::derived::{derive, DerivedKind};
use homolog_core::homology::{homology_axis, homology_center};
use homolog_core::metric::{circle_through, second_intersection, tangent_line_at, Circle};
use homolog_core::projective::{join, meet, signed_ratio, PLine, PPoint};
use homolog_core::scalar::Scalar;
use homolog_core::transform::{polar, pole};
use homolog_core::triangle::{
    ceva_product, cevian_traces, isogonal_conjugate, isotomic_conjugate, isotomic_of_side_point,
    Triangle, Vertex,
};
use rand::Rng;

use crate::checks::{BackendReq, CheckSpec, Ctx, FixtureClass};
use crate::fixtures::{random_lattice_point, random_rational};
use crate::registry::support::{
    circle_point_from, cyclic_order, distinct_circle_points, point_off_sides,
};

/// A circle cutting all three side lines in rational points: the circle
/// through one random rational point per side, plus the second
/// intersections. Returns `[(P_v, Q_v); 3]` indexed by the faced vertex.
fn six_point_circle_cuts(ctx: &mut Ctx, t: &Triangle) -> Option<(Circle, Vec<(PPoint, PPoint)>)> {
    'outer: for _ in 0..12 {
        let mut picks = Vec::new();
        for v in Vertex::ALL {
            let (p, q) = v.others();
            let tparam = random_rational(&mut ctx.rng, 6, 7, &[]);
            let tparam = (tparam.abs() + Scalar::ratio(1, 13))
                .checked_div(&Scalar::from_int(8))
                .expect("den");
            let Ok(pt) =
                homolog_core::construct::point_on_segment(t.vertex(p), t.vertex(q), tparam)
            else {
                continue 'outer;
            };
            if &pt == t.vertex(p) || &pt == t.vertex(q) {
                continue 'outer;
            }
            picks.push(pt);
        }
        let Ok(circle) = circle_through(&picks[0], &picks[1], &picks[2]) else {
            continue;
        };
        let mut cuts = Vec::new();
        for (pick, v) in picks.iter().zip(Vertex::ALL) {
            let Ok(second) = second_intersection(&circle, pick, &t.side_line(v)) else {
                continue 'outer;
            };
            if &second == pick {
                continue 'outer; // tangent to a side
            }
            if Vertex::ALL.iter().any(|w| t.vertex(*w) == &second) {
                continue 'outer;
            }
            cuts.push((pick.clone(), second));
        }
        return Some((circle, cuts));
    }
    None
}

pub fn entries() -> Vec<CheckSpec> {
    vec![
        CheckSpec {
            id: "R58",
            title: "Circle cutting the three sides",
            statement: "Carnot (1803): a circle meeting the side lines in six points has signed side-ratio product +1",
            backend: BackendReq::Exact,
            fixture: FixtureClass::Constructed("six-point circle"),
            run: |ctx| {
                let t = ctx.triangle().clone();
                let Some((_, cuts)) = six_point_circle_cuts(ctx, &t) else {
                    ctx.skip("no generic six-point circle");
                    return;
                };
                let mut product = Scalar::one();
                for ((p1, p2), v) in cuts.iter().zip(Vertex::ALL) {
                    let (pv, qv) = v.others();
                    let r1 = signed_ratio(p1, t.vertex(pv), t.vertex(qv)).expect("ratio");
                    let r2 = signed_ratio(p2, t.vertex(pv), t.vertex(qv)).expect("ratio");
                    product = product * r1 * r2;
                }
                ctx.require_eq_scalars(&product, &Scalar::one(), "six-ratio product");
            },
        },
        CheckSpec {
            id: "R59",
            title: "Circle through concurrent cevian feet",
            statement: "Terquem: the circle through the feet of concurrent cevians recuts the sides in the feet of another concurrent triple",
            backend: BackendReq::Exact,
            fixture: FixtureClass::Triangles,
            run: |ctx| {
                let t = ctx.triangle().clone();
                for _ in 0..8 {
                    let p = point_off_sides(&mut ctx.rng, &t, false);
                    let Ok(feet) = cevian_traces(&t, &p) else { continue };
                    if feet.iter().any(|f| f.is_at_infinity()) {
                        continue;
                    }
                    let Ok(circle) = circle_through(&feet[0], &feet[1], &feet[2]) else {
                        continue;
                    };
                    let mut second = Vec::new();
                    let mut ok = true;
                    for (foot, v) in feet.iter().zip(Vertex::ALL) {
                        match second_intersection(&circle, foot, &t.side_line(v)) {
                            Ok(q) => {
                                if Vertex::ALL.iter().any(|w| t.vertex(*w) == &q) {
                                    ok = false;
                                }
                                second.push(q);
                            }
                            Err(_) => ok = false,
                        }
                    }
                    if !ok {
                        continue;
                    }
                    let Ok(prod) = ceva_product(&t, &second[0], &second[1], &second[2]) else {
                        continue;
                    };
                    ctx.require_eq_scalars(
                        &prod,
                        &Scalar::from_int(-1),
                        "second feet are concurrent cevian feet",
                    );
                    return;
                }
                ctx.skip("no generic Terquem configuration");
            },
        },
        CheckSpec {
            id: "R60",
            title: "Hexagon in a circle",
            statement: "Pascal (1640): the meets of opposite sides of a hexagon inscribed in a circle are collinear",
            backend: BackendReq::Exact,
            fixture: FixtureClass::Constructed("six circumcircle points"),
            run: |ctx| {
                let t = ctx.triangle().clone();
                let sampled = distinct_circle_points(&mut ctx.rng, &t, 6);
                let Some(points) = ctx.try_or_skip(sampled, "could not sample circle points")
                else {
                    return;
                };
                let side = |i: usize, j: usize| join(&points[i], &points[j]).expect("distinct");
                let pairs = [
                    (side(0, 1), side(3, 4)),
                    (side(1, 2), side(4, 5)),
                    (side(2, 3), side(5, 0)),
                ];
                let mut meets = Vec::new();
                for (l, m) in pairs {
                    match ctx.try_or_skip(meet(&l, &m), "coincident hexagon sides") {
                        Some(p) => meets.push(p),
                        None => return,
                    }
                }
                ctx.require_collinear(&meets[0], &meets[1], &meets[2], "Pascal line");
            },
        },
        CheckSpec {
            id: "R61",
            title: "Cyclic quadrilateral: sides and vertex tangents",
            statement: "for a quadrilateral in a circle, the two opposite-side meets and the two opposite-vertex tangent meets are four collinear points",
            backend: BackendReq::Exact,
            fixture: FixtureClass::Constructed("four circumcircle points"),
            run: |ctx| {
                let t = ctx.triangle().clone();
                let circ = t.circumcircle();
                let sampled = distinct_circle_points(&mut ctx.rng, &t, 4);
                let Some(mut points) = ctx.try_or_skip(sampled, "could not sample circle points")
                else {
                    return;
                };
                cyclic_order(&circ, &mut points);
                let side = |i: usize, j: usize| join(&points[i], &points[j]).expect("distinct");
                let Some(p) = ctx.try_or_skip(meet(&side(0, 1), &side(2, 3)), "parallel sides")
                else {
                    return;
                };
                let Some(q) = ctx.try_or_skip(meet(&side(1, 2), &side(3, 0)), "parallel sides")
                else {
                    return;
                };
                let tangent = |i: usize| tangent_line_at(&circ, &points[i]).expect("tangent");
                let Some(r) = ctx.try_or_skip(meet(&tangent(0), &tangent(2)), "parallel tangents")
                else {
                    return;
                };
                let Some(s) = ctx.try_or_skip(meet(&tangent(1), &tangent(3)), "parallel tangents")
                else {
                    return;
                };
                if p == q {
                    ctx.skip("degenerate quadrilateral");
                    return;
                }
                let Some(line) = ctx.try_geom(join(&p, &q), "diagonal line") else { return };
                ctx.require_on_line(&r, &line, "first tangent meet on the line");
                ctx.require_on_line(&s, &line, "second tangent meet on the line");
            },
        },
        CheckSpec {
            id: "R62",
            title: "Reciprocal polar triangles",
            statement: "Chasles (1828): a triangle and its reciprocal polar with respect to any circle are perspective",
            backend: BackendReq::Exact,
            fixture: FixtureClass::Constructed("random reference circle"),
            run: |ctx| {
                let t = ctx.triangle().clone();
                for _ in 0..10 {
                    let center = random_lattice_point(&mut ctx.rng, 12, &[]);
                    let r2 = Scalar::from_int(ctx.rng.gen_range(1i64..=9));
                    let Ok(circle) = Circle::from_center_radius2(&center, r2) else { continue };
                    if Vertex::ALL.iter().any(|v| {
                        t.side_line(*v).contains(&center) || t.vertex(*v) == &center
                    }) {
                        continue;
                    }
                    let vert = |v: Vertex| pole(&circle, &t.side_line(v)).ok();
                    let (Some(a1), Some(b1), Some(c1)) =
                        (vert(Vertex::A), vert(Vertex::B), vert(Vertex::C))
                    else {
                        continue;
                    };
                    let Ok(t2) = Triangle::new(a1, b1, c1) else { continue };
                    match homology_center(&t, &t2) {
                        Ok(Some(_)) => return,
                        Ok(None) => {
                            ctx.fail("reciprocal polar pair must be perspective");
                            return;
                        }
                        Err(_) => continue,
                    }
                }
                ctx.skip("no generic reference circle");
            },
        },
        CheckSpec {
            id: "R63",
            title: "Hexagon of tangents",
            statement: "Brianchon (1806): the main diagonals of a hexagon circumscribed to a circle are concurrent",
            backend: BackendReq::Exact,
            fixture: FixtureClass::Constructed("six tangents to the circumcircle"),
            run: |ctx| {
                let t = ctx.triangle().clone();
                let circ = t.circumcircle();
                let sampled = distinct_circle_points(&mut ctx.rng, &t, 6);
                let Some(mut points) = ctx.try_or_skip(sampled, "could not sample circle points")
                else {
                    return;
                };
                cyclic_order(&circ, &mut points);
                let tangents: Vec<PLine> = points
                    .iter()
                    .map(|p| tangent_line_at(&circ, p).expect("tangent"))
                    .collect();
                let mut vertices = Vec::new();
                for i in 0..6 {
                    match ctx.try_or_skip(
                        meet(&tangents[i], &tangents[(i + 1) % 6]),
                        "coincident tangents",
                    ) {
                        Some(w) => vertices.push(w),
                        None => return,
                    }
                }
                let diag = |i: usize| -> Option<PLine> { join(&vertices[i], &vertices[i + 3]).ok() };
                let (Some(d1), Some(d2), Some(d3)) = (diag(0), diag(1), diag(2)) else {
                    ctx.skip("coincident diagonal endpoints");
                    return;
                };
                ctx.require_concurrent(&d1, &d2, &d3, "Brianchon point");
            },
        },
        CheckSpec {
            id: "R64",
            title: "Chords from a circle point to an inscribed perspective pair",
            statement: "Aubert (1899): joining any circumcircle point to the vertices of the circumcevian triangle cuts the sides in three points collinear with the perspector",
            backend: BackendReq::Exact,
            fixture: FixtureClass::Triangles,
            run: |ctx| {
                let t = ctx.triangle().clone();
                let circ = t.circumcircle();
                for _ in 0..8 {
                    let p = point_off_sides(&mut ctx.rng, &t, true);
                    let Ok(t2) = derive(&t, &DerivedKind::Circumpedal(p.clone())) else {
                        continue;
                    };
                    let Ok(i) = circle_point_from(&mut ctx.rng, &circ, t.a()) else { continue };
                    if t2.vertices().iter().any(|v| v == &i)
                        || Vertex::ALL.iter().any(|v| t.vertex(*v) == &i)
                    {
                        continue;
                    }
                    let mut cuts = Vec::new();
                    let mut ok = true;
                    for v in Vertex::ALL {
                        let Ok(chord) = join(&i, t2.vertex(v)) else { ok = false; break };
                        match meet(&chord, &t.side_line(v)) {
                            Ok(u) => cuts.push(u),
                            Err(_) => ok = false,
                        }
                    }
                    if !ok || cuts.len() != 3 {
                        continue;
                    }
                    ctx.require_collinear(&cuts[0], &cuts[1], &cuts[2], "cuts collinear");
                    if cuts[0] != cuts[1] {
                        let line = join(&cuts[0], &cuts[1]).expect("cut line");
                        ctx.require_on_line(&p, &line, "perspector on the cut line");
                    }
                    return;
                }
                ctx.skip("no generic Aubert configuration");
            },
        },
        CheckSpec {
            id: "R65",
            title: "Isogonal pedal six-point circle",
            statement: "the pedal triangles of two isogonal conjugates share a circle centered at their midpoint; the cross-meets of pedal sides lie on the line joining the two points",
            backend: BackendReq::Exact,
            fixture: FixtureClass::Triangles,
            run: |ctx| {
                let t = ctx.triangle().clone();
                for _ in 0..8 {
                    let p = point_off_sides(&mut ctx.rng, &t, true);
                    let Ok(q) = isogonal_conjugate(&t, &p) else { continue };
                    if q == p || q.is_at_infinity() {
                        continue;
                    }
                    let (Ok(tp), Ok(tq)) = (
                        derive(&t, &DerivedKind::Pedal(p.clone())),
                        derive(&t, &DerivedKind::Pedal(q.clone())),
                    ) else {
                        continue;
                    };
                    let Ok(circle) = circle_through(tp.a(), tp.b(), tp.c()) else { continue };
                    for v in Vertex::ALL {
                        ctx.require_on_circle(tq.vertex(v), &circle, "isogonal pedal feet concyclic");
                    }
                    let mid = homolog_core::construct::midpoint(&p, &q).expect("midpoint");
                    ctx.require_eq_points(&circle.center(), &mid, "center is the midpoint");

                    let pq = join(&p, &q).expect("distinct conjugates");
                    // cross meets: (P₂Q₃ ∩ P₃Q₂) and cyclic
                    let idx = [
                        (Vertex::B, Vertex::C),
                        (Vertex::C, Vertex::A),
                        (Vertex::A, Vertex::B),
                    ];
                    for (x, y) in idx {
                        let Ok(l1) = join(tp.vertex(x), tq.vertex(y)) else { continue };
                        let Ok(l2) = join(tp.vertex(y), tq.vertex(x)) else { continue };
                        if let Ok(cross) = meet(&l1, &l2) {
                            ctx.require_on_line(&cross, &pq, "cross-meet on the conjugate line");
                        }
                    }
                    return;
                }
                ctx.skip("no generic isogonal pedal pair");
            },
        },
        CheckSpec {
            id: "R66",
            title: "Triangle of re-crossed chords",
            statement: "Alasia: the chords joining alternate intersections of a circle with the side lines bound a triangle perspective with the reference",
            backend: BackendReq::Exact,
            fixture: FixtureClass::Constructed("six-point circle"),
            run: |ctx| {
                let t = ctx.triangle().clone();
                let Some((_, cuts)) = six_point_circle_cuts(ctx, &t) else {
                    ctx.skip("no generic six-point circle");
                    return;
                };
                // cuts[v] = (D_v, D'_v) on the side facing v; chords pair a
                // first point of one side with the second of the next
                let chord = |i: usize, j: usize| -> Option<PLine> {
                    join(&cuts[i].0, &cuts[j].1).ok()
                };
                let (Some(l1), Some(l2), Some(l3)) = (chord(0, 1), chord(1, 2), chord(2, 0))
                else {
                    ctx.skip("degenerate chord");
                    return;
                };
                let Some(t2) = ctx.try_or_skip(
                    crate::registry::support::triangle_from_lines(&l1, &l2, &l3),
                    "chord triangle degenerate",
                ) else {
                    return;
                };
                // perspective under some vertex pairing: Alasia's labeling
                // depends on the diagram; assert over all six pairings
                let mh = homolog_core::homology::multi_homology(&t, &t2);
                ctx.require(
                    mh.direct + mh.inverse >= 1,
                    "chord triangle perspective with the reference",
                );
            },
        },
        CheckSpec {
            id: "R67",
            title: "Tangential triangles of a perspective inscribed pair",
            statement: "two perspective triangles in one circle transfer their perspector and axis to their tangential triangles",
            backend: BackendReq::Exact,
            fixture: FixtureClass::Triangles,
            run: |ctx| {
                if !ctx.need_non_right() {
                    return;
                }
                let t = ctx.triangle().clone();
                let circ = t.circumcircle();
                for _ in 0..8 {
                    let p = point_off_sides(&mut ctx.rng, &t, true);
                    let Ok(t2) = derive(&t, &DerivedKind::Circumpedal(p.clone())) else {
                        continue;
                    };
                    if t2.metrics().is_right() {
                        continue;
                    }
                    let (Ok(tt1), Ok(tt2)) = (
                        derive(&t, &DerivedKind::Tangential),
                        derive(&t2, &DerivedKind::Tangential),
                    ) else {
                        continue;
                    };
                    let (Ok(axis_opt), Ok(axis2_opt)) =
                        (homology_axis(&t, &t2), homology_axis(&tt1, &tt2))
                    else {
                        continue;
                    };
                    match homology_center(&tt1, &tt2) {
                        Ok(Some(c)) => {
                            ctx.require_eq_points(&c, &p, "tangential pair shares the perspector")
                        }
                        Ok(None) => {
                            ctx.fail("tangential pair must be perspective");
                            return;
                        }
                        Err(_) => continue,
                    }
                    if let (Some(a1), Some(a2)) = (axis_opt, axis2_opt) {
                        ctx.require_eq_lines(&a1, &a2, "tangential pair shares the axis");
                    }
                    // the perspector's polar is the common axis
                    if let (Ok(pol), Ok(Some(a1))) = (polar(&circ, &p), homology_axis(&t, &t2)) {
                        ctx.require_eq_lines(&pol, &a1, "axis is the perspector's polar");
                    }
                    return;
                }
                ctx.skip("no generic inscribed pair");
            },
        },
        CheckSpec {
            id: "R68",
            title: "Chord triangle of two circumcevian triangles",
            statement: "Jerabeck: the triangle bounded by the chords joining matching circumcevian vertices of two points is perspective with the reference",
            backend: BackendReq::Exact,
            fixture: FixtureClass::Triangles,
            run: |ctx| {
                let t = ctx.triangle().clone();
                for _ in 0..8 {
                    let m1 = point_off_sides(&mut ctx.rng, &t, true);
                    let m2 = point_off_sides(&mut ctx.rng, &t, true);
                    if m1 == m2 {
                        continue;
                    }
                    let (Ok(c1), Ok(c2)) = (
                        derive(&t, &DerivedKind::Circumpedal(m1)),
                        derive(&t, &DerivedKind::Circumpedal(m2)),
                    ) else {
                        continue;
                    };
                    let chord = |v: Vertex| -> Option<PLine> {
                        if c1.vertex(v) == c2.vertex(v) {
                            return None;
                        }
                        join(c1.vertex(v), c2.vertex(v)).ok()
                    };
                    let (Some(la), Some(lb), Some(lc)) =
                        (chord(Vertex::A), chord(Vertex::B), chord(Vertex::C))
                    else {
                        continue;
                    };
                    let Ok(t3) = crate::registry::support::triangle_from_lines(&la, &lb, &lc)
                    else {
                        continue;
                    };
                    match homology_center(&t, &t3) {
                        Ok(Some(_)) => return,
                        Ok(None) => {
                            ctx.fail("chord triangle must be perspective with the reference");
                            return;
                        }
                        Err(_) => continue,
                    }
                }
                ctx.skip("no generic Jerabeck configuration");
            },
        },
        CheckSpec {
            id: "R69",
            title: "Tangents at circumcevian vertices",
            statement: "for an inscribed perspective pair, the tangents at the second triangle's vertices cut the corresponding reference sides in three collinear points",
            backend: BackendReq::Exact,
            fixture: FixtureClass::Triangles,
            run: |ctx| {
                let t = ctx.triangle().clone();
                let circ = t.circumcircle();
                for _ in 0..8 {
                    let p = point_off_sides(&mut ctx.rng, &t, true);
                    let Ok(t2) = derive(&t, &DerivedKind::Circumpedal(p)) else { continue };
                    let mut cuts = Vec::new();
                    let mut ok = true;
                    for v in Vertex::ALL {
                        let tangent = tangent_line_at(&circ, t2.vertex(v)).expect("tangent");
                        match meet(&tangent, &t.side_line(v)) {
                            Ok(u) => cuts.push(u),
                            Err(_) => ok = false,
                        }
                    }
                    if !ok {
                        continue;
                    }
                    ctx.require_collinear(&cuts[0], &cuts[1], &cuts[2], "tangent cuts collinear");
                    return;
                }
                ctx.skip("no generic configuration");
            },
        },
        CheckSpec {
            id: "R70",
            title: "Chord triangle of isotomic circumcevians",
            statement: "the chord triangle of the circumcevian triangles of two isotomic conjugates is perspective with the reference; the axis is the isotomic transversal of the vertex-tangent line",
            backend: BackendReq::Exact,
            fixture: FixtureClass::Triangles,
            run: |ctx| {
                if !ctx.need_scalene() {
                    return;
                }
                let t = ctx.triangle().clone();
                let circ = t.circumcircle();
                for _ in 0..8 {
                    let m = point_off_sides(&mut ctx.rng, &t, true);
                    let Ok(m2) = isotomic_conjugate(&t, &m) else { continue };
                    if m2 == m || m2.is_at_infinity() || circ.contains(&m2) {
                        continue;
                    }
                    let (Ok(c1), Ok(c2)) = (
                        derive(&t, &DerivedKind::Circumpedal(m)),
                        derive(&t, &DerivedKind::Circumpedal(m2)),
                    ) else {
                        continue;
                    };
                    let chord = |v: Vertex| -> Option<PLine> {
                        if c1.vertex(v) == c2.vertex(v) {
                            return None;
                        }
                        join(c1.vertex(v), c2.vertex(v)).ok()
                    };
                    let (Some(la), Some(lb), Some(lc)) =
                        (chord(Vertex::A), chord(Vertex::B), chord(Vertex::C))
                    else {
                        continue;
                    };
                    let Ok(t3) = crate::registry::support::triangle_from_lines(&la, &lb, &lc)
                    else {
                        continue;
                    };
                    let Ok(axis_opt) = homology_axis(&t, &t3) else { continue };
                    match homology_center(&t, &t3) {
                        Ok(Some(_)) => {}
                        Ok(None) => {
                            ctx.fail("chord triangle must be perspective");
                            return;
                        }
                        Err(_) => continue,
                    }
                    let Some(axis) = axis_opt else {
                        ctx.fail("axis must exist");
                        return;
                    };
                    // axis meets each side at the isotomic of the tangent cut
                    for v in Vertex::ALL {
                        let tangent = tangent_line_at(&circ, t.vertex(v)).expect("tangent");
                        let Ok(tan_cut) = meet(&tangent, &t.side_line(v)) else { continue };
                        let Ok(axis_cut) = meet(&axis, &t.side_line(v)) else { continue };
                        let mirror =
                            isotomic_of_side_point(&t, v, &tan_cut).expect("mirror");
                        ctx.require_eq_points(
                            &axis_cut,
                            &mirror,
                            "axis cut is the isotomic of the tangent cut",
                        );
                    }
                    return;
                }
                ctx.skip("no generic isotomic circumcevian pair");
            },
        },
    ]
}
