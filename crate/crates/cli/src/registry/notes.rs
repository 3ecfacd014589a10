//! Registry entries R71–R78: the distance-identity table, the Euler-circle
//! tangency distances, Ptolemy's equality in squared form, Monge's three
//! circles, the full nine-point configuration, Bobillier's perpendiculars,
//! the butterfly theorem and the self-polar diagonal triangle.

use homolog_core::construct::{distance2, midpoint, perpendicular_through, project_onto_line};
use homolog_core::metric::{circle_through, power_of_point, second_intersection, Circle};
use homolog_core::projective::{cross_ratio, is_collinear, join, meet, signed_ratio, PPoint};
use homolog_core::scalar::Scalar;
use homolog_core::transform::{homothety_between_circles, polar, Homothety};
use homolog_core::triangle::{
    annex_identity_ids, evaluate_annex_identity, named_center, CenterId, IdentityId,
    IdentityStatus, Triangle, Vertex,
};
use rand::Rng;

use crate::checks::{BackendReq, CheckSpec, FixtureClass};
use crate::fixtures::{random_lattice_point, random_rational};
use crate::registry::support::{
    circle_point_from, cyclic_order, distinct_circle_points, point_off_sides,
};

fn sc(n: i64) -> Scalar {
    Scalar::from_int(n)
}

pub fn entries() -> Vec<CheckSpec> {
    vec![
        CheckSpec {
            id: "R71",
            title: "Distance identity table",
            statement: "every catalogued squared-distance identity between the classical centers holds; the one misprinted form is documented by its nonzero residual",
            backend: BackendReq::Exact,
            fixture: FixtureClass::Triangles,
            run: |ctx| {
                let t = ctx.triangle().clone();
                for id in annex_identity_ids() {
                    let Some(residual) = ctx.try_or_skip(
                        evaluate_annex_identity(&id, &t),
                        "identity not applicable",
                    ) else {
                        return;
                    };
                    match id.status() {
                        IdentityStatus::Verified => {
                            ctx.residual(&residual, &format!("identity {}", id.name()))
                        }
                        IdentityStatus::PrintedMisprint => ctx.require(
                            !residual.is_zero(),
                            "the misprinted form must fail (documented)",
                        ),
                    }
                }
            },
        },
        CheckSpec {
            id: "R72",
            title: "Euler-circle tangency distances",
            statement: "Feuerbach (1822): IO₉² = (R/2 − r)² and I_aO₉² = (R/2 + r_a)², the squared tangency conditions of the incircle and excircles with the Euler circle",
            backend: BackendReq::Exact,
            fixture: FixtureClass::Triangles,
            run: |ctx| {
                let t = ctx.triangle().clone();
                let r1 = evaluate_annex_identity(&IdentityId::InNinePoint2, &t)
                    .expect("incircle tangency");
                ctx.residual(&r1, "incircle tangency distance");
                for v in Vertex::ALL {
                    let r = evaluate_annex_identity(&IdentityId::ExNinePoint2(v), &t)
                        .expect("excircle tangency");
                    ctx.residual(&r, "excircle tangency distance");
                }
            },
        },
        CheckSpec {
            id: "R73",
            title: "Concyclic quadruple product equality",
            statement: "Ptolemy: for a quadrilateral in a circle, the diagonal product equals the sum of the opposite-side products (checked in squared form)",
            backend: BackendReq::Exact,
            fixture: FixtureClass::Constructed("four circumcircle points"),
            run: |ctx| {
                let t = ctx.triangle().clone();
                let circ = t.circumcircle();
                let sampled = distinct_circle_points(&mut ctx.rng, &t, 4);
                let Some(mut pts) = ctx.try_or_skip(sampled, "could not sample circle points")
                else {
                    return;
                };
                cyclic_order(&circ, &mut pts);
                let d2 = |i: usize, j: usize| distance2(&pts[i], &pts[j]).expect("finite");
                // AC·BD = AB·CD + AD·BC, squared:
                // (d1 − d2 − d3)² = 4 d2 d3 with the sign condition d1 ≥ d2 + d3
                let d1 = d2(0, 2) * d2(1, 3);
                let dd2 = d2(0, 1) * d2(2, 3);
                let dd3 = d2(0, 3) * d2(1, 2);
                let lhs = (d1.clone() - dd2.clone() - dd3.clone()).squared();
                let rhs = sc(4) * dd2.clone() * dd3.clone();
                ctx.residual(&(lhs - rhs), "squared Ptolemy equality");
                ctx.require(
                    !(d1 - dd2 - dd3).is_negative(),
                    "diagonal product dominates",
                );
            },
        },
        CheckSpec {
            id: "R74",
            title: "Homothety centers of three circles",
            statement: "Monge: the six pairwise homothety centers of three circles lie in triples on four lines",
            backend: BackendReq::Exact,
            fixture: FixtureClass::Constructed("three rational circles"),
            run: |ctx| {
                for _ in 0..12 {
                    let mut circles = Vec::new();
                    let mut centers = Vec::new();
                    for _ in 0..3 {
                        let c = random_lattice_point(&mut ctx.rng, 10, &[]);
                        let r = ctx.rng.gen_range(1i64..=5);
                        if centers.iter().any(|x| x == &c) {
                            break;
                        }
                        centers.push(c.clone());
                        circles.push((
                            Circle::from_center_radius2(&c, sc(r * r)).expect("real circle"),
                            r,
                        ));
                    }
                    if circles.len() != 3 {
                        continue;
                    }
                    let radii: Vec<i64> = circles.iter().map(|(_, r)| *r).collect();
                    if radii[0] == radii[1] || radii[1] == radii[2] || radii[0] == radii[2] {
                        continue; // keep all direct centers finite
                    }
                    if is_collinear(&centers[0], &centers[1], &centers[2]) {
                        continue;
                    }
                    let pair = |i: usize, j: usize| {
                        homothety_between_circles(&circles[i].0, &circles[j].0).ok()
                    };
                    let (Some(p01), Some(p12), Some(p02)) = (pair(0, 1), pair(1, 2), pair(0, 2))
                    else {
                        continue;
                    };
                    let d01 = p01.direct_center().expect("distinct radii");
                    let d12 = p12.direct_center().expect("distinct radii");
                    let d02 = p02.direct_center().expect("distinct radii");
                    let i01 = p01.inverse_center();
                    let i12 = p12.inverse_center();
                    let i02 = p02.inverse_center();
                    ctx.require_collinear(&d01, &d12, &d02, "three direct centers collinear");
                    ctx.require_collinear(&d01, &i12, &i02, "direct + two inverse collinear");
                    ctx.require_collinear(&d12, &i01, &i02, "direct + two inverse collinear");
                    ctx.require_collinear(&d02, &i01, &i12, "direct + two inverse collinear");
                    return;
                }
                ctx.skip("no generic circle triple");
            },
        },
        CheckSpec {
            id: "R75",
            title: "Nine concyclic points",
            statement: "the side midpoints, altitude feet and vertex–orthocenter midpoints share one circle, the half-radius homothetic image of the circumcircle; circle centers and homothety centers form a harmonic range",
            backend: BackendReq::Exact,
            fixture: FixtureClass::Triangles,
            run: |ctx| {
                let t = ctx.triangle().clone();
                let o = named_center(&t, &CenterId::Circumcenter).expect("circumcenter");
                let g = named_center(&t, &CenterId::Centroid).expect("centroid");
                let h = named_center(&t, &CenterId::Orthocenter).expect("orthocenter");
                let o9 = named_center(&t, &CenterId::NinePoint).expect("nine-point center");
                let euler = circle_through(
                    &t.side_midpoint(Vertex::A),
                    &t.side_midpoint(Vertex::B),
                    &t.side_midpoint(Vertex::C),
                )
                .expect("euler circle");
                for v in Vertex::ALL {
                    ctx.require_on_circle(&t.side_midpoint(v), &euler, "side midpoint");
                    let foot =
                        project_onto_line(t.vertex(v), &t.side_line(v)).expect("altitude foot");
                    ctx.require_on_circle(&foot, &euler, "altitude foot");
                    let mid = midpoint(t.vertex(v), &h).expect("vertex-orthocenter midpoint");
                    ctx.require_on_circle(&mid, &euler, "vertex-orthocenter midpoint");
                }
                // half-ratio homothety about G maps the circumcircle onto it
                let hom = Homothety::new(g.clone(), Scalar::ratio(-1, 2)).expect("homothety");
                let image = hom.apply_circle(&t.circumcircle()).expect("image circle");
                ctx.require(image == euler, "homothetic image of the circumcircle");
                ctx.require_eq_points(&image.center(), &o9, "image center is the Euler center");
                // harmonic range: circle centers (O, O₉) against homothety
                // centers (H, G)
                if o != h {
                    let Some(r) = ctx.try_or_skip(cross_ratio(&o, &h, &o9, &g), "degenerate range")
                    else {
                        return;
                    };
                    ctx.require_eq_scalars(&r, &sc(-1), "harmonic division on the Euler line");
                }
            },
        },
        CheckSpec {
            id: "R76",
            title: "Perpendiculars at a point to the vertex rays",
            statement: "Bobillier: the perpendiculars at a point to its vertex rays cut the opposite sides in three collinear points",
            backend: BackendReq::Both,
            fixture: FixtureClass::Triangles,
            run: |ctx| {
                let t = ctx.triangle().clone();
                let o = point_off_sides(&mut ctx.rng, &t, false);
                let mut cuts = Vec::new();
                for v in Vertex::ALL {
                    let Some(ray) = ctx.try_geom(join(t.vertex(v), &o), "vertex ray") else {
                        return;
                    };
                    let perp = perpendicular_through(&ray, &o).expect("perpendicular");
                    match ctx.try_or_skip(meet(&perp, &t.side_line(v)), "parallel to side") {
                        Some(p) => cuts.push(p),
                        None => return,
                    }
                }
                ctx.require_collinear(&cuts[0], &cuts[1], &cuts[2], "Bobillier line");
            },
        },
        CheckSpec {
            id: "R77",
            title: "Chord bisection symmetry",
            statement: "butterfly: through the midpoint of a chord, any two chords cut the first chord's line in points symmetric about the midpoint",
            backend: BackendReq::Exact,
            fixture: FixtureClass::Constructed("circumcircle chords"),
            run: |ctx| {
                let t = ctx.triangle().clone();
                let circ = t.circumcircle();
                let center = circ.center();
                for _ in 0..10 {
                    // interior point M, not the center: midpoint chord is ⊥ OM
                    let m = {
                        let (cx, cy) = center.xy().expect("finite");
                        let dx = random_rational(&mut ctx.rng, 4, 5, &[]);
                        let dy = random_rational(&mut ctx.rng, 4, 5, &[]);
                        PPoint::from_cartesian(cx + dx, cy + dy)
                    };
                    if m == center {
                        continue;
                    }
                    match power_of_point(&m, &circ) {
                        Ok(p) if p.is_negative() => {}
                        _ => continue,
                    }
                    let om = join(&center, &m).expect("distinct");
                    let bisected = perpendicular_through(&om, &m).expect("bisected chord line");
                    let Ok(p) = circle_point_from(&mut ctx.rng, &circ, t.a()) else { continue };
                    let Ok(r) = circle_point_from(&mut ctx.rng, &circ, t.b()) else { continue };
                    if p == r || bisected.contains(&p) || bisected.contains(&r) || p == m || r == m
                    {
                        continue;
                    }
                    let (Ok(pm), Ok(rm)) = (join(&p, &m), join(&r, &m)) else { continue };
                    let (Ok(q), Ok(s)) = (
                        second_intersection(&circ, &p, &pm),
                        second_intersection(&circ, &r, &rm),
                    ) else {
                        continue;
                    };
                    if q == p || s == r || q == s || q == m || s == m {
                        continue;
                    }
                    let (Ok(ps), Ok(qr)) = (join(&p, &s), join(&q, &r)) else { continue };
                    let (Ok(u), Ok(v)) = (meet(&ps, &bisected), meet(&qr, &bisected)) else {
                        continue;
                    };
                    if u.is_at_infinity() || v.is_at_infinity() || u == v {
                        continue;
                    }
                    let du = distance2(&m, &u).expect("finite");
                    let dv = distance2(&m, &v).expect("finite");
                    ctx.require_eq_scalars(&du, &dv, "equal intercepts about the midpoint");
                    if u != v {
                        let ratio = signed_ratio(&m, &u, &v).expect("on one line");
                        ctx.require_eq_scalars(&ratio, &sc(-1), "midpoint between the intercepts");
                    }
                    return;
                }
                ctx.skip("no generic butterfly configuration");
            },
        },
        CheckSpec {
            id: "R78",
            title: "Self-polar diagonal triangle",
            statement: "for a quadrilateral in a circle, each diagonal-triangle vertex has the opposite side as polar, and the diagonal triangle's orthocenter is the circle center",
            backend: BackendReq::Exact,
            fixture: FixtureClass::Constructed("four circumcircle points"),
            run: |ctx| {
                let t = ctx.triangle().clone();
                let circ = t.circumcircle();
                for _ in 0..10 {
                    let Ok(mut pts) = distinct_circle_points(&mut ctx.rng, &t, 4) else {
                        continue;
                    };
                    cyclic_order(&circ, &mut pts);
                    let side = |i: usize, j: usize| join(&pts[i], &pts[j]).expect("distinct");
                    let (Ok(p), Ok(q), Ok(r)) = (
                        meet(&side(0, 1), &side(2, 3)),
                        meet(&side(1, 2), &side(3, 0)),
                        meet(&side(0, 2), &side(1, 3)),
                    ) else {
                        continue;
                    };
                    if p.is_at_infinity() || q.is_at_infinity() || r.is_at_infinity() {
                        continue; // trapezoid: retry for the affine statement
                    }
                    if p == q || q == r || p == r {
                        continue;
                    }
                    let (Ok(pol_p), Ok(pol_q), Ok(pol_r)) =
                        (polar(&circ, &p), polar(&circ, &q), polar(&circ, &r))
                    else {
                        continue;
                    };
                    ctx.require_eq_lines(&pol_p, &join(&q, &r).expect("qr"), "polar of P is QR");
                    ctx.require_eq_lines(&pol_q, &join(&p, &r).expect("pr"), "polar of Q is PR");
                    ctx.require_eq_lines(&pol_r, &join(&p, &q).expect("pq"), "polar of R is PQ");
                    // orthocenter of the self-polar triangle is the center
                    let Ok(diag) = Triangle::new(p, q, r) else { continue };
                    let orth = meet(
                        &diag.altitude_line(Vertex::A),
                        &diag.altitude_line(Vertex::B),
                    )
                    .expect("orthocenter");
                    ctx.require_eq_points(&orth, &circ.center(), "orthocenter at the center");
                    return;
                }
                ctx.skip("no generic cyclic quadrilateral");
            },
        },
    ]
}
