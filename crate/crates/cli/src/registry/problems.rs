//! Registry entries R80–R93: the curated problem set, each checked against
//! the construction its published solution uses as oracle.

use homolog_core::construct::{
    distance2, lincomb, parallel_through, perpendicular_through, project_onto_line,
};
use homolog_core::derived::{derive, DerivedKind};
use homolog_core::homology::homology_center;
use homolog_core::projective::{is_collinear, join, meet, signed_ratio, PPoint};
use homolog_core::scalar::Scalar;
use homolog_core::triangle::{
    barycentric_point, named_center, BarycentricCoords, CenterId, Triangle, Vertex,
};
use rand::Rng;

use crate::checks::{BackendReq, CheckSpec, Ctx, FixtureClass};
use crate::fixtures::{place_heronian, random_rational};
use crate::registry::support::{cyclic_order, distinct_circle_points, point_off_sides};

fn sc(n: i64) -> Scalar {
    Scalar::from_int(n)
}

/// Incenter of an arbitrary (possibly irrational-sided) triangle.
fn incenter_of(t: &Triangle) -> Option<PPoint> {
    named_center(t, &CenterId::Incenter).ok()
}

pub fn entries() -> Vec<CheckSpec> {
    vec![
        CheckSpec {
            id: "R80",
            title: "Zero cevian-vector sum forces the centroid",
            statement: "an inscribed perspective triangle whose cevian vectors sum to zero is the medial triangle, with the centroid as perspector",
            backend: BackendReq::Exact,
            fixture: FixtureClass::Triangles,
            run: |ctx| {
                let t = ctx.triangle().clone();
                let medial = derive(&t, &DerivedKind::Medial).expect("medial");
                let vector_sum = |t2: &Triangle| -> (Scalar, Scalar) {
                    let mut sx = Scalar::zero();
                    let mut sy = Scalar::zero();
                    for v in Vertex::ALL {
                        let (x1, y1) = t.vertex(v).xy().expect("finite");
                        let (x2, y2) = t2.vertex(v).xy().expect("finite");
                        sx = sx + (x2 - x1);
                        sy = sy + (y2 - y1);
                    }
                    (sx, sy)
                };
                let (sx, sy) = vector_sum(&medial);
                ctx.residual(&sx, "medial vector sum x");
                ctx.residual(&sy, "medial vector sum y");
                let g = named_center(&t, &CenterId::Centroid).expect("centroid");
                match ctx.try_or_skip(homology_center(&t, &medial), "shared vertex") {
                    Some(Some(c)) => ctx.require_eq_points(&c, &g, "perspector is the centroid"),
                    Some(None) => ctx.fail("medial pair must be perspective"),
                    None => return,
                }
                // a non-centroid cevian triangle has nonzero vector sum
                for _ in 0..6 {
                    let p = point_off_sides(&mut ctx.rng, &t, false);
                    if p == g {
                        continue;
                    }
                    let Ok(cev) = derive(&t, &DerivedKind::Cevian(p)) else { continue };
                    let (sx, sy) = vector_sum(&cev);
                    ctx.require(
                        !(sx.is_zero() && sy.is_zero()),
                        "non-medial cevian triangle has nonzero vector sum",
                    );
                    return;
                }
            },
        },
        CheckSpec {
            id: "R81",
            title: "Tangential vs circumcevian-of-centroid",
            statement: "the tangential triangle and the circumcevian triangle of the centroid are perspective (the Exeter point), and the perspector lies on the Euler line",
            backend: BackendReq::Exact,
            fixture: FixtureClass::Triangles,
            run: |ctx| {
                if !ctx.need_non_right() {
                    return;
                }
                let t = ctx.triangle().clone();
                let Some(tangential) =
                    ctx.try_or_skip(derive(&t, &DerivedKind::Tangential), "tangential degenerate")
                else {
                    return;
                };
                let g = named_center(&t, &CenterId::Centroid).expect("centroid");
                let Some(cp) = ctx.try_or_skip(
                    derive(&t, &DerivedKind::Circumpedal(g)),
                    "circumcevian degenerate",
                ) else {
                    return;
                };
                let Some(center_opt) =
                    ctx.try_or_skip(homology_center(&tangential, &cp), "shared vertex")
                else {
                    return;
                };
                let Some(x) = center_opt else {
                    ctx.fail("pair must be perspective");
                    return;
                };
                let o = named_center(&t, &CenterId::Circumcenter).expect("circumcenter");
                let h = named_center(&t, &CenterId::Orthocenter).expect("orthocenter");
                if o != h && x.is_finite() {
                    ctx.require(is_collinear(&o, &h, &x), "perspector on the Euler line");
                }
            },
        },
        CheckSpec {
            id: "R82",
            title: "Median–symmedian meet vs Brocard points",
            statement: "a median and a symmedian from different vertices meet in a Brocard point exactly when the triangle is isosceles",
            backend: BackendReq::Exact,
            fixture: FixtureClass::Triangles,
            run: |ctx| {
                // forward direction on a fixed isosceles Heronian triangle
                let iso = place_heronian((10, 13, 13));
                let (omega, omega2) =
                    homolog_core::triangle::brocard_points(&iso).expect("brocard points");
                let meet_ms = |sym: Vertex, med: Vertex| {
                    let s = iso.symmedian_line(sym).expect("symmedian");
                    let m = iso.median_line(med);
                    meet(&s, &m).expect("distinct lines")
                };
                // apex A: symmedian from B against median from C and the
                // mirror pair land on the two Brocard points
                let x1 = meet_ms(Vertex::B, Vertex::C);
                let x2 = meet_ms(Vertex::C, Vertex::B);
                ctx.require(
                    x1 == omega || x1 == omega2,
                    "isosceles: meet is a Brocard point",
                );
                ctx.require(
                    x2 == omega || x2 == omega2,
                    "isosceles: mirror meet is the other Brocard point",
                );
                ctx.require(x1 != x2, "the two meets are the two Brocard points");

                // reverse direction on the (scalene) fixture
                let t = ctx.triangle().clone();
                if t.metrics().is_isosceles() {
                    return;
                }
                let (omega, omega2) =
                    homolog_core::triangle::brocard_points(&t).expect("brocard points");
                for sym in Vertex::ALL {
                    for med in Vertex::ALL {
                        if sym == med {
                            continue;
                        }
                        let s = t.symmedian_line(sym).expect("symmedian");
                        let m = t.median_line(med);
                        let Ok(x) = meet(&s, &m) else { continue };
                        ctx.require(
                            x != omega && x != omega2,
                            "scalene: no median–symmedian meet is a Brocard point",
                        );
                    }
                }
            },
        },
        CheckSpec {
            id: "R83",
            title: "Incenters of the incenter sub-triangles",
            statement: "the cevians to the incenters of BIC, CIA, AIB are concurrent (first Velliers point)",
            backend: BackendReq::Float,
            fixture: FixtureClass::Triangles,
            run: |ctx| {
                let t = ctx.triangle().clone();
                let Some(i) = incenter_of(&t) else {
                    ctx.fail("incenter");
                    return;
                };
                sub_center_concurrency(ctx, &t, |sub| incenter_of(sub), &i, "incenter");
            },
        },
        CheckSpec {
            id: "R84",
            title: "Incenters of the excenter sub-triangles",
            statement: "the cevians to the incenters of B I_a C, C I_b A, A I_c B are concurrent (second Velliers point)",
            backend: BackendReq::Float,
            fixture: FixtureClass::Triangles,
            run: |ctx| {
                let t = ctx.triangle().clone();
                let mut lines = Vec::new();
                for v in Vertex::ALL {
                    let (p, q) = v.others();
                    let Some(ex) = ctx.try_or_skip(t.excenter(v), "excenter") else { return };
                    let Ok(sub) = Triangle::new(ex, t.vertex(p).clone(), t.vertex(q).clone())
                    else {
                        ctx.skip("degenerate sub-triangle");
                        return;
                    };
                    let Some(center) = incenter_of(&sub) else {
                        ctx.skip("sub-incenter failed");
                        return;
                    };
                    match ctx.try_geom(join(t.vertex(v), &center), "cevian") {
                        Some(l) => lines.push(l),
                        None => return,
                    }
                }
                ctx.require_concurrent(&lines[0], &lines[1], &lines[2], "cevians concurrent");
            },
        },
        CheckSpec {
            id: "R85",
            title: "Excenters of the incenter sub-triangles",
            statement: "the cevians to the BC/CA/AB-tangent excenters of BIC, CIA, AIB are concurrent",
            backend: BackendReq::Float,
            fixture: FixtureClass::Triangles,
            run: |ctx| {
                let t = ctx.triangle().clone();
                let Some(i) = incenter_of(&t) else {
                    ctx.fail("incenter");
                    return;
                };
                sub_center_concurrency(
                    ctx,
                    &t,
                    |sub| sub.excenter(Vertex::A).ok(),
                    &i,
                    "excenter tangent to the shared side",
                );
            },
        },
        CheckSpec {
            id: "R86",
            title: "Excenters of the excenter sub-triangles",
            statement: "the cevians to the side-tangent excenters of B I_a C, C I_b A, A I_c B are concurrent",
            backend: BackendReq::Float,
            fixture: FixtureClass::Triangles,
            run: |ctx| {
                let t = ctx.triangle().clone();
                let mut lines = Vec::new();
                for v in Vertex::ALL {
                    let (p, q) = v.others();
                    let Some(ex) = ctx.try_or_skip(t.excenter(v), "excenter") else { return };
                    let Ok(sub) = Triangle::new(ex, t.vertex(p).clone(), t.vertex(q).clone())
                    else {
                        ctx.skip("degenerate sub-triangle");
                        return;
                    };
                    // excenter opposite the apex is tangent to the shared side
                    let Some(center) = sub.excenter(Vertex::A).ok() else {
                        ctx.skip("sub-excenter failed");
                        return;
                    };
                    match ctx.try_geom(join(t.vertex(v), &center), "cevian") {
                        Some(l) => lines.push(l),
                        None => return,
                    }
                }
                ctx.require_concurrent(&lines[0], &lines[1], &lines[2], "cevians concurrent");
            },
        },
        CheckSpec {
            id: "R87",
            title: "Mixtilinear tangency cevians",
            statement: "Yiu: the cevians to the circumcircle tangency points of the three mixtilinear incircles concur, at the point with barycentric weights a²/(p−a)",
            backend: BackendReq::Float,
            fixture: FixtureClass::Triangles,
            run: |ctx| {
                let t = ctx.triangle().clone();
                let Some(i) = incenter_of(&t) else {
                    ctx.fail("incenter");
                    return;
                };
                let o = named_center(&t, &CenterId::Circumcenter).expect("circumcenter");
                let m = t.metrics().clone();
                let mut lines = Vec::new();
                for v in Vertex::ALL {
                    // mixtilinear incircle at v: center on the bisector at
                    // distance ρ/sin(v/2) from the vertex, ρ = r·bc/(p(p−a))
                    let (p_, q_) = v.others();
                    let (side_b, side_c) = (m.side(p_).to_f64(), m.side(q_).to_f64());
                    let p_len = m.p.to_f64();
                    let side_a = m.side(v).to_f64();
                    let rho = m.r.to_f64() * side_b * side_c / (p_len * (p_len - side_a));
                    let sin_half = ((p_len - side_b) * (p_len - side_c) / (side_b * side_c))
                        .max(0.0)
                        .sqrt();
                    if sin_half == 0.0 {
                        ctx.skip("degenerate half angle");
                        return;
                    }
                    let d = rho / sin_half;
                    let (vx, vy) = t.vertex(v).xy().expect("finite");
                    let (ix, iy) = i.xy().expect("finite");
                    let (dx, dy) = (ix.to_f64() - vx.to_f64(), iy.to_f64() - vy.to_f64());
                    let norm = (dx * dx + dy * dy).sqrt();
                    let center = PPoint::from_cartesian(
                        Scalar::float(vx.to_f64() + d * dx / norm),
                        Scalar::float(vy.to_f64() + d * dy / norm),
                    );
                    // tangency with the circumcircle: on the ray O -> center
                    let (ox, oy) = o.xy().expect("finite");
                    let (ex, ey) = (
                        center.x().expect("finite").to_f64() - ox.to_f64(),
                        center.y().expect("finite").to_f64() - oy.to_f64(),
                    );
                    let en = (ex * ex + ey * ey).sqrt();
                    let big_r = m.big_r.to_f64();
                    let touch = PPoint::from_cartesian(
                        Scalar::float(ox.to_f64() + big_r * ex / en),
                        Scalar::float(oy.to_f64() + big_r * ey / en),
                    );
                    ctx.require_on_circle(&touch, &t.circumcircle(), "tangency on the circumcircle");
                    match ctx.try_geom(join(t.vertex(v), &touch), "tangency cevian") {
                        Some(l) => lines.push(l),
                        None => return,
                    }
                }
                ctx.require_concurrent(&lines[0], &lines[1], &lines[2], "tangency cevians concur");
                // oracle: barycentric weights a²/(p−a)
                let weights = BarycentricCoords::new(
                    m.a2.clone().checked_div(&(m.p.clone() - m.a.clone())).expect("p>a"),
                    m.b2.clone().checked_div(&(m.p.clone() - m.b.clone())).expect("p>b"),
                    m.c2.clone().checked_div(&(m.p.clone() - m.c.clone())).expect("p>c"),
                )
                .expect("nonzero");
                let oracle = barycentric_point(&t, &weights).expect("finite");
                for l in &lines {
                    ctx.require_on_line(&oracle, l, "cevians pass through the barycentric oracle");
                }
            },
        },
        CheckSpec {
            id: "R88",
            title: "Bisected chord through a cyclic quadrilateral's diagonal meet",
            statement: "the chord bisected at the diagonal intersection of a cyclic quadrilateral is cut by the sides MN and PQ at equal distances from that intersection",
            backend: BackendReq::Exact,
            fixture: FixtureClass::Constructed("cyclic quadrilateral"),
            run: |ctx| {
                let t = ctx.triangle().clone();
                let circ = t.circumcircle();
                for _ in 0..10 {
                    let Ok(mut pts) = distinct_circle_points(&mut ctx.rng, &t, 4) else {
                        continue;
                    };
                    cyclic_order(&circ, &mut pts);
                    // diagonals of MNPQ are MP and NQ
                    let (Ok(mp), Ok(nq)) = (join(&pts[0], &pts[2]), join(&pts[1], &pts[3]))
                    else {
                        continue;
                    };
                    let Ok(u) = meet(&mp, &nq) else { continue };
                    if u.is_at_infinity() || u == circ.center() {
                        continue;
                    }
                    let ou = join(&circ.center(), &u).expect("distinct");
                    let chord = perpendicular_through(&ou, &u).expect("bisected chord");
                    let (Ok(mn), Ok(pq)) = (join(&pts[0], &pts[1]), join(&pts[2], &pts[3]))
                    else {
                        continue;
                    };
                    let (Ok(v), Ok(w)) = (meet(&chord, &mn), meet(&chord, &pq)) else {
                        continue;
                    };
                    if v.is_at_infinity() || w.is_at_infinity() || v == w || v == u || w == u {
                        continue;
                    }
                    let ratio = signed_ratio(&u, &v, &w).expect("collinear");
                    ctx.require_eq_scalars(&ratio, &sc(-1), "equal intercepts about U");
                    return;
                }
                ctx.skip("no generic quadrilateral");
            },
        },
        CheckSpec {
            id: "R89",
            title: "Centroid doubles the altitude-foot chord",
            statement: "the point completing GP = 2·GD beyond the centroid from an altitude foot lies on the circumcircle (half-ratio homothety endpoint)",
            backend: BackendReq::Exact,
            fixture: FixtureClass::Triangles,
            run: |ctx| {
                let t = ctx.triangle().clone();
                let g = named_center(&t, &CenterId::Centroid).expect("centroid");
                for v in Vertex::ALL {
                    let d = project_onto_line(t.vertex(v), &t.side_line(v)).expect("foot");
                    if d == g {
                        continue;
                    }
                    // P = G − 2 (D − G)
                    let p = lincomb(&[(sc(3), &g), (sc(-2), &d)]).expect("finite");
                    ctx.require_on_circle(&p, &t.circumcircle(), "endpoint on the circumcircle");
                    let ratio = signed_ratio(&g, &p, &d).expect("collinear by construction");
                    ctx.require_eq_scalars(&ratio, &sc(-2), "GP = 2 GD with opposite sense");
                }
            },
        },
        CheckSpec {
            id: "R90",
            title: "96–24–60 distance coincidence",
            statement: "in the triangle with angles 96° and 24°, OH = a − b (derived via OH² = 9R² − Σa² with C = 60°); the circulated \"ON = c − b\" misprint is documented as failing",
            backend: BackendReq::Float,
            fixture: FixtureClass::Constructed("fixed-angle triangle"),
            run: |ctx| {
                let a_angle = 96f64.to_radians();
                let b_angle = 24f64.to_radians();
                let scale: f64 = ctx.rng.gen_range(0.5..4.0);
                let tan_b = b_angle.tan();
                let tan_c = (std::f64::consts::PI - a_angle - b_angle).tan();
                // B at origin, C at (scale, 0); A above
                let x = scale * tan_c / (tan_b + tan_c);
                let y = x * tan_b;
                let t = Triangle::new(
                    PPoint::from_cartesian(Scalar::float(x), Scalar::float(y)),
                    PPoint::from_cartesian(Scalar::float(0.0), Scalar::float(0.0)),
                    PPoint::from_cartesian(Scalar::float(scale), Scalar::float(0.0)),
                )
                .expect("valid triangle");
                let o = named_center(&t, &CenterId::Circumcenter).expect("circumcenter");
                let h = named_center(&t, &CenterId::Orthocenter).expect("orthocenter");
                let m = t.metrics();
                let oh2 = distance2(&o, &h).expect("finite");
                let want = (m.a.clone() - m.b.clone()).squared();
                ctx.require_eq_scalars(&oh2, &want, "OH² = (a − b)²");
                // the misprinted form: |O Nagel| = c − b fails by a wide margin
                let n = named_center(&t, &CenterId::Nagel).expect("nagel");
                let on2 = distance2(&o, &n).expect("finite");
                let printed = (m.c.clone() - m.b.clone()).squared();
                let gap = (on2.to_f64() - printed.to_f64()).abs();
                ctx.require(
                    gap > 1e-3 * scale * scale,
                    "documented misprint must not hold",
                );
            },
        },
        CheckSpec {
            id: "R91",
            title: "Inscribed similar copy cuts the base in the squared side ratio",
            statement: "a triangle similar to the reference inscribed with its apex on the base divides the base in the squared ratio of the adjacent sides (the symmedian foot), and only there",
            backend: BackendReq::Exact,
            fixture: FixtureClass::Triangles,
            run: |ctx| {
                if !ctx.need_scalene() {
                    return;
                }
                let t = ctx.triangle().clone();
                let m = t.metrics();
                // S = symmedian foot from A on BC
                let s = lincomb(&[(m.b2.clone(), t.b()), (m.c2.clone(), t.c())]).expect("foot");
                let ratio = signed_ratio(&s, t.b(), t.c()).expect("on BC");
                let want = -(m.c2.clone().checked_div(&m.b2).expect("nonzero"));
                ctx.require_eq_scalars(&ratio, &want, "BS/CS = (AB/AC)² signed");

                let build = |s: &PPoint| -> Option<(Scalar, Scalar, Scalar)> {
                    let par_ac = parallel_through(&t.side_line(Vertex::B), s).ok()?;
                    let par_ab = parallel_through(&t.side_line(Vertex::C), s).ok()?;
                    let d = meet(&par_ac, &t.side_line(Vertex::C)).ok()?;
                    let e = meet(&par_ab, &t.side_line(Vertex::B)).ok()?;
                    let sd2 = distance2(s, &d).ok()?;
                    let se2 = distance2(s, &e).ok()?;
                    let de2 = distance2(&d, &e).ok()?;
                    Some((sd2, se2, de2))
                };
                let Some((sd2, se2, de2)) = build(&s) else {
                    ctx.skip("parallel construction degenerate");
                    return;
                };
                // similarity SDE ~ ABC: SD/c = SE/b = DE/a
                ctx.residual(
                    &(sd2.clone() * m.b2.clone() - se2.clone() * m.c2.clone()),
                    "SD/AB = SE/AC",
                );
                ctx.residual(
                    &(sd2 * m.a2.clone() - de2 * m.c2.clone()),
                    "SD/AB = DE/BC",
                );
                // any other base point fails the similarity
                let other = t.side_midpoint(Vertex::A);
                if other != s {
                    if let Some((sd2o, se2o, _)) = build(&other) {
                        ctx.require(
                            sd2o * m.b2.clone() != se2o * m.c2.clone(),
                            "similarity only at the symmedian foot",
                        );
                    }
                }
            },
        },
        CheckSpec {
            id: "R92",
            title: "Scaled contact perpendiculars concur",
            statement: "Kariya: scaling the incircle contact points from the incenter by any common factor keeps the vertex cevians concurrent",
            backend: BackendReq::Exact,
            fixture: FixtureClass::Triangles,
            run: |ctx| {
                let t = ctx.triangle().clone();
                let i = named_center(&t, &CenterId::Incenter).expect("incenter");
                let sweep = [
                    sc(2),
                    sc(-1),
                    Scalar::ratio(1, 3),
                    random_rational(&mut ctx.rng, 9, 4, &[0]),
                ];
                for k in sweep {
                    let Some(kp) = ctx.try_or_skip(
                        named_center(&t, &CenterId::Kariya(k.clone())),
                        "Kariya point undefined",
                    ) else {
                        return;
                    };
                    // the third cevian passes through it as well
                    let contact = project_onto_line(&i, &t.side_line(Vertex::C)).expect("contact");
                    let shifted = lincomb(&[(Scalar::one() - k.clone(), &i), (k, &contact)])
                        .expect("finite");
                    if &shifted == t.c() {
                        continue;
                    }
                    let third = join(t.c(), &shifted).expect("cevian");
                    ctx.require_on_line(&kp, &third, "third cevian concurs");
                }
            },
        },
        CheckSpec {
            id: "R93",
            title: "Scaled side midpoints from the circumcenter concur",
            statement: "Franke: scaling the side midpoints from the circumcenter by any common factor keeps the vertex cevians concurrent, on the Euler line",
            backend: BackendReq::Exact,
            fixture: FixtureClass::Triangles,
            run: |ctx| {
                let t = ctx.triangle().clone();
                let o = named_center(&t, &CenterId::Circumcenter).expect("circumcenter");
                let h = named_center(&t, &CenterId::Orthocenter).expect("orthocenter");
                let sweep = [
                    sc(2),
                    sc(3),
                    Scalar::ratio(-1, 2),
                    random_rational(&mut ctx.rng, 9, 4, &[0]),
                ];
                for k in sweep {
                    let mut lines = Vec::new();
                    let mut ok = true;
                    for v in Vertex::ALL {
                        let target = lincomb(&[
                            (Scalar::one() - k.clone(), &o),
                            (k.clone(), &t.side_midpoint(v)),
                        ])
                        .expect("finite");
                        if &target == t.vertex(v) {
                            ok = false;
                            break;
                        }
                        lines.push(join(t.vertex(v), &target).expect("cevian"));
                    }
                    if !ok {
                        continue;
                    }
                    ctx.require_concurrent(&lines[0], &lines[1], &lines[2], "scaled-midpoint cevians");
                    let Some(p) = ctx.try_or_skip(meet(&lines[0], &lines[1]), "parallel cevians")
                    else {
                        return;
                    };
                    if o != h && p.is_finite() {
                        ctx.require(is_collinear(&o, &h, &p), "perspector on the Euler line");
                    }
                }
            },
        },
    ]
}

/// Shared body for the sub-triangle concurrency problems: build the three
/// sub-triangles on `(apex_center, vertex pair)`, take `center_of` in each,
/// and assert the vertex cevians concur.
fn sub_center_concurrency(
    ctx: &mut Ctx,
    t: &Triangle,
    center_of: impl Fn(&Triangle) -> Option<PPoint>,
    apex: &PPoint,
    what: &str,
) {
    let mut lines = Vec::new();
    for v in Vertex::ALL {
        let (p, q) = v.others();
        let Ok(sub) = Triangle::new(apex.clone(), t.vertex(p).clone(), t.vertex(q).clone()) else {
            ctx.skip("degenerate sub-triangle");
            return;
        };
        let Some(center) = center_of(&sub) else {
            ctx.skip(format!("{what} failed in a sub-triangle"));
            return;
        };
        match ctx.try_geom(join(t.vertex(v), &center), "cevian") {
            Some(l) => lines.push(l),
            None => return,
        }
    }
    ctx.require_concurrent(&lines[0], &lines[1], &lines[2], "cevians concurrent");
}
