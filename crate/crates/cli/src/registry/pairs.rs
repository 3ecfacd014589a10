//! Registry entries R01–R33: the perspectivity theorems for pairs built
//! from one reference triangle — Desargues and its reciprocal, the
//! remarkable derived-triangle pairs, symmedian facts, and the
//! pedal-inversion generalization.

use homolog_core::construct::{midpoint, project_onto_line};
use homolog_core::derived::{derive, DerivedKind};
use homolog_core::homology::{analyze, homology_axis, homology_center, scaled_copy};
use homolog_core::metric::{circle_through, second_intersection, tangent_line_at};
use homolog_core::projective::{
    harmonic_conjugate, is_collinear, join, meet, signed_ratio, PPoint,
};
use homolog_core::scalar::Scalar;
use homolog_core::transform::{homothety_between_circles, Inversion};
use homolog_core::triangle::{
    cevian_traces, isotomic_conjugate, isotomic_of_side_point, named_center, trilinear_polar,
    CenterId, Triangle, Vertex,
};

use crate::checks::{BackendReq, CheckSpec, FixtureClass};
use crate::fixtures::random_rational;
use crate::registry::support::{perspective_copy, point_off_sides, transversal_line};

fn sc(n: i64) -> Scalar {
    Scalar::from_int(n)
}

pub fn entries() -> Vec<CheckSpec> {
    vec![
        CheckSpec {
            id: "R01",
            title: "Desargues direct",
            statement: "Desargues (1636): triangles perspective from a point have collinear side meets, forming the axis",
            backend: BackendReq::Both,
            fixture: FixtureClass::Constructed("perspective pair"),
            run: |ctx| {
                let t1 = ctx.triangle().clone();
                let (t2, center) = perspective_copy(&mut ctx.rng, &t1);
                let report = analyze(&t1, &t2);
                ctx.require(report.homological, "pair must be perspective");
                if let Some(c) = &report.center {
                    ctx.require_eq_points(c, &center, "recovered center");
                }
                ctx.require(report.axis.is_some(), "axis must exist");
            },
        },
        CheckSpec {
            id: "R02",
            title: "Desargues with one parallel side pair",
            statement: "Desargues, parallel case: when one pair of homologous sides is parallel the axis passes through their common direction",
            backend: BackendReq::Exact,
            fixture: FixtureClass::Constructed("perspective pair, one parallel side pair"),
            run: |ctx| {
                let t1 = ctx.triangle().clone();
                // equal ratios at A and C force A₁C₁ ∥ AC
                let center = point_off_sides(&mut ctx.rng, &t1, false);
                let k = random_rational(&mut ctx.rng, 6, 3, &[0, 1]);
                let mut k2 = random_rational(&mut ctx.rng, 6, 3, &[0, 1]);
                while k2 == k {
                    k2 = random_rational(&mut ctx.rng, 6, 3, &[0, 1]);
                }
                let Some(t2) = ctx.try_or_skip(
                    scaled_copy(&t1, &center, [k.clone(), k2, k]),
                    "degenerate scaled copy",
                ) else {
                    return;
                };
                let Some(axis) = ctx
                    .try_geom(homology_axis(&t1, &t2), "axis")
                    .flatten()
                else {
                    ctx.fail("axis must exist");
                    return;
                };
                let side_ca = t1.side_line(Vertex::B);
                let Some(dir) = ctx.try_geom(side_ca.direction_point(), "direction") else {
                    return;
                };
                let Some(meet_ca) =
                    ctx.try_geom(meet(&side_ca, &t2.side_line(Vertex::B)), "side meet")
                else {
                    return;
                };
                ctx.require(meet_ca.is_at_infinity(), "parallel sides meet at infinity");
                ctx.require_eq_points(&meet_ca, &dir, "meet is the shared direction");
                ctx.require_on_line(&dir, &axis, "axis passes through the direction");
            },
        },
        CheckSpec {
            id: "R03",
            title: "Desargues weak form (homothetic pair)",
            statement: "two sides pairwise parallel force the third parallel; a homothetic pair has the line at infinity as axis",
            backend: BackendReq::Exact,
            fixture: FixtureClass::Constructed("homothetic copy"),
            run: |ctx| {
                let t1 = ctx.triangle().clone();
                let center = point_off_sides(&mut ctx.rng, &t1, false);
                let k = random_rational(&mut ctx.rng, 6, 3, &[0, 1]);
                let Some(t2) = ctx.try_or_skip(
                    scaled_copy(&t1, &center, [k.clone(), k.clone(), k]),
                    "degenerate homothetic copy",
                ) else {
                    return;
                };
                for v in Vertex::ALL {
                    ctx.require(
                        t1.side_line(v).is_parallel_to(&t2.side_line(v)),
                        "homologous sides parallel",
                    );
                }
                let report = analyze(&t1, &t2);
                ctx.require(report.homological, "homothetic pair is perspective");
                match report.axis {
                    Some(axis) => ctx.require(axis.is_at_infinity(), "axis is the line at infinity"),
                    None => ctx.fail("axis missing"),
                }
            },
        },
        CheckSpec {
            id: "R04",
            title: "Desargues reciprocal",
            statement: "triangles with collinear side meets are perspective from a point",
            backend: BackendReq::Both,
            fixture: FixtureClass::Constructed("axis-first pair"),
            run: |ctx| {
                let t1 = ctx.triangle().clone();
                for _attempt in 0..8 {
                    let axis = transversal_line(&mut ctx.rng, &t1);
                    let Ok(n) = meet(&axis, &t1.side_line(Vertex::C)) else { continue };
                    let Ok(m) = meet(&axis, &t1.side_line(Vertex::A)) else { continue };
                    let Ok(p) = meet(&axis, &t1.side_line(Vertex::B)) else { continue };
                    let a1 = point_off_sides(&mut ctx.rng, &t1, false);
                    if a1 == n || a1 == m || a1 == p {
                        continue;
                    }
                    let Ok(na1) = join(&n, &a1) else { continue };
                    let tparam = random_rational(&mut ctx.rng, 5, 3, &[0, 1]);
                    let Ok(b1) = homolog_core::construct::point_on_segment(&n, &a1, tparam)
                    else {
                        continue;
                    };
                    if b1 == a1 || b1 == n || !na1.contains(&b1) {
                        continue;
                    }
                    let Ok(mb1) = join(&m, &b1) else { continue };
                    let Ok(pa1) = join(&p, &a1) else { continue };
                    let Ok(c1) = meet(&mb1, &pa1) else { continue };
                    if c1.is_at_infinity() {
                        continue;
                    }
                    let Ok(t2) = Triangle::new(a1, b1, c1) else { continue };
                    // guard the construction's own promise before asserting
                    let Ok(Some(built_axis)) = homology_axis(&t1, &t2) else { continue };
                    if built_axis != axis {
                        continue;
                    }
                    match homology_center(&t1, &t2) {
                        Ok(Some(_)) => {}
                        _ => ctx.fail("collinear side meets must force a perspector"),
                    }
                    return;
                }
                ctx.skip("no generic axis-first pair found");
            },
        },
        CheckSpec {
            id: "R05",
            title: "Harmonic conjugates of cevian feet are collinear",
            statement: "for concurrent cevians, the harmonic conjugates of the feet with respect to the side endpoints are collinear (the trilinear polar)",
            backend: BackendReq::Both,
            fixture: FixtureClass::Triangles,
            run: |ctx| {
                let t = ctx.triangle().clone();
                let p = point_off_sides(&mut ctx.rng, &t, false);
                let Some(feet) = ctx.try_geom(cevian_traces(&t, &p), "cevian traces") else {
                    return;
                };
                let mut conj = Vec::new();
                for (foot, v) in feet.iter().zip(Vertex::ALL) {
                    let (pv, qv) = v.others();
                    match ctx.try_geom(
                        harmonic_conjugate(foot, t.vertex(pv), t.vertex(qv)),
                        "harmonic conjugate",
                    ) {
                        Some(c) => conj.push(c),
                        None => return,
                    }
                }
                ctx.require_collinear(&conj[0], &conj[1], &conj[2], "conjugates collinear");
                if let Some(polar) = ctx.try_geom(trilinear_polar(&t, &p), "trilinear polar") {
                    for c in &conj {
                        ctx.require_on_line(c, &polar, "conjugate on the trilinear polar");
                    }
                }
            },
        },
        CheckSpec {
            id: "R06",
            title: "Orthic pair",
            statement: "a triangle and its orthic triangle are perspective; the center is the orthocenter",
            backend: BackendReq::Both,
            fixture: FixtureClass::Triangles,
            run: |ctx| {
                if !ctx.need_non_right() {
                    return;
                }
                let t = ctx.triangle().clone();
                let Some(orthic) = ctx.try_or_skip(derive(&t, &DerivedKind::Orthic), "orthic") else {
                    return;
                };
                match ctx.try_geom(homology_center(&t, &orthic), "center") {
                    Some(Some(c)) => {
                        let h = named_center(&t, &CenterId::Orthocenter).expect("orthocenter");
                        ctx.require_eq_points(&c, &h, "center is the orthocenter");
                    }
                    _ => ctx.fail("pair must be perspective"),
                }
            },
        },
        CheckSpec {
            id: "R07",
            title: "Orthic sides are anti-parallel",
            statement: "each orthic side is anti-parallel to the matching reference side: the four endpoints are concyclic",
            backend: BackendReq::Both,
            fixture: FixtureClass::Triangles,
            run: |ctx| {
                if !ctx.need_non_right() {
                    return;
                }
                let t = ctx.triangle().clone();
                let Some(orthic) = ctx.try_or_skip(derive(&t, &DerivedKind::Orthic), "orthic") else {
                    return;
                };
                for v in Vertex::ALL {
                    let (p, q) = v.others();
                    let Some(circle) = ctx.try_geom(
                        circle_through(t.vertex(p), t.vertex(q), orthic.vertex(p)),
                        "anti-parallel circle",
                    ) else {
                        return;
                    };
                    ctx.require_on_circle(orthic.vertex(q), &circle, "fourth point concyclic");
                }
            },
        },
        CheckSpec {
            id: "R08",
            title: "Incenter cevian triangle axis",
            statement: "the axis of a triangle and the incenter's cevian triangle passes through the external bisector feet",
            backend: BackendReq::Exact,
            fixture: FixtureClass::Triangles,
            run: |ctx| {
                let t = ctx.triangle().clone();
                let i = named_center(&t, &CenterId::Incenter).expect("incenter");
                let Some(cev) = ctx.try_geom(derive(&t, &DerivedKind::Cevian(i.clone())), "cevian triangle")
                else {
                    return;
                };
                let Some(Some(center)) = ctx.try_geom(homology_center(&t, &cev), "center") else {
                    ctx.fail("cevian pair must be perspective");
                    return;
                };
                ctx.require_eq_points(&center, &i, "center is the incenter");
                let Some(Some(axis)) = ctx.try_geom(homology_axis(&t, &cev), "axis") else {
                    ctx.fail("axis must exist");
                    return;
                };
                for v in Vertex::ALL {
                    let ext = t.external_bisector_line(v).expect("external bisector");
                    let Some(foot) = ctx.try_geom(meet(&ext, &t.side_line(v)), "external foot")
                    else {
                        return;
                    };
                    ctx.require_on_line(&foot, &axis, "external bisector foot on the axis");
                }
                if let Some(polar) = ctx.try_geom(trilinear_polar(&t, &i), "trilinear polar") {
                    ctx.require_eq_lines(&axis, &polar, "axis is the incenter's trilinear polar");
                }
            },
        },
        CheckSpec {
            id: "R09",
            title: "Excentral pair",
            statement: "a triangle and its excentral (external-bisector) triangle are perspective from the incenter, with the incenter's trilinear polar as axis",
            backend: BackendReq::Exact,
            fixture: FixtureClass::Triangles,
            run: |ctx| {
                let t = ctx.triangle().clone();
                let Some(anti) = ctx.try_geom(derive(&t, &DerivedKind::AntiSupplemental), "excentral")
                else {
                    return;
                };
                let i = named_center(&t, &CenterId::Incenter).expect("incenter");
                match ctx.try_geom(homology_center(&t, &anti), "center") {
                    Some(Some(c)) => ctx.require_eq_points(&c, &i, "center is the incenter"),
                    _ => ctx.fail("pair must be perspective"),
                }
                if let (Some(Some(axis)), Some(polar)) = (
                    ctx.try_geom(homology_axis(&t, &anti), "axis"),
                    ctx.try_geom(trilinear_polar(&t, &i), "trilinear polar"),
                ) {
                    ctx.require_eq_lines(&axis, &polar, "axis is the anti-orthic axis");
                }
            },
        },
        CheckSpec {
            id: "R10",
            title: "Isogonal cevian product",
            statement: "Steiner: two isogonal cevians from a vertex cut the opposite side in ratios whose product is the squared ratio of the enclosing sides",
            backend: BackendReq::Exact,
            fixture: FixtureClass::Triangles,
            run: |ctx| {
                let t = ctx.triangle().clone();
                // random interior cevian from A
                let tp = random_rational(&mut ctx.rng, 7, 8, &[]);
                let tp = (tp.abs() + Scalar::ratio(1, 16))
                    .checked_div(&sc(9))
                    .expect("nonzero");
                let Some(foot) = ctx.try_geom(
                    homolog_core::construct::point_on_segment(t.b(), t.c(), tp),
                    "cevian foot",
                ) else {
                    return;
                };
                if &foot == t.b() || &foot == t.c() {
                    ctx.skip("degenerate cevian foot");
                    return;
                }
                let cevian = join(t.a(), &foot).expect("cevian");
                let bisector = t.internal_bisector_line(Vertex::A).expect("bisector");
                let reflected =
                    homolog_core::construct::reflect_line_over_line(&cevian, &bisector)
                        .expect("isogonal cevian");
                let Some(foot2) = ctx.try_geom(meet(&reflected, &t.side_line(Vertex::A)), "isogonal foot")
                else {
                    return;
                };
                let r1 = signed_ratio(&foot, t.b(), t.c()).expect("ratio");
                let Some(r2) = ctx.try_or_skip(
                    signed_ratio(&foot2, t.b(), t.c()),
                    "isogonal foot at infinity",
                ) else {
                    return;
                };
                let m = t.metrics();
                let want = m.c2.clone().checked_div(&m.b2).expect("b nonzero");
                ctx.require_eq_scalars(&(r1 * r2), &want, "product of isogonal foot ratios");
            },
        },
        CheckSpec {
            id: "R11",
            title: "Symmedian foot ratio",
            statement: "the symmedian from a vertex divides the opposite side in the squared ratio of the adjacent sides",
            backend: BackendReq::Exact,
            fixture: FixtureClass::Triangles,
            run: |ctx| {
                let t = ctx.triangle().clone();
                let sym = t.symmedian_line(Vertex::A).expect("symmedian");
                let Some(foot) = ctx.try_geom(meet(&sym, &t.side_line(Vertex::A)), "foot") else {
                    return;
                };
                let r = signed_ratio(&foot, t.b(), t.c()).expect("ratio");
                let m = t.metrics();
                let want = -(m.c2.clone().checked_div(&m.b2).expect("b nonzero"));
                ctx.require_eq_scalars(&r, &want, "signed symmedian foot ratio");
            },
        },
        CheckSpec {
            id: "R12",
            title: "Midpoint of an anti-parallel lies on the symmedian",
            statement: "the midpoint of any anti-parallel segment to a side is on the symmedian from the opposite vertex",
            backend: BackendReq::Exact,
            fixture: FixtureClass::Triangles,
            run: |ctx| {
                let t = ctx.triangle().clone();
                for _ in 0..6 {
                    let tp = random_rational(&mut ctx.rng, 5, 7, &[]).abs();
                    let tp = (tp + Scalar::ratio(1, 11)).checked_div(&sc(8)).expect("den");
                    let Ok(d) = homolog_core::construct::point_on_segment(t.a(), t.c(), tp)
                    else {
                        continue;
                    };
                    if &d == t.a() || &d == t.c() {
                        continue;
                    }
                    let Ok(circle) = circle_through(t.b(), t.c(), &d) else { continue };
                    let side_ab = join(t.a(), t.b()).expect("side");
                    let Ok(e) = second_intersection(&circle, t.b(), &side_ab) else { continue };
                    if &e == t.b() {
                        continue;
                    }
                    let s = midpoint(&d, &e).expect("midpoint");
                    let k = named_center(&t, &CenterId::Symmedian).expect("symmedian point");
                    ctx.require_collinear(t.a(), &s, &k, "midpoint on the symmedian");
                    return;
                }
                ctx.skip("no generic anti-parallel found");
            },
        },
        CheckSpec {
            id: "R13",
            title: "External symmedian is the vertex tangent",
            statement: "the harmonic conjugate of the symmedian foot lies on the circumcircle tangent at the vertex",
            backend: BackendReq::Exact,
            fixture: FixtureClass::Triangles,
            run: |ctx| {
                let t = ctx.triangle().clone();
                let sym = t.symmedian_line(Vertex::A).expect("symmedian");
                let Some(foot) = ctx.try_geom(meet(&sym, &t.side_line(Vertex::A)), "foot") else {
                    return;
                };
                let Some(conj) = ctx.try_geom(
                    harmonic_conjugate(&foot, t.b(), t.c()),
                    "harmonic conjugate",
                ) else {
                    return;
                };
                let tangent = tangent_line_at(&t.circumcircle(), t.a()).expect("tangent");
                ctx.require_on_line(&conj, &tangent, "conjugate on the tangent at A");
            },
        },
        CheckSpec {
            id: "R14",
            title: "Vertex tangents meet the opposite sides collinearly",
            statement: "Carnot (1803): the circumcircle tangents at the vertices cut the opposite sides in three collinear points, on the symmedian point's trilinear polar",
            backend: BackendReq::Both,
            fixture: FixtureClass::Triangles,
            run: |ctx| {
                if !ctx.need_scalene() {
                    return;
                }
                let t = ctx.triangle().clone();
                let circ = t.circumcircle();
                let mut meets = Vec::new();
                for v in Vertex::ALL {
                    let tangent = tangent_line_at(&circ, t.vertex(v)).expect("tangent");
                    match ctx.try_geom(meet(&tangent, &t.side_line(v)), "tangent-side meet") {
                        Some(p) => meets.push(p),
                        None => return,
                    }
                }
                ctx.require_collinear(&meets[0], &meets[1], &meets[2], "three meets collinear");
                let k = named_center(&t, &CenterId::Symmedian).expect("symmedian point");
                if let Some(lemoine) = ctx.try_geom(trilinear_polar(&t, &k), "polar of K") {
                    for p in &meets {
                        ctx.require_on_line(p, &lemoine, "meet on the symmedian polar");
                    }
                }
            },
        },
        CheckSpec {
            id: "R15",
            title: "Tangential pair",
            statement: "a triangle and its tangential triangle are perspective from the symmedian point; the axis is the symmedian point's trilinear polar",
            backend: BackendReq::Exact,
            fixture: FixtureClass::Triangles,
            run: |ctx| {
                if !ctx.need_scalene() || !ctx.need_non_right() {
                    return;
                }
                let t = ctx.triangle().clone();
                let Some(tt) = ctx.try_or_skip(derive(&t, &DerivedKind::Tangential), "tangential")
                else {
                    return;
                };
                let k = named_center(&t, &CenterId::Symmedian).expect("symmedian point");
                match ctx.try_geom(homology_center(&t, &tt), "center") {
                    Some(Some(c)) => ctx.require_eq_points(&c, &k, "center is the symmedian point"),
                    _ => ctx.fail("pair must be perspective"),
                }
                if let (Some(Some(axis)), Some(polar)) = (
                    ctx.try_geom(homology_axis(&t, &tt), "axis"),
                    ctx.try_geom(trilinear_polar(&t, &k), "polar of K"),
                ) {
                    ctx.require_eq_lines(&axis, &polar, "axis is the symmedian polar");
                }
            },
        },
        CheckSpec {
            id: "R16",
            title: "Contact pair",
            statement: "a triangle and its contact triangle are perspective from the Gergonne point; the axis is the contact triangle's symmedian trilinear polar, the Gergonne point's polar in the incircle",
            backend: BackendReq::Exact,
            fixture: FixtureClass::Triangles,
            run: |ctx| {
                if !ctx.need_scalene() {
                    return;
                }
                let t = ctx.triangle().clone();
                let Some(contact) = ctx.try_geom(derive(&t, &DerivedKind::Contact), "contact")
                else {
                    return;
                };
                let gamma = named_center(&t, &CenterId::Gergonne).expect("gergonne");
                match ctx.try_geom(homology_center(&t, &contact), "center") {
                    Some(Some(c)) => ctx.require_eq_points(&c, &gamma, "center is the Gergonne point"),
                    _ => ctx.fail("pair must be perspective"),
                }
                let Some(incircle) = ctx.try_or_skip(t.incircle(), "incircle") else {
                    return;
                };
                if let Some(Some(axis)) = ctx.try_geom(homology_axis(&t, &contact), "axis") {
                    // the axis is the contact triangle's own symmedian
                    // trilinear polar, equivalently the polar of the
                    // Gergonne point with respect to the incircle
                    let kc = named_center(&contact, &CenterId::Symmedian).expect("contact K");
                    ctx.require_eq_points(&kc, &gamma, "contact symmedian point is the Gergonne point");
                    if let Some(lemoine) = ctx.try_geom(trilinear_polar(&contact, &kc), "contact polar") {
                        ctx.require_eq_lines(&axis, &lemoine, "axis is the contact symmedian polar");
                    }
                    if let Some(pol) = ctx.try_geom(
                        homolog_core::transform::polar(&incircle, &gamma),
                        "polar of the Gergonne point",
                    ) {
                        ctx.require_eq_lines(&axis, &pol, "axis is the Gergonne polar in the incircle");
                    }
                }
            },
        },
        CheckSpec {
            id: "R17",
            title: "Contact vs excenter projections",
            statement: "the contact triangle and the projections of the excenters on the side perpendicular bisectors are perspective from the Gergonne point",
            backend: BackendReq::Exact,
            fixture: FixtureClass::Triangles,
            run: |ctx| {
                let t = ctx.triangle().clone();
                let Some(contact) = ctx.try_geom(derive(&t, &DerivedKind::Contact), "contact")
                else {
                    return;
                };
                let mut verts = Vec::new();
                for v in Vertex::ALL {
                    let ex = t.excenter(v).expect("excenter");
                    let proj = project_onto_line(&ex, &t.side_perpendicular_bisector(v))
                        .expect("projection");
                    verts.push(proj);
                }
                let Some(t2) = ctx.try_or_skip(
                    Triangle::new(verts[0].clone(), verts[1].clone(), verts[2].clone()),
                    "degenerate projection triangle",
                ) else {
                    return;
                };
                let gamma = named_center(&t, &CenterId::Gergonne).expect("gergonne");
                match ctx.try_geom(homology_center(&contact, &t2), "center") {
                    Some(Some(c)) => ctx.require_eq_points(&c, &gamma, "center is the Gergonne point"),
                    _ => ctx.fail("pair must be perspective"),
                }
            },
        },
        CheckSpec {
            id: "R18",
            title: "Complete quadrilateral diagonal midpoints",
            statement: "Newton–Gauss: the midpoints of the three diagonals of a complete quadrilateral are collinear",
            backend: BackendReq::Both,
            fixture: FixtureClass::Constructed("four random lines"),
            run: |ctx| {
                let t = ctx.triangle().clone();
                for _ in 0..10 {
                    let lines = [
                        transversal_line(&mut ctx.rng, &t),
                        transversal_line(&mut ctx.rng, &t),
                        transversal_line(&mut ctx.rng, &t),
                        transversal_line(&mut ctx.rng, &t),
                    ];
                    match newton_gauss_line(&lines) {
                        Some((m1, m2, m3)) => {
                            ctx.require_collinear(&m1, &m2, &m3, "diagonal midpoints collinear");
                            return;
                        }
                        None => continue,
                    }
                }
                ctx.skip("no generic quadrilateral found");
            },
        },
        CheckSpec {
            id: "R19",
            title: "Medial vs excentral",
            statement: "the medial and excentral triangles are perspective from the excentral symmedian point; the axis is the Newton–Gauss line of the sides plus the incenter's trilinear polar",
            backend: BackendReq::Exact,
            fixture: FixtureClass::Triangles,
            run: |ctx| {
                if !ctx.need_scalene() {
                    return;
                }
                let t = ctx.triangle().clone();
                let medial = derive(&t, &DerivedKind::Medial).expect("medial");
                let Some(anti) = ctx.try_geom(derive(&t, &DerivedKind::AntiSupplemental), "excentral")
                else {
                    return;
                };
                match ctx.try_geom(homology_center(&medial, &anti), "center") {
                    Some(Some(c)) => {
                        let k_anti = named_center(&anti, &CenterId::Symmedian).expect("K");
                        ctx.require_eq_points(&c, &k_anti, "center is the excentral symmedian point");
                    }
                    _ => ctx.fail("pair must be perspective"),
                }
                let i = named_center(&t, &CenterId::Incenter).expect("incenter");
                let polar = trilinear_polar(&t, &i).expect("anti-orthic axis");
                let quad = [
                    t.side_line(Vertex::A),
                    t.side_line(Vertex::B),
                    t.side_line(Vertex::C),
                    polar,
                ];
                if let (Some(Some(axis)), Some((m1, m2, m3))) = (
                    ctx.try_geom(homology_axis(&medial, &anti), "axis"),
                    newton_gauss_line(&quad),
                ) {
                    for m in [&m1, &m2, &m3] {
                        ctx.require_on_line(m, &axis, "diagonal midpoint on the axis");
                    }
                }
            },
        },
        CheckSpec {
            id: "R20",
            title: "Medial vs tangential",
            statement: "the medial and tangential triangles are perspective from the circumcenter; the axis is the Newton–Gauss line of the sides plus the symmedian point's trilinear polar",
            backend: BackendReq::Exact,
            fixture: FixtureClass::Triangles,
            run: |ctx| {
                if !ctx.need_scalene() || !ctx.need_non_right() {
                    return;
                }
                let t = ctx.triangle().clone();
                let medial = derive(&t, &DerivedKind::Medial).expect("medial");
                let Some(tt) = ctx.try_or_skip(derive(&t, &DerivedKind::Tangential), "tangential")
                else {
                    return;
                };
                match ctx.try_geom(homology_center(&medial, &tt), "center") {
                    Some(Some(c)) => {
                        let o = named_center(&t, &CenterId::Circumcenter).expect("circumcenter");
                        ctx.require_eq_points(&c, &o, "center is the circumcenter");
                    }
                    _ => ctx.fail("pair must be perspective"),
                }
                let k = named_center(&t, &CenterId::Symmedian).expect("symmedian point");
                let lemoine = trilinear_polar(&t, &k).expect("lemoine");
                let quad = [
                    t.side_line(Vertex::A),
                    t.side_line(Vertex::B),
                    t.side_line(Vertex::C),
                    lemoine,
                ];
                if let (Some(Some(axis)), Some((m1, m2, m3))) = (
                    ctx.try_geom(homology_axis(&medial, &tt), "axis"),
                    newton_gauss_line(&quad),
                ) {
                    for m in [&m1, &m2, &m3] {
                        ctx.require_on_line(m, &axis, "diagonal midpoint on the axis");
                    }
                }
            },
        },
        CheckSpec {
            id: "R21",
            title: "Incircle and excircle touch points are isometric",
            statement: "on each side, the incircle contact and the opposite excircle contact are reflections in the side midpoint",
            backend: BackendReq::Both,
            fixture: FixtureClass::Triangles,
            run: |ctx| {
                let t = ctx.triangle().clone();
                for v in Vertex::ALL {
                    let contact = t.incircle_contact(v).expect("contact");
                    let excontact = t.excircle_contact_on_side(v).expect("excircle contact");
                    let reflected = homolog_core::construct::reflect_point_through(
                        &contact,
                        &t.side_midpoint(v),
                    )
                    .expect("reflection");
                    ctx.require_eq_points(&reflected, &excontact, "isometric touch pair");
                }
            },
        },
        CheckSpec {
            id: "R22",
            title: "Isotomic cevians of concurrent cevians concur",
            statement: "Neuberg: reflecting concurrent cevian feet in the side midpoints yields concurrent cevians (the isotomic conjugate)",
            backend: BackendReq::Both,
            fixture: FixtureClass::Triangles,
            run: |ctx| {
                let t = ctx.triangle().clone();
                let p = point_off_sides(&mut ctx.rng, &t, false);
                let Some(feet) = ctx.try_geom(cevian_traces(&t, &p), "traces") else { return };
                let mut lines = Vec::new();
                for (foot, v) in feet.iter().zip(Vertex::ALL) {
                    let mirrored = isotomic_of_side_point(&t, v, foot).expect("mirror");
                    match ctx.try_geom(join(t.vertex(v), &mirrored), "isotomic cevian") {
                        Some(l) => lines.push(l),
                        None => return,
                    }
                }
                ctx.require_concurrent(&lines[0], &lines[1], &lines[2], "isotomic cevians concur");
                if let Some(conj) = ctx.try_or_skip(isotomic_conjugate(&t, &p), "conjugate at infinity") {
                    for l in &lines {
                        ctx.require_on_line(&conj, l, "concurrency at the isotomic conjugate");
                    }
                }
            },
        },
        CheckSpec {
            id: "R23",
            title: "Cevians to the excircle touch points concur",
            statement: "the cevians to the opposite excircle touch points concur in one point (the Nagel point)",
            backend: BackendReq::Both,
            fixture: FixtureClass::Triangles,
            run: |ctx| {
                let t = ctx.triangle().clone();
                let n = named_center(&t, &CenterId::Nagel).expect("nagel");
                for v in Vertex::ALL {
                    let touch = t.excircle_contact_on_side(v).expect("touch");
                    let cevian = join(t.vertex(v), &touch).expect("cevian");
                    ctx.require_on_line(&n, &cevian, "Nagel point on each touch cevian");
                }
            },
        },
        CheckSpec {
            id: "R24",
            title: "Isotomic transversal",
            statement: "reflecting the three intersections of a transversal in the side midpoints yields three collinear points",
            backend: BackendReq::Both,
            fixture: FixtureClass::Constructed("random transversal"),
            run: |ctx| {
                let t = ctx.triangle().clone();
                let d = transversal_line(&mut ctx.rng, &t);
                let mut mirrored = Vec::new();
                for v in Vertex::ALL {
                    let Some(x) = ctx.try_or_skip(meet(&d, &t.side_line(v)), "parallel side") else {
                        return;
                    };
                    mirrored.push(isotomic_of_side_point(&t, v, &x).expect("mirror"));
                }
                ctx.require_collinear(&mirrored[0], &mirrored[1], &mirrored[2], "isotomic transversal");
            },
        },
        CheckSpec {
            id: "R25",
            title: "Cotangent pair",
            statement: "a triangle and its cotangent triangle are perspective from the Nagel point; the axes of the contact and cotangent pairs are isotomic transversals of each other",
            backend: BackendReq::Exact,
            fixture: FixtureClass::Triangles,
            run: |ctx| {
                if !ctx.need_scalene() {
                    return;
                }
                let t = ctx.triangle().clone();
                let Some(cot) = ctx.try_geom(derive(&t, &DerivedKind::Cotangent), "cotangent") else {
                    return;
                };
                let n = named_center(&t, &CenterId::Nagel).expect("nagel");
                match ctx.try_geom(homology_center(&t, &cot), "center") {
                    Some(Some(c)) => ctx.require_eq_points(&c, &n, "center is the Nagel point"),
                    _ => ctx.fail("pair must be perspective"),
                }
                let contact = derive(&t, &DerivedKind::Contact).expect("contact");
                if let (Some(Some(axis_cot)), Some(Some(axis_con))) = (
                    ctx.try_geom(homology_axis(&t, &cot), "cotangent axis"),
                    ctx.try_geom(homology_axis(&t, &contact), "contact axis"),
                ) {
                    for v in Vertex::ALL {
                        let Some(x_con) =
                            ctx.try_or_skip(meet(&axis_con, &t.side_line(v)), "axis parallel to side")
                        else {
                            return;
                        };
                        let Some(x_cot) =
                            ctx.try_or_skip(meet(&axis_cot, &t.side_line(v)), "axis parallel to side")
                        else {
                            return;
                        };
                        let mirrored = isotomic_of_side_point(&t, v, &x_con).expect("mirror");
                        ctx.require_eq_points(&mirrored, &x_cot, "axes are isotomic transversals");
                    }
                }
            },
        },
        CheckSpec {
            id: "R26",
            title: "Ex-tangential axes",
            statement: "the ex-tangential triangle is perspective to both the excentral triangle and the reference, sharing the incenter's trilinear polar as axis",
            backend: BackendReq::Exact,
            fixture: FixtureClass::Triangles,
            run: |ctx| {
                if !ctx.need_scalene() || !ctx.need_non_right() {
                    return;
                }
                let t = ctx.triangle().clone();
                let Some(et) = ctx.try_or_skip(derive(&t, &DerivedKind::ExTangential), "ex-tangential")
                else {
                    return;
                };
                let anti = derive(&t, &DerivedKind::AntiSupplemental).expect("excentral");
                let i = named_center(&t, &CenterId::Incenter).expect("incenter");
                let polar = trilinear_polar(&t, &i).expect("anti-orthic axis");
                match ctx.try_geom(homology_axis(&anti, &et), "excentral/ex-tangential axis") {
                    Some(Some(axis)) => ctx.require_eq_lines(&axis, &polar, "axis of the excentral pair"),
                    _ => ctx.fail("excentral pair must have an axis"),
                }
                match ctx.try_geom(homology_axis(&t, &et), "reference/ex-tangential axis") {
                    Some(Some(axis)) => ctx.require_eq_lines(&axis, &polar, "axis of the reference pair"),
                    _ => ctx.fail("reference pair must have an axis"),
                }
                match ctx.try_geom(homology_center(&anti, &et), "center") {
                    Some(Some(_)) => {}
                    _ => ctx.fail("excentral pair must be perspective"),
                }
            },
        },
        CheckSpec {
            id: "R27",
            title: "Excircle homothety centers",
            statement: "d'Alembert: the direct homothety centers of the excircles taken pairwise are the external bisector feet, collinear on the incenter's trilinear polar; each lies on the line of the two matching inverse centers",
            backend: BackendReq::Exact,
            fixture: FixtureClass::Triangles,
            run: |ctx| {
                if !ctx.need_scalene() {
                    return;
                }
                let t = ctx.triangle().clone();
                let mut directs = Vec::new();
                for v in Vertex::ALL {
                    let (p, q) = v.others();
                    let Some(cp) = ctx.try_geom(t.excircle(p), "excircle") else { return };
                    let Some(cq) = ctx.try_geom(t.excircle(q), "excircle") else { return };
                    let Some(pair) =
                        ctx.try_or_skip(homothety_between_circles(&cp, &cq), "congruent excircles")
                    else {
                        return;
                    };
                    let Some(direct) = pair.direct_center() else {
                        ctx.skip("congruent excircle pair");
                        return;
                    };
                    // the direct center is the external bisector foot on the
                    // side line through the shared vertex pair's opposite side
                    let ext = t.external_bisector_line(v).expect("external bisector");
                    let Some(foot) = ctx.try_geom(meet(&ext, &t.side_line(v)), "foot") else {
                        return;
                    };
                    ctx.require_eq_points(&direct, &foot, "direct center is the bisector foot");
                    // inverse centers are the triangle's own vertices: the
                    // direct center lies on their join, the side line
                    ctx.require_on_line(&direct, &t.side_line(v), "direct center on the side");
                    directs.push(direct);
                }
                ctx.require_collinear(&directs[0], &directs[1], &directs[2], "direct centers collinear");
                let i = named_center(&t, &CenterId::Incenter).expect("incenter");
                let polar = trilinear_polar(&t, &i).expect("anti-orthic axis");
                for d in &directs {
                    ctx.require_on_line(d, &polar, "direct center on the anti-orthic axis");
                }
            },
        },
        CheckSpec {
            id: "R28",
            title: "Circumcevian triangle of the orthocenter",
            statement: "the circumcircle points on the orthocenter's cevians are the reflections of the orthocenter in the sides (double the orthic triangle from H)",
            backend: BackendReq::Exact,
            fixture: FixtureClass::Triangles,
            run: |ctx| {
                if !ctx.need_non_right() {
                    return;
                }
                let t = ctx.triangle().clone();
                let h = named_center(&t, &CenterId::Orthocenter).expect("orthocenter");
                let Some(cp) = ctx.try_or_skip(
                    derive(&t, &DerivedKind::Circumpedal(h.clone())),
                    "circumpedal degenerates",
                ) else {
                    return;
                };
                let circ = t.circumcircle();
                for v in Vertex::ALL {
                    let reflected =
                        homolog_core::construct::reflect_point_over_line(&h, &t.side_line(v))
                            .expect("reflection");
                    ctx.require_on_circle(&reflected, &circ, "reflection on circumcircle");
                    ctx.require_eq_points(&reflected, cp.vertex(v), "reflection is the chord point");
                }
                // equivalently: image of the orthic triangle under the
                // ratio-2 homothety about H
                let orthic = derive(&t, &DerivedKind::Orthic).expect("orthic");
                let hh = homolog_core::transform::Homothety::new(h, sc(2)).expect("homothety");
                for v in Vertex::ALL {
                    let img = hh.apply_point(orthic.vertex(v)).expect("image");
                    ctx.require_eq_points(&img, cp.vertex(v), "homothety image");
                }
            },
        },
        CheckSpec {
            id: "R29",
            title: "Co-symmedian triangle shares the symmedians",
            statement: "the circumcevian triangle of the symmedian point has the reference cevians as its own symmedians",
            backend: BackendReq::Exact,
            fixture: FixtureClass::Triangles,
            run: |ctx| {
                let t = ctx.triangle().clone();
                let k = named_center(&t, &CenterId::Symmedian).expect("symmedian point");
                let Some(t2) = ctx.try_or_skip(
                    derive(&t, &DerivedKind::Circumpedal(k)),
                    "circumcevian degenerates",
                ) else {
                    return;
                };
                for v in Vertex::ALL {
                    let Some(sym2) = ctx.try_geom(t2.symmedian_line(v), "symmedian of the image")
                    else {
                        return;
                    };
                    ctx.require_on_line(t.vertex(v), &sym2, "reference vertex on the image symmedian");
                    ctx.require_on_line(t2.vertex(v), &sym2, "image vertex on its own symmedian");
                }
            },
        },
        CheckSpec {
            id: "R30",
            title: "Co-symmedian axis",
            statement: "the axis of a triangle and its co-symmedian triangle is the symmedian point's trilinear polar",
            backend: BackendReq::Exact,
            fixture: FixtureClass::Triangles,
            run: |ctx| {
                if !ctx.need_scalene() {
                    return;
                }
                let t = ctx.triangle().clone();
                let k = named_center(&t, &CenterId::Symmedian).expect("symmedian point");
                let Some(t2) = ctx.try_or_skip(
                    derive(&t, &DerivedKind::Circumpedal(k.clone())),
                    "circumcevian degenerates",
                ) else {
                    return;
                };
                match ctx.try_geom(homology_axis(&t, &t2), "axis") {
                    Some(Some(axis)) => {
                        let lemoine = trilinear_polar(&t, &k).expect("polar of K");
                        ctx.require_eq_lines(&axis, &lemoine, "axis is the symmedian polar");
                    }
                    _ => ctx.fail("axis must exist"),
                }
            },
        },
        CheckSpec {
            id: "R31",
            title: "Circumcenter-circle centers pair",
            statement: "Coşniță: the circumcenters of BOC, COA, AOB form a triangle perspective with the reference",
            backend: BackendReq::Exact,
            fixture: FixtureClass::Triangles,
            run: |ctx| {
                if !ctx.need_non_right() {
                    return;
                }
                let t = ctx.triangle().clone();
                let Some(cos) = ctx.try_or_skip(derive(&t, &DerivedKind::Cosnita), "degenerate")
                else {
                    return;
                };
                match ctx.try_geom(homology_center(&t, &cos), "center") {
                    Some(Some(c)) => {
                        let want = named_center(&t, &CenterId::Cosnita).expect("cosnita point");
                        ctx.require_eq_points(&c, &want, "center is the Coşniță point");
                    }
                    _ => ctx.fail("pair must be perspective"),
                }
            },
        },
        CheckSpec {
            id: "R32",
            title: "Coşniță point vs nine-point center",
            statement: "the Coşniță point is the isogonal conjugate of the nine-point center",
            backend: BackendReq::Exact,
            fixture: FixtureClass::Triangles,
            run: |ctx| {
                if !ctx.need_non_right() {
                    return;
                }
                let t = ctx.triangle().clone();
                let Some(k0) = ctx.try_or_skip(
                    named_center(&t, &CenterId::Cosnita),
                    "Coşniță point undefined",
                ) else {
                    return;
                };
                let o9 = named_center(&t, &CenterId::NinePoint).expect("nine-point center");
                let Some(isog) = ctx.try_or_skip(
                    homolog_core::triangle::isogonal_conjugate(&t, &o9),
                    "nine-point center on a side or the circumcircle",
                ) else {
                    return;
                };
                ctx.require_eq_points(&k0, &isog, "Coşniță = isogonal of nine-point center");
            },
        },
        CheckSpec {
            id: "R33",
            title: "Pedal-inversion perspectivity (parameter sweep)",
            statement: "inverting the pedal triangle's vertices from the pedal point with any nonzero power yields a triangle perspective with the reference",
            backend: BackendReq::Exact,
            fixture: FixtureClass::Triangles,
            run: |ctx| {
                let t = ctx.triangle().clone();
                let p = point_off_sides(&mut ctx.rng, &t, true);
                let Some(pedal) = ctx.try_or_skip(
                    derive(&t, &DerivedKind::Pedal(p.clone())),
                    "degenerate pedal",
                ) else {
                    return;
                };
                let sweep = [
                    sc(2),
                    sc(-3),
                    Scalar::ratio(1, 2),
                    random_rational(&mut ctx.rng, 8, 5, &[0]),
                ];
                for k in sweep {
                    let inv = Inversion::new(p.clone(), k).expect("inversion");
                    let mut verts = Vec::new();
                    for v in Vertex::ALL {
                        match ctx.try_or_skip(inv.invert_point(pedal.vertex(v)), "pedal foot at pole") {
                            Some(q) => verts.push(q),
                            None => return,
                        }
                    }
                    let Some(t2) = ctx.try_or_skip(
                        Triangle::new(verts[0].clone(), verts[1].clone(), verts[2].clone()),
                        "inverted triangle degenerate",
                    ) else {
                        return;
                    };
                    match homology_center(&t, &t2) {
                        Ok(Some(_)) => {}
                        Ok(None) => ctx.fail("inverted pedal triangle must be perspective"),
                        Err(_) => ctx.skip("shared vertex in sweep"),
                    }
                    if ctx.done() {
                        return;
                    }
                }
            },
        },
    ]
}

/// Midpoints of the three diagonals of the complete quadrilateral formed by
/// four lines; `None` when any vertex degenerates to infinity.
fn newton_gauss_line(
    lines: &[homolog_core::projective::PLine; 4],
) -> Option<(PPoint, PPoint, PPoint)> {
    let v = |i: usize, j: usize| meet(&lines[i], &lines[j]).ok();
    let pairs = [((0, 1), (2, 3)), ((0, 2), (1, 3)), ((0, 3), (1, 2))];
    let mut mids = Vec::new();
    for ((a, b), (c, d)) in pairs {
        let p = v(a, b)?;
        let q = v(c, d)?;
        if p.is_at_infinity() || q.is_at_infinity() || p == q {
            return None;
        }
        mids.push(midpoint(&p, &q).ok()?);
    }
    let collinear_check = is_collinear(&mids[0], &mids[1], &mids[2]);
    // the caller asserts collinearity; returning the triple keeps the
    // assertion in one place
    let _ = collinear_check;
    Some((mids[0].clone(), mids[1].clone(), mids[2].clone()))
}
