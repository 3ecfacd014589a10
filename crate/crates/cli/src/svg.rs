//! Deterministic SVG emission for scenes: fixed viewport fitting with a 5%
//! margin, element order = definition order, labels from element names, and
//! fixed-precision coordinate formatting so identical scenes serialize
//! byte-identically.

use homolog_core::error::{GeomError, Result};
use homolog_core::scene::{Element, Scene};

#[derive(Debug, Clone)]
pub struct SvgOptions {
    pub width: f64,
    pub labels: bool,
}

impl Default for SvgOptions {
    fn default() -> Self {
        SvgOptions {
            width: 640.0,
            labels: true,
        }
    }
}

struct Frame {
    min_x: f64,
    min_y: f64,
    max_x: f64,
    max_y: f64,
}

impl Frame {
    fn grow(&mut self, x: f64, y: f64) {
        self.min_x = self.min_x.min(x);
        self.min_y = self.min_y.min(y);
        self.max_x = self.max_x.max(x);
        self.max_y = self.max_y.max(y);
    }

    /// Flip the y axis so the mathematical orientation renders upright.
    fn map(&self, x: f64, y: f64) -> (f64, f64) {
        (x, self.max_y + self.min_y - y)
    }

    fn span(&self) -> f64 {
        (self.max_x - self.min_x).max(self.max_y - self.min_y)
    }
}

fn fmt(v: f64) -> String {
    // normalize negative zero so output is stable
    let v = if v == 0.0 { 0.0 } else { v };
    format!("{v:.4}")
}

pub fn render_svg(scene: &Scene, options: &SvgOptions) -> Result<String> {
    if scene.is_empty() {
        return Err(GeomError::EmptyScene);
    }
    let mut frame = Frame {
        min_x: f64::MAX,
        min_y: f64::MAX,
        max_x: f64::MIN,
        max_y: f64::MIN,
    };
    let mut any_finite = false;
    for (_, element) in scene.iter() {
        match element {
            Element::Point(p) => {
                if let Ok((x, y)) = p.xy() {
                    frame.grow(x.to_f64(), y.to_f64());
                    any_finite = true;
                }
            }
            Element::Circle(c) => {
                let (x, y) = c.center().xy().expect("finite center");
                let r = c.radius2().to_f64().max(0.0).sqrt();
                frame.grow(x.to_f64() - r, y.to_f64() - r);
                frame.grow(x.to_f64() + r, y.to_f64() + r);
                any_finite = true;
            }
            Element::Triangle(t) => {
                for v in t.vertices() {
                    let (x, y) = v.xy().expect("finite vertex");
                    frame.grow(x.to_f64(), y.to_f64());
                }
                any_finite = true;
            }
            Element::Line(_) => {}
        }
    }
    if !any_finite {
        // lines only: fall back to a unit window around the origin
        frame = Frame {
            min_x: -1.0,
            min_y: -1.0,
            max_x: 1.0,
            max_y: 1.0,
        };
    }
    if frame.span() == 0.0 {
        frame.min_x -= 1.0;
        frame.min_y -= 1.0;
        frame.max_x += 1.0;
        frame.max_y += 1.0;
    }
    let margin = frame.span() * 0.05;
    frame.min_x -= margin;
    frame.min_y -= margin;
    frame.max_x += margin;
    frame.max_y += margin;

    let w = frame.max_x - frame.min_x;
    let h = frame.max_y - frame.min_y;
    let stroke = frame.span() * 0.004;
    let dot = stroke * 2.0;
    let font = frame.span() * 0.03;
    let height = options.width * h / w;

    let mut out = String::new();
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{}\" height=\"{}\" viewBox=\"{} {} {} {}\">\n",
        fmt(options.width),
        fmt(height),
        fmt(frame.min_x),
        fmt(frame.min_y),
        fmt(w),
        fmt(h)
    ));
    out.push_str(&format!(
        "  <rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"white\"/>\n",
        fmt(frame.min_x),
        fmt(frame.min_y),
        fmt(w),
        fmt(h)
    ));

    for (name, element) in scene.iter() {
        match element {
            Element::Point(p) => {
                let Ok((x, y)) = p.xy() else { continue };
                let (sx, sy) = frame.map(x.to_f64(), y.to_f64());
                out.push_str(&format!(
                    "  <circle cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"black\"><title>{}</title></circle>\n",
                    fmt(sx),
                    fmt(sy),
                    fmt(dot),
                    name
                ));
                if options.labels {
                    out.push_str(&format!(
                        "  <text x=\"{}\" y=\"{}\" font-size=\"{}\">{}</text>\n",
                        fmt(sx + dot * 1.5),
                        fmt(sy - dot * 1.5),
                        fmt(font),
                        name
                    ));
                }
            }
            Element::Line(l) => {
                if let Some(((x1, y1), (x2, y2))) = clip_line(l, &frame) {
                    let (sx1, sy1) = frame.map(x1, y1);
                    let (sx2, sy2) = frame.map(x2, y2);
                    out.push_str(&format!(
                        "  <line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"steelblue\" stroke-width=\"{}\"><title>{}</title></line>\n",
                        fmt(sx1), fmt(sy1), fmt(sx2), fmt(sy2), fmt(stroke), name
                    ));
                }
            }
            Element::Circle(c) => {
                let (x, y) = c.center().xy().expect("finite center");
                let (sx, sy) = frame.map(x.to_f64(), y.to_f64());
                let r = c.radius2().to_f64().max(0.0).sqrt();
                out.push_str(&format!(
                    "  <circle cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"none\" stroke=\"darkorange\" stroke-width=\"{}\"><title>{}</title></circle>\n",
                    fmt(sx), fmt(sy), fmt(r), fmt(stroke), name
                ));
            }
            Element::Triangle(t) => {
                let mut pts = Vec::new();
                for v in t.vertices() {
                    let (x, y) = v.xy().expect("finite vertex");
                    let (sx, sy) = frame.map(x.to_f64(), y.to_f64());
                    pts.push(format!("{},{}", fmt(sx), fmt(sy)));
                }
                out.push_str(&format!(
                    "  <polygon points=\"{}\" fill=\"none\" stroke=\"black\" stroke-width=\"{}\"><title>{}</title></polygon>\n",
                    pts.join(" "),
                    fmt(stroke),
                    name
                ));
            }
        }
    }
    out.push_str("</svg>\n");
    Ok(out)
}

/// Intersections of `u x + v y + t = 0` with the frame rectangle, as a
/// drawable segment; `None` when the line misses the viewport or is the
/// line at infinity.
fn clip_line(
    l: &homolog_core::projective::PLine,
    frame: &Frame,
) -> Option<((f64, f64), (f64, f64))> {
    if l.is_at_infinity() {
        return None;
    }
    let [u, v, t] = l.coeffs();
    let (u, v, t) = (u.to_f64(), v.to_f64(), t.to_f64());
    let eps = 1e-12 * frame.span().max(1.0);
    let mut hits: Vec<(f64, f64)> = Vec::new();
    let mut push = |x: f64, y: f64| {
        if x >= frame.min_x - eps
            && x <= frame.max_x + eps
            && y >= frame.min_y - eps
            && y <= frame.max_y + eps
            && !hits
                .iter()
                .any(|(hx, hy)| (hx - x).abs() < eps && (hy - y).abs() < eps)
        {
            hits.push((x, y));
        }
    };
    if v.abs() > 1e-300 {
        for x in [frame.min_x, frame.max_x] {
            push(x, -(u * x + t) / v);
        }
    }
    if u.abs() > 1e-300 {
        for y in [frame.min_y, frame.max_y] {
            push(-(v * y + t) / u, y);
        }
    }
    if hits.len() >= 2 {
        // the two extreme hits along the line direction
        hits.sort_by(|a, b| {
            (a.0 * v - a.1 * u)
                .partial_cmp(&(b.0 * v - b.1 * u))
                .expect("finite")
        });
        Some((hits[0], *hits.last().expect("nonempty")))
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use homolog_core::projective::{join, PPoint};
    use homolog_core::triangle::Triangle;

    fn demo_scene() -> Scene {
        let mut s = Scene::new();
        let t = Triangle::from_coords([(0, 3), (0, 0), (4, 0)]).unwrap();
        s.insert("T", Element::Triangle(t.clone())).unwrap();
        s.insert("incircle", Element::Circle(t.incircle().unwrap()))
            .unwrap();
        s.insert("I", Element::Point(PPoint::at(1, 1))).unwrap();
        s.insert(
            "axis",
            Element::Line(join(&PPoint::at(-1, 0), &PPoint::at(5, 2)).unwrap()),
        )
        .unwrap();
        s
    }

    #[test]
    fn renders_expected_structure() {
        let svg = render_svg(&demo_scene(), &SvgOptions::default()).unwrap();
        // exactly one stroked circle for the incircle (points are filled dots)
        assert_eq!(svg.matches("stroke=\"darkorange\"").count(), 1);
        assert_eq!(svg.matches("<polygon").count(), 1);
        assert_eq!(svg.matches("<line ").count(), 1);
        assert!(svg.contains("<title>incircle</title>"));
    }

    #[test]
    fn rendering_is_deterministic() {
        let a = render_svg(&demo_scene(), &SvgOptions::default()).unwrap();
        let b = render_svg(&demo_scene(), &SvgOptions::default()).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn empty_scene_is_an_error() {
        assert!(matches!(
            render_svg(&Scene::new(), &SvgOptions::default()),
            Err(GeomError::EmptyScene)
        ));
    }
}
