//! Named collections of geometric elements with incidence assertions — the
//! carrier for the construction language and for duality transforms.

use std::collections::HashMap;

use crate::error::{GeomError, Result};
use crate::metric::Circle;
use crate::projective::{is_collinear, is_concurrent, PLine, PPoint};
use crate::triangle::Triangle;

#[derive(Debug, Clone)]
pub enum Element {
    Point(PPoint),
    Line(PLine),
    Circle(Circle),
    Triangle(Triangle),
}

impl Element {
    pub fn kind(&self) -> &'static str {
        match self {
            Element::Point(_) => "point",
            Element::Line(_) => "line",
            Element::Circle(_) => "circle",
            Element::Triangle(_) => "triangle",
        }
    }
}

/// Incidence assertions over named elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Assertion {
    Collinear(Vec<String>),
    Concurrent(Vec<String>),
    OnLine(String, String),
    OnCircle(String, String),
    Eq(String, String),
    Homological(String, String),
    TriHomological(String, String),
}

/// Ordered, uniquely named elements plus assertions. Insertion order is the
/// rendering and serialization order.
#[derive(Debug, Clone, Default)]
pub struct Scene {
    order: Vec<String>,
    elements: HashMap<String, Element>,
    assertions: Vec<Assertion>,
}

impl Scene {
    pub fn new() -> Scene {
        Scene::default()
    }

    pub fn insert(&mut self, name: impl Into<String>, element: Element) -> Result<()> {
        let name = name.into();
        if self.elements.contains_key(&name) {
            return Err(GeomError::DuplicateName(name));
        }
        self.order.push(name.clone());
        self.elements.insert(name, element);
        Ok(())
    }

    pub fn get(&self, name: &str) -> Result<&Element> {
        self.elements
            .get(name)
            .ok_or_else(|| GeomError::UnknownElement(name.to_string()))
    }

    pub fn point(&self, name: &str) -> Result<&PPoint> {
        match self.get(name)? {
            Element::Point(p) => Ok(p),
            other => Err(GeomError::UnsupportedElement(format!(
                "{name} is a {}, expected a point",
                other.kind()
            ))),
        }
    }

    pub fn line(&self, name: &str) -> Result<&PLine> {
        match self.get(name)? {
            Element::Line(l) => Ok(l),
            other => Err(GeomError::UnsupportedElement(format!(
                "{name} is a {}, expected a line",
                other.kind()
            ))),
        }
    }

    pub fn circle(&self, name: &str) -> Result<&Circle> {
        match self.get(name)? {
            Element::Circle(c) => Ok(c),
            other => Err(GeomError::UnsupportedElement(format!(
                "{name} is a {}, expected a circle",
                other.kind()
            ))),
        }
    }

    pub fn triangle(&self, name: &str) -> Result<&Triangle> {
        match self.get(name)? {
            Element::Triangle(t) => Ok(t),
            other => Err(GeomError::UnsupportedElement(format!(
                "{name} is a {}, expected a triangle",
                other.kind()
            ))),
        }
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.order.iter().map(String::as_str)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &Element)> {
        self.order.iter().map(|n| (n.as_str(), &self.elements[n]))
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    pub fn assertions(&self) -> &[Assertion] {
        &self.assertions
    }

    pub fn assert_that(&mut self, assertion: Assertion) {
        self.assertions.push(assertion);
    }

    /// Evaluate a single assertion against the current elements.
    pub fn check(&self, assertion: &Assertion) -> Result<bool> {
        Ok(match assertion {
            Assertion::Collinear(names) => {
                let pts: Vec<&PPoint> =
                    names.iter().map(|n| self.point(n)).collect::<Result<_>>()?;
                if pts.len() < 3 {
                    true
                } else {
                    pts.windows(3).all(|w| is_collinear(w[0], w[1], w[2]))
                        && is_collinear(pts[0], pts[1], *pts.last().unwrap())
                }
            }
            Assertion::Concurrent(names) => {
                let lines: Vec<&PLine> =
                    names.iter().map(|n| self.line(n)).collect::<Result<_>>()?;
                if lines.len() < 3 {
                    true
                } else {
                    lines.windows(3).all(|w| is_concurrent(w[0], w[1], w[2]))
                        && is_concurrent(lines[0], lines[1], *lines.last().unwrap())
                }
            }
            Assertion::OnLine(p, l) => self.line(l)?.contains(self.point(p)?),
            Assertion::OnCircle(p, c) => self.circle(c)?.contains(self.point(p)?),
            Assertion::Eq(x, y) => match (self.get(x)?, self.get(y)?) {
                (Element::Point(a), Element::Point(b)) => a == b,
                (Element::Line(a), Element::Line(b)) => a == b,
                (Element::Circle(a), Element::Circle(b)) => a == b,
                (Element::Triangle(a), Element::Triangle(b)) => a == b,
                _ => false,
            },
            Assertion::Homological(x, y) => {
                crate::homology::analyze(self.triangle(x)?, self.triangle(y)?).homological
            }
            Assertion::TriHomological(x, y) => {
                crate::homology::multi_homology(self.triangle(x)?, self.triangle(y)?).direct == 3
            }
        })
    }

    /// Evaluate every assertion; `Ok(())` when all hold.
    pub fn verify(&self) -> Result<Vec<(Assertion, bool)>> {
        self.assertions
            .iter()
            .map(|a| Ok((a.clone(), self.check(a)?)))
            .collect()
    }

    pub fn all_assertions_hold(&self) -> Result<bool> {
        Ok(self.verify()?.iter().all(|(_, ok)| *ok))
    }
}
