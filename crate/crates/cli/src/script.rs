//! The construction-script language: a small line-oriented DSL for building
//! scenes and asserting incidence facts.
//!
//! ```text
//! # comments run to end of line
//! backend exact            # or: float
//! tol 1e-9                 # float comparison tolerance
//! triangle T = (0,3) (0,0) (4,0)
//! point I = incenter(T)
//! line e = join(circumcenter(T), orthocenter(T))
//! circle c = circumcircle(T)
//! assert eq(I, (1,1))
//! assert on_line(centroid(T), e)
//! ```
//!
//! Numbers are integers, rationals (`8/11`) or decimals; under the exact
//! backend decimals are read as exact decimal fractions.

use std::fmt;

use homolog_core::derived::{derive, DerivedKind};
use homolog_core::error::GeomError;
use homolog_core::metric::{circle_through, radical_axis, second_intersection, Circle};
use homolog_core::projective::{harmonic_conjugate, join, meet, PLine, PPoint};
use homolog_core::scalar::Scalar;
use homolog_core::scene::{Assertion, Element, Scene};
use homolog_core::transform::{polar, pole, Inversion};
use homolog_core::triangle::{
    isogonal_conjugate, isotomic_conjugate, named_center, trilinear_polar, trilinear_pole,
    CenterId, Triangle, Vertex,
};

#[derive(Debug, Clone)]
pub struct ScriptError {
    pub line: usize,
    pub col: usize,
    pub message: String,
}

impl fmt::Display for ScriptError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "line {}, column {}: {}",
            self.line, self.col, self.message
        )
    }
}

impl std::error::Error for ScriptError {}

type SResult<T> = Result<T, ScriptError>;

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Ident(String),
    Number(String),
    LParen,
    RParen,
    Comma,
    Equals,
}

#[derive(Debug, Clone)]
struct Spanned {
    token: Token,
    line: usize,
    col: usize,
}

fn tokenize(text: &str) -> SResult<Vec<Spanned>> {
    let mut out = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = lineno + 1;
        let mut chars = raw.char_indices().peekable();
        while let Some(&(i, c)) = chars.peek() {
            let col = i + 1;
            match c {
                '#' => break,
                c if c.is_whitespace() => {
                    chars.next();
                }
                '(' => {
                    chars.next();
                    out.push(Spanned {
                        token: Token::LParen,
                        line,
                        col,
                    });
                }
                ')' => {
                    chars.next();
                    out.push(Spanned {
                        token: Token::RParen,
                        line,
                        col,
                    });
                }
                ',' => {
                    chars.next();
                    out.push(Spanned {
                        token: Token::Comma,
                        line,
                        col,
                    });
                }
                '=' => {
                    chars.next();
                    out.push(Spanned {
                        token: Token::Equals,
                        line,
                        col,
                    });
                }
                '-' | '0'..='9' => {
                    let mut s = String::new();
                    s.push(c);
                    chars.next();
                    let mut seen_slash = false;
                    while let Some(&(_, d)) = chars.peek() {
                        if d.is_ascii_digit() || d == '.' || (d == '/' && !seen_slash) {
                            if d == '/' {
                                seen_slash = true;
                            }
                            s.push(d);
                            chars.next();
                        } else if (d == 'e' || d == 'E')
                            && s.chars()
                                .last()
                                .map(|l| l.is_ascii_digit())
                                .unwrap_or(false)
                        {
                            s.push(d);
                            chars.next();
                            if let Some(&(_, sg)) = chars.peek() {
                                if sg == '-' || sg == '+' {
                                    s.push(sg);
                                    chars.next();
                                }
                            }
                        } else {
                            break;
                        }
                    }
                    out.push(Spanned {
                        token: Token::Number(s),
                        line,
                        col,
                    });
                }
                c if c.is_alphabetic() || c == '_' => {
                    let mut s = String::new();
                    while let Some(&(_, d)) = chars.peek() {
                        if d.is_alphanumeric() || d == '_' || d == '\'' {
                            s.push(d);
                            chars.next();
                        } else {
                            break;
                        }
                    }
                    out.push(Spanned {
                        token: Token::Ident(s),
                        line,
                        col,
                    });
                }
                other => {
                    return Err(ScriptError {
                        line,
                        col,
                        message: format!("unexpected character {other:?}"),
                    })
                }
            }
        }
    }
    Ok(out)
}

#[derive(Debug, Clone)]
enum Expr {
    Name(String),
    Number(String),
    PointLit(Box<Expr>, Box<Expr>),
    Call(String, Vec<Expr>),
}

#[derive(Debug, Clone)]
enum Stmt {
    Backend(String),
    Tol(String),
    Define {
        kind: String,
        name: String,
        exprs: Vec<Expr>,
    },
    Assert {
        pred: String,
        args: Vec<Expr>,
    },
}

struct Parser {
    tokens: Vec<Spanned>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Spanned> {
        self.tokens.get(self.pos)
    }

    fn eof_error(&self, expected: &str) -> ScriptError {
        let (line, col) = self
            .tokens
            .last()
            .map(|s| (s.line, s.col + 1))
            .unwrap_or((1, 1));
        ScriptError {
            line,
            col,
            message: format!("unexpected end of input, expected {expected}"),
        }
    }

    fn next(&mut self, expected: &str) -> SResult<Spanned> {
        let t = self
            .peek()
            .cloned()
            .ok_or_else(|| self.eof_error(expected))?;
        self.pos += 1;
        Ok(t)
    }

    fn expect(&mut self, token: Token, expected: &str) -> SResult<Spanned> {
        let t = self.next(expected)?;
        if t.token != token {
            return Err(ScriptError {
                line: t.line,
                col: t.col,
                message: format!("expected {expected}, found {:?}", t.token),
            });
        }
        Ok(t)
    }

    fn ident(&mut self, expected: &str) -> SResult<(String, usize, usize)> {
        let t = self.next(expected)?;
        match t.token {
            Token::Ident(s) => Ok((s, t.line, t.col)),
            other => Err(ScriptError {
                line: t.line,
                col: t.col,
                message: format!("expected {expected}, found {other:?}"),
            }),
        }
    }

    fn parse_expr(&mut self) -> SResult<Expr> {
        let t = self.next("an expression")?;
        match t.token {
            Token::LParen => {
                // point literal (x, y)
                let x = self.parse_expr()?;
                self.expect(Token::Comma, "',' in point literal")?;
                let y = self.parse_expr()?;
                self.expect(Token::RParen, "')' closing point literal")?;
                Ok(Expr::PointLit(Box::new(x), Box::new(y)))
            }
            Token::Number(s) => Ok(Expr::Number(s)),
            Token::Ident(name) => {
                if matches!(self.peek().map(|s| &s.token), Some(Token::LParen)) {
                    self.pos += 1;
                    let mut args = Vec::new();
                    if !matches!(self.peek().map(|s| &s.token), Some(Token::RParen)) {
                        loop {
                            args.push(self.parse_expr()?);
                            match self.peek().map(|s| s.token.clone()) {
                                Some(Token::Comma) => {
                                    self.pos += 1;
                                }
                                Some(Token::RParen) => break,
                                _ => {
                                    return Err(self.eof_error("',' or ')' in argument list"));
                                }
                            }
                        }
                    }
                    self.expect(Token::RParen, "')' closing argument list")?;
                    Ok(Expr::Call(name, args))
                } else {
                    Ok(Expr::Name(name))
                }
            }
            other => Err(ScriptError {
                line: t.line,
                col: t.col,
                message: format!("expected an expression, found {other:?}"),
            }),
        }
    }

    fn parse_program(&mut self) -> SResult<Vec<(Stmt, usize)>> {
        let mut stmts = Vec::new();
        while let Some(head) = self.peek().cloned() {
            let line = head.line;
            let (kw, kw_line, kw_col) = self.ident("a statement keyword")?;
            match kw.as_str() {
                "backend" => {
                    let (mode, _, _) = self.ident("'exact' or 'float'")?;
                    stmts.push((Stmt::Backend(mode), line));
                }
                "tol" => {
                    let t = self.next("a tolerance value")?;
                    match t.token {
                        Token::Number(s) => stmts.push((Stmt::Tol(s), line)),
                        other => {
                            return Err(ScriptError {
                                line: t.line,
                                col: t.col,
                                message: format!("expected a tolerance value, found {other:?}"),
                            })
                        }
                    }
                }
                "triangle" => {
                    let (name, _, _) = self.ident("a triangle name")?;
                    self.expect(Token::Equals, "'='")?;
                    // either three point literals or one triangle-valued
                    // expression (a literal always starts with '(')
                    let first = self.parse_expr()?;
                    let exprs = if matches!(self.peek().map(|s| &s.token), Some(Token::LParen)) {
                        let b = self.parse_expr()?;
                        let c = self.parse_expr()?;
                        vec![first, b, c]
                    } else {
                        vec![first]
                    };
                    stmts.push((Stmt::Define { kind: "triangle".into(), name, exprs }, line));
                }
                "point" | "line" | "circle" => {
                    let (name, _, _) = self.ident("an element name")?;
                    self.expect(Token::Equals, "'='")?;
                    let e = self.parse_expr()?;
                    stmts.push((Stmt::Define { kind: kw, name, exprs: vec![e] }, line));
                }
                "assert" => {
                    let (pred, pl, pc) = self.ident("a predicate name")?;
                    self.expect(Token::LParen, "'(' after the predicate")?;
                    let mut args = Vec::new();
                    if !matches!(self.peek().map(|s| &s.token), Some(Token::RParen)) {
                        loop {
                            args.push(self.parse_expr()?);
                            match self.peek().map(|s| s.token.clone()) {
                                Some(Token::Comma) => {
                                    self.pos += 1;
                                }
                                Some(Token::RParen) => break,
                                _ => {
                                    return Err(ScriptError {
                                        line: pl,
                                        col: pc,
                                        message: "unterminated predicate argument list".into(),
                                    })
                                }
                            }
                        }
                    }
                    self.expect(Token::RParen, "')' closing the predicate")?;
                    stmts.push((Stmt::Assert { pred, args }, line));
                }
                other => {
                    return Err(ScriptError {
                        line: kw_line,
                        col: kw_col,
                        message: format!(
                            "unknown statement {other:?} (expected triangle/point/line/circle/assert/backend/tol)"
                        ),
                    })
                }
            }
        }
        Ok(stmts)
    }
}

#[derive(Debug, Clone)]
enum Value {
    Point(PPoint),
    Line(PLine),
    Circle(Circle),
    Triangle(Triangle),
    Num(Scalar),
}

impl Value {
    fn kind(&self) -> &'static str {
        match self {
            Value::Point(_) => "point",
            Value::Line(_) => "line",
            Value::Circle(_) => "circle",
            Value::Triangle(_) => "triangle",
            Value::Num(_) => "number",
        }
    }
}

/// One evaluated assertion, with its source line and verdict.
#[derive(Debug, Clone)]
pub struct AssertResult {
    pub line: usize,
    pub text: String,
    pub pass: bool,
}

/// A fully executed script: the resolved scene plus assertion verdicts.
#[derive(Debug, Clone)]
pub struct ScriptRun {
    pub scene: Scene,
    pub asserts: Vec<AssertResult>,
}

impl ScriptRun {
    pub fn all_pass(&self) -> bool {
        self.asserts.iter().all(|a| a.pass)
    }
}

struct Interp {
    scene: Scene,
    exact: bool,
    tol: f64,
    anon: usize,
}

fn err_at(line: usize, message: impl Into<String>) -> ScriptError {
    ScriptError {
        line,
        col: 1,
        message: message.into(),
    }
}

fn geom_err(line: usize, what: &str, e: GeomError) -> ScriptError {
    err_at(line, format!("{what}: {e}"))
}

impl Interp {
    fn parse_number(&self, s: &str, line: usize) -> SResult<Scalar> {
        let bad = |m: &str| err_at(line, format!("invalid number {s:?}: {m}"));
        if !self.exact {
            return s
                .parse::<f64>()
                .map(|v| Scalar::float_with_tol(v, self.tol))
                .map_err(|_| bad("not a float"));
        }
        if let Some((n, d)) = s.split_once('/') {
            let n: i64 = n.parse().map_err(|_| bad("bad numerator"))?;
            let d: i64 = d.parse().map_err(|_| bad("bad denominator"))?;
            if d == 0 {
                return Err(bad("zero denominator"));
            }
            return Ok(Scalar::ratio(n, d));
        }
        if let Some((ip, fp)) = s.split_once('.') {
            if fp.contains('e') || fp.contains('E') {
                return Err(bad("scientific notation requires the float backend"));
            }
            let sign = if ip.starts_with('-') { -1 } else { 1 };
            let whole: i64 = if ip == "-" {
                0
            } else {
                ip.parse().map_err(|_| bad("bad integer part"))?
            };
            let frac: i64 = if fp.is_empty() {
                0
            } else {
                fp.parse().map_err(|_| bad("bad fraction part"))?
            };
            let den = 10i64
                .checked_pow(fp.len() as u32)
                .ok_or_else(|| bad("too many decimals"))?;
            return Ok(Scalar::from_int(whole) + Scalar::ratio(sign * frac, den));
        }
        let n: i64 = s.parse().map_err(|_| bad("not an integer"))?;
        Ok(Scalar::from_int(n))
    }

    fn lookup(&self, name: &str, line: usize) -> SResult<Value> {
        match self.scene.get(name) {
            Ok(Element::Point(p)) => Ok(Value::Point(p.clone())),
            Ok(Element::Line(l)) => Ok(Value::Line(l.clone())),
            Ok(Element::Circle(c)) => Ok(Value::Circle(c.clone())),
            Ok(Element::Triangle(t)) => Ok(Value::Triangle(t.clone())),
            Err(_) => Err(err_at(line, format!("unknown name {name:?}"))),
        }
    }

    fn eval(&mut self, expr: &Expr, line: usize) -> SResult<Value> {
        match expr {
            Expr::Number(s) => Ok(Value::Num(self.parse_number(s, line)?)),
            Expr::Name(name) => self.lookup(name, line),
            Expr::PointLit(x, y) => {
                let x = self.num(x, line)?;
                let y = self.num(y, line)?;
                Ok(Value::Point(PPoint::from_cartesian(x, y)))
            }
            Expr::Call(name, args) => self.call(name, args, line),
        }
    }

    fn num(&mut self, e: &Expr, line: usize) -> SResult<Scalar> {
        match self.eval(e, line)? {
            Value::Num(s) => Ok(s),
            other => Err(err_at(
                line,
                format!("expected a number, found a {}", other.kind()),
            )),
        }
    }

    fn point(&mut self, e: &Expr, line: usize) -> SResult<PPoint> {
        match self.eval(e, line)? {
            Value::Point(p) => Ok(p),
            other => Err(err_at(
                line,
                format!("expected a point, found a {}", other.kind()),
            )),
        }
    }

    fn linev(&mut self, e: &Expr, line: usize) -> SResult<PLine> {
        match self.eval(e, line)? {
            Value::Line(l) => Ok(l),
            other => Err(err_at(
                line,
                format!("expected a line, found a {}", other.kind()),
            )),
        }
    }

    fn circlev(&mut self, e: &Expr, line: usize) -> SResult<Circle> {
        match self.eval(e, line)? {
            Value::Circle(c) => Ok(c),
            other => Err(err_at(
                line,
                format!("expected a circle, found a {}", other.kind()),
            )),
        }
    }

    fn trianglev(&mut self, e: &Expr, line: usize) -> SResult<Triangle> {
        match self.eval(e, line)? {
            Value::Triangle(t) => Ok(t),
            other => Err(err_at(
                line,
                format!("expected a triangle, found a {}", other.kind()),
            )),
        }
    }

    fn arity(&self, name: &str, args: &[Expr], n: usize, line: usize) -> SResult<()> {
        if args.len() != n {
            return Err(err_at(
                line,
                format!("{name} takes {n} argument(s), found {}", args.len()),
            ));
        }
        Ok(())
    }

    fn call(&mut self, name: &str, args: &[Expr], line: usize) -> SResult<Value> {
        // named centers form a family: center(T)
        if let Some(center) = CenterId::parse(name) {
            self.arity(name, args, 1, line)?;
            let t = self.trianglev(&args[0], line)?;
            let p = named_center(&t, &center).map_err(|e| geom_err(line, name, e))?;
            return Ok(Value::Point(p));
        }
        match name {
            "kariya" => {
                self.arity(name, args, 2, line)?;
                let t = self.trianglev(&args[0], line)?;
                let k = self.num(&args[1], line)?;
                let p =
                    named_center(&t, &CenterId::Kariya(k)).map_err(|e| geom_err(line, name, e))?;
                Ok(Value::Point(p))
            }
            "meet" => {
                self.arity(name, args, 2, line)?;
                let l = self.linev(&args[0], line)?;
                let m = self.linev(&args[1], line)?;
                Ok(Value::Point(
                    meet(&l, &m).map_err(|e| geom_err(line, name, e))?,
                ))
            }
            "join" => {
                self.arity(name, args, 2, line)?;
                let p = self.point(&args[0], line)?;
                let q = self.point(&args[1], line)?;
                Ok(Value::Line(
                    join(&p, &q).map_err(|e| geom_err(line, name, e))?,
                ))
            }
            "midpoint" => {
                self.arity(name, args, 2, line)?;
                let p = self.point(&args[0], line)?;
                let q = self.point(&args[1], line)?;
                Ok(Value::Point(
                    homolog_core::construct::midpoint(&p, &q)
                        .map_err(|e| geom_err(line, name, e))?,
                ))
            }
            "harmonic" => {
                self.arity(name, args, 3, line)?;
                let c = self.point(&args[0], line)?;
                let a = self.point(&args[1], line)?;
                let b = self.point(&args[2], line)?;
                Ok(Value::Point(
                    harmonic_conjugate(&c, &a, &b).map_err(|e| geom_err(line, name, e))?,
                ))
            }
            "isogonal" | "isotomic" => {
                self.arity(name, args, 2, line)?;
                let t = self.trianglev(&args[0], line)?;
                let p = self.point(&args[1], line)?;
                let out = if name == "isogonal" {
                    isogonal_conjugate(&t, &p)
                } else {
                    isotomic_conjugate(&t, &p)
                };
                Ok(Value::Point(out.map_err(|e| geom_err(line, name, e))?))
            }
            "trilinear_polar" => {
                self.arity(name, args, 2, line)?;
                let t = self.trianglev(&args[0], line)?;
                let p = self.point(&args[1], line)?;
                Ok(Value::Line(
                    trilinear_polar(&t, &p).map_err(|e| geom_err(line, name, e))?,
                ))
            }
            "trilinear_pole" => {
                self.arity(name, args, 2, line)?;
                let t = self.trianglev(&args[0], line)?;
                let l = self.linev(&args[1], line)?;
                Ok(Value::Point(
                    trilinear_pole(&t, &l).map_err(|e| geom_err(line, name, e))?,
                ))
            }
            "polar" => {
                self.arity(name, args, 2, line)?;
                let c = self.circlev(&args[0], line)?;
                let p = self.point(&args[1], line)?;
                Ok(Value::Line(
                    polar(&c, &p).map_err(|e| geom_err(line, name, e))?,
                ))
            }
            "pole" => {
                self.arity(name, args, 2, line)?;
                let c = self.circlev(&args[0], line)?;
                let l = self.linev(&args[1], line)?;
                Ok(Value::Point(
                    pole(&c, &l).map_err(|e| geom_err(line, name, e))?,
                ))
            }
            "invert" => {
                self.arity(name, args, 3, line)?;
                let pole_pt = self.point(&args[0], line)?;
                let power = self.num(&args[1], line)?;
                let p = self.point(&args[2], line)?;
                let inv = Inversion::new(pole_pt, power).map_err(|e| geom_err(line, name, e))?;
                Ok(Value::Point(
                    inv.invert_point(&p).map_err(|e| geom_err(line, name, e))?,
                ))
            }
            "second_intersection" => {
                self.arity(name, args, 3, line)?;
                let c = self.circlev(&args[0], line)?;
                let p = self.point(&args[1], line)?;
                let l = self.linev(&args[2], line)?;
                Ok(Value::Point(
                    second_intersection(&c, &p, &l).map_err(|e| geom_err(line, name, e))?,
                ))
            }
            "project" | "reflect" => {
                self.arity(name, args, 2, line)?;
                let p = self.point(&args[0], line)?;
                let l = self.linev(&args[1], line)?;
                let out = if name == "project" {
                    homolog_core::construct::project_onto_line(&p, &l)
                } else {
                    homolog_core::construct::reflect_point_over_line(&p, &l)
                };
                Ok(Value::Point(out.map_err(|e| geom_err(line, name, e))?))
            }
            "parallel" | "perpendicular" => {
                self.arity(name, args, 2, line)?;
                let l = self.linev(&args[0], line)?;
                let p = self.point(&args[1], line)?;
                let out = if name == "parallel" {
                    homolog_core::construct::parallel_through(&l, &p)
                } else {
                    homolog_core::construct::perpendicular_through(&l, &p)
                };
                Ok(Value::Line(out.map_err(|e| geom_err(line, name, e))?))
            }
            "line_at_infinity" => {
                self.arity(name, args, 0, line)?;
                Ok(Value::Line(PLine::at_infinity()))
            }
            "vertex_a" | "vertex_b" | "vertex_c" => {
                self.arity(name, args, 1, line)?;
                let t = self.trianglev(&args[0], line)?;
                let v = match name {
                    "vertex_a" => Vertex::A,
                    "vertex_b" => Vertex::B,
                    _ => Vertex::C,
                };
                Ok(Value::Point(t.vertex(v).clone()))
            }
            "side_a" | "side_b" | "side_c" => {
                self.arity(name, args, 1, line)?;
                let t = self.trianglev(&args[0], line)?;
                let v = match name {
                    "side_a" => Vertex::A,
                    "side_b" => Vertex::B,
                    _ => Vertex::C,
                };
                Ok(Value::Line(t.side_line(v)))
            }
            "circumcircle" => {
                self.arity(name, args, 1, line)?;
                let t = self.trianglev(&args[0], line)?;
                Ok(Value::Circle(t.circumcircle()))
            }
            "incircle" => {
                self.arity(name, args, 1, line)?;
                let t = self.trianglev(&args[0], line)?;
                Ok(Value::Circle(
                    t.incircle().map_err(|e| geom_err(line, name, e))?,
                ))
            }
            "excircle_a" | "excircle_b" | "excircle_c" => {
                self.arity(name, args, 1, line)?;
                let t = self.trianglev(&args[0], line)?;
                let v = match name {
                    "excircle_a" => Vertex::A,
                    "excircle_b" => Vertex::B,
                    _ => Vertex::C,
                };
                Ok(Value::Circle(
                    t.excircle(v).map_err(|e| geom_err(line, name, e))?,
                ))
            }
            "circle_through" => {
                self.arity(name, args, 3, line)?;
                let p = self.point(&args[0], line)?;
                let q = self.point(&args[1], line)?;
                let r = self.point(&args[2], line)?;
                Ok(Value::Circle(
                    circle_through(&p, &q, &r).map_err(|e| geom_err(line, name, e))?,
                ))
            }
            "circle" => {
                self.arity(name, args, 2, line)?;
                let center = self.point(&args[0], line)?;
                let r2 = self.num(&args[1], line)?;
                Ok(Value::Circle(
                    Circle::from_center_radius2(&center, r2)
                        .map_err(|e| geom_err(line, name, e))?,
                ))
            }
            "radical_axis" => {
                self.arity(name, args, 2, line)?;
                let c1 = self.circlev(&args[0], line)?;
                let c2 = self.circlev(&args[1], line)?;
                Ok(Value::Line(
                    radical_axis(&c1, &c2).map_err(|e| geom_err(line, name, e))?,
                ))
            }
            "derive" => {
                if args.len() < 2 {
                    return Err(err_at(line, "derive takes a triangle and a kind"));
                }
                let t = self.trianglev(&args[0], line)?;
                let Expr::Name(kind_name) = &args[1] else {
                    return Err(err_at(line, "derive's second argument is a kind name"));
                };
                let kind = if args.len() == 2 {
                    DerivedKind::parse_simple(kind_name)
                } else {
                    self.arity(name, args, 3, line)?;
                    let p = self.point(&args[2], line)?;
                    DerivedKind::parse_with_point(kind_name, p)
                };
                let Some(kind) = kind else {
                    return Err(err_at(line, format!("unknown derived kind {kind_name:?}")));
                };
                Ok(Value::Triangle(
                    derive(&t, &kind).map_err(|e| geom_err(line, name, e))?,
                ))
            }
            other => Err(err_at(line, format!("unknown constructor {other:?}"))),
        }
    }

    /// Resolve an argument to a scene element name, inserting anonymous
    /// elements for computed values, so assertions reference the scene.
    fn materialize(&mut self, e: &Expr, line: usize) -> SResult<String> {
        if let Expr::Name(name) = e {
            self.lookup(name, line)?;
            return Ok(name.clone());
        }
        let value = self.eval(e, line)?;
        self.anon += 1;
        let name = format!("_expr{}", self.anon);
        let element = match value {
            Value::Point(p) => Element::Point(p),
            Value::Line(l) => Element::Line(l),
            Value::Circle(c) => Element::Circle(c),
            Value::Triangle(t) => Element::Triangle(t),
            Value::Num(_) => {
                return Err(err_at(line, "a bare number cannot appear in a predicate"))
            }
        };
        self.scene
            .insert(name.clone(), element)
            .map_err(|e| geom_err(line, "internal name", e))?;
        Ok(name)
    }
}

/// Parse and execute a script: build the scene and evaluate every `assert`.
pub fn run_script(text: &str) -> SResult<ScriptRun> {
    let tokens = tokenize(text)?;
    let stmts = Parser { tokens, pos: 0 }.parse_program()?;
    let mut interp = Interp {
        scene: Scene::new(),
        exact: true,
        tol: 1e-9,
        anon: 0,
    };
    let mut asserts = Vec::new();

    for (stmt, line) in stmts {
        match stmt {
            Stmt::Backend(mode) => match mode.as_str() {
                "exact" => interp.exact = true,
                "float" => interp.exact = false,
                other => {
                    return Err(err_at(line, format!("unknown backend {other:?}")));
                }
            },
            Stmt::Tol(s) => {
                interp.tol = s
                    .parse::<f64>()
                    .map_err(|_| err_at(line, format!("invalid tolerance {s:?}")))?;
            }
            Stmt::Define { kind, name, exprs } => {
                let element = match kind.as_str() {
                    "triangle" if exprs.len() == 1 => {
                        Element::Triangle(interp.trianglev(&exprs[0], line)?)
                    }
                    "triangle" => {
                        let a = interp.point(&exprs[0], line)?;
                        let b = interp.point(&exprs[1], line)?;
                        let c = interp.point(&exprs[2], line)?;
                        Element::Triangle(
                            Triangle::new(a, b, c).map_err(|e| geom_err(line, "triangle", e))?,
                        )
                    }
                    "point" => Element::Point(interp.point(&exprs[0], line)?),
                    "line" => Element::Line(interp.linev(&exprs[0], line)?),
                    "circle" => Element::Circle(interp.circlev(&exprs[0], line)?),
                    _ => unreachable!("parser only produces known kinds"),
                };
                interp
                    .scene
                    .insert(name.clone(), element)
                    .map_err(|e| geom_err(line, &name, e))?;
            }
            Stmt::Assert { pred, args } => {
                let mut names = Vec::new();
                for a in &args {
                    names.push(interp.materialize(a, line)?);
                }
                let assertion = match pred.as_str() {
                    "collinear" => {
                        if names.len() < 3 {
                            return Err(err_at(line, "collinear needs at least three points"));
                        }
                        Assertion::Collinear(names.clone())
                    }
                    "concurrent" => {
                        if names.len() < 3 {
                            return Err(err_at(line, "concurrent needs at least three lines"));
                        }
                        Assertion::Concurrent(names.clone())
                    }
                    "on_line" => {
                        if names.len() != 2 {
                            return Err(err_at(line, "on_line takes a point and a line"));
                        }
                        Assertion::OnLine(names[0].clone(), names[1].clone())
                    }
                    "on_circle" => {
                        if names.len() != 2 {
                            return Err(err_at(line, "on_circle takes a point and a circle"));
                        }
                        Assertion::OnCircle(names[0].clone(), names[1].clone())
                    }
                    "eq" => {
                        if names.len() != 2 {
                            return Err(err_at(line, "eq takes two elements"));
                        }
                        Assertion::Eq(names[0].clone(), names[1].clone())
                    }
                    "homological" => {
                        if names.len() != 2 {
                            return Err(err_at(line, "homological takes two triangles"));
                        }
                        Assertion::Homological(names[0].clone(), names[1].clone())
                    }
                    "tri_homological" => {
                        if names.len() != 2 {
                            return Err(err_at(line, "tri_homological takes two triangles"));
                        }
                        Assertion::TriHomological(names[0].clone(), names[1].clone())
                    }
                    other => {
                        return Err(err_at(line, format!("unknown predicate {other:?}")));
                    }
                };
                let pass = interp
                    .scene
                    .check(&assertion)
                    .map_err(|e| geom_err(line, &pred, e))?;
                interp.scene.assert_that(assertion);
                asserts.push(AssertResult {
                    line,
                    text: format!("{pred}({})", names.join(", ")),
                    pass,
                });
            }
        }
    }
    Ok(ScriptRun {
        scene: interp.scene,
        asserts,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn example_scripts_run() {
        let run = run_script(
            "triangle T = (0,3) (0,0) (4,0)\npoint I = incenter(T)\nassert eq(I, (1,1))\n",
        )
        .unwrap();
        assert!(run.all_pass());

        let run = run_script(
            "triangle T = (5,12) (0,0) (14,0)\n\
             assert collinear(circumcenter(T), centroid(T), orthocenter(T))\n",
        )
        .unwrap();
        assert!(run.all_pass());
    }

    #[test]
    fn rationals_and_backend_directives() {
        let run = run_script(
            "triangle T = (0,3) (0,0) (4,0)\n\
             point G = (4/3, 1)\n\
             assert eq(G, centroid(T))\n\
             assert eq((0.5, 0), midpoint((0,0), (1,0)))\n",
        )
        .unwrap();
        assert!(run.all_pass());

        let run = run_script(
            "backend float\ntol 1e-7\n\
             triangle T = (0,3) (0,0) (4.0000000001,0)\n\
             point I = incenter(T)\nassert eq(I, (1,1))\n",
        )
        .unwrap();
        assert!(run.all_pass());
    }

    #[test]
    fn failing_assert_reports_false() {
        let run =
            run_script("triangle T = (0,3) (0,0) (4,0)\nassert eq(incenter(T), (2,2))\n").unwrap();
        assert!(!run.all_pass());
        assert_eq!(run.asserts.len(), 1);
        assert!(!run.asserts[0].pass);
    }

    #[test]
    fn syntax_error_carries_position() {
        let err = run_script("point X = meet(join((0,0),(1,1)), \n").unwrap_err();
        assert!(err.line >= 1);
        let msg = err.to_string();
        assert!(msg.contains("line"), "{msg}");

        let err = run_script("frobnicate Q = (1,2)\n").unwrap_err();
        assert!(err.message.contains("unknown statement"));

        let err = run_script("point X = nonesuch((0,0))\n").unwrap_err();
        assert!(err.message.contains("unknown constructor"));

        // type mismatch point-vs-line
        let err = run_script("triangle T = (0,3) (0,0) (4,0)\nline l = incenter(T)\n").unwrap_err();
        assert!(err.message.contains("expected a line"));
    }

    #[test]
    fn derive_and_homology_predicates() {
        let run = run_script(
            "triangle T = (5,12) (0,0) (14,0)\n\
             triangle M = derive(T, medial)\n\
             assert homological(T, M)\n\
             point N = nagel(T)\n\
             triangle C = derive(T, cotangent)\n\
             assert homological(T, C)\n\
             assert on_line(N, join(vertex_a(T), vertex_a(C)))\n",
        )
        .unwrap();
        assert!(run.all_pass());
    }
}

/// Serialize a scene back into script text: literal definitions in element
/// order followed by its assertions. Exact coordinates print as rationals,
/// so `run_script(write_script(scene))` reproduces the scene.
pub fn write_script(scene: &Scene) -> Result<String, GeomError> {
    use std::fmt::Write as _;
    let mut out = String::new();
    let fmt_scalar = |s: &Scalar| s.to_string();
    for (name, element) in scene.iter() {
        match element {
            Element::Point(p) => {
                let (x, y) = p.xy()?;
                let _ = writeln!(
                    out,
                    "point {name} = ({}, {})",
                    fmt_scalar(&x),
                    fmt_scalar(&y)
                );
            }
            Element::Line(l) => {
                let [p0, p1] = homolog_core::construct::points_on_line(l)?;
                let (x0, y0) = p0.xy()?;
                let (x1, y1) = p1.xy()?;
                let _ = writeln!(
                    out,
                    "line {name} = join(({}, {}), ({}, {}))",
                    fmt_scalar(&x0),
                    fmt_scalar(&y0),
                    fmt_scalar(&x1),
                    fmt_scalar(&y1)
                );
            }
            Element::Circle(c) => {
                let center = c.center();
                let (x, y) = center.xy()?;
                let _ = writeln!(
                    out,
                    "circle {name} = circle(({}, {}), {})",
                    fmt_scalar(&x),
                    fmt_scalar(&y),
                    fmt_scalar(&c.radius2())
                );
            }
            Element::Triangle(t) => {
                let mut parts = Vec::new();
                for v in t.vertices() {
                    let (x, y) = v.xy()?;
                    parts.push(format!("({}, {})", fmt_scalar(&x), fmt_scalar(&y)));
                }
                let _ = writeln!(out, "triangle {name} = {}", parts.join(" "));
            }
        }
    }
    for assertion in scene.assertions() {
        let line = match assertion {
            Assertion::Collinear(names) => format!("assert collinear({})", names.join(", ")),
            Assertion::Concurrent(names) => format!("assert concurrent({})", names.join(", ")),
            Assertion::OnLine(p, l) => format!("assert on_line({p}, {l})"),
            Assertion::OnCircle(p, c) => format!("assert on_circle({p}, {c})"),
            Assertion::Eq(x, y) => format!("assert eq({x}, {y})"),
            Assertion::Homological(x, y) => format!("assert homological({x}, {y})"),
            Assertion::TriHomological(x, y) => format!("assert tri_homological({x}, {y})"),
        };
        out.push_str(&line);
        out.push('\n');
    }
    Ok(out)
}

#[cfg(test)]
mod write_tests {
    use super::*;

    #[test]
    fn scene_script_round_trip() {
        let run = run_script(
            "triangle T = (0,3) (0,0) (4,0)\n\
             point I = incenter(T)\n\
             line e = join(circumcenter(T), orthocenter(T))\n\
             circle c = incircle(T)\n\
             assert on_line(centroid(T), e)\n\
             assert eq(I, (1,1))\n",
        )
        .unwrap();
        assert!(run.all_pass());

        let text = write_script(&run.scene).unwrap();
        let replayed = run_script(&text).unwrap();
        assert!(
            replayed.all_pass(),
            "replayed scene must satisfy its assertions"
        );
        assert_eq!(replayed.scene.len(), run.scene.len());
        // spot: the incircle survives the round trip exactly
        let c1 = run.scene.circle("c").unwrap();
        let c2 = replayed.scene.circle("c").unwrap();
        assert_eq!(c1, c2);
    }
}
