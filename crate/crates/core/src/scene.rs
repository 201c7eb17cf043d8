//! Line-oriented scene files: punctures, named lines and named graphs.
//!
//! ```text
//! # comment
//! punctures:
//!   0 0
//!   4 1/3
//! line loop:
//!   1 1
//!   -1 1
//!   -1 -1.5
//! line path based:
//!   ...
//! graph w wedge 2:
//!   walk ab based: +0 +1 +2 +3
//! graph g:
//!   vertices 3
//!   basepoint 0
//!   edge 0 1
//!   edge 1 2
//!   edge 2 0
//!   tree 0 1
//!   walk tri: +0 +1 +2
//! ```
//!
//! Coordinates are `p`, `p/q` or finite decimals, all read exactly. Walk
//! steps are signed edge indices: `+e` traverses edge `e` from its first
//! endpoint to its second, `-e` the other way.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::geometry::{Point, Rational};
use crate::graph::{BasedCycle, Graph, OrientedCycle, Traversal};
use crate::polyline::{validate_scene, BasedPolyline, ClosedPolyline, Polyline, PunctureSet};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SceneLine {
    Free(ClosedPolyline),
    Based(BasedPolyline),
}

impl SceneLine {
    pub fn is_based(&self) -> bool {
        matches!(self, SceneLine::Based(_))
    }

    pub fn as_polyline(&self) -> &dyn Polyline {
        match self {
            SceneLine::Free(l) => l,
            SceneLine::Based(l) => l,
        }
    }

    /// The line as a closed polyline, forgetting any basepoint.
    pub fn to_closed(&self) -> ClosedPolyline {
        match self {
            SceneLine::Free(l) => l.clone(),
            SceneLine::Based(l) => l.to_closed(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NamedLine {
    pub name: String,
    pub line: SceneLine,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NamedWalk {
    pub name: String,
    pub based: bool,
    pub steps: Vec<Traversal>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NamedGraph {
    pub name: String,
    /// Set when the graph was declared as a wedge of this many cycles.
    pub wedge: Option<usize>,
    pub graph: Graph,
    pub walks: Vec<NamedWalk>,
}

impl NamedGraph {
    pub fn walk(&self, name: &str) -> Result<&NamedWalk> {
        self.walks
            .iter()
            .find(|w| w.name == name)
            .ok_or_else(|| Error::UnknownName(format!("walk {name:?} in graph {:?}", self.name)))
    }

    pub fn cycle(&self, name: &str) -> Result<OrientedCycle> {
        OrientedCycle::new(&self.graph, self.walk(name)?.steps.clone())
    }

    pub fn based_cycle(&self, name: &str) -> Result<BasedCycle> {
        BasedCycle::new(&self.graph, self.walk(name)?.steps.clone())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Scene {
    pub punctures: Option<PunctureSet>,
    pub lines: Vec<NamedLine>,
    pub graphs: Vec<NamedGraph>,
}

impl Scene {
    pub fn punctures(&self) -> Result<&PunctureSet> {
        self.punctures
            .as_ref()
            .ok_or_else(|| Error::InvalidArgument("scene has no punctures".into()))
    }

    pub fn line(&self, name: &str) -> Result<&SceneLine> {
        self.lines
            .iter()
            .find(|l| l.name == name)
            .map(|l| &l.line)
            .ok_or_else(|| Error::UnknownName(format!("line {name:?}")))
    }

    pub fn graph(&self, name: &str) -> Result<&NamedGraph> {
        self.graphs
            .iter()
            .find(|g| g.name == name)
            .ok_or_else(|| Error::UnknownName(format!("graph {name:?}")))
    }

    /// Adds a line, checking the name is new and the line avoids punctures.
    pub fn add_line(&mut self, name: &str, line: SceneLine) -> Result<()> {
        if !valid_name(name) {
            return Err(Error::InvalidArgument(format!("invalid name {name:?}")));
        }
        if self.lines.iter().any(|l| l.name == name) {
            return Err(semantic(name, "duplicate line name"));
        }
        check_line(self.punctures.as_ref(), name, &line)?;
        self.lines.push(NamedLine {
            name: name.to_string(),
            line,
        });
        Ok(())
    }
}

fn semantic(name: &str, message: impl Into<String>) -> Error {
    Error::Semantic {
        name: name.to_string(),
        message: message.into(),
    }
}

fn check_line(punctures: Option<&PunctureSet>, name: &str, line: &SceneLine) -> Result<()> {
    let Some(ps) = punctures else {
        return Err(semantic(name, "lines need a punctures section"));
    };
    match validate_scene(ps, &[line.as_polyline()]) {
        Err(Error::PolylineThroughPuncture {
            segment, puncture, ..
        }) => Err(semantic(
            name,
            format!("segment {segment} passes through puncture {puncture}"),
        )),
        other => other,
    }
}

fn valid_name(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '-')
}

/// Parses `p`, `p/q` or a finite decimal such as `-1.25` exactly.
pub fn parse_rational(s: &str) -> std::result::Result<Rational, String> {
    let bad = || format!("invalid number {s:?}");
    if let Some((p, q)) = s.split_once('/') {
        let p = BigInt::from_str(p).map_err(|_| bad())?;
        let q = BigInt::from_str(q).map_err(|_| bad())?;
        if q.is_zero() {
            return Err(format!("zero denominator in {s:?}"));
        }
        return Ok(Rational::new(p, q));
    }
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s.strip_prefix('+').unwrap_or(s)),
    };
    let (int, frac) = body.split_once('.').unwrap_or((body, ""));
    if (int.is_empty() && frac.is_empty())
        || !int.chars().chain(frac.chars()).all(|c| c.is_ascii_digit())
    {
        return Err(bad());
    }
    let digits = format!("{int}{frac}");
    let num = BigInt::from_str(&digits).map_err(|_| bad())?;
    let den = num_traits::pow(BigInt::from(10), frac.len());
    let r = Rational::new(num, den);
    Ok(if neg { -r } else { r })
}

struct Token<'a> {
    text: &'a str,
    column: usize,
}

fn tokens(s: &str, offset: usize) -> Vec<Token<'_>> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in s.char_indices().chain(std::iter::once((s.len(), ' '))) {
        match (c.is_whitespace(), start) {
            (true, Some(b)) => {
                out.push(Token {
                    text: &s[b..i],
                    column: offset + b + 1,
                });
                start = None;
            }
            (false, None) => start = Some(i),
            _ => {}
        }
    }
    out
}

struct GraphDraft {
    name: String,
    wedge: Option<usize>,
    vertices: Option<usize>,
    basepoint: Option<usize>,
    edges: Vec<(usize, usize)>,
    tree: Option<Vec<usize>>,
    walks: Vec<NamedWalk>,
}

enum Section {
    Start,
    Punctures,
    Line(usize),
    Graph(usize),
}

struct LineDraft {
    name: String,
    based: bool,
    points: Vec<Point>,
}

fn parse_err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

fn parse_usize(t: &Token, line: usize) -> Result<usize> {
    t.text.parse().map_err(|_| {
        parse_err(
            line,
            t.column,
            format!("expected a non-negative integer, got {:?}", t.text),
        )
    })
}

fn parse_point(toks: &[Token], line: usize) -> Result<Point> {
    if toks.len() != 2 {
        let col = toks.first().map_or(1, |t| t.column);
        return Err(parse_err(line, col, "expected two coordinates"));
    }
    let coord = |t: &Token| parse_rational(t.text).map_err(|m| parse_err(line, t.column, m));
    Ok(Point::new(coord(&toks[0])?, coord(&toks[1])?))
}

fn parse_walk(toks: &[Token], line: usize) -> Result<Vec<Traversal>> {
    toks.iter()
        .map(|t| {
            let (forward, digits) = if let Some(d) = t.text.strip_prefix('+') {
                (true, d)
            } else if let Some(d) = t.text.strip_prefix('-') {
                (false, d)
            } else {
                return Err(parse_err(
                    line,
                    t.column,
                    format!("walk step {:?} needs a sign", t.text),
                ));
            };
            let edge = digits.parse().map_err(|_| {
                parse_err(line, t.column, format!("invalid walk step {:?}", t.text))
            })?;
            Ok(Traversal { edge, forward })
        })
        .collect()
}

/// Parses a scene, reporting syntax errors with line and column and
/// semantic errors with the offending name.
pub fn parse_scene(text: &str) -> Result<Scene> {
    let mut punctures: Option<Vec<Point>> = None;
    let mut lines: Vec<LineDraft> = Vec::new();
    let mut graphs: Vec<GraphDraft> = Vec::new();
    let mut section = Section::Start;

    for (ln0, raw) in text.lines().enumerate() {
        let ln = ln0 + 1;
        let content = raw.split('#').next().unwrap_or("");
        if content.trim().is_empty() {
            continue;
        }
        let (head, tail) = match content.split_once(':') {
            Some((h, t)) => (h, Some(t)),
            None => (content, None),
        };
        let head_toks = tokens(head, 0);
        if head_toks.is_empty() {
            return Err(parse_err(ln, head.len() + 1, "missing section keyword"));
        }
        let keyword = head_toks[0].text;
        let col = head_toks[0].column;
        match (keyword, tail) {
            ("punctures", Some(t)) => {
                if head_toks.len() != 1 || !t.trim().is_empty() {
                    return Err(parse_err(ln, col, "expected `punctures:`"));
                }
                if punctures.is_some() {
                    return Err(parse_err(ln, col, "second punctures section"));
                }
                punctures = Some(Vec::new());
                section = Section::Punctures;
            }
            ("line", Some(t)) => {
                let based = match head_toks.len() {
                    2 => false,
                    3 if head_toks[2].text == "based" => true,
                    _ => {
                        return Err(parse_err(
                            ln,
                            col,
                            "expected `line <name>:` or `line <name> based:`",
                        ))
                    }
                };
                if !t.trim().is_empty() {
                    return Err(parse_err(
                        ln,
                        head.len() + 2,
                        "vertices go on their own lines",
                    ));
                }
                let name = head_toks[1].text;
                if !valid_name(name) {
                    return Err(parse_err(
                        ln,
                        head_toks[1].column,
                        format!("invalid name {name:?}"),
                    ));
                }
                lines.push(LineDraft {
                    name: name.to_string(),
                    based,
                    points: Vec::new(),
                });
                section = Section::Line(lines.len() - 1);
            }
            ("graph", Some(t)) => {
                let wedge = match head_toks.len() {
                    2 => None,
                    4 if head_toks[2].text == "wedge" => Some(parse_usize(&head_toks[3], ln)?),
                    _ => {
                        return Err(parse_err(
                            ln,
                            col,
                            "expected `graph <name>:` or `graph <name> wedge <n>:`",
                        ))
                    }
                };
                if !t.trim().is_empty() {
                    return Err(parse_err(
                        ln,
                        head.len() + 2,
                        "graph contents go on their own lines",
                    ));
                }
                let name = head_toks[1].text;
                if !valid_name(name) {
                    return Err(parse_err(
                        ln,
                        head_toks[1].column,
                        format!("invalid name {name:?}"),
                    ));
                }
                graphs.push(GraphDraft {
                    name: name.to_string(),
                    wedge,
                    vertices: None,
                    basepoint: None,
                    edges: Vec::new(),
                    tree: None,
                    walks: Vec::new(),
                });
                section = Section::Graph(graphs.len() - 1);
            }
            ("walk", Some(t)) => {
                let Section::Graph(g) = section else {
                    return Err(parse_err(ln, col, "walk outside a graph section"));
                };
                let based = match head_toks.len() {
                    2 => false,
                    3 if head_toks[2].text == "based" => true,
                    _ => {
                        return Err(parse_err(
                            ln,
                            col,
                            "expected `walk <name> [based]: <steps>`",
                        ))
                    }
                };
                let name = head_toks[1].text;
                if !valid_name(name) {
                    return Err(parse_err(
                        ln,
                        head_toks[1].column,
                        format!("invalid name {name:?}"),
                    ));
                }
                let steps = parse_walk(&tokens(t, head.len() + 1), ln)?;
                graphs[g].walks.push(NamedWalk {
                    name: name.to_string(),
                    based,
                    steps,
                });
            }
            (_, Some(_)) => return Err(parse_err(ln, col, format!("unknown section {keyword:?}"))),
            (_, None) => {
                let toks = head_toks;
                match section {
                    Section::Start => return Err(parse_err(ln, col, "content before any section")),
                    Section::Punctures => punctures
                        .as_mut()
                        .expect("in section")
                        .push(parse_point(&toks, ln)?),
                    Section::Line(i) => lines[i].points.push(parse_point(&toks, ln)?),
                    Section::Graph(g) => {
                        let d = &mut graphs[g];
                        let args = &toks[1..];
                        let arity = |n: usize| {
                            if args.len() == n {
                                Ok(())
                            } else {
                                Err(parse_err(
                                    ln,
                                    col,
                                    format!("`{keyword}` takes {n} argument(s)"),
                                ))
                            }
                        };
                        if d.wedge.is_some() {
                            return Err(parse_err(ln, col, "a wedge graph only takes walks"));
                        }
                        match keyword {
                            "vertices" => {
                                arity(1)?;
                                d.vertices = Some(parse_usize(&args[0], ln)?);
                            }
                            "basepoint" => {
                                arity(1)?;
                                d.basepoint = Some(parse_usize(&args[0], ln)?);
                            }
                            "edge" => {
                                arity(2)?;
                                d.edges
                                    .push((parse_usize(&args[0], ln)?, parse_usize(&args[1], ln)?));
                            }
                            "tree" => {
                                let t = args
                                    .iter()
                                    .map(|a| parse_usize(a, ln))
                                    .collect::<Result<Vec<_>>>()?;
                                d.tree = Some(t);
                            }
                            _ => {
                                return Err(parse_err(
                                    ln,
                                    col,
                                    format!("unknown graph entry {keyword:?}"),
                                ))
                            }
                        }
                    }
                }
            }
        }
    }

    let punctures = match punctures {
        Some(p) if p.is_empty() => return Err(semantic("punctures", "section is empty")),
        Some(p) => Some(PunctureSet::new(p).map_err(|e| semantic("punctures", e.to_string()))?),
        None => None,
    };
    let mut scene = Scene {
        punctures,
        lines: Vec::new(),
        graphs: Vec::new(),
    };
    for d in lines {
        let line = if d.based {
            BasedPolyline::new(d.points).map(SceneLine::Based)
        } else {
            ClosedPolyline::new(d.points).map(SceneLine::Free)
        }
        .map_err(|_| semantic(&d.name, "line has no vertices"))?;
        scene.add_line(&d.name, line)?;
    }
    for d in graphs {
        if scene.graphs.iter().any(|g| g.name == d.name) {
            return Err(semantic(&d.name, "duplicate graph name"));
        }
        let graph = match d.wedge {
            Some(n) => Graph::wedge_of_cycles(n),
            None => {
                let v = d
                    .vertices
                    .ok_or_else(|| semantic(&d.name, "missing `vertices`"))?;
                Graph::new(v, d.edges, d.basepoint.unwrap_or(0), d.tree)
            }
        }
        .map_err(|e| semantic(&d.name, e.to_string()))?;
        let mut walks: Vec<NamedWalk> = Vec::new();
        for w in d.walks {
            if walks.iter().any(|x| x.name == w.name) {
                return Err(semantic(
                    &w.name,
                    format!("duplicate walk in graph {:?}", d.name),
                ));
            }
            let checked = if w.based {
                BasedCycle::new(&graph, w.steps.clone()).map(|_| ())
            } else {
                OrientedCycle::new(&graph, w.steps.clone()).map(|_| ())
            };
            checked.map_err(|e| semantic(&w.name, e.to_string()))?;
            walks.push(w);
        }
        scene.graphs.push(NamedGraph {
            name: d.name,
            wedge: d.wedge,
            graph,
            walks,
        });
    }
    Ok(scene)
}

impl FromStr for Scene {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_scene(s)
    }
}

fn write_point(f: &mut fmt::Formatter<'_>, p: &Point) -> fmt::Result {
    writeln!(f, "  {} {}", p.x, p.y)
}

fn write_walk(f: &mut fmt::Formatter<'_>, w: &NamedWalk) -> fmt::Result {
    write!(
        f,
        "  walk {}{}:",
        w.name,
        if w.based { " based" } else { "" }
    )?;
    for t in &w.steps {
        write!(f, " {}{}", if t.forward { '+' } else { '-' }, t.edge)?;
    }
    writeln!(f)
}

/// Canonical text form; parsing it gives back an equal scene.
impl fmt::Display for Scene {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(ps) = &self.punctures {
            writeln!(f, "punctures:")?;
            for p in ps.points() {
                write_point(f, p)?;
            }
        }
        for l in &self.lines {
            writeln!(
                f,
                "line {}{}:",
                l.name,
                if l.line.is_based() { " based" } else { "" }
            )?;
            for p in l.line.as_polyline().vertices() {
                write_point(f, p)?;
            }
        }
        for g in &self.graphs {
            match g.wedge {
                Some(n) => writeln!(f, "graph {} wedge {n}:", g.name)?,
                None => {
                    writeln!(f, "graph {}:", g.name)?;
                    writeln!(f, "  vertices {}", g.graph.vertex_count())?;
                    writeln!(f, "  basepoint {}", g.graph.basepoint())?;
                    for (u, v) in g.graph.edges() {
                        writeln!(f, "  edge {u} {v}")?;
                    }
                    let tree: Vec<String> =
                        g.graph.tree_edges().iter().map(|e| e.to_string()).collect();
                    writeln!(f, "  tree {}", tree.join(" "))?;
                }
            }
            for w in &g.walks {
                write_walk(f, w)?;
            }
        }
        Ok(())
    }
}
