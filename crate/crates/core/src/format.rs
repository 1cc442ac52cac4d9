//! Line-oriented text documents.
//!
//! The first significant line names the kind and version (`matroid v1`,
//! `graph v1`, `system v1`, `alpha v1`, `report v1`). Blank lines and lines
//! starting with `#` are ignored.
//!
//! ```text
//! matroid v1          graph v1            system v1        alpha v1
//! ground x1 x2 x3     vertices 3          ground x1 x2 x3  1 1 2
//! basis x1 x2         edge x1 1 2         set A1 x1 x2
//! basis x1 x3         edge x2 2 3         set A2 x1 x3
//! ```
//!
//! `report v1` is followed by the `key=value` lines of a white report.

use std::collections::HashMap;
use std::fmt;

use crate::element::{ElementLabel, ElementSet, GroundSet};
use crate::exchange::{ReportEntry, TeClass, WhiteReport};
use crate::families::{Edge, MultiGraph, SetSystem};
use crate::functors::ExpansionVector;
use crate::matroid::Family;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Document {
    /// A ground set and a basis list, not yet checked against the axioms.
    Matroid(Family),
    Graph(MultiGraph),
    System(SetSystem),
    Alpha(ExpansionVector),
    Report(WhiteReport),
}

impl Document {
    pub fn kind(&self) -> &'static str {
        match self {
            Document::Matroid(_) => "matroid",
            Document::Graph(_) => "graph",
            Document::System(_) => "system",
            Document::Alpha(_) => "alpha",
            Document::Report(_) => "report",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormatError {
    /// 1-based; 0 when the problem is the end of input.
    pub line: usize,
    pub message: String,
}

impl fmt::Display for FormatError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.line == 0 {
            write!(f, "at end of input: {}", self.message)
        } else {
            write!(f, "line {}: {}", self.line, self.message)
        }
    }
}

impl std::error::Error for FormatError {}

fn fail<T>(line: usize, message: impl Into<String>) -> Result<T, FormatError> {
    Err(FormatError {
        line,
        message: message.into(),
    })
}

fn labels(line: usize, tokens: &[&str]) -> Result<Vec<ElementLabel>, FormatError> {
    tokens
        .iter()
        .map(|t| t.parse::<ElementLabel>().or_else(|e| fail(line, e.to_string())))
        .collect()
}

fn subset(line: usize, ground: &GroundSet, tokens: &[&str]) -> Result<ElementSet, FormatError> {
    let mut set = ElementSet::EMPTY;
    for l in labels(line, tokens)? {
        let Some(i) = ground.index_of(&l) else {
            return fail(line, format!("unknown element {l}"));
        };
        if set.contains(i) {
            return fail(line, format!("element {l} listed twice"));
        }
        set = set.insert(i);
    }
    Ok(set)
}

fn ground_line(line: usize, tokens: &[&str]) -> Result<GroundSet, FormatError> {
    GroundSet::new(labels(line, tokens)?).or_else(|e| fail(line, e.to_string()))
}

pub fn parse(text: &str) -> Result<Document, FormatError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let Some((n, header)) = lines.next() else {
        return fail(0, "empty document");
    };
    let body: Vec<(usize, &str)> = lines.collect();
    match header.split_whitespace().collect::<Vec<_>>()[..] {
        [kind, "v1"] => match kind {
            "matroid" => parse_matroid(&body),
            "graph" => parse_graph(&body),
            "system" => parse_system(&body),
            "alpha" => parse_alpha(&body),
            "report" => parse_report(&body),
            other => fail(n, format!("unknown document kind `{other}`")),
        },
        [_, version] => fail(n, format!("unsupported version `{version}`")),
        _ => fail(n, "expected `<kind> v1`"),
    }
}

fn parse_matroid(body: &[(usize, &str)]) -> Result<Document, FormatError> {
    let mut ground: Option<GroundSet> = None;
    let mut bases = Vec::new();
    for &(n, line) in body {
        let tokens: Vec<&str> = line.split_whitespace().collect();
        match tokens[0] {
            "ground" if ground.is_some() => return fail(n, "duplicate ground line"),
            "ground" => ground = Some(ground_line(n, &tokens[1..])?),
            "basis" => {
                let Some(g) = &ground else {
                    return fail(n, "basis before ground line");
                };
                bases.push(subset(n, g, &tokens[1..])?);
            }
            other => return fail(n, format!("unknown directive `{other}`")),
        }
    }
    let Some(ground) = ground else {
        return fail(0, "missing ground line");
    };
    let family = Family::new(ground, bases).or_else(|e| fail(0, e.to_string()))?;
    Ok(Document::Matroid(family))
}

fn parse_graph(body: &[(usize, &str)]) -> Result<Document, FormatError> {
    let mut vertices: Option<usize> = None;
    let mut edges = Vec::new();
    let number = |n: usize, t: &str| -> Result<usize, FormatError> {
        t.parse::<usize>()
            .or_else(|_| fail(n, format!("expected a number, found `{t}`")))
    };
    for &(n, line) in body {
        let tokens: Vec<&str> = line.split_whitespace().collect();
        match tokens[..] {
            ["vertices", _] if vertices.is_some() => return fail(n, "duplicate vertices line"),
            ["vertices", v] => vertices = Some(number(n, v)?),
            ["edge", label, u, v] => {
                let Some(count) = vertices else {
                    return fail(n, "edge before vertices line");
                };
                let label = labels(n, &[label])?[0];
                let (u, v) = (number(n, u)?, number(n, v)?);
                for w in [u, v] {
                    if w == 0 || w > count {
                        return fail(n, format!("vertex {w} out of range 1..={count}"));
                    }
                }
                if edges.iter().any(|e: &Edge| e.label == label) {
                    return fail(n, format!("duplicate edge {label}"));
                }
                edges.push(Edge::new(label, u, v));
            }
            ["vertices", ..] | ["edge", ..] => return fail(n, "wrong number of fields"),
            _ => return fail(n, format!("unknown directive `{}`", tokens[0])),
        }
    }
    let Some(count) = vertices else {
        return fail(0, "missing vertices line");
    };
    let g = MultiGraph::new(count, edges).or_else(|e| fail(0, e.to_string()))?;
    Ok(Document::Graph(g))
}

fn parse_system(body: &[(usize, &str)]) -> Result<Document, FormatError> {
    let mut ground: Option<GroundSet> = None;
    let mut members = Vec::new();
    for &(n, line) in body {
        let tokens: Vec<&str> = line.split_whitespace().collect();
        match tokens[0] {
            "ground" if ground.is_some() => return fail(n, "duplicate ground line"),
            "ground" => ground = Some(ground_line(n, &tokens[1..])?),
            "set" => {
                let Some(g) = &ground else {
                    return fail(n, "set before ground line");
                };
                let Some(name) = tokens.get(1) else {
                    return fail(n, "set without a name");
                };
                members.push((name.to_string(), subset(n, g, &tokens[2..])?));
            }
            other => return fail(n, format!("unknown directive `{other}`")),
        }
    }
    let Some(ground) = ground else {
        return fail(0, "missing ground line");
    };
    let s = SetSystem::new(ground, members).or_else(|e| fail(0, e.to_string()))?;
    Ok(Document::System(s))
}

fn parse_alpha(body: &[(usize, &str)]) -> Result<Document, FormatError> {
    let mut values = Vec::new();
    for &(n, line) in body {
        for t in line.split_whitespace() {
            match t.parse::<u32>() {
                Ok(k) if k > 0 => values.push(k),
                _ => return fail(n, format!("expected a positive multiplicity, found `{t}`")),
            }
        }
    }
    let alpha = ExpansionVector::new(values).or_else(|e| fail(0, e.to_string()))?;
    Ok(Document::Alpha(alpha))
}

fn parse_sequence(n: usize, text: &str) -> Result<Vec<Vec<ElementLabel>>, FormatError> {
    text.split(',')
        .map(|b| labels(n, &b.split_whitespace().collect::<Vec<_>>()))
        .collect()
}

fn parse_report(body: &[(usize, &str)]) -> Result<Document, FormatError> {
    let mut kv: HashMap<&str, (usize, &str)> = HashMap::new();
    let mut order = Vec::new();
    for &(n, line) in body {
        let Some((k, v)) = line.split_once('=') else {
            return fail(n, "expected key=value");
        };
        if kv.insert(k, (n, v)).is_some() {
            return fail(n, format!("duplicate key `{k}`"));
        }
        order.push((n, k));
    }
    let get = |k: &str| {
        kv.get(k).copied().ok_or(FormatError {
            line: 0,
            message: format!("missing key `{k}`"),
        })
    };
    let num = |k: &str| -> Result<u64, FormatError> {
        let (n, v) = get(k)?;
        v.parse().or_else(|_| fail(n, format!("`{k}` is not a number")))
    };
    let (gn, gv) = get("contracted_ground")?;
    let contracted_ground = labels(gn, &gv.split_whitespace().collect::<Vec<_>>())?;
    if num("contracted_elements")? != contracted_ground.len() as u64 {
        return fail(gn, "contracted_elements disagrees with contracted_ground");
    }

    let mut entries = Vec::new();
    for &(n, k) in &order {
        let Some(rest) = k.strip_prefix("te") else { continue };
        let Some((class, len)) = rest.split_once(".m") else {
            continue;
        };
        if len.contains('.') {
            continue;
        }
        let class = class
            .parse::<u8>()
            .ok()
            .and_then(TeClass::from_number)
            .map_or_else(|| fail(n, format!("bad class in `{k}`")), Ok)?;
        let length: usize = len.parse().or_else(|_| fail(n, format!("bad length in `{k}`")))?;
        let verdict = kv[k].1;
        if !["holds_at_m", "fails_at_m", "budget_exceeded"].contains(&verdict) {
            return fail(n, format!("unknown verdict `{verdict}`"));
        }
        let witness = match kv.get(format!("{k}.witness").as_str()) {
            Some(&(wn, w)) => {
                let Some((a, b)) = w.split_once(';') else {
                    return fail(wn, "witness needs two sequences separated by `;`");
                };
                Some((parse_sequence(wn, a)?, parse_sequence(wn, b)?))
            }
            None => None,
        };
        entries.push(ReportEntry {
            class,
            length,
            verdict: verdict.to_string(),
            witness,
            explored: num(&format!("{k}.explored"))?,
        });
    }
    Ok(Document::Report(WhiteReport {
        original_elements: num("original_elements")? as usize,
        original_bases: num("original_bases")? as usize,
        contracted_ground,
        contracted_bases: num("contracted_bases")? as usize,
        entries,
        explored: num("explored")?,
        nontrivial_classes: num("nontrivial_classes")?,
    }))
}

fn line_of(head: &str, ground: &GroundSet, set: ElementSet) -> String {
    if set.is_empty() {
        head.to_string()
    } else {
        format!("{head} {}", ground.format_set(set))
    }
}

/// Canonical text of a family with ground `x1..xn` order and sorted bases.
pub fn serialize_family(family: &Family) -> String {
    let mut out = String::from("matroid v1\n");
    out += &line_of("ground", family.ground(), family.ground().full());
    out.push('\n');
    for &b in family.members() {
        out += &line_of("basis", family.ground(), b);
        out.push('\n');
    }
    out
}

pub fn serialize(doc: &Document) -> String {
    match doc {
        Document::Matroid(f) => serialize_family(f),
        Document::Graph(g) => {
            let mut out = format!("graph v1\nvertices {}\n", g.vertex_count());
            for e in g.edges() {
                out += &format!("edge {} {} {}\n", e.label, e.u, e.v);
            }
            out
        }
        Document::System(s) => {
            let mut out = String::from("system v1\n");
            out += &line_of("ground", s.ground(), s.ground().full());
            out.push('\n');
            for (name, set) in s.members() {
                out += &line_of(&format!("set {name}"), s.ground(), *set);
                out.push('\n');
            }
            out
        }
        Document::Alpha(a) => {
            let parts: Vec<String> = a.as_slice().iter().map(u32::to_string).collect();
            format!("alpha v1\n{}\n", parts.join(" "))
        }
        Document::Report(r) => format!("report v1\n{}", r.to_kv()),
    }
}
