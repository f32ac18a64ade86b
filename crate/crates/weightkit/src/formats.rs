//! Line-oriented text formats for weighted sets, maps and graphs, TSV cost
//! matrices, and JSON series-parallel networks.
//!
//! Blank lines and lines starting with `#` are ignored in every text format.

use std::fmt::Write as _;

use serde_json::Value;
use weightkit_core::impedance::{Element, GaussQ, NetworkTree, ProjValue};
use weightkit_core::wcat::{CostMatrix, WGraph};
use weightkit_core::weight::parse_rational;
use weightkit_core::wset::{Elem, WMap, WSet};
use weightkit_core::{Rational, Weight};

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Line { line: usize, message: String },
    #[error("network: {0}")]
    Network(String),
    #[error("{0}")]
    Invalid(String),
}

fn line_error(line: usize, message: impl Into<String>) -> FormatError {
    FormatError::Line { line, message: message.into() }
}

/// Numbered content lines, without comments and blanks.
fn records(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_weight(line: usize, text: &str) -> Result<Weight, FormatError> {
    text.parse().map_err(|_| line_error(line, format!("bad weight literal `{text}`")))
}

/// `<id> <weight>` per line.
pub fn parse_wset(text: &str) -> Result<WSet, FormatError> {
    let mut pairs = Vec::new();
    for (line, rec) in records(text) {
        let fields: Vec<&str> = rec.split_whitespace().collect();
        let [id, w] = fields[..] else {
            return Err(line_error(line, "expected `<id> <weight>`"));
        };
        pairs.push((Elem::atom(id), parse_weight(line, w)?));
    }
    WSet::new(pairs).map_err(|e| FormatError::Invalid(e.to_string()))
}

pub fn write_wset(x: &WSet) -> String {
    let mut out = String::new();
    for (e, w) in x.iter() {
        writeln!(out, "{e} {w}").expect("string write");
    }
    out
}

/// `<src-id> -> <dst-id>` per line, one line for every source element.
pub fn parse_map(text: &str, source: &WSet, target: &WSet) -> Result<WMap, FormatError> {
    let mut assignment: Vec<(Elem, Elem)> = Vec::new();
    for (line, rec) in records(text) {
        let Some((src, dst)) = rec.split_once("->") else {
            return Err(line_error(line, "expected `<src-id> -> <dst-id>`"));
        };
        let (src, dst) = (src.trim(), dst.trim());
        if src.is_empty() || dst.is_empty() || src.contains(char::is_whitespace) || dst.contains(char::is_whitespace) {
            return Err(line_error(line, "expected `<src-id> -> <dst-id>`"));
        }
        let src = Elem::atom(src);
        if assignment.iter().any(|(s, _)| *s == src) {
            return Err(line_error(line, format!("`{src}` is assigned twice")));
        }
        assignment.push((src, Elem::atom(dst)));
    }
    WMap::new(source.clone(), target.clone(), assignment).map_err(|e| FormatError::Invalid(e.to_string()))
}

pub fn write_map(f: &WMap) -> String {
    let mut out = String::new();
    for (i, (e, _)) in f.source().iter().enumerate() {
        writeln!(out, "{e} -> {}", f.target().elem(f.images()[i])).expect("string write");
    }
    out
}

/// `<src> <dst> <weight>` per line. Objects are numbered in order of first
/// appearance; a line with a single name declares an isolated object.
pub fn parse_graph(text: &str) -> Result<WGraph, FormatError> {
    let mut g = WGraph::new();
    for (line, rec) in records(text) {
        let fields: Vec<&str> = rec.split_whitespace().collect();
        match fields[..] {
            [name] => {
                g.object(name);
            }
            [src, dst, w] => {
                let w = parse_weight(line, w)?;
                g.connect(src, dst, w);
            }
            _ => return Err(line_error(line, "expected `<src> <dst> <weight>`")),
        }
    }
    Ok(g)
}

/// Header row of object names, then one row per object. A matrix without
/// objects prints nothing.
pub fn write_cost_matrix(d: &CostMatrix) -> String {
    let mut out = String::new();
    if d.is_empty() {
        return out;
    }
    for name in d.objects() {
        write!(out, "\t{name}").expect("string write");
    }
    out.push('\n');
    for (name, row) in d.objects().iter().zip(d.rows()) {
        out.push_str(name);
        for w in row {
            write!(out, "\t{w}").expect("string write");
        }
        out.push('\n');
    }
    out
}

fn rational_field(v: &Value) -> Result<Rational, FormatError> {
    let text = match v {
        Value::String(s) => s.clone(),
        Value::Number(n) => n.to_string(),
        _ => return Err(FormatError::Network(format!("expected a number or string, found {v}"))),
    };
    parse_rational(&text).ok_or_else(|| FormatError::Network(format!("bad rational `{text}`")))
}

fn network_from_value(v: &Value) -> Result<NetworkTree, FormatError> {
    let Value::Object(map) = v else {
        return Err(FormatError::Network(format!("expected an object, found {v}")));
    };
    let [(key, inner)] = map.iter().collect::<Vec<_>>()[..] else {
        return Err(FormatError::Network("each node needs exactly one key".into()));
    };
    let children = |inner: &Value| -> Result<Vec<NetworkTree>, FormatError> {
        let Value::Array(items) = inner else {
            return Err(FormatError::Network(format!("`{key}` needs a list")));
        };
        items.iter().map(network_from_value).collect()
    };
    Ok(match key.as_str() {
        "series" => NetworkTree::Series(children(inner)?),
        "parallel" => NetworkTree::Parallel(children(inner)?),
        "R" => NetworkTree::Leaf(Element::R, rational_field(inner)?),
        "L" => NetworkTree::Leaf(Element::L, rational_field(inner)?),
        "C" => NetworkTree::Leaf(Element::C, rational_field(inner)?),
        other => return Err(FormatError::Network(format!("unknown node `{other}`"))),
    })
}

/// `{"series": [..]}`, `{"parallel": [..]}` or a leaf `{"R": "3/2"}`, with
/// `L` and `C` leaves likewise. Values are strings or JSON numbers.
pub fn parse_network(text: &str) -> Result<NetworkTree, FormatError> {
    let v: Value = serde_json::from_str(text).map_err(|e| FormatError::Network(e.to_string()))?;
    network_from_value(&v)
}

fn approx(z: &GaussQ) -> String {
    let (re, im) = z.to_f64();
    let sign = if im < 0.0 { '-' } else { '+' };
    format!("{re:.6} {sign} {:.6} i", im.abs())
}

/// The exact impedance, then a six-decimal rendering prefixed by `~`.
pub fn write_impedance(z: &ProjValue) -> String {
    match z {
        ProjValue::Infinity => "inf\n~ inf\n".into(),
        ProjValue::Finite(g) => format!("{g}\n~ {}\n", approx(g)),
    }
}
