//! Edge-list and JSON graph formats.
//!
//! Edge list: one `<u> <v> <w>` per line, `w` an `int` or `int/int`; `#`
//! starts a comment; blank lines are ignored; a `vertices: a b c` line
//! declares vertices (including isolated ones). JSON:
//! `{"vertices": [...], "edges": [[u, v, "num/den"], ...]}`.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{GraphError, WeightedGraph};
use crate::rational::{format_rational, parse_rational, RationalParseError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    EdgeList,
    Json,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: malformed line: {reason}")]
    Malformed { line: usize, reason: String },
    #[error("line {line}: bad weight: {source}")]
    BadWeight {
        line: usize,
        source: RationalParseError,
    },
    #[error("line {line}: {source}")]
    Graph { line: usize, source: GraphError },
    #[error("input is not valid UTF-8")]
    Utf8,
    #[error("json: {0}")]
    Json(String),
}

impl ParseError {
    /// One-based line of the offending input, when known.
    pub fn line(&self) -> Option<usize> {
        match self {
            ParseError::Malformed { line, .. }
            | ParseError::BadWeight { line, .. }
            | ParseError::Graph { line, .. } => Some(*line),
            _ => None,
        }
    }
}

pub fn parse_graph(bytes: &[u8], format: Format) -> Result<WeightedGraph, ParseError> {
    let text = std::str::from_utf8(bytes).map_err(|_| ParseError::Utf8)?;
    match format {
        Format::EdgeList => parse_edge_list(text),
        Format::Json => parse_json(text),
    }
}

pub fn parse_edge_list(text: &str) -> Result<WeightedGraph, ParseError> {
    let mut g = WeightedGraph::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        if let Some(rest) = content.strip_prefix("vertices:") {
            for v in rest.split_whitespace() {
                g.insert_vertex(v)
                    .map_err(|source| ParseError::Graph { line, source })?;
            }
            continue;
        }
        let fields: Vec<&str> = content.split_whitespace().collect();
        if fields.len() != 3 {
            return Err(ParseError::Malformed {
                line,
                reason: format!("expected `<u> <v> <w>`, found {} fields", fields.len()),
            });
        }
        let weight =
            parse_rational(fields[2]).map_err(|source| ParseError::BadWeight { line, source })?;
        g.add_edge(fields[0], fields[1], weight)
            .map_err(|source| ParseError::Graph { line, source })?;
    }
    Ok(g)
}

#[derive(Serialize, Deserialize)]
struct JsonGraph {
    #[serde(default)]
    vertices: Vec<JsonLabel>,
    #[serde(default)]
    edges: Vec<(JsonLabel, JsonLabel, JsonLabel)>,
}

/// Vertex ids and weights may be written as JSON strings or integers.
#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum JsonLabel {
    Text(String),
    Int(i64),
}

impl JsonLabel {
    fn text(&self) -> String {
        match self {
            JsonLabel::Text(s) => s.clone(),
            JsonLabel::Int(i) => i.to_string(),
        }
    }
}

pub fn parse_json(text: &str) -> Result<WeightedGraph, ParseError> {
    let doc: JsonGraph = serde_json::from_str(text).map_err(|e| ParseError::Json(e.to_string()))?;
    let mut g = WeightedGraph::new();
    for v in &doc.vertices {
        g.insert_vertex(&v.text())
            .map_err(|source| ParseError::Graph { line: 0, source })
            .map_err(json_context)?;
    }
    for (k, (u, v, w)) in doc.edges.iter().enumerate() {
        let weight = parse_rational(&w.text())
            .map_err(|e| ParseError::Json(format!("edge {k}: bad weight: {e}")))?;
        g.add_edge(&u.text(), &v.text(), weight)
            .map_err(|e| ParseError::Json(format!("edge {k}: {e}")))?;
    }
    Ok(g)
}

fn json_context(e: ParseError) -> ParseError {
    match e {
        ParseError::Graph { source, .. } => ParseError::Json(source.to_string()),
        other => other,
    }
}

/// Serializes to the edge-list format with a full `vertices:` header so that
/// parsing restores the vertex order exactly.
pub fn to_edge_list(g: &WeightedGraph) -> String {
    let mut out = String::new();
    out.push_str("vertices:");
    for label in g.labels() {
        out.push(' ');
        out.push_str(label);
    }
    out.push('\n');
    for (i, j, w) in g.edges() {
        out.push_str(&format!(
            "{} {} {}\n",
            g.label(i),
            g.label(j),
            format_rational(w)
        ));
    }
    out
}

pub fn to_json(g: &WeightedGraph) -> String {
    let doc = JsonGraph {
        vertices: g.labels().iter().cloned().map(JsonLabel::Text).collect(),
        edges: g
            .edges()
            .map(|(i, j, w)| {
                (
                    JsonLabel::Text(g.label(i).to_string()),
                    JsonLabel::Text(g.label(j).to_string()),
                    JsonLabel::Text(format_rational(w)),
                )
            })
            .collect(),
    };
    serde_json::to_string(&doc).expect("graph json is always serializable")
}

pub fn serialize_graph(g: &WeightedGraph, format: Format) -> String {
    match format {
        Format::EdgeList => to_edge_list(g),
        Format::Json => to_json(g),
    }
}
