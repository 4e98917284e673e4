//! Deterministic graph serialization: the edge-list text format, DOT export,
//! and the content hash embedded in reports.
//!
//! Edge-list format: first line `n m`, then `m` lines `u v` with `u < v`,
//! edges ascending. The writer is bit-exact; round-tripping a graph through
//! it is the identity.

use std::fs;
use std::path::Path;

use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("malformed graph file, line {line}: {msg}")]
    Malformed { line: usize, msg: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub fn to_edge_list_string(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = String::with_capacity(12 * (edges.len() + 1));
    out.push_str(&format!("{} {}\n", g.n(), edges.len()));
    for (u, v) in edges {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn parse_edge_list(text: &str) -> Result<Graph, FormatError> {
    // Comment lines (`#`) are tolerated on input; the writer never emits
    // them except for the documented incidence-graph header.
    let mut lines = text
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim_start().starts_with('#'));
    let (_, header) = lines
        .next()
        .ok_or_else(|| FormatError::Malformed { line: 1, msg: "empty file".into() })?;
    let mut it = header.split_whitespace();
    let n: usize = parse_field(it.next(), 1, "vertex count")?;
    let m: usize = parse_field(it.next(), 1, "edge count")?;
    if it.next().is_some() {
        return Err(FormatError::Malformed { line: 1, msg: "expected exactly `n m`".into() });
    }
    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let (idx, line) = lines.next().ok_or_else(|| FormatError::Malformed {
            line: edges.len() + 2,
            msg: format!("expected {m} edge lines, file ends after {}", edges.len()),
        })?;
        let lineno = idx + 1;
        let mut it = line.split_whitespace();
        let u: usize = parse_field(it.next(), lineno, "edge endpoint")?;
        let v: usize = parse_field(it.next(), lineno, "edge endpoint")?;
        if it.next().is_some() {
            return Err(FormatError::Malformed { line: lineno, msg: "expected exactly `u v`".into() });
        }
        edges.push((u, v));
    }
    for (idx, line) in lines {
        if !line.trim().is_empty() {
            return Err(FormatError::Malformed {
                line: idx + 1,
                msg: "trailing content after edge list".into(),
            });
        }
    }
    Ok(Graph::from_edge_list(n, &edges)?)
}

fn parse_field<T: std::str::FromStr>(
    field: Option<&str>,
    line: usize,
    what: &str,
) -> Result<T, FormatError> {
    let s = field
        .ok_or_else(|| FormatError::Malformed { line, msg: format!("missing {what}") })?;
    s.parse()
        .map_err(|_| FormatError::Malformed { line, msg: format!("bad {what}: {s:?}") })
}

pub fn read_graph_file(path: impl AsRef<Path>) -> Result<Graph, FormatError> {
    parse_edge_list(&fs::read_to_string(path)?)
}

pub fn write_graph_file(path: impl AsRef<Path>, g: &Graph) -> Result<(), FormatError> {
    Ok(fs::write(path, to_edge_list_string(g))?)
}

/// DOT export: all vertices listed first, then edges with `u < v` ascending.
pub fn to_dot_string(g: &Graph) -> String {
    let mut out = String::from("graph {\n");
    for v in 0..g.n() {
        out.push_str(&format!("  {v};\n"));
    }
    for (u, v) in g.edges() {
        out.push_str(&format!("  {u} -- {v};\n"));
    }
    out.push_str("}\n");
    out
}

/// SHA-256 of the canonical edge-list serialization, hex-encoded.
pub fn graph_hash(g: &Graph) -> String {
    let mut hasher = Sha256::new();
    hasher.update(to_edge_list_string(g).as_bytes());
    let digest = hasher.finalize();
    digest.iter().map(|b| format!("{b:02x}")).collect()
}
