//! File formats.
//!
//! Graphs, hypergraphs and set systems use JSON with 1-based vertex labels:
//!
//! ```text
//! {"n": 4, "edges": [[1,2],[2,3],[3,4]]}
//! {"n": 4, "hyperedges": [[1,2,3,4],[2,3,4]]}
//! {"n": 4, "members": [[],[1]]}
//! ```
//!
//! Graphs and hypergraphs also accept a compact text form: a header line
//! `n m` followed by `m` lines of space-separated vertices. Blank lines and
//! lines starting with `#` are skipped.

use std::path::Path;

use serde::de::DeserializeOwned;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::hypergraph::{Hypergraph, SetSystem};

fn from_json<T: DeserializeOwned>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

fn looks_like_json(text: &str) -> bool {
    text.trim_start().starts_with('{')
}

struct Compact {
    n: usize,
    rows: Vec<Vec<usize>>,
}

fn parse_compact(text: &str) -> Result<Compact> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let numbers = |lineno: usize, line: &str| -> Result<Vec<usize>> {
        line.split_whitespace()
            .map(|tok| {
                tok.parse::<usize>()
                    .map_err(|_| Error::Parse(format!("line {lineno}: expected an integer, found {tok:?}")))
            })
            .collect()
    };
    let (hl, header) = lines
        .next()
        .ok_or_else(|| Error::Parse("empty input".into()))?;
    let head = numbers(hl, header)?;
    let [n, m] = head[..] else {
        return Err(Error::Parse(format!("line {hl}: header must be \"n m\"")));
    };
    let mut rows = Vec::with_capacity(m);
    for (lineno, line) in lines {
        if rows.len() == m {
            return Err(Error::Parse(format!("line {lineno}: more than {m} rows")));
        }
        rows.push(numbers(lineno, line)?);
    }
    if rows.len() != m {
        return Err(Error::Parse(format!("expected {m} rows, found {}", rows.len())));
    }
    Ok(Compact { n, rows })
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    if looks_like_json(text) {
        return from_json(text);
    }
    let c = parse_compact(text)?;
    let mut edges = Vec::with_capacity(c.rows.len());
    for (i, row) in c.rows.iter().enumerate() {
        let [a, b] = row[..] else {
            return Err(Error::Parse(format!("edge {} must have two endpoints", i + 1)));
        };
        edges.push((a, b));
    }
    Graph::new(c.n, edges)
}

pub fn parse_hypergraph(text: &str) -> Result<Hypergraph> {
    if looks_like_json(text) {
        return from_json(text);
    }
    let c = parse_compact(text)?;
    Hypergraph::new(c.n, c.rows)
}

pub fn parse_set_system(text: &str) -> Result<SetSystem> {
    from_json(text)
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

pub fn read_graph(path: &Path) -> Result<Graph> {
    parse_graph(&read(path)?)
}

pub fn read_hypergraph(path: &Path) -> Result<Hypergraph> {
    parse_hypergraph(&read(path)?)
}

/// Compact text form of a hypergraph, readable by [`parse_hypergraph`].
pub fn hypergraph_to_text(h: &Hypergraph) -> String {
    let mut out = format!("{} {}\n", h.n(), h.edge_count());
    for e in h.hyperedges() {
        let row: Vec<String> = e.iter().map(|v| v.to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

/// Compact text form of a graph, readable by [`parse_graph`].
pub fn graph_to_text(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for e in g.edges() {
        out.push_str(&format!("{} {}\n", e.u(), e.v()));
    }
    out
}

/// Pretty JSON. Every serialised type keeps canonical ordering, so output is
/// identical across runs.
pub fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("report types always serialise")
}
