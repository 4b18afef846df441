//! Simple labeled graphs on `{1..n}`, used as Berge patterns.

mod classify;
mod enumerate;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::vertex_set::{VertexSet, MAX_GROUND};

pub use classify::{
    classify_for_theorem, has_vertex_cover_le2, is_star, is_two_star_union, max_degree,
    predicted_sat, GraphClass,
};
pub use enumerate::{are_isomorphic, canonical_encoding, enumerate_graphs, ENUMERATION_MAX_N};

/// An unordered pair `{u, v}` with `u < v`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "[usize; 2]", into = "[usize; 2]")]
pub struct Edge {
    u: usize,
    v: usize,
}

impl Edge {
    /// Normalises the endpoint order. Panics on a loop.
    pub fn new(a: usize, b: usize) -> Self {
        assert_ne!(a, b, "loops are not edges");
        Edge {
            u: a.min(b),
            v: a.max(b),
        }
    }

    pub fn u(self) -> usize {
        self.u
    }

    pub fn v(self) -> usize {
        self.v
    }

    pub fn contains(self, x: usize) -> bool {
        self.u == x || self.v == x
    }

    pub fn as_set(self) -> VertexSet {
        VertexSet::pair(self.u, self.v)
    }
}

impl TryFrom<[usize; 2]> for Edge {
    type Error = String;

    fn try_from([a, b]: [usize; 2]) -> std::result::Result<Self, String> {
        if a == b {
            Err(format!("loop at vertex {a}"))
        } else {
            Ok(Edge::new(a, b))
        }
    }
}

impl From<Edge> for [usize; 2] {
    fn from(e: Edge) -> Self {
        [e.u, e.v]
    }
}

impl fmt::Debug for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.u, self.v)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.u, self.v)
    }
}

/// A simple graph on `{1..n}`. Edges are kept sorted and duplicate-free.
///
/// Isolated vertices are allowed here; operations that follow the
/// "no isolated vertices" convention check for them explicitly.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "GraphRepr", into = "GraphRepr")]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
}

#[derive(Serialize, Deserialize)]
struct GraphRepr {
    n: usize,
    edges: Vec<[usize; 2]>,
}

impl TryFrom<GraphRepr> for Graph {
    type Error = Error;

    fn try_from(r: GraphRepr) -> Result<Self> {
        Graph::new(r.n, r.edges.into_iter().map(|[a, b]| (a, b)))
    }
}

impl From<Graph> for GraphRepr {
    fn from(g: Graph) -> Self {
        GraphRepr {
            n: g.n,
            edges: g.edges.into_iter().map(Into::into).collect(),
        }
    }
}

impl Graph {
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n == 0 || n > MAX_GROUND {
            return Err(Error::InvalidGraph(format!("n must be in 1..={MAX_GROUND}, got {n}")));
        }
        let mut out = Vec::new();
        for (a, b) in edges {
            if a == b {
                return Err(Error::InvalidGraph(format!("loop at vertex {a}")));
            }
            for x in [a, b] {
                if !(1..=n).contains(&x) {
                    return Err(Error::InvalidGraph(format!("vertex {x} outside 1..={n}")));
                }
            }
            out.push(Edge::new(a, b));
        }
        out.sort();
        if let Some(w) = out.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidGraph(format!("duplicate edge {}", w[0])));
        }
        Ok(Graph { n, edges: out })
    }

    pub fn empty(n: usize) -> Result<Self> {
        Self::new(n, std::iter::empty())
    }

    /// Star with center 1 and leaves `2..=t`.
    pub fn star(t: usize) -> Result<Self> {
        Self::new(t, (2..=t).map(|v| (1, v)))
    }

    /// Path `1-2-...-t`.
    pub fn path(t: usize) -> Result<Self> {
        Self::new(t, (1..t).map(|v| (v, v + 1)))
    }

    /// Cycle `1-2-...-t-1`.
    pub fn cycle(t: usize) -> Result<Self> {
        Self::new(t, (1..=t).map(|v| (v, v % t + 1)))
    }

    pub fn complete(t: usize) -> Result<Self> {
        Self::new(t, (1..=t).flat_map(|u| (u + 1..=t).map(move |v| (u, v))))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, e: Edge) -> bool {
        self.edges.binary_search(&e).is_ok()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|e| e.contains(v)).count()
    }

    /// Degrees of `1..=n`, indexed by `v - 1`.
    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.n];
        for e in &self.edges {
            d[e.u - 1] += 1;
            d[e.v - 1] += 1;
        }
        d
    }

    /// Neighbourhood of `v` as a bitmask.
    pub fn neighbors(&self, v: usize) -> VertexSet {
        let mut s = VertexSet::EMPTY;
        for e in &self.edges {
            if e.u == v {
                s.insert(e.v);
            } else if e.v == v {
                s.insert(e.u);
            }
        }
        s
    }

    pub fn isolated_vertices(&self) -> Vec<usize> {
        self.degrees()
            .iter()
            .enumerate()
            .filter(|(_, &d)| d == 0)
            .map(|(i, _)| i + 1)
            .collect()
    }

    pub fn has_isolated_vertices(&self) -> bool {
        self.degrees().contains(&0)
    }

    /// Same ground set with `e` deleted.
    pub fn without_edge(&self, e: Edge) -> Result<Self> {
        if !self.has_edge(e) {
            return Err(Error::EdgeNotPresent);
        }
        Ok(Graph {
            n: self.n,
            edges: self.edges.iter().copied().filter(|&x| x != e).collect(),
        })
    }

    /// Drops isolated vertices and relabels the rest to `1..=k` preserving
    /// their relative order. Returns `None` for an edgeless graph.
    pub fn without_isolated(&self) -> Option<Self> {
        if self.edges.is_empty() {
            return None;
        }
        let deg = self.degrees();
        let mut label = vec![0; self.n];
        let mut k = 0;
        for (i, &d) in deg.iter().enumerate() {
            if d > 0 {
                k += 1;
                label[i] = k;
            }
        }
        let edges = self.edges.iter().map(|e| (label[e.u - 1], label[e.v - 1]));
        Some(Graph::new(k, edges).expect("relabeling preserves simplicity"))
    }

    /// Relabels through `perm`, where `perm[v - 1]` is the image of `v`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.n);
        let edges = self.edges.iter().map(|e| (perm[e.u - 1], perm[e.v - 1]));
        Graph::new(self.n, edges).expect("a permutation preserves simplicity")
    }

    /// Vertex set covered by edges.
    pub fn support(&self) -> VertexSet {
        self.edges
            .iter()
            .fold(VertexSet::EMPTY, |acc, e| acc.union(e.as_set()))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, {:?})", self.n, self.edges)
    }
}

/// `n=4: {1,2} {2,3} {3,4}`
impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={}:", self.n)?;
        for e in &self.edges {
            write!(f, " {e}")?;
        }
        Ok(())
    }
}
