//! Berge-G containment.
//!
//! A hypergraph contains a Berge copy of `G` when the vertices of `G` embed
//! injectively into the host and the embedded edges can be assigned to
//! pairwise distinct hyperedges containing them. The second half is a
//! system-of-distinct-representatives problem, decided by bipartite matching.

use std::collections::BTreeMap;
use std::fmt;

use itertools::Itertools;
use serde::de::{self, Deserializer};
use serde::ser::{SerializeMap, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};
use crate::hypergraph::{Hypergraph, SetSystem};
use crate::matching::{perfect_or_violator, BipartiteGraph, IncrementalMatcher, MatchingResult};

pub const ORACLE_MAX_PATTERN_VERTICES: usize = 7;
pub const ORACLE_MAX_PATTERN_EDGES: usize = 6;
pub const ORACLE_MAX_HYPEREDGES: usize = 8;

/// Certificate that a hypergraph contains a Berge copy of a graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BergeWitness {
    /// Host image of pattern vertex `v` at index `v - 1`.
    pub vertex_map: VertexMap,
    /// Hyperedge index (into the host's hyperedge list) for each pattern edge.
    pub edge_assignment: Vec<EdgeAssignment>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeAssignment {
    pub edge: Edge,
    pub hyperedge_index: usize,
}

/// Pattern vertex to host vertex. Serialised as `{"1": 3, "2": 5, ...}` with
/// keys in numeric order.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct VertexMap(pub Vec<usize>);

impl VertexMap {
    pub fn image(&self, v: usize) -> usize {
        self.0[v - 1]
    }
}

impl Serialize for VertexMap {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.0.len()))?;
        for (i, &h) in self.0.iter().enumerate() {
            map.serialize_entry(&(i + 1).to_string(), &h)?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for VertexMap {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = BTreeMap::<String, usize>::deserialize(deserializer)?;
        let mut by_key = BTreeMap::new();
        for (k, v) in raw {
            let key: usize = k
                .parse()
                .map_err(|_| de::Error::custom(format!("vertex key {k:?} is not an integer")))?;
            by_key.insert(key, v);
        }
        if by_key.keys().copied().ne(1..=by_key.len()) {
            return Err(de::Error::custom("vertex_map keys must be exactly 1..=k"));
        }
        Ok(VertexMap(by_key.into_values().collect()))
    }
}

impl fmt::Display for BergeWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("vertices:")?;
        for (i, h) in self.vertex_map.0.iter().enumerate() {
            write!(f, " {}->{}", i + 1, h)?;
        }
        f.write_str("\nedges:")?;
        for a in &self.edge_assignment {
            write!(f, " {}->#{}", a.edge, a.hyperedge_index)?;
        }
        Ok(())
    }
}

/// Hyperedges, by index, that contain both endpoints of the given host pair.
fn containing(h: &Hypergraph, a: usize, b: usize) -> Vec<usize> {
    let pair = crate::vertex_set::VertexSet::pair(a, b);
    h.hyperedges()
        .iter()
        .enumerate()
        .filter(|(_, e)| pair.is_subset(**e))
        .map(|(i, _)| i)
        .collect()
}

struct Search<'a> {
    graph: &'a Graph,
    host: &'a Hypergraph,
    order: Vec<usize>,
    /// For each position in `order`: (edge index, earlier pattern vertex).
    back_edges: Vec<Vec<(usize, usize)>>,
    /// Host vertices allowed for the pattern vertex at each position.
    candidates: Vec<Vec<usize>>,
    image: Vec<usize>,
    used: u64,
    /// Pattern edge index of each matcher left vertex, in insertion order.
    placed: Vec<usize>,
    matcher: IncrementalMatcher,
}

impl Search<'_> {
    fn run(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let x = self.order[depth];
        for ci in 0..self.candidates[depth].len() {
            let hv = self.candidates[depth][ci];
            if self.used >> (hv - 1) & 1 == 1 {
                continue;
            }
            self.image[x - 1] = hv;
            self.used |= 1 << (hv - 1);
            let mark = self.placed.len();
            let mut ok = true;
            for bi in 0..self.back_edges[depth].len() {
                let (edge_idx, y) = self.back_edges[depth][bi];
                let nbrs = containing(self.host, hv, self.image[y - 1]);
                if !self.matcher.push(nbrs) {
                    ok = false;
                    break;
                }
                self.placed.push(edge_idx);
            }
            if ok && self.run(depth + 1) {
                return true;
            }
            self.matcher.truncate(mark);
            self.placed.truncate(mark);
            self.used &= !(1 << (hv - 1));
        }
        false
    }

    fn witness(&self) -> BergeWitness {
        let mut edge_assignment: Vec<EdgeAssignment> = self
            .placed
            .iter()
            .zip(self.matcher.assignment())
            .map(|(&ei, &hi)| EdgeAssignment {
                edge: self.graph.edges()[ei],
                hyperedge_index: hi,
            })
            .collect();
        edge_assignment.sort_by_key(|a| a.edge);
        BergeWitness {
            vertex_map: VertexMap(self.image.clone()),
            edge_assignment,
        }
    }
}

/// Decides whether `h` contains a Berge copy of `g`, returning a witness.
///
/// Pattern vertices are embedded in descending-degree order onto host
/// vertices in ascending label order. After each placement the newly
/// embedded edges must still admit distinct containing hyperedges, otherwise
/// the branch is cut. Host vertices whose hyperedge degree is below the
/// pattern vertex's degree are never tried.
pub fn contains_berge(g: &Graph, h: &Hypergraph) -> Result<Option<BergeWitness>> {
    if g.has_isolated_vertices() {
        return Err(Error::IsolatedVertices);
    }
    if g.n() > h.n() || h.edge_count() < g.edge_count() {
        return Ok(None);
    }
    let deg = g.degrees();
    let mut order: Vec<usize> = (1..=g.n()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(deg[v - 1]), v));
    let mut position = vec![0; g.n()];
    for (i, &v) in order.iter().enumerate() {
        position[v - 1] = i;
    }
    let mut back_edges = vec![Vec::new(); g.n()];
    for (ei, e) in g.edges().iter().enumerate() {
        let (pu, pv) = (position[e.u() - 1], position[e.v() - 1]);
        if pu > pv {
            back_edges[pu].push((ei, e.v()));
        } else {
            back_edges[pv].push((ei, e.u()));
        }
    }
    let host_deg: Vec<usize> = (1..=h.n()).map(|v| h.degree(v).expect("in range")).collect();
    let candidates = order
        .iter()
        .map(|&x| {
            (1..=h.n())
                .filter(|&hv| host_deg[hv - 1] >= deg[x - 1])
                .collect()
        })
        .collect();
    let mut search = Search {
        graph: g,
        host: h,
        order,
        back_edges,
        candidates,
        image: vec![0; g.n()],
        used: 0,
        placed: Vec::new(),
        matcher: IncrementalMatcher::new(h.edge_count()),
    };
    Ok(search.run(0).then(|| search.witness()))
}

/// Exhaustive reference decision: every injective vertex map against every
/// injective edge-to-hyperedge assignment, with no pruning. Only for tiny
/// instances.
pub fn contains_berge_oracle(g: &Graph, h: &Hypergraph) -> Result<Option<BergeWitness>> {
    if g.n() > ORACLE_MAX_PATTERN_VERTICES
        || g.edge_count() > ORACLE_MAX_PATTERN_EDGES
        || h.edge_count() > ORACLE_MAX_HYPEREDGES
    {
        return Err(Error::OracleBound);
    }
    if g.n() > h.n() {
        return Ok(None);
    }
    let edges = g.edges();
    for map in (1..=h.n()).permutations(g.n()) {
        for assignment in (0..h.edge_count()).permutations(edges.len()) {
            let fits = edges.iter().zip(&assignment).all(|(e, &hi)| {
                let a = map[e.u() - 1];
                let b = map[e.v() - 1];
                let he = h.hyperedges()[hi];
                he.contains(a) && he.contains(b)
            });
            if fits {
                return Ok(Some(BergeWitness {
                    vertex_map: VertexMap(map),
                    edge_assignment: edges
                        .iter()
                        .zip(assignment)
                        .map(|(&edge, hyperedge_index)| EdgeAssignment { edge, hyperedge_index })
                        .collect(),
                }));
            }
        }
    }
    Ok(None)
}

/// Checks both injectivity conditions and every containment `{f(u), f(v)} ⊆
/// h[edge_assignment(uv)]`, and that each pattern edge is assigned exactly
/// once.
pub fn validate_witness(g: &Graph, h: &Hypergraph, w: &BergeWitness) -> bool {
    let map = &w.vertex_map.0;
    if map.len() != g.n() || map.iter().any(|&x| !(1..=h.n()).contains(&x)) {
        return false;
    }
    if !map.iter().all_unique() {
        return false;
    }
    if w.edge_assignment.len() != g.edge_count() {
        return false;
    }
    if !w.edge_assignment.iter().map(|a| a.hyperedge_index).all_unique()
        || !w.edge_assignment.iter().map(|a| a.edge).all_unique()
    {
        return false;
    }
    w.edge_assignment.iter().all(|a| {
        g.has_edge(a.edge)
            && a.hyperedge_index < h.edge_count()
            && {
                let he = h.hyperedges()[a.hyperedge_index];
                he.contains(map[a.edge.u() - 1]) && he.contains(map[a.edge.v() - 1])
            }
    })
}

/// Builds the disjointness graph between `E(g) - {removed_edge}` (left, in
/// edge order) and the members of `hprime` (right, in member order), and
/// looks for a perfect matching. A perfect matching maps each remaining edge
/// to a member it avoids; complementing the members turns that into a Berge
/// copy of `g - removed_edge` under the identity vertex map.
pub fn certificate_condition_iii(
    g: &Graph,
    removed_edge: Edge,
    hprime: &SetSystem,
) -> Result<MatchingResult> {
    if !g.has_edge(removed_edge) {
        return Err(Error::RemovedEdgeMissing);
    }
    let left: Vec<Edge> = g.edges().iter().copied().filter(|&e| e != removed_edge).collect();
    if left.len() != hprime.len() {
        return Err(Error::UnequalParts {
            left: left.len(),
            right: hprime.len(),
        });
    }
    let members = hprime.members();
    let f = BipartiteGraph::from_fn(left.len(), members.len(), |i, j| {
        left[i].as_set().is_disjoint(members[j])
    });
    Ok(perfect_or_violator(&f))
}

/// Turns a perfect condition-(iii) matching into a witness for
/// `g - removed_edge` inside the complement hypergraph of `hprime`, using the
/// identity vertex map. Hyperedge `j` of the complement is the complement of
/// member `j`, because the two canonical orders mirror each other.
pub fn certificate_to_witness(
    g: &Graph,
    removed_edge: Edge,
    result: &MatchingResult,
) -> Option<BergeWitness> {
    if !result.is_perfect() {
        return None;
    }
    let left: Vec<Edge> = g.edges().iter().copied().filter(|&e| e != removed_edge).collect();
    let mut edge_assignment: Vec<EdgeAssignment> = result
        .pairs
        .iter()
        .map(|&(l, r)| EdgeAssignment {
            edge: left[l],
            hyperedge_index: r,
        })
        .collect();
    edge_assignment.sort_by_key(|a| a.edge);
    Some(BergeWitness {
        vertex_map: VertexMap((1..=g.n()).collect()),
        edge_assignment,
    })
}
