use serde::{Deserialize, Serialize};

use super::Graph;
use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

/// Case split of the saturation-number formula.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "tag", rename_all = "snake_case")]
pub enum GraphClass {
    /// A star with at least four edges; saturation needs `|E|` hyperedges.
    StarWithAtLeast4Edges { center: usize },
    /// Everything else; saturation needs `|E| - 1` hyperedges.
    Other,
}

pub fn max_degree(g: &Graph) -> usize {
    g.degrees().into_iter().max().unwrap_or(0)
}

/// The common vertex of all edges, if there is one. A single edge reports
/// its smaller endpoint.
pub fn is_star(g: &Graph) -> Result<Option<usize>> {
    let mut common = match g.edges().first() {
        None => return Err(Error::EmptyGraph),
        Some(e) => e.as_set(),
    };
    for e in &g.edges()[1..] {
        common = common.intersection(e.as_set());
    }
    Ok(common.iter().next())
}

fn covers(g: &Graph, cover: VertexSet) -> bool {
    g.edges().iter().all(|e| !e.as_set().is_disjoint(cover))
}

/// Least vertex cover of size at most two, or `None` if every cover is
/// larger. Among covers of minimum size the lexicographically least wins.
pub fn has_vertex_cover_le2(g: &Graph) -> Option<Vec<usize>> {
    if g.edges().is_empty() {
        return Some(Vec::new());
    }
    let n = g.n();
    if let Some(v) = (1..=n).find(|&v| covers(g, VertexSet::singleton(v))) {
        return Some(vec![v]);
    }
    for a in 1..=n {
        for b in a + 1..=n {
            if covers(g, VertexSet::pair(a, b)) {
                return Some(vec![a, b]);
            }
        }
    }
    None
}

/// Two distinct vertices `(a, b)` covering every edge of a graph that is not
/// itself a star; lexicographically least such pair.
pub fn is_two_star_union(g: &Graph) -> Option<(usize, usize)> {
    match is_star(g) {
        Err(_) | Ok(Some(_)) => return None,
        Ok(None) => {}
    }
    let n = g.n();
    (1..=n)
        .flat_map(|a| (a + 1..=n).map(move |b| (a, b)))
        .find(|&(a, b)| covers(g, VertexSet::pair(a, b)))
}

pub fn classify_for_theorem(g: &Graph) -> Result<GraphClass> {
    if g.edges().is_empty() {
        return Err(Error::EmptyGraph);
    }
    if g.has_isolated_vertices() {
        return Err(Error::IsolatedVertices);
    }
    Ok(match is_star(g)? {
        Some(center) if g.edge_count() >= 4 => GraphClass::StarWithAtLeast4Edges { center },
        _ => GraphClass::Other,
    })
}

/// `|E|` for stars with at least four edges, `|E| - 1` otherwise.
pub fn predicted_sat(g: &Graph) -> Result<usize> {
    Ok(match classify_for_theorem(g)? {
        GraphClass::StarWithAtLeast4Edges { .. } => g.edge_count(),
        GraphClass::Other => g.edge_count() - 1,
    })
}
