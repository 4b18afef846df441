//! Extremal saturated hypergraphs.
//!
//! * [`construct_ht`]: the star construction with `t - 1` hyperedges, every
//!   vertex of degree `t - 2`.
//! * [`construct_hprime`] / [`construct_hnm`]: the set system of one empty
//!   set, up to `n` singletons and an almost regular set of pairs, and the
//!   hypergraph of its complements.
//! * [`special_saturated`]: the fixed witnesses for the three smallest stars
//!   and the triangle.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::hypergraph::{complement_system, Hypergraph, SetSystem};
use crate::vertex_set::{VertexSet, MAX_GROUND};

fn choose2(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// `([n], {[n], [n]-{1}, ..., [n]-{t-3}, [t-3]})`.
pub fn construct_ht(n: usize, t: usize) -> Result<Hypergraph> {
    if t < 5 || n < t || n > MAX_GROUND {
        return Err(Error::OutsideLemmaRegime { n, t });
    }
    let full = VertexSet::full(n);
    let mut sets = vec![full];
    sets.extend((1..=t - 3).map(|i| VertexSet::singleton(i).complement(n)));
    sets.push(VertexSet::prefix(t - 3));
    Hypergraph::from_sets(n, sets)
}

/// A graph on `{1..n}` with exactly `k` edges whose degrees differ by at most
/// one.
///
/// Greedy: join the least minimum-degree vertex `u` to its least
/// minimum-degree non-neighbour `v`. When `v` already sits one above the
/// minimum while another minimum-degree vertex `w` exists (necessarily a
/// neighbour of `u`), an edge `xy` with `x` outside `N[u]` and `y` outside
/// `N[w]` is swapped for `ux` and `wy` instead; such an edge always exists.
pub fn almost_regular_edges(n: usize, k: usize) -> Result<Graph> {
    if k > choose2(n) {
        return Err(Error::TooManyEdges { n, k });
    }
    let mut adj = vec![VertexSet::EMPTY; n + 1];
    let deg = |adj: &[VertexSet], v: usize| adj[v].len();
    let link = |adj: &mut [VertexSet], a: usize, b: usize| {
        adj[a].insert(b);
        adj[b].insert(a);
    };

    for _ in 0..k {
        let d = (1..=n).map(|v| deg(&adj, v)).min().expect("n >= 1");
        let u = (1..=n).find(|&v| deg(&adj, v) == d).expect("minimum is attained");
        let v = (1..=n)
            .filter(|&x| x != u && !adj[u].contains(x))
            .min_by_key(|&x| (deg(&adj, x), x))
            .expect("a vertex of minimum degree below n-1 has a non-neighbour");
        let other_min = (1..=n).find(|&x| x != u && deg(&adj, x) == d);
        match other_min {
            Some(w) if deg(&adj, v) > d => {
                let mut closed_u = adj[u];
                closed_u.insert(u);
                let mut closed_w = adj[w];
                closed_w.insert(w);
                let (x, y) = (1..=n)
                    .filter(|&x| !closed_u.contains(x))
                    .flat_map(|x| adj[x].iter().map(move |y| (x, y)))
                    .find(|&(_, y)| !closed_w.contains(y))
                    .expect("swap edge exists whenever the greedy step would unbalance degrees");
                adj[x].remove(y);
                adj[y].remove(x);
                link(&mut adj, u, x);
                link(&mut adj, w, y);
            }
            _ => link(&mut adj, u, v),
        }
    }

    let edges = (1..=n).flat_map(|a| adj[a].iter().filter(move |&b| b > a).map(move |b| (a, b)));
    Graph::new(n, edges.collect::<Vec<_>>())
}

/// `{∅} ∪ {{1},...,{x}} ∪ E'` with `x = min(m-1, n)` and `E'` the
/// almost regular graph on `m - x - 1` edges.
pub fn construct_hprime(n: usize, m: usize) -> Result<SetSystem> {
    if m == 0 || m > choose2(n) || n > MAX_GROUND {
        return Err(Error::MOutOfRange { n, m });
    }
    let x = (m - 1).min(n);
    let pairs = almost_regular_edges(n, m - x - 1)?;
    let members = std::iter::once(VertexSet::EMPTY)
        .chain((1..=x).map(VertexSet::singleton))
        .chain(pairs.edges().iter().map(|e| e.as_set()));
    SetSystem::from_sets(n, members)
}

/// Complements of [`construct_hprime`]; `m = 0` gives the empty hypergraph.
pub fn construct_hnm(n: usize, m: usize) -> Result<Hypergraph> {
    if m == 0 {
        return Hypergraph::empty(n).map_err(|_| Error::MOutOfRange { n, m });
    }
    let hprime = construct_hprime(n, m)?;
    complement_system(&hprime).map_err(|e| match e {
        Error::ComplementTooSmall => Error::GroundSetTooSmall,
        other => other,
    })
}

/// The small patterns handled by dedicated witnesses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SpecialKind {
    /// Single edge.
    S2,
    /// Path on three vertices.
    S3,
    /// Star with three edges.
    S4,
    /// Triangle.
    K3,
}

impl SpecialKind {
    pub const ALL: [SpecialKind; 4] = [SpecialKind::S2, SpecialKind::S3, SpecialKind::S4, SpecialKind::K3];

    pub fn min_n(self) -> usize {
        match self {
            SpecialKind::S2 => 2,
            SpecialKind::S3 | SpecialKind::K3 => 3,
            SpecialKind::S4 => 4,
        }
    }

    pub fn pattern(self) -> Graph {
        match self {
            SpecialKind::S2 => Graph::star(2),
            SpecialKind::S3 => Graph::star(3),
            SpecialKind::S4 => Graph::star(4),
            SpecialKind::K3 => Graph::complete(3),
        }
        .expect("fixed patterns are valid")
    }

    fn name(self) -> &'static str {
        match self {
            SpecialKind::S2 => "s2",
            SpecialKind::S3 => "s3",
            SpecialKind::S4 => "s4",
            SpecialKind::K3 => "k3",
        }
    }
}

impl fmt::Display for SpecialKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SpecialKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SpecialKind::ALL
            .into_iter()
            .find(|k| k.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Parse(format!("unknown special kind {s:?}; expected s2, s3, s4 or k3")))
    }
}

/// `([n], ∅)`, `([n], {[n]})`, `([n], {[n], [n]-{1}})` and
/// `([n], {[n], [n]-{1}})` for S2, S3, S4 and K3.
pub fn special_saturated(kind: SpecialKind, n: usize) -> Result<Hypergraph> {
    if n < kind.min_n() {
        return Err(Error::NTooSmallForWitness {
            kind: kind.name(),
            min: kind.min_n(),
        });
    }
    let full = VertexSet::full(n);
    let co1 = VertexSet::singleton(1).complement(n);
    let sets = match kind {
        SpecialKind::S2 => vec![],
        SpecialKind::S3 => vec![full],
        SpecialKind::S4 | SpecialKind::K3 => vec![full, co1],
    };
    Hypergraph::from_sets(n, sets)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lists(h: &Hypergraph) -> Vec<Vec<usize>> {
        h.hyperedges().iter().map(|e| e.to_vec()).collect()
    }

    #[test]
    fn ht_examples() {
        assert_eq!(
            lists(&construct_ht(5, 5).unwrap()),
            vec![vec![1, 2, 3, 4, 5], vec![2, 3, 4, 5], vec![1, 3, 4, 5], vec![1, 2]]
        );
        assert_eq!(
            lists(&construct_ht(6, 5).unwrap()),
            vec![vec![1, 2, 3, 4, 5, 6], vec![2, 3, 4, 5, 6], vec![1, 3, 4, 5, 6], vec![1, 2]]
        );
        let h66 = construct_ht(6, 6).unwrap();
        assert_eq!(h66.edge_count(), 5);
        assert_eq!(h66.hyperedges().last().unwrap().to_vec(), vec![1, 2, 3]);
        assert_eq!(construct_ht(5, 4), Err(Error::OutsideLemmaRegime { n: 5, t: 4 }));
        assert_eq!(construct_ht(5, 6), Err(Error::OutsideLemmaRegime { n: 5, t: 6 }));
    }

    #[test]
    fn almost_regular_examples() {
        let g = almost_regular_edges(5, 2).unwrap();
        assert_eq!(g, Graph::new(5, [(1, 2), (3, 4)]).unwrap());
        assert_eq!(almost_regular_edges(6, 0).unwrap().edge_count(), 0);
        assert_eq!(almost_regular_edges(4, 6).unwrap(), Graph::complete(4).unwrap());
        assert_eq!(almost_regular_edges(4, 7), Err(Error::TooManyEdges { n: 4, k: 7 }));
    }

    #[test]
    fn almost_regular_spread_exhaustive() {
        for n in 1..=10 {
            for k in 0..=choose2(n) {
                let g = almost_regular_edges(n, k).unwrap();
                assert_eq!(g.edge_count(), k);
                let d = g.degrees();
                let spread = d.iter().max().unwrap() - d.iter().min().unwrap();
                assert!(spread <= 1, "n={n} k={k} degrees {d:?}");
            }
        }
    }

    #[test]
    fn hprime_examples() {
        let s = construct_hprime(4, 4).unwrap();
        assert_eq!(s.to_string(), "{{}, {1}, {2}, {3}}");
        let s = construct_hprime(5, 8).unwrap();
        assert_eq!(s.to_string(), "{{}, {1}, {2}, {3}, {4}, {5}, {1,2}, {3,4}}");
        assert_eq!(construct_hprime(5, 1).unwrap().to_string(), "{{}}");
        assert_eq!(construct_hprime(4, 0), Err(Error::MOutOfRange { n: 4, m: 0 }));
        assert_eq!(construct_hprime(4, 7), Err(Error::MOutOfRange { n: 4, m: 7 }));
    }

    #[test]
    fn hnm_examples() {
        assert_eq!(
            lists(&construct_hnm(4, 4).unwrap()),
            vec![vec![1, 2, 3, 4], vec![2, 3, 4], vec![1, 3, 4], vec![1, 2, 4]]
        );
        assert_eq!(
            lists(&construct_hnm(4, 2).unwrap()),
            vec![vec![1, 2, 3, 4], vec![2, 3, 4]]
        );
        assert_eq!(construct_hnm(5, 0).unwrap(), Hypergraph::empty(5).unwrap());
    }

    #[test]
    fn special_examples() {
        assert_eq!(special_saturated(SpecialKind::S2, 4).unwrap(), Hypergraph::empty(4).unwrap());
        assert_eq!(lists(&special_saturated(SpecialKind::S3, 3).unwrap()), vec![vec![1, 2, 3]]);
        assert_eq!(
            lists(&special_saturated(SpecialKind::K3, 3).unwrap()),
            vec![vec![1, 2, 3], vec![2, 3]]
        );
        assert_eq!(
            special_saturated(SpecialKind::S4, 3),
            Err(Error::NTooSmallForWitness { kind: "s4", min: 4 })
        );
        assert_eq!("K3".parse::<SpecialKind>().unwrap(), SpecialKind::K3);
        assert!("k4".parse::<SpecialKind>().is_err());
    }
}
