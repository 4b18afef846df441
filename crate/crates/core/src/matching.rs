//! Bipartite maximum matching with Hall-violator certificates.
//!
//! Augmenting paths are found by depth-first search (Kuhn's algorithm). Left
//! vertices are processed in ascending order and each search tries right
//! vertices in ascending order, so results are deterministic.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BipartiteGraph {
    left_size: usize,
    right_size: usize,
    adjacency: Vec<Vec<usize>>,
}

impl BipartiteGraph {
    /// `adjacency[l]` lists the right neighbours of left vertex `l`. Lists are
    /// sorted and deduplicated; out-of-range indices panic.
    pub fn new(right_size: usize, adjacency: Vec<Vec<usize>>) -> Self {
        let adjacency: Vec<Vec<usize>> = adjacency
            .into_iter()
            .map(|mut row| {
                row.sort_unstable();
                row.dedup();
                assert!(
                    row.last().is_none_or(|&r| r < right_size),
                    "right index out of range"
                );
                row
            })
            .collect();
        BipartiteGraph {
            left_size: adjacency.len(),
            right_size,
            adjacency,
        }
    }

    /// Builds `F` from a relation: left `i` is adjacent to right `j` iff
    /// `adjacent(i, j)`.
    pub fn from_fn(
        left_size: usize,
        right_size: usize,
        mut adjacent: impl FnMut(usize, usize) -> bool,
    ) -> Self {
        let adjacency = (0..left_size)
            .map(|i| (0..right_size).filter(|&j| adjacent(i, j)).collect())
            .collect();
        BipartiteGraph {
            left_size,
            right_size,
            adjacency,
        }
    }

    pub fn left_size(&self) -> usize {
        self.left_size
    }

    pub fn right_size(&self) -> usize {
        self.right_size
    }

    pub fn neighbors(&self, left: usize) -> &[usize] {
        &self.adjacency[left]
    }

    /// `N(S)` for a set of left vertices.
    pub fn neighborhood<'a>(&self, set: impl IntoIterator<Item = &'a usize>) -> BTreeSet<usize> {
        set.into_iter()
            .flat_map(|&l| self.adjacency[l].iter().copied())
            .collect()
    }

    pub fn has_edge(&self, left: usize, right: usize) -> bool {
        self.adjacency[left].binary_search(&right).is_ok()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MatchingKind {
    Perfect,
    Deficient,
}

/// A left-perfect matching, or a maximum matching together with a set `S` of
/// left vertices with `|N(S)| < |S|`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatchingResult {
    pub kind: MatchingKind,
    pub pairs: Vec<(usize, usize)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub violator: Option<Vec<usize>>,
}

impl MatchingResult {
    pub fn is_perfect(&self) -> bool {
        self.kind == MatchingKind::Perfect
    }
}

struct Kuhn<'a> {
    graph: &'a BipartiteGraph,
    match_left: Vec<Option<usize>>,
    match_right: Vec<Option<usize>>,
    visited: Vec<bool>,
}

impl<'a> Kuhn<'a> {
    fn run(graph: &'a BipartiteGraph) -> Self {
        let mut k = Kuhn {
            graph,
            match_left: vec![None; graph.left_size],
            match_right: vec![None; graph.right_size],
            visited: vec![false; graph.right_size],
        };
        for l in 0..graph.left_size {
            k.visited.iter_mut().for_each(|v| *v = false);
            k.augment(l);
        }
        k
    }

    fn augment(&mut self, l: usize) -> bool {
        for &r in &self.graph.adjacency[l] {
            if self.visited[r] {
                continue;
            }
            self.visited[r] = true;
            let free = match self.match_right[r] {
                None => true,
                Some(other) => self.augment(other),
            };
            if free {
                self.match_left[l] = Some(r);
                self.match_right[r] = Some(l);
                return true;
            }
        }
        false
    }

    fn pairs(&self) -> Vec<(usize, usize)> {
        self.match_left
            .iter()
            .enumerate()
            .filter_map(|(l, r)| r.map(|r| (l, r)))
            .collect()
    }

    /// Left vertices reachable from `root` by alternating paths (non-matching
    /// edge left to right, matching edge right to left).
    fn alternating_reach(&self, root: usize) -> Vec<usize> {
        let mut seen_left = vec![false; self.graph.left_size];
        let mut seen_right = vec![false; self.graph.right_size];
        let mut stack = vec![root];
        seen_left[root] = true;
        while let Some(l) = stack.pop() {
            for &r in &self.graph.adjacency[l] {
                if seen_right[r] {
                    continue;
                }
                seen_right[r] = true;
                let partner = self.match_right[r].expect("maximum matching leaves no augmenting path");
                if !seen_left[partner] {
                    seen_left[partner] = true;
                    stack.push(partner);
                }
            }
        }
        (0..self.graph.left_size).filter(|&l| seen_left[l]).collect()
    }
}

/// Maximum-cardinality matching as `(left, right)` pairs, ascending by left.
pub fn max_matching(b: &BipartiteGraph) -> Vec<(usize, usize)> {
    Kuhn::run(b).pairs()
}

/// Left-perfect matching, or a Hall violator grown from the least unmatched
/// left vertex.
pub fn perfect_or_violator(b: &BipartiteGraph) -> MatchingResult {
    let k = Kuhn::run(b);
    let pairs = k.pairs();
    match k.match_left.iter().position(Option::is_none) {
        None => MatchingResult {
            kind: MatchingKind::Perfect,
            pairs,
            violator: None,
        },
        Some(root) => MatchingResult {
            kind: MatchingKind::Deficient,
            pairs,
            violator: Some(k.alternating_reach(root)),
        },
    }
}

/// True iff every left vertex can be matched.
pub fn has_left_perfect_matching(b: &BipartiteGraph) -> bool {
    Kuhn::run(b).match_left.iter().all(Option::is_some)
}

/// A left-perfect matching grown one left vertex at a time.
///
/// Adding a left vertex succeeds iff an augmenting path from it exists, which
/// is exactly when the enlarged left side still has a perfect matching. A
/// failed insertion leaves the matching untouched, and truncating back to an
/// earlier size keeps the remaining left vertices matched, so backtracking
/// searches can share one matcher.
#[derive(Clone, Debug)]
pub struct IncrementalMatcher {
    adjacency: Vec<Vec<usize>>,
    match_left: Vec<usize>,
    match_right: Vec<Option<usize>>,
    visited: Vec<bool>,
}

impl IncrementalMatcher {
    pub fn new(right_size: usize) -> Self {
        IncrementalMatcher {
            adjacency: Vec::new(),
            match_left: Vec::new(),
            match_right: vec![None; right_size],
            visited: vec![false; right_size],
        }
    }

    pub fn left_len(&self) -> usize {
        self.adjacency.len()
    }

    /// Tries to add a left vertex with the given right neighbours. Returns
    /// false, without changing anything, if no left-perfect matching exists
    /// afterwards.
    pub fn push(&mut self, neighbors: Vec<usize>) -> bool {
        let l = self.adjacency.len();
        self.adjacency.push(neighbors);
        self.match_left.push(usize::MAX);
        self.visited.iter_mut().for_each(|v| *v = false);
        if self.augment(l) {
            true
        } else {
            self.adjacency.pop();
            self.match_left.pop();
            false
        }
    }

    /// Drops left vertices until `len` remain.
    pub fn truncate(&mut self, len: usize) {
        while self.adjacency.len() > len {
            self.adjacency.pop();
            let r = self.match_left.pop().expect("every stored left vertex is matched");
            self.match_right[r] = None;
        }
    }

    /// Right partner of each left vertex, by left index.
    pub fn assignment(&self) -> &[usize] {
        &self.match_left
    }

    fn augment(&mut self, l: usize) -> bool {
        for i in 0..self.adjacency[l].len() {
            let r = self.adjacency[l][i];
            if self.visited[r] {
                continue;
            }
            self.visited[r] = true;
            let free = match self.match_right[r] {
                None => true,
                Some(other) => self.augment(other),
            };
            if free {
                self.match_left[l] = r;
                self.match_right[r] = Some(l);
                return true;
            }
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn incremental_matcher_tracks_hall_condition() {
        let mut m = IncrementalMatcher::new(2);
        assert!(m.push(vec![0]));
        assert!(m.push(vec![0, 1]));
        assert_eq!(m.assignment(), &[0, 1]);
        assert!(!m.push(vec![0, 1]));
        assert_eq!(m.left_len(), 2);
        m.truncate(1);
        assert!(m.push(vec![1]));
        assert_eq!(m.assignment(), &[0, 1]);
    }

    #[test]
    fn max_matching_examples() {
        let k22 = BipartiteGraph::new(2, vec![vec![0, 1], vec![0, 1]]);
        assert_eq!(max_matching(&k22).len(), 2);
        let shared = BipartiteGraph::new(1, vec![vec![0], vec![0], vec![0]]);
        assert_eq!(max_matching(&shared).len(), 1);
        let forced = BipartiteGraph::new(2, vec![vec![0], vec![0, 1]]);
        assert_eq!(max_matching(&forced), vec![(0, 0), (1, 1)]);
    }

    #[test]
    fn violator_examples() {
        let shared = BipartiteGraph::new(1, vec![vec![0], vec![0], vec![0]]);
        let res = perfect_or_violator(&shared);
        assert_eq!(res.kind, MatchingKind::Deficient);
        let s = res.violator.unwrap();
        assert_eq!(s.len(), 2);
        assert_eq!(shared.neighborhood(&s).len(), 1);

        let empty = BipartiteGraph::new(3, vec![]);
        let res = perfect_or_violator(&empty);
        assert!(res.is_perfect());
        assert!(res.pairs.is_empty());
    }

    #[test]
    fn isolated_left_vertex_is_its_own_violator() {
        let b = BipartiteGraph::new(2, vec![vec![0], vec![], vec![1]]);
        let res = perfect_or_violator(&b);
        assert_eq!(res.violator, Some(vec![1]));
    }

    #[test]
    fn from_fn_matches_explicit_lists() {
        let b = BipartiteGraph::from_fn(3, 3, |i, j| (i + j) % 2 == 0);
        assert_eq!(b, BipartiteGraph::new(3, vec![vec![0, 2], vec![1], vec![0, 2]]));
        assert!(has_left_perfect_matching(&b));
    }
}
