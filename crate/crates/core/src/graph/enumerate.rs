//! Isomorph-free enumeration of small graphs.
//!
//! A graph on `k` vertices is encoded as a bitmask over the `C(k,2)` vertex
//! pairs taken in lexicographic order (`12` is bit 0, `13` bit 1, ...). The
//! canonical form is the least encoding over all `k!` relabelings.

use std::collections::BTreeSet;

use itertools::Itertools;

use super::Graph;
use crate::error::{Error, Result};

pub const ENUMERATION_MAX_N: usize = 7;

const CHUNK_BITS: usize = 7;
const CHUNK_COUNT: usize = 3;

fn pair_index(k: usize, u: usize, v: usize) -> usize {
    // pairs (a,b), a<b, in lexicographic order, 1-based labels
    debug_assert!(u < v && v <= k);
    (u - 1) * (2 * k - u) / 2 + (v - u - 1)
}

fn pairs(k: usize) -> Vec<(usize, usize)> {
    (1..=k).flat_map(|u| (u + 1..=k).map(move |v| (u, v))).collect()
}

/// Per-permutation lookup tables mapping 7-bit chunks of an encoding to the
/// permuted encoding.
struct Relabeler {
    tables: Vec<[[u32; 1 << CHUNK_BITS]; CHUNK_COUNT]>,
}

impl Relabeler {
    fn new(k: usize) -> Self {
        assert!(k <= ENUMERATION_MAX_N);
        let ps = pairs(k);
        let mut tables = Vec::new();
        for perm in (1..=k).permutations(k) {
            let image: Vec<usize> = ps
                .iter()
                .map(|&(u, v)| {
                    let (a, b) = (perm[u - 1], perm[v - 1]);
                    pair_index(k, a.min(b), a.max(b))
                })
                .collect();
            let mut t = [[0u32; 1 << CHUNK_BITS]; CHUNK_COUNT];
            for (c, table) in t.iter_mut().enumerate() {
                for (val, slot) in table.iter_mut().enumerate() {
                    let mut out = 0u32;
                    for bit in 0..CHUNK_BITS {
                        let idx = c * CHUNK_BITS + bit;
                        if val >> bit & 1 == 1 && idx < image.len() {
                            out |= 1 << image[idx];
                        }
                    }
                    *slot = out;
                }
            }
            tables.push(t);
        }
        Relabeler { tables }
    }

    fn canonical(&self, mask: u32) -> u32 {
        let chunks = [
            (mask & 0x7f) as usize,
            (mask >> 7 & 0x7f) as usize,
            (mask >> 14 & 0x7f) as usize,
        ];
        self.tables
            .iter()
            .map(|t| t[0][chunks[0]] | t[1][chunks[1]] | t[2][chunks[2]])
            .min()
            .expect("at least one permutation")
    }
}

fn encode(g: &Graph) -> u32 {
    g.edges()
        .iter()
        .fold(0, |acc, e| acc | 1 << pair_index(g.n(), e.u(), e.v()))
}

fn decode(k: usize, mask: u32) -> Graph {
    let edges = pairs(k)
        .into_iter()
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .map(|(_, p)| p);
    Graph::new(k, edges).expect("decoded pairs are simple")
}

/// Least pair-encoding of `g` over all relabelings of its ground set.
pub fn canonical_encoding(g: &Graph) -> Result<u32> {
    if g.n() > ENUMERATION_MAX_N {
        return Err(Error::EnumerationBound(format!(
            "canonical form needs n <= {ENUMERATION_MAX_N}, got {}",
            g.n()
        )));
    }
    Ok(Relabeler::new(g.n()).canonical(encode(g)))
}

/// Brute-force isomorphism test over all relabelings.
pub fn are_isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.n() != b.n() || a.edge_count() != b.edge_count() {
        return false;
    }
    let mut da = a.degrees();
    let mut db = b.degrees();
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return false;
    }
    (1..=a.n())
        .permutations(a.n())
        .any(|p| a.permuted(&p) == *b)
}

/// One representative per isomorphism class of graphs without isolated
/// vertices, `2 <= |V| <= n_max`, `1 <= |E| <= e_max`, sorted by
/// `(|V|, |E|, encoding)`. Each representative is the canonical relabeling.
pub fn enumerate_graphs(n_max: usize, e_max: usize) -> Result<Vec<Graph>> {
    if n_max > ENUMERATION_MAX_N {
        return Err(Error::EnumerationBound(format!(
            "n_max must be <= {ENUMERATION_MAX_N}, got {n_max}"
        )));
    }
    let mut out = Vec::new();
    for k in 2..=n_max {
        let relabel = Relabeler::new(k);
        let slots = k * (k - 1) / 2;
        let full_support = (1u64 << k) - 1;
        // Orderly growth by edge count: every class with j+1 edges arises from
        // some class with j edges plus one edge.
        let mut level: BTreeSet<u32> = BTreeSet::from([0]);
        for _ in 1..=e_max.min(slots) {
            let mut next = BTreeSet::new();
            for &mask in &level {
                for bit in 0..slots {
                    if mask >> bit & 1 == 0 {
                        next.insert(relabel.canonical(mask | 1 << bit));
                    }
                }
            }
            for &mask in &next {
                let g = decode(k, mask);
                if g.support().bits() == full_support {
                    out.push(g);
                }
            }
            level = next;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Every labeled graph without isolated vertices on `2..=n_max` vertices,
    /// deduplicated by pairwise isomorphism tests.
    fn brute_force_classes(n_max: usize, e_max: usize) -> Vec<Graph> {
        let mut reps: Vec<Graph> = Vec::new();
        for k in 2..=n_max {
            let ps = pairs(k);
            for mask in 1u32..1 << ps.len() {
                if mask.count_ones() as usize > e_max {
                    continue;
                }
                let g = decode(k, mask);
                if g.has_isolated_vertices() {
                    continue;
                }
                if !reps.iter().any(|r| are_isomorphic(r, &g)) {
                    reps.push(g);
                }
            }
        }
        reps
    }

    #[test]
    fn pair_index_is_lexicographic() {
        for k in 2..=7 {
            for (i, (u, v)) in pairs(k).into_iter().enumerate() {
                assert_eq!(pair_index(k, u, v), i);
            }
        }
    }

    #[test]
    fn small_counts_match_brute_force() {
        assert_eq!(brute_force_classes(2, 1).len(), 1);
        assert_eq!(brute_force_classes(3, 3).len(), 3);
        assert_eq!(brute_force_classes(4, 6).len(), 10);

        let k2 = enumerate_graphs(2, 1).unwrap();
        assert_eq!(k2, vec![Graph::complete(2).unwrap()]);
        let three = enumerate_graphs(3, 3).unwrap();
        assert_eq!(three.len(), 3);
        assert_eq!(three[1], Graph::new(3, [(1, 2), (1, 3)]).unwrap());
        assert_eq!(three[2], Graph::complete(3).unwrap());
        assert_eq!(enumerate_graphs(4, 6).unwrap().len(), 10);
    }

    #[test]
    fn classes_agree_with_brute_force_up_to_five_vertices() {
        for (n_max, e_max) in [(4, 3), (4, 6), (5, 4), (5, 10)] {
            let fast = enumerate_graphs(n_max, e_max).unwrap();
            let slow = brute_force_classes(n_max, e_max);
            assert_eq!(fast.len(), slow.len(), "n_max={n_max} e_max={e_max}");
            for g in &slow {
                assert_eq!(fast.iter().filter(|f| are_isomorphic(f, g)).count(), 1);
            }
        }
    }

    #[test]
    fn output_order_and_canonicity() {
        let gs = enumerate_graphs(5, 10).unwrap();
        let keys: Vec<_> = gs.iter().map(|g| (g.n(), g.edge_count(), encode(g))).collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
        for g in &gs {
            assert_eq!(canonical_encoding(g).unwrap(), encode(g));
        }
    }

    #[test]
    fn known_totals() {
        // graphs without isolated vertices on exactly k vertices: 1, 2, 7, 23, 122, 888
        let all = enumerate_graphs(7, 21).unwrap();
        let per_k: Vec<usize> = (2..=7).map(|k| all.iter().filter(|g| g.n() == k).count()).collect();
        assert_eq!(per_k, vec![1, 2, 7, 23, 122, 888]);
    }

    #[test]
    fn bound_is_enforced() {
        assert!(matches!(enumerate_graphs(8, 3), Err(Error::EnumerationBound(_))));
    }
}
