//! Saturation checks and exact saturation numbers.
//!
//! A hypergraph `H` is Berge-`G` saturated when it contains no Berge copy of
//! `G` but `H + e` does for every absent `e` with `|e| >= 2`. The solver finds
//! the fewest hyperedges such an `H` can have on a fixed ground set by trying
//! every hyperedge family of each size, one representative per isomorphism
//! class.

use std::num::NonZeroUsize;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::berge::{contains_berge, BergeWitness};
use crate::constructions::{construct_hnm, construct_ht, special_saturated, SpecialKind};
use crate::error::{Error, Result};
use crate::graph::{classify_for_theorem, enumerate_graphs, is_star, predicted_sat, Graph, GraphClass};
use crate::hypergraph::Hypergraph;
use crate::vertex_set::VertexSet;

/// Version tag carried by every JSON report.
pub const SCHEMA_VERSION: u32 = 1;
pub const REPORT_MAX_N: usize = 12;
pub const SOLVER_MAX_N: usize = 6;
pub const THEOREM_MAX_N: usize = 5;
pub const THEOREM_MAX_E: usize = 6;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeWitness {
    pub edge: VertexSet,
    pub witness: BergeWitness,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SaturationReport {
    pub schema_version: u32,
    pub is_free: bool,
    pub is_saturated: bool,
    pub absent_edge_count: usize,
    /// Absent sets whose addition still leaves the host Berge-free.
    pub failing_edges: Vec<VertexSet>,
    /// Witness inside `h + e` for each absent `e` that closes a copy. Indices
    /// refer to the hyperedge list of `h + e`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_per_edge: Option<Vec<EdgeWitness>>,
}

fn check_report_args(g: &Graph, h: &Hypergraph) -> Result<()> {
    if g.has_isolated_vertices() {
        return Err(Error::IsolatedVertices);
    }
    if h.n() < g.n() {
        return Err(Error::HostSmallerThanPattern);
    }
    if h.n() > REPORT_MAX_N {
        return Err(Error::ClosureBound);
    }
    Ok(())
}

/// Full report: freeness plus the closure verdict for every absent set,
/// with per-edge witnesses when `with_witnesses` is set.
pub fn saturation_report_with(g: &Graph, h: &Hypergraph, with_witnesses: bool) -> Result<SaturationReport> {
    check_report_args(g, h)?;
    let is_free = contains_berge(g, h)?.is_none();
    let absent = h.absent_edges()?;
    let mut failing_edges = Vec::new();
    let mut witnesses = Vec::new();
    for &e in &absent {
        match contains_berge(g, &h.add_edge(e)?)? {
            Some(witness) => {
                if with_witnesses {
                    witnesses.push(EdgeWitness { edge: e, witness });
                }
            }
            None => failing_edges.push(e),
        }
    }
    Ok(SaturationReport {
        schema_version: SCHEMA_VERSION,
        is_free,
        is_saturated: is_free && failing_edges.is_empty(),
        absent_edge_count: absent.len(),
        failing_edges,
        witness_per_edge: with_witnesses.then_some(witnesses),
    })
}

pub fn saturation_report(g: &Graph, h: &Hypergraph) -> Result<SaturationReport> {
    saturation_report_with(g, h, true)
}

/// Yes/no saturation test that stops at the first failure.
pub fn is_saturated(g: &Graph, h: &Hypergraph) -> Result<bool> {
    check_report_args(g, h)?;
    saturated_unchecked(g, h)
}

fn saturated_unchecked(g: &Graph, h: &Hypergraph) -> Result<bool> {
    // fewer hyperedges than pattern edges: free by pigeonhole
    if h.edge_count() >= g.edge_count() && contains_berge(g, h)?.is_some() {
        return Ok(false);
    }
    for e in h.absent_edges()? {
        if contains_berge(g, &h.add_edge(e)?)?.is_none() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// All candidate hyperedges on `{1..n}` in canonical hypergraph order,
/// together with how each vertex permutation acts on their indices.
///
/// A family is written as the ascending list of its hyperedge indices. It is
/// processed only if no relabeling produces a lexicographically smaller
/// list, which keeps exactly one family per isomorphism class.
struct CandidateSpace {
    n: usize,
    pool: Vec<VertexSet>,
    perm_index: Vec<Vec<u16>>,
}

impl CandidateSpace {
    fn new(n: usize) -> Self {
        let mut pool: Vec<VertexSet> = (0u64..1 << n)
            .map(VertexSet::from_bits)
            .filter(|s| s.len() >= 2)
            .collect();
        pool.sort_by(|a, b| a.cmp_descending(*b));
        let mut index_of = vec![u16::MAX; 1 << n];
        for (i, s) in pool.iter().enumerate() {
            index_of[s.bits() as usize] = i as u16;
        }
        let perm_index = (1..=n)
            .permutations(n)
            .filter(|p| !p.iter().copied().eq(1..=n))
            .map(|p| {
                pool.iter()
                    .map(|s| index_of[s.permuted(&p).bits() as usize])
                    .collect()
            })
            .collect();
        CandidateSpace { n, pool, perm_index }
    }

    fn is_canonical(&self, family: &[usize], scratch: &mut Vec<u16>) -> bool {
        for map in &self.perm_index {
            scratch.clear();
            scratch.extend(family.iter().map(|&i| map[i]));
            scratch.sort_unstable();
            if scratch.iter().map(|&x| x as usize).lt(family.iter().copied()) {
                return false;
            }
        }
        true
    }

    fn hypergraph(&self, family: &[usize]) -> Hypergraph {
        Hypergraph::from_sets(self.n, family.iter().map(|&i| self.pool[i]))
            .expect("pool members are distinct sets of size >= 2")
    }
}

/// Candidate counters from an exhaustive search.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchStats {
    /// Families enumerated, before isomorph rejection.
    pub candidates_examined: u64,
    /// Families skipped because a relabeling is smaller.
    pub isomorph_rejected: u64,
    /// Families put through the saturation test.
    pub saturation_tests: u64,
}

/// Canonical families gathered before each acceptance round. Fixed, so the
/// search statistics do not depend on the thread count.
const BATCH_SIZE: usize = 1024;

/// Runs `accept` on canonical families of size `m` in enumeration order and
/// returns the first accepted one. With several threads, each batch is split
/// into contiguous slices and the earliest acceptance wins, so the answer
/// never depends on the thread count.
fn first_accepted<F>(
    space: &CandidateSpace,
    m: usize,
    threads: NonZeroUsize,
    stats: &mut SearchStats,
    accept: F,
) -> Result<Option<Vec<usize>>>
where
    F: Fn(&Hypergraph) -> Result<bool> + Sync,
{
    let threads = threads.get();
    let mut scratch = Vec::new();
    let mut batch: Vec<Vec<usize>> = Vec::with_capacity(BATCH_SIZE);
    let mut combos = (0..space.pool.len()).combinations(m);
    loop {
        batch.clear();
        for family in combos.by_ref() {
            stats.candidates_examined += 1;
            if space.is_canonical(&family, &mut scratch) {
                batch.push(family);
                if batch.len() == BATCH_SIZE {
                    break;
                }
            } else {
                stats.isomorph_rejected += 1;
            }
        }
        if batch.is_empty() {
            return Ok(None);
        }
        let found = if threads == 1 {
            scan(space, &batch, &accept)?
        } else {
            let chunk = batch.len().div_ceil(threads);
            let results: Vec<Result<Option<usize>>> = std::thread::scope(|scope| {
                let handles: Vec<_> = batch
                    .chunks(chunk)
                    .enumerate()
                    .map(|(ci, slice)| {
                        let accept = &accept;
                        scope.spawn(move || Ok(scan(space, slice, accept)?.map(|i| ci * chunk + i)))
                    })
                    .collect();
                handles
                    .into_iter()
                    .map(|h| h.join().expect("worker panicked"))
                    .collect()
            });
            // slices are contiguous, so the first hit in slice order is the
            // earliest overall
            results.into_iter().find_map(|r| r.transpose()).transpose()?
        };
        match found {
            Some(i) => {
                // count only the tests a sequential scan would have made
                stats.saturation_tests += i as u64 + 1;
                return Ok(Some(batch[i].clone()));
            }
            None => stats.saturation_tests += batch.len() as u64,
        }
    }
}

fn scan<F>(space: &CandidateSpace, slice: &[Vec<usize>], accept: &F) -> Result<Option<usize>>
where
    F: Fn(&Hypergraph) -> Result<bool>,
{
    for (i, family) in slice.iter().enumerate() {
        if accept(&space.hypergraph(family))? {
            return Ok(Some(i));
        }
    }
    Ok(None)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SatResult {
    pub schema_version: u32,
    pub n: usize,
    pub value: usize,
    pub witness_hypergraph: Hypergraph,
    pub search_stats: SearchStats,
}

fn threads_one() -> NonZeroUsize {
    NonZeroUsize::new(1).expect("1 is non-zero")
}

/// Default search cap: one above the pattern's edge count.
pub fn default_cap(g: &Graph) -> usize {
    g.edge_count() + 1
}

/// Exact saturation number on `{1..n}` for `n <= 6`, single-threaded.
pub fn sat_number(g: &Graph, n: usize, m_cap: usize) -> Result<SatResult> {
    sat_number_with_threads(g, n, m_cap, threads_one())
}

/// Exact saturation number: the least `m <= m_cap` such that some family of
/// `m` hyperedges on `{1..n}` is saturated. Sizes are tried upwards from
/// `|E(g)| - 1`, below which no family can be saturated.
pub fn sat_number_with_threads(
    g: &Graph,
    n: usize,
    m_cap: usize,
    threads: NonZeroUsize,
) -> Result<SatResult> {
    if g.has_isolated_vertices() {
        return Err(Error::IsolatedVertices);
    }
    if n < g.n() {
        return Err(Error::HostSmallerThanPattern);
    }
    if n > SOLVER_MAX_N {
        return Err(Error::ExhaustiveBound);
    }
    let space = CandidateSpace::new(n);
    let mut stats = SearchStats::default();
    let start = g.edge_count().saturating_sub(1);
    for m in start..=m_cap.min(space.pool.len()) {
        let found = first_accepted(&space, m, threads, &mut stats, |h| saturated_unchecked(g, h))?;
        if let Some(family) = found {
            return Ok(SatResult {
                schema_version: SCHEMA_VERSION,
                n,
                value: m,
                witness_hypergraph: space.hypergraph(&family),
                search_stats: stats,
            });
        }
    }
    Err(Error::CapExceeded { cap: m_cap })
}

/// The known saturated hypergraph for `g` on `{1..n}` whose size matches the closed form.
pub fn theorem_construction(g: &Graph, n: usize) -> Result<(String, Hypergraph)> {
    let m = g.edge_count();
    match classify_for_theorem(g)? {
        GraphClass::StarWithAtLeast4Edges { .. } => {
            let t = m + 1;
            Ok((format!("H_{t}({n})"), construct_ht(n, t)?))
        }
        GraphClass::Other => {
            let special = match (is_star(g)?, m) {
                (Some(_), 1) => Some(SpecialKind::S2),
                (Some(_), 2) => Some(SpecialKind::S3),
                (Some(_), 3) => Some(SpecialKind::S4),
                _ => None,
            };
            match special {
                Some(kind) => Ok((format!("special {kind}"), special_saturated(kind, n)?)),
                None => Ok((format!("H({n},{})", m - 1), construct_hnm(n, m - 1)?)),
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremRow {
    pub graph: Graph,
    pub class: GraphClass,
    pub predicted: usize,
    pub computed: usize,
    pub agree: bool,
    pub construction: String,
    pub construction_saturated: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremTable {
    pub schema_version: u32,
    pub n_max: usize,
    pub e_max: usize,
    pub rows: Vec<TheoremRow>,
    pub all_agree: bool,
}

pub fn theorem_check(n_max: usize, e_max: usize) -> Result<TheoremTable> {
    theorem_check_with_threads(n_max, e_max, threads_one())
}

/// For every isomorphism class from [`enumerate_graphs`], compares the
/// exhaustive saturation number at `n = |V(g)|` with the predicted value and
/// checks that the prescribed construction is saturated.
pub fn theorem_check_with_threads(n_max: usize, e_max: usize, threads: NonZeroUsize) -> Result<TheoremTable> {
    if n_max > THEOREM_MAX_N || e_max > THEOREM_MAX_E {
        return Err(Error::ExhaustiveBound);
    }
    let mut rows = Vec::new();
    for g in enumerate_graphs(n_max, e_max)? {
        let n = g.n();
        let predicted = predicted_sat(&g)?;
        let computed = sat_number_with_threads(&g, n, default_cap(&g), threads)?.value;
        let (construction, h) = theorem_construction(&g, n)?;
        let construction_saturated = h.edge_count() == predicted && is_saturated(&g, &h)?;
        rows.push(TheoremRow {
            class: classify_for_theorem(&g)?,
            graph: g,
            predicted,
            computed,
            agree: predicted == computed,
            construction,
            construction_saturated,
        });
    }
    let all_agree = rows.iter().all(|r| r.agree && r.construction_saturated);
    Ok(TheoremTable {
        schema_version: SCHEMA_VERSION,
        n_max,
        e_max,
        rows,
        all_agree,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaReport {
    pub schema_version: u32,
    pub t: usize,
    pub n: usize,
    /// True iff no family of `t - 2` hyperedges is saturated.
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Hypergraph>,
    pub search_stats: SearchStats,
}

/// Exhaustively confirms that no hypergraph on `{1..n}` with `t - 2`
/// hyperedges is saturated for the star with `t - 1` edges.
pub fn lemma_lower_bound_report(t: usize, n: usize, threads: NonZeroUsize) -> Result<LemmaReport> {
    if t != 5 || !(5..=6).contains(&n) {
        return Err(Error::ExhaustiveBound);
    }
    let star = Graph::star(t)?;
    let space = CandidateSpace::new(n);
    let mut stats = SearchStats::default();
    let found = first_accepted(&space, t - 2, threads, &mut stats, |h| saturated_unchecked(&star, h))?;
    Ok(LemmaReport {
        schema_version: SCHEMA_VERSION,
        t,
        n,
        holds: found.is_none(),
        counterexample: found.map(|f| space.hypergraph(&f)),
        search_stats: stats,
    })
}

pub fn lemma_lower_bound_check(t: usize, n: usize) -> Result<bool> {
    Ok(lemma_lower_bound_report(t, n, threads_one())?.holds)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::construct_ht;

    #[test]
    fn report_examples() {
        let s5 = Graph::star(5).unwrap();
        let r = saturation_report(&s5, &construct_ht(5, 5).unwrap()).unwrap();
        assert!(r.is_free && r.is_saturated);

        let p4 = Graph::path(4).unwrap();
        let h = construct_hnm(4, 2).unwrap();
        let r = saturation_report(&p4, &h).unwrap();
        assert!(r.is_saturated);
        assert_eq!(r.absent_edge_count, 9);
        for ew in r.witness_per_edge.as_ref().unwrap() {
            let plus = h.add_edge(ew.edge).unwrap();
            assert!(crate::berge::validate_witness(&p4, &plus, &ew.witness));
        }

        let only_full = Hypergraph::new(4, [vec![1, 2, 3, 4]]).unwrap();
        let r = saturation_report(&p4, &only_full).unwrap();
        assert!(r.is_free);
        assert!(!r.is_saturated);
        assert!(r.failing_edges.contains(&VertexSet::pair(1, 2)));
        assert!(!is_saturated(&p4, &only_full).unwrap());
    }

    #[test]
    fn report_errors() {
        let p4 = Graph::path(4).unwrap();
        let small = Hypergraph::empty(3).unwrap();
        assert_eq!(saturation_report(&p4, &small), Err(Error::HostSmallerThanPattern));
        let big = Hypergraph::empty(13).unwrap();
        assert_eq!(saturation_report(&p4, &big), Err(Error::ClosureBound));
        let iso = Graph::new(3, [(1, 2)]).unwrap();
        assert_eq!(saturation_report(&iso, &small), Err(Error::IsolatedVertices));
    }

    #[test]
    fn canonical_families_cover_every_class_once() {
        // Brute force on n = 4, m = 2: group all families by relabeling.
        let space = CandidateSpace::new(4);
        let mut scratch = Vec::new();
        let canon: Vec<Vec<usize>> = (0..space.pool.len())
            .combinations(2)
            .filter(|f| space.is_canonical(f, &mut scratch))
            .collect();
        let mut classes: Vec<Vec<Vec<usize>>> = Vec::new();
        for f in (0..space.pool.len()).combinations(2) {
            let orbit: Vec<Vec<usize>> = space
                .perm_index
                .iter()
                .map(|map| f.iter().map(|&i| map[i] as usize).sorted().collect())
                .chain(std::iter::once(f.clone()))
                .collect();
            if !classes.iter().any(|c| c.contains(&f)) {
                classes.push(orbit);
            }
        }
        assert_eq!(canon.len(), classes.len());
        for c in &classes {
            assert_eq!(canon.iter().filter(|f| c.contains(f)).count(), 1);
        }
    }

    #[test]
    fn sat_number_examples() {
        let k3 = Graph::complete(3).unwrap();
        let r = sat_number(&k3, 3, default_cap(&k3)).unwrap();
        assert_eq!(r.value, 2);
        assert_eq!(r.witness_hypergraph, Hypergraph::new(3, [vec![1, 2, 3], vec![2, 3]]).unwrap());

        let p4 = Graph::path(4).unwrap();
        assert_eq!(sat_number(&p4, 4, 4).unwrap().value, 2);

        let k2 = Graph::complete(2).unwrap();
        let r = sat_number(&k2, 2, 2).unwrap();
        assert_eq!(r.value, 0);
        assert_eq!(r.witness_hypergraph.edge_count(), 0);
    }

    #[test]
    fn sat_number_cap_and_bounds() {
        let s5 = Graph::star(5).unwrap();
        assert_eq!(sat_number(&s5, 5, 3), Err(Error::CapExceeded { cap: 3 }));
        assert_eq!(sat_number(&s5, 7, 5), Err(Error::ExhaustiveBound));
        assert_eq!(sat_number(&s5, 4, 5), Err(Error::HostSmallerThanPattern));
    }

    #[test]
    fn thread_count_does_not_change_the_answer() {
        let g = Graph::new(4, [(1, 2), (2, 3), (3, 4), (1, 4)]).unwrap();
        let one = sat_number(&g, 4, 5).unwrap();
        let four = sat_number_with_threads(&g, 4, 5, NonZeroUsize::new(4).unwrap()).unwrap();
        assert_eq!(one.value, four.value);
        assert_eq!(one.witness_hypergraph, four.witness_hypergraph);
        assert_eq!(one.search_stats, four.search_stats);
    }

    #[test]
    fn theorem_small_sweep() {
        let table = theorem_check(3, 3).unwrap();
        let computed: Vec<usize> = table.rows.iter().map(|r| r.computed).collect();
        assert_eq!(computed, vec![0, 1, 2]);
        assert!(table.all_agree);
    }

    #[test]
    fn lemma_bounds() {
        assert_eq!(lemma_lower_bound_check(6, 6), Err(Error::ExhaustiveBound));
        assert_eq!(lemma_lower_bound_check(5, 7), Err(Error::ExhaustiveBound));
    }
}
