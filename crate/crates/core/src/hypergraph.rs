//! Non-uniform hypergraphs and set systems on `{1..n}`.
//!
//! A [`Hypergraph`] keeps its hyperedges in descending order (larger sets
//! first, ties broken by reverse lexicographic order). A [`SetSystem`] keeps
//! its members ascending (smaller sets first, ties lexicographic). The two
//! orders are mirror images, so complementing a set system member-wise yields
//! a hypergraph whose hyperedges appear in the same sequence as the members
//! they came from.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::vertex_set::{VertexSet, MAX_GROUND};

/// Ground sets above this size are refused by operations that enumerate all
/// subsets.
pub const ABSENT_EDGE_MAX_N: usize = 20;

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "HypergraphRepr", into = "HypergraphRepr")]
pub struct Hypergraph {
    n: usize,
    hyperedges: Vec<VertexSet>,
}

#[derive(Serialize, Deserialize)]
struct HypergraphRepr {
    n: usize,
    hyperedges: Vec<VertexSet>,
}

impl TryFrom<HypergraphRepr> for Hypergraph {
    type Error = Error;

    fn try_from(r: HypergraphRepr) -> Result<Self> {
        Hypergraph::from_sets(r.n, r.hyperedges)
    }
}

impl From<Hypergraph> for HypergraphRepr {
    fn from(h: Hypergraph) -> Self {
        HypergraphRepr {
            n: h.n,
            hyperedges: h.hyperedges,
        }
    }
}

fn check_ground(n: usize) -> std::result::Result<(), String> {
    if n == 0 || n > MAX_GROUND {
        Err(format!("n must be in 1..={MAX_GROUND}, got {n}"))
    } else {
        Ok(())
    }
}

impl Hypergraph {
    /// Builds a hypergraph from vertex lists. Order of the input is irrelevant.
    pub fn new<I, E>(n: usize, hyperedges: I) -> Result<Self>
    where
        I: IntoIterator<Item = E>,
        E: IntoIterator<Item = usize>,
    {
        check_ground(n).map_err(Error::InvalidHypergraph)?;
        let mut sets = Vec::new();
        for e in hyperedges {
            let vs: Vec<usize> = e.into_iter().collect();
            let set = VertexSet::try_from_vertices(vs.iter().copied())
                .filter(|s| s.len() == vs.len())
                .ok_or_else(|| Error::InvalidHypergraph(format!("bad vertex list {vs:?}")))?;
            sets.push(set);
        }
        Self::from_sets(n, sets)
    }

    pub fn from_sets<I: IntoIterator<Item = VertexSet>>(n: usize, sets: I) -> Result<Self> {
        check_ground(n).map_err(Error::InvalidHypergraph)?;
        let full = VertexSet::full(n);
        let mut hyperedges: Vec<VertexSet> = sets.into_iter().collect();
        for &e in &hyperedges {
            if !e.is_subset(full) {
                return Err(Error::InvalidHypergraph(format!("{e} not inside 1..={n}")));
            }
            if e.len() < 2 {
                return Err(Error::HyperedgeTooSmall);
            }
        }
        hyperedges.sort_by(|a, b| a.cmp_descending(*b));
        if hyperedges.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidHypergraph("repeated hyperedge".into()));
        }
        Ok(Hypergraph { n, hyperedges })
    }

    pub fn empty(n: usize) -> Result<Self> {
        Self::from_sets(n, [])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn hyperedges(&self) -> &[VertexSet] {
        &self.hyperedges
    }

    pub fn edge_count(&self) -> usize {
        self.hyperedges.len()
    }

    pub fn contains_edge(&self, e: VertexSet) -> bool {
        self.position(e).is_some()
    }

    pub fn position(&self, e: VertexSet) -> Option<usize> {
        self.hyperedges
            .binary_search_by(|x| x.cmp_descending(e))
            .ok()
    }

    /// `self + e`: a new hypergraph with `e` inserted in canonical position.
    pub fn add_edge(&self, e: VertexSet) -> Result<Self> {
        if e.len() < 2 {
            return Err(Error::HyperedgeTooSmall);
        }
        if !e.is_subset(VertexSet::full(self.n)) {
            return Err(Error::InvalidHypergraph(format!("{e} not inside 1..={}", self.n)));
        }
        match self.hyperedges.binary_search_by(|x| x.cmp_descending(e)) {
            Ok(_) => Err(Error::EdgeAlreadyPresent),
            Err(pos) => {
                let mut hyperedges = self.hyperedges.clone();
                hyperedges.insert(pos, e);
                Ok(Hypergraph { n: self.n, hyperedges })
            }
        }
    }

    /// `self - e`.
    pub fn remove_edge(&self, e: VertexSet) -> Result<Self> {
        let pos = self.position(e).ok_or(Error::EdgeNotPresent)?;
        let mut hyperedges = self.hyperedges.clone();
        hyperedges.remove(pos);
        Ok(Hypergraph { n: self.n, hyperedges })
    }

    /// Number of hyperedges containing `v`.
    pub fn degree(&self, v: usize) -> Result<usize> {
        if !(1..=self.n).contains(&v) {
            return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
        }
        Ok(self.hyperedges.iter().filter(|e| e.contains(v)).count())
    }

    /// Every subset of size at least two that is not a hyperedge, in set-system
    /// order (ascending size, then lexicographic).
    pub fn absent_edges(&self) -> Result<Vec<VertexSet>> {
        if self.n > ABSENT_EDGE_MAX_N {
            return Err(Error::EnumerationBound(format!(
                "absent edges need n <= {ABSENT_EDGE_MAX_N}, got {}",
                self.n
            )));
        }
        let mut out: Vec<VertexSet> = (0u64..1 << self.n)
            .map(VertexSet::from_bits)
            .filter(|s| s.len() >= 2 && !self.contains_edge(*s))
            .collect();
        out.sort_by(|a, b| a.cmp_ascending(*b));
        Ok(out)
    }

    /// Member-wise complement back into a set system.
    pub fn complement_system(&self) -> SetSystem {
        SetSystem::from_sets(self.n, self.hyperedges.iter().map(|e| e.complement(self.n)))
            .expect("complements of distinct sets are distinct")
    }
}

impl fmt::Debug for Hypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Hypergraph(n={}, {:?})", self.n, self.hyperedges)
    }
}

/// `([4], {{1,2,3,4}, {2,3,4}})`
impl fmt::Display for Hypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "([{}], {{", self.n)?;
        for (i, e) in self.hyperedges.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("})")
    }
}

/// A family of distinct subsets of `{1..n}`; the empty set and singletons are
/// allowed.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "SetSystemRepr", into = "SetSystemRepr")]
pub struct SetSystem {
    n: usize,
    members: Vec<VertexSet>,
}

#[derive(Serialize, Deserialize)]
struct SetSystemRepr {
    n: usize,
    members: Vec<VertexSet>,
}

impl TryFrom<SetSystemRepr> for SetSystem {
    type Error = Error;

    fn try_from(r: SetSystemRepr) -> Result<Self> {
        SetSystem::from_sets(r.n, r.members)
    }
}

impl From<SetSystem> for SetSystemRepr {
    fn from(s: SetSystem) -> Self {
        SetSystemRepr {
            n: s.n,
            members: s.members,
        }
    }
}

impl SetSystem {
    pub fn new<I, E>(n: usize, members: I) -> Result<Self>
    where
        I: IntoIterator<Item = E>,
        E: IntoIterator<Item = usize>,
    {
        check_ground(n).map_err(Error::InvalidSetSystem)?;
        let mut sets = Vec::new();
        for e in members {
            let vs: Vec<usize> = e.into_iter().collect();
            let set = VertexSet::try_from_vertices(vs.iter().copied())
                .filter(|s| s.len() == vs.len())
                .ok_or_else(|| Error::InvalidSetSystem(format!("bad vertex list {vs:?}")))?;
            sets.push(set);
        }
        Self::from_sets(n, sets)
    }

    pub fn from_sets<I: IntoIterator<Item = VertexSet>>(n: usize, sets: I) -> Result<Self> {
        check_ground(n).map_err(Error::InvalidSetSystem)?;
        let full = VertexSet::full(n);
        let mut members: Vec<VertexSet> = sets.into_iter().collect();
        if let Some(e) = members.iter().find(|e| !e.is_subset(full)) {
            return Err(Error::InvalidSetSystem(format!("{e} not inside 1..={n}")));
        }
        members.sort_by(|a, b| a.cmp_ascending(*b));
        if members.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidSetSystem("repeated member".into()));
        }
        Ok(SetSystem { n, members })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn members(&self) -> &[VertexSet] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

impl fmt::Debug for SetSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SetSystem(n={}, {:?})", self.n, self.members)
    }
}

/// `{{}, {1}, {2}}`
impl fmt::Display for SetSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, e) in self.members.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("}")
    }
}

/// `{ {1..n} \ E : E in s }`; every complement must keep at least two vertices.
pub fn complement_system(s: &SetSystem) -> Result<Hypergraph> {
    let n = s.n();
    if s.members().iter().any(|e| e.len() + 2 > n) {
        return Err(Error::ComplementTooSmall);
    }
    Hypergraph::from_sets(n, s.members().iter().map(|e| e.complement(n)))
}
