//! Berge-G containment, saturation checks and exact saturation numbers for
//! non-uniform hypergraphs.
//!
//! A hypergraph is a *Berge copy* of a graph `G` when its hyperedges can be
//! matched one-to-one with the edges of `G` so that every edge lies inside its
//! hyperedge. A hypergraph is *Berge-G saturated* when it has no Berge copy of
//! `G` but gains one after adding any missing set of at least two vertices.
//!
//! The crate provides
//!
//! * [`graph`]: labeled patterns, star/cover classification and isomorph-free
//!   enumeration of small graphs,
//! * [`hypergraph`]: hosts and set systems over `{1..n}` backed by bitmasks,
//! * [`matching`]: bipartite matching with Hall-violator certificates,
//! * [`constructions`]: the extremal saturated hypergraphs,
//! * [`berge`]: containment search, witnesses and a brute-force oracle,
//! * [`saturation`]: saturation reports and the exhaustive solver,
//! * [`io`] and [`cli`]: file formats and the `bergesat` command.
//!
//! See the `examples/` directory for one runnable program per capability.

pub mod berge;
pub mod cli;
pub mod constructions;
pub mod error;
pub mod graph;
pub mod hypergraph;
pub mod io;
pub mod matching;
pub mod saturation;
pub mod vertex_set;

pub use berge::{
    certificate_condition_iii, certificate_to_witness, contains_berge, contains_berge_oracle,
    validate_witness, BergeWitness,
};
pub use constructions::{
    almost_regular_edges, construct_hnm, construct_hprime, construct_ht, special_saturated,
    SpecialKind,
};
pub use error::{Error, Result};
pub use graph::{Edge, Graph, GraphClass};
pub use hypergraph::{complement_system, Hypergraph, SetSystem};
pub use matching::{max_matching, perfect_or_violator, BipartiteGraph, MatchingKind, MatchingResult};
pub use saturation::{
    is_saturated, lemma_lower_bound_check, sat_number, saturation_report, theorem_check, SatResult,
    SaturationReport,
};
pub use vertex_set::VertexSet;
