use thiserror::Error;

/// Errors raised by graph, hypergraph and search operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("invalid hypergraph: {0}")]
    InvalidHypergraph(String),
    #[error("invalid set system: {0}")]
    InvalidSetSystem(String),
    #[error("empty graph not classifiable")]
    EmptyGraph,
    #[error("isolated vertices not allowed")]
    IsolatedVertices,
    #[error("enumeration bound exceeded: {0}")]
    EnumerationBound(String),
    #[error("hyperedge too small")]
    HyperedgeTooSmall,
    #[error("edge already present")]
    EdgeAlreadyPresent,
    #[error("edge not present")]
    EdgeNotPresent,
    #[error("complement too small")]
    ComplementTooSmall,
    #[error("vertex out of range: {vertex} not in 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("parameters outside Lemma regime: need t >= 5 and n >= t (got n={n}, t={t})")]
    OutsideLemmaRegime { n: usize, t: usize },
    #[error("too many edges: {k} > C({n},2)")]
    TooManyEdges { n: usize, k: usize },
    #[error("m outside construction range: m={m}, n={n}")]
    MOutOfRange { n: usize, m: usize },
    #[error("ground set too small")]
    GroundSetTooSmall,
    #[error("n too small for witness: {kind} needs n >= {min}")]
    NTooSmallForWitness { kind: &'static str, min: usize },
    #[error("oracle bound exceeded")]
    OracleBound,
    #[error("parts of F have unequal size: |A|={left}, |B|={right}")]
    UnequalParts { left: usize, right: usize },
    #[error("removed edge is not an edge of the graph")]
    RemovedEdgeMissing,
    #[error("closure enumeration bound exceeded")]
    ClosureBound,
    #[error("host smaller than pattern")]
    HostSmallerThanPattern,
    #[error("cap exceeded: no saturated hypergraph with at most {cap} hyperedges")]
    CapExceeded { cap: usize },
    #[error("exhaustive bound exceeded")]
    ExhaustiveBound,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("io error: {0}")]
    Io(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
