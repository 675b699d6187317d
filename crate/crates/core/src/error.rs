use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Errors shared by the whole crate. Every precondition violation surfaces as
/// one of these; predicates never report `false` for malformed input.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("loop at vertex {vertex}: graphs are simple")]
    LoopEdge { vertex: usize },

    #[error("duplicate edge ({u}, {v}): graphs are simple")]
    DuplicateEdge { u: usize, v: usize },

    #[error("edge index {index} out of range for a graph with {m} edges")]
    EdgeIndexOutOfRange { index: usize, m: usize },

    #[error("({u}, {v}) is not an edge of this graph")]
    NotAnEdge { u: usize, v: usize },

    #[error("edge set was built for a graph with {set_m} edges, not {graph_m}")]
    ForeignEdgeSet { set_m: usize, graph_m: usize },

    #[error("operation requires a connected graph")]
    DisconnectedGraph,

    #[error("operation requires at least two vertices")]
    TooFewVertices,

    #[error("operation requires at least one edge")]
    NoEdges,

    #[error("no edge cover exists: vertex {vertex} is isolated")]
    IsolatedVertex { vertex: usize },

    #[error("{op}: graph has {m} edges, cap is {cap}")]
    CapExceeded { op: &'static str, m: usize, cap: usize },

    #[error("canonical form supports at most {max} vertices, got {n}")]
    TooManyVertices { n: usize, max: usize },

    #[error("set under test is not an edge cut dominating set")]
    NotEdgeCutDominating,

    #[error("set under test is not edge cut irredundant in the requested mode")]
    NotEcIrredundant,

    #[error("set under test is not edge cut independent in the requested mode")]
    NotEcIndependent,

    #[error("edge {index} is not a member of the set")]
    EdgeNotInSet { index: usize },

    #[error("{family}: {reason}")]
    FamilyParams { family: &'static str, reason: String },

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("graph6 short form supports n < 63, got {n}")]
    Graph6Range { n: usize },

    #[error("forced_in and forced_out overlap")]
    OverlappingConstraints,

    #[error("no edge dominating set satisfies the given constraints")]
    NoConstrainedSet,
}
