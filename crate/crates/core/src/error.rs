use thiserror::Error;

use crate::pattern::PatternWitness;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graphs with more than {max} vertices are not supported (got {n})", max = crate::graph::MAX_VERTICES)]
    TooManyVertices { n: usize },

    #[error("vertex {vertex} is out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("vertex sets must be disjoint")]
    OverlappingSets,

    #[error("expected two distinct vertices, got {0} twice")]
    SameVertex(usize),

    #[error("malformed graph6 string: {0}")]
    Graph6(String),

    #[error("malformed edge list: {0}")]
    EdgeList(String),

    #[error("unknown pattern name {0:?}")]
    UnknownPattern(String),

    #[error("malformed partition: {0}")]
    MalformedPartition(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("graph on {n} vertices exceeds the limit of {max} for this operation")]
    TooLarge { n: usize, max: usize },

    #[error("graph is not uncluttered: induced {} at {:?}", .0.pattern_name(), .0.embedding)]
    NotUncluttered(PatternWitness),

    /// No case of the structure theorem applied. Signals a bug, never a property of the input.
    #[error("theorem violation on graph {graph6}: {reason}")]
    TheoremViolation { graph6: String, reason: String },

    #[error("decomposition depth limit {limit} exceeded")]
    DepthExceeded { limit: usize },
}
