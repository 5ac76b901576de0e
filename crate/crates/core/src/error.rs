use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("line {line}: self-loop on vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },

    #[error("duplicate edge {u}-{v}")]
    DuplicateEdge { u: usize, v: usize },

    #[error("edge {u}-{v} closes a cycle")]
    Cycle { u: usize, v: usize },

    #[error("graph is disconnected ({components} components)")]
    Disconnected { components: usize },

    #[error("vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("invalid degree sequence: {0}")]
    DegreeSequence(String),

    #[error("invalid index parameter: {0}")]
    Parameter(String),

    #[error("invalid family constraint: {0}")]
    Constraint(String),

    #[error("{theorem} makes no claim for {index}")]
    NoClaim { theorem: String, index: String },

    #[error("{kind} does not apply: {reason}")]
    NotApplicable { kind: String, reason: String },

    #[error("tree too small: need n >= {min}, got {n}")]
    TooSmall { n: usize, min: usize },

    #[error("n = {n} outside enumeration range {min}..={max}")]
    EnumerationRange { n: usize, min: usize, max: usize },

    #[error("empty family {0}")]
    EmptyFamily(String),
}
