use crate::graph::Vertex;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(Vertex, Vertex),
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("{{{0}, {1}}} is not an edge")]
    NotAnEdge(Vertex, Vertex),
    #[error("parameter `{name}` = {value} out of range: {expected}")]
    ParameterOutOfRange {
        name: &'static str,
        value: i64,
        expected: String,
    },
    #[error("invalid selection at vertex {vertex}: {reason}")]
    InvalidSelection { vertex: Vertex, reason: String },
    #[error("unknown theorem `{0}`")]
    UnknownTheorem(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

impl Error {
    pub(crate) fn out_of_range(name: &'static str, value: impl TryInto<i64>, expected: impl Into<String>) -> Self {
        Error::ParameterOutOfRange {
            name,
            value: value.try_into().unwrap_or(i64::MAX),
            expected: expected.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
