use thiserror::Error;

/// Errors raised by graph construction, generators and solvers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} out of range for order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("duplicate vertex label {0:?}")]
    DuplicateLabel(String),
    #[error("label count {labels} does not match order {order}")]
    LabelCount { labels: usize, order: usize },
    #[error("walk is empty")]
    EmptyWalk,
    #[error("walk is not closed")]
    OpenWalk,
    #[error("walk step {0}-{1} is not an edge")]
    NotAnEdge(usize, usize),
    #[error("underlying graphs differ")]
    UnderlyingMismatch,
    #[error("{0} is not a prime power")]
    NotPrimePower(usize),
    #[error("field order {0} exceeds the supported maximum of 128")]
    FieldTooLarge(usize),
    #[error("q = {0} is not congruent to 1 mod 4")]
    NotOneModFour(usize),
    #[error("unknown graph name {0:?}")]
    UnknownName(String),
    #[error("unknown port {0:?}")]
    UnknownPort(String),
    #[error("invalid port binding: {0}")]
    InvalidBinding(String),
    #[error("tower level {0} out of range 0..=5")]
    TowerLevel(usize),
    #[error("{what} requires {requirement}")]
    Precondition { what: &'static str, requirement: String },
    #[error("size cap exceeded: {what} allows at most {cap}, got {got}")]
    SizeCap { what: &'static str, cap: usize, got: usize },
    #[error("time budget exceeded")]
    BudgetExceeded,
    #[error("no target of order <= {cap} found; value exceeds cap")]
    CapExhausted { cap: usize },
    #[error("length mismatch: {0} vertices vs {1} signs")]
    LengthMismatch(usize, usize),
    #[error("repeated vertex {0} in tuple")]
    RepeatedVertex(usize),
    #[error("vertex {w} is not a common neighbour of {u} and {v}")]
    NotCommonNeighbor { u: usize, v: usize, w: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
