use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An exact routine was asked to handle an instance above its configured cap.
    #[error("{what}: size {size} exceeds the configured cap {cap}")]
    CapExceeded {
        what: &'static str,
        size: usize,
        cap: usize,
    },
    #[error("infeasible instance: {0}")]
    Infeasible(String),
    #[error("no feasible solution exists on an empty graph")]
    NoFeasible,
    #[error("invalid ratio {0}: ratios must be finite and at least 1")]
    InvalidRatio(f64),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("invalid instance: {0}")]
    InvalidInstance(String),
    #[error("clause {clause} has {len} literal(s); only 2- and 3-literal clauses are supported")]
    UnsupportedClause { clause: usize, len: usize },
    #[error("assignment does not satisfy {0}")]
    NotSatisfying(String),
    #[error("triangle inequality violated: d({i},{k}) > d({i},{j}) + d({j},{k})")]
    TriangleViolated { i: usize, j: usize, k: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
