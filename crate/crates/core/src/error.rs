use thiserror::Error;

/// Every failure mode of the library.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("parameter out of domain for {family}: {bound}")]
    ParameterDomain { family: String, bound: String },

    #[error("vertex {vertex} out of range for graph of order {order}")]
    VertexIndex { vertex: usize, order: usize },

    #[error("iterated line graph exceeds {cap} vertices at level {level} (order {order})")]
    GrowthLimit {
        cap: usize,
        level: usize,
        order: usize,
    },

    #[error("h-join needs one part per pattern vertex: pattern order {pattern}, {parts} parts")]
    Arity { pattern: usize, parts: usize },

    #[error("order {order} exceeds the cap of {cap} for {what}")]
    SizeCap {
        what: &'static str,
        order: usize,
        cap: usize,
    },

    #[error("matrix is not symmetric (max asymmetry {asymmetry:e})")]
    NotSymmetric { asymmetry: f64 },

    #[error("matrix entry ({row}, {col}) = {value} is not an integer")]
    NotInteger { row: usize, col: usize, value: f64 },

    #[error("matrix entry ({row}, {col}) is not finite")]
    NonFinite { row: usize, col: usize },

    #[error(
        "Jacobi iteration did not converge after {sweeps} sweeps (off-diagonal norm {residual:e})"
    )]
    NoConvergence { sweeps: usize, residual: f64 },

    #[error("polynomial domain error: {0}")]
    PolynomialDomain(String),

    #[error("invalid partition: {0}")]
    Partition(String),

    #[error("partition is not equitable: vertex {vertex} has {count} neighbours in block {to}, expected {expected}")]
    NotEquitable {
        vertex: usize,
        to: usize,
        count: usize,
        expected: usize,
    },

    #[error("structure error: {0}")]
    Structure(String),

    #[error("part {index} is not regular")]
    NotRegular { index: usize },

    #[error("graph6 parse error: {0}")]
    Graph6(String),

    #[error("cannot parse graph spec at `{token}`: {reason}")]
    Parse { token: String, reason: String },

    #[error("no non-cospectral regular pair of order {order} and degree {degree} in the built-in table; supported: {supported}")]
    Availability {
        order: usize,
        degree: usize,
        supported: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
