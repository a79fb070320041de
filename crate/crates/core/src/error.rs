use thiserror::Error;

/// First violated group axiom found while validating an operation table.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupViolation {
    #[error("empty table")]
    Empty,
    #[error("row {row} has length {len}, expected {expected}")]
    NotSquare {
        row: usize,
        len: usize,
        expected: usize,
    },
    #[error("entry at row {row}, column {col} is {value}, outside 0..{order}")]
    OutOfRange {
        row: usize,
        col: usize,
        value: usize,
        order: usize,
    },
    #[error("no identity element")]
    NoIdentity,
    #[error("element {element} has no two-sided inverse")]
    NoInverse { element: usize },
    #[error("row {row} repeats value {value} (columns {first} and {second})")]
    RowRepeat {
        row: usize,
        value: usize,
        first: usize,
        second: usize,
    },
    #[error("column {col} repeats value {value} (rows {first} and {second})")]
    ColumnRepeat {
        col: usize,
        value: usize,
        first: usize,
        second: usize,
    },
    #[error("not associative: ({a}*{b})*{c} = {left} but {a}*({b}*{c}) = {right}")]
    NotAssociative {
        a: usize,
        b: usize,
        c: usize,
        left: usize,
        right: usize,
    },
}

/// First violated skew brace axiom.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BraceViolation {
    #[error("additive table: {0}")]
    Additive(GroupViolation),
    #[error("circle table: {0}")]
    Circle(GroupViolation),
    #[error("additive table has order {add}, circle table has order {circle}")]
    OrderMismatch { add: usize, circle: usize },
    #[error("additive identity {add} differs from circle identity {circle}")]
    IdentityMismatch { add: usize, circle: usize },
    #[error(
        "compatibility fails at a={a}, b={b}, c={c}: a∘(b+c) = {left} but a∘b - a + a∘c = {right}"
    )]
    Compatibility {
        a: usize,
        b: usize,
        c: usize,
        left: usize,
        right: usize,
    },
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid group: {0}")]
    Group(#[from] GroupViolation),
    #[error("invalid skew brace: {0}")]
    Brace(#[from] BraceViolation),
    #[error("{what}: size {actual} exceeds the configured bound {limit}")]
    BoundExceeded {
        what: &'static str,
        limit: usize,
        actual: usize,
    },
    #[error("subset is not a normal subgroup (witness element {witness})")]
    NotNormal { witness: usize },
    #[error("subset is not an ideal: {0}")]
    NotIdeal(String),
    #[error("subset is not closed under both operations: {0}")]
    NotClosed(String),
    #[error("invalid action: {0}")]
    InvalidAction(String),
    #[error("invalid map: {0}")]
    InvalidMap(String),
    #[error("malformed solution: {0}")]
    MalformedSolution(String),
    #[error("solution is degenerate: {0}")]
    Degenerate(String),
    #[error("solution is not of derived form: {0}")]
    NotDerivedForm(String),
    #[error("unsupported order {order} for {method} enumeration (max {max})")]
    UnsupportedOrder {
        order: usize,
        method: &'static str,
        max: usize,
    },
    /// An internal consistency check failed; indicates a library bug.
    #[error("consistency check failed: {0}")]
    CheckFailed(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
