//! Error type shared by every module of the crate.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// A parameter is outside the operation's domain (bad vertex id,
    /// cycle length below 3, witness parameters outside 3 <= a <= b, ...).
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// The edge list violates the canonical form (unsorted, duplicate,
    /// loop, endpoint out of range) or some other structural requirement.
    #[error("malformed graph: {0}")]
    MalformedGraph(String),

    /// Every graph in this crate must be connected.
    #[error("graph is not connected")]
    Disconnected,

    /// A coloring was used with a graph it is not bound to.
    #[error("coloring binds to {expected} edges but graph has {got}")]
    ColoringMismatch { expected: usize, got: usize },

    /// The exact solver refuses graphs above its edge budget.
    #[error("graph has {edges} edges, above the solver limit of {limit}")]
    SizeLimit { edges: usize, limit: usize },

    /// The exact solver exhausted the allowed palette sizes.
    #[error("no {kind} coloring found with at most {k_max} colors")]
    BoundTooSmall { kind: &'static str, k_max: usize },

    /// An operation-specific precondition failed (e.g. the audit requires
    /// a coloring with fewer colors than the strong rainbow target).
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// The proof audit reached a conclusion its own cross-check rejects.
    /// This signals a bug in the audit, never a property of the input.
    #[error("audit inconsistency: {0}")]
    AuditInconsistency(String),

    /// An arithmetic guarantee that should hold for all valid parameters
    /// failed. Reaching this indicates a bug in the implementation.
    #[error("arithmetic inconsistency: {0}")]
    ArithmeticInconsistency(String),

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),

    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}
