use thiserror::Error;

/// Errors produced by graph validation, table construction, model fitting
/// and the outlier test itself.
///
/// Every variant names the offending vertex, column or cell so callers can
/// surface actionable messages.
#[derive(Debug, Error)]
pub enum Error {
    #[error("graph is not decomposable; chordless cycle in star graph: {}", .witness.join(" - "))]
    NotDecomposable { witness: Vec<String> },

    #[error("duplicate vertex label '{label}'")]
    DuplicateLabel { label: String },

    #[error("unknown vertex '{label}'")]
    UnknownVertex { label: String },

    #[error("self-loop on vertex '{label}'")]
    SelfLoop { label: String },

    #[error("unknown variable '{name}'")]
    UnknownVariable { name: String },

    #[error("cell arity mismatch: expected {expected} indices, got {got}")]
    ArityMismatch { expected: usize, got: usize },

    #[error("inconsistent tables: {detail}")]
    InconsistentTables { detail: String },

    #[error("column '{column}': level index {level} out of range (column has {n_levels} levels)")]
    UnseenLevel {
        column: String,
        level: u32,
        n_levels: usize,
    },

    #[error("column '{column}': non-finite value at row {row}")]
    NonFiniteValue { column: String, row: usize },

    #[error("row length does not match schema: {detail}")]
    RowShape { detail: String },

    #[error("singular design for '{target}' in cell ({cell}): {detail}")]
    SingularDesign {
        target: String,
        cell: String,
        detail: String,
    },

    #[error("insufficient data for '{target}': {detail}")]
    InsufficientData { target: String, detail: String },

    #[error("no fitted parameters for '{target}' in cell ({cell})")]
    UnseenCell { target: String, cell: String },

    #[error("graph and data schema do not match: {detail}")]
    SchemaMismatch { detail: String },

    #[error("invalid argument: {detail}")]
    InvalidArgument { detail: String },
}

pub type Result<T> = std::result::Result<T, Error>;
