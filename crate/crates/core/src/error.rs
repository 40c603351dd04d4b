use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("not a group: {0}")]
    NotAGroup(String),

    #[error("order {order} exceeds cap {cap}")]
    OrderCapExceeded { order: usize, cap: usize },

    #[error("unknown catalog name `{0}`")]
    UnknownCatalogName(String),

    #[error("operands belong to different groups")]
    GroupMismatch,

    #[error("no element labeled `{0}`")]
    UnknownLabel(String),

    #[error("syntax error at byte {position}: expected {expected}")]
    Syntax { position: usize, expected: String },

    #[error("unbound variable `{0}`")]
    UnboundVariable(String),

    #[error("not a subgroup: {0}")]
    NotASubgroup(String),

    #[error("kernel is not normal in the group")]
    NotNormal,

    #[error("invalid chain: {0}")]
    InvalidChain(String),

    #[error("invalid permutation: {0}")]
    BadPermutation(String),

    #[error("unknown claim `{0}`")]
    UnknownClaim(String),

    #[error("invalid group file: {0}")]
    GroupFile(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
