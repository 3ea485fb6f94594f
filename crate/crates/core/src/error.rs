use thiserror::Error;

#[derive(Debug, Error)]
pub enum GroupError {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("not a bijection: {0}")]
    NotBijection(String),

    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("{what} is {actual}, above the cap of {limit}")]
    CapExceeded {
        what: &'static str,
        limit: u64,
        actual: u64,
    },

    #[error("element {0} is not a member of the group")]
    NotMember(String),

    #[error("subgroup is not normal")]
    NotNormal,

    #[error("not a p-group: order {0}")]
    NotPGroup(u64),

    #[error("subgroup belongs to a different group")]
    ForeignSubgroup,

    #[error("invalid argument: {0}")]
    Invalid(String),

    #[error("I/O error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl GroupError {
    pub fn is_cap(&self) -> bool {
        matches!(self, GroupError::CapExceeded { .. })
    }
}

pub type Result<T> = std::result::Result<T, GroupError>;
