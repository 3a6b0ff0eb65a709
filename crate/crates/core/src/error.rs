use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Vectors or matrices whose modulus or dimension do not line up.
    #[error("input shape error: {0}")]
    Shape(String),

    #[error("ambient mismatch: {0}")]
    AmbientMismatch(String),

    /// A subspace that was expected to be generator-invariant is not.
    #[error("not a submodule: {0}")]
    NotSubmodule(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    /// Raised for `N = M`, which every decomposition routine rejects.
    #[error("N must be proper")]
    NotProper,

    #[error("resource cap exceeded: {what} needs {needed}, cap is {cap}")]
    Resource { what: String, needed: u128, cap: u128 },

    #[error("invalid input: {0}")]
    Input(String),
}

impl Error {
    pub fn resource(what: impl Into<String>, needed: u128, cap: u128) -> Self {
        Error::Resource {
            what: what.into(),
            needed,
            cap,
        }
    }

    pub fn is_resource(&self) -> bool {
        matches!(self, Error::Resource { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
