use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("resource limit: n = {n} exceeds the enumeration cap of {cap}")]
    ResourceLimit { n: usize, cap: usize },

    #[error("not in language: {0}")]
    NotInLanguage(String),

    /// The permutation does not have exactly one left peak.
    #[error("lpk = {lpk} \u{2260} 1: not in N_n")]
    NotInN { lpk: usize },

    #[error("inverse contains consecutive 321: not in N'_n")]
    NotInNPrime,

    #[error("word {0} is not of the form a^i c u a c^j")]
    NotInImage(String),

    #[error("singular series: {0}")]
    SingularSeries(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
