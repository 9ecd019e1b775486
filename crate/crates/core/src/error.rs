use thiserror::Error;

use crate::shapes::Partition;
use crate::symfunc::TruncationProfile;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("not a partition: {0:?}")]
    InvalidPartition(Vec<usize>),

    #[error("({inner}) is not contained in ({outer})")]
    NotContained { outer: Partition, inner: Partition },

    #[error("{0}")]
    Parse(String),

    #[error("truncation profiles differ: {0} vs {1}")]
    ProfileMismatch(TruncationProfile, TruncationProfile),

    #[error(
        "unfaithful truncation: {vars} variables cannot decide equality up to degree {max_degree}"
    )]
    Unfaithful { max_degree: usize, vars: usize },

    #[error("degree {degree} exceeds the truncation degree {max_degree}")]
    DegreeOverflow { degree: usize, max_degree: usize },

    #[error("max_entry must be positive")]
    ZeroMaxEntry,

    #[error("entries above {max} are not supported (got {got})")]
    EntryTooLarge { got: u32, max: u32 },

    #[error("filling is not a valid {0}")]
    KindMismatch(&'static str),

    #[error("filling does not match its shape: {0}")]
    BadFilling(String),

    #[error("cannot realize a {0}-basis expansion here")]
    UnsupportedBasis(&'static str),
}
