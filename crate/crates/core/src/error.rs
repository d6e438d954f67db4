use std::io;

use thiserror::Error;

/// Everything that can go wrong in this crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid degree {value} at position {index}")]
    InvalidDegree { index: usize, value: i64 },

    #[error("sequence is not nonincreasing at position {index}")]
    NotSorted { index: usize },

    #[error("sequence lengths differ: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("sum {sum} is odd")]
    OddSum { sum: u64 },

    #[error("sum {sum} exceeds n(n-1) for n = {n}; no graphic sequence of this length exists")]
    NotPotentiallyGraphic { n: usize, sum: u64 },

    #[error("index {index} out of range 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("sequence is not graphic")]
    NonGraphic,

    #[error("empty sequence has no degree distribution")]
    EmptySequence,

    #[error("population sizes differ: {left} vs {right}")]
    PopulationMismatch { left: usize, right: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("no qualifying sequence found after {attempts} attempts")]
    SamplingExhausted { attempts: u32 },

    #[error("trial {trial_index} at n = {n}: {source}")]
    Trial {
        n: usize,
        trial_index: u32,
        #[source]
        source: Box<Error>,
    },

    #[error("line {line}: cannot parse {token:?} as an integer")]
    Parse { line: usize, token: String },

    #[error(transparent)]
    Io(#[from] io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl Error {
    /// The innermost error, looking through trial annotations.
    pub fn root(&self) -> &Error {
        match self {
            Error::Trial { source, .. } => source.root(),
            other => other,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
