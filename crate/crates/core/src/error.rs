use thiserror::Error;

use crate::dsl::ParseError;

/// Errors produced by simulator, circuit, and assertion operations.
#[derive(Debug, Error)]
pub enum Error {
    #[error("qutrit index {q} out of range for {n}-qutrit system")]
    QutritOutOfRange { q: usize, n: usize },

    #[error("control and target must be distinct qutrits (both {q})")]
    ControlEqualsTarget { q: usize },

    #[error("expected {expected} trit digits, got {got}")]
    DigitCountMismatch { expected: usize, got: usize },

    #[error("qutrit counts differ: {0} vs {1}")]
    QutritCountMismatch(usize, usize),

    #[error("amplitude vector length {0} is not a power of three")]
    BadAmplitudeCount(usize),

    #[error("state is not normalized (norm squared = {0})")]
    NotNormalized(f64),

    #[error("amplitudes must be finite")]
    NonFiniteAmplitude,

    #[error("measurement draw must lie in [0, 1), got {0}")]
    BadDraw(f64),

    #[error("qutrit {q} carries no probability mass; state is numerically dead")]
    DeadState { q: usize },

    #[error("controlled gates apply Z transforms only, got {0}")]
    NotAZGate(String),

    #[error("value {0} is not a trit digit (0, 1, or 2)")]
    BadTrit(u8),

    #[error("measurements must form a suffix of the circuit")]
    MidCircuitMeasurement,

    #[error("circuit has no measurements")]
    NoMeasurements,

    #[error("duplicate register name `{0}`")]
    DuplicateRegister(String),

    #[error("duplicate slice name `{0}`")]
    DuplicateSlice(String),

    #[error("slice positions must be strictly increasing (position {0})")]
    SlicePosition(usize),

    #[error("slice position {0} exceeds the unitary prefix of the circuit")]
    SliceAfterMeasurement(usize),

    #[error("assertion insert position {0} exceeds the unitary prefix of the circuit")]
    AssertionAfterMeasurement(usize),

    #[error("shots must be at least 1")]
    ZeroShots,

    #[error("dense oracle supports at most {max} qutrits, circuit has {n}")]
    TooManyQutrits { n: usize, max: usize },

    #[error("unknown corpus entry `{0}`")]
    UnknownCorpusEntry(String),

    #[error("corpus entry `{name}`: {reason}")]
    CorpusConfig { name: String, reason: String },

    #[error(transparent)]
    Parse(#[from] ParseError),
}

pub type Result<T> = std::result::Result<T, Error>;
