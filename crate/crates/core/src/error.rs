use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("amplitude array length {0} is not a power of two")]
    NotPowerOfTwo(usize),

    #[error("state is not normalized: squared norm {0}")]
    NotNormalized(f64),

    #[error("state has zero norm")]
    ZeroNorm,

    #[error("invalid ket string {0:?}")]
    InvalidKet(String),

    #[error("qubit index {index} out of range for {num_qubits} qubits")]
    QubitOutOfRange { index: usize, num_qubits: usize },

    #[error("duplicate target qubit {0}")]
    DuplicateQubit(usize),

    #[error("dimension mismatch: {left} vs {right} qubits")]
    DimensionMismatch { left: usize, right: usize },

    #[error("length mismatch: {targets} targets for {factors} factors")]
    LengthMismatch { targets: usize, factors: usize },

    #[error("gate is not unitary (deviation {0})")]
    NotUnitary(f64),

    #[error("basis vectors {i} and {j} are not orthonormal: <b_i|b_j> = {value}")]
    NotOrthonormal {
        i: usize,
        j: usize,
        value: num_complex::Complex64,
    },

    #[error("state has out-of-span mass {mass} with respect to the measurement basis; the secret lies outside the restricted class")]
    OutOfSpan { mass: f64 },

    #[error("outcome {0} does not exist in this basis")]
    NoSuchOutcome(usize),

    #[error("outcome {outcome} has zero probability")]
    ZeroProbability { outcome: usize },

    #[error("secret normalization violated: squared norm {actual} but must equal {expected} (deficit {deficit})")]
    Normalization {
        expected: f64,
        actual: f64,
        deficit: f64,
    },

    #[error("expected {expected} secret coefficients, got {actual}")]
    CoefficientCount { expected: usize, actual: usize },

    #[error("no correction-table row for outcome {outcome}, charlie bit {bit}")]
    NoSuchRow { outcome: usize, bit: u8 },

    #[error("unknown Pauli label {0:?}")]
    UnknownPauli(String),

    #[error("unknown variant {0:?}")]
    UnknownVariant(String),
}

impl Error {
    /// Stable machine-readable error kind used in serialized error reports.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::NotPowerOfTwo(_) | Error::InvalidKet(_) => "invalid_state",
            Error::NotNormalized(_) | Error::ZeroNorm => "not_normalized",
            Error::QubitOutOfRange { .. } | Error::DuplicateQubit(_) => "qubit_index",
            Error::DimensionMismatch { .. } | Error::LengthMismatch { .. } => "dimension",
            Error::NotUnitary(_) => "not_unitary",
            Error::NotOrthonormal { .. } => "not_orthonormal",
            Error::OutOfSpan { .. } => "out_of_span",
            Error::NoSuchOutcome(_) | Error::ZeroProbability { .. } | Error::NoSuchRow { .. } => {
                "outcome"
            }
            Error::Normalization { .. } | Error::CoefficientCount { .. } => "invalid_secret",
            Error::UnknownPauli(_) | Error::UnknownVariant(_) => "parse",
        }
    }
}
