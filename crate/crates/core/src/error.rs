use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid dimension {0}: must be at least 1")]
    InvalidDimension(usize),
    #[error("invalid degree {0}: operations of degree 0 are not supported")]
    InvalidDegree(usize),
    #[error("coefficient array has {got} entries, expected {expected}")]
    CoefficientCount { expected: usize, got: usize },
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("insertion slot {slot} out of range for reduced degree {reduced}")]
    SlotOutOfRange { slot: usize, reduced: usize },
    #[error("invalid oscillator parameters: {0}")]
    InvalidOscillator(String),
    #[error("branch point: sqrt(2H) + p = {0} is not positive (the p0 < 0 branch is not supported)")]
    BranchPoint(f64),
    #[error("operadic parameters violate C2^2+C3^2+C5^2+C6^2+C7^2+C8^2 != 0")]
    InadmissibleParams,
    #[error("initial structure constants not representable by the Lax ansatz: {0}")]
    NotRepresentable(String),
    #[error("invalid Bianchi parameter: {0}")]
    InvalidBianchi(String),
    #[error("Bianchi type {0} has no dynamical deformation")]
    Unsupported(String),
    #[error("alphabet mismatch between operands")]
    AlphabetMismatch,
    #[error("cyclic substitution involving {0}")]
    CyclicDefinitions(String),
    #[error("central symbol {0} can only be replaced by a central value")]
    NonCentralSubstitution(String),
    #[error("letter {0} is not in the active alphabet")]
    UnknownLetter(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
