use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("lambda must be at least 2, got {0}")]
    InvalidLambda(usize),
    #[error("expected {expected} parameters, got {got}")]
    WrongParamCount { expected: usize, got: usize },
    #[error("alpha parameters must sum to zero")]
    AlphaSumNonzero,
    #[error("kappa_{mu} is not the complex conjugate of kappa_{partner}")]
    ConjugacyViolation { mu: usize, partner: usize },
    #[error("alpha_{mu} has imaginary residue {residue:e}")]
    NonRealAlpha { mu: usize, residue: f64 },
    #[error("alpha_{mu} is not rational")]
    IrrationalAlpha { mu: usize },
    #[error("no Fock representation: F(mu) <= 0 for mu in {violated:?}")]
    RepresentationMissing { violated: Vec<usize> },
    #[error("gamma function pole at argument {argument}")]
    GammaPole { argument: String },
    #[error("dimension {dim} is below the minimum {min}")]
    DimensionTooSmall { dim: usize, min: usize },
    #[error("operation requires lambda = {required}, got {lambda}")]
    UnsupportedLambda { lambda: usize, required: usize },
    #[error("requested {requested} levels, need at least {min}")]
    TooFewLevels { requested: usize, min: usize },
    #[error("spectrum has degenerate levels")]
    DegenerateSpectrum,
    #[error("level spacings are not periodic from the ground state")]
    NotPeriodic,
    #[error("no admissible parameters reproduce the requested spacings")]
    NoMatch,
    #[error("invalid spacing specification: {0}")]
    InvalidSpec(String),
    #[error("eta must lie strictly between 0 and 2, got {0}")]
    EtaOutOfRange(String),
    #[error("charge family index must be 0, 1 or 2, got {0}")]
    InvalidMu(usize),
    #[error("prefix length {prefix} exceeds the {available} computed levels")]
    PrefixTooLong { prefix: usize, available: usize },
    #[error("closed-form label {label} disagrees with the computed spectrum")]
    ClassificationMismatch { label: String },
    #[error("cannot parse rational from {0:?}")]
    ParseRational(String),
}

impl Error {
    /// Stable machine-readable identifier.
    pub fn code(&self) -> &'static str {
        match self {
            Error::InvalidLambda(_) => "InvalidLambda",
            Error::WrongParamCount { .. } => "WrongParamCount",
            Error::AlphaSumNonzero => "AlphaSumNonzero",
            Error::ConjugacyViolation { .. } => "ConjugacyViolation",
            Error::NonRealAlpha { .. } => "NonRealAlpha",
            Error::IrrationalAlpha { .. } => "IrrationalAlpha",
            Error::RepresentationMissing { .. } => "RepresentationMissing",
            Error::GammaPole { .. } => "GammaPole",
            Error::DimensionTooSmall { .. } => "DimensionTooSmall",
            Error::UnsupportedLambda { .. } => "UnsupportedLambda",
            Error::TooFewLevels { .. } => "TooFewLevels",
            Error::DegenerateSpectrum => "DegenerateSpectrum",
            Error::NotPeriodic => "NotPeriodic",
            Error::NoMatch => "NoMatch",
            Error::InvalidSpec(_) => "InvalidSpec",
            Error::EtaOutOfRange(_) => "EtaOutOfRange",
            Error::InvalidMu(_) => "InvalidMu",
            Error::PrefixTooLong { .. } => "PrefixTooLong",
            Error::ClassificationMismatch { .. } => "ClassificationMismatch",
            Error::ParseRational(_) => "ParseRational",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
