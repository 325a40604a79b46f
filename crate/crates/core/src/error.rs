use alloc::string::String;
use core::fmt;

/// Errors produced by the algebra engine.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    NotPrime(u32),
    /// Malformed polynomial text; `offset` is a byte offset into the input.
    Syntax { offset: usize, message: String },
    UnknownVariable { offset: usize, name: String },
    /// A defining relation has a constant or linear term.
    RelationNotInSquare { index: usize },
    NoVariables,
    /// The m-adic filtration did not terminate within the degree cap.
    NotArtinianAtCap { cap: usize },
    NonHomogeneous,
    NotFiniteDimensional { cutoff: usize },
    /// A syzygy generator reached the internal-degree cutoff.
    SaturationFailure { hom_degree: usize, internal_degree: usize },
    NonMinimalPresentation { given: usize, minimal: usize },
    EmbeddingDimensionTooSmall { edim: usize },
    HypothesisViolation(&'static str),
    NonMinimalResolution { step: usize },
    NoCandidateDenominator,
    Inapplicable,
    InvalidArgument(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotPrime(p) => write!(f, "{p} is not a prime below 2^31"),
            Error::Syntax { offset, message } => write!(f, "syntax error at byte {offset}: {message}"),
            Error::UnknownVariable { offset, name } => {
                write!(f, "unknown variable `{name}` at byte {offset}")
            }
            Error::RelationNotInSquare { index } => write!(
                f,
                "relation {} has a constant or linear term (relations must lie in the square of the maximal ideal)",
                index + 1
            ),
            Error::NoVariables => write!(f, "a presentation needs at least one variable"),
            Error::NotArtinianAtCap { cap } => write!(
                f,
                "m-adic filtration did not stabilize by degree {cap}; raise the cap or the ring has positive dimension"
            ),
            Error::NonHomogeneous => write!(f, "tensor element is not homogeneous of degree 2"),
            Error::NotFiniteDimensional { cutoff } => {
                write!(f, "algebra has a nonzero piece at the cutoff degree {cutoff}")
            }
            Error::SaturationFailure {
                hom_degree,
                internal_degree,
            } => write!(
                f,
                "syzygy in homological degree {hom_degree} reached the internal cutoff {internal_degree}"
            ),
            Error::NonMinimalPresentation { given, minimal } => write!(
                f,
                "presentation has {given} relations but the ideal needs only {minimal}"
            ),
            Error::EmbeddingDimensionTooSmall { edim } => {
                write!(f, "embedding dimension {edim} is below 2")
            }
            Error::HypothesisViolation(why) => write!(f, "hypothesis violated: {why}"),
            Error::NonMinimalResolution { step } => {
                write!(f, "differential {step} has an entry outside the maximal ideal")
            }
            Error::NoCandidateDenominator => {
                write!(f, "neither the complete-intersection nor the Golod series matches")
            }
            Error::Inapplicable => {
                write!(f, "ring is neither a complete intersection nor witnessed Golod")
            }
            Error::InvalidArgument(why) => write!(f, "invalid argument: {why}"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T, E = Error> = core::result::Result<T, E>;
