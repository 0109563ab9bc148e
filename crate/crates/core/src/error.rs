use alloc::string::String;
use core::fmt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Divisor's leading coefficient in the division variable is not 1.
    NonMonicDivisor,
    UnknownVariable(String),
    ContextMismatch,
    ZeroDenominator,
    /// The leading-coefficient unit test in `R(x)` failed.
    NotRecognizedUnit,
    /// An element is not in the localization at the given point.
    NotLocal(String),
    DimensionMismatch { op: &'static str, left: (usize, usize), right: (usize, usize) },
    NotIdempotent,
    NotSplitPair,
    MiddleMismatch,
    SingularMatrix,
    /// Internal residue identity failed inside the Horrocks pipeline.
    ResidueMismatch(&'static str),
    /// The linear operator behind a polynomial-part solve is not invertible
    /// over the local ring.
    NakayamaSingular,
    /// `det(F'·A')` is not of the form `f/g` with `f, g` monic and equal residues.
    DeterminantNotInGroup,
    DenominatorInIdeal,
    MismatchedE,
    NotBezout,
    NotUnitTranslation,
    NonRationalLocus(String),
    UnsupportedDimension(usize),
    NotUnimodular,
    InvalidInput(String),
    VerificationFailed(String),
    Parse(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NonMonicDivisor => write!(f, "divisor is not monic in the division variable"),
            Error::UnknownVariable(v) => write!(f, "unknown variable {v:?}"),
            Error::ContextMismatch => write!(f, "operands live in different variable contexts"),
            Error::ZeroDenominator => write!(f, "zero denominator"),
            Error::NotRecognizedUnit => {
                write!(f, "leading numerator coefficient is not invertible in the base ring")
            }
            Error::NotLocal(what) => write!(f, "not in the localization: {what}"),
            Error::DimensionMismatch { op, left, right } => write!(
                f,
                "dimension mismatch in {op}: {}x{} vs {}x{}",
                left.0, left.1, right.0, right.1
            ),
            Error::NotIdempotent => write!(f, "matrix is not idempotent"),
            Error::NotSplitPair => write!(f, "T·S is not the identity"),
            Error::MiddleMismatch => write!(f, "certificates do not share the middle idempotent"),
            Error::SingularMatrix => write!(f, "matrix is singular"),
            Error::ResidueMismatch(step) => write!(f, "residue identity failed: {step}"),
            Error::NakayamaSingular => {
                write!(f, "polynomial-part operator is not invertible over the local ring")
            }
            Error::DeterminantNotInGroup => {
                write!(f, "determinant is not in 1 + m·R(x)_0")
            }
            Error::DenominatorInIdeal => write!(f, "clearing denominator lies in the ideal"),
            Error::MismatchedE => write!(f, "translation certificates certify different matrices"),
            Error::NotBezout => write!(f, "coefficients do not combine the translations to 1"),
            Error::NotUnitTranslation => write!(f, "certificate is not for the translation j = 1"),
            Error::NonRationalLocus(g) => write!(f, "no rational point on the locus of {g}"),
            Error::UnsupportedDimension(v) => {
                write!(f, "{v} variables need a user-supplied cover")
            }
            Error::NotUnimodular => write!(f, "row is not unimodular"),
            Error::InvalidInput(msg) => write!(f, "invalid input: {msg}"),
            Error::VerificationFailed(msg) => write!(f, "verification failed: {msg}"),
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
