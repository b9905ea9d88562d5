use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

/// Errors raised by the crystal library.
///
/// A `null` result of a crystal operator is never an error: operators return
/// `Option` for that. Variants here are contract violations or failed
/// verifications.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// The matrix is not a generalized Cartan matrix.
    NotGcm(String),
    NotSymmetrizable(String),
    /// `C·R` does not reproduce the Cartan matrix, or the shapes disagree.
    PairingInconsistent(String),
    /// Simple roots are linearly dependent in the chosen coordinates.
    DependentRoots,
    IndexOutOfRange { index: usize, rank: usize },
    /// A dominant integral weight was required.
    NotDominantIntegral(String),
    /// A weight pairs non-integrally with a simple coroot.
    NonIntegralPairing { index: usize },
    /// A path outside the integral path model was handed to a root operator.
    NonIntegralPath,
    WordNotReduced(Vec<usize>),
    ElementNotInSet,
    TopNotInSet,
    /// The input set has no unique element of maximal weight.
    NoUniqueTop,
    /// The decomposition criterion does not hold. `offending` lists the
    /// letters of `v_min` outside `allowed` (all 0-based).
    CriterionFails { allowed: Vec<usize>, offending: Vec<usize> },
    /// A partition check failed only at the truncation boundary.
    WindowTooSmall(String),
    /// The operation needs a different kind of root datum.
    UnsupportedDatum(String),
    /// The character is not in the integer span of the key basis.
    NotInSpan(String),
    /// An internal cross-check disagreed. This is a genuine finding.
    VerificationMismatch(String),
    /// The three statements of the equivalence theorem disagreed.
    EquivalenceViolation(String),
}

pub type Result<T> = core::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotGcm(why) => write!(f, "not a generalized Cartan matrix: {why}"),
            Error::NotSymmetrizable(why) => write!(f, "Cartan matrix is not symmetrizable: {why}"),
            Error::PairingInconsistent(why) => write!(f, "pairing inconsistent with Cartan matrix: {why}"),
            Error::DependentRoots => write!(f, "simple roots are linearly dependent"),
            Error::IndexOutOfRange { index, rank } => {
                write!(f, "index {} out of range for rank {}", index + 1, rank)
            }
            Error::NotDominantIntegral(w) => write!(f, "weight {w} is not dominant integral"),
            Error::NonIntegralPairing { index } => {
                write!(f, "non-integral pairing with coroot {}", index + 1)
            }
            Error::NonIntegralPath => write!(f, "path is not integral"),
            Error::WordNotReduced(word) => {
                let w: Vec<usize> = word.iter().map(|i| i + 1).collect();
                write!(f, "word {w:?} is not reduced")
            }
            Error::ElementNotInSet => write!(f, "element not in set"),
            Error::TopNotInSet => write!(f, "highest weight element not in set"),
            Error::NoUniqueTop => write!(f, "set has no unique element of maximal weight"),
            Error::CriterionFails { allowed, offending } => {
                let a: Vec<usize> = allowed.iter().map(|i| i + 1).collect();
                let o: Vec<usize> = offending.iter().map(|i| i + 1).collect();
                write!(f, "criterion fails: J = {a:?}, letters outside J: {o:?}")
            }
            Error::WindowTooSmall(why) => write!(f, "window too small: {why}"),
            Error::UnsupportedDatum(why) => write!(f, "unsupported root datum: {why}"),
            Error::NotInSpan(why) => write!(f, "not in span of key polynomials: {why}"),
            Error::VerificationMismatch(why) => write!(f, "verification mismatch: {why}"),
            Error::EquivalenceViolation(why) => write!(f, "equivalence violated: {why}"),
        }
    }
}

impl core::error::Error for Error {}
