use num_bigint::BigInt;
use thiserror::Error;

/// Crate-wide error type.
///
/// Domain errors (bad mathematical input, failed invariants) map to CLI
/// exit code 1, input/parse errors to exit code 2.
#[derive(Debug, Error)]
pub enum Error {
    #[error("coboundary composition d∘d is nonzero at degree {degree}")]
    CompositionNonzero { degree: usize },

    #[error("unsupported field model: {0}")]
    UnsupportedModel(String),

    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),

    #[error("vertex `{0}` appears in no facet; list it as a singleton facet to keep it")]
    VertexOutsideFacets(String),

    #[error("{0} is not a face of the complex")]
    NotAFace(String),

    #[error("the void complex has no reduced cochain complex")]
    VoidComplex,

    #[error("difference group has torsion {factors:?}; presentation is not cancellative and torsion-free")]
    TorsionDetected { factors: Vec<BigInt> },

    #[error(
        "presentation has infinity relations; the integral engine requires an integral binoid"
    )]
    NonIntegral,

    #[error("presentation is not simplicial: {0}")]
    NotSimplicial(String),

    #[error("presentation mixes congruences and infinity relations; no unit formula applies")]
    MixedPresentation,

    #[error("invalid presentation: {0}")]
    BadPresentation(String),

    #[error("unit sheaf model is incoherent: {0}")]
    RestrictionIncoherent(String),

    #[error(
        "pipeline cross-check mismatch in degree {degree}: direct {direct} vs formula {formula}"
    )]
    CrossCheckMismatch {
        degree: usize,
        direct: String,
        formula: String,
    },

    #[error("complex has dimension > 1; not a graph")]
    NotAGraph,

    #[error("graph is not connected")]
    Disconnected,

    #[error("nilpotent cohomology is only defined over characteristic-zero field models")]
    CharPUnsupported,

    #[error("invalid monomial ideal: {0}")]
    BadIdeal(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),

    #[error("JSON error: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// CLI exit code for this error: 2 for I/O and parsing, 1 for domain errors.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse(_) | Error::Io(_) | Error::Json(_) => 2,
            _ => 1,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
