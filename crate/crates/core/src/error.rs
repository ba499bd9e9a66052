use thiserror::Error;

use crate::face::Face;

/// Errors produced by complex construction, verification and I/O.
#[derive(Debug, Error)]
pub enum Error {
    #[error("ambient dimension {0} out of range (1..=32)")]
    AmbientDimension(usize),

    #[error("label {label} has coordinate outside 1..={d}")]
    CoordinateOutOfRange { label: String, d: usize },

    #[error("invalid vertex label `{0}`")]
    BadLabel(String),

    #[error("invalid word `{0}`")]
    BadWord(String),

    #[error("face contains both x{0} and y{0}")]
    AntipodalPair(usize),

    #[error("facets have unequal sizes ({0} vs {1})")]
    NotPure(usize, usize),

    #[error("not a face: {0}")]
    NotAFace(Face),

    #[error("not a facet of the cross-polytope: {0}")]
    NotAFacet(Face),

    #[error("parameter out of range: {0}")]
    Parameter(String),

    #[error("not a pseudomanifold-with-boundary: ridge {ridge} lies in {degree} facets")]
    RidgeDegree { ridge: Face, degree: usize },

    #[error("closed complex has empty boundary (i = d - 1)")]
    ClosedComplex,

    #[error("complex is not a full-dimensional (balanced) subcomplex of the cross-polytope")]
    NotBalanced,

    #[error("face enumeration would exceed the cap of {limit} faces")]
    TooManyFaces { limit: usize },

    #[error("order is not a permutation of the facets: {0}")]
    NotAPermutation(String),

    #[error("group closure exceeded bound {0}")]
    ClosureBound(usize),

    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
