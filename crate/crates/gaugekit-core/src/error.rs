use core::fmt;

/// Errors produced by geometric constructions and queries.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Vector or matrix sizes do not agree.
    DimensionMismatch { expected: usize, found: usize },
    /// A nonzero vector was required.
    ZeroVector,
    /// A form matrix is not skew-symmetric within tolerance.
    NotSkewSymmetric { max_asymmetry: f64 },
    /// A form matrix is singular (or nearly so).
    DegenerateForm { min_pivot: f64 },
    /// Symplectic structures need an even dimension ≥ 2.
    OddDimension { dim: usize },
    /// A set of vectors does not have the required rank.
    RankDeficient,
    /// A quadratic-level matrix is not positive definite.
    NotPositiveDefinite,
    /// The origin is not strictly interior to the body.
    OriginNotInterior { margin: f64 },
    /// A halfspace body is unbounded along some coordinate.
    UnboundedBody,
    /// Halfspace offsets must be strictly positive to normalize to 1.
    NonPositiveOffset { offset: f64 },
    /// Too few vertices to span a full-dimensional polytope.
    TooFewVertices { needed: usize, found: usize },
    /// A point expected on the boundary is not on it.
    NotOnBoundary { residual: f64 },
    /// The plane is not symplectic (the form restricts to zero on it).
    NotSymplecticPlane,
    /// The operation is only available in dimension 2.
    PlanarOnly { dim: usize },
    /// The operation is not available for this body representation.
    UnsupportedRepresentation(&'static str),
    /// A map that must be invertible is singular.
    SingularMap,
    /// A purely linear map was required but the translation is nonzero.
    NonzeroTranslation,
    /// A sampled curve has too few samples.
    TooFewSamples { needed: usize, found: usize },
    /// The curve is not closed.
    CurveNotClosed,
    /// `ω(c'(t), c(t))` is not positive at some sample.
    NotPositivelyParametrized { index: usize, value: f64 },
    /// The integrator left the boundary by more than the allowed drift.
    ConstraintDrift { drift: f64, limit: f64 },
    /// No flow closed, so no capacity value is available.
    NoClosedCharacteristic,
    /// A linear program is infeasible.
    Infeasible,
    /// A linear program is unbounded.
    Unbounded,
    /// An internal numerical routine failed.
    Numerical(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected}, found {found}")
            }
            Error::ZeroVector => write!(f, "zero vector where a nonzero vector is required"),
            Error::NotSkewSymmetric { max_asymmetry } => {
                write!(f, "matrix is not skew-symmetric (max |Ω+Ωᵀ| = {max_asymmetry:e})")
            }
            Error::DegenerateForm { min_pivot } => {
                write!(f, "form is degenerate (smallest LU pivot {min_pivot:e})")
            }
            Error::OddDimension { dim } => {
                write!(f, "symplectic structure needs even dimension ≥ 2, got {dim}")
            }
            Error::RankDeficient => write!(f, "vectors are rank deficient"),
            Error::NotPositiveDefinite => write!(f, "matrix is not positive definite"),
            Error::OriginNotInterior { margin } => {
                write!(f, "origin is not strictly interior (margin {margin:e})")
            }
            Error::UnboundedBody => write!(f, "halfspace intersection is unbounded"),
            Error::NonPositiveOffset { offset } => {
                write!(f, "halfspace offset {offset:e} is not strictly positive")
            }
            Error::TooFewVertices { needed, found } => {
                write!(f, "need at least {needed} vertices, found {found}")
            }
            Error::NotOnBoundary { residual } => {
                write!(f, "point is not on the boundary (residual {residual:e})")
            }
            Error::NotSymplecticPlane => write!(f, "plane is not symplectic"),
            Error::PlanarOnly { dim } => {
                write!(f, "operation is only implemented in dimension 2, got {dim}")
            }
            Error::UnsupportedRepresentation(what) => {
                write!(f, "unsupported body representation: {what}")
            }
            Error::SingularMap => write!(f, "linear map is singular"),
            Error::NonzeroTranslation => write!(f, "map has a nonzero translation part"),
            Error::TooFewSamples { needed, found } => {
                write!(f, "need at least {needed} samples, found {found}")
            }
            Error::CurveNotClosed => write!(f, "curve is not closed"),
            Error::NotPositivelyParametrized { index, value } => {
                write!(f, "ω(c',c) = {value:e} ≤ 0 at sample {index}")
            }
            Error::ConstraintDrift { drift, limit } => {
                write!(f, "boundary drift {drift:e} exceeds limit {limit:e}")
            }
            Error::NoClosedCharacteristic => write!(f, "no flow closed within the time budget"),
            Error::Infeasible => write!(f, "linear program is infeasible"),
            Error::Unbounded => write!(f, "linear program is unbounded"),
            Error::Numerical(what) => write!(f, "numerical failure: {what}"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
