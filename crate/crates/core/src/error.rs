//! Error type shared by every module of the crate.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// The polynomial is not symmetric with respect to the declared degree.
    #[error("polynomial is not symmetric with respect to degree {degree}")]
    NotSymmetric { degree: usize },

    /// The polynomial's degree exceeds the degree the operation was asked to
    /// decompose against.
    #[error("polynomial degree {actual} exceeds declared degree {declared}")]
    DegreeTooHigh { declared: usize, actual: usize },

    /// An interlacing query was made against a polynomial with non-real roots.
    #[error("polynomial has non-real roots; interlacing is undefined")]
    NotRealRooted,

    /// Root isolation could not be refined within its bisection budget.
    #[error("root isolation exceeded its refinement cap of {cap} bisections")]
    IsolationBudget { cap: usize },

    /// Root isolation of the zero polynomial was requested.
    #[error("cannot isolate roots of the zero polynomial")]
    ZeroPolynomial,

    /// A simplex enumeration was asked for more lattice points than the cap allows.
    #[error("normalized volume {volume} exceeds the enumeration cap {cap}")]
    VolumeTooLarge { volume: String, cap: u64 },

    /// A brute-force enumeration would exceed its guardrail.
    #[error("{what} requires {size} states, above the cap {cap}")]
    TooLarge {
        what: &'static str,
        size: String,
        cap: u64,
    },

    /// A vertex list that should span a simplex is affinely dependent.
    #[error("vertices are affinely dependent; they do not span a simplex")]
    AffinelyDependent,

    /// A face-statistic query on a single vertex, where no statistic is defined.
    #[error("face has a single vertex; no gcd sequence is defined")]
    SingleVertex,

    /// An inversion sequence with a padded ratio tie was passed to the
    /// derangement bijection.
    #[error("inversion sequence has a padded ratio tie at position {position}")]
    NotRestricted { position: usize },

    /// A permutation with a fixed point was passed to the inverse bijection.
    #[error("permutation fixes {value}; the inverse bijection needs a derangement")]
    HasFixedPoint { value: usize },

    /// A simplicial complex operation that requires purity saw mixed facet
    /// dimensions.
    #[error("complex is not pure: facets of dimensions {low} and {high} coexist")]
    NotPure { low: usize, high: usize },

    /// A link was requested at a vertex set that is not a face.
    #[error("vertex set is not a face of the complex")]
    FaceNotInComplex,

    /// A rank sequence was requested for a poset that is not ranked.
    #[error("poset is not ranked: element {element} has maximal chains of lengths {low} and {high} below it")]
    NotRanked {
        element: usize,
        low: usize,
        high: usize,
    },

    /// Structurally invalid input (bounds, labeling, shape).
    #[error("{0}")]
    Invalid(String),

    /// Input that failed to parse.
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::Invalid(msg.into())
    }
}
