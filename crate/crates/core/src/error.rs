//! Error type shared by every module.

use thiserror::Error;

/// Errors produced by certification, geometry and sampling operations.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// Zero was passed where a point of C* (nonzero complex) is required.
    #[error("zero is not a valid point of C*")]
    ZeroInput,

    /// A complex value with NaN or infinite components was rejected.
    #[error("complex value must have finite components")]
    NonFinite,

    /// An operation that needs at least one point received none.
    #[error("empty point list")]
    EmptyInput,

    /// A region is too degenerate for the requested operation.
    #[error("degenerate region: {0}")]
    DegenerateRegion(&'static str),

    /// A polygon failed its convexity/orientation invariants.
    #[error("invalid polygon: {0}")]
    InvalidPolygon(&'static str),

    /// The closed region would contain the origin; regions live in C*.
    #[error("region contains the origin")]
    ContainsOrigin,

    /// A scalar parameter is outside the domain of the formula.
    #[error("parameter out of domain: {0}")]
    ParameterDomain(&'static str),

    /// An angle parameter is outside the open interval (0, 2*pi/3).
    #[error("angle parameter must lie in the open interval (0, 2*pi/3)")]
    AngleDomain,

    /// Unknown name passed to the builtin region catalog.
    #[error("unknown builtin region `{0}`")]
    UnknownBuiltin(String),

    /// Exact permanent cost guard (n <= 14).
    #[error("matrix dimension {0} exceeds the exact-permanent guard of 14")]
    MatrixTooLarge(usize),

    /// Matrix entries do not form an n-by-n grid.
    #[error("matrix needs n*n entries, got {got} for n = {n}")]
    MatrixShape { n: usize, got: usize },

    /// Push direction does not point out of the polygon at the chosen site.
    #[error("push direction does not point outward")]
    NotOutward,

    /// Site index outside the polygon's side range.
    #[error("site index {site} out of range for {sides} sides")]
    SiteOutOfRange { site: usize, sides: usize },

    /// A grower seed (or scanned region) failed certification.
    #[error("region is not certified: worst criterion value {worst}")]
    Uncertified { worst: f64 },

    /// Region variant not supported by the requested operation.
    #[error("unsupported region variant for {0}")]
    UnsupportedRegion(&'static str),
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
