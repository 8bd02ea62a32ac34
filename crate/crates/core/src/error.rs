use alloc::string::String;
use core::fmt;

/// Errors reported by the geometric and solver operations.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Two points that were required to be distinct coincide.
    DegenerateSegment,
    /// A boundary axis was requested through a single point.
    DegenerateAxis,
    /// A weighted configuration is not stable, so the requested
    /// construction does not exist.
    NotStable(String),
    /// A polygon is not based at the origin point `*`.
    NotBased,
    /// A side length or weight was zero or negative.
    NonPositiveLength(usize),
    /// Fixed-point iteration exceeded its budget; carries the last residual.
    NoConvergence { iterations: u64, residual: f64 },
    /// A diagonal is degenerate (its endpoints coincide), so the normalized
    /// bending flow is undefined.
    DegenerateDiagonal { index: usize },
    /// A triangle of the triangulation is degenerate.
    DegenerateTriangle { index: usize },
    /// Requested diagonal lengths lie outside (or on the boundary of) the
    /// momentum polyhedron.
    OutsidePolyhedron(String),
    /// Partition enumeration limit: wall detection only supports n <= 24.
    EnumerationLimit(usize),
    /// A numerical routine left its domain of validity.
    Numerical(String),
    /// Invalid input that does not fit a more specific variant.
    Invalid(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DegenerateSegment => write!(f, "degenerate segment"),
            Error::DegenerateAxis => write!(f, "axis endpoints coincide"),
            Error::NotStable(why) => write!(f, "configuration not stable: {why}"),
            Error::NotBased => write!(f, "polygon not based"),
            Error::NonPositiveLength(i) => write!(f, "side length {i} is not positive"),
            Error::NoConvergence { iterations, residual } => write!(
                f,
                "no convergence after {iterations} iterations (last residual {residual:.3e})"
            ),
            Error::DegenerateDiagonal { index } => {
                write!(f, "degenerate diagonal at k = {index}")
            }
            Error::DegenerateTriangle { index } => {
                write!(f, "degenerate triangle at index {index}")
            }
            Error::OutsidePolyhedron(why) => write!(f, "outside momentum polyhedron: {why}"),
            Error::EnumerationLimit(n) => {
                write!(f, "enumeration limit: partition search needs n <= 24, got {n}")
            }
            Error::Numerical(why) => write!(f, "numerical error: {why}"),
            Error::Invalid(why) => write!(f, "invalid input: {why}"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for Error {}
