use crate::partition::Partition;
use crate::symfunc::Basis;

/// Crate-wide error type. Every fallible operation reports one of these;
/// operations whose contracts cannot fail return plain values.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// Input sequence is not weakly decreasing (after discarding trailing zeros).
    #[error("not a partition: {0:?} is not weakly decreasing")]
    NotAPartition(Vec<u32>),

    /// A skew pair that was required to be a horizontal strip is not one.
    #[error("{mu} is not a horizontal strip over {lambda}")]
    NotAHorizontalStrip { lambda: Partition, mu: Partition },

    /// Strip coordinates out of range for the addable rows of the base shape.
    #[error("strip coordinates {values:?} out of bounds over {lambda}")]
    CoordinatesOutOfBounds { lambda: Partition, values: Vec<u32> },

    /// Partition does not fit in the requested rectangle.
    #[error("{mu} does not fit in a {rows}x{cols} rectangle")]
    RectangleOverflow { mu: Partition, rows: u32, cols: u32 },

    /// A partition key exceeds the degree cutoff of a symmetric function.
    #[error("degree {degree} exceeds cutoff {cutoff}")]
    CutoffExceeded { degree: u32, cutoff: u32 },

    /// The relation handed to `FinitePoset::new` is not a partial order.
    #[error("invalid poset relation: not {0}")]
    InvalidPoset(&'static str),

    /// Poset elements must be pairwise distinct; adjoined bounds must be new.
    #[error("duplicate poset element")]
    DuplicateElement,

    /// Requested element is not in the poset (or not in the expected class).
    #[error("element not found in poset")]
    ElementNotFound,

    /// The poset has no unique maximum, so `1̂`-relative quantities are undefined.
    #[error("poset has no unique maximum")]
    NoMaximum,

    /// A coatom subset has no unique greatest lower bound.
    #[error("meet undefined for a subset of coatoms")]
    MeetUndefined,

    /// A subposet was required to contain every meet of coatoms but does not.
    #[error("subposet does not contain every meet of coatoms")]
    NotMeetClosed,

    /// Sum of two functions written in different bases is not defined.
    #[error("basis mismatch: {left:?} vs {right:?}")]
    BasisMismatch { left: Basis, right: Basis },

    /// `G`-basis data is truncated by definition and needs a finite cutoff.
    #[error("the G basis requires a finite cutoff")]
    InfiniteGrothendieckCutoff,

    /// The operation is only defined for some bases.
    #[error("operation `{op}` is not defined in the {basis:?} basis")]
    UnsupportedBasis { op: &'static str, basis: Basis },

    /// Tableau alphabet too small to represent all monomials faithfully.
    #[error("alphabet of size {alphabet} cannot resolve degree {degree}")]
    AlphabetTooSmall { alphabet: u32, degree: u32 },

    /// Hall pairing against data truncated below the degree of the other factor.
    #[error("cutoff {cutoff} is inconclusive for a pairing of degree {degree}")]
    InconclusivePairing { cutoff: u32, degree: u32 },

    /// `mu` is not in the strip class (at-most-`a` or at-least-`a`) over `lambda`.
    #[error("{mu} is not in the requested strip class over {lambda}")]
    NotInStripClass { lambda: Partition, mu: Partition },
}

pub type Result<T> = std::result::Result<T, Error>;
