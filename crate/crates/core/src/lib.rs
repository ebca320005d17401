//! Threshold and 2-threshold functions on a rectangular integer grid,
//! decided with exact integer arithmetic.
//!
//! A `{0,1}`-valued function on the grid `{0,..,m-1} x {0,..,n-1}` is
//! *threshold* when its true and false points are separable by a straight
//! line, and *2-threshold* when it is the conjunction of at most two
//! threshold functions. Non-constant threshold functions correspond
//! one-to-one to oriented prime segments (ordered pairs of adjacent integer
//! points); proper 2-threshold functions are carried by *proper pairs* of
//! such segments. This crate implements the geometric predicates, the
//! representation maps in both directions, essential-point computations,
//! exhaustive enumeration at desk scale, and independent brute-force oracles
//! that cross-check all of it.
//!
//! The [`geom`] module is generic over the signed integer scalar; the grid
//! layer fixes the scalar to `i64` through the aliases at the crate root.

pub mod cli;
pub mod format;
pub mod geom;
pub mod grid;
pub mod oracle;
pub mod threshold;
pub mod two_threshold;

pub use geom::{
    convex_hull, hulls_disjoint, inner_common_tangent, is_prime, orientation, segment_intersection,
    tangent_from_point, Orientation, Scalar, Side,
};
pub use grid::{GridDim, GridFunction};
pub use oracle::{
    check_property, naive_function_from_segment, naive_is_threshold, naive_is_two_threshold,
    PropertyReport,
};
pub use threshold::{
    enumerate_threshold, essential_points_threshold, function_from_segment, is_threshold,
    segment_from_function, separating_inequality, SeparatingInequality,
};
pub use two_threshold::{
    classify_function, classify_pair, construct_proper_pair, count_singleton_proper_pairs,
    enumerate_two_threshold, essential_points_2threshold, find_all_proper_pairs,
    function_from_pair, is_proper_pair, FunctionClass, PairCase, ProperPair,
};

/// The scalar used by the grid-level modules.
pub type Coord = i64;

pub type Point = geom::Point<Coord>;
pub type OrientedSegment = geom::OrientedSegment<Coord>;
pub type ConvexPolygon = geom::ConvexPolygon<Coord>;
pub type RationalPoint = geom::RationalPoint<Coord>;
pub type SegmentIntersection = geom::SegmentIntersection<Coord>;
pub type Contact = geom::Contact<Coord>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("segment endpoints coincide")]
    DegenerateSegment,
    #[error("segment endpoints are not adjacent")]
    NotPrime,
    #[error("point {0} lies outside the grid {1}")]
    OutsideGrid(Point, GridDim),
    #[error("tangent source point lies inside the hull")]
    TangentSourceInHull,
    #[error("operation needs a non-empty hull")]
    EmptyHull,
    #[error("hulls are not disjoint")]
    HullsNotDisjoint,
    #[error("function is constant")]
    ConstantFunction,
    #[error("function is not threshold")]
    NotThreshold,
    #[error("function is not 2-threshold")]
    NotTwoThreshold,
    #[error("function is not proper 2-threshold")]
    NotProper2Threshold,
    #[error("segments do not form a proper pair")]
    NotProperPair,
    #[error("grid has {actual} cells but this operation is limited to {limit}")]
    GuardExceeded { limit: usize, actual: usize },
    #[error("point {0} lies on the grid boundary")]
    BoundaryPoint(Point),
    #[error("invalid grid dimensions {m}x{n}")]
    BadDim { m: i64, n: i64 },
    #[error("unknown property id `{0}`")]
    UnknownProperty(String),
    #[error("internal construction invariant violated: {0}")]
    Construction(String),
}
