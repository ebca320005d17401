//! Proper pairs of oriented prime segments and the 2-threshold functions
//! they define.
//!
//! A pair of segments is *proper* when each endpoint of either segment is a
//! true point of the other segment's threshold function. Proper pairs are
//! exactly the pairs that are collinear and nested, a triangle with one
//! start point on the opposite diagonal, or a counterclockwise
//! quadrilateral; their conjunctions are exactly the functions that are
//! 2-threshold but not threshold, all four endpoints are essential for the
//! defined function, and the representation is unique whenever the function
//! has a true point on the grid boundary.

use std::collections::BTreeSet;
use std::fmt;

use num_integer::Integer;

use crate::geom::{self, strictly_between, Orientation, Side};
use crate::threshold::{self, eval_segment, SegmentAtlas};
use crate::{
    convex_hull, inner_common_tangent, ConvexPolygon, Error, GridDim, GridFunction,
    OrientedSegment, Point,
};

/// Largest grid (in cells) for the classification and pair-search loops.
pub(crate) const CLASSIFY_GUARD: usize = 1024;

/// Largest grid (in cells) for the full 2-threshold census.
pub(crate) const CENSUS_GUARD: usize = 25;

fn guard(dim: GridDim, limit: usize) -> Result<(), Error> {
    if dim.cells() > limit {
        return Err(Error::GuardExceeded {
            limit,
            actual: dim.cells(),
        });
    }
    Ok(())
}

/// An unordered proper pair of oriented prime segments, stored with its
/// segments in lexicographic `(A, B)` order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ProperPair {
    first: OrientedSegment,
    second: OrientedSegment,
}

impl ProperPair {
    /// Builds the canonical pair, rejecting segments that violate the
    /// proper-pair conditions or leave the grid.
    pub fn new(s1: OrientedSegment, s2: OrientedSegment, dim: GridDim) -> Result<Self, Error> {
        if !is_proper_pair(&s1, &s2, dim)? {
            return Err(Error::NotProperPair);
        }
        // Consequences of the pair conditions: the true endpoints differ
        // from the opposite false endpoints, and the false endpoints differ.
        debug_assert!(s1.a() != s2.b() && s2.a() != s1.b() && s1.b() != s2.b());
        Ok(Self::ordered(s1, s2))
    }

    /// Canonical ordering without re-checking the pair conditions.
    pub(crate) fn ordered(s1: OrientedSegment, s2: OrientedSegment) -> Self {
        if s1 <= s2 {
            Self {
                first: s1,
                second: s2,
            }
        } else {
            Self {
                first: s2,
                second: s1,
            }
        }
    }

    pub fn first(&self) -> OrientedSegment {
        self.first
    }

    pub fn second(&self) -> OrientedSegment {
        self.second
    }

    /// The endpoints `[A, B, C, D]` of the two segments in order.
    pub fn endpoints(&self) -> [Point; 4] {
        [
            self.first.a(),
            self.first.b(),
            self.second.a(),
            self.second.b(),
        ]
    }
}

impl fmt::Display for ProperPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}, {}}}", self.first, self.second)
    }
}

/// Classification of a grid function by how many conjuncts it needs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FunctionClass {
    ConstantZero,
    ConstantOne,
    Threshold,
    Proper2Threshold,
    NotTwoThreshold,
}

impl fmt::Display for FunctionClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            FunctionClass::ConstantZero => "ConstantZero",
            FunctionClass::ConstantOne => "ConstantOne",
            FunctionClass::Threshold => "Threshold",
            FunctionClass::Proper2Threshold => "Proper2Threshold",
            FunctionClass::NotTwoThreshold => "NotTwoThreshold",
        };
        f.write_str(name)
    }
}

/// The geometric trichotomy of proper pairs `{A->B, C->D}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PairCase {
    /// All four points collinear with segment `AC` strictly inside `BD`.
    CollinearNested,
    /// `A` strictly inside `BD` and `(C, D, B)` counterclockwise.
    TriangleAInBD,
    /// `C` strictly inside `BD` and `(A, B, D)` counterclockwise.
    TriangleCInBD,
    /// `A, B, C, D` a counterclockwise convex quadrilateral in that order.
    CcwQuadrilateral,
    NotProper,
}

fn require_pair_in_grid(
    s1: &OrientedSegment,
    s2: &OrientedSegment,
    dim: GridDim,
) -> Result<(), Error> {
    for p in [s1.a(), s1.b(), s2.a(), s2.b()] {
        if !dim.contains(p) {
            return Err(Error::OutsideGrid(p, dim));
        }
    }
    Ok(())
}

/// The four proper-pair truth conditions, evaluated pointwise.
pub(crate) fn proper_conditions(s1: &OrientedSegment, s2: &OrientedSegment) -> bool {
    eval_segment(s2, s1.a())
        && eval_segment(s2, s1.b())
        && eval_segment(s1, s2.a())
        && eval_segment(s1, s2.b())
}

/// True when each endpoint of either segment is a true point of the other
/// segment's threshold function.
pub fn is_proper_pair(
    s1: &OrientedSegment,
    s2: &OrientedSegment,
    dim: GridDim,
) -> Result<bool, Error> {
    require_pair_in_grid(s1, s2, dim)?;
    Ok(proper_conditions(s1, s2))
}

/// Purely geometric classification of the pair; `NotProper` exactly when
/// [`is_proper_pair`] is false.
pub fn classify_pair(
    s1: &OrientedSegment,
    s2: &OrientedSegment,
    dim: GridDim,
) -> Result<PairCase, Error> {
    require_pair_in_grid(s1, s2, dim)?;
    Ok(classify_pair_geometry(s1, s2))
}

pub(crate) fn classify_pair_geometry(s1: &OrientedSegment, s2: &OrientedSegment) -> PairCase {
    let (a, b) = (s1.a(), s1.b());
    let (c, d) = (s2.a(), s2.b());
    let ccw = |p, q, r| geom::orientation(p, q, r) == Orientation::Counterclockwise;
    if geom::orientation(a, b, c) == Orientation::Collinear
        && geom::orientation(a, b, d) == Orientation::Collinear
    {
        return if strictly_between(a, b, d) && strictly_between(c, b, d) {
            PairCase::CollinearNested
        } else {
            PairCase::NotProper
        };
    }
    if strictly_between(a, b, d) && ccw(c, d, b) {
        return PairCase::TriangleAInBD;
    }
    if strictly_between(c, b, d) && ccw(a, b, d) {
        return PairCase::TriangleCInBD;
    }
    if ccw(a, b, c) && ccw(b, c, d) && ccw(c, d, a) && ccw(d, a, b) {
        return PairCase::CcwQuadrilateral;
    }
    PairCase::NotProper
}

/// Pointwise conjunction of the two segment functions.
pub fn function_from_pair(
    s1: &OrientedSegment,
    s2: &OrientedSegment,
    dim: GridDim,
) -> Result<GridFunction, Error> {
    let f1 = threshold::function_from_segment(s1, dim)?;
    let f2 = threshold::function_from_segment(s2, dim)?;
    Ok(f1.and(&f2))
}

fn has_defining_pair(atlas: &SegmentAtlas, f: &GridFunction) -> bool {
    let n = atlas.tables.len();
    (0..n).any(|i| {
        ((i + 1)..n).any(|j| GridFunction::and_equals(&atlas.tables[i], &atlas.tables[j], f))
    })
}

pub(crate) fn classify_with(atlas: &SegmentAtlas, f: &GridFunction) -> FunctionClass {
    if f.is_constant_zero() {
        return FunctionClass::ConstantZero;
    }
    if f.is_constant_one() {
        return FunctionClass::ConstantOne;
    }
    if threshold::is_threshold(f) {
        return FunctionClass::Threshold;
    }
    if has_defining_pair(atlas, f) {
        FunctionClass::Proper2Threshold
    } else {
        FunctionClass::NotTwoThreshold
    }
}

/// Classifies a grid function as constant, threshold, proper 2-threshold or
/// neither. Membership in the 2-threshold class is decided exhaustively over
/// conjunctions of segment functions, so the non-threshold branch is guarded
/// at desk scale.
pub fn classify_function(f: &GridFunction) -> Result<FunctionClass, Error> {
    if f.is_constant_zero() {
        return Ok(FunctionClass::ConstantZero);
    }
    if f.is_constant_one() {
        return Ok(FunctionClass::ConstantOne);
    }
    if threshold::is_threshold(f) {
        return Ok(FunctionClass::Threshold);
    }
    guard(f.dim(), CLASSIFY_GUARD)?;
    let atlas = SegmentAtlas::new(f.dim())?;
    Ok(if has_defining_pair(&atlas, f) {
        FunctionClass::Proper2Threshold
    } else {
        FunctionClass::NotTwoThreshold
    })
}

pub(crate) fn find_all_with(atlas: &SegmentAtlas, f: &GridFunction) -> Vec<ProperPair> {
    let n = atlas.tables.len();
    let mut out = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            if GridFunction::and_equals(&atlas.tables[i], &atlas.tables[j], f)
                && proper_conditions(&atlas.segments[i], &atlas.segments[j])
            {
                out.push(ProperPair::ordered(atlas.segments[i], atlas.segments[j]));
            }
        }
    }
    out
}

/// Every proper pair of oriented prime segments whose conjunction equals
/// `f`, in canonical order. Non-empty for every proper 2-threshold function.
pub fn find_all_proper_pairs(f: &GridFunction) -> Result<Vec<ProperPair>, Error> {
    if classify_function(f)? != FunctionClass::Proper2Threshold {
        return Err(Error::NotProper2Threshold);
    }
    let atlas = SegmentAtlas::new(f.dim())?;
    Ok(find_all_with(&atlas, f))
}

fn tangent_segment(
    ones_hull: &ConvexPolygon,
    zone_hull: &ConvexPolygon,
) -> Result<OrientedSegment, Error> {
    let (on_ones, on_zone) = inner_common_tangent(ones_hull, zone_hull, Side::Left)
        .map_err(|e| Error::Construction(format!("tangent to a zone hull failed: {e}")))?;
    let (a, b) = threshold::nearest_contact_pair(&on_ones, &on_zone);
    OrientedSegment::new(a, b)
        .map_err(|_| Error::Construction("nearest tangent contacts are not adjacent".into()))
}

pub(crate) fn construct_with(atlas: &SegmentAtlas, f: &GridFunction) -> Result<ProperPair, Error> {
    let dim = f.dim();
    let ones_hull = convex_hull(&f.true_points());

    // Two false points whose connecting segment meets the hull of the true
    // points; such a pair exists because f is not threshold. Take the
    // lexicographically smallest ordered pair.
    let mut zeros = f.false_points();
    zeros.sort_unstable();
    let mut witness = None;
    'search: for &x in &zeros {
        for &y in &zeros {
            if x != y && !geom::hulls_disjoint(&convex_hull(&[x, y]), &ones_hull) {
                witness = Some((x, y));
                break 'search;
            }
        }
    }
    let (wx, wy) = witness.ok_or_else(|| {
        Error::Construction("no segment of false points meets the true hull".into())
    })?;

    // Ordered defining pairs with the witness roles fixed: the first conjunct
    // is false at wx and true at wy, the second the other way around.
    let n = atlas.tables.len();
    let mut family = Vec::new();
    for i in 0..n {
        let ti = &atlas.tables[i];
        if ti.value(wx) || !ti.value(wy) {
            continue;
        }
        for j in 0..n {
            if i == j {
                continue;
            }
            let tj = &atlas.tables[j];
            if GridFunction::and_equals(ti, tj, f) && tj.value(wx) && !tj.value(wy) {
                family.push((i, j));
            }
        }
    }
    if family.is_empty() {
        return Err(Error::Construction(
            "the ordered defining family is empty".into(),
        ));
    }

    // Intersect the witness-side regions over the whole family. Both zones
    // are non-empty (they hold the witnesses) and disjoint from the true
    // hull, so the left inner common tangents below are well defined.
    let mut zone_x = GridFunction::constant(dim, true);
    let mut zone_y = GridFunction::constant(dim, true);
    for &(i, j) in &family {
        zone_x = zone_x
            .and(&atlas.tables[i].complement())
            .and(&atlas.tables[j]);
        zone_y = zone_y
            .and(&atlas.tables[i])
            .and(&atlas.tables[j].complement());
    }
    debug_assert!(zone_x.value(wx) && zone_y.value(wy));

    let s1 = tangent_segment(&ones_hull, &convex_hull(&zone_x.true_points()))?;
    let s2 = tangent_segment(&ones_hull, &convex_hull(&zone_y.true_points()))?;

    if !proper_conditions(&s1, &s2) {
        return Err(Error::Construction("constructed pair is not proper".into()));
    }
    if function_from_pair(&s1, &s2, dim)? != *f {
        return Err(Error::Construction(
            "constructed pair does not reproduce the function".into(),
        ));
    }
    Ok(ProperPair::ordered(s1, s2))
}

/// Builds one defining proper pair for a proper 2-threshold function by the
/// constructive route: pick two false witness points whose segment meets the
/// true hull, intersect the corresponding sides of every ordered defining
/// pair, and take minimum-length contacts of the left inner common tangents
/// from the true hull to the two resulting zones.
pub fn construct_proper_pair(f: &GridFunction) -> Result<ProperPair, Error> {
    if classify_function(f)? != FunctionClass::Proper2Threshold {
        return Err(Error::NotProper2Threshold);
    }
    let atlas = SegmentAtlas::new(f.dim())?;
    construct_with(&atlas, f)
}

pub(crate) fn essential_with(atlas: &SegmentAtlas, f: &GridFunction) -> Vec<Point> {
    let mut out: Vec<Point> = f
        .dim()
        .points()
        .filter(|&p| classify_with(atlas, &f.flipped(p)) != FunctionClass::NotTwoThreshold)
        .collect();
    out.sort_unstable();
    out
}

/// Grid points whose single-bit flip keeps the function 2-threshold
/// (constants and threshold functions included). The input must itself be
/// threshold or proper 2-threshold.
pub fn essential_points_2threshold(f: &GridFunction) -> Result<Vec<Point>, Error> {
    guard(f.dim(), CLASSIFY_GUARD)?;
    match classify_function(f)? {
        FunctionClass::Threshold | FunctionClass::Proper2Threshold => {}
        FunctionClass::ConstantZero | FunctionClass::ConstantOne => {
            return Err(Error::ConstantFunction)
        }
        FunctionClass::NotTwoThreshold => return Err(Error::NotTwoThreshold),
    }
    let atlas = SegmentAtlas::new(f.dim())?;
    Ok(essential_with(&atlas, f))
}

/// Exact number of proper pairs defining the singleton function with the
/// single true point `a`, for `a` strictly inside the grid.
///
/// Every such pair shares `a` as the true endpoint of both segments and its
/// false endpoints are the two opposite unit steps of one primitive
/// direction, so the count is the number of primitive vectors, up to sign,
/// that keep both neighbors inside the grid.
pub fn count_singleton_proper_pairs(dim: GridDim, a: Point) -> Result<u64, Error> {
    if !dim.contains(a) {
        return Err(Error::OutsideGrid(a, dim));
    }
    if dim.on_boundary(a) {
        return Err(Error::BoundaryPoint(a));
    }
    let reach_x = a.x.min(dim.m() - 1 - a.x);
    let reach_y = a.y.min(dim.n() - 1 - a.y);
    let mut count = 1u64; // the vertical direction (0, 1)
    for dx in 1..=reach_x {
        for dy in -reach_y..=reach_y {
            if dx.gcd(&dy) == 1 {
                count += 1;
            }
        }
    }
    Ok(count)
}

/// All distinct 2-threshold functions on the grid (constants and threshold
/// functions included), sorted by truth table.
pub fn enumerate_two_threshold(dim: GridDim) -> Result<Vec<GridFunction>, Error> {
    guard(dim, CENSUS_GUARD)?;
    let atlas = SegmentAtlas::new(dim)?;
    let mut set: BTreeSet<GridFunction> = BTreeSet::new();
    set.insert(GridFunction::constant(dim, false));
    set.insert(GridFunction::constant(dim, true));
    for t in &atlas.tables {
        set.insert(t.clone());
    }
    let n = atlas.tables.len();
    for i in 0..n {
        for j in (i + 1)..n {
            set.insert(atlas.tables[i].and(&atlas.tables[j]));
        }
    }
    Ok(set.into_iter().collect())
}
