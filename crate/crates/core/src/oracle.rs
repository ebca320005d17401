//! Brute-force reference implementations and exhaustive property sweeps.
//!
//! The naive evaluators re-derive everything from the bare definitions with
//! their own arithmetic (cofactor determinants, squared distances, raw gcd
//! adjacency) and share no geometric predicate code with the main modules,
//! so agreement between the two routes is meaningful evidence.
//! [`check_property`] runs one of the registered sweeps over its stated
//! domain and reports every counterexample found; the guards are hard limits
//! with explicit errors, never silent truncation.

use std::collections::{BTreeMap, BTreeSet};

use num_integer::Integer;
use num_rational::Ratio;

use crate::geom::{self, Orientation, Side};
use crate::threshold::{self, SegmentAtlas};
use crate::two_threshold::{self, FunctionClass, PairCase, ProperPair};
use crate::{
    convex_hull, hulls_disjoint, inner_common_tangent, segment_intersection, tangent_from_point,
    ConvexPolygon, Error, GridDim, GridFunction, OrientedSegment, Point, SegmentIntersection,
};

/// Largest grid (in cells) for the naive threshold membership test.
pub(crate) const NAIVE_THRESHOLD_GUARD: usize = 64;

/// Largest grid (in cells) for the naive 2-threshold membership test.
pub(crate) const NAIVE_TWO_THRESHOLD_GUARD: usize = 25;

fn guard(dim: GridDim, limit: usize) -> Result<(), Error> {
    if dim.cells() > limit {
        return Err(Error::GuardExceeded {
            limit,
            actual: dim.cells(),
        });
    }
    Ok(())
}

/// Cofactor expansion of the 3x3 orientation determinant; positive means the
/// triple turns counterclockwise. Deliberately not the main module's form.
fn naive_det(a: Point, b: Point, x: Point) -> i64 {
    a.x * (b.y - x.y) - a.y * (b.x - x.x) + (b.x * x.y - b.y * x.x)
}

fn naive_adjacent(a: Point, b: Point) -> bool {
    a != b && (b.x - a.x).abs().gcd(&(b.y - a.y).abs()) == 1
}

/// Literal evaluation of the three defining clauses of a segment function:
/// off-line points by determinant sign, on-line points by comparing true
/// squared Euclidean distances to the endpoints.
fn naive_eval(a: Point, b: Point, x: Point) -> bool {
    let det = naive_det(a, b, x);
    if det != 0 {
        return det > 0;
    }
    let sq = |p: Point, q: Point| (p.x - q.x).pow(2) + (p.y - q.y).pow(2);
    sq(a, x) < sq(b, x)
}

/// All ordered adjacent point pairs of the grid, in lexicographic order,
/// enumerated with the oracle's own adjacency test.
fn naive_segment_pairs(dim: GridDim) -> Vec<(Point, Point)> {
    let mut pts: Vec<Point> = dim.points().collect();
    pts.sort_unstable();
    let mut out = Vec::new();
    for &a in &pts {
        for &b in &pts {
            if naive_adjacent(a, b) {
                out.push((a, b));
            }
        }
    }
    out
}

fn naive_table(dim: GridDim, a: Point, b: Point) -> GridFunction {
    GridFunction::from_fn(dim, |x| naive_eval(a, b, x))
}

/// Per-point evaluation of the segment function straight from its
/// definition; no shortcuts shared with the fast path.
pub fn naive_function_from_segment(
    seg: &OrientedSegment,
    dim: GridDim,
) -> Result<GridFunction, Error> {
    for p in [seg.a(), seg.b()] {
        if !dim.contains(p) {
            return Err(Error::OutsideGrid(p, dim));
        }
    }
    Ok(naive_table(dim, seg.a(), seg.b()))
}

/// True iff the function is constant or appears among the truth tables of
/// all naive segment functions. Independent of the hull code.
pub fn naive_is_threshold(f: &GridFunction) -> Result<bool, Error> {
    guard(f.dim(), NAIVE_THRESHOLD_GUARD)?;
    if f.is_constant() {
        return Ok(true);
    }
    Ok(naive_segment_pairs(f.dim())
        .into_iter()
        .any(|(a, b)| naive_table(f.dim(), a, b) == *f))
}

/// True iff the function is naive-threshold or equals the conjunction of two
/// naive segment tables.
pub fn naive_is_two_threshold(f: &GridFunction) -> Result<bool, Error> {
    guard(f.dim(), NAIVE_TWO_THRESHOLD_GUARD)?;
    if naive_is_threshold(f)? {
        return Ok(true);
    }
    let dim = f.dim();
    let tables: Vec<GridFunction> = naive_segment_pairs(dim)
        .into_iter()
        .map(|(a, b)| naive_table(dim, a, b))
        .collect();
    for i in 0..tables.len() {
        for j in (i + 1)..tables.len() {
            if GridFunction::and_equals(&tables[i], &tables[j], f) {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

/// Outcome of one exhaustive property sweep. `failures` is empty exactly
/// when the property held on the whole checked domain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropertyReport {
    pub property_id: String,
    pub dim: GridDim,
    pub cases_checked: u64,
    pub failures: Vec<String>,
}

impl PropertyReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Counterexample collector; keeps the report readable when something is
/// badly broken.
struct Failures {
    total: u64,
    items: Vec<String>,
}

const FAILURE_LIST_CAP: usize = 20;

impl Failures {
    fn new() -> Self {
        Self {
            total: 0,
            items: Vec::new(),
        }
    }

    fn push(&mut self, item: String) {
        self.total += 1;
        if self.items.len() < FAILURE_LIST_CAP {
            self.items.push(item);
        }
    }

    fn into_vec(mut self) -> Vec<String> {
        if self.total > self.items.len() as u64 {
            let hidden = self.total - self.items.len() as u64;
            self.items
                .push(format!("... and {hidden} more counterexamples"));
        }
        self.items
    }
}

type PropResult = Result<(u64, Vec<String>), Error>;

fn box_points(dim: GridDim) -> Vec<Point> {
    dim.points().collect()
}

// ---------------------------------------------------------------------------
// Orientation and hull sweeps (the grid is read as a coordinate box).
// ---------------------------------------------------------------------------

fn prop_orientation_antisymmetry(dim: GridDim) -> PropResult {
    guard(dim, 64)?;
    let pts = box_points(dim);
    let mut cases = 0;
    let mut fails = Failures::new();
    for &a in &pts {
        for &b in &pts {
            for &c in &pts {
                cases += 1;
                if geom::orientation(a, b, c) != geom::orientation(b, a, c).opposite() {
                    fails.push(format!("a={a} b={b} c={c}"));
                }
            }
        }
    }
    Ok((cases, fails.into_vec()))
}

/// Triangles over a common base are co-oriented iff the connecting segment
/// misses the base line.
fn prop_same_orientation(dim: GridDim) -> PropResult {
    guard(dim, 64)?;
    let pts = box_points(dim);
    let mut cases = 0;
    let mut fails = Failures::new();
    for &a in &pts {
        for &b in &pts {
            if a == b {
                continue;
            }
            for &c in &pts {
                let sc = naive_det(a, b, c);
                if sc == 0 {
                    continue;
                }
                for &d in &pts {
                    let sd = naive_det(a, b, d);
                    if sd == 0 {
                        continue;
                    }
                    cases += 1;
                    let same = geom::orientation(a, b, c) == geom::orientation(a, b, d);
                    let crosses = (sc > 0) != (sd > 0);
                    if same == crosses {
                        fails.push(format!("a={a} b={b} c={c} d={d}"));
                    }
                }
            }
        }
    }
    Ok((cases, fails.into_vec()))
}

/// Collinear co-oriented prime segments see every off-line point with the
/// same orientation.
fn prop_collinear_segments(dim: GridDim) -> PropResult {
    guard(dim, 64)?;
    let pts = box_points(dim);
    let reach = dim.m() + dim.n();
    let mut cases = 0;
    let mut fails = Failures::new();
    for &a in &pts {
        for &b in &pts {
            if !naive_adjacent(a, b) {
                continue;
            }
            let step = Point::new(b.x - a.x, b.y - a.y);
            for k in -reach..=reach {
                let c = Point::new(a.x + k * step.x, a.y + k * step.y);
                let d = Point::new(b.x + k * step.x, b.y + k * step.y);
                if !dim.contains(c) || !dim.contains(d) {
                    continue;
                }
                for &e in &pts {
                    if naive_det(a, b, e) == 0 {
                        continue;
                    }
                    cases += 1;
                    if geom::orientation(a, b, e) != geom::orientation(c, d, e) {
                        fails.push(format!("a={a} b={b} shift={k} e={e}"));
                    }
                }
            }
        }
    }
    Ok((cases, fails.into_vec()))
}

/// If three of the four triangles over `d` share an orientation, the outer
/// triangle shares it too.
fn prop_clockwise_triangles(dim: GridDim) -> PropResult {
    guard(dim, 36)?;
    let pts = box_points(dim);
    let mut cases = 0;
    let mut fails = Failures::new();
    for &a in &pts {
        for &b in &pts {
            if b == a {
                continue;
            }
            for &c in &pts {
                if c == a || c == b {
                    continue;
                }
                for &d in &pts {
                    if d == a || d == b || d == c {
                        continue;
                    }
                    let o = geom::orientation(a, b, d);
                    if o == Orientation::Collinear
                        || geom::orientation(b, c, d) != o
                        || geom::orientation(c, a, d) != o
                    {
                        continue;
                    }
                    cases += 1;
                    if geom::orientation(a, b, c) != o {
                        fails.push(format!("a={a} b={b} c={c} d={d}"));
                    }
                }
            }
        }
    }
    Ok((cases, fails.into_vec()))
}

/// Four co-oriented consecutive triples form a convex quadrilateral with
/// edges in that cyclic order.
fn prop_convex_quadrilateral(dim: GridDim) -> PropResult {
    guard(dim, 36)?;
    let pts = box_points(dim);
    let mut cases = 0;
    let mut fails = Failures::new();
    for &a in &pts {
        for &b in &pts {
            for &c in &pts {
                let o = geom::orientation(a, b, c);
                if o == Orientation::Collinear {
                    continue;
                }
                for &d in &pts {
                    if geom::orientation(b, c, d) != o
                        || geom::orientation(c, d, a) != o
                        || geom::orientation(d, a, b) != o
                    {
                        continue;
                    }
                    cases += 1;
                    let hull = convex_hull(&[a, b, c, d]);
                    let vs = hull.vertices();
                    let pos = vs.iter().position(|&v| v == a);
                    let ok = vs.len() == 4
                        && pos.is_some_and(|i| {
                            let cyc = [vs[i], vs[(i + 1) % 4], vs[(i + 2) % 4], vs[(i + 3) % 4]];
                            match o {
                                Orientation::Counterclockwise => cyc == [a, b, c, d],
                                Orientation::Clockwise => cyc == [a, d, c, b],
                                Orientation::Collinear => unreachable!(),
                            }
                        });
                    if !ok {
                        fails.push(format!("a={a} b={b} c={c} d={d}"));
                    }
                }
            }
        }
    }
    Ok((cases, fails.into_vec()))
}

/// Hulls of every subset of a small corner box, deduplicated.
fn sample_hulls(dim: GridDim) -> Vec<ConvexPolygon> {
    let bm = dim.m().min(3);
    let bn = dim.n().min(3);
    let base: Vec<Point> = (0..bn)
        .flat_map(|y| (0..bm).map(move |x| Point::new(x, y)))
        .collect();
    let mut hulls = BTreeSet::new();
    for mask in 1u32..(1 << base.len()) {
        let subset: Vec<Point> = base
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &p)| p)
            .collect();
        hulls.insert(convex_hull(&subset));
    }
    hulls.into_iter().collect()
}

/// A side tangent from `x` stays the same tangent from any other point `y`
/// of the line iff the segment `xy` misses the hull.
fn prop_tangent_on_line(dim: GridDim) -> PropResult {
    guard(dim, 64)?;
    let pts = box_points(dim);
    let mut cases = 0;
    let mut fails = Failures::new();
    for hull in sample_hulls(dim) {
        for &x in &pts {
            if hull.contains(x) {
                continue;
            }
            for side in [Side::Left, Side::Right] {
                let cx = tangent_from_point(x, &hull, side)?;
                let c0 = cx.points().next().expect("contact is non-empty");
                let on_line = |q: Point| geom::orientation(x, c0, q) == Orientation::Collinear;
                // A hull inside its own tangent line makes the side label
                // vacuous; skip those.
                if hull.vertices().iter().all(|&v| on_line(v)) {
                    continue;
                }
                for &y in &pts {
                    if y == x || hull.contains(y) || !on_line(y) {
                        continue;
                    }
                    cases += 1;
                    let ty = tangent_from_point(y, &hull, side)?;
                    let same_line = ty.points().all(on_line);
                    let misses = hulls_disjoint(&convex_hull(&[x, y]), &hull);
                    if same_line != misses {
                        fails.push(format!(
                            "hull={:?} x={x} y={y} side={side:?}",
                            hull.vertices()
                        ));
                    }
                }
            }
        }
    }
    Ok((cases, fails.into_vec()))
}

fn prop_hull_idempotence(dim: GridDim) -> PropResult {
    guard(dim, 12)?;
    let pts = box_points(dim);
    let mut cases = 0;
    let mut fails = Failures::new();
    for mask in 0u32..(1 << pts.len()) {
        let subset: Vec<Point> = pts
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &p)| p)
            .collect();
        cases += 1;
        let h = convex_hull(&subset);
        if convex_hull(h.vertices()) != h {
            fails.push(format!("not idempotent for {subset:?}"));
        }
        if subset.iter().any(|&p| !h.contains(p)) {
            fails.push(format!("hull misses an input point of {subset:?}"));
        }
    }
    Ok((cases, fails.into_vec()))
}

/// The inner common tangent of the two hulls of a segment function strictly
/// separates the off-line parts.
fn prop_tangent_separation(dim: GridDim) -> PropResult {
    let entries = threshold::enumerate_threshold(dim)?;
    let mut cases = 0;
    let mut fails = Failures::new();
    for (seg, f) in &entries {
        let ones = convex_hull(&f.true_points());
        let zeros = convex_hull(&f.false_points());
        for side in [Side::Left, Side::Right] {
            cases += 1;
            let (c1, c0) = inner_common_tangent(&ones, &zeros, side)?;
            let p = c1.points().next().expect("contact is non-empty");
            let q = c0.points().next().expect("contact is non-empty");
            let side_of = |h: &ConvexPolygon| -> BTreeSet<bool> {
                h.vertices()
                    .iter()
                    .filter_map(|&v| match geom::orientation(p, q, v) {
                        Orientation::Collinear => None,
                        o => Some(o == Orientation::Counterclockwise),
                    })
                    .collect()
            };
            let s1 = side_of(&ones);
            let s0 = side_of(&zeros);
            let separated = s1.len() <= 1 && s0.len() <= 1 && s1.is_disjoint(&s0);
            if !separated {
                fails.push(format!("{seg} side={side:?}"));
            }
        }
    }
    Ok((cases, fails.into_vec()))
}

// ---------------------------------------------------------------------------
// Threshold-function sweeps.
// ---------------------------------------------------------------------------

fn all_functions(dim: GridDim) -> impl Iterator<Item = GridFunction> {
    let cells = dim.cells();
    (0u64..(1 << cells))
        .map(move |mask| GridFunction::from_fn(dim, |p| mask >> dim.index(p) & 1 == 1))
}

/// Segment enumeration is a bijection onto non-constant threshold functions.
fn prop_threshold_bijection(dim: GridDim) -> PropResult {
    let entries = threshold::enumerate_threshold(dim)?;
    let mut cases = 0;
    let mut fails = Failures::new();
    let mut tables = BTreeSet::new();
    for (seg, f) in &entries {
        cases += 1;
        if f.is_constant() {
            fails.push(format!("{seg} carries a constant table"));
        }
        if !threshold::is_threshold(f) {
            fails.push(format!("{seg} carries a non-threshold table"));
        }
        if !tables.insert(f.clone()) {
            fails.push(format!("{seg} duplicates another segment's table"));
        }
    }
    if dim.cells() <= 16 {
        // Against the oracle: the enumerated tables are exactly the
        // non-constant functions the naive route accepts.
        let naive_set: BTreeSet<GridFunction> = naive_segment_pairs(dim)
            .into_iter()
            .map(|(a, b)| naive_table(dim, a, b))
            .collect();
        for f in all_functions(dim) {
            cases += 1;
            let enumerated = tables.contains(&f);
            let naive = !f.is_constant() && naive_set.contains(&f);
            if enumerated != naive {
                fails.push(format!("disagreement on {:?}", f.true_points()));
            }
        }
    }
    Ok((cases, fails.into_vec()))
}

fn prop_threshold_round_trip(dim: GridDim) -> PropResult {
    let entries = threshold::enumerate_threshold(dim)?;
    let mut cases = 0;
    let mut fails = Failures::new();
    for (seg, f) in &entries {
        cases += 1;
        match threshold::segment_from_function(f) {
            Ok(back) if back == *seg => {}
            Ok(back) => fails.push(format!("{seg} came back as {back}")),
            Err(e) => fails.push(format!("{seg} failed to come back: {e}")),
        }
    }
    Ok((cases, fails.into_vec()))
}

fn prop_inequality_consistency(dim: GridDim) -> PropResult {
    let entries = threshold::enumerate_threshold(dim)?;
    let mut cases = 0;
    let mut fails = Failures::new();
    for (seg, f) in &entries {
        let q = threshold::separating_inequality(seg, dim)?;
        for x in dim.points() {
            cases += 1;
            if q.holds_at(x) != f.value(x) {
                fails.push(format!("{seg} at {x}: inequality {q}"));
            }
        }
    }
    Ok((cases, fails.into_vec()))
}

/// On the carrier line, a true point has `A` between it and `B`, and a false
/// point has `B` between it and `A`.
fn prop_points_on_line(dim: GridDim) -> PropResult {
    let entries = threshold::enumerate_threshold(dim)?;
    let mut cases = 0;
    let mut fails = Failures::new();
    for (seg, f) in &entries {
        let (a, b) = (seg.a(), seg.b());
        for c in dim.points() {
            if geom::orientation(a, b, c) != Orientation::Collinear {
                continue;
            }
            cases += 1;
            let ok = if f.value(c) {
                geom::on_segment(a, b, c)
            } else {
                geom::on_segment(b, a, c)
            };
            if !ok {
                fails.push(format!("{seg} at {c}"));
            }
        }
    }
    Ok((cases, fails.into_vec()))
}

/// The carrier line of a segment is the left inner common tangent of the
/// true and false hulls.
fn prop_threshold_left_tangent(dim: GridDim) -> PropResult {
    let entries = threshold::enumerate_threshold(dim)?;
    let mut cases = 0;
    let mut fails = Failures::new();
    for (seg, f) in &entries {
        cases += 1;
        let ones = convex_hull(&f.true_points());
        let zeros = convex_hull(&f.false_points());
        let (c1, c0) = inner_common_tangent(&ones, &zeros, Side::Left)?;
        let p = c1.points().next().expect("contact is non-empty");
        let q = c0.points().next().expect("contact is non-empty");
        let on_line = |r: Point| geom::orientation(p, q, r) == Orientation::Collinear;
        if !on_line(seg.a()) || !on_line(seg.b()) {
            fails.push(format!("{seg} not on its tangent line"));
        }
    }
    Ok((cases, fails.into_vec()))
}

fn prop_threshold_endpoints_essential(dim: GridDim) -> PropResult {
    let entries = threshold::enumerate_threshold(dim)?;
    let mut cases = 0;
    let mut fails = Failures::new();
    for (seg, f) in &entries {
        cases += 1;
        let essential = threshold::essential_points_threshold(f)?;
        if !essential.contains(&seg.a()) || !essential.contains(&seg.b()) {
            fails.push(format!("{seg}"));
        }
    }
    Ok((cases, fails.into_vec()))
}

// ---------------------------------------------------------------------------
// Proper-pair sweeps.
// ---------------------------------------------------------------------------

/// The geometric trichotomy matches the truth-value definition of proper
/// pairs on every ordered pair of segments.
fn prop_thm4_iff(dim: GridDim) -> PropResult {
    guard(dim, 64)?;
    let segs = threshold::oriented_prime_segments(dim);
    let mut cases = 0;
    let mut fails = Failures::new();
    for s1 in &segs {
        for s2 in &segs {
            cases += 1;
            let by_case = two_threshold::classify_pair_geometry(s1, s2) != PairCase::NotProper;
            let by_truth = two_threshold::proper_conditions(s1, s2);
            if by_case != by_truth {
                fails.push(format!(
                    "{s1} {s2}: case says {by_case}, truth values say {by_truth}"
                ));
            }
        }
    }
    Ok((cases, fails.into_vec()))
}

fn proper_pairs_with_tables(
    atlas: &SegmentAtlas,
) -> Vec<(OrientedSegment, OrientedSegment, GridFunction)> {
    let n = atlas.segments.len();
    let mut out = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            if two_threshold::proper_conditions(&atlas.segments[i], &atlas.segments[j]) {
                out.push((
                    atlas.segments[i],
                    atlas.segments[j],
                    atlas.tables[i].and(&atlas.tables[j]),
                ));
            }
        }
    }
    out
}

/// For every proper pair the segments `AC` and `BD` meet and the defined
/// function is not threshold.
fn prop_zeros_ones_intersection(dim: GridDim) -> PropResult {
    let atlas = SegmentAtlas::new(dim)?;
    let mut cases = 0;
    let mut fails = Failures::new();
    for (s1, s2, f) in proper_pairs_with_tables(&atlas) {
        cases += 1;
        let meets =
            segment_intersection((s1.a(), s2.a()), (s1.b(), s2.b())) != SegmentIntersection::Empty;
        if !meets {
            fails.push(format!("{s1} {s2}: AC misses BD"));
        }
        if threshold::is_threshold(&f) {
            fails.push(format!("{s1} {s2}: conjunction is threshold"));
        }
    }
    Ok((cases, fails.into_vec()))
}

/// A collinear nested proper pair has exactly the grid points of `AC` as
/// true points.
fn prop_all_ones_on_line(dim: GridDim) -> PropResult {
    let atlas = SegmentAtlas::new(dim)?;
    let mut cases = 0;
    let mut fails = Failures::new();
    for (s1, s2, f) in proper_pairs_with_tables(&atlas) {
        if two_threshold::classify_pair_geometry(&s1, &s2) != PairCase::CollinearNested {
            continue;
        }
        cases += 1;
        let expected: Vec<Point> = dim
            .points()
            .filter(|&q| geom::on_segment(q, s1.a(), s2.a()))
            .collect();
        if f.true_points() != expected {
            fails.push(format!("{s1} {s2}"));
        }
    }
    Ok((cases, fails.into_vec()))
}

/// The segments of a proper pair meet iff the defined function is the
/// singleton at `A`.
fn prop_superb_intersect(dim: GridDim) -> PropResult {
    let atlas = SegmentAtlas::new(dim)?;
    let mut cases = 0;
    let mut fails = Failures::new();
    for (s1, s2, f) in proper_pairs_with_tables(&atlas) {
        cases += 1;
        let meets =
            segment_intersection((s1.a(), s1.b()), (s2.a(), s2.b())) != SegmentIntersection::Empty;
        let singleton_at_a = f.count_true() == 1 && f.value(s1.a());
        if meets != singleton_at_a {
            fails.push(format!("{s1} {s2}"));
        }
    }
    Ok((cases, fails.into_vec()))
}

fn zeros_ones_premise(atlas: &SegmentAtlas, i: usize, j: usize) -> bool {
    let (s1, s2) = (&atlas.segments[i], &atlas.segments[j]);
    let (fab, fcd) = (&atlas.tables[i], &atlas.tables[j]);
    i != j && fab.value(s2.a()) && !fab.value(s2.b()) && fcd.value(s1.a())
}

/// Distinct segments with `f_AB(C)=1`, `f_AB(D)=0`, `f_CD(A)=1` also satisfy
/// `f_CD(B)=1`, have `B, C, D` non-collinear, and `A` inside triangle `BCD`.
fn prop_segments_zeros_ones(dim: GridDim) -> PropResult {
    let atlas = SegmentAtlas::new(dim)?;
    let n = atlas.segments.len();
    let mut cases = 0;
    let mut fails = Failures::new();
    for i in 0..n {
        for j in 0..n {
            if !zeros_ones_premise(&atlas, i, j) {
                continue;
            }
            cases += 1;
            let (s1, s2) = (&atlas.segments[i], &atlas.segments[j]);
            let (a, b, c, d) = (s1.a(), s1.b(), s2.a(), s2.b());
            if !atlas.tables[j].value(b) {
                fails.push(format!("{s1} {s2}: f_CD(B) = 0"));
            }
            if geom::orientation(b, c, d) == Orientation::Collinear {
                fails.push(format!("{s1} {s2}: B, C, D collinear"));
            }
            if !convex_hull(&[b, c, d]).contains(a) {
                fails.push(format!("{s1} {s2}: A outside BCD"));
            }
        }
    }
    Ok((cases, fails.into_vec()))
}

/// Under the same premise, the carrier line of `AB` meets segment `CD` in a
/// single point `X` with `A` on the closed segment `XB`.
fn prop_intersection_is_point(dim: GridDim) -> PropResult {
    let atlas = SegmentAtlas::new(dim)?;
    let n = atlas.segments.len();
    let mut cases = 0;
    let mut fails = Failures::new();
    for i in 0..n {
        for j in 0..n {
            if !zeros_ones_premise(&atlas, i, j) {
                continue;
            }
            cases += 1;
            let (s1, s2) = (&atlas.segments[i], &atlas.segments[j]);
            let (a, b, c, d) = (s1.a(), s1.b(), s2.a(), s2.b());
            // Signed positions of C and D against the line through A, B; the
            // line hits CD where the interpolation crosses zero.
            let sc = geom::cross(a, b, c);
            let sd = geom::cross(a, b, d);
            if sc == sd {
                fails.push(format!("{s1} {s2}: line(AB) misses or contains CD"));
                continue;
            }
            let t = Ratio::new(sc, sc - sd);
            if t < Ratio::from_integer(0) || t > Ratio::from_integer(1) {
                fails.push(format!("{s1} {s2}: crossing parameter {t} outside CD"));
                continue;
            }
            let xx = Ratio::from_integer(c.x) + t * Ratio::from_integer(d.x - c.x);
            let xy = Ratio::from_integer(c.y) + t * Ratio::from_integer(d.y - c.y);
            // Parameter of X along A -> B; A sits at 0 and B at 1, so A lies
            // on XB exactly when the parameter is non-positive.
            let u = if b.x != a.x {
                (xx - Ratio::from_integer(a.x)) / Ratio::from_integer(b.x - a.x)
            } else {
                (xy - Ratio::from_integer(a.y)) / Ratio::from_integer(b.y - a.y)
            };
            if u > Ratio::from_integer(0) {
                fails.push(format!("{s1} {s2}: A not on XB"));
            }
        }
    }
    Ok((cases, fails.into_vec()))
}

/// All four endpoints of a proper pair are essential for the function the
/// pair defines.
fn prop_thm4_essentiality(dim: GridDim) -> PropResult {
    let atlas = SegmentAtlas::new(dim)?;
    let mut by_function: BTreeMap<GridFunction, Vec<(OrientedSegment, OrientedSegment)>> =
        BTreeMap::new();
    for (s1, s2, f) in proper_pairs_with_tables(&atlas) {
        by_function.entry(f).or_default().push((s1, s2));
    }
    let mut cases = 0;
    let mut fails = Failures::new();
    for (f, pairs) in &by_function {
        let essential = two_threshold::essential_with(&atlas, f);
        for (s1, s2) in pairs {
            cases += 1;
            for q in [s1.a(), s1.b(), s2.a(), s2.b()] {
                if essential.binary_search(&q).is_err() {
                    fails.push(format!("{s1} {s2}: {q} not essential"));
                }
            }
        }
    }
    Ok((cases, fails.into_vec()))
}

// ---------------------------------------------------------------------------
// Existence, uniqueness and counting sweeps.
// ---------------------------------------------------------------------------

/// Every proper 2-threshold function has a defining proper pair, and the
/// constructive route returns one of them.
fn prop_thm5_existence(dim: GridDim) -> PropResult {
    let census = two_threshold::enumerate_two_threshold(dim)?;
    let atlas = SegmentAtlas::new(dim)?;
    let mut cases = 0;
    let mut fails = Failures::new();
    for f in &census {
        if two_threshold::classify_with(&atlas, f) != FunctionClass::Proper2Threshold {
            continue;
        }
        cases += 1;
        let pairs = two_threshold::find_all_with(&atlas, f);
        if pairs.is_empty() {
            fails.push(format!("no proper pair for {:?}", f.true_points()));
            continue;
        }
        match two_threshold::construct_with(&atlas, f) {
            Ok(pair) => {
                if !pairs.contains(&pair) {
                    fails.push(format!(
                        "constructed {pair} missing from the exhaustive list"
                    ));
                }
            }
            Err(e) => fails.push(format!("construction failed: {e}")),
        }
    }
    Ok((cases, fails.into_vec()))
}

/// A proper 2-threshold function with a true point on the grid boundary has
/// exactly one defining proper pair.
fn prop_thm5_uniqueness_boundary(dim: GridDim) -> PropResult {
    let census = two_threshold::enumerate_two_threshold(dim)?;
    let atlas = SegmentAtlas::new(dim)?;
    let mut cases = 0;
    let mut fails = Failures::new();
    for f in &census {
        if two_threshold::classify_with(&atlas, f) != FunctionClass::Proper2Threshold {
            continue;
        }
        if !f.true_points().iter().any(|&p| dim.on_boundary(p)) {
            continue;
        }
        cases += 1;
        let pairs = two_threshold::find_all_with(&atlas, f);
        if pairs.len() != 1 {
            fails.push(format!(
                "{} pairs for boundary function {:?}",
                pairs.len(),
                f.true_points()
            ));
        }
    }
    Ok((cases, fails.into_vec()))
}

/// A boundary non-corner singleton is defined by exactly the pair of unit
/// steps along its boundary edge.
fn prop_lemma5_boundary_singleton(dim: GridDim) -> PropResult {
    let atlas = SegmentAtlas::new(dim)?;
    let mut cases = 0;
    let mut fails = Failures::new();
    for x in dim.points() {
        if !dim.on_boundary(x) || dim.is_corner(x) {
            continue;
        }
        cases += 1;
        let f = GridFunction::from_true_points(dim, &[x])?;
        let (n1, n2) = if x.x == 0 || x.x == dim.m() - 1 {
            (Point::new(x.x, x.y - 1), Point::new(x.x, x.y + 1))
        } else {
            (Point::new(x.x - 1, x.y), Point::new(x.x + 1, x.y))
        };
        let expected =
            ProperPair::ordered(OrientedSegment::new(x, n1)?, OrientedSegment::new(x, n2)?);
        let pairs = two_threshold::find_all_with(&atlas, &f);
        if pairs != vec![expected] {
            fails.push(format!("singleton {x}: got {pairs:?}"));
        }
    }
    Ok((cases, fails.into_vec()))
}

/// The closed-form count of proper pairs for an interior singleton matches
/// the exhaustive pair search.
fn prop_singleton_count(dim: GridDim) -> PropResult {
    let atlas = SegmentAtlas::new(dim)?;
    let mut cases = 0;
    let mut fails = Failures::new();
    for a in dim.points() {
        if dim.on_boundary(a) {
            continue;
        }
        cases += 1;
        let counted = two_threshold::count_singleton_proper_pairs(dim, a)?;
        let f = GridFunction::from_true_points(dim, &[a])?;
        let found = two_threshold::find_all_with(&atlas, &f).len() as u64;
        if counted != found {
            fails.push(format!("{a}: formula {counted}, search {found}"));
        }
    }
    Ok((cases, fails.into_vec()))
}

// ---------------------------------------------------------------------------
// Oracle-equivalence sweeps.
// ---------------------------------------------------------------------------

fn prop_oracle_segment_function(dim: GridDim) -> PropResult {
    let atlas = SegmentAtlas::new(dim)?;
    let naive_pairs = naive_segment_pairs(dim);
    let mut cases = 0;
    let mut fails = Failures::new();
    if naive_pairs.len() != atlas.segments.len() {
        fails.push(format!(
            "{} naive segments vs {} enumerated",
            naive_pairs.len(),
            atlas.segments.len()
        ));
    } else {
        for (k, &(a, b)) in naive_pairs.iter().enumerate() {
            cases += 1;
            if (atlas.segments[k].a(), atlas.segments[k].b()) != (a, b) {
                fails.push(format!("segment order differs at index {k}"));
                continue;
            }
            if naive_table(dim, a, b) != atlas.tables[k] {
                fails.push(format!("tables differ for {}", atlas.segments[k]));
            }
        }
    }
    Ok((cases, fails.into_vec()))
}

fn prop_oracle_threshold(dim: GridDim) -> PropResult {
    guard(dim, 16)?;
    let naive_set: BTreeSet<GridFunction> = naive_segment_pairs(dim)
        .into_iter()
        .map(|(a, b)| naive_table(dim, a, b))
        .collect();
    let mut cases = 0;
    let mut fails = Failures::new();
    for f in all_functions(dim) {
        cases += 1;
        let naive = f.is_constant() || naive_set.contains(&f);
        if naive != threshold::is_threshold(&f) {
            fails.push(format!("{:?}", f.true_points()));
        }
    }
    Ok((cases, fails.into_vec()))
}

fn prop_oracle_two_threshold(dim: GridDim) -> PropResult {
    guard(dim, 12)?;
    let atlas = SegmentAtlas::new(dim)?;
    let naive_tables: Vec<GridFunction> = naive_segment_pairs(dim)
        .into_iter()
        .map(|(a, b)| naive_table(dim, a, b))
        .collect();
    let naive_set: BTreeSet<GridFunction> = naive_tables.iter().cloned().collect();
    let mut naive_and_set: BTreeSet<GridFunction> = BTreeSet::new();
    for i in 0..naive_tables.len() {
        for j in (i + 1)..naive_tables.len() {
            naive_and_set.insert(naive_tables[i].and(&naive_tables[j]));
        }
    }
    let mut cases = 0;
    let mut fails = Failures::new();
    for f in all_functions(dim) {
        cases += 1;
        let naive = f.is_constant() || naive_set.contains(&f) || naive_and_set.contains(&f);
        let class = two_threshold::classify_with(&atlas, &f);
        if naive != (class != FunctionClass::NotTwoThreshold) {
            fails.push(format!("{:?} classified {class}", f.true_points()));
        }
    }
    Ok((cases, fails.into_vec()))
}

// ---------------------------------------------------------------------------
// Registry.
// ---------------------------------------------------------------------------

type PropFn = fn(GridDim) -> PropResult;

const PROPERTIES: &[(&str, PropFn)] = &[
    ("orientation_antisymmetry", prop_orientation_antisymmetry),
    ("claim_same_orientation", prop_same_orientation),
    ("claim_collinear_segments", prop_collinear_segments),
    ("claim_clockwise_triangles", prop_clockwise_triangles),
    ("claim_convex_quadrilateral", prop_convex_quadrilateral),
    ("claim_tangent_on_line", prop_tangent_on_line),
    ("hull_idempotence", prop_hull_idempotence),
    ("tangent_separation", prop_tangent_separation),
    ("threshold_bijection", prop_threshold_bijection),
    ("threshold_round_trip", prop_threshold_round_trip),
    ("inequality_consistency", prop_inequality_consistency),
    ("claim_points_on_line", prop_points_on_line),
    ("threshold_left_tangent", prop_threshold_left_tangent),
    (
        "threshold_endpoints_essential",
        prop_threshold_endpoints_essential,
    ),
    ("thm4_iff", prop_thm4_iff),
    (
        "claim_zeros_ones_intersection",
        prop_zeros_ones_intersection,
    ),
    ("cor_all_ones_on_line", prop_all_ones_on_line),
    ("cor_superb_intersect", prop_superb_intersect),
    ("claim_segments_zeros_ones", prop_segments_zeros_ones),
    ("cor_intersection_is_point", prop_intersection_is_point),
    ("thm4_essentiality", prop_thm4_essentiality),
    ("thm5_existence", prop_thm5_existence),
    ("thm5_uniqueness_boundary", prop_thm5_uniqueness_boundary),
    ("lemma5_boundary_singleton", prop_lemma5_boundary_singleton),
    ("singleton_count", prop_singleton_count),
    ("oracle_segment_function", prop_oracle_segment_function),
    ("oracle_threshold", prop_oracle_threshold),
    ("oracle_two_threshold", prop_oracle_two_threshold),
];

/// Ids of all registered property sweeps.
pub fn property_ids() -> Vec<&'static str> {
    PROPERTIES.iter().map(|(id, _)| *id).collect()
}

/// Runs the named exhaustive sweep over the given domain and reports every
/// counterexample.
pub fn check_property(property_id: &str, dim: GridDim) -> Result<PropertyReport, Error> {
    let (_, run) = PROPERTIES
        .iter()
        .find(|(id, _)| *id == property_id)
        .ok_or_else(|| Error::UnknownProperty(property_id.to_string()))?;
    let (cases_checked, failures) = run(dim)?;
    Ok(PropertyReport {
        property_id: property_id.to_string(),
        dim,
        cases_checked,
        failures,
    })
}
