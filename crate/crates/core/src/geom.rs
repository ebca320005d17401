//! Exact plane geometry over integer coordinates.
//!
//! Every predicate here is decided exactly: orientation tests are integer
//! determinant signs, hull vertices stay integral, and intersection points
//! are reduced rationals. There is no floating point anywhere. The module is
//! generic over the signed integer scalar `S`; determinants are quadratic
//! and intersection numerators cubic in the coordinate magnitudes, so pick a
//! scalar wide enough for your inputs (`i64` covers every grid this crate
//! enumerates, `i128` is available through the same API).

use std::fmt;
use std::hash::Hash;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{PrimInt, Signed};

use crate::Error;

/// Signed integer scalar the geometry is computed over.
pub trait Scalar:
    PrimInt + Signed + Integer + Hash + fmt::Debug + fmt::Display + Send + Sync + 'static
{
}

impl<T> Scalar for T where
    T: PrimInt + Signed + Integer + Hash + fmt::Debug + fmt::Display + Send + Sync + 'static
{
}

/// An integer point of the plane.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point<S = i64> {
    pub x: S,
    pub y: S,
}

impl<S> Point<S> {
    pub const fn new(x: S, y: S) -> Self {
        Self { x, y }
    }
}

impl<S: fmt::Display> fmt::Display for Point<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

impl<S: fmt::Debug> fmt::Debug for Point<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?},{:?})", self.x, self.y)
    }
}

/// Cross product `(p - o) x (q - o)`.
pub(crate) fn cross<S: Scalar>(o: Point<S>, p: Point<S>, q: Point<S>) -> S {
    (p.x - o.x) * (q.y - o.y) - (p.y - o.y) * (q.x - o.x)
}

/// Dot product `(p - o) . (q - o)`.
pub(crate) fn dot<S: Scalar>(o: Point<S>, p: Point<S>, q: Point<S>) -> S {
    (p.x - o.x) * (q.x - o.x) + (p.y - o.y) * (q.y - o.y)
}

/// Turn direction of the ordered point triple.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Orientation {
    Clockwise,
    Counterclockwise,
    Collinear,
}

impl Orientation {
    /// Orientation after swapping two of the three points.
    pub fn opposite(self) -> Self {
        match self {
            Orientation::Clockwise => Orientation::Counterclockwise,
            Orientation::Counterclockwise => Orientation::Clockwise,
            Orientation::Collinear => Orientation::Collinear,
        }
    }
}

/// Exact sign of the determinant `|b - a, c - a|`: counterclockwise when
/// positive, clockwise when negative, collinear when zero.
pub fn orientation<S: Scalar>(a: Point<S>, b: Point<S>, c: Point<S>) -> Orientation {
    let det = cross(a, b, c);
    if det > S::zero() {
        Orientation::Counterclockwise
    } else if det < S::zero() {
        Orientation::Clockwise
    } else {
        Orientation::Collinear
    }
}

/// True when `a` and `b` are distinct adjacent integer points, i.e. no third
/// integer point lies on the closed segment between them.
pub fn is_prime<S: Scalar>(a: Point<S>, b: Point<S>) -> bool {
    a != b && (b.x - a.x).gcd(&(b.y - a.y)) == S::one()
}

/// `p` lies on the closed segment `ab`.
pub(crate) fn on_segment<S: Scalar>(p: Point<S>, a: Point<S>, b: Point<S>) -> bool {
    orientation(a, b, p) == Orientation::Collinear && dot(p, a, b) <= S::zero()
}

/// `p` lies on segment `ab` strictly between the endpoints.
pub(crate) fn strictly_between<S: Scalar>(p: Point<S>, a: Point<S>, b: Point<S>) -> bool {
    orientation(a, b, p) == Orientation::Collinear && dot(p, a, b) < S::zero()
}

/// An ordered pair of adjacent integer points.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OrientedSegment<S = i64> {
    a: Point<S>,
    b: Point<S>,
}

impl<S: Scalar> OrientedSegment<S> {
    /// Builds the segment, rejecting coincident or non-adjacent endpoints.
    pub fn new(a: Point<S>, b: Point<S>) -> Result<Self, Error> {
        if a == b {
            return Err(Error::DegenerateSegment);
        }
        if !is_prime(a, b) {
            return Err(Error::NotPrime);
        }
        Ok(Self { a, b })
    }

    pub fn a(&self) -> Point<S> {
        self.a
    }

    pub fn b(&self) -> Point<S> {
        self.b
    }

    pub fn reversed(&self) -> Self {
        Self {
            a: self.b,
            b: self.a,
        }
    }
}

impl<S: fmt::Display> fmt::Display for OrientedSegment<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}->{}", self.a, self.b)
    }
}

impl<S: fmt::Debug> fmt::Debug for OrientedSegment<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}->{:?}", self.a, self.b)
    }
}

/// A point with exact rational coordinates, kept in lowest terms with
/// positive denominators.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RationalPoint<S: Clone + Integer = i64> {
    pub x: Ratio<S>,
    pub y: Ratio<S>,
}

impl<S: Scalar> RationalPoint<S> {
    pub fn new(x_num: S, x_den: S, y_num: S, y_den: S) -> Self {
        Self {
            x: Ratio::new(x_num, x_den),
            y: Ratio::new(y_num, y_den),
        }
    }

    pub fn is_integer(&self) -> bool {
        self.x.is_integer() && self.y.is_integer()
    }

    /// The integer point, if both coordinates are integral.
    pub fn to_point(&self) -> Option<Point<S>> {
        self.is_integer()
            .then(|| Point::new(self.x.to_integer(), self.y.to_integer()))
    }
}

impl<S: Scalar> From<Point<S>> for RationalPoint<S> {
    fn from(p: Point<S>) -> Self {
        Self {
            x: Ratio::from_integer(p.x),
            y: Ratio::from_integer(p.y),
        }
    }
}

impl<S: Scalar> fmt::Display for RationalPoint<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

/// Exact classification of the meet of two closed segments.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SegmentIntersection<S: Clone + Integer = i64> {
    Empty,
    OnePoint(RationalPoint<S>),
    /// Collinear segments sharing more than one point; the endpoints of the
    /// shared closed segment, in lexicographic order.
    Overlap(Point<S>, Point<S>),
}

/// A convex polygon with counterclockwise vertices starting at the
/// lexicographically smallest one. Empty, single-point and two-point
/// (segment) hulls are all representable; no collinear vertices are kept.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ConvexPolygon<S = i64> {
    vertices: Vec<Point<S>>,
}

impl<S: Scalar> ConvexPolygon<S> {
    pub fn empty() -> Self {
        Self {
            vertices: Vec::new(),
        }
    }

    pub fn vertices(&self) -> &[Point<S>] {
        &self.vertices
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Boundary edges in counterclockwise order: none for empty or
    /// single-point hulls, one for a segment, and the full cycle otherwise.
    pub fn edges(&self) -> impl Iterator<Item = (Point<S>, Point<S>)> + '_ {
        let k = self.vertices.len();
        let count = match k {
            0 | 1 => 0,
            2 => 1,
            _ => k,
        };
        (0..count).map(move |i| (self.vertices[i], self.vertices[(i + 1) % k]))
    }

    /// True when `p` lies in the closed convex region, boundary included.
    pub fn contains(&self, p: Point<S>) -> bool {
        match self.vertices.as_slice() {
            [] => false,
            [v] => *v == p,
            [v0, v1] => on_segment(p, *v0, *v1),
            vs => {
                let k = vs.len();
                (0..k).all(|i| orientation(vs[i], vs[(i + 1) % k], p) != Orientation::Clockwise)
            }
        }
    }
}

/// Canonical convex hull of a point set. Duplicates are ignored; collinear
/// input collapses to the two extreme points.
pub fn convex_hull<S: Scalar>(points: &[Point<S>]) -> ConvexPolygon<S> {
    let mut pts = points.to_vec();
    pts.sort_unstable();
    pts.dedup();
    if pts.len() <= 1 {
        return ConvexPolygon { vertices: pts };
    }
    // Monotone chain with strict turns, so no collinear vertices survive.
    let mut lower: Vec<Point<S>> = Vec::new();
    for &p in &pts {
        while lower.len() >= 2
            && orientation(lower[lower.len() - 2], lower[lower.len() - 1], p)
                != Orientation::Counterclockwise
        {
            lower.pop();
        }
        lower.push(p);
    }
    let mut upper: Vec<Point<S>> = Vec::new();
    for &p in pts.iter().rev() {
        while upper.len() >= 2
            && orientation(upper[upper.len() - 2], upper[upper.len() - 1], p)
                != Orientation::Counterclockwise
        {
            upper.pop();
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    ConvexPolygon { vertices: lower }
}

/// True when the closed convex regions have no common point. Empty hulls are
/// disjoint from everything.
pub fn hulls_disjoint<S: Scalar>(h1: &ConvexPolygon<S>, h2: &ConvexPolygon<S>) -> bool {
    if h1.is_empty() || h2.is_empty() {
        return true;
    }
    if h1.vertices().iter().any(|&v| h2.contains(v)) {
        return false;
    }
    if h2.vertices().iter().any(|&v| h1.contains(v)) {
        return false;
    }
    // Neither region contains a vertex of the other, so any overlap would
    // force two boundary edges to cross.
    for e1 in h1.edges() {
        for e2 in h2.edges() {
            if segment_intersection(e1, e2) != SegmentIntersection::Empty {
                return false;
            }
        }
    }
    true
}

/// Exact meet of the closed segments `s1` and `s2`. Degenerate (single
/// point) segments are allowed.
pub fn segment_intersection<S: Scalar>(
    s1: (Point<S>, Point<S>),
    s2: (Point<S>, Point<S>),
) -> SegmentIntersection<S> {
    let (a, b) = s1;
    let (c, d) = s2;
    if a == b {
        return if on_segment(a, c, d) {
            SegmentIntersection::OnePoint(a.into())
        } else {
            SegmentIntersection::Empty
        };
    }
    if c == d {
        return if on_segment(c, a, b) {
            SegmentIntersection::OnePoint(c.into())
        } else {
            SegmentIntersection::Empty
        };
    }
    let dir1 = Point::new(b.x - a.x, b.y - a.y);
    let dir2 = Point::new(d.x - c.x, d.y - c.y);
    let denom = dir1.x * dir2.y - dir1.y * dir2.x;
    if denom != S::zero() {
        // Solve a + t*dir1 = c + u*dir2 for rational t, u in [0, 1].
        let ac = Point::new(c.x - a.x, c.y - a.y);
        let mut t_num = ac.x * dir2.y - ac.y * dir2.x;
        let mut u_num = ac.x * dir1.y - ac.y * dir1.x;
        let mut den = denom;
        if den < S::zero() {
            t_num = -t_num;
            u_num = -u_num;
            den = -den;
        }
        if t_num < S::zero() || t_num > den || u_num < S::zero() || u_num > den {
            return SegmentIntersection::Empty;
        }
        return SegmentIntersection::OnePoint(RationalPoint {
            x: Ratio::new(a.x * den + t_num * dir1.x, den),
            y: Ratio::new(a.y * den + t_num * dir1.y, den),
        });
    }
    // Parallel lines.
    if cross(a, b, c) != S::zero() {
        return SegmentIntersection::Empty;
    }
    // Collinear: compare the parameter intervals along dir1.
    let proj = |p: Point<S>| dir1.x * p.x + dir1.y * p.y;
    let order = |p: Point<S>, q: Point<S>| if proj(p) <= proj(q) { (p, q) } else { (q, p) };
    let (lo1, hi1) = order(a, b);
    let (lo2, hi2) = order(c, d);
    let lo = if proj(lo1) >= proj(lo2) { lo1 } else { lo2 };
    let hi = if proj(hi1) <= proj(hi2) { hi1 } else { hi2 };
    if proj(lo) > proj(hi) {
        SegmentIntersection::Empty
    } else if proj(lo) == proj(hi) {
        SegmentIntersection::OnePoint(lo.into())
    } else {
        let (p, q) = if lo <= hi { (lo, hi) } else { (hi, lo) };
        SegmentIntersection::Overlap(p, q)
    }
}

/// Which of the two tangents from a point (or between two hulls) is meant:
/// `Left` keeps the hull clockwise of the contact ray, `Right`
/// counterclockwise.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    /// The turn direction a tangent on this side must never produce.
    fn forbidden(self) -> Orientation {
        match self {
            Side::Left => Orientation::Counterclockwise,
            Side::Right => Orientation::Clockwise,
        }
    }
}

/// The contact set of a tangent line with a hull: a single vertex, or a
/// whole edge given by its two endpoints in lexicographic order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Contact<S = i64> {
    Vertex(Point<S>),
    Edge(Point<S>, Point<S>),
}

impl<S: Scalar> Contact<S> {
    pub fn points(&self) -> impl Iterator<Item = Point<S>> {
        let (first, second) = match *self {
            Contact::Vertex(p) => (p, None),
            Contact::Edge(p, q) => (p, Some(q)),
        };
        std::iter::once(first).chain(second)
    }

    pub fn contains(&self, p: Point<S>) -> bool {
        self.points().any(|q| q == p)
    }

    fn from_sorted(mut pts: Vec<Point<S>>) -> Self {
        pts.sort_unstable();
        pts.dedup();
        match pts.as_slice() {
            [p] => Contact::Vertex(*p),
            [p, q] => Contact::Edge(*p, *q),
            _ => panic!("tangent contact set must have one or two vertices"),
        }
    }
}

/// Tangent line from the outside point `x` to the hull, on the requested
/// side: every hull point is either on the line or turns away from the
/// forbidden side of the ray from `x` through the contact. For a hull lying
/// entirely on the line (a point, or a segment collinear with `x`) the whole
/// hull is the contact set and both side labels are valid.
pub fn tangent_from_point<S: Scalar>(
    x: Point<S>,
    hull: &ConvexPolygon<S>,
    side: Side,
) -> Result<Contact<S>, Error> {
    if hull.is_empty() {
        return Err(Error::EmptyHull);
    }
    if hull.contains(x) {
        return Err(Error::TangentSourceInHull);
    }
    let forbidden = side.forbidden();
    let contact: Vec<Point<S>> = hull
        .vertices()
        .iter()
        .copied()
        .filter(|&v| {
            hull.vertices()
                .iter()
                .all(|&w| orientation(x, v, w) != forbidden)
        })
        .collect();
    assert!(
        !contact.is_empty(),
        "a tangent from an outside point always exists"
    );
    Ok(Contact::from_sorted(contact))
}

/// The unique inner common tangent of two disjoint non-empty hulls on the
/// requested side: the line touches both hulls, separates them, and is the
/// side tangent from each contact point to the opposite hull. Returns the
/// contact sets on `h1` and `h2`.
pub fn inner_common_tangent<S: Scalar>(
    h1: &ConvexPolygon<S>,
    h2: &ConvexPolygon<S>,
    side: Side,
) -> Result<(Contact<S>, Contact<S>), Error> {
    if h1.is_empty() || h2.is_empty() {
        return Err(Error::EmptyHull);
    }
    if !hulls_disjoint(h1, h2) {
        return Err(Error::HullsNotDisjoint);
    }
    let forbidden = side.forbidden();
    let mut c1: Vec<Point<S>> = Vec::new();
    let mut c2: Vec<Point<S>> = Vec::new();
    for &v1 in h1.vertices() {
        for &v2 in h2.vertices() {
            let tangent_to_h2 = h2
                .vertices()
                .iter()
                .all(|&w| orientation(v1, v2, w) != forbidden);
            let tangent_to_h1 = h1
                .vertices()
                .iter()
                .all(|&w| orientation(v2, v1, w) != forbidden);
            if tangent_to_h2 && tangent_to_h1 {
                c1.push(v1);
                c2.push(v2);
            }
        }
    }
    assert!(
        !c1.is_empty(),
        "disjoint non-empty hulls always have an inner common tangent"
    );
    // All contact points must lie on one line, otherwise the tangent would
    // not be unique.
    let p = c1[0];
    let q = c2[0];
    assert!(
        c1.iter()
            .chain(c2.iter())
            .all(|&r| orientation(p, q, r) == Orientation::Collinear),
        "inner common tangent contacts must be collinear"
    );
    Ok((Contact::from_sorted(c1), Contact::from_sorted(c2)))
}
