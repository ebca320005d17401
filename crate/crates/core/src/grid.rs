//! The rectangular grid and bit-vector truth tables over it.

use std::fmt;

use bitvec::prelude::*;

use crate::{Error, Point};

/// Cap on `m * n` so a malformed header cannot request an absurd allocation.
const MAX_CELLS: i64 = 1 << 24;

/// Dimensions of the grid `{0,..,m-1} x {0,..,n-1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GridDim {
    m: i64,
    n: i64,
}

impl GridDim {
    pub fn new(m: i64, n: i64) -> Result<Self, Error> {
        if m < 1 || n < 1 {
            return Err(Error::BadDim { m, n });
        }
        match m.checked_mul(n) {
            Some(cells) if cells <= MAX_CELLS => Ok(Self { m, n }),
            _ => Err(Error::BadDim { m, n }),
        }
    }

    pub fn m(&self) -> i64 {
        self.m
    }

    pub fn n(&self) -> i64 {
        self.n
    }

    pub fn cells(&self) -> usize {
        (self.m * self.n) as usize
    }

    pub fn contains(&self, p: Point) -> bool {
        0 <= p.x && p.x < self.m && 0 <= p.y && p.y < self.n
    }

    /// Bit index of a grid point: `y * m + x`.
    pub fn index(&self, p: Point) -> usize {
        debug_assert!(self.contains(p), "{p} outside {self}");
        (p.y * self.m + p.x) as usize
    }

    pub fn point(&self, index: usize) -> Point {
        debug_assert!(index < self.cells());
        let i = index as i64;
        Point::new(i % self.m, i / self.m)
    }

    /// All grid points in bit-index order.
    pub fn points(&self) -> impl Iterator<Item = Point> + '_ {
        (0..self.cells()).map(move |i| self.point(i))
    }

    pub fn on_boundary(&self, p: Point) -> bool {
        debug_assert!(self.contains(p));
        p.x == 0 || p.y == 0 || p.x == self.m - 1 || p.y == self.n - 1
    }

    pub fn is_corner(&self, p: Point) -> bool {
        (p.x == 0 || p.x == self.m - 1) && (p.y == 0 || p.y == self.n - 1)
    }
}

impl fmt::Display for GridDim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{}", self.m, self.n)
    }
}

/// A `{0,1}`-valued function on a grid, stored as a bit vector indexed by
/// `y * m + x`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GridFunction {
    dim: GridDim,
    bits: BitVec,
}

impl GridFunction {
    pub fn constant(dim: GridDim, value: bool) -> Self {
        Self {
            dim,
            bits: BitVec::repeat(value, dim.cells()),
        }
    }

    pub fn from_fn(dim: GridDim, mut f: impl FnMut(Point) -> bool) -> Self {
        let mut bits = BitVec::repeat(false, dim.cells());
        for i in 0..dim.cells() {
            bits.set(i, f(dim.point(i)));
        }
        Self { dim, bits }
    }

    pub fn from_true_points(dim: GridDim, points: &[Point]) -> Result<Self, Error> {
        let mut out = Self::constant(dim, false);
        for &p in points {
            if !dim.contains(p) {
                return Err(Error::OutsideGrid(p, dim));
            }
            out.bits.set(dim.index(p), true);
        }
        Ok(out)
    }

    pub fn dim(&self) -> GridDim {
        self.dim
    }

    pub fn value(&self, p: Point) -> bool {
        assert!(self.dim.contains(p), "{p} outside {}", self.dim);
        self.bits[self.dim.index(p)]
    }

    pub fn set(&mut self, p: Point, value: bool) {
        assert!(self.dim.contains(p), "{p} outside {}", self.dim);
        self.bits.set(self.dim.index(p), value);
    }

    /// The function that differs from this one exactly at `p`.
    pub fn flipped(&self, p: Point) -> Self {
        let mut out = self.clone();
        out.set(p, !self.value(p));
        out
    }

    pub fn true_points(&self) -> Vec<Point> {
        self.bits.iter_ones().map(|i| self.dim.point(i)).collect()
    }

    pub fn false_points(&self) -> Vec<Point> {
        self.bits.iter_zeros().map(|i| self.dim.point(i)).collect()
    }

    pub fn count_true(&self) -> usize {
        self.bits.count_ones()
    }

    pub fn is_constant_zero(&self) -> bool {
        self.bits.not_any()
    }

    pub fn is_constant_one(&self) -> bool {
        self.bits.all()
    }

    pub fn is_constant(&self) -> bool {
        self.is_constant_zero() || self.is_constant_one()
    }

    /// Pointwise negation.
    pub fn complement(&self) -> Self {
        Self {
            dim: self.dim,
            bits: !self.bits.clone(),
        }
    }

    /// Pointwise conjunction. Both functions must share a grid.
    pub fn and(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim, "grid dimension mismatch");
        let words: Vec<usize> = self
            .bits
            .as_raw_slice()
            .iter()
            .zip(other.bits.as_raw_slice())
            .map(|(a, b)| a & b)
            .collect();
        let mut bits = BitVec::from_vec(words);
        bits.truncate(self.bits.len());
        Self {
            dim: self.dim,
            bits,
        }
    }

    /// `a & b == target`, without allocating. Used by the pair-search loops.
    pub(crate) fn and_equals(a: &Self, b: &Self, target: &Self) -> bool {
        debug_assert!(a.dim == b.dim && b.dim == target.dim);
        let n = a.bits.len();
        let wa = a.bits.as_raw_slice();
        let wb = b.bits.as_raw_slice();
        let wt = target.bits.as_raw_slice();
        let word = usize::BITS as usize;
        for i in 0..wa.len() {
            let lo = i * word;
            let live = (n - lo).min(word);
            let mask = if live == word {
                !0
            } else {
                (1usize << live) - 1
            };
            if ((wa[i] & wb[i]) ^ wt[i]) & mask != 0 {
                return false;
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: i64, y: i64) -> Point {
        Point::new(x, y)
    }

    #[test]
    fn dim_validation() {
        assert!(GridDim::new(1, 1).is_ok());
        assert_eq!(GridDim::new(0, 3), Err(Error::BadDim { m: 0, n: 3 }));
        assert_eq!(GridDim::new(3, -1), Err(Error::BadDim { m: 3, n: -1 }));
        assert!(GridDim::new(1 << 20, 1 << 20).is_err());
    }

    #[test]
    fn indexing_round_trip() {
        let dim = GridDim::new(5, 3).unwrap();
        for i in 0..dim.cells() {
            assert_eq!(dim.index(dim.point(i)), i);
        }
        assert_eq!(dim.index(p(2, 1)), 7);
    }

    #[test]
    fn boundary_and_corner() {
        let dim = GridDim::new(4, 4).unwrap();
        assert!(dim.on_boundary(p(0, 2)));
        assert!(dim.on_boundary(p(2, 3)));
        assert!(!dim.on_boundary(p(1, 2)));
        assert!(dim.is_corner(p(3, 3)));
        assert!(!dim.is_corner(p(3, 1)));
    }

    #[test]
    fn truth_table_basics() {
        let dim = GridDim::new(2, 2).unwrap();
        let f = GridFunction::from_true_points(dim, &[p(0, 0), p(1, 1)]).unwrap();
        assert!(f.value(p(0, 0)) && f.value(p(1, 1)));
        assert!(!f.value(p(1, 0)) && !f.value(p(0, 1)));
        assert_eq!(f.true_points(), vec![p(0, 0), p(1, 1)]);
        assert_eq!(f.count_true(), 2);
        assert!(!f.is_constant());

        let g = f.flipped(p(1, 0));
        assert!(g.value(p(1, 0)));
        assert_eq!(g.flipped(p(1, 0)), f);
    }

    #[test]
    fn from_true_points_validates() {
        let dim = GridDim::new(2, 2).unwrap();
        assert_eq!(
            GridFunction::from_true_points(dim, &[p(2, 0)]),
            Err(Error::OutsideGrid(p(2, 0), dim))
        );
    }

    #[test]
    fn conjunction_matches_pointwise_and() {
        let dim = GridDim::new(7, 11).unwrap();
        let a = GridFunction::from_fn(dim, |q| (q.x + q.y) % 2 == 0);
        let b = GridFunction::from_fn(dim, |q| q.x < 4);
        let c = a.and(&b);
        for q in dim.points() {
            assert_eq!(c.value(q), a.value(q) && b.value(q));
        }
        assert!(GridFunction::and_equals(&a, &b, &c));
        assert!(!GridFunction::and_equals(&a, &b, &a.flipped(p(0, 0))));
    }
}
