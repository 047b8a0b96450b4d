//! Point sets in Z₂ⁿ, the Sidon predicate, and triple coverage.
//!
//! A set is Sidon when the XORs of its distinct pairs are pairwise
//! distinct. A point `x` is covered `k` times when exactly `k` unordered
//! triples of distinct members XOR to `x`. A Sidon set is maximal exactly
//! when every non-member is covered at least once.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::BitXor;

use fixedbitset::FixedBitSet;

use crate::engine;
use crate::error::{Error, Result};

/// Largest supported ambient dimension.
pub const MAX_DIMENSION: u32 = 30;

/// An element of Z₂ⁿ; bit `i` is coordinate `i`.
#[repr(transparent)]
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point(pub u32);

impl Point {
    #[inline]
    pub const fn value(self) -> u32 {
        self.0
    }

    #[inline]
    fn index(self) -> usize {
        self.0 as usize
    }
}

impl BitXor for Point {
    type Output = Point;

    #[inline]
    fn bitxor(self, rhs: Point) -> Point {
        Point(self.0 ^ rhs.0)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:#x}", self.0)
    }
}

/// Two distinct pairs with the same XOR.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Collision {
    pub first: (Point, Point),
    pub second: (Point, Point),
    pub sum: Point,
}

impl fmt::Display for Collision {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} ^ {} = {} ^ {} = {}",
            self.first.0, self.first.1, self.second.0, self.second.1, self.sum
        )
    }
}

/// A point set in Z₂ⁿ with a sorted point list, a membership bitmap and a
/// flag recording whether the Sidon property has been verified.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SidonSet {
    n: u32,
    points: Vec<Point>,
    membership: FixedBitSet,
    certified: bool,
}

pub(crate) fn check_dimension(n: u32) -> Result<()> {
    if (1..=MAX_DIMENSION).contains(&n) {
        Ok(())
    } else {
        Err(Error::DimensionOutOfRange(n))
    }
}

impl SidonSet {
    /// Sorts and deduplicates `pts`. The result is not yet certified.
    pub fn from_points(n: u32, pts: impl IntoIterator<Item = Point>) -> Result<Self> {
        check_dimension(n)?;
        let mut points: Vec<Point> = pts.into_iter().collect();
        if let Some(&p) = points.iter().find(|p| p.0 >> n != 0) {
            return Err(Error::PointOutOfRange { point: p.0, n });
        }
        points.sort_unstable();
        points.dedup();
        let mut membership = FixedBitSet::with_capacity(1usize << n);
        for p in &points {
            membership.insert(p.index());
        }
        Ok(SidonSet {
            n,
            points,
            membership,
            certified: false,
        })
    }

    pub fn empty(n: u32) -> Result<Self> {
        Self::from_points(n, [])
    }

    #[inline]
    pub fn n(&self) -> u32 {
        self.n
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.points.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    #[inline]
    pub fn points(&self) -> &[Point] {
        &self.points
    }

    #[inline]
    pub fn contains(&self, x: Point) -> bool {
        x.0 >> self.n == 0 && self.membership.contains(x.index())
    }

    pub fn membership(&self) -> &FixedBitSet {
        &self.membership
    }

    /// Whether [`certify`](Self::certify) has succeeded on this set.
    #[inline]
    pub fn is_certified(&self) -> bool {
        self.certified
    }

    /// Size of the ambient group, `2^n`.
    #[inline]
    pub fn space_size(&self) -> usize {
        1usize << self.n
    }

    /// Checks the Sidon property without touching the certified flag.
    ///
    /// Pair XORs are inserted into a `2^n`-bit seen-bitmap in lexicographic
    /// pair order; the first repeat is reported along with the earlier pair.
    pub fn check_sidon(&self) -> std::result::Result<(), Collision> {
        let mut seen = FixedBitSet::with_capacity(self.space_size());
        let pts = &self.points;
        for (i, &a) in pts.iter().enumerate() {
            for &b in &pts[i + 1..] {
                let sum = a ^ b;
                if seen.put(sum.index()) {
                    let first = self.pair_with_sum(sum).expect("sum was recorded");
                    return Err(Collision {
                        first,
                        second: (a, b),
                        sum,
                    });
                }
            }
        }
        Ok(())
    }

    fn pair_with_sum(&self, sum: Point) -> Option<(Point, Point)> {
        self.points
            .iter()
            .map(|&a| (a, a ^ sum))
            .find(|&(a, b)| b > a && self.contains(b))
    }

    /// Verifies the Sidon property and sets the certified flag on success.
    pub fn certify(&mut self) -> std::result::Result<(), Collision> {
        self.check_sidon()?;
        self.certified = true;
        Ok(())
    }

    /// Sidon predicate; certifies the set when it holds.
    pub fn is_sidon(&mut self) -> bool {
        self.certify().is_ok()
    }

    /// Number of unordered triples of distinct members XORing to `x`.
    ///
    /// Walks the pairs `a < b` and tests whether `c = x ^ a ^ b` is a member
    /// other than `a` and `b`; each triple is seen once per pair it
    /// contains, hence the division by 3.
    pub fn cover_count(&self, x: Point) -> u64 {
        let pts = &self.points;
        let mut hits = 0u64;
        for (i, &a) in pts.iter().enumerate() {
            for &b in &pts[i + 1..] {
                let c = x ^ a ^ b;
                if c != a && c != b && self.contains(c) {
                    hits += 1;
                }
            }
        }
        debug_assert_eq!(hits % 3, 0);
        hits / 3
    }

    /// The triples counted by [`cover_count`](Self::cover_count), each sorted,
    /// in lexicographic order.
    pub fn covering_triples(&self, x: Point) -> Vec<[Point; 3]> {
        let pts = &self.points;
        let mut out = Vec::new();
        for (i, &a) in pts.iter().enumerate() {
            for &b in &pts[i + 1..] {
                let c = x ^ a ^ b;
                if c > b && self.contains(c) {
                    out.push([a, b, c]);
                }
            }
        }
        out
    }

    /// Exact cover counts for every point of Z₂ⁿ.
    pub fn cover_profile(&self) -> CoverProfile {
        let counts = engine::triple_counts(&self.points, self.n);
        if self.certified {
            for p in &self.points {
                assert_eq!(
                    counts[p.index()],
                    0,
                    "certified Sidon set covers its member {p}"
                );
            }
        }
        CoverProfile::from_counts(self.n, counts, &self.membership)
    }

    /// Bit `x` is set iff `x` is covered at least once.
    pub fn covered_bitmap(&self) -> FixedBitSet {
        engine::triple_bitmap(&self.points, self.n)
    }

    /// Smallest non-member covered by no triple, if any.
    pub fn first_uncovered(&self) -> Option<Point> {
        let mut reach = self.covered_bitmap();
        reach.union_with(&self.membership);
        reach.zeroes().next().map(|x| Point(x as u32))
    }

    /// For a Sidon set: no point can be added without breaking the property.
    pub fn is_maximal(&self) -> bool {
        self.first_uncovered().is_none()
    }
}

/// Per-point cover counts over all of Z₂ⁿ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverProfile {
    pub n: u32,
    pub counts: Vec<u32>,
    /// count -> number of points with that count, members included.
    pub histogram: BTreeMap<u32, u64>,
    /// Minimum count over non-members; `None` when every point is a member.
    pub min_cover_off_set: Option<u32>,
    pub max_cover_off_set: Option<u32>,
}

impl CoverProfile {
    fn from_counts(n: u32, counts: Vec<u32>, membership: &FixedBitSet) -> Self {
        let mut histogram = BTreeMap::new();
        let mut min = None::<u32>;
        let mut max = None::<u32>;
        for (x, &c) in counts.iter().enumerate() {
            *histogram.entry(c).or_insert(0) += 1;
            if !membership.contains(x) {
                min = Some(min.map_or(c, |m| m.min(c)));
                max = Some(max.map_or(c, |m| m.max(c)));
            }
        }
        CoverProfile {
            n,
            counts,
            histogram,
            min_cover_off_set: min,
            max_cover_off_set: max,
        }
    }

    #[inline]
    pub fn count(&self, x: Point) -> u32 {
        self.counts[x.0 as usize]
    }

    /// Sum of all counts; equals `C(|S|, 3)`.
    pub fn total(&self) -> u64 {
        self.counts.iter().map(|&c| c as u64).sum()
    }
}

/// `C(k, 3)` without overflow for any `k` that fits in memory.
pub fn choose3(k: u64) -> u128 {
    let k = k as u128;
    if k < 3 {
        0
    } else {
        k * (k - 1) * (k - 2) / 6
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(n: u32, pts: &[u32]) -> SidonSet {
        SidonSet::from_points(n, pts.iter().map(|&p| Point(p))).unwrap()
    }

    #[test]
    fn from_points_dedups_and_sorts() {
        let s = set(2, &[3, 0, 3]);
        assert_eq!(s.points(), &[Point(0), Point(3)]);
        assert!(!s.is_certified());
        assert!(matches!(
            SidonSet::from_points(4, [Point(16)]),
            Err(Error::PointOutOfRange { point: 16, n: 4 })
        ));
        assert!(matches!(
            SidonSet::from_points(0, []),
            Err(Error::DimensionOutOfRange(0))
        ));
        assert!(matches!(
            SidonSet::from_points(31, []),
            Err(Error::DimensionOutOfRange(31))
        ));
        assert!(set(3, &[]).is_empty());
    }

    #[test]
    fn small_sets_are_sidon() {
        assert!(set(3, &[]).is_sidon());
        assert!(set(3, &[5]).is_sidon());
        assert!(set(3, &[1, 6, 7]).is_sidon());
    }

    #[test]
    fn full_z2_squared_collides() {
        let mut s = set(2, &[0, 1, 2, 3]);
        let err = s.check_sidon().unwrap_err();
        // pairs in lexicographic order: (0,1) (0,2) (0,3) (1,2) -- first repeat
        assert_eq!(err.first, (Point(0), Point(3)));
        assert_eq!(err.second, (Point(1), Point(2)));
        assert_eq!(err.sum, Point(3));
        assert!(!s.is_sidon());
        assert!(!s.is_certified());
    }

    #[test]
    fn single_triple_covers_its_sum() {
        let mut s = set(4, &[3, 5, 12]);
        assert!(s.is_sidon());
        assert_eq!(s.cover_count(Point(3 ^ 5 ^ 12)), 1);
        assert_eq!(s.cover_count(Point(0)), 0);
        let prof = s.cover_profile();
        assert_eq!(prof.total(), 1);
        assert_eq!(prof.count(Point(3 ^ 5 ^ 12)), 1);
    }

    #[test]
    fn members_have_zero_cover() {
        let mut s = set(4, &[0, 1, 2, 4, 8]);
        assert!(s.is_sidon());
        for &p in s.points() {
            assert_eq!(s.cover_count(p), 0);
        }
    }

    #[test]
    fn maximality_examples() {
        let mut s = set(2, &[0, 1, 2]);
        assert!(s.is_sidon() && s.is_maximal());
        let mut s = set(2, &[0, 1]);
        assert!(s.is_sidon() && !s.is_maximal());
        assert_eq!(s.first_uncovered(), Some(Point(2)));
        let mut s = set(3, &[0, 1, 2, 4]);
        assert!(s.is_sidon() && s.is_maximal());
        let cov: Vec<usize> = s.covered_bitmap().ones().collect();
        assert_eq!(cov, vec![3, 5, 6, 7]);
    }

    #[test]
    fn pairs_cover_nothing() {
        assert!(set(5, &[1, 30]).covered_bitmap().is_clear());
        assert!(set(5, &[]).cover_profile().counts.iter().all(|&c| c == 0));
    }

    #[test]
    fn choose3_values() {
        assert_eq!(choose3(2), 0);
        assert_eq!(choose3(8), 56);
        assert_eq!(choose3(32), 4960);
    }
}
