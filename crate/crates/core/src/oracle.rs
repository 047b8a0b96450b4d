//! Definition-level reference implementations and an exhaustive search for
//! the smallest maximal Sidon set in tiny dimensions.
//!
//! Nothing here is fast; the point is to be obviously correct.

use crate::error::{Error, Result};
use crate::sidon::{choose3, Point, SidonSet};

/// Largest dimension [`min_maximal_size`] accepts.
pub const MAX_SEARCH_DIMENSION: u32 = 6;

fn distinct(pts: &[Point]) -> Vec<Point> {
    let mut v = pts.to_vec();
    v.sort_unstable();
    v.dedup();
    v
}

/// Literal four-variable check: no `a ^ b = x ^ y` with `a != b`, `x != y`
/// and `{a, b} != {x, y}`.
pub fn naive_is_sidon(pts: &[Point]) -> bool {
    let s = distinct(pts);
    for &a in &s {
        for &b in &s {
            for &x in &s {
                for &y in &s {
                    if a == b || x == y {
                        continue;
                    }
                    let same_pair = (a == x && b == y) || (a == y && b == x);
                    if !same_pair && a ^ b == x ^ y {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Unordered triples of distinct members with `a ^ b ^ c = x`, by a plain
/// triple loop.
pub fn naive_cover_count(pts: &[Point], x: Point) -> u64 {
    let s = distinct(pts);
    let mut count = 0;
    for i in 0..s.len() {
        for j in i + 1..s.len() {
            for k in j + 1..s.len() {
                if s[i] ^ s[j] ^ s[k] == x {
                    count += 1;
                }
            }
        }
    }
    count
}

/// Smallest `k` with `C(k, 3) + k >= 2^n`: no maximal Sidon set is smaller.
pub fn cardinality_lower_bound(n: u32) -> usize {
    let target = 1u128 << n;
    (0usize..)
        .find(|&k| choose3(k as u64) + k as u128 >= target)
        .unwrap()
}

#[derive(Clone, Debug)]
pub struct MinMaximal {
    pub size: usize,
    pub witness: SidonSet,
}

/// Minimum cardinality of a maximal Sidon set in Z₂ⁿ, with a witness.
///
/// Search order and pruning:
/// * Sizes are tried upward from [`cardinality_lower_bound`].
/// * Translations and invertible linear maps preserve both the Sidon
///   property and maximality. Any three distinct nonzero members of a
///   Sidon set containing 0 are linearly independent, so every candidate
///   set can be moved to one starting with `0, 1, 2, 4` (truncated to the
///   target size and to points below `2^n`).
/// * The remaining members are chosen in ascending order from the
///   addable points (non-members covered by no triple) above the prefix.
/// * A branch is cut when the uncovered non-members outnumber what `r`
///   more points could still cover: `C(|S| + r, 3) - C(|S|, 3) + r`.
pub fn min_maximal_size(n: u32) -> Result<MinMaximal> {
    if !(1..=MAX_SEARCH_DIMENSION).contains(&n) {
        return Err(Error::OracleRange {
            n,
            max: MAX_SEARCH_DIMENSION,
        });
    }
    let mut k = cardinality_lower_bound(n);
    loop {
        if let Some(points) = Search::new(n, k).run() {
            let mut witness = SidonSet::from_points(n, points.into_iter().map(Point))?;
            assert!(witness.is_sidon() && witness.is_maximal());
            return Ok(MinMaximal { size: k, witness });
        }
        k += 1;
    }
}

struct Search {
    space: usize,
    target: usize,
    counts: Vec<u32>,
    member: Vec<bool>,
    set: Vec<u32>,
}

impl Search {
    fn new(n: u32, target: usize) -> Self {
        let space = 1usize << n;
        Search {
            space,
            target,
            counts: vec![0; space],
            member: vec![false; space],
            set: Vec::with_capacity(target),
        }
    }

    fn push(&mut self, x: u32) {
        for i in 0..self.set.len() {
            for j in i + 1..self.set.len() {
                self.counts[(x ^ self.set[i] ^ self.set[j]) as usize] += 1;
            }
        }
        self.set.push(x);
        self.member[x as usize] = true;
    }

    fn pop(&mut self) {
        let x = self.set.pop().expect("non-empty");
        self.member[x as usize] = false;
        for i in 0..self.set.len() {
            for j in i + 1..self.set.len() {
                self.counts[(x ^ self.set[i] ^ self.set[j]) as usize] -= 1;
            }
        }
    }

    fn addable(&self, x: usize) -> bool {
        !self.member[x] && self.counts[x] == 0
    }

    fn uncovered(&self) -> usize {
        (0..self.space).filter(|&x| self.addable(x)).count()
    }

    fn run(mut self) -> Option<Vec<u32>> {
        let prefix: Vec<u32> = [0u32, 1, 2, 4]
            .into_iter()
            .filter(|&p| (p as usize) < self.space)
            .take(self.target)
            .collect();
        for &p in &prefix {
            debug_assert!(self.addable(p as usize));
            self.push(p);
        }
        let start = prefix.last().map_or(0, |&p| p as usize + 1);
        self.dfs(start).then_some(self.set)
    }

    fn dfs(&mut self, start: usize) -> bool {
        let uncovered = self.uncovered();
        let have = self.set.len();
        if have == self.target {
            return uncovered == 0;
        }
        let room = self.target - have;
        let reach = choose3(self.target as u64) - choose3(have as u64) + room as u128;
        if uncovered as u128 > reach {
            return false;
        }
        for x in start..self.space {
            if !self.addable(x) {
                continue;
            }
            self.push(x as u32);
            if self.dfs(x + 1) {
                return true;
            }
            self.pop();
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pts(v: &[u32]) -> Vec<Point> {
        v.iter().map(|&p| Point(p)).collect()
    }

    #[test]
    fn naive_sidon_examples() {
        assert!(!naive_is_sidon(&pts(&[0, 1, 2, 3])));
        assert!(naive_is_sidon(&pts(&[5, 9, 12])));
        assert!(naive_is_sidon(&pts(&[])));
        assert!(naive_is_sidon(&pts(&[0, 1, 2, 4, 8])));
    }

    #[test]
    fn naive_cover_examples() {
        assert_eq!(naive_cover_count(&[], Point(3)), 0);
        assert_eq!(naive_cover_count(&pts(&[1, 2, 4]), Point(7)), 1);
        assert_eq!(naive_cover_count(&pts(&[1, 2, 4]), Point(3)), 0);
    }

    #[test]
    fn lower_bounds() {
        assert_eq!(cardinality_lower_bound(2), 3);
        assert_eq!(cardinality_lower_bound(3), 4);
        assert_eq!(cardinality_lower_bound(4), 6);
        assert_eq!(cardinality_lower_bound(5), 7);
        assert_eq!(cardinality_lower_bound(6), 8);
    }

    #[test]
    fn tiny_minimum_sizes() {
        // Frozen from an independent brute force over all subsets containing 0.
        let expected = [(1, 2), (2, 3), (3, 4), (4, 6), (5, 7)];
        for (n, size) in expected {
            let r = min_maximal_size(n).unwrap();
            assert_eq!(r.size, size, "n = {n}");
            assert_eq!(r.witness.len(), size);
            assert!(r.witness.is_maximal());
            assert!(r.size >= cardinality_lower_bound(n));
        }
        assert_eq!(
            min_maximal_size(4).unwrap().witness.points(),
            &pts(&[0, 1, 2, 4, 8, 15])[..]
        );
    }

    #[test]
    fn n6_meets_the_counting_bound() {
        let r = min_maximal_size(6).unwrap();
        assert_eq!(r.size, 8);
        assert_eq!(r.witness.points(), &pts(&[0, 1, 2, 4, 8, 16, 32, 63])[..]);
    }

    #[test]
    fn search_range() {
        assert!(matches!(
            min_maximal_size(0),
            Err(Error::OracleRange { .. })
        ));
        assert!(matches!(
            min_maximal_size(7),
            Err(Error::OracleRange { .. })
        ));
    }
}
