//! Sharded triple enumeration behind `cover_profile` and `covered_bitmap`.
//!
//! Index triples `i < j < k` into the sorted point list are split by `i`:
//! shard `s` of `S` owns every `i` with `i % S == s`. Each shard writes a
//! private accumulator and the accumulators are merged by addition (counts)
//! or union (bitmaps), so the result does not depend on the shard count or
//! on the order in which shards finish. The shard count follows the
//! ambient rayon pool, capped so that the private accumulators stay within
//! [`SCRATCH_BUDGET`].

use fixedbitset::FixedBitSet;
use rayon::prelude::*;

use crate::sidon::Point;

/// Bytes of private accumulators allowed across all shards.
const SCRATCH_BUDGET: usize = 1 << 30;

fn shard_count(num_points: usize, bytes_per_shard: usize) -> usize {
    let by_memory = (SCRATCH_BUDGET / bytes_per_shard.max(1)).max(1);
    rayon::current_num_threads()
        .min(by_memory)
        .min(num_points.saturating_sub(2).max(1))
}

#[inline]
fn for_each_triple_in_shard(points: &[Point], shard: usize, shards: usize, mut f: impl FnMut(u32)) {
    let k = points.len();
    for i in (shard..k.saturating_sub(2)).step_by(shards) {
        let a = points[i].0;
        for j in i + 1..k - 1 {
            let ab = a ^ points[j].0;
            for c in &points[j + 1..] {
                f(ab ^ c.0);
            }
        }
    }
}

/// `counts[x]` = number of index triples whose XOR is `x`.
pub(crate) fn triple_counts(points: &[Point], n: u32) -> Vec<u32> {
    let size = 1usize << n;
    let shards = shard_count(points.len(), size * 4);
    if shards == 1 {
        let mut counts = vec![0u32; size];
        for_each_triple_in_shard(points, 0, 1, |x| counts[x as usize] += 1);
        return counts;
    }
    (0..shards)
        .into_par_iter()
        .map(|s| {
            let mut counts = vec![0u32; size];
            for_each_triple_in_shard(points, s, shards, |x| counts[x as usize] += 1);
            counts
        })
        .reduce_with(|mut acc, other| {
            acc.iter_mut().zip(&other).for_each(|(a, b)| *a += b);
            acc
        })
        .unwrap_or_else(|| vec![0u32; size])
}

/// Bit `x` set iff some index triple XORs to `x`.
pub(crate) fn triple_bitmap(points: &[Point], n: u32) -> FixedBitSet {
    let size = 1usize << n;
    let shards = shard_count(points.len(), size / 8);
    let fill = |s: usize| {
        let mut bits = FixedBitSet::with_capacity(size);
        for_each_triple_in_shard(points, s, shards, |x| bits.insert(x as usize));
        bits
    };
    if shards == 1 {
        return fill(0);
    }
    (0..shards)
        .into_par_iter()
        .map(fill)
        .reduce_with(|mut acc, other| {
            acc.union_with(&other);
            acc
        })
        .unwrap_or_else(|| FixedBitSet::with_capacity(size))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pool(threads: usize) -> rayon::ThreadPool {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .unwrap()
    }

    #[test]
    fn shard_counts_do_not_change_results() {
        let mut points: Vec<Point> = (0..60u32)
            .map(|i| Point(i.wrapping_mul(2654435761) >> 22))
            .collect();
        points.sort_unstable();
        points.dedup();
        let base = pool(1).install(|| triple_counts(&points, 10));
        let base_bits = pool(1).install(|| triple_bitmap(&points, 10));
        for t in [2, 3, 7, 16] {
            assert_eq!(pool(t).install(|| triple_counts(&points, 10)), base);
            assert_eq!(pool(t).install(|| triple_bitmap(&points, 10)), base_bits);
        }
        let k = points.len() as u64;
        let total: u64 = base.iter().map(|&c| c as u64).sum();
        assert_eq!(total, k * (k - 1) * (k - 2) / 6);
    }

    #[test]
    fn tiny_inputs() {
        assert!(triple_counts(&[], 3).iter().all(|&c| c == 0));
        assert!(triple_bitmap(&[Point(1), Point(2)], 3).is_clear());
        let bits = triple_bitmap(&[Point(1), Point(2), Point(4)], 3);
        assert_eq!(bits.ones().collect::<Vec<_>>(), vec![7]);
    }
}
