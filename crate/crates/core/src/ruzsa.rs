//! Small maximal Sidon sets in Z₂ⁿ by lifting a dense quotient set.
//!
//! Fix `Q` as the span of the low `n - m` coordinates, so the coset of `x` is
//! `x >> (n - m)`. The BCH set `A` in Z₂^m is lifted by choosing one uniform
//! representative per coset; the lift `B` is Sidon whatever the choice. A
//! lift is accepted once it covers every point whose coset lies outside `A`.
//! The remaining uncovered points all sit in `A`-cosets and are added
//! greedily, at most `|Q|` of them, which yields a maximal Sidon set of size
//! at most `2^(m/2) + 2^(n-m)`.

use std::f64::consts::LN_2;

use fixedbitset::FixedBitSet;
use rand_core::{Rng, SeedableRng};
use rand_xoshiro::SplitMix64;
use serde::Serialize;

use crate::bch::BchParams;
use crate::error::{Error, Result};
use crate::sidon::{check_dimension, Point, SidonSet};

pub const DEFAULT_SLACK: f64 = 7.0;
pub const DEFAULT_MAX_ATTEMPTS: u32 = 32;

#[derive(Clone, Debug, PartialEq)]
pub struct RuzsaParams {
    pub n: u32,
    /// Coverage slack `T`: the quotient set is assumed to cover each coset
    /// outside it at least `2^(m/2) / T` times.
    pub slack: f64,
    pub m_override: Option<u32>,
    pub seed: u64,
    pub max_attempts: u32,
}

impl RuzsaParams {
    pub fn new(n: u32) -> Self {
        RuzsaParams {
            n,
            slack: DEFAULT_SLACK,
            m_override: None,
            seed: 0,
            max_attempts: DEFAULT_MAX_ATTEMPTS,
        }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_m(mut self, m: u32) -> Self {
        self.m_override = Some(m);
        self
    }

    /// The quotient dimension this run will use.
    pub fn resolve_m(&self) -> Result<u32> {
        check_dimension(self.n)?;
        if !(self.slack.is_finite() && self.slack > 0.0) {
            return Err(Error::BadSlack(self.slack));
        }
        let m = match self.m_override {
            Some(m) if m % 2 != 0 || m < 4 || m > self.n => {
                return Err(Error::BadQuotientOverride { n: self.n, m })
            }
            Some(m) => m,
            None => compute_m(self.n, self.slack),
        };
        if m > self.n {
            return Err(Error::DimensionTooSmall { n: self.n, m });
        }
        if m < 4 {
            return Err(Error::BadQuotientOverride { n: self.n, m });
        }
        Ok(m)
    }
}

/// Least even integer strictly above `(2/3) * log2(T * ln 2 * n * 2^n)`,
/// or 0 if that bound is negative.
pub fn compute_m(n: u32, slack: f64) -> u32 {
    let bound = (2.0 / 3.0) * ((slack * LN_2 * n as f64).log2() + n as f64);
    let mut m = bound.floor() as i64 + 1;
    if m % 2 != 0 {
        m += 1;
    }
    m.max(0) as u32
}

/// Coset index of `x`: its top `m` bits.
#[inline]
pub fn quotient_map(x: Point, n: u32, m: u32) -> Point {
    debug_assert!(m <= n);
    Point(x.0 >> (n - m))
}

/// One uniform representative per point of `a`, drawn from `rng`.
///
/// Every point consumes one 64-bit output, of which the low `n - m` bits
/// become the offset inside the coset (no bits when `n = m`).
pub fn sample_lift(a: &SidonSet, n: u32, rng: &mut SplitMix64) -> SidonSet {
    let m = a.n();
    assert!(m <= n, "quotient dimension {m} exceeds {n}");
    let shift = n - m;
    let mask = (1u64 << shift) - 1;
    let lifted: Vec<Point> = a
        .points()
        .iter()
        .map(|&p| Point((p.0 << shift) | (rng.next_u64() & mask) as u32))
        .collect();
    let mut b = SidonSet::from_points(n, lifted).expect("lift stays inside Z_2^n");
    assert_eq!(b.len(), a.len());
    if let Err(c) = b.certify() {
        panic!("lift of a Sidon set is not Sidon: {c}");
    }
    b
}

/// Minimum cover count of `a` over its non-members (`u32::MAX` when there
/// are none). Zero is an error: some coset would stay uncovered by any lift.
pub fn certify_coset_coverage(a: &SidonSet) -> Result<u32> {
    let profile = a.cover_profile();
    match profile.min_cover_off_set {
        Some(0) => {
            let hole = (0..profile.counts.len())
                .find(|&x| profile.counts[x] == 0 && !a.contains(Point(x as u32)))
                .expect("a zero-count non-member exists");
            Err(Error::QuotientNotMaximal(hole as u32))
        }
        Some(j) => Ok(j),
        None => Ok(u32::MAX),
    }
}

/// The quotient set `A = build_bch(m)` and its certified coverage.
#[derive(Clone, Debug)]
pub struct QuotientBase {
    bch: BchParams,
    set: SidonSet,
    j_min: u32,
}

impl QuotientBase {
    pub fn new(m: u32) -> Result<Self> {
        let bch = BchParams::new(m)?;
        let set = bch.build();
        let j_min = certify_coset_coverage(&set)?;
        Ok(QuotientBase { bch, set, j_min })
    }

    pub fn m(&self) -> u32 {
        self.bch.m()
    }

    pub fn set(&self) -> &SidonSet {
        &self.set
    }

    pub fn j_min(&self) -> u32 {
        self.j_min
    }

    pub fn modulus(&self) -> u64 {
        self.bch.field().modulus()
    }
}

/// Union bound on the failure probability of one lift:
/// `(2^n - |Q||A|) * (1 - 2^(m-n))^J`.
pub fn union_bound(n: u32, m: u32, size_a: usize, j_min: u32) -> f64 {
    let outside = (1u64 << n) - ((1u64 << (n - m)) * size_a as u64);
    if n == m {
        return 0.0;
    }
    let miss = (-(2f64.powi(m as i32 - n as i32))).ln_1p();
    outside as f64 * (j_min as f64 * miss).exp()
}

#[derive(Clone, Debug)]
pub struct RuzsaReport {
    pub n: u32,
    pub m: u32,
    pub slack: f64,
    pub seed: u64,
    pub attempts_used: u32,
    pub j_min: u32,
    pub size_a: usize,
    pub size_b: usize,
    pub size_x: usize,
    pub size_s: usize,
    pub union_bound: f64,
    pub maximality_verified: bool,
    pub modulus: u64,
    /// `q_i = s_i ^ b_(t_i)` for each greedily added point `s_i`.
    pub extension_offsets: Vec<Point>,
    pub set: SidonSet,
}

/// Fixed-key JSON document written next to the set file.
#[derive(Serialize)]
struct ReportDocument<'a> {
    n: u32,
    m: u32,
    #[serde(rename = "T")]
    slack: f64,
    seed: u64,
    attempts_used: u32,
    j_min: u32,
    size_a: usize,
    size_b: usize,
    size_x: usize,
    size_s: usize,
    union_bound: f64,
    maximal: bool,
    modulus_hex: &'a str,
}

impl RuzsaReport {
    pub fn to_json(&self) -> String {
        let modulus_hex = format!("{:#x}", self.modulus);
        let doc = ReportDocument {
            n: self.n,
            m: self.m,
            slack: self.slack,
            seed: self.seed,
            attempts_used: self.attempts_used,
            j_min: self.j_min,
            size_a: self.size_a,
            size_b: self.size_b,
            size_x: self.size_x,
            size_s: self.size_s,
            union_bound: self.union_bound,
            maximal: self.maximality_verified,
            modulus_hex: &modulus_hex,
        };
        let mut out = serde_json::to_string_pretty(&doc).expect("plain struct serializes");
        out.push('\n');
        out
    }
}

/// Builds the quotient set for `params` and runs [`construct_with_base`].
pub fn construct_small_maximal(params: &RuzsaParams) -> Result<RuzsaReport> {
    let m = params.resolve_m()?;
    let base = QuotientBase::new(m)?;
    construct_with_base(params, &base)
}

/// Whether `covered` contains every point of every coset outside `a`.
fn covers_outside_cosets(covered: &FixedBitSet, a: &SidonSet, shift: u32) -> bool {
    let width = 1usize << shift;
    (0..a.space_size())
        .filter(|&c| !a.contains(Point(c as u32)))
        .all(|c| {
            let lo = c * width;
            covered.contains_all_in_range(lo..lo + width)
        })
}

/// Runs the lift-and-extend construction against a prepared quotient set.
/// `base.m()` must equal the dimension `params` resolves to.
pub fn construct_with_base(params: &RuzsaParams, base: &QuotientBase) -> Result<RuzsaReport> {
    let m = params.resolve_m()?;
    assert_eq!(m, base.m(), "quotient base prepared for a different m");
    let n = params.n;
    let shift = n - m;
    let a = base.set();

    let mut rng = SplitMix64::seed_from_u64(params.seed);
    let mut accepted = None;
    for attempt in 1..=params.max_attempts {
        let b = sample_lift(a, n, &mut rng);
        let covered = b.covered_bitmap();
        if covers_outside_cosets(&covered, a, shift) {
            accepted = Some((attempt, b, covered));
            break;
        }
    }
    let (attempts_used, b, mut covered) =
        accepted.ok_or(Error::AttemptsExhausted(params.max_attempts))?;

    let lifts = b.points();
    let mut members = b.membership().clone();
    let mut points: Vec<Point> = lifts.to_vec();
    let mut extension_offsets = Vec::new();
    loop {
        let mut grew = false;
        for (idx, &coset) in a.points().iter().enumerate() {
            for off in 0..1u32 << shift {
                let x = Point((coset.0 << shift) | off);
                if members.contains(x.0 as usize) || covered.contains(x.0 as usize) {
                    continue;
                }
                for (i, &p) in points.iter().enumerate() {
                    for &q in &points[i + 1..] {
                        covered.insert((x ^ p ^ q).0 as usize);
                    }
                }
                points.push(x);
                members.insert(x.0 as usize);
                extension_offsets.push(x ^ lifts[idx]);
                grew = true;
            }
        }
        if !grew {
            break;
        }
    }

    let mut sorted = extension_offsets.clone();
    sorted.sort_unstable();
    sorted.dedup();
    assert_eq!(
        sorted.len(),
        extension_offsets.len(),
        "extension offsets repeat"
    );
    assert!(!sorted.contains(&Point(0)));
    assert!(sorted.iter().all(|q| q.0 >> shift == 0));

    let mut set = SidonSet::from_points(n, points)?;
    let maximality_verified = set.is_sidon() && set.is_maximal();
    let size_x = extension_offsets.len();
    Ok(RuzsaReport {
        n,
        m,
        slack: params.slack,
        seed: params.seed,
        attempts_used,
        j_min: base.j_min(),
        size_a: a.len(),
        size_b: b.len(),
        size_x,
        size_s: set.len(),
        union_bound: union_bound(n, m, a.len(), base.j_min()),
        maximality_verified,
        modulus: base.modulus(),
        extension_offsets,
        set,
    })
}
