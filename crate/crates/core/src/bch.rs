//! The dense Sidon set `{(x, x^3) : x in GF(2^t)}` inside Z₂^(2t).
//!
//! Each pair `(x, y)` of field elements is laid out as one point with `x` in
//! the low `t` bits and `y` in the high `t` bits. This layout is part of the
//! file format: changing it changes every serialized set.

use crate::error::{Error, Result};
use crate::gf2::{FieldContext, FieldElement};
use crate::sidon::{Point, SidonSet};

/// Ambient dimension `m = 2t` of a BCH set together with its field GF(2^t).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BchParams {
    m: u32,
    field: FieldContext,
}

impl BchParams {
    pub fn new(m: u32) -> Result<Self> {
        if m % 2 != 0 || !(2..=30).contains(&m) {
            return Err(Error::BadBchDimension(m));
        }
        Ok(BchParams {
            m,
            field: FieldContext::new(m / 2)?,
        })
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    /// Field degree `t = m / 2`.
    pub fn t(&self) -> u32 {
        self.m / 2
    }

    pub fn field(&self) -> &FieldContext {
        &self.field
    }

    /// All `2^t` points `(x, x^3)`, certified Sidon.
    pub fn build(&self) -> SidonSet {
        let t = self.t();
        let f = &self.field;
        let mut set = SidonSet::from_points(self.m, f.elements().map(|x| embed(x, f.cube(x), t)))
            .expect("embedded points fit in m bits");
        assert_eq!(set.len(), 1 << t);
        if let Err(c) = set.certify() {
            panic!(
                "(x, x^3) set over modulus {:#x} is not Sidon: {c}",
                f.modulus()
            );
        }
        set
    }
}

/// `(y << t) | x`.
#[inline]
pub fn embed(x: FieldElement, y: FieldElement, t: u32) -> Point {
    debug_assert!(x.bits() >> t == 0 && y.bits() >> t == 0);
    Point((y.bits() << t) | x.bits())
}

/// Convenience for `BchParams::new(m)?.build()`.
pub fn build_bch(m: u32) -> Result<SidonSet> {
    Ok(BchParams::new(m)?.build())
}

/// Guaranteed minimum cover count of every non-member of `build_bch(m)`:
/// `ceil((N - 2*sqrt(N) - 2) / 6)` with `N = 2^(m/2)`, clamped at 0.
///
/// The ceiling is exact. For a candidate `k`, `6k >= N - 2 - 2*sqrt(N)`
/// holds iff `r = N - 2 - 6k <= 0` or `r^2 <= 4N`.
pub fn coset_coverage_floor(m: u32) -> Result<u64> {
    if m % 2 != 0 || !(4..=30).contains(&m) {
        return Err(Error::BadFloorDimension(m));
    }
    let n = 1i64 << (m / 2);
    let holds = |k: i64| {
        let r = n - 2 - 6 * k;
        r <= 0 || r * r <= 4 * n
    };
    let mut k = 0i64;
    while !holds(k) {
        k += 1;
    }
    Ok(k as u64)
}
