//! Sidon sets in Z₂ⁿ: GF(2^m) arithmetic, the BCH Sidon family
//! `{(x, x^3)}`, exact triple-coverage profiles, and a randomized
//! lift-and-extend construction of small maximal Sidon sets.

pub mod bch;
mod engine;
pub mod error;
pub mod format;
pub mod gf2;
pub mod oracle;
pub mod ruzsa;
pub mod sidon;

pub use bch::{build_bch, coset_coverage_floor, embed, BchParams};
pub use error::{Error, Result};
pub use gf2::{FieldContext, FieldElement};
pub use ruzsa::{
    compute_m, construct_small_maximal, construct_with_base, quotient_map, QuotientBase,
    RuzsaParams, RuzsaReport,
};
pub use sidon::{choose3, Collision, CoverProfile, Point, SidonSet};
