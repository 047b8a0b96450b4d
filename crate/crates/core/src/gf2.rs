//! Arithmetic in GF(2^m) with a polynomial basis.
//!
//! An element is an `m`-bit mask where bit `i` is the coefficient of `x^i`.
//! Products are carry-less multiplications reduced modulo the canonical
//! modulus of the degree: the numerically smallest irreducible polynomial of
//! degree `m` over GF(2).

use std::fmt;

use crate::error::Error;

/// Largest supported extension degree.
pub const MAX_DEGREE: u32 = 32;

/// Smallest irreducible polynomial of each degree 1..=32, as bitmasks.
/// Entry `m - 1` belongs to degree `m`; every entry is re-checked by
/// [`is_irreducible`] when a context is created.
const CANONICAL_MODULI: [u64; MAX_DEGREE as usize] = [
    0x2,
    0x7,
    0xb,
    0x13,
    0x25,
    0x43,
    0x83,
    0x11b,
    0x203,
    0x409,
    0x805,
    0x1009,
    0x201b,
    0x4021,
    0x8003,
    0x1002b,
    0x20009,
    0x40009,
    0x80027,
    0x100009,
    0x200005,
    0x400003,
    0x800021,
    0x100001b,
    0x2000009,
    0x400001b,
    0x8000027,
    0x10000003,
    0x20000005,
    0x40000003,
    0x80000009,
    0x10000008d,
];

/// An element of some GF(2^m). Carries no reference to its field.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FieldElement(u32);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    #[inline]
    pub const fn new(bits: u32) -> Self {
        FieldElement(bits)
    }

    #[inline]
    pub const fn bits(self) -> u32 {
        self.0
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:#x}", self.0)
    }
}

/// Degree and modulus of GF(2^m). Immutable once built.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FieldContext {
    degree: u32,
    modulus: u64,
}

impl FieldContext {
    /// The field of degree `m` with its canonical modulus.
    pub fn new(m: u32) -> Result<Self, Error> {
        if !(1..=MAX_DEGREE).contains(&m) {
            return Err(Error::DegreeOutOfRange(m));
        }
        Self::with_modulus(m, CANONICAL_MODULI[m as usize - 1])
    }

    /// A field of degree `m` over an explicit modulus, which must be an
    /// irreducible polynomial of exactly that degree.
    pub fn with_modulus(m: u32, modulus: u64) -> Result<Self, Error> {
        if !(1..=MAX_DEGREE).contains(&m) {
            return Err(Error::DegreeOutOfRange(m));
        }
        if poly_degree(modulus) != Some(m) || !is_irreducible(modulus) {
            return Err(Error::ReducibleModulus { degree: m, modulus });
        }
        Ok(FieldContext { degree: m, modulus })
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.degree
    }

    #[inline]
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// Number of field elements, `2^m`.
    #[inline]
    pub fn order(&self) -> u64 {
        1u64 << self.degree
    }

    #[inline]
    pub fn contains(&self, a: FieldElement) -> bool {
        (a.0 as u64) < self.order()
    }

    /// All elements in ascending bit order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        (0..self.order()).map(|b| FieldElement(b as u32))
    }

    #[inline]
    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        FieldElement(a.0 ^ b.0)
    }

    #[inline]
    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        debug_assert!(self.contains(a) && self.contains(b));
        FieldElement(reduce(clmul(a.0 as u64, b.0 as u64), self.modulus) as u32)
    }

    #[inline]
    pub fn square(&self, a: FieldElement) -> FieldElement {
        self.mul(a, a)
    }

    #[inline]
    pub fn cube(&self, a: FieldElement) -> FieldElement {
        self.mul(a, self.mul(a, a))
    }

    /// Square-and-multiply exponentiation; `pow(a, 0) = 1` for every `a`.
    pub fn pow(&self, a: FieldElement, mut e: u64) -> FieldElement {
        let mut base = a;
        let mut acc = FieldElement::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.square(base);
            e >>= 1;
        }
        acc
    }
}

/// Degree of a GF(2)[x] polynomial, `None` for the zero polynomial.
#[inline]
pub fn poly_degree(p: u64) -> Option<u32> {
    (p != 0).then(|| 63 - p.leading_zeros())
}

/// Carry-less product of two polynomials of degree < 32.
#[inline]
pub fn clmul(a: u64, b: u64) -> u64 {
    debug_assert!(a >> 32 == 0 && b >> 32 == 0);
    let mut acc = 0u64;
    let mut b = b;
    let mut shift = 0;
    while b != 0 {
        let tz = b.trailing_zeros();
        shift += tz;
        acc ^= a << shift;
        b >>= tz;
        b >>= 1;
        shift += 1;
    }
    acc
}

/// `p mod modulus` in GF(2)[x].
#[inline]
pub fn reduce(mut p: u64, modulus: u64) -> u64 {
    let m = poly_degree(modulus).expect("zero modulus");
    while let Some(d) = poly_degree(p) {
        if d < m {
            break;
        }
        p ^= modulus << (d - m);
    }
    p
}

fn mulmod(a: u64, b: u64, modulus: u64) -> u64 {
    reduce(clmul(a, b), modulus)
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let r = reduce(a, b);
        a = b;
        b = r;
    }
    a
}

/// `x^(2^k) mod f`.
fn frobenius_power_of_x(k: u32, f: u64) -> u64 {
    let mut acc = reduce(0b10, f);
    for _ in 0..k {
        acc = mulmod(acc, acc, f);
    }
    acc
}

fn prime_divisors(mut m: u32) -> Vec<u32> {
    let mut out = Vec::new();
    let mut q = 2;
    while q * q <= m {
        if m % q == 0 {
            out.push(q);
            while m % q == 0 {
                m /= q;
            }
        }
        q += 1;
    }
    if m > 1 {
        out.push(m);
    }
    out
}

/// Rabin's test: `f` of degree `m` is irreducible iff `x^(2^m) = x (mod f)`
/// and `gcd(x^(2^(m/q)) - x mod f, f) = 1` for every prime `q | m`.
pub fn is_irreducible(f: u64) -> bool {
    let m = match poly_degree(f) {
        Some(d) if (1..=MAX_DEGREE).contains(&d) => d,
        _ => return false,
    };
    let x = reduce(0b10, f);
    if frobenius_power_of_x(m, f) != x {
        return false;
    }
    prime_divisors(m).into_iter().all(|q| {
        let h = frobenius_power_of_x(m / q, f) ^ x;
        gcd(f, h) == 1
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand_core::{Rng, SeedableRng};
    use rand_xoshiro::SplitMix64;

    /// Irreducibility by trial division over every polynomial of degree
    /// 1..=deg/2. Independent of Rabin's test.
    fn irreducible_by_trial_division(f: u64) -> bool {
        let m = poly_degree(f).unwrap();
        for d in 1..=m / 2 {
            for g in (1u64 << d)..(1u64 << (d + 1)) {
                if reduce(f, g) == 0 {
                    return false;
                }
            }
        }
        true
    }

    #[test]
    fn small_examples() {
        assert_eq!(FieldContext::new(1).unwrap().modulus(), 0b10);
        assert_eq!(FieldContext::new(2).unwrap().modulus(), 0b111);
        assert_eq!(FieldContext::new(3).unwrap().modulus(), 0b1011);
        assert!(matches!(
            FieldContext::new(0),
            Err(Error::DegreeOutOfRange(0))
        ));
        assert!(matches!(
            FieldContext::new(33),
            Err(Error::DegreeOutOfRange(33))
        ));
    }

    #[test]
    fn table_entries_are_smallest_irreducibles() {
        for m in 1..=16u32 {
            let smallest = ((1u64 << m)..(1u64 << (m + 1)))
                .find(|&f| irreducible_by_trial_division(f))
                .unwrap();
            assert_eq!(CANONICAL_MODULI[m as usize - 1], smallest, "degree {m}");
        }
        for m in 1..=MAX_DEGREE {
            let f = CANONICAL_MODULI[m as usize - 1];
            assert!(is_irreducible(f), "degree {m}");
            assert!(((1u64 << m)..f).all(|g| !is_irreducible(g)), "degree {m}");
        }
    }

    #[test]
    fn rabin_matches_trial_division() {
        for f in 2u64..(1 << 12) {
            assert_eq!(
                is_irreducible(f),
                irreducible_by_trial_division(f),
                "{f:#b}"
            );
        }
    }

    #[test]
    fn reducible_modulus_rejected() {
        // x^3 + 1 = (x + 1)(x^2 + x + 1)
        assert!(FieldContext::with_modulus(3, 0b1001).is_err());
        assert!(FieldContext::with_modulus(4, 0b1011).is_err());
    }

    #[test]
    fn gf8_hand_reductions() {
        let f = FieldContext::new(3).unwrap();
        let x = FieldElement::new(0b010);
        assert_eq!(f.mul(x, x), FieldElement::new(0b100));
        assert_eq!(f.mul(FieldElement::new(0b100), x), FieldElement::new(0b011));
        assert_eq!(f.cube(x), FieldElement::new(0b011));
        assert_eq!(f.pow(x, 3), FieldElement::new(0b011));
        assert_eq!(f.cube(FieldElement::ZERO), FieldElement::ZERO);
        assert_eq!(f.cube(FieldElement::ONE), FieldElement::ONE);
        assert_eq!(
            f.add(FieldElement::new(0b101), FieldElement::new(0b011)),
            FieldElement::new(0b110)
        );
    }

    #[test]
    fn exhaustive_small_fields() {
        for m in 1..=12 {
            let f = FieldContext::new(m).unwrap();
            let group_order = f.order() - 1;
            for a in f.elements() {
                assert_eq!(f.add(a, a), FieldElement::ZERO);
                assert_eq!(f.add(a, FieldElement::ZERO), a);
                assert_eq!(f.mul(a, FieldElement::ONE), a);
                assert_eq!(f.cube(a), f.pow(a, 3));
                assert_eq!(f.cube(a), f.mul(a, f.mul(a, a)));
                if a != FieldElement::ZERO {
                    assert_eq!(f.pow(a, 0), FieldElement::ONE);
                    assert_eq!(f.pow(a, group_order), FieldElement::ONE);
                }
            }
        }
    }

    #[test]
    fn random_ring_axioms() {
        let mut rng = SplitMix64::seed_from_u64(7);
        for m in [5u32, 13, 24, 31, 32] {
            let f = FieldContext::new(m).unwrap();
            let mask = (f.order() - 1) as u32;
            for _ in 0..1000 {
                let a = FieldElement::new(rng.next_u32() & mask);
                let b = FieldElement::new(rng.next_u32() & mask);
                let c = FieldElement::new(rng.next_u32() & mask);
                assert_eq!(f.mul(a, b), f.mul(b, a));
                assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                assert_eq!(f.add(a, b).bits(), a.bits() ^ b.bits());
                assert!(f.contains(f.mul(a, b)));
            }
        }
    }

    #[test]
    fn splitmix_reference_vector() {
        let mut rng = SplitMix64::seed_from_u64(1477776061723855037);
        assert_eq!(rng.next_u64(), 1985237415132408290);
    }
}
