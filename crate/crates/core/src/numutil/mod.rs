//! Natural number helpers: digits, bit counts, multiset operations and primes.

mod mset;
mod primes;

pub use mset::{mset_dif, mset_inter, mset_symdif, mset_union};
pub use primes::{
    factorize, is_prime, nth_prime, prime_index, primes, PrimeIter, PRIME_TABLE_LIMIT,
};

use crate::error::{Error, Result};
use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

/// Arbitrary precision natural number.
pub type Nat = BigUint;
/// Arbitrary precision integer.
pub type Int = BigInt;

pub fn big(n: u64) -> Nat {
    Nat::from(n)
}

pub fn nats(ns: &[u64]) -> Vec<Nat> {
    ns.iter().map(|&n| big(n)).collect()
}

pub(crate) fn to_u64(n: &Nat, what: &str) -> Result<u64> {
    n.to_u64().ok_or_else(|| Error::TooLarge(format!("{what} {n}")))
}

pub(crate) fn to_usize(n: &Nat, what: &str) -> Result<usize> {
    n.to_usize().ok_or_else(|| Error::TooLarge(format!("{what} {n}")))
}

pub fn pow2(e: u64) -> Nat {
    let mut r = Nat::zero();
    r.set_bit(e, true);
    r
}


/// Positions of the 1 bits of `n`, ascending.
pub fn bit_positions(n: &Nat) -> impl Iterator<Item = u64> + '_ {
    n.iter_u64_digits().enumerate().flat_map(|(i, mut w)| {
        let base = i as u64 * 64;
        std::iter::from_fn(move || {
            if w == 0 {
                return None;
            }
            let t = w.trailing_zeros() as u64;
            w &= w - 1;
            Some(base + t)
        })
    })
}

/// Digits of `n` in base `b`, least significant first; `to_base(b, 0) == [0]`.
pub fn to_base(b: &Nat, n: &Nat) -> Result<Vec<Nat>> {
    if *b < big(2) {
        return Err(Error::BaseTooSmall(b.to_string()));
    }
    if n.is_zero() {
        return Ok(vec![Nat::zero()]);
    }
    // power-of-two bases read straight off the bit pattern
    if (b & (b - 1u32)).is_zero() {
        let w = b.bits() - 1;
        let mut out = Vec::with_capacity((n.bits() / w + 1) as usize);
        let mask = b - 1u32;
        let mut m = n.clone();
        while !m.is_zero() {
            out.push(&m & &mask);
            m >>= w;
        }
        return Ok(out);
    }
    let mut out = Vec::new();
    let mut m = n.clone();
    while !m.is_zero() {
        let (q, r) = m.div_rem(b);
        out.push(r);
        m = q;
    }
    Ok(out)
}

/// Inverse of [`to_base`]; every digit must be below `b`.
pub fn from_base(b: &Nat, ds: &[Nat]) -> Result<Nat> {
    if *b < big(2) {
        return Err(Error::BaseTooSmall(b.to_string()));
    }
    let mut acc = Nat::zero();
    for d in ds.iter().rev() {
        if d >= b {
            return Err(Error::InvalidDigit {
                digit: d.to_string(),
                base: b.to_string(),
            });
        }
        acc = acc * b + d;
    }
    Ok(acc)
}

/// Binary digits, most significant first; `to_lbits(0) == [0]`.
pub fn to_lbits(n: &Nat) -> Vec<u8> {
    if n.is_zero() {
        return vec![0];
    }
    (0..n.bits()).rev().map(|i| n.bit(i) as u8).collect()
}

/// Inverse of [`to_lbits`].
pub fn from_lbits(bs: &[u8]) -> Result<Nat> {
    let mut acc = Nat::zero();
    for &b in bs {
        if b > 1 {
            return Err(Error::InvalidDigit {
                digit: b.to_string(),
                base: "2".into(),
            });
        }
        acc <<= 1;
        if b == 1 {
            acc += 1u32;
        }
    }
    Ok(acc)
}

/// Smallest `x >= 1` with `2^x > n`.
pub fn bitcount(n: &Nat) -> u64 {
    n.bits().max(1)
}

pub fn max_bitcount(ns: &[Nat]) -> u64 {
    ns.iter().map(bitcount).max().unwrap_or(0)
}

/// The low `width` bits of `n`, least significant first.
pub fn to_maxbits(width: u64, n: &Nat) -> Vec<u8> {
    (0..width).map(|i| n.bit(i) as u8).collect()
}


pub(crate) fn is_sorted<T: Ord>(xs: &[T]) -> bool {
    xs.windows(2).all(|w| w[0] <= w[1])
}

pub(crate) fn is_strictly_sorted<T: Ord>(xs: &[T]) -> bool {
    xs.windows(2).all(|w| w[0] < w[1])
}
