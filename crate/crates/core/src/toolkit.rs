//! Generation, random testing, size metrics and prime-based experiments built
//! on top of the encoders.

use crate::basic::nat;
use crate::error::{Error, Result};
use crate::hylo::tsize;
use crate::iso::{Encoder, Root};
use crate::numutil::{is_prime, nth_prime, pow2, prime_index, primes, Nat};
use crate::pairing::{bitunpair, mset_unpair, pepis_unpair, Nat2};
use crate::registry::{lookup, names, AnyEncoder};
use crate::value::Value;
use num_traits::ToPrimitive;
use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::Xoshiro256StarStar;
use std::collections::BTreeSet;
use std::str::FromStr;

/// Anything that maps values to and from the shared root representation.
pub trait Codec {
    type Item;
    fn codec_name(&self) -> &str;
    fn encode(&self, x: &Self::Item) -> Result<Root>;
    fn decode(&self, r: &Root) -> Result<Self::Item>;
}

impl<A: 'static> Codec for Encoder<A> {
    type Item = A;
    fn codec_name(&self) -> &str {
        self.name()
    }
    fn encode(&self, x: &A) -> Result<Root> {
        self.from(x)
    }
    fn decode(&self, r: &Root) -> Result<A> {
        self.to(r)
    }
}

impl Codec for AnyEncoder {
    type Item = Value;
    fn codec_name(&self) -> &str {
        self.name()
    }
    fn encode(&self, x: &Value) -> Result<Root> {
        self.from(x)
    }
    fn decode(&self, r: &Root) -> Result<Value> {
        self.to(r)
    }
}

/// The `n`-th value of `enc`'s type.
pub fn nth<C: Codec>(enc: &C, n: &Nat) -> Result<C::Item> {
    enc.decode(&nat().from(n)?)
}

pub fn nths<C: Codec>(enc: &C, ns: &[Nat]) -> Result<Vec<C::Item>> {
    ns.iter().map(|n| nth(enc, n)).collect()
}

/// Values for `n = 0, 1, 2, ...`; restartable by calling again.
pub fn stream_of<C: Codec>(enc: &C) -> impl Iterator<Item = Result<C::Item>> + '_ {
    (0u64..).map(move |n| nth(enc, &Nat::from(n)))
}

/// Natural number index of `x`.
pub fn index_of<C: Codec>(enc: &C, x: &C::Item) -> Result<Nat> {
    nat().to(&enc.encode(x)?)
}

/// `n` taken to `enc`'s type and back.
pub fn visit_as<C: Codec>(enc: &C, n: &Nat) -> Result<Nat> {
    index_of(enc, &nth(enc, n)?)
}

/// The generator behind every random draw: xoshiro256** seeded through
/// splitmix64, as in `Xoshiro256StarStar::seed_from_u64`.
pub fn rng(seed: u64) -> Xoshiro256StarStar {
    Xoshiro256StarStar::seed_from_u64(seed)
}

/// A draw in `[0, max]`: the next output modulo `max + 1`. Bounds wider than
/// 64 bits concatenate one extra word beyond the width of `max`, low word first.
pub fn draw(g: &mut Xoshiro256StarStar, max: &Nat) -> Nat {
    if let Some(m) = max.to_u64() {
        return Nat::from((g.next_u64() as u128 % (m as u128 + 1)) as u64);
    }
    let words = max.bits().div_ceil(64) + 1;
    let digits: Vec<u32> = (0..words)
        .flat_map(|_| {
            let w = g.next_u64();
            [w as u32, (w >> 32) as u32]
        })
        .collect();
    Nat::from_slice(&digits) % (max + 1u32)
}

/// First draw in `[0, max]` for `seed`.
pub fn rand(max: &Nat, seed: u64) -> Nat {
    draw(&mut rng(seed), max)
}

/// `count` values at uniformly drawn indices in `[0, largest]`.
pub fn random_gen<C: Codec>(enc: &C, seed: u64, largest: &Nat, count: usize) -> Result<Vec<C::Item>> {
    let mut g = rng(seed);
    (0..count).map(|_| nth(enc, &draw(&mut g, largest))).collect()
}

/// Bit width of the indices drawn by [`rantest`].
pub const RANTEST_BITS: u64 = 50;
pub const RANTEST_SEEDS: u64 = 256;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RantestReport {
    pub encoder: String,
    pub cases: u64,
    /// `(index, what went wrong)` for every failing draw.
    pub failures: Vec<(Nat, String)>,
}

impl RantestReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks `visit_as(enc, n) = n` for one draw below `2^bits` per seed
/// `0..RANTEST_SEEDS`.
pub fn rantest_bits<C: Codec>(enc: &C, bits: u64) -> RantestReport {
    let max = pow2(bits) - 1u32;
    let failures = (0..RANTEST_SEEDS)
        .filter_map(|seed| {
            let n = rand(&max, seed);
            match visit_as(enc, &n) {
                Ok(m) if m == n => None,
                Ok(m) => Some((n, format!("came back as {m}"))),
                Err(e) => Some((n, e.to_string())),
            }
        })
        .collect();
    RantestReport {
        encoder: enc.codec_name().to_string(),
        cases: RANTEST_SEEDS,
        failures,
    }
}

pub fn rantest<C: Codec>(enc: &C) -> RantestReport {
    rantest_bits(enc, RANTEST_BITS)
}

/// [`rantest_bits`] over every registered encoder.
pub fn isotest_bits(bits: u64) -> Result<Vec<RantestReport>> {
    names()
        .iter()
        .map(|n| Ok(rantest_bits(&lookup(n)?, bits)))
        .collect()
}

pub fn isotest() -> Result<Vec<RantestReport>> {
    isotest_bits(RANTEST_BITS)
}

fn shape(enc: &AnyEncoder) -> Error {
    Error::ShapeMismatch {
        expected: format!("a sequence or tree encoder, not `{}`", enc.name()),
    }
}

/// Number of elements in `n`'s image as a sequence.
pub fn length_as(enc: &AnyEncoder, n: &Nat) -> Result<Nat> {
    match nth(enc, n)? {
        Value::NatSeq(xs) => Ok(Nat::from(xs.len())),
        Value::Perm(p) => Ok(Nat::from(p.len())),
        _ => Err(shape(enc)),
    }
}

/// Sum of the elements of `n`'s image as a sequence.
pub fn sum_as(enc: &AnyEncoder, n: &Nat) -> Result<Nat> {
    match nth(enc, n)? {
        Value::NatSeq(xs) => Ok(xs.iter().sum()),
        Value::Perm(p) => Ok(p.as_slice().iter().map(|&x| Nat::from(x)).sum()),
        _ => Err(shape(enc)),
    }
}

/// Node count of `n`'s image as a hereditarily finite tree.
pub fn size_as(enc: &AnyEncoder, n: &Nat) -> Result<Nat> {
    match nth(enc, n)? {
        Value::HTree(t) => Ok(tsize(&t)),
        _ => Err(shape(enc)),
    }
}

/// The unpairing functions hyper-primes can be taken over.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Unpairing {
    Bit,
    Pepis,
    Mset,
}

impl Unpairing {
    pub fn apply(self, n: &Nat) -> Nat2 {
        match self {
            Unpairing::Bit => bitunpair(n),
            Unpairing::Pepis => pepis_unpair(n),
            Unpairing::Mset => mset_unpair(n),
        }
    }
}

impl FromStr for Unpairing {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "bitunpair" => Ok(Unpairing::Bit),
            "pepis_unpair" => Ok(Unpairing::Pepis),
            "mset_unpair" => Ok(Unpairing::Mset),
            _ => Err(Error::UnknownKind(s.to_string())),
        }
    }
}

/// Sorted distinct values `>= 2` met while unpairing `n` recursively, `n`
/// itself excluded.
pub fn uparts(u: Unpairing, n: &Nat) -> Vec<Nat> {
    let two = Nat::from(2u8);
    let mut seen = BTreeSet::new();
    let mut stack = vec![];
    if *n >= two {
        let (a, b) = u.apply(n);
        stack.extend([a, b]);
    }
    while let Some(m) = stack.pop() {
        if m < two || seen.contains(&m) {
            continue;
        }
        let (a, b) = u.apply(&m);
        seen.insert(m);
        stack.extend([a, b]);
    }
    seen.into_iter().collect()
}

/// Primes whose every unpairing part is prime, ascending. Ends with an error
/// if a part outgrows the prime table.
pub fn hyper_primes(u: Unpairing) -> impl Iterator<Item = Result<Nat>> {
    primes().filter_map(move |p| {
        let p = Nat::from(p);
        for x in uparts(u, &p) {
            match is_prime(&x) {
                Ok(true) => {}
                Ok(false) => return None,
                Err(e) => return Some(Err(e)),
            }
        }
        Some(Ok(p))
    })
}

pub fn take_hyper_primes(u: Unpairing, count: usize) -> Result<Vec<Nat>> {
    hyper_primes(u).take(count).collect()
}

fn require_prime(p: &Nat) -> Result<()> {
    if is_prime(p)? {
        Ok(())
    } else {
        Err(Error::NotPrime(p.to_string()))
    }
}

/// A pairing function transported to primes through their positions.
pub fn ppair(pairing: impl Fn(&Nat2) -> Nat, (p, q): &Nat2) -> Result<Nat> {
    require_prime(p)?;
    require_prime(q)?;
    nth_prime(&pairing(&(prime_index(p)?, prime_index(q)?)))
}

pub fn punpair(unpairing: impl Fn(&Nat) -> Nat2, p: &Nat) -> Result<Nat2> {
    require_prime(p)?;
    let (a, b) = unpairing(&prime_index(p)?);
    Ok((nth_prime(&a)?, nth_prime(&b)?))
}

/// `2^(2^k) + 1`.
pub fn fermat(k: u64) -> Nat {
    pow2(1 << k) + 1u32
}

/// Whether `mset_pair (F k, F k) = F (k+1)` for every `k` in `ks`.
pub fn fermat_lemma(ks: impl IntoIterator<Item = u64>) -> bool {
    ks.into_iter().all(|k| {
        let f = fermat(k);
        crate::pairing::mset_pair(&(f.clone(), f)) == fermat(k + 1)
    })
}

/// Indices `n` on which `enc` and its decoding disagree, for quick checks on
/// hand-made encoders.
pub fn failing_indices<C: Codec>(enc: &C, upto: u64) -> Vec<Nat> {
    (0..upto)
        .map(Nat::from)
        .filter(|n| visit_as(enc, n).map_or(true, |m| m != *n))
        .collect()
}
