//! A shared, lazily grown table of primes.
//!
//! The table is filled by a segmented sieve and never exceeds
//! [`PRIME_TABLE_LIMIT`]. Queries that would need primes beyond it fail
//! with `PrimeBudgetExceeded` instead of running for hours.

use super::Nat;
use crate::error::{Error, Result};
use num_integer::Roots;
use num_traits::{ToPrimitive, Zero};
use std::sync::{Arc, LazyLock, RwLock};

/// Largest value the prime table will ever cover.
pub const PRIME_TABLE_LIMIT: u64 = 1 << 28;

const SEGMENT: u64 = 1 << 20;

struct Table {
    primes: Vec<u32>,
    upto: u64,
}

static TABLE: LazyLock<RwLock<Arc<Table>>> = LazyLock::new(|| {
    let upto = 1u64 << 16;
    let mut composite = vec![false; upto as usize + 1];
    let mut primes = Vec::new();
    for i in 2..=upto as usize {
        if !composite[i] {
            primes.push(i as u32);
            let mut j = i * i;
            while j <= upto as usize {
                composite[j] = true;
                j += i;
            }
        }
    }
    RwLock::new(Arc::new(Table { primes, upto }))
});

fn snapshot() -> Arc<Table> {
    TABLE.read().unwrap().clone()
}

fn budget(what: impl std::fmt::Display) -> Error {
    Error::PrimeBudgetExceeded(format!("{what} needs primes beyond {PRIME_TABLE_LIMIT}"))
}

fn extend(t: &Table, target: u64) -> Table {
    let mut primes = t.primes.clone();
    let mut lo = t.upto + 1;
    while lo <= target {
        let hi = (lo + SEGMENT - 1).min(target);
        let mut composite = vec![false; (hi - lo + 1) as usize];
        for &p in &t.primes {
            let p = p as u64;
            if p * p > hi {
                break;
            }
            let mut j = (lo.div_ceil(p) * p).max(p * p);
            while j <= hi {
                composite[(j - lo) as usize] = true;
                j += p;
            }
        }
        primes.extend(
            composite
                .iter()
                .enumerate()
                .filter(|(_, &c)| !c)
                .map(|(i, _)| (lo + i as u64) as u32),
        );
        lo = hi + 1;
    }
    Table { primes, upto: target }
}

fn table_upto(limit: u64) -> Result<Arc<Table>> {
    if limit > PRIME_TABLE_LIMIT {
        return Err(budget(limit));
    }
    let t = snapshot();
    if t.upto >= limit {
        return Ok(t);
    }
    let mut w = TABLE.write().unwrap();
    if w.upto < limit {
        // the existing primes cover sqrt(target) because target <= upto^2
        let target = limit.max(2 * w.upto).min(PRIME_TABLE_LIMIT);
        *w = Arc::new(extend(&w, target));
    }
    Ok(w.clone())
}

fn table_count(k: usize) -> Result<Arc<Table>> {
    loop {
        let t = snapshot();
        if t.primes.len() > k {
            return Ok(t);
        }
        if t.upto >= PRIME_TABLE_LIMIT {
            return Err(budget(format!("prime number {k}")));
        }
        table_upto((2 * t.upto).min(PRIME_TABLE_LIMIT))?;
    }
}

/// Infinite ascending stream of primes.
#[derive(Debug, Clone, Default)]
pub struct PrimeIter {
    index: usize,
    last: u64,
}

pub fn primes() -> PrimeIter {
    PrimeIter::default()
}

impl Iterator for PrimeIter {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        if let Ok(t) = table_count(self.index) {
            self.last = t.primes[self.index] as u64;
            self.index += 1;
            return Some(self.last);
        }
        // past the table: trial division by the table itself
        let mut c = self.last + 1;
        while !is_prime_u64(c).expect("trial division covers 2^56") {
            c += 1;
        }
        self.last = c;
        self.index += 1;
        Some(c)
    }
}

fn is_prime_u64(n: u64) -> Result<bool> {
    if n < 2 {
        return Ok(false);
    }
    let t = snapshot();
    if n <= t.upto {
        return Ok(t.primes.binary_search(&(n as u32)).is_ok());
    }
    let r = n.sqrt();
    let t = table_upto(r).map_err(|_| budget(n))?;
    Ok(t.primes
        .iter()
        .map(|&p| p as u64)
        .take_while(|&p| p <= r)
        .all(|p| n % p != 0))
}

pub fn is_prime(n: &Nat) -> Result<bool> {
    match n.to_u64() {
        Some(n) => is_prime_u64(n),
        None => {
            let r = n.sqrt().to_u64().ok_or_else(|| budget(n))?;
            let t = table_upto(r).map_err(|_| budget(n))?;
            Ok(t.primes
                .iter()
                .take_while(|&&p| p as u64 <= r)
                .all(|&p| !(n % p).is_zero()))
        }
    }
}

/// Prime factors of `n` in ascending order, repeated by multiplicity.
pub fn factorize(n: &Nat) -> Result<Vec<Nat>> {
    if n.is_zero() {
        return Err(Error::NotFactorable);
    }
    if let Some(m) = n.to_u64() {
        return factorize_u64(m).map(|fs| fs.into_iter().map(Nat::from).collect());
    }
    let mut m = n.clone();
    let mut out = Vec::new();
    let mut index = 0;
    loop {
        if let Some(small) = m.to_u64() {
            let rest = factorize_u64_from(small, index)?;
            out.extend(rest.into_iter().map(Nat::from));
            return Ok(out);
        }
        let t = table_count(index).map_err(|_| budget(n))?;
        let p = t.primes[index];
        while (&m % p).is_zero() {
            m /= p;
            out.push(Nat::from(p));
        }
        index += 1;
    }
}

fn factorize_u64(m: u64) -> Result<Vec<u64>> {
    factorize_u64_from(m, 0)
}

fn factorize_u64_from(mut m: u64, mut index: usize) -> Result<Vec<u64>> {
    let mut out = Vec::new();
    let origin = m;
    loop {
        if m == 1 {
            return Ok(out);
        }
        let t = table_count(index).map_err(|_| budget(origin))?;
        let end = t.primes.len();
        while index < end {
            let p = t.primes[index] as u64;
            if p * p > m {
                out.push(m);
                return Ok(out);
            }
            while m % p == 0 {
                m /= p;
                out.push(p);
            }
            if m == 1 {
                return Ok(out);
            }
            index += 1;
        }
    }
}

/// Zero-based position of the prime `p` in the prime sequence.
pub fn prime_index(p: &Nat) -> Result<Nat> {
    let v = p.to_u64().ok_or_else(|| budget(p))?;
    if v > PRIME_TABLE_LIMIT {
        return Err(budget(format!("index of {p}")));
    }
    let t = table_upto(v.max(2))?;
    t.primes
        .binary_search(&(v as u32))
        .map(Nat::from)
        .map_err(|_| Error::NotPrime(p.to_string()))
}

/// The `i`-th prime, counting from 0.
pub fn nth_prime(i: &Nat) -> Result<Nat> {
    let k = i.to_usize().ok_or_else(|| budget(format!("prime number {i}")))?;
    let t = table_count(k)?;
    Ok(Nat::from(t.primes[k]))
}
