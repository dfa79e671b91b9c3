//! Tuples by bit-matrix transposition, and finite functions built on them.

use super::{pepis_pair, pepis_unpair};
use crate::basic::nat;
use crate::error::{Error, Result};
use crate::hylo::{hylo, HTree};
use crate::iso::{Encoder, Iso};
use crate::numutil::{bit_positions, to_u64, Nat};
use num_traits::Zero;
use std::sync::Arc;

/// Bit `i*k + j` of `n` becomes bit `i` of the `j`-th component.
pub fn to_tuple(k: usize, n: &Nat) -> Result<Vec<Nat>> {
    if k == 0 {
        return Err(Error::EmptyTuple);
    }
    let mut out = vec![Nat::zero(); k];
    let k64 = k as u64;
    for p in bit_positions(n) {
        out[(p % k64) as usize].set_bit(p / k64, true);
    }
    Ok(out)
}

pub fn from_tuple(ns: &[Nat]) -> Result<Nat> {
    if ns.is_empty() {
        return Err(Error::EmptyTuple);
    }
    let k = ns.len() as u64;
    let mut r = Nat::zero();
    for (j, x) in ns.iter().enumerate() {
        for i in bit_positions(x) {
            r.set_bit(i * k + j as u64, true);
        }
    }
    Ok(r)
}

/// `[]` is 0; otherwise one more than the Pepis pair of the length and the tuple code.
pub fn ftuple2nat(ns: &[Nat]) -> Result<Nat> {
    if ns.is_empty() {
        return Ok(Nat::zero());
    }
    let t = from_tuple(ns)?;
    Ok(pepis_pair(&(Nat::from(ns.len() - 1), t))? + 1u32)
}

pub fn nat2ftuple(n: &Nat) -> Result<Vec<Nat>> {
    if n.is_zero() {
        return Ok(vec![]);
    }
    let (k, f) = pepis_unpair(&(n - 1u32));
    let k = to_u64(&k, "tuple length")?;
    if k >= 1 << 24 {
        return Err(Error::TooLarge(format!("tuple of length {k} + 1")));
    }
    let len = k as usize + 1;
    to_tuple(len, &f)
}

pub fn fun2() -> Encoder<Vec<Nat>> {
    Encoder::via(
        "fun2",
        Iso::new(|ns: &Vec<Nat>| ftuple2nat(ns), nat2ftuple),
        &nat(),
    )
}

pub fn hff2() -> Encoder<HTree> {
    hylo("hff2", Arc::new(nat2ftuple), Arc::new(|cs| ftuple2nat(&cs)))
}
