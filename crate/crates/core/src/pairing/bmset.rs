//! Multisets as run lengths paired with the gaps between distinct elements.

use super::{bitpair, bitunpair, pepis_pair, pepis_unpair, Nat2};
use crate::basic::{fun2nat, fun2set, nat, nat2fun, set2fun};
use crate::error::{Error, Result};
use crate::hylo::{hylo, HTree};
use crate::iso::{Encoder, Iso};
use crate::numutil::{is_sorted, to_usize, Nat};
use std::sync::Arc;

/// Group equal elements, pair each run length (minus one) with the gap to
/// the previous distinct element, then fuse the pair codes as a sequence.
pub fn fmset2nat(pairing: impl Fn(&Nat2) -> Result<Nat>, ms: &[Nat]) -> Result<Nat> {
    if !is_sorted(ms) {
        return Err(Error::law("bmset", "multiset must be non-decreasing"));
    }
    let mut heads = Vec::new();
    let mut counts: Vec<usize> = Vec::new();
    for x in ms {
        if heads.last() == Some(x) {
            *counts.last_mut().expect("a run is open") += 1;
        } else {
            heads.push(x.clone());
            counts.push(0);
        }
    }
    let ys = set2fun(&heads)?;
    let ns = counts
        .into_iter()
        .zip(ys)
        .map(|(c, y)| pairing(&(Nat::from(c), y)))
        .collect::<Result<Vec<_>>>()?;
    fun2nat(&ns)
}

pub fn fnat2mset(unpairing: impl Fn(&Nat) -> Nat2, m: &Nat) -> Result<Vec<Nat>> {
    let (xs, ys): (Vec<Nat>, Vec<Nat>) = nat2fun(m).iter().map(unpairing).unzip();
    let zs = fun2set(&ys);
    let mut out = Vec::new();
    for (x, z) in xs.iter().zip(zs) {
        let k = to_usize(x, "run length")?;
        out.extend(std::iter::repeat_n(z, k + 1));
    }
    Ok(out)
}

fn bit_pairing(p: &Nat2) -> Result<Nat> {
    Ok(bitpair(p))
}

pub fn bmset() -> Encoder<Vec<Nat>> {
    Encoder::via(
        "bmset",
        Iso::new(
            |ms: &Vec<Nat>| fmset2nat(bit_pairing, ms),
            |n: &Nat| fnat2mset(bitunpair, n),
        ),
        &nat(),
    )
}

/// Same construction over the Pepis pairing.
pub fn bmset2() -> Encoder<Vec<Nat>> {
    Encoder::via(
        "bmset2",
        Iso::new(
            |ms: &Vec<Nat>| fmset2nat(pepis_pair, ms),
            |n: &Nat| fnat2mset(pepis_unpair, n),
        ),
        &nat(),
    )
}

pub fn hfbm() -> Encoder<HTree> {
    hylo(
        "hfbm",
        Arc::new(|n| fnat2mset(bitunpair, n)),
        Arc::new(|cs| {
            let mut cs = cs;
            cs.sort();
            fmset2nat(bit_pairing, &cs)
        }),
    )
}

pub fn hfbm2() -> Encoder<HTree> {
    hylo(
        "hfbm2",
        Arc::new(|n| fnat2mset(pepis_unpair, n)),
        Arc::new(|cs| {
            let mut cs = cs;
            cs.sort();
            fmset2nat(pepis_pair, &cs)
        }),
    )
}
