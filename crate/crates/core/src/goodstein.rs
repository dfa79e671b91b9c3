//! Hereditary base-k notation and Goodstein sequences.

use crate::basic::nat;
use crate::error::{Error, Result};
use crate::iso::{Encoder, Iso};
use crate::numutil::{to_base, Nat};
use num_traits::{ToPrimitive, Zero};
use std::fmt;

/// `HB c es`: the term `c * k^e` where `e` is itself written as the forest `es`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HbTree {
    pub coeff: Nat,
    pub exps: Vec<HbTree>,
}

/// A sum of terms with strictly increasing exponents.
pub type HbForest = Vec<HbTree>;

impl fmt::Display for HbTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HB {} ", self.coeff)?;
        write_forest(f, &self.exps)
    }
}

pub(crate) fn write_forest(f: &mut fmt::Formatter<'_>, ts: &[HbTree]) -> fmt::Result {
    f.write_str("[")?;
    for (i, t) in ts.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{t}")?;
    }
    f.write_str("]")
}

fn check_base(k: &Nat) -> Result<()> {
    if *k < Nat::from(2u8) {
        Err(Error::BaseTooSmall(k.to_string()))
    } else {
        Ok(())
    }
}

/// Non-zero `(digit, exponent)` pairs of `n` in base `k`, ascending exponents.
pub fn nat2kpoly(k: &Nat, n: &Nat) -> Result<Vec<(Nat, Nat)>> {
    check_base(k)?;
    if n.is_zero() {
        return Ok(vec![]);
    }
    Ok(to_base(k, n)?
        .into_iter()
        .enumerate()
        .filter(|(_, d)| !d.is_zero())
        .map(|(e, d)| (d, Nat::from(e)))
        .collect())
}

pub fn kpoly2nat(k: &Nat, ps: &[(Nat, Nat)]) -> Result<Nat> {
    check_base(k)?;
    ps.iter().try_fold(Nat::zero(), |acc, (d, e)| Ok(acc + d * pow(k, e)?))
}

fn pow(k: &Nat, e: &Nat) -> Result<Nat> {
    let e32 = e
        .to_u32()
        .filter(|&e| (e as u64).saturating_mul(k.bits()) < 1 << 32)
        .ok_or_else(|| Error::TooLarge(format!("{k}^{e}")))?;
    Ok(num_traits::pow(k.clone(), e32 as usize))
}

pub fn nat2hb(k: &Nat, n: &Nat) -> Result<HbForest> {
    nat2kpoly(k, n)?
        .into_iter()
        .map(|(d, e)| {
            Ok(HbTree {
                coeff: d,
                exps: nat2hb(k, &e)?,
            })
        })
        .collect()
}

pub fn hb2nat(k: &Nat, ts: &[HbTree]) -> Result<Nat> {
    check_base(k)?;
    let mut acc = Nat::zero();
    let mut prev: Option<Nat> = None;
    for t in ts {
        if t.coeff.is_zero() || t.coeff >= *k {
            return Err(Error::CoeffOutOfRange {
                coeff: t.coeff.to_string(),
                base: k.to_string(),
            });
        }
        let e = hb2nat(k, &t.exps)?;
        if prev.as_ref().is_some_and(|p| *p >= e) {
            return Err(Error::law("hb", "exponents must increase strictly"));
        }
        acc += &t.coeff * pow(k, &e)?;
        prev = Some(e);
    }
    Ok(acc)
}

/// Hereditary base-`k` forests, registered as `hb:<k>`.
pub fn hb(k: u64) -> Result<Encoder<HbForest>> {
    let base = Nat::from(k);
    check_base(&base)?;
    let b2 = base.clone();
    Ok(Encoder::via(
        format!("hb:{k}"),
        Iso::new(move |ts: &HbForest| hb2nat(&base, ts), move |n: &Nat| nat2hb(&b2, n)),
        &nat(),
    ))
}

/// Rewrite `n` in hereditary base `k`, bump the base to `k+1`, subtract one.
pub fn goodstein_step(k: &Nat, n: &Nat) -> Result<Nat> {
    let v = hb2nat(&(k + 1u32), &nat2hb(k, n)?)?;
    if v.is_zero() {
        return Err(Error::IndexOutOfRange("goodstein step of 0".into()));
    }
    Ok(v - 1u32)
}

/// At most `limit` terms of the Goodstein sequence starting at `m`, base 2.
pub fn goodstein(m: &Nat, limit: usize) -> Result<Vec<Nat>> {
    let mut out = Vec::new();
    let mut k = Nat::from(2u8);
    let mut n = m.clone();
    while !n.is_zero() && out.len() < limit {
        out.push(n.clone());
        n = goodstein_step(&k, &n)?;
        k += 1u32;
    }
    Ok(out)
}
