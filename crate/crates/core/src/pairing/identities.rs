//! Algebraic identities relating the ordered, unordered and multiset pairings.

use super::{bitpair, bitunpair, mset_pair, unord_pair, Nat2};
use crate::numutil::{from_base, pow2, to_base, Nat};

/// Outcome of checking one identity over a finite range.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub cases: u64,
    /// First failing argument, if any.
    pub counterexample: Option<String>,
}

impl IdentityCheck {
    pub fn holds(&self) -> bool {
        self.counterexample.is_none()
    }
}

fn n(x: u64) -> Nat {
    Nat::from(x)
}

pub fn bitlift(x: &Nat) -> Nat {
    bitpair(&(x.clone(), Nat::from(0u8)))
}

/// Base-2 digits read back in base 4.
pub fn bitlift_alt(x: &Nat) -> Nat {
    from_base(&n(4), &to_base(&n(2), x).expect("base 2")).expect("binary digits")
}

pub fn bitclip(x: &Nat) -> Nat {
    bitunpair(x).0
}

pub fn bitclip_alt(x: &Nat) -> Nat {
    let ds: Vec<Nat> = to_base(&n(4), &(x * 2u32))
        .expect("base 4")
        .into_iter()
        .map(|d| d / 2u32)
        .collect();
    from_base(&n(2), &ds).expect("binary digits")
}

fn halves(p: &Nat2) -> (Nat, Nat) {
    (bitpair(&(p.0.clone(), n(0))), bitpair(&(n(0), p.1.clone())))
}

pub fn bitpair_sum(p: &Nat2) -> Nat {
    let (a, b) = halves(p);
    a + b
}

pub fn bitpair_xor(p: &Nat2) -> Nat {
    let (a, b) = halves(p);
    a ^ b
}

pub fn bitpair_or(p: &Nat2) -> Nat {
    let (a, b) = halves(p);
    a | b
}

/// Multiply the spread operands and add the two halves of the product.
/// Equals `x * y` only while the base-4 product has no carries; the
/// smallest failure is `(15, 15)`.
pub fn pair_product(p: &Nat2) -> Nat {
    let (a, b) = halves(p);
    let (x, y) = bitunpair(&(a * b));
    x + y
}

/// `mset_pair (min x y, x + y)`; agrees with `bitpair` only when `x <= y`.
pub fn bitpair_via_mset(p: &Nat2) -> Nat {
    let lo = (&p.0).min(&p.1).clone();
    mset_pair(&(lo, &p.0 + &p.1))
}

/// `unord_pair [min x y, x + y + 1]`; agrees with `bitpair` only when `x <= y`.
pub fn bitpair_via_unord(p: &Nat2) -> Nat {
    let lo = (&p.0).min(&p.1).clone();
    unord_pair(&[lo, &p.0 + &p.1 + 1u32]).expect("elements differ")
}

fn min_max(a: &Nat, b: &Nat) -> (Nat, Nat) {
    if a <= b {
        (a.clone(), b.clone())
    } else {
        (b.clone(), a.clone())
    }
}

pub fn mset_pair_via_bitpair(p: &Nat2) -> Nat {
    let (lo, hi) = min_max(&p.0, &p.1);
    let d = &hi - &lo;
    bitpair(&(lo, d))
}

pub fn mset_pair_via_unord(p: &Nat2) -> Nat {
    let (lo, hi) = min_max(&p.0, &p.1);
    unord_pair(&[lo, hi + 1u32]).expect("elements differ")
}

/// Requires distinct elements.
pub fn unord_pair_via_bitpair(a: &Nat, b: &Nat) -> Nat {
    let (lo, hi) = min_max(a, b);
    let d = &hi - &lo - 1u32;
    bitpair(&(lo, d))
}

/// Requires distinct elements.
pub fn unord_pair_via_mset(a: &Nat, b: &Nat) -> Nat {
    let (lo, hi) = min_max(a, b);
    mset_pair(&(lo, hi - 1u32))
}

fn check1(name: &'static str, range: u64, f: impl Fn(u64) -> bool) -> IdentityCheck {
    IdentityCheck {
        name,
        cases: range,
        counterexample: (0..range).find(|&x| !f(x)).map(|x| x.to_string()),
    }
}

fn check2(name: &'static str, range: u64, f: impl Fn(u64, u64) -> bool) -> IdentityCheck {
    let bad = (0..range)
        .flat_map(|x| (0..range).map(move |y| (x, y)))
        .find(|&(x, y)| !f(x, y));
    IdentityCheck {
        name,
        cases: range * range,
        counterexample: bad.map(|(x, y)| format!("({x},{y})")),
    }
}

/// Checks every identity: one-argument ones on `0..single`, two-argument
/// ones on `0..pair` squared, and the Fermat-number one for exponents below 12.
pub fn pairing_identities(single: u64, pair: u64) -> Vec<IdentityCheck> {
    let bp = |x: u64, y: u64| bitpair(&(n(x), n(y)));
    vec![
        check1("bitlift = bitlift'", single, |x| bitlift(&n(x)) == bitlift_alt(&n(x))),
        check1("bitclip = bitclip'", single, |x| bitclip(&n(x)) == bitclip_alt(&n(x))),
        check1("bitclip . bitlift = id", single, |x| bitclip(&bitlift(&n(x))) == n(x)),
        check1("bitpair (0,n) = 2 * bitpair (n,0)", single, |x| bp(0, x) == bp(x, 0) * 2u32),
        check1("bitpair (0,n) = 2 * bitlift n", single, |x| bp(0, x) == bitlift(&n(x)) * 2u32),
        check1("bitpair (n,n) = 3 * bitlift n", single, |x| bp(x, x) == bitlift(&n(x)) * 3u32),
        check1("bitpair (2^n,0) = (2^n)^2", single, |e| {
            bitpair(&(pow2(e), n(0))) == pow2(e) * pow2(e)
        }),
        check1("bitpair (2^2^n+1,0) = 2^2^(n+1)+1", single.min(12), |e| {
            bitpair(&(pow2(1 << e) + 1u32, n(0))) == pow2(1 << (e + 1)) + 1u32
        }),
        check2("bitpair' = bitpair = xbitpair = obitpair", pair, |x, y| {
            let p = (n(x), n(y));
            let v = bitpair(&p);
            bitpair_sum(&p) == v && bitpair_xor(&p) == v && bitpair_or(&p) == v
        }),
        check2("bitpair (x,y) = bitlift x + 2 * bitlift y", pair, |x, y| {
            bp(x, y) == bitlift(&n(x)) + bitlift(&n(y)) * 2u32
        }),
        check2("pair_product = *", pair, |x, y| pair_product(&(n(x), n(y))) == n(x * y)),
        check2("bitpair = bitpair'' = bitpair'''", pair, |x, y| {
            let p = (n(x), n(y));
            let v = bitpair(&p);
            bitpair_via_mset(&p) == v && bitpair_via_unord(&p) == v
        }),
        check2("mset_pair = mset_pair' = mset_pair''", pair, |x, y| {
            let p = (n(x), n(y));
            let v = mset_pair(&p);
            mset_pair_via_bitpair(&p) == v && mset_pair_via_unord(&p) == v
        }),
        check2("unord_pair = unord_pair' = unord_pair''", pair, |x, y| {
            if x == y {
                return true;
            }
            let v = unord_pair(&[n(x), n(y)]).expect("distinct");
            unord_pair_via_bitpair(&n(x), &n(y)) == v && unord_pair_via_mset(&n(x), &n(y)) == v
        }),
    ]
}
