//! Pairing functions and the encodings built on them: ordered, unordered,
//! multiset and signed pairs, Gauss integers, cons-lists, multisets, tuples.

mod bmset;
mod clist;
mod identities;
mod tuple;

pub use bmset::{bmset, bmset2, fmset2nat, fnat2mset, hfbm, hfbm2};
pub use clist::{clist, cons2nat, nat2cons, CList};
pub use identities::{pairing_identities, IdentityCheck};
pub use tuple::{from_tuple, ftuple2nat, fun2, hff2, nat2ftuple, to_tuple};

use crate::basic::{fun2mset, fun2nat, mset2fun, nat, nat2fun, nat2z, set2fun, fun2set, z2nat};
use crate::error::{Error, Result};
use crate::iso::{Encoder, Iso};
use crate::numutil::{Int, Nat};

pub type Nat2 = (Nat, Nat);
pub type Z2 = (Int, Int);

/// `2^x * (2y + 1) - 1`.
pub fn pepis_pair(p: &Nat2) -> Result<Nat> {
    let (x, y) = p;
    let shift = usize::try_from(x)
        .ok()
        .filter(|&s| s <= 1 << 32)
        .ok_or_else(|| Error::TooLarge(format!("2^{x}")))?;
    Ok((((y << 1u32) + 1u32) << shift) - 1u32)
}

/// Trailing zeros of `n + 1`, then the odd part halved.
pub fn pepis_unpair(n: &Nat) -> Nat2 {
    let m = n + 1u32;
    let x = m.trailing_zeros().expect("n + 1 is positive");
    (Nat::from(x), (m >> x) >> 1u32)
}

/// The same pairing read off the gap sequence of `y`.
pub fn pepis_pair_alt(p: &Nat2) -> Result<Nat> {
    let mut ns = vec![p.0.clone()];
    ns.extend(nat2fun(&p.1));
    Ok(fun2nat(&ns)? - 1u32)
}

pub fn pepis_unpair_alt(n: &Nat) -> Result<Nat2> {
    let mut ns = nat2fun(&(n + 1u32)).into_iter();
    let x = ns.next().expect("n + 1 has a bit set");
    Ok((x, fun2nat(&ns.collect::<Vec<_>>())?))
}

pub fn rpepis_pair(p: &Nat2) -> Result<Nat> {
    pepis_pair(&(p.1.clone(), p.0.clone()))
}

pub fn rpepis_unpair(n: &Nat) -> Nat2 {
    let (x, y) = pepis_unpair(n);
    (y, x)
}

// the bits of a 32-bit word moved to the even positions of a 64-bit word
fn spread(v: u64) -> u64 {
    let mut x = v & 0xFFFF_FFFF;
    x = (x | (x << 16)) & 0x0000_FFFF_0000_FFFF;
    x = (x | (x << 8)) & 0x00FF_00FF_00FF_00FF;
    x = (x | (x << 4)) & 0x0F0F_0F0F_0F0F_0F0F;
    x = (x | (x << 2)) & 0x3333_3333_3333_3333;
    (x | (x << 1)) & 0x5555_5555_5555_5555
}

// inverse of `spread` on the even bits
fn compact(v: u64) -> u64 {
    let mut x = v & 0x5555_5555_5555_5555;
    x = (x | (x >> 1)) & 0x3333_3333_3333_3333;
    x = (x | (x >> 2)) & 0x0F0F_0F0F_0F0F_0F0F;
    x = (x | (x >> 4)) & 0x00FF_00FF_00FF_00FF;
    x = (x | (x >> 8)) & 0x0000_FFFF_0000_FFFF;
    (x | (x >> 16)) & 0xFFFF_FFFF
}

fn spread_words(n: &Nat) -> Vec<u64> {
    n.iter_u64_digits()
        .flat_map(|w| [spread(w), spread(w >> 32)])
        .collect()
}

fn from_words(ws: Vec<u64>) -> Nat {
    let bytes: Vec<u32> = ws.iter().flat_map(|&w| [w as u32, (w >> 32) as u32]).collect();
    Nat::from_slice(&bytes)
}

/// Interleaves bits: `x` on even positions, `y` on odd ones.
pub fn bitpair(p: &Nat2) -> Nat {
    let xs = spread_words(&p.0);
    let ys = spread_words(&p.1);
    let len = xs.len().max(ys.len());
    let ws = (0..len)
        .map(|i| xs.get(i).copied().unwrap_or(0) | ys.get(i).copied().unwrap_or(0) << 1)
        .collect();
    from_words(ws)
}

pub fn bitunpair(n: &Nat) -> Nat2 {
    let ws: Vec<u64> = n.iter_u64_digits().collect();
    let half = |shift: u32| {
        let out = ws
            .chunks(2)
            .map(|c| {
                let lo = compact(c[0] >> shift);
                let hi = c.get(1).map_or(0, |w| compact(w >> shift));
                lo | hi << 32
            })
            .collect();
        from_words(out)
    };
    (half(0), half(1))
}

/// A two-element set to its gap pair; the elements may come in any order.
pub fn unord_pair2pair(s: &[Nat]) -> Result<Nat2> {
    if s.len() != 2 || s[0] == s[1] {
        return Err(Error::NotTwoDistinct);
    }
    let fs = set2fun(s)?;
    Ok((fs[0].clone(), fs[1].clone()))
}

pub fn pair2unord_pair(p: &Nat2) -> Vec<Nat> {
    fun2set(&[p.0.clone(), p.1.clone()])
}

pub fn unord_pair(s: &[Nat]) -> Result<Nat> {
    Ok(bitpair(&unord_pair2pair(s)?))
}

pub fn unord_unpair(n: &Nat) -> Vec<Nat> {
    pair2unord_pair(&bitunpair(n))
}

/// `(a, b)` in either order to `(min, max - min)`.
pub fn mset_unpair2pair(p: &Nat2) -> Nat2 {
    let fs = mset2fun(&[p.0.clone(), p.1.clone()]);
    (fs[0].clone(), fs[1].clone())
}

pub fn pair2mset_pair(p: &Nat2) -> Nat2 {
    let ms = fun2mset(&[p.0.clone(), p.1.clone()]);
    (ms[0].clone(), ms[1].clone())
}

pub fn mset_pair(p: &Nat2) -> Nat {
    bitpair(&mset_unpair2pair(p))
}

/// Always returns a non-decreasing pair.
pub fn mset_unpair(n: &Nat) -> Nat2 {
    pair2mset_pair(&bitunpair(n))
}

fn as_nat(z: &Int, encoder: &str) -> Result<Nat> {
    z.to_biguint()
        .ok_or_else(|| Error::law(encoder, format!("pair packs to the negative integer {z}")))
}

pub fn zpair(p: &Z2) -> Int {
    nat2z(&bitpair(&(z2nat(&p.0), z2nat(&p.1))))
}

pub fn zunpair(z: &Int) -> Z2 {
    let (n, m) = bitunpair(&z2nat(z));
    (nat2z(&n), nat2z(&m))
}

pub fn mzpair(p: &Z2) -> Int {
    nat2z(&mset_pair(&(z2nat(&p.0), z2nat(&p.1))))
}

pub fn mzunpair(z: &Int) -> Z2 {
    let (n, m) = mset_unpair(&z2nat(z));
    (nat2z(&n), nat2z(&m))
}

pub fn nat2() -> Encoder<Nat2> {
    Encoder::via(
        "nat2",
        Iso::new(|p: &Nat2| Ok(bitpair(p)), |n: &Nat| Ok(bitunpair(n))),
        &nat(),
    )
}

pub fn pnat2() -> Encoder<Nat2> {
    Encoder::via(
        "pnat2",
        Iso::new(pepis_pair, |n: &Nat| Ok(pepis_unpair(n))),
        &nat(),
    )
}

pub fn rpnat2() -> Encoder<Nat2> {
    Encoder::via(
        "rpnat2",
        Iso::new(rpepis_pair, |n: &Nat| Ok(rpepis_unpair(n))),
        &nat(),
    )
}

/// Two-element sets through ordered pairs.
pub fn set2() -> Encoder<Vec<Nat>> {
    Encoder::via(
        "set2",
        Iso::new(|s: &Vec<Nat>| unord_pair2pair(s), |p: &Nat2| Ok(pair2unord_pair(p))),
        &nat2(),
    )
}

/// Two-element sets straight to naturals.
pub fn set2b() -> Encoder<Vec<Nat>> {
    Encoder::via(
        "set2b",
        Iso::new(|s: &Vec<Nat>| unord_pair(s), |n: &Nat| Ok(unord_unpair(n))),
        &nat(),
    )
}

pub fn mset2() -> Encoder<Nat2> {
    Encoder::via(
        "mset2",
        Iso::new(|p: &Nat2| Ok(mset_unpair2pair(p)), |p: &Nat2| Ok(pair2mset_pair(p))),
        &nat2(),
    )
}

/// Signed pairs. A natural `n` decodes to `zunpair(n)`, so only pairs whose
/// `zpair` is non-negative can be encoded.
pub fn z2() -> Encoder<Z2> {
    Encoder::via(
        "z2",
        Iso::new(
            |p: &Z2| as_nat(&zpair(p), "z2"),
            |n: &Nat| Ok(zunpair(&Int::from(n.clone()))),
        ),
        &nat(),
    )
}

/// Signed multiset pairs, with the same range restriction as [`z2`].
pub fn mz2() -> Encoder<Z2> {
    Encoder::via(
        "mz2",
        Iso::new(
            |p: &Z2| as_nat(&mzpair(p), "mz2"),
            |n: &Nat| Ok(mzunpair(&Int::from(n.clone()))),
        ),
        &nat(),
    )
}

/// Complex sum of two packed Gauss integers.
pub fn gauss_sum(ab: &Int, cd: &Int) -> Int {
    let ((a, b), (c, d)) = (mzunpair(ab), mzunpair(cd));
    mzpair(&(a + c, b + d))
}

pub fn gauss_dif(ab: &Int, cd: &Int) -> Int {
    let ((a, b), (c, d)) = (mzunpair(ab), mzunpair(cd));
    mzpair(&(a - c, b - d))
}

pub fn gauss_prod(ab: &Int, cd: &Int) -> Int {
    let ((a, b), (c, d)) = (mzunpair(ab), mzunpair(cd));
    mzpair(&(&a * &c - &b * &d, &b * &c + &a * &d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::basic::z;
    use crate::iso::convert;
    use crate::numutil::{big, nats};
    use proptest::prelude::*;

    fn p(a: u64, b: u64) -> Nat2 {
        (big(a), big(b))
    }

    fn zp(a: i64, b: i64) -> Z2 {
        (Int::from(a), Int::from(b))
    }

    // bit by bit interleaving
    fn bitpair_oracle(x: u64, y: u64) -> u128 {
        (0..64).fold(0u128, |acc, i| {
            acc | (((x >> i) & 1) as u128) << (2 * i) | (((y >> i) & 1) as u128) << (2 * i + 1)
        })
    }

    #[test]
    fn pepis_examples() {
        assert_eq!(pepis_pair(&p(1, 10)).unwrap(), big(41));
        assert_eq!(pepis_pair(&p(10, 1)).unwrap(), big(3071));
        let table: Vec<Nat> = (0..4)
            .flat_map(|i| (0..4).map(move |j| pepis_pair(&p(i, j)).unwrap()))
            .collect();
        assert_eq!(table, nats(&[0, 2, 4, 6, 1, 5, 9, 13, 3, 11, 19, 27, 7, 23, 39, 55]));
        assert_eq!(pepis_unpair(&big(0)), p(0, 0));
        assert_eq!(rpepis_pair(&p(10, 1)).unwrap(), big(41));
    }

    #[test]
    fn bitpair_examples() {
        assert_eq!(bitunpair(&big(2008)), p(60, 26));
        assert_eq!(bitpair(&p(60, 26)), big(2008));
        assert_eq!(bitpair(&p(0, 0)), big(0));
        assert_eq!(convert(&nat2(), &nat(), &big(2008)).unwrap(), p(60, 26));
    }

    #[test]
    fn unordered_pairs() {
        assert_eq!(convert(&set2(), &nat(), &big(2008)).unwrap(), nats(&[60, 87]));
        assert_eq!(convert(&set2b(), &nat(), &big(2008)).unwrap(), nats(&[60, 87]));
        assert_eq!(convert(&nat(), &set2(), &nats(&[60, 87])).unwrap(), big(2008));
        assert_eq!(convert(&nat(), &set2b(), &nats(&[87, 60])).unwrap(), big(2008));
        let n = convert(&nat(), &set2(), &nats(&[0, 1])).unwrap();
        assert_eq!(convert(&set2(), &nat(), &n).unwrap(), nats(&[0, 1]));
        assert_eq!(unord_pair(&nats(&[3, 3])), Err(Error::NotTwoDistinct));
        assert_eq!(unord_pair(&nats(&[3])), Err(Error::NotTwoDistinct));
    }

    #[test]
    fn multiset_pairs() {
        assert_eq!(convert(&mset2(), &nat(), &big(2008)).unwrap(), p(60, 86));
        assert_eq!(convert(&nat(), &mset2(), &p(86, 60)).unwrap(), big(2008));
        assert_eq!(mset_pair(&p(0, 0)), big(0));
        for n in 1..=4u32 {
            let f = (Nat::from(1u8) << (1usize << n)) + 1u32;
            let g = (Nat::from(1u8) << (1usize << (n + 1))) + 1u32;
            assert_eq!(mset_pair(&(f.clone(), f)), g);
        }
    }

    #[test]
    fn signed_pairs() {
        let got: Vec<Z2> = (-5..=5).map(|z| zunpair(&Int::from(z))).collect();
        let expected = vec![
            zp(-1, 1),
            zp(-2, -1),
            zp(-2, 0),
            zp(-1, -1),
            zp(-1, 0),
            zp(0, 0),
            zp(0, -1),
            zp(1, 0),
            zp(1, -1),
            zp(0, 1),
            zp(0, -2),
        ];
        assert_eq!(got, expected);
        let back: Vec<Int> = expected.iter().map(zpair).collect();
        assert_eq!(back, (-5..=5).map(Int::from).collect::<Vec<_>>());
        assert_eq!(convert(&z2(), &z(), &Int::from(-2008)).unwrap(), zp(63, -26));
        assert_eq!(convert(&z(), &z2(), &zp(63, -26)).unwrap(), Int::from(-2008));
        assert_eq!(convert(&mz2(), &z(), &Int::from(-42)).unwrap(), zp(1, -8));
        assert_eq!(convert(&z(), &mz2(), &zp(1, -8)).unwrap(), Int::from(-42));
        // (-1, 0) packs to -1, outside the range of the encoder
        assert!(matches!(z2().from(&zp(-1, 0)), Err(Error::LawViolation { .. })));
    }

    #[test]
    fn gauss_operations() {
        let zero = mzpair(&zp(0, 0));
        assert_eq!(zero, Int::from(0));
        // (1, 0) is stored in canonical order and comes back as (0, 1), i.e. i
        let one = mzpair(&zp(1, 0));
        assert_eq!(mzunpair(&one), zp(0, 1));
        for x in -64..64 {
            let x = Int::from(x);
            assert_eq!(gauss_sum(&x, &zero), x);
            assert_eq!(gauss_dif(&x, &zero), x);
            let (a, b) = mzunpair(&x);
            assert_eq!(gauss_prod(&x, &one), mzpair(&(-b, a)));
        }
        for x in -16..16 {
            for y in -16..16 {
                let (x, y) = (Int::from(x), Int::from(y));
                assert_eq!(gauss_prod(&x, &y), gauss_prod(&y, &x));
                assert_eq!(gauss_sum(&x, &y), gauss_sum(&y, &x));
            }
        }
    }

    #[test]
    fn exhaustive_small_inverses() {
        for n in 0..=4096u64 {
            let n = big(n);
            assert_eq!(bitpair(&bitunpair(&n)), n);
            assert_eq!(pepis_pair(&pepis_unpair(&n)).unwrap(), n);
            assert_eq!(rpepis_pair(&rpepis_unpair(&n)).unwrap(), n);
            assert_eq!(mset_pair(&mset_unpair(&n)), n);
            assert_eq!(unord_pair(&unord_unpair(&n)).unwrap(), n);
            assert_eq!(pepis_unpair_alt(&n).unwrap(), pepis_unpair(&n));
        }
        for x in 0..64 {
            for y in 0..64 {
                let q = p(x, y);
                assert_eq!(bitunpair(&bitpair(&q)), q);
                assert_eq!(pepis_unpair(&pepis_pair(&q).unwrap()), q);
                assert_eq!(pepis_pair_alt(&q).unwrap(), pepis_pair(&q).unwrap());
                let m = p(x.min(y), x.max(y));
                assert_eq!(mset_unpair(&mset_pair(&m)), m);
            }
        }
    }

    #[test]
    fn unpairing_decreases() {
        for n in 2..5000u64 {
            let n = big(n);
            for (a, b) in [bitunpair(&n), pepis_unpair(&n), mset_unpair(&n)] {
                assert!(a < n && b < n);
            }
        }
    }

    #[test]
    fn pepis_rejects_huge_exponent() {
        assert!(matches!(
            pepis_pair(&(Nat::from(u64::MAX), big(0))),
            Err(Error::TooLarge(_))
        ));
    }

    proptest! {
        #[test]
        fn bitpair_matches_oracle(x in any::<u64>(), y in any::<u64>()) {
            prop_assert_eq!(bitpair(&p(x, y)), Nat::from(bitpair_oracle(x, y)));
            prop_assert_eq!(bitunpair(&Nat::from(bitpair_oracle(x, y))), p(x, y));
        }

        #[test]
        fn big_pairs_roundtrip(x in any::<u128>(), y in any::<u128>(), s in 0u32..300) {
            let q = (Nat::from(x) << s, Nat::from(y));
            prop_assert_eq!(bitunpair(&bitpair(&q)), q.clone());
            prop_assert_eq!(pepis_unpair(&pepis_pair(&(big(s as u64), q.1.clone())).unwrap()), (big(s as u64), q.1));
        }

        #[test]
        fn z2_roundtrip(n in any::<u64>()) {
            let q = z2().to(&nat().from(&big(n)).unwrap()).unwrap();
            prop_assert_eq!(convert(&nat(), &z2(), &q).unwrap(), big(n));
            let q = convert(&mz2(), &nat(), &big(n)).unwrap();
            prop_assert_eq!(convert(&nat(), &mz2(), &q).unwrap(), big(n));
        }
    }
}
