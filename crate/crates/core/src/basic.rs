//! The flat encoders: sequences, sets, multisets, naturals, bit strings,
//! integers, text and dyadic rationals.

use crate::error::{Error, Result};
use crate::iso::{Encoder, Iso, Root};
use crate::numutil::{
    bit_positions, factorize, is_strictly_sorted, nth_prime, pow2, prime_index, to_u64, Int, Nat,
};
use num_bigint::Sign;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// Non-negative rationals.
pub type Rational = Ratio<Nat>;

/// Sorted multiset to the sequence of gaps between consecutive elements.
pub fn mset2fun(ms: &[Nat]) -> Vec<Nat> {
    let mut xs = ms.to_vec();
    xs.sort();
    let mut prev = Nat::zero();
    xs.into_iter()
        .map(|x| {
            let d = &x - &prev;
            prev = x;
            d
        })
        .collect()
}

/// Prefix sums.
pub fn fun2mset(ns: &[Nat]) -> Vec<Nat> {
    let mut acc = Nat::zero();
    ns.iter()
        .map(|n| {
            acc += n;
            acc.clone()
        })
        .collect()
}

/// A set of distinct naturals (any order) to the gaps between its sorted elements.
pub fn set2fun(xs: &[Nat]) -> Result<Vec<Nat>> {
    let mut s = xs.to_vec();
    s.sort();
    if !is_strictly_sorted(&s) {
        return Err(Error::law("set", "repeated element"));
    }
    let mut out = Vec::with_capacity(s.len());
    let mut prev: Option<&Nat> = None;
    for x in &s {
        out.push(match prev {
            None => x.clone(),
            Some(p) => x - p - 1u32,
        });
        prev = Some(x);
    }
    Ok(out)
}

pub fn fun2set(ns: &[Nat]) -> Vec<Nat> {
    let mut acc: Option<Nat> = None;
    ns.iter()
        .map(|n| {
            let next = match acc.take() {
                None => n.clone(),
                Some(a) => a + n + 1u32,
            };
            acc = Some(next.clone());
            next
        })
        .collect()
}

/// Positions of the 1 bits.
pub fn nat2set(n: &Nat) -> Vec<Nat> {
    bit_positions(n).map(Nat::from).collect()
}

pub fn set2nat(xs: &[Nat]) -> Result<Nat> {
    let mut r = Nat::zero();
    for x in xs {
        let e = to_u64(x, "exponent")?;
        if r.bit(e) {
            return Err(Error::law("set", "repeated element"));
        }
        r.set_bit(e, true);
    }
    Ok(r)
}

pub fn nat2fun(n: &Nat) -> Vec<Nat> {
    set2fun(&nat2set(n)).expect("bit positions are distinct")
}

pub fn fun2nat(ns: &[Nat]) -> Result<Nat> {
    set2nat(&fun2set(ns))
}

pub fn nat2mset(n: &Nat) -> Vec<Nat> {
    fun2mset(&nat2fun(n))
}

pub fn mset2nat(ms: &[Nat]) -> Result<Nat> {
    fun2nat(&mset2fun(ms))
}

/// Prime indices of the factors of `n + 1`.
pub fn nat2pmset(n: &Nat) -> Result<Vec<Nat>> {
    factorize(&(n + 1u32))?.iter().map(prime_index).collect()
}

pub fn pmset2nat(ms: &[Nat]) -> Result<Nat> {
    let mut p = Nat::one();
    for m in ms {
        p *= nth_prime(m)?;
    }
    Ok(p - 1u32)
}

/// Bits of `n + 1`, least significant first, without the leading 1.
pub fn nat2bits(n: &Nat) -> Vec<Nat> {
    let m = n + 1u32;
    (0..m.bits() - 1).map(|i| Nat::from(m.bit(i) as u8)).collect()
}

pub fn bits2nat(bs: &[Nat]) -> Result<Nat> {
    let mut m = pow2(bs.len() as u64);
    for (i, b) in bs.iter().enumerate() {
        if *b > Nat::one() {
            return Err(Error::law("bits", format!("{b} is not a bit")));
        }
        if b.is_one() {
            m.set_bit(i as u64, true);
        }
    }
    Ok(m - 1u32)
}

/// Even naturals to non-negative integers, odd ones to negative integers.
pub fn nat2z(n: &Nat) -> Int {
    let (q, r) = n.div_rem(&Nat::from(2u8));
    if r.is_zero() {
        Int::from_biguint(Sign::Plus, q)
    } else {
        -Int::from_biguint(Sign::Plus, q) - 1
    }
}

pub fn z2nat(z: &Int) -> Nat {
    if z.is_negative() {
        let v: Int = -z * 2 - 1;
        v.magnitude().clone()
    } else {
        (z * Int::from(2)).magnitude().clone()
    }
}

/// A binary digit of a [`FunBits`] chain.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Bit {
    O,
    I,
}

/// `B (O|I ... E)`: the digits of `n + 1` below its leading 1, outermost
/// constructor first, which is the least significant digit.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FunBits(pub Vec<Bit>);

impl FunBits {
    pub fn from_nat(n: &Nat) -> FunBits {
        let m = n + 1u32;
        FunBits(
            (0..m.bits() - 1)
                .map(|i| if m.bit(i) { Bit::I } else { Bit::O })
                .collect(),
        )
    }

    /// Folds from the innermost `E` outwards: E = 1, O x = 2x, I x = 2x + 1.
    pub fn to_nat(&self) -> Nat {
        let v = self.0.iter().rev().fold(Nat::one(), |acc, b| match b {
            Bit::O => acc << 1,
            Bit::I => (acc << 1) + 1u32,
        });
        v - 1u32
    }

    /// Structural successor.
    pub fn succ(&self) -> FunBits {
        let mut ds = self.0.clone();
        for d in ds.iter_mut() {
            match d {
                Bit::O => {
                    *d = Bit::I;
                    return FunBits(ds);
                }
                Bit::I => *d = Bit::O,
            }
        }
        ds.push(Bit::O);
        FunBits(ds)
    }
}

impl fmt::Display for FunBits {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let Some((last, init)) = self.0.split_last() else {
            return f.write_str("B E");
        };
        f.write_str("B (")?;
        for d in init {
            write!(f, "{:?} (", d)?;
        }
        write!(f, "{:?} E", last)?;
        for _ in 0..=init.len() {
            f.write_str(")")?;
        }
        Ok(())
    }
}

pub fn string2fun(s: &str) -> Vec<Nat> {
    s.chars().map(|c| Nat::from(c as u32)).collect()
}

pub fn fun2string(ns: &[Nat]) -> Result<String> {
    ns.iter()
        .map(|n| {
            u32::try_from(n)
                .ok()
                .and_then(char::from_u32)
                .ok_or_else(|| Error::law("string", format!("{n} is not a Unicode scalar value")))
        })
        .collect()
}

/// `{e0, e1, ...}` to the sum of `2^-(e+1)`.
pub fn set2dyadic(xs: &[Nat]) -> Result<Rational> {
    if xs.is_empty() {
        return Ok(Rational::zero());
    }
    let es = xs.iter().map(|x| to_u64(x, "exponent")).collect::<Result<Vec<_>>>()?;
    let top = *es.iter().max().unwrap();
    let mut num = Nat::zero();
    for e in es {
        if num.bit(top - e) {
            return Err(Error::law("dyadic", "repeated element"));
        }
        num.set_bit(top - e, true);
    }
    Ok(Rational::new(num, pow2(top + 1)))
}

pub fn dyadic2set(d: &Rational) -> Result<Vec<Nat>> {
    if !good_dyadic(d) {
        return Err(Error::NotDyadic(d.to_string()));
    }
    if d.is_zero() {
        return Ok(vec![]);
    }
    // d = num / 2^k with num odd: bit j of num sits at exponent k - 1 - j
    let k = d.denom().bits() - 1;
    let mut es: Vec<Nat> = bit_positions(d.numer()).map(|j| Nat::from(k - 1 - j)).collect();
    es.reverse();
    Ok(es)
}

/// Zero, or a fraction in [0,1) whose reduced denominator is a power of 2.
pub fn good_dyadic(d: &Rational) -> bool {
    if d.is_zero() {
        return true;
    }
    let q = d.denom();
    (q & (q - 1u32)).is_zero() && d.numer() < q
}

pub fn fun() -> Encoder<Vec<Nat>> {
    Encoder::new("fun", Iso::itself())
}

pub fn set() -> Encoder<Vec<Nat>> {
    Encoder::via("set", Iso::new(|xs: &Vec<Nat>| set2fun(xs), |ns: &Root| Ok(fun2set(ns))), &fun())
}

pub fn mset() -> Encoder<Vec<Nat>> {
    Encoder::via(
        "mset",
        Iso::new(|ms: &Vec<Nat>| Ok(mset2fun(ms)), |ns: &Root| Ok(fun2mset(ns))),
        &fun(),
    )
}

/// Naturals as the sets of their bit positions.
pub fn nat_set() -> Iso<Nat, Vec<Nat>> {
    Iso::new(|n: &Nat| Ok(nat2set(n)), |xs: &Vec<Nat>| set2nat(xs))
}

pub fn nat() -> Encoder<Nat> {
    Encoder::via("nat", nat_set(), &set())
}

pub fn pmset() -> Encoder<Vec<Nat>> {
    Encoder::via(
        "pmset",
        Iso::new(|ms: &Vec<Nat>| pmset2nat(ms), |n: &Nat| nat2pmset(n)),
        &nat(),
    )
}

pub fn bits() -> Encoder<Vec<Nat>> {
    Encoder::via(
        "bits",
        Iso::new(|bs: &Vec<Nat>| bits2nat(bs), |n: &Nat| Ok(nat2bits(n))),
        &nat(),
    )
}

pub fn funbits() -> Encoder<FunBits> {
    Encoder::via(
        "funbits",
        Iso::new(|b: &FunBits| Ok(b.to_nat()), |n: &Nat| Ok(FunBits::from_nat(n))),
        &nat(),
    )
}

pub fn z() -> Encoder<Int> {
    Encoder::via("z", Iso::new(|z: &Int| Ok(z2nat(z)), |n: &Nat| Ok(nat2z(n))), &nat())
}

pub fn string() -> Encoder<String> {
    Encoder::via(
        "string",
        Iso::new(|s: &String| Ok(string2fun(s)), |ns: &Vec<Nat>| fun2string(ns)),
        &fun(),
    )
}

pub fn dyadic() -> Encoder<Rational> {
    Encoder::via(
        "dyadic",
        Iso::new(|d: &Rational| dyadic2set(d), |xs: &Vec<Nat>| set2dyadic(xs)),
        &set(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::iso::{borrow, borrow_from, convert, fit, lend, retrofit, with};
    use crate::numutil::{big, nats};
    use proptest::prelude::*;

    fn n(v: u64) -> Nat {
        big(v)
    }

    #[test]
    fn nat_to_other_shapes() {
        assert_eq!(convert(&set(), &nat(), &n(2008)).unwrap(), nats(&[3, 4, 6, 7, 8, 9, 10]));
        assert_eq!(convert(&fun(), &nat(), &n(2008)).unwrap(), nats(&[3, 0, 1, 0, 0, 0, 0]));
        assert_eq!(nat().from(&n(2008)).unwrap(), nats(&[3, 0, 1, 0, 0, 0, 0]));
        assert_eq!(convert(&mset(), &nat(), &n(2008)).unwrap(), nats(&[3, 3, 4, 4, 4, 4, 4]));
        assert_eq!(convert(&pmset(), &nat(), &n(2008)).unwrap(), nats(&[3, 3, 12]));
        assert_eq!(convert(&nat(), &pmset(), &nats(&[3, 3, 12])).unwrap(), n(2008));
        assert_eq!(convert(&nat(), &set(), &nats(&[1, 3, 5])).unwrap(), n(42));
    }

    #[test]
    fn small_values() {
        assert_eq!(nat().from(&n(0)).unwrap(), Vec::<Nat>::new());
        assert_eq!(nat2set(&n(1)), nats(&[0]));
        assert_eq!(nat2bits(&n(0)), Vec::<Nat>::new());
        assert_eq!(bits2nat(&[]).unwrap(), n(0));
        assert_eq!(nat2pmset(&n(0)).unwrap(), Vec::<Nat>::new());
        assert_eq!(pmset2nat(&[]).unwrap(), n(0));
    }

    #[test]
    fn bits_examples() {
        assert_eq!(convert(&bits(), &nat(), &n(42)).unwrap(), nats(&[1, 1, 0, 1, 0]));
        assert_eq!(convert(&nat(), &bits(), &nats(&[1, 1, 0, 1, 0])).unwrap(), n(42));
        assert_eq!(convert(&bits(), &nat(), &n(2008)).unwrap(), nats(&[1, 0, 0, 1, 1, 0, 1, 1, 1, 1]));
        assert!(matches!(bits2nat(&nats(&[2])), Err(Error::LawViolation { .. })));
    }

    #[test]
    fn transported_arithmetic() {
        let add = |a: Nat, b: Nat| a + b;
        let r = borrow_from(&nat(), add, &set(), &nats(&[1, 2, 3]), &nats(&[4, 5, 6, 7])).unwrap();
        assert_eq!(convert(&nat(), &set(), &r).unwrap(), n(14 + 240));
        let rev = |mut v: Vec<Nat>| {
            v.reverse();
            v
        };
        assert_eq!(lend(nat().iso(), rev, &n(2008)).unwrap(), n(1135));
        assert_eq!(lend(&nat_set(), rev, &n(2008)).unwrap(), n(2008));
        assert_eq!(borrow(&nat_set(), |x| x + 1u32, &nats(&[1, 2, 3])).unwrap(), nats(&[0, 1, 2, 3]));
        assert_eq!(fit(|v: Vec<Nat>| v.len(), nat().iso(), &n(42)).unwrap(), 3);
        assert_eq!(retrofit(|x: Nat| x + 1u32, &nat_set(), &nats(&[1, 3, 5])).unwrap(), n(43));
        let succ_bits = lend(&with(&bits(), &nat()), |x: Nat| x + 1u32, &nats(&[1, 1, 0, 1, 0])).unwrap();
        assert_eq!(succ_bits, nat2bits(&n(43)));
        let fb = FunBits::from_nat(&n(2008));
        let next = lend(&with(&funbits(), &nat()), |x: Nat| x + 1u32, &fb).unwrap();
        assert_eq!(next, fb.succ());
        assert_eq!(next.to_string(), "B (O (I (O (I (I (O (I (I (I (I E))))))))))");
    }

    #[test]
    fn integers() {
        let zs: Vec<Int> = (0..7).map(|i| nat2z(&n(i))).collect();
        assert_eq!(zs, [0, -1, 1, -2, 2, -3, 3].map(Int::from).to_vec());
        assert_eq!(z2nat(&Int::from(-42)), n(83));
        assert_eq!(convert(&z(), &nat(), &n(83)).unwrap(), Int::from(-42));
    }

    #[test]
    fn funbits_examples() {
        use Bit::*;
        let fb = convert(&funbits(), &nat(), &n(2008)).unwrap();
        assert_eq!(fb, FunBits(vec![I, O, O, I, I, O, I, I, I, I]));
        assert_eq!(fb.to_string(), "B (I (O (O (I (I (O (I (I (I (I E))))))))))");
        assert_eq!(FunBits::from_nat(&n(0)).to_string(), "B E");
        for k in 0..300u64 {
            assert_eq!(FunBits::from_nat(&n(k)).succ(), FunBits::from_nat(&n(k + 1)));
        }
    }

    #[test]
    fn text() {
        let s = convert(&string(), &nat(), &n(2008)).unwrap();
        assert_eq!(s, "\u{3}\0\u{1}\0\0\0\0");
        assert_eq!(convert(&nat(), &string(), &s).unwrap(), n(2008));
        let hello = "hello".to_string();
        assert_eq!(
            string().from(&hello).unwrap(),
            nats(&[104, 101, 108, 108, 111])
        );
        assert!(matches!(fun2string(&nats(&[0xD800])), Err(Error::LawViolation { .. })));
    }

    #[test]
    fn dyadic_examples() {
        let d = convert(&dyadic(), &nat(), &n(42)).unwrap();
        assert_eq!(d, Rational::new(n(21), n(64)));
        assert_eq!(convert(&nat(), &dyadic(), &d).unwrap(), n(42));
        assert_eq!(set2dyadic(&[]).unwrap(), Rational::zero());
        assert!(matches!(
            dyadic2set(&Rational::new(n(1), n(3))),
            Err(Error::NotDyadic(_))
        ));
        assert!(dyadic2set(&Rational::one()).is_err());
    }

    #[test]
    fn set_rejects_repeats() {
        assert!(matches!(set().from(&nats(&[1, 1])), Err(Error::LawViolation { .. })));
        // unordered distinct input is accepted
        assert_eq!(set().from(&nats(&[5, 3, 1])).unwrap(), nats(&[1, 1, 1]));
    }

    fn arb_nat() -> impl Strategy<Value = Nat> {
        any::<u128>().prop_map(Nat::from)
    }

    fn arb_seq() -> impl Strategy<Value = Vec<Nat>> {
        prop::collection::vec(0u64..200, 0..10).prop_map(|v| nats(&v))
    }

    proptest! {
        #[test]
        fn nat_roundtrips(x in arb_nat()) {
            for e in [nat()] {
                prop_assert_eq!(e.to(&e.from(&x).unwrap()).unwrap(), x.clone());
            }
            prop_assert_eq!(FunBits::from_nat(&x).to_nat(), x.clone());
            prop_assert_eq!(z2nat(&nat2z(&x)), x.clone());
            prop_assert_eq!(bits2nat(&nat2bits(&x)).unwrap(), x.clone());
            let d = dyadic().to(&nat().from(&x).unwrap()).unwrap();
            prop_assert!(good_dyadic(&d));
            prop_assert_eq!(nat().to(&dyadic().from(&d).unwrap()).unwrap(), x);
        }

        #[test]
        fn root_roundtrips(ns in arb_seq()) {
            for e in [fun(), set(), mset(), bits()] {
                let v = e.to(&ns).unwrap();
                prop_assert_eq!(e.from(&v).unwrap(), ns.clone());
            }
            let s = string().to(&ns).unwrap();
            prop_assert_eq!(string().from(&s).unwrap(), ns.clone());
            let x = nat().to(&ns).unwrap();
            prop_assert_eq!(nat().from(&x).unwrap(), ns);
        }

        #[test]
        fn pmset_roundtrip(x in 0u64..200_000) {
            let ms = nat2pmset(&n(x)).unwrap();
            prop_assert!(crate::numutil::is_sorted(&ms));
            prop_assert_eq!(pmset2nat(&ms).unwrap(), n(x));
        }

        #[test]
        fn set_of_bits_matches_shifts(x in any::<u64>()) {
            let expected: Vec<Nat> = (0..64).filter(|i| (x >> i) & 1 == 1).map(n).collect();
            prop_assert_eq!(nat2set(&n(x)), expected);
        }
    }
}
