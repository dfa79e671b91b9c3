//! Parenthesis languages, Elias omega codes, self-delimited sequences and
//! the sparseness and information-density measures built on them.

use crate::basic::{bits2nat, fun2nat, Rational, nat, nat2bits, nat2fun, nat2mset, nat2pmset, nat2set};
use crate::error::{Error, Result};
use crate::hylo::{hff, hfm, hfpm, hfs, HTree};
use crate::iso::{convert, Encoder, Iso};
use crate::numutil::{from_lbits, to_lbits, Nat};
use crate::pairing::{hfbm, hfbm2, hff2};
use crate::perm::{hfp, nat2perm};
use num_traits::{One, Zero};

/// Writes `l`, the children, then `r` for every node.
pub fn collect_pars<T: Clone>(l: T, r: T, t: &HTree) -> Vec<T> {
    enum Tok<'a> {
        Open(&'a HTree),
        Close,
    }
    let mut out = Vec::new();
    let mut stack = vec![Tok::Open(t)];
    while let Some(tok) = stack.pop() {
        match tok {
            Tok::Close => out.push(r.clone()),
            Tok::Open(n) => {
                out.push(l.clone());
                stack.push(Tok::Close);
                stack.extend(n.0.iter().rev().map(Tok::Open));
            }
        }
    }
    out
}

/// Reads exactly one fully parenthesized group.
pub fn parse_pars<T: PartialEq>(l: &T, r: &T, cs: &[T]) -> Result<HTree> {
    let mut stack: Vec<Vec<HTree>> = Vec::new();
    for (i, c) in cs.iter().enumerate() {
        if c == l {
            stack.push(Vec::new());
        } else if c == r {
            let kids = stack.pop().ok_or(Error::UnbalancedParens)?;
            let node = HTree(kids);
            match stack.last_mut() {
                Some(parent) => parent.push(node),
                None if i + 1 == cs.len() => return Ok(node),
                None => return Err(Error::TrailingInput),
            }
        } else {
            return Err(Error::Parse {
                offset: i,
                message: "not a parenthesis symbol".into(),
            });
        }
    }
    Err(Error::UnbalancedParens)
}

/// Parenthesis strings over `(` and `)`.
pub fn pars() -> Encoder<String> {
    Encoder::via(
        "pars",
        Iso::new(
            |s: &String| parse_pars(&'(', &')', &s.chars().collect::<Vec<_>>()),
            |t: &HTree| Ok(collect_pars('(', ')', t).into_iter().collect()),
        ),
        &hff(),
    )
}

fn bit_pars(name: &str, tree: Encoder<HTree>) -> Encoder<Vec<Nat>> {
    Encoder::via(
        name,
        Iso::new(
            |bs: &Vec<Nat>| parse_pars(&Nat::zero(), &Nat::one(), bs),
            |t: &HTree| Ok(collect_pars(Nat::zero(), Nat::one(), t)),
        ),
        &tree,
    )
}

/// The `hff` tree as a bit string, 0 opening and 1 closing.
pub fn hff_pars() -> Encoder<Vec<Nat>> {
    bit_pars("hff_pars", hff())
}

pub fn hff2_pars() -> Encoder<Vec<Nat>> {
    bit_pars("hff2_pars", hff2())
}

pub fn hfs_pars() -> Encoder<Vec<Nat>> {
    bit_pars("hfs_pars", hfs())
}

pub fn hfm_pars() -> Encoder<Vec<Nat>> {
    bit_pars("hfm_pars", hfm())
}

pub fn hfpm_pars() -> Encoder<Vec<Nat>> {
    bit_pars("hfpm_pars", hfpm())
}

pub fn hfp_pars() -> Encoder<Vec<Nat>> {
    bit_pars("hfp_pars", hfp())
}

pub fn bhfm_pars() -> Encoder<Vec<Nat>> {
    bit_pars("bhfm_pars", hfbm())
}

pub fn bhfm2_pars() -> Encoder<Vec<Nat>> {
    bit_pars("bhfm2_pars", hfbm2())
}

/// Every parenthesis encoder over bits, by name.
pub fn pars_encoders() -> Vec<Encoder<Vec<Nat>>> {
    vec![
        hff_pars(),
        hff2_pars(),
        hfs_pars(),
        hfm_pars(),
        hfpm_pars(),
        hfp_pars(),
        bhfm_pars(),
        bhfm2_pars(),
    ]
}

/// The `hff_pars` bit string read as a `bits` code.
pub fn nat2parnat(n: &Nat) -> Result<Nat> {
    bits2nat(&convert(&hff_pars(), &nat(), n)?)
}

/// Inverse of [`nat2parnat`] on its range.
pub fn parnat2nat(n: &Nat) -> Result<Nat> {
    convert(&nat(), &hff_pars(), &nat2bits(n))
}

fn omega_chunks(n: &Nat, out: &mut Vec<Nat>) {
    if n.is_one() {
        return;
    }
    let bs = to_lbits(n);
    let l = bs.len() as u64 - 1;
    if l >= 2 {
        omega_chunks(&Nat::from(l), out);
    }
    out.extend(bs.into_iter().map(Nat::from));
}

/// Elias omega code of `n + 1`.
pub fn to_elias(n: &Nat) -> Vec<Nat> {
    let mut out = Vec::new();
    omega_chunks(&(n + 1u32), &mut out);
    out.push(Nat::zero());
    out
}

fn bit(b: &Nat) -> Result<u8> {
    if b.is_zero() {
        Ok(0)
    } else if b.is_one() {
        Ok(1)
    } else {
        Err(Error::law("elias", format!("{b} is not a bit")))
    }
}

/// Decodes one codeword and returns the value with the unread suffix.
pub fn from_elias(bs: &[Nat]) -> Result<(Nat, &[Nat])> {
    let mut n = Nat::one();
    let mut rest = bs;
    loop {
        let (first, tail) = rest.split_first().ok_or(Error::TruncatedCode)?;
        if bit(first)? == 0 {
            return Ok((n - 1u32, tail));
        }
        let take = usize::try_from(&n)
            .ok()
            .filter(|&k| k <= tail.len())
            .ok_or(Error::TruncatedCode)?;
        let mut chunk = vec![1u8];
        for b in &tail[..take] {
            chunk.push(bit(b)?);
        }
        n = from_lbits(&chunk)?;
        rest = &tail[take..];
    }
}

fn whole_elias(bs: &[Nat]) -> Result<Nat> {
    match from_elias(bs)? {
        (n, []) => Ok(n),
        _ => Err(Error::TrailingInput),
    }
}

/// Single Elias codewords; input with bits after the codeword is rejected.
pub fn elias() -> Encoder<Vec<Nat>> {
    Encoder::via(
        "elias",
        Iso::new(|bs: &Vec<Nat>| whole_elias(bs), |n: &Nat| Ok(to_elias(n))),
        &nat(),
    )
}

/// The length of `ns` and then each element, all as Elias codes.
pub fn nat2self(ns: &[Nat]) -> Vec<Nat> {
    let mut out = to_elias(&Nat::from(ns.len()));
    for n in ns {
        out.extend(to_elias(n));
    }
    out
}

/// Reads a length and that many codewords, returning the unread suffix.
pub fn self2nat(bs: &[Nat]) -> Result<(Vec<Nat>, &[Nat])> {
    let (l, mut rest) = from_elias(bs)?;
    let mut xs = Vec::new();
    let mut k = l;
    while !k.is_zero() {
        let (x, r) = from_elias(rest)?;
        xs.push(x);
        rest = r;
        k -= 1u32;
    }
    Ok((xs, rest))
}

fn sfun2nat(bs: &[Nat]) -> Result<Nat> {
    match self2nat(bs)? {
        (xs, []) => fun2nat(&xs),
        _ => Err(Error::TrailingInput),
    }
}

/// Self-delimited codes of the `fun` sequence of a natural.
pub fn sfun() -> Encoder<Vec<Nat>> {
    Encoder::via(
        "sfun",
        Iso::new(|bs: &Vec<Nat>| sfun2nat(bs), |n: &Nat| Ok(nat2self(&nat2fun(n)))),
        &nat(),
    )
}

/// How a representation's size is measured against the Elias code.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Metric {
    /// Self-delimited flat sequence: `fun`, `set`, `mset`, `pmset`, `perm`.
    Linear,
    /// A parenthesis encoder, taken as is.
    Hereditary,
}

impl std::str::FromStr for Metric {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "linear" => Ok(Metric::Linear),
            "hereditary" => Ok(Metric::Hereditary),
            _ => Err(Error::UnknownKind(s.to_string())),
        }
    }
}

fn linear_view(name: &str, n: &Nat) -> Result<Vec<Nat>> {
    match name {
        "fun" => Ok(nat2fun(n)),
        "set" => Ok(nat2set(n)),
        "mset" => Ok(nat2mset(n)),
        "pmset" => nat2pmset(n),
        "perm" => Ok(nat2perm(n).to_nats()),
        _ => Err(Error::UnknownEncoder(name.to_string())),
    }
}

fn pars_by_name(name: &str) -> Result<Encoder<Vec<Nat>>> {
    pars_encoders()
        .into_iter()
        .find(|e| e.name() == name)
        .ok_or_else(|| Error::UnknownEncoder(name.to_string()))
}

/// `(elias length, representation length)` for `n`.
pub fn sparseness_pair(metric: Metric, name: &str, n: &Nat) -> Result<(usize, usize)> {
    let e = to_elias(n).len();
    let r = match metric {
        Metric::Linear => nat2self(&linear_view(name, n)?).len(),
        Metric::Hereditary => convert(&pars_by_name(name)?, &nat(), n)?.len(),
    };
    Ok((e, r))
}

pub fn sparseness(metric: Metric, name: &str, n: &Nat) -> Result<Rational> {
    let (e, r) = sparseness_pair(metric, name, n)?;
    Ok(Rational::new(Nat::from(e), Nat::from(r)))
}

/// `n,value` rows for `0..upto`, values as `p/q`.
pub fn sparseness_csv(metric: Metric, name: &str, upto: u64) -> Result<String> {
    let mut s = String::from("n,value\n");
    for n in 0..upto {
        let v = sparseness(metric, name, &Nat::from(n))?;
        s.push_str(&format!("{n},{}/{}\n", v.numer(), v.denom()));
    }
    Ok(s)
}

/// Naturals below `limit` whose `hff_pars` code is shorter than their Elias code.
pub fn sparse_numbers(limit: u64) -> Result<Vec<u64>> {
    let hp = hff_pars();
    let mut out = Vec::new();
    for n in 0..limit {
        let x = Nat::from(n);
        if convert(&hp, &nat(), &x)?.len() < to_elias(&x).len() {
            out.push(n);
        }
    }
    Ok(out)
}

/// Tree families for [`info_density`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Hff,
    Hfs,
}

pub const MAX_DENSITY_BITS: u32 = 14;

/// `n * 2^n` over the total parenthesis length of the codes of `0..2^n`.
pub fn info_density(family: Family, n: u32) -> Result<Rational> {
    if n > MAX_DENSITY_BITS {
        return Err(Error::TooLarge(format!("density over 2^{n} values")));
    }
    let enc = match family {
        Family::Hff => hff_pars(),
        Family::Hfs => hfs_pars(),
    };
    let mut total = 0u64;
    for k in 0..1u64 << n {
        total += convert(&enc, &nat(), &Nat::from(k))?.len() as u64;
    }
    Ok(Rational::new(Nat::from(n as u64) << n, Nat::from(total)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numutil::{big, nats, pow2};
    use num_traits::ToPrimitive;
    use proptest::prelude::*;

    fn ratio_f64(r: &Rational) -> f64 {
        r.numer().to_f64().unwrap() / r.denom().to_f64().unwrap()
    }

    #[test]
    fn parenthesis_examples() {
        assert_eq!(convert(&pars(), &nat(), &big(42)).unwrap(), "((())(())(()))");
        let s = "((()())()(())()()()())".to_string();
        assert_eq!(convert(&nat(), &pars(), &s).unwrap(), big(2008));
        let hp = convert(&hff_pars(), &nat(), &big(2008)).unwrap();
        assert_eq!(hp, nats(&[0, 0, 0, 1, 0, 1, 1, 0, 1, 0, 0, 1, 1, 0, 1, 0, 1, 0, 1, 0, 1, 1]));
        assert_eq!(convert(&nat(), &hff_pars(), &hp).unwrap(), big(2008));
    }

    #[test]
    fn malformed_parentheses() {
        let enc = |s: &str| convert(&nat(), &pars(), &s.to_string());
        assert_eq!(enc(""), Err(Error::UnbalancedParens));
        assert_eq!(enc("(()"), Err(Error::UnbalancedParens));
        assert_eq!(enc(")("), Err(Error::UnbalancedParens));
        assert_eq!(enc("()()"), Err(Error::TrailingInput));
        assert!(matches!(enc("(x)"), Err(Error::Parse { offset: 1, .. })));
        // deep nesting parses and prints without recursion
        let deep: Vec<char> = "(".repeat(100_000).chars().chain(")".repeat(100_000).chars()).collect();
        let t = parse_pars(&'(', &')', &deep).unwrap();
        assert_eq!(collect_pars('(', ')', &t), deep);
    }

    #[test]
    fn parnat_examples() {
        assert_eq!(nat2parnat(&big(2008)).unwrap(), big(7690599));
        let small: Vec<Nat> = (0..8).map(|n| nat2parnat(&big(n)).unwrap()).collect();
        assert_eq!(small, nats(&[5, 27, 119, 115, 495, 483, 471, 467]));
        assert_eq!(nat2parnat(&pow2(1 << 16)).unwrap(), big(32639));
        assert_eq!(parnat2nat(&big(7690599)).unwrap(), big(2008));
        // 0 is the empty bit string, not a balanced one
        assert_eq!(parnat2nat(&big(0)), Err(Error::UnbalancedParens));
        let below: Vec<u64> = (0..=1u64 << 16)
            .filter(|&x| nat2parnat(&big(x)).unwrap() < big(x))
            .collect();
        assert_eq!(below, vec![8192, 16384, 32768, 32769, 49152, 65536]);
    }

    #[test]
    fn elias_examples() {
        assert_eq!(to_elias(&big(42)), nats(&[1, 0, 1, 0, 1, 1, 0, 1, 0, 1, 1, 0]));
        assert_eq!(
            to_elias(&big(2008)),
            nats(&[1, 1, 1, 0, 1, 0, 1, 1, 1, 1, 1, 0, 1, 1, 0, 0, 1, 0])
        );
        assert_eq!(to_elias(&big(0)), nats(&[0]));
        assert_eq!(convert(&nat(), &elias(), &to_elias(&big(42))).unwrap(), big(42));
        assert_eq!(from_elias(&nats(&[1, 0])), Err(Error::TruncatedCode));
        assert_eq!(from_elias(&[]), Err(Error::TruncatedCode));
        assert_eq!(convert(&nat(), &elias(), &nats(&[0, 0])), Err(Error::TrailingInput));
    }

    #[test]
    fn elias_prefix_free() {
        let suffixes = [nats(&[]), nats(&[1]), nats(&[0, 1, 1]), nats(&[1, 1, 1, 0])];
        for n in 0..=1u64 << 12 {
            for s in &suffixes {
                let mut bs = to_elias(&big(n));
                bs.extend(s.iter().cloned());
                let (m, rest) = from_elias(&bs).unwrap();
                assert_eq!((m, rest), (big(n), &s[..]));
            }
        }
    }

    #[test]
    fn every_decodable_string_is_canonical() {
        // all bit strings up to length 14
        for len in 0..=14u32 {
            for v in 0..1u64 << len {
                let bs: Vec<Nat> = (0..len).map(|i| big((v >> i) & 1)).collect();
                if let Ok((n, [])) = from_elias(&bs) {
                    assert_eq!(to_elias(&n), bs);
                }
            }
        }
    }

    #[test]
    fn self_delimited_sequences() {
        let s = convert(&sfun(), &nat(), &big(42)).unwrap();
        assert_eq!(s, nats(&[1, 0, 1, 0, 0, 0, 1, 0, 0, 1, 0, 0, 1, 0, 0]));
        assert_eq!(convert(&nat(), &sfun(), &s).unwrap(), big(42));
        assert_eq!(convert(&sfun(), &nat(), &big(0)).unwrap(), to_elias(&big(0)));
        let mut long = s.clone();
        long.push(big(0));
        assert_eq!(convert(&nat(), &sfun(), &long), Err(Error::TrailingInput));
        assert_eq!(convert(&nat(), &sfun(), &s[..s.len() - 1].to_vec()), Err(Error::TruncatedCode));
    }

    #[test]
    fn sparseness_values() {
        assert_eq!(sparseness_pair(Metric::Linear, "fun", &big(42)).unwrap().0, 12);
        assert_eq!(sparseness(Metric::Linear, "fun", &big(0)).unwrap(), Rational::one());
        let (e, r) = sparseness_pair(Metric::Hereditary, "hff_pars", &big(42)).unwrap();
        assert_eq!((e, r), (12, 14));
        for name in ["fun", "set", "mset", "pmset", "perm"] {
            let csv = sparseness_csv(Metric::Linear, name, 128).unwrap();
            assert_eq!(csv.lines().count(), 129);
            assert!(csv.starts_with("n,value\n0,"));
        }
        assert_eq!(
            sparseness(Metric::Linear, "bdd", &big(1)),
            Err(Error::UnknownEncoder("bdd".into()))
        );
        assert_eq!(
            sparseness(Metric::Hereditary, "fun", &big(1)),
            Err(Error::UnknownEncoder("fun".into()))
        );
    }

    #[test]
    fn sparse_number_listing() {
        let expected = [
            15, 16, 17, 24, 32, 64, 65, 96, 128, 129, 192, 256, 257, 258, 259, 320, 384, 385, 448,
            512, 513, 514, 515, 516, 517, 518, 519, 520, 544, 576, 640, 641, 704, 768, 769, 770,
            771, 832, 896, 897, 960, 1024, 1025, 1026, 1027, 1028, 1029, 1030, 1031, 1032, 1088,
            1152, 1280, 1281, 1408, 1536, 1537, 1538, 1539, 1664, 1792, 1793, 1920,
        ];
        assert_eq!(sparse_numbers(1 << 11).unwrap(), expected.to_vec());
    }

    // direct summation of node counts, independent of the encoders
    fn hff_nodes(n: &Nat) -> u64 {
        1 + nat2fun(n).iter().map(hff_nodes).sum::<u64>()
    }

    #[test]
    fn density_values() {
        let hff_printed = [
            0.0, 0.3333333333333333, 0.4444444444444444, 0.48, 0.5, 0.5095541401273885,
            0.5161290322580645, 0.5209302325581395, 0.5245901639344263, 0.5274725274725275,
            0.5297465080186239, 0.5316216726448934, 0.5331944806040094,
        ];
        let hfs_printed = [
            0.0, 0.3333333333333333, 0.4, 0.375, 0.3333333333333333, 0.3125, 0.2857142857142857,
            0.25925925925925924, 0.23529411764705882, 0.23076923076923078, 0.2222222222222222,
            0.21153846153846154, 0.2,
        ];
        for n in 0..=12u32 {
            let h = info_density(Family::Hff, n).unwrap();
            assert!((ratio_f64(&h) - hff_printed[n as usize]).abs() < 1e-12, "hff {n}");
            let s = info_density(Family::Hfs, n).unwrap();
            assert!((ratio_f64(&s) - hfs_printed[n as usize]).abs() < 1e-12, "hfs {n}");
            let total: u64 = (0..1u64 << n).map(|k| 2 * hff_nodes(&big(k))).sum();
            assert_eq!(h, Rational::new(big(n as u64) << n, big(total)));
        }
        let exact: Vec<Rational> = (0..5).map(|n| info_density(Family::Hff, n).unwrap()).collect();
        let r = |p: u64, q: u64| Rational::new(big(p), big(q));
        assert_eq!(exact, vec![r(0, 1), r(1, 3), r(4, 9), r(12, 25), r(1, 2)]);
        for n in 2..=12 {
            let a = info_density(Family::Hff, n - 1).unwrap();
            let b = info_density(Family::Hff, n).unwrap();
            assert!(a <= b);
            if n >= 5 {
                assert!(b > r(1, 2));
            }
        }
        assert!(matches!(info_density(Family::Hff, 15), Err(Error::TooLarge(_))));
    }

    #[test]
    fn pars_codes_are_prefix_free() {
        for e in pars_encoders() {
            let codes: Vec<Vec<Nat>> =
                (0..256u64).map(|n| convert(&e, &nat(), &big(n)).unwrap()).collect();
            for (i, a) in codes.iter().enumerate() {
                for (j, b) in codes.iter().enumerate() {
                    if i != j {
                        assert!(!b.starts_with(a), "{}: {i} prefixes {j}", e.name());
                    }
                }
            }
        }
    }

    proptest! {
        #[test]
        fn pars_roundtrip(n in 0u64..(1 << 50)) {
            let s = convert(&pars(), &nat(), &big(n)).unwrap();
            prop_assert_eq!(convert(&nat(), &pars(), &s).unwrap(), big(n));
            let b = convert(&hff_pars(), &nat(), &big(n)).unwrap();
            prop_assert_eq!(convert(&nat(), &hff_pars(), &b).unwrap(), big(n));
        }

        #[test]
        fn elias_roundtrip(n in any::<u64>(), tail in proptest::collection::vec(0u64..2, 0..8)) {
            let mut bs = to_elias(&big(n));
            let tail = nats(&tail);
            bs.extend(tail.iter().cloned());
            let (m, rest) = from_elias(&bs).unwrap();
            prop_assert_eq!(m, big(n));
            prop_assert_eq!(rest, &tail[..]);
        }
    }
}
