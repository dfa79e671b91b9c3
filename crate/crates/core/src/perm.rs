//! Permutations, factorial-base digits and Lehmer codes.

use crate::basic::nat;
use crate::error::{Error, Result};
use crate::hylo::{rank, unrank, HTree};
use crate::iso::{Encoder, Iso};
use crate::numutil::{to_usize, Nat};
use num_integer::Integer;
use num_traits::{One, Zero};

/// A rearrangement of `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(ps: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; ps.len()];
        for &p in &ps {
            if p >= ps.len() || seen[p] {
                return Err(Error::NotAPermutation(format!("{ps:?}")));
            }
            seen[p] = true;
        }
        Ok(Permutation(ps))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((0..n).collect())
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn to_nats(&self) -> Vec<Nat> {
        self.0.iter().map(|&p| Nat::from(p)).collect()
    }

    pub fn from_nats(ns: &[Nat]) -> Result<Self> {
        let ps = ns
            .iter()
            .map(|n| usize::try_from(n).map_err(|_| Error::NotAPermutation(n.to_string())))
            .collect::<Result<Vec<_>>>()?;
        Permutation::new(ps)
    }
}

/// Factorial-base digits of `n`, least significant first; `fr(0) == [0]`.
pub fn fr(n: &Nat) -> Vec<Nat> {
    if n.is_zero() {
        return vec![Nat::zero()];
    }
    let mut out = Vec::new();
    let mut k = n.clone();
    let mut j = Nat::one();
    while !k.is_zero() {
        let (q, r) = k.div_rem(&j);
        out.push(r);
        k = q;
        j += 1u32;
    }
    out
}

/// Factorial-base digits, most significant first.
pub fn fl(n: &Nat) -> Vec<Nat> {
    let mut ds = fr(n);
    ds.reverse();
    ds
}

/// Value of least-significant-first factorial digits: `sum d_i * i!`.
pub fn rf(ds: &[Nat]) -> Nat {
    let mut fact = Nat::one();
    let mut acc = Nat::zero();
    for (i, d) in ds.iter().enumerate() {
        if i > 0 {
            fact *= i;
        }
        acc += d * &fact;
    }
    acc
}

pub fn lf(ds: &[Nat]) -> Nat {
    let mut r = ds.to_vec();
    r.reverse();
    rf(&r)
}

/// For each position, how many later entries are smaller.
pub fn perm2lehmer(p: &Permutation) -> Vec<usize> {
    let ps = p.as_slice();
    (0..ps.len())
        .map(|i| ps[i + 1..].iter().filter(|&&q| q < ps[i]).count())
        .collect()
}

/// Pick entries by index out of `0..n`, removing each one as it is used.
pub fn lehmer2perm(code: &[usize]) -> Result<Permutation> {
    let mut pool: Vec<usize> = (0..code.len()).collect();
    let mut out = Vec::with_capacity(code.len());
    for (pos, &c) in code.iter().enumerate() {
        if c >= pool.len() {
            return Err(Error::DigitOutOfRange {
                digit: c.to_string(),
                position: pos,
            });
        }
        out.push(pool.remove(c));
    }
    Ok(Permutation(out))
}

/// Size and rank of a permutation among those of the same size.
pub fn perm2nth(p: &Permutation) -> (usize, Nat) {
    let code: Vec<Nat> = perm2lehmer(p).into_iter().map(Nat::from).collect();
    (p.len(), lf(&code))
}

/// The permutation of `0..size` whose rank is `n`.
pub fn nth2perm(size: usize, n: &Nat) -> Result<Permutation> {
    if size == 0 {
        return if n.is_zero() {
            Ok(Permutation(vec![]))
        } else {
            Err(Error::RankTooLarge {
                rank: n.to_string(),
                size,
            })
        };
    }
    let ds = fl(n);
    if ds.len() > size {
        return Err(Error::RankTooLarge {
            rank: n.to_string(),
            size,
        });
    }
    let mut code = vec![0usize; size - ds.len()];
    for d in &ds {
        code.push(to_usize(d, "digit")?);
    }
    lehmer2perm(&code)
}

/// `sf(k) = sum_{i<k} i!`, the number of permutations of all sizes below `k`.
pub fn sf(k: usize) -> Nat {
    rf(&vec![Nat::one(); k])
}

/// Split `n` into a size and a rank within that size.
pub fn to_sf(n: &Nat) -> (usize, Nat) {
    let mut k = 0usize;
    let mut fact = Nat::one();
    let mut total = Nat::zero();
    // total = sf(k); fact = k!
    loop {
        let next = &total + &fact;
        if next > *n {
            return (k, n - total);
        }
        total = next;
        k += 1;
        fact *= k;
    }
}

pub fn nat2perm(n: &Nat) -> Permutation {
    if n.is_zero() {
        return Permutation(vec![]);
    }
    let (k, r) = to_sf(n);
    nth2perm(k, &r).expect("the remainder is below k!")
}

pub fn perm2nat(p: &Permutation) -> Nat {
    let (k, r) = perm2nth(p);
    sf(k) + r
}

/// Every permutation of `0..n` in rank order.
pub fn all_permutations(n: usize) -> Result<Vec<Permutation>> {
    if n > 8 {
        return Err(Error::TooLarge(format!("{n}! permutations")));
    }
    let count: usize = (1..=n).product();
    (0..count).map(|i| nth2perm(n, &Nat::from(i))).collect()
}

pub fn perm() -> Encoder<Permutation> {
    Encoder::via(
        "perm",
        Iso::new(|p: &Permutation| Ok(perm2nat(p)), |n: &Nat| Ok(nat2perm(n))),
        &nat(),
    )
}

/// Trees whose children at each node form a permutation encoding.
pub fn hfp() -> Encoder<HTree> {
    Encoder::via(
        "hfp",
        Iso::new(
            |t: &HTree| rank(|cs| Ok(perm2nat(&Permutation::from_nats(&cs)?)), t),
            |n: &Nat| unrank(|m| Ok(nat2perm(m).to_nats()), n),
        ),
        &nat(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::iso::convert;
    use crate::numutil::{big, nats};
    use proptest::prelude::*;

    fn p(v: &[usize]) -> Permutation {
        Permutation::new(v.to_vec()).unwrap()
    }

    #[test]
    fn factoradic_examples() {
        assert_eq!(fr(&big(0)), nats(&[0]));
        assert_eq!(fr(&big(1134)), nats(&[0, 0, 0, 1, 2, 3, 1]));
        assert_eq!(rf(&fr(&big(1134))), big(1134));
        assert_eq!(lf(&fl(&big(99))), big(99));
    }

    #[test]
    fn sizes_and_ranks() {
        let sfs: Vec<Nat> = (0..8).map(sf).collect();
        assert_eq!(sfs, nats(&[0, 1, 2, 4, 10, 34, 154, 874]));
        assert_eq!(to_sf(&big(2008)), (7, big(1134)));
        assert_eq!(to_sf(&big(42)), (5, big(8)));
        assert_eq!(to_sf(&big(1)), (1, big(0)));
    }

    // factorial sums by direct accumulation
    #[test]
    fn sf_is_sum_of_lower_factorials() {
        for k in 0..13usize {
            let expected: u64 = (0..k as u64).map(|i| (1..=i).product::<u64>()).sum();
            assert_eq!(sf(k), big(expected));
        }
    }

    #[test]
    fn encoder_examples() {
        assert_eq!(convert(&perm(), &nat(), &big(2008)).unwrap(), p(&[1, 4, 3, 2, 0, 5, 6]));
        assert_eq!(convert(&nat(), &perm(), &p(&[1, 4, 3, 2, 0, 5, 6])).unwrap(), big(2008));
        assert_eq!(convert(&perm(), &nat(), &big(42)).unwrap(), p(&[0, 2, 3, 1, 4]));
        assert_eq!(convert(&perm(), &nat(), &big(5)).unwrap(), p(&[0, 2, 1]));
        assert_eq!(
            convert(&perm(), &nat(), &big(1234567890)).unwrap(),
            p(&[1, 6, 11, 2, 0, 3, 10, 7, 8, 5, 9, 4, 12])
        );
        assert_eq!(perm2lehmer(&p(&[0, 2, 3, 1, 4])), vec![0, 1, 1, 0, 0]);
        assert_eq!(nat2perm(&big(0)), p(&[]));
    }

    #[test]
    fn hfp_example() {
        let t = convert(&hfp(), &nat(), &big(42)).unwrap();
        assert_eq!(
            t.to_string(),
            "H[H[],H[H[],H[H[]]],H[H[H[]],H[]],H[H[]],H[H[],H[H[]],H[H[],H[H[]]]]]"
        );
        assert_eq!(convert(&nat(), &hfp(), &t).unwrap(), big(42));
    }

    #[test]
    fn errors() {
        assert!(matches!(Permutation::new(vec![0, 0]), Err(Error::NotAPermutation(_))));
        assert!(matches!(Permutation::new(vec![1]), Err(Error::NotAPermutation(_))));
        assert!(matches!(nth2perm(3, &big(6)), Err(Error::RankTooLarge { .. })));
        assert!(matches!(all_permutations(9), Err(Error::TooLarge(_))));
    }

    #[test]
    fn all_permutations_are_distinct_and_ordered() {
        assert_eq!(all_permutations(0).unwrap(), vec![p(&[])]);
        let ps = all_permutations(4).unwrap();
        assert_eq!(ps.len(), 24);
        assert!(ps.windows(2).all(|w| w[0] < w[1]));
        for (i, q) in ps.iter().enumerate() {
            assert_eq!(perm2nth(q), (4, big(i as u64)));
        }
    }

    proptest! {
        #[test]
        fn perm_roundtrip(n in any::<u64>()) {
            let q = nat2perm(&big(n));
            prop_assert_eq!(perm2nat(&q), big(n));
        }

        #[test]
        fn factoradic_roundtrip(n in any::<u128>()) {
            let n = Nat::from(n);
            let ds = fr(&n);
            prop_assert!(ds.iter().enumerate().all(|(i, d)| *d <= Nat::from(i)));
            prop_assert_eq!(rf(&ds), n);
        }

        #[test]
        fn hfp_roundtrip(n in any::<u64>()) {
            let t = convert(&hfp(), &nat(), &big(n)).unwrap();
            prop_assert_eq!(convert(&nat(), &hfp(), &t).unwrap(), big(n));
        }
    }
}
