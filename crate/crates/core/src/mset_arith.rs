//! Arithmetic borrowed from multiset encodings of the naturals.

use crate::basic::{mset, nat, nat_set, pmset};
use crate::error::{Error, Result};
use crate::iso::{borrow_from, try_borrow_from};
use crate::numutil::{mset_dif, mset_inter, mset_union, Nat};
use num_traits::{One, Zero};

fn concat(mut a: Vec<Nat>, b: Vec<Nat>) -> Vec<Nat> {
    a.extend(b);
    a
}

/// Multiplication analogue: concatenate the `mset` images.
pub fn mprod(n: &Nat, m: &Nat) -> Result<Nat> {
    borrow_from(&mset(), concat, &nat(), n, m)
}

pub fn mexp(n: &Nat, k: u64) -> Result<Nat> {
    let mut acc = Nat::zero();
    for _ in 0..k {
        acc = mprod(n, &acc)?;
    }
    Ok(acc)
}

/// `mprod` shifted so that 0 absorbs and 1 is neutral.
pub fn mprod_shifted(n: &Nat, m: &Nat) -> Result<Nat> {
    if n.is_zero() || m.is_zero() {
        return Ok(Nat::zero());
    }
    Ok(mprod(&(n - 1u32), &(m - 1u32))? + 1u32)
}

pub fn mexp_shifted(n: &Nat, k: u64) -> Result<Nat> {
    let mut acc = Nat::one();
    for _ in 0..k {
        acc = mprod_shifted(n, &acc)?;
    }
    Ok(acc)
}

/// Concatenation of prime-factor multisets; needs the prime table.
pub fn pmprod(n: &Nat, m: &Nat) -> Result<Nat> {
    borrow_from(&pmset(), concat, &nat(), n, m)
}

/// Closed form of [`pmprod`].
pub fn pmprod_closed(n: &Nat, m: &Nat) -> Nat {
    (n + 1u32) * (m + 1u32) - 1u32
}

pub fn mgcd(x: &Nat, y: &Nat) -> Result<Nat> {
    try_borrow_from(&mset(), |a, b| mset_inter(&a, &b), &nat(), x, y)
}

pub fn mlcm(x: &Nat, y: &Nat) -> Result<Nat> {
    try_borrow_from(&mset(), |a, b| mset_union(&a, &b), &nat(), x, y)
}

/// Multiset difference; the divisor's multiset must be contained in the dividend's.
pub fn mdiv(x: &Nat, y: &Nat) -> Result<Nat> {
    try_borrow_from(
        &mset(),
        |a, b| {
            let d = mset_dif(&a, &b)?;
            if d.len() + b.len() != a.len() {
                return Err(Error::NotDivisible(format!("{x} by {y}")));
            }
            Ok(d)
        },
        &nat(),
        x,
        y,
    )
}

/// Sorts distinct naturals by a round trip through their bitmask.
pub fn strange_sort(xs: &[Nat]) -> Result<Vec<Nat>> {
    let iso = nat_set();
    iso.from(&iso.to(&xs.to_vec())?)
}

/// Sorts with repetitions by a round trip through `mset`.
pub fn strange_sort_multi(xs: &[Nat]) -> Result<Vec<Nat>> {
    let m = mset();
    m.to(&m.from(&xs.to_vec())?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numutil::{big, nats};
    use proptest::prelude::*;

    #[test]
    fn mprod_examples() {
        let m = |a: Nat, b: Nat| mprod(&a, &b).unwrap();
        assert_eq!(m(big(41), m(big(33), big(88))), big(3539));
        assert_eq!(m(m(big(41), big(33)), big(88)), big(3539));
        assert_eq!(m(big(33), big(46)), big(605));
        assert_eq!(m(big(46), big(33)), big(605));
        assert_eq!(m(big(0), big(712)), big(712));
        assert_eq!(m(big(5513), big(0)), big(5513));
    }

    #[test]
    fn exponent_tables() {
        let sq: Vec<Nat> = (0..16).map(|x| mexp(&big(x), 2).unwrap()).collect();
        assert_eq!(sq, nats(&[0, 3, 6, 15, 12, 27, 30, 63, 24, 51, 54, 111, 60, 123, 126, 255]));
        let sq2: Vec<Nat> = (0..17).map(|x| mexp_shifted(&big(x), 2).unwrap()).collect();
        assert_eq!(
            sq2,
            nats(&[0, 1, 4, 7, 16, 13, 28, 31, 64, 25, 52, 55, 112, 61, 124, 127, 256])
        );
        let cube: Vec<Nat> = (0..17).map(|x| mexp_shifted(&big(x), 3).unwrap()).collect();
        assert_eq!(
            cube,
            nats(&[0, 1, 8, 15, 64, 29, 120, 127, 512, 57, 232, 239, 960, 253, 1016, 1023, 4096])
        );
    }

    #[test]
    fn gcd_lcm_div() {
        let (x, y) = (big(42), big(2008));
        let p = mprod(&x, &y).unwrap();
        assert_eq!(mdiv(&p, &y).unwrap(), x);
        assert_eq!(mdiv(&p, &x).unwrap(), y);
        let g = mgcd(&x, &y).unwrap();
        let l = mlcm(&x, &y).unwrap();
        assert_eq!(mprod(&g, &l).unwrap(), p);
        for v in 0..=64 {
            assert_eq!(mgcd(&big(v), &big(v)).unwrap(), big(v));
        }
        // mset of 1 is [0], of 2 is [1]
        assert!(matches!(mdiv(&big(1), &big(2)), Err(Error::NotDivisible(_))));
    }

    #[test]
    fn sorting_by_roundtrip() {
        assert_eq!(
            strange_sort(&nats(&[2, 9, 3, 1, 5, 0, 7, 4, 8, 6])).unwrap(),
            nats(&[0, 1, 2, 3, 4, 5, 6, 7, 8, 9])
        );
        assert_eq!(
            strange_sort_multi(&nats(&[2, 4, 1, 1, 0, 3, 17, 1, 4])).unwrap(),
            nats(&[0, 1, 1, 1, 2, 3, 4, 4, 17])
        );
        assert_eq!(strange_sort(&[]).unwrap(), vec![]);
    }

    proptest! {
        #[test]
        fn monoid_laws(a in 0u64..5000, b in 0u64..5000, c in 0u64..5000) {
            let (a, b, c) = (big(a), big(b), big(c));
            prop_assert_eq!(mprod(&a, &b).unwrap(), mprod(&b, &a).unwrap());
            prop_assert_eq!(
                mprod(&a, &mprod(&b, &c).unwrap()).unwrap(),
                mprod(&mprod(&a, &b).unwrap(), &c).unwrap()
            );
            prop_assert_eq!(mprod(&a, &big(0)).unwrap(), a.clone());
            prop_assert_eq!(mprod_shifted(&a, &big(1)).unwrap(), a.clone());
        }

        #[test]
        fn pmprod_has_closed_form(a in 0u64..3000, b in 0u64..3000) {
            prop_assert_eq!(pmprod(&big(a), &big(b)).unwrap(), pmprod_closed(&big(a), &big(b)));
        }

        #[test]
        fn gcd_lcm_relations(a in 0u64..100_000, b in 0u64..100_000) {
            let (a, b) = (big(a), big(b));
            let p = mprod(&a, &b).unwrap();
            prop_assert_eq!(mprod(&mgcd(&a, &b).unwrap(), &mlcm(&a, &b).unwrap()).unwrap(), p.clone());
            prop_assert_eq!(mdiv(&p, &b).unwrap(), a.clone());
            prop_assert_eq!(mdiv(&p, &a).unwrap(), b);
        }
    }
}
