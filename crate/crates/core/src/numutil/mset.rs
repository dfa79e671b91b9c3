//! Operations on sorted multisets, with multiplicity semantics.

use crate::error::{Error, Result};
use std::cmp::Ordering;

fn check<T: Ord>(xs: &[T]) -> Result<()> {
    if super::is_sorted(xs) {
        Ok(())
    } else {
        Err(Error::UnsortedInput)
    }
}

/// Elements common to both, with minimum multiplicity.
pub fn mset_inter<T: Ord + Clone>(xs: &[T], ys: &[T]) -> Result<Vec<T>> {
    check(xs)?;
    check(ys)?;
    Ok(inter(xs, ys))
}

/// Elements of `xs` left after removing those of `ys`.
pub fn mset_dif<T: Ord + Clone>(xs: &[T], ys: &[T]) -> Result<Vec<T>> {
    check(xs)?;
    check(ys)?;
    Ok(dif(xs, ys))
}

pub fn mset_symdif<T: Ord + Clone>(xs: &[T], ys: &[T]) -> Result<Vec<T>> {
    check(xs)?;
    check(ys)?;
    let mut r = dif(xs, ys);
    r.extend(dif(ys, xs));
    r.sort();
    Ok(r)
}

/// Union with maximum multiplicity: `dif xs ys ++ inter xs ys ++ dif ys xs`, sorted.
pub fn mset_union<T: Ord + Clone>(xs: &[T], ys: &[T]) -> Result<Vec<T>> {
    check(xs)?;
    check(ys)?;
    let mut r = dif(xs, ys);
    r.extend(inter(xs, ys));
    r.extend(dif(ys, xs));
    r.sort();
    Ok(r)
}

fn inter<T: Ord + Clone>(xs: &[T], ys: &[T]) -> Vec<T> {
    let (mut i, mut j, mut out) = (0, 0, Vec::new());
    while i < xs.len() && j < ys.len() {
        match xs[i].cmp(&ys[j]) {
            Ordering::Less => i += 1,
            Ordering::Greater => j += 1,
            Ordering::Equal => {
                out.push(xs[i].clone());
                i += 1;
                j += 1;
            }
        }
    }
    out
}

fn dif<T: Ord + Clone>(xs: &[T], ys: &[T]) -> Vec<T> {
    let (mut i, mut j, mut out) = (0, 0, Vec::new());
    while i < xs.len() {
        if j >= ys.len() {
            out.extend_from_slice(&xs[i..]);
            break;
        }
        match xs[i].cmp(&ys[j]) {
            Ordering::Less => {
                out.push(xs[i].clone());
                i += 1;
            }
            Ordering::Greater => j += 1,
            Ordering::Equal => {
                i += 1;
                j += 1;
            }
        }
    }
    out
}
