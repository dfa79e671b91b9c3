//! Binary decision diagrams obtained by unpairing truth tables, their
//! ranking, reduction, variable orders and minimization; multi-terminal BDDs.

use crate::basic::nat;
use crate::error::{Error, Result};
use crate::iso::{Encoder, Iso};
use crate::numutil::{pow2, Nat};
use crate::pairing::{bitpair, bitunpair};
use crate::perm::all_permutations;
use num_traits::{One, Zero};
use std::collections::HashSet;
use std::fmt;

/// Largest variable count for which complete trees are built.
pub const MAX_BDD_VARS: usize = 18;

/// Largest variable count accepted by [`to_min_bdd`].
pub const MAX_MIN_BDD_VARS: usize = 7;

/// `B0`, `B1`, or `D v then else`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BTree {
    B0,
    B1,
    D(usize, Box<BTree>, Box<BTree>),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Bdd {
    pub nvars: usize,
    pub root: BTree,
}

impl BTree {
    pub fn d(v: usize, l: BTree, r: BTree) -> BTree {
        BTree::D(v, Box::new(l), Box::new(r))
    }
}

impl fmt::Display for BTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BTree::B0 => f.write_str("B0"),
            BTree::B1 => f.write_str("B1"),
            BTree::D(v, l, r) => {
                write!(f, "D {v} ")?;
                write_arg(f, l)?;
                f.write_str(" ")?;
                write_arg(f, r)
            }
        }
    }
}

fn write_arg(f: &mut fmt::Formatter<'_>, t: &BTree) -> fmt::Result {
    match t {
        BTree::D(..) => write!(f, "({t})"),
        _ => write!(f, "{t}"),
    }
}

impl fmt::Display for Bdd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BDD {} ", self.nvars)?;
        write_arg(f, &self.root)
    }
}

fn check_vars(nvars: usize) -> Result<()> {
    if nvars > MAX_BDD_VARS {
        Err(Error::TooManyVariables(nvars))
    } else {
        Ok(())
    }
}

/// `2^2^n - 1`, the truth table of the constant true function.
pub fn bigone(nvars: usize) -> Nat {
    pow2(1u64 << nvars) - 1u32
}

/// Truth table of variable `k` among `n`, as a mask over `m = bigone n`.
pub fn var_mn(m: &Nat, n: usize, k: usize) -> Nat {
    m / (pow2(1u64 << (n - k - 1)) + 1u32)
}

/// `if x then t else e` on bit vectors.
pub fn ite(x: &Nat, t: &Nat, e: &Nat) -> Nat {
    ((t ^ e) & x) ^ e
}

fn too_large(tt: &Nat, nvars: usize) -> Error {
    Error::TruthTableTooLarge {
        tt: tt.to_string(),
        nvars,
    }
}

/// The complete tree of depth `nvars` obtained by unpairing `tt` recursively.
pub fn unfold_bdd(nvars: usize, tt: &Nat) -> Result<Bdd> {
    check_vars(nvars)?;
    if tt.bits() > 1u64 << nvars {
        return Err(too_large(tt, nvars));
    }
    fn split(n: usize, tt: &Nat) -> BTree {
        if n == 0 {
            return if tt.is_zero() { BTree::B0 } else { BTree::B1 };
        }
        let (a, b) = bitunpair(tt);
        BTree::d(n - 1, split(n - 1, &a), split(n - 1, &b))
    }
    Ok(Bdd {
        nvars,
        root: split(nvars, tt),
    })
}

fn malformed(what: &str) -> Error {
    Error::MalformedTree(what.to_string())
}

/// Pairs the leaves back together; the tree must be complete of depth `nvars`.
pub fn fold_bdd(b: &Bdd) -> Result<(usize, Nat)> {
    check_vars(b.nvars)?;
    fn fuse(depth: usize, t: &BTree) -> Result<Nat> {
        match (depth, t) {
            (0, BTree::B0) => Ok(Nat::zero()),
            (0, BTree::B1) => Ok(Nat::one()),
            (d, BTree::D(_, l, r)) if d > 0 => Ok(bitpair(&(fuse(d - 1, l)?, fuse(d - 1, r)?))),
            _ => Err(malformed("fold_bdd needs a complete tree of depth nvars")),
        }
    }
    Ok((b.nvars, fuse(b.nvars, &b.root)?))
}

/// Evaluates the tree as a boolean function, yielding its truth table.
pub fn eval_bdd(b: &Bdd) -> Result<Nat> {
    check_vars(b.nvars)?;
    let n = b.nvars;
    let m = bigone(n);
    let vars: Vec<Nat> = (0..n).map(|k| var_mn(&m, n, k)).collect();
    fn go(m: &Nat, vars: &[Nat], t: &BTree) -> Result<Nat> {
        match t {
            BTree::B0 => Ok(Nat::zero()),
            BTree::B1 => Ok(m.clone()),
            BTree::D(x, l, r) => {
                let v = vars
                    .get(*x)
                    .ok_or_else(|| malformed(&format!("variable {x} out of range")))?;
                Ok(ite(v, &go(m, vars, l)?, &go(m, vars, r)?))
            }
        }
    }
    go(&m, &vars, &b.root)
}

/// `bsum k` counts the boolean functions of fewer than `k` variables.
pub fn bsum(k: usize) -> Nat {
    if k == 0 {
        return Nat::zero();
    }
    (1..k).fold(Nat::from(2u8), |acc, i| acc + pow2(1u64 << i))
}

pub fn bsums(count: usize) -> Vec<Nat> {
    (0..count).map(bsum).collect()
}

/// `(k, n - bsum k)` with `bsum k <= n < bsum (k+1)`.
pub fn to_bsum(n: &Nat) -> (usize, Nat) {
    let mut k = 0;
    let mut next = bsum(1);
    while next <= *n {
        k += 1;
        next = bsum(k + 1);
    }
    (k, n - bsum(k))
}

pub fn nat2bdd(n: &Nat) -> Result<Bdd> {
    let (k, tt) = to_bsum(n);
    unfold_bdd(k, &tt)
}

pub fn bdd2nat(b: &Bdd) -> Result<Nat> {
    let (nv, tt) = fold_bdd(b)?;
    Ok(bsum(nv) + tt)
}

pub fn ev_bdd2nat(b: &Bdd) -> Result<Nat> {
    Ok(bsum(b.nvars) + eval_bdd(b)?)
}

/// Collapses nodes whose branches are identical.
pub fn bdd_reduce(b: &Bdd) -> Bdd {
    fn reduce(t: &BTree) -> BTree {
        match t {
            BTree::D(v, l, r) => {
                let (l, r) = (reduce(l), reduce(r));
                if l == r {
                    l
                } else {
                    BTree::d(*v, l, r)
                }
            }
            leaf => leaf.clone(),
        }
    }
    Bdd {
        nvars: b.nvars,
        root: reduce(&b.root),
    }
}

pub fn nat2rbdd(n: &Nat) -> Result<Bdd> {
    Ok(bdd_reduce(&nat2bdd(n)?))
}

/// Node count of the expression tree plus one for the wrapper.
pub fn bdd_size(b: &Bdd) -> u64 {
    fn size(t: &BTree) -> u64 {
        match t {
            BTree::D(_, l, r) => 1 + size(l) + size(r),
            _ => 1,
        }
    }
    1 + size(&b.root)
}

/// Distinct subtrees plus one, i.e. the size with maximal sharing.
pub fn robdd_size(b: &Bdd) -> u64 {
    fn collect<'a>(t: &'a BTree, seen: &mut HashSet<&'a BTree>) {
        if seen.insert(t) {
            if let BTree::D(_, l, r) = t {
                collect(l, seen);
                collect(r, seen);
            }
        }
    }
    let mut seen = HashSet::new();
    collect(&b.root, &mut seen);
    1 + seen.len() as u64
}

fn canonical(name: &str, b: &Bdd, rank: Nat, unrank: impl Fn(&Nat) -> Result<Bdd>) -> Result<Nat> {
    if unrank(&rank)? != *b {
        return Err(Error::law(name, format!("{b} is not in canonical form")));
    }
    Ok(rank)
}

/// Ranks by pairing the leaves.
pub fn pbdd() -> Encoder<Bdd> {
    Encoder::via(
        "pbdd",
        Iso::new(
            |b: &Bdd| canonical("pbdd", b, bdd2nat(b)?, nat2bdd),
            nat2bdd,
        ),
        &nat(),
    )
}

/// Ranks by boolean evaluation.
pub fn bdd() -> Encoder<Bdd> {
    Encoder::via(
        "bdd",
        Iso::new(
            |b: &Bdd| canonical("bdd", b, ev_bdd2nat(b)?, nat2bdd),
            nat2bdd,
        ),
        &nat(),
    )
}

/// Reduced diagrams, ranked by boolean evaluation.
pub fn rbdd() -> Encoder<Bdd> {
    Encoder::via(
        "rbdd",
        Iso::new(
            |b: &Bdd| canonical("rbdd", b, ev_bdd2nat(b)?, nat2rbdd),
            nat2rbdd,
        ),
        &nat(),
    )
}

/// Shannon expansion of `tt` along the variable order `vs`.
pub fn to_bdd(vs: &[usize], tt: &Nat) -> Result<Bdd> {
    let n = vs.len();
    check_vars(n)?;
    let mut seen = vec![false; n];
    for &v in vs {
        if v >= n || seen[v] {
            return Err(Error::NotAPermutation(format!("{vs:?}")));
        }
        seen[v] = true;
    }
    let m = bigone(n);
    if *tt > m {
        return Err(too_large(tt, n));
    }
    fn go(vs: &[usize], tt: &Nat, m: &Nat, n: usize) -> BTree {
        match vs.split_first() {
            None if tt.is_zero() => BTree::B0,
            None => BTree::B1,
            Some((&v, rest)) => {
                let cond = var_mn(m, n, v);
                let f0 = (m ^ &cond) & tt;
                let f1 = cond & tt;
                BTree::d(v, go(rest, &f1, m, n), go(rest, &f0, m, n))
            }
        }
    }
    Ok(Bdd {
        nvars: n,
        root: go(vs, tt, &m, n),
    })
}

pub fn to_rbdd(vs: &[usize], tt: &Nat) -> Result<Bdd> {
    Ok(bdd_reduce(&to_bdd(vs, tt)?))
}

pub fn from_bdd(b: &Bdd) -> Result<Nat> {
    eval_bdd(b)
}

/// The smallest reduced diagram over all variable orders. Candidates are
/// compared as `(robdd_size, diagram)` pairs, so equal sizes go to the
/// structurally smallest diagram.
pub fn to_min_bdd(n: usize, tt: &Nat) -> Result<Bdd> {
    if n > MAX_MIN_BDD_VARS {
        return Err(Error::TooManyVariables(n));
    }
    let mut best: Option<(u64, Bdd)> = None;
    for p in all_permutations(n)? {
        let b = to_rbdd(p.as_slice(), tt)?;
        let cand = (robdd_size(&b), b);
        if best.as_ref().is_none_or(|cur| cand < *cur) {
            best = Some(cand);
        }
    }
    Ok(best.expect("at least one order").1)
}

/// Leaf `L v` or branch `M k then else`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MtTree {
    L(Nat),
    M(usize, Box<MtTree>, Box<MtTree>),
}

/// A function from `nvars` input bits to `mbits` output bits.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mtbdd {
    pub mbits: usize,
    pub nvars: usize,
    pub root: MtTree,
}

impl fmt::Display for MtTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MtTree::L(v) => write!(f, "L {v}"),
            MtTree::M(k, l, r) => write!(f, "M {k} ({l}) ({r})"),
        }
    }
}

impl fmt::Display for Mtbdd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MTBDD {} {} ({})", self.mbits, self.nvars, self.root)
    }
}

pub fn to_mtbdd(mbits: usize, nvars: usize, tt: &Nat) -> Result<Mtbdd> {
    check_vars(nvars)?;
    let width = (mbits as u64)
        .checked_mul(1u64 << nvars)
        .ok_or_else(|| too_large(tt, nvars))?;
    if tt.bits() > width {
        return Err(too_large(tt, nvars));
    }
    fn go(n: usize, tt: &Nat) -> MtTree {
        if n == 0 {
            return MtTree::L(tt.clone());
        }
        let (x, y) = bitunpair(tt);
        MtTree::M(n - 1, Box::new(go(n - 1, &x)), Box::new(go(n - 1, &y)))
    }
    Ok(Mtbdd {
        mbits,
        nvars,
        root: go(nvars, tt),
    })
}

pub fn from_mtbdd(b: &Mtbdd) -> Result<Nat> {
    check_vars(b.nvars)?;
    fn go(mbits: usize, n: usize, t: &MtTree) -> Result<Nat> {
        match (n, t) {
            (0, MtTree::L(v)) if v.bits() <= mbits as u64 => Ok(v.clone()),
            (0, MtTree::L(v)) => Err(Error::LeafOutOfRange(format!("{v} needs more than {mbits} bits"))),
            (n, MtTree::M(_, l, r)) if n > 0 => {
                Ok(bitpair(&(go(mbits, n - 1, l)?, go(mbits, n - 1, r)?)))
            }
            _ => Err(malformed("MTBDD depth must equal nvars")),
        }
    }
    go(b.mbits, b.nvars, &b.root)
}
