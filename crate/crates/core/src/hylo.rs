//! Hereditarily finite structures: rooted trees obtained by unfolding a
//! natural number with a transformer until only zeros remain.
//!
//! Both directions run on an explicit stack, so deep or bushy trees do not
//! exhaust the native call stack.

use crate::basic::{
    fun2nat, mset2nat, nat, nat2fun, nat2mset, nat2pmset, nat2set, pmset2nat, set2nat,
};
use crate::error::{Error, Result};
use crate::iso::{Encoder, Iso, Root};
use crate::numutil::Nat;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use std::fmt;
use std::sync::Arc;

/// Upper bound on the number of nodes built or visited by one traversal.
pub const NODE_BUDGET: usize = 1_000_000;

/// Default number of urelements for the bounded variants.
pub const DEFAULT_ULIMIT: u64 = 4;

/// A rooted tree whose only content is its shape.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct HTree(pub Vec<HTree>);

// dropping iteratively keeps very deep trees off the native stack
impl Drop for HTree {
    fn drop(&mut self) {
        let mut stack = std::mem::take(&mut self.0);
        while let Some(mut t) = stack.pop() {
            stack.append(&mut t.0);
        }
    }
}

/// A tree with natural-number leaves (urelements).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum UTree {
    A(Nat),
    F(Vec<UTree>),
}

impl fmt::Display for HTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("H[")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str("]")
    }
}

impl fmt::Display for UTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            UTree::A(n) => write!(f, "A {n}"),
            UTree::F(ts) => {
                f.write_str("F[")?;
                for (i, c) in ts.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{c}")?;
                }
                f.write_str("]")
            }
        }
    }
}

/// One unfolding step: stop with a finished leaf or branch into seeds.
pub(crate) enum Step<T> {
    Leaf(T),
    Branch(Vec<Nat>),
}

/// One folding step: a leaf's value, or the children to fold first.
pub(crate) enum View<'a, T> {
    Leaf(Nat),
    Branch(&'a [T]),
}

pub(crate) fn unfold<T>(
    seed: &Nat,
    step: impl Fn(&Nat) -> Result<Step<T>>,
    node: impl Fn(Vec<T>) -> T,
) -> Result<T> {
    struct Frame<T> {
        pending: std::vec::IntoIter<Nat>,
        done: Vec<T>,
    }
    let mut stack = match step(seed)? {
        Step::Leaf(t) => return Ok(t),
        Step::Branch(cs) => vec![Frame {
            pending: cs.into_iter(),
            done: Vec::new(),
        }],
    };
    let mut nodes = 1usize;
    loop {
        let top = stack.last_mut().expect("stack is never empty here");
        match top.pending.next() {
            Some(c) => {
                nodes += 1;
                if nodes > NODE_BUDGET {
                    return Err(Error::NonTerminating(NODE_BUDGET));
                }
                match step(&c)? {
                    Step::Leaf(t) => top.done.push(t),
                    Step::Branch(cs) => stack.push(Frame {
                        done: Vec::with_capacity(cs.len()),
                        pending: cs.into_iter(),
                    }),
                }
            }
            None => {
                let fr = stack.pop().unwrap();
                let t = node(fr.done);
                match stack.last_mut() {
                    Some(parent) => parent.done.push(t),
                    None => return Ok(t),
                }
            }
        }
    }
}

pub(crate) fn fold<'a, T>(
    root: &'a T,
    view: impl Fn(&'a T) -> Result<View<'a, T>>,
    alg: impl Fn(Vec<Nat>) -> Result<Nat>,
) -> Result<Nat> {
    struct Frame<'a, T> {
        pending: std::slice::Iter<'a, T>,
        done: Vec<Nat>,
    }
    let mut stack = match view(root)? {
        View::Leaf(v) => return Ok(v),
        View::Branch(cs) => vec![Frame {
            pending: cs.iter(),
            done: Vec::new(),
        }],
    };
    let mut nodes = 1usize;
    loop {
        let top = stack.last_mut().expect("stack is never empty here");
        match top.pending.next() {
            Some(c) => {
                nodes += 1;
                if nodes > NODE_BUDGET {
                    return Err(Error::NonTerminating(NODE_BUDGET));
                }
                match view(c)? {
                    View::Leaf(v) => top.done.push(v),
                    View::Branch(cs) => stack.push(Frame {
                        done: Vec::with_capacity(cs.len()),
                        pending: cs.iter(),
                    }),
                }
            }
            None => {
                let fr = stack.pop().unwrap();
                let v = alg(fr.done)?;
                match stack.last_mut() {
                    Some(parent) => parent.done.push(v),
                    None => return Ok(v),
                }
            }
        }
    }
}

/// `unrank f n = H (map (unrank f) (f n))`.
pub fn unrank(f: impl Fn(&Nat) -> Result<Vec<Nat>>, n: &Nat) -> Result<HTree> {
    unfold(n, |m| f(m).map(Step::Branch), HTree)
}

/// `rank g (H ts) = g (map (rank g) ts)`.
pub fn rank(g: impl Fn(Vec<Nat>) -> Result<Nat>, t: &HTree) -> Result<Nat> {
    fold(t, |t: &HTree| Ok(View::Branch(&t.0)), g)
}

/// Number of nodes.
pub fn tsize(t: &HTree) -> Nat {
    rank(|cs| Ok(cs.into_iter().fold(Nat::from(1u8), |a, c| a + c)), t).expect("sizes cannot fail")
}

type Transformer = Arc<dyn Fn(&Nat) -> Result<Vec<Nat>> + Send + Sync>;
type Inverse = Arc<dyn Fn(Vec<Nat>) -> Result<Nat> + Send + Sync>;

/// The tree encoder obtained from a transformer `f` and its inverse `g`.
pub fn hylo(name: &str, f: Transformer, g: Inverse) -> Encoder<HTree> {
    Encoder::via(
        name,
        Iso::new(move |t: &HTree| rank(|cs| g(cs), t), move |n: &Nat| unrank(|m| f(m), n)),
        &nat(),
    )
}

pub fn hfs() -> Encoder<HTree> {
    hylo(
        "hfs",
        Arc::new(|n| Ok(nat2set(n))),
        Arc::new(|cs| set2nat(&cs)),
    )
}

pub fn hff() -> Encoder<HTree> {
    hylo(
        "hff",
        Arc::new(|n| Ok(nat2fun(n))),
        Arc::new(|cs| fun2nat(&cs)),
    )
}

pub fn hfm() -> Encoder<HTree> {
    hylo(
        "hfm",
        Arc::new(|n| Ok(nat2mset(n))),
        Arc::new(|cs| mset2nat(&cs)),
    )
}

pub fn hfpm() -> Encoder<HTree> {
    hylo("hfpm", Arc::new(nat2pmset), Arc::new(|cs| pmset2nat(&cs)))
}

pub fn nat2hff(n: &Nat) -> HTree {
    unrank(|m| Ok(nat2fun(m)), n).expect("nat2fun is total and decreasing")
}

pub fn hff2nat(t: &HTree) -> Result<Nat> {
    rank(|cs| fun2nat(&cs), t)
}

/// A sequence of naturals as the tree whose children are their `hff` trees.
pub fn hffs() -> Encoder<HTree> {
    Encoder::new(
        "hffs",
        Iso::new(
            |t: &HTree| t.0.iter().map(hff2nat).collect::<Result<Root>>(),
            |ns: &Root| Ok(HTree(ns.iter().map(nat2hff).collect())),
        ),
    )
}

fn atom_limit(u: &Nat, a: &Nat) -> Error {
    Error::AtomOutOfRange {
        atom: a.to_string(),
        limit: u.to_string(),
    }
}

/// Bounded urelements: `n < u` is the atom `A n`, otherwise `F` of the
/// unfolding of `n - u`.
pub fn unrank_u(u: &Nat, f: impl Fn(&Nat) -> Result<Vec<Nat>>, n: &Nat) -> Result<UTree> {
    unfold(
        n,
        |m| {
            if m < u {
                Ok(Step::Leaf(UTree::A(m.clone())))
            } else {
                f(&(m - u)).map(Step::Branch)
            }
        },
        UTree::F,
    )
}

pub fn rank_u(u: &Nat, g: impl Fn(Vec<Nat>) -> Result<Nat>, t: &UTree) -> Result<Nat> {
    fold(
        t,
        |t: &UTree| match t {
            UTree::A(a) if a < u => Ok(View::Leaf(a.clone())),
            UTree::A(a) => Err(atom_limit(u, a)),
            UTree::F(ts) => Ok(View::Branch(ts)),
        },
        |cs| Ok(g(cs)? + u),
    )
}

/// Unbounded urelements: even `n` is `A (n/2)`, odd `n` is `F` of the
/// unfolding of `(n-1)/2`.
pub fn unrank_iu(f: impl Fn(&Nat) -> Result<Vec<Nat>>, n: &Nat) -> Result<UTree> {
    unfold(
        n,
        |m| {
            let (q, r) = m.div_rem(&Nat::from(2u8));
            if r.is_zero() {
                Ok(Step::Leaf(UTree::A(q)))
            } else {
                f(&q).map(Step::Branch)
            }
        },
        UTree::F,
    )
}

pub fn rank_iu(g: impl Fn(Vec<Nat>) -> Result<Nat>, t: &UTree) -> Result<Nat> {
    fold(
        t,
        |t: &UTree| match t {
            UTree::A(a) => Ok(View::Leaf(a * 2u32)),
            UTree::F(ts) => Ok(View::Branch(ts)),
        },
        |cs| Ok(g(cs)? * 2u32 + 1u32),
    )
}

fn uhylo(name: String, u: Nat, f: Transformer, g: Inverse) -> Encoder<UTree> {
    let u2 = u.clone();
    Encoder::via(
        name,
        Iso::new(
            move |t: &UTree| rank_u(&u, |cs| g(cs), t),
            move |n: &Nat| unrank_u(&u2, |m| f(m), n),
        ),
        &nat(),
    )
}

fn iuhylo(name: &str, f: Transformer, g: Inverse) -> Encoder<UTree> {
    Encoder::via(
        name,
        Iso::new(move |t: &UTree| rank_iu(|cs| g(cs), t), move |n: &Nat| unrank_iu(|m| f(m), n)),
        &nat(),
    )
}

fn suffix(base: &str, u: u64) -> String {
    if u == DEFAULT_ULIMIT {
        base.to_string()
    } else {
        format!("{base}:{u}")
    }
}

/// Sets with `u` urelements.
pub fn uhfs(u: u64) -> Encoder<UTree> {
    uhylo(
        suffix("uhfs", u),
        Nat::from(u),
        Arc::new(|n| Ok(nat2set(n))),
        Arc::new(|cs| set2nat(&cs)),
    )
}

/// Sequences with `u` urelements.
pub fn uhff(u: u64) -> Encoder<UTree> {
    uhylo(
        suffix("uhff", u),
        Nat::from(u),
        Arc::new(|n| Ok(nat2fun(n))),
        Arc::new(|cs| fun2nat(&cs)),
    )
}

pub fn iuhfs() -> Encoder<UTree> {
    iuhylo("iuhfs", Arc::new(|n| Ok(nat2set(n))), Arc::new(|cs| set2nat(&cs)))
}

pub fn iuhff() -> Encoder<UTree> {
    iuhylo("iuhff", Arc::new(|n| Ok(nat2fun(n))), Arc::new(|cs| fun2nat(&cs)))
}

/// Successor of a hereditarily finite set, borrowed from naturals.
pub fn hfs_succ(t: &HTree) -> Result<HTree> {
    crate::iso::borrow(&crate::iso::with(&nat(), &hfs()), |n| n + 1u32, t)
}

pub fn hfs_union(a: &HTree, b: &HTree) -> Result<HTree> {
    let (x, y) = (rank(|cs| set2nat(&cs), a)?, rank(|cs| set2nat(&cs), b)?);
    unrank(|m| Ok(nat2set(m)), &(x | y))
}

/// The number of nodes of `t` as a machine integer, for reporting.
pub fn tsize_u64(t: &HTree) -> u64 {
    tsize(t).to_u64().unwrap_or(u64::MAX)
}
