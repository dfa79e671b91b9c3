//! LISP-style cons cells: atoms are even, cons cells odd.

use super::{pepis_pair, pepis_unpair};
use crate::basic::nat;
use crate::error::{Error, Result};
use crate::hylo::{unfold, Step, NODE_BUDGET};
use crate::iso::{Encoder, Iso};
use crate::numutil::Nat;
use num_traits::Zero;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CList {
    Atom(Nat),
    Cons(Box<CList>, Box<CList>),
}

impl CList {
    pub fn cons(h: CList, t: CList) -> CList {
        CList::Cons(Box::new(h), Box::new(t))
    }

    fn take_children(&mut self, out: &mut Vec<CList>) {
        if let CList::Cons(h, t) = self {
            out.push(std::mem::replace(&mut **h, CList::Atom(Nat::zero())));
            out.push(std::mem::replace(&mut **t, CList::Atom(Nat::zero())));
        }
    }
}

impl Drop for CList {
    fn drop(&mut self) {
        let mut stack = Vec::new();
        self.take_children(&mut stack);
        while let Some(mut c) = stack.pop() {
            c.take_children(&mut stack);
        }
    }
}

impl fmt::Display for CList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        enum Tok<'a> {
            Node(&'a CList, bool),
            Text(&'static str),
        }
        let mut stack = vec![Tok::Node(self, false)];
        while let Some(tok) = stack.pop() {
            match tok {
                Tok::Text(s) => f.write_str(s)?,
                Tok::Node(c, paren) => {
                    if paren {
                        f.write_str("(")?;
                        stack.push(Tok::Text(")"));
                    }
                    match c {
                        CList::Atom(n) => write!(f, "Atom {n}")?,
                        CList::Cons(h, t) => {
                            f.write_str("Cons ")?;
                            stack.push(Tok::Node(t, true));
                            stack.push(Tok::Text(" "));
                            stack.push(Tok::Node(h, true));
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

pub fn nat2cons(n: &Nat) -> Result<CList> {
    unfold(
        n,
        |m| {
            Ok(if !m.bit(0) {
                Step::Leaf(CList::Atom(m >> 1u32))
            } else {
                let (h, t) = pepis_unpair(&(m >> 1u32));
                Step::Branch(vec![h, t])
            })
        },
        |mut cs| {
            let t = cs.pop().expect("two children");
            let h = cs.pop().expect("two children");
            CList::cons(h, t)
        },
    )
}

pub fn cons2nat(c: &CList) -> Result<Nat> {
    enum Task<'a> {
        Visit(&'a CList),
        Combine,
    }
    let mut tasks = vec![Task::Visit(c)];
    let mut values: Vec<Nat> = Vec::new();
    let mut nodes = 0usize;
    while let Some(task) = tasks.pop() {
        match task {
            Task::Visit(CList::Atom(a)) => values.push(a << 1u32),
            Task::Visit(CList::Cons(h, t)) => {
                nodes += 1;
                if nodes > NODE_BUDGET {
                    return Err(Error::NonTerminating(NODE_BUDGET));
                }
                tasks.push(Task::Combine);
                tasks.push(Task::Visit(t));
                tasks.push(Task::Visit(h));
            }
            Task::Combine => {
                let t = values.pop().expect("tail value");
                let h = values.pop().expect("head value");
                values.push((pepis_pair(&(h, t))? << 1u32) + 1u32);
            }
        }
    }
    Ok(values.pop().expect("root value"))
}

pub fn clist() -> Encoder<CList> {
    Encoder::via("clist", Iso::new(cons2nat, nat2cons), &nat())
}
