//! Dynamically typed values and their text syntax, so encoders can be picked
//! by name at run time.

use crate::basic::{Bit, FunBits, Rational};
use crate::bdd::{BTree, Bdd, MtTree, Mtbdd};
use crate::dna::{dna_from_str, dna_to_string, Dna, DnaStrand, Polarity};
use crate::error::{Error, Result};
use crate::goodstein::{HbForest, HbTree};
use crate::graphs::GModel;
use crate::hylo::{HTree, UTree};
use crate::numutil::{Int, Nat};
use crate::pairing::{CList, Nat2, Z2};
use crate::perm::Permutation;
use num_traits::{Signed, Zero};
use std::fmt::{self, Write};

/// The shape of a [`Value`]; parsing is directed by it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ValueKind {
    Nat,
    NatSeq,
    NatSeqSeq,
    NatPair,
    NatPairSeq,
    ZInt,
    ZPair,
    ZSeqSeq,
    Rational,
    Text,
    HTree,
    UTree,
    FunBits,
    HbForest,
    CList,
    Perm,
    Bdd,
    Mtbdd,
    Dna,
    DnaStrand,
    GModel,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Value {
    Nat(Nat),
    NatSeq(Vec<Nat>),
    NatSeqSeq(Vec<Vec<Nat>>),
    NatPair(Nat2),
    NatPairSeq(Vec<Nat2>),
    ZInt(Int),
    ZPair(Z2),
    ZSeqSeq(Vec<Vec<Int>>),
    Rational(Rational),
    Text(String),
    HTree(HTree),
    UTree(UTree),
    FunBits(FunBits),
    HbForest(HbForest),
    CList(CList),
    Perm(Permutation),
    Bdd(Bdd),
    Mtbdd(Mtbdd),
    Dna(Dna),
    DnaStrand(DnaStrand),
    GModel(GModel),
}

impl Value {
    pub fn kind(&self) -> ValueKind {
        match self {
            Value::Nat(_) => ValueKind::Nat,
            Value::NatSeq(_) => ValueKind::NatSeq,
            Value::NatSeqSeq(_) => ValueKind::NatSeqSeq,
            Value::NatPair(_) => ValueKind::NatPair,
            Value::NatPairSeq(_) => ValueKind::NatPairSeq,
            Value::ZInt(_) => ValueKind::ZInt,
            Value::ZPair(_) => ValueKind::ZPair,
            Value::ZSeqSeq(_) => ValueKind::ZSeqSeq,
            Value::Rational(_) => ValueKind::Rational,
            Value::Text(_) => ValueKind::Text,
            Value::HTree(_) => ValueKind::HTree,
            Value::UTree(_) => ValueKind::UTree,
            Value::FunBits(_) => ValueKind::FunBits,
            Value::HbForest(_) => ValueKind::HbForest,
            Value::CList(_) => ValueKind::CList,
            Value::Perm(_) => ValueKind::Perm,
            Value::Bdd(_) => ValueKind::Bdd,
            Value::Mtbdd(_) => ValueKind::Mtbdd,
            Value::Dna(_) => ValueKind::Dna,
            Value::DnaStrand(_) => ValueKind::DnaStrand,
            Value::GModel(_) => ValueKind::GModel,
        }
    }
}

fn seq<T>(f: &mut fmt::Formatter<'_>, xs: &[T], item: impl Fn(&mut fmt::Formatter<'_>, &T) -> fmt::Result) -> fmt::Result {
    f.write_str("[")?;
    for (i, x) in xs.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        item(f, x)?;
    }
    f.write_str("]")
}

fn plain<T: fmt::Display>(f: &mut fmt::Formatter<'_>, x: &T) -> fmt::Result {
    write!(f, "{x}")
}

fn pair<T: fmt::Display>(f: &mut fmt::Formatter<'_>, p: &(T, T)) -> fmt::Result {
    write!(f, "({},{})", p.0, p.1)
}

// iterative, so deep trees print without recursion
fn write_htree(f: &mut fmt::Formatter<'_>, t: &HTree) -> fmt::Result {
    enum Tok<'a> {
        Node(&'a HTree),
        Text(&'static str),
    }
    let mut stack = vec![Tok::Node(t)];
    while let Some(tok) = stack.pop() {
        match tok {
            Tok::Text(s) => f.write_str(s)?,
            Tok::Node(n) => {
                f.write_str("H[")?;
                stack.push(Tok::Text("]"));
                for (i, c) in n.0.iter().enumerate().rev() {
                    stack.push(Tok::Node(c));
                    if i > 0 {
                        stack.push(Tok::Text(","));
                    }
                }
            }
        }
    }
    Ok(())
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Nat(n) => write!(f, "{n}"),
            Value::NatSeq(ns) => seq(f, ns, plain),
            Value::NatSeqSeq(nss) => seq(f, nss, |f, ns| seq(f, ns, plain)),
            Value::NatPair(p) => pair(f, p),
            Value::NatPairSeq(ps) => seq(f, ps, pair),
            Value::ZInt(z) => write!(f, "{z}"),
            Value::ZPair(p) => pair(f, p),
            Value::ZSeqSeq(zss) => seq(f, zss, |f, zs| seq(f, zs, plain)),
            Value::Rational(r) => write!(f, "{}/{}", r.numer(), r.denom()),
            Value::Text(s) => f.write_str(&serde_json::to_string(s).map_err(|_| fmt::Error)?),
            Value::HTree(t) => write_htree(f, t),
            Value::UTree(t) => write!(f, "{t}"),
            Value::FunBits(b) => write!(f, "{b}"),
            Value::HbForest(ts) => seq(f, ts, plain),
            Value::CList(c) => write!(f, "{c}"),
            Value::Perm(p) => seq(f, p.as_slice(), plain),
            Value::Bdd(b) => write!(f, "{b}"),
            Value::Mtbdd(b) => write!(f, "{b}"),
            Value::Dna(d) => f.write_str(&dna_to_string(d)),
            Value::DnaStrand(s) => {
                let tag = match s.polarity {
                    Polarity::P5x3 => "5x3",
                    Polarity::P3x5 => "3x5",
                };
                write!(f, "{tag}:{}", dna_to_string(&s.bases))
            }
            Value::GModel((xs, m)) => {
                f.write_str("(")?;
                seq(f, xs, plain)?;
                write!(f, ",{m})")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(Int),
    Word(String),
    Sym(char),
}

// deep enough for any lawful diagram, forest or bounded tree
const MAX_NESTING: usize = 4096;

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

fn lex(s: &str) -> Result<Vec<(usize, Tok)>> {
    let cs: Vec<(usize, char)> = s.char_indices().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < cs.len() {
        let (off, c) = cs[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() || (c == '-' && cs.get(i + 1).is_some_and(|d| d.1.is_ascii_digit())) {
            let start = i;
            i += 1;
            while i < cs.len() && cs[i].1.is_ascii_digit() {
                i += 1;
            }
            let text: String = cs[start..i].iter().map(|p| p.1).collect();
            let n = text.parse::<Int>().map_err(|e| perr(off, e.to_string()))?;
            out.push((off, Tok::Num(n)));
        } else if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < cs.len() && (cs[i].1.is_alphanumeric() || cs[i].1 == '_') {
                i += 1;
            }
            out.push((off, Tok::Word(cs[start..i].iter().map(|p| p.1).collect())));
        } else if "()[],/".contains(c) {
            out.push((off, Tok::Sym(c)));
            i += 1;
        } else {
            return Err(perr(off, format!("unexpected character `{c}`")));
        }
    }
    Ok(out)
}

fn perr(offset: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        offset,
        message: message.into(),
    }
}

impl Parser {
    fn new(s: &str) -> Result<Self> {
        Ok(Parser {
            toks: lex(s)?,
            pos: 0,
            end: s.len(),
        })
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |t| t.0)
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.1)
    }

    fn next(&mut self, what: &str) -> Result<Tok> {
        let t = self
            .toks
            .get(self.pos)
            .map(|t| t.1.clone())
            .ok_or_else(|| perr(self.end, format!("expected {what}, found end of input")))?;
        self.pos += 1;
        Ok(t)
    }

    fn fail<T>(&self, what: &str) -> Result<T> {
        Err(perr(self.offset(), format!("expected {what}")))
    }

    fn sym(&mut self, c: char) -> Result<()> {
        let at = self.pos;
        match self.next(&format!("`{c}`"))? {
            Tok::Sym(d) if d == c => Ok(()),
            _ => {
                self.pos = at;
                self.fail(&format!("`{c}`"))
            }
        }
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn word(&mut self, w: &str) -> Result<()> {
        match self.peek() {
            Some(Tok::Word(x)) if x == w => {
                self.pos += 1;
                Ok(())
            }
            _ => self.fail(&format!("`{w}`")),
        }
    }

    fn is_word(&self, w: &str) -> bool {
        matches!(self.peek(), Some(Tok::Word(x)) if x == w)
    }

    fn int(&mut self) -> Result<Int> {
        match self.peek() {
            Some(Tok::Num(n)) => {
                let n = n.clone();
                self.pos += 1;
                Ok(n)
            }
            _ => self.fail("a number"),
        }
    }

    fn nat(&mut self) -> Result<Nat> {
        let at = self.offset();
        let n = self.int()?;
        if n.is_negative() {
            return Err(perr(at, "expected a natural number"));
        }
        Ok(n.magnitude().clone())
    }

    fn small(&mut self) -> Result<usize> {
        let at = self.offset();
        let n = self.nat()?;
        usize::try_from(&n).map_err(|_| perr(at, "number too large"))
    }

    fn list<T>(&mut self, mut item: impl FnMut(&mut Self) -> Result<T>) -> Result<Vec<T>> {
        self.sym('[')?;
        let mut out = Vec::new();
        if self.eat(']') {
            return Ok(out);
        }
        loop {
            out.push(item(self)?);
            if self.eat(']') {
                return Ok(out);
            }
            self.sym(',')?;
        }
    }

    fn pair<T>(&mut self, mut item: impl FnMut(&mut Self) -> Result<T>) -> Result<(T, T)> {
        self.sym('(')?;
        let a = item(self)?;
        self.sym(',')?;
        let b = item(self)?;
        self.sym(')')?;
        Ok((a, b))
    }

    fn done(&self) -> Result<()> {
        if self.pos < self.toks.len() {
            return Err(perr(self.offset(), "unexpected trailing input"));
        }
        Ok(())
    }

    fn htree(&mut self) -> Result<HTree> {
        let mut stack: Vec<Vec<HTree>> = Vec::new();
        loop {
            self.word("H")?;
            self.sym('[')?;
            if !self.eat(']') {
                stack.push(Vec::new());
                continue;
            }
            let mut node = HTree(vec![]);
            loop {
                let Some(kids) = stack.last_mut() else {
                    return Ok(node);
                };
                kids.push(node);
                if self.eat(',') {
                    break;
                }
                self.sym(']')?;
                node = HTree(stack.pop().expect("non-empty"));
            }
        }
    }

    fn utree(&mut self, depth: usize) -> Result<UTree> {
        if depth > MAX_NESTING {
            return self.fail("shallower nesting");
        }
        if self.is_word("A") {
            self.pos += 1;
            return Ok(UTree::A(self.nat()?));
        }
        self.word("F")?;
        Ok(UTree::F(self.list(|p| p.utree(depth + 1))?))
    }

    fn funbits(&mut self) -> Result<FunBits> {
        self.word("B")?;
        if self.is_word("E") {
            self.pos += 1;
            return Ok(FunBits(vec![]));
        }
        self.sym('(')?;
        let mut ds = Vec::new();
        loop {
            let d = match self.next("O or I")? {
                Tok::Word(w) if w == "O" => Bit::O,
                Tok::Word(w) if w == "I" => Bit::I,
                _ => {
                    self.pos -= 1;
                    return self.fail("O or I");
                }
            };
            ds.push(d);
            if self.is_word("E") {
                self.pos += 1;
                break;
            }
            self.sym('(')?;
        }
        for _ in 0..ds.len() {
            self.sym(')')?;
        }
        Ok(FunBits(ds))
    }

    fn hb_tree(&mut self, depth: usize) -> Result<HbTree> {
        if depth > MAX_NESTING {
            return self.fail("shallower nesting");
        }
        self.word("HB")?;
        let coeff = self.nat()?;
        let exps = self.list(|p| p.hb_tree(depth + 1))?;
        Ok(HbTree { coeff, exps })
    }

    fn clist(&mut self) -> Result<CList> {
        // frames hold the finished head of an open `Cons`, if any
        let mut stack: Vec<Option<CList>> = Vec::new();
        loop {
            let mut v = if self.is_word("Cons") {
                self.pos += 1;
                self.sym('(')?;
                stack.push(None);
                continue;
            } else {
                self.word("Atom")?;
                CList::Atom(self.nat()?)
            };
            loop {
                match stack.last_mut() {
                    None => return Ok(v),
                    Some(slot @ None) => {
                        self.sym(')')?;
                        *slot = Some(v);
                        self.sym('(')?;
                        break;
                    }
                    Some(Some(_)) => {
                        self.sym(')')?;
                        let h = stack.pop().flatten().expect("head is set");
                        v = CList::cons(h, v);
                    }
                }
            }
        }
    }

    fn btree_arg(&mut self, depth: usize) -> Result<BTree> {
        if depth > MAX_NESTING {
            return self.fail("shallower nesting");
        }
        if self.is_word("B0") {
            self.pos += 1;
            return Ok(BTree::B0);
        }
        if self.is_word("B1") {
            self.pos += 1;
            return Ok(BTree::B1);
        }
        self.sym('(')?;
        self.word("D")?;
        let v = self.small()?;
        let l = self.btree_arg(depth + 1)?;
        let r = self.btree_arg(depth + 1)?;
        self.sym(')')?;
        Ok(BTree::d(v, l, r))
    }

    fn bdd(&mut self) -> Result<Bdd> {
        self.word("BDD")?;
        let nvars = self.small()?;
        let root = self.btree_arg(0)?;
        Ok(Bdd { nvars, root })
    }

    fn mttree(&mut self, depth: usize) -> Result<MtTree> {
        if depth > MAX_NESTING {
            return self.fail("shallower nesting");
        }
        self.sym('(')?;
        let t = if self.is_word("L") {
            self.pos += 1;
            MtTree::L(self.nat()?)
        } else {
            self.word("M")?;
            let k = self.small()?;
            let l = self.mttree(depth + 1)?;
            let r = self.mttree(depth + 1)?;
            MtTree::M(k, Box::new(l), Box::new(r))
        };
        self.sym(')')?;
        Ok(t)
    }

    fn mtbdd(&mut self) -> Result<Mtbdd> {
        self.word("MTBDD")?;
        let mbits = self.small()?;
        let nvars = self.small()?;
        let root = self.mttree(0)?;
        Ok(Mtbdd { mbits, nvars, root })
    }

    fn rational(&mut self) -> Result<Rational> {
        let p = self.nat()?;
        let q = if self.eat('/') { self.nat()? } else { Nat::from(1u8) };
        if q.is_zero() {
            return self.fail("a nonzero denominator");
        }
        Ok(Rational::new(p, q))
    }
}

fn strand(s: &str) -> Result<DnaStrand> {
    let (tag, rest) = s
        .split_once(':')
        .ok_or_else(|| perr(0, "expected `5x3:` or `3x5:`"))?;
    let polarity = match tag {
        "5x3" => Polarity::P5x3,
        "3x5" => Polarity::P3x5,
        _ => return Err(perr(0, "expected `5x3:` or `3x5:`")),
    };
    let bases = dna_from_str(rest).map_err(|e| match e {
        Error::Parse { offset, message } => perr(offset + tag.len() + 1, message),
        other => other,
    })?;
    Ok(DnaStrand { polarity, bases })
}

/// Reads `text` as a value of the given shape.
pub fn parse_value(kind: ValueKind, text: &str) -> Result<Value> {
    let trimmed = text.trim();
    match kind {
        ValueKind::Text => {
            return serde_json::from_str::<String>(trimmed)
                .map(Value::Text)
                .map_err(|e| perr(e.column().saturating_sub(1), e.to_string()));
        }
        ValueKind::Dna => return dna_from_str(trimmed).map(Value::Dna),
        ValueKind::DnaStrand => return strand(trimmed).map(Value::DnaStrand),
        _ => {}
    }
    let mut p = Parser::new(trimmed)?;
    let v = match kind {
        ValueKind::Nat => Value::Nat(p.nat()?),
        ValueKind::NatSeq => Value::NatSeq(p.list(Parser::nat)?),
        ValueKind::NatSeqSeq => Value::NatSeqSeq(p.list(|p| p.list(Parser::nat))?),
        ValueKind::NatPair => Value::NatPair(p.pair(Parser::nat)?),
        ValueKind::NatPairSeq => Value::NatPairSeq(p.list(|p| p.pair(Parser::nat))?),
        ValueKind::ZInt => Value::ZInt(p.int()?),
        ValueKind::ZPair => Value::ZPair(p.pair(Parser::int)?),
        ValueKind::ZSeqSeq => Value::ZSeqSeq(p.list(|p| p.list(Parser::int))?),
        ValueKind::Rational => Value::Rational(p.rational()?),
        ValueKind::HTree => Value::HTree(p.htree()?),
        ValueKind::UTree => Value::UTree(p.utree(0)?),
        ValueKind::FunBits => Value::FunBits(p.funbits()?),
        ValueKind::HbForest => Value::HbForest(p.list(|p| p.hb_tree(0))?),
        ValueKind::CList => Value::CList(p.clist()?),
        ValueKind::Perm => {
            let ps = p.list(Parser::small)?;
            Value::Perm(Permutation::new(ps)?)
        }
        ValueKind::Bdd => Value::Bdd(p.bdd()?),
        ValueKind::Mtbdd => Value::Mtbdd(p.mtbdd()?),
        ValueKind::GModel => {
            p.sym('(')?;
            let xs = p.list(Parser::nat)?;
            p.sym(',')?;
            let m = p.nat()?;
            p.sym(')')?;
            Value::GModel((xs, m))
        }
        ValueKind::Text | ValueKind::Dna | ValueKind::DnaStrand => unreachable!("handled above"),
    };
    p.done()?;
    Ok(v)
}

/// Renders a value; the inverse of [`parse_value`] for its kind.
pub fn print_value(v: &Value) -> String {
    let mut s = String::new();
    write!(s, "{v}").expect("writing to a String");
    s
}
