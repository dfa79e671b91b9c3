//! DNA bases as base-4 digits, strands with polarity, and double helices.

use crate::basic::nat;
use crate::error::{Error, Result};
use crate::iso::{Encoder, Iso};
use crate::numutil::{from_base, to_base, to_usize, Nat};
use num_integer::Integer;
use num_traits::Zero;
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Base {
    Adenine,
    Cytosine,
    Guanine,
    Thymine,
}

use Base::*;

impl Base {
    pub const ALL: [Base; 4] = [Adenine, Cytosine, Guanine, Thymine];

    pub fn code(self) -> u8 {
        self as u8
    }

    pub fn from_code(c: usize) -> Option<Base> {
        Base::ALL.get(c).copied()
    }

    pub fn complement(self) -> Base {
        match self {
            Adenine => Thymine,
            Cytosine => Guanine,
            Guanine => Cytosine,
            Thymine => Adenine,
        }
    }

    pub fn letter(self) -> char {
        ['A', 'C', 'G', 'T'][self as usize]
    }

    pub fn from_letter(c: char) -> Option<Base> {
        match c.to_ascii_uppercase() {
            'A' => Some(Adenine),
            'C' => Some(Cytosine),
            'G' => Some(Guanine),
            'T' => Some(Thymine),
            _ => None,
        }
    }
}

impl fmt::Display for Base {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

pub type Dna = Vec<Base>;

/// The letters `ACGT`, least significant base first.
pub fn dna_to_string(xs: &[Base]) -> String {
    xs.iter().map(|b| b.letter()).collect()
}

pub fn dna_from_str(s: &str) -> Result<Dna> {
    s.chars()
        .enumerate()
        .map(|(i, c)| {
            Base::from_letter(c).ok_or_else(|| Error::Parse {
                offset: i,
                message: format!("`{c}` is not a DNA base"),
            })
        })
        .collect()
}

fn four() -> Nat {
    Nat::from(4u8)
}

/// Canonical sequences: `[Adenine]`, or a last base other than Adenine.
pub fn is_canonical(xs: &[Base]) -> bool {
    xs == [Adenine] || xs.last().is_some_and(|b| *b != Adenine)
}

pub fn dna2nat(xs: &[Base]) -> Result<Nat> {
    if !is_canonical(xs) {
        return Err(Error::NonCanonical(dna_to_string(xs)));
    }
    let ds: Vec<Nat> = xs.iter().map(|b| Nat::from(b.code())).collect();
    from_base(&four(), &ds)
}

pub fn nat2dna(n: &Nat) -> Dna {
    to_base(&four(), n)
        .expect("base 4")
        .iter()
        .map(|d| Base::from_code(to_usize(d, "digit").expect("digit below 4")).expect("digit below 4"))
        .collect()
}

/// Base-4 digits, least significant first.
pub fn dna() -> Encoder<Dna> {
    Encoder::via("dna", Iso::new(|xs: &Dna| dna2nat(xs), |n: &Nat| Ok(nat2dna(n))), &nat())
}

pub fn dna_complement(xs: &[Base]) -> Dna {
    xs.iter().map(|b| b.complement()).collect()
}

pub fn dna_reverse(xs: &[Base]) -> Dna {
    xs.iter().rev().copied().collect()
}

pub fn dna_comprev(xs: &[Base]) -> Dna {
    dna_complement(&dna_reverse(xs))
}

/// The base-4 value of any sequence; trailing Adenines are ignored.
pub fn dna_value(xs: &[Base]) -> Nat {
    xs.iter()
        .rev()
        .fold(Nat::zero(), |acc, b| acc * 4u32 + b.code())
}

/// A sequence operation seen as a map on naturals.
///
/// Reversal and complement can leave trailing Adenines, which the numeric
/// reading drops, so the induced maps are not injective: reversal sends
/// both 1 (`C`) and 4 (`AC`) to 1.
pub fn conjugate(op: impl Fn(&[Base]) -> Dna, n: &Nat) -> Nat {
    dna_value(&op(&nat2dna(n)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Polarity {
    P3x5,
    P5x3,
}

impl FromStr for Polarity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "P3x5" => Ok(Polarity::P3x5),
            "P5x3" => Ok(Polarity::P5x3),
            _ => Err(Error::Parse {
                offset: 0,
                message: format!("`{s}` is not a polarity"),
            }),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DnaStrand {
    pub polarity: Polarity,
    pub bases: Dna,
}

impl fmt::Display for DnaStrand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DNAstrand {:?} [", self.polarity)?;
        for (i, b) in self.bases.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{b}")?;
        }
        f.write_str("]")
    }
}

/// `P3x5` strands are even, `P5x3` strands odd.
pub fn strand2nat(s: &DnaStrand) -> Result<Nat> {
    let x = dna2nat(&s.bases)?;
    match s.polarity {
        Polarity::P3x5 => Ok(x * 2u32),
        Polarity::P5x3 if x.is_zero() => Err(Error::ZeroP5x3),
        Polarity::P5x3 => Ok(x * 2u32 - 1u32),
    }
}

pub fn nat2strand(n: &Nat) -> DnaStrand {
    if n.is_even() {
        DnaStrand {
            polarity: Polarity::P3x5,
            bases: nat2dna(&(n / 2u32)),
        }
    } else {
        DnaStrand {
            polarity: Polarity::P5x3,
            bases: nat2dna(&((n + 1u32) / 2u32)),
        }
    }
}

pub fn dna_strand() -> Encoder<DnaStrand> {
    Encoder::via(
        "dnaStrand",
        Iso::new(|s: &DnaStrand| strand2nat(s), |n: &Nat| Ok(nat2strand(n))),
        &nat(),
    )
}

pub fn dna_up(xs: &[Base]) -> DnaStrand {
    DnaStrand {
        polarity: Polarity::P5x3,
        bases: xs.to_vec(),
    }
}

pub fn dna_down(xs: &[Base]) -> DnaStrand {
    DnaStrand {
        polarity: Polarity::P3x5,
        bases: dna_complement(xs),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DoubleHelix {
    pub up: DnaStrand,
    pub down: DnaStrand,
}

impl fmt::Display for DoubleHelix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DoubleHelix ({}) ({})", self.up, self.down)
    }
}

pub fn dna_double_helix(xs: &[Base]) -> DoubleHelix {
    DoubleHelix {
        up: dna_up(xs),
        down: dna_down(xs),
    }
}
