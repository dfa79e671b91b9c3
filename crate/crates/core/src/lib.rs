//! Bijective encodings between natural numbers and common data types.

pub mod basic;
pub mod bdd;
pub mod codes;
pub mod dna;
pub mod hylo;
pub mod error;
pub mod goodstein;
pub mod graphs;
pub mod iso;
pub mod mset_arith;
pub mod numutil;
pub mod pairing;
pub mod perm;
pub mod registry;
pub mod toolkit;
pub mod value;

pub use error::{Error, Result};
pub use iso::{Encoder, Iso, Root};
pub use numutil::{Int, Nat};
