//! Name-indexed encoders over [`Value`], for conversions chosen at run time.

use crate::error::{Error, Result};
use crate::iso::{Encoder, Root};
use crate::value::{Value, ValueKind};
use crate::{basic, bdd, codes, dna, goodstein, graphs, hylo, pairing, perm};
use std::sync::Arc;

type FromFn = Arc<dyn Fn(&Value) -> Result<Root> + Send + Sync>;
type ToFn = Arc<dyn Fn(&Root) -> Result<Value> + Send + Sync>;

/// An encoder whose values are dynamically typed.
#[derive(Clone)]
pub struct AnyEncoder {
    name: String,
    kind: ValueKind,
    from: FromFn,
    to: ToFn,
}

impl std::fmt::Debug for AnyEncoder {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("AnyEncoder")
            .field("name", &self.name)
            .field("kind", &self.kind)
            .finish()
    }
}

impl AnyEncoder {
    fn wrap<A: 'static>(
        enc: Encoder<A>,
        kind: ValueKind,
        inj: fn(A) -> Value,
        prj: fn(&Value) -> Option<&A>,
    ) -> Self {
        let name = enc.name().to_string();
        let enc = Arc::new(enc);
        let e2 = Arc::clone(&enc);
        let n2 = name.clone();
        AnyEncoder {
            name,
            kind,
            from: Arc::new(move |v| {
                let a = prj(v).ok_or_else(|| Error::ShapeMismatch {
                    expected: n2.clone(),
                })?;
                e2.from(a)
            }),
            to: Arc::new(move |r| enc.to(r).map(inj)),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// The shape of values this encoder accepts and produces.
    pub fn kind(&self) -> ValueKind {
        self.kind
    }

    pub fn from(&self, v: &Value) -> Result<Root> {
        (self.from)(v)
    }

    pub fn to(&self, r: &Root) -> Result<Value> {
        (self.to)(r)
    }
}

// The shape the built-in encoders are registered with.
macro_rules! any {
    ($enc:expr, $variant:ident) => {
        AnyEncoder::wrap($enc, ValueKind::$variant, Value::$variant, |v| match v {
            Value::$variant(x) => Some(x),
            _ => None,
        })
    };
}

/// Every registered name; `hb:<k>` stands for a family and appears here
/// through two representatives.
pub const NAMES: &[&str] = &[
    "fun", "set", "mset", "nat", "pmset", "bits", "funbits", "z", "string", "dyadic",
    "hfs", "hff", "hffs", "hfm", "hfpm", "uhfs", "uhff", "iuhfs", "iuhff",
    "perm", "hfp", "hb:2", "hb:3",
    "nat2", "pnat2", "rpnat2", "set2", "set2b", "mset2", "z2", "mz2", "clist",
    "bmset", "bmset2", "hfbm", "hfbm2", "fun2", "hff2",
    "bdd", "pbdd", "rbdd",
    "digraph", "graph", "mdigraph", "mgraph", "hypergraph", "sat", "gmodel",
    "pars", "hff_pars", "hff2_pars", "hfs_pars", "hfm_pars", "hfpm_pars", "hfp_pars",
    "bhfm_pars", "bhfm2_pars", "elias", "sfun",
    "dna", "dnaStrand",
];

pub fn names() -> &'static [&'static str] {
    NAMES
}

fn param(name: &str, prefix: &str) -> Result<Option<u64>> {
    match name.strip_prefix(prefix).and_then(|r| r.strip_prefix(':')) {
        None => Ok(None),
        Some(k) => k
            .parse::<u64>()
            .map(Some)
            .map_err(|_| Error::UnknownEncoder(name.to_string())),
    }
}

/// Finds an encoder by name. Besides the fixed names, `hb:<k>` selects
/// hereditary base `k`, and `uhfs:<u>` / `uhff:<u>` choose the urelement bound.
pub fn lookup(name: &str) -> Result<AnyEncoder> {
    if let Some(k) = param(name, "hb")? {
        return Ok(any!(goodstein::hb(k)?, HbForest));
    }
    if let Some(u) = param(name, "uhfs")? {
        return Ok(any!(hylo::uhfs(u), UTree));
    }
    if let Some(u) = param(name, "uhff")? {
        return Ok(any!(hylo::uhff(u), UTree));
    }
    let e = match name {
        "fun" => any!(basic::fun(), NatSeq),
        "set" => any!(basic::set(), NatSeq),
        "mset" => any!(basic::mset(), NatSeq),
        "nat" => any!(basic::nat(), Nat),
        "pmset" => any!(basic::pmset(), NatSeq),
        "bits" => any!(basic::bits(), NatSeq),
        "funbits" => any!(basic::funbits(), FunBits),
        "z" => any!(basic::z(), ZInt),
        "string" => any!(basic::string(), Text),
        "dyadic" => any!(basic::dyadic(), Rational),
        "hfs" => any!(hylo::hfs(), HTree),
        "hff" => any!(hylo::hff(), HTree),
        "hffs" => any!(hylo::hffs(), HTree),
        "hfm" => any!(hylo::hfm(), HTree),
        "hfpm" => any!(hylo::hfpm(), HTree),
        "uhfs" => any!(hylo::uhfs(hylo::DEFAULT_ULIMIT), UTree),
        "uhff" => any!(hylo::uhff(hylo::DEFAULT_ULIMIT), UTree),
        "iuhfs" => any!(hylo::iuhfs(), UTree),
        "iuhff" => any!(hylo::iuhff(), UTree),
        "perm" => any!(perm::perm(), Perm),
        "hfp" => any!(perm::hfp(), HTree),
        "nat2" => any!(pairing::nat2(), NatPair),
        "pnat2" => any!(pairing::pnat2(), NatPair),
        "rpnat2" => any!(pairing::rpnat2(), NatPair),
        "set2" => any!(pairing::set2(), NatSeq),
        "set2b" => any!(pairing::set2b(), NatSeq),
        "mset2" => any!(pairing::mset2(), NatPair),
        "z2" => any!(pairing::z2(), ZPair),
        "mz2" => any!(pairing::mz2(), ZPair),
        "clist" => any!(pairing::clist(), CList),
        "bmset" => any!(pairing::bmset(), NatSeq),
        "bmset2" => any!(pairing::bmset2(), NatSeq),
        "hfbm" => any!(pairing::hfbm(), HTree),
        "hfbm2" => any!(pairing::hfbm2(), HTree),
        "fun2" => any!(pairing::fun2(), NatSeq),
        "hff2" => any!(pairing::hff2(), HTree),
        "bdd" => any!(bdd::bdd(), Bdd),
        "pbdd" => any!(bdd::pbdd(), Bdd),
        "rbdd" => any!(bdd::rbdd(), Bdd),
        "digraph" => any!(graphs::digraph(), NatPairSeq),
        "mdigraph" => any!(graphs::mdigraph(), NatPairSeq),
        "graph" => any!(graphs::graph(), NatSeqSeq),
        "mgraph" => any!(graphs::mgraph(), NatSeqSeq),
        "hypergraph" => any!(graphs::hypergraph(), NatSeqSeq),
        "sat" => any!(graphs::sat(), ZSeqSeq),
        "gmodel" => any!(graphs::gmodel(), GModel),
        "pars" => any!(codes::pars(), Text),
        "hff_pars" => any!(codes::hff_pars(), NatSeq),
        "hff2_pars" => any!(codes::hff2_pars(), NatSeq),
        "hfs_pars" => any!(codes::hfs_pars(), NatSeq),
        "hfm_pars" => any!(codes::hfm_pars(), NatSeq),
        "hfpm_pars" => any!(codes::hfpm_pars(), NatSeq),
        "hfp_pars" => any!(codes::hfp_pars(), NatSeq),
        "bhfm_pars" => any!(codes::bhfm_pars(), NatSeq),
        "bhfm2_pars" => any!(codes::bhfm2_pars(), NatSeq),
        "elias" => any!(codes::elias(), NatSeq),
        "sfun" => any!(codes::sfun(), NatSeq),
        "dna" => any!(dna::dna(), Dna),
        "dnaStrand" => any!(dna::dna_strand(), DnaStrand),
        _ => return Err(Error::UnknownEncoder(name.to_string())),
    };
    Ok(e)
}

/// `x`, given in `source`'s representation, re-expressed through `target`.
pub fn convert_any(target: &AnyEncoder, source: &AnyEncoder, x: &Value) -> Result<Value> {
    target.to(&source.from(x)?)
}
