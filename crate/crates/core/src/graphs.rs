//! Graphs, multigraphs, hypergraphs, SAT problems and graph models, plus
//! DOT text for the trees and graphs behind an encoding.

use crate::basic::{fun, fun2nat, fun2set, nat, nat2bits, nat2fun, nat2mset, nat2pmset, nat2set,
    nat2z, set, set2fun, set2nat, z2nat};
use crate::error::{Error, Result};
use crate::iso::{convert, Encoder, Iso};
use crate::numutil::{to_usize, Int, Nat};
use crate::pairing::{bitpair, bitunpair, fnat2mset, pepis_unpair, to_tuple, unord_pair,
    unord_unpair, Nat2};
use crate::perm::nat2perm;
use num_traits::{Signed, Zero};
use std::collections::HashSet;
use std::fmt::Write;

fn digraph2set(ps: &[Nat2]) -> Vec<Nat> {
    ps.iter().map(bitpair).collect()
}

fn set2digraph(ns: &[Nat]) -> Vec<Nat2> {
    ns.iter().map(bitunpair).collect()
}

fn distinct(ns: &[Nat]) -> Result<()> {
    let mut seen = HashSet::new();
    if ns.iter().all(|n| seen.insert(n)) {
        Ok(())
    } else {
        Err(Error::DuplicateEdge)
    }
}

/// Directed graphs without isolated vertices: a set of bitpair codes.
pub fn digraph() -> Encoder<Vec<Nat2>> {
    Encoder::via(
        "digraph",
        Iso::new(
            |ps: &Vec<Nat2>| {
                let ns = digraph2set(ps);
                distinct(&ns)?;
                Ok(ns)
            },
            |ns: &Vec<Nat>| Ok(set2digraph(ns)),
        ),
        &set(),
    )
}

/// Directed multigraphs: the edge order matters and repeats are allowed.
pub fn mdigraph() -> Encoder<Vec<Nat2>> {
    Encoder::via(
        "mdigraph",
        Iso::new(|ps: &Vec<Nat2>| Ok(digraph2set(ps)), |ns: &Vec<Nat>| Ok(set2digraph(ns))),
        &fun(),
    )
}

fn graph2set(es: &[Vec<Nat>]) -> Result<Vec<Nat>> {
    es.iter().map(|e| unord_pair(e)).collect()
}

fn set2graph(ns: &[Nat]) -> Vec<Vec<Nat>> {
    ns.iter().map(unord_unpair).collect()
}

/// Undirected graphs: edges are two distinct endpoints in either order.
pub fn graph() -> Encoder<Vec<Vec<Nat>>> {
    Encoder::via(
        "graph",
        Iso::new(
            |es: &Vec<Vec<Nat>>| {
                let ns = graph2set(es)?;
                distinct(&ns)?;
                Ok(ns)
            },
            |ns: &Vec<Nat>| Ok(set2graph(ns)),
        ),
        &set(),
    )
}

pub fn mgraph() -> Encoder<Vec<Vec<Nat>>> {
    Encoder::via(
        "mgraph",
        Iso::new(|es: &Vec<Vec<Nat>>| graph2set(es), |ns: &Vec<Nat>| Ok(set2graph(ns))),
        &fun(),
    )
}

/// Sets of finite sets.
pub fn hypergraph() -> Encoder<Vec<Vec<Nat>>> {
    Encoder::via(
        "hypergraph",
        Iso::new(
            |es: &Vec<Vec<Nat>>| es.iter().map(|e| set2nat(e)).collect(),
            |ns: &Vec<Nat>| Ok(ns.iter().map(nat2set).collect()),
        ),
        &set(),
    )
}

fn shift0(z: Int) -> Int {
    if z.is_negative() {
        z
    } else {
        z + 1
    }
}

fn literal2nat(z: &Int) -> Result<Nat> {
    if z.is_zero() {
        return Err(Error::ZeroLiteral);
    }
    let back = if z.is_negative() { z.clone() } else { z - 1 };
    Ok(z2nat(&back))
}

/// Conjunctions of disjunctions of nonzero literals.
pub fn sat() -> Encoder<Vec<Vec<Int>>> {
    Encoder::via(
        "sat",
        Iso::new(
            |cs: &Vec<Vec<Int>>| {
                cs.iter()
                    .map(|c| set2nat(&c.iter().map(literal2nat).collect::<Result<Vec<_>>>()?))
                    .collect()
            },
            |ns: &Vec<Nat>| {
                Ok(ns
                    .iter()
                    .map(|n| nat2set(n).iter().map(|x| shift0(nat2z(x))).collect())
                    .collect())
            },
        ),
        &set(),
    )
}

pub type GModel = (Vec<Nat>, Nat);

pub fn gmodel2nat(g: &GModel) -> Result<Nat> {
    let mut ns = vec![g.1.clone()];
    ns.extend(set2fun(&g.0)?);
    Ok(fun2nat(&ns)? - 1u32)
}

pub fn nat2gmodel(n: &Nat) -> GModel {
    let mut ns = nat2fun(&(n + 1u32));
    let m = ns.remove(0);
    (fun2set(&ns), m)
}

/// Pairs of a finite set and a natural.
pub fn gmodel() -> Encoder<GModel> {
    Encoder::via(
        "gmodel",
        Iso::new(|g: &GModel| gmodel2nat(g), |n: &Nat| Ok(nat2gmodel(n))),
        &nat(),
    )
}

/// A labeled edge `(from, to, position)`.
pub type Edge = (Nat, Nat, usize);

/// Branches of the decomposition of `n` by an unpairing function; naturals
/// below 2 are leaves.
pub fn unpairing_edges(f: impl Fn(&Nat) -> Nat2, n: &Nat) -> Vec<Edge> {
    expand(n, |m| {
        if *m < Nat::from(2u8) {
            return Ok(vec![]);
        }
        let (a, b) = f(m);
        Ok(vec![a, b])
    })
    .expect("unpairing cannot fail")
}

/// `k`-way branches of the decomposition of `n` by `to_tuple k`.
pub fn untupling_edges(k: usize, n: &Nat) -> Result<Vec<Edge>> {
    expand(n, |m| {
        if *m < Nat::from(2u8) {
            return Ok(vec![]);
        }
        to_tuple(k, m)
    })
}

/// The hereditary unfolding of `n` under a sequence-valued transformer.
pub fn transformer_edges(f: impl Fn(&Nat) -> Result<Vec<Nat>>, n: &Nat) -> Result<Vec<Edge>> {
    expand(n, |m| if m.is_zero() { Ok(vec![]) } else { f(m) })
}

// Duplicate triples are dropped, keeping first occurrences; a node seen
// before contributes nothing new, so it is expanded once.
fn expand(n: &Nat, children: impl Fn(&Nat) -> Result<Vec<Nat>>) -> Result<Vec<Edge>> {
    let mut out = Vec::new();
    let mut seen_edges = HashSet::new();
    let mut expanded = HashSet::new();
    let mut stack = vec![n.clone()];
    while let Some(m) = stack.pop() {
        if !expanded.insert(m.clone()) {
            continue;
        }
        let cs = children(&m)?;
        for (i, c) in cs.iter().enumerate() {
            let e = (m.clone(), c.clone(), i);
            if seen_edges.insert(e.clone()) {
                out.push(e);
            }
        }
        stack.extend(cs.into_iter().rev());
    }
    Ok(out)
}

/// Sorted distinct endpoints.
pub fn fvertices(es: &[Edge]) -> Vec<Nat> {
    let mut vs: Vec<Nat> = es.iter().flat_map(|(a, b, _)| [a.clone(), b.clone()]).collect();
    vs.sort();
    vs.dedup();
    vs
}

/// DOT text for labeled edges; `labeled` controls whether positions are shown.
pub fn edges_to_dot(es: &[Edge], labeled: bool) -> String {
    let mut s = String::from("digraph iso {\n");
    for v in fvertices(es) {
        writeln!(s, "  {v};").expect("writing to a String");
    }
    for (a, b, i) in es {
        if labeled {
            writeln!(s, "  {a} -> {b} [label=\"{i}\"];").expect("writing to a String");
        } else {
            writeln!(s, "  {a} -> {b};").expect("writing to a String");
        }
    }
    s.push_str("}\n");
    s
}

/// DOT text for a list of ordered pairs; repeated pairs stay as parallel edges.
pub fn pairs_to_dot(ps: &[Nat2]) -> String {
    let es: Vec<Edge> = ps.iter().map(|(a, b)| (a.clone(), b.clone(), 0)).collect();
    edges_to_dot(&es, false)
}

/// Names accepted by [`dot`].
pub const DOT_KINDS: &[&str] = &[
    "fun", "set", "mset", "pmset", "perm", "bmset", "bits", "digraph", "mdigraph", "bitunpair",
    "pepis_unpair", "untuple",
];

fn arity(kind: &str, args: &[Nat], n: usize) -> Result<()> {
    if args.len() == n {
        Ok(())
    } else {
        Err(Error::ShapeMismatch {
            expected: format!("{kind} with {n} argument(s)"),
        })
    }
}

/// DOT text for one of the [`DOT_KINDS`]. `untuple` takes `[k, n]`, the rest `[n]`.
pub fn dot(kind: &str, args: &[Nat]) -> Result<String> {
    let fixed = |f: fn(&Nat) -> Vec<Nat>| move |m: &Nat| Ok(f(m));
    let expected = if kind == "untuple" { 2 } else { 1 };
    if !DOT_KINDS.contains(&kind) {
        return Err(Error::UnknownKind(kind.to_string()));
    }
    arity(kind, args, expected)?;
    let n = &args[expected - 1];
    Ok(match kind {
        "fun" => edges_to_dot(&transformer_edges(fixed(nat2fun), n)?, true),
        "set" => edges_to_dot(&transformer_edges(fixed(nat2set), n)?, false),
        "mset" => edges_to_dot(&transformer_edges(fixed(nat2mset), n)?, true),
        "pmset" => edges_to_dot(&transformer_edges(nat2pmset, n)?, true),
        "perm" => edges_to_dot(&transformer_edges(|m| Ok(nat2perm(m).to_nats()), n)?, true),
        "bmset" => edges_to_dot(&transformer_edges(|m| fnat2mset(bitunpair, m), n)?, true),
        "bits" => edges_to_dot(&transformer_edges(fixed(nat2bits), n)?, true),
        "digraph" => pairs_to_dot(&convert(&digraph(), &nat(), n)?),
        "mdigraph" => pairs_to_dot(&convert(&mdigraph(), &nat(), n)?),
        "bitunpair" => edges_to_dot(&unpairing_edges(bitunpair, n), true),
        "pepis_unpair" => edges_to_dot(&unpairing_edges(pepis_unpair, n), true),
        "untuple" => {
            let k = to_usize(&args[0], "tuple width")?;
            if k == 0 {
                return Err(Error::EmptyTuple);
            }
            edges_to_dot(&untupling_edges(k, n)?, true)
        }
        _ => unreachable!("kind checked above"),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numutil::{big, nats};
    use proptest::prelude::*;

    fn pairs(ps: &[(u64, u64)]) -> Vec<Nat2> {
        ps.iter().map(|&(a, b)| (big(a), big(b))).collect()
    }

    fn sets(ss: &[&[u64]]) -> Vec<Vec<Nat>> {
        ss.iter().map(|s| nats(s)).collect()
    }

    fn ints(ss: &[&[i64]]) -> Vec<Vec<Int>> {
        ss.iter().map(|s| s.iter().map(|&z| Int::from(z)).collect()).collect()
    }

    fn edges(es: &[(u64, u64, usize)]) -> Vec<Edge> {
        es.iter().map(|&(a, b, i)| (big(a), big(b), i)).collect()
    }

    #[test]
    fn directed() {
        let d = pairs(&[(1, 1), (2, 0), (2, 1), (3, 1), (0, 2), (1, 2), (0, 3)]);
        assert_eq!(convert(&digraph(), &nat(), &big(2008)).unwrap(), d);
        assert_eq!(convert(&nat(), &digraph(), &d).unwrap(), big(2008));
        let mut shuffled = d.clone();
        shuffled.reverse();
        assert_eq!(convert(&nat(), &digraph(), &shuffled).unwrap(), big(2008));
        assert_eq!(convert(&nat(), &digraph(), &vec![]).unwrap(), big(0));
        let dup = pairs(&[(1, 1), (1, 1)]);
        assert_eq!(convert(&nat(), &digraph(), &dup), Err(Error::DuplicateEdge));

        let m = pairs(&[(1, 1), (0, 0), (1, 0), (0, 0), (0, 0), (0, 0), (0, 0)]);
        assert_eq!(convert(&mdigraph(), &nat(), &big(2008)).unwrap(), m);
        assert_eq!(convert(&nat(), &mdigraph(), &m).unwrap(), big(2008));
        let a = convert(&nat(), &mdigraph(), &pairs(&[(1, 0), (0, 1)])).unwrap();
        let b = convert(&nat(), &mdigraph(), &pairs(&[(0, 1), (1, 0)])).unwrap();
        assert_ne!(a, b);
    }

    #[test]
    fn undirected() {
        let g = sets(&[&[1, 3], &[2, 3], &[2, 4], &[3, 5], &[0, 3], &[1, 4], &[0, 4]]);
        assert_eq!(convert(&graph(), &nat(), &big(2008)).unwrap(), g);
        assert_eq!(convert(&nat(), &graph(), &g).unwrap(), big(2008));
        let flipped = sets(&[&[1, 3], &[3, 2], &[2, 4], &[5, 3], &[0, 3], &[4, 1], &[0, 4]]);
        assert_eq!(convert(&nat(), &graph(), &flipped).unwrap(), big(2008));
        assert_eq!(
            convert(&nat(), &graph(), &sets(&[&[2, 2]])),
            Err(Error::NotTwoDistinct)
        );
        assert_eq!(
            convert(&nat(), &graph(), &sets(&[&[1, 2], &[2, 1]])),
            Err(Error::DuplicateEdge)
        );
        let m = sets(&[&[1, 3], &[0, 1], &[1, 2], &[0, 1], &[0, 1], &[0, 1], &[0, 1]]);
        assert_eq!(convert(&mgraph(), &nat(), &big(2008)).unwrap(), m);
        assert_eq!(convert(&nat(), &mgraph(), &m).unwrap(), big(2008));
    }

    #[test]
    fn hypergraphs() {
        let h = sets(&[&[0, 1], &[2], &[1, 2], &[0, 1, 2], &[3], &[0, 3], &[1, 3]]);
        assert_eq!(convert(&hypergraph(), &nat(), &big(2008)).unwrap(), h);
        assert_eq!(convert(&nat(), &hypergraph(), &h).unwrap(), big(2008));
        assert_eq!(convert(&nat(), &hypergraph(), &vec![]).unwrap(), big(0));
        let h42 = convert(&hypergraph(), &nat(), &big(42)).unwrap();
        assert_eq!(convert(&nat(), &hypergraph(), &h42).unwrap(), big(42));
        assert!(matches!(
            convert(&nat(), &hypergraph(), &sets(&[&[1], &[1]])),
            Err(Error::LawViolation { .. })
        ));
    }

    #[test]
    fn sat_problems() {
        let s = ints(&[&[1, -1], &[2], &[-1, 2], &[1, -1, 2], &[-2], &[1, -2], &[-1, -2]]);
        assert_eq!(convert(&sat(), &nat(), &big(2008)).unwrap(), s);
        assert_eq!(convert(&nat(), &sat(), &s).unwrap(), big(2008));
        assert_eq!(convert(&nat(), &sat(), &vec![]).unwrap(), big(0));
        assert_eq!(convert(&nat(), &sat(), &ints(&[&[1, 0]])), Err(Error::ZeroLiteral));
    }

    #[test]
    fn graph_models() {
        let g = convert(&gmodel(), &nat(), &big(42)).unwrap();
        assert_eq!(g, (nats(&[0, 2, 4]), big(0)));
        assert_eq!(convert(&nat(), &gmodel(), &g).unwrap(), big(42));
        assert_eq!(gmodel2nat(&(vec![], big(0))).unwrap(), big(0));
        for n in 0..300 {
            assert_eq!(gmodel2nat(&nat2gmodel(&big(n))).unwrap(), big(n));
        }
    }

    #[test]
    fn decomposition_edges() {
        assert_eq!(
            unpairing_edges(bitunpair, &big(42)),
            edges(&[(42, 0, 0), (42, 7, 1), (7, 3, 0), (7, 1, 1), (3, 1, 0), (3, 1, 1)])
        );
        assert_eq!(
            unpairing_edges(pepis_unpair, &big(42)),
            edges(&[(42, 0, 0), (42, 21, 1), (21, 1, 0), (21, 5, 1), (5, 1, 0), (5, 1, 1)])
        );
        assert!(unpairing_edges(bitunpair, &big(1)).is_empty());
        assert_eq!(
            untupling_edges(3, &big(2008)).unwrap(),
            edges(&[
                (2008, 14, 0),
                (2008, 14, 1),
                (2008, 4, 2),
                (14, 2, 0),
                (14, 1, 1),
                (14, 1, 2),
                (2, 0, 0),
                (2, 1, 1),
                (2, 0, 2),
                (4, 0, 0),
                (4, 0, 1),
                (4, 1, 2),
            ])
        );
        // a width-1 tuple is the number itself; the loop is cut after one edge
        assert_eq!(untupling_edges(1, &big(5)).unwrap(), edges(&[(5, 5, 0)]));
    }

    #[test]
    fn dot_text() {
        let s = dot("bitunpair", &[big(42)]).unwrap();
        assert!(s.starts_with("digraph iso {\n  0;\n  1;\n  3;\n  7;\n  42;\n"));
        assert!(s.contains("  42 -> 7 [label=\"1\"];\n"));
        assert!(s.ends_with("}\n"));
        assert_eq!(dot("bitunpair", &[big(42)]).unwrap(), s);
        let set_dot = dot("set", &[big(5)]).unwrap();
        assert_eq!(
            set_dot,
            "digraph iso {\n  0;\n  1;\n  2;\n  5;\n  5 -> 0;\n  5 -> 2;\n  2 -> 1;\n  1 -> 0;\n}\n"
        );
        for kind in DOT_KINDS {
            let args = if *kind == "untuple" { vec![big(3), big(2008)] } else { vec![big(2008)] };
            let a = dot(kind, &args).unwrap();
            assert_eq!(a, dot(kind, &args).unwrap());
            assert!(a.starts_with("digraph iso {\n"));
        }
        assert_eq!(dot("tree", &[big(1)]), Err(Error::UnknownKind("tree".into())));
        assert!(matches!(dot("untuple", &[big(1)]), Err(Error::ShapeMismatch { .. })));
    }

    fn rt<A: Clone + PartialEq + std::fmt::Debug + 'static>(e: &Encoder<A>, n: &Nat) {
        let v = convert(e, &nat(), n).unwrap();
        assert_eq!(convert(&nat(), e, &v).unwrap(), *n, "{}", e.name());
    }

    proptest! {
        #[test]
        fn roundtrips(n in 0u64..(1 << 50)) {
            let n = big(n);
            rt(&digraph(), &n);
            rt(&mdigraph(), &n);
            rt(&graph(), &n);
            rt(&mgraph(), &n);
            rt(&hypergraph(), &n);
            rt(&sat(), &n);
            rt(&gmodel(), &n);
        }

        #[test]
        fn graph_swap_invariance(n in 0u64..(1 << 40)) {
            let g = convert(&graph(), &nat(), &big(n)).unwrap();
            let swapped: Vec<Vec<Nat>> = g.iter().map(|e| vec![e[1].clone(), e[0].clone()]).collect();
            prop_assert_eq!(convert(&nat(), &graph(), &swapped).unwrap(), big(n));
        }
    }
}
