//! Independent oracles shared by the integration tests and the acceptance
//! harness. Nothing here calls into the rewriting code it is checking.
#![allow(dead_code)]

pub mod criteria;

use std::collections::BTreeMap;
use std::path::PathBuf;

use lie_gsb::commutative::Field;
use lie_gsb::freelie::{AssocElement, LieElement};
use lie_gsb::gsb_lie::{Caps, CompletionOptions, LiePresentation};
use lie_gsb::lyndon::{LieTree, XWord};
use lie_gsb::text::{parse_lie, parse_presentation, Names};

pub fn crate_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

pub fn presentation_path(name: &str) -> String {
    crate_dir().join("presentations").join(format!("{name}.gsb")).display().to_string()
}

pub fn load(name: &str) -> LiePresentation {
    let text = std::fs::read_to_string(presentation_path(name)).expect("presentation file");
    parse_presentation(&text).expect("valid presentation")
}

pub fn parse(text: &str) -> LiePresentation {
    parse_presentation(text).expect("valid presentation")
}

pub fn lie(p: &LiePresentation, s: &str) -> LieElement {
    parse_lie(s, &Names::of(p)).expect("valid element")
}

pub fn serial() -> CompletionOptions {
    CompletionOptions {
        threads: 1,
        ..CompletionOptions::default()
    }
}

pub fn threads(n: usize) -> CompletionOptions {
    CompletionOptions {
        threads: n,
        ..CompletionOptions::default()
    }
}

pub fn monic(e: &LieElement) -> LieElement {
    e.make_k_monic().expect("nonzero")
}

/// Sorted k-monic forms, for set comparisons.
pub fn monic_set(es: &[LieElement]) -> Vec<LieElement> {
    let mut v: Vec<LieElement> = es.iter().map(monic).collect();
    v.sort_by(|a, b| a.leading().map(|t| t.0).cmp(&b.leading().map(|t| t.0)));
    v
}

pub fn assoc_monic_set(es: &[AssocElement]) -> Vec<AssocElement> {
    let mut v: Vec<AssocElement> = es.iter().map(|e| e.make_k_monic().expect("nonzero")).collect();
    v.sort_by(|a, b| a.leading().map(|t| t.0).cmp(&b.leading().map(|t| t.0)));
    v
}

pub fn caps(x: usize, y: u32) -> Caps {
    Caps::new(x, y)
}

fn mobius(n: u64) -> i64 {
    let (mut n, mut mu, mut p) = (n, 1i64, 2u64);
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            mu = -mu;
        }
        p += 1;
    }
    if n > 1 {
        mu = -mu;
    }
    mu
}

/// Number of primitive necklaces of length `n` over `q` letters.
pub fn witt(q: u64, n: u64) -> u64 {
    let s: i64 = (1..=n).filter(|d| n.is_multiple_of(*d)).map(|d| mobius(n / d) * (q as i64).pow(d as u32)).sum();
    (s / n as i64) as u64
}

pub fn all_words(q: u32, n: usize) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|w| {
                (0..q).map(move |x| {
                    let mut v = w.clone();
                    v.push(x);
                    v
                })
            })
            .collect();
    }
    out
}

/// Strictly greater than every proper rotation.
pub fn rotation_oracle(w: &[u32]) -> bool {
    !w.is_empty() && (1..w.len()).all(|i| w > [&w[i..], &w[..i]].concat().as_slice())
}

/// Integer combination of words.
pub type Poly = BTreeMap<Vec<u32>, i64>;

fn add_into(acc: &mut Poly, p: &Poly, c: i64) {
    for (w, v) in p {
        let e = acc.entry(w.clone()).or_insert(0);
        *e += c * v;
        if *e == 0 {
            acc.remove(w);
        }
    }
}

pub fn mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::new();
    for (u, cu) in a {
        for (v, cv) in b {
            let mut w = u.clone();
            w.extend_from_slice(v);
            add_into(&mut out, &Poly::from([(w, 1)]), cu * cv);
        }
    }
    out
}

pub fn commutator(a: &Poly, b: &Poly) -> Poly {
    let mut out = mul(a, b);
    add_into(&mut out, &mul(b, a), -1);
    out
}

/// Associative expansion of a bracketed tree by `[a,b] = ab - ba`.
pub fn expand(t: &LieTree) -> Poly {
    match t {
        LieTree::Leaf(x) => Poly::from([(vec![*x], 1)]),
        LieTree::Node(l, r) => commutator(&expand(l), &expand(r)),
    }
}

/// The integer polynomial as an associative element over `field`.
pub fn to_assoc(field: Field, p: &Poly) -> AssocElement {
    let mut e = AssocElement::zero(field);
    for (w, c) in p {
        let term = AssocElement::word(field, XWord::from(w.as_slice()));
        e = e.add(&term.scale(&field.from_i64(*c)));
    }
    e
}

/// Rank over GF(2) of the given bit vectors.
pub fn gf2_rank(mut rows: Vec<u64>) -> usize {
    let mut rank = 0;
    for bit in 0..64 {
        let Some(i) = (rank..rows.len()).find(|&i| rows[i] >> bit & 1 == 1) else {
            continue;
        };
        rows.swap(rank, i);
        let pivot = rows[rank];
        for (j, r) in rows.iter_mut().enumerate() {
            if j != rank && *r >> bit & 1 == 1 {
                *r ^= pivot;
            }
        }
        rank += 1;
    }
    rank
}

/// Dimension of the degree-`d` component of the Lie ideal generated by
/// homogeneous `rels` in the free Lie algebra on two letters over GF(2),
/// computed inside the free associative algebra: the component is spanned
/// by `[..[[r, x_i1], x_i2] .., x_ik]`.
pub fn ideal_rank_gf2(rels: &[Poly], d: usize) -> usize {
    let reduce = |p: &Poly| -> Poly { p.iter().filter(|(_, c)| *c % 2 != 0).map(|(w, _)| (w.clone(), 1)).collect() };
    let gens: Vec<Poly> = (0..2).map(|x| Poly::from([(vec![x], 1)])).collect();
    let mut layer: Vec<Poly> = Vec::new();
    let mut span = Vec::new();
    for len in 1..=d {
        let mut next: Vec<Poly> = layer.iter().flat_map(|p| gens.iter().map(|g| reduce(&commutator(p, g)))).collect();
        next.extend(rels.iter().filter(|r| r.keys().next().map(Vec::len) == Some(len)).map(reduce));
        next.retain(|p| !p.is_empty());
        if len == d {
            span = next.clone();
        }
        layer = next;
    }
    let index = |w: &[u32]| w.iter().fold(0u64, |acc, &x| acc * 2 + x as u64);
    gf2_rank(span.iter().map(|p| p.keys().fold(0u64, |acc, w| acc | 1 << index(w))).collect())
}
