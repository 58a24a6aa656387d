//! Inclusion, intersection, external and multiplication compositions.

use crate::commutative::YMonomial;
use crate::freelie::{LieElement, Monomial};
use crate::lyndon::{is_alsw, words_of_length, XWord};

use super::rules::RuleSet;
use super::{Caps, GsbError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CompositionKind {
    Inclusion,
    Intersection,
    External,
    Multiplication,
}

impl CompositionKind {
    pub fn name(self) -> &'static str {
        match self {
            CompositionKind::Inclusion => "inclusion",
            CompositionKind::Intersection => "intersection",
            CompositionKind::External => "external",
            CompositionKind::Multiplication => "multiplication",
        }
    }
}

/// A composition before its value is computed: kind, parent rule indices and
/// context words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompSpec {
    pub kind: CompositionKind,
    pub f: usize,
    pub g: usize,
    pub a: XWord,
    pub b: XWord,
    pub c: XWord,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompositionRecord {
    pub kind: CompositionKind,
    pub parents: (usize, usize),
    pub a: XWord,
    pub b: XWord,
    pub c: XWord,
    /// The ambiguity `w`; for multiplication compositions its X-part is the
    /// square `(a f̄ b)(a f̄ b)`, which is not an ALSW.
    pub w: Monomial,
    pub value: LieElement,
}

fn quotients(rs: &RuleSet, f: usize, g: usize) -> (YMonomial, YMonomial, YMonomial) {
    let (fy, gy) = (&rs.lead(f).y, &rs.lead(g).y);
    let l = fy.lcm(gy);
    let qf = l.div(fy).expect("lcm");
    let qg = l.div(gy).expect("lcm");
    (l, qf, qg)
}

impl CompSpec {
    /// The ambiguity `w` of this composition.
    pub fn bound(&self, rs: &RuleSet) -> Monomial {
        let fx = &rs.lead(self.f).x;
        let gx = &rs.lead(self.g).x;
        match self.kind {
            CompositionKind::Inclusion => Monomial::new(quotients(rs, self.f, self.g).0, fx.clone()),
            CompositionKind::Intersection => {
                Monomial::new(quotients(rs, self.f, self.g).0, fx.concat(&self.b))
            }
            CompositionKind::External => {
                let x = XWord::concat3(&self.a, fx, &self.b).concat(&XWord::concat3(gx, &self.c, &[]));
                Monomial::new(quotients(rs, self.f, self.g).0, x)
            }
            CompositionKind::Multiplication => {
                let u = XWord::concat3(&self.a, fx, &self.b);
                Monomial::new(rs.lead(self.f).y.clone(), u.concat(&u))
            }
        }
    }

    pub fn value(&self, rs: &RuleSet) -> Result<LieElement, GsbError> {
        let field = rs.field();
        let one = field.one();
        let minus = -&one;
        let e = XWord::empty();
        let fx = &rs.lead(self.f).x;
        let gx = &rs.lead(self.g).x;
        let mut out = LieElement::zero(field);
        match self.kind {
            CompositionKind::Inclusion => {
                let (_, qf, qg) = quotients(rs, self.f, self.g);
                out.add_scaled(rs.rule(self.f), &one, &qf);
                out.add_scaled(&*rs.normal_word(self.g, &self.a, &self.b)?, &minus, &qg);
            }
            CompositionKind::Intersection => {
                let (_, qf, qg) = quotients(rs, self.f, self.g);
                out.add_scaled(&*rs.normal_word(self.f, &e, &self.b)?, &one, &qf);
                out.add_scaled(&*rs.normal_word(self.g, &self.a, &e)?, &minus, &qg);
            }
            CompositionKind::External => {
                let (_, qf, qg) = quotients(rs, self.f, self.g);
                let right_of_f = XWord::concat3(&self.b, gx, &self.c);
                let left_of_g = XWord::concat3(&self.a, fx, &self.b);
                out.add_scaled(&*rs.normal_word(self.f, &self.a, &right_of_f)?, &one, &qf);
                out.add_scaled(&*rs.normal_word(self.g, &left_of_g, &self.c)?, &minus, &qg);
            }
            CompositionKind::Multiplication => {
                let u = XWord::concat3(&self.a, fx, &self.b);
                out = rs.normal_word(self.f, &self.a, &self.b)?.bracket_basis_left(&u);
            }
        }
        Ok(out)
    }

    pub fn record(&self, rs: &RuleSet) -> Result<CompositionRecord, GsbError> {
        Ok(CompositionRecord {
            kind: self.kind,
            parents: (self.f, self.g),
            a: self.a.clone(),
            b: self.b.clone(),
            c: self.c.clone(),
            w: self.bound(rs),
            value: self.value(rs)?,
        })
    }
}

/// All triples `(a, b, c)` of total length at most `extra`, in a fixed order.
fn context_triples(alphabet: u32, extra: usize) -> Vec<(XWord, XWord, XWord)> {
    let mut out = Vec::new();
    for len in 0..=extra {
        for z in words_of_length(alphabet, len) {
            for i in 0..=len {
                for j in i..=len {
                    out.push((z.slice(0, i), z.slice(i, j), z.slice(j, len)));
                }
            }
        }
    }
    out
}

fn context_pairs(alphabet: u32, extra: usize) -> Vec<(XWord, XWord)> {
    let mut out = Vec::new();
    for len in 0..=extra {
        for z in words_of_length(alphabet, len) {
            for i in 0..=len {
                out.push((z.slice(0, i), z.slice(i, len)));
            }
        }
    }
    out
}

/// Compositions of `rs` involving at least one rule with index `>= from`, in
/// deterministic order. External and multiplication compositions are bounded
/// by `caps`; inclusion and intersection compositions are finite and all
/// listed.
pub fn enumerate_specs(rs: &RuleSet, caps: Caps, alphabet: u32, from: usize) -> Vec<CompSpec> {
    let n = rs.len();
    let mut out = Vec::new();
    let half = caps.max_x.div_ceil(2);
    let e = XWord::empty;
    for f in 0..n {
        let lf = rs.lead(f);
        for g in 0..n {
            if f.max(g) < from {
                continue;
            }
            let lg = rs.lead(g);
            // Inclusion: ḡ^X inside f̄^X.
            for pos in lf.x.occurrences(&lg.x) {
                let a = lf.x.slice(0, pos);
                let b = lf.x.slice(pos + lg.x.len(), lf.x.len());
                if a.is_empty() && b.is_empty() && f >= g {
                    continue;
                }
                out.push(CompSpec {
                    kind: CompositionKind::Inclusion,
                    f,
                    g,
                    a,
                    b,
                    c: e(),
                });
            }
            // Intersection: a proper suffix of f̄^X is a proper prefix of ḡ^X.
            for k in 1..lf.x.len().min(lg.x.len()) {
                if lf.x[lf.x.len() - k..] == lg.x[..k] {
                    out.push(CompSpec {
                        kind: CompositionKind::Intersection,
                        f,
                        g,
                        a: lf.x.slice(0, lf.x.len() - k),
                        b: lg.x.slice(k, lg.x.len()),
                        c: e(),
                    });
                }
            }
            // External.
            let len = lf.x.len() + lg.x.len();
            if lf.y.is_coprime(&lg.y) || len > caps.max_x || lf.y.lcm(&lg.y).degree() > caps.max_y {
                continue;
            }
            for (a, b, c) in context_triples(alphabet, caps.max_x - len) {
                let w = XWord::concat3(&a, &lf.x, &b).concat(&XWord::concat3(&lg.x, &c, &[]));
                if is_alsw(&w) {
                    out.push(CompSpec {
                        kind: CompositionKind::External,
                        f,
                        g,
                        a,
                        b,
                        c,
                    });
                }
            }
        }
    }
    for f in from..n {
        let lf = rs.lead(f);
        if lf.y.is_one() || lf.x.len() > half {
            continue;
        }
        for (a, b) in context_pairs(alphabet, half - lf.x.len()) {
            if is_alsw(&XWord::concat3(&a, &lf.x, &b)) {
                out.push(CompSpec {
                    kind: CompositionKind::Multiplication,
                    f,
                    g: f,
                    a,
                    b,
                    c: e(),
                });
            }
        }
    }
    out
}

fn pair_set(f: &LieElement, g: &LieElement) -> Result<RuleSet, GsbError> {
    RuleSet::from_elements(f.field(), &[f.clone(), g.clone()])
}

fn lead_of(e: &LieElement) -> Result<Monomial, GsbError> {
    Ok(e.leading().ok_or(GsbError::ZeroRelation)?.0.clone())
}

/// `C1 = (L/f̄^Y) f - (L/ḡ^Y) [a g b]` where `f̄^X = a ḡ^X b`.
pub fn comp_inclusion(f: &LieElement, g: &LieElement, a: &[u32], b: &[u32]) -> Result<CompositionRecord, GsbError> {
    let (lf, lg) = (lead_of(f)?, lead_of(g)?);
    if XWord::concat3(a, &lg.x, b) != lf.x {
        return Err(GsbError::XPartMismatch);
    }
    let spec = CompSpec {
        kind: CompositionKind::Inclusion,
        f: 0,
        g: 1,
        a: XWord::from(a),
        b: XWord::from(b),
        c: XWord::empty(),
    };
    spec.record(&pair_set(f, g)?)
}

/// `C2 = (L/f̄^Y)[f b] - (L/ḡ^Y)[a g]` for the overlap of the given length.
pub fn comp_intersection(f: &LieElement, g: &LieElement, overlap_len: usize) -> Result<CompositionRecord, GsbError> {
    let (lf, lg) = (lead_of(f)?, lead_of(g)?);
    let k = overlap_len;
    if k == 0 || k >= lf.x.len() || k >= lg.x.len() || lf.x[lf.x.len() - k..] != lg.x[..k] {
        return Err(GsbError::NoOverlap);
    }
    let spec = CompSpec {
        kind: CompositionKind::Intersection,
        f: 0,
        g: 1,
        a: lf.x.slice(0, lf.x.len() - k),
        b: lg.x.slice(k, lg.x.len()),
        c: XWord::empty(),
    };
    spec.record(&pair_set(f, g)?)
}

/// `C3 = (L/f̄^Y)[a f b ḡ^X c] - (L/ḡ^Y)[a f̄^X b g c]`.
pub fn comp_external(
    f: &LieElement,
    g: &LieElement,
    a: &[u32],
    b: &[u32],
    c: &[u32],
) -> Result<CompositionRecord, GsbError> {
    let (lf, lg) = (lead_of(f)?, lead_of(g)?);
    if lf.y.is_coprime(&lg.y) {
        return Err(GsbError::CoprimeYParts);
    }
    let w = XWord::concat3(a, &lf.x, b).concat(&XWord::concat3(&lg.x, c, &[]));
    if !is_alsw(&w) {
        return Err(GsbError::WordNotAlsw(w));
    }
    let spec = CompSpec {
        kind: CompositionKind::External,
        f: 0,
        g: 1,
        a: XWord::from(a),
        b: XWord::from(b),
        c: XWord::from(c),
    };
    spec.record(&pair_set(f, g)?)
}

/// `C4 = [a f̄^X b][a f b]` for `f̄^Y != 1`.
pub fn comp_multiplication(f: &LieElement, a: &[u32], b: &[u32]) -> Result<CompositionRecord, GsbError> {
    let lf = lead_of(f)?;
    if lf.y.is_one() {
        return Err(GsbError::YPartTrivial);
    }
    let u = XWord::concat3(a, &lf.x, b);
    if !is_alsw(&u) {
        return Err(GsbError::ContextNotAlsw(u));
    }
    let spec = CompSpec {
        kind: CompositionKind::Multiplication,
        f: 0,
        g: 0,
        a: XWord::from(a),
        b: XWord::from(b),
        c: XWord::empty(),
    };
    spec.record(&RuleSet::from_elements(f.field(), std::slice::from_ref(f))?)
}

/// Every capped composition of `s`, whose elements must be k-monic.
pub fn enumerate_compositions(
    s: &[LieElement],
    caps: Caps,
    alphabet: u32,
) -> Result<Vec<CompositionRecord>, GsbError> {
    let Some(first) = s.first() else {
        return Ok(Vec::new());
    };
    let rs = RuleSet::from_elements(first.field(), s)?;
    enumerate_specs(&rs, caps, alphabet, 0)
        .iter()
        .map(|spec| spec.record(&rs))
        .collect()
}
