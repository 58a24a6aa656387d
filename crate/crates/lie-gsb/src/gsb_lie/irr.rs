//! Irr(S) enumeration, normal forms and the homogeneous word problem.

use crate::commutative::YMonomial;
use crate::freelie::{LieElement, Monomial, TNMonomial};
use crate::lyndon::enumerate_alsw;

use super::complete::{shirshov_complete, CompletionOptions};
use super::rules::{Policy, RuleSet};
use super::{Caps, GsbError};

/// Y-monomials in generators `0..count` of degree at most `max_deg`, sorted.
pub fn y_monomials(count: u32, max_deg: u32) -> Vec<YMonomial> {
    fn go(g: u32, count: u32, left: u32, cur: &mut Vec<(u32, u32)>, out: &mut Vec<YMonomial>) {
        if g == count {
            out.push(YMonomial::from_pairs(cur.iter().copied()));
            return;
        }
        for e in 0..=left {
            if e > 0 {
                cur.push((g, e));
            }
            go(g + 1, count, left - e, cur, out);
            if e > 0 {
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(0, count, max_deg, &mut Vec::new(), &mut out);
    out.sort();
    out
}

fn rule_set(s: &[LieElement]) -> Result<Option<RuleSet>, GsbError> {
    let Some(first) = s.first() else {
        return Ok(None);
    };
    let mut rs = RuleSet::new(first.field());
    for e in s {
        rs.push(e.make_k_monic()?)?;
    }
    Ok(Some(rs))
}

/// T_N monomials within `caps` whose T_A image is not reducible by `s`, in
/// increasing order.
pub fn irr_basis(s: &[LieElement], alphabet: u32, y_count: u32, caps: Caps) -> Result<Vec<TNMonomial>, GsbError> {
    let rs = rule_set(s)?;
    let ys = y_monomials(y_count, caps.max_y);
    let mut out = Vec::new();
    for w in enumerate_alsw(alphabet, caps.max_x) {
        for y in &ys {
            let m = Monomial::new(y.clone(), w.clone());
            if rs.as_ref().is_some_and(|rs| rs.is_reducible(&m)) {
                continue;
            }
            out.push(m.to_tn().expect("ALSW"));
        }
    }
    Ok(out)
}

/// Remainder of `e` modulo `s`; `s` should be a (capped) GSB.
pub fn nf(e: &LieElement, s: &[LieElement], caps: Caps) -> Result<LieElement, GsbError> {
    if !caps.admits(e.x_degree(), e.y_degree()) {
        return Err(GsbError::CapsExceeded);
    }
    Ok(match rule_set(s)? {
        Some(rs) => rs.remainder(e, Policy::FirstMatch),
        None => e.clone(),
    })
}

/// Decides `e ∈ Id(S)` for X-homogeneous, Y-free `s` by completing up to the
/// X-degree of `e`.
pub fn word_problem_homogeneous(e: &LieElement, s: &[LieElement], alphabet: u32) -> Result<bool, GsbError> {
    if e.is_zero() {
        return Ok(true);
    }
    if s.is_empty() {
        return Ok(false);
    }
    let caps = Caps::new(e.x_degree(), 0);
    let opts = CompletionOptions {
        threads: 1,
        ..CompletionOptions::default()
    };
    let done = shirshov_complete(e.field(), s, alphabet, caps, &opts)?;
    Ok(nf(e, &done.basis, caps)?.is_zero())
}
