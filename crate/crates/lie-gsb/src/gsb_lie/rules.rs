//! Indexed relation sets, normal s-words and reduction.

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use crate::commutative::{Field, FieldScalar, YMonomial};
use crate::freelie::{LieElement, Monomial};
use crate::lyndon::{is_alsw, special_bracketing, Side, XWord};

use super::GsbError;

/// Which relation is used when several can reduce a leading monomial.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Policy {
    /// Smallest rule index, then leftmost occurrence.
    #[default]
    FirstMatch,
    /// Rule with the greatest leading monomial, then smallest index, then
    /// leftmost occurrence.
    GreatestLeading,
}

/// One step `alpha * beta * [a s b]` of a reduction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Step {
    pub rule: usize,
    pub a: XWord,
    pub b: XWord,
    pub beta: YMonomial,
    pub alpha: FieldScalar,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionTrace {
    pub steps: Vec<Step>,
    pub remainder: LieElement,
    /// False if some step's leading monomial was not below the supplied bound.
    pub bound_respected: bool,
}

impl ReductionTrace {
    pub fn is_trivial(&self) -> bool {
        self.remainder.is_zero() && self.bound_respected
    }
}

type NormalKey = (usize, XWord, XWord);

/// A k-monic relation set with its leading words indexed for divisor search.
pub struct RuleSet {
    field: Field,
    rules: Vec<LieElement>,
    leads: Vec<Monomial>,
    by_word: HashMap<XWord, Vec<usize>>,
    enabled: Vec<bool>,
    normal_cache: RwLock<HashMap<NormalKey, Arc<LieElement>>>,
}

impl Clone for RuleSet {
    fn clone(&self) -> Self {
        RuleSet {
            field: self.field,
            rules: self.rules.clone(),
            leads: self.leads.clone(),
            by_word: self.by_word.clone(),
            enabled: self.enabled.clone(),
            normal_cache: RwLock::new(self.normal_cache.read().expect("cache lock").clone()),
        }
    }
}

impl std::fmt::Debug for RuleSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_list().entries(&self.rules).finish()
    }
}

impl RuleSet {
    pub fn new(field: Field) -> Self {
        RuleSet {
            field,
            rules: Vec::new(),
            leads: Vec::new(),
            by_word: HashMap::new(),
            enabled: Vec::new(),
            normal_cache: RwLock::new(HashMap::new()),
        }
    }

    /// Builds a rule set from k-monic nonzero elements, in order.
    pub fn from_elements(field: Field, elems: &[LieElement]) -> Result<Self, GsbError> {
        let mut rs = RuleSet::new(field);
        for e in elems {
            rs.push(e.clone())?;
        }
        Ok(rs)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    /// Appends a relation, which must be k-monic and nonzero.
    pub fn push(&mut self, e: LieElement) -> Result<usize, GsbError> {
        let (lead, c) = e.leading().ok_or(GsbError::ZeroRelation)?;
        if !c.is_one() {
            return Err(GsbError::NotKMonic);
        }
        let id = self.rules.len();
        self.by_word.entry(lead.x.clone()).or_default().push(id);
        self.leads.push(lead.clone());
        self.rules.push(e);
        self.enabled.push(true);
        Ok(id)
    }

    /// Disabled rules are skipped by divisor search.
    pub fn set_enabled(&mut self, id: usize, on: bool) {
        self.enabled[id] = on;
    }

    pub fn is_enabled(&self, id: usize) -> bool {
        self.enabled[id]
    }

    /// Replaces rule `id` by `e`, which must have the same leading term.
    pub fn replace(&mut self, id: usize, e: LieElement) {
        debug_assert_eq!(e.leading().map(|(m, _)| m), Some(&self.leads[id]));
        self.rules[id] = e;
        self.normal_cache
            .get_mut()
            .expect("cache lock")
            .retain(|k, _| k.0 != id);
    }

    pub fn len(&self) -> usize {
        self.rules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rules.is_empty()
    }

    pub fn rule(&self, id: usize) -> &LieElement {
        &self.rules[id]
    }

    pub fn lead(&self, id: usize) -> &Monomial {
        &self.leads[id]
    }

    pub fn rules(&self) -> &[LieElement] {
        &self.rules
    }

    pub fn into_elements(self) -> Vec<LieElement> {
        self.rules
    }

    /// The normal s-word `[a s b]` for rule `id`, memoized.
    pub fn normal_word(&self, id: usize, a: &[u32], b: &[u32]) -> Result<Arc<LieElement>, GsbError> {
        let key = (id, XWord::from(a), XWord::from(b));
        if let Some(v) = self.normal_cache.read().expect("cache lock").get(&key) {
            return Ok(v.clone());
        }
        let v = Arc::new(normal_s_word(&self.rules[id], a, b)?);
        self.normal_cache
            .write()
            .expect("cache lock")
            .insert(key, v.clone());
        Ok(v)
    }

    /// A rule and occurrence position reducing the monomial `m`, if any.
    pub fn find_divisor(&self, m: &Monomial, policy: Policy) -> Option<(usize, usize)> {
        let x = &m.x;
        let mut best: Option<(usize, usize)> = None;
        for i in 0..x.len() {
            for j in i + 1..=x.len() {
                let Some(ids) = self.by_word.get(&x[i..j]) else {
                    continue;
                };
                for &id in ids {
                    if !self.enabled[id] || !self.leads[id].y.divides(&m.y) {
                        continue;
                    }
                    let better = match best {
                        None => true,
                        Some((bid, bpos)) => match policy {
                            Policy::FirstMatch => (id, i) < (bid, bpos),
                            Policy::GreatestLeading => {
                                let o = self.leads[id].cmp(&self.leads[bid]);
                                o.is_gt() || (o.is_eq() && (id, i) < (bid, bpos))
                            }
                        },
                    };
                    if better {
                        best = Some((id, i));
                    }
                }
            }
        }
        best
    }

    pub fn is_reducible(&self, m: &Monomial) -> bool {
        self.find_divisor(m, Policy::FirstMatch).is_some()
    }

    /// Full reduction of `h`: leading terms are rewritten while possible, and
    /// irreducible leading terms move to the remainder.
    pub fn reduce(&self, h: &LieElement, policy: Policy, bound: Option<&Monomial>) -> ReductionTrace {
        self.reduce_impl(h, policy, bound, true)
    }

    /// The remainder of [`RuleSet::reduce`] without recording steps.
    pub fn remainder(&self, h: &LieElement, policy: Policy) -> LieElement {
        self.reduce_impl(h, policy, None, false).remainder
    }

    fn reduce_impl(
        &self,
        h: &LieElement,
        policy: Policy,
        bound: Option<&Monomial>,
        record: bool,
    ) -> ReductionTrace {
        let mut rest = h.clone();
        let mut rem = LieElement::zero(self.field);
        let mut steps = Vec::new();
        let mut bound_respected = true;
        while let Some((m, c)) = rest.leading().map(|(m, c)| (m.clone(), c.clone())) {
            match self.find_divisor(&m, policy) {
                Some((id, pos)) => {
                    let lead = &self.leads[id];
                    let a = &m.x[..pos];
                    let b = &m.x[pos + lead.x.len()..];
                    let beta = m.y.div(&lead.y).expect("divisibility checked");
                    let nw = self
                        .normal_word(id, a, b)
                        .expect("subwords of an ALSW give ALSW contexts");
                    if let Some(w) = bound {
                        bound_respected &= m < *w;
                    }
                    rest.add_scaled(&nw, &-&c, &beta);
                    debug_assert!(rest.coefficient(&m).is_none());
                    if record {
                        steps.push(Step {
                            rule: id,
                            a: XWord::from(a),
                            b: XWord::from(b),
                            beta,
                            alpha: c,
                        });
                    }
                }
                None => {
                    let (m, c) = rest.pop_leading().expect("nonzero");
                    rem.add_term_unchecked(m, c);
                }
            }
        }
        ReductionTrace {
            steps,
            remainder: rem,
            bound_respected,
        }
    }

    /// Rebuilds `sum alpha * beta * [a s b] + remainder` from a trace.
    pub fn replay(&self, trace: &ReductionTrace) -> LieElement {
        let mut out = trace.remainder.clone();
        for s in &trace.steps {
            let nw = self.normal_word(s.rule, &s.a, &s.b).expect("recorded context");
            out.add_scaled(&nw, &s.alpha, &s.beta);
        }
        out
    }
}

/// Normal s-word `[a s b]`: the special bracketing of `a s̄^X b` relative to
/// `s̄^X`, with `s` substituted for the marked subtree.
pub fn normal_s_word(s: &LieElement, a: &[u32], b: &[u32]) -> Result<LieElement, GsbError> {
    let (lead, _) = s.leading().ok_or(GsbError::ZeroRelation)?;
    let w = XWord::concat3(a, &lead.x, b);
    if !is_alsw(&w) {
        return Err(GsbError::ContextNotAlsw(w));
    }
    if a.is_empty() && b.is_empty() {
        return Ok(s.clone());
    }
    let marked = special_bracketing(&w, &lead.x, a.len()).map_err(GsbError::Lyndon)?;
    let path = &marked.marks[0];
    // Every subtree off the marked path is an NLSW, hence a basis element.
    let mut cur = s.clone();
    for d in (0..path.len()).rev() {
        let node = marked.tree.at(&path[..d]).expect("path prefix");
        let crate::lyndon::LieTree::Node(l, r) = node else {
            unreachable!("inner path node");
        };
        cur = match path[d] {
            Side::Left => cur.bracket_basis_right(&r.foliage()),
            Side::Right => cur.bracket_basis_left(&l.foliage()),
        };
    }
    Ok(cur)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn y(pairs: &[(u32, u32)]) -> YMonomial {
        YMonomial::from_pairs(pairs.iter().copied())
    }

    fn term(f: Field, c: i64, ys: &[(u32, u32)], x: &[u32]) -> LieElement {
        LieElement::monomial(f, f.from_i64(c), Monomial::new(y(ys), XWord::from(x))).unwrap()
    }

    fn cohn_s(f: Field) -> LieElement {
        term(f, 1, &[(3, 1)], &[3])
            .add(&term(f, 1, &[(2, 1)], &[2]))
            .add(&term(f, 1, &[(1, 1)], &[1]))
    }

    #[test]
    fn trivial_context_is_identity() {
        let f = Field::Prime(2);
        assert_eq!(normal_s_word(&cohn_s(f), &[], &[]).unwrap(), cohn_s(f));
    }

    #[test]
    fn cohn_relation_times_x2() {
        let f = Field::Prime(2);
        let nw = normal_s_word(&cohn_s(f), &[], &[2]).unwrap();
        let expected = term(f, 1, &[(3, 1)], &[3, 2]).add(&term(f, 1, &[(1, 1)], &[2, 1]));
        assert_eq!(nw, expected);
        assert_eq!(
            nw.leading().unwrap().0,
            &Monomial::new(y(&[(3, 1)]), XWord::from([3, 2]))
        );
    }

    #[test]
    fn shirshov_relation_left_context() {
        // s = [x2,x1] - x11, a = x2; the X letters are named by index.
        let f = Field::Prime(2);
        let s = term(f, 1, &[], &[2, 1]).sub(&term(f, 1, &[], &[11]));
        let nw = normal_s_word(&s, &[2], &[]).unwrap();
        let expected = term(f, 1, &[], &[2, 2, 1]).sub(&LieElement::generator(f, 2).bracket(&term(f, 1, &[], &[11])));
        assert_eq!(nw, expected);
    }

    #[test]
    fn context_must_be_alsw() {
        let f = Field::Rational;
        assert!(matches!(
            normal_s_word(&cohn_s(f), &[1], &[]),
            Err(GsbError::ContextNotAlsw(_))
        ));
    }

    #[test]
    fn irreducible_input_is_its_own_remainder() {
        let f = Field::Prime(2);
        let mut base = vec![cohn_s(f)];
        for i in 1..=3 {
            for j in 1..=3 {
                base.push(term(f, 1, &[(i, 2)], &[j]));
            }
        }
        let rs = RuleSet::from_elements(f, &base).unwrap();
        let h = term(f, 1, &[(2, 1)], &[3, 2]).add(&term(f, 1, &[(1, 1)], &[3, 1]));
        let t = rs.reduce(&h, Policy::FirstMatch, None);
        assert_eq!(t.remainder, h);
        assert!(t.steps.is_empty());
    }

    #[test]
    fn reduction_replays() {
        let f = Field::Prime(2);
        let mut base = vec![cohn_s(f)];
        for i in 1..=3 {
            for j in 1..=3 {
                base.push(term(f, 1, &[(i, 2)], &[j]));
            }
        }
        let rs = RuleSet::from_elements(f, &base).unwrap();
        let h = term(f, 1, &[(3, 2), (1, 1)], &[3, 2, 1]).add(&term(f, 1, &[(3, 1)], &[3]));
        for policy in [Policy::FirstMatch, Policy::GreatestLeading] {
            let t = rs.reduce(&h, policy, None);
            assert!(!t.steps.is_empty());
            assert_eq!(rs.replay(&t), h);
        }
        let zero = rs.reduce(&LieElement::zero(f), Policy::FirstMatch, None);
        assert!(zero.remainder.is_zero() && zero.steps.is_empty());
    }
}
