//! Leading-word rewriting in k[Y]<X>.

use std::collections::HashMap;

use crate::commutative::{Field, FieldScalar, YMonomial};
use crate::freelie::{AssocElement, Monomial};
use crate::gsb_lie::{GsbError, Policy};
use crate::lyndon::XWord;

/// One step `alpha * beta * a s b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AssocStep {
    pub rule: usize,
    pub a: XWord,
    pub b: XWord,
    pub beta: YMonomial,
    pub alpha: FieldScalar,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AssocTrace {
    pub steps: Vec<AssocStep>,
    pub remainder: AssocElement,
}

#[derive(Clone, Debug)]
pub struct AssocRuleSet {
    field: Field,
    rules: Vec<AssocElement>,
    leads: Vec<Monomial>,
    by_word: HashMap<XWord, Vec<usize>>,
    enabled: Vec<bool>,
}

impl AssocRuleSet {
    pub fn new(field: Field) -> Self {
        AssocRuleSet {
            field,
            rules: Vec::new(),
            leads: Vec::new(),
            by_word: HashMap::new(),
            enabled: Vec::new(),
        }
    }

    /// Builds a rule set, making each element k-monic.
    pub fn from_elements(field: Field, elems: &[AssocElement]) -> Result<Self, GsbError> {
        let mut rs = AssocRuleSet::new(field);
        for e in elems {
            rs.push(e.make_k_monic().map_err(|_| GsbError::ZeroRelation)?)?;
        }
        Ok(rs)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn push(&mut self, e: AssocElement) -> Result<usize, GsbError> {
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

    pub fn len(&self) -> usize {
        self.rules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rules.is_empty()
    }

    pub fn rule(&self, id: usize) -> &AssocElement {
        &self.rules[id]
    }

    pub fn lead(&self, id: usize) -> &Monomial {
        &self.leads[id]
    }

    pub fn rules(&self) -> &[AssocElement] {
        &self.rules
    }

    pub fn set_enabled(&mut self, id: usize, on: bool) {
        self.enabled[id] = on;
    }

    pub fn is_enabled(&self, id: usize) -> bool {
        self.enabled[id]
    }

    pub fn replace(&mut self, id: usize, e: AssocElement) {
        debug_assert_eq!(e.leading().map(|(m, _)| m), Some(&self.leads[id]));
        self.rules[id] = e;
    }

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

    pub fn reduce(&self, h: &AssocElement, policy: Policy) -> AssocTrace {
        self.reduce_impl(h, policy, true)
    }

    pub fn remainder(&self, h: &AssocElement, policy: Policy) -> AssocElement {
        self.reduce_impl(h, policy, false).remainder
    }

    fn reduce_impl(&self, h: &AssocElement, policy: Policy, record: bool) -> AssocTrace {
        let mut rest = h.clone();
        let mut rem = AssocElement::zero(self.field);
        let mut steps = Vec::new();
        while let Some((m, c)) = rest.pop_leading() {
            let Some((id, pos)) = self.find_divisor(&m, policy) else {
                rem.add_scaled(&AssocElement::monomial(self.field, c, m), &self.field.one(), &YMonomial::one());
                continue;
            };
            let lead = &self.leads[id];
            let a = &m.x[..pos];
            let b = &m.x[pos + lead.x.len()..];
            let beta = m.y.div(&lead.y).expect("divisibility checked");
            // The leading term was popped; subtract the rest of c*beta*a*s*b.
            let mut sub = self.rules[id].sandwich(&-&c, &beta, a, b);
            sub.pop_leading();
            rest.add_scaled(&sub, &self.field.one(), &YMonomial::one());
            if record {
                steps.push(AssocStep {
                    rule: id,
                    a: XWord::from(a),
                    b: XWord::from(b),
                    beta,
                    alpha: c,
                });
            }
        }
        AssocTrace {
            steps,
            remainder: rem,
        }
    }

    pub fn replay(&self, trace: &AssocTrace) -> AssocElement {
        let mut out = trace.remainder.clone();
        for s in &trace.steps {
            out.add_scaled(
                &self.rules[s.rule].sandwich(&s.alpha, &s.beta, &s.a, &s.b),
                &self.field.one(),
                &YMonomial::one(),
            );
        }
        out
    }
}

/// Reduces `h` modulo `s` with the first-match policy.
pub fn assoc_reduce(h: &AssocElement, s: &[AssocElement]) -> Result<AssocTrace, GsbError> {
    let rs = AssocRuleSet::from_elements(h.field(), s)?;
    Ok(rs.reduce(h, Policy::FirstMatch))
}
