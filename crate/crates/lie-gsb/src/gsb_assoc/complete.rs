//! Compositions and capped completion in k[Y]<X>.

use crate::commutative::{Field, YMonomial};
use crate::freelie::AssocElement;
use crate::gsb_lie::complete::par_map;
use crate::gsb_lie::{Caps, CompletionOptions, GsbError, Policy};
use crate::lyndon::{words_of_length, XWord};

use super::rules::AssocRuleSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum AssocCompositionKind {
    Inclusion,
    Intersection,
    /// `f t ḡ^X` against `f̄^X t g` for leads with a common Y-factor.
    External,
    /// `x f` and `f x` for `f̄^Y != 1`.
    LeftMultiple,
    RightMultiple,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AssocCompSpec {
    pub kind: AssocCompositionKind,
    pub f: usize,
    pub g: usize,
    pub a: XWord,
    pub b: XWord,
}

impl AssocCompSpec {
    pub fn value(&self, rs: &AssocRuleSet) -> AssocElement {
        let field = rs.field();
        let one = field.one();
        let minus = -&one;
        let (lf, lg) = (rs.lead(self.f), rs.lead(self.g));
        let l = lf.y.lcm(&lg.y);
        let qf = l.div(&lf.y).expect("lcm");
        let qg = l.div(&lg.y).expect("lcm");
        let (f, g) = (rs.rule(self.f), rs.rule(self.g));
        let e: &[u32] = &[];
        let (left, right) = match self.kind {
            AssocCompositionKind::Inclusion => (f.sandwich(&one, &qf, e, e), g.sandwich(&minus, &qg, &self.a, &self.b)),
            AssocCompositionKind::Intersection => {
                (f.sandwich(&one, &qf, e, &self.b), g.sandwich(&minus, &qg, &self.a, e))
            }
            AssocCompositionKind::External => {
                let t = &self.a;
                (
                    f.sandwich(&one, &qf, e, &t.concat(&lg.x)),
                    g.sandwich(&minus, &qg, &lf.x.concat(t), e),
                )
            }
            AssocCompositionKind::LeftMultiple => {
                (f.sandwich(&one, &YMonomial::one(), &self.a, e), AssocElement::zero(field))
            }
            AssocCompositionKind::RightMultiple => {
                (f.sandwich(&one, &YMonomial::one(), e, &self.b), AssocElement::zero(field))
            }
        };
        left.add(&right)
    }
}

/// Compositions involving a rule with index `>= from`, in a fixed order.
pub fn enumerate_assoc_specs(rs: &AssocRuleSet, caps: Caps, alphabet: u32, from: usize) -> Vec<AssocCompSpec> {
    use AssocCompositionKind::*;
    let n = rs.len();
    let mut out = Vec::new();
    let spec = |kind, f, g, a, b| AssocCompSpec { kind, f, g, a, b };
    for f in 0..n {
        let lf = rs.lead(f);
        for g in 0..n {
            if f.max(g) < from {
                continue;
            }
            let lg = rs.lead(g);
            for pos in lf.x.occurrences(&lg.x) {
                let a = lf.x.slice(0, pos);
                let b = lf.x.slice(pos + lg.x.len(), lf.x.len());
                if a.is_empty() && b.is_empty() && f >= g {
                    continue;
                }
                out.push(spec(Inclusion, f, g, a, b));
            }
            for k in 1..lf.x.len().min(lg.x.len()) {
                if lf.x[lf.x.len() - k..] == lg.x[..k] {
                    let a = lf.x.slice(0, lf.x.len() - k);
                    let b = lg.x.slice(k, lg.x.len());
                    out.push(spec(Intersection, f, g, a, b));
                }
            }
            let len = lf.x.len() + lg.x.len();
            if lf.y.is_coprime(&lg.y) || len > caps.max_x || lf.y.lcm(&lg.y).degree() > caps.max_y {
                continue;
            }
            for tl in 0..=caps.max_x - len {
                for t in words_of_length(alphabet, tl) {
                    out.push(spec(External, f, g, t, XWord::empty()));
                }
            }
        }
    }
    for f in from..n {
        let lf = rs.lead(f);
        if lf.y.is_one() || lf.x.len() >= caps.max_x {
            continue;
        }
        for x in 0..alphabet {
            out.push(spec(LeftMultiple, f, f, XWord::letter(x), XWord::empty()));
            out.push(spec(RightMultiple, f, f, XWord::empty(), XWord::letter(x)));
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AssocCompletion {
    pub basis: Vec<AssocElement>,
    pub base_len: usize,
    pub discarded: usize,
    pub rounds: usize,
    pub exact: bool,
}

impl AssocCompletion {
    pub fn added(&self) -> &[AssocElement] {
        &self.basis[self.base_len..]
    }
}

fn fits(caps: Caps, e: &AssocElement) -> bool {
    caps.admits(e.x_degree(), e.y_degree())
}

/// Capped completion with the same round structure and interreduction as
/// [`crate::gsb_lie::shirshov_complete`].
pub fn assoc_complete(
    field: Field,
    s: &[AssocElement],
    alphabet: u32,
    caps: Caps,
    opts: &CompletionOptions,
) -> Result<AssocCompletion, GsbError> {
    let mut rs = AssocRuleSet::from_elements(field, s)?;
    let base_len = rs.len();
    let policy = opts.policy;
    let (mut mark, mut rounds, mut discarded) = (0, 0, 0);
    loop {
        let specs = enumerate_assoc_specs(&rs, caps, alphabet, mark);
        if specs.is_empty() {
            break;
        }
        rounds += 1;
        if rounds > opts.max_rounds {
            return Err(GsbError::BudgetExceeded(format!("more than {} rounds", opts.max_rounds)));
        }
        let top = rs.len();
        let snapshot = &rs;
        let mut rems: Vec<AssocElement> = par_map(&specs, opts.threads, |spec| {
            snapshot.remainder(&spec.value(snapshot), policy)
        })
        .into_iter()
        .filter(|r| !r.is_zero())
        .collect();
        rems.sort_by(|a, b| a.leading().map(|t| t.0).cmp(&b.leading().map(|t| t.0)));
        for r in rems {
            let r = rs.remainder(&r, policy);
            if r.is_zero() {
                continue;
            }
            if !fits(caps, &r) {
                discarded += 1;
                continue;
            }
            rs.push(r.make_k_monic().expect("nonzero"))?;
            if rs.len() > opts.max_elements {
                return Err(GsbError::BudgetExceeded(format!("more than {} elements", opts.max_elements)));
            }
        }
        if rs.len() == top {
            break;
        }
        mark = top;
    }
    interreduce(&mut rs, base_len, policy);
    let mut added: Vec<usize> = (base_len..rs.len()).filter(|&i| rs.is_enabled(i)).collect();
    added.sort_by(|&i, &j| rs.lead(i).cmp(rs.lead(j)).then(i.cmp(&j)));
    let rules = rs.rules();
    let basis = rules[..base_len]
        .iter()
        .chain(added.iter().map(|&i| &rules[i]))
        .cloned()
        .collect();
    Ok(AssocCompletion {
        basis,
        base_len,
        discarded,
        rounds,
        exact: discarded == 0,
    })
}

fn interreduce(rs: &mut AssocRuleSet, base_len: usize, policy: Policy) {
    let mut order: Vec<usize> = (base_len..rs.len()).collect();
    order.sort_by(|&i, &j| rs.lead(j).cmp(rs.lead(i)).then(j.cmp(&i)));
    for &id in &order {
        rs.set_enabled(id, false);
        let drop = rs.is_reducible(rs.lead(id)) && rs.remainder(rs.rule(id), policy).is_zero();
        if !drop {
            rs.set_enabled(id, true);
        }
    }
    for &id in order.iter().rev() {
        if !rs.is_enabled(id) {
            continue;
        }
        rs.set_enabled(id, false);
        let mut tail = rs.rule(id).clone();
        let (m, c) = tail.pop_leading().expect("nonzero rule");
        let mut e = rs.remainder(&tail, policy);
        e.add_scaled(&AssocElement::monomial(rs.field(), c, m), &rs.field().one(), &YMonomial::one());
        rs.set_enabled(id, true);
        rs.replace(id, e);
    }
}
