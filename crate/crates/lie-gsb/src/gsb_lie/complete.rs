//! Capped Shirshov completion and Gröbner–Shirshov basis verification.

use rayon::prelude::*;

use crate::commutative::Field;
use crate::freelie::LieElement;

use super::compositions::{enumerate_specs, CompositionRecord};
use super::rules::{Policy, RuleSet};
use super::{Caps, GsbError};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CompletionOptions {
    /// Worker threads for composition reduction; 1 runs inline.
    pub threads: usize,
    pub max_rounds: usize,
    pub max_elements: usize,
    pub policy: Policy,
}

impl Default for CompletionOptions {
    fn default() -> Self {
        CompletionOptions {
            threads: std::thread::available_parallelism().map_or(1, |n| n.get()),
            max_rounds: 100,
            max_elements: 20_000,
            policy: Policy::FirstMatch,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Completion {
    /// Input relations (k-monic) first, then adjoined elements by increasing
    /// leading monomial.
    pub basis: Vec<LieElement>,
    pub base_len: usize,
    /// Nonzero remainders dropped for exceeding the caps.
    pub discarded: usize,
    pub rounds: usize,
    /// No remainder was discarded.
    pub exact: bool,
}

impl Completion {
    pub fn added(&self) -> &[LieElement] {
        &self.basis[self.base_len..]
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GsbFailure {
    pub record: CompositionRecord,
    pub remainder: LieElement,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GsbCheck {
    pub failures: Vec<GsbFailure>,
    pub checked: usize,
    /// Compositions whose nonzero remainder lies beyond the caps.
    pub beyond_caps: usize,
}

impl GsbCheck {
    pub fn holds(&self) -> bool {
        self.failures.is_empty()
    }
}

pub(crate) fn par_map<T, R, F>(items: &[T], threads: usize, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    if threads <= 1 {
        return items.iter().map(f).collect();
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .expect("thread pool");
    pool.install(|| items.par_iter().map(f).collect())
}

fn monic_rules(field: Field, s: &[LieElement]) -> Result<RuleSet, GsbError> {
    let mut rs = RuleSet::new(field);
    for e in s {
        rs.push(e.make_k_monic().map_err(|_| GsbError::ZeroRelation)?)?;
    }
    Ok(rs)
}

fn fits(caps: Caps, e: &LieElement) -> bool {
    caps.admits(e.x_degree(), e.y_degree())
}

/// Adjoins nonzero remainders of all capped compositions until none remain.
/// The input relations are kept as given (made k-monic); adjoined elements
/// are interreduced.
pub fn shirshov_complete(
    field: Field,
    s: &[LieElement],
    alphabet: u32,
    caps: Caps,
    opts: &CompletionOptions,
) -> Result<Completion, GsbError> {
    let mut rs = monic_rules(field, s)?;
    let base_len = rs.len();
    let policy = opts.policy;
    let mut mark = 0;
    let mut rounds = 0;
    let mut discarded = 0;
    loop {
        let specs = enumerate_specs(&rs, caps, alphabet, mark);
        if specs.is_empty() {
            break;
        }
        rounds += 1;
        if rounds > opts.max_rounds {
            return Err(GsbError::BudgetExceeded(format!("more than {} rounds", opts.max_rounds)));
        }
        let top = rs.len();
        let snapshot = &rs;
        let results = par_map(&specs, opts.threads, |spec| -> Result<Option<LieElement>, GsbError> {
            let r = snapshot.remainder(&spec.value(snapshot)?, policy);
            Ok((!r.is_zero()).then_some(r))
        });
        let mut rems = Vec::new();
        for r in results {
            if let Some(r) = r? {
                rems.push(r);
            }
        }
        // Stable sort keeps enumeration order among equal leads.
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
            rs.push(r.make_k_monic()?)?;
            if rs.len() > opts.max_elements {
                return Err(GsbError::BudgetExceeded(format!(
                    "more than {} elements",
                    opts.max_elements
                )));
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
    Ok(Completion {
        basis,
        base_len,
        discarded,
        rounds,
        exact: discarded == 0,
    })
}

/// Drops adjoined rules that reduce to zero modulo the others and
/// tail-reduces the survivors. Base rules are untouched.
fn interreduce(rs: &mut RuleSet, base_len: usize, policy: Policy) {
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
        e.add_term_unchecked(m, c);
        rs.set_enabled(id, true);
        rs.replace(id, e);
    }
}

/// Checks that every capped composition of `s` reduces to zero.
pub fn is_gsb(
    field: Field,
    s: &[LieElement],
    alphabet: u32,
    caps: Caps,
    opts: &CompletionOptions,
) -> Result<GsbCheck, GsbError> {
    let rs = monic_rules(field, s)?;
    let specs = enumerate_specs(&rs, caps, alphabet, 0);
    let results = par_map(&specs, opts.threads, |spec| -> Result<Option<GsbFailure>, GsbError> {
        let value = spec.value(&rs)?;
        let w = spec.bound(&rs);
        let trace = rs.reduce(&value, opts.policy, Some(&w));
        if trace.is_trivial() {
            return Ok(None);
        }
        Ok(Some(GsbFailure {
            record: spec.record(&rs)?,
            remainder: trace.remainder,
        }))
    });
    let mut failures = Vec::new();
    let mut beyond_caps = 0;
    for r in results {
        if let Some(f) = r? {
            if fits(caps, &f.remainder) {
                failures.push(f);
            } else {
                beyond_caps += 1;
            }
        }
    }
    Ok(GsbCheck {
        failures,
        checked: specs.len(),
        beyond_caps,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::{parse_lie, parse_presentation, Names};

    fn opts(threads: usize) -> CompletionOptions {
        CompletionOptions {
            threads,
            ..CompletionOptions::default()
        }
    }

    #[test]
    fn cohn2_completion_adds_five() {
        let p = parse_presentation(include_str!("../../presentations/cohn2.gsb")).unwrap();
        let n = Names::of(&p);
        let c = p.complete(Caps::new(2, 4), &opts(1)).unwrap();
        assert!(c.exact);
        let expected: Vec<LieElement> = [
            "y3*y2*y1*x1",
            "y3*y2*x2 + y3*y1*x1",
            "y3*y1*[x2,x1]",
            "y2*y1*[x3,x1]",
            "y2*[x3,x2] + y1*[x3,x1]",
        ]
        .iter()
        .map(|s| parse_lie(s, &n).unwrap())
        .collect();
        assert_eq!(c.added(), &expected[..]);
        assert!(is_gsb(p.field, &c.basis, 3, Caps::new(2, 4), &opts(1)).unwrap().holds());
    }

    #[test]
    fn raw_cohn_input_is_not_a_gsb() {
        let p = parse_presentation(include_str!("../../presentations/cohn2.gsb")).unwrap();
        let g = p.check_gsb(Caps::new(2, 4), &opts(1)).unwrap();
        assert!(!g.holds());
        let y3sq_x3 = &p.relations(Caps::new(2, 4)).unwrap()[9];
        assert!(g.failures.iter().any(|f| f.record.kind == super::super::CompositionKind::Inclusion
            && f.record.w == *y3sq_x3.leading().unwrap().0));
    }

    #[test]
    fn single_commutator_is_a_gsb() {
        let p = parse_presentation("field Q\nxgens x1 x2\nsrels\n  [x2,x1]\n").unwrap();
        let g = p.check_gsb(Caps::new(6, 0), &opts(1)).unwrap();
        assert!(g.holds());
        assert_eq!(g.checked, 0);
    }

    #[test]
    fn threads_do_not_change_the_result() {
        let p = parse_presentation(include_str!("../../presentations/cohn3.gsb")).unwrap();
        let a = p.complete(Caps::new(3, 6), &opts(1)).unwrap();
        let b = p.complete(Caps::new(3, 6), &opts(4)).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn element_budget() {
        let p = parse_presentation(include_str!("../../presentations/cohn2.gsb")).unwrap();
        let o = CompletionOptions {
            max_elements: 11,
            ..opts(1)
        };
        assert!(matches!(p.complete(Caps::new(2, 4), &o), Err(GsbError::BudgetExceeded(_))));
        let o = CompletionOptions {
            max_rounds: 1,
            ..opts(1)
        };
        assert!(matches!(p.complete(Caps::new(2, 4), &o), Err(GsbError::BudgetExceeded(_))));
    }
}
