//! Speciality checks: the k[Y]-monic sufficient criterion and non-speciality
//! witnesses comparing Lie and associative normal forms.

use std::fmt;

use crate::freelie::{AssocElement, LieElement};
use crate::gsb_assoc::{envelope, AssocRuleSet, AssocTrace};
use crate::gsb_lie::{irr_basis, Caps, CompletionOptions, GsbError, LiePresentation, Policy, ReductionTrace, RuleSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    SpecialCertified,
    NonSpecialWitnessed,
    Inconclusive,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::SpecialCertified => "special-certified",
            Verdict::NonSpecialWitnessed => "non-special-witnessed",
            Verdict::Inconclusive => "inconclusive",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecialityReport {
    pub verdict: Verdict,
    pub caps: Caps,
    /// Both completions finished without discarding anything.
    pub exact: bool,
    pub witness: Option<LieElement>,
    pub nf_lie: Option<LieElement>,
    pub nf_assoc: Option<AssocElement>,
    pub lie_trace: Option<ReductionTrace>,
    pub assoc_trace: Option<AssocTrace>,
    /// Why the verdict was reached, one line per check.
    pub notes: Vec<String>,
}

impl SpecialityReport {
    fn new(caps: Caps) -> Self {
        SpecialityReport {
            verdict: Verdict::Inconclusive,
            caps,
            exact: false,
            witness: None,
            nf_lie: None,
            nf_assoc: None,
            lie_trace: None,
            assoc_trace: None,
            notes: Vec::new(),
        }
    }
}

/// Sufficient criterion: if every relation is k[Y]-monic and S is a
/// Gröbner–Shirshov basis, the algebra embeds into its enveloping algebra.
/// S is first closed under its own compositions; the closure must stay
/// k[Y]-monic, S ∪ RX must be a capped GSB, and every capped Irr monomial
/// must stay irreducible on the associative side.
pub fn check_speciality_criterion(
    p: &LiePresentation,
    caps: Caps,
    opts: &CompletionOptions,
) -> Result<SpecialityReport, GsbError> {
    let mut rep = SpecialityReport::new(caps);
    if let Some(i) = p.s.iter().position(|s| !s.is_ky_monic()) {
        rep.notes.push(format!("relation {} is not k[Y]-monic", i + 1));
        return Ok(rep);
    }
    rep.notes.push("all relations are k[Y]-monic".into());
    let sc = crate::gsb_lie::shirshov_complete(p.field, &p.s, p.alphabet(), caps, opts)?;
    if sc.basis.iter().any(|e| !e.is_ky_monic()) {
        rep.notes.push("completion of S is not k[Y]-monic".into());
        return Ok(rep);
    }
    rep.notes.push(format!("completion of S has {} elements", sc.basis.len()));
    let closed = LiePresentation {
        s: sc.basis.clone(),
        ..p.clone()
    };
    let check = closed.check_gsb(caps, opts)?;
    if !check.holds() {
        rep.notes.push(format!("S ∪ RX fails {} compositions", check.failures.len()));
        return Ok(rep);
    }
    rep.notes.push(format!("S ∪ RX is a GSB ({} compositions checked)", check.checked));
    let lie_rels = closed.relations(caps)?;
    let irr = irr_basis(&lie_rels, p.alphabet(), p.y_count(), caps)?;
    let env = envelope(&closed);
    let ac = env.complete(caps, opts)?;
    let ars = AssocRuleSet::from_elements(p.field, &ac.basis)?;
    let bad = irr.iter().filter(|m| ars.is_reducible(&m.to_ta())).count();
    if bad > 0 {
        rep.notes.push(format!("{bad} Irr monomials reduce on the associative side"));
        return Ok(rep);
    }
    rep.notes.push(format!("{} Irr monomials stay irreducible", irr.len()));
    rep.exact = sc.exact && ac.exact && check.beyond_caps == 0;
    rep.verdict = Verdict::SpecialCertified;
    Ok(rep)
}

/// Completes both sides at `caps` and compares the normal forms of
/// `witness`: nonzero in the Lie algebra but zero in the enveloping algebra
/// proves non-speciality.
pub fn nonspeciality_witness(
    p: &LiePresentation,
    witness: &LieElement,
    caps: Caps,
    opts: &CompletionOptions,
) -> Result<SpecialityReport, GsbError> {
    if !caps.admits(witness.x_degree(), witness.y_degree()) {
        return Err(GsbError::CapsExceeded);
    }
    let mut rep = SpecialityReport::new(caps);
    rep.witness = Some(witness.clone());
    let lc = p.complete(caps, opts)?;
    let lrs = RuleSet::from_elements(p.field, &lc.basis)?;
    let lt = lrs.reduce(witness, Policy::FirstMatch, None);
    let ac = envelope(p).complete(caps, opts)?;
    let ars = AssocRuleSet::from_elements(p.field, &ac.basis)?;
    let at = ars.reduce(&witness.to_associative(), Policy::FirstMatch);
    let lie_zero = lt.remainder.is_zero();
    let assoc_zero = at.remainder.is_zero();
    rep.notes.push(format!(
        "Lie completion: {} elements, {} discarded",
        lc.basis.len(),
        lc.discarded
    ));
    rep.notes.push(format!(
        "associative completion: {} elements, {} discarded",
        ac.basis.len(),
        ac.discarded
    ));
    rep.exact = lc.exact && ac.exact;
    rep.verdict = if !lie_zero && assoc_zero {
        Verdict::NonSpecialWitnessed
    } else {
        Verdict::Inconclusive
    };
    rep.nf_lie = Some(lt.remainder.clone());
    rep.nf_assoc = Some(at.remainder.clone());
    rep.lie_trace = Some(lt);
    rep.assoc_trace = Some(at);
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::{parse_lie, parse_presentation, Names};

    fn opts() -> CompletionOptions {
        CompletionOptions {
            threads: 1,
            ..CompletionOptions::default()
        }
    }

    #[test]
    fn one_relator_is_certified() {
        let p = parse_presentation(include_str!("../presentations/onerel.gsb")).unwrap();
        let r = check_speciality_criterion(&p, Caps::new(3, 3), &opts()).unwrap();
        assert_eq!(r.verdict, Verdict::SpecialCertified);
        assert!(r.exact);
    }

    #[test]
    fn free_module_is_certified() {
        let p = parse_presentation("field Q\nygens y1\nxgens x1 x2\n").unwrap();
        let r = check_speciality_criterion(&p, Caps::new(2, 2), &opts()).unwrap();
        assert_eq!(r.verdict, Verdict::SpecialCertified);
    }

    #[test]
    fn cohn_criterion_inapplicable() {
        let p = parse_presentation(include_str!("../presentations/cohn2.gsb")).unwrap();
        let r = check_speciality_criterion(&p, Caps::new(2, 4), &opts()).unwrap();
        assert_eq!(r.verdict, Verdict::Inconclusive);
    }

    #[test]
    fn cohn2_witness() {
        let p = parse_presentation(include_str!("../presentations/cohn2.gsb")).unwrap();
        let n = Names::of(&p);
        let w = parse_lie("y2*y1*[x2,x1]", &n).unwrap();
        let r = nonspeciality_witness(&p, &w, Caps::new(2, 4), &opts()).unwrap();
        assert_eq!(r.verdict, Verdict::NonSpecialWitnessed);
        assert_eq!(r.nf_lie.as_ref(), Some(&w));
        assert!(r.nf_assoc.unwrap().is_zero());
    }

    #[test]
    fn zero_witness_is_inconclusive() {
        let p = parse_presentation(include_str!("../presentations/onerel.gsb")).unwrap();
        let n = Names::of(&p);
        let w = parse_lie("[x2,x1] - y1*x1", &n).unwrap();
        let r = nonspeciality_witness(&p, &w, Caps::new(2, 2), &opts()).unwrap();
        assert_eq!(r.verdict, Verdict::Inconclusive);
        let big = parse_lie("y1^9*x1", &n).unwrap();
        assert_eq!(
            nonspeciality_witness(&p, &big, Caps::new(2, 2), &opts()),
            Err(GsbError::CapsExceeded)
        );
    }
}
