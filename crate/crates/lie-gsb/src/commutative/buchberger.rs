//! Degree-capped Buchberger completion for the relations R of k[Y|R].

use super::poly::{comm_normal_form, CommPoly};
use super::CommError;

/// Largest basis `buchberger_complete` will build before giving up.
pub const DEFAULT_ELEMENT_CAP: usize = 10_000;

fn s_polynomial(f: &CommPoly, g: &CommPoly) -> CommPoly {
    let (lf, _) = f.leading().expect("nonzero");
    let (lg, _) = g.leading().expect("nonzero");
    let l = lf.lcm(lg);
    let one = f.field().one();
    let a = f.mul_monomial(&one, &l.div(lf).expect("lcm divisible"));
    let b = g.mul_monomial(&one, &l.div(lg).expect("lcm divisible"));
    a.sub(&b)
}

/// Completes `r` under S-polynomials whose lcm degree is at most `max_deg`,
/// then returns the reduced basis sorted by leading monomial.
pub fn buchberger_complete(r: &[CommPoly], max_deg: u32) -> Result<Vec<CommPoly>, CommError> {
    buchberger_complete_with_cap(r, max_deg, DEFAULT_ELEMENT_CAP)
}

pub fn buchberger_complete_with_cap(
    r: &[CommPoly],
    max_deg: u32,
    element_cap: usize,
) -> Result<Vec<CommPoly>, CommError> {
    let mut basis: Vec<CommPoly> = Vec::new();
    for p in r {
        let n = comm_normal_form(&p.make_monic(), &basis);
        if !n.is_zero() {
            basis.push(n.make_monic());
        }
    }
    let mut pairs: Vec<(usize, usize)> = (0..basis.len())
        .flat_map(|j| (0..j).map(move |i| (i, j)))
        .collect();
    while let Some((i, j)) = pairs.pop() {
        let (li, _) = basis[i].leading().expect("nonzero");
        let (lj, _) = basis[j].leading().expect("nonzero");
        if li.is_coprime(lj) || li.lcm(lj).degree() > max_deg {
            continue;
        }
        let s = comm_normal_form(&s_polynomial(&basis[i], &basis[j]), &basis);
        if s.is_zero() {
            continue;
        }
        if basis.len() >= element_cap {
            return Err(CommError::BudgetExceeded(element_cap));
        }
        let k = basis.len();
        basis.push(s.make_monic());
        pairs.extend((0..k).map(|i| (i, k)));
    }
    Ok(interreduce(basis))
}

fn interreduce(mut basis: Vec<CommPoly>) -> Vec<CommPoly> {
    // Drop elements whose leading monomial is divisible by another's.
    let mut keep: Vec<CommPoly> = Vec::new();
    basis.sort_by(|a, b| a.leading().map(|l| l.0).cmp(&b.leading().map(|l| l.0)));
    for p in basis {
        let (lp, _) = p.leading().expect("nonzero");
        if keep
            .iter()
            .any(|q| q.leading().expect("nonzero").0.divides(lp))
        {
            continue;
        }
        keep.push(p);
    }
    let mut out = Vec::with_capacity(keep.len());
    for i in 0..keep.len() {
        let others: Vec<CommPoly> = keep
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, q)| q.clone())
            .collect();
        let (lm, lc) = keep[i].leading().expect("nonzero");
        let head = CommPoly::monomial(keep[i].field(), lc.clone(), lm.clone());
        let tail = comm_normal_form(&keep[i].sub(&head), &others);
        out.push(head.add(&tail).make_monic());
    }
    out
}
