//! One check per acceptance criterion. Each returns a short summary on
//! success and the first discrepancy on failure.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use lie_gsb::cli::run_command;
use lie_gsb::commutative::{Field, YMonomial};
use lie_gsb::freelie::{LieElement, Monomial};
use lie_gsb::gsb_assoc::{envelope, AssocRuleSet};
use lie_gsb::gsb_lie::{irr_basis, nf, shirshov_complete, LiePresentation, Policy};
use lie_gsb::lyndon::{enumerate_alsw, is_alsw, std_bracketing, XWord};
use lie_gsb::speciality::{check_speciality_criterion, nonspeciality_witness, Verdict};

use super::*;

pub type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

pub fn lyndon_counts() -> Outcome {
    for q in [2u32, 3] {
        let words = enumerate_alsw(q, 8);
        for n in 1..=8usize {
            let got = words.iter().filter(|w| w.len() == n).count() as u64;
            let want = witt(q as u64, n as u64);
            ensure(got == want, || format!("{q} letters, length {n}: {got} ALSWs, Witt gives {want}"))?;
        }
    }
    let mut checked = 0;
    for n in 0..=10 {
        for w in all_words(2, n) {
            ensure(is_alsw(&w) == rotation_oracle(&w), || format!("is_alsw disagrees on {w:?}"))?;
            checked += 1;
        }
    }
    Ok(format!("necklace counts to length 8 over 2 and 3 letters; {checked} words vs rotation oracle"))
}

pub fn triangularity(q: u32, max_len: usize) -> Result<usize, String> {
    let f = Field::Rational;
    let words = enumerate_alsw(q, max_len);
    for w in &words {
        let a = LieElement::basis(f, w.clone()).to_associative();
        let (m, c) = a.leading().ok_or_else(|| format!("[{w:?}] expands to 0"))?;
        ensure(*m == Monomial::x_only(w.clone()) && c.is_one(), || {
            format!("leading term of [{w:?}] is {m:?} with coefficient {c}")
        })?;
    }
    Ok(words.len())
}

fn random_element(rng: &mut ChaCha8Rng, words: &[XWord]) -> LieElement {
    let f = Field::Rational;
    let mut e = LieElement::zero(f);
    for _ in 0..rng.gen_range(1..=3) {
        let w = words[rng.gen_range(0..words.len())].clone();
        let y = YMonomial::from_pairs((0..2).filter_map(|g| {
            let k = rng.gen_range(0..2u32);
            (k > 0).then_some((g, k))
        }));
        let c = f.from_i64(rng.gen_range(-3..=3));
        e = e.add(&LieElement::monomial(f, c, Monomial::new(y, w)).expect("ALSW"));
    }
    e
}

pub fn jacobi(cases: usize, seed: u64) -> Result<usize, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let words = enumerate_alsw(3, 3);
    for i in 0..cases {
        let a = random_element(&mut rng, &words);
        let b = random_element(&mut rng, &words);
        let c = random_element(&mut rng, &words);
        ensure(a.bracket(&b).add(&b.bracket(&a)).is_zero(), || format!("anticommutativity fails in case {i}"))?;
        let j = a.bracket(&b).bracket(&c).add(&b.bracket(&c).bracket(&a)).add(&c.bracket(&a).bracket(&b));
        ensure(j.is_zero(), || format!("Jacobi fails in case {i}"))?;
    }
    Ok(cases)
}

pub fn bracket_oracle(q: u32, max_total: usize) -> Result<usize, String> {
    let f = Field::Rational;
    let words = enumerate_alsw(q, max_total - 1);
    let mut pairs = 0;
    for u in &words {
        for v in &words {
            if u.len() + v.len() > max_total {
                continue;
            }
            let got = LieElement::basis(f, u.clone()).bracket(&LieElement::basis(f, v.clone())).to_associative();
            let eu = expand(&std_bracketing(u).expect("ALSW"));
            let ev = expand(&std_bracketing(v).expect("ALSW"));
            let want = to_assoc(f, &commutator(&eu, &ev));
            ensure(got == want, || format!("[[{u:?}],[{v:?}]] disagrees with the commutator"))?;
            pairs += 1;
        }
    }
    Ok(pairs)
}

pub fn free_lie() -> Outcome {
    let t = triangularity(2, 6)? + triangularity(3, 6)?;
    let j = jacobi(1000, 7)?;
    let b = bracket_oracle(3, 5)?;
    Ok(format!("{t} NLSWs triangular; {j} random triples; {b} basis pairs vs commutator"))
}

pub const SHIRSHOV_EXTRA: [&str; 3] = ["y2*x1 = y1*x2", "y3*x1 = y1*x3", "y3*x2 = y2*x3"];

pub fn shirshov() -> Outcome {
    let p = load("shirshov");
    let c3 = caps(3, 3);
    let mut s = p.s.clone();
    s.extend(SHIRSHOV_EXTRA.iter().map(|r| lie(&p, r)));
    let sp = LiePresentation { s, ..p.clone() };
    let check = sp.check_gsb(c3, &threads(4)).map_err(|e| e.to_string())?;
    ensure(check.holds(), || format!("{} nontrivial compositions", check.failures.len()))?;

    let x10 = lie(&p, "x10");
    let rels = sp.relations(c3).map_err(|e| e.to_string())?;
    let irr = irr_basis(&rels, p.alphabet(), p.y_count(), caps(1, 3)).map_err(|e| e.to_string())?;
    let x10_tn = x10.leading().expect("nonzero").0.to_tn().expect("letter");
    ensure(irr.contains(&x10_tn), || "x10 is not in Irr(S)".into())?;

    let ac = envelope(&p).complete(caps(2, 2), &threads(4)).map_err(|e| e.to_string())?;
    let mut want: Vec<_> = SHIRSHOV_EXTRA.iter().map(|r| lie(&p, r).to_associative()).collect();
    want.push(x10.to_associative());
    ensure(ac.exact, || format!("associative completion discarded {}", ac.discarded))?;
    ensure(assoc_monic_set(ac.added()) == assoc_monic_set(&want), || {
        format!("associative completion added {} elements, not the expected 4", ac.added().len())
    })?;

    let r = nonspeciality_witness(&p, &x10, c3, &threads(4)).map_err(|e| e.to_string())?;
    ensure(r.verdict == Verdict::NonSpecialWitnessed, || format!("verdict {}", r.verdict))?;
    Ok(format!("GSB at (3,3) over {} compositions; x10 witnessed", check.checked))
}

pub const CARTIER_S1: [&str; 8] = [
    "y3*x23 = y1*x12",
    "y3*x13 = y2*x12",
    "y2*x23 = y1*x13",
    "y3*y2*x22 = y3*y1*x11",
    "y3*y1*x12",
    "y3*y2*x12",
    "y3*y2*y1*x11",
    "y2*y1*x13",
];

pub fn cartier() -> Outcome {
    let p = load("cartier");
    let c = caps(2, 4);
    let mut s = p.s.clone();
    s.extend(CARTIER_S1.iter().map(|r| lie(&p, r)));
    let sp = LiePresentation { s, ..p.clone() };
    let check = sp.check_gsb(c, &threads(4)).map_err(|e| e.to_string())?;
    ensure(check.holds(), || format!("{} nontrivial compositions", check.failures.len()))?;

    let w = lie(&p, "y2*y1*x12");
    let rels = sp.relations(c).map_err(|e| e.to_string())?;
    let lie_nf = nf(&w, &rels, c).map_err(|e| e.to_string())?;
    ensure(lie_nf == w, || "y2*y1*x12 is reducible on the Lie side".into())?;
    let ac = envelope(&p).complete(c, &threads(4)).map_err(|e| e.to_string())?;
    let ars = AssocRuleSet::from_elements(p.field, &ac.basis).map_err(|e| e.to_string())?;
    ensure(ars.remainder(&w.to_associative(), Policy::FirstMatch).is_zero(), || {
        "y2*y1*x12 survives on the associative side".into()
    })?;

    let r = nonspeciality_witness(&p, &w, c, &threads(4)).map_err(|e| e.to_string())?;
    ensure(r.verdict == Verdict::NonSpecialWitnessed, || format!("verdict {}", r.verdict))?;
    Ok(format!("S' with all eight S1 relations is a GSB over {} compositions", check.checked))
}

pub const COHN2_ADDED: [&str; 5] = [
    "y3*y2*x2 = y3*y1*x1",
    "y3*y2*y1*x1",
    "y2*[x3,x2] = y1*[x3,x1]",
    "y3*y1*[x2,x1]",
    "y2*y1*[x3,x1]",
];

/// The first entry carries the sign derived from the inclusion composition
/// of `y3*x3 - y2*x2 - y1*x1` with `y3^3*x3`.
pub const COHN3_ADDED: [&str; 8] = [
    "y3^2*y2*x2 = -y3^2*y1*x1",
    "y3^2*y2^2*y1*x1",
    "y2*[x3,x2] = -y1*[x3,x1]",
    "y3^2*y1*[x2,x1]",
    "y2^2*y1*[x3,x1]",
    "y3*y2^2*[x2,[x2,x1]] = y3*y2*y1*[[x2,x1],x1]",
    "y3*y2^2*y1*[[x2,x1],x1]",
    "y3*y2*y1*[x2,[x2,x1]] = y3*y1^2*[[x2,x1],x1]",
];

pub const COHN3_WITNESS: &str = "y2^2*y1*[x2,[x2,x1]] + y2*y1^2*[[x2,x1],x1]";

fn cohn_case(name: &str, c: lie_gsb::gsb_lie::Caps, added: &[&str], witness: &str) -> Result<(), String> {
    let p = load(name);
    let done = p.complete(c, &threads(4)).map_err(|e| e.to_string())?;
    let want: Vec<_> = added.iter().map(|r| lie(&p, r)).collect();
    ensure(monic_set(done.added()) == monic_set(&want), || {
        format!("{name}: completion added {} elements, expected {}", done.added().len(), want.len())
    })?;
    let w = lie(&p, witness);
    let r = nonspeciality_witness(&p, &w, c, &threads(4)).map_err(|e| e.to_string())?;
    ensure(r.verdict == Verdict::NonSpecialWitnessed, || format!("{name}: verdict {}", r.verdict))?;
    Ok(())
}

pub fn cohn() -> Outcome {
    cohn_case("cohn2", caps(2, 4), &COHN2_ADDED, "y2*y1*[x2,x1]")?;
    cohn_case("cohn3", caps(3, 6), &COHN3_ADDED, COHN3_WITNESS)?;
    Ok("p=2 at (2,4) and p=3 at (3,6) match; both witnesses certified".into())
}

/// A random nonzero GF(2) combination of the NLSWs of one degree.
fn random_relation(rng: &mut ChaCha8Rng) -> (LieElement, Poly) {
    let f = Field::Prime(2);
    loop {
        let d = rng.gen_range(2..=3);
        let words: Vec<XWord> = enumerate_alsw(2, d).into_iter().filter(|w| w.len() == d).collect();
        let mut e = LieElement::zero(f);
        let mut p = Poly::new();
        for w in words {
            if rng.gen_bool(0.5) {
                e = e.add(&LieElement::basis(f, w.clone()));
                for (u, c) in expand(&std_bracketing(&w).expect("ALSW")) {
                    *p.entry(u).or_insert(0) += c;
                }
            }
        }
        if !e.is_zero() {
            p.retain(|_, c| *c % 2 != 0);
            return (e, p);
        }
    }
}

pub fn cd_lemma(systems: usize, seed: u64) -> Result<usize, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let f = Field::Prime(2);
    let c = caps(4, 0);
    let mut compared = 0;
    for sys in 0..systems {
        let n = rng.gen_range(1..=3);
        let (s, polys): (Vec<_>, Vec<_>) = (0..n).map(|_| random_relation(&mut rng)).unzip();
        let done = shirshov_complete(f, &s, 2, c, &serial()).map_err(|e| e.to_string())?;
        let irr = irr_basis(&done.basis, 2, 0, c).map_err(|e| e.to_string())?;
        for d in 1..=4usize {
            let got = irr.iter().filter(|m| m.to_ta().x.len() == d).count();
            let want = witt(2, d as u64) as usize - ideal_rank_gf2(&polys, d);
            ensure(got == want, || format!("system {sys}, degree {d}: |Irr| = {got}, expected {want}"))?;
            compared += 1;
        }
    }
    Ok(compared)
}

pub fn cd_lemma_check() -> Outcome {
    let n = cd_lemma(50, 2024)?;
    Ok(format!("50 systems, {n} degree components match"))
}

pub fn one_relator() -> Outcome {
    let p = load("onerel");
    let c = caps(3, 3);
    let r = check_speciality_criterion(&p, c, &threads(4)).map_err(|e| e.to_string())?;
    ensure(r.verdict == Verdict::SpecialCertified && r.exact, || {
        format!("verdict {} (exact {}): {:?}", r.verdict, r.exact, r.notes)
    })?;
    let lc = p.complete(c, &serial()).map_err(|e| e.to_string())?;
    let irr = irr_basis(&lc.basis, p.alphabet(), p.y_count(), c).map_err(|e| e.to_string())?;
    let ac = envelope(&p).complete(c, &serial()).map_err(|e| e.to_string())?;
    let ars = AssocRuleSet::from_elements(p.field, &ac.basis).map_err(|e| e.to_string())?;
    for m in &irr {
        ensure(!ars.is_reducible(&m.to_ta()), || format!("{m:?} reduces on the associative side"))?;
    }
    Ok(format!("special-certified; {} Irr monomials embed", irr.len()))
}

/// Example name, caps, golden file stem.
pub const GOLDEN: [(&str, usize, u32); 4] = [("shirshov", 3, 3), ("cartier", 2, 4), ("cohn2", 2, 4), ("cohn3", 3, 6)];

pub fn run_complete(name: &str, x: usize, y: u32, threads: usize) -> Result<String, String> {
    let argv: Vec<String> = [
        "lie-gsb".to_string(),
        "complete".into(),
        presentation_path(name),
        "--max-x-deg".into(),
        x.to_string(),
        "--max-y-deg".into(),
        y.to_string(),
        "--threads".into(),
        threads.to_string(),
    ]
    .into();
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run_command(&argv, &mut std::io::empty(), &mut out, &mut err);
    if code != 0 {
        return Err(format!("{name}: exit {code}: {}", String::from_utf8_lossy(&err)));
    }
    String::from_utf8(out).map_err(|e| e.to_string())
}

pub fn golden_path(name: &str) -> std::path::PathBuf {
    crate_dir().join("tests").join("golden").join(format!("complete_{name}.txt"))
}

pub fn determinism() -> Outcome {
    for (name, x, y) in GOLDEN {
        let golden = std::fs::read_to_string(golden_path(name)).map_err(|e| format!("{name}: {e}"))?;
        let runs = [run_complete(name, x, y, 1)?, run_complete(name, x, y, 1)?, run_complete(name, x, y, 4)?];
        for (i, r) in runs.iter().enumerate() {
            ensure(*r == golden, || format!("{name}: run {i} differs from the golden file"))?;
        }
    }
    Ok("4 golden files reproduced by 1- and 4-thread runs".into())
}
