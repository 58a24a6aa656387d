//! Canonical text for scalars, monomials, elements and presentations.

use crate::commutative::{CommPoly, FieldScalar, YMonomial};
use crate::freelie::{AssocElement, LieElement, Monomial};
use crate::gsb_lie::LiePresentation;
use crate::lyndon::{std_bracketing, LieTree};

use super::Names;

/// `y3*y2^2`, highest generator first; empty for the monomial 1.
pub fn render_ymono(y: &YMonomial, names: &Names) -> String {
    y.pairs()
        .iter()
        .rev()
        .map(|&(g, e)| {
            let n = &names.ygens[g as usize];
            if e == 1 {
                n.clone()
            } else {
                format!("{n}^{e}")
            }
        })
        .collect::<Vec<_>>()
        .join("*")
}

pub fn render_tree(t: &LieTree, names: &Names) -> String {
    match t {
        LieTree::Leaf(x) => names.xgens[*x as usize].clone(),
        LieTree::Node(l, r) => format!("[{},{}]", render_tree(l, names), render_tree(r, names)),
    }
}

fn join_terms<'a>(terms: impl Iterator<Item = (&'a FieldScalar, Vec<String>)>) -> String {
    let mut out = String::new();
    for (c, mut factors) in terms {
        let neg = c.is_negative();
        let mag = if neg { -c } else { c.clone() };
        if factors.is_empty() || !mag.is_one() {
            factors.insert(0, mag.to_string());
        }
        let body = factors.join("*");
        match (out.is_empty(), neg) {
            (true, false) => out.push_str(&body),
            (true, true) => out.push_str(&format!("-{body}")),
            (false, false) => out.push_str(&format!(" + {body}")),
            (false, true) => out.push_str(&format!(" - {body}")),
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn y_factor(y: &YMonomial, names: &Names) -> Vec<String> {
    if y.is_one() {
        Vec::new()
    } else {
        vec![render_ymono(y, names)]
    }
}

/// Terms in decreasing order, T_N monomials in nested-bracket form.
pub fn render_lie(e: &LieElement, names: &Names) -> String {
    join_terms(e.iter().rev().map(|(m, c)| {
        let mut f = y_factor(&m.y, names);
        f.push(render_tree(&std_bracketing(&m.x).expect("T_A key"), names));
        (c, f)
    }))
}

/// Associative words written as products of generators.
pub fn render_assoc(e: &AssocElement, names: &Names) -> String {
    join_terms(e.iter().rev().map(|(m, c)| {
        let mut f = y_factor(&m.y, names);
        f.extend(m.x.iter().map(|&x| names.xgens[x as usize].clone()));
        (c, f)
    }))
}

pub fn render_poly(p: &CommPoly, names: &Names) -> String {
    join_terms(p.terms().rev().map(|(m, c)| (c, y_factor(m, names))))
}

/// A mixed monomial with its X-part written as a plain word.
pub fn render_monomial(m: &Monomial, names: &Names) -> String {
    let mut f = y_factor(&m.y, names);
    f.extend(m.x.iter().map(|&x| names.xgens[x as usize].clone()));
    if f.is_empty() {
        "1".into()
    } else {
        f.join("*")
    }
}

/// The presentation in the input file format.
pub fn render_presentation(p: &LiePresentation) -> String {
    let names = Names::of(p);
    let mut out = format!("field {}\n", field_token(p));
    out.push_str(&format!("ygens {}\n", p.ygens.join(" ")).replace(" \n", "\n"));
    out.push_str(&format!("xgens {}\n", p.xgens.join(" ")).replace(" \n", "\n"));
    out.push_str("rrels\n");
    for r in &p.r {
        out.push_str(&format!("  {}\n", render_poly(r, &names)));
    }
    out.push_str("srels\n");
    for s in &p.s {
        out.push_str(&format!("  {}\n", render_lie(s, &names)));
    }
    out
}

fn field_token(p: &LiePresentation) -> String {
    match p.field.characteristic() {
        0 => "Q".into(),
        q => format!("GF {q}"),
    }
}
