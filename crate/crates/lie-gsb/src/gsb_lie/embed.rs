//! Embedding into a two-generated Lie algebra.

use crate::freelie::LieElement;
use crate::lyndon::XWord;

use super::presentation::LiePresentation;

fn fresh(name: &str, taken: &[String]) -> String {
    let mut n = name.to_string();
    while taken.contains(&n) {
        n.push('_');
    }
    n
}

/// Adds generators `b < a` above X and the relations `[a a b^i a b] - x_i`
/// (standard bracketing, `i` counted from 1). R and S are kept, so RX now
/// also covers `a` and `b`.
pub fn embed_two_generated(p: &LiePresentation) -> LiePresentation {
    let n = p.alphabet();
    let (b, a) = (n, n + 1);
    let mut taken: Vec<String> = p.xgens.iter().chain(&p.ygens).cloned().collect();
    let b_name = fresh("b", &taken);
    taken.push(b_name.clone());
    let a_name = fresh("a", &taken);
    let mut out = p.clone();
    out.xgens.push(b_name);
    out.xgens.push(a_name);
    for x in 0..n {
        let mut w = vec![a, a];
        w.extend(std::iter::repeat_n(b, x as usize + 1));
        w.extend([a, b]);
        let bridge = LieElement::basis(p.field, XWord::from(w)).sub(&LieElement::generator(p.field, x));
        out.s.push(bridge);
    }
    out
}
