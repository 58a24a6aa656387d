//! Associative Gröbner–Shirshov bases in k[Y]<X>, used for normal forms in
//! universal enveloping algebras.

mod complete;
mod rules;

pub use complete::{
    assoc_complete, enumerate_assoc_specs, AssocCompSpec, AssocCompletion, AssocCompositionKind,
};
pub use rules::{assoc_reduce, AssocRuleSet, AssocStep, AssocTrace};

use crate::commutative::{CommPoly, Field};
use crate::freelie::{AssocElement, Monomial};
use crate::gsb_lie::{Caps, CompletionOptions, GsbError, LiePresentation};
use crate::lyndon::XWord;

/// k[Y|R]<X | S> with relations in k[Y]<X>.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AssocPresentation {
    pub field: Field,
    pub ygens: Vec<String>,
    pub xgens: Vec<String>,
    pub r: Vec<CommPoly>,
    pub s: Vec<AssocElement>,
}

/// The universal enveloping presentation: every bracket `[u,v]` becomes
/// `uv - vu`; R is carried over.
pub fn envelope(p: &LiePresentation) -> AssocPresentation {
    AssocPresentation {
        field: p.field,
        ygens: p.ygens.clone(),
        xgens: p.xgens.clone(),
        r: p.r.clone(),
        s: p.s.iter().map(|e| e.to_associative()).collect(),
    }
}

impl AssocPresentation {
    pub fn alphabet(&self) -> u32 {
        self.xgens.len() as u32
    }

    /// `S ∪ RX` with R replaced by its Gröbner basis.
    pub fn relations(&self, caps: Caps) -> Result<Vec<AssocElement>, GsbError> {
        let lie = LiePresentation {
            field: self.field,
            ygens: self.ygens.clone(),
            xgens: self.xgens.clone(),
            r: self.r.clone(),
            s: Vec::new(),
        };
        let mut out = Vec::new();
        for e in &self.s {
            out.push(e.make_k_monic()?);
        }
        for g in lie.completed_r(caps)? {
            for x in 0..self.alphabet() {
                let mut e = AssocElement::zero(self.field);
                for (m, c) in g.terms() {
                    let t = AssocElement::monomial(self.field, c.clone(), Monomial::new(m.clone(), XWord::letter(x)));
                    e = e.add(&t);
                }
                out.push(e);
            }
        }
        Ok(out)
    }

    pub fn complete(&self, caps: Caps, opts: &CompletionOptions) -> Result<AssocCompletion, GsbError> {
        assoc_complete(self.field, &self.relations(caps)?, self.alphabet(), caps, opts)
    }
}
