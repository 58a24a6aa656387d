//! Presentations Lie_{k[Y|R]}(X | S).

use crate::commutative::{buchberger_complete, CommPoly, Field};
use crate::freelie::{LieElement, Monomial};
use crate::lyndon::XWord;

use super::complete::{is_gsb, shirshov_complete, Completion, CompletionOptions, GsbCheck};
use super::{Caps, GsbError};

/// Generator `i` of `xgens` is the letter `i`; likewise for `ygens`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiePresentation {
    pub field: Field,
    pub ygens: Vec<String>,
    pub xgens: Vec<String>,
    pub r: Vec<CommPoly>,
    pub s: Vec<LieElement>,
}

impl LiePresentation {
    pub fn alphabet(&self) -> u32 {
        self.xgens.len() as u32
    }

    pub fn y_count(&self) -> u32 {
        self.ygens.len() as u32
    }

    /// Gröbner basis of R, completed up to degree `max(max_y, deg R)`.
    pub fn completed_r(&self, caps: Caps) -> Result<Vec<CommPoly>, GsbError> {
        let deg = self.r.iter().map(CommPoly::degree).max().unwrap_or(0).max(caps.max_y);
        buchberger_complete(&self.r, deg).map_err(|e| GsbError::BudgetExceeded(e.to_string()))
    }

    /// The relations `r·x` for `r` in the completed R and `x` in X.
    pub fn rx(&self, caps: Caps) -> Result<Vec<LieElement>, GsbError> {
        let mut out = Vec::new();
        for g in self.completed_r(caps)? {
            for x in 0..self.alphabet() {
                out.push(times_generator(self.field, &g, x));
            }
        }
        Ok(out)
    }

    /// `S ∪ RX`, each made k-monic.
    pub fn relations(&self, caps: Caps) -> Result<Vec<LieElement>, GsbError> {
        let mut out = Vec::with_capacity(self.s.len());
        for e in &self.s {
            out.push(e.make_k_monic()?);
        }
        out.extend(self.rx(caps)?);
        Ok(out)
    }

    pub fn complete(&self, caps: Caps, opts: &CompletionOptions) -> Result<Completion, GsbError> {
        shirshov_complete(self.field, &self.relations(caps)?, self.alphabet(), caps, opts)
    }

    pub fn check_gsb(&self, caps: Caps, opts: &CompletionOptions) -> Result<GsbCheck, GsbError> {
        is_gsb(self.field, &self.relations(caps)?, self.alphabet(), caps, opts)
    }
}

/// `p · x` for a polynomial `p` and generator `x`.
pub fn times_generator(field: Field, p: &CommPoly, x: u32) -> LieElement {
    let mut out = LieElement::zero(field);
    for (m, c) in p.terms() {
        out.add_term_unchecked(Monomial::new(m.clone(), XWord::letter(x)), c.clone());
    }
    out
}
