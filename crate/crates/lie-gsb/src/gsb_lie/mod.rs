//! Gröbner–Shirshov machinery for Lie_{k[Y]}(X | S, RX): normal s-words,
//! reduction, the four compositions, capped Shirshov completion, Irr(S)
//! enumeration and the two-generator embedding.

pub(crate) mod complete;
mod compositions;
mod embed;
mod irr;
mod presentation;
mod rules;

pub use complete::{is_gsb, shirshov_complete, Completion, CompletionOptions, GsbCheck, GsbFailure};
pub use compositions::{
    comp_external, comp_inclusion, comp_intersection, comp_multiplication, enumerate_compositions,
    enumerate_specs, CompSpec, CompositionKind, CompositionRecord,
};
pub use embed::embed_two_generated;
pub use irr::{irr_basis, nf, word_problem_homogeneous};
pub use presentation::LiePresentation;
pub use rules::{normal_s_word, Policy, ReductionTrace, RuleSet, Step};

use crate::freelie::FreeLieError;
use crate::lyndon::{LyndonError, XWord};

/// Degree caps for truncated completion: X-degree and Y-degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Caps {
    pub max_x: usize,
    pub max_y: u32,
}

impl Caps {
    pub fn new(max_x: usize, max_y: u32) -> Self {
        Caps { max_x, max_y }
    }

    /// True if every term of an element with these degrees fits.
    pub fn admits(&self, x_degree: usize, y_degree: u32) -> bool {
        x_degree <= self.max_x && y_degree <= self.max_y
    }
}

#[derive(Debug, Clone, thiserror::Error, PartialEq, Eq)]
pub enum GsbError {
    #[error("relation is zero")]
    ZeroRelation,
    #[error("relation is not k-monic")]
    NotKMonic,
    #[error("context word {0:?} is not an ALSW")]
    ContextNotAlsw(XWord),
    #[error("composition word {0:?} is not an ALSW")]
    WordNotAlsw(XWord),
    #[error("leading X-part does not factor as a·ḡ·b")]
    XPartMismatch,
    #[error("leading words do not overlap")]
    NoOverlap,
    #[error("leading Y-parts are coprime")]
    CoprimeYParts,
    #[error("leading Y-part is trivial")]
    YPartTrivial,
    #[error("element exceeds the degree caps")]
    CapsExceeded,
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error(transparent)]
    Lyndon(#[from] LyndonError),
    #[error(transparent)]
    FreeLie(#[from] FreeLieError),
}
