//! Presentation file parsing and canonical rendering.

mod parse;
mod render;

pub use parse::{parse_lie, parse_poly, parse_presentation, Names};
pub use render::{
    render_assoc, render_lie, render_monomial, render_poly, render_presentation, render_tree,
    render_ymono,
};

#[derive(Debug, Clone, thiserror::Error, PartialEq, Eq)]
pub enum TextError {
    #[error("line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
    #[error("line {line}, column {col}: unknown generator '{name}'")]
    UnknownGenerator { name: String, line: usize, col: usize },
    #[error("line {line}: relation is zero")]
    ZeroRelation { line: usize },
    #[error("generator '{0}' declared twice")]
    DuplicateGenerator(String),
}

/// Flat `key=value` lines in insertion order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct KeyValues(Vec<(String, String)>);

impl KeyValues {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, key: impl Into<String>, value: impl ToString) {
        self.0.push((key.into(), value.to_string()));
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.0.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }

    pub fn render(&self) -> String {
        self.0.iter().map(|(k, v)| format!("{k}={v}\n")).collect()
    }
}
