//! Engine errors. Validation errors name the offending data so that a failing
//! fixture can be fixed by reading the message alone.

use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    /// Composition table disagrees on a composable triple h∘(g∘f) ≠ (h∘g)∘f.
    #[error("associativity violation in `{category}` on triple ({f}, {g}, {h}): {detail}")]
    AssociativityViolation {
        category: String,
        f: String,
        g: String,
        h: String,
        detail: String,
    },

    /// An identity arrow fails to be neutral, or is missing.
    #[error("identity violation in `{category}` at `{at}`: {detail}")]
    IdentityViolation {
        category: String,
        at: String,
        detail: String,
    },

    /// An arrow or table entry refers to data with mismatched endpoints.
    #[error("dangling arrow in `{category}`: `{arrow}`: {detail}")]
    DanglingArrow {
        category: String,
        arrow: String,
        detail: String,
    },

    #[error("unknown object `{object}` in `{category}`")]
    UnknownObject { category: String, object: String },

    #[error("unknown arrow `{arrow}` in `{category}`")]
    UnknownArrow { category: String, arrow: String },

    /// Two values that must live over the same base category do not.
    #[error("base mismatch: {0}")]
    BaseMismatch(String),

    /// A functor fails to preserve sources, targets, identities or composites.
    #[error("invalid functor `{functor}`: {detail}")]
    InvalidFunctor { functor: String, detail: String },

    /// A set-valued functor fails functoriality.
    #[error("invalid action `{action}`: {detail}")]
    InvalidAction { action: String, detail: String },

    /// A transformation family fails a naturality square.
    #[error("naturality violation at `{arrow}`: {detail}")]
    NaturalityViolation { arrow: String, detail: String },

    #[error("duplicate label `{0}` in finite set")]
    DuplicateLabel(String),

    /// A construction or search exceeded the configured bounds.
    #[error("size limit exceeded: {what} = {actual} > {bound}")]
    SizeLimitExceeded {
        what: String,
        actual: usize,
        bound: usize,
    },

    /// Anything the two-valued models reject (membership / closure errors).
    #[error("type mismatch: {0}")]
    TypeMismatch(String),

    /// Engine self-check failure: two routes that must agree did not.
    /// Surfacing this verbatim is the point; it is never caught internally.
    #[error("engine bug: {0}")]
    EngineBug(String),
}

impl Error {
    pub fn size(what: impl Into<String>, actual: usize, bound: usize) -> Self {
        Error::SizeLimitExceeded {
            what: what.into(),
            actual,
            bound,
        }
    }

    pub fn is_size_limit(&self) -> bool {
        matches!(self, Error::SizeLimitExceeded { .. })
    }
}
