//! Library surface of the `actegory` command: the line-oriented text format
//! for categories, functors, actions and profunctors, the workspace that
//! holds named values, the prefix expression evaluator and the report
//! serialization.

pub mod expr;
pub mod format;
pub mod report;
pub mod workspace;

pub use workspace::Workspace;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}:{line}: parse error: {msg}")]
    Parse { path: String, line: usize, msg: String },

    #[error("name `{0}` already defined")]
    NameClash(String),

    #[error("unknown name `{0}`")]
    UnknownName(String),

    #[error("arity error: {0}")]
    Arity(String),

    #[error("expression error: {0}")]
    Expr(String),

    #[error(transparent)]
    Engine(#[from] actegory_core::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, CliError>;
