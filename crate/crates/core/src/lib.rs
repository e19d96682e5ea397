//! Finite-category engine: presheaf and copresheaf actions over a fully
//! tabulated finite category, the complement / tensor / enrichment operators
//! that relate them, discrete (op)fibrations and comprehension, ends and
//! coends, pointwise Kan extensions, and a law registry that verifies the
//! algebra on fuzzed desk-scale instances.
//!
//! Everything is exhaustively validated at construction time and immutable
//! afterwards, so all values are safe to share between threads.

pub mod action;
pub mod catover;
pub mod error;
pub mod fincat;
pub mod funpred;
pub mod lawsuite;
pub mod limits;
pub mod profunctor;
pub mod twovalued;
pub(crate) mod util;

pub use error::Error;
pub use limits::Limits;

/// Convenience alias used across the crate.
pub type Result<T> = std::result::Result<T, Error>;
