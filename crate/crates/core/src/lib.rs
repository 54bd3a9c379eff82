//! Exact computational engine for octonions, Euclidean Jordan algebras and
//! derivation-based differential calculus over them.

pub mod composition;
pub mod connections;
pub mod derivations;
pub mod error;
pub mod exact;
pub mod exceptional;
pub mod forms;
pub mod homotopy;
pub mod jordan;
pub mod modules;
pub mod random;
pub mod report;
pub mod suites;

pub use error::{AlbertError, Result};
