//! Exact computations with finitely generated subgroups of free groups.
//!
//! The Cayley graph of a free group is a tree, which makes the coarse
//! geometry of subgroups exactly computable: Stallings automata answer
//! membership and intersection questions, coset geometry (distances,
//! projections, barycenters) is evaluated on the tree itself, and the
//! quasimorphism extension operators are realized with measured constants
//! instead of existential ones. Every nontrivial search is backed by a
//! brute-force oracle in the test suite.

pub mod words;
pub mod stallings;
mod automata;
pub mod treegeo;
pub mod heightwidth;
pub mod qmorph;
pub mod io;
pub mod verify;

pub use words::FreeWord;
pub use stallings::StallingsGraph;
pub use treegeo::CosetRef;
pub use qmorph::Quasimorphism;

/// Crate version reported in every JSON report for reproducibility.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(u32, u32),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("search budget exhausted: {0}")]
    Budget(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error("bad JSON: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
