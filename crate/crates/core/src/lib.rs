//! Exact random-walk and resistance-distance invariants of connected graphs,
//! with closed-form evaluation and exhaustive verification for unicyclic
//! graphs.
//!
//! Every quantity the crate reports (effective resistances, hitting times,
//! cover costs, Kirchhoff-type indices) is an exact [`Rational`]. Floating
//! point only appears in the Monte-Carlo walker in [`walk::simulate`].

pub mod closed;
pub mod error;
pub mod graph;
pub mod numeric;
pub mod report;
pub mod resistance;
pub mod theorems;
pub mod walk;

pub use error::{Error, Result};
pub use graph::{Certificate, Graph, UnicyclicDecomposition};
pub use numeric::{Rational, RationalMatrix};
pub use resistance::ResistanceMatrix;
pub use walk::HittingTimeMatrix;

/// Toolkit version stamped into reports.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
