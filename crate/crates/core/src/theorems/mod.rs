//! Executable forms of the identities and extremal bounds.

pub mod bounds;
pub mod extremal;
pub mod identities;
pub mod report;

pub use bounds::*;
pub use extremal::*;
pub use identities::*;
pub use report::{Counterexample, ExtremalRecord, F1Row, Params, Status, VerificationReport};
