//! Harness around the finite-ring workbench: a ring-expression DSL, a
//! deterministic corpus of small rings, a registry of executable theorem
//! checks with witness-carrying reports, and counterexample searches for the
//! open questions.

pub mod checks;
pub mod corpus;
pub mod expr;
pub mod report;
pub mod search;

pub use report::{Failure, HarnessError, TheoremReport};
