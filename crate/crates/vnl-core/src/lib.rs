//! Computational workbench for finite unital rings.
//!
//! Everything is index-based: a ring of order `n` has elements `0..n`, and all
//! arithmetic goes through the [`Ring`] interface regardless of whether the
//! ring is backed by dense Cayley tables or by structured (computed)
//! arithmetic. On top of that sit exhaustive element-level deciders
//! (regularity, units, exchange witnesses), structure invariants (Jacobson
//! radical, idempotent census, maximal regular ideal, Peirce data), the
//! VNL-family property deciders, and formal triangular matrix rings over
//! verified bimodules.

pub mod construct;
pub mod element;
pub mod error;
pub mod properties;
pub mod ring;
pub mod structure;
pub mod triangular;

pub use construct::BuildConfig;
pub use error::RingError;
pub use ring::Ring;
