//! Construction and verification of constant-composition, nonbinary
//! constant-weight and multiply constant-weight codes via decompositions of
//! edge-colored complete digraphs.
//!
//! The crate is organized around the pipeline
//!
//! ```text
//! bound -> family -> invariants -> search -> construct -> verify
//! ```
//!
//! * [`model`] — codewords, codes and edge-colored digraphs, with the metric
//!   and counting primitives everything else builds on.
//! * [`bounds`] — Johnson-type upper bounds on code sizes, evaluated in exact
//!   integer arithmetic.
//! * [`families`] — generators for the digraph families whose decompositions
//!   yield codes.
//! * [`invariants`] — the decomposition invariants alpha/beta, admissibility
//!   and the divisibility conditions a decomposition of `K_n^(r)` must meet.
//! * [`search`] — an exact-cover search for (superpure) decompositions at
//!   small `n`, plus an independent decomposition verifier.
//! * [`codes`] — conversion of decompositions into codes and direct
//!   verification of codes against the pairwise conditions, distances and
//!   bounds.
//! * [`cli`] — the command-line surface tying the modules together.

pub mod bounds;
pub mod cli;
pub mod codes;
pub mod error;
pub mod families;
pub mod invariants;
pub mod model;
pub mod search;

pub use error::{Error, Result};
