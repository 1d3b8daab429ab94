//! Independent reference implementations and property checks.
//!
//! Nothing in here is on the production path. The sequence enumeration and
//! the apex case formulas exist to be compared against the closed-form
//! engine in [`crate::coopetition`] and [`crate::decisiveness`].

pub mod apex;
pub mod generate;
pub mod harness;
pub mod sequences;

pub use apex::apex_closed_forms;
pub use harness::{proposition_harness, CheckOutcome, HarnessReport};
pub use sequences::{
    entry_sequences, so_attitude_by_sequences, so_coopetition_by_sequences, EntrySequence,
};
