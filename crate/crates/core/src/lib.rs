//! Learning a hidden strict total order over `n` rules from precedence
//! queries.
//!
//! Two online learners insert rules one at a time into the sequence learned
//! so far: a linear scan that stops at the first later rule
//! ([`learn::block_insert`]) and binary insertion ([`learn::binary_insert`]).
//! Both query a [`CountingOracle`], so the cost of a run is the number of
//! questions asked. [`predict`] holds the closed-form counts those runs are
//! checked against and [`harness`] the instance generators that do the
//! checking.

pub mod error;
pub mod harness;
pub mod learn;
pub mod oracle;
pub mod order;
pub mod predict;

pub use error::{OrderError, Result};
pub use learn::{binary_insert, block_insert, learn_order, Learned};
pub use oracle::CountingOracle;
pub use order::{universe, CostModel, GroundTruthOrder, LearnedSequence, RuleId, Strategy};
