//! Combinatorics of fillings of Young diagrams: the maj, inv, and quinv
//! statistics, charge and cocharge of words, reading words, the four
//! extremal-filling constructions with their maj-preserving bijections,
//! and the generating-function sums they assemble into (modified
//! Macdonald, q-Whittaker, modified Hall–Littlewood), with exhaustive
//! desk-scale verification suites for every identity involved.

pub mod charge;
mod error;
pub mod extremal;
pub mod filling;
pub mod macdonald;
pub mod poly;
pub mod reading;
pub mod shape;
pub mod verify;

pub use error::{Error, Result};
