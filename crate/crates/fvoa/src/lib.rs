//! Exact combinatorial verification for the binary codes attached to a
//! Virasoro frame of the moonshine module.
//!
//! Everything here is bit-exact: GF(2) linear algebra on packed words, weight
//! enumeration with arbitrary-precision counts, Steiner systems extracted from
//! weight-4 codewords, constructive spanning certificates, the Ising fusion
//! ring, and the frozen decomposition table of the Griess algebra.  The
//! [`suite`] module packages the individual checks into claim records that the
//! CLI renders as text or JSON reports.

pub mod certify;
pub mod codes;
pub mod designs;
mod error;
pub mod frame;
pub mod gf2;
pub mod rational;
pub mod report;
pub mod suite;

pub use error::{Error, Result};
