//! Exact computations around the cut-and-join equation: symmetric-group
//! characters, graded power series in `p_1, p_2, …`, generating series of
//! Hurwitz numbers via the Burnside formula, and the combinatorial side of
//! the Mariño–Vafa formula.

pub mod characters;
pub mod cli;
pub mod coeffring;
pub mod error;
pub mod hurwitz;
pub mod marinovafa;
pub mod partitions;
pub mod pseries;
pub mod report;
pub mod suites;

pub use error::{Error, Result};
pub use partitions::{enumerate_partitions, Partition};
pub use report::VerificationReport;
