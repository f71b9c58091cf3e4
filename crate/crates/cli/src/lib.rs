//! Serialization, reports and verification suites behind the `pfiliform`
//! binary.

pub mod format;
pub mod report;
pub mod suites;

pub use format::{AlgebraFile, FormatError};
pub use report::{Check, Status, SuiteReport};
pub use suites::{run, Suite, SuiteConfig};
