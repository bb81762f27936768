//! Verification harness and JSON formats behind the `affpaths` binary.

pub mod harness;
pub mod json;
mod suites;

pub use harness::{run_suite, Bounds, CheckResult, Status, VerificationReport, Weight};
