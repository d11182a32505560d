//! Command-line harness around `tradeoff-core`: seeded generators, text
//! formats, ratio sweeps with optional oracle certification, and gadget
//! export.

pub mod cli;
pub mod formats;
pub mod generate;
pub mod problem;
pub mod report;

pub use generate::{generate, Instance, InstanceSpec};
pub use problem::{Format, Outcome, Param, Problem};
pub use report::{sweep, verify, Row};
