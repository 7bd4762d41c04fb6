//! Experiment harness for the general-intersection, general-product and
//! Tor inequalities of graded ideals: ideal-file parsing, verification
//! suites, conjecture fuzzing and machine-readable reports.

pub mod fuzz;
pub mod parse;
pub mod report;
pub mod suites;

pub use parse::{parse_ideal_file, ParsedFile};
pub use report::{InstanceReport, ReportRow, VerificationReport, Verdict};
pub use suites::{ExperimentConfig, Suite};
