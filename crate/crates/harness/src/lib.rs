//! Verification suites, test-function family, report emission and expression
//! evaluation behind the `tfnorm` command-line tool.

pub mod config;
pub mod error;
pub mod eval;
pub mod family;
pub mod io;
pub mod report;
pub mod suites;

pub use config::{LocalKind, VerifyConfig};
pub use error::{HarnessError, Result};
pub use report::{Check, Format, GroupSummary, Report, Row};
pub use suites::{run_convergence, run_verification, ConvergenceReport, SUITE_IDS};
