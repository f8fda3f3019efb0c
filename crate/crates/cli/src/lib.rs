//! Library half of the `udenom` binary. Every command renders to a `String`
//! so tests can drive them without spawning processes.

pub mod commands;
pub mod error;
pub mod output;
pub mod report;

pub use commands::{cmd_binary_forms, cmd_cyclo, cmd_finite, cmd_torus, CycloOp, Method};
pub use error::{CliError, ExitCode};
pub use output::OutputForm;
pub use report::{paper_report, render_report, ReportItem};
