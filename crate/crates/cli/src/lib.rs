//! Model-file ingestion, task execution and report emission.

pub mod corpus;
pub mod error;
pub mod model;
pub mod report;
pub mod run;

pub use error::CliError;
pub use model::{parse_model, parse_model_value, ModelFile, Task};
pub use report::{emit_report, Format};
pub use run::{run_model, Report, RunOptions};

/// Parses and runs a model, returning the rendered report and exit code.
pub fn run_text(text: &str, format: Format, opts: RunOptions) -> Result<(String, i32), CliError> {
    let model = parse_model(text)?;
    let report = run_model(&model, opts);
    Ok((emit_report(&report, format), report.exit_code()))
}
