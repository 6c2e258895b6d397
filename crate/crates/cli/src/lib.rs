//! Batch front end for `unitrace`: a validated run configuration, command
//! dispatch and CSV/JSON report rendering.

pub mod args;
pub mod config;
pub mod report;
pub mod run;

pub use config::{Command, Format, RunConfig};
pub use report::Report;
pub use run::{execute, Outcome};

/// Process exit status for a finished invocation.
pub const EXIT_OK: u8 = 0;
pub const EXIT_INVALID: u8 = 1;
pub const EXIT_VERIFY_FAILED: u8 = 2;

/// Validates, runs and renders a configuration. Returns the exit status and
/// the text for stdout, or the message for stderr.
pub fn run(config: &RunConfig) -> (u8, Result<String, String>) {
    let outcome = config.validate().and_then(|cmd| execute(&cmd));
    match outcome {
        Ok(out) => {
            let text = match config.format() {
                Format::Csv => out.report.to_csv(),
                Format::Json => out.report.to_json(),
            };
            let code = if out.failed { EXIT_VERIFY_FAILED } else { EXIT_OK };
            (code, Ok(text))
        }
        Err(e) => (EXIT_INVALID, Err(e.to_string())),
    }
}
