//! Command-line front end: parses argv, dispatches into gfkit and renders a
//! result envelope as JSON, CSV or text.

pub mod args;
mod commands;
pub mod envelope;

use clap::error::ErrorKind;
use clap::Parser;

use args::Cli;
use envelope::{Envelope, Format};

/// Exit codes.
pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

/// Runs one command; `argv[0]` is the program name.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion | ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand
                    if e.exit_code() == 0 =>
                {
                    Outcome { stdout: e.render().to_string(), stderr: String::new(), code: EXIT_OK }
                }
                _ => {
                    let message = e.render().to_string();
                    let env = Envelope::Error { message: first_line(&message) };
                    Outcome { stdout: env.render(Format::Json), stderr: message, code: EXIT_USAGE }
                }
            };
        }
    };
    let format = cli.format;
    match commands::dispatch(cli.command) {
        Ok(env) => Outcome { stdout: env.render(format), stderr: String::new(), code: EXIT_OK },
        Err(err) => {
            let code = if matches!(err, gfkit::GfError::Parse(_)) { EXIT_USAGE } else { EXIT_DOMAIN };
            let env = Envelope::Error { message: err.to_string() };
            Outcome { stdout: env.render(format), stderr: String::new(), code }
        }
    }
}

fn first_line(s: &str) -> String {
    s.lines().next().unwrap_or_default().trim_start_matches("error: ").to_string()
}
