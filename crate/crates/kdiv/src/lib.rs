//! Command-line front end for `kdiv-core`.
//!
//! [`run`] parses arguments, evaluates one command and writes either an
//! aligned table or a JSON document. JSON keys are sorted and every number
//! is a decimal string, so output is byte-stable.

use std::ffi::OsString;
use std::io::Write;

use clap::error::ErrorKind;
use clap::{CommandFactory, Parser};

pub mod cli;
pub mod render;
pub mod report;

pub use report::{verify_paper, Entry, Report};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_DOMAIN: i32 = 2;
pub const EXIT_REPORT_FAILED: i32 = 3;

/// Usage line of the deepest subcommand named in `args`.
fn usage_for(args: &[OsString]) -> String {
    let mut root = cli::Cli::command();
    root.build();
    let mut cmd = &root;
    for a in args.iter().skip(1).filter_map(|a| a.to_str()) {
        match cmd.find_subcommand(a) {
            Some(sub) => cmd = sub,
            None if a.starts_with('-') => continue,
            None => {}
        }
    }
    cmd.clone().render_usage().to_string()
}

/// Runs one invocation and returns the process exit code. `args` includes
/// the program name.
pub fn run<I, T>(args: I, out: &mut impl Write, err: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let parsed = match cli::Cli::try_parse_from(&args) {
        Ok(c) => c,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{e}");
                    let message = e.to_string();
                    if !message.contains("Usage:") {
                        let _ = write!(err, "\n{}\n", usage_for(&args));
                    }
                    EXIT_USAGE
                }
            }
        }
    };

    if let cli::Command::VerifyPaper = parsed.command {
        let r = verify_paper();
        let body = if parsed.json { render::to_json(&r.to_value()) } else { r.table() };
        let _ = out.write_all(body.as_bytes());
        return if r.all_pass() { EXIT_OK } else { EXIT_REPORT_FAILED };
    }

    match cli::evaluate(&parsed.command) {
        Ok(v) => {
            let body = if parsed.json { render::to_json(&v) } else { render::table(&v) };
            let _ = out.write_all(body.as_bytes());
            EXIT_OK
        }
        Err(e) => {
            if parsed.json {
                let _ = out.write_all(render::to_json(&render::error(&e)).as_bytes());
            }
            let _ = writeln!(err, "error: {e}");
            EXIT_DOMAIN
        }
    }
}
