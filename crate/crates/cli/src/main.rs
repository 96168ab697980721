mod args;
mod render;
mod report;

use std::io::Write;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;
use serde::Serialize;

use args::{Cli, Command, CyclicCommand};
use report::Report;

#[derive(Debug)]
pub enum CliError {
    Usage { code: &'static str, message: String },
    Domain(clambda_core::Error),
    Io(String),
}

impl From<clambda_core::Error> for CliError {
    fn from(e: clambda_core::Error) -> Self {
        CliError::Domain(e)
    }
}

impl CliError {
    pub fn usage(message: impl Into<String>) -> Self {
        CliError::Usage { code: "Usage", message: message.into() }
    }

    /// Input that failed to parse is reported as a usage error.
    pub fn bad_input(e: clambda_core::Error) -> Self {
        CliError::Usage { code: e.code(), message: e.to_string() }
    }

    fn code(&self) -> &'static str {
        match self {
            CliError::Usage { code, .. } => code,
            CliError::Domain(e) => e.code(),
            CliError::Io(_) => "Io",
        }
    }

    fn message(&self) -> String {
        match self {
            CliError::Usage { message, .. } | CliError::Io(message) => message.clone(),
            CliError::Domain(e) => e.to_string(),
        }
    }

    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage { .. } => 2,
            CliError::Domain(_) | CliError::Io(_) => 1,
        }
    }
}

#[derive(Serialize)]
struct ErrorBody<'a> {
    code: &'a str,
    message: String,
}

#[derive(Serialize)]
struct ErrorEnvelope<'a> {
    error: ErrorBody<'a>,
}

fn fail(e: &CliError) -> ExitCode {
    let envelope = ErrorEnvelope { error: ErrorBody { code: e.code(), message: e.message() } };
    let text = serde_json::to_string(&envelope).expect("error envelope serializes");
    let _ = writeln!(std::io::stderr(), "{text}");
    ExitCode::from(e.exit_code())
}

fn run(cli: Cli) -> Result<String, CliError> {
    let format = cli.format;
    match cli.command {
        Command::Spectrum(a) => report::spectrum(&a.params.resolve()?, a.levels)?.emit(format),
        Command::Classify(a) => report::classify(&a.params.resolve()?, a.max_n)?.emit(format),
        Command::VerifyAlgebra(a) => {
            let p = a.params.resolve()?;
            report::verify_algebra(&p, a.dim, a.tol, a.dump_dir.as_deref())?.emit(format)
        }
        Command::Cyclic { command } => match command {
            CyclicCommand::Extract(a) => report::cyclic_extract(&a.params.resolve()?, a.levels)?.emit(format),
            CyclicCommand::Match(a) => report::cyclic_match(&a.spec()?, a.levels)?.emit(format),
        },
        Command::Pssqm(a) => report::pssqm(&a.config()?, a.tol, &a.checks())?.emit(format),
        Command::Figure(a) => report::figure(&a)?.emit(format),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let rendered = e.render().to_string();
            let first = rendered.lines().next().unwrap_or_default();
            return fail(&CliError::usage(first.trim_start_matches("error: ")));
        }
    };
    match run(cli) {
        Ok(text) => {
            let mut out = std::io::stdout().lock();
            if out.write_all(text.as_bytes()).and_then(|_| out.flush()).is_err() {
                return fail(&CliError::Io("failed to write to stdout".into()));
            }
            ExitCode::SUCCESS
        }
        Err(e) => fail(&e),
    }
}
