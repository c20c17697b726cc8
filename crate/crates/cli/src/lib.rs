//! The `cutseq` command line: argument parsing, JSON envelopes and exit codes.
//!
//! Exit codes: 0 success, 1 internal disagreement between two methods,
//! 2 invalid input, 3 inconclusive (a search bound was reached).

use std::io::{BufRead, Write};

use clap::Parser;
use serde_json::{json, Value};
use thiserror::Error;

pub mod args;
mod commands;
pub use commands::seed_decimal;
pub mod render;

pub use args::{Cli, Command, Output};

pub const SCHEMA: &str = "cutseq/1";
pub const DEFAULT_PRECISION: usize = 200;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Invalid(String),
    #[error("{0}")]
    Inconclusive(String),
    #[error("{0}")]
    Internal(String),
}

impl CliError {
    pub fn code(&self) -> i32 {
        match self {
            CliError::Internal(_) => 1,
            CliError::Invalid(_) => 2,
            CliError::Inconclusive(_) => 3,
        }
    }

    fn label(&self) -> &'static str {
        match self {
            CliError::Internal(_) => "internal",
            CliError::Invalid(_) => "invalid_input",
            CliError::Inconclusive(_) => "inconclusive",
        }
    }
}

impl From<cutseq_exact::ExactError> for CliError {
    fn from(e: cutseq_exact::ExactError) -> Self {
        CliError::Invalid(e.to_string())
    }
}

impl From<cutseq_cf::CfError> for CliError {
    fn from(e: cutseq_cf::CfError) -> Self {
        CliError::Invalid(e.to_string())
    }
}

impl From<cutseq_geodesic::CodeError> for CliError {
    fn from(e: cutseq_geodesic::CodeError) -> Self {
        match e {
            cutseq_geodesic::CodeError::NotLifted(_) => CliError::Inconclusive(e.to_string()),
            _ => CliError::Invalid(e.to_string()),
        }
    }
}

impl From<cutseq_dynamics::DynError> for CliError {
    fn from(e: cutseq_dynamics::DynError) -> Self {
        use cutseq_dynamics::DynError as D;
        match e {
            D::Disagreement(_) => CliError::Internal(e.to_string()),
            D::Code(c) => c.into(),
            _ => CliError::Invalid(e.to_string()),
        }
    }
}

/// Result of one subcommand.
#[derive(Debug, Default)]
pub struct Outcome {
    pub inputs: Value,
    pub outputs: Value,
    pub diagnostics: Vec<String>,
    pub inconclusive: bool,
    pub svg: Option<String>,
}

impl Outcome {
    pub fn code(&self) -> i32 {
        if self.inconclusive {
            3
        } else {
            0
        }
    }
}

/// Decimal precision from `CUTSEQ_PRECISION`.
pub fn precision() -> Result<usize, CliError> {
    match std::env::var("CUTSEQ_PRECISION") {
        Err(_) => Ok(DEFAULT_PRECISION),
        Ok(s) => match s.trim().parse::<usize>() {
            Ok(n) if (10..=100_000).contains(&n) => Ok(n),
            _ => Err(CliError::Invalid(format!("CUTSEQ_PRECISION must be an integer in 10..=100000, got {s:?}"))),
        },
    }
}

const COMMANDS: [&str; 13] = [
    "expand", "evaluate", "convert", "code", "parse", "lift", "length", "equiv", "periodic", "measure-check", "birkhoff",
    "render", "classify",
];

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Expand { .. } => "expand",
        Command::Evaluate(_) => "evaluate",
        Command::Convert { .. } => "convert",
        Command::Code { .. } => "code",
        Command::Parse { .. } => "parse",
        Command::Lift { .. } => "lift",
        Command::Length { .. } => "length",
        Command::Equiv { .. } => "equiv",
        Command::Periodic { .. } => "periodic",
        Command::MeasureCheck { .. } => "measure-check",
        Command::Birkhoff { .. } => "birkhoff",
        Command::Render { .. } => "render",
        Command::Classify { .. } => "classify",
        Command::Batch => "batch",
    }
}

pub fn envelope(command: &str, o: &Outcome) -> Value {
    json!({
        "schema": SCHEMA,
        "command": command,
        "inputs": o.inputs,
        "outputs": o.outputs,
        "diagnostics": o.diagnostics,
    })
}

pub fn error_envelope(command: &str, e: &CliError) -> Value {
    json!({
        "schema": SCHEMA,
        "command": command,
        "error": { "code": e.code(), "kind": e.label(), "message": e.to_string() },
    })
}

/// Runs one parsed command; returns the document to print and the exit code.
fn execute(cli: Cli, compact: bool) -> (String, i32) {
    let name = command_name(&cli.command);
    let default_output = if matches!(cli.command, Command::Render { .. }) { Output::Svg } else { Output::Json };
    let output = cli.output.unwrap_or(default_output);
    let dump = |v: &Value| {
        if compact {
            serde_json::to_string(v).unwrap()
        } else {
            serde_json::to_string_pretty(v).unwrap()
        }
    };
    match commands::dispatch(cli.command, output) {
        Ok(o) => {
            let text = match (output, &o.svg) {
                (Output::Svg, Some(svg)) if !compact => svg.trim_end().to_string(),
                _ => dump(&envelope(name, &o)),
            };
            (text, o.code())
        }
        Err(e) => (dump(&error_envelope(name, &e)), e.code()),
    }
}

/// Turns `{"command": "expand", "kind": "ocf", ...}` into an argument vector.
pub fn request_argv(line: &str) -> Result<Vec<String>, CliError> {
    let v: Value = serde_json::from_str(line).map_err(|e| CliError::Invalid(format!("bad request: {e}")))?;
    let Value::Object(map) = v else {
        return Err(CliError::Invalid("request must be a JSON object".into()));
    };
    let command = map
        .get("command")
        .and_then(Value::as_str)
        .ok_or_else(|| CliError::Invalid("request needs a \"command\" string".into()))?;
    if command == "batch" {
        return Err(CliError::Invalid("batch requests cannot nest".into()));
    }
    if !COMMANDS.contains(&command) {
        return Err(CliError::Invalid(format!("unknown command {command:?}")));
    }
    let mut argv = vec!["cutseq".to_string(), command.to_string()];
    for (k, v) in &map {
        if k == "command" {
            continue;
        }
        let flag = format!("--{}", k.replace('_', "-"));
        match v {
            Value::Bool(true) => argv.push(flag),
            Value::Bool(false) | Value::Null => {}
            Value::String(s) => argv.extend([flag, s.clone()]),
            other => argv.extend([flag, other.to_string()]),
        }
    }
    Ok(argv)
}

/// Entry point shared by the binary and the tests.
pub fn run<I, S>(argv: I, stdin: &mut dyn BufRead, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    0
                }
                _ => {
                    let _ = write!(err, "{e}");
                    2
                }
            };
        }
    };
    if !matches!(cli.command, Command::Batch) {
        let (text, code) = execute(cli, false);
        let _ = writeln!(out, "{text}");
        return code;
    }
    let mut worst = 0;
    for line in stdin.lines() {
        let Ok(line) = line else { return 2 };
        if line.trim().is_empty() {
            continue;
        }
        let (text, code) = match request_argv(&line) {
            Err(e) => (serde_json::to_string(&error_envelope("batch", &e)).unwrap(), e.code()),
            Ok(argv) => match Cli::try_parse_from(&argv) {
                Ok(c) => execute(c, true),
                Err(e) => {
                    let e = CliError::Invalid(e.to_string().trim().to_string());
                    (serde_json::to_string(&error_envelope(&argv[1], &e)).unwrap(), 2)
                }
            },
        };
        let _ = writeln!(out, "{text}");
        worst = worst.max(code);
    }
    worst
}
