//! Command-line front end for `cubic3-core`.
//!
//! [`run`] parses an argument vector, dispatches to the library and returns a
//! [`CommandResult`] that renders either as plain text or as JSON. JSON keys
//! are sorted and every integer or rational that can grow without bound is a
//! decimal string (`"729"`, `"-225/4"`), so identical inputs give identical
//! bytes. Counts, ranks and line numbers are plain JSON numbers.
//!
//! Exit codes: 0 on success, 1 on a domain error (bad input form, violated
//! precondition), 2 on a usage error.

mod args;
mod commands;
mod render;

use clap::Parser;
use serde_json::{json, Map, Value};

pub use args::Cli;

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Clone, Debug, PartialEq)]
pub struct ErrorInfo {
    /// Stable identifier such as `syntax` or `precondition`.
    pub code: String,
    pub message: String,
    /// Byte offset into the offending input, for parse errors.
    pub position: Option<usize>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct CommandResult {
    pub op: String,
    /// Canonical rendering of the inputs.
    pub input_echo: String,
    pub result: Value,
    /// Plain-text rendering of `result`.
    pub text: String,
    pub warnings: Vec<String>,
    pub error: Option<ErrorInfo>,
    pub exit_code: i32,
    pub json: bool,
}

impl CommandResult {
    pub fn to_json(&self) -> Value {
        let mut m = Map::new();
        m.insert("op".into(), json!(self.op));
        m.insert("input".into(), json!(self.input_echo));
        m.insert("exit_code".into(), json!(self.exit_code));
        m.insert("warnings".into(), json!(self.warnings));
        match &self.error {
            Some(e) => {
                let mut err = Map::new();
                err.insert("code".into(), json!(e.code));
                err.insert("message".into(), json!(e.message));
                if let Some(p) = e.position {
                    err.insert("position".into(), json!(p));
                }
                m.insert("error".into(), Value::Object(err));
            }
            None => {
                m.insert("result".into(), self.result.clone());
            }
        }
        Value::Object(m)
    }

    /// What the binary prints on standard output.
    pub fn stdout(&self) -> String {
        if self.json {
            let mut s = serde_json::to_string_pretty(&self.to_json()).expect("serializable");
            s.push('\n');
            s
        } else if self.error.is_none() {
            let mut s = self.text.clone();
            if !s.is_empty() && !s.ends_with('\n') {
                s.push('\n');
            }
            s
        } else {
            String::new()
        }
    }

    /// What the binary prints on standard error: warnings, and the error in
    /// plain-text mode.
    pub fn stderr(&self) -> String {
        if self.json {
            return String::new();
        }
        let mut s: String = self.warnings.iter().map(|w| format!("warning: {w}\n")).collect();
        if let Some(e) = &self.error {
            if e.code == "usage" {
                s.push_str(&e.message);
                if !s.ends_with('\n') {
                    s.push('\n');
                }
                return s;
            }
            match e.position {
                Some(p) => s.push_str(&format!("error[{}] at position {p}: {}\n", e.code, e.message)),
                None => s.push_str(&format!("error[{}]: {}\n", e.code, e.message)),
            }
        }
        s
    }
}

/// Parses and runs one command, reading `CUBIC3_THREADS` from the
/// environment.
pub fn run<I, S>(argv: I) -> CommandResult
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    run_with_threads_env(argv, std::env::var("CUBIC3_THREADS").ok())
}

/// As [`run`], with the value of `CUBIC3_THREADS` passed explicitly.
pub fn run_with_threads_env<I, S>(argv: I, threads_env: Option<String>) -> CommandResult
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let argv: Vec<String> = argv.into_iter().map(Into::into).collect();
    let json = argv.iter().any(|a| a == "--json");
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let benign = matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion);
            let op = argv.get(1).cloned().unwrap_or_default();
            return CommandResult {
                op,
                input_echo: argv.iter().skip(1).cloned().collect::<Vec<_>>().join(" "),
                result: Value::Null,
                text: e.to_string(),
                warnings: Vec::new(),
                error: (!benign).then(|| ErrorInfo { code: "usage".into(), message: e.to_string(), position: None }),
                exit_code: if benign { EXIT_OK } else { EXIT_USAGE },
                json: json && !benign,
            };
        }
    };
    let threads = match threads_env {
        Some(v) => match v.trim().parse::<usize>() {
            Ok(n) if n > 0 => n,
            _ => {
                return CommandResult {
                    op: String::new(),
                    input_echo: String::new(),
                    result: Value::Null,
                    text: String::new(),
                    warnings: Vec::new(),
                    error: Some(ErrorInfo {
                        code: "usage".into(),
                        message: format!("CUBIC3_THREADS must be a positive integer, got {v:?}"),
                        position: None,
                    }),
                    exit_code: EXIT_USAGE,
                    json: cli.json,
                }
            }
        },
        None => cli.threads.max(1),
    };
    commands::dispatch(cli.command, threads, cli.json)
}
