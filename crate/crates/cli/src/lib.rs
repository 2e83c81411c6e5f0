//! Command-line front end: argument parsing, dispatch and report rendering.

mod commands;
mod render;

use std::collections::BTreeMap;
use std::time::Instant;

use clap::{Parser, ValueEnum};
use serde::Serialize;
use serde_json::Value;

pub use commands::Command;

#[derive(Parser, Debug)]
#[command(name = "surgeryforge", version, about = "Exact Dehn-surgery calculus and verification sweeps")]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,
    /// Worker threads for sweeps; output does not depend on it.
    #[arg(long, env = "SURGERYFORGE_JOBS", global = true)]
    pub jobs: Option<usize>,
    /// Record wall-clock time in `elapsed_ms` (otherwise 0, keeping output byte-stable).
    #[arg(long, global = true)]
    pub timing: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    /// One line per result and counterexample, then a summary object.
    Jsonl,
    Text,
    /// Scalar fields of each result; nested values are dropped.
    Csv,
}

#[derive(Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub parameters: BTreeMap<String, Value>,
    pub results: Vec<Value>,
    pub counterexamples: Vec<Value>,
    pub elapsed_ms: u64,
    pub version: &'static str,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Report {
            command: command.to_string(),
            parameters: BTreeMap::new(),
            results: Vec::new(),
            counterexamples: Vec::new(),
            elapsed_ms: 0,
            version: env!("CARGO_PKG_VERSION"),
        }
    }

    pub fn param(mut self, key: &str, value: impl Serialize) -> Self {
        self.parameters.insert(key.to_string(), to_value(value));
        self
    }

    pub fn result(mut self, value: impl Serialize) -> Self {
        self.results.push(to_value(value));
        self
    }

    /// Adds a sweep report, moving its `counterexamples` list to the top level.
    pub fn sweep(mut self, value: impl Serialize) -> Self {
        let mut v = to_value(value);
        if let Some(Value::Array(cx)) = v.as_object_mut().and_then(|o| o.remove("counterexamples")) {
            self.counterexamples.extend(cx);
        }
        self.results.push(v);
        self
    }
}

pub(crate) fn to_value(v: impl Serialize) -> Value {
    serde_json::to_value(v).expect("reports serialize to JSON")
}

/// Exit code and rendered output. Usage and input errors exit 2 with the
/// message on stderr; non-empty counterexamples exit 1.
pub fn run<I, T>(argv: I) -> (i32, String, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 { (0, text, String::new()) } else { (2, String::new(), text) };
        }
    };
    let start = Instant::now();
    let jobs = cli.jobs;
    let outcome = surgeryforge::sweep::with_jobs(jobs, || commands::execute(&cli.command, jobs));
    match outcome {
        Ok(mut report) => {
            if cli.timing {
                report.elapsed_ms = start.elapsed().as_millis() as u64;
            }
            let code = if report.counterexamples.is_empty() { 0 } else { 1 };
            (code, render::render(&report, cli.format), String::new())
        }
        Err(e) => (2, String::new(), format!("error: {e}\n")),
    }
}
