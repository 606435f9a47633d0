//! Output: a JSON run report or plain text, plus exit codes.

use arrangement_core::arrangement::ArrangementError;
use arrangement_core::digraph::DigraphError;
use arrangement_core::freeness::FreenessError;
use arrangement_core::oracle::OracleError;
use serde::Serialize;
use serde_json::Value;
use std::process::ExitCode;
use std::time::Duration;

pub const EXIT_ASSERTION: u8 = 1;
pub const EXIT_INPUT: u8 = 2;
pub const EXIT_PRECONDITION: u8 = 3;
pub const EXIT_GUARD: u8 = 4;
pub const EXIT_COMPUTE: u8 = 5;

#[derive(Clone, Debug, Serialize)]
pub struct Failure {
    pub check: String,
    pub detail: Value,
}

#[derive(Debug, Serialize)]
pub struct InputEcho {
    pub label: String,
    pub digest: String,
}

/// Everything a command produces. Only `timing_ms` depends on the run.
#[derive(Debug, Serialize)]
pub struct RunReport {
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub input: Option<InputEcho>,
    pub results: Value,
    pub failures: Vec<Failure>,
    pub ok: bool,
    pub timing_ms: u128,
    #[serde(skip)]
    pub text: Vec<String>,
}

impl RunReport {
    pub fn new(command: String) -> Self {
        RunReport { command, input: None, results: Value::Null, failures: Vec::new(), ok: true, timing_ms: 0, text: Vec::new() }
    }

    pub fn line(&mut self, s: impl Into<String>) {
        self.text.push(s.into());
    }

    /// Records a check; failures are kept and turn the exit code nonzero.
    pub fn check(&mut self, name: impl Into<String>, passed: bool, detail: Value) -> bool {
        if !passed {
            self.failures.push(Failure { check: name.into(), detail });
            self.ok = false;
        }
        passed
    }

    pub fn emit(mut self, json: bool, took: Duration) -> ExitCode {
        self.timing_ms = took.as_millis();
        if json {
            println!("{}", serde_json::to_string_pretty(&self).expect("report serializes"));
        } else {
            for l in &self.text {
                println!("{l}");
            }
            for f in &self.failures {
                println!("FAIL {}: {}", f.check, f.detail);
            }
            eprintln!("({} ms)", self.timing_ms);
        }
        if self.ok {
            ExitCode::SUCCESS
        } else {
            ExitCode::from(EXIT_ASSERTION)
        }
    }
}

/// Exit code for an error raised before a report could be produced.
pub fn exit_code_for(e: &anyhow::Error) -> u8 {
    for cause in e.chain() {
        if let Some(d) = cause.downcast_ref::<DigraphError>() {
            return digraph_code(d);
        }
        if let Some(a) = cause.downcast_ref::<ArrangementError>() {
            return arrangement_code(a);
        }
        if let Some(o) = cause.downcast_ref::<OracleError>() {
            return match o {
                OracleError::TooLarge { .. } => EXIT_GUARD,
                OracleError::Arrangement(a) => arrangement_code(a),
                _ => EXIT_COMPUTE,
            };
        }
        if let Some(f) = cause.downcast_ref::<FreenessError>() {
            return match f {
                FreenessError::Arrangement(a) => arrangement_code(a),
                _ => EXIT_COMPUTE,
            };
        }
        if cause.downcast_ref::<serde_json::Error>().is_some() || cause.downcast_ref::<std::io::Error>().is_some() {
            return EXIT_INPUT;
        }
    }
    EXIT_INPUT
}

fn digraph_code(d: &DigraphError) -> u8 {
    match d {
        DigraphError::NotACoking { .. }
        | DigraphError::NotAKing { .. }
        | DigraphError::EmptyWeight { .. }
        | DigraphError::SupportNotClosed { .. } => EXIT_PRECONDITION,
        DigraphError::TooLarge { .. } => EXIT_GUARD,
        _ => EXIT_INPUT,
    }
}

fn arrangement_code(a: &ArrangementError) -> u8 {
    match a {
        ArrangementError::Digraph(d) => digraph_code(d),
        ArrangementError::ConditionCViolated { .. } | ArrangementError::NotCentral => EXIT_PRECONDITION,
        ArrangementError::TooManyHyperplanes { .. } => EXIT_GUARD,
        ArrangementError::ZeroNormal | ArrangementError::DimensionMismatch { .. } => EXIT_INPUT,
        _ => EXIT_COMPUTE,
    }
}

/// JSON record printed for errors that stop a command.
pub fn error_record(command: &str, e: &anyhow::Error, code: u8) -> Value {
    let causes: Vec<String> = e.chain().map(|c| c.to_string()).collect();
    serde_json::json!({ "command": command, "ok": false, "exit_code": code, "error": causes })
}
