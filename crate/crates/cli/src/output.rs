use std::io::Write;

use serde::Serialize;

use crate::{Cli, CliError};

/// Rendered output, and the reason for a non-zero exit if any.
pub struct Outcome {
    pub body: String,
    pub failure: Option<String>,
}

impl Outcome {
    pub fn ok(body: String) -> Self {
        Outcome { body, failure: None }
    }

    pub fn check(body: String, pass: bool, what: &str) -> Self {
        Outcome { body, failure: (!pass).then(|| what.to_string()) }
    }
}

pub fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

pub fn csv<T: Serialize>(rows: &[T]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.serialize(r).expect("in-memory CSV write");
    }
    String::from_utf8(w.into_inner().expect("in-memory CSV flush")).expect("CSV is UTF-8")
}

pub fn emit(cli: &Cli, body: &str) -> Result<(), CliError> {
    match &cli.out {
        Some(path) => std::fs::write(path, body)
            .map_err(|e| CliError::Failure(format!("cannot write {}: {e}", path.display()))),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(body.as_bytes())
                .and_then(|_| out.flush())
                .map_err(|e| CliError::Failure(format!("cannot write to stdout: {e}")))
        }
    }
}
