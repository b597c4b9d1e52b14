use std::io::{self, Write};
use std::time::Instant;

use serde::Serialize;
use serde_json::{Map, Value};

/// What every command prints last on stdout.
#[derive(Serialize)]
pub struct Envelope<'a> {
    pub command: &'a str,
    pub params: Map<String, Value>,
    pub result: Value,
    pub elapsed_ms: f64,
}

pub fn params<const N: usize>(pairs: [(&str, Value); N]) -> Map<String, Value> {
    pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}

pub fn emit_line<T: Serialize>(value: &T) {
    let line = serde_json::to_string(value).expect("serializable");
    let mut out = io::stdout().lock();
    // a closed pipe is not worth a panic
    let _ = writeln!(out, "{line}");
}

pub fn emit_envelope(command: &str, params: Map<String, Value>, result: Value, start: Instant) {
    emit_line(&Envelope {
        command,
        params,
        result,
        elapsed_ms: start.elapsed().as_secs_f64() * 1e3,
    });
}
