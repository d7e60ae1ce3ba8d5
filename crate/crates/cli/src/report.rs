use serde::Serialize;
use serde_json::Value;

#[derive(Serialize)]
pub struct Report {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: String,
    pub input: Value,
    pub result: Value,
    pub timing_ms: u64,
    #[serde(skip)]
    pub text: String,
}

impl Report {
    pub fn new(command: &str, input: Value, result: Value, timing_ms: u64, text: String) -> Self {
        Report {
            tool: "degenera",
            version: env!("CARGO_PKG_VERSION"),
            command: command.to_string(),
            input,
            result,
            timing_ms,
            text,
        }
    }
}
