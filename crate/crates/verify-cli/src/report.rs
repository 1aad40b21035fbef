//! Report structures.  The JSON report is the machine contract: identical
//! configuration and seed produce identical bytes, except for the elapsed
//! time fields.

use serde::Serialize;

#[derive(Serialize)]
pub struct ConfigEcho {
    pub ring: String,
    pub target: Option<String>,
    pub checks: Vec<String>,
    pub samples: usize,
    pub seed: u64,
    pub mutate: Option<String>,
}

#[derive(Serialize)]
pub struct CheckRecord {
    pub name: String,
    pub target: String,
    pub ring: String,
    pub samples: usize,
    pub passed: u64,
    pub failed: u64,
    pub witnesses: Vec<String>,
    pub seed: u64,
    pub elapsed_ms: u128,
}

#[derive(Serialize)]
pub struct Report {
    pub schema: u32,
    pub config: ConfigEcho,
    pub checks: Vec<CheckRecord>,
    pub all_passed: bool,
}

impl Report {
    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("report serializes");
        text.push('\n');
        text
    }
}
