//! Versioned JSON reports shared by the command line and the self-test.

use serde::Serialize;
use serde_json::Value;

pub const SCHEMA: u32 = 1;

/// One verification case. `witness` is set on failure and names the inputs
/// and the identity that broke.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Case {
    pub id: String,
    pub check: String,
    pub inputs: Value,
    pub verdict: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
    pub detail: Value,
}

impl Case {
    pub fn new(id: impl Into<String>, check: impl Into<String>, inputs: Value, verdict: bool, detail: Value) -> Case {
        Case { id: id.into(), check: check.into(), inputs, verdict, witness: None, detail }
    }

    pub fn with_witness(mut self, witness: Value) -> Case {
        if !self.verdict {
            self.witness = Some(witness);
        }
        self
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub schema: u32,
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub order: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub pass: bool,
    pub cases: Vec<Case>,
}

impl Report {
    /// Cases are sorted by id so that assembly order never shows up in the
    /// output.
    pub fn new(command: &str, order: Option<u32>, seed: Option<u64>, mut cases: Vec<Case>) -> Report {
        cases.sort_by(|a, b| a.id.cmp(&b.id));
        let pass = cases.iter().all(|c| c.verdict);
        Report { schema: SCHEMA, command: command.to_string(), order, seed, pass, cases }
    }

    pub fn to_json_string(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }
}
