//! The JSON envelope shared by all report-producing commands.
//!
//! The shape is documented in `schema/report.schema.json` at the repository root.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Command {
    Count,
    Decompose,
    Hstar,
    Residues,
    Verify,
    Histogram,
    Cycles,
    Rectangle,
    Tile,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Success,
    Failure,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReportRecord {
    pub command: Command,
    /// Sorted by key so serialization is byte-stable.
    pub inputs: BTreeMap<String, Value>,
    pub outcome: Outcome,
    pub payload: Value,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl ReportRecord {
    pub fn to_json(&self) -> Result<String, serde_json::Error> {
        serde_json::to_string_pretty(self)
    }

    pub fn from_json(s: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn round_trip() {
        let r = ReportRecord {
            command: Command::Histogram,
            inputs: [("n".to_string(), json!(22)), ("m".to_string(), json!(5))].into_iter().collect(),
            outcome: Outcome::Success,
            payload: json!({"counts": [8, 8, 8, 8, 8], "uniform": true}),
            notes: vec!["x".into()],
        };
        let s = r.to_json().unwrap();
        assert_eq!(ReportRecord::from_json(&s).unwrap(), r);
        assert_eq!(ReportRecord::from_json(&s).unwrap().to_json().unwrap(), s);
    }

    #[test]
    fn rejects_unknown_fields() {
        let s = r#"{"command":"count","inputs":{},"outcome":"success","payload":null,"extra":1}"#;
        assert!(ReportRecord::from_json(s).is_err());
        let s = r#"{"command":"count","inputs":{},"outcome":"success","payload":null}"#;
        assert!(ReportRecord::from_json(s).unwrap().notes.is_empty());
    }
}
