//! JSON reports. Object keys are emitted in sorted order and timing is opt-in,
//! so identical inputs give byte-identical output.

use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::{json, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Ok,
    PreconditionFailed,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub command: String,
    pub parameters: Value,
    pub status: Status,
    /// `None` when the command has no yes/no answer or a precondition failed.
    pub verdict: Option<bool>,
    pub details: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<f64>,
}

impl Report {
    pub fn new(command: &str, parameters: Value) -> Self {
        Report {
            command: command.to_owned(),
            parameters,
            status: Status::Ok,
            verdict: None,
            details: json!({}),
            timing_ms: None,
        }
    }

    /// 0 for success or a true verdict, 1 for a false verdict, 2 for a failed
    /// precondition.
    pub fn exit_code(&self) -> i32 {
        match (self.status, self.verdict) {
            (Status::PreconditionFailed, _) => 2,
            (Status::Ok, Some(false)) => 1,
            (Status::Ok, _) => 0,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }
}

/// `[{"value": v, "count": c}, ...]` in increasing `v`.
pub fn histogram_json<K: Serialize + Ord, V: Serialize>(h: &BTreeMap<K, V>) -> Value {
    Value::Array(h.iter().map(|(k, v)| json!({ "value": k, "count": v })).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes() {
        let mut r = Report::new("x", json!({}));
        assert_eq!(r.exit_code(), 0);
        r.verdict = Some(true);
        assert_eq!(r.exit_code(), 0);
        r.verdict = Some(false);
        assert_eq!(r.exit_code(), 1);
        r.status = Status::PreconditionFailed;
        r.verdict = None;
        assert_eq!(r.exit_code(), 2);
    }

    #[test]
    fn stable_key_order_and_histogram_order() {
        let mut r = Report::new("count", json!({ "z": 1, "a": 2 }));
        r.details = histogram_json(&BTreeMap::from([(10i64, 1u64), (-3, 2), (2, 5)]));
        let text = r.to_json();
        assert!(text.find("\"a\"").unwrap() < text.find("\"z\"").unwrap());
        let values: Vec<i64> = r.details.as_array().unwrap().iter().map(|e| e["value"].as_i64().unwrap()).collect();
        assert_eq!(values, [-3, 2, 10]);
        assert!(!text.contains("timing_ms"));
    }
}
