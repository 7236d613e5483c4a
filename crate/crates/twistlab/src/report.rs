// SPDX-License-Identifier: Apache-2.0

//! The JSON report printed by every subcommand.

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Timing {
    pub elapsed_us: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Report {
    pub command: String,
    pub inputs: Map<String, Value>,
    pub verdict: String,
    pub certificates: Vec<Value>,
    /// Present when `--verify` re-checked the certificates.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verified: Option<bool>,
    pub timing: Timing,
    pub version: String,
}

impl Report {
    pub fn new(command: &str, verdict: impl Into<String>) -> Self {
        Report {
            command: command.into(),
            inputs: Map::new(),
            verdict: verdict.into(),
            certificates: Vec::new(),
            verified: None,
            timing: Timing { elapsed_us: 0 },
            version: env!("CARGO_PKG_VERSION").into(),
        }
    }

    pub fn input(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.inputs.insert(key.into(), value.into());
        self
    }

    pub fn certificate(mut self, value: Value) -> Self {
        self.certificates.push(value);
        self
    }

    pub fn to_json(&self, pretty: bool) -> String {
        if pretty {
            serde_json::to_string_pretty(self).expect("reports serialize")
        } else {
            serde_json::to_string(self).expect("reports serialize")
        }
    }

    /// The report with timing zeroed, for comparing runs.
    pub fn without_timing(&self) -> Self {
        Report {
            timing: Timing { elapsed_us: 0 },
            ..self.clone()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use serde_json::json;

    proptest! {
        #[test]
        fn reports_round_trip(
            command in "[a-z-]{1,12}",
            verdict in ".{0,20}",
            inputs in prop::collection::btree_map("[a-z]{1,6}", any::<i64>(), 0..4),
            certs in prop::collection::vec(".{0,10}", 0..3),
            verified in proptest::option::of(any::<bool>()),
            us in any::<u64>(),
            pretty in any::<bool>(),
        ) {
            let mut r = Report::new(&command, verdict);
            for (k, v) in inputs {
                r = r.input(&k, v);
            }
            for c in certs {
                r = r.certificate(json!({ "note": c }));
            }
            r.verified = verified;
            r.timing.elapsed_us = us;
            let back: Report = serde_json::from_str(&r.to_json(pretty)).unwrap();
            prop_assert_eq!(back, r);
        }
    }

    #[test]
    fn single_line_unless_pretty() {
        let r = Report::new("bound", "31/30").input("k", 2);
        assert!(!r.to_json(false).contains('\n'));
        assert!(r.to_json(true).contains('\n'));
    }
}
