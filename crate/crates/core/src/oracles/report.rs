//! Oracle verdicts serialized one JSON object per line.

use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub instance: String,
    pub solver: String,
    pub answer: Value,
    /// Every answer the oracle accepts, in its own encoding.
    pub oracle_answers: Value,
    pub member: bool,
    /// Counts recomputed by the oracle's membership code.
    pub counts: Value,
    pub elapsed_ms: f64,
}

impl VerificationReport {
    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("reports hold plain JSON values")
    }
}
