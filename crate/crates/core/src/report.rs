use num_bigint::BigInt;
use serde::Serialize;
use serde_json::Value;

use crate::matrix::int_to_json;

/// Outcome of checking one identity: both sides as computed, whether they
/// agree, and any witnesses worth showing (failing elements, extracted
/// permutations, per-term ledgers).
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub identity: String,
    pub lhs: Value,
    pub rhs: Value,
    pub pass: bool,
    pub witnesses: Vec<Value>,
}

impl Report {
    pub fn new(identity: impl Into<String>, lhs: Value, rhs: Value, pass: bool) -> Report {
        Report {
            identity: identity.into(),
            lhs,
            rhs,
            pass,
            witnesses: Vec::new(),
        }
    }

    /// Compares two integers for equality.
    pub fn equal(identity: impl Into<String>, lhs: &BigInt, rhs: &BigInt) -> Report {
        Report::new(identity, int_to_json(lhs), int_to_json(rhs), lhs == rhs)
    }

    pub fn with_witness(mut self, w: Value) -> Report {
        self.witnesses.push(w);
        self
    }

    /// Marks the report failed and records why.
    pub fn fail(mut self, why: Value) -> Report {
        self.pass = false;
        self.witnesses.push(why);
        self
    }

    /// Logical AND of several reports under one name.
    pub fn all(identity: impl Into<String>, parts: Vec<Report>) -> Report {
        let pass = parts.iter().all(|r| r.pass);
        let failing: Vec<Value> = parts
            .iter()
            .filter(|r| !r.pass)
            .map(|r| serde_json::to_value(r).expect("report serializes"))
            .collect();
        Report {
            identity: identity.into(),
            lhs: Value::from(parts.len()),
            rhs: Value::from(parts.iter().filter(|r| r.pass).count()),
            pass,
            witnesses: failing,
        }
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("report serializes")
    }
}
