//! Verification reports: `{check, instance, pass, witnesses}`.

use serde::Serialize;
use serde_json::{json, Value};

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct Report {
    pub check: String,
    pub instance: Value,
    pub pass: bool,
    /// One entry per violation; empty when the check passes.
    pub witnesses: Vec<Value>,
}

impl Report {
    pub fn new(check: &str, instance: Value) -> Self {
        Report { check: check.into(), instance, pass: true, witnesses: Vec::new() }
    }

    pub fn fail(&mut self, witness: Value) {
        self.pass = false;
        self.witnesses.push(witness);
    }

    /// Adds a note under `instance.notes`; notes never affect `pass`.
    pub fn note(&mut self, note: Value) {
        if !self.instance.is_object() {
            self.instance = json!({ "value": self.instance.take() });
        }
        let notes = self.instance.as_object_mut().unwrap().entry("notes").or_insert_with(|| json!([]));
        notes.as_array_mut().unwrap().push(note);
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("report serializes")
    }

    /// Failed sub-reports become witnesses of this one.
    pub fn absorb(&mut self, sub: Report) {
        if !sub.pass {
            self.fail(sub.to_json());
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pass_and_fail() {
        let mut r = Report::new("demo", json!({"n": 2}));
        assert!(r.pass);
        r.note(json!("info"));
        assert!(r.pass);
        r.fail(json!({"at": [0, 1]}));
        assert!(!r.pass);
        let v = r.to_json();
        assert_eq!(v["check"], "demo");
        assert_eq!(v["instance"]["notes"][0], "info");
        assert_eq!(v["witnesses"].as_array().unwrap().len(), 1);
    }
}
