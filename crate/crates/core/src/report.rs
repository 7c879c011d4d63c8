//! Pass/fail reports with a provenance tag on every recorded value.

use std::fmt::Write as _;

use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

/// A recorded value and where its expected counterpart comes from: an
/// oracle name, a golden reference, or `computed` for plain output.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Claim {
    pub name: String,
    pub value: Value,
    pub provenance: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub scenario: String,
    pub verdict: Verdict,
    pub values: Vec<Claim>,
    pub witnesses: Vec<Value>,
}

impl Report {
    pub fn new(scenario: impl Into<String>) -> Self {
        Report { scenario: scenario.into(), verdict: Verdict::Pass, values: Vec::new(), witnesses: Vec::new() }
    }

    pub fn value(&mut self, name: impl Into<String>, v: impl Serialize, provenance: impl Into<String>) -> &mut Self {
        let value = serde_json::to_value(v).unwrap_or(Value::Null);
        self.values.push(Claim { name: name.into(), value, provenance: provenance.into() });
        self
    }

    /// Records a boolean property; a false one fails the report.
    pub fn check(&mut self, name: impl Into<String>, ok: bool, provenance: impl Into<String>) -> bool {
        if !ok {
            self.verdict = Verdict::Fail;
        }
        self.value(name, ok, provenance);
        ok
    }

    pub fn witness(&mut self, w: impl Serialize) -> &mut Self {
        self.witnesses.push(serde_json::to_value(w).unwrap_or(Value::Null));
        self
    }

    pub fn fail(&mut self, w: impl Serialize) {
        self.verdict = Verdict::Fail;
        self.witness(w);
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        let _ = writeln!(s, "{}: {verdict}", self.scenario);
        for c in &self.values {
            let _ = writeln!(s, "  {} = {}  [{}]", c.name, compact(&c.value), c.provenance);
        }
        for w in &self.witnesses {
            let _ = writeln!(s, "  witness: {}", compact(w));
        }
        s
    }
}

fn compact(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        _ => v.to_string(),
    }
}

/// Several reports as one structured document.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuiteReport {
    pub verdict: Verdict,
    pub scenarios: Vec<Report>,
}

impl SuiteReport {
    pub fn new(mut scenarios: Vec<Report>) -> Self {
        scenarios.sort_by(|a, b| a.scenario.cmp(&b.scenario));
        let verdict = if scenarios.iter().all(Report::passed) { Verdict::Pass } else { Verdict::Fail };
        SuiteReport { verdict, scenarios }
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}
