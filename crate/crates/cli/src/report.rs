use std::fmt::Write as _;

use cotwist_core::AxiomReport;
use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Debug, Serialize)]
pub struct InputDigest {
    pub path: String,
    pub sha256: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct ReportCheck {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<Value>,
}

/// Machine-readable result of one invocation. Wall time is only recorded on
/// request so that reports stay byte-identical across runs.
#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub command: String,
    pub inputs: Vec<InputDigest>,
    pub checks: Vec<ReportCheck>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<u128>,
}

pub fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("report values serialize")
}

impl RunReport {
    pub fn new(command: &str) -> Self {
        RunReport { command: command.into(), inputs: Vec::new(), checks: Vec::new(), wall_time_ms: None }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    /// A check that always passes and only carries a computed value.
    pub fn value(&mut self, name: &str, value: Value) {
        self.checks.push(ReportCheck { name: name.into(), passed: true, witness: None, value: Some(value) });
    }

    pub fn check(&mut self, name: &str, passed: bool, witness: impl FnOnce() -> Value) {
        let witness = (!passed).then(witness);
        self.checks.push(ReportCheck { name: name.into(), passed, witness, value: None });
    }

    pub fn check_value(&mut self, name: &str, passed: bool, value: Value) {
        let witness = (!passed).then(|| value.clone());
        self.checks.push(ReportCheck { name: name.into(), passed, witness, value: Some(value) });
    }

    /// Copy every check of an axiom report, prefixed by `scope`. A failing
    /// check without an index witness gets its note as witness.
    pub fn absorb(&mut self, scope: &str, r: &AxiomReport) {
        for c in &r.checks {
            let name = if scope.is_empty() { c.name.clone() } else { format!("{scope}/{}", c.name) };
            let witness = if c.passed {
                None
            } else {
                Some(match (&c.witness, &c.note) {
                    (Some(w), _) => to_value(w),
                    (None, Some(n)) => Value::String(n.clone()),
                    (None, None) => Value::String("check failed".into()),
                })
            };
            let value = c.note.as_ref().filter(|_| c.passed).map(|n| Value::String(n.clone()));
            self.checks.push(ReportCheck { name, passed: c.passed, witness, value });
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn summary(&self) -> String {
        let total = self.checks.len();
        let passed = self.checks.iter().filter(|c| c.passed).count();
        let mut s = format!("{}: {passed}/{total} checks passed", self.command);
        for c in self.checks.iter().filter(|c| !c.passed) {
            let w = c.witness.as_ref().map(|w| w.to_string()).unwrap_or_default();
            let _ = write!(s, "\n  FAIL {}: {w}", c.name);
        }
        s
    }
}
