use std::fmt;

use serde::{Deserialize, Serialize};

use crate::exactlin::{format_scalar, scalar::serde_str, Scalar};

/// First failing instance of an identity: the basis indices it was evaluated
/// at (inputs, then the output coordinate where relevant) and both sides.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub indices: Vec<usize>,
    #[serde(with = "serde_str")]
    pub lhs: Scalar,
    #[serde(with = "serde_str")]
    pub rhs: Scalar,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub note: Option<String>,
}

/// Named boolean results; passes iff every check passes.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomReport {
    pub checks: Vec<Check>,
}

impl AxiomReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, name: &str, witness: Option<Witness>) {
        self.checks.push(Check {
            name: name.to_string(),
            passed: witness.is_none(),
            witness,
            note: None,
        });
    }

    pub fn push_note(&mut self, name: &str, passed: bool, note: impl Into<String>) {
        self.checks.push(Check {
            name: name.to_string(),
            passed,
            witness: None,
            note: Some(note.into()),
        });
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            write!(f, "{}: {}", c.name, if c.passed { "ok" } else { "FAIL" })?;
            if let Some(w) = &c.witness {
                write!(
                    f,
                    " at {:?} ({} ≠ {})",
                    w.indices,
                    format_scalar(&w.lhs),
                    format_scalar(&w.rhs)
                )?;
            }
            if let Some(n) = &c.note {
                write!(f, " [{n}]")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Compare two scalars, returning a witness when they differ.
pub(crate) fn compare(indices: &[usize], lhs: &Scalar, rhs: &Scalar) -> Option<Witness> {
    (lhs != rhs).then(|| Witness { indices: indices.to_vec(), lhs: lhs.clone(), rhs: rhs.clone() })
}

/// Compare two vectors coordinatewise; the output coordinate is appended to
/// the witness indices.
pub(crate) fn compare_vec(indices: &[usize], lhs: &[Scalar], rhs: &[Scalar]) -> Option<Witness> {
    lhs.iter().zip(rhs).enumerate().find(|(_, (a, b))| a != b).map(|(k, (a, b))| {
        let mut idx = indices.to_vec();
        idx.push(k);
        Witness { indices: idx, lhs: a.clone(), rhs: b.clone() }
    })
}
