//! Structured pass/fail records for the audits.
//!
//! Every inequality or condition a command verifies becomes one [`Check`];
//! failures carry a witness describing the offending face, flat, or simplex.

use serde::{Deserialize, Serialize};

/// Outcome of a single named check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub label: String,
    pub pass: bool,
    /// Witness for a failure (offending face, flat, simplex, ...), or extra
    /// data for a pass when it helps reading the report.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

/// A named bundle of checks; passes only if every check passes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditReport {
    pub title: String,
    pub pass: bool,
    pub checks: Vec<Check>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub notes: Vec<String>,
}

impl AuditReport {
    pub fn new(title: impl Into<String>) -> Self {
        AuditReport {
            title: title.into(),
            pass: true,
            checks: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn check(&mut self, label: impl Into<String>, pass: bool, witness: Option<String>) {
        self.pass &= pass;
        self.checks.push(Check {
            label: label.into(),
            pass,
            witness,
        });
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }

    /// Merges a sub-report as one check, keeping its title as the label.
    pub fn absorb(&mut self, sub: &AuditReport) {
        let witness = if sub.pass {
            None
        } else {
            Some(
                sub.failures()
                    .map(|c| c.label.as_str())
                    .collect::<Vec<_>>()
                    .join("; "),
            )
        };
        self.check(sub.title.clone(), sub.pass, witness);
    }
}
