//! Pass/fail reports produced by the axiom checkers.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactla::LinMap;

/// First differing entry (lexicographic in row, then column) of two matrices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub row: usize,
    pub col: usize,
    pub lhs: String,
    pub rhs: String,
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

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub subject: String,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(subject: impl Into<String>) -> Self {
        Report { subject: subject.into(), checks: Vec::new() }
    }

    /// Record the matrix identity `lhs = rhs`.
    pub fn eq_maps(&mut self, name: impl Into<String>, lhs: &LinMap, rhs: &LinMap) -> bool {
        let name = name.into();
        if lhs.cod() != rhs.cod() || lhs.dom() != rhs.dom() {
            self.checks.push(Check {
                name,
                passed: false,
                witness: None,
                note: Some(format!(
                    "shapes differ: {}x{} vs {}x{}",
                    lhs.cod(),
                    lhs.dom(),
                    rhs.cod(),
                    rhs.dom()
                )),
            });
            return false;
        }
        let witness = lhs.first_difference(rhs).map(|(row, col, l, r)| Witness {
            row,
            col,
            lhs: l.to_string(),
            rhs: r.to_string(),
        });
        let passed = witness.is_none();
        self.checks.push(Check { name, passed, witness, note: None });
        passed
    }

    /// Record a boolean condition with an optional explanation.
    pub fn flag(&mut self, name: impl Into<String>, passed: bool, note: Option<String>) -> bool {
        self.checks.push(Check { name: name.into(), passed, witness: None, note });
        passed
    }

    pub fn merge(&mut self, prefix: &str, other: Report) {
        for mut c in other.checks {
            c.name = format!("{prefix}{}", c.name);
            self.checks.push(c);
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// `Ok(self)` if everything passed, otherwise the error built by `wrap`.
    pub fn into_result(self, wrap: impl FnOnce(Box<Report>) -> Error) -> Result<Report> {
        if self.passed() {
            Ok(self)
        } else {
            Err(wrap(Box::new(self)))
        }
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.subject)?;
        for c in &self.checks {
            write!(f, "  [{}] {}", if c.passed { "pass" } else { "FAIL" }, c.name)?;
            if let Some(w) = &c.witness {
                write!(f, "  (entry {},{}: {} != {})", w.row, w.col, w.lhs, w.rhs)?;
            }
            if let Some(n) = &c.note {
                write!(f, "  ({n})")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
