//! Structured pass/fail outcomes of identity checks.

use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Case {
    pub id: String,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub passed: usize,
    pub failed: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub suite: String,
    pub cases: Vec<Case>,
    /// Free-form annotations, e.g. errata in printed tables.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    pub summary: Summary,
}

impl VerificationReport {
    pub fn new(suite: impl Into<String>) -> Self {
        Self {
            suite: suite.into(),
            cases: Vec::new(),
            notes: Vec::new(),
            summary: Summary::default(),
        }
    }

    /// Records a case. The witness closure only runs on failure.
    pub fn check(&mut self, id: impl Into<String>, ok: bool, witness: impl FnOnce() -> String) {
        let (status, witness) = if ok {
            self.summary.passed += 1;
            (Status::Pass, None)
        } else {
            self.summary.failed += 1;
            (Status::Fail, Some(witness()))
        };
        self.cases.push(Case {
            id: id.into(),
            status,
            witness,
        });
    }

    pub fn pass(&mut self, id: impl Into<String>) {
        self.check(id, true, String::new);
    }

    pub fn fail(&mut self, id: impl Into<String>, witness: impl Into<String>) {
        let w = witness.into();
        self.check(id, false, move || w);
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    /// Appends the cases and notes of `other`, prefixing case ids with its suite name.
    pub fn absorb(&mut self, other: VerificationReport) {
        for c in other.cases {
            match c.status {
                Status::Pass => self.summary.passed += 1,
                Status::Fail => self.summary.failed += 1,
            }
            self.cases.push(Case {
                id: format!("{}/{}", other.suite, c.id),
                ..c
            });
        }
        self.notes.extend(other.notes);
    }

    /// Appends the cases and notes of `other` unchanged.
    pub fn merge(&mut self, other: VerificationReport) {
        self.summary.passed += other.summary.passed;
        self.summary.failed += other.summary.failed;
        self.cases.extend(other.cases);
        self.notes.extend(other.notes);
    }

    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn exit_code(&self) -> i32 {
        if self.all_passed() {
            0
        } else {
            1
        }
    }

    pub fn failures(&self) -> impl Iterator<Item = &Case> {
        self.cases.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.cases {
            match (&c.status, &c.witness) {
                (Status::Pass, _) => writeln!(f, "PASS {}", c.id)?,
                (Status::Fail, Some(w)) => writeln!(f, "FAIL {}: {}", c.id, w)?,
                (Status::Fail, None) => writeln!(f, "FAIL {}", c.id)?,
            }
        }
        for n in &self.notes {
            writeln!(f, "NOTE {n}")?;
        }
        write!(
            f,
            "{}: {} passed, {} failed",
            self.suite, self.summary.passed, self.summary.failed
        )
    }
}
