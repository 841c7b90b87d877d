//! Flat, machine-readable law reports.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Status {
    Pass,
    /// A law that must hold did not.
    Fail,
    /// A documented erratum reproduced as expected (not an implementation failure).
    Finding,
    /// The law's hypothesis does not apply to this instance.
    Skipped,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Finding => "finding",
            Status::Skipped => "skipped",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LawResult {
    pub id: String,
    pub status: Status,
    /// Rendered elements (or sets) falsifying the law, when it failed.
    pub witness: Option<Vec<String>>,
    pub note: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LawReport {
    pub results: Vec<LawResult>,
}

impl LawReport {
    pub fn new() -> Self {
        Self::default()
    }

    /// Records a law: `None` is a pass, `Some(witness)` a failure.
    pub fn check(&mut self, id: impl Into<String>, counterexample: Option<Vec<String>>) {
        let status = if counterexample.is_some() { Status::Fail } else { Status::Pass };
        self.results.push(LawResult { id: id.into(), status, witness: counterexample, note: None });
    }

    pub fn pass(&mut self, id: impl Into<String>) {
        self.check(id, None);
    }

    pub fn fail(&mut self, id: impl Into<String>, witness: Vec<String>) {
        self.check(id, Some(witness));
    }

    pub fn skip(&mut self, id: impl Into<String>, reason: &str) {
        self.results.push(LawResult {
            id: id.into(),
            status: Status::Skipped,
            witness: None,
            note: Some(reason.to_string()),
        });
    }

    /// Records a documented erratum. `reproduced` carries the witness when the
    /// erratum shows up; if it does not, the pinned behaviour regressed and the
    /// law fails.
    pub fn erratum(&mut self, id: impl Into<String>, reproduced: Option<Vec<String>>, note: &str) {
        let (status, witness) = match reproduced {
            Some(w) => (Status::Finding, Some(w)),
            None => (Status::Fail, None),
        };
        self.results.push(LawResult { id: id.into(), status, witness, note: Some(note.to_string()) });
    }

    /// A finding that may or may not occur on a given instance: absent means pass.
    pub fn finding_if(&mut self, id: impl Into<String>, witness: Option<Vec<String>>, note: &str) {
        let status = if witness.is_some() { Status::Finding } else { Status::Pass };
        let note = witness.as_ref().map(|_| note.to_string());
        self.results.push(LawResult { id: id.into(), status, witness, note });
    }

    pub fn push(&mut self, result: LawResult) {
        self.results.push(result);
    }

    pub fn extend(&mut self, other: LawReport) {
        self.results.extend(other.results);
    }

    /// Appends `other` with every id prefixed by `prefix`.
    pub fn extend_prefixed(&mut self, prefix: &str, other: LawReport) {
        self.results.extend(other.results.into_iter().map(|mut r| {
            let mut id = String::from(prefix);
            id.push_str(&r.id);
            r.id = id;
            r
        }));
    }

    pub fn get(&self, id: &str) -> Option<&LawResult> {
        self.results.iter().find(|r| r.id == id)
    }

    pub fn status(&self, id: &str) -> Option<Status> {
        self.get(id).map(|r| r.status)
    }

    pub fn count(&self, status: Status) -> usize {
        self.results.iter().filter(|r| r.status == status).count()
    }

    /// True when no law failed. Findings and skips are allowed.
    pub fn all_pass(&self) -> bool {
        self.count(Status::Fail) == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &LawResult> {
        self.results.iter().filter(|r| r.status == Status::Fail)
    }

    pub fn ids(&self) -> impl Iterator<Item = &str> {
        self.results.iter().map(|r| r.id.as_str())
    }

    pub fn len(&self) -> usize {
        self.results.len()
    }

    pub fn is_empty(&self) -> bool {
        self.results.is_empty()
    }
}

/// Builds a witness from anything displayable.
macro_rules! witness {
    ($($x:expr),* $(,)?) => {
        alloc::vec![$(alloc::string::ToString::to_string(&$x)),*]
    };
}
pub(crate) use witness;
