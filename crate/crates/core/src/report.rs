//! Pass/fail records produced by the verification routines.

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckRecord {
    pub check_id: String,
    pub status: Status,
    pub witness: String,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct Report {
    pub records: Vec<CheckRecord>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, check_id: impl Into<String>, status: Status, witness: impl Into<String>) {
        self.records.push(CheckRecord { check_id: check_id.into(), status, witness: witness.into() });
    }

    pub fn pass(&mut self, check_id: impl Into<String>, witness: impl Into<String>) {
        self.push(check_id, Status::Pass, witness);
    }

    pub fn fail(&mut self, check_id: impl Into<String>, witness: impl Into<String>) {
        self.push(check_id, Status::Fail, witness);
    }

    pub fn skip(&mut self, check_id: impl Into<String>, witness: impl Into<String>) {
        self.push(check_id, Status::Skipped, witness);
    }

    /// Records pass when `failure` is `None`, otherwise fail with its text.
    pub fn expect(&mut self, check_id: impl Into<String>, failure: Option<String>, ok_witness: impl Into<String>) {
        match failure {
            None => self.pass(check_id, ok_witness),
            Some(w) => self.fail(check_id, w),
        }
    }

    pub fn extend(&mut self, other: Report) {
        self.records.extend(other.records);
    }

    pub fn all_passed(&self) -> bool {
        self.records.iter().all(|r| r.status != Status::Fail)
    }

    pub fn count(&self, status: Status) -> usize {
        self.records.iter().filter(|r| r.status == status).count()
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckRecord> {
        self.records.iter().filter(|r| r.status == Status::Fail)
    }

    pub fn find(&self, check_id: &str) -> Option<&CheckRecord> {
        self.records.iter().find(|r| r.check_id == check_id)
    }
}
