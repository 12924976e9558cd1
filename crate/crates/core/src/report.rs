use std::time::Instant;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ReportItem {
    pub id: String,
    pub expected: String,
    pub computed: String,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub runtime_ms: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub suite: String,
    pub items: Vec<ReportItem>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

impl VerificationReport {
    pub fn new(suite: &str) -> Self {
        VerificationReport {
            suite: suite.to_string(),
            items: Vec::new(),
            seed: None,
        }
    }

    /// Record a comparison; the item passes iff the strings are equal.
    pub fn check(&mut self, id: &str, expected: impl ToString, computed: impl ToString) -> &mut ReportItem {
        let (expected, computed) = (expected.to_string(), computed.to_string());
        let status = if expected == computed { Status::Pass } else { Status::Fail };
        self.push(id, expected, computed, status)
    }

    /// Record an item whose pass/fail was decided by the caller.
    pub fn assert(&mut self, id: &str, expected: impl ToString, computed: impl ToString, ok: bool) -> &mut ReportItem {
        let status = if ok { Status::Pass } else { Status::Fail };
        self.push(id, expected.to_string(), computed.to_string(), status)
    }

    pub fn skip(&mut self, id: &str, expected: impl ToString, reason: impl ToString) -> &mut ReportItem {
        let item = self.push(id, expected.to_string(), String::new(), Status::Skipped);
        item.note = Some(reason.to_string());
        item
    }

    fn push(&mut self, id: &str, expected: String, computed: String, status: Status) -> &mut ReportItem {
        self.items.push(ReportItem {
            id: id.to_string(),
            expected,
            computed,
            status,
            runtime_ms: None,
            note: None,
        });
        self.items.last_mut().expect("just pushed")
    }

    pub fn passed(&self) -> bool {
        self.items.iter().all(|i| i.status != Status::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &ReportItem> {
        self.items.iter().filter(|i| i.status == Status::Fail)
    }

    pub fn item(&self, id: &str) -> Option<&ReportItem> {
        self.items.iter().find(|i| i.id == id)
    }
}

/// Wall-clock stopwatch for report items; inactive unless timing was requested.
pub struct Stopwatch {
    start: Option<Instant>,
}

impl Stopwatch {
    pub fn start(enabled: bool) -> Self {
        Stopwatch {
            start: enabled.then(Instant::now),
        }
    }

    pub fn elapsed_ms(&self) -> Option<u64> {
        self.start.map(|s| s.elapsed().as_millis() as u64)
    }
}
