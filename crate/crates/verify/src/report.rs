//! Report rows, statuses and the canonical serialised form.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Status {
    #[serde(rename = "hypothesis_failed")]
    HypothesisFailed,
    #[serde(rename = "verified")]
    Verified,
    #[serde(rename = "COUNTEREXAMPLE")]
    Counterexample,
    /// A cap or size limit prevented evaluation.
    #[serde(rename = "skipped")]
    Skipped,
    /// Evaluation failed for a reason other than a cap.
    #[serde(rename = "error")]
    Error,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerifierReport {
    pub statement: String,
    pub group: String,
    pub bindings: BTreeMap<String, String>,
    pub status: Status,
    pub details: Value,
    #[serde(default)]
    pub elapsed_ms: u64,
}

impl VerifierReport {
    pub fn new(statement: &str, group: &str) -> VerifierReport {
        VerifierReport {
            statement: statement.to_string(),
            group: group.to_string(),
            bindings: BTreeMap::new(),
            status: Status::Verified,
            details: Value::Object(Default::default()),
            elapsed_ms: 0,
        }
    }

    pub fn bind(mut self, key: &str, value: impl ToString) -> Self {
        self.bindings.insert(key.to_string(), value.to_string());
        self
    }

    pub fn detail(mut self, key: &str, value: impl Serialize) -> Self {
        if let Value::Object(m) = &mut self.details {
            m.insert(key.to_string(), serde_json::to_value(value).expect("serialisable"));
        }
        self
    }

    pub fn status(mut self, s: Status) -> Self {
        self.status = s;
        self
    }

    /// Status from a hypothesis and, when it holds, the conclusion.
    pub fn outcome(self, hypothesis: bool, conclusion: impl FnOnce() -> bool) -> Self {
        let s = match hypothesis {
            false => Status::HypothesisFailed,
            true if conclusion() => Status::Verified,
            true => Status::Counterexample,
        };
        self.status(s)
    }

    fn sort_key(&self) -> (String, String, String) {
        (
            self.group.clone(),
            self.statement.clone(),
            serde_json::to_string(&self.bindings).unwrap(),
        )
    }
}

/// Per-statement status counts.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counts {
    pub verified: u64,
    pub hypothesis_failed: u64,
    pub counterexample: u64,
    pub skipped: u64,
    pub error: u64,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Summary {
    pub groups: u64,
    pub rows: u64,
    pub by_statement: BTreeMap<String, Counts>,
    /// Premise hits and violations per implication, summed over groups.
    pub implications: BTreeMap<String, ImplicationTotals>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ImplicationTotals {
    pub premise_hits: u64,
    pub violations: u64,
}

impl Summary {
    pub fn counterexamples(&self) -> u64 {
        self.by_statement.values().map(|c| c.counterexample).sum()
    }

    pub fn errors(&self) -> u64 {
        self.by_statement.values().map(|c| c.error).sum()
    }

    pub fn verified(&self, statement: &str) -> u64 {
        self.by_statement.get(statement).map_or(0, |c| c.verified)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct CorpusReport {
    pub summary: Summary,
    pub rows: Vec<VerifierReport>,
}

impl CorpusReport {
    pub fn from_rows(mut rows: Vec<VerifierReport>, groups: u64) -> CorpusReport {
        rows.sort_by_cached_key(|r| r.sort_key());
        let mut summary = Summary {
            groups,
            rows: rows.len() as u64,
            ..Summary::default()
        };
        for r in &rows {
            let c = summary.by_statement.entry(r.statement.clone()).or_default();
            match r.status {
                Status::Verified => c.verified += 1,
                Status::HypothesisFailed => c.hypothesis_failed += 1,
                Status::Counterexample => c.counterexample += 1,
                Status::Skipped => c.skipped += 1,
                Status::Error => c.error += 1,
            }
            if let Some(name) = r.statement.strip_prefix("IMP:") {
                let t = summary.implications.entry(name.to_string()).or_default();
                t.premise_hits += r.details["premise_hits"].as_u64().unwrap_or(0);
                t.violations += r.details["violations"].as_array().map_or(0, |v| v.len() as u64);
            }
        }
        CorpusReport { summary, rows }
    }

    pub fn rows_for<'a>(&'a self, statement: &'a str) -> impl Iterator<Item = &'a VerifierReport> + 'a {
        self.rows.iter().filter(move |r| r.statement == statement)
    }

    /// Pretty JSON with timings.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serialisable")
    }

    /// Sorted JSON with `elapsed_ms` removed, one row per line.
    pub fn canonical(&self) -> String {
        let mut out = serde_json::to_string(&self.summary).expect("serialisable");
        out.push('\n');
        for r in &self.rows {
            let mut v = serde_json::to_value(r).expect("serialisable");
            v.as_object_mut().unwrap().remove("elapsed_ms");
            out.push_str(&v.to_string());
            out.push('\n');
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_ignores_order_and_timing() {
        let a = VerifierReport::new("JH", "s4").outcome(true, || true);
        let mut b = VerifierReport::new("P1.3", "c2").bind("p", 2).outcome(false, || unreachable!());
        let r1 = CorpusReport::from_rows(vec![a.clone(), b.clone()], 2);
        b.elapsed_ms = 17;
        let r2 = CorpusReport::from_rows(vec![b, a], 2);
        assert_eq!(r1.canonical(), r2.canonical());
        assert_eq!(r1.rows[0].group, "c2");
        assert_eq!(r1.summary.by_statement["P1.3"].hypothesis_failed, 1);
        assert!(!r1.canonical().contains("elapsed_ms"));
    }

    #[test]
    fn status_names() {
        let s = serde_json::to_string(&Status::Counterexample).unwrap();
        assert_eq!(s, "\"COUNTEREXAMPLE\"");
        let r = VerifierReport::new("X", "g").outcome(true, || false);
        assert_eq!(r.status, Status::Counterexample);
    }
}
