use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    Fail,
    NotApplicable,
    /// Not evaluated because the group is too large for the computation.
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Clause {
    pub id: String,
    pub verdict: Verdict,
    pub detail: String,
    pub witnesses: Vec<String>,
}

/// Verdicts for the clauses of one theorem on one input.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremReport {
    pub theorem: String,
    pub prime: Option<u64>,
    pub clauses: Vec<Clause>,
    pub passed: bool,
}

pub(crate) struct Outcome {
    pub verdict: Verdict,
    pub detail: String,
    pub witnesses: Vec<String>,
}

impl Outcome {
    pub fn check(ok: bool, detail: impl Into<String>) -> Outcome {
        Outcome { verdict: if ok { Verdict::Pass } else { Verdict::Fail }, detail: detail.into(), witnesses: vec![] }
    }

    pub fn na(detail: impl Into<String>) -> Outcome {
        Outcome { verdict: Verdict::NotApplicable, detail: detail.into(), witnesses: vec![] }
    }

    pub fn with(mut self, witnesses: Vec<String>) -> Outcome {
        self.witnesses = witnesses;
        self
    }
}

impl TheoremReport {
    pub(crate) fn new(theorem: &str, prime: Option<u64>) -> TheoremReport {
        TheoremReport { theorem: theorem.to_string(), prime, clauses: Vec::new(), passed: true }
    }

    /// Evaluates one clause. Cap overruns become `Skipped`, exhausted search
    /// budgets become `Fail`; other errors propagate.
    pub(crate) fn clause(&mut self, id: &str, f: impl FnOnce() -> Result<Outcome>) -> Result<()> {
        let clause = match f() {
            Ok(o) => Clause { id: id.into(), verdict: o.verdict, detail: o.detail, witnesses: o.witnesses },
            Err(e @ Error::CapExceeded { .. }) => Clause {
                id: id.into(),
                verdict: Verdict::Skipped,
                detail: format!("skipped by size: {e}"),
                witnesses: vec![],
            },
            Err(e @ (Error::NotFoundWithinBudget { .. } | Error::InternalInvariantViolation(_))) => {
                Clause { id: id.into(), verdict: Verdict::Fail, detail: e.to_string(), witnesses: vec![] }
            }
            Err(e) => return Err(e),
        };
        self.clauses.push(clause);
        Ok(())
    }

    pub(crate) fn push(&mut self, id: &str, o: Outcome) {
        self.clauses.push(Clause { id: id.into(), verdict: o.verdict, detail: o.detail, witnesses: o.witnesses });
    }

    /// Records the hypothesis; when it fails, every listed clause is marked
    /// not applicable. Returns whether the hypothesis holds.
    pub(crate) fn hypothesis(&mut self, holds: bool, detail: &str, clauses: &[&str]) -> bool {
        if holds {
            self.push("hypothesis", Outcome { verdict: Verdict::Pass, detail: detail.into(), witnesses: vec![] });
        } else {
            self.push("hypothesis", Outcome::na(format!("not satisfied: {detail}")));
            for c in clauses {
                self.push(c, Outcome::na("hypothesis not satisfied"));
            }
        }
        holds
    }

    pub(crate) fn skip_all(&mut self, clauses: &[&str], why: &str) {
        for c in clauses {
            self.push(c, Outcome { verdict: Verdict::Skipped, detail: why.into(), witnesses: vec![] });
        }
    }

    pub(crate) fn finish(mut self) -> TheoremReport {
        for c in &mut self.clauses {
            c.witnesses.sort();
            c.witnesses.dedup();
        }
        self.passed = self.clauses.iter().all(|c| c.verdict != Verdict::Fail);
        self
    }

    pub fn count(&self, verdict: Verdict) -> usize {
        self.clauses.iter().filter(|c| c.verdict == verdict).count()
    }

    pub fn failures(&self) -> impl Iterator<Item = &Clause> {
        self.clauses.iter().filter(|c| c.verdict == Verdict::Fail)
    }

    pub fn get(&self, id: &str) -> Option<&Clause> {
        self.clauses.iter().find(|c| c.id == id)
    }
}
