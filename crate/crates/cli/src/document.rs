use std::fmt::Write as _;

use anyhow::{anyhow, Result};
use baerlab_core::baer::{BaerStatus, TheoremReport, UniquePrimes, Verdict};
use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputEcho {
    pub command: String,
    pub group: String,
    pub order: String,
    pub factorisation: Option<(String, String)>,
    pub factor_orders: Option<(u64, u64)>,
    pub primes: Vec<u64>,
    pub theorems: Vec<String>,
}

/// Everything one `check` or `report` run produced.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub schema_version: u32,
    pub tool_version: String,
    pub input: InputEcho,
    pub statuses: Vec<BaerStatus>,
    pub unique_primes: Vec<UniquePrimes>,
    pub reports: Vec<TheoremReport>,
    pub cap_events: Vec<String>,
    pub elapsed_ms: u64,
    pub exit_code: i32,
}

#[derive(Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
enum Line {
    Header { schema_version: u32, tool_version: String, input: InputEcho },
    Status(BaerStatus),
    UniquePrimes(UniquePrimes),
    Report(TheoremReport),
    Footer { cap_events: Vec<String>, elapsed_ms: u64, exit_code: i32 },
}

impl ReportDocument {
    pub fn new(input: InputEcho) -> ReportDocument {
        ReportDocument {
            schema_version: SCHEMA_VERSION,
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            input,
            statuses: Vec::new(),
            unique_primes: Vec::new(),
            reports: Vec::new(),
            cap_events: Vec::new(),
            elapsed_ms: 0,
            exit_code: 0,
        }
    }

    /// One JSON object per line: header, statuses, unique primes, reports,
    /// footer.
    pub fn to_json_lines(&self) -> String {
        let mut lines = vec![Line::Header {
            schema_version: self.schema_version,
            tool_version: self.tool_version.clone(),
            input: self.input.clone(),
        }];
        lines.extend(self.statuses.iter().cloned().map(Line::Status));
        lines.extend(self.unique_primes.iter().cloned().map(Line::UniquePrimes));
        lines.extend(self.reports.iter().cloned().map(Line::Report));
        lines.push(Line::Footer {
            cap_events: self.cap_events.clone(),
            elapsed_ms: self.elapsed_ms,
            exit_code: self.exit_code,
        });
        let mut out = String::new();
        for l in lines {
            out.push_str(&serde_json::to_string(&l).expect("serializable"));
            out.push('\n');
        }
        out
    }

    pub fn from_json_lines(text: &str) -> Result<ReportDocument> {
        let mut doc: Option<ReportDocument> = None;
        for (n, raw) in text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty()) {
            let line: Line = serde_json::from_str(raw).map_err(|e| anyhow!("line {}: {e}", n + 1))?;
            if let Line::Header { schema_version, tool_version, input } = line {
                let mut d = ReportDocument::new(input);
                d.schema_version = schema_version;
                d.tool_version = tool_version;
                doc = Some(d);
                continue;
            }
            let d = doc.as_mut().ok_or_else(|| anyhow!("line {}: record before header", n + 1))?;
            match line {
                Line::Header { .. } => unreachable!(),
                Line::Status(s) => d.statuses.push(s),
                Line::UniquePrimes(u) => d.unique_primes.push(u),
                Line::Report(r) => d.reports.push(r),
                Line::Footer { cap_events, elapsed_ms, exit_code } => {
                    d.cap_events = cap_events;
                    d.elapsed_ms = elapsed_ms;
                    d.exit_code = exit_code;
                }
            }
        }
        doc.ok_or_else(|| anyhow!("empty document"))
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let i = &self.input;
        let _ = writeln!(out, "{:<14}{}", "group", i.group);
        let _ = writeln!(out, "{:<14}{}", "order", i.order);
        if let (Some((a, b)), Some((oa, ob))) = (&i.factorisation, i.factor_orders) {
            let _ = writeln!(out, "{:<14}A = {a} (order {oa}), B = {b} (order {ob})", "factorisation");
        }
        for s in &self.statuses {
            match (s.prime, s.is_p_baer) {
                (Some(p), Some(v)) => {
                    let _ = writeln!(out, "{:<14}{}", format!("{p}-Baer"), yes_no(v));
                }
                _ => {
                    let _ = writeln!(out, "{:<14}{}", "Baer", yes_no(s.is_baer));
                    for (p, v) in &s.per_prime {
                        let _ = writeln!(out, "{:<14}{}", format!("  {p}-Baer"), yes_no(*v));
                    }
                }
            }
            for w in &s.witnesses {
                let _ = writeln!(
                    out,
                    "  {:?} p={:<3} i_G={:<8} order={:<4} {}",
                    w.locus, w.prime, w.class_index, w.order, w.element
                );
            }
        }
        for u in &self.unique_primes {
            let (q, r) = u.resolved();
            let _ = writeln!(out, "{:<14}p = {}, q = {q}, r = {r}", "unique primes", u.p);
        }
        if !self.reports.is_empty() {
            let _ = writeln!(out, "{:<10}{:<6}{:<24}{:<16}detail", "theorem", "p", "clause", "verdict");
        }
        for r in &self.reports {
            let p = r.prime.map(|p| p.to_string()).unwrap_or_else(|| "-".into());
            for c in &r.clauses {
                let _ = writeln!(out, "{:<10}{:<6}{:<24}{:<16}{}", r.theorem, p, c.id, verdict(c.verdict), c.detail);
                for w in &c.witnesses {
                    let _ = writeln!(out, "{:<40}{w}", "");
                }
            }
        }
        for e in &self.cap_events {
            let _ = writeln!(out, "cap: {e}");
        }
        let _ = writeln!(out, "{:<14}{}", "exit", self.exit_code);
        out
    }
}

fn yes_no(v: bool) -> &'static str {
    if v {
        "yes"
    } else {
        "no"
    }
}

fn verdict(v: Verdict) -> &'static str {
    match v {
        Verdict::Pass => "pass",
        Verdict::Fail => "FAIL",
        Verdict::NotApplicable => "n/a",
        Verdict::Skipped => "skipped",
    }
}
