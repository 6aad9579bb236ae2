use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::baer::{
    check_camina_camina, check_class_index_paths, check_factor_inheritance, check_index_divisibility, check_lemma_bk,
    check_p_index_decomposition, check_pq_baer, check_theorem_f_equivalence, check_wielandt, inheritance_violations,
    is_baer, is_p_baer, is_p_baer_prefactorised, report_corollary_c, report_theorem_a, report_theorem_b,
    report_theorem_e, IndexScope, TheoremReport, Verdict,
};
use crate::bitset::ElementSet;
use crate::error::{Error, Result};
use crate::group::{enumeration_cap, Group};
use crate::primes::prime_divisors;
use crate::spec::GroupSpec;
use crate::structure::{enumerate_subgroups, Factorisation, DEFAULT_SUBGROUP_BUDGET};
use crate::subgroup::Subgroup;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Predicate {
    Baer,
    RemarkPath,
    TheoremA,
    TheoremB,
    CorollaryC,
    PropositionD,
    TheoremE,
    TheoremF,
    PqBaer,
    PIndex,
    OpenQuestion,
    Wielandt,
    CaminaCamina,
    LemmaBk,
    IndexDivisibility,
    ClassIndexPaths,
}

impl Predicate {
    pub const ALL: [Predicate; 16] = [
        Predicate::Baer,
        Predicate::RemarkPath,
        Predicate::TheoremA,
        Predicate::TheoremB,
        Predicate::CorollaryC,
        Predicate::PropositionD,
        Predicate::TheoremE,
        Predicate::TheoremF,
        Predicate::PqBaer,
        Predicate::PIndex,
        Predicate::OpenQuestion,
        Predicate::Wielandt,
        Predicate::CaminaCamina,
        Predicate::LemmaBk,
        Predicate::IndexDivisibility,
        Predicate::ClassIndexPaths,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Predicate::Baer => "baer",
            Predicate::RemarkPath => "remark-path",
            Predicate::TheoremA => "theorem-a",
            Predicate::TheoremB => "theorem-b",
            Predicate::CorollaryC => "corollary-c",
            Predicate::PropositionD => "proposition-d",
            Predicate::TheoremE => "theorem-e",
            Predicate::TheoremF => "theorem-f",
            Predicate::PqBaer => "pq-baer",
            Predicate::PIndex => "p-index",
            Predicate::OpenQuestion => "open-question",
            Predicate::Wielandt => "wielandt",
            Predicate::CaminaCamina => "camina-camina",
            Predicate::LemmaBk => "lemma-bk",
            Predicate::IndexDivisibility => "index-divisibility",
            Predicate::ClassIndexPaths => "class-index-paths",
        }
    }

    pub fn parse(s: &str) -> Result<Predicate> {
        Predicate::ALL
            .into_iter()
            .find(|p| p.name() == s.trim())
            .ok_or_else(|| Error::invalid(format!("unknown predicate '{}'", s.trim())))
    }

    fn per_group(&self) -> bool {
        matches!(
            self,
            Predicate::Wielandt
                | Predicate::CaminaCamina
                | Predicate::LemmaBk
                | Predicate::IndexDivisibility
                | Predicate::ClassIndexPaths
        )
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FactorisationFilter {
    /// Every unordered pair `{A, B}` with `G = AB`.
    #[default]
    All,
    /// As `All`, without pairs where a factor is `G`.
    ProperOnly,
    /// As `All`, one pair per orbit under simultaneous conjugation.
    UpToConjugacy,
}

impl FactorisationFilter {
    fn parse(s: &str) -> Result<FactorisationFilter> {
        match s.trim() {
            "all" => Ok(FactorisationFilter::All),
            "proper-only" => Ok(FactorisationFilter::ProperOnly),
            "up-to-conjugacy" => Ok(FactorisationFilter::UpToConjugacy),
            other => Err(Error::invalid(format!("unknown filter '{other}'"))),
        }
    }
}

/// A sweep configuration. The text form holds `key = value` lines
/// (`max_order`, `predicates`, `filter`) and one group spec per line;
/// `#` starts a comment.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepConfig {
    pub max_order: u64,
    pub predicates: BTreeSet<Predicate>,
    pub filter: FactorisationFilter,
    pub groups: Vec<GroupSpec>,
}

impl SweepConfig {
    pub fn parse(text: &str) -> Result<SweepConfig> {
        let mut cfg = SweepConfig {
            max_order: 200,
            predicates: Predicate::ALL.into_iter().collect(),
            filter: FactorisationFilter::All,
            groups: Vec::new(),
        };
        for (n, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let at = |e: Error| Error::invalid(format!("line {}: {e}", n + 1));
            if let Some((key, value)) = line.split_once('=') {
                let value = value.trim();
                match key.trim() {
                    "max_order" => {
                        cfg.max_order =
                            value.parse().map_err(|_| at(Error::invalid(format!("bad max_order '{value}'"))))?
                    }
                    "filter" => cfg.filter = FactorisationFilter::parse(value).map_err(at)?,
                    "predicates" => {
                        let inner = value.trim_start_matches('[').trim_end_matches(']');
                        cfg.predicates = if inner.trim() == "all" {
                            Predicate::ALL.into_iter().collect()
                        } else {
                            inner
                                .split(',')
                                .filter(|s| !s.trim().is_empty())
                                .map(Predicate::parse)
                                .collect::<Result<_>>()
                                .map_err(at)?
                        };
                    }
                    other => return Err(at(Error::invalid(format!("unknown key '{other}'")))),
                }
            } else {
                cfg.groups.push(GroupSpec::parse(line).map_err(at)?);
            }
        }
        if cfg.max_order > enumeration_cap() as u64 {
            return Err(Error::invalid(format!(
                "max_order {} exceeds the enumeration cap {}",
                cfg.max_order,
                enumeration_cap()
            )));
        }
        Ok(cfg)
    }

    fn wants(&self, p: Predicate) -> bool {
        self.predicates.contains(&p)
    }

    fn wants_factorisations(&self) -> bool {
        self.predicates.iter().any(|p| !p.per_group())
    }
}

/// All factorisations `G = AB` by subgroups, as unordered pairs, in a
/// deterministic order.
pub fn enumerate_factorisations(g: &Group, filter: FactorisationFilter) -> Result<Vec<Factorisation>> {
    let subs = enumerate_subgroups(g, DEFAULT_SUBGROUP_BUDGET)?;
    factorisations_from(g, &subs, filter)
}

fn factorisations_from(g: &Group, subs: &[Subgroup], filter: FactorisationFilter) -> Result<Vec<Factorisation>> {
    let n = g.order()? as u128;
    let store = g.store()?;
    let orders: Vec<u128> = subs.iter().map(|s| s.order().map(u128::from)).collect::<Result<_>>()?;
    let mut seen: BTreeSet<(ElementSet, ElementSet)> = BTreeSet::new();
    let mut out = Vec::new();
    for i in 0..subs.len() {
        for j in i..subs.len() {
            if orders[i] * orders[j] < n {
                continue;
            }
            let (a, b) = (subs[i].set()?, subs[j].set()?);
            if orders[i] * orders[j] != n * a.intersection(b).count() as u128 {
                continue;
            }
            if filter == FactorisationFilter::ProperOnly && (orders[i] == n || orders[j] == n) {
                continue;
            }
            if filter == FactorisationFilter::UpToConjugacy {
                let canon = (0..store.len() as u32)
                    .map(|h| {
                        let conj =
                            |s: &ElementSet| ElementSet::from_ids(store.len(), s.iter().map(|x| store.conj(x, h)));
                        let (x, y) = (conj(a), conj(b));
                        if x <= y {
                            (x, y)
                        } else {
                            (y, x)
                        }
                    })
                    .min()
                    .expect("nonempty group");
                if !seen.insert(canon) {
                    continue;
                }
            }
            out.push(Factorisation::new(g.clone(), subs[i].clone(), subs[j].clone())?);
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tally {
    pub pass: u64,
    pub fail: u64,
    pub not_applicable: u64,
    pub skipped: u64,
}

impl Tally {
    fn add(&mut self, v: Verdict) {
        match v {
            Verdict::Pass => self.pass += 1,
            Verdict::Fail => self.fail += 1,
            Verdict::NotApplicable => self.not_applicable += 1,
            Verdict::Skipped => self.skipped += 1,
        }
    }

    fn merge(&mut self, o: &Tally) {
        self.pass += o.pass;
        self.fail += o.fail;
        self.not_applicable += o.not_applicable;
        self.skipped += o.skipped;
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GroupStatus {
    #[default]
    Checked,
    SkippedBySize,
    OverMaxOrder,
    Error,
}

const EXAMPLE_LIMIT: usize = 5;

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupSummary {
    pub index: usize,
    pub spec: String,
    pub order: Option<u64>,
    pub status: GroupStatus,
    pub detail: Option<String>,
    pub subgroups: u64,
    pub factorisations: u64,
    /// Number of `p`-Baer factorisations, keyed by the prime.
    pub p_baer: BTreeMap<String, u64>,
    pub baer: u64,
    pub clauses: BTreeMap<String, Tally>,
    pub failures: Vec<String>,
    /// `p`-Baer factorisations with a factor that is not a `p`-Baer group.
    pub open_question_hits: u64,
    pub open_question_examples: Vec<String>,
}

impl GroupSummary {
    fn record(&mut self, r: &TheoremReport, context: &str) {
        for c in &r.clauses {
            self.clauses.entry(format!("{}:{}", r.theorem, c.id)).or_default().add(c.verdict);
            if c.verdict == Verdict::Fail {
                let prime = r.prime.map(|p| format!(" p={p}")).unwrap_or_default();
                self.failures.push(format!("{}{prime} {}: {} [{}]", r.theorem, c.id, c.detail, context));
            }
        }
    }

    pub fn failure_count(&self) -> u64 {
        self.clauses.values().map(|t| t.fail).sum::<u64>() + u64::from(self.status == GroupStatus::Error)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepTotals {
    pub groups: u64,
    pub checked: u64,
    pub skipped_by_size: u64,
    pub over_max_order: u64,
    pub errors: u64,
    pub factorisations: u64,
    pub p_baer: u64,
    pub baer: u64,
    pub clauses: BTreeMap<String, Tally>,
    pub failures: u64,
    pub open_question_hits: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum SweepRecord {
    Group(GroupSummary),
    Totals(SweepTotals),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepSummary {
    pub groups: Vec<GroupSummary>,
    pub totals: SweepTotals,
}

impl SweepSummary {
    pub fn passed(&self) -> bool {
        self.totals.failures == 0
    }

    /// One JSON object per group followed by a totals line.
    pub fn to_json_lines(&self) -> String {
        let mut out = String::new();
        for g in &self.groups {
            out.push_str(&serde_json::to_string(&SweepRecord::Group(g.clone())).expect("serializable"));
            out.push('\n');
        }
        out.push_str(&serde_json::to_string(&SweepRecord::Totals(self.totals.clone())).expect("serializable"));
        out.push('\n');
        out
    }

    pub fn from_json_lines(text: &str) -> Result<SweepSummary> {
        let mut groups = Vec::new();
        let mut totals = None;
        for line in text.lines().filter(|l| !l.trim().is_empty()) {
            match serde_json::from_str(line).map_err(|e| Error::invalid(e.to_string()))? {
                SweepRecord::Group(g) => groups.push(g),
                SweepRecord::Totals(t) => totals = Some(t),
            }
        }
        let totals = totals.ok_or_else(|| Error::invalid("missing totals record"))?;
        Ok(SweepSummary { groups, totals })
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for g in &self.groups {
            let order = g.order.map(|o| o.to_string()).unwrap_or_else(|| "?".into());
            let _ = write!(out, "{:<40} |G|={order:<5} ", g.spec);
            match g.status {
                GroupStatus::Checked => {
                    let _ = write!(
                        out,
                        "factorisations={} baer={} failures={}",
                        g.factorisations,
                        g.baer,
                        g.failure_count()
                    );
                    if g.open_question_hits > 0 {
                        let _ = write!(out, " open-question={}", g.open_question_hits);
                    }
                }
                ref s => {
                    let _ = write!(out, "{s:?}: {}", g.detail.as_deref().unwrap_or(""));
                }
            }
            out.push('\n');
            for f in &g.failures {
                let _ = writeln!(out, "  FAIL {f}");
            }
        }
        let t = &self.totals;
        let _ = writeln!(
            out,
            "groups={} checked={} skipped={} errors={} factorisations={} p-baer={} baer={} failures={} open-question={}",
            t.groups,
            t.checked,
            t.skipped_by_size + t.over_max_order,
            t.errors,
            t.factorisations,
            t.p_baer,
            t.baer,
            t.failures,
            t.open_question_hits
        );
        for (k, v) in &t.clauses {
            let _ = writeln!(
                out,
                "  {k:<36} pass={} fail={} n/a={} skipped={}",
                v.pass, v.fail, v.not_applicable, v.skipped
            );
        }
        out
    }
}

/// Runs the configured checks over every group, in parallel across groups.
/// The summary is independent of scheduling.
pub fn run_sweep(cfg: &SweepConfig) -> SweepSummary {
    let groups: Vec<GroupSummary> =
        cfg.groups.par_iter().enumerate().map(|(i, spec)| sweep_group(cfg, i, spec)).collect();
    let mut totals = SweepTotals { groups: groups.len() as u64, ..Default::default() };
    for g in &groups {
        match g.status {
            GroupStatus::Checked => totals.checked += 1,
            GroupStatus::SkippedBySize => totals.skipped_by_size += 1,
            GroupStatus::OverMaxOrder => totals.over_max_order += 1,
            GroupStatus::Error => totals.errors += 1,
        }
        totals.factorisations += g.factorisations;
        totals.p_baer += g.p_baer.values().sum::<u64>();
        totals.baer += g.baer;
        totals.failures += g.failure_count();
        totals.open_question_hits += g.open_question_hits;
        for (k, v) in &g.clauses {
            totals.clauses.entry(k.clone()).or_default().merge(v);
        }
    }
    SweepSummary { groups, totals }
}

fn sweep_group(cfg: &SweepConfig, index: usize, spec: &GroupSpec) -> GroupSummary {
    let mut s = GroupSummary { index, spec: spec.to_string(), ..Default::default() };
    if let Err(e) = sweep_group_inner(cfg, spec, &mut s) {
        s.status = if e.is_cap() { GroupStatus::SkippedBySize } else { GroupStatus::Error };
        s.detail = Some(e.to_string());
    }
    s
}

type GroupCheck = fn(&Group) -> Result<TheoremReport>;

fn sweep_group_inner(cfg: &SweepConfig, spec: &GroupSpec, s: &mut GroupSummary) -> Result<()> {
    let g = spec.build()?;
    if let Some(n) = g.known_order() {
        if *n > cfg.max_order.into() {
            s.status = GroupStatus::OverMaxOrder;
            s.detail = Some(format!("order {n} exceeds max_order {}", cfg.max_order));
            return Ok(());
        }
    }
    let order = g.order()?;
    s.order = Some(order);
    if order > cfg.max_order {
        s.status = GroupStatus::OverMaxOrder;
        s.detail = Some(format!("order {order} exceeds max_order {}", cfg.max_order));
        return Ok(());
    }
    let group_checks: [(Predicate, GroupCheck); 5] = [
        (Predicate::Wielandt, check_wielandt),
        (Predicate::CaminaCamina, check_camina_camina),
        (Predicate::LemmaBk, check_lemma_bk),
        (Predicate::IndexDivisibility, check_index_divisibility),
        (Predicate::ClassIndexPaths, check_class_index_paths),
    ];
    for (p, check) in group_checks {
        if cfg.wants(p) {
            s.record(&check(&g)?, "group");
        }
    }
    if !cfg.wants_factorisations() {
        return Ok(());
    }
    let subs = enumerate_subgroups(&g, DEFAULT_SUBGROUP_BUDGET)?;
    s.subgroups = subs.len() as u64;
    let facts = factorisations_from(&g, &subs, cfg.filter)?;
    s.factorisations = facts.len() as u64;
    let primes = prime_divisors(order);
    for f in &facts {
        sweep_factorisation(cfg, f, &primes, s)?;
    }
    Ok(())
}

fn sweep_factorisation(cfg: &SweepConfig, f: &Factorisation, primes: &[u64], s: &mut GroupSummary) -> Result<()> {
    let ctx = format!("|A|={} |B|={}", f.a().order()?, f.b().order()?);
    let status = is_baer(f)?;
    if status.is_baer {
        s.baer += 1;
    }
    for &p in primes {
        if status.per_prime.get(&p) == Some(&true) {
            *s.p_baer.entry(p.to_string()).or_default() += 1;
        }
    }
    if cfg.wants(Predicate::Baer) {
        let agree = primes.iter().all(|&p| status.per_prime.get(&p).copied().unwrap_or(true)) == status.is_baer;
        s.clauses.entry("baer:per-prime".into()).or_default().add(if agree { Verdict::Pass } else { Verdict::Fail });
        if !agree {
            s.failures.push(format!("baer per-prime: disagreement [{ctx}]"));
        }
    }
    if cfg.wants(Predicate::RemarkPath) {
        for &p in primes {
            let direct = is_p_baer(f, p)?.is_p_baer == Some(true);
            let v = match is_p_baer_prefactorised(f, p) {
                Ok(via) => {
                    if via == direct {
                        Verdict::Pass
                    } else {
                        s.failures.push(format!("remark-path p={p}: {direct} vs {via} [{ctx}]"));
                        Verdict::Fail
                    }
                }
                Err(e) if e.is_cap() => Verdict::Skipped,
                Err(e) => return Err(e),
            };
            s.clauses.entry("remark-path:agree".into()).or_default().add(v);
        }
    }
    if cfg.wants(Predicate::TheoremF) {
        s.record(&check_theorem_f_equivalence(f)?, &ctx);
    }
    for &p in primes {
        let p_baer = status.per_prime.get(&p) == Some(&true);
        if p_baer && cfg.wants(Predicate::TheoremA) {
            s.record(&report_theorem_a(f, p)?, &ctx);
        }
        if p_baer && cfg.wants(Predicate::TheoremB) {
            s.record(&report_theorem_b(f, p)?, &ctx);
        }
        if status.is_baer && cfg.wants(Predicate::TheoremE) {
            s.record(&report_theorem_e(f, p)?, &ctx);
        }
        if cfg.wants(Predicate::PIndex) {
            s.record(&check_p_index_decomposition(f, p, IndexScope::PElements)?, &ctx);
            s.record(&check_p_index_decomposition(f, p, IndexScope::AllPrimePower)?, &ctx);
        }
        if p_baer && cfg.wants(Predicate::PqBaer) {
            for &q in primes {
                if q != p && status.per_prime.get(&q) == Some(&true) {
                    s.record(&check_pq_baer(f, p, q)?, &ctx);
                }
            }
        }
        if p_baer && cfg.wants(Predicate::OpenQuestion) {
            let mut weak = Vec::new();
            for (name, x) in [("A", f.a()), ("B", f.b())] {
                let xf = Factorisation::trivial(x.as_group()?)?;
                if is_p_baer(&xf, p)?.is_p_baer == Some(false) {
                    weak.push(name);
                }
            }
            if !weak.is_empty() {
                s.open_question_hits += 1;
                if s.open_question_examples.len() < EXAMPLE_LIMIT {
                    let v = inheritance_violations(f, Some(p))?;
                    s.open_question_examples.push(format!(
                        "p={p} {ctx}: factor {} not {p}-Baer; {}",
                        weak.join(","),
                        v.first().map(String::as_str).unwrap_or("")
                    ));
                }
            }
        }
    }
    if status.is_baer && cfg.wants(Predicate::CorollaryC) {
        s.record(&report_corollary_c(f)?, &ctx);
    }
    if status.is_baer && cfg.wants(Predicate::PropositionD) {
        s.record(&check_factor_inheritance(f)?, &ctx);
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{cyclic, symmetric};

    #[test]
    fn config_parses() {
        let cfg = SweepConfig::parse(
            "# demo\nmax_order = 60\npredicates = [baer, theorem-f]\nfilter = proper-only\ncyclic(6)\n\nsymmetric(3) # s3\n",
        )
        .unwrap();
        assert_eq!(cfg.max_order, 60);
        assert_eq!(cfg.predicates.len(), 2);
        assert_eq!(cfg.filter, FactorisationFilter::ProperOnly);
        assert_eq!(cfg.groups.len(), 2);
        assert!(SweepConfig::parse("colour = red").is_err());
        assert!(SweepConfig::parse("predicates = [nope]").is_err());
        assert!(SweepConfig::parse("max_order = 99999999999").is_err());
        assert_eq!(SweepConfig::parse("").unwrap().max_order, 200);
    }

    fn brute_count(g: &Group, proper: bool) -> usize {
        let subs = enumerate_subgroups(g, DEFAULT_SUBGROUP_BUDGET).unwrap();
        let n = g.order().unwrap() as usize;
        let mut count = 0;
        for i in 0..subs.len() {
            for j in i..subs.len() {
                let (a, b) = (subs[i].elements().unwrap(), subs[j].elements().unwrap());
                let mut prods = BTreeSet::new();
                for x in &a {
                    for y in &b {
                        prods.insert(x.then(y));
                    }
                }
                if prods.len() == n && !(proper && (a.len() == n || b.len() == n)) {
                    count += 1;
                }
            }
        }
        count
    }

    #[test]
    fn factorisations_match_products() {
        for g in [cyclic(2).unwrap(), cyclic(6).unwrap(), symmetric(3).unwrap(), symmetric(4).unwrap()] {
            let all = enumerate_factorisations(&g, FactorisationFilter::All).unwrap();
            assert_eq!(all.len(), brute_count(&g, false));
            let proper = enumerate_factorisations(&g, FactorisationFilter::ProperOnly).unwrap();
            assert_eq!(proper.len(), brute_count(&g, true));
        }
        // C2: {1,C2} and {C2,C2}
        assert_eq!(enumerate_factorisations(&cyclic(2).unwrap(), FactorisationFilter::All).unwrap().len(), 2);
    }

    #[test]
    fn conjugacy_filter_collapses_sylow_pairs() {
        let g = symmetric(3).unwrap();
        let all = enumerate_factorisations(&g, FactorisationFilter::ProperOnly).unwrap();
        assert_eq!(all.len(), 3);
        let reduced = enumerate_factorisations(&g, FactorisationFilter::UpToConjugacy).unwrap();
        assert!(reduced.len() < enumerate_factorisations(&g, FactorisationFilter::All).unwrap().len());
    }

    #[test]
    fn empty_and_trivial() {
        let s = run_sweep(&SweepConfig::parse("").unwrap());
        assert!(s.groups.is_empty() && s.passed());
        let t = enumerate_factorisations(&cyclic(1).unwrap(), FactorisationFilter::All).unwrap();
        assert_eq!(t.len(), 1);
    }

    #[test]
    fn small_sweep_is_clean_and_round_trips() {
        let cfg = SweepConfig::parse("max_order = 30\ncyclic(6)\nsymmetric(3)\ndihedral(10)\nsymmetric(5)\n").unwrap();
        let s = run_sweep(&cfg);
        assert!(s.passed(), "{}", s.to_text());
        assert_eq!(s.totals.over_max_order, 1);
        let text = s.to_json_lines();
        assert_eq!(SweepSummary::from_json_lines(&text).unwrap(), s);
    }
}
