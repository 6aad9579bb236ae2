use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{Context, Result};
use baerlab_core::baer::{
    check_factor_inheritance, check_p_index_decomposition, check_pq_baer, check_theorem_f_equivalence, is_baer,
    is_p_baer, report_corollary_c, report_theorem_a, report_theorem_b, report_theorem_e, unique_primes, IndexScope,
    TheoremReport, Verdict,
};
use baerlab_core::corpus::{run_sweep, SweepConfig};
use baerlab_core::group::set_enumeration_cap;
use baerlab_core::primes::prime_divisors;
use baerlab_core::Factorisation;
use clap::{Args, Parser, Subcommand, ValueEnum};

use baerlab::document::{InputEcho, ReportDocument};
use baerlab::input::{resolve_factorisation, resolve_group, FactorisationChoice, GroupInput};

#[derive(Parser)]
#[command(name = "baerlab", version, about = "Check Baer and p-Baer factorisations of finite permutation groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether a factorisation is p-Baer (with --prime) or Baer.
    Check {
        #[command(flatten)]
        target: Target,
        #[command(flatten)]
        common: Common,
    },
    /// Run theorem reports on a factorisation.
    Report {
        #[command(flatten)]
        target: Target,
        #[arg(long, value_enum, default_value = "all")]
        theorem: Theorem,
        #[command(flatten)]
        common: Common,
    },
    /// Run a sweep configuration over its corpus of groups.
    Sweep {
        config: PathBuf,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Args)]
struct Target {
    /// Example id (E3.8, E4.3i, E4.3ii, F1, F2, F3), a group spec, or a file holding one.
    group: String,
    /// The factors A and B: `factor(i,..)`, `trivial`, `whole`, or words like "g0, g1^-1*g2".
    #[arg(long, num_args = 2, value_names = ["A", "B"], conflicts_with = "trivial_factorisation")]
    factorisation: Option<Vec<String>>,
    /// Use G = G G.
    #[arg(long)]
    trivial_factorisation: bool,
    #[arg(long, conflicts_with = "all_primes")]
    prime: Option<u64>,
    #[arg(long)]
    all_primes: bool,
}

#[derive(Args)]
struct Common {
    /// Largest group the engine will enumerate (overrides BAERLAB_CAP).
    #[arg(long)]
    cap: Option<usize>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Write output here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Treat skipped clauses and cap overruns as failures.
    #[arg(long)]
    strict: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Theorem {
    A,
    B,
    C,
    D,
    E,
    F,
    Pq,
    PIndex,
    All,
}

impl Theorem {
    fn expand(self) -> Vec<Theorem> {
        match self {
            Theorem::All => vec![Theorem::A, Theorem::B, Theorem::C, Theorem::D, Theorem::E, Theorem::F],
            t => vec![t],
        }
    }

    fn name(self) -> &'static str {
        match self {
            Theorem::A => "a",
            Theorem::B => "b",
            Theorem::C => "c",
            Theorem::D => "d",
            Theorem::E => "e",
            Theorem::F => "f",
            Theorem::Pq => "pq",
            Theorem::PIndex => "p-index",
            Theorem::All => "all",
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Check { target, common } => {
            apply_cap(&common)?;
            let doc = cmd_check(&target)?;
            emit(&common, &doc.to_text(), &doc.to_json_lines())?;
            Ok(doc.exit_code as u8)
        }
        Command::Report { target, theorem, common } => {
            apply_cap(&common)?;
            let doc = cmd_report(&target, theorem, common.strict)?;
            emit(&common, &doc.to_text(), &doc.to_json_lines())?;
            Ok(doc.exit_code as u8)
        }
        Command::Sweep { config, common } => {
            apply_cap(&common)?;
            let text = std::fs::read_to_string(&config).with_context(|| format!("reading {}", config.display()))?;
            let cfg = SweepConfig::parse(&text).with_context(|| format!("in {}", config.display()))?;
            let summary = run_sweep(&cfg);
            emit(&common, &summary.to_text(), &summary.to_json_lines())?;
            let incomplete = summary.totals.skipped_by_size > 0;
            Ok(if summary.passed() && !(common.strict && incomplete) { 0 } else { 1 })
        }
    }
}

fn apply_cap(common: &Common) -> Result<()> {
    let cap = match (common.cap, std::env::var("BAERLAB_CAP")) {
        (Some(c), _) => Some(c),
        (None, Ok(v)) => Some(v.trim().parse().with_context(|| format!("BAERLAB_CAP is not a number: {v}"))?),
        (None, Err(_)) => None,
    };
    if let Some(c) = cap {
        set_enumeration_cap(c);
    }
    Ok(())
}

fn emit(common: &Common, text: &str, json: &str) -> Result<()> {
    let body = if common.format == Format::Json { json } else { text };
    match &common.out {
        Some(path) => std::fs::write(path, body).with_context(|| format!("writing {}", path.display())),
        None => {
            print!("{body}");
            Ok(())
        }
    }
}

fn choice(target: &Target) -> FactorisationChoice {
    match (&target.factorisation, target.trivial_factorisation) {
        (Some(v), _) => FactorisationChoice::Given(v[0].clone(), v[1].clone()),
        (None, true) => FactorisationChoice::Trivial,
        (None, false) => FactorisationChoice::Default,
    }
}

fn prepare(target: &Target, command: &str) -> Result<(GroupInput, Factorisation, InputEcho)> {
    let input = resolve_group(&target.group)?;
    let ch = choice(target);
    let f = resolve_factorisation(&input, &ch)?;
    let echo = InputEcho {
        command: command.into(),
        group: input.label.clone(),
        order: input.group.order_big()?.to_string(),
        factorisation: Some(ch.echo(&input)),
        factor_orders: f.a().order().and_then(|a| Ok((a, f.b().order()?))).ok(),
        primes: target.prime.into_iter().collect(),
        theorems: Vec::new(),
    };
    Ok((input, f, echo))
}

fn cmd_check(target: &Target) -> Result<ReportDocument> {
    let start = Instant::now();
    let (_, f, echo) = prepare(target, "check")?;
    let mut doc = ReportDocument::new(echo);
    let holds = match target.prime {
        Some(p) => {
            let status = is_p_baer(&f, p)?;
            let holds = status.is_p_baer == Some(true);
            doc.statuses.push(status);
            if holds {
                doc.unique_primes.push(unique_primes(&f, p)?);
            }
            holds
        }
        None => {
            let status = is_baer(&f)?;
            let holds = status.is_baer;
            doc.statuses.push(status);
            holds
        }
    };
    doc.exit_code = if holds { 0 } else { 1 };
    doc.elapsed_ms = start.elapsed().as_millis() as u64;
    Ok(doc)
}

fn cmd_report(target: &Target, theorem: Theorem, strict: bool) -> Result<ReportDocument> {
    let start = Instant::now();
    let (input, f, mut echo) = prepare(target, "report")?;
    let primes = match target.prime {
        Some(p) => vec![p],
        None => input.group.order().map(prime_divisors).unwrap_or_default(),
    };
    let theorems = theorem.expand();
    echo.primes = primes.clone();
    echo.theorems = theorems.iter().map(|t| t.name().to_string()).collect();
    let mut doc = ReportDocument::new(echo);
    let record = |doc: &mut ReportDocument, label: String, r: baerlab_core::Result<TheoremReport>| match r {
        Ok(r) => {
            doc.reports.push(r);
            Ok(())
        }
        Err(e) if e.is_cap() => {
            doc.cap_events.push(format!("{label}: {e}"));
            Ok(())
        }
        Err(e) => Err(e),
    };
    match is_baer(&f) {
        Ok(s) => doc.statuses.push(s),
        Err(e) if e.is_cap() => doc.cap_events.push(format!("baer status: {e}")),
        Err(e) => return Err(e.into()),
    }
    for t in theorems {
        match t {
            Theorem::A | Theorem::B | Theorem::E => {
                for &p in &primes {
                    let r = match t {
                        Theorem::A => report_theorem_a(&f, p),
                        Theorem::B => report_theorem_b(&f, p),
                        _ => report_theorem_e(&f, p),
                    };
                    record(&mut doc, format!("{} p={p}", t.name()), r)?;
                }
            }
            Theorem::C => record(&mut doc, "c".into(), report_corollary_c(&f))?,
            Theorem::D => record(&mut doc, "d".into(), check_factor_inheritance(&f))?,
            Theorem::F => record(&mut doc, "f".into(), check_theorem_f_equivalence(&f))?,
            Theorem::Pq => {
                for &p in &primes {
                    for q in input.group.order().map(prime_divisors).unwrap_or_default() {
                        if q != p {
                            record(&mut doc, format!("pq p={p} q={q}"), check_pq_baer(&f, p, q))?;
                        }
                    }
                }
            }
            Theorem::PIndex => {
                for &p in &primes {
                    for scope in [IndexScope::PElements, IndexScope::AllPrimePower] {
                        record(&mut doc, format!("p-index p={p}"), check_p_index_decomposition(&f, p, scope))?;
                    }
                }
            }
            Theorem::All => unreachable!(),
        }
    }
    let failed = doc.reports.iter().any(|r| !r.passed);
    let incomplete = !doc.cap_events.is_empty() || doc.reports.iter().any(|r| r.count(Verdict::Skipped) > 0);
    doc.exit_code = if failed || (strict && incomplete) { 1 } else { 0 };
    doc.elapsed_ms = start.elapsed().as_millis() as u64;
    Ok(doc)
}
