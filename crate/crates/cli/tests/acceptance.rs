//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::Command;
use std::time::{Duration, Instant};

use baerlab_core::baer::{
    baer_decomposition, check_no_coprime_splitting, check_theorem_f_equivalence, is_baer, is_p_baer, unique_primes,
    Verdict,
};
use baerlab_core::corpus::{build_example, run_sweep, ExampleId, GroupStatus, SweepConfig, SweepSummary};
use baerlab_core::primes::{classify_prime_power, prime_divisors};
use baerlab_core::structure::{
    enumerate_subgroups, is_abelian, join, o_p, sylow, Factorisation, DEFAULT_SUBGROUP_BUDGET,
};
use baerlab_core::{Group, GroupSpec, Permutation, Subgroup};

const SMALL: &str = include_str!("../../core/corpus/small.txt");
const UNCONDITIONAL: &str = include_str!("../../core/corpus/unconditional.txt");

type Check = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn ok<T, E: std::fmt::Display>(r: Result<T, E>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn conj(x: &Permutation, h: &Permutation) -> Permutation {
    h.inverse().then(x).then(h)
}

/// Class size of `x` under conjugation by every element of `within`.
fn brute_index(within: &[Permutation], x: &Permutation) -> u64 {
    within.iter().map(|h| conj(x, h)).collect::<BTreeSet<_>>().len() as u64
}

fn brute_centraliser_index(g: &[Permutation], s: &[Permutation]) -> u64 {
    let c = g.iter().filter(|x| s.iter().all(|y| y.commutes_with(x))).count();
    (g.len() / c) as u64
}

fn brute_normal(g: &Group, s: &Subgroup) -> Result<bool, String> {
    let members: BTreeSet<Permutation> = ok(s.elements())?.into_iter().collect();
    Ok(members.iter().all(|x| g.generators().iter().all(|h| members.contains(&conj(x, h)))))
}

fn p_element_indices(within: &[Permutation], xs: &[Permutation], p: u64) -> BTreeSet<u64> {
    xs.iter().filter(|x| !x.is_identity() && x.is_p_element(p)).map(|x| brute_index(within, x)).collect()
}

fn brute_baer(f: &Factorisation) -> Result<bool, String> {
    let g = ok(f.group().elements())?;
    let mut xs = ok(f.a().elements())?;
    xs.extend(ok(f.b().elements())?);
    Ok(xs
        .iter()
        .filter(|x| x.order() > 1 && classify_prime_power(x.order()).is_prime_power)
        .all(|x| classify_prime_power(brute_index(g, x)).is_prime_power))
}

fn within(limit: Duration, start: Instant) -> Result<(), String> {
    let t = start.elapsed();
    if t > limit {
        return Err(format!("took {t:?}, limit {limit:?}"));
    }
    Ok(())
}

fn criterion_1() -> Check {
    let start = Instant::now();
    let ex = ok(build_example(ExampleId::E3_8))?;
    let f = ex.factorisation.as_ref().ok_or("no factorisation")?;
    let g = &ex.group;
    let elems = ok(g.elements())?;
    let ia = p_element_indices(elems, &ok(f.a().elements())?, 2);
    let ib = p_element_indices(elems, &ok(f.b().elements())?, 2);
    ensure!(ia == [3].into(), "2-elements of A have indices {ia:?}");
    ensure!(ib == [5].into(), "2-elements of B have indices {ib:?}");
    ensure!(ok(is_p_baer(f, 2))?.is_p_baer == Some(true), "not 2-Baer");
    let u = ok(unique_primes(f, 2))?.resolved();
    ensure!(u == (3, 5), "unique primes {u:?}");
    let p = ok(sylow(g, 2))?;
    for q in [3, 5] {
        let s = ok(join(g, &[&p, &ok(o_p(g, q))?]))?;
        ensure!(!brute_normal(g, &s)?, "P O_{q}(G) is normal");
    }
    within(Duration::from_secs(1), start)?;
    Ok(format!("indices A {ia:?}, B {ib:?}; (q, r) = {u:?}; P O_3, P O_5 not normal; {:?}", start.elapsed()))
}

fn criterion_2() -> Check {
    let start = Instant::now();
    let status = Command::new(env!("CARGO_BIN_EXE_baerlab"))
        .args(["check", "E4.3ii"])
        .env_remove("BAERLAB_CAP")
        .output()
        .map_err(|e| e.to_string())?
        .status;
    ensure!(status.code() == Some(0), "check E4.3ii exited {status}");
    let ex = ok(build_example(ExampleId::E4_3ii))?;
    let f = ex.factorisation.as_ref().ok_or("no factorisation")?;
    ensure!(brute_baer(f)?, "brute force says the factorisation is not Baer");
    ensure!(ok(is_baer(f))?.is_baer, "is_baer false");
    let g = &ex.group;
    let elems = ok(g.elements())?;
    let mut witness = None;
    for x in elems {
        if x.order() > 1
            && x.is_p_element(2)
            && !ok(f.a().contains(x))?
            && !ok(f.b().contains(x))?
            && brute_index(elems, x) == 15
        {
            witness = Some(x.to_string());
            break;
        }
    }
    let witness = witness.ok_or("no 2-element outside A and B with index 15")?;
    let trivial = ok(Factorisation::trivial(g.clone()))?;
    ensure!(!ok(is_baer(&trivial))?.is_baer, "trivial factorisation is Baer");
    ensure!(!brute_baer(&trivial)?, "brute force says G = GG is Baer");
    within(Duration::from_secs(1), start)?;
    Ok(format!("Baer (exit 0); {witness} has index 15; G = GG not Baer; {:?}", start.elapsed()))
}

fn criterion_3() -> Check {
    let start = Instant::now();
    let ex = ok(build_example(ExampleId::F1))?;
    let f = ex.factorisation.as_ref().ok_or("no factorisation")?;
    let g = &ex.group;
    ensure!(ok(g.order())? == 168, "order {}", ok(g.order())?);
    let elems = ok(g.elements())?;
    let idx = p_element_indices(elems, elems, 2);
    ensure!(idx == [7].into(), "2-element indices {idx:?}");
    let o2 = ok(ok(o_p(g, 2))?.elements())?;
    let ci = brute_centraliser_index(elems, &o2);
    ensure!(ci == 21, "|G:C_G(O_2(G))| = {ci}");
    let mut cent_predicate = true;
    for p in prime_divisors(168) {
        for x in [f.a(), f.b()] {
            let s = ok(ok(baerlab_core::structure::sylow_of_subgroup(x, p))?.elements())?;
            cent_predicate &= classify_prime_power(brute_centraliser_index(elems, &s)).is_prime_power;
        }
    }
    ensure!(!cent_predicate, "centraliser predicate holds");
    ensure!(ok(is_p_baer(f, 2))?.is_p_baer == Some(true), "not 2-Baer");
    ensure!(!ok(is_baer(f))?.is_baer, "Baer predicate holds");
    ensure!(!brute_baer(f)?, "brute force Baer predicate holds");
    let r = ok(check_theorem_f_equivalence(f))?;
    let eq = r.get("equivalence").ok_or("no equivalence clause")?;
    ensure!(eq.verdict == Verdict::Pass, "equivalence verdict {:?}", eq.verdict);
    within(Duration::from_secs(5), start)?;
    Ok(format!("|G| = 168; 2-element indices {idx:?}; |G:C_G(O_2)| = 21; equivalence pass; {:?}", start.elapsed()))
}

fn criterion_4() -> Check {
    let start = Instant::now();
    let ex = ok(build_example(ExampleId::F2))?;
    let g = &ex.group;
    let elems = ok(g.elements())?;
    let subs = ok(enumerate_subgroups(g, DEFAULT_SUBGROUP_BUDGET))?;
    let hs: Vec<&Subgroup> = subs.iter().filter(|s| s.order().ok() == Some(24)).collect();
    let ks: Vec<&Subgroup> = subs.iter().filter(|s| s.order().ok() == Some(7)).collect();
    for h in &hs {
        let helems = ok(h.elements())?;
        let witness = helems
            .iter()
            .find(|x| x.order() > 1 && x.is_p_element(2) && brute_index(&helems, x) == 3 && brute_index(elems, x) == 7);
        let Some(x) = witness else { continue };
        for k in &ks {
            let Ok(f) = Factorisation::new(g.clone(), (*h).clone(), (*k).clone()) else { continue };
            let xs: Vec<Permutation> = helems.iter().chain(&ok(k.elements())?).cloned().collect();
            let two_baer = p_element_indices(elems, &xs, 2).into_iter().all(|i| classify_prime_power(i).is_prime_power);
            if two_baer && ok(is_p_baer(&f, 2))?.is_p_baer == Some(true) {
                let named = ex.factorisation.as_ref().ok_or("no factorisation")?;
                ensure!(ok(is_p_baer(named, 2))?.is_p_baer == Some(true), "named F2 factorisation not 2-Baer");
                return Ok(format!(
                    "{} subgroups of order 24, {} of order 7; G = HK 2-Baer with x = {x}, i_H(x) = 3, i_G(x) = 7; {:?}",
                    hs.len(),
                    ks.len(),
                    start.elapsed()
                ));
            }
        }
    }
    Err("no 2-Baer factorisation G = HK with the required witness".into())
}

fn criterion_5() -> Check {
    let start = Instant::now();
    let ex = ok(build_example(ExampleId::E4_3i))?;
    let f = ex.factorisation.as_ref().ok_or("no factorisation")?;
    let g = &ex.group;
    let order = ok(g.order_big())?;
    ensure!(order == num_bigint::BigUint::from(2310u32 * 2310), "order {order}");
    ensure!(ok(is_baer(f))?.is_baer, "is_baer false");
    ensure!(ok(check_no_coprime_splitting(g))?, "coprime splitting found");
    let a = ok(f.a().as_group())?;
    let d = ok(baer_decomposition(&a))?.ok_or("factor A has no Baer decomposition")?;
    let blocks: BTreeSet<Vec<u64>> = d.prime_partition.iter().cloned().collect();
    let want: BTreeSet<Vec<u64>> = [vec![3], vec![2, 7], vec![5, 11]].into();
    ensure!(blocks == want, "blocks {blocks:?}");
    for (factor, primes) in d.factors.iter().zip(&d.prime_partition) {
        if ok(factor.order())? > 1 && !classify_prime_power(ok(factor.order())?).is_prime_power {
            for &p in primes {
                ensure!(
                    ok(is_abelian(&ok(baerlab_core::structure::sylow_of_subgroup(factor, p))?))?,
                    "Sylow {p} of block {primes:?} not abelian"
                );
            }
        }
    }
    within(Duration::from_secs(30), start)?;
    Ok(format!("|G| = {order}; Baer; no coprime splitting; blocks {:?}; {:?}", d.prime_partition, start.elapsed()))
}

fn required_groups(cfg: &SweepConfig) -> Result<(), String> {
    let have: BTreeSet<String> = cfg.groups.iter().map(|g| g.to_string()).collect();
    for text in [
        "symmetric(3)",
        "dihedral(10)",
        "product(symmetric(3), dihedral(10))",
        "frobenius(7,2)",
        "frobenius(7,3)",
        "frobenius(11,5)",
        "dihedral(22)",
        "symmetric(4)",
        "cyclic(2)",
        "cyclic(12)",
    ] {
        let spec = ok(GroupSpec::parse(text))?.to_string();
        ensure!(have.contains(&spec), "corpus lacks {text}");
    }
    ensure!(
        have.iter().filter(|s| s.starts_with("subgroup(semilinear(2,3)")).count() >= 3,
        "corpus lacks subgroups of semilinear(2,3)"
    );
    Ok(())
}

fn criterion_6(cfg: &SweepConfig, s: &SweepSummary) -> Check {
    required_groups(cfg)?;
    ensure!(cfg.max_order == 120, "max_order {}", cfg.max_order);
    let t = &s.totals;
    ensure!(t.checked == t.groups, "{} of {} groups checked", t.checked, t.groups);
    let eq = t.clauses.get("F:equivalence").ok_or("no equivalence tallies")?;
    ensure!(eq.fail == 0 && eq.skipped == 0, "equivalence fail {} skipped {}", eq.fail, eq.skipped);
    ensure!(eq.pass == t.factorisations, "{} agreements of {} factorisations", eq.pass, t.factorisations);
    let mut brute = 0;
    for text in ["product(symmetric(3), dihedral(10))", "frobenius(7,3)", "dihedral(22)", "symmetric(4)"] {
        let g = ok(ok(GroupSpec::parse(text))?.build())?;
        let elems = ok(g.elements())?.to_vec();
        for f in ok(baerlab_core::corpus::enumerate_factorisations(&g, Default::default()))? {
            let mut cent = true;
            for p in prime_divisors(ok(g.order())?) {
                for x in [f.a(), f.b()] {
                    let sy = ok(ok(baerlab_core::structure::sylow_of_subgroup(x, p))?.elements())?;
                    cent &= classify_prime_power(brute_centraliser_index(&elems, &sy)).is_prime_power;
                }
            }
            ensure!(brute_baer(&f)? == cent, "brute-force disagreement in {text}");
            brute += 1;
        }
    }
    Ok(format!(
        "{} groups, {} factorisations, 100% agreement; {brute} re-derived by brute force",
        t.groups, t.factorisations
    ))
}

fn criterion_7() -> Result<(String, SweepSummary), String> {
    let start = Instant::now();
    let cfg = ok(SweepConfig::parse(UNCONDITIONAL))?;
    let s = run_sweep(&cfg);
    let t = &s.totals;
    ensure!(t.errors == 0 && t.skipped_by_size == 0, "errors {} skipped {}", t.errors, t.skipped_by_size);
    for g in &s.groups {
        ensure!(
            g.status == GroupStatus::Checked || g.status == GroupStatus::OverMaxOrder,
            "{} not checked: {:?}",
            g.spec,
            g.detail
        );
    }
    let mut checked = 0;
    for (k, v) in &t.clauses {
        if k.starts_with("wielandt") || k.starts_with("camina-camina") || k.starts_with("index-divisibility") {
            ensure!(v.fail == 0 && v.skipped == 0, "{k}: fail {} skipped {}", v.fail, v.skipped);
            checked += v.pass;
        }
    }
    ensure!(
        t.clauses.contains_key("index-divisibility:a") && t.clauses.contains_key("index-divisibility:b"),
        "no divisibility tallies"
    );
    within(Duration::from_secs(300), start)?;
    Ok((format!("{} groups of order <= 200, {checked} clause passes, 0 failures; {:?}", t.checked, start.elapsed()), s))
}

fn criterion_8(s: &SweepSummary) -> Check {
    let t = &s.totals;
    let mut passes = 0;
    for (k, v) in &t.clauses {
        if ["A:", "B:", "C:", "D:", "E:"].iter().any(|p| k.starts_with(p)) {
            ensure!(v.fail == 0, "{k}: {} failed", v.fail);
            passes += v.pass;
        }
    }
    let hyp = |k: &str| t.clauses.get(k).map_or(0, |v| v.pass);
    ensure!(hyp("A:hypothesis") == t.p_baer && hyp("B:hypothesis") == t.p_baer, "A/B not run on every p-Baer instance");
    ensure!(hyp("C:hypothesis") == t.baer && hyp("D:hypothesis") == t.baer, "C/D not run on every Baer factorisation");
    ensure!(t.p_baer > 0 && t.baer > 0, "nothing to check");
    Ok(format!("{} p-Baer instances, {} Baer factorisations, {passes} clause passes, 0 failures", t.p_baer, t.baer))
}

fn run(name: &str, f: impl FnOnce() -> Check) -> bool {
    let result = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
        Err(p
            .downcast_ref::<String>()
            .cloned()
            .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
            .unwrap_or_default())
    });
    match result {
        Ok(detail) => {
            println!("PASS  {name}: {detail}");
            true
        }
        Err(why) => {
            println!("FAIL  {name}: {why}");
            false
        }
    }
}

fn main() {
    let mut all = true;
    all &= run("1 E3.8 reproduction", criterion_1);
    all &= run("2 E4.3ii reproduction", criterion_2);
    all &= run("3 F1 reproduction", criterion_3);
    all &= run("4 F2 reproduction", criterion_4);
    all &= run("5 E4.3i at full order", criterion_5);

    let small = SweepConfig::parse(SMALL).expect("small corpus parses");
    let started = Instant::now();
    let first = run_sweep(&small);
    let small_time = started.elapsed();
    all &= run("6 centraliser criterion equivalence", || {
        criterion_6(&small, &first).map(|d| format!("{d}; {small_time:?}"))
    });
    let mut unconditional = None;
    all &= run("7 unconditional regression", || {
        let (detail, s) = criterion_7()?;
        unconditional = Some(s);
        Ok(detail)
    });
    all &= run("8 conditional regression", || criterion_8(&first));
    all &= run("9 determinism", || {
        let again = run_sweep(&small).to_json_lines();
        ensure!(again == first.to_json_lines(), "small corpus summaries differ");
        let u1 = unconditional.as_ref().ok_or("unconditional sweep did not complete")?.to_json_lines();
        let u2 = run_sweep(&SweepConfig::parse(UNCONDITIONAL).map_err(|e| e.to_string())?).to_json_lines();
        ensure!(u1 == u2, "unconditional corpus summaries differ");
        Ok(format!("{} + {} bytes identical across runs", again.len(), u1.len()))
    });
    if !all {
        std::process::exit(1);
    }
}
