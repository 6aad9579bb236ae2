use serde::{Deserialize, Serialize};

use super::predicates::{is_baer, profile, status_from, unique_primes_from, Entry, Locus};
use super::report::{Outcome, TheoremReport};
use crate::error::{Error, Result};
use crate::group::Group;
use crate::perm::Permutation;
use crate::primes::{classify_prime_power, complement_in, is_p_number, pi_part, prime_divisors};
use crate::structure::{
    find_prefactorised_sylow, fitting, hall, is_abelian, is_abelian_group, is_nilpotent, is_normal, is_p_decomposable,
    join, normal_closure, o_p, o_p_prime, o_pi, quotient_group, sylow, sylow_of_subgroup, upper_p_series,
    Factorisation, DEFAULT_HALL_BUDGET,
};
use crate::subgroup::Subgroup;

fn commute(xs: &[Permutation], ys: &[Permutation]) -> bool {
    xs.iter().all(|x| ys.iter().all(|y| x.commutes_with(y)))
}

fn index_of(g: &Group, s: &Subgroup) -> Result<u64> {
    Ok(g.order()? / s.order()?)
}

/// `G / C_G(O_p(G))`.
fn centraliser_quotient(g: &Group, p: u64) -> Result<Group> {
    let c = g.centraliser(&o_p(g, p)?.generators()?)?;
    Ok(quotient_group(g, &c)?.group().clone())
}

fn show(p: Option<u64>) -> String {
    p.map_or_else(|| "none".into(), |p| p.to_string())
}

fn primes_str(ps: &[u64]) -> String {
    format!("{{{}}}", ps.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(", "))
}

const A_CLAUSES: [&str; 6] = ["1", "2", "3", "4", "5", "6"];

/// Structure of a group with a `p`-Baer factorisation: `p`-decomposability
/// of `G/C_G(O_p(G))`, `p`-length 1, abelian Sylow `p`-subgroup of
/// `G/F(G)`, and the centralising properties of `P ∩ A`, `P ∩ B`.
pub fn report_theorem_a(f: &Factorisation, p: u64) -> Result<TheoremReport> {
    let mut r = TheoremReport::new("A", Some(p));
    let status = status_from(f, &profile(f)?, Some(p))?;
    if !r.hypothesis(status.is_p_baer == Some(true), &format!("{p}-Baer factorisation"), &A_CLAUSES) {
        return Ok(r.finish());
    }
    let g = f.group();
    if let Err(e) = g.store() {
        if e.is_cap() {
            r.skip_all(&A_CLAUSES, "skipped by size: group not materializable");
            return Ok(r.finish());
        }
        return Err(e);
    }
    let pp = sylow(g, p)?;
    r.clause("1", || {
        let q = centraliser_quotient(g, p)?;
        Ok(Outcome::check(is_p_decomposable(&q, p)?, format!("|G:C_G(O_p(G))| = {}", q.order()?)))
    })?;
    r.clause("2", || {
        let pf = join(g, &[&pp, &fitting(g)?])?;
        let pop = join(g, &[&pp, &o_p_prime(g, p)?])?;
        let series = upper_p_series(g, p)?;
        let ok = is_normal(g, &pf)? && is_normal(g, &pop)? && series.is_p_soluble && series.p_length <= 1;
        Ok(Outcome::check(
            ok,
            format!(
                "|PF(G)| = {}, |PO_p'(G)| = {}, p-length {}, p-soluble {}",
                pf.order()?,
                pop.order()?,
                series.p_length,
                series.is_p_soluble
            ),
        ))
    })?;
    r.clause("3", || {
        let q = quotient_group(g, &fitting(g)?)?;
        let s = sylow(q.group(), p)?;
        Ok(Outcome::check(is_abelian(&s)?, format!("Sylow {p}-subgroup of G/F(G) has order {}", s.order()?)))
    })?;
    r.clause("4", || {
        let (a, b) = (is_abelian(&pp)?, is_abelian(&o_p(g, p)?)?);
        Ok(Outcome::check(a == b, format!("P abelian: {a}, O_p(G) abelian: {b}")))
    })?;
    r.clause("5", || clause_a5(f, p))?;
    r.clause("6", || {
        let sa = sylow_of_subgroup(f.a(), p)?;
        let sb = sylow_of_subgroup(f.b(), p)?;
        if is_abelian(&sa)? || is_abelian(&sb)? {
            return Ok(Outcome::na("a Sylow subgroup of A or B is abelian"));
        }
        Ok(Outcome::check(is_p_decomposable(g, p)?, "both Sylow subgroups non-abelian"))
    })?;
    Ok(r.finish())
}

fn clause_a5(f: &Factorisation, p: u64) -> Result<Outcome> {
    let g = f.group();
    let pp = find_prefactorised_sylow(f, p)?;
    let op_gens = o_p(g, p)?.generators()?;
    let mut applicable = Vec::new();
    for (name, x) in [("A", f.a()), ("B", f.b())] {
        let px = pp.intersection(x)?;
        let gens = px.generators()?;
        if !commute(&gens, &op_gens) {
            applicable.push((name, gens));
        }
    }
    if applicable.is_empty() {
        return Ok(Outcome::na("P ∩ A and P ∩ B centralise O_p(G)"));
    }
    let primes = complement_in(g.order()?, &[p]);
    let h = hall(g, &primes, DEFAULT_HALL_BUDGET)?
        .ok_or_else(|| Error::invariant(format!("no Hall {p}'-subgroup in a {p}-soluble group")))?;
    let closure = normal_closure(g, &h.generators()?)?.generators()?;
    let mut bad = Vec::new();
    for (name, gens) in &applicable {
        if !commute(gens, &closure) {
            bad.push(name.to_string());
        }
    }
    let names: Vec<&str> = applicable.iter().map(|(n, _)| *n).collect();
    Ok(Outcome::check(bad.is_empty(), format!("P ∩ X centralises all Hall {p}'-subgroups for X in {names:?}"))
        .with(bad))
}

const B_CLAUSES: [&str; 5] = ["unique-primes", "centraliser", "normal", "1", "2"];

/// The primes `q`, `r` of a `p`-Baer factorisation and the normality of
/// `P O_q(G) O_r(G)`.
pub fn report_theorem_b(f: &Factorisation, p: u64) -> Result<TheoremReport> {
    let mut r = TheoremReport::new("B", Some(p));
    let entries = profile(f)?;
    let status = status_from(f, &entries, Some(p))?;
    if !r.hypothesis(status.is_p_baer == Some(true), &format!("{p}-Baer factorisation"), &B_CLAUSES) {
        return Ok(r.finish());
    }
    let primes = match unique_primes_from(&entries, p) {
        Ok(u) => {
            r.push("unique-primes", Outcome::check(true, format!("q = {}, r = {}", show(u.q), show(u.r))));
            u
        }
        Err(e) => {
            r.push("unique-primes", Outcome::check(false, e.to_string()));
            for c in &B_CLAUSES[1..] {
                r.push(c, Outcome::na("no unique primes"));
            }
            return Ok(r.finish());
        }
    };
    let g = f.group();
    if let Err(e) = g.store() {
        if e.is_cap() {
            r.skip_all(&B_CLAUSES[1..], "skipped by size: group not materializable");
            return Ok(r.finish());
        }
        return Err(e);
    }
    let (q, rr) = primes.resolved();
    let pp = sylow(g, p)?;
    r.clause("centraliser", || {
        let others: Vec<u64> = prime_divisors(g.order()?).into_iter().filter(|&s| s != q && s != rr).collect();
        let parts: Vec<Subgroup> = others.iter().map(|&s| o_p(g, s)).collect::<Result<_>>()?;
        let refs: Vec<&Subgroup> = parts.iter().collect();
        let n = join(g, &refs)?;
        Ok(Outcome::check(
            commute(&pp.generators()?, &n.generators()?),
            format!("P centralises O_{{q,r}}'(F(G)) of order {}", n.order()?),
        ))
    })?;
    r.clause("normal", || {
        let s = join(g, &[&pp, &o_p(g, q)?, &o_p(g, rr)?])?;
        Ok(Outcome::check(is_normal(g, &s)?, format!("|P O_q(G) O_r(G)| = {}", s.order()?)))
    })?;
    r.clause("1", || {
        if !(primes.has_noncentral() && q == p && rr == p) {
            return Ok(Outcome::na("not q = r = p"));
        }
        Ok(Outcome::check(is_p_decomposable(g, p)?, "q = r = p"))
    })?;
    r.clause("2", || {
        if q == p || rr == p {
            return Ok(Outcome::na("p in {q, r}"));
        }
        Ok(Outcome::check(is_abelian(&pp)?, format!("p not in {{{q}, {rr}}}")))
    })?;
    Ok(r.finish())
}

fn sigma(f: &Factorisation) -> Result<Vec<u64>> {
    let mut out = Vec::new();
    for p in prime_divisors(f.group().order()?) {
        if !is_abelian(&sylow_of_subgroup(f.a(), p)?)? && !is_abelian(&sylow_of_subgroup(f.b(), p)?)? {
            out.push(p);
        }
    }
    Ok(out)
}

const C_CLAUSES: [&str; 4] = ["1", "2", "3", "4"];

/// Consequences of a Baer factorisation for `F(G)` and the primes with
/// non-abelian Sylow subgroups in both factors.
pub fn report_corollary_c(f: &Factorisation) -> Result<TheoremReport> {
    let mut r = TheoremReport::new("C", None);
    if !r.hypothesis(is_baer(f)?.is_baer, "Baer factorisation", &C_CLAUSES) {
        return Ok(r.finish());
    }
    let g = f.group();
    if let Err(e) = g.store() {
        if e.is_cap() {
            r.skip_all(&C_CLAUSES, "skipped by size: group not materializable");
            return Ok(r.finish());
        }
        return Err(e);
    }
    let fit = fitting(g)?;
    r.clause("1", || {
        let q = quotient_group(g, &fit)?;
        Ok(Outcome::check(is_abelian_group(q.group())?, format!("|G/F(G)| = {}", q.group().order()?)))
    })?;
    r.clause("2", || {
        let mut all = true;
        for p in prime_divisors(g.order()?) {
            all &= is_abelian(&sylow(g, p)?)?;
        }
        let fa = is_abelian(&fit)?;
        Ok(Outcome::check(all == fa, format!("abelian Sylow subgroups: {all}, F(G) abelian: {fa}")))
    })?;
    let s = sigma(f)?;
    r.clause("3", || {
        let n = g.order()?;
        let rest = complement_in(n, &s);
        let os = o_pi(g, &s)?;
        let or = o_pi(g, &rest)?;
        let split = os.order()? * or.order()? == n;
        let nil = is_nilpotent(&os.as_group()?)?;
        Ok(Outcome::check(
            split && nil,
            format!("sigma = {}, |O_sigma| = {}, |O_sigma'| = {}", primes_str(&s), os.order()?, or.order()?),
        ))
    })?;
    r.clause("4", || {
        if s != prime_divisors(g.order()?) {
            return Ok(Outcome::na("some Sylow subgroup of A or B is abelian"));
        }
        Ok(Outcome::check(is_nilpotent(g)?, "all Sylow subgroups of A and B non-abelian"))
    })?;
    Ok(r.finish())
}

/// Elements of prime power order in `A ∪ B` whose index in `G` is a
/// `q`-number but whose index in their own factor is not.
pub fn inheritance_violations(f: &Factorisation, prime: Option<u64>) -> Result<Vec<String>> {
    let mut out = Vec::new();
    let groups = [f.a().as_group()?, f.b().as_group()?];
    for e in profile(f)? {
        if prime.is_some_and(|p| p != e.prime) {
            continue;
        }
        if let Some(v) = inheritance_violation(&e, &groups)? {
            out.push(v);
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

fn inheritance_violation(e: &Entry, groups: &[Group; 2]) -> Result<Option<String>> {
    let pg = classify_prime_power(e.index);
    if !pg.is_prime_power {
        return Ok(None);
    }
    let x = &groups[if e.locus == Locus::A { 0 } else { 1 }];
    let ix = x.class_index(&e.element)?;
    let ok = match pg.prime {
        None => ix == 1,
        Some(q) => is_p_number(ix, q),
    };
    Ok((!ok).then(|| format!("{} in {:?}: i_G = {}, i_X = {}", e.element, e.locus, e.index, ix)))
}

/// In a Baer factorisation each factor inherits the prime of every index,
/// so `A` and `B` are Baer groups.
pub fn check_factor_inheritance(f: &Factorisation) -> Result<TheoremReport> {
    let mut r = TheoremReport::new("D", None);
    if !r.hypothesis(is_baer(f)?.is_baer, "Baer factorisation", &["inherit", "factors-baer"]) {
        return Ok(r.finish());
    }
    r.clause("inherit", || {
        let bad = inheritance_violations(f, None)?;
        Ok(Outcome::check(bad.is_empty(), format!("{} violations", bad.len())).with(bad))
    })?;
    r.clause("factors-baer", || {
        let a = is_baer(&Factorisation::trivial(f.a().as_group()?)?)?.is_baer;
        let b = is_baer(&Factorisation::trivial(f.b().as_group()?)?)?.is_baer;
        Ok(Outcome::check(a && b, format!("A Baer: {a}, B Baer: {b}")))
    })?;
    Ok(r.finish())
}

/// Groups to compute with: the group itself, or its direct factors when
/// the product is too large to enumerate.
fn components(g: &Group) -> Result<Vec<Group>> {
    match g.store() {
        Ok(_) => Ok(vec![g.clone()]),
        Err(e) if e.is_cap() => match g.direct_factors() {
            Some(fs) => Ok(fs.to_vec()),
            None => Err(e),
        },
        Err(e) => Err(e),
    }
}

const E_CLAUSES: [&str; 3] = ["1", "2", "centraliser-quotient"];

/// The primes dividing `|G : C_G(P)|` in a Baer factorisation, and the
/// structure of `G/C_G(O_p(G))`. Direct products too large to enumerate
/// are handled factor by factor.
pub fn report_theorem_e(f: &Factorisation, p: u64) -> Result<TheoremReport> {
    let mut r = TheoremReport::new("E", Some(p));
    if !r.hypothesis(is_baer(f)?.is_baer, "Baer factorisation", &E_CLAUSES) {
        return Ok(r.finish());
    }
    let comps = components(f.group())?;
    let mut p_abelian = true;
    let mut index = 1u64;
    let mut decomposable = true;
    let mut complement_abelian = true;
    let mut complement_primes = Vec::new();
    for c in &comps {
        let pp = sylow(c, p)?;
        p_abelian &= is_abelian(&pp)?;
        index *= index_of(c, &c.centraliser(&pp.generators()?)?)?;
        let q = centraliser_quotient(c, p)?;
        decomposable &= is_p_decomposable(&q, p)?;
        let comp = o_p_prime(&q, p)?;
        complement_abelian &= is_abelian(&comp)?;
        complement_primes.extend(prime_divisors(comp.order()?));
    }
    complement_primes.sort_unstable();
    complement_primes.dedup();
    let pi = prime_divisors(index);
    let detail = format!("|G:C_G(P)| = {index}, primes {}", primes_str(&pi));
    if p_abelian {
        r.push("1", Outcome::na("P abelian"));
        r.push("2", Outcome::check(pi.len() <= 2 && !pi.contains(&p), detail));
    } else {
        r.push("1", Outcome::check(pi.iter().filter(|&&s| s != p).count() <= 1, detail));
        r.push("2", Outcome::na("P non-abelian"));
    }
    r.push(
        "centraliser-quotient",
        Outcome::check(
            decomposable && complement_abelian && complement_primes.len() <= 2,
            format!(
                "G/C_G(O_p(G)) p-decomposable: {decomposable}, complement abelian: {complement_abelian}, complement primes {}",
                primes_str(&complement_primes)
            ),
        ),
    );
    Ok(r.finish())
}

fn centraliser_index(g: &Group, gens: &[Permutation]) -> Result<u64> {
    Ok(g.order()? / g.centraliser(gens)?.order()?)
}

/// Generators of a Sylow `p`-subgroup of the factor, as elements of `G`.
fn factor_sylow(x: &Subgroup, p: u64) -> Result<(Vec<Permutation>, Option<Subgroup>)> {
    if x.parent().is_materialized() || x.parent().store().is_ok() {
        let s = sylow_of_subgroup(x, p)?;
        Ok((s.generators()?, Some(s)))
    } else {
        Ok((sylow(&x.as_group()?, p)?.generators()?, None))
    }
}

/// Checks that the factorisation is Baer exactly when `|G : C_G(A_p)|` and
/// `|G : C_G(B_p)|` are prime powers for every `p`. For `|G| <= 500` the
/// index is also compared across all Sylow subgroups of each factor.
pub fn check_theorem_f_equivalence(f: &Factorisation) -> Result<TheoremReport> {
    let mut r = TheoremReport::new("F", None);
    let g = f.group();
    let baer = is_baer(f)?.is_baer;
    let mut centraliser_predicate = true;
    let mut witnesses = Vec::new();
    let mut consistent = true;
    for p in prime_divisors(g.order()?) {
        for (name, x) in [("A", f.a()), ("B", f.b())] {
            let (gens, sub) = factor_sylow(x, p)?;
            let idx = centraliser_index(g, &gens)?;
            if !classify_prime_power(idx).is_prime_power {
                centraliser_predicate = false;
            }
            witnesses.push(format!("p = {p}: |G:C_G({name}_{p})| = {idx}"));
            if let (Some(s), true) = (sub, g.order()? <= 500) {
                consistent &= conjugate_indices_agree(g, x, &s, idx)?;
            }
        }
    }
    r.push(
        "equivalence",
        Outcome::check(
            baer == centraliser_predicate,
            format!("Baer: {baer}, centraliser indices prime powers: {centraliser_predicate}"),
        )
        .with(witnesses),
    );
    r.push("conjugates", Outcome::check(consistent, "index independent of the Sylow subgroup chosen"));
    Ok(r.finish())
}

fn conjugate_indices_agree(g: &Group, x: &Subgroup, s: &Subgroup, idx: u64) -> Result<bool> {
    let store = g.store()?;
    let gens = s.generator_ids()?;
    let mut seen = std::collections::HashSet::new();
    for h in x.set()?.iter() {
        let conj: Vec<u32> = gens.iter().map(|&y| store.conj(y, h)).collect();
        let mut key = conj.clone();
        key.sort_unstable();
        if seen.insert(key) && (store.len() / store.centraliser_of(&conj).count()) as u64 != idx {
            return Ok(false);
        }
    }
    Ok(true)
}

/// For a factorisation that is both `p`-Baer and `q`-Baer, with the indices
/// of noncentral `p`-elements of `A` being `q`-numbers and those of `B`
/// `r`-numbers: the indices of `q`-elements are powers of a prime in
/// `{p, r}`, and of `p` itself when `q = r`.
pub fn check_pq_baer(f: &Factorisation, p: u64, q: u64) -> Result<TheoremReport> {
    let mut r = TheoremReport::new("pq", Some(p));
    let entries = profile(f)?;
    let status = status_from(f, &entries, None)?;
    let both = status.per_prime.get(&p).copied().unwrap_or(true) && status.per_prime.get(&q).copied().unwrap_or(true);
    let clauses = ["a", "b"];
    if !r.hypothesis(both && p != q, &format!("{p}-Baer and {q}-Baer with q != p"), &clauses) {
        return Ok(r.finish());
    }
    let u = unique_primes_from(&entries, p)?;
    let (Some(qa), Some(rb)) = (u.q, u.r) else {
        r.push("a", Outcome::na("a side has only central p-elements"));
        r.push("b", Outcome::na("a side has only central p-elements"));
        return Ok(r.finish());
    };
    if qa != q {
        r.push("a", Outcome::na(format!("indices of p-elements of A are {qa}-numbers")));
        r.push("b", Outcome::na(format!("indices of p-elements of A are {qa}-numbers")));
        return Ok(r.finish());
    }
    let s_primes: std::collections::BTreeSet<u64> = entries
        .iter()
        .filter(|e| e.prime == q && e.index > 1)
        .filter_map(|e| classify_prime_power(e.index).prime)
        .collect();
    let s = match s_primes.len() {
        0 => {
            r.push("a", Outcome::na("all q-elements of A and B are central"));
            r.push("b", Outcome::na("all q-elements of A and B are central"));
            return Ok(r.finish());
        }
        1 => *s_primes.iter().next().unwrap(),
        _ => {
            r.push("a", Outcome::na(format!("q-element indices involve primes {s_primes:?}")));
            r.push("b", Outcome::na(format!("q-element indices involve primes {s_primes:?}")));
            return Ok(r.finish());
        }
    };
    r.push("a", Outcome::check(s == p || s == rb, format!("s = {s}, p = {p}, r = {rb}")));
    if q != rb {
        r.push("b", Outcome::na("q != r"));
        return Ok(r.finish());
    }
    let g = f.group();
    r.clause("b", || {
        let h = o_pi(g, &[p, q])?;
        let target = pi_part(g.order()?, &[p, q]);
        let mut abelian = true;
        for t in [p, q] {
            abelian &= is_abelian(&sylow_of_subgroup(&h, t)?)?;
        }
        Ok(Outcome::check(
            s == p && h.order()? == target && abelian,
            format!(
                "s = {s}, normal {{p,q}}-subgroup of order {} (Hall order {target}), abelian Sylows {abelian}",
                h.order()?
            ),
        ))
    })?;
    Ok(r.finish())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum IndexScope {
    PElements,
    AllPrimePower,
}

/// `p`-number indices versus `p`-decomposability: on `p`-elements of
/// `A ∪ B` this is equivalent to `G = O_p(G) × O_p'(G)`; on all prime
/// power order elements, additionally to `O_p'(G)` being abelian. For Baer
/// factorisations also checks `G/C_G(O_p(G))`.
pub fn check_p_index_decomposition(f: &Factorisation, p: u64, scope: IndexScope) -> Result<TheoremReport> {
    let mut r = TheoremReport::new("p-index", Some(p));
    let entries = profile(f)?;
    let status = status_from(f, &entries, None)?;
    let g = f.group();
    let relevant = |e: &&Entry| scope == IndexScope::AllPrimePower || e.prime == p;
    let lhs = entries.iter().filter(relevant).all(|e| is_p_number(e.index, p));
    r.clause("equivalence", || {
        let dec = is_p_decomposable(g, p)?;
        let rhs = match scope {
            IndexScope::PElements => dec,
            IndexScope::AllPrimePower => dec && is_abelian(&o_p_prime(g, p)?)?,
        };
        Ok(Outcome::check(lhs == rhs, format!("indices p-numbers: {lhs}, decomposition: {rhs}")))
    })?;
    if status.is_baer {
        r.clause("centraliser-quotient", || {
            let q = centraliser_quotient(g, p)?;
            let ok = is_p_decomposable(&q, p)? && is_abelian(&o_p_prime(&q, p)?)?;
            Ok(Outcome::check(ok, format!("|G/C_G(O_p(G))| = {}", q.order()?)))
        })?;
    } else {
        r.push("centraliser-quotient", Outcome::na("not a Baer factorisation"));
    }
    Ok(r.finish())
}
