use std::collections::HashSet;

use super::basic::check_parent;
use super::factorisation::Factorisation;
use crate::bitset::ElementSet;
use crate::error::{Error, Result};
use crate::group::{ElementStore, Group, MemoKey};
use crate::primes::{is_p_number, is_pi_number, p_part, pi_part};
use crate::subgroup::Subgroup;

pub const DEFAULT_HALL_BUDGET: usize = 20_000;

/// A Sylow `p`-subgroup, found by greedy extension.
///
/// Starts from the cyclic subgroup of a `p`-element of largest order (least
/// id on ties) and repeatedly adjoins the least `p`-element of the
/// normaliser outside the current subgroup. A `p`-subgroup that is not
/// Sylow is always properly contained in the `p`-part of its normaliser, so
/// the loop ends at full order.
pub fn sylow(g: &Group, p: u64) -> Result<Subgroup> {
    let store = g.store()?;
    if let Some(set) = store.memo_get(&MemoKey::Sylow(p)) {
        return Ok(Subgroup::from_set(g.clone(), set));
    }
    let (set, gens) = sylow_within(store, &store.full_set(), p)?;
    store.memo_put(MemoKey::Sylow(p), set.clone());
    Ok(Subgroup::from_set_with_gens(g.clone(), set, gens))
}

/// A Sylow `p`-subgroup of the subgroup `s`, inside its parent.
pub fn sylow_of_subgroup(s: &Subgroup, p: u64) -> Result<Subgroup> {
    let g = s.parent();
    let (set, gens) = sylow_within(g.store()?, s.set()?, p)?;
    Ok(Subgroup::from_set_with_gens(g.clone(), set, gens))
}

pub(crate) fn sylow_within(store: &ElementStore, within: &ElementSet, p: u64) -> Result<(ElementSet, Vec<u32>)> {
    let target = p_part(within.count() as u64, p) as usize;
    let start = within
        .iter()
        .filter(|&x| is_p_number(store.order_of(x), p))
        .max_by_key(|&x| (store.order_of(x), std::cmp::Reverse(x)))
        .unwrap_or(0);
    let mut gens = if start == 0 { vec![] } else { vec![start] };
    let mut set = store.generate(&gens);
    while set.count() < target {
        let next = within.iter().find(|&y| {
            !set.contains(y)
                && is_p_number(store.order_of(y), p)
                && gens.iter().all(|&x| set.contains(store.conj(x, y)))
        });
        let y =
            next.ok_or_else(|| Error::invariant(format!("Sylow {p}-extension stalled at order {}", set.count())))?;
        set = store.extend(&set, &gens, &[y]);
        gens.push(y);
    }
    Ok((set, gens))
}

pub(crate) fn conjugate_set(store: &ElementStore, set: &ElementSet, h: u32) -> ElementSet {
    ElementSet::from_ids(store.len(), set.iter().map(|x| store.conj(x, h)))
}

/// All conjugates of `s`, in order of the least conjugating element id.
pub fn sylow_conjugates(g: &Group, s: &Subgroup) -> Result<Vec<Subgroup>> {
    check_parent(g, s)?;
    let store = g.store()?;
    let set = s.set()?;
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for h in 0..store.len() as u32 {
        let c = conjugate_set(store, set, h);
        if seen.insert(c.clone()) {
            out.push(Subgroup::from_set(g.clone(), c));
        }
    }
    Ok(out)
}

/// `O_p(G)`: the intersection of the Sylow `p`-subgroups.
pub fn o_p(g: &Group, p: u64) -> Result<Subgroup> {
    let store = g.store()?;
    if let Some(set) = store.memo_get(&MemoKey::Op(p)) {
        return Ok(Subgroup::from_set(g.clone(), set));
    }
    let s = sylow(g, p)?;
    let mut acc = s.set()?.clone();
    for c in sylow_conjugates(g, &s)? {
        acc = acc.intersection(c.set()?);
    }
    store.memo_put(MemoKey::Op(p), acc.clone());
    Ok(Subgroup::from_set(g.clone(), acc))
}

/// A Sylow `p`-subgroup `P = (P ∩ A)(P ∩ B)` with `P ∩ A` and `P ∩ B`
/// Sylow in `A` and `B`. Such a conjugate always exists, so failing to find
/// one is reported as an invariant violation.
pub fn find_prefactorised_sylow(f: &Factorisation, p: u64) -> Result<Subgroup> {
    let g = f.group();
    let a = f.a().set()?;
    let b = f.b().set()?;
    let a_p = p_part(a.count() as u64, p) as usize;
    let b_p = p_part(b.count() as u64, p) as usize;
    let s = sylow(g, p)?;
    for c in sylow_conjugates(g, &s)? {
        let cs = c.set()?;
        let ca = cs.intersection(a);
        let cb = cs.intersection(b);
        if ca.count() == a_p && cb.count() == b_p {
            let cab = ca.intersection(&cb).count();
            if ca.count() * cb.count() == cs.count() * cab {
                return Ok(c);
            }
        }
    }
    Err(Error::invariant(format!("no prefactorised Sylow {p}-subgroup found")))
}

/// A Hall `π`-subgroup.
///
/// `Ok(None)` means the whole search space was exhausted, so no Hall
/// subgroup exists; running out of budget is `NotFoundWithinBudget`.
/// The search extends `π`-subgroups one element at a time, trying elements
/// of larger order first, and backtracks on dead ends.
pub fn hall(g: &Group, primes: &[u64], budget: usize) -> Result<Option<Subgroup>> {
    let store = g.store()?;
    let n = store.len() as u64;
    let target = pi_part(n, primes) as usize;
    if target == 1 {
        return Ok(Some(g.trivial_subgroup()?));
    }
    if target == n as usize {
        return Ok(Some(g.whole()?));
    }
    if primes.len() == 1 {
        return Ok(Some(sylow(g, primes[0])?));
    }
    let mut candidates: Vec<u32> = (1..n as u32).filter(|&x| is_pi_number(store.order_of(x), primes)).collect();
    candidates.sort_by_key(|&x| (std::cmp::Reverse(store.order_of(x)), x));
    let mut search = HallSearch { store, candidates, target, budget, visited: HashSet::new() };
    let start = ElementSet::from_ids(store.len(), [0]);
    match search.dfs(&start, &[])? {
        Some((set, gens)) => Ok(Some(Subgroup::from_set_with_gens(g.clone(), set, gens))),
        None => Ok(None),
    }
}

struct HallSearch<'a> {
    store: &'a ElementStore,
    candidates: Vec<u32>,
    target: usize,
    budget: usize,
    visited: HashSet<ElementSet>,
}

impl HallSearch<'_> {
    fn dfs(&mut self, set: &ElementSet, gens: &[u32]) -> Result<Option<(ElementSet, Vec<u32>)>> {
        if set.count() == self.target {
            return Ok(Some((set.clone(), gens.to_vec())));
        }
        for i in 0..self.candidates.len() {
            let x = self.candidates[i];
            if set.contains(x) {
                continue;
            }
            if self.budget == 0 {
                return Err(Error::NotFoundWithinBudget { what: "Hall subgroup".into() });
            }
            self.budget -= 1;
            let next = self.store.extend(set, gens, &[x]);
            if !self.target.is_multiple_of(next.count()) || !self.visited.insert(next.clone()) {
                continue;
            }
            let mut next_gens = gens.to_vec();
            next_gens.push(x);
            if let Some(found) = self.dfs(&next, &next_gens)? {
                return Ok(Some(found));
            }
        }
        Ok(None)
    }
}
