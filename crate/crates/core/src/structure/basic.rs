use crate::bitset::ElementSet;
use crate::error::{Error, Result};
use crate::group::{ElementStore, Group, MemoKey};
use crate::perm::Permutation;
use crate::subgroup::Subgroup;

pub(crate) fn check_parent(g: &Group, s: &Subgroup) -> Result<()> {
    if s.parent().same_group(g) {
        Ok(())
    } else {
        Err(Error::invalid("subgroup belongs to a different group"))
    }
}

/// Normal closure of `seeds` in the group stored in `store`, with a
/// generating set of the result.
pub(crate) fn normal_closure_ids(store: &ElementStore, seeds: &[u32]) -> (ElementSet, Vec<u32>) {
    let mut gens: Vec<u32> = Vec::new();
    let mut set = ElementSet::from_ids(store.len(), [0]);
    for &s in seeds {
        if !set.contains(s) {
            set = store.extend(&set, &gens, &[s]);
            gens.push(s);
        }
    }
    let mut i = 0;
    while i < gens.len() {
        let k = gens[i];
        for &g in store.generator_ids() {
            let c = store.conj(k, g);
            if !set.contains(c) {
                set = store.extend(&set, &gens, &[c]);
                gens.push(c);
            }
        }
        i += 1;
    }
    (set, gens)
}

/// Smallest normal subgroup containing `s`.
pub fn normal_closure(g: &Group, s: &[Permutation]) -> Result<Subgroup> {
    let store = g.store()?;
    let mut ids = Vec::new();
    for x in s {
        ids.push(store.id_of(x).ok_or_else(|| Error::invalid(format!("{x} is not in the group")))?);
    }
    let (set, gens) = normal_closure_ids(store, &ids);
    Ok(Subgroup::from_set_with_gens(g.clone(), set, gens))
}

/// Normality by conjugating the subgroup's generators by the group's.
pub fn is_normal(g: &Group, s: &Subgroup) -> Result<bool> {
    check_parent(g, s)?;
    let store = g.store()?;
    let set = s.set()?;
    for &x in s.generator_ids()? {
        for &h in store.generator_ids() {
            if !set.contains(store.conj(x, h)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Subgroup generated by the union of the given subgroups.
pub fn join(g: &Group, parts: &[&Subgroup]) -> Result<Subgroup> {
    let store = g.store()?;
    let mut gens: Vec<u32> = Vec::new();
    let mut set = ElementSet::from_ids(store.len(), [0]);
    for s in parts {
        check_parent(g, s)?;
        for &x in s.generator_ids()? {
            if !set.contains(x) {
                set = store.extend(&set, &gens, &[x]);
                gens.push(x);
            }
        }
    }
    Ok(Subgroup::from_set_with_gens(g.clone(), set, gens))
}

pub fn normaliser(g: &Group, s: &Subgroup) -> Result<Subgroup> {
    check_parent(g, s)?;
    let store = g.store()?;
    let set = s.set()?;
    let gens = s.generator_ids()?;
    let mut out = ElementSet::empty(store.len());
    for h in 0..store.len() as u32 {
        if gens.iter().all(|&x| set.contains(store.conj(x, h))) {
            out.insert(h);
        }
    }
    Ok(Subgroup::from_set(g.clone(), out))
}

pub fn center(g: &Group) -> Result<Subgroup> {
    let store = g.store()?;
    if let Some(set) = store.memo_get(&MemoKey::Center) {
        return Ok(Subgroup::from_set(g.clone(), set));
    }
    let set = store.centraliser_of(store.generator_ids());
    store.memo_put(MemoKey::Center, set.clone());
    Ok(Subgroup::from_set(g.clone(), set))
}

/// Normal closure of the commutators of generator pairs.
pub fn derived_subgroup(g: &Group) -> Result<Subgroup> {
    let store = g.store()?;
    if let Some(set) = store.memo_get(&MemoKey::Derived) {
        return Ok(Subgroup::from_set(g.clone(), set));
    }
    let gens = store.generator_ids();
    let mut comms = Vec::new();
    for (i, &a) in gens.iter().enumerate() {
        for &b in &gens[i + 1..] {
            let c = store.mul(store.mul(store.inv(a), store.inv(b)), store.mul(a, b));
            comms.push(c);
        }
    }
    let (set, gens) = normal_closure_ids(store, &comms);
    store.memo_put(MemoKey::Derived, set.clone());
    Ok(Subgroup::from_set_with_gens(g.clone(), set, gens))
}

pub fn is_abelian(s: &Subgroup) -> Result<bool> {
    let gens = s.generators()?;
    Ok(gens.iter().enumerate().all(|(i, a)| gens[i + 1..].iter().all(|b| a.commutes_with(b))))
}

/// Abelian test on generators only; never materializes.
pub fn is_abelian_group(g: &Group) -> Result<bool> {
    let gens = g.generators();
    Ok(gens.iter().enumerate().all(|(i, a)| gens[i + 1..].iter().all(|b| a.commutes_with(b))))
}
