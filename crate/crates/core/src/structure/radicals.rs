use super::basic::{join, normal_closure_ids};
use super::quotient::quotient_group;
use super::sylow::o_p;
use crate::bitset::ElementSet;
use crate::error::Result;
use crate::group::{Group, MemoKey};
use crate::primes::{complement_in, is_pi_number, prime_divisors};
use crate::subgroup::Subgroup;

/// `O_π(G)`: generated by the elements whose normal closure is a `π`-group.
pub fn o_pi(g: &Group, primes: &[u64]) -> Result<Subgroup> {
    let store = g.store()?;
    let mut key: Vec<u64> = primes.to_vec();
    key.sort_unstable();
    key.dedup();
    if let Some(set) = store.memo_get(&MemoKey::OPi(key.clone())) {
        return Ok(Subgroup::from_set(g.clone(), set));
    }
    let mut set = ElementSet::from_ids(store.len(), [0]);
    let mut gens: Vec<u32> = Vec::new();
    for &rep in store.classes().representatives() {
        if set.contains(rep) || !is_pi_number(store.order_of(rep), &key) {
            continue;
        }
        let closure = match store.memo_get(&MemoKey::ClassClosure(rep)) {
            Some(c) => c,
            None => {
                let (c, _) = normal_closure_ids(store, &[rep]);
                store.memo_put(MemoKey::ClassClosure(rep), c.clone());
                c
            }
        };
        if is_pi_number(closure.count() as u64, &key) {
            set = store.extend(&set, &gens, &[rep]);
            gens.push(rep);
        }
    }
    let (set, _) = normal_closure_ids(store, &gens);
    store.memo_put(MemoKey::OPi(key), set.clone());
    Ok(Subgroup::from_set(g.clone(), set))
}

/// `O_{p'}(G)`.
pub fn o_p_prime(g: &Group, p: u64) -> Result<Subgroup> {
    let primes = complement_in(g.order()?, &[p]);
    o_pi(g, &primes)
}

/// `F(G)`: the product of the `O_p(G)`.
pub fn fitting(g: &Group) -> Result<Subgroup> {
    let store = g.store()?;
    if let Some(set) = store.memo_get(&MemoKey::Fitting) {
        return Ok(Subgroup::from_set(g.clone(), set));
    }
    let parts: Vec<Subgroup> =
        prime_divisors(store.len() as u64).into_iter().map(|p| o_p(g, p)).collect::<Result<_>>()?;
    let refs: Vec<&Subgroup> = parts.iter().collect();
    let f = join(g, &refs)?;
    store.memo_put(MemoKey::Fitting, f.set()?.clone());
    Ok(f)
}

/// `F_2(G)`: the preimage of `F(G/F(G))`.
pub fn fitting2(g: &Group) -> Result<Subgroup> {
    let store = g.store()?;
    if let Some(set) = store.memo_get(&MemoKey::Fitting2) {
        return Ok(Subgroup::from_set(g.clone(), set));
    }
    let f = fitting(g)?;
    let q = quotient_group(g, &f)?;
    let f2 = q.preimage(&fitting(q.group())?)?;
    store.memo_put(MemoKey::Fitting2, f2.set()?.clone());
    Ok(f2)
}

pub fn is_nilpotent(g: &Group) -> Result<bool> {
    Ok(fitting(g)?.order()? == g.order()?)
}

/// `G = O_p(G) × O_{p'}(G)`.
pub fn is_p_decomposable(g: &Group, p: u64) -> Result<bool> {
    Ok(o_p(g, p)?.order()? * o_p_prime(g, p)?.order()? == g.order()?)
}

/// `G = O_π(G) × O_{π'}(G)`.
pub fn is_pi_decomposable(g: &Group, primes: &[u64]) -> Result<bool> {
    let rest = complement_in(g.order()?, primes);
    Ok(o_pi(g, primes)?.order()? * o_pi(g, &rest)?.order()? == g.order()?)
}
