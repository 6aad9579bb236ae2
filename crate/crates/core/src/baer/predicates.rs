use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::primes::{classify_prime_power, prime_divisors, PrimePower};
use crate::structure::{find_prefactorised_sylow, Factorisation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Locus {
    A,
    B,
}

/// A nontrivial element of prime power order in `A` or `B`, with its index
/// in `G`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Witness {
    pub locus: Locus,
    pub prime: u64,
    pub class_index: u64,
    pub order: u64,
    pub element: String,
    pub prime_power: PrimePower,
}

/// Outcome of the `p`-Baer / Baer tests on a factorisation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BaerStatus {
    pub prime: Option<u64>,
    pub is_p_baer: Option<bool>,
    pub is_baer: bool,
    pub per_prime: BTreeMap<u64, bool>,
    /// One element per distinct (locus, prime, index), the least in each.
    pub witnesses: Vec<Witness>,
}

#[derive(Clone, Debug)]
pub(crate) struct Entry {
    pub element: Permutation,
    pub locus: Locus,
    pub prime: u64,
    pub order: u64,
    pub index: u64,
}

/// Nontrivial prime power order elements of `A` and `B` with their indices
/// in `G`. For `A = B` the `B` entries duplicate the `A` ones.
pub(crate) fn profile(f: &Factorisation) -> Result<Vec<Entry>> {
    let g = f.group();
    let mut out = Vec::new();
    let same = f.a().same_members(f.b())?;
    for (locus, x) in [(Locus::A, f.a()), (Locus::B, f.b())] {
        if locus == Locus::B && same {
            let copies: Vec<Entry> = out.iter().map(|e: &Entry| Entry { locus: Locus::B, ..e.clone() }).collect();
            out.extend(copies);
            break;
        }
        for element in x.elements()? {
            let order = element.order();
            let pp = classify_prime_power(order);
            if order == 1 || !pp.is_prime_power {
                continue;
            }
            let index = g.class_index(&element)?;
            out.push(Entry { element, locus, prime: pp.prime.unwrap(), order, index });
        }
    }
    Ok(out)
}

pub(crate) fn status_from(f: &Factorisation, entries: &[Entry], prime: Option<u64>) -> Result<BaerStatus> {
    let mut per_prime: BTreeMap<u64, bool> =
        prime_divisors(f.group().order()?).into_iter().map(|p| (p, true)).collect();
    let mut seen = BTreeSet::new();
    let mut witnesses = Vec::new();
    for e in entries {
        let pp = classify_prime_power(e.index);
        if !pp.is_prime_power {
            per_prime.insert(e.prime, false);
        }
        if prime.is_some_and(|p| p != e.prime) {
            continue;
        }
        if seen.insert((e.locus, e.prime, e.index)) {
            witnesses.push(Witness {
                locus: e.locus,
                prime: e.prime,
                class_index: e.index,
                order: e.order,
                element: e.element.to_string(),
                prime_power: pp,
            });
        }
    }
    witnesses.sort();
    let is_baer = per_prime.values().all(|&b| b);
    let is_p_baer = prime.map(|p| per_prime.get(&p).copied().unwrap_or(true));
    Ok(BaerStatus { prime, is_p_baer, is_baer, per_prime, witnesses })
}

/// Whether every `p`-element of `A ∪ B` has prime power index in `G`.
pub fn is_p_baer(f: &Factorisation, p: u64) -> Result<BaerStatus> {
    status_from(f, &profile(f)?, Some(p))
}

/// Whether the factorisation is `p`-Baer for every prime `p`.
pub fn is_baer(f: &Factorisation) -> Result<BaerStatus> {
    status_from(f, &profile(f)?, None)
}

/// The `p`-Baer test restricted to `(P ∩ A) ∪ (P ∩ B)` for a prefactorised
/// Sylow subgroup `P`; agrees with `is_p_baer` by Sylow conjugacy.
pub fn is_p_baer_prefactorised(f: &Factorisation, p: u64) -> Result<bool> {
    let g = f.group();
    let store = g.store()?;
    let pp = find_prefactorised_sylow(f, p)?;
    let set = pp.set()?;
    let part = set.intersection(f.a().set()?).union(&set.intersection(f.b().set()?));
    let classes = store.classes();
    let ok = part.iter().all(|x| classify_prime_power(classes.index_of(x)).is_prime_power);
    Ok(ok)
}

/// The primes governing the indices of `p`-elements on each side; `None`
/// when every `p`-element on that side is central.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UniquePrimes {
    pub p: u64,
    pub q: Option<u64>,
    pub r: Option<u64>,
}

impl UniquePrimes {
    /// `(q, r)` with an absent side taking the other side's prime, and `p`
    /// when both sides are central. Any prime fits a central side, and this
    /// choice keeps `{q, r}` smallest.
    pub fn resolved(&self) -> (u64, u64) {
        let q = self.q.or(self.r).unwrap_or(self.p);
        let r = self.r.or(self.q).unwrap_or(self.p);
        (q, r)
    }

    pub fn has_noncentral(&self) -> bool {
        self.q.is_some() || self.r.is_some()
    }
}

pub(crate) fn side_primes(entries: &[Entry], p: u64, locus: Locus) -> BTreeSet<u64> {
    entries
        .iter()
        .filter(|e| e.locus == locus && e.prime == p && e.index > 1)
        .filter_map(|e| classify_prime_power(e.index).prime)
        .collect()
}

pub(crate) fn unique_primes_from(entries: &[Entry], p: u64) -> Result<UniquePrimes> {
    let mut sides = [None, None];
    for (k, locus) in [Locus::A, Locus::B].into_iter().enumerate() {
        let primes = side_primes(entries, p, locus);
        if primes.len() > 1 {
            return Err(Error::invariant(format!(
                "{p}-elements of {locus:?} have indices that are powers of distinct primes {primes:?}"
            )));
        }
        sides[k] = primes.into_iter().next();
    }
    Ok(UniquePrimes { p, q: sides[0], r: sides[1] })
}

/// The primes `q`, `r` such that the indices of `p`-elements of `A` are
/// `q`-numbers and those of `B` are `r`-numbers. Requires a `p`-Baer
/// factorisation.
pub fn unique_primes(f: &Factorisation, p: u64) -> Result<UniquePrimes> {
    let entries = profile(f)?;
    let status = status_from(f, &entries, Some(p))?;
    if status.is_p_baer != Some(true) {
        return Err(Error::invalid(format!("the factorisation is not {p}-Baer")));
    }
    unique_primes_from(&entries, p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{cyclic, dihedral, direct_product, semilinear, symmetric};

    fn product_factorisation() -> Factorisation {
        let g = direct_product(&[symmetric(3).unwrap(), dihedral(10).unwrap()]).unwrap();
        let a = g.subgroup_generated(&g.generators()[..2]).unwrap();
        let b = g.subgroup_generated(&g.generators()[2..]).unwrap();
        Factorisation::new(g, a, b).unwrap()
    }

    #[test]
    fn product_of_sym3_and_d10() {
        let f = product_factorisation();
        assert_eq!((f.a().order().unwrap(), f.b().order().unwrap()), (6, 10));
        let s = is_p_baer(&f, 2).unwrap();
        assert_eq!(s.is_p_baer, Some(true));
        let indices: BTreeSet<(Locus, u64)> = s.witnesses.iter().map(|w| (w.locus, w.class_index)).collect();
        assert_eq!(indices, BTreeSet::from([(Locus::A, 3), (Locus::B, 5)]));
        assert!(is_p_baer_prefactorised(&f, 2).unwrap());
        let u = unique_primes(&f, 2).unwrap();
        assert_eq!((u.q, u.r), (Some(3), Some(5)));
        assert!(is_baer(&f).unwrap().is_baer);
    }

    #[test]
    fn abelian_groups_are_baer() {
        let g = cyclic(12).unwrap();
        let f = Factorisation::trivial(g).unwrap();
        let s = is_baer(&f).unwrap();
        assert!(s.is_baer);
        assert!(s.witnesses.iter().all(|w| w.class_index == 1));
        let u = unique_primes(&f, 2).unwrap();
        assert_eq!((u.q, u.r, u.resolved()), (None, None, (2, 2)));
    }

    #[test]
    fn semilinear_is_two_baer_only() {
        let g = semilinear(2, 3).unwrap();
        let f = Factorisation::trivial(g).unwrap();
        let s = is_baer(&f).unwrap();
        assert!(s.per_prime[&2]);
        assert!(!s.is_baer);
        assert!(s.witnesses.iter().filter(|w| w.prime == 2).all(|w| w.class_index == 7));
        assert_eq!(unique_primes(&f, 2).unwrap().resolved(), (7, 7));
        assert!(unique_primes(&f, 7).is_err());
    }
}
