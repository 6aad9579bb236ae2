use std::collections::BTreeSet;

use super::predicates::is_baer;
use crate::error::{Error, Result};
use crate::group::Group;
use crate::primes::{is_prime, prime_divisors};
use crate::structure::{is_abelian, is_normal, o_pi, sylow_of_subgroup, Factorisation};
use crate::subgroup::Subgroup;

/// `G = G_1 × ... × G_k` with pairwise coprime factors `G_i = O_{π_i}(G)`.
#[derive(Clone, Debug)]
pub struct BaerDecomposition {
    pub factors: Vec<Subgroup>,
    pub prime_partition: Vec<Vec<u64>>,
}

impl BaerDecomposition {
    pub fn orders(&self) -> Vec<u64> {
        self.factors.iter().map(|f| f.order().unwrap_or(0)).collect()
    }
}

/// `|O_π(G)|`, factor by factor for direct products too large to enumerate.
fn o_pi_order(g: &Group, primes: &[u64]) -> Result<u64> {
    match g.store() {
        Ok(_) => o_pi(g, primes)?.order(),
        Err(e) if e.is_cap() => {
            let factors = g.direct_factors().ok_or(e)?;
            let mut n = 1;
            for f in factors {
                n *= o_pi_order(f, primes)?;
            }
            Ok(n)
        }
        Err(e) => Err(e),
    }
}

/// The finest partition `{π_i}` of `π(G)` with `G = ∏ O_{π_i}(G)`.
///
/// A set `π` splits `G` when `|O_π(G)| |O_π'(G)| = |G|`; splitting sets are
/// closed under intersection and complement, so the block of `p` is the
/// intersection of all splitting sets containing `p`.
pub fn finest_coprime_partition(g: &Group) -> Result<Vec<Vec<u64>>> {
    let n = g.order()?;
    let primes = prime_divisors(n);
    let k = primes.len();
    if k > 16 {
        return Err(Error::invalid("too many prime divisors"));
    }
    let orders = (0..1usize << k)
        .map(|mask| {
            let set: Vec<u64> = (0..k).filter(|i| mask >> i & 1 == 1).map(|i| primes[i]).collect();
            o_pi_order(g, &set)
        })
        .collect::<Result<Vec<u64>>>()?;
    let full = (1usize << k) - 1;
    let splitting: Vec<usize> = (0..1usize << k).filter(|&m| orders[m] * orders[full ^ m] == n).collect();
    let mut blocks: BTreeSet<Vec<u64>> = BTreeSet::new();
    for i in 0..k {
        let block = splitting.iter().filter(|&&m| m >> i & 1 == 1).fold(full, |acc, &m| acc & m);
        blocks.insert((0..k).filter(|j| block >> j & 1 == 1).map(|j| primes[j]).collect());
    }
    Ok(blocks.into_iter().collect())
}

/// True when `G` has no two proper direct factors of coprime order.
pub fn check_no_coprime_splitting(g: &Group) -> Result<bool> {
    Ok(finest_coprime_partition(g)?.len() <= 1)
}

/// The decomposition of a Baer group into coprime direct factors, each of
/// prime power order or a `{p, q}`-group with abelian Sylow subgroups.
/// `None` when `G` is not a Baer group.
pub fn baer_decomposition(g: &Group) -> Result<Option<BaerDecomposition>> {
    if !is_baer(&Factorisation::trivial(g.clone())?)?.is_baer {
        return Ok(None);
    }
    let partition = finest_coprime_partition(g)?;
    let mut factors = Vec::new();
    for block in &partition {
        factors.push(o_pi(g, block)?);
    }
    let d = BaerDecomposition { factors, prime_partition: partition };
    validate(g, &d)?;
    Ok(Some(d))
}

fn validate(g: &Group, d: &BaerDecomposition) -> Result<()> {
    let product: u64 = d.orders().iter().product();
    if product != g.order()? {
        return Err(Error::invariant("factor orders do not multiply to |G|"));
    }
    for (i, (f, block)) in d.factors.iter().zip(&d.prime_partition).enumerate() {
        if !is_normal(g, f)? {
            return Err(Error::invariant(format!("factor {i} is not normal")));
        }
        let gens = f.generators()?;
        for other in &d.factors[i + 1..] {
            let og = other.generators()?;
            if !gens.iter().all(|x| og.iter().all(|y| x.commutes_with(y))) {
                return Err(Error::invariant("factors do not commute"));
            }
        }
        let shape = match block.len() {
            1 => true,
            2 => {
                let mut ok = true;
                for &p in block {
                    ok &= is_abelian(&sylow_of_subgroup(f, p)?)?;
                }
                ok
            }
            _ => false,
        };
        if !shape || (block.len() == 1 && !is_prime(block[0])) {
            return Err(Error::invariant(format!("factor for primes {block:?} has the wrong shape")));
        }
    }
    Ok(())
}
