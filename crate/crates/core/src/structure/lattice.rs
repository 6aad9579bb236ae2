use std::collections::HashSet;

use crate::bitset::ElementSet;
use crate::error::{Error, Result};
use crate::group::Group;
use crate::subgroup::Subgroup;

pub const DEFAULT_SUBGROUP_BUDGET: usize = 50_000;

/// All subgroups of `g`, sorted by order and then by member set.
///
/// Every subgroup generated by `k` elements is reached after `k` rounds of
/// joining a known subgroup with a cyclic subgroup. `budget` bounds the
/// number of distinct subgroups.
pub fn enumerate_subgroups(g: &Group, budget: usize) -> Result<Vec<Subgroup>> {
    let store = g.store()?;
    let n = store.len();
    let mut seen: HashSet<ElementSet> = HashSet::new();
    let mut cyclic: Vec<(u32, ElementSet)> = Vec::new();
    for x in 0..n as u32 {
        let c = store.generate(&[x]);
        if seen.insert(c.clone()) {
            cyclic.push((x, c));
        }
    }
    let mut found: Vec<(ElementSet, Vec<u32>)> =
        cyclic.iter().map(|(x, c)| (c.clone(), if *x == 0 { vec![] } else { vec![*x] })).collect();
    let mut layer: Vec<usize> = (0..found.len()).collect();
    while !layer.is_empty() {
        let mut next = Vec::new();
        for &i in &layer {
            for (x, c) in &cyclic {
                let (set, gens) = &found[i];
                if c.is_subset(set) {
                    continue;
                }
                let joined = store.extend(set, gens, &[*x]);
                if seen.insert(joined.clone()) {
                    if seen.len() > budget {
                        return Err(Error::CapExceeded { cap: budget, partial: seen.len() });
                    }
                    let mut g2 = gens.clone();
                    g2.push(*x);
                    found.push((joined, g2));
                    next.push(found.len() - 1);
                }
            }
        }
        layer = next;
    }
    found.sort_by(|a, b| (a.0.count(), &a.0).cmp(&(b.0.count(), &b.0)));
    Ok(found.into_iter().map(|(set, gens)| Subgroup::from_set_with_gens(g.clone(), set, gens)).collect())
}
