use num_integer::Integer;

use super::basic::{check_parent, is_normal};
use crate::bitset::ElementSet;
use crate::error::{Error, Result};
use crate::group::Group;
use crate::perm::Permutation;
use crate::primes::p_part;
use crate::subgroup::Subgroup;

/// `G/N` realised as the action of `G` on the right cosets of `N`.
///
/// Cosets are numbered by increasing least element id, so coset 0 is `N`.
#[derive(Clone, Debug)]
pub struct Quotient {
    parent: Group,
    kernel: Subgroup,
    group: Group,
    coset_of: Vec<u32>,
    reps: Vec<u32>,
}

pub fn quotient_group(g: &Group, n: &Subgroup) -> Result<Quotient> {
    check_parent(g, n)?;
    if !is_normal(g, n)? {
        return Err(Error::invalid("quotient by a subgroup that is not normal"));
    }
    let store = g.store()?;
    let members: Vec<u32> = n.set()?.iter().collect();
    let mut coset_of = vec![u32::MAX; store.len()];
    let mut reps = Vec::new();
    for x in 0..store.len() as u32 {
        if coset_of[x as usize] != u32::MAX {
            continue;
        }
        let c = reps.len() as u32;
        reps.push(x);
        for &k in &members {
            coset_of[store.mul(k, x) as usize] = c;
        }
    }
    if reps.len() > u16::MAX as usize {
        return Err(Error::CapExceeded { cap: u16::MAX as usize, partial: reps.len() });
    }
    let degree = reps.len();
    let action = |h: u32| -> Permutation {
        let images: Vec<usize> = reps.iter().map(|&r| coset_of[store.mul(r, h) as usize] as usize).collect();
        Permutation::from_images(&images).expect("coset action is a bijection")
    };
    let gens: Vec<Permutation> =
        store.generator_ids().iter().map(|&h| action(h)).filter(|p| !p.is_identity()).collect();
    let elements: Vec<Permutation> = reps.iter().map(|&r| action(r)).collect();
    let group = Group::with_elements(degree, gens, elements);
    Ok(Quotient { parent: g.clone(), kernel: n.clone(), group, coset_of, reps })
}

impl Quotient {
    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn parent(&self) -> &Group {
        &self.parent
    }

    pub fn kernel(&self) -> &Subgroup {
        &self.kernel
    }

    /// Id in the quotient's store of the coset of the parent element `id`.
    pub fn project_id(&self, id: u32) -> u32 {
        let store = self.parent.store().expect("parent is materialized");
        let rep = self.reps[self.coset_of[id as usize] as usize];
        let images: Vec<usize> =
            self.reps.iter().map(|&r| self.coset_of[store.mul(r, rep) as usize] as usize).collect();
        let p = Permutation::from_images(&images).expect("coset action is a bijection");
        self.group.store().unwrap().id_of(&p).expect("image lies in the quotient")
    }

    /// Image of `x` under the projection `G -> G/N`.
    pub fn project(&self, x: &Permutation) -> Result<Permutation> {
        let store = self.parent.store()?;
        let id = store.id_of(x).ok_or_else(|| Error::invalid(format!("{x} is not in the group")))?;
        Ok(self.group.store()?.element(self.project_id(id)).clone())
    }

    /// Image of a subgroup of `G`, as a subgroup of `G/N`.
    pub fn project_subgroup(&self, s: &Subgroup) -> Result<Subgroup> {
        check_parent(&self.parent, s)?;
        let ids: Vec<u32> = s.generator_ids()?.iter().map(|&x| self.project_id(x)).collect();
        let store = self.group.store()?;
        Ok(Subgroup::from_set(self.group.clone(), store.generate(&ids)))
    }

    /// Full preimage in `G` of a subgroup of `G/N`.
    pub fn preimage(&self, s: &Subgroup) -> Result<Subgroup> {
        check_parent(&self.group, s)?;
        let store = self.parent.store()?;
        let wanted: Vec<bool> = (0..self.reps.len())
            .map(|c| {
                let q = self.project_id(self.reps[c]);
                s.contains_id(q)
            })
            .collect();
        let set = ElementSet::from_ids(
            store.len(),
            (0..store.len() as u32).filter(|&x| wanted[self.coset_of[x as usize] as usize]),
        );
        Ok(Subgroup::from_set(self.parent.clone(), set))
    }

    /// A `p`-element of `G` mapping onto the `p`-element `x` of `G/N`:
    /// the `p`-part of any preimage.
    pub fn lift_p_element(&self, x: &Permutation, p: u64) -> Result<Permutation> {
        let qid = self.group.store()?.id_of(x).ok_or_else(|| Error::invalid(format!("{x} is not in the quotient")))?;
        if !x.is_p_element(p) {
            return Err(Error::invalid(format!("{x} is not a {p}-element")));
        }
        let store = self.parent.store()?;
        let g = (0..self.reps.len())
            .map(|c| self.reps[c])
            .find(|&r| self.project_id(r) == qid)
            .ok_or_else(|| Error::invariant("projection is not surjective"))?;
        let order = store.order_of(g);
        let pa = p_part(order, p);
        let rest = order / pa;
        // e = 1 mod p^a, e = 0 mod rest
        let inv = (rest as i64).extended_gcd(&(pa as i64)).x.rem_euclid(pa as i64) as u64;
        let e = (rest * inv) % order.max(1);
        Ok(store.element(store.pow(g, e)).clone())
    }
}
