use std::sync::{Arc, OnceLock};

use crate::bitset::ElementSet;
use crate::error::{Error, Result};
use crate::group::Group;
use crate::perm::Permutation;

struct SubInner {
    members: Option<ElementSet>,
    gens: OnceLock<Vec<u32>>,
    standalone: OnceLock<Group>,
}

/// A subgroup of a parent group.
///
/// When the parent is materialized the members are a bitset over the
/// parent's element ids. Otherwise the subgroup is carried as a group of
/// its own acting on the parent's points.
#[derive(Clone)]
pub struct Subgroup {
    parent: Group,
    inner: Arc<SubInner>,
}

impl std::fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Subgroup").field("order", &self.order().ok()).finish()
    }
}

impl Subgroup {
    pub(crate) fn from_set(parent: Group, members: ElementSet) -> Subgroup {
        Subgroup {
            parent,
            inner: Arc::new(SubInner { members: Some(members), gens: OnceLock::new(), standalone: OnceLock::new() }),
        }
    }

    pub(crate) fn from_set_with_gens(parent: Group, members: ElementSet, gens: Vec<u32>) -> Subgroup {
        let s = Subgroup::from_set(parent, members);
        let _ = s.inner.gens.set(gens);
        s
    }

    pub(crate) fn embedded(parent: Group, group: Group) -> Subgroup {
        let inner = SubInner { members: None, gens: OnceLock::new(), standalone: OnceLock::new() };
        let _ = inner.standalone.set(group);
        Subgroup { parent, inner: Arc::new(inner) }
    }

    pub fn parent(&self) -> &Group {
        &self.parent
    }

    /// Member ids in the parent's store; fails for embedded subgroups.
    pub fn set(&self) -> Result<&ElementSet> {
        self.inner.members.as_ref().ok_or_else(|| Error::invalid("subgroup of a non-materialized parent has no id set"))
    }

    pub fn order(&self) -> Result<u64> {
        match &self.inner.members {
            Some(m) => Ok(m.count() as u64),
            None => self.inner.standalone.get().unwrap().order(),
        }
    }

    pub fn contains(&self, x: &Permutation) -> Result<bool> {
        match &self.inner.members {
            Some(m) => Ok(self.parent.store()?.id_of(x).is_some_and(|id| m.contains(id))),
            None => self.inner.standalone.get().unwrap().contains(x),
        }
    }

    pub fn contains_id(&self, id: u32) -> bool {
        self.inner.members.as_ref().is_some_and(|m| m.contains(id))
    }

    pub fn is_trivial(&self) -> Result<bool> {
        Ok(self.order()? == 1)
    }

    /// A small generating set, as parent ids.
    pub fn generator_ids(&self) -> Result<&[u32]> {
        let members = self.set()?;
        if let Some(g) = self.inner.gens.get() {
            return Ok(g);
        }
        let store = self.parent.store()?;
        let mut gens = Vec::new();
        let mut span = ElementSet::from_ids(store.len(), [0]);
        for x in members.iter() {
            if !span.contains(x) {
                span = store.extend(&span, &gens, &[x]);
                gens.push(x);
            }
        }
        let _ = self.inner.gens.set(gens);
        Ok(self.inner.gens.get().unwrap())
    }

    pub fn generators(&self) -> Result<Vec<Permutation>> {
        match &self.inner.members {
            Some(_) => {
                let store = self.parent.store()?;
                Ok(self.generator_ids()?.iter().map(|&i| store.element(i).clone()).collect())
            }
            None => Ok(self.inner.standalone.get().unwrap().generators().to_vec()),
        }
    }

    /// Members in increasing (lexicographic) order.
    pub fn elements(&self) -> Result<Vec<Permutation>> {
        match &self.inner.members {
            Some(m) => {
                let store = self.parent.store()?;
                Ok(m.iter().map(|i| store.element(i).clone()).collect())
            }
            None => Ok(self.inner.standalone.get().unwrap().elements()?.to_vec()),
        }
    }

    /// The subgroup as a group in its own right, on the parent's points.
    pub fn as_group(&self) -> Result<Group> {
        if let Some(g) = self.inner.standalone.get() {
            return Ok(g.clone());
        }
        let g = Group::with_elements(self.parent.degree(), self.generators()?, self.elements()?);
        let _ = self.inner.standalone.set(g);
        Ok(self.inner.standalone.get().unwrap().clone())
    }

    /// Same members, compared through the parent's ids when available.
    pub fn same_members(&self, other: &Subgroup) -> Result<bool> {
        match (&self.inner.members, &other.inner.members) {
            (Some(a), Some(b)) if self.parent.same_group(&other.parent) => Ok(a == b),
            _ => Ok(self.order()? == other.order()? && {
                let mut ok = true;
                for x in self.elements()? {
                    if !other.contains(&x)? {
                        ok = false;
                        break;
                    }
                }
                ok
            }),
        }
    }

    pub fn intersection(&self, other: &Subgroup) -> Result<Subgroup> {
        let a = self.set()?;
        let b = other.set()?;
        Ok(Subgroup::from_set(self.parent.clone(), a.intersection(b)))
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> Result<bool> {
        match (&self.inner.members, &other.inner.members) {
            (Some(a), Some(b)) => Ok(a.is_subset(b)),
            _ => {
                for x in self.elements()? {
                    if !other.contains(&x)? {
                        return Ok(false);
                    }
                }
                Ok(true)
            }
        }
    }

    /// The same subgroup re-expressed inside another group containing it.
    pub fn reparent(&self, new_parent: &Group) -> Result<Subgroup> {
        let store = new_parent.store()?;
        let mut set = crate::bitset::ElementSet::empty(store.len());
        for x in self.elements()? {
            let id = store.id_of(&x).ok_or_else(|| Error::invalid(format!("{x} is not in the new parent")))?;
            set.insert(id);
        }
        Ok(Subgroup::from_set(new_parent.clone(), set))
    }
}
