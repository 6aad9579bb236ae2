use crate::error::{Error, Result};
use crate::group::Group;
use crate::subgroup::Subgroup;

/// A group `G` together with subgroups `A`, `B` such that `G = AB`.
#[derive(Clone, Debug)]
pub struct Factorisation {
    group: Group,
    a: Subgroup,
    b: Subgroup,
}

impl Factorisation {
    /// Checks `|A||B| = |G||A ∩ B|`.
    pub fn new(group: Group, a: Subgroup, b: Subgroup) -> Result<Factorisation> {
        if !a.parent().same_group(&group) || !b.parent().same_group(&group) {
            return Err(Error::invalid("factors must be subgroups of the factorised group"));
        }
        let f = Factorisation { group, a, b };
        let lhs = f.a.order()? as u128 * f.b.order()? as u128;
        let rhs = f.group.order()? as u128 * f.intersection_order()? as u128;
        if lhs != rhs {
            return Err(Error::invalid(format!("not a factorisation: |A||B| = {lhs} but |G||A∩B| = {rhs}")));
        }
        Ok(f)
    }

    /// `G = G G`.
    pub fn trivial(group: Group) -> Result<Factorisation> {
        let whole = match group.whole() {
            Ok(w) => w,
            Err(e) if e.is_cap() => Subgroup::embedded(group.clone(), group.clone()),
            Err(e) => return Err(e),
        };
        Ok(Factorisation { group, a: whole.clone(), b: whole })
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn a(&self) -> &Subgroup {
        &self.a
    }

    pub fn b(&self) -> &Subgroup {
        &self.b
    }

    pub fn is_trivial(&self) -> Result<bool> {
        let n = self.group.order()?;
        Ok(self.a.order()? == n && self.b.order()? == n)
    }

    pub fn intersection_order(&self) -> Result<u64> {
        if let (Ok(a), Ok(b)) = (self.a.set(), self.b.set()) {
            return Ok(a.intersection(b).count() as u64);
        }
        let (small, large) = if self.a.order()? <= self.b.order()? { (&self.a, &self.b) } else { (&self.b, &self.a) };
        let mut count = 0;
        for x in small.elements()? {
            if large.contains(&x)? {
                count += 1;
            }
        }
        Ok(count)
    }

    /// `S = (S ∩ A)(S ∩ B)`.
    pub fn is_prefactorised(&self, s: &Subgroup) -> Result<bool> {
        let set = s.set()?;
        let sa = set.intersection(self.a.set()?);
        let sb = set.intersection(self.b.set()?);
        let sab = sa.intersection(&sb);
        Ok(sa.count() * sb.count() == set.count() * sab.count())
    }
}
