use super::quotient::quotient_group;
use super::radicals::o_p_prime;
use super::sylow::o_p;
use crate::error::Result;
use crate::group::Group;
use crate::subgroup::Subgroup;

/// Upper `p`-series `1 <= O_{p'} <= O_{p',p} <= ...`, keeping only the
/// terms where the series grows.
#[derive(Clone, Debug)]
pub struct UpperPSeries {
    pub terms: Vec<Subgroup>,
    pub p_length: u32,
    pub is_p_soluble: bool,
}

impl UpperPSeries {
    pub fn orders(&self) -> Vec<u64> {
        self.terms.iter().map(|t| t.order().unwrap_or(0)).collect()
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Step {
    PPrime,
    P,
}

pub fn upper_p_series(g: &Group, p: u64) -> Result<UpperPSeries> {
    let n = g.order()?;
    let mut current = g.trivial_subgroup()?;
    let mut terms = vec![current.clone()];
    let mut p_length = 0;
    let mut stalled = 0;
    let mut step = Step::PPrime;
    while current.order()? < n && stalled < 2 {
        let next = if current.order()? == 1 {
            match step {
                Step::PPrime => o_p_prime(g, p)?,
                Step::P => o_p(g, p)?,
            }
        } else {
            let q = quotient_group(g, &current)?;
            let r = match step {
                Step::PPrime => o_p_prime(q.group(), p)?,
                Step::P => o_p(q.group(), p)?,
            };
            q.preimage(&r)?
        };
        if next.order()? > current.order()? {
            if step == Step::P {
                p_length += 1;
            }
            terms.push(next.clone());
            current = next;
            stalled = 0;
        } else {
            stalled += 1;
        }
        step = if step == Step::P { Step::PPrime } else { Step::P };
    }
    let is_p_soluble = current.order()? == n;
    Ok(UpperPSeries { terms, p_length, is_p_soluble })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{cyclic, semilinear, symmetric};
    use crate::perm::Permutation;
    use crate::structure::is_normal;

    #[test]
    fn series_examples() {
        let s = upper_p_series(&cyclic(9).unwrap(), 2).unwrap();
        assert_eq!((s.p_length, s.is_p_soluble), (0, true));
        let s3 = symmetric(3).unwrap();
        let s = upper_p_series(&s3, 2).unwrap();
        assert_eq!(s.orders(), vec![1, 3, 6]);
        assert_eq!((s.p_length, s.is_p_soluble), (1, true));
        let g = semilinear(2, 3).unwrap();
        let s = upper_p_series(&g, 2).unwrap();
        assert_eq!(s.orders(), vec![1, 8, 168]);
        assert_eq!((s.p_length, s.is_p_soluble), (1, true));
        for t in &s.terms {
            assert!(is_normal(&g, t).unwrap());
        }
        let s4 = symmetric(4).unwrap();
        let s = upper_p_series(&s4, 2).unwrap();
        assert_eq!(s.orders(), vec![1, 4, 12, 24]);
        assert_eq!(s.p_length, 2);
    }

    #[test]
    fn a5_is_not_p_soluble() {
        let a5 = Group::from_generators(
            5,
            vec![Permutation::parse("(0 1 2)", Some(5)).unwrap(), Permutation::parse("(0 1 2 3 4)", Some(5)).unwrap()],
        )
        .unwrap();
        for p in [2, 3, 5] {
            assert!(!upper_p_series(&a5, p).unwrap().is_p_soluble);
        }
        assert!(upper_p_series(&a5, 7).unwrap().is_p_soluble);
    }
}
