use std::collections::BTreeSet;

use baerlab_core::constructions::{
    affine, cyclic, dihedral, direct_product, elem_abelian, frobenius, semilinear, symmetric, wreath, WreathAction,
};
use baerlab_core::primes::{is_pi_number, p_part, prime_divisors};
use baerlab_core::structure::{is_normal, normal_closure, o_p, o_pi, quotient_group, sylow};
use baerlab_core::{Group, Permutation};
use proptest::prelude::*;

fn pool() -> Vec<Group> {
    vec![
        symmetric(4).unwrap(),
        dihedral(12).unwrap(),
        frobenius(7, 3).unwrap(),
        affine(3, 2).unwrap(),
        semilinear(2, 3).unwrap(),
        direct_product(&[symmetric(3).unwrap(), dihedral(10).unwrap()]).unwrap(),
        wreath(&cyclic(2).unwrap(), &symmetric(3).unwrap(), WreathAction::Natural).unwrap(),
        elem_abelian(2, 3).unwrap(),
        cyclic(12).unwrap(),
    ]
}

fn conj(x: &Permutation, g: &Permutation) -> Permutation {
    g.inverse().then(x).then(g)
}

/// Size of the class of `x` under conjugation by `within`.
fn brute_index(within: &[Permutation], x: &Permutation) -> u64 {
    within.iter().map(|g| conj(x, g)).collect::<BTreeSet<_>>().len() as u64
}

fn brute_closure(gens: &[Permutation], degree: usize) -> BTreeSet<Permutation> {
    let mut set: BTreeSet<Permutation> = [Permutation::identity(degree)].into();
    let mut frontier: Vec<Permutation> = set.iter().cloned().collect();
    while let Some(x) = frontier.pop() {
        for g in gens {
            let y = x.then(g);
            if set.insert(y.clone()) {
                frontier.push(y);
            }
        }
    }
    set
}

fn pick(g: &Group, seed: u64) -> Permutation {
    let e = g.elements().unwrap();
    e[(seed % e.len() as u64) as usize].clone()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn lagrange(gi in 0usize..9, s1: u64, s2: u64) {
        let g = &pool()[gi];
        let gens = [pick(g, s1), pick(g, s2)];
        let h = g.subgroup_generated(&gens).unwrap();
        let brute = brute_closure(&gens, g.degree());
        prop_assert_eq!(h.order().unwrap(), brute.len() as u64);
        prop_assert_eq!(g.order().unwrap() % h.order().unwrap(), 0);
        for x in &brute {
            prop_assert!(h.contains(x).unwrap());
        }
    }

    #[test]
    fn class_index_times_centraliser(gi in 0usize..9, s: u64) {
        let g = &pool()[gi];
        let x = pick(g, s);
        let idx = g.class_index(&x).unwrap();
        let elems = g.elements().unwrap();
        prop_assert_eq!(idx, brute_index(elems, &x));
        let cent = elems.iter().filter(|y| y.commutes_with(&x)).count() as u64;
        prop_assert_eq!(g.centraliser(std::slice::from_ref(&x)).unwrap().order().unwrap(), cent);
        prop_assert_eq!(idx * cent, g.order().unwrap());
    }

    #[test]
    fn index_divides_through_normal_subgroups(gi in 0usize..9, s: u64, t: u64) {
        let g = &pool()[gi];
        let n = normal_closure(g, &[pick(g, s)]).unwrap();
        let x = pick(g, t);
        let elems = g.elements().unwrap();
        let ig = brute_index(elems, &x);
        if n.contains(&x).unwrap() {
            let in_n = brute_index(&n.elements().unwrap(), &x);
            prop_assert_eq!(ig % in_n, 0);
        }
        let q = quotient_group(g, &n).unwrap();
        let xq = q.project(&x).unwrap();
        let iq = brute_index(q.group().elements().unwrap(), &xq);
        prop_assert_eq!(ig % iq, 0);
    }

    #[test]
    fn quotient_is_a_homomorphism(gi in 0usize..9, s: u64, a: u64, b: u64) {
        let g = &pool()[gi];
        let n = normal_closure(g, &[pick(g, s)]).unwrap();
        let q = quotient_group(g, &n).unwrap();
        let (x, y) = (pick(g, a), pick(g, b));
        let lhs = q.project(&x.then(&y)).unwrap();
        let rhs = q.project(&x).unwrap().then(&q.project(&y).unwrap());
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(q.group().order().unwrap() * n.order().unwrap(), g.order().unwrap());
        let kernel: Vec<_> = n.elements().unwrap();
        for k in kernel.iter().take(8) {
            prop_assert!(q.project(k).unwrap().is_identity());
        }
    }
}

#[test]
fn sylow_and_radicals_match_definitions() {
    for g in pool() {
        let n = g.order().unwrap();
        let elems = g.elements().unwrap().to_vec();
        for p in prime_divisors(n) {
            let s = sylow(&g, p).unwrap();
            assert_eq!(s.order().unwrap(), p_part(n, p));
            assert!(s.elements().unwrap().iter().all(|x| x.is_p_element(p)));
            let op = o_p(&g, p).unwrap();
            // O_p is the intersection of all Sylow p-subgroups, i.e. the
            // set of elements lying in every conjugate of S
            let sset: BTreeSet<_> = s.elements().unwrap().into_iter().collect();
            let core: BTreeSet<_> =
                sset.iter().filter(|x| elems.iter().all(|h| sset.contains(&conj(x, h)))).cloned().collect();
            assert_eq!(op.order().unwrap(), core.len() as u64);
            let others: Vec<u64> = prime_divisors(n).into_iter().filter(|&q| q != p).collect();
            if !others.is_empty() {
                let r = o_pi(&g, &others).unwrap();
                assert!(is_normal(&g, &r).unwrap());
                assert!(is_pi_number(r.order().unwrap(), &others));
            }
        }
    }
}
