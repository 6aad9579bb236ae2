use std::collections::BTreeSet;

use baerlab_core::baer::{check_theorem_f_equivalence, is_baer, is_p_baer, unique_primes, Verdict};
use baerlab_core::constructions::{dihedral, direct_product, frobenius, symmetric};
use baerlab_core::corpus::{enumerate_factorisations, FactorisationFilter};
use baerlab_core::primes::{classify_prime_power, prime_divisors};
use baerlab_core::structure::sylow_of_subgroup;
use baerlab_core::{Factorisation, Group, Permutation};

fn brute_index(g: &[Permutation], x: &Permutation) -> u64 {
    g.iter().map(|h| h.inverse().then(x).then(h)).collect::<BTreeSet<_>>().len() as u64
}

/// Indices in `G` of the nontrivial `p`-elements of `A` and `B`.
fn p_indices(f: &Factorisation, p: u64) -> Vec<u64> {
    let g = f.group().elements().unwrap();
    let mut out = Vec::new();
    for x in f.a().elements().unwrap().into_iter().chain(f.b().elements().unwrap()) {
        if !x.is_identity() && x.is_p_element(p) {
            out.push(brute_index(g, &x));
        }
    }
    out
}

fn brute_p_baer(f: &Factorisation, p: u64) -> bool {
    p_indices(f, p).into_iter().all(|i| classify_prime_power(i).is_prime_power)
}

fn brute_centraliser_index(g: &Group, s: &[Permutation]) -> u64 {
    let elems = g.elements().unwrap();
    let c = elems.iter().filter(|x| s.iter().all(|y| y.commutes_with(x))).count() as u64;
    g.order().unwrap() / c
}

fn groups() -> Vec<Group> {
    vec![
        symmetric(3).unwrap(),
        symmetric(4).unwrap(),
        dihedral(10).unwrap(),
        dihedral(12).unwrap(),
        frobenius(7, 3).unwrap(),
        frobenius(5, 4).unwrap(),
        direct_product(&[symmetric(3).unwrap(), dihedral(10).unwrap()]).unwrap(),
    ]
}

#[test]
fn predicates_match_definitions() {
    let mut seen = 0;
    for g in groups() {
        let primes = prime_divisors(g.order().unwrap());
        for f in enumerate_factorisations(&g, FactorisationFilter::All).unwrap() {
            let mut all = true;
            for &p in &primes {
                let want = brute_p_baer(&f, p);
                all &= want;
                assert_eq!(is_p_baer(&f, p).unwrap().is_p_baer, Some(want));
            }
            assert_eq!(is_baer(&f).unwrap().is_baer, all);
            seen += 1;
        }
    }
    assert!(seen > 100);
}

#[test]
fn unique_primes_are_the_index_primes() {
    for g in groups() {
        for f in enumerate_factorisations(&g, FactorisationFilter::ProperOnly).unwrap() {
            for p in prime_divisors(g.order().unwrap()) {
                if !brute_p_baer(&f, p) {
                    continue;
                }
                let u = unique_primes(&f, p).unwrap();
                let side = |x: &baerlab_core::Subgroup| -> BTreeSet<u64> {
                    x.elements()
                        .unwrap()
                        .iter()
                        .filter(|y| !y.is_identity() && y.is_p_element(p))
                        .map(|y| brute_index(g.elements().unwrap(), y))
                        .filter(|&i| i > 1)
                        .map(|i| classify_prime_power(i).prime.unwrap())
                        .collect()
                };
                let (qa, rb) = (side(f.a()), side(f.b()));
                assert!(qa.len() <= 1 && rb.len() <= 1);
                assert_eq!(u.q, qa.first().copied());
                assert_eq!(u.r, rb.first().copied());
            }
        }
    }
}

#[test]
fn centraliser_criterion_agrees_with_baer() {
    for g in groups() {
        for f in enumerate_factorisations(&g, FactorisationFilter::All).unwrap() {
            let baer = prime_divisors(g.order().unwrap()).into_iter().all(|p| brute_p_baer(&f, p));
            let mut cent = true;
            for p in prime_divisors(g.order().unwrap()) {
                for x in [f.a(), f.b()] {
                    let s = sylow_of_subgroup(x, p).unwrap().generators().unwrap();
                    cent &= classify_prime_power(brute_centraliser_index(&g, &s)).is_prime_power;
                }
            }
            assert_eq!(baer, cent);
            let r = check_theorem_f_equivalence(&f).unwrap();
            assert_eq!(r.get("equivalence").unwrap().verdict, Verdict::Pass);
        }
    }
}
