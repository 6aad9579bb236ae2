use super::report::{Outcome, TheoremReport};
use crate::error::Result;
use crate::group::{Group, DEFAULT_CLASS_CAP};
use crate::primes::{classify_prime_power, prime_divisors};
use crate::structure::{
    center, enumerate_subgroups, fitting2, is_abelian, is_normal, normal_closure, o_p, quotient_group, sylow,
    DEFAULT_SUBGROUP_BUDGET,
};

/// A `p`-element with `p`-power index lies in `O_p(G)`.
pub fn check_wielandt(g: &Group) -> Result<TheoremReport> {
    let mut r = TheoremReport::new("wielandt", None);
    let store = g.store()?;
    let classes = store.classes();
    for p in prime_divisors(store.len() as u64) {
        r.clause(&format!("p={p}"), || {
            let op = o_p(g, p)?;
            let mut tested = 0;
            let mut bad = Vec::new();
            for &x in classes.representatives() {
                let pp = classify_prime_power(store.order_of(x));
                let idx = classify_prime_power(classes.index_of(x));
                if pp.is_power_of(p) && idx.is_power_of(p) {
                    tested += 1;
                    if !op.contains_id(x) {
                        bad.push(store.element(x).to_string());
                    }
                }
            }
            Ok(Outcome::check(bad.is_empty(), format!("{tested} classes with p-power index, |O_p| = {}", op.order()?))
                .with(bad))
        })?;
    }
    Ok(r.finish())
}

/// Every element of prime power index lies in `F_2(G)`.
pub fn check_camina_camina(g: &Group) -> Result<TheoremReport> {
    let mut r = TheoremReport::new("camina-camina", None);
    let store = g.store()?;
    r.clause("f2", || {
        let f2 = fitting2(g)?;
        let classes = store.classes();
        let mut tested = 0;
        let mut bad = Vec::new();
        for &x in classes.representatives() {
            if classify_prime_power(classes.index_of(x)).is_prime_power {
                tested += 1;
                if !f2.contains_id(x) {
                    bad.push(store.element(x).to_string());
                }
            }
        }
        Ok(Outcome::check(bad.is_empty(), format!("{tested} classes of prime power index, |F_2(G)| = {}", f2.order()?))
            .with(bad))
    })?;
    Ok(r.finish())
}

/// For noncentral `p`-elements `x`, `y` whose indices are powers of
/// distinct primes and with `i_G(xy)` a prime power: `<x, y>^G <= O_p(G)`,
/// `i_G(xy) = max(i_G(x), i_G(y))` is a power of `p`, and the Sylow
/// `p`-subgroups are non-abelian.
pub fn check_lemma_bk(g: &Group) -> Result<TheoremReport> {
    let mut r = TheoremReport::new("berkovich-kazarin", None);
    let store = g.store()?;
    let classes = store.classes();
    let z = center(g)?;
    for p in prime_divisors(store.len() as u64) {
        r.clause(&format!("p={p}"), || {
            let elems: Vec<(u32, u64)> = (0..store.len() as u32)
                .filter(|&x| !z.contains_id(x) && classify_prime_power(store.order_of(x)).is_power_of(p))
                .filter_map(|x| classify_prime_power(classes.index_of(x)).prime.map(|q| (x, q)))
                .collect();
            let op = o_p(g, p)?;
            let sylow_abelian = is_abelian(&sylow(g, p)?)?;
            let mut pairs = 0;
            let mut bad = Vec::new();
            for &(x, qx) in elems.iter().filter(|(x, _)| classes.representatives()[classes.class_of(*x)] == *x) {
                for &(y, qy) in &elems {
                    if qx == qy {
                        continue;
                    }
                    let xy = store.mul(x, y);
                    let ixy = classes.index_of(xy);
                    let pp = classify_prime_power(ixy);
                    if !pp.is_prime_power {
                        continue;
                    }
                    pairs += 1;
                    let (ex, ey) = (store.element(x).clone(), store.element(y).clone());
                    let closure = normal_closure(g, &[ex.clone(), ey.clone()])?;
                    let max = classes.index_of(x).max(classes.index_of(y));
                    let ok = closure.is_subgroup_of(&op)? && ixy == max && pp.is_power_of(p) && !sylow_abelian;
                    if !ok {
                        bad.push(format!("{ex}, {ey}"));
                    }
                }
            }
            Ok(Outcome::check(bad.is_empty(), format!("{pairs} qualifying pairs")).with(bad))
        })?;
    }
    Ok(r.finish())
}

/// For every normal subgroup `N` and element `x`: `i_N(x)` divides
/// `i_G(x)` when `x ∈ N`, and `i_{G/N}(xN)` divides `i_G(x)`.
pub fn check_index_divisibility(g: &Group) -> Result<TheoremReport> {
    let mut r = TheoremReport::new("index-divisibility", None);
    let store = g.store()?;
    let classes = store.classes();
    let mut normals = Vec::new();
    for s in enumerate_subgroups(g, DEFAULT_SUBGROUP_BUDGET)? {
        if is_normal(g, &s)? {
            normals.push(s);
        }
    }
    let mut bad_sub = Vec::new();
    let mut bad_quot = Vec::new();
    let mut triples = 0u64;
    for n in &normals {
        let ng = n.as_group()?;
        let q = quotient_group(g, n)?;
        let qclasses = q.group().store()?.classes();
        for x in 0..store.len() as u32 {
            let ig = classes.index_of(x);
            triples += 1;
            if n.contains_id(x) {
                let i_n = ng.class_index(store.element(x))?;
                if ig % i_n != 0 {
                    bad_sub.push(format!("{} in N of order {}", store.element(x), n.order()?));
                }
            }
            let iq = qclasses.index_of(q.project_id(x));
            if ig % iq != 0 {
                bad_quot.push(format!("{} mod N of order {}", store.element(x), n.order()?));
            }
        }
    }
    r.push(
        "a",
        Outcome::check(bad_sub.is_empty(), format!("{} normal subgroups, {triples} pairs", normals.len()))
            .with(bad_sub),
    );
    r.push(
        "b",
        Outcome::check(bad_quot.is_empty(), format!("{} normal subgroups, {triples} pairs", normals.len()))
            .with(bad_quot),
    );
    Ok(r.finish())
}

/// The orbit and centraliser computations of `i_G(x)` agree on every class.
pub fn check_class_index_paths(g: &Group) -> Result<TheoremReport> {
    let mut r = TheoremReport::new("class-index-paths", None);
    let store = g.store()?;
    let classes = store.classes();
    let mut bad = Vec::new();
    for (c, &x) in classes.representatives().iter().enumerate() {
        let e = store.element(x);
        let orbit = g.class_index_by_orbit(e, DEFAULT_CLASS_CAP)?;
        let cent = g.class_index_by_centraliser(e)?;
        if orbit != cent || orbit != classes.size(c) || orbit * (store.len() as u64 / cent) != store.len() as u64 {
            bad.push(e.to_string());
        }
    }
    r.push("agree", Outcome::check(bad.is_empty(), format!("{} classes", classes.len())).with(bad));
    Ok(r.finish())
}
