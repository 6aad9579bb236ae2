//! Constructors for the group families used throughout the crate.
//!
//! Every constructor records its closed-form order; tests check it against
//! the enumerated closure.

use num_bigint::BigUint;
use num_traits::Pow;

use crate::error::{Error, Result};
use crate::group::Group;
use crate::perm::Permutation;
use crate::primes::is_prime;
use crate::subgroup::Subgroup;

fn from_images(images: Vec<usize>) -> Permutation {
    Permutation::from_images(&images).expect("constructor produced a non-bijection")
}

fn build(degree: usize, generators: Vec<Permutation>, order: BigUint) -> Group {
    Group::from_generators(degree, generators).expect("constructor degrees agree").with_known_order(order)
}

fn small(n: u64, what: &str) -> Result<usize> {
    if n > 60_000 {
        return Err(Error::invalid(format!("{what} {n} is too large")));
    }
    Ok(n as usize)
}

/// Cyclic group of order `n` acting regularly on `n` points.
pub fn cyclic(n: u64) -> Result<Group> {
    if n == 0 {
        return Err(Error::invalid("cyclic order must be at least 1"));
    }
    let n = small(n, "cyclic order")?;
    let gen = from_images((0..n).map(|i| (i + 1) % n).collect());
    Ok(build(n, vec![gen], BigUint::from(n)))
}

/// Dihedral group of order `two_n` on the `two_n / 2` vertices of a polygon.
///
/// Order 4 has no faithful action on two points, so the Klein four-group is
/// returned on four points instead.
pub fn dihedral(two_n: u64) -> Result<Group> {
    if two_n < 4 || !two_n.is_multiple_of(2) {
        return Err(Error::invalid(format!("dihedral order must be even and at least 4, got {two_n}")));
    }
    if two_n == 4 {
        let a = from_images(vec![1, 0, 3, 2]);
        let b = from_images(vec![2, 3, 0, 1]);
        return Ok(build(4, vec![a, b], BigUint::from(4u32)));
    }
    let n = small(two_n / 2, "dihedral degree")?;
    let rotation = from_images((0..n).map(|i| (i + 1) % n).collect());
    let reflection = from_images((0..n).map(|i| (n - i) % n).collect());
    Ok(build(n, vec![rotation, reflection], BigUint::from(two_n)))
}

/// Symmetric group on `n` points, generated by `(0 1)` and `(0 1 .. n-1)`.
pub fn symmetric(n: u64) -> Result<Group> {
    if n == 0 {
        return Err(Error::invalid("symmetric degree must be at least 1"));
    }
    let n = small(n, "symmetric degree")?;
    let mut t: Vec<usize> = (0..n).collect();
    if n >= 2 {
        t.swap(0, 1);
    }
    let cycle = from_images((0..n).map(|i| (i + 1) % n).collect());
    let order: BigUint = (1..=n).map(BigUint::from).product();
    Ok(build(n, vec![from_images(t), cycle], order))
}

/// Elementary abelian group of order `p^k`: `k` disjoint `p`-cycles.
pub fn elem_abelian(p: u64, k: u32) -> Result<Group> {
    if !is_prime(p) {
        return Err(Error::invalid(format!("{p} is not prime")));
    }
    let p = small(p, "prime")?;
    let degree = small(p as u64 * k as u64, "degree")?.max(1);
    let gens = (0..k as usize)
        .map(|b| from_images((0..degree).map(|i| if i / p == b { b * p + (i + 1) % p } else { i }).collect()))
        .collect();
    Ok(build(degree, gens, BigUint::from(p).pow(k)))
}

/// The finite field of order `p^k`, elements encoded as integers whose
/// base-`p` digits are polynomial coefficients.
#[derive(Debug, Clone)]
pub struct GaloisField {
    p: u64,
    k: u32,
    size: u64,
    /// Monic modulus, low coefficient first, length `k + 1`.
    modulus: Vec<u64>,
    primitive: u64,
}

impl GaloisField {
    pub fn new(p: u64, k: u32) -> Result<GaloisField> {
        if !is_prime(p) || k == 0 {
            return Err(Error::invalid(format!("GF({p}^{k}) is not a field")));
        }
        let size = p
            .checked_pow(k)
            .filter(|&s| s <= 65_536)
            .ok_or_else(|| Error::invalid(format!("GF({p}^{k}) too large")))?;
        let modulus = (0..p.pow(k))
            .map(|low| {
                let mut m = digits(low, p, k as usize);
                m.push(1);
                m
            })
            .find(|m| is_irreducible(m, p))
            .expect("an irreducible polynomial of every degree exists");
        let mut field = GaloisField { p, k, size, modulus, primitive: 1 };
        field.primitive =
            (1..size).find(|&a| field.multiplicative_order(a) == size - 1).expect("the multiplicative group is cyclic");
        Ok(field)
    }

    pub fn size(&self) -> u64 {
        self.size
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn primitive(&self) -> u64 {
        self.primitive
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        let (da, db) = (digits(a, self.p, self.k as usize), digits(b, self.p, self.k as usize));
        undigits(&da.iter().zip(&db).map(|(x, y)| (x + y) % self.p).collect::<Vec<_>>(), self.p)
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        let k = self.k as usize;
        let (da, db) = (digits(a, self.p, k), digits(b, self.p, k));
        let mut prod = vec![0u64; 2 * k];
        for (i, x) in da.iter().enumerate() {
            for (j, y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % self.p;
            }
        }
        for deg in (k..2 * k).rev() {
            let c = prod[deg];
            if c != 0 {
                for (i, m) in self.modulus.iter().enumerate() {
                    let idx = deg - k + i;
                    prod[idx] = (prod[idx] + self.p * self.p - c * m % self.p) % self.p;
                }
            }
        }
        undigits(&prod[..k], self.p)
    }

    pub fn pow(&self, a: u64, e: u64) -> u64 {
        (0..e).fold(1, |acc, _| self.mul(acc, a))
    }

    fn multiplicative_order(&self, a: u64) -> u64 {
        let mut x = a;
        let mut n = 1;
        while x != 1 {
            x = self.mul(x, a);
            n += 1;
            if n > self.size {
                return 0;
            }
        }
        n
    }
}

fn digits(mut n: u64, p: u64, len: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(len);
    for _ in 0..len {
        out.push(n % p);
        n /= p;
    }
    out
}

fn undigits(d: &[u64], p: u64) -> u64 {
    d.iter().rev().fold(0, |acc, &c| acc * p + c)
}

/// Remainder of `a` modulo the monic polynomial `m` over GF(p).
fn poly_rem(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    let mut r = a.to_vec();
    let dm = m.len() - 1;
    while r.len() > dm {
        let c = *r.last().unwrap();
        let shift = r.len() - 1 - dm;
        for (i, &mi) in m.iter().enumerate() {
            r[shift + i] = (r[shift + i] + p * p - c * mi % p) % p;
        }
        r.pop();
    }
    r
}

fn is_irreducible(m: &[u64], p: u64) -> bool {
    let k = m.len() - 1;
    for d in 1..=k / 2 {
        for low in 0..p.pow(d as u32) {
            let mut f = digits(low, p, d);
            f.push(1);
            if poly_rem(m, &f, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

fn field_map(field: &GaloisField, f: impl Fn(u64) -> u64) -> Permutation {
    from_images((0..field.size()).map(|x| f(x) as usize).collect())
}

/// Frobenius-type group `[C_p]C_q` inside AGL(1, p): generated by `x -> x + 1`
/// and `x -> g x` with `g` of multiplicative order `q`.
pub fn frobenius(p: u64, q: u64) -> Result<Group> {
    if !is_prime(p) {
        return Err(Error::invalid(format!("{p} is not prime")));
    }
    if q == 0 || !(p - 1).is_multiple_of(q) {
        return Err(Error::invalid(format!("{q} does not divide {} ", p - 1)));
    }
    let field = GaloisField::new(p, 1)?;
    let g = field.pow(field.primitive(), (p - 1) / q);
    let translation = field_map(&field, |x| field.add(x, 1));
    let scaling = field_map(&field, |x| field.mul(g, x));
    Ok(build(p as usize, vec![translation, scaling], BigUint::from(p * q)))
}

/// AGL(1, p^k): `x -> a x + b` on the field points.
pub fn affine(p: u64, k: u32) -> Result<Group> {
    let field = GaloisField::new(p, k)?;
    let q = field.size();
    let translation = field_map(&field, |x| field.add(x, 1));
    let scaling = field_map(&field, |x| field.mul(field.primitive(), x));
    Ok(build(q as usize, vec![translation, scaling], BigUint::from(q * (q - 1))))
}

/// AΓL(1, p^k): `x -> a x^φ + b` with `φ` a field automorphism.
///
/// Generators, in order: `x -> x + 1`, `x -> ω x` for a primitive `ω`, and
/// the Frobenius map `x -> x^p`. For `(2, 3)` this is the group of order 168
/// in which the elements of order 7 permute the involutions transitively.
pub fn semilinear(p: u64, k: u32) -> Result<Group> {
    let field = GaloisField::new(p, k)?;
    let q = field.size();
    let translation = field_map(&field, |x| field.add(x, 1));
    let scaling = field_map(&field, |x| field.mul(field.primitive(), x));
    let frobenius = field_map(&field, |x| field.pow(x, p));
    Ok(build(q as usize, vec![translation, scaling, frobenius], BigUint::from(q * (q - 1) * k as u64)))
}

pub fn direct_product(factors: &[Group]) -> Result<Group> {
    Group::direct_product(factors)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum WreathAction {
    /// The top group permutes the blocks through its own action.
    Natural,
    /// The top group permutes one block per element, by right multiplication.
    Regular,
}

/// Wreath product `base wr top`: base copies on consecutive blocks, permuted by `top`.
///
/// Generators are always produced; the order `|base|^n |top|` usually puts
/// the result far beyond enumeration for the regular action.
pub fn wreath(base: &Group, top: &Group, action: WreathAction) -> Result<Group> {
    let dq = base.degree();
    let block_perms: Vec<Vec<usize>> = match action {
        WreathAction::Natural => {
            top.generators().iter().map(|t| (0..top.degree()).map(|i| t.image(i)).collect()).collect()
        }
        WreathAction::Regular => {
            let store = top.store()?;
            store
                .generator_ids()
                .iter()
                .map(|&t| (0..store.len() as u32).map(|b| store.mul(b, t) as usize).collect())
                .collect()
        }
    };
    let blocks = match action {
        WreathAction::Natural => top.degree(),
        WreathAction::Regular => top.order()? as usize,
    };
    let degree = blocks * dq;
    if degree > u16::MAX as usize {
        return Err(Error::invalid(format!("wreath degree {degree} too large")));
    }
    let mut generators = Vec::new();
    for b in 0..blocks {
        for g in base.generators() {
            generators.push(g.shifted(b * dq, degree));
        }
    }
    for perm in &block_perms {
        generators.push(from_images((0..degree).map(|pt| perm[pt / dq] * dq + pt % dq).collect()));
    }
    let order = base.order_big()?.pow(blocks as u32) * top.order_big()?;
    Ok(build(degree, generators, order))
}

/// A word in the generators of a group: `(generator index, exponent)` pairs,
/// multiplied left to right.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Word(pub Vec<(usize, i64)>);

impl Word {
    pub fn evaluate(&self, group: &Group) -> Result<Permutation> {
        let gens = group.generators();
        let mut acc = group.identity();
        for &(i, e) in &self.0 {
            let g = gens
                .get(i)
                .ok_or_else(|| Error::invalid(format!("generator g{i} out of range ({} generators)", gens.len())))?;
            acc = acc.then(&g.pow(e));
        }
        Ok(acc)
    }
}

impl std::fmt::Display for Word {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.0.is_empty() {
            return write!(f, "e");
        }
        for (k, &(i, e)) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, "*")?;
            }
            write!(f, "g{i}")?;
            if e != 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// Subgroup of `group` generated by the evaluated words.
pub fn subgroup_from_words(group: &Group, words: &[Word]) -> Result<Subgroup> {
    let elems: Vec<Permutation> = words.iter().map(|w| w.evaluate(group)).collect::<Result<_>>()?;
    group.subgroup_generated(&elems)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structure::is_abelian_group;

    fn order(g: &Group) -> u64 {
        g.store().unwrap().len() as u64
    }

    fn assert_formula(g: &Group) {
        assert_eq!(BigUint::from(order(g)), *g.known_order().unwrap());
    }

    #[test]
    fn family_orders_match_formulas() {
        for n in 1..=12 {
            assert_formula(&cyclic(n).unwrap());
        }
        for two_n in (4..=24).step_by(2) {
            assert_formula(&dihedral(two_n).unwrap());
        }
        for n in 1..=5 {
            assert_formula(&symmetric(n).unwrap());
        }
        for (p, k) in [(2, 1), (2, 3), (3, 2), (5, 1)] {
            assert_formula(&elem_abelian(p, k).unwrap());
        }
        for (p, q) in [(7, 2), (7, 3), (7, 1), (11, 5), (13, 4), (5, 4)] {
            assert_formula(&frobenius(p, q).unwrap());
        }
        for (p, k) in [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (5, 1), (7, 1)] {
            assert_formula(&semilinear(p, k).unwrap());
            assert_formula(&affine(p, k).unwrap());
        }
    }

    #[test]
    fn named_instances() {
        let d10 = dihedral(10).unwrap();
        assert_eq!((order(&d10), d10.degree()), (10, 5));
        assert_eq!(order(&symmetric(3).unwrap()), 6);
        let e8 = elem_abelian(2, 3).unwrap();
        assert_eq!(order(&e8), 8);
        assert!(e8.elements().unwrap().iter().all(|x| x.order() <= 2));
        assert_eq!(order(&frobenius(7, 2).unwrap()), 14);
        assert_eq!(order(&frobenius(11, 5).unwrap()), 55);
        let c7 = frobenius(7, 1).unwrap();
        assert_eq!(order(&c7), 7);
        assert!(is_abelian_group(&c7).unwrap());
        assert!(frobenius(7, 4).is_err());
        let g = semilinear(2, 3).unwrap();
        assert_eq!((order(&g), g.degree()), (168, 8));
        assert_eq!(order(&semilinear(2, 1).unwrap()), 2);
        let agl13 = semilinear(3, 1).unwrap();
        assert_eq!(order(&agl13), 6);
        assert!(!is_abelian_group(&agl13).unwrap());
    }

    #[test]
    fn frobenius_abelian_iff_trivial_complement() {
        for (p, q) in [(7, 1), (7, 2), (7, 3), (11, 5), (5, 2), (13, 1)] {
            let g = frobenius(p, q).unwrap();
            assert_eq!(is_abelian_group(&g).unwrap(), q == 1, "frobenius({p},{q})");
        }
    }

    #[test]
    fn field_arithmetic() {
        let f = GaloisField::new(2, 3).unwrap();
        for a in 1..8 {
            let inv = (1..8).find(|&b| f.mul(a, b) == 1);
            assert!(inv.is_some());
        }
        for a in 0..8 {
            for b in 0..8 {
                assert_eq!(f.mul(a, b), f.mul(b, a));
                // Frobenius is additive in characteristic 2
                assert_eq!(f.pow(f.add(a, b), 2), f.add(f.pow(a, 2), f.pow(b, 2)));
            }
        }
        assert_eq!(f.pow(f.primitive(), 7), 1);
    }

    #[test]
    fn direct_products() {
        let s3 = symmetric(3).unwrap();
        let d10 = dihedral(10).unwrap();
        let g = direct_product(&[s3.clone(), d10]).unwrap();
        assert_eq!((g.order().unwrap(), g.degree()), (60, 8));
        assert!(direct_product(std::slice::from_ref(&s3)).unwrap().same_group(&s3));
    }

    #[test]
    fn wreath_products() {
        let w = wreath(&cyclic(7).unwrap(), &symmetric(3).unwrap(), WreathAction::Natural).unwrap();
        assert_eq!(w.degree(), 21);
        assert_eq!(order(&w), 2058);
        let d8 = wreath(&cyclic(2).unwrap(), &cyclic(2).unwrap(), WreathAction::Regular).unwrap();
        assert_eq!(order(&d8), 8);
        assert!(!is_abelian_group(&d8).unwrap());
        assert_eq!(d8.elements().unwrap().iter().map(|x| x.order()).max(), Some(4));
        let big = wreath(&cyclic(7).unwrap(), &semilinear(2, 3).unwrap(), WreathAction::Regular).unwrap();
        assert_eq!(big.degree(), 1176);
        assert!(matches!(big.store(), Err(Error::CapExceeded { .. })));
        let expected = BigUint::from(7u32).pow(168u32) * BigUint::from(168u32);
        assert_eq!(big.known_order().unwrap(), &expected);
    }

    #[test]
    fn words_in_semilinear() {
        let g = semilinear(2, 3).unwrap();
        let trivial = subgroup_from_words(&g, &[]).unwrap();
        assert_eq!(trivial.order().unwrap(), 1);
        // translations x -> x + 1, x -> x + ω, plus the Frobenius map
        let h = subgroup_from_words(&g, &[Word(vec![(0, 1)]), Word(vec![(1, -1), (0, 1), (1, 1)]), Word(vec![(2, 1)])])
            .unwrap();
        assert_eq!(h.order().unwrap(), 24);
        let k = subgroup_from_words(&g, &[Word(vec![(1, 1)])]).unwrap();
        assert_eq!(k.order().unwrap(), 7);
        assert!(subgroup_from_words(&g, &[Word(vec![(5, 1)])]).is_err());
    }
}
