//! Permutations of `{0, .., degree - 1}`.
//!
//! Composition applies the left factor first: `p.then(&q)` maps `i` to
//! `q(p(i))`. Every product in the crate uses this order.

use std::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Box<[u16]>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        assert!(degree <= u16::MAX as usize + 1, "degree {degree} too large");
        Permutation { images: (0..degree).map(|i| i as u16).collect() }
    }

    /// Builds a permutation from its image list, rejecting non-bijections.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        if n > u16::MAX as usize + 1 {
            return Err(Error::invalid(format!("degree {n} too large")));
        }
        let mut seen = vec![false; n];
        for &j in images {
            if j >= n || seen[j] {
                return Err(Error::invalid(format!("images {images:?} are not a bijection")));
            }
            seen[j] = true;
        }
        Ok(Permutation { images: images.iter().map(|&j| j as u16).collect() })
    }

    /// Builds a permutation from disjoint or overlapping cycles, composed left to right.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut acc = Permutation::identity(degree);
        for cycle in cycles {
            let mut images: Vec<usize> = (0..degree).collect();
            let mut seen = std::collections::HashSet::new();
            for (k, &a) in cycle.iter().enumerate() {
                if a >= degree {
                    return Err(Error::invalid(format!("point {a} outside degree {degree}")));
                }
                if !seen.insert(a) {
                    return Err(Error::invalid(format!("point {a} repeated in a cycle")));
                }
                images[a] = cycle[(k + 1) % cycle.len()];
            }
            acc = acc.then(&Permutation::from_images(&images)?);
        }
        Ok(acc)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn image(&self, i: usize) -> usize {
        self.images[i] as usize
    }

    pub fn images(&self) -> &[u16] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j as usize)
    }

    /// `self` then `other`, failing on a degree mismatch.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch { left: self.degree(), right: other.degree() });
        }
        Ok(self.then(other))
    }

    /// `self` then `other`. Panics on a degree mismatch.
    pub fn then(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        Permutation { images: self.images.iter().map(|&j| other.images[j as usize]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u16; self.degree()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j as usize] = i as u16;
        }
        Permutation { images: inv.into_boxed_slice() }
    }

    /// `g^-1 * self * g`.
    pub fn conjugate_by(&self, g: &Permutation) -> Permutation {
        g.inverse().then(self).then(g)
    }

    pub fn commutes_with(&self, other: &Permutation) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| other.images[j as usize] == self.images[other.images[i] as usize])
    }

    pub fn pow(&self, exponent: i64) -> Permutation {
        let base = if exponent < 0 { self.inverse() } else { self.clone() };
        let mut e = exponent.unsigned_abs();
        let mut acc = Permutation::identity(self.degree());
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.then(&sq);
            }
            sq = sq.then(&sq);
            e >>= 1;
        }
        acc
    }

    /// Non-trivial cycles, each starting at its least point, sorted by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut j = self.image(start);
            while j != start {
                seen[j] = true;
                cycle.push(j);
                j = self.image(j);
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }

    /// Least `k >= 1` with `self^k = 1`, the lcm of the cycle lengths.
    pub fn order(&self) -> u64 {
        self.cycles().iter().fold(1u64, |acc, c| {
            let l = c.len() as u64;
            let g = acc.gcd(&l);
            (acc / g).checked_mul(l).expect("element order overflows u64")
        })
    }

    /// Order is a power of `p` (the identity qualifies).
    pub fn is_p_element(&self, p: u64) -> bool {
        crate::primes::is_p_number(self.order(), p)
    }

    /// The same permutation acting on points `offset..offset + degree` of a
    /// larger domain of size `total`, fixing everything else.
    pub fn shifted(&self, offset: usize, total: usize) -> Permutation {
        assert!(offset + self.degree() <= total);
        let mut images: Vec<u16> = (0..total).map(|i| i as u16).collect();
        for (i, &j) in self.images.iter().enumerate() {
            images[offset + i] = (offset + j as usize) as u16;
        }
        Permutation { images: images.into_boxed_slice() }
    }

    /// Action on the block `offset..offset + len`, if the block is invariant.
    pub fn restrict(&self, offset: usize, len: usize) -> Option<Permutation> {
        let mut images = Vec::with_capacity(len);
        for i in offset..offset + len {
            let j = self.image(i);
            if j < offset || j >= offset + len {
                return None;
            }
            images.push((j - offset) as u16);
        }
        Some(Permutation { images: images.into_boxed_slice() })
    }

    /// Parses cycle notation such as `(0 1 2)(3 4)`; `()` is the identity.
    ///
    /// Without an explicit degree the smallest degree containing every point is used.
    pub fn parse(text: &str, degree: Option<usize>) -> Result<Permutation> {
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        let mut current: Option<Vec<usize>> = None;
        let mut number = String::new();
        let mut number_start = 0;
        let flush = |number: &mut String, current: &mut Option<Vec<usize>>, at: usize| -> Result<()> {
            if number.is_empty() {
                return Ok(());
            }
            let value: usize =
                number.parse().map_err(|_| Error::Parse { position: at, message: format!("bad point '{number}'") })?;
            match current {
                Some(c) => c.push(value),
                None => return Err(Error::Parse { position: at, message: "point outside a cycle".into() }),
            }
            number.clear();
            Ok(())
        };
        for (pos, ch) in text.char_indices() {
            match ch {
                '(' => {
                    if current.is_some() {
                        return Err(Error::Parse { position: pos, message: "nested '('".into() });
                    }
                    current = Some(Vec::new());
                }
                ')' => {
                    flush(&mut number, &mut current, number_start)?;
                    match current.take() {
                        Some(c) => cycles.push(c),
                        None => return Err(Error::Parse { position: pos, message: "unmatched ')'".into() }),
                    }
                }
                c if c.is_ascii_digit() => {
                    if number.is_empty() {
                        number_start = pos;
                    }
                    number.push(c);
                }
                c if c.is_whitespace() || c == ',' => flush(&mut number, &mut current, number_start)?,
                other => return Err(Error::Parse { position: pos, message: format!("unexpected '{other}'") }),
            }
        }
        if current.is_some() {
            return Err(Error::Parse { position: text.len(), message: "unclosed '('".into() });
        }
        let needed = cycles.iter().flatten().map(|&a| a + 1).max().unwrap_or(0);
        let degree = match degree {
            Some(d) if d < needed => return Err(Error::invalid(format!("point {} outside degree {d}", needed - 1))),
            Some(d) => d,
            None => needed,
        };
        Permutation::from_cycles(degree, &cycles)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            write!(f, "(")?;
            for (k, a) in c.iter().enumerate() {
                if k > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{a}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(s: &str, n: usize) -> Permutation {
        Permutation::parse(s, Some(n)).unwrap()
    }

    #[test]
    fn composition_examples() {
        let c = p("(0 1 2)", 3);
        assert_eq!(Permutation::identity(3).compose(&c).unwrap(), c);
        let t = p("(0 1)", 2);
        assert!(t.compose(&t).unwrap().is_identity());
        assert_eq!(c.compose(&c).unwrap(), p("(0 2 1)", 3));
        // left factor first: (0 1) then (1 2) sends 0 -> 1 -> 2
        let lhs = p("(0 1)", 3).then(&p("(1 2)", 3));
        assert_eq!(lhs.image(0), 2);
        assert_eq!(lhs, p("(0 2 1)", 3));
    }

    #[test]
    fn degree_mismatch_is_an_error() {
        let err = Permutation::identity(2).compose(&Permutation::identity(3)).unwrap_err();
        assert_eq!(err, Error::DegreeMismatch { left: 2, right: 3 });
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::from_images(&[0, 0, 1]).is_err());
        assert!(Permutation::from_images(&[0, 3, 1]).is_err());
    }

    #[test]
    fn orders() {
        assert_eq!(Permutation::identity(4).order(), 1);
        assert_eq!(p("(0 1)(2 3 4)", 5).order(), 6);
        let seven = p("(0 1 2 3 4 5 6)", 7);
        assert!(seven.is_p_element(7));
        assert!(!seven.is_p_element(2));
        assert!(Permutation::identity(3).is_p_element(5));
    }

    #[test]
    fn parse_and_print() {
        assert_eq!(Permutation::identity(5).to_string(), "()");
        let x = Permutation::parse("  ( 3 4 )(0 1 2 ) ", None).unwrap();
        assert_eq!(x.degree(), 5);
        assert_eq!(x.to_string(), "(0 1 2)(3 4)");
        assert!(Permutation::parse("(0 1", None).is_err());
        assert!(Permutation::parse("(0 x)", None).is_err());
        assert!(Permutation::parse("(0 0)", None).is_err());
        assert!(Permutation::parse("(0 5)", Some(3)).is_err());
    }

    #[test]
    fn shift_and_restrict() {
        let x = p("(0 1 2)", 3).shifted(2, 6);
        assert_eq!(x, p("(2 3 4)", 6));
        assert_eq!(x.restrict(2, 3).unwrap(), p("(0 1 2)", 3));
        assert!(x.restrict(0, 3).is_none());
    }

    fn arb_perm() -> impl Strategy<Value = Permutation> {
        (1usize..9).prop_flat_map(|n| {
            Just((0..n).collect::<Vec<_>>()).prop_shuffle().prop_map(|v| Permutation::from_images(&v).unwrap())
        })
    }

    proptest! {
        #[test]
        fn inverse_cancels(x in arb_perm()) {
            prop_assert!(x.then(&x.inverse()).is_identity());
            prop_assert!(x.inverse().then(&x).is_identity());
        }

        #[test]
        fn cycle_notation_round_trips(x in arb_perm()) {
            let back = Permutation::parse(&x.to_string(), Some(x.degree())).unwrap();
            prop_assert_eq!(back, x);
        }

        #[test]
        fn order_annihilates(x in arb_perm()) {
            let k = x.order() as i64;
            prop_assert!(x.pow(k).is_identity());
            for d in 1..k {
                prop_assert!(!x.pow(d).is_identity());
            }
        }
    }
}
