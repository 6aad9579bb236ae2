//! Small-integer arithmetic: primality, factorisation, π(n) and prime-power
//! classification.

use serde::{Deserialize, Serialize};

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Prime factorisation in increasing prime order.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            let mut e = 0;
            while n.is_multiple_of(d) {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// π(n): the prime divisors of `n`, ascending.
pub fn prime_divisors(n: u64) -> Vec<u64> {
    factorize(n).into_iter().map(|(p, _)| p).collect()
}

/// Largest power of `p` dividing `n`.
pub fn p_part(mut n: u64, p: u64) -> u64 {
    let mut part = 1;
    if n == 0 {
        return 0;
    }
    while n.is_multiple_of(p) {
        n /= p;
        part *= p;
    }
    part
}

/// Largest divisor of `n` whose prime divisors all lie in `primes`.
pub fn pi_part(n: u64, primes: &[u64]) -> u64 {
    primes.iter().map(|&p| p_part(n, p)).product()
}

pub fn is_pi_number(n: u64, primes: &[u64]) -> bool {
    n != 0 && pi_part(n, primes) == n
}

pub fn is_p_number(n: u64, p: u64) -> bool {
    n != 0 && p_part(n, p) == n
}

/// Outcome of classifying a natural number as a prime power.
///
/// The value 1 counts as a power of every prime: it is reported with
/// `is_prime_power = true`, no prime, and exponent 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct PrimePower {
    pub value: u64,
    pub is_prime_power: bool,
    pub prime: Option<u64>,
    pub exponent: u32,
}

impl PrimePower {
    pub fn is_one(&self) -> bool {
        self.value == 1
    }

    /// True when the value is a power of `p` (1 included).
    pub fn is_power_of(&self, p: u64) -> bool {
        self.is_one() || (self.is_prime_power && self.prime == Some(p))
    }
}

pub fn classify_prime_power(n: u64) -> PrimePower {
    match n {
        0 => PrimePower { value: 0, is_prime_power: false, prime: None, exponent: 0 },
        1 => PrimePower { value: 1, is_prime_power: true, prime: None, exponent: 0 },
        _ => {
            let f = factorize(n);
            if f.len() == 1 {
                PrimePower { value: n, is_prime_power: true, prime: Some(f[0].0), exponent: f[0].1 }
            } else {
                PrimePower { value: n, is_prime_power: false, prime: None, exponent: 0 }
            }
        }
    }
}

/// Prime divisors of `order` outside `primes`.
pub fn complement_in(order: u64, primes: &[u64]) -> Vec<u64> {
    prime_divisors(order).into_iter().filter(|p| !primes.contains(p)).collect()
}
