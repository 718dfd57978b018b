//! Small exact integer arithmetic: gcd/lcm over lists, factorization and
//! the congruence scans used by the classification tables.
//!
//! All moduli in this crate are at most a few hundred, so every congruence
//! solver is a plain scan over residues.

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Prime factorization as `(prime, exponent)` pairs with strictly increasing primes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Factorization(Vec<(u64, u32)>);

impl Factorization {
    pub fn pairs(&self) -> &[(u64, u32)] {
        &self.0
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.0.iter().map(|&(p, _)| p)
    }

    /// Product of `p^e` over all pairs.
    pub fn value(&self) -> u64 {
        self.0.iter().map(|&(p, e)| p.pow(e)).product()
    }
}

/// Greatest common divisor of all values. Fails when every value is zero.
pub fn gcd_many(values: &[u64]) -> Result<u64> {
    let g = values.iter().fold(0u64, |acc, &v| acc.gcd(&v));
    if g == 0 {
        return Err(Error::domain("undefined gcd"));
    }
    Ok(g)
}

/// Least common multiple of positive values.
pub fn lcm_many(values: &[u64]) -> Result<u64> {
    if values.is_empty() || values.contains(&0) {
        return Err(Error::domain("lcm needs a nonempty list of positive integers"));
    }
    Ok(values.iter().fold(1u64, |acc, &v| acc.lcm(&v)))
}

pub fn gcd(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

/// Deterministic trial division.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub fn factorize(n: u64) -> Result<Factorization> {
    if n < 2 {
        return Err(Error::domain(format!("cannot factorize {n}: need n >= 2")));
    }
    let mut rest = n;
    let mut pairs = Vec::new();
    let mut p = 2u64;
    while p * p <= rest {
        if rest.is_multiple_of(p) {
            let mut e = 0;
            while rest.is_multiple_of(p) {
                rest /= p;
                e += 1;
            }
            pairs.push((p, e));
        }
        p += 1;
    }
    if rest > 1 {
        pairs.push((rest, 1));
    }
    Ok(Factorization(pairs))
}

/// Residues in `[1, n-1]` coprime to `n`, ascending.
pub fn units(n: u64) -> Vec<u64> {
    (1..n).filter(|&k| k.gcd(&n) == 1).collect()
}

/// All `k` in `[2, n-1]` with `k^2 = 1 (mod n)`.
pub fn involutory_units(n: u64) -> Vec<u64> {
    (2..n).filter(|&k| (k * k) % n == 1 % n).collect()
}

/// All `k` in `[1, n-1]` with `1 + k + k^2 = 0 (mod n)`.
pub fn omega_units(n: u64) -> Vec<u64> {
    (1..n).filter(|&k| (1 + k + k * k) % n == 0).collect()
}

pub fn has_prime_1_mod_3(n: u64) -> bool {
    match factorize(n) {
        Ok(f) => f.primes().any(|p| p % 3 == 1),
        Err(_) => false,
    }
}

/// Multiplicative inverse of `a` modulo `n`, if it exists.
pub fn inverse_mod(a: u64, n: u64) -> Option<u64> {
    let (a, m) = (a as i64 % n as i64, n as i64);
    let e = a.extended_gcd(&m);
    if e.gcd != 1 {
        return None;
    }
    Some(e.x.rem_euclid(m) as u64)
}
