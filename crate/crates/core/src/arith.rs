//! Small integer helpers: primality, factorizations and `p`-parts.

use alloc::vec::Vec;

use crate::{Error, Result};

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        return 0;
    }
    a / gcd(a, b) * b
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Prime factorization as ascending `(prime, exponent)` pairs.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        let mut e = 0;
        while n.is_multiple_of(d) {
            n /= d;
            e += 1;
        }
        if e > 0 {
            out.push((d, e));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Distinct primes dividing `n`, ascending.
pub fn prime_divisors(n: u64) -> Vec<u64> {
    factorize(n).into_iter().map(|(p, _)| p).collect()
}

/// If `n = p^t` for a prime `p` and `t ≥ 1`, returns `(p, t)`.
pub fn prime_power(n: u64) -> Option<(u64, u32)> {
    match factorize(n).as_slice() {
        [(p, t)] => Some((*p, *t)),
        _ => None,
    }
}

/// `n = p_part · p_prime_part` with `p_part` a power of `p` and `p ∤ p_prime_part`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PPartition {
    pub n: u64,
    pub p: u64,
    pub p_part: u64,
    pub p_prime_part: u64,
}

pub fn p_partition(n: u64, p: u64) -> Result<PPartition> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if n == 0 {
        return Err(Error::InvalidParameter("p_partition of 0".into()));
    }
    let mut rest = n;
    let mut part = 1;
    while rest.is_multiple_of(p) {
        rest /= p;
        part *= p;
    }
    Ok(PPartition {
        n,
        p,
        p_part: part,
        p_prime_part: rest,
    })
}

/// `p`-part of `n`; `p` must be prime and `n ≥ 1`.
pub fn p_part(n: u64, p: u64) -> u64 {
    let mut part = 1;
    let mut rest = n;
    while rest > 0 && rest.is_multiple_of(p) {
        rest /= p;
        part *= p;
    }
    part
}

pub fn p_prime_part(n: u64, p: u64) -> u64 {
    n / p_part(n, p)
}

pub fn is_p_power(n: u64, p: u64) -> bool {
    n >= 1 && p_part(n, p) == n
}

pub fn checked_pow(base: u64, exp: u32) -> Result<u64> {
    base.checked_pow(exp).ok_or(Error::OrderOverflow)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partitions() {
        let pp = p_partition(60, 2).unwrap();
        assert_eq!((pp.p_part, pp.p_prime_part), (4, 15));
        let pp = p_partition(1, 7).unwrap();
        assert_eq!((pp.p_part, pp.p_prime_part), (1, 1));
        let pp = p_partition(504, 3).unwrap();
        assert_eq!((pp.p_part, pp.p_prime_part), (9, 56));
        assert_eq!(p_partition(10, 4), Err(Error::NotPrime(4)));
    }

    #[test]
    fn factorizations() {
        assert_eq!(factorize(163680), [(2, 5), (3, 1), (5, 1), (11, 1), (31, 1)]);
        assert_eq!(prime_power(32), Some((2, 5)));
        assert_eq!(prime_power(12), None);
        assert_eq!(prime_power(1), None);
        assert_eq!(lcm(4, 6), 12);
    }
}
