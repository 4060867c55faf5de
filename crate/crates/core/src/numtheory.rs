//! Elementary integer number theory: Möbius function, squarefree tests,
//! fundamental discriminants and the Kronecker symbol.
//!
//! Single-value helpers use trial division. Batch callers build a
//! [`FactorSieve`] once and share it read-only.

use std::fmt;

use crate::error::{Error, Result};

/// A negative fundamental discriminant, i.e. the discriminant of an
/// imaginary quadratic field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Discriminant(i64);

impl Discriminant {
    pub fn new(value: i64) -> Result<Self> {
        if is_fundamental(value) {
            Ok(Discriminant(value))
        } else {
            Err(Error::NotFundamental(value))
        }
    }

    pub fn value(self) -> i64 {
        self.0
    }

    pub fn magnitude(self) -> u64 {
        self.0.unsigned_abs()
    }
}

impl fmt::Display for Discriminant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl TryFrom<i64> for Discriminant {
    type Error = Error;

    fn try_from(value: i64) -> Result<Self> {
        Discriminant::new(value)
    }
}

/// Prime factorization by trial division, as (prime, exponent) pairs in
/// increasing prime order.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    if n < 2 {
        return out;
    }
    let mut p = 2u64;
    while p.saturating_mul(p) <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn is_squarefree(n: u64) -> bool {
    if n == 0 {
        return false;
    }
    let mut m = n;
    let mut p = 2u64;
    while p.saturating_mul(p) <= m {
        if m.is_multiple_of(p) {
            m /= p;
            if m.is_multiple_of(p) {
                return false;
            }
        }
        p += if p == 2 { 1 } else { 2 };
    }
    true
}

pub fn moebius(l: i64) -> Result<i8> {
    if l < 1 {
        return Err(Error::Domain(format!("moebius is defined for l >= 1, got {l}")));
    }
    let mut sign = 1i8;
    for (_, e) in factorize(l as u64) {
        if e > 1 {
            return Ok(0);
        }
        sign = -sign;
    }
    Ok(sign)
}

/// Fundamental-discriminant test on |D| given a squarefree predicate.
#[inline]
fn fundamental_by_magnitude(d: u64, squarefree: impl Fn(u64) -> bool) -> bool {
    // D = -d. D ≡ 1 (mod 4) iff d ≡ 3 (mod 4); D = 4m with m ≡ 2, 3 (mod 4)
    // iff d/4 ≡ 2, 1 (mod 4).
    match d % 4 {
        3 => squarefree(d),
        0 => matches!((d / 4) % 4, 1 | 2) && squarefree(d / 4),
        _ => false,
    }
}

/// True iff `d` is a negative fundamental discriminant. Total on all inputs.
pub fn is_fundamental(d: i64) -> bool {
    d < 0 && fundamental_by_magnitude(d.unsigned_abs(), is_squarefree)
}

/// Kronecker symbol (d / n) for n ≥ 1.
pub fn kronecker(d: i64, n: u64) -> Result<i8> {
    if n == 0 {
        return Err(Error::Domain("kronecker symbol requires n >= 1".into()));
    }
    let mut b = n;
    let mut sign = 1i8;
    let v = b.trailing_zeros();
    if v > 0 {
        if d % 2 == 0 {
            return Ok(0);
        }
        if v % 2 == 1 && matches!(d.rem_euclid(8), 3 | 5) {
            sign = -sign;
        }
        b >>= v;
    }
    // Jacobi symbol (d / b) for odd b ≥ 1.
    let mut a = (d as i128).rem_euclid(b as i128) as u64;
    while a != 0 {
        let z = a.trailing_zeros();
        a >>= z;
        if z % 2 == 1 && matches!(b % 8, 3 | 5) {
            sign = -sign;
        }
        if a % 4 == 3 && b % 4 == 3 {
            sign = -sign;
        }
        let r = b % a;
        b = a;
        a = r;
    }
    Ok(if b == 1 { sign } else { 0 })
}

/// Smallest-prime-factor table for every integer up to a limit.
#[derive(Debug, Clone)]
pub struct FactorSieve {
    spf: Vec<u32>,
}

impl FactorSieve {
    pub fn new(limit: u64) -> Self {
        let len = limit as usize + 1;
        let mut spf = vec![0u32; len];
        for i in 2..len {
            if spf[i] == 0 {
                spf[i] = i as u32;
                let mut j = i.saturating_mul(i);
                while j < len {
                    if spf[j] == 0 {
                        spf[j] = i as u32;
                    }
                    j += i;
                }
            }
        }
        FactorSieve { spf }
    }

    pub fn limit(&self) -> u64 {
        (self.spf.len() - 1) as u64
    }

    fn walk(&self, mut n: u64) -> Option<u32> {
        // Number of distinct prime factors, or None if a square divides n.
        let mut k = 0;
        let mut last = 0u64;
        while n > 1 {
            let p = self.spf[n as usize] as u64;
            if p == last {
                return None;
            }
            last = p;
            k += 1;
            n /= p;
        }
        Some(k)
    }

    pub fn is_squarefree(&self, n: u64) -> bool {
        assert!(n <= self.limit(), "{n} beyond sieve limit {}", self.limit());
        n != 0 && self.walk(n).is_some()
    }

    pub fn moebius(&self, n: u64) -> i8 {
        assert!(n >= 1 && n <= self.limit(), "{n} outside sieve range");
        match self.walk(n) {
            None => 0,
            Some(k) if k % 2 == 0 => 1,
            Some(_) => -1,
        }
    }

    /// Sieve-backed equivalent of [`is_fundamental`] for |d| within the limit.
    pub fn is_fundamental(&self, d: i64) -> bool {
        d < 0 && fundamental_by_magnitude(d.unsigned_abs(), |m| self.is_squarefree(m))
    }
}

/// Möbius values μ(1..=limit) via a linear sieve; index 0 is unused.
pub fn moebius_table(limit: usize) -> Vec<i8> {
    let mut mu = vec![0i8; limit + 1];
    if limit == 0 {
        return mu;
    }
    mu[1] = 1;
    let mut composite = vec![false; limit + 1];
    let mut primes = Vec::new();
    for i in 2..=limit {
        if !composite[i] {
            primes.push(i);
            mu[i] = -1;
        }
        for &p in &primes {
            let ip = i * p;
            if ip > limit {
                break;
            }
            composite[ip] = true;
            if i % p == 0 {
                mu[ip] = 0;
                break;
            }
            mu[ip] = -mu[i];
        }
    }
    mu
}

/// Divisors of n in increasing order.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && factorize(n).first() == Some(&(n, 1))
}
