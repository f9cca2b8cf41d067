//! Factorization, totients and proper divisors by trial division.

use crate::error::{Error, Result};

/// `n = Π p^α` with primes strictly ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub n: u64,
    pub factors: Vec<(u64, u32)>,
}

impl Factorization {
    /// Number of positive divisors, `Π (α + 1)`.
    pub fn divisor_count(&self) -> u64 {
        self.factors
            .iter()
            .map(|&(_, a)| u64::from(a) + 1)
            .product()
    }

    pub fn is_prime_power(&self) -> bool {
        self.factors.len() == 1
    }

    pub fn is_squarefree(&self) -> bool {
        self.factors.iter().all(|&(_, a)| a == 1)
    }
}

/// Proper divisors `1 < d < n` of `n`, ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisorList {
    pub n: u64,
    pub divisors: Vec<u64>,
}

impl DivisorList {
    pub fn len(&self) -> usize {
        self.divisors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.divisors.is_empty()
    }
}

fn nonzero(what: &'static str, n: u64) -> Result<()> {
    if n == 0 {
        return Err(Error::TooSmall {
            what,
            value: 0,
            min: 1,
        });
    }
    Ok(())
}

pub fn factorize(n: u64) -> Result<Factorization> {
    nonzero("n", n)?;
    let mut factors = Vec::new();
    let mut rest = n;
    let mut p = 2u64;
    while p.saturating_mul(p) <= rest {
        if rest.is_multiple_of(p) {
            let mut alpha = 0;
            while rest.is_multiple_of(p) {
                rest /= p;
                alpha += 1;
            }
            factors.push((p, alpha));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if rest > 1 {
        factors.push((rest, 1));
    }
    Ok(Factorization { n, factors })
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && factorize(n).is_ok_and(|f| f.factors == [(n, 1)])
}

/// Euler's totient from the factorization; `φ(1) = 1`.
pub fn euler_totient(n: u64) -> Result<u64> {
    let f = factorize(n)?;
    Ok(f.factors.iter().fold(n, |acc, &(p, _)| acc / p * (p - 1)))
}

fn at_least_two(n: u64) -> Result<()> {
    if n < 2 {
        return Err(Error::TooSmall {
            what: "n",
            value: n,
            min: 2,
        });
    }
    Ok(())
}

pub fn proper_divisors(n: u64) -> Result<DivisorList> {
    at_least_two(n)?;
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    Ok(DivisorList { n, divisors: small })
}

/// `Π (α + 1) − 2`.
pub fn proper_divisor_count(n: u64) -> Result<u64> {
    at_least_two(n)?;
    Ok(factorize(n)?.divisor_count() - 2)
}

pub fn divides(a: u64, b: u64) -> bool {
    a != 0 && b.is_multiple_of(a)
}

/// `C(m, 2)`.
pub fn binom2(m: u64) -> u64 {
    m * m.saturating_sub(1) / 2
}
