//! Closed-form Szeged indices of cyclic and dihedral power graphs.
//!
//! Notation follows [`CyclicDecomposition`]: `ell = φ(n) + 1`, proper divisors
//! `d_1 < ... < d_D` with class sizes `φ(d_i)`, and `d_i ~ d_j` iff one divides
//! the other. All k-sums below run over divisor indices `k ∉ {i, j}`.
//!
//! The cyclic formula sums, for the cross edges between `S` and the class of
//! `d_i`, the factor `Σ_{d_k ≁ d_i} φ(d_k) + 1`: across such an edge exactly
//! the `S` endpoint and the classes not adjacent to `d_i` are strictly closer
//! to the `S` endpoint. The commonly quoted statement instead uses
//! `n − ell − φ(d_i) + 1`, which counts *every* other class; the two agree
//! only when `d_i` is comparable to no other proper divisor.
//! [`szeged_cyclic_statement_variant`] evaluates that version so sweeps can
//! show where it departs from direct counting (first at `n = 8`).

use crate::error::{Error, Result};
use crate::number_theory::{binom2, euler_totient, factorize, is_prime};
use crate::power_graph::{
    check_group_n, cyclic_decomposition, power_graph_cyclic_punctured, CyclicDecomposition,
};

/// Which factor to use for the `S`-to-divisor-class edges.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GeneratorTerm {
    /// `Σ_{d_k ≁ d_i} φ(d_k) + 1`.
    NonAdjacentClasses,
    /// `n − ell − φ(d_i) + 1`.
    AllOtherClasses,
}

/// `Σ φ(d_k)` over divisor classes `k ∉ {i, j}` with `d_k ~ d_i` iff `near_i`
/// and `d_k ~ d_j` iff `near_j`. Pass `j = i` for a single-class condition.
fn class_weight(dec: &CyclicDecomposition, i: usize, j: usize, near_i: bool, near_j: bool) -> u64 {
    (0..dec.divisors.len())
        .filter(|&k| k != i && k != j)
        .filter(|&k| dec.divisor_adjacent(k, i) == near_i && dec.divisor_adjacent(k, j) == near_j)
        .map(|k| dec.class_sizes[k])
        .sum()
}

fn non_adjacent_weight(dec: &CyclicDecomposition, i: usize) -> u64 {
    (0..dec.divisors.len())
        .filter(|&k| k != i && !dec.divisor_adjacent(k, i))
        .map(|k| dec.class_sizes[k])
        .sum()
}

fn szeged_cyclic_with(n: u64, term: GeneratorTerm) -> Result<u64> {
    let dec = cyclic_decomposition(n)?;
    let ell = dec.ell;
    let phi = &dec.class_sizes;
    let count = dec.divisors.len();

    let cliques = binom2(ell) + phi.iter().map(|&f| binom2(f)).sum::<u64>();
    let generator_edges: u64 = (0..count)
        .map(|i| {
            let factor = match term {
                GeneratorTerm::NonAdjacentClasses => non_adjacent_weight(&dec, i) + 1,
                GeneratorTerm::AllOtherClasses => n - ell - phi[i] + 1,
            };
            factor * ell * phi[i]
        })
        .sum();
    let mut divisor_edges = 0u64;
    for i in 0..count {
        for j in i + 1..count {
            if dec.divisor_adjacent(i, j) {
                let left = class_weight(&dec, i, j, true, false) + 1;
                let right = class_weight(&dec, i, j, false, true) + 1;
                divisor_edges += left * right * phi[i] * phi[j];
            }
        }
    }
    Ok(cliques + generator_edges + divisor_edges)
}

/// `Sz(P(Z_n))` in closed form.
pub fn szeged_cyclic_formula(n: u64) -> Result<u64> {
    szeged_cyclic_with(n, GeneratorTerm::NonAdjacentClasses)
}

/// The closed form with the `n − ell − φ(d_i) + 1` factor. Not equal to
/// `Sz(P(Z_n))` in general.
pub fn szeged_cyclic_statement_variant(n: u64) -> Result<u64> {
    szeged_cyclic_with(n, GeneratorTerm::AllOtherClasses)
}

fn require_prime(p: u64) -> Result<()> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    Ok(())
}

fn require_distinct_primes(p: u64, q: u64) -> Result<()> {
    require_prime(p)?;
    require_prime(q)?;
    if p == q {
        return Err(Error::EqualPrimes(p));
    }
    Ok(())
}

fn checked_group_n(n: Option<u64>) -> Result<u64> {
    let n = n.ok_or(Error::Overflow("group order"))?;
    check_group_n(n)?;
    Ok(n)
}

/// `C(p^m, 2)`: the power graph of a cyclic p-group is complete.
pub fn szeged_cyclic_prime_power(p: u64, m: u32) -> Result<u64> {
    require_prime(p)?;
    if m == 0 {
        return Err(Error::TooSmall {
            what: "exponent m",
            value: 0,
            min: 1,
        });
    }
    let n = checked_group_n(p.checked_pow(m))?;
    Ok(binom2(n))
}

/// `Sz(P(Z_pq))` for distinct primes:
/// `ell(ell−1)/2 + (p−1)(p−2)/2 + (q−1)(q−2)/2 + ell(2pq − (p+q))`.
pub fn szeged_cyclic_pq(p: u64, q: u64) -> Result<u64> {
    require_distinct_primes(p, q)?;
    let n = checked_group_n(p.checked_mul(q))?;
    let ell = (p - 1) * (q - 1) + 1;
    Ok(ell * (ell - 1) / 2
        + (p - 1) * (p - 2) / 2
        + (q - 1) * (q - 2) / 2
        + ell * (2 * n - (p + q)))
}

fn pq2_order(p: u64, q: u64) -> Result<u64> {
    require_distinct_primes(p, q)?;
    checked_group_n(q.checked_mul(q).and_then(|q2| q2.checked_mul(p)))
}

/// Totients of the four proper divisors `p, q, q², pq` of `pq²`.
struct Pq2Classes {
    ell: u64,
    p: u64,
    q: u64,
    q2: u64,
    pq: u64,
}

impl Pq2Classes {
    fn new(p: u64, q: u64) -> Result<Self> {
        let n = pq2_order(p, q)?;
        Ok(Pq2Classes {
            ell: euler_totient(n)? + 1,
            p: euler_totient(p)?,
            q: euler_totient(q)?,
            q2: euler_totient(q * q)?,
            pq: euler_totient(p * q)?,
        })
    }

    fn cliques(&self) -> u64 {
        [self.ell, self.p, self.q, self.q2, self.pq]
            .into_iter()
            .map(binom2)
            .sum()
    }

    /// Per-class factors of the generator edges, without the `ell` weight.
    /// Non-adjacent pairs: p–q, p–q², q²–pq.
    fn generator_bracket(&self) -> u64 {
        (self.q + self.q2 + 1) * self.p
            + (self.p + 1) * self.q
            + (self.p + self.pq + 1) * self.q2
            + (self.q2 + 1) * self.pq
    }

    /// Divisor-to-divisor edges: p–pq, q–q², q–pq.
    fn divisor_edges(&self) -> u64 {
        (self.q + 1) * self.p * self.pq
            + (self.pq + 1) * self.q * self.q2
            + (self.q2 + 1) * (self.p + 1) * self.q * self.pq
    }
}

/// `Sz(P(Z_{pq²}))` for distinct primes `p`, `q`, assembled from the five
/// clique terms, the generator-edge sum and the divisor-edge sum in totient
/// form.
pub fn szeged_cyclic_pq2(p: u64, q: u64) -> Result<u64> {
    let c = Pq2Classes::new(p, q)?;
    Ok(c.cliques() + c.ell * c.generator_bracket() + c.divisor_edges())
}

/// Structured and fully expanded values of the two `pq²` sub-sums.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Pq2Expansion {
    pub generator_bracket: u64,
    pub generator_bracket_polynomial: i128,
    pub divisor_edges: u64,
    pub divisor_edges_polynomial: i128,
    pub total: u64,
    pub total_polynomial: i128,
}

impl Pq2Expansion {
    pub fn consistent(&self) -> bool {
        i128::from(self.generator_bracket) == self.generator_bracket_polynomial
            && i128::from(self.divisor_edges) == self.divisor_edges_polynomial
            && i128::from(self.total) == self.total_polynomial
    }
}

/// Evaluates the published expanded polynomials next to the structured sums.
pub fn pq2_expansion(p: u64, q: u64) -> Result<Pq2Expansion> {
    let c = Pq2Classes::new(p, q)?;
    let (pi, qi) = (i128::from(p), i128::from(q));
    let bracket_poly =
        2 * pi * qi.pow(3) - 2 * pi * qi.pow(2) + 3 * pi * qi - 2 * pi - 2 * qi.pow(3)
            + 3 * qi.pow(2)
            - 3 * qi
            + 1;
    let edges_poly = pi.pow(2) * qi.pow(4) - 3 * pi.pow(2) * qi.pow(3) + 5 * pi.pow(2) * qi.pow(2)
        - 4 * pi.pow(2) * qi
        + pi.pow(2)
        - 3 * pi * qi.pow(2)
        + 4 * pi * qi
        - pi
        - qi.pow(4)
        + 4 * qi.pow(3)
        - 4 * qi.pow(2)
        + qi;
    let cliques = i128::from(c.cliques());
    let bracket = c.generator_bracket();
    let edges = c.divisor_edges();
    Ok(Pq2Expansion {
        generator_bracket: bracket,
        generator_bracket_polynomial: bracket_poly,
        divisor_edges: edges,
        divisor_edges_polynomial: edges_poly,
        total: c.cliques() + c.ell * bracket + edges,
        total_polynomial: cliques + i128::from(c.ell) * bracket_poly + edges_poly,
    })
}

/// `Sz(P(D_n))` from `Sz(P(Z_n \ {0}))` (counted directly) plus the identity
/// edges into `Z_n` and the `n` reflection pendants:
/// `Σ_i (n + 1 + Σ_{d_k ≁ d_i} φ(d_k)) φ(d_i) + n(2n − 1 + φ(n)) + φ(n)`.
pub fn szeged_dihedral_formula(n: u64) -> Result<u64> {
    let dec = cyclic_decomposition(n)?;
    let punctured = power_graph_cyclic_punctured(n)?.szeged_index()?;
    let phi_n = dec.ell - 1;
    let to_classes: u64 = (0..dec.divisors.len())
        .map(|i| (n + 1 + non_adjacent_weight(&dec, i)) * dec.class_sizes[i])
        .sum();
    Ok(punctured + to_classes + n * (2 * n - 1 + phi_n) + phi_n)
}

/// `Sz(P(D_pq))` for distinct primes:
/// `Sz(P(Z_pq \ {0})) + p(q²−1) + q(p²−1) + pq(3pq−p−q) + (p−1)(q−1)`.
pub fn szeged_dihedral_pq(p: u64, q: u64) -> Result<u64> {
    require_distinct_primes(p, q)?;
    let n = checked_group_n(p.checked_mul(q))?;
    let punctured = power_graph_cyclic_punctured(n)?.szeged_index()?;
    Ok(punctured + p * (q * q - 1) + q * (p * p - 1) + n * (3 * n - p - q) + (p - 1) * (q - 1))
}

/// Splits `n` as `p·q` with distinct primes `p < q`, if it has that form.
pub fn as_pq(n: u64) -> Option<(u64, u64)> {
    match factorize(n).ok()?.factors.as_slice() {
        [(p, 1), (q, 1)] => Some((*p, *q)),
        _ => None,
    }
}

/// Splits `n` as `p·q²` with distinct primes, if it has that form.
pub fn as_pq2(n: u64) -> Option<(u64, u64)> {
    match factorize(n).ok()?.factors.as_slice() {
        [(a, 1), (b, 2)] => Some((*a, *b)),
        [(a, 2), (b, 1)] => Some((*b, *a)),
        _ => None,
    }
}
