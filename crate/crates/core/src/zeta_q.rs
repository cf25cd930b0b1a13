//! Bernoulli numbers, `ζ_Q` at negative integers and the cyclotomic
//! invariants `w_n(Q)`, `w_n(Q_l)`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{big, is_prime_u64, LPower, Rat};

/// Bernoulli numbers `B_0..=B_m` (with `B_1 = -1/2`), from
/// `sum_{j=0}^{k} C(k+1, j) B_j = 0`.
///
/// Every denominator up to `B_m` is squarefree with prime factors at most
/// `m + 1`, so the recurrence runs on integer numerators over the common
/// denominator `∏_{p <= m+1} p` and only the final values are reduced.
pub fn bernoulli_table(m: usize) -> Vec<Rat> {
    let common: BigInt = (2..=m as u64 + 1)
        .filter(|&p| is_prime_u64(p))
        .map(BigInt::from)
        .product();
    let mut numerators: Vec<BigInt> = Vec::with_capacity(m + 1);
    numerators.push(common.clone());
    for k in 1..=m {
        let mut binom = BigInt::one();
        let mut sum = BigInt::zero();
        for (j, b) in numerators.iter().enumerate() {
            if !b.is_zero() {
                sum += &binom * b;
            }
            binom = binom * BigInt::from(k + 1 - j) / BigInt::from(j + 1);
        }
        let (q, r) = sum.div_rem(&BigInt::from(k + 1));
        debug_assert!(r.is_zero());
        numerators.push(-q);
    }
    numerators
        .into_iter()
        .map(|n| Rat::new(n, common.clone()).expect("nonzero denominator"))
        .collect()
}

pub fn bernoulli(m: usize) -> Rat {
    bernoulli_table(m).pop().expect("table is never empty")
}

/// `ζ_Q(-n) = -B_{n+1} / (n+1)` for `n >= 1`.
pub fn zeta_q_neg(n: u64) -> Result<Rat> {
    if n == 0 {
        return Err(Error::argument("zeta_q_neg needs n >= 1"));
    }
    let m = usize::try_from(n + 1).map_err(|_| Error::argument("n too large"))?;
    let b = bernoulli(m);
    Ok(-(b * Rat::new(1, BigInt::from(n + 1)).expect("nonzero")))
}

/// `w_n(L)` together with its prime factorization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WnInvariant {
    pub n: u64,
    pub factors: BTreeMap<u64, u32>,
    pub value: BigUint,
}

impl WnInvariant {
    /// Exponent of `l` in `w_n` (zero when `l` does not occur).
    pub fn exponent(&self, l: u64) -> u32 {
        self.factors.get(&l).copied().unwrap_or(0)
    }
}

fn small_val(mut n: u64, l: u64) -> u32 {
    let mut v = 0;
    while n.is_multiple_of(l) {
        n /= l;
        v += 1;
    }
    v
}

fn divisors(n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 1u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            if d != n / d {
                out.push(n / d);
            }
        }
        d += 1;
    }
    out
}

/// `w_n(Q)`: the largest `N` such that `(Z/N)^×` has exponent dividing `n`.
///
/// The 2-part is `2` for odd `n` and `2^{2 + v_2(n)}` for even `n`; an odd
/// prime `l` occurs iff `(l - 1) | n`, with exponent `1 + v_l(n)`.
pub fn wn_q(n: u64) -> Result<WnInvariant> {
    if n == 0 {
        return Err(Error::argument("w_n needs n >= 1"));
    }
    let mut factors = BTreeMap::new();
    let two = if n % 2 == 1 { 1 } else { 2 + small_val(n, 2) };
    factors.insert(2, two);
    for d in divisors(n) {
        let Some(l) = d.checked_add(1) else { continue };
        if l > 2 && is_prime_u64(l) {
            factors.insert(l, 1 + small_val(n, l));
        }
    }
    let value = factors
        .iter()
        .map(|(&l, &e)| num_traits::pow(big(l), e as usize))
        .fold(BigUint::one(), |acc, x| acc * x);
    Ok(WnInvariant { n, factors, value })
}

/// The `l`-part of `w_n(Q_l)` for odd `l`, which equals the `l`-part of
/// `w_n(Q)`.
pub fn wn_ql(n: u64, l: u64) -> Result<LPower> {
    if n == 0 {
        return Err(Error::argument("w_n needs n >= 1"));
    }
    if !is_prime_u64(l) {
        return Err(Error::NotPrime(big(l)));
    }
    if l == 2 {
        return Err(Error::hypothesis("the local invariant is only defined here for odd l"));
    }
    let exponent = if n.is_multiple_of(l - 1) { 1 + small_val(n, l) } else { 0 };
    LPower::new(big(l), exponent)
}
