//! Short Weierstrass curves over prime fields and the Weil zeta function of
//! a curve of genus 0 or 1.

use alloc::format;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{is_prime, is_prime_u64, pow_mod, Rat};

/// `y^2 = x^3 + A x + B` over `F_p`, `p >= 5`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CurveFp {
    p: u64,
    a: u64,
    b: u64,
}

impl CurveFp {
    pub fn new(p: u64, a: i64, b: i64) -> Result<Self> {
        if !is_prime_u64(p) {
            return Err(Error::NotPrime(BigUint::from(p)));
        }
        if p < 5 {
            return Err(Error::InvalidCurve(format!("p = {p} is below 5")));
        }
        let a = a.rem_euclid(p as i64) as u64;
        let b = b.rem_euclid(p as i64) as u64;
        let (pp, aa, bb) = (p as u128, a as u128, b as u128);
        let disc = (4 * (aa * aa % pp) * aa + 27 * (bb * bb % pp)) % pp;
        if disc == 0 {
            return Err(Error::InvalidCurve(format!(
                "4A^3 + 27B^2 vanishes mod {p} (A = {a}, B = {b})"
            )));
        }
        Ok(CurveFp { p, a, b })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn a(&self) -> u64 {
        self.a
    }

    pub fn b(&self) -> u64 {
        self.b
    }

    fn rhs(&self, x: u64) -> u64 {
        let p = self.p as u128;
        let x = x as u128;
        ((x * x % p * x + self.a as u128 * x + self.b as u128) % p) as u64
    }
}

/// Quadratic character via Euler's criterion, `χ(0) = 0`.
fn legendre(v: u64, p: u64) -> i64 {
    if v == 0 {
        return 0;
    }
    if pow_mod(v, (p - 1) / 2, p) == 1 {
        1
    } else {
        -1
    }
}

/// `|E(F_p)|`, point at infinity included, by enumerating every `x`.
pub fn count_points(curve: &CurveFp) -> BigUint {
    let total: i128 = (0..curve.p)
        .map(|x| 1 + legendre(curve.rhs(x), curve.p) as i128)
        .sum();
    BigUint::try_from(1 + total).expect("point count is positive")
}

/// Frobenius trace `a = 1 + p - |E(F_p)|`.
pub fn trace(curve: &CurveFp) -> BigInt {
    BigInt::from(1 + curve.p as i128) - BigInt::from(count_points(curve))
}

/// For `p >= 5` the Hasse bound and `a ≡ 0 (mod p)` force `a = 0`.
pub fn is_supersingular(curve: &CurveFp) -> bool {
    trace(curve).is_zero()
}

/// The two curve families with a congruence criterion for supersingularity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// `y^2 = x^3 + 1`
    CubePlusOne,
    /// `y^2 = x^3 + x`
    CubePlusX,
}

impl Family {
    pub fn curve(self, p: u64) -> Result<CurveFp> {
        match self {
            Family::CubePlusOne => CurveFp::new(p, 0, 1),
            Family::CubePlusX => CurveFp::new(p, 1, 0),
        }
    }
}

/// Supersingularity of a family member from `p` alone:
/// `x^3 + 1` iff `p ≡ 2 (mod 3)`, `x^3 + x` iff `p ≡ 3 (mod 4)`.
pub fn family_supersingular(family: Family, p: u64) -> Result<bool> {
    if !is_prime_u64(p) {
        return Err(Error::NotPrime(BigUint::from(p)));
    }
    if p < 5 {
        return Err(Error::argument(format!("p = {p} is below 5")));
    }
    Ok(match family {
        Family::CubePlusOne => p % 3 == 2,
        Family::CubePlusX => p % 4 == 3,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Genus {
    /// The projective line; its function field is `F_q(x)`.
    Zero,
    One,
}

/// Numerator data of the Weil zeta function
/// `Z(X, t) = P(t) / ((1 - t)(1 - q t))`, with `P(t) = 1 - a t + q t^2` in
/// genus one and `P = 1` in genus zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeilZeta {
    q: BigUint,
    a: BigInt,
    genus: Genus,
}

fn is_prime_power(q: &BigUint) -> bool {
    if *q < BigUint::from(2u32) {
        return false;
    }
    (1..=q.bits() as u32).any(|k| {
        let r = q.nth_root(k);
        num_traits::pow(r.clone(), k as usize) == *q && is_prime(&r)
    })
}

impl WeilZeta {
    /// Genus one data; rejects traces outside the Hasse interval.
    pub fn elliptic(q: impl Into<BigUint>, a: impl Into<BigInt>) -> Result<Self> {
        let q = q.into();
        let a = a.into();
        if !is_prime_power(&q) {
            return Err(Error::argument(format!("q = {q} is not a prime power")));
        }
        if a.magnitude().pow(2u32) > &q * 4u32 {
            return Err(Error::argument(format!("trace {a} violates a^2 <= 4q for q = {q}")));
        }
        Ok(WeilZeta { q, a, genus: Genus::One })
    }

    /// The projective line over `F_q`.
    pub fn rational(q: impl Into<BigUint>) -> Result<Self> {
        let q = q.into();
        if !is_prime_power(&q) {
            return Err(Error::argument(format!("q = {q} is not a prime power")));
        }
        Ok(WeilZeta { q, a: BigInt::zero(), genus: Genus::Zero })
    }

    pub fn q(&self) -> &BigUint {
        &self.q
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }

    pub fn genus(&self) -> Genus {
        self.genus
    }

    /// `q^k` as a signed integer.
    pub(crate) fn q_pow(&self, k: u32) -> BigInt {
        BigInt::from(self.q.pow(k))
    }

    /// `P(t)` evaluated at `t = q^n`.
    pub(crate) fn numerator_at(&self, n: u32) -> BigInt {
        match self.genus {
            Genus::Zero => BigInt::one(),
            Genus::One => BigInt::one() - &self.a * self.q_pow(n) + self.q_pow(2 * n + 1),
        }
    }
}

pub fn weil_zeta(curve: &CurveFp) -> WeilZeta {
    WeilZeta {
        q: BigUint::from(curve.p),
        a: trace(curve),
        genus: Genus::One,
    }
}

fn check_n(n: u32) -> Result<()> {
    if n == 0 {
        return Err(Error::argument("zeta evaluation needs n >= 1"));
    }
    Ok(())
}

/// `ζ_X(-n) = Z(X, q^n)`.
pub fn zeta_x_at(z: &WeilZeta, n: u32) -> Result<Rat> {
    check_n(n)?;
    let den = (BigInt::one() - z.q_pow(n)) * (BigInt::one() - z.q_pow(n + 1));
    if den.is_zero() {
        return Err(Error::PoleEvaluation);
    }
    Rat::new(z.numerator_at(n), den)
}

/// `ζ_F(-n) = ζ_X(-n) (1 - q^n)`: the single infinite place has norm `q`.
pub fn zeta_f_at(z: &WeilZeta, n: u32) -> Result<Rat> {
    let zx = zeta_x_at(z, n)?;
    Ok(zx * Rat::from_int(BigInt::one() - z.q_pow(n)))
}

/// `|X(F_{q^k})| = q^k + 1 - a_k` with `a_1 = a`, `a_2 = a^2 - 2q`,
/// `a_k = a a_{k-1} - q a_{k-2}`.
pub fn point_counts_ext(z: &WeilZeta, k: u32) -> Result<BigInt> {
    if k == 0 {
        return Err(Error::argument("extension degree must be >= 1"));
    }
    let q = BigInt::from(z.q.clone());
    let a = &z.a;
    // a_0 = 2 makes the recurrence start cleanly.
    let mut prev = BigInt::from(2);
    let mut cur = a.clone();
    for _ in 1..k {
        let next = a * &cur - &q * &prev;
        prev = cur;
        cur = next;
    }
    Ok(z.q_pow(k) + 1 - cur)
}

/// Hasse bound `a^2 <= 4p` for the curve's trace.
pub fn within_hasse(curve: &CurveFp) -> bool {
    let a = trace(curve);
    &a * &a <= BigInt::from(4 * curve.p as u128)
}
