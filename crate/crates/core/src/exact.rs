//! Exact rationals, `l`-adic valuations and deterministic primality.
//!
//! [`Rat`] is the value type for every quantity in the crate. Valuations
//! discard sign: `lval(-x, l) == lval(x, l)`.

use alloc::format;
use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};
use core::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// An exact rational number, always stored in lowest terms with a positive
/// denominator.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Rat(BigRational);

impl Rat {
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<Self> {
        let den = den.into();
        if den.is_zero() {
            return Err(Error::argument("zero denominator"));
        }
        Ok(Rat(BigRational::new(num.into(), den)))
    }

    pub fn from_int(n: impl Into<BigInt>) -> Self {
        Rat(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Rat(BigRational::zero())
    }

    pub fn one() -> Self {
        Rat(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn abs(&self) -> Self {
        Rat(self.0.abs())
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroInput);
        }
        Ok(Rat(self.0.recip()))
    }

    pub fn checked_div(&self, rhs: &Rat) -> Result<Self> {
        Ok(self * &rhs.recip()?)
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl FromStr for Rat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parse = |t: &str| {
            BigInt::from_str(t.trim()).map_err(|_| Error::argument(format!("not a rational: {s:?}")))
        };
        match s.split_once('/') {
            Some((n, d)) => Rat::new(parse(n)?, parse(d)?),
            None => Ok(Rat::from_int(parse(s)?)),
        }
    }
}

impl From<BigInt> for Rat {
    fn from(n: BigInt) -> Self {
        Rat::from_int(n)
    }
}

impl From<BigUint> for Rat {
    fn from(n: BigUint) -> Self {
        Rat::from_int(BigInt::from(n))
    }
}

impl From<i64> for Rat {
    fn from(n: i64) -> Self {
        Rat::from_int(n)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl<'a> $trait<&'a Rat> for &'a Rat {
            type Output = Rat;
            fn $method(self, rhs: &'a Rat) -> Rat {
                Rat((&self.0).$method(&rhs.0))
            }
        }

        impl $trait for Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                Rat(self.0.$method(rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
// Panics on a zero divisor; use `checked_div` for fallible division.
forward_binop!(Div, div);

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-self.0)
    }
}

/// A prime power `l^exponent`, the shape of every `l`-part `|x|_l^{-1}`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LPower {
    l: BigUint,
    exponent: u32,
    value: BigUint,
}

impl LPower {
    pub fn new(l: impl Into<BigUint>, exponent: u32) -> Result<Self> {
        let l = l.into();
        if !is_prime(&l) {
            return Err(Error::NotPrime(l));
        }
        let value = num_traits::pow(l.clone(), exponent as usize);
        Ok(LPower { l, exponent, value })
    }

    pub fn trivial(l: impl Into<BigUint>) -> Result<Self> {
        LPower::new(l, 0)
    }

    pub fn l(&self) -> &BigUint {
        &self.l
    }

    pub fn exponent(&self) -> u32 {
        self.exponent
    }

    pub fn value(&self) -> &BigUint {
        &self.value
    }

    pub fn is_one(&self) -> bool {
        self.exponent == 0
    }
}

impl fmt::Display for LPower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}^{}", self.l, self.exponent)
    }
}

/// Exponent of `l` in a nonzero integer. Sign is ignored.
pub fn int_val(n: &BigInt, l: &BigUint) -> u64 {
    debug_assert!(!n.is_zero());
    debug_assert!(*l > BigUint::one());
    let mut m = n.magnitude().clone();
    let mut v = 0;
    loop {
        let (q, r) = m.div_rem(l);
        if !r.is_zero() {
            return v;
        }
        m = q;
        v += 1;
    }
}

/// `l`-adic valuation of a nonzero rational.
pub fn lval(x: &Rat, l: &BigUint) -> Result<i64> {
    if x.is_zero() {
        return Err(Error::ZeroInput);
    }
    if !is_prime(l) {
        return Err(Error::NotPrime(l.clone()));
    }
    let up = int_val(x.numer(), l) as i64;
    let down = int_val(x.denom(), l) as i64;
    Ok(up - down)
}

/// `|x|_l^{-1}`, i.e. `l^{v_l(x)}`. A negative valuation is an error.
pub fn linv_abs(x: &Rat, l: &BigUint) -> Result<LPower> {
    let v = lval(x, l)?;
    if v < 0 {
        return Err(Error::negative(l.clone(), v));
    }
    let exponent = u32::try_from(v).map_err(|_| Error::argument("valuation exceeds u32"))?;
    LPower::new(l.clone(), exponent)
}

const SMALL_PRIMES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub(crate) fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic primality for 64-bit integers (Miller-Rabin, first twelve
/// prime bases).
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &SMALL_PRIMES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &SMALL_PRIMES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

// The twelve-base Miller-Rabin test is exact below this bound.
const MR_BOUND: &str = "3317044064679887385961981";

fn miller_rabin_big(n: &BigUint) -> bool {
    let one = BigUint::one();
    let n1 = n - &one;
    let s = n1.trailing_zeros().unwrap_or(0);
    let d = &n1 >> s;
    'witness: for &a in &SMALL_PRIMES {
        let mut x = BigUint::from(a).modpow(&d, n);
        if x == one || x == n1 {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % n;
            if x == n1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn trial_division(n: &BigUint) -> bool {
    let two = BigUint::from(2u32);
    if n.is_even() {
        return *n == two;
    }
    let root = n.sqrt();
    let mut d = BigUint::from(3u32);
    while d <= root {
        if (n % &d).is_zero() {
            return false;
        }
        d += &two;
    }
    true
}

/// Deterministic primality test. No probabilistic shortcuts are taken, so
/// every answer is reproducible.
pub fn is_prime(m: &BigUint) -> bool {
    if let Some(small) = m.to_u64() {
        return is_prime_u64(small);
    }
    for &p in &SMALL_PRIMES {
        if (m % p).is_zero() {
            return false;
        }
    }
    let bound = BigUint::from_str(MR_BOUND).expect("constant");
    if *m < bound {
        miller_rabin_big(m)
    } else {
        trial_division(m)
    }
}

pub(crate) fn big(n: u64) -> BigUint {
    BigUint::from(n)
}
