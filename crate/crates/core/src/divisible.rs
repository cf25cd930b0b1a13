//! Orders of the groups of divisible elements `D(n)_l`, the cohomology
//! orders of `H^i(X, W^{n+1})`, and the Moore order quotient.
//!
//! Every order is an `l`-part `|x|_l^{-1}` of an exact rational `x`. The
//! rationals entering each formula are kept in [`DivisibleOrder::inputs`]
//! so the un-simplified product can be audited.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::curve::{zeta_f_at, zeta_x_at, WeilZeta};
use crate::error::{Error, Result};
use crate::exact::{big, int_val, is_prime_u64, linv_abs, LPower, Rat};
use crate::zeta_q::{wn_q, wn_ql, zeta_q_neg};

/// Which order formula produced a [`DivisibleOrder`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Context {
    /// `F = Q`, values computed here.
    RationalField,
    /// A totally real field with caller-supplied `w_{n+1}(F)`, `ζ_F(-n)` and
    /// local factor.
    TotallyRealSupplied,
    /// Global function field with Weil zeta data.
    FunctionField,
    /// Supersingular elliptic function field, closed form in `p`.
    SupersingularClosedForm,
}

impl Context {
    pub fn name(self) -> &'static str {
        match self {
            Context::RationalField => "rational-field",
            Context::TotallyRealSupplied => "totally-real-supplied",
            Context::FunctionField => "function-field",
            Context::SupersingularClosedForm => "supersingular-closed-form",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisibleOrder {
    pub context: Context,
    pub n: u32,
    pub l: u64,
    pub order: LPower,
    /// Named exact inputs of the formula, in evaluation order.
    pub inputs: Vec<(&'static str, Rat)>,
}

fn require_prime(l: u64) -> Result<()> {
    if is_prime_u64(l) {
        Ok(())
    } else {
        Err(Error::NotPrime(big(l)))
    }
}

fn require_odd_n_odd_l(n: u32, l: u64) -> Result<()> {
    require_prime(l)?;
    if n == 0 || n.is_multiple_of(2) {
        return Err(Error::hypothesis(alloc::format!("n = {n} must be odd and positive")));
    }
    if l == 2 {
        return Err(Error::hypothesis("l must be an odd prime"));
    }
    Ok(())
}

fn require_coprime(z: &WeilZeta, l: u64) -> Result<()> {
    require_prime(l)?;
    if (z.q() % l).is_zero() {
        return Err(Error::CharacteristicClash { l: big(l), q: z.q().clone() });
    }
    Ok(())
}

/// `|D(n)_l| = |w_{n+1}(Q) ζ_Q(-n) / w_n(Q_l)|_l^{-1}` for odd `n` and odd `l`.
pub fn dnl_q(n: u32, l: u64) -> Result<DivisibleOrder> {
    require_odd_n_odd_l(n, l)?;
    let wnp1 = wn_q(u64::from(n) + 1)?;
    let zeta = zeta_q_neg(u64::from(n))?;
    let local = wn_ql(u64::from(n), l)?;
    let mut out = dnl_q_supplied(n, l, &wnp1.value, &zeta, local.value())?;
    out.context = Context::RationalField;
    Ok(out)
}

/// The same formula with `w_{n+1}(F)`, `ζ_F(-n)` and `∏_{v|l} w_n(F_v)`
/// supplied by the caller.
pub fn dnl_q_supplied(
    n: u32,
    l: u64,
    wnp1: &BigUint,
    zeta_val: &Rat,
    local_wn: &BigUint,
) -> Result<DivisibleOrder> {
    require_odd_n_odd_l(n, l)?;
    if wnp1.is_zero() || zeta_val.is_zero() || local_wn.is_zero() {
        return Err(Error::ZeroInput);
    }
    let wnp1 = Rat::from(wnp1.clone());
    let local = Rat::from(local_wn.clone());
    let quotient = (&wnp1 * zeta_val).checked_div(&local)?;
    let order = linv_abs(&quotient, &big(l))?;
    Ok(DivisibleOrder {
        context: Context::TotallyRealSupplied,
        n,
        l,
        order,
        inputs: vec![
            ("w_{n+1}(F)", wnp1),
            ("zeta_F(-n)", zeta_val.clone()),
            ("prod_{v|l} w_n(F_v)", local),
            ("w_{n+1}(F) zeta_F(-n) / prod_{v|l} w_n(F_v)", quotient),
        ],
    })
}

/// `|D(n)_l| = |w_n(F) w_{n+1}(F) ζ_F(-n) / w_n(F_∞)|_l^{-1}` with
/// `w_k(F) = q^k - 1` and one infinite place of norm `q`.
pub fn dnl_ff(z: &WeilZeta, n: u32, l: u64) -> Result<DivisibleOrder> {
    require_coprime(z, l)?;
    let zeta_f = zeta_f_at(z, n)?;
    let wn = Rat::from_int(z.q_pow(n) - 1);
    let wnp1 = Rat::from_int(z.q_pow(n + 1) - 1);
    let w_inf = wn.clone();
    let product = (&(&wn * &wnp1) * &zeta_f).checked_div(&w_inf)?;
    let order = linv_abs(&product, &big(l))?;
    Ok(DivisibleOrder {
        context: Context::FunctionField,
        n,
        l,
        order,
        inputs: vec![
            ("w_n(F)", wn),
            ("w_{n+1}(F)", wnp1),
            ("zeta_F(-n)", zeta_f),
            ("w_n(F_inf)", w_inf),
            ("w_n(F) w_{n+1}(F) zeta_F(-n) / w_n(F_inf)", product),
        ],
    })
}

/// Closed form for a supersingular curve over `F_p`:
/// `|D(n)_l| = |1 + p^{1+2n}|_l^{-1} / |1 - p^n|_l^{-1}`.
///
/// The caller vouches for supersingularity. A negative exponent is reported
/// as [`Error::NegativeValuation`].
pub fn dnl_ss(p: u64, n: u32, l: u64) -> Result<DivisibleOrder> {
    if !is_prime_u64(p) {
        return Err(Error::NotPrime(big(p)));
    }
    if p < 5 {
        return Err(Error::argument(alloc::format!("p = {p} is below 5")));
    }
    require_prime(l)?;
    if l == p {
        return Err(Error::CharacteristicClash { l: big(l), q: big(p) });
    }
    if n == 0 {
        return Err(Error::argument("n must be >= 1"));
    }
    let pb = BigInt::from(p);
    let top = BigInt::one() + pb.pow(2 * n + 1);
    let bottom = BigInt::one() - pb.pow(n);
    let lb = big(l);
    let exponent = int_val(&top, &lb) as i64 - int_val(&bottom, &lb) as i64;
    if exponent < 0 {
        return Err(Error::negative(lb, exponent));
    }
    Ok(DivisibleOrder {
        context: Context::SupersingularClosedForm,
        n,
        l,
        order: LPower::new(lb, exponent as u32)?,
        inputs: vec![
            ("1 + p^{1+2n}", Rat::from_int(top)),
            ("1 - p^n", Rat::from_int(bottom)),
        ],
    })
}

/// Orders of `H^i(X, W^{n+1})` for `i = 0, 1, 2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HOrders {
    pub h0: LPower,
    pub h1: LPower,
    pub h2: LPower,
}

/// `|H^0| = |q^{n+1} - 1|_l^{-1}`, `|H^2| = |q^n - 1|_l^{-1}`,
/// `|H^1| = |(q^{n+1} - 1)(q^n - 1) ζ_X(-n)|_l^{-1}`.
pub fn h_orders(z: &WeilZeta, n: u32, l: u64) -> Result<HOrders> {
    require_coprime(z, l)?;
    let lb = big(l);
    let a = Rat::from_int(z.q_pow(n + 1) - 1);
    let b = Rat::from_int(z.q_pow(n) - 1);
    let zx = zeta_x_at(z, n)?;
    Ok(HOrders {
        h0: linv_abs(&a, &lb)?,
        h1: linv_abs(&(&(&a * &b) * &zx), &lb)?,
        h2: linv_abs(&b, &lb)?,
    })
}

/// `|∏_{v∈S} w_n(F_v) / w_n(F)|_l^{-1}`, the order quotient
/// `|K_{2n}(O_{F,S})_l| / |K^w_{2n}(O_F)_l|`.
pub fn moore_quotient(local_wn: &[BigUint], global_wn: &BigUint, l: u64) -> Result<LPower> {
    require_prime(l)?;
    if global_wn.is_zero() || local_wn.iter().any(Zero::is_zero) {
        return Err(Error::ZeroInput);
    }
    let local: BigUint = local_wn.iter().product();
    let x = Rat::new(BigInt::from(local), BigInt::from(global_wn.clone()))?;
    linv_abs(&x, &big(l))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::{is_supersingular, weil_zeta, CurveFp};
    use proptest::prelude::*;

    fn exp(o: &DivisibleOrder) -> u32 {
        o.order.exponent()
    }

    #[test]
    fn rational_examples() {
        let d = dnl_q(11, 691).unwrap();
        assert_eq!(d.order.value(), &big(691));
        assert_eq!(d.context, Context::RationalField);
        assert_eq!(d.inputs[3].1, Rat::from(2 * 691));
        assert_eq!(dnl_q(15, 3617).unwrap().order.value(), &big(3617));
        assert!(dnl_q(3, 5).unwrap().order.is_one());
        assert!(matches!(dnl_q(4, 5), Err(Error::HypothesisViolation(_))));
        assert!(matches!(dnl_q(3, 2), Err(Error::HypothesisViolation(_))));
        assert!(matches!(dnl_q(3, 9), Err(Error::NotPrime(_))));
    }

    #[test]
    fn supplied_examples() {
        let z = Rat::new(691, 32760).unwrap();
        let d = dnl_q_supplied(11, 691, &big(65520), &z, &big(1)).unwrap();
        assert_eq!(d.order.value(), &big(691));
        let z = Rat::new(1, 120).unwrap();
        assert!(dnl_q_supplied(3, 5, &big(240), &z, &big(1)).unwrap().order.is_one());
        assert!(matches!(
            dnl_q_supplied(3, 5, &big(240), &z, &big(5)),
            Err(Error::NegativeValuation { .. })
        ));
        assert_eq!(
            dnl_q_supplied(3, 5, &big(240), &Rat::zero(), &big(1)),
            Err(Error::ZeroInput)
        );
    }

    #[test]
    fn function_field_examples() {
        let z29 = WeilZeta::elliptic(29u32, 0).unwrap();
        assert_eq!(dnl_ff(&z29, 3, 5).unwrap().order.value(), &big(5));
        let z41 = WeilZeta::elliptic(41u32, 0).unwrap();
        assert_eq!(dnl_ff(&z41, 5, 7).unwrap().order.value(), &big(7));
        for p in [5u32, 7, 29] {
            let z0 = WeilZeta::rational(p).unwrap();
            for n in 1..=6 {
                assert!(dnl_ff(&z0, n, 3).unwrap().order.is_one());
            }
        }
        assert!(matches!(dnl_ff(&z29, 3, 29), Err(Error::CharacteristicClash { .. })));
        // 1 + 29^5 = 2 * 3 * 5^2 * ..., so D(2)_5 has order 25.
        assert_eq!(dnl_ff(&z29, 2, 5).unwrap().order.value(), &big(25));
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(dnl_ss(29, 3, 5).unwrap().order.value(), &big(5));
        assert_eq!(dnl_ss(19, 3, 5).unwrap().order.value(), &big(5));
        assert_eq!(dnl_ss(41, 5, 7).unwrap().order.value(), &big(7));
        // v_5(1 + 29^5) = 2, v_5(1 - 29^2) = 1.
        assert_eq!(dnl_ss(29, 2, 5).unwrap().order.value(), &big(5));
        // 29 ≡ 1 (mod 7): the denominator carries a 7 the numerator lacks.
        assert!(matches!(dnl_ss(29, 1, 7), Err(Error::NegativeValuation { .. })));
        assert!(matches!(dnl_ss(29, 1, 29), Err(Error::CharacteristicClash { .. })));
        assert!(dnl_ss(3, 1, 5).is_err());
    }

    #[test]
    fn h_order_examples() {
        let z29 = WeilZeta::elliptic(29u32, 0).unwrap();
        let h = h_orders(&z29, 3, 5).unwrap();
        assert_eq!(
            (h.h0.exponent(), h.h1.exponent(), h.h2.exponent()),
            (1, 1, 0)
        );
        let z41 = WeilZeta::elliptic(41u32, 0).unwrap();
        assert_eq!(h_orders(&z41, 5, 7).unwrap().h1.value(), &big(7));
        // l = 11 divides none of 29^4 - 1, 29^3 - 1, 1 + 29^7.
        let h = h_orders(&z29, 3, 11).unwrap();
        assert!(h.h0.is_one() && h.h1.is_one() && h.h2.is_one());
    }

    #[test]
    fn moore_examples() {
        let q3 = big(29 * 29 * 29 - 1);
        assert!(moore_quotient(core::slice::from_ref(&q3), &q3, 3).unwrap().is_one());
        assert_eq!(moore_quotient(&[big(5), big(240)], &big(240), 5).unwrap().value(), &big(5));
        assert!(moore_quotient(&[big(1)], &big(1), 7).unwrap().is_one());
        assert!(matches!(
            moore_quotient(&[big(1)], &big(5), 5),
            Err(Error::NegativeValuation { .. })
        ));
        assert_eq!(moore_quotient(&[big(0)], &big(5), 5), Err(Error::ZeroInput));
    }

    #[test]
    fn dnl_q_trivial_for_large_l() {
        for n in (1..=19u32).step_by(2) {
            let d = dnl_q(n, 3).unwrap();
            let product = d.inputs[3].1.clone();
            let mut m = product.numer().magnitude().clone();
            let mut largest = 1u64;
            let mut f = 2u64;
            while m > BigUint::one() {
                if (&m % f).is_zero() {
                    largest = f;
                    m /= f;
                } else {
                    f += 1;
                }
            }
            let bound = largest.max(u64::from(n) + 2);
            for l in (bound + 1..bound + 400).filter(|&l| is_prime_u64(l)) {
                assert!(dnl_q(n, l).unwrap().order.is_one(), "n = {n}, l = {l}");
            }
        }
    }

    fn curve_strategy() -> impl Strategy<Value = CurveFp> {
        (5u64..200, 0i64..200, 0i64..200)
            .prop_filter_map("valid curve", |(p, a, b)| CurveFp::new(p, a, b).ok())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]

        #[test]
        fn divisible_order_equals_h1(c in curve_strategy(), n in 1u32..=8,
                                     l in prop::sample::select(vec![3u64, 5, 7, 11, 13])) {
            prop_assume!(l != c.p());
            let z = weil_zeta(&c);
            prop_assert_eq!(dnl_ff(&z, n, l).unwrap().order, h_orders(&z, n, l).unwrap().h1);
        }

        #[test]
        fn closed_form_off_by_denominator(
            p in (5u64..200).prop_filter("supersingular x^3+1", |&p| is_prime_u64(p) && p % 3 == 2),
            n in 1u32..=8,
            l in prop::sample::select(vec![3u64, 5, 7, 11, 13]),
        ) {
            prop_assume!(l != p);
            let c = CurveFp::new(p, 0, 1).unwrap();
            prop_assert!(is_supersingular(&c));
            let general = exp(&dnl_ff(&weil_zeta(&c), n, l).unwrap()) as i64;
            let extra = int_val(&(BigInt::from(p).pow(n) - 1), &big(l)) as i64;
            match dnl_ss(p, n, l) {
                Ok(d) => prop_assert_eq!(exp(&d) as i64, general - extra),
                Err(Error::NegativeValuation { valuation, .. }) => {
                    prop_assert_eq!(valuation, general - extra)
                }
                Err(e) => prop_assert!(false, "unexpected error {e:?}"),
            }
        }

        #[test]
        fn rational_function_field_vanishes(
            p in prop::sample::select(vec![2u64, 3, 5, 7, 11, 29, 101]),
            n in 1u32..=20,
            l in prop::sample::select(vec![3u64, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37]),
        ) {
            prop_assume!(l != p);
            let z0 = WeilZeta::rational(p).unwrap();
            prop_assert!(dnl_ff(&z0, n, l).unwrap().order.is_one());
        }
    }
}
