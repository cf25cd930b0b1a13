//! Splitting criteria for the localization sequence and sufficient
//! conditions for non-injectivity of `H_{2n}(GL(O_F), Z/l) -> H_{2n}(GL(F), Z/l)`.
//!
//! Each check returns a [`Verdict`] listing every hypothesis it evaluated.
//! Preconditions decide applicability; conditions decide the answer.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};

use crate::curve::WeilZeta;
use crate::divisible::{dnl_ff, dnl_q, dnl_q_supplied, DivisibleOrder};
use crate::error::{Error, Result};
use crate::exact::{big, int_val, is_prime_u64, lval, Rat};
use crate::zeta_q::{wn_q, zeta_q_neg};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum HypothesisKind {
    /// Failure makes the criterion not applicable.
    Precondition,
    /// Failure makes the criterion come out negative.
    Condition,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hypothesis {
    pub name: String,
    pub kind: HypothesisKind,
    pub satisfied: bool,
    pub witness: String,
}

impl Hypothesis {
    fn precondition(name: &str, satisfied: bool, witness: String) -> Self {
        Hypothesis { name: name.to_string(), kind: HypothesisKind::Precondition, satisfied, witness }
    }

    fn condition(name: &str, satisfied: bool, witness: String) -> Self {
        Hypothesis { name: name.to_string(), kind: HypothesisKind::Condition, satisfied, witness }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Outcome {
    Holds,
    DoesNotHold,
    NotApplicable,
}

impl Outcome {
    pub fn name(self) -> &'static str {
        match self {
            Outcome::Holds => "holds",
            Outcome::DoesNotHold => "does-not-hold",
            Outcome::NotApplicable => "not-applicable",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub outcome: Outcome,
    pub hypotheses: Vec<Hypothesis>,
    /// The statement asserted when the outcome is [`Outcome::Holds`].
    pub conclusion: String,
}

impl Verdict {
    pub fn from_hypotheses(hypotheses: Vec<Hypothesis>, conclusion: String) -> Self {
        let failed = |kind| hypotheses.iter().any(|h| h.kind == kind && !h.satisfied);
        let outcome = if failed(HypothesisKind::Precondition) {
            Outcome::NotApplicable
        } else if failed(HypothesisKind::Condition) {
            Outcome::DoesNotHold
        } else {
            Outcome::Holds
        };
        Verdict { outcome, hypotheses, conclusion }
    }

    pub fn holds(&self) -> bool {
        self.outcome == Outcome::Holds
    }

    pub fn applicable(&self) -> bool {
        self.outcome != Outcome::NotApplicable
    }
}

fn order_is_one(d: &DivisibleOrder, what: &str) -> Hypothesis {
    let product = &d.inputs.last().expect("formula inputs are never empty").1;
    Hypothesis::condition(
        what,
        d.order.is_one(),
        format!("{product} has {}-part {}", d.l, d.order.value()),
    )
}

fn odd_preconditions(n: u32, l: u64) -> Vec<Hypothesis> {
    vec![
        Hypothesis::precondition("n odd", true, format!("n = {n}")),
        Hypothesis::precondition("l odd prime", true, format!("l = {l}")),
    ]
}

/// Splitting of `0 -> K_{2n}(Z) -> K_{2n}(Q) -> ⊕_p K_{2n-1}(F_p) -> 0` at
/// `l`, equivalent to `|w_{n+1}(Q) ζ_Q(-n)|_l^{-1} = 1` for odd `n`, odd `l`.
pub fn split_verdict_q(n: u32, l: u64) -> Result<Verdict> {
    let d = dnl_q(n, l)?;
    let mut hyps = odd_preconditions(n, l);
    // For odd n and odd l the local factor w_n(Q_l) has trivial l-part, so
    // the order of D(n)_l is exactly |w_{n+1}(Q) ζ_Q(-n)|_l^{-1}.
    hyps.push(order_is_one(&d, "|w_{n+1}(Q) zeta_Q(-n)|_l^{-1} = 1"));
    Ok(Verdict::from_hypotheses(
        hyps,
        format!(
            "0 -> K_{k}(Z)_{l} -> K_{k}(Q)_{l} -> (+)_p K_{k1}(F_p)_{l} -> 0 splits",
            k = 2 * n,
            k1 = 2 * n - 1
        ),
    ))
}

/// The totally real variant with caller-supplied data.
pub fn split_verdict_supplied(
    n: u32,
    l: u64,
    wnp1: &BigUint,
    zeta_val: &Rat,
    local_wn: &BigUint,
) -> Result<Verdict> {
    let d = dnl_q_supplied(n, l, wnp1, zeta_val, local_wn)?;
    let mut hyps = odd_preconditions(n, l);
    hyps.push(order_is_one(
        &d,
        "|w_{n+1}(F) zeta_F(-n) / prod_{v|l} w_n(F_v)|_l^{-1} = 1",
    ));
    Ok(Verdict::from_hypotheses(
        hyps,
        format!(
            "0 -> K_{k}(O_F)_{l} -> K_{k}(F)_{l} -> (+)_v K_{k1}(k_v)_{l} -> 0 splits",
            k = 2 * n,
            k1 = 2 * n - 1
        ),
    ))
}

/// Splitting of the boundary map `K_{2n}(F)_l -> ⊕_v K_{2n-1}(k_v)_l` for a
/// function field, equivalent to `D(n)_l = 0`.
pub fn split_verdict_ff(z: &WeilZeta, n: u32, l: u64) -> Result<Verdict> {
    let d = dnl_ff(z, n, l)?;
    let hyps = vec![
        Hypothesis::precondition("n >= 1", n >= 1, format!("n = {n}")),
        Hypothesis::precondition("l prime to q", true, format!("l = {l}, q = {}", z.q())),
        order_is_one(&d, "|D(n)_l| = 1"),
    ];
    Ok(Verdict::from_hypotheses(
        hyps,
        format!(
            "boundary map K_{k}(F)_{l} -> (+)_v K_{k1}(k_v)_{l} splits",
            k = 2 * n,
            k1 = 2 * n - 1
        ),
    ))
}

fn require_prime(l: u64) -> Result<()> {
    if is_prime_u64(l) {
        Ok(())
    } else {
        Err(Error::NotPrime(big(l)))
    }
}

fn kernel_conclusion(n: u32, l: u64, ring: &str, field: &str) -> String {
    format!(
        "kernel of H_{k}(GL({ring}), Z/{l}) -> H_{k}(GL({field}), Z/{l}) contains a subgroup isomorphic to Z/{l}",
        k = 2 * n
    )
}

/// Sufficient condition over `Q`: `n` odd, `l > n + 1` and `l` exactly
/// dividing `w_{n+1}(Q) ζ_Q(-n)`.
pub fn homology_kernel_q(n: u32, l: u64) -> Result<Verdict> {
    require_prime(l)?;
    if n == 0 {
        return Err(Error::argument("n must be >= 1"));
    }
    let odd = n % 2 == 1;
    let large = l > u64::from(n) + 1;
    let exact = if odd {
        let w = wn_q(u64::from(n) + 1)?;
        let product = Rat::from(w.value) * zeta_q_neg(u64::from(n))?;
        let v = lval(&product, &big(l))?;
        Hypothesis::condition(
            "v_l(w_{n+1}(Q) zeta_Q(-n)) = 1",
            v == 1,
            format!("w_{}(Q) zeta_Q(-{n}) = {product}, v_{l} = {v}", n + 1),
        )
    } else {
        Hypothesis::condition(
            "v_l(w_{n+1}(Q) zeta_Q(-n)) = 1",
            false,
            format!("zeta_Q(-{n}) = 0 for even n"),
        )
    };
    let hyps = vec![
        Hypothesis::precondition("n odd", odd, format!("n = {n}")),
        Hypothesis::precondition("l > n + 1", large, format!("l = {l}, n + 1 = {}", n + 1)),
        exact,
    ];
    Ok(Verdict::from_hypotheses(hyps, kernel_conclusion(n, l, "Z", "Q")))
}

/// Sufficient condition for a supersingular curve over `F_p`: `n` odd,
/// `l > n + 1`, `p ≡ -1 (mod l)` and `l ∤ (p + 1)(2n + 1) / l`.
///
/// The last condition is read as `v_l(p + 1) + v_l(2n + 1) = 1`. The caller
/// vouches for supersingularity.
pub fn homology_kernel_ss(p: u64, n: u32, l: u64) -> Result<Verdict> {
    if !is_prime_u64(p) {
        return Err(Error::NotPrime(big(p)));
    }
    if p < 5 {
        return Err(Error::argument(format!("p = {p} is below 5")));
    }
    require_prime(l)?;
    if l == p {
        return Err(Error::CharacteristicClash { l: big(l), q: big(p) });
    }
    if n == 0 {
        return Err(Error::argument("n must be >= 1"));
    }
    let lb = big(l);
    let vp = int_val(&BigInt::from(p + 1), &lb);
    let vn = int_val(&BigInt::from(2 * u64::from(n) + 1), &lb);
    let hyps = vec![
        Hypothesis::precondition("n odd", n % 2 == 1, format!("n = {n}")),
        Hypothesis::precondition(
            "l > n + 1",
            l > u64::from(n) + 1,
            format!("l = {l}, n + 1 = {}", n + 1),
        ),
        Hypothesis::condition(
            "p = -1 mod l",
            (p + 1).is_multiple_of(l),
            format!("p + 1 = {} = {} mod {l}", p + 1, (p + 1) % l),
        ),
        Hypothesis::condition(
            "l does not divide (p+1)(2n+1)/l",
            vp + vn == 1,
            format!(
                "read as v_l(p+1) + v_l(2n+1) = 1: v_{l}({}) = {vp}, v_{l}({}) = {vn}",
                p + 1,
                2 * n + 1
            ),
        ),
    ];
    let ring = format!("O_F_{p}(E)");
    let field = format!("F_{p}(E)");
    Ok(Verdict::from_hypotheses(hyps, kernel_conclusion(n, l, &ring, &field)))
}
