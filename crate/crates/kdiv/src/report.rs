//! Recomputation of the published numeric examples.

use kdiv_core::curve::{
    count_points, family_supersingular, is_supersingular, trace, weil_zeta, CurveFp, Family,
    WeilZeta,
};
use kdiv_core::divisible::{dnl_ff, dnl_q, dnl_ss};
use kdiv_core::exact::is_prime_u64;
use kdiv_core::obstructions::{homology_kernel_q, homology_kernel_ss, split_verdict_q};
use kdiv_core::zeta_q::{wn_q, zeta_q_neg};
use kdiv_core::{Rat, Result};
use serde_json::{json, Value};

use crate::render::text;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Entry {
    pub claim_id: &'static str,
    /// Displayed formula the claim is read from.
    pub anchor: &'static str,
    pub computed: String,
    pub expected: String,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub entries: Vec<Entry>,
}

impl Report {
    pub fn passed(&self) -> usize {
        self.entries.iter().filter(|e| e.pass).count()
    }

    pub fn failed(&self) -> usize {
        self.entries.len() - self.passed()
    }

    pub fn all_pass(&self) -> bool {
        self.failed() == 0
    }

    pub fn to_value(&self) -> Value {
        let entries: Vec<Value> = self
            .entries
            .iter()
            .map(|e| {
                json!({
                    "claim_id": e.claim_id,
                    "anchor": e.anchor,
                    "computed": e.computed,
                    "expected": e.expected,
                    "pass": e.pass,
                })
            })
            .collect();
        json!({
            "entries": entries,
            "summary": {
                "total": text(self.entries.len()),
                "passed": text(self.passed()),
                "failed": text(self.failed()),
            },
        })
    }

    pub fn table(&self) -> String {
        let w = self.entries.iter().map(|e| e.claim_id.len()).max().unwrap_or(0);
        let mut out = String::new();
        for e in &self.entries {
            let mark = if e.pass { "PASS" } else { "FAIL" };
            out += &format!("{mark}  {:<w$}  {}\n", e.claim_id, e.computed);
            if !e.pass {
                out += &format!("      {:<w$}  expected {}\n", "", e.expected);
            }
        }
        out += &format!("{} passed, {} failed\n", self.passed(), self.failed());
        out
    }
}

fn entry(
    claim_id: &'static str,
    anchor: &'static str,
    expected: &str,
    compute: impl FnOnce() -> Result<String>,
) -> Entry {
    let computed = compute().unwrap_or_else(|e| format!("error: {e}"));
    let pass = computed == expected;
    Entry { claim_id, anchor, computed, expected: expected.to_string(), pass }
}

fn rational_product(n: u32) -> Result<Rat> {
    let w = wn_q(u64::from(n) + 1)?;
    Ok(Rat::from(w.value) * zeta_q_neg(u64::from(n))?)
}

fn bernoulli_example(n: u32, l: u64) -> Result<String> {
    let product = rational_product(n)?;
    let d = dnl_q(n, l)?;
    Ok(format!("w_{}(Q) zeta_Q(-{n}) = {product}; |D({n})_{l}| = {}", n + 1, d.order.value()))
}

fn curve_facts(family: Family, p: u64) -> Result<String> {
    let c = family.curve(p)?;
    Ok(format!(
        "#E(F_{p}) = {}, trace = {}, supersingular = {}, congruence test = {}",
        count_points(&c),
        trace(&c),
        is_supersingular(&c),
        family_supersingular(family, p)?
    ))
}

fn both_orders(c: &CurveFp, n: u32, l: u64) -> Result<String> {
    let general = dnl_ff(&weil_zeta(c), n, l)?;
    let closed = dnl_ss(c.p(), n, l)?;
    Ok(format!("general {}, closed form {}", general.order.value(), closed.order.value()))
}

fn verdict_line(v: kdiv_core::Result<kdiv_core::Verdict>) -> Result<String> {
    let v = v?;
    Ok(format!("{}: {}", v.outcome.name(), v.conclusion))
}

fn small_n_split() -> Result<String> {
    let ls: Vec<u64> = (3..=10_000).filter(|&l| is_prime_u64(l)).collect();
    let mut products = Vec::new();
    let mut split = 0;
    for n in [3u32, 5, 7, 9] {
        products.push(rational_product(n)?.to_string());
        for &l in &ls {
            if split_verdict_q(n, l)?.holds() {
                split += 1;
            }
        }
    }
    Ok(format!(
        "products {}; {split} of {} pairs (n, l) split",
        products.join(", "),
        4 * ls.len()
    ))
}

fn genus_zero() -> Result<String> {
    let (mut trivial, mut total) = (0, 0);
    for p in [5u64, 7, 29] {
        let z = WeilZeta::rational(p)?;
        let ls: Vec<u64> = (3..).filter(|&l| is_prime_u64(l) && l != p).take(10).collect();
        for n in 1..=20u32 {
            for &l in &ls {
                total += 1;
                if dnl_ff(&z, n, l)?.order.is_one() {
                    trivial += 1;
                }
            }
        }
    }
    Ok(format!("{trivial} of {total} triples (p, n, l) have |D(n)_l| = 1"))
}

const H22: &str = r"H_{22} (GL(\Z), \, \Z / 691) \,\, \rightarrow \,\, H_{22} (GL(\Q), \, \Z / 691)";
const H30: &str =
    r"H_{30} (GL(\Z), \, \Z / 3617) \,\, \rightarrow \,\, H_{30} (GL(\Q), \, \Z / 3617)";
const H6_29: &str = r"H_{6} (GL(\mathcal{O}_{\F_{29} (E)}), \, \Z / 5) \,\, \rightarrow \,\, H_{6} (GL(\F_{29}(E)), \, \Z / 5)";
const H10_41: &str = r"H_{10} (GL(\mathcal{O}_{\F_{41}(E)}), \, \Z / 7) \,\, \rightarrow \,\, H_{10} (GL(\F_{41}(E)), \, \Z / 7)";
const H6_19: &str = r"H_{6} (GL(\mathcal{O}_{\F_{19}(E)}), \, \Z / 5) \,\, \rightarrow \,\, H_{6} (GL(\F_{19}(E)), \, \Z / 5)";

/// One entry per published numeric example, sorted by claim id.
pub fn verify_paper() -> Report {
    let mut entries = vec![
        entry(
            "ex-691",
            r"w_{12} (\Q) \zeta_{\Q} (-11) = 2 \times 691",
            "w_12(Q) zeta_Q(-11) = 1382; |D(11)_691| = 691",
            || bernoulli_example(11, 691),
        ),
        entry(
            "ex-3617",
            r"w_{16} (\Q) \zeta_{\Q} (-15) = 2 \times 3617",
            "w_16(Q) zeta_Q(-15) = 7234; |D(15)_3617| = 3617",
            || bernoulli_example(15, 3617),
        ),
        entry(
            "ex-p29-curve",
            r"p \equiv 2 \mod 3",
            "#E(F_29) = 30, trace = 0, supersingular = true, congruence test = true",
            || curve_facts(Family::CubePlusOne, 29),
        ),
        entry("ex-p29", r"5 \,\, || \,\, |D (n)_5|", "general 5, closed form 5", || {
            both_orders(&Family::CubePlusOne.curve(29)?, 3, 5)
        }),
        entry(
            "ex-p29-homology",
            H6_29,
            "holds: kernel of H_6(GL(O_F_29(E)), Z/5) -> H_6(GL(F_29(E)), Z/5) contains a subgroup isomorphic to Z/5",
            || verdict_line(homology_kernel_ss(29, 3, 5)),
        ),
        entry("ex-p41", r"7 \,\, || \,\, |D (n)_7|", "general 7, closed form 7", || {
            both_orders(&Family::CubePlusOne.curve(41)?, 5, 7)
        }),
        entry(
            "ex-p41-homology",
            H10_41,
            "holds: kernel of H_10(GL(O_F_41(E)), Z/7) -> H_10(GL(F_41(E)), Z/7) contains a subgroup isomorphic to Z/7",
            || verdict_line(homology_kernel_ss(41, 5, 7)),
        ),
        entry(
            "ex-p19-curve",
            r"p \equiv 3 \mod 4",
            "#E(F_19) = 20, trace = 0, supersingular = true, congruence test = true",
            || curve_facts(Family::CubePlusX, 19),
        ),
        entry("ex-p19", r"5 \,\, || \,\, |D (n)_5|", "general 5, closed form 5", || {
            both_orders(&Family::CubePlusX.curve(19)?, 3, 5)
        }),
        entry(
            "ex-p19-homology",
            H6_19,
            "holds: kernel of H_6(GL(O_F_19(E)), Z/5) -> H_6(GL(F_19(E)), Z/5) contains a subgroup isomorphic to Z/5",
            || verdict_line(homology_kernel_ss(19, 3, 5)),
        ),
        entry(
            "split-q-small-n",
            r"n = 3, 5, 7, 9",
            "products 2, -2, 2, -2; 4912 of 4912 pairs (n, l) split",
            small_n_split,
        ),
        entry(
            "ff-rational-split",
            r"D(n) = div K_{2n}\, (\F_p (x)) = 0",
            "600 of 600 triples (p, n, l) have |D(n)_l| = 1",
            genus_zero,
        ),
        entry(
            "homology-q-691",
            H22,
            "holds: kernel of H_22(GL(Z), Z/691) -> H_22(GL(Q), Z/691) contains a subgroup isomorphic to Z/691",
            || verdict_line(homology_kernel_q(11, 691)),
        ),
        entry(
            "homology-q-3617",
            H30,
            "holds: kernel of H_30(GL(Z), Z/3617) -> H_30(GL(Q), Z/3617) contains a subgroup isomorphic to Z/3617",
            || verdict_line(homology_kernel_q(15, 3617)),
        ),
        entry("homology-q-small-l", r"l > n + 1", "not-applicable", || {
            Ok(homology_kernel_q(11, 5)?.outcome.name().to_string())
        }),
    ];
    entries.sort_by(|a, b| a.claim_id.cmp(b.claim_id));
    Report { entries }
}
