//! Exact evaluation of the orders of groups of divisible elements `D(n)_l`
//! in even K-groups of global fields, and of the splitting and homology
//! criteria those orders control.
//!
//! Two kinds of fields are covered:
//!
//! * the rational field `Q`, through Bernoulli numbers, `ζ_Q(-n)` and the
//!   cyclotomic invariants `w_n(Q)` ([`zeta_q`]);
//! * function fields of curves of genus 0 or 1 over finite fields, through
//!   the Weil zeta function ([`curve`]).
//!
//! Orders are computed in [`divisible`] and turned into yes/no answers with
//! an audited hypothesis list in [`obstructions`]. Everything runs on exact
//! rationals ([`exact::Rat`]); no floating point is used anywhere.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

pub mod curve;
pub mod divisible;
pub mod error;
pub mod exact;
pub mod obstructions;
pub mod zeta_q;

pub use curve::{CurveFp, Family, Genus, WeilZeta};
pub use divisible::{Context, DivisibleOrder, HOrders};
pub use error::{Error, Result};
pub use exact::{is_prime, linv_abs, lval, LPower, Rat};
pub use obstructions::{Hypothesis, HypothesisKind, Outcome, Verdict};
pub use zeta_q::WnInvariant;
