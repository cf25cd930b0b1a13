//! Argument grammar and dispatch to the core crate.

use clap::{Args, Parser, Subcommand};
use kdiv_core::curve::{
    count_points, is_supersingular, trace, weil_zeta, zeta_f_at, zeta_x_at, CurveFp,
};
use kdiv_core::divisible::{dnl_ff, dnl_q, dnl_ss, moore_quotient};
use kdiv_core::obstructions::{
    homology_kernel_q, homology_kernel_ss, split_verdict_ff, split_verdict_q,
};
use kdiv_core::zeta_q::{bernoulli, wn_q, wn_ql, zeta_q_neg};
use num_bigint::BigUint;
use serde_json::{json, Value};

use crate::render::{lpower, order, text, verdict};

#[derive(Parser, Debug)]
#[command(
    name = "kdiv",
    version,
    about = "Exact orders of divisible elements in K-groups of global fields"
)]
pub struct Cli {
    /// Print a JSON document instead of a table.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Bernoulli number B_m (B_1 = -1/2).
    Bernoulli {
        #[arg(long)]
        m: usize,
    },
    /// zeta_Q(-n).
    ZetaQ {
        #[arg(long)]
        n: u64,
    },
    /// w_n(Q), or the l-part of w_n(Q_l) when --l is given.
    Wn {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        l: Option<u64>,
    },
    /// Order of D(n)_l.
    Dnl {
        #[command(subcommand)]
        field: DnlField,
    },
    /// Point count, trace, supersingularity or zeta values of y^2 = x^3 + Ax + B.
    Curve {
        #[command(flatten)]
        curve: CurveArgs,
        #[command(subcommand)]
        query: CurveQuery,
    },
    /// Whether the localization sequence splits at l.
    Split {
        #[command(subcommand)]
        field: SplitField,
    },
    /// Whether the homology kernel contains Z/l.
    Homology {
        #[command(subcommand)]
        field: HomologyField,
    },
    /// l-part of the product of local w_n over the global w_n.
    Moore {
        #[arg(long, value_delimiter = ',', required = true)]
        local: Vec<BigUint>,
        #[arg(long)]
        global: BigUint,
        #[arg(long)]
        l: u64,
    },
    /// Recompute every numeric example and compare with the published values.
    VerifyPaper,
}

#[derive(Args, Debug, Clone, Copy)]
pub struct CurveArgs {
    #[arg(long)]
    pub p: u64,
    #[arg(long = "A", value_name = "A", allow_hyphen_values = true)]
    pub a: i64,
    #[arg(long = "B", value_name = "B", allow_hyphen_values = true)]
    pub b: i64,
}

impl CurveArgs {
    fn build(self) -> kdiv_core::Result<CurveFp> {
        CurveFp::new(self.p, self.a, self.b)
    }
}

#[derive(Args, Debug, Clone, Copy)]
pub struct NL {
    #[arg(long)]
    pub n: u32,
    #[arg(long)]
    pub l: u64,
}

#[derive(Subcommand, Debug)]
pub enum DnlField {
    /// F = Q.
    Q(NL),
    /// Function field of an elliptic curve over F_p.
    Ff {
        #[command(flatten)]
        curve: CurveArgs,
        #[command(flatten)]
        nl: NL,
    },
    /// Closed form for a supersingular curve over F_p.
    Ss {
        #[arg(long)]
        p: u64,
        #[command(flatten)]
        nl: NL,
    },
}

#[derive(Subcommand, Debug)]
pub enum CurveQuery {
    Count,
    Trace,
    Supersingular,
    /// zeta_X(-n) and zeta_F(-n).
    Zeta {
        #[arg(long)]
        n: u32,
    },
}

#[derive(Subcommand, Debug)]
pub enum SplitField {
    Q(NL),
    Ff {
        #[command(flatten)]
        curve: CurveArgs,
        #[command(flatten)]
        nl: NL,
    },
}

#[derive(Subcommand, Debug)]
pub enum HomologyField {
    Q(NL),
    Ss {
        #[arg(long)]
        p: u64,
        #[command(flatten)]
        nl: NL,
    },
}

fn curve_json(c: &CurveFp) -> Value {
    json!({ "p": text(c.p()), "A": text(c.a()), "B": text(c.b()) })
}

/// Evaluates every command except `verify-paper`.
pub fn evaluate(command: &Command) -> kdiv_core::Result<Value> {
    Ok(match command {
        Command::Bernoulli { m } => json!({ "m": text(m), "bernoulli": text(bernoulli(*m)) }),
        Command::ZetaQ { n } => json!({ "n": text(n), "zeta_q": text(zeta_q_neg(*n)?) }),
        Command::Wn { n, l: None } => {
            let w = wn_q(*n)?;
            let factors: serde_json::Map<String, Value> =
                w.factors.iter().map(|(p, e)| (p.to_string(), text(e))).collect();
            json!({ "n": text(n), "wn": text(&w.value), "factors": factors })
        }
        Command::Wn { n, l: Some(l) } => json!({ "n": text(n), "local": lpower(&wn_ql(*n, *l)?) }),
        Command::Dnl { field } => match field {
            DnlField::Q(nl) => order(&dnl_q(nl.n, nl.l)?),
            DnlField::Ff { curve, nl } => {
                let c = curve.build()?;
                let mut out = order(&dnl_ff(&weil_zeta(&c), nl.n, nl.l)?);
                out["curve"] = curve_json(&c);
                out
            }
            DnlField::Ss { p, nl } => order(&dnl_ss(*p, nl.n, nl.l)?),
        },
        Command::Curve { curve, query } => {
            let c = curve.build()?;
            let mut out = json!({ "curve": curve_json(&c) });
            match query {
                CurveQuery::Count => out["count"] = text(count_points(&c)),
                CurveQuery::Trace => out["trace"] = text(trace(&c)),
                CurveQuery::Supersingular => out["supersingular"] = json!(is_supersingular(&c)),
                CurveQuery::Zeta { n } => {
                    let z = weil_zeta(&c);
                    out["n"] = text(n);
                    out["zeta_x"] = text(zeta_x_at(&z, *n)?);
                    out["zeta_f"] = text(zeta_f_at(&z, *n)?);
                }
            }
            out
        }
        Command::Split { field } => match field {
            SplitField::Q(nl) => verdict(&split_verdict_q(nl.n, nl.l)?),
            SplitField::Ff { curve, nl } => {
                let c = curve.build()?;
                verdict(&split_verdict_ff(&weil_zeta(&c), nl.n, nl.l)?)
            }
        },
        Command::Homology { field } => match field {
            HomologyField::Q(nl) => verdict(&homology_kernel_q(nl.n, nl.l)?),
            HomologyField::Ss { p, nl } => verdict(&homology_kernel_ss(*p, nl.n, nl.l)?),
        },
        Command::Moore { local, global, l } => {
            json!({ "quotient": lpower(&moore_quotient(local, global, *l)?) })
        }
        Command::VerifyPaper => unreachable!("verify-paper is handled by the report module"),
    })
}
