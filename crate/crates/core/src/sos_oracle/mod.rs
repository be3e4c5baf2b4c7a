//! The multitype computation redone on the expanded real polynomial
//! `Σ |f_k|²`, plus Levi matrices and determinants. Used to cross-check the
//! ideal-level driver.

mod levi;
mod mixed;

use std::collections::BTreeSet;

use log::debug;
use num_traits::{One, Zero};

pub use levi::{determinant, levi, levi_from_jacobian, paired_row_col_op, LeviMatrix};
pub use mixed::{expand_sos, leading_mixed, pair_length, MixedIndex, MixedPolynomial};

use crate::cli::RunConfig;
use crate::error::{Error, Result};
use crate::kolar::{advance_weight, leading_ideal, prepare, MultitypeReport, StepTrace};
use crate::polyring::{rat, MultiIndex, Polynomial, Rational, Substitution};
use crate::rowreduce::eliminate_all;
use crate::weights::{multitype_of, Weight};

/// `(1 − Σ_L (γ_i+γ̂_i) μ_i) / Σ_{i∉L} (γ_i+γ̂_i)`, or `None` when the
/// numerator is not positive or the denominator vanishes.
pub fn w_value_mixed(pair: &MixedIndex, leading_vars: &BTreeSet<usize>, w: &Weight) -> Option<Rational> {
    let (holo, anti) = pair;
    let mut prefix = Rational::zero();
    let mut rest = 0u32;
    for v in 0..w.nvars() {
        let e = holo.get(v) + anti.get(v);
        if leading_vars.contains(&v) {
            prefix += w.of(v) * Rational::from_integer(e.into());
        } else {
            rest += e;
        }
    }
    let num = Rational::one() - prefix;
    (num > Rational::zero() && rest > 0).then(|| num / Rational::from_integer(rest.into()))
}

/// Which variables a monomial uses relative to the leading set.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Gamma {
    /// Only non-leading variables.
    Gamma1,
    /// Both kinds.
    Gamma2,
    /// Only leading variables.
    Gamma3,
}

pub fn classify_monomial(m: &MultiIndex, leading_vars: &BTreeSet<usize>) -> Result<Gamma> {
    if m.is_constant() {
        return Err(Error::ConstantMonomial);
    }
    let (lead, other): (Vec<usize>, Vec<usize>) = m.support().partition(|v| leading_vars.contains(v));
    Ok(match (lead.is_empty(), other.is_empty()) {
        (true, _) => Gamma::Gamma1,
        (false, true) => Gamma::Gamma3,
        (false, false) => Gamma::Gamma2,
    })
}

/// Classification of `z^α z̄^α̂` by the union of its supports.
pub fn classify_pair(pair: &MixedIndex, leading_vars: &BTreeSet<usize>) -> Result<Gamma> {
    classify_monomial(&(&pair.0 + &pair.1), leading_vars)
}

/// Report of the mixed run together with the leading polynomial of every step
/// and the ideal-level leading generators it was derived alongside.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MixedRun {
    pub report: MultitypeReport,
    pub leading_polynomials: Vec<MixedPolynomial>,
}

pub fn run_mixed_kolar(gens: &[Polynomial], config: &RunConfig) -> Result<MultitypeReport> {
    run_mixed_kolar_traced(gens, config).map(|r| r.report)
}

/// The weight sequence computed on `P = Σ |f_k|²`. Changes of variables are
/// taken from the row reduction of the holomorphic leading ideal; everything
/// else (start weight, leading part, Θ, W) is read off `P`.
pub fn run_mixed_kolar_traced(gens: &[Polynomial], config: &RunConfig) -> Result<MixedRun> {
    let mut gens = prepare(gens, config)?;
    let mut p = expand_sos(&gens)?;
    let n = p.nvars();
    let min_degree = p
        .terms()
        .map(|((a, b), _)| a.degree() + b.degree())
        .min()
        .ok_or_else(|| Error::DegenerateInput("all generators vanish identically".into()))?;
    let mut w = Weight::uniform(n, rat(1, min_degree.into()))?;
    let mut total = Substitution::identity();
    let mut traces = Vec::new();
    let mut leading_polynomials = Vec::new();

    for step in 1.. {
        if step > config.max_steps {
            return Err(Error::Nontermination(config.max_steps));
        }
        let elim = eliminate_all(&leading_ideal(&gens, &w), &w, config.strategy)?;
        gens = elim.total.apply_all(&gens)?;
        p = p.substitute(&elim.total.steps)?;
        total = total.then(&elim.total);

        let lead = leading_mixed(&p, &w);
        let leading_vars = lead.variables();
        let d = n - leading_vars.len();
        leading_polynomials.push(lead);
        debug!("mixed step {step}: weight {}, d = {d}", w.fmt_per_variable());

        let mut trace = StepTrace {
            step,
            weight: w.clone(),
            leading_ideal: leading_ideal(&gens, &w),
            substitution: elim.total,
            d,
            theta_size: 0,
            w_max: None,
        };
        if d == 0 {
            let model_ideal = trace.leading_ideal.clone();
            traces.push(trace);
            return Ok(MixedRun {
                report: MultitypeReport {
                    multitype: multitype_of(&w)?,
                    final_weight: w,
                    model_ideal,
                    traces,
                    total_substitution: total,
                },
                leading_polynomials,
            });
        }
        let one = Rational::one();
        let values: Vec<Rational> = p
            .terms()
            .filter(|(pair, _)| pair_length(pair, &w) != one)
            .filter_map(|(pair, _)| w_value_mixed(pair, &leading_vars, &w))
            .collect();
        trace.theta_size = values.len();
        trace.w_max = values.into_iter().max();
        let w_max = trace.w_max.clone();
        traces.push(trace);
        let Some(w_max) = w_max else {
            return Err(Error::InfiniteType(format!(
                "no admissible pair bounds the weight of {d} variable(s) at step {step}"
            )));
        };
        w = advance_weight(&w, &leading_vars, &w_max)?;
    }
    unreachable!("the step loop only exits by returning")
}
