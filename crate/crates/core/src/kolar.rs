//! Ideal-level multitype computation.
//!
//! Starting from the Bloom-Graham weight, each step extracts the terms of
//! weighted length 1/2 (the leading ideal), reduces its Jacobian to remove as
//! many variables as possible, carries the resulting coordinates into the full
//! ideal and, if some variables are still absent, lowers their weight to the
//! largest admissible W-value.

use std::collections::BTreeSet;

use log::{debug, warn};
use num_traits::Zero;

use crate::cli::RunConfig;
use crate::error::{Error, Result};
use crate::polyring::{rat, vanishing_order, MultiIndex, Polynomial, Rational, Substitution};
use crate::rowreduce::{eliminate_all, Strategy};
use crate::weights::{multitype_of, weighted_length_unchecked, Multitype, Weight};

/// Driver state between steps.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct KolarState {
    pub generators: Vec<Polynomial>,
    pub weight: Weight,
    pub leading_vars: BTreeSet<usize>,
    pub finalized_vars: BTreeSet<usize>,
    pub step: usize,
    pub accumulated_substitution: Substitution,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StepTrace {
    pub step: usize,
    pub weight: Weight,
    /// Leading generators after this step's change of variables, zero ones dropped.
    pub leading_ideal: Vec<Polynomial>,
    pub substitution: Substitution,
    /// Variables absent from the leading ideal.
    pub d: usize,
    pub theta_size: usize,
    pub w_max: Option<Rational>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MultitypeReport {
    pub multitype: Multitype,
    pub final_weight: Weight,
    pub model_ideal: Vec<Polynomial>,
    pub traces: Vec<StepTrace>,
    pub total_substitution: Substitution,
}

impl MultitypeReport {
    pub fn nvars(&self) -> usize {
        self.final_weight.nvars()
    }
}

/// `(2·ord, (1/(2·ord), …))`.
pub fn bloom_graham(gens: &[Polynomial]) -> Result<(u32, Weight)> {
    let t = 2 * vanishing_order(gens)?;
    let n = gens[0].nvars();
    Ok((t, Weight::uniform(n, rat(1, t.into()))?))
}

/// Weighted-degree-1/2 part of each generator; zero parts are dropped.
pub fn leading_ideal(gens: &[Polynomial], w: &Weight) -> Vec<Polynomial> {
    let half = rat(1, 2);
    gens.iter()
        .map(|g| g.filter_terms(|m| weighted_length_unchecked(m, w) == half))
        .filter(|g| !g.is_zero())
        .collect()
}

fn restricted_length(m: &MultiIndex, vars: &BTreeSet<usize>, w: &Weight) -> Rational {
    vars.iter()
        .map(|&v| w.of(v) * Rational::from_integer(m.get(v).into()))
        .sum()
}

/// Residual monomials whose restriction to `leading_vars` is shorter than 1/2,
/// and the largest `(1/2 − Σ_L α_i μ_i) / Σ_{i∉L} α_i` among them.
pub fn theta_and_wmax(
    gens: &[Polynomial],
    leading_vars: &BTreeSet<usize>,
    w: &Weight,
) -> (Vec<MultiIndex>, Option<Rational>) {
    let half = rat(1, 2);
    let theta: BTreeSet<MultiIndex> = gens
        .iter()
        .flat_map(|g| g.terms().map(|(m, _)| m))
        .filter(|m| weighted_length_unchecked(m, w) != half)
        .filter(|m| restricted_length(m, leading_vars, w) < half)
        .cloned()
        .collect();
    let w_max = theta
        .iter()
        .filter_map(|m| {
            let rest: u32 = (0..m.nvars())
                .filter(|v| !leading_vars.contains(v))
                .map(|v| m.get(v))
                .sum();
            (rest > 0).then(|| {
                (&half - restricted_length(m, leading_vars, w)) / Rational::from_integer(rest.into())
            })
        })
        .max();
    (theta.into_iter().collect(), w_max)
}

/// Keeps `w` on `leading_vars` and sets every other variable to `w_max`.
pub fn advance_weight(w: &Weight, leading_vars: &BTreeSet<usize>, w_max: &Rational) -> Result<Weight> {
    if leading_vars.len() == w.nvars() {
        return Ok(w.clone());
    }
    if *w_max <= Rational::zero() {
        return Err(Error::InvalidAdvancement(format!("W = {w_max} is not positive")));
    }
    Weight::new(
        (0..w.nvars())
            .map(|v| {
                if leading_vars.contains(&v) {
                    w.of(v).clone()
                } else {
                    w_max.clone()
                }
            })
            .collect(),
    )
}

pub(crate) fn prepare(gens: &[Polynomial], config: &RunConfig) -> Result<Vec<Polynomial>> {
    let n = gens
        .first()
        .map(|g| g.nvars())
        .ok_or_else(|| Error::DegenerateInput("no generators".into()))?;
    for g in gens {
        Error::check_dim(n, g.nvars())?;
    }
    Ok(match config.truncation_order {
        Some(beta) => gens.iter().map(|g| g.truncate(beta)).collect(),
        None => gens.to_vec(),
    })
}

/// Upper bound on variables for the greedy/exhaustive comparison.
const CROSS_CHECK_MAX_VARS: usize = 6;

pub fn run(gens: &[Polynomial], config: &RunConfig) -> Result<MultitypeReport> {
    let gens = prepare(gens, config)?;
    let (bg, weight) = bloom_graham(&gens)?;
    debug!("Bloom-Graham type {bg}");
    let n = weight.nvars();
    let mut state = KolarState {
        generators: gens,
        weight,
        leading_vars: BTreeSet::new(),
        finalized_vars: BTreeSet::new(),
        step: 0,
        accumulated_substitution: Substitution::identity(),
    };
    let mut traces = Vec::new();
    loop {
        state.step += 1;
        if state.step > config.max_steps {
            return Err(Error::Nontermination(config.max_steps));
        }
        let lead = leading_ideal(&state.generators, &state.weight);
        let elim = eliminate_all(&lead, &state.weight, config.strategy)?;
        if config.cross_check && config.strategy == Strategy::Greedy && n <= CROSS_CHECK_MAX_VARS {
            let other = eliminate_all(&lead, &state.weight, Strategy::Exhaustive)?;
            if other.d != elim.d {
                warn!(
                    "step {}: greedy reduction leaves d = {}, exhaustive search finds d = {}",
                    state.step, elim.d, other.d
                );
            }
        }
        state.generators = elim.total.apply_all(&state.generators)?;
        state.accumulated_substitution = state.accumulated_substitution.then(&elim.total);
        let leading: Vec<Polynomial> = elim.new_gens.into_iter().filter(|g| !g.is_zero()).collect();
        state.leading_vars = leading.iter().flat_map(|g| g.variables()).collect();
        state.finalized_vars.extend(state.leading_vars.iter().copied());
        let d = n - state.leading_vars.len();
        debug!(
            "step {}: weight {}, substitution {}, d = {d}",
            state.step,
            state.weight.fmt_per_variable(),
            elim.total
        );

        if d == 0 {
            traces.push(StepTrace {
                step: state.step,
                weight: state.weight.clone(),
                leading_ideal: leading.clone(),
                substitution: elim.total,
                d,
                theta_size: 0,
                w_max: None,
            });
            return Ok(MultitypeReport {
                multitype: multitype_of(&state.weight)?,
                final_weight: state.weight,
                model_ideal: leading,
                traces,
                total_substitution: state.accumulated_substitution,
            });
        }

        let (theta, w_max) = theta_and_wmax(&state.generators, &state.leading_vars, &state.weight);
        traces.push(StepTrace {
            step: state.step,
            weight: state.weight.clone(),
            leading_ideal: leading,
            substitution: elim.total,
            d,
            theta_size: theta.len(),
            w_max: w_max.clone(),
        });
        let Some(w_max) = w_max else {
            return Err(Error::InfiniteType(format!(
                "no residual monomial bounds the weight of {d} variable(s) at step {}",
                state.step
            )));
        };
        state.weight = advance_weight(&state.weight, &state.leading_vars, &w_max)?;
    }
}

/// All leading generators are homogeneous of degree 1/2.
pub fn leading_ideal_is_homogeneous(trace: &StepTrace) -> bool {
    let half = rat(1, 2);
    trace
        .leading_ideal
        .iter()
        .all(|g| g.terms().all(|(m, _)| weighted_length_unchecked(m, &trace.weight) == half))
}
