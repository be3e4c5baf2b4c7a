//! Weights, weighted lengths and multitypes.
//!
//! A [`Weight`] assigns a rational in `[0, 1/2]` to each variable. The
//! classical presentation lists weights as a nonincreasing tuple; here the
//! per-variable assignment is primary and the tuple is recovered by
//! [`Weight::sorted`]. Comparisons and multitypes always use the sorted view.

use std::cmp::Ordering;
use std::fmt;

use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::polyring::{fmt_rational, rat, MultiIndex, Polynomial, Rational, Substitution};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Weight {
    per_variable: Vec<Rational>,
}

impl Weight {
    /// Entries must lie in `[0, 1/2]`.
    pub fn new(per_variable: Vec<Rational>) -> Result<Self> {
        let half = rat(1, 2);
        if let Some(bad) = per_variable
            .iter()
            .find(|r| **r < Rational::zero() || **r > half)
        {
            return Err(Error::InvalidInput(format!(
                "weight entry {} outside [0, 1/2]",
                fmt_rational(bad)
            )));
        }
        Ok(Weight { per_variable })
    }

    pub fn uniform(nvars: usize, value: Rational) -> Result<Self> {
        Self::new(vec![value; nvars])
    }

    /// Shorthand for tests and examples: `Weight::from_ratios(&[(1, 2), (1, 6), (1, 6)])`.
    pub fn from_ratios(entries: &[(i64, i64)]) -> Self {
        Self::new(entries.iter().map(|&(p, q)| rat(p, q)).collect())
            .expect("weight entries must lie in [0, 1/2]")
    }

    pub fn nvars(&self) -> usize {
        self.per_variable.len()
    }

    pub fn per_variable(&self) -> &[Rational] {
        &self.per_variable
    }

    pub fn of(&self, var: usize) -> &Rational {
        &self.per_variable[var]
    }

    /// Entries in nonincreasing order.
    pub fn sorted(&self) -> Vec<Rational> {
        let mut v = self.per_variable.clone();
        v.sort_by(|a, b| b.cmp(a));
        v
    }

    /// Copy with `var` reassigned.
    pub fn with(&self, var: usize, value: Rational) -> Result<Self> {
        let mut v = self.per_variable.clone();
        v[var] = value;
        Self::new(v)
    }

    pub fn fmt_sorted(&self) -> String {
        fmt_tuple(&self.sorted())
    }

    pub fn fmt_per_variable(&self) -> String {
        fmt_tuple(&self.per_variable)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.fmt_sorted())
    }
}

fn fmt_tuple(v: &[Rational]) -> String {
    let parts: Vec<String> = v.iter().map(fmt_rational).collect();
    format!("({})", parts.join(", "))
}

/// Multitype entries `m_j = 1/μ_j`, nondecreasing.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Multitype {
    pub entries: Vec<Rational>,
}

impl fmt::Display for Multitype {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", fmt_tuple(&self.entries))
    }
}

/// Outcome of [`validate_weight`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum WeightCheck {
    Valid,
    Invalid(String),
}

impl WeightCheck {
    pub fn is_valid(&self) -> bool {
        matches!(self, WeightCheck::Valid)
    }
}

/// Checks a weight against the definition, using its sorted view.
pub fn validate_weight(w: &Weight) -> WeightCheck {
    validate_weight_tuple(&w.sorted())
}

/// Checks an explicitly ordered tuple `(μ_1, …, μ_n)`: nonincreasing, entries in
/// `(0, 1/2]`, and for every `t` some `a ∈ ℕ^t` with `a_t > 0` and `Σ a_j μ_j = 1`.
pub fn validate_weight_tuple(mu: &[Rational]) -> WeightCheck {
    let half = rat(1, 2);
    for (t, m) in mu.iter().enumerate() {
        if *m <= Rational::zero() {
            return WeightCheck::Invalid(format!("entry {} is {} (not positive)", t + 1, fmt_rational(m)));
        }
        if *m > half {
            return WeightCheck::Invalid(format!("entry {} exceeds 1/2", t + 1));
        }
        if t > 0 && mu[t - 1] < *m {
            return WeightCheck::Invalid(format!(
                "entries {} and {} are increasing ({} < {})",
                t,
                t + 1,
                fmt_rational(&mu[t - 1]),
                fmt_rational(m)
            ));
        }
    }
    for t in 0..mu.len() {
        if !has_unit_combination(&mu[..=t]) {
            return WeightCheck::Invalid(format!(
                "no nonnegative integer combination of entries 1..={} with positive last coefficient sums to 1",
                t + 1
            ));
        }
    }
    WeightCheck::Valid
}

/// Is there `a ∈ ℕ^t`, `a_t > 0`, with `Σ a_j μ_j = 1`? Bounded search over a
/// common denominator; every `a_j ≤ 1/μ_t` since the entries are nonincreasing.
fn has_unit_combination(mu: &[Rational]) -> bool {
    let den = mu
        .iter()
        .fold(num_bigint::BigInt::one(), |acc, m| acc.lcm(m.denom()));
    let Some(total) = den.to_usize() else {
        return false;
    };
    let ints: Vec<usize> = mu
        .iter()
        .map(|m| (m * Rational::from_integer(den.clone())).to_integer().to_usize().unwrap())
        .collect();
    let last = *ints.last().unwrap();
    // reachable[s]: s is a sum of the first t entries with arbitrary multiplicities
    let mut reachable = vec![false; total + 1];
    reachable[0] = true;
    let mut seen = std::collections::BTreeSet::new();
    for &v in &ints {
        if !seen.insert(v) {
            continue;
        }
        for s in v..=total {
            if reachable[s - v] {
                reachable[s] = true;
            }
        }
    }
    (1..=total / last).any(|k| reachable[total - k * last])
}

/// Lexicographic comparison of sorted views.
pub fn lex_compare(a: &Weight, b: &Weight) -> Result<Ordering> {
    Error::check_dim(a.nvars(), b.nvars())?;
    Ok(a.sorted().cmp(&b.sorted()))
}

/// `|α|_Λ = Σ α_j μ_j`.
pub fn weighted_length(m: &MultiIndex, w: &Weight) -> Result<Rational> {
    Error::check_dim(w.nvars(), m.nvars())?;
    Ok(weighted_length_unchecked(m, w))
}

pub(crate) fn weighted_length_unchecked(m: &MultiIndex, w: &Weight) -> Rational {
    m.exponents()
        .iter()
        .zip(w.per_variable())
        .filter(|(e, _)| **e > 0)
        .map(|(&e, mu)| mu * Rational::from_integer(e.into()))
        .sum()
}

/// True when every term of `p` has weighted length exactly `degree`.
pub fn is_homogeneous(p: &Polynomial, w: &Weight, degree: &Rational) -> bool {
    p.terms()
        .all(|(m, _)| weighted_length_unchecked(m, w) == *degree)
}

/// Smallest weighted length of a term; `None` for zero.
pub fn weighted_order(p: &Polynomial, w: &Weight) -> Option<Rational> {
    p.terms().map(|(m, _)| weighted_length_unchecked(m, w)).min()
}

pub fn multitype_of(w: &Weight) -> Result<Multitype> {
    let sorted = w.sorted();
    if sorted.iter().any(|m| m.is_zero()) {
        return Err(Error::InfiniteType(format!(
            "weight {} has a zero entry",
            w.fmt_sorted()
        )));
    }
    Ok(Multitype {
        entries: sorted.iter().map(|m| m.recip()).collect(),
    })
}

/// Each step's shift must be homogeneous of the weight of its target variable.
pub fn check_homogeneous_substitution(s: &Substitution, w: &Weight) -> bool {
    s.steps.iter().all(|step| {
        step.shift.nvars() == w.nvars()
            && step.target < w.nvars()
            && is_homogeneous(&step.shift, w, w.of(step.target))
    })
}
