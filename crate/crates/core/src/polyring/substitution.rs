use std::fmt;

use super::monomial::default_names;
use super::polynomial::Polynomial;
use crate::error::{Error, Result};

/// One coordinate change `z̃_target = z_target + shift`, all other coordinates fixed.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SubstitutionStep {
    pub target: usize,
    pub shift: Polynomial,
}

impl SubstitutionStep {
    pub fn new(target: usize, shift: Polynomial) -> Result<Self> {
        if target >= shift.nvars() {
            return Err(Error::VariableIndex {
                index: target,
                nvars: shift.nvars(),
            });
        }
        if shift.involves(target) {
            return Err(Error::InvalidSubstitution { target });
        }
        Ok(SubstitutionStep { target, shift })
    }

    pub fn inverse(&self) -> SubstitutionStep {
        SubstitutionStep {
            target: self.target,
            shift: -&self.shift,
        }
    }

    /// Rewrites `p` in the new coordinates: `z_target ↦ z_target − shift`.
    pub fn apply(&self, p: &Polynomial) -> Result<Polynomial> {
        if self.shift.involves(self.target) {
            return Err(Error::InvalidSubstitution {
                target: self.target,
            });
        }
        let replacement = &Polynomial::var(p.nvars(), self.target) - &self.shift;
        p.compose_var(self.target, &replacement)
    }

    pub fn fmt_with(&self, names: &[String]) -> String {
        format!(
            "{} -> {} + ({})",
            names[self.target],
            names[self.target],
            self.shift.fmt_with(names)
        )
    }
}

/// Ordered list of coordinate changes, applied first to last.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Substitution {
    pub steps: Vec<SubstitutionStep>,
}

impl Substitution {
    pub fn identity() -> Self {
        Substitution::default()
    }

    pub fn single(target: usize, shift: Polynomial) -> Result<Self> {
        Ok(Substitution {
            steps: vec![SubstitutionStep::new(target, shift)?],
        })
    }

    pub fn is_identity(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn push(&mut self, step: SubstitutionStep) {
        self.steps.push(step);
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &Substitution) -> Substitution {
        let mut steps = self.steps.clone();
        steps.extend(next.steps.iter().cloned());
        Substitution { steps }
    }

    /// Undoes `self`: reversed order, negated shifts.
    pub fn inverse(&self) -> Substitution {
        Substitution {
            steps: self.steps.iter().rev().map(|s| s.inverse()).collect(),
        }
    }

    pub fn apply(&self, p: &Polynomial) -> Result<Polynomial> {
        self.steps.iter().try_fold(p.clone(), |acc, s| s.apply(&acc))
    }

    pub fn apply_all(&self, gens: &[Polynomial]) -> Result<Vec<Polynomial>> {
        gens.iter().map(|g| self.apply(g)).collect()
    }

    pub fn fmt_with(&self, names: &[String]) -> String {
        if self.steps.is_empty() {
            return "identity".into();
        }
        self.steps
            .iter()
            .map(|s| s.fmt_with(names))
            .collect::<Vec<_>>()
            .join("; ")
    }
}

impl fmt::Display for Substitution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.steps.first().map(|s| s.shift.nvars()).unwrap_or(0);
        write!(f, "{}", self.fmt_with(&default_names(n)))
    }
}

/// Applies `s` to `p`; see [`Substitution::apply`].
pub fn substitute(p: &Polynomial, s: &Substitution) -> Result<Polynomial> {
    s.apply(p)
}
