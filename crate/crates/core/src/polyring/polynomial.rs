use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::coefficient::{rat_int, Coefficient};
use super::monomial::{default_names, MultiIndex};
use crate::error::{Error, Result};

/// Sparse polynomial in `nvars` variables with Gaussian-rational coefficients.
///
/// Terms are kept in canonical order and no stored coefficient is zero, so
/// structural equality is polynomial equality.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<MultiIndex, Coefficient>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Coefficient) -> Self {
        Self::monomial(MultiIndex::zero(nvars), c)
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Coefficient::one())
    }

    /// The coordinate function `z_var`.
    pub fn var(nvars: usize, var: usize) -> Self {
        Self::monomial(MultiIndex::var(nvars, var), Coefficient::one())
    }

    pub fn monomial(m: MultiIndex, c: Coefficient) -> Self {
        let nvars = m.nvars();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { nvars, terms }
    }

    /// Builds from `(exponents, coefficient)` pairs, merging duplicates.
    pub fn from_terms<I>(nvars: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (MultiIndex, Coefficient)>,
    {
        let mut p = Polynomial::zero(nvars);
        for (m, c) in terms {
            Error::check_dim(nvars, m.nvars())?;
            p.add_term(m, c);
        }
        Ok(p)
    }

    /// Convenience constructor from integer data, e.g. `[(vec![2, 0], 1), (vec![0, 2], -1)]`.
    pub fn from_int_terms(nvars: usize, terms: &[(Vec<u32>, i64)]) -> Self {
        Self::from_terms(
            nvars,
            terms
                .iter()
                .map(|(e, c)| (MultiIndex::new(e.clone()), Coefficient::from_int(*c))),
        )
        .expect("exponent vectors must have length nvars")
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&MultiIndex, &Coefficient)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &MultiIndex) -> Coefficient {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// First term in canonical order.
    pub fn leading_term(&self) -> Option<(&MultiIndex, &Coefficient)> {
        self.terms.iter().next()
    }

    pub fn add_term(&mut self, m: MultiIndex, c: Coefficient) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += &c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn involves(&self, var: usize) -> bool {
        self.terms.keys().any(|m| m.involves(var))
    }

    /// Variables occurring in some term.
    pub fn variables(&self) -> BTreeSet<usize> {
        self.terms.keys().flat_map(|m| m.support()).collect()
    }

    pub fn has_constant_term(&self) -> bool {
        self.terms.keys().any(|m| m.is_constant())
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.is_constant())
    }

    /// Lowest total degree of a stored term; `None` for zero.
    pub fn order(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.degree()).min()
    }

    pub fn checked_add(&self, o: &Polynomial) -> Result<Polynomial> {
        Error::check_dim(self.nvars, o.nvars)?;
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, o: &Polynomial) -> Result<Polynomial> {
        Error::check_dim(self.nvars, o.nvars)?;
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(m.clone(), -c);
        }
        Ok(out)
    }

    pub fn checked_mul(&self, o: &Polynomial) -> Result<Polynomial> {
        Error::check_dim(self.nvars, o.nvars)?;
        let mut out = Polynomial::zero(self.nvars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &o.terms {
                out.add_term(ma + mb, ca * cb);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Coefficient) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one(self.nvars);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Coefficient-wise complex conjugate.
    pub fn conj(&self) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.conj())).collect(),
        }
    }

    /// Divides by the coefficient of the first canonical term.
    pub fn monic(&self) -> Polynomial {
        match self.leading_term() {
            Some((_, c)) => self.scale(&c.inv().expect("stored coefficients are nonzero")),
            None => self.clone(),
        }
    }

    fn check_var(&self, var: usize) -> Result<()> {
        if var < self.nvars {
            Ok(())
        } else {
            Err(Error::VariableIndex {
                index: var,
                nvars: self.nvars,
            })
        }
    }

    pub fn partial_derivative(&self, var: usize) -> Result<Polynomial> {
        self.check_var(var)?;
        let mut out = Polynomial::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.get(var);
            if e == 0 {
                continue;
            }
            let mut dm = m.clone();
            dm.set(var, e - 1);
            out.add_term(dm, c * &Coefficient::from_int(e as i64));
        }
        Ok(out)
    }

    /// `∫_0^{z_var} p dt`: raises the exponent of `z_var` by one and divides by it.
    pub fn antiderivative(&self, var: usize) -> Result<Polynomial> {
        self.check_var(var)?;
        let mut out = Polynomial::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.get(var) + 1;
            let mut im = m.clone();
            im.set(var, e);
            out.add_term(im, c * &Coefficient::real(rat_int(1) / rat_int(e as i64)));
        }
        Ok(out)
    }

    /// Replaces `z_var` by `q` everywhere.
    pub fn compose_var(&self, var: usize, q: &Polynomial) -> Result<Polynomial> {
        self.check_var(var)?;
        Error::check_dim(self.nvars, q.nvars)?;
        // group by exponent of z_var
        let mut by_power: BTreeMap<u32, Polynomial> = BTreeMap::new();
        for (m, c) in &self.terms {
            let e = m.get(var);
            let mut rest = m.clone();
            rest.set(var, 0);
            by_power
                .entry(e)
                .or_insert_with(|| Polynomial::zero(self.nvars))
                .add_term(rest, c.clone());
        }
        let mut out = Polynomial::zero(self.nvars);
        let mut power = Polynomial::one(self.nvars);
        let mut current = 0;
        for (e, coeff) in by_power {
            while current < e {
                power = &power * q;
                current += 1;
            }
            out = &out + &(&coeff * &power);
        }
        Ok(out)
    }

    /// Drops every term of total degree above `degree`.
    pub fn truncate(&self, degree: u32) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() <= degree)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Keeps the terms selected by `keep`.
    pub fn filter_terms(&self, mut keep: impl FnMut(&MultiIndex) -> bool) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| keep(m))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn fmt_with(&self, names: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative_display();
            let mag = if neg { -c } else { c.clone() };
            match (idx == 0, neg) {
                (true, true) => s.push('-'),
                (true, false) => {}
                (false, true) => s.push_str(" - "),
                (false, false) => s.push_str(" + "),
            }
            if m.is_constant() {
                s.push_str(&mag.to_string());
            } else if mag.is_one() {
                s.push_str(&m.fmt_with(names));
            } else {
                s.push_str(&format!("{}*{}", mag, m.fmt_with(names)));
            }
        }
        s
    }
}

/// Minimum total degree over all terms of all generators.
pub fn vanishing_order(gens: &[Polynomial]) -> Result<u32> {
    if let Some(g) = gens.iter().find(|g| g.has_constant_term()) {
        return Err(Error::InvalidInput(format!(
            "generator {} has a constant term",
            g
        )));
    }
    gens.iter()
        .filter_map(|g| g.order())
        .min()
        .ok_or_else(|| Error::DegenerateInput("all generators are zero".into()))
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.fmt_with(&default_names(self.nvars)))
    }
}

// Operator forms panic on mismatched variable counts; use the `checked_*`
// methods when the inputs are not known to agree.

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, o: &Polynomial) -> Polynomial {
        self.checked_add(o).expect("variable count mismatch")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, o: &Polynomial) -> Polynomial {
        self.checked_sub(o).expect("variable count mismatch")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, o: &Polynomial) -> Polynomial {
        self.checked_mul(o).expect("variable count mismatch")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&Coefficient::from_int(-1))
    }
}
