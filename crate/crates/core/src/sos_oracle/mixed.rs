use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::polyring::{default_names, Coefficient, MultiIndex, Polynomial, Rational, SubstitutionStep};
use crate::weights::{weighted_length_unchecked, Weight};

/// Exponent pair `(α, α̂)` of a monomial `z^α z̄^α̂`.
pub type MixedIndex = (MultiIndex, MultiIndex);

/// Polynomial in `z` and `z̄` with Gaussian-rational coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MixedPolynomial {
    nvars: usize,
    terms: BTreeMap<MixedIndex, Coefficient>,
}

impl MixedPolynomial {
    pub fn zero(nvars: usize) -> Self {
        MixedPolynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(
            (MultiIndex::zero(nvars), MultiIndex::zero(nvars)),
            Coefficient::one(),
        );
        p
    }

    pub fn from_holomorphic(p: &Polynomial) -> Self {
        let n = p.nvars();
        MixedPolynomial {
            nvars: n,
            terms: p
                .terms()
                .map(|(m, c)| ((m.clone(), MultiIndex::zero(n)), c.clone()))
                .collect(),
        }
    }

    /// `conj(p(z))`, a polynomial in `z̄` only.
    pub fn from_antiholomorphic(p: &Polynomial) -> Self {
        Self::from_holomorphic(p).conj()
    }

    /// `p · conj(q)`.
    pub fn product_with_conj(p: &Polynomial, q: &Polynomial) -> Self {
        let mut out = Self::zero(p.nvars());
        for (a, ca) in p.terms() {
            for (b, cb) in q.terms() {
                out.add_term((a.clone(), b.clone()), ca * &cb.conj());
            }
        }
        out
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

    pub fn terms(&self) -> impl Iterator<Item = (&MixedIndex, &Coefficient)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, holo: &MultiIndex, anti: &MultiIndex) -> Coefficient {
        self.terms
            .get(&(holo.clone(), anti.clone()))
            .cloned()
            .unwrap_or_default()
    }

    pub fn add_term(&mut self, idx: MixedIndex, c: Coefficient) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(idx) {
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

    /// Swaps `z` and `z̄` and conjugates coefficients.
    pub fn conj(&self) -> Self {
        MixedPolynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|((a, b), c)| ((b.clone(), a.clone()), c.conj()))
                .collect(),
        }
    }

    /// Coefficient at `(α, α̂)` is the conjugate of the one at `(α̂, α)`.
    pub fn is_real(&self) -> bool {
        *self == self.conj()
    }

    /// Any purely holomorphic or purely antiholomorphic term (constants included).
    pub fn has_pluriharmonic_terms(&self) -> bool {
        self.terms
            .keys()
            .any(|(a, b)| a.is_constant() || b.is_constant())
    }

    /// Variables occurring in `z` or `z̄`.
    pub fn variables(&self) -> BTreeSet<usize> {
        self.terms
            .keys()
            .flat_map(|(a, b)| a.support().chain(b.support()).collect::<Vec<_>>())
            .collect()
    }

    pub fn scale(&self, c: &Coefficient) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        MixedPolynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(k, a)| (k.clone(), a * c)).collect(),
        }
    }

    pub fn checked_add(&self, o: &Self) -> Result<Self> {
        Error::check_dim(self.nvars, o.nvars)?;
        let mut out = self.clone();
        for (k, c) in &o.terms {
            out.add_term(k.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_mul(&self, o: &Self) -> Result<Self> {
        Error::check_dim(self.nvars, o.nvars)?;
        let mut out = Self::zero(self.nvars);
        for ((a1, b1), c1) in &self.terms {
            for ((a2, b2), c2) in &o.terms {
                out.add_term((a1 + a2, b1 + b2), c1 * c2);
            }
        }
        Ok(out)
    }

    /// `∂/∂z_var`.
    pub fn d_holo(&self, var: usize) -> Self {
        self.derive(var, true)
    }

    /// `∂/∂z̄_var`.
    pub fn d_anti(&self, var: usize) -> Self {
        self.derive(var, false)
    }

    fn derive(&self, var: usize, holo: bool) -> Self {
        let mut out = Self::zero(self.nvars);
        for ((a, b), c) in &self.terms {
            let m = if holo { a } else { b };
            let e = m.get(var);
            if e == 0 {
                continue;
            }
            let mut dm = m.clone();
            dm.set(var, e - 1);
            let key = if holo {
                (dm, b.clone())
            } else {
                (a.clone(), dm)
            };
            out.add_term(key, c * &Coefficient::from_int(e as i64));
        }
        out
    }

    /// Rewrites in the coordinates `z̃_i = z_i + h`: `z_i ↦ z_i − h`, `z̄_i ↦ z̄_i − h̄`.
    pub fn substitute_step(&self, step: &SubstitutionStep) -> Result<Self> {
        let i = step.target;
        if step.shift.involves(i) {
            return Err(Error::InvalidSubstitution { target: i });
        }
        Error::check_dim(self.nvars, step.shift.nvars())?;
        let q = Self::from_holomorphic(&(&Polynomial::var(self.nvars, i) - &step.shift));
        let qbar = q.conj();
        let mut holo_pow: HashMap<u32, Self> = HashMap::new();
        let mut anti_pow: HashMap<u32, Self> = HashMap::new();
        let mut out = Self::zero(self.nvars);
        for ((a, b), c) in &self.terms {
            let (ea, eb) = (a.get(i), b.get(i));
            let mut ra = a.clone();
            ra.set(i, 0);
            let mut rb = b.clone();
            rb.set(i, 0);
            let mut rest = Self::zero(self.nvars);
            rest.add_term((ra, rb), c.clone());
            let qa = holo_pow.entry(ea).or_insert_with(|| power(&q, ea)).clone();
            let qb = anti_pow.entry(eb).or_insert_with(|| power(&qbar, eb)).clone();
            out = &out + &(&(&rest * &qa) * &qb);
        }
        Ok(out)
    }

    pub fn substitute(&self, steps: &[SubstitutionStep]) -> Result<Self> {
        steps.iter().try_fold(self.clone(), |acc, s| acc.substitute_step(s))
    }

    pub fn fmt_with(&self, names: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let conj_names: Vec<String> = names.iter().map(|n| format!("conj({n})")).collect();
        let mut s = String::new();
        for (idx, ((a, b), c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative_display();
            let mag = if neg { -c } else { c.clone() };
            s.push_str(match (idx == 0, neg) {
                (true, true) => "-",
                (true, false) => "",
                (false, true) => " - ",
                (false, false) => " + ",
            });
            let mut factors = Vec::new();
            if !mag.is_one() || (a.is_constant() && b.is_constant()) {
                factors.push(mag.to_string());
            }
            if !a.is_constant() {
                factors.push(a.fmt_with(names));
            }
            if !b.is_constant() {
                factors.push(b.fmt_with(&conj_names));
            }
            s.push_str(&factors.join("*"));
        }
        s
    }
}

fn power(p: &MixedPolynomial, e: u32) -> MixedPolynomial {
    let mut acc = MixedPolynomial::one(p.nvars());
    for _ in 0..e {
        acc = &acc * p;
    }
    acc
}

impl fmt::Display for MixedPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.fmt_with(&default_names(self.nvars)))
    }
}

impl Add for &MixedPolynomial {
    type Output = MixedPolynomial;
    fn add(self, o: &MixedPolynomial) -> MixedPolynomial {
        self.checked_add(o).expect("variable count mismatch")
    }
}

impl Sub for &MixedPolynomial {
    type Output = MixedPolynomial;
    fn sub(self, o: &MixedPolynomial) -> MixedPolynomial {
        self.checked_add(&-o).expect("variable count mismatch")
    }
}

impl Mul for &MixedPolynomial {
    type Output = MixedPolynomial;
    fn mul(self, o: &MixedPolynomial) -> MixedPolynomial {
        self.checked_mul(o).expect("variable count mismatch")
    }
}

impl Neg for &MixedPolynomial {
    type Output = MixedPolynomial;
    fn neg(self) -> MixedPolynomial {
        self.scale(&Coefficient::from_int(-1))
    }
}

/// `Σ |f_k|²`, expanded exactly.
pub fn expand_sos(gens: &[Polynomial]) -> Result<MixedPolynomial> {
    let n = gens
        .first()
        .map(|g| g.nvars())
        .ok_or_else(|| Error::DegenerateInput("no generators".into()))?;
    let mut out = MixedPolynomial::zero(n);
    for g in gens {
        Error::check_dim(n, g.nvars())?;
        if g.has_constant_term() {
            return Err(Error::InvalidInput(format!("generator {g} has a constant term")));
        }
        out = &out + &MixedPolynomial::product_with_conj(g, g);
    }
    Ok(out)
}

/// Pair length `|(α, α̂)|_Λ = Σ (α_j + α̂_j) μ_j`.
pub fn pair_length(idx: &MixedIndex, w: &Weight) -> Rational {
    weighted_length_unchecked(&idx.0, w) + weighted_length_unchecked(&idx.1, w)
}

/// Terms of weighted length exactly one.
pub fn leading_mixed(p: &MixedPolynomial, w: &Weight) -> MixedPolynomial {
    let one = Rational::one();
    MixedPolynomial {
        nvars: p.nvars,
        terms: p
            .terms
            .iter()
            .filter(|(k, _)| pair_length(k, w) == one)
            .map(|(k, c)| (k.clone(), c.clone()))
            .collect(),
    }
}
