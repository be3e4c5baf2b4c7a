use std::cmp::Ordering;
use std::fmt;
use std::ops::Add;

/// Exponent vector of a monomial `z^α`.
///
/// The ordering is the canonical display order: lower total degree first, and
/// within one degree the reverse-lexicographically larger monomial first
/// (`z1^2`, `z1*z2`, `z2^2`, ...).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MultiIndex(Vec<u32>);

impl MultiIndex {
    pub fn new(exponents: Vec<u32>) -> Self {
        MultiIndex(exponents)
    }

    pub fn zero(nvars: usize) -> Self {
        MultiIndex(vec![0; nvars])
    }

    /// `z_var` in `nvars` variables.
    pub fn var(nvars: usize, var: usize) -> Self {
        let mut e = vec![0; nvars];
        e[var] = 1;
        MultiIndex(e)
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn get(&self, var: usize) -> u32 {
        self.0[var]
    }

    pub fn set(&mut self, var: usize, e: u32) {
        self.0[var] = e;
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_constant(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn involves(&self, var: usize) -> bool {
        self.0[var] > 0
    }

    /// Indices of variables with a positive exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
    }

    pub fn divides(&self, other: &MultiIndex) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn fmt_with(&self, names: &[String]) -> String {
        let parts: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| {
                if e == 1 {
                    names[i].clone()
                } else {
                    format!("{}^{}", names[i], e)
                }
            })
            .collect();
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

impl Add for &MultiIndex {
    type Output = MultiIndex;
    fn add(self, o: &MultiIndex) -> MultiIndex {
        debug_assert_eq!(self.0.len(), o.0.len());
        MultiIndex(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }
}

impl Ord for MultiIndex {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| {
                // reverse lex: the smaller exponent in the last differing slot ranks higher
                for (a, b) in self.0.iter().zip(&other.0).rev() {
                    match a.cmp(b) {
                        Ordering::Equal => continue,
                        ord => return ord,
                    }
                }
                Ordering::Equal
            })
            .then_with(|| self.0.len().cmp(&other.0.len()))
    }
}

impl PartialOrd for MultiIndex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.fmt_with(&default_names(self.nvars())))
    }
}

/// `z1, ..., zn`.
pub fn default_names(nvars: usize) -> Vec<String> {
    (1..=nvars).map(|i| format!("z{i}")).collect()
}
