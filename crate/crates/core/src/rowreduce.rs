//! Weighted-homogeneous changes of variables by row reduction of the complex
//! Jacobian matrix.
//!
//! For a leading ideal `(h_1, …, h_N)` that is homogeneous of weighted degree
//! 1/2, a relation `∂h_i/∂z_k = Σ_c γ_c ∂h_i/∂z_c` with each `γ_c` homogeneous
//! of weighted degree `λ_c − λ_k` yields the substitution
//! `z̃_c = z_c + ∫_0^{z_k} γ_c`, which removes `z_k` from the `k`-th entry of
//! column `i`. Relations are found by an exact linear solve over a finite
//! monomial ansatz. Every row used as a pivot ("central row") is retired for
//! the rest of the reduction.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use num_traits::Zero;

use crate::error::Result;
use crate::polyring::{
    solve_linear, Coefficient, MultiIndex, Polynomial, Rational, Substitution, SubstitutionStep,
};
use crate::sos_oracle::{determinant, levi_from_jacobian};
use crate::weights::{check_homogeneous_substitution, Weight};

/// `entries[ℓ][i] = ∂h_i/∂z_ℓ`; rows are variables, columns generators.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct JacobianMatrix {
    entries: Vec<Vec<Polynomial>>,
}

impl JacobianMatrix {
    pub fn nrows(&self) -> usize {
        self.entries.len()
    }

    pub fn ncols(&self) -> usize {
        self.entries.first().map_or(0, |r| r.len())
    }

    pub fn entry(&self, row: usize, col: usize) -> &Polynomial {
        &self.entries[row][col]
    }

    pub fn row(&self, row: usize) -> &[Polynomial] {
        &self.entries[row]
    }

    pub fn row_is_zero(&self, row: usize) -> bool {
        self.entries[row].iter().all(|p| p.is_zero())
    }

    pub fn nonzero_rows(&self) -> Vec<usize> {
        (0..self.nrows()).filter(|&r| !self.row_is_zero(r)).collect()
    }

    pub fn nonzero_columns(&self) -> usize {
        (0..self.ncols())
            .filter(|&c| self.entries.iter().any(|r| !r[c].is_zero()))
            .count()
    }
}

pub fn jacobian(gens: &[Polynomial]) -> Result<JacobianMatrix> {
    let n = gens.first().map_or(0, |g| g.nvars());
    let entries = (0..n)
        .map(|l| gens.iter().map(|g| g.partial_derivative(l)).collect())
        .collect::<Result<_>>()?;
    Ok(JacobianMatrix { entries })
}

/// Rows and generators already used as pivots.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct CentralConstraints {
    pub rows: BTreeSet<usize>,
    pub generators: BTreeSet<(usize, usize)>,
}

impl CentralConstraints {
    pub fn allows(&self, row: usize, column: usize) -> bool {
        !self.rows.contains(&row) && !self.generators.contains(&(row, column))
    }
}

/// Certified relation `∂h_column/∂z_row = Σ_c γ_c ∂h_column/∂z_c`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DependenceWitness {
    pub row: usize,
    pub column: usize,
    pub coefficients: BTreeMap<usize, Polynomial>,
}

impl DependenceWitness {
    /// Re-checks the identity on the witnessed column of `j`.
    pub fn holds_on(&self, j: &JacobianMatrix, column: usize) -> bool {
        let n = j.nrows();
        let rhs = self
            .coefficients
            .iter()
            .fold(Polynomial::zero(n), |acc, (&c, g)| &acc + &(g * j.entry(c, column)));
        &rhs == j.entry(self.row, column)
    }

    pub fn centrals(&self) -> impl Iterator<Item = usize> + '_ {
        self.coefficients.keys().copied()
    }
}

/// All monomials of weighted length exactly `target` that avoid `excluded_var`.
pub fn homogeneous_monomials(w: &Weight, target: &Rational, excluded_var: usize) -> Vec<MultiIndex> {
    let allowed: Vec<usize> = (0..w.nvars()).filter(|&v| v != excluded_var).collect();
    monomials_over(w, target, &allowed)
}

fn monomials_over(w: &Weight, target: &Rational, vars: &[usize]) -> Vec<MultiIndex> {
    fn rec(
        w: &Weight,
        vars: &[usize],
        remaining: &Rational,
        current: &mut MultiIndex,
        out: &mut Vec<MultiIndex>,
    ) {
        if remaining.is_zero() {
            out.push(current.clone());
            return;
        }
        let Some((&v, rest)) = vars.split_first() else {
            return;
        };
        let mu = w.of(v);
        if mu.is_zero() {
            rec(w, rest, remaining, current, out);
            return;
        }
        let mut e = 0u32;
        let mut left = remaining.clone();
        loop {
            current.set(v, e);
            rec(w, rest, &left, current, out);
            left -= mu;
            if left < Rational::zero() {
                break;
            }
            e += 1;
        }
        current.set(v, 0);
    }

    if *target < Rational::zero() {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut current = MultiIndex::zero(w.nvars());
    rec(w, vars, target, &mut current, &mut out);
    out.sort();
    out
}

/// Variables in increasing weight, ties by decreasing index.
fn dependent_row_order(w: &Weight, rows: impl IntoIterator<Item = usize>) -> Vec<usize> {
    let mut v: Vec<usize> = rows.into_iter().collect();
    v.sort_by(|&a, &b| w.of(a).cmp(w.of(b)).then(b.cmp(&a)));
    v
}

/// Variables in decreasing weight, ties by increasing index.
fn central_order(w: &Weight, rows: impl IntoIterator<Item = usize>) -> Vec<usize> {
    let mut v: Vec<usize> = rows.into_iter().collect();
    v.sort_by(|&a, &b| w.of(b).cmp(w.of(a)).then(a.cmp(&b)));
    v
}

/// Central candidates for row `k` of `column`: other rows with a nonzero entry,
/// weight at least that of `z_k`, not yet retired.
fn central_candidates(
    j: &JacobianMatrix,
    column: usize,
    w: &Weight,
    forbidden: &CentralConstraints,
    k: usize,
) -> Vec<usize> {
    central_order(
        w,
        (0..j.nrows()).filter(|&c| {
            c != k
                && !j.entry(c, column).is_zero()
                && w.of(c) >= w.of(k)
                && forbidden.allows(c, column)
        }),
    )
}

/// Nonempty subsets of `items`, by size then lexicographically in the given order.
fn subsets_by_size(items: &[usize]) -> Vec<Vec<usize>> {
    fn choose(items: &[usize], size: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        for i in start..items.len() {
            cur.push(items[i]);
            choose(items, size, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    for size in 1..=items.len() {
        choose(items, size, 0, &mut Vec::new(), &mut out);
    }
    out
}

/// Solves for `γ_c`, `c ∈ centrals`, each homogeneous of degree `λ_c − λ_k` in
/// the variables of the leading ideal other than the centrals.
fn solve_ansatz(
    j: &JacobianMatrix,
    column: usize,
    w: &Weight,
    k: usize,
    centrals: &[usize],
) -> Option<DependenceWitness> {
    let allowed: Vec<usize> = j
        .nonzero_rows()
        .into_iter()
        .filter(|v| !centrals.contains(v))
        .collect();
    let mut unknowns: Vec<(usize, MultiIndex, Polynomial)> = Vec::new();
    for &c in centrals {
        let deg = w.of(c) - w.of(k);
        for m in monomials_over(w, &deg, &allowed) {
            let prod = &Polynomial::monomial(m.clone(), Coefficient::from_int(1)) * j.entry(c, column);
            unknowns.push((c, m, prod));
        }
    }
    if unknowns.is_empty() {
        return None;
    }
    let target = j.entry(k, column);
    let mut rows_of: BTreeMap<MultiIndex, usize> = BTreeMap::new();
    for m in target
        .terms()
        .map(|(m, _)| m)
        .chain(unknowns.iter().flat_map(|(_, _, p)| p.terms().map(|(m, _)| m)))
    {
        let next = rows_of.len();
        rows_of.entry(m.clone()).or_insert(next);
    }
    let mut matrix = vec![vec![Coefficient::zero(); unknowns.len()]; rows_of.len()];
    let mut rhs = vec![Coefficient::zero(); rows_of.len()];
    for (u, (_, _, p)) in unknowns.iter().enumerate() {
        for (m, c) in p.terms() {
            matrix[rows_of[m]][u] = c.clone();
        }
    }
    for (m, c) in target.terms() {
        rhs[rows_of[m]] = c.clone();
    }
    let x = solve_linear(&matrix, &rhs)?;

    let n = j.nrows();
    let mut coefficients: BTreeMap<usize, Polynomial> = BTreeMap::new();
    for ((c, m, _), value) in unknowns.iter().zip(x) {
        coefficients
            .entry(*c)
            .or_insert_with(|| Polynomial::zero(n))
            .add_term(m.clone(), value);
    }
    coefficients.retain(|_, g| !g.is_zero());
    let wit = DependenceWitness {
        row: k,
        column,
        coefficients,
    };
    debug_assert!(wit.holds_on(j, column));
    Some(wit)
}

/// Looks for `∂h_column/∂z_k = Σ γ_c ∂h_column/∂z_c` over the admissible centrals.
/// Smaller central sets are tried first.
pub fn find_dependent_row(
    j: &JacobianMatrix,
    column: usize,
    w: &Weight,
    forbidden: &CentralConstraints,
    candidate_k: usize,
) -> Option<DependenceWitness> {
    all_dependencies(j, column, w, forbidden, candidate_k).next()
}

fn all_dependencies<'a>(
    j: &'a JacobianMatrix,
    column: usize,
    w: &'a Weight,
    forbidden: &CentralConstraints,
    k: usize,
) -> impl Iterator<Item = DependenceWitness> + 'a {
    let candidates = if j.entry(k, column).is_zero() {
        Vec::new()
    } else {
        central_candidates(j, column, w, forbidden, k)
    };
    subsets_by_size(&candidates)
        .into_iter()
        .filter_map(move |set| solve_ansatz(j, column, w, k, &set))
}

/// One step `(c, ∫_0^{z_k} γ_c)` per nonzero coefficient.
pub fn witness_to_substitution(wit: &DependenceWitness) -> Result<Substitution> {
    let mut s = Substitution::identity();
    for (&c, gamma) in &wit.coefficients {
        s.push(SubstitutionStep::new(c, gamma.antiderivative(wit.row)?)?);
    }
    Ok(s)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum Strategy {
    /// Depth-first over relations in a fixed order; stops at the first
    /// fixpoint where more variables are absent than in the input.
    #[default]
    Greedy,
    /// Visits every reachable fixpoint and keeps one with the largest `d`.
    Exhaustive,
}

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct EliminationPlan {
    pub steps: Vec<(DependenceWitness, Substitution)>,
    pub used_central_rows: BTreeSet<usize>,
    pub used_central_generators: BTreeSet<(usize, usize)>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Elimination {
    pub new_gens: Vec<Polynomial>,
    pub total: Substitution,
    /// Number of variables absent from `new_gens`.
    pub d: usize,
    pub plan: EliminationPlan,
    /// The restricted Levi determinant was nonzero, so nothing was searched.
    pub fast_path: bool,
}

/// Number of variables absent from every generator.
pub fn absent_variables(gens: &[Polynomial]) -> usize {
    let n = gens.first().map_or(0, |g| g.nvars());
    let present: BTreeSet<usize> = gens.iter().flat_map(|g| g.variables()).collect();
    n - present.len()
}

/// Is `det A_{P|m}` nonzero, where `A = J J*` restricted to its nonzero rows?
pub fn restricted_levi_determinant_nonzero(gens: &[Polynomial]) -> Result<bool> {
    let j = jacobian(gens)?;
    let m = j.nonzero_rows().len();
    if m == 0 {
        return Ok(false);
    }
    // Cauchy-Binet: rank(J J*) ≤ number of nonzero columns
    if m > j.nonzero_columns() {
        return Ok(false);
    }
    let a = levi_from_jacobian(gens)?.restrict_nonzero();
    Ok(!determinant(&a)?.is_zero())
}

/// Every admissible relation reachable from the current state, in search order.
fn moves(
    gens: &[Polynomial],
    w: &Weight,
    constraints: &CentralConstraints,
    first_only: bool,
) -> Result<Vec<DependenceWitness>> {
    let j = jacobian(gens)?;
    let mut out = Vec::new();
    for column in 0..j.ncols() {
        let rows = dependent_row_order(w, (0..j.nrows()).filter(|&k| !j.entry(k, column).is_zero()));
        for k in rows {
            for wit in all_dependencies(&j, column, w, constraints, k) {
                out.push(wit);
                if first_only {
                    return Ok(out);
                }
            }
        }
    }
    Ok(out)
}

/// Any relation at all under `constraints` (the fixpoint test).
pub fn has_dependent_row(
    gens: &[Polynomial],
    w: &Weight,
    constraints: &CentralConstraints,
) -> Result<bool> {
    Ok(!moves(gens, w, constraints, true)?.is_empty())
}

#[derive(Clone)]
struct SearchState {
    gens: Vec<Polynomial>,
    total: Substitution,
    plan: EliminationPlan,
    constraints: CentralConstraints,
}

impl SearchState {
    fn apply(&self, wit: DependenceWitness) -> Result<SearchState> {
        let sub = witness_to_substitution(&wit)?;
        let mut next = self.clone();
        next.gens = sub.apply_all(&self.gens)?;
        next.total = self.total.then(&sub);
        for c in wit.centrals() {
            next.constraints.rows.insert(c);
            next.constraints.generators.insert((c, wit.column));
            next.plan.used_central_rows.insert(c);
            next.plan.used_central_generators.insert((c, wit.column));
        }
        next.plan.steps.push((wit, sub));
        Ok(next)
    }
}

/// Upper bound on states expanded by one reduction.
const NODE_LIMIT: usize = 5_000;

struct Search<'a> {
    w: &'a Weight,
    strategy: Strategy,
    root_d: usize,
    budget: usize,
    seen: HashSet<(Vec<Polynomial>, BTreeSet<usize>)>,
    best: Option<(usize, SearchState)>,
}

impl Search<'_> {
    /// Returns `true` once the greedy target is met.
    fn visit(&mut self, state: SearchState) -> Result<bool> {
        if self.budget == 0 || !self.seen.insert((state.gens.clone(), state.constraints.rows.clone())) {
            return Ok(false);
        }
        self.budget -= 1;
        let next = moves(&state.gens, self.w, &state.constraints, false)?;
        if next.is_empty() {
            let d = absent_variables(&state.gens);
            if self.best.as_ref().map_or(true, |(bd, _)| d > *bd) {
                self.best = Some((d, state));
            }
            return Ok(self.strategy == Strategy::Greedy && d > self.root_d);
        }
        for wit in next {
            if self.visit(state.apply(wit)?)? {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

/// Reduces the Jacobian of `leading_gens`. If the restricted Levi determinant
/// is nonzero no variable can be removed and the input is returned as is;
/// otherwise see [`search_elimination`].
pub fn eliminate_all(leading_gens: &[Polynomial], w: &Weight, strategy: Strategy) -> Result<Elimination> {
    if !leading_gens.is_empty() && restricted_levi_determinant_nonzero(leading_gens)? {
        return Ok(Elimination {
            new_gens: leading_gens.to_vec(),
            total: Substitution::identity(),
            d: absent_variables(leading_gens),
            plan: EliminationPlan::default(),
            fast_path: true,
        });
    }
    search_elimination(leading_gens, w, strategy)
}

/// Searches sequences of row reductions and returns the generators after one
/// that ends with no dependent row and more absent variables than at the
/// start. If there is none, the input is returned with the identity
/// substitution.
pub fn search_elimination(leading_gens: &[Polynomial], w: &Weight, strategy: Strategy) -> Result<Elimination> {
    let root = SearchState {
        gens: leading_gens.to_vec(),
        total: Substitution::identity(),
        plan: EliminationPlan::default(),
        constraints: CentralConstraints::default(),
    };
    let mut search = Search {
        w,
        strategy,
        root_d: absent_variables(leading_gens),
        budget: NODE_LIMIT,
        seen: HashSet::new(),
        best: None,
    };
    search.visit(root.clone())?;
    // a reduction that does not remove more variables is not applied
    let chosen = match search.best {
        Some((d, s)) if d > search.root_d => s,
        _ => root,
    };
    debug_assert!(check_homogeneous_substitution(&chosen.total, w));
    Ok(Elimination {
        d: absent_variables(&chosen.gens),
        new_gens: chosen.gens,
        total: chosen.total,
        plan: chosen.plan,
        fast_path: false,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::rat;

    fn z(n: usize, i: usize) -> Polynomial {
        Polynomial::var(n, i)
    }

    fn c(v: i64) -> Coefficient {
        Coefficient::from_int(v)
    }

    #[test]
    fn jacobian_of_linear_form() {
        let j = jacobian(&[&z(3, 0) - &z(3, 1)]).unwrap();
        assert_eq!(j.ncols(), 1);
        assert_eq!(j.entry(0, 0), &Polynomial::constant(3, c(1)));
        assert_eq!(j.entry(1, 0), &Polynomial::constant(3, c(-1)));
        assert!(j.entry(2, 0).is_zero());
    }

    #[test]
    fn jacobian_of_diagonal_ideal() {
        let j = jacobian(&[z(2, 0), z(2, 1).pow(2)]).unwrap();
        assert_eq!(j.entry(0, 0), &Polynomial::constant(2, c(1)));
        assert!(j.entry(0, 1).is_zero() && j.entry(1, 0).is_zero());
        assert_eq!(j.entry(1, 1), &z(2, 1).scale(&c(2)));
    }

    #[test]
    fn ansatz_monomials() {
        let w = Weight::from_ratios(&[(1, 4), (1, 8), (1, 8), (1, 8)]);
        let got = homogeneous_monomials(&w, &rat(1, 8), 0);
        assert_eq!(got, vec![MultiIndex::var(4, 1), MultiIndex::var(4, 2), MultiIndex::var(4, 3)]);
        assert_eq!(homogeneous_monomials(&w, &rat(0, 1), 2), vec![MultiIndex::zero(4)]);
        let w = Weight::from_ratios(&[(1, 4), (1, 8), (1, 16), (1, 8)]);
        assert_eq!(homogeneous_monomials(&w, &rat(1, 16), 3), vec![MultiIndex::var(4, 2)]);
        assert!(homogeneous_monomials(&w, &rat(-1, 16), 3).is_empty());
    }

    #[test]
    fn witness_becomes_substitution() {
        let n = 4;
        let wit = DependenceWitness {
            row: 3,
            column: 0,
            coefficients: [(0, z(n, 1))].into(),
        };
        let s = witness_to_substitution(&wit).unwrap();
        assert_eq!(s, Substitution::single(0, &z(n, 1) * &z(n, 3)).unwrap());
        let wit = DependenceWitness {
            row: 2,
            column: 1,
            coefficients: [(3, z(n, 2).scale(&c(-2)))].into(),
        };
        let s = witness_to_substitution(&wit).unwrap();
        assert_eq!(s, Substitution::single(3, -&z(n, 2).pow(2)).unwrap());
        let wit = DependenceWitness {
            row: 1,
            column: 0,
            coefficients: [(0, Polynomial::constant(3, c(-1)))].into(),
        };
        let s = witness_to_substitution(&wit).unwrap();
        assert_eq!(s, Substitution::single(0, -&z(3, 1)).unwrap());
    }

    #[test]
    fn diagonal_ideal_has_no_dependence() {
        let gens = [z(2, 0), z(2, 1).pow(2)];
        let w = Weight::from_ratios(&[(1, 2), (1, 4)]);
        let j = jacobian(&gens).unwrap();
        for k in 0..2 {
            for col in 0..2 {
                assert!(find_dependent_row(&j, col, &w, &CentralConstraints::default(), k).is_none());
            }
        }
        let e = eliminate_all(&gens, &w, Strategy::Greedy).unwrap();
        assert!(e.fast_path);
        assert_eq!(e.d, 0);
        assert!(e.total.is_identity());
        assert_eq!(e.new_gens, gens);
    }

    #[test]
    fn linear_form_eliminates_two_variables() {
        let gens = [&z(3, 0) - &z(3, 1)];
        let w = Weight::from_ratios(&[(1, 2); 3]);
        let e = eliminate_all(&gens, &w, Strategy::Greedy).unwrap();
        assert_eq!(e.new_gens, vec![z(3, 0)]);
        assert_eq!(e.total, Substitution::single(0, -&z(3, 1)).unwrap());
        assert_eq!(e.d, 2);
    }

    #[test]
    fn forbidden_central_blocks_relation() {
        let gens = [&z(2, 0) - &z(2, 1)];
        let w = Weight::from_ratios(&[(1, 2); 2]);
        let j = jacobian(&gens).unwrap();
        let mut forbid = CentralConstraints::default();
        assert!(find_dependent_row(&j, 0, &w, &forbid, 1).is_some());
        forbid.rows.insert(0);
        assert!(find_dependent_row(&j, 0, &w, &forbid, 1).is_none());
    }
}
