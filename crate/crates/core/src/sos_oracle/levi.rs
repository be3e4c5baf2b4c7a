use crate::error::{Error, Result};
use crate::polyring::{Polynomial, SubstitutionStep};

use super::mixed::MixedPolynomial;

/// Square matrix of mixed polynomials; for a real `P` the Levi matrix
/// `(∂²P/∂z_k∂z̄_l)` is Hermitian.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LeviMatrix {
    entries: Vec<Vec<MixedPolynomial>>,
}

impl LeviMatrix {
    pub fn from_entries(entries: Vec<Vec<MixedPolynomial>>) -> Result<Self> {
        let n = entries.len();
        for row in &entries {
            Error::check_dim(n, row.len())?;
        }
        Ok(LeviMatrix { entries })
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, k: usize, l: usize) -> &MixedPolynomial {
        &self.entries[k][l]
    }

    pub fn rows(&self) -> &[Vec<MixedPolynomial>] {
        &self.entries
    }

    /// Entry `(k,l)` equals the conjugate of entry `(l,k)`.
    pub fn is_hermitian(&self) -> bool {
        let n = self.dim();
        (0..n).all(|k| (k..n).all(|l| self.entries[k][l] == self.entries[l][k].conj()))
    }

    pub fn row_is_zero(&self, k: usize) -> bool {
        self.entries[k].iter().all(|e| e.is_zero())
    }

    /// Indices of rows that are not identically zero.
    pub fn nonzero_rows(&self) -> Vec<usize> {
        (0..self.dim()).filter(|&k| !self.row_is_zero(k)).collect()
    }

    pub fn principal_submatrix(&self, idx: &[usize]) -> LeviMatrix {
        LeviMatrix {
            entries: idx
                .iter()
                .map(|&k| idx.iter().map(|&l| self.entries[k][l].clone()).collect())
                .collect(),
        }
    }

    /// Rewrites every entry in new coordinates.
    pub fn substitute(&self, steps: &[SubstitutionStep]) -> Result<LeviMatrix> {
        let entries = self
            .entries
            .iter()
            .map(|row| row.iter().map(|e| e.substitute(steps)).collect::<Result<Vec<_>>>())
            .collect::<Result<_>>()?;
        Ok(LeviMatrix { entries })
    }

    /// The principal submatrix on the nonzero rows (and, by hermiticity, columns).
    pub fn restrict_nonzero(&self) -> LeviMatrix {
        self.principal_submatrix(&self.nonzero_rows())
    }
}

/// `(∂²P/∂z_k∂z̄_l)_{k,l}`.
pub fn levi(p: &MixedPolynomial) -> LeviMatrix {
    let n = p.nvars();
    let holo: Vec<MixedPolynomial> = (0..n).map(|k| p.d_holo(k)).collect();
    LeviMatrix {
        entries: holo
            .iter()
            .map(|dk| (0..n).map(|l| dk.d_anti(l)).collect())
            .collect(),
    }
}

/// `J · J*` for the holomorphic Jacobian `J_{k,i} = ∂f_i/∂z_k`.
pub fn levi_from_jacobian(gens: &[Polynomial]) -> Result<LeviMatrix> {
    let n = gens.first().map(|g| g.nvars()).unwrap_or(0);
    let mut jac = Vec::with_capacity(n);
    for k in 0..n {
        let row: Vec<Polynomial> = gens
            .iter()
            .map(|g| g.partial_derivative(k))
            .collect::<Result<_>>()?;
        jac.push(row);
    }
    let entries = (0..n)
        .map(|k| {
            (0..n)
                .map(|l| {
                    jac[k]
                        .iter()
                        .zip(&jac[l])
                        .fold(MixedPolynomial::zero(n), |acc, (a, b)| {
                            &acc + &MixedPolynomial::product_with_conj(a, b)
                        })
                })
                .collect()
        })
        .collect();
    Ok(LeviMatrix { entries })
}

/// For every variable `z_ℓ` of `h`: `R_ℓ − h_ℓ R_central → R_ℓ`, then
/// `C_ℓ − h̄_ℓ C_central → C_ℓ`, where `h_ℓ = ∂h/∂z_ℓ`.
///
/// The result is the Levi matrix of the same function in the coordinates
/// `z̃_central = z_central + h`, with entries still written in the old coordinates.
pub fn paired_row_col_op(a: &LeviMatrix, central: usize, h: &Polynomial) -> Result<LeviMatrix> {
    let n = a.dim();
    Error::check_dim(n, h.nvars())?;
    if h.involves(central) {
        return Err(Error::InvalidSubstitution { target: central });
    }
    let factors: Vec<(usize, MixedPolynomial)> = h
        .variables()
        .into_iter()
        .map(|l| {
            h.partial_derivative(l)
                .map(|d| (l, MixedPolynomial::from_holomorphic(&d)))
        })
        .collect::<Result<_>>()?;

    let mut m = a.entries.clone();
    for (l, hl) in &factors {
        let central_row = m[central].clone();
        for (x, c) in m[*l].iter_mut().zip(&central_row) {
            *x = &*x - &(hl * c);
        }
    }
    for (l, hl) in &factors {
        let hl_bar = hl.conj();
        for row in m.iter_mut() {
            let t = &hl_bar * &row[central];
            row[*l] = &row[*l] - &t;
        }
    }
    Ok(LeviMatrix { entries: m })
}

/// Exact determinant by Laplace expansion over column subsets.
pub fn determinant(a: &LeviMatrix) -> Result<MixedPolynomial> {
    let n = a.dim();
    if n == 0 {
        // nvars unknown for an empty matrix; the empty product is 1 in zero variables
        return Ok(MixedPolynomial::one(0));
    }
    let nvars = a.entries[0][0].nvars();
    if n > 20 {
        return Err(Error::Dimension { expected: 20, found: n });
    }
    // partial[mask]: signed sum over assignments of the first |mask| rows to the columns in mask
    let mut partial: Vec<Option<MixedPolynomial>> = vec![None; 1 << n];
    partial[0] = Some(MixedPolynomial::one(nvars));
    for mask in 0usize..(1 << n) {
        let Some(acc) = partial[mask].take() else {
            continue;
        };
        let row = mask.count_ones() as usize;
        if row == n {
            partial[mask] = Some(acc);
            continue;
        }
        for c in 0..n {
            if mask & (1 << c) != 0 || a.entries[row][c].is_zero() {
                continue;
            }
            let flips = (mask >> (c + 1)).count_ones();
            let mut term = &acc * &a.entries[row][c];
            if flips % 2 == 1 {
                term = -&term;
            }
            let next = mask | (1 << c);
            partial[next] = Some(match partial[next].take() {
                Some(prev) => &prev + &term,
                None => term,
            });
        }
    }
    Ok(partial[(1 << n) - 1]
        .take()
        .unwrap_or_else(|| MixedPolynomial::zero(nvars)))
}
