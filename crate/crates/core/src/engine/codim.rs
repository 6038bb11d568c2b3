use serde::Serialize;

use super::evaluate::{for_each_tuple, BasisEvaluator, Sparse};
use crate::error::{Error, Result};
use crate::linalg::{EchelonBasis, Matrix};
use crate::module_algebra::HModuleAlgebra;
use crate::rational::Q;

/// Default work budget when neither the caller nor `HMODPI_BUDGET` sets one.
pub const DEFAULT_BUDGET: u128 = 50_000_000;

/// `HMODPI_BUDGET` if set and valid, else [`DEFAULT_BUDGET`].
pub fn default_budget() -> u128 {
    std::env::var("HMODPI_BUDGET")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_BUDGET)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CodimReport {
    pub n: usize,
    pub space_dim: u128,
    pub rank: usize,
    pub codim: usize,
    /// Indices (into the canonical basis of `P_n^H`) of monomials independent modulo identities.
    pub witness_basis: Option<Vec<usize>>,
}

fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

/// `(dim H)^n n!`.
pub fn multilinear_dim(hopf_dim: usize, n: usize) -> u128 {
    (hopf_dim as u128).pow(n as u32) * factorial(n)
}

/// Work estimate `(dim H)^n n! (dim A)^n`.
pub fn codim_work(a: &HModuleAlgebra, n: usize) -> u128 {
    multilinear_dim(a.hopf_dim(), n).saturating_mul((a.dim() as u128).saturating_pow(n as u32))
}

/// Evaluation data of `P_n^H` on basis tuples: a basis of the column space
/// of the matrix whose rows are indexed by the canonical monomial basis.
struct Evaluation {
    rows: usize,
    columns: Vec<Vec<Q>>,
}

fn evaluation_space(a: &HModuleAlgebra, n: usize, budget: u128) -> Result<Evaluation> {
    if n == 0 {
        return Err(Error::InvalidInput("degree must be at least 1".into()));
    }
    let estimate = codim_work(a, n);
    if estimate > budget {
        return Err(Error::BudgetExceeded { estimate, budget });
    }
    let rows = multilinear_dim(a.hopf_dim(), n) as usize;
    let ev = BasisEvaluator::new(a);
    let mut echelon = EchelonBasis::new(rows);
    let dim = a.dim();
    let m = a.hopf_dim();
    let mut leaf_values: Vec<Sparse> = vec![Vec::new(); rows];
    for_each_tuple(n, dim, |t| {
        for v in leaf_values.iter_mut() {
            v.clear();
        }
        let mut counter = 0usize;
        let mut used = vec![false; n];
        dfs(&ev, t, m, n, None, &mut used, &mut counter, &mut leaf_values);
        debug_assert_eq!(counter, rows);
        let mut cols = vec![vec![Q::default(); rows]; dim];
        let mut any = vec![false; dim];
        for (row, val) in leaf_values.iter().enumerate() {
            for (k, x) in val {
                cols[*k][row] = x.clone();
                any[*k] = true;
            }
        }
        for (k, col) in cols.into_iter().enumerate() {
            if any[k] {
                echelon.insert(&col);
            }
        }
        echelon.rank() < rows
    });
    Ok(Evaluation {
        rows,
        columns: echelon.basis(),
    })
}

/// Walks monomials in canonical order (variable, then decoration, per position),
/// sharing prefix products. Subtrees under a zero prefix are skipped but counted.
#[allow(clippy::too_many_arguments)]
fn dfs(
    ev: &BasisEvaluator,
    tuple: &[usize],
    m: usize,
    n: usize,
    prefix: Option<&Sparse>,
    used: &mut [bool],
    counter: &mut usize,
    out: &mut [Sparse],
) {
    let depth = used.iter().filter(|u| **u).count();
    if depth == n {
        if let Some(p) = prefix {
            out[*counter] = p.clone();
        }
        *counter += 1;
        return;
    }
    let remaining = n - depth - 1;
    let subtree = (m as u128).pow(remaining as u32) * factorial(remaining);
    for v in 0..n {
        if used[v] {
            continue;
        }
        for h in 0..m {
            let letter = ev.acted(h, tuple[v]);
            let value = match prefix {
                None => letter.clone(),
                Some(p) => ev.mul(p, letter),
            };
            if value.is_empty() {
                *counter += subtree as usize;
                continue;
            }
            used[v] = true;
            dfs(ev, tuple, m, n, Some(&value), used, counter, out);
            used[v] = false;
        }
    }
}

/// `c_n^H(a)`: rank of the evaluation map on `P_n^H`.
pub fn codimension(a: &HModuleAlgebra, n: usize, budget: u128) -> Result<CodimReport> {
    let e = evaluation_space(a, n, budget)?;
    let rank = e.columns.len();
    // rows of the evaluation matrix that are independent: greedy over the column basis
    let mut rows = EchelonBasis::new(rank);
    let mut witness = Vec::with_capacity(rank);
    for i in 0..e.rows {
        if rows.rank() == rank {
            break;
        }
        let row: Vec<Q> = e.columns.iter().map(|c| c[i].clone()).collect();
        if rows.insert(&row) {
            witness.push(i);
        }
    }
    Ok(CodimReport {
        n,
        space_dim: e.rows as u128,
        rank,
        codim: rank,
        witness_basis: Some(witness),
    })
}

/// Basis of `P_n^H ∩ id^H(a)` as coefficient vectors over the canonical monomial basis.
pub fn identity_subspace(a: &HModuleAlgebra, n: usize, budget: u128) -> Result<Vec<Vec<Q>>> {
    let e = evaluation_space(a, n, budget)?;
    if e.columns.is_empty() {
        return Ok((0..e.rows).map(|i| crate::linalg::unit_vector(e.rows, i)).collect());
    }
    Ok(Matrix::from_rows(e.columns).nullspace())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Algebra;

    #[test]
    fn small_values() {
        let q = HModuleAlgebra::plain(Algebra::rationals());
        for n in 1..=4 {
            assert_eq!(codimension(&q, n, DEFAULT_BUDGET).unwrap().codim, 1);
        }
        let m2 = HModuleAlgebra::plain(Algebra::matrix(2));
        assert_eq!(codimension(&m2, 1, DEFAULT_BUDGET).unwrap().codim, 1);
        assert_eq!(codimension(&m2, 2, DEFAULT_BUDGET).unwrap().codim, 2);
    }

    #[test]
    fn budget_refusal() {
        let m2 = HModuleAlgebra::plain(Algebra::matrix(2));
        let err = codimension(&m2, 3, 10).unwrap_err();
        assert!(matches!(err, Error::BudgetExceeded { estimate: 384, budget: 10 }));
    }

    #[test]
    fn identity_subspace_complements_codim() {
        let ut = HModuleAlgebra::plain(Algebra::upper_triangular(2));
        let r = codimension(&ut, 3, DEFAULT_BUDGET).unwrap();
        let ids = identity_subspace(&ut, 3, DEFAULT_BUDGET).unwrap();
        assert_eq!(r.codim + ids.len(), 6);
        assert_eq!(r.witness_basis.unwrap().len(), r.codim);
    }
}
