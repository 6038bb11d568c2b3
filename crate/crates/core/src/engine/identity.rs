use serde::Serialize;

use super::evaluate::{for_each_tuple, BasisEvaluator};
use crate::error::{Error, Result};
use crate::linalg::{is_zero_vector, unit_vector, EchelonBasis, Matrix};
use crate::module_algebra::HModuleAlgebra;
use crate::poly::{HPolynomial, Monomial, Var};
use crate::rational::Q;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub identity: bool,
    pub degree: usize,
    pub tuples_checked: u64,
    /// Basis labels assigned to the variables, in variable order.
    pub witness: Option<Vec<(String, String)>>,
    #[serde(with = "crate::rational::serde_q::option_vec")]
    pub witness_value: Option<Vec<Q>>,
}

fn check_hopf(f: &HPolynomial, a: &HModuleAlgebra) -> Result<()> {
    if f.hopf_dim() != a.hopf_dim() {
        return Err(Error::DimensionMismatch {
            context: "polynomial decorations vs Hopf algebra".into(),
            expected: a.hopf_dim(),
            found: f.hopf_dim(),
        });
    }
    Ok(())
}

/// Decides `f ∈ id^H(a)` for multilinear `f` by evaluating on all basis tuples.
pub fn is_identity_multilinear(f: &HPolynomial, a: &HModuleAlgebra) -> Result<IdentityReport> {
    check_hopf(f, a)?;
    let vars = f.multilinear_variables()?;
    let ev = BasisEvaluator::new(a);
    let mut checked = 0u64;
    let mut witness = None;
    for_each_tuple(vars.len(), a.dim(), |t| {
        checked += 1;
        let basis_of = |v: Var| t[vars.binary_search(&v).unwrap()];
        let value = ev.polynomial(f, basis_of);
        if is_zero_vector(&value) {
            true
        } else {
            witness = Some((t.to_vec(), value));
            false
        }
    });
    let degree = vars.len();
    Ok(match witness {
        None => IdentityReport {
            identity: true,
            degree,
            tuples_checked: checked,
            witness: None,
            witness_value: None,
        },
        Some((t, value)) => IdentityReport {
            identity: false,
            degree,
            tuples_checked: checked,
            witness: Some(
                vars.iter()
                    .zip(&t)
                    .map(|(v, &j)| (v.to_string(), a.labels()[j].clone()))
                    .collect(),
            ),
            witness_value: Some(value),
        },
    })
}

/// Coefficient vectors (over `monomials`) of the combinations that are identities of `a`.
/// All monomials must be multilinear in the same variables.
pub fn monomial_kernel(a: &HModuleAlgebra, monomials: &[Monomial]) -> Result<Vec<Vec<Q>>> {
    let cols = evaluation_columns(a, monomials)?;
    if cols.is_empty() {
        let r = monomials.len();
        return Ok((0..r).map(|i| unit_vector(r, i)).collect());
    }
    Ok(Matrix::from_rows(cols).nullspace())
}

/// A basis of the column space of the evaluation matrix (rows = monomials).
pub(crate) fn evaluation_columns(a: &HModuleAlgebra, monomials: &[Monomial]) -> Result<Vec<Vec<Q>>> {
    let Some(first) = monomials.first() else {
        return Ok(Vec::new());
    };
    let mut vars: Vec<Var> = first.iter().map(|(v, _)| *v).collect();
    vars.sort_unstable();
    for w in monomials {
        let mut vs: Vec<Var> = w.iter().map(|(v, _)| *v).collect();
        vs.sort_unstable();
        if vs != vars || vs.windows(2).any(|p| p[0] == p[1]) {
            return Err(Error::NotMultilinear(format!("{w:?}")));
        }
        if w.iter().any(|(_, h)| *h >= a.hopf_dim()) {
            return Err(Error::InvalidInput("decoration out of range".into()));
        }
    }
    let ev = BasisEvaluator::new(a);
    let r = monomials.len();
    let n = a.dim();
    let mut echelon = EchelonBasis::new(r);
    for_each_tuple(vars.len(), n, |t| {
        let basis_of = |v: Var| t[vars.binary_search(&v).unwrap()];
        let mut cols = vec![vec![Q::default(); r]; n];
        let mut any = vec![false; n];
        for (row, w) in monomials.iter().enumerate() {
            for (k, x) in ev.word(w, basis_of) {
                cols[k][row] = x;
                any[k] = true;
            }
        }
        for (k, col) in cols.into_iter().enumerate() {
            if any[k] {
                echelon.insert(&col);
            }
        }
        echelon.rank() < r
    });
    Ok(echelon.basis())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Algebra;
    use crate::poly::{parse_polynomial, standard_polynomial};

    #[test]
    fn commutator_on_q_and_m2() {
        let q = HModuleAlgebra::plain(Algebra::rationals());
        let f = parse_polynomial(q.hopf(), "x1 x2 - x2 x1").unwrap();
        assert!(is_identity_multilinear(&f, &q).unwrap().identity);
        let m2 = HModuleAlgebra::plain(Algebra::matrix(2));
        let r = is_identity_multilinear(&f, &m2).unwrap();
        assert!(!r.identity);
        assert_eq!(
            r.witness.unwrap(),
            vec![("x1".to_string(), "e11".to_string()), ("x2".to_string(), "e12".to_string())]
        );
    }

    #[test]
    fn st4_on_m2() {
        let m2 = HModuleAlgebra::plain(Algebra::matrix(2));
        let r = is_identity_multilinear(&standard_polynomial(4, 1), &m2).unwrap();
        assert!(r.identity);
        assert_eq!(r.tuples_checked, 256);
        assert!(!is_identity_multilinear(&standard_polynomial(3, 1), &m2).unwrap().identity);
    }

    #[test]
    fn non_multilinear_rejected() {
        let q = HModuleAlgebra::plain(Algebra::rationals());
        let f = parse_polynomial(q.hopf(), "x1 x1").unwrap();
        assert!(matches!(is_identity_multilinear(&f, &q), Err(Error::NotMultilinear(_))));
    }

    #[test]
    fn kernel_of_commutative_algebra() {
        let q = HModuleAlgebra::plain(Algebra::rationals());
        let ws = crate::poly::multilinear_basis(&crate::poly::xs(2), 1);
        let k = monomial_kernel(&q, &ws).unwrap();
        assert_eq!(k.len(), 1);
    }
}
