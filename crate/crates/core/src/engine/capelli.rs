use serde::Serialize;

use super::codim::multilinear_dim;
use super::evaluate::{for_each_tuple, BasisEvaluator};
use crate::error::{Error, Result};
use crate::linalg::EchelonBasis;
use crate::module_algebra::HModuleAlgebra;
use crate::perm::Permutation;
use crate::poly::{alt, multilinear_basis, xs, HPolynomial, Monomial, Var};
use crate::rational::Q;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CapelliDegree {
    pub n: usize,
    /// Number of spanning polynomials `Alt_{x_1..x_t}(w)`.
    pub generators: usize,
    /// Dimension of the alternating subspace modulo identities; the degree passes iff 0.
    pub rank: usize,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CapelliReport {
    pub t: usize,
    pub degrees: Vec<CapelliDegree>,
    pub passed: bool,
    /// A spanning polynomial that is not an identity, from the lowest failing degree.
    #[serde(skip)]
    pub witness: Option<HPolynomial>,
    pub witness_assignment: Option<Vec<(String, String)>>,
}

/// Strictly increasing `t`-subsets of `0..n`, lexicographically.
pub(crate) fn for_each_combination(n: usize, t: usize, mut f: impl FnMut(&[usize]) -> bool) {
    if t > n {
        return;
    }
    let mut c: Vec<usize> = (0..t).collect();
    loop {
        if !f(&c) {
            return;
        }
        let Some(i) = (0..t).rev().find(|&i| c[i] < n - t + i) else {
            return;
        };
        c[i] += 1;
        for j in i + 1..t {
            c[j] = c[j - 1] + 1;
        }
    }
}

/// Checks, for `t <= n <= n_max`, that `Alt_{x_1..x_t}(P_n^H) ⊆ id^H(a)`.
/// Degrees below `t` hold vacuously and are not listed.
pub fn capelli_check(a: &HModuleAlgebra, t: usize, n_max: usize, budget: u128) -> Result<CapelliReport> {
    if t == 0 {
        return Err(Error::InvalidInput("alternating set must be nonempty".into()));
    }
    let m = a.hopf_dim();
    let dim = a.dim();
    let ev = BasisEvaluator::new(a);
    let mut degrees = Vec::new();
    let mut witness = None;
    let mut witness_assignment = None;
    for n in t..=n_max {
        let vars = xs(n);
        let alt_vars = &vars[..t];
        let estimate = multilinear_dim(m, n).saturating_mul((dim as u128).saturating_pow(n as u32));
        if estimate > budget {
            return Err(Error::BudgetExceeded { estimate, budget });
        }
        // one generator per orbit: alternating variables in increasing positional order
        let gens: Vec<Monomial> = multilinear_basis(&vars, m)
            .into_iter()
            .filter(|w| {
                let order: Vec<Var> = w.iter().map(|(v, _)| *v).filter(|v| alt_vars.contains(v)).collect();
                order.windows(2).all(|p| p[0] < p[1])
            })
            .collect();
        let perms = Permutation::all(t);
        let r = gens.len();
        let mut echelon = EchelonBasis::new(r);
        let mut first_bad: Option<(usize, Vec<usize>)> = None;
        // alternating values go to strictly increasing basis indices; the rest range freely
        for_each_combination(dim, t, |comb| {
            for_each_tuple(n - t, dim, |rest| {
                let mut cols = vec![vec![Q::default(); r]; dim];
                let mut any = false;
                for (row, w) in gens.iter().enumerate() {
                    for p in &perms {
                        let sign = Q::from_integer(p.sign().into());
                        let basis_of = |v: Var| {
                            let i = (v.index - 1) as usize;
                            if i < t {
                                comb[p.apply(i)]
                            } else {
                                rest[i - t]
                            }
                        };
                        for (k, x) in ev.word(w, basis_of) {
                            cols[k][row] += &sign * x;
                            any = true;
                        }
                    }
                }
                if any {
                    for col in &cols {
                        if echelon.insert(col) && first_bad.is_none() {
                            let row = col.iter().position(|x| *x != Q::default()).unwrap();
                            let mut tuple = comb.to_vec();
                            tuple.extend_from_slice(rest);
                            first_bad = Some((row, tuple));
                        }
                    }
                }
                echelon.rank() < r
            });
            echelon.rank() < r
        });
        let rank = echelon.rank();
        if witness.is_none() {
            if let Some((row, tuple)) = first_bad {
                let w = HPolynomial::from_monomial(m, gens[row].clone());
                witness = Some(alt(&w, alt_vars));
                witness_assignment = Some(
                    vars.iter()
                        .zip(&tuple)
                        .map(|(v, &j)| (v.to_string(), a.labels()[j].clone()))
                        .collect(),
                );
            }
        }
        degrees.push(CapelliDegree {
            n,
            generators: r,
            rank,
            passed: rank == 0,
        });
    }
    let passed = degrees.iter().all(|d| d.passed);
    Ok(CapelliReport {
        t,
        degrees,
        passed,
        witness,
        witness_assignment,
    })
}
