use std::collections::BTreeMap;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::module_algebra::HModuleAlgebra;
use crate::poly::{HPolynomial, Letter, Var};
use crate::rational::Q;

/// Values of the variables of a polynomial.
pub type Assignment = BTreeMap<Var, Vec<Q>>;

/// Substitutes `asg` into `f`: `x^h ↦ h · asg[x]`, products by structure constants.
pub fn evaluate(f: &HPolynomial, a: &HModuleAlgebra, asg: &Assignment) -> Result<Vec<Q>> {
    if f.hopf_dim() != a.hopf_dim() {
        return Err(Error::DimensionMismatch {
            context: "polynomial decorations vs Hopf algebra".into(),
            expected: a.hopf_dim(),
            found: f.hopf_dim(),
        });
    }
    let n = a.dim();
    for (v, x) in asg {
        if x.len() != n {
            return Err(Error::DimensionMismatch {
                context: format!("value of {v}"),
                expected: n,
                found: x.len(),
            });
        }
    }
    let mut acted: BTreeMap<Letter, Vec<Q>> = BTreeMap::new();
    let mut out = vec![Q::zero(); n];
    for (w, c) in f.terms() {
        let mut value: Option<Vec<Q>> = None;
        for letter in w {
            let (v, h) = letter;
            if !acted.contains_key(letter) {
                let x = asg
                    .get(v)
                    .ok_or_else(|| Error::InvalidInput(format!("no value assigned to {v}")))?;
                acted.insert(*letter, a.act(*h, x));
            }
            let y = &acted[letter];
            value = Some(match value {
                None => y.clone(),
                Some(p) => a.mul(&p, y),
            });
        }
        for (o, x) in out.iter_mut().zip(value.expect("nonempty word")) {
            if !x.is_zero() {
                *o += c * x;
            }
        }
    }
    Ok(out)
}

pub(crate) type Sparse = Vec<(usize, Q)>;

/// Precomputed `b_h · e_j` for basis evaluations.
pub(crate) struct BasisEvaluator<'a> {
    a: &'a HModuleAlgebra,
    acted: Vec<Vec<Sparse>>,
}

impl<'a> BasisEvaluator<'a> {
    pub(crate) fn new(a: &'a HModuleAlgebra) -> Self {
        let n = a.dim();
        let acted = (0..a.hopf_dim())
            .map(|h| {
                let m = a.action(h);
                (0..n)
                    .map(|j| {
                        (0..n)
                            .filter(|&i| !m.get(i, j).is_zero())
                            .map(|i| (i, m.get(i, j).clone()))
                            .collect()
                    })
                    .collect()
            })
            .collect();
        BasisEvaluator { a, acted }
    }

    pub(crate) fn dim(&self) -> usize {
        self.a.dim()
    }

    /// `b_h · e_j`.
    pub(crate) fn acted(&self, h: usize, j: usize) -> &Sparse {
        &self.acted[h][j]
    }

    pub(crate) fn mul(&self, u: &Sparse, v: &Sparse) -> Sparse {
        if u.is_empty() || v.is_empty() {
            return Vec::new();
        }
        let alg = self.a.algebra();
        let mut acc: BTreeMap<usize, Q> = BTreeMap::new();
        for (i, x) in u {
            for (j, y) in v {
                let entries = alg.product_of_basis(*i, *j);
                if entries.is_empty() {
                    continue;
                }
                let xy = x * y;
                for (k, c) in entries {
                    *acc.entry(*k).or_insert_with(Q::zero) += &xy * c;
                }
            }
        }
        acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
    }

    /// Value of a word when each variable takes the basis element `basis_of(var)`.
    pub(crate) fn word<F: Fn(Var) -> usize>(&self, w: &[Letter], basis_of: F) -> Sparse {
        let mut it = w.iter();
        let (v, h) = it.next().expect("nonempty word");
        let mut value = self.acted(*h, basis_of(*v)).clone();
        for (v, h) in it {
            if value.is_empty() {
                break;
            }
            value = self.mul(&value, self.acted(*h, basis_of(*v)));
        }
        value
    }

    /// Value of `f` at a basis tuple.
    pub(crate) fn polynomial<F: Fn(Var) -> usize + Copy>(&self, f: &HPolynomial, basis_of: F) -> Vec<Q> {
        let mut out = vec![Q::zero(); self.dim()];
        for (w, c) in f.terms() {
            for (k, x) in self.word(w, basis_of) {
                out[k] += c * x;
            }
        }
        out
    }
}

pub(crate) fn densify(s: &Sparse, n: usize) -> Vec<Q> {
    let mut out = vec![Q::zero(); n];
    for (i, x) in s {
        out[*i] = x.clone();
    }
    out
}

/// Iterates over all tuples in `0..base` of length `len`, lexicographically.
pub(crate) fn for_each_tuple(len: usize, base: usize, mut f: impl FnMut(&[usize]) -> bool) {
    if base == 0 && len > 0 {
        return;
    }
    let mut t = vec![0; len];
    loop {
        if !f(&t) {
            return;
        }
        let mut p = len;
        loop {
            if p == 0 {
                return;
            }
            p -= 1;
            t[p] += 1;
            if t[p] < base {
                break;
            }
            t[p] = 0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Algebra;
    use crate::hopf::{dual, group_algebra, GroupTable};
    use crate::linalg::{unit_vector, Matrix};
    use crate::poly::parse_polynomial;
    use crate::rational::q;

    #[test]
    fn single_variable() {
        let a = HModuleAlgebra::plain(Algebra::matrix(2));
        let f = HPolynomial::word(1, &[Var::x(1)]);
        let v = vec![q(1), q(2), q(3), q(4)];
        let asg = Assignment::from([(Var::x(1), v.clone())]);
        assert_eq!(evaluate(&f, &a, &asg).unwrap(), v);
    }

    #[test]
    fn commutator_of_matrix_units() {
        let a = HModuleAlgebra::plain(Algebra::matrix(2));
        let f = parse_polynomial(a.hopf(), "x1 x2 - x2 x1").unwrap();
        let asg = Assignment::from([(Var::x(1), unit_vector(4, 0)), (Var::x(2), unit_vector(4, 1))]);
        assert_eq!(evaluate(&f, &a, &asg).unwrap(), unit_vector(4, 1));
    }

    #[test]
    fn odd_projection_on_graded_ut2() {
        let h = dual(&group_algebra(&GroupTable::cyclic(2)));
        let p0 = Matrix::from_i64(&[&[1, 0, 0], &[0, 0, 0], &[0, 0, 1]]);
        let p1 = Matrix::from_i64(&[&[0, 0, 0], &[0, 1, 0], &[0, 0, 0]]);
        let a = HModuleAlgebra::new(h, Algebra::upper_triangular(2), vec![p0, p1]).unwrap();
        let f = parse_polynomial(a.hopf(), "x1^p_g").unwrap();
        let asg = Assignment::from([(Var::x(1), vec![q(1), q(1), q(0)])]);
        assert_eq!(evaluate(&f, &a, &asg).unwrap(), unit_vector(3, 1));
    }

    #[test]
    fn length_mismatch_is_rejected() {
        let a = HModuleAlgebra::plain(Algebra::matrix(2));
        let f = HPolynomial::word(1, &[Var::x(1)]);
        let asg = Assignment::from([(Var::x(1), vec![q(1)])]);
        assert!(matches!(evaluate(&f, &a, &asg), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn tuples_in_order() {
        let mut seen = Vec::new();
        for_each_tuple(2, 2, |t| {
            seen.push(t.to_vec());
            true
        });
        assert_eq!(seen, vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]);
    }
}
