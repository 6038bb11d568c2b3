//! Finite-dimensional associative algebras over [`Q`] by sparse structure constants.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{is_zero_vector, unit_vector, Matrix, Subspace};
use crate::rational::Q;

/// `table[i * dim + j]` holds the nonzero coordinates of `b_i b_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Algebra {
    dim: usize,
    labels: Vec<String>,
    table: Vec<Vec<(usize, Q)>>,
    unit: Option<Vec<Q>>,
}

impl Algebra {
    /// `entries` lists `(i, j, k, c)` meaning `b_i b_j` has coefficient `c` at `b_k`.
    pub fn from_entries(
        labels: Vec<String>,
        entries: impl IntoIterator<Item = (usize, usize, usize, Q)>,
        unit: Option<Vec<Q>>,
    ) -> Result<Self> {
        let dim = labels.len();
        let mut dense = vec![vec![Q::zero(); dim]; dim * dim];
        for (i, j, k, c) in entries {
            if i >= dim || j >= dim || k >= dim {
                return Err(Error::malformed(
                    "algebra",
                    format!("structure constant ({i}, {j}, {k}) out of range for dimension {dim}"),
                ));
            }
            dense[i * dim + j][k] += c;
        }
        Self::from_dense(labels, dense, unit)
    }

    /// `mult[i * dim + j]` is the coordinate vector of `b_i b_j`.
    pub fn from_dense(labels: Vec<String>, mult: Vec<Vec<Q>>, unit: Option<Vec<Q>>) -> Result<Self> {
        let dim = labels.len();
        if mult.len() != dim * dim || mult.iter().any(|v| v.len() != dim) {
            return Err(Error::malformed(
                "algebra",
                "multiplication table must be dim*dim vectors of length dim",
            ));
        }
        if let Some(u) = &unit {
            if u.len() != dim {
                return Err(Error::DimensionMismatch {
                    context: "algebra unit".into(),
                    expected: dim,
                    found: u.len(),
                });
            }
        }
        let table = mult
            .into_iter()
            .map(|v| {
                v.into_iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .collect()
            })
            .collect();
        Ok(Algebra {
            dim,
            labels,
            table,
            unit,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn unit(&self) -> Option<&[Q]> {
        self.unit.as_deref()
    }

    pub fn product_of_basis(&self, i: usize, j: usize) -> &[(usize, Q)] {
        &self.table[i * self.dim + j]
    }

    /// All nonzero structure constants `(i, j, k, c)` in index order.
    pub fn entries(&self) -> Vec<(usize, usize, usize, Q)> {
        let mut out = Vec::new();
        for i in 0..self.dim {
            for j in 0..self.dim {
                for (k, c) in self.product_of_basis(i, j) {
                    out.push((i, j, *k, c.clone()));
                }
            }
        }
        out
    }

    pub fn mul(&self, a: &[Q], b: &[Q]) -> Vec<Q> {
        let n = self.dim;
        let mut out = vec![Q::zero(); n];
        for (i, x) in a.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (j, y) in b.iter().enumerate().filter(|(_, y)| !y.is_zero()) {
                let entries = &self.table[i * n + j];
                if entries.is_empty() {
                    continue;
                }
                let xy = x * y;
                for (k, c) in entries {
                    out[*k] += &xy * c;
                }
            }
        }
        out
    }

    /// Matrix of `y ↦ x y`.
    pub fn left_mult(&self, x: &[Q]) -> Matrix {
        let n = self.dim;
        let mut m = Matrix::zeros(n, n);
        for j in 0..n {
            let col = self.mul(x, &unit_vector(n, j));
            for (i, c) in col.into_iter().enumerate() {
                if !c.is_zero() {
                    m.set(i, j, c);
                }
            }
        }
        m
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.dim).all(|i| (0..self.dim).all(|j| self.product_of_basis(i, j) == self.product_of_basis(j, i)))
    }

    /// First basis triple violating associativity.
    pub fn associativity_violation(&self) -> Option<(usize, usize, usize)> {
        let n = self.dim;
        for i in 0..n {
            for j in 0..n {
                let ij = self.mul(&unit_vector(n, i), &unit_vector(n, j));
                for k in 0..n {
                    let left = self.mul(&ij, &unit_vector(n, k));
                    let jk = self.mul(&unit_vector(n, j), &unit_vector(n, k));
                    if left != self.mul(&unit_vector(n, i), &jk) {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }

    /// A two-sided unit, solved for linearly when none was declared.
    pub fn find_unit(&self) -> Option<Vec<Q>> {
        if let Some(u) = &self.unit {
            return Some(u.clone());
        }
        let n = self.dim;
        if n == 0 {
            return None;
        }
        // unknown u: u b_j = b_j and b_j u = b_j for all j
        let mut rows = Vec::new();
        let mut rhs = Vec::new();
        for j in 0..n {
            for k in 0..n {
                let mut left = vec![Q::zero(); n];
                let mut right = vec![Q::zero(); n];
                for i in 0..n {
                    if let Some((_, c)) = self.product_of_basis(i, j).iter().find(|(kk, _)| *kk == k) {
                        left[i] = c.clone();
                    }
                    if let Some((_, c)) = self.product_of_basis(j, i).iter().find(|(kk, _)| *kk == k) {
                        right[i] = c.clone();
                    }
                }
                let target = if j == k { Q::one() } else { Q::zero() };
                rows.push(left);
                rhs.push(target.clone());
                rows.push(right);
                rhs.push(target);
            }
        }
        Matrix::from_rows(rows).solve(&rhs)
    }

    pub fn with_unit(mut self, unit: Option<Vec<Q>>) -> Self {
        self.unit = unit;
        self
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.dim);
        self.labels = labels;
        self
    }

    /// Re-expresses the algebra in the basis given by the columns of `p`.
    pub fn change_basis(&self, p: &Matrix) -> Result<Algebra> {
        let n = self.dim;
        if p.rows() != n || p.cols() != n {
            return Err(Error::DimensionMismatch {
                context: "basis change".into(),
                expected: n,
                found: p.rows(),
            });
        }
        let inv = p
            .inverse()
            .ok_or_else(|| Error::InvalidInput("basis change matrix is singular".into()))?;
        let cols: Vec<Vec<Q>> = (0..n).map(|j| p.column(j)).collect();
        let mut mult = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                mult.push(inv.mul_vec(&self.mul(&cols[i], &cols[j])));
            }
        }
        let unit = self.unit.as_ref().map(|u| inv.mul_vec(u));
        Algebra::from_dense(
            (0..n).map(|i| format!("v{}", i + 1)).collect(),
            mult,
            unit,
        )
    }

    /// Span of all products `u v` with `u ∈ left`, `v ∈ right`.
    pub fn product_space(&self, left: &Subspace, right: &Subspace) -> Subspace {
        let mut out = Subspace::zero(self.dim);
        for u in left.basis() {
            for v in right.basis() {
                let w = self.mul(u, v);
                if !is_zero_vector(&w) {
                    out.add(w);
                    if out.dim() == self.dim {
                        return out;
                    }
                }
            }
        }
        out
    }

    /// The field `Q` itself, basis `1`.
    pub fn rationals() -> Algebra {
        Algebra::from_entries(vec!["1".into()], [(0, 0, 0, Q::one())], Some(vec![Q::one()])).unwrap()
    }

    /// Full matrix algebra with matrix units `e_ij` in row-major order.
    pub fn matrix(n: usize) -> Algebra {
        let idx = |i: usize, j: usize| i * n + j;
        let labels = (0..n * n)
            .map(|k| format!("e{}{}", k / n + 1, k % n + 1))
            .collect();
        let mut entries = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for l in 0..n {
                    entries.push((idx(i, j), idx(j, l), idx(i, l), Q::one()));
                }
            }
        }
        let mut unit = vec![Q::zero(); n * n];
        for i in 0..n {
            unit[idx(i, i)] = Q::one();
        }
        Algebra::from_entries(labels, entries, Some(unit)).unwrap()
    }

    /// Upper triangular matrices, basis `e_ij` (`i <= j`) in row-major order.
    pub fn upper_triangular(n: usize) -> Algebra {
        Self::triangular(n, false)
    }

    /// Strictly upper triangular matrices (no unit).
    pub fn strictly_upper_triangular(n: usize) -> Algebra {
        Self::triangular(n, true)
    }

    fn triangular(n: usize, strict: bool) -> Algebra {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| (i..n).map(move |j| (i, j)))
            .filter(|(i, j)| !strict || i < j)
            .collect();
        let pos = |i: usize, j: usize| pairs.iter().position(|&p| p == (i, j));
        let labels = pairs
            .iter()
            .map(|(i, j)| format!("e{}{}", i + 1, j + 1))
            .collect();
        let mut entries = Vec::new();
        for (a, &(i, j)) in pairs.iter().enumerate() {
            for (b, &(k, l)) in pairs.iter().enumerate() {
                if j == k {
                    entries.push((a, b, pos(i, l).unwrap(), Q::one()));
                }
            }
        }
        let unit = (!strict).then(|| {
            pairs
                .iter()
                .map(|(i, j)| if i == j { Q::one() } else { Q::zero() })
                .collect()
        });
        Algebra::from_entries(labels, entries, unit).unwrap()
    }

    /// `n`-dimensional algebra with zero multiplication.
    pub fn zero_product(n: usize) -> Algebra {
        let labels = (0..n).map(|i| format!("n{}", i + 1)).collect();
        Algebra::from_entries(labels, [], None).unwrap()
    }

    /// Direct product `A × B`; basis of `A` first, then `B`.
    pub fn direct_product(a: &Algebra, b: &Algebra) -> Algebra {
        let off = a.dim;
        let mut labels: Vec<String> = a.labels.iter().map(|l| format!("{l}_1")).collect();
        labels.extend(b.labels.iter().map(|l| format!("{l}_2")));
        let mut entries = a.entries();
        entries.extend(
            b.entries()
                .into_iter()
                .map(|(i, j, k, c)| (i + off, j + off, k + off, c)),
        );
        let unit = match (&a.unit, &b.unit) {
            (Some(u), Some(v)) => Some(u.iter().chain(v).cloned().collect()),
            _ => None,
        };
        Algebra::from_entries(labels, entries, unit).unwrap()
    }

    /// Tensor product `A ⊗ B`; `a_i ⊗ b_j` sits at index `i * dim(B) + j`.
    pub fn tensor(a: &Algebra, b: &Algebra) -> Algebra {
        let nb = b.dim;
        let labels = (0..a.dim * nb)
            .map(|x| format!("{}.{}", a.labels[x / nb], b.labels[x % nb]))
            .collect();
        let mut entries = Vec::new();
        for (i, j, k, c) in a.entries() {
            for (p, q, r, d) in b.entries() {
                entries.push((i * nb + p, j * nb + q, k * nb + r, &c * &d));
            }
        }
        let unit = match (&a.unit, &b.unit) {
            (Some(u), Some(v)) => Some(
                u.iter()
                    .flat_map(|x| v.iter().map(move |y| x * y))
                    .collect(),
            ),
            _ => None,
        };
        Algebra::from_entries(labels, entries, unit).unwrap()
    }
}
