//! Finite-dimensional Hopf algebras given by full structure constants.
//!
//! Basis elements are `b_0, .., b_{m-1}`. Elements are coefficient vectors of
//! length `m`; elements of `H ⊗ H` are vectors of length `m²` indexed by
//! `j * m + k` for `b_j ⊗ b_k`.

use std::fmt;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{unit_vector, Matrix};
use crate::perm::Permutation;
use crate::rational::Q;

/// A finite group by its Cayley table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupTable {
    order: usize,
    cayley: Vec<Vec<usize>>,
    identity: usize,
    labels: Vec<String>,
}

impl GroupTable {
    /// Validates the table: closure, identity, inverses, associativity.
    pub fn new(cayley: Vec<Vec<usize>>, identity: usize, labels: Vec<String>) -> Result<Self> {
        let order = cayley.len();
        let fail = |axiom: &'static str, detail: String| Err(Error::InvalidGroupTable { axiom, detail });
        if order == 0 {
            return fail("closure", "empty table".into());
        }
        if labels.len() != order {
            return fail("closure", format!("{} labels for order {order}", labels.len()));
        }
        for (i, row) in cayley.iter().enumerate() {
            if row.len() != order {
                return fail("closure", format!("row {i} has length {}", row.len()));
            }
            if let Some(&x) = row.iter().find(|&&x| x >= order) {
                return fail("closure", format!("entry {x} in row {i} is out of range"));
            }
        }
        if identity >= order {
            return fail("identity", format!("identity index {identity} out of range"));
        }
        for i in 0..order {
            if cayley[identity][i] != i || cayley[i][identity] != i {
                return fail("identity", format!("{} is not fixed by the identity", labels[i]));
            }
        }
        for i in 0..order {
            if !(0..order).any(|j| cayley[i][j] == identity && cayley[j][i] == identity) {
                return fail("inverses", format!("{} has no two-sided inverse", labels[i]));
            }
        }
        for a in 0..order {
            for b in 0..order {
                for c in 0..order {
                    if cayley[cayley[a][b]][c] != cayley[a][cayley[b][c]] {
                        return fail(
                            "associativity",
                            format!("({}, {}, {})", labels[a], labels[b], labels[c]),
                        );
                    }
                }
            }
        }
        Ok(GroupTable {
            order,
            cayley,
            identity,
            labels,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.cayley[a][b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        (0..self.order)
            .find(|&b| self.cayley[a][b] == self.identity)
            .expect("validated table has inverses")
    }

    pub fn cayley(&self) -> &[Vec<usize>] {
        &self.cayley
    }

    pub fn trivial() -> Self {
        Self::new(vec![vec![0]], 0, vec!["1".into()]).unwrap()
    }

    /// `C_n` with elements `e, g, g2, ..`.
    pub fn cyclic(n: usize) -> Self {
        assert!(n >= 1);
        let labels = (0..n)
            .map(|i| match i {
                0 => "e".to_string(),
                1 => "g".to_string(),
                _ => format!("g{i}"),
            })
            .collect();
        let cayley = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        Self::new(cayley, 0, labels).unwrap()
    }

    /// `C_2 × C_2` with elements `e, a, b, ab`.
    pub fn klein_four() -> Self {
        let cayley = (0..4).map(|a| (0..4).map(|b| a ^ b).collect()).collect();
        Self::new(cayley, 0, ["e", "a", "b", "ab"].map(String::from).to_vec()).unwrap()
    }

    /// `S_n` realized on permutations in lexicographic order; the identity comes first.
    pub fn symmetric(n: usize) -> Self {
        let perms = Permutation::all(n);
        let index = |p: &Permutation| perms.iter().position(|q| q == p).unwrap();
        let cayley = perms
            .iter()
            .map(|a| perms.iter().map(|b| index(&a.compose(b))).collect())
            .collect();
        let labels = perms
            .iter()
            .map(|p| {
                if p.is_identity() {
                    "e".to_string()
                } else {
                    format!("s{}", p.images().iter().map(|i| (i + 1).to_string()).collect::<String>())
                }
            })
            .collect();
        Self::new(cayley, 0, labels).unwrap()
    }

    /// Dihedral group of order `2n`: `r^i s^j` stored at index `2i + j`.
    pub fn dihedral(n: usize) -> Self {
        let elem = |k: usize| (k / 2, k % 2);
        let idx = |i: usize, j: usize| 2 * i + j;
        let cayley = (0..2 * n)
            .map(|a| {
                (0..2 * n)
                    .map(|b| {
                        let (i1, j1) = elem(a);
                        let (i2, j2) = elem(b);
                        // r^i1 s^j1 r^i2 s^j2 = r^(i1 ± i2) s^(j1+j2)
                        let i = if j1 == 0 { (i1 + i2) % n } else { (i1 + n - i2) % n };
                        idx(i, (j1 + j2) % 2)
                    })
                    .collect()
            })
            .collect();
        let labels = (0..2 * n)
            .map(|k| {
                let (i, j) = elem(k);
                match (i, j) {
                    (0, 0) => "e".to_string(),
                    (0, 1) => "s".to_string(),
                    (i, 0) => format!("r{i}"),
                    (i, _) => format!("r{i}s"),
                }
            })
            .collect();
        Self::new(cayley, 0, labels).unwrap()
    }

    /// Quaternion group `{±1, ±i, ±j, ±k}`.
    pub fn quaternion() -> Self {
        // index = 2 * unit + sign, unit in {1, i, j, k}
        let unit_mul = |a: usize, b: usize| -> (usize, bool) {
            // returns (unit, negative)
            match (a, b) {
                (0, x) | (x, 0) => (x, false),
                (x, y) if x == y => (0, true),
                (1, 2) => (3, false),
                (2, 3) => (1, false),
                (3, 1) => (2, false),
                (2, 1) => (3, true),
                (3, 2) => (1, true),
                (1, 3) => (2, true),
                _ => unreachable!(),
            }
        };
        let cayley = (0..8)
            .map(|a: usize| {
                (0..8)
                    .map(|b: usize| {
                        let (u, neg) = unit_mul(a / 2, b / 2);
                        let sign = (a % 2) ^ (b % 2) ^ usize::from(neg);
                        2 * u + sign
                    })
                    .collect()
            })
            .collect();
        let labels = ["e", "m", "i", "mi", "j", "mj", "k", "mk"].map(String::from).to_vec();
        Self::new(cayley, 0, labels).unwrap()
    }

    /// Named groups: `trivial`, `C<n>`, `V4`, `S3`, `S<n>`, `D<n>` (order 2n), `Q8`.
    pub fn builtin(name: &str) -> Result<Self> {
        let bad = || Error::InvalidInput(format!("unknown builtin group `{name}`"));
        let num = |s: &str| s.parse::<usize>().ok().filter(|&n| n >= 1);
        match name {
            "trivial" => Ok(Self::trivial()),
            "V4" | "klein" => Ok(Self::klein_four()),
            "Q8" => Ok(Self::quaternion()),
            _ if name.len() >= 2 && name.is_char_boundary(1) => {
                let (head, tail) = name.split_at(1);
                let n = num(tail).ok_or_else(bad)?;
                match head {
                    "C" => Ok(Self::cyclic(n)),
                    "S" if n <= 5 => Ok(Self::symmetric(n)),
                    "D" if n >= 2 => Ok(Self::dihedral(n)),
                    _ => Err(bad()),
                }
            }
            _ => Err(bad()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfAlgebra {
    dim: usize,
    labels: Vec<String>,
    /// `mult[i * m + j]` = coefficients of `b_i b_j`.
    mult: Vec<Vec<Q>>,
    unit: Vec<Q>,
    /// `coproduct[i]` lists `(j, k, c)` with `Δ(b_i) = Σ c b_j ⊗ b_k`.
    coproduct: Vec<Vec<(usize, usize, Q)>>,
    counit: Vec<Q>,
    /// Column `j` holds `S(b_j)`.
    antipode: Matrix,
}

impl HopfAlgebra {
    /// Structural checks only; run [`verify_hopf`] for the axioms.
    pub fn from_parts(
        labels: Vec<String>,
        mult: Vec<Vec<Q>>,
        unit: Vec<Q>,
        coproduct: Vec<Vec<(usize, usize, Q)>>,
        counit: Vec<Q>,
        antipode: Matrix,
    ) -> Result<Self> {
        let m = labels.len();
        let bad = |d: String| Err(Error::malformed("Hopf algebra", d));
        if m == 0 {
            return bad("dimension 0".into());
        }
        if mult.len() != m * m || mult.iter().any(|v| v.len() != m) {
            return bad("multiplication table must be m*m vectors of length m".into());
        }
        if unit.len() != m || counit.len() != m {
            return bad("unit and counit need length m".into());
        }
        if coproduct.len() != m || coproduct.iter().flatten().any(|(j, k, _)| *j >= m || *k >= m) {
            return bad("coproduct must have m entries with indices < m".into());
        }
        if antipode.rows() != m || antipode.cols() != m {
            return bad("antipode must be m x m".into());
        }
        let coproduct = coproduct
            .into_iter()
            .map(canonical_terms)
            .collect();
        Ok(HopfAlgebra {
            dim: m,
            labels,
            mult,
            unit,
            coproduct,
            counit,
            antipode,
        })
    }

    pub fn trivial() -> Self {
        group_algebra(&GroupTable::trivial())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label_index(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn unit(&self) -> &[Q] {
        &self.unit
    }

    pub fn counit(&self) -> &[Q] {
        &self.counit
    }

    pub fn antipode(&self) -> &Matrix {
        &self.antipode
    }

    pub fn coproduct_terms(&self, i: usize) -> &[(usize, usize, Q)] {
        &self.coproduct[i]
    }

    pub fn product_of_basis(&self, i: usize, j: usize) -> &[Q] {
        &self.mult[i * self.dim + j]
    }

    pub fn mul(&self, a: &[Q], b: &[Q]) -> Vec<Q> {
        let m = self.dim;
        let mut out = vec![Q::zero(); m];
        for (i, x) in a.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (j, y) in b.iter().enumerate().filter(|(_, y)| !y.is_zero()) {
                let xy = x * y;
                for (k, c) in self.mult[i * m + j].iter().enumerate() {
                    if !c.is_zero() {
                        out[k] += &xy * c;
                    }
                }
            }
        }
        out
    }

    /// `Δ(a)` as a vector in `H ⊗ H`.
    pub fn coproduct(&self, a: &[Q]) -> Vec<Q> {
        let m = self.dim;
        let mut out = vec![Q::zero(); m * m];
        for (i, x) in a.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (j, k, c) in &self.coproduct[i] {
                out[j * m + k] += x * c;
            }
        }
        out
    }

    /// Iterated coproduct `Δ^(k-1)(a)` as `(indices, coefficient)` terms, `k >= 1`.
    pub fn iterated_coproduct(&self, a: &[Q], k: usize) -> Vec<(Vec<usize>, Q)> {
        assert!(k >= 1);
        let mut terms: Vec<(Vec<usize>, Q)> = a
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(i, x)| (vec![i], x.clone()))
            .collect();
        for _ in 1..k {
            let mut next: std::collections::BTreeMap<Vec<usize>, Q> = Default::default();
            for (idx, c) in terms {
                let last = *idx.last().unwrap();
                for (j, l, d) in &self.coproduct[last] {
                    let mut v = idx[..idx.len() - 1].to_vec();
                    v.push(*j);
                    v.push(*l);
                    *next.entry(v).or_insert_with(Q::zero) += &c * d;
                }
            }
            terms = next.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        }
        terms
    }

    pub fn counit_of(&self, a: &[Q]) -> Q {
        a.iter().zip(&self.counit).map(|(x, e)| x * e).sum()
    }

    pub fn antipode_of(&self, a: &[Q]) -> Vec<Q> {
        self.antipode.mul_vec(a)
    }

    /// Product in `H ⊗ H` of two tensor vectors.
    fn mul_tensor(&self, a: &[Q], b: &[Q]) -> Vec<Q> {
        let m = self.dim;
        let mut out = vec![Q::zero(); m * m];
        for (p, x) in a.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (r, y) in b.iter().enumerate().filter(|(_, y)| !y.is_zero()) {
                let (i1, i2) = (p / m, p % m);
                let (j1, j2) = (r / m, r % m);
                let xy = x * y;
                let left = &self.mult[i1 * m + j1];
                let right = &self.mult[i2 * m + j2];
                for (k1, c1) in left.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                    for (k2, c2) in right.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                        out[k1 * m + k2] += &xy * c1 * c2;
                    }
                }
            }
        }
        out
    }

    /// Exact structure-constant equality after relabelling: basis element `i` of
    /// `self` corresponds to basis element `perm[i]` of `other`. Labels are ignored.
    pub fn same_structure(&self, other: &HopfAlgebra, perm: &[usize]) -> bool {
        let m = self.dim;
        if other.dim != m || perm.len() != m {
            return false;
        }
        let map_vec = |v: &[Q]| {
            let mut out = vec![Q::zero(); m];
            for (i, x) in v.iter().enumerate() {
                out[perm[i]] = x.clone();
            }
            out
        };
        for i in 0..m {
            for j in 0..m {
                if map_vec(&self.mult[i * m + j]) != other.mult[perm[i] * m + perm[j]] {
                    return false;
                }
            }
            let mine: Vec<_> = canonical_terms(
                self.coproduct[i]
                    .iter()
                    .map(|(j, k, c)| (perm[*j], perm[*k], c.clone()))
                    .collect(),
            );
            if mine != other.coproduct[perm[i]] {
                return false;
            }
            if self.counit[i] != other.counit[perm[i]] {
                return false;
            }
            if map_vec(&self.antipode.column(i)) != other.antipode.column(perm[i]) {
                return false;
            }
        }
        map_vec(&self.unit) == other.unit
    }
}

fn canonical_terms(terms: Vec<(usize, usize, Q)>) -> Vec<(usize, usize, Q)> {
    let mut map: std::collections::BTreeMap<(usize, usize), Q> = Default::default();
    for (j, k, c) in terms {
        *map.entry((j, k)).or_insert_with(Q::zero) += c;
    }
    map.into_iter()
        .filter(|(_, c)| !c.is_zero())
        .map(|((j, k), c)| (j, k, c))
        .collect()
}

/// `F[G]` with group-like basis: `Δ(g) = g ⊗ g`, `ε(g) = 1`, `S(g) = g⁻¹`.
pub fn group_algebra(g: &GroupTable) -> HopfAlgebra {
    let m = g.order();
    let mut mult = Vec::with_capacity(m * m);
    for a in 0..m {
        for b in 0..m {
            mult.push(unit_vector(m, g.mul(a, b)));
        }
    }
    let mut antipode = Matrix::zeros(m, m);
    for a in 0..m {
        antipode.set(g.inverse(a), a, Q::one());
    }
    HopfAlgebra::from_parts(
        g.labels().to_vec(),
        mult,
        unit_vector(m, g.identity()),
        (0..m).map(|a| vec![(a, a, Q::one())]).collect(),
        vec![Q::one(); m],
        antipode,
    )
    .expect("group algebra is well formed")
}

/// `H*` on the dual basis `p_i` (with `p_i(b_j) = δ_ij`).
pub fn dual(h: &HopfAlgebra) -> HopfAlgebra {
    let m = h.dim;
    // p_j p_k = Σ_i (coefficient of b_j ⊗ b_k in Δ(b_i)) p_i
    let mut mult = vec![vec![Q::zero(); m]; m * m];
    for i in 0..m {
        for (j, k, c) in &h.coproduct[i] {
            mult[j * m + k][i] += c;
        }
    }
    // Δ(p_k) = Σ_{i,j} (coefficient of b_k in b_i b_j) p_i ⊗ p_j
    let mut coproduct = vec![Vec::new(); m];
    for i in 0..m {
        for j in 0..m {
            for (k, c) in h.mult[i * m + j].iter().enumerate() {
                if !c.is_zero() {
                    coproduct[k].push((i, j, c.clone()));
                }
            }
        }
    }
    HopfAlgebra::from_parts(
        h.labels.iter().map(|l| format!("p_{l}")).collect(),
        mult,
        h.counit.clone(),
        coproduct,
        h.unit.clone(),
        h.antipode.transpose(),
    )
    .expect("dual is well formed")
}

/// `H₁ ⊗ H₂`; basis `b_i ⊗ c_a` sits at index `i * dim(H₂) + a` with label `b.c`.
pub fn tensor(h1: &HopfAlgebra, h2: &HopfAlgebra) -> HopfAlgebra {
    let (m1, m2) = (h1.dim, h2.dim);
    let m = m1 * m2;
    let idx = |i: usize, a: usize| i * m2 + a;
    let kron_vec = |x: &[Q], y: &[Q]| {
        let mut out = vec![Q::zero(); m];
        for (i, p) in x.iter().enumerate().filter(|(_, p)| !p.is_zero()) {
            for (a, q) in y.iter().enumerate().filter(|(_, q)| !q.is_zero()) {
                out[idx(i, a)] = p * q;
            }
        }
        out
    };
    let mut mult = Vec::with_capacity(m * m);
    for x in 0..m {
        for y in 0..m {
            let (i, a) = (x / m2, x % m2);
            let (j, b) = (y / m2, y % m2);
            mult.push(kron_vec(&h1.mult[i * m1 + j], &h2.mult[a * m2 + b]));
        }
    }
    let mut coproduct = Vec::with_capacity(m);
    for x in 0..m {
        let (i, a) = (x / m2, x % m2);
        let mut terms = Vec::new();
        for (i1, i2, c) in &h1.coproduct[i] {
            for (a1, a2, d) in &h2.coproduct[a] {
                terms.push((idx(*i1, *a1), idx(*i2, *a2), c * d));
            }
        }
        coproduct.push(terms);
    }
    let counit = (0..m)
        .map(|x| &h1.counit[x / m2] * &h2.counit[x % m2])
        .collect();
    HopfAlgebra::from_parts(
        (0..m)
            .map(|x| format!("{}.{}", h1.labels[x / m2], h2.labels[x % m2]))
            .collect(),
        mult,
        kron_vec(&h1.unit, &h2.unit),
        coproduct,
        counit,
        h1.antipode.kron(&h2.antipode),
    )
    .expect("tensor product is well formed")
}

/// `H₂ = H ⊗ (F C₂)*`. Basis `b_i ⊗ p_c` sits at `2 i + c`, `c = 0` even, `c = 1` odd.
pub fn h2_of(h: &HopfAlgebra) -> HopfAlgebra {
    tensor(h, &dual(&group_algebra(&GroupTable::cyclic(2))))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum HopfAxiom {
    Associativity,
    Unit,
    Coassociativity,
    Counit,
    Bialgebra,
    Antipode,
}

impl fmt::Display for HopfAxiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            HopfAxiom::Associativity => "associativity",
            HopfAxiom::Unit => "unit",
            HopfAxiom::Coassociativity => "coassociativity",
            HopfAxiom::Counit => "counit",
            HopfAxiom::Bialgebra => "bialgebra",
            HopfAxiom::Antipode => "antipode",
        };
        f.write_str(s)
    }
}

/// Outcome of one axiom family; `first_violation` names basis labels.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomCheck<A> {
    pub axiom: A,
    pub passed: bool,
    pub first_violation: Option<Vec<String>>,
    pub violations: usize,
}

impl<A> AxiomCheck<A> {
    pub(crate) fn new(axiom: A) -> Self {
        AxiomCheck {
            axiom,
            passed: true,
            first_violation: None,
            violations: 0,
        }
    }

    pub(crate) fn record(&mut self, ok: bool, witness: impl FnOnce() -> Vec<String>) {
        if !ok {
            if self.passed {
                self.first_violation = Some(witness());
            }
            self.passed = false;
            self.violations += 1;
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomReport<A> {
    pub checks: Vec<AxiomCheck<A>>,
}

impl<A: PartialEq + Copy> AxiomReport<A> {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, axiom: A) -> Option<&AxiomCheck<A>> {
        self.checks.iter().find(|c| c.axiom == axiom)
    }

    pub fn first_failure(&self) -> Option<&AxiomCheck<A>> {
        self.checks.iter().find(|c| !c.passed)
    }
}

pub type HopfReport = AxiomReport<HopfAxiom>;

/// Checks every Hopf axiom on all basis elements (pairs, triples).
pub fn verify_hopf(h: &HopfAlgebra) -> HopfReport {
    let m = h.dim;
    let e = |i: usize| unit_vector(m, i);
    let lab = |i: usize| h.labels[i].clone();

    let mut assoc = AxiomCheck::new(HopfAxiom::Associativity);
    for i in 0..m {
        for j in 0..m {
            let ij = h.product_of_basis(i, j);
            for k in 0..m {
                let left = h.mul(ij, &e(k));
                let right = h.mul(&e(i), h.product_of_basis(j, k));
                assoc.record(left == right, || vec![lab(i), lab(j), lab(k)]);
            }
        }
    }

    let mut unit = AxiomCheck::new(HopfAxiom::Unit);
    for i in 0..m {
        let ok = h.mul(&h.unit, &e(i)) == e(i) && h.mul(&e(i), &h.unit) == e(i);
        unit.record(ok, || vec![lab(i)]);
    }

    let mut coassoc = AxiomCheck::new(HopfAxiom::Coassociativity);
    let mut counit = AxiomCheck::new(HopfAxiom::Counit);
    let mut antipode = AxiomCheck::new(HopfAxiom::Antipode);
    for i in 0..m {
        let mut left = vec![Q::zero(); m * m * m];
        let mut right = vec![Q::zero(); m * m * m];
        let mut eps_left = vec![Q::zero(); m];
        let mut eps_right = vec![Q::zero(); m];
        let mut s_left = vec![Q::zero(); m];
        let mut s_right = vec![Q::zero(); m];
        for (j, k, c) in &h.coproduct[i] {
            for (a, b, d) in &h.coproduct[*j] {
                left[(a * m + b) * m + k] += c * d;
            }
            for (a, b, d) in &h.coproduct[*k] {
                right[(j * m + a) * m + b] += c * d;
            }
            eps_left[*k] += c * &h.counit[*j];
            eps_right[*j] += c * &h.counit[*k];
            let sj = h.antipode.column(*j);
            let sk = h.antipode.column(*k);
            for (x, y) in s_left.iter_mut().zip(h.mul(&sj, &e(*k))) {
                *x += c * y;
            }
            for (x, y) in s_right.iter_mut().zip(h.mul(&e(*j), &sk)) {
                *x += c * y;
            }
        }
        coassoc.record(left == right, || vec![lab(i)]);
        counit.record(eps_left == e(i) && eps_right == e(i), || vec![lab(i)]);
        let target: Vec<Q> = h.unit.iter().map(|u| u * &h.counit[i]).collect();
        antipode.record(s_left == target && s_right == target, || vec![lab(i)]);
    }

    let mut bialg = AxiomCheck::new(HopfAxiom::Bialgebra);
    let unit_tensor = {
        let mut t = vec![Q::zero(); m * m];
        for (a, x) in h.unit.iter().enumerate() {
            for (b, y) in h.unit.iter().enumerate() {
                t[a * m + b] = x * y;
            }
        }
        t
    };
    bialg.record(
        h.coproduct(&h.unit) == unit_tensor && h.counit_of(&h.unit).is_one(),
        || vec!["1".into()],
    );
    for i in 0..m {
        let di = h.coproduct(&e(i));
        for j in 0..m {
            let dj = h.coproduct(&e(j));
            let prod = h.product_of_basis(i, j);
            let ok = h.coproduct(prod) == h.mul_tensor(&di, &dj)
                && h.counit_of(prod) == &h.counit[i] * &h.counit[j];
            bialg.record(ok, || vec![lab(i), lab(j)]);
        }
    }

    AxiomReport {
        checks: vec![assoc, unit, coassoc, counit, bialg, antipode],
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn c2_group_algebra() {
        let h = group_algebra(&GroupTable::cyclic(2));
        assert_eq!(h.dim(), 2);
        assert_eq!(h.coproduct_terms(1), &[(1, 1, Q::one())]);
        assert_eq!(h.antipode_of(&unit_vector(2, 1)), unit_vector(2, 1));
        assert!(verify_hopf(&h).passed());
    }

    #[test]
    fn trivial_group_algebra() {
        let h = HopfAlgebra::trivial();
        assert_eq!(h.dim(), 1);
        assert_eq!(h.unit(), &[Q::one()]);
        assert_eq!(h.counit(), &[Q::one()]);
        assert!(verify_hopf(&h).passed());
    }

    #[test]
    fn s3_group_algebra_passes() {
        let h = group_algebra(&GroupTable::symmetric(3));
        assert_eq!(h.dim(), 6);
        assert!(verify_hopf(&h).passed());
    }

    #[test]
    fn zero_antipode_fails_antipode_axiom_only() {
        let h = group_algebra(&GroupTable::cyclic(2));
        let broken = HopfAlgebra {
            antipode: Matrix::zeros(2, 2),
            ..h
        };
        let report = verify_hopf(&broken);
        assert!(!report.passed());
        let failed: Vec<_> = report.checks.iter().filter(|c| !c.passed).collect();
        assert_eq!(failed.len(), 1);
        assert_eq!(failed[0].axiom, HopfAxiom::Antipode);
        // both e and g violate m(S⊗id)Δ = uε
        assert_eq!(failed[0].violations, 2);
    }

    #[test]
    fn dual_of_c2_is_orthogonal_idempotents() {
        let d = dual(&group_algebra(&GroupTable::cyclic(2)));
        for a in 0..2 {
            for b in 0..2 {
                let expect = if a == b { unit_vector(2, a) } else { vec![Q::zero(); 2] };
                assert_eq!(d.product_of_basis(a, b), expect.as_slice());
            }
        }
        assert_eq!(d.unit(), &[Q::one(), Q::one()]);
        assert!(verify_hopf(&d).passed());
    }

    #[test]
    fn dual_of_trivial_is_trivial() {
        let t = HopfAlgebra::trivial();
        assert!(dual(&t).same_structure(&t, &[0]));
    }

    #[test]
    fn double_dual_of_c3() {
        let h = group_algebra(&GroupTable::cyclic(3));
        let dd = dual(&dual(&h));
        assert!(dd.same_structure(&h, &[0, 1, 2]));
        assert_eq!(dd.labels()[1], "p_p_g");
    }

    #[test]
    fn tensor_dimensions_and_unit() {
        let h = group_algebra(&GroupTable::cyclic(2));
        let t = tensor(&h, &HopfAlgebra::trivial());
        assert!(t.same_structure(&h, &[0, 1]));
        let mixed = tensor(&h, &dual(&h));
        assert_eq!(mixed.dim(), 4);
        assert!(verify_hopf(&mixed).passed());
        assert_eq!(h2_of(&HopfAlgebra::trivial()).dim(), 2);
    }

    #[test]
    fn group_table_rejections() {
        let err = GroupTable::new(vec![vec![0, 1], vec![1, 1]], 0, vec!["e".into(), "a".into()]);
        assert!(matches!(err, Err(Error::InvalidGroupTable { axiom: "inverses", .. })));
        let err = GroupTable::new(vec![vec![1, 0], vec![0, 1]], 0, vec!["e".into(), "a".into()]);
        assert!(matches!(err, Err(Error::InvalidGroupTable { axiom: "identity", .. })));
        let err = GroupTable::new(vec![vec![0, 2]], 0, vec!["e".into()]);
        assert!(matches!(err, Err(Error::InvalidGroupTable { axiom: "closure", .. })));
    }

    #[test]
    fn builtin_orders() {
        for (name, order) in [("C5", 5), ("V4", 4), ("S3", 6), ("D4", 8), ("Q8", 8), ("trivial", 1)] {
            assert_eq!(GroupTable::builtin(name).unwrap().order(), order, "{name}");
        }
        assert!(GroupTable::builtin("X9").is_err());
    }

    #[test]
    fn iterated_coproduct_of_group_like() {
        let h = group_algebra(&GroupTable::cyclic(3));
        let t = h.iterated_coproduct(&unit_vector(3, 2), 3);
        assert_eq!(t, vec![(vec![2, 2, 2], Q::one())]);
    }
}
