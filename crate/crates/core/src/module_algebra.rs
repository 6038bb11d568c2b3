//! H-module algebras: an associative algebra together with one action matrix
//! per Hopf basis element, plus certified Wedderburn–Malcev data.

use std::fmt;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::hopf::{dual, AxiomCheck, AxiomReport, HopfAlgebra};
use crate::linalg::{add_scaled, is_zero_vector, unit_vector, Matrix, Subspace};
use crate::rational::Q;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HModuleAlgebra {
    hopf: HopfAlgebra,
    algebra: Algebra,
    action: Vec<Matrix>,
}

impl HModuleAlgebra {
    /// Structural checks only; run [`verify_module_algebra`] for the axioms.
    pub fn new(hopf: HopfAlgebra, algebra: Algebra, action: Vec<Matrix>) -> Result<Self> {
        if action.len() != hopf.dim() {
            return Err(Error::DimensionMismatch {
                context: "action matrices (one per Hopf basis element)".into(),
                expected: hopf.dim(),
                found: action.len(),
            });
        }
        let n = algebra.dim();
        if let Some((i, m)) = action
            .iter()
            .enumerate()
            .find(|(_, m)| m.rows() != n || m.cols() != n)
        {
            return Err(Error::DimensionMismatch {
                context: format!("action matrix of {}", hopf.labels()[i]),
                expected: n,
                found: m.rows().max(m.cols()),
            });
        }
        Ok(HModuleAlgebra {
            hopf,
            algebra,
            action,
        })
    }

    /// Every `h` acts by `ε(h)`.
    pub fn with_counit_action(hopf: HopfAlgebra, algebra: Algebra) -> Self {
        let n = algebra.dim();
        let action = hopf.counit().iter().map(|e| Matrix::scalar(n, e)).collect();
        HModuleAlgebra {
            hopf,
            algebra,
            action,
        }
    }

    /// `algebra` with the trivial one-dimensional Hopf algebra.
    pub fn plain(algebra: Algebra) -> Self {
        Self::with_counit_action(HopfAlgebra::trivial(), algebra)
    }

    pub fn hopf(&self) -> &HopfAlgebra {
        &self.hopf
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn hopf_dim(&self) -> usize {
        self.hopf.dim()
    }

    pub fn labels(&self) -> &[String] {
        self.algebra.labels()
    }

    pub fn action(&self, i: usize) -> &Matrix {
        &self.action[i]
    }

    pub fn actions(&self) -> &[Matrix] {
        &self.action
    }

    pub fn mul(&self, a: &[Q], b: &[Q]) -> Vec<Q> {
        self.algebra.mul(a, b)
    }

    /// `b_i · v`.
    pub fn act(&self, i: usize, v: &[Q]) -> Vec<Q> {
        self.action[i].mul_vec(v)
    }

    /// Operator of a general Hopf element.
    pub fn action_of(&self, h: &[Q]) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zeros(n, n);
        for (i, c) in h.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            m = m.add(&self.action[i].scale(c));
        }
        m
    }

    /// Same module algebra in the basis given by the columns of `p`.
    pub fn change_basis(&self, p: &Matrix) -> Result<HModuleAlgebra> {
        let algebra = self.algebra.change_basis(p)?;
        let inv = p.inverse().expect("checked by Algebra::change_basis");
        let action = self.action.iter().map(|a| inv.mul(a).mul(p)).collect();
        Ok(HModuleAlgebra {
            hopf: self.hopf.clone(),
            algebra,
            action,
        })
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        self.algebra = self.algebra.with_labels(labels);
        self
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ModuleAxiom {
    Associativity,
    Unit,
    ModuleMultiplicative,
    ModuleUnit,
    Compatibility,
    UnitCompatibility,
}

impl fmt::Display for ModuleAxiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ModuleAxiom::Associativity => "associativity",
            ModuleAxiom::Unit => "unit",
            ModuleAxiom::ModuleMultiplicative => "module_multiplicative",
            ModuleAxiom::ModuleUnit => "module_unit",
            ModuleAxiom::Compatibility => "compatibility",
            ModuleAxiom::UnitCompatibility => "unit_compatibility",
        };
        f.write_str(s)
    }
}

pub type ModuleReport = AxiomReport<ModuleAxiom>;

/// Checks the algebra axioms, that the action is an `H`-module, and the
/// module-algebra laws `h(ab) = Σ (h₍₁₎a)(h₍₂₎b)`, `h·1 = ε(h)1`.
pub fn verify_module_algebra(a: &HModuleAlgebra) -> ModuleReport {
    let n = a.dim();
    let m = a.hopf_dim();
    let h = &a.hopf;
    let alab = |i: usize| a.labels()[i].clone();
    let hlab = |i: usize| h.labels()[i].clone();

    let mut assoc = AxiomCheck::new(ModuleAxiom::Associativity);
    if let Some((i, j, k)) = a.algebra.associativity_violation() {
        assoc.record(false, || vec![alab(i), alab(j), alab(k)]);
    }

    let mut unit = AxiomCheck::new(ModuleAxiom::Unit);
    if let Some(u) = a.algebra.unit() {
        for i in 0..n {
            let e = unit_vector(n, i);
            unit.record(a.mul(u, &e) == e && a.mul(&e, u) == e, || vec![alab(i)]);
        }
    }

    let mut mult = AxiomCheck::new(ModuleAxiom::ModuleMultiplicative);
    for i in 0..m {
        for j in 0..m {
            let lhs = a.action_of(h.product_of_basis(i, j));
            let rhs = a.action[i].mul(&a.action[j]);
            mult.record(lhs == rhs, || vec![hlab(i), hlab(j)]);
        }
    }
    let mut munit = AxiomCheck::new(ModuleAxiom::ModuleUnit);
    munit.record(a.action_of(h.unit()) == Matrix::identity(n), || vec!["1".into()]);

    let mut compat = AxiomCheck::new(ModuleAxiom::Compatibility);
    for k in 0..m {
        for x in 0..n {
            for y in 0..n {
                let ex = unit_vector(n, x);
                let ey = unit_vector(n, y);
                let lhs = a.act(k, &a.mul(&ex, &ey));
                let mut rhs = vec![Q::zero(); n];
                for (k1, k2, c) in h.coproduct_terms(k) {
                    let prod = a.mul(&a.act(*k1, &ex), &a.act(*k2, &ey));
                    add_scaled(&mut rhs, c, &prod);
                }
                compat.record(lhs == rhs, || vec![hlab(k), alab(x), alab(y)]);
            }
        }
    }

    let mut ucompat = AxiomCheck::new(ModuleAxiom::UnitCompatibility);
    if let Some(u) = a.algebra.unit() {
        for k in 0..m {
            let target: Vec<Q> = u.iter().map(|x| x * &h.counit()[k]).collect();
            ucompat.record(a.act(k, u) == target, || vec![hlab(k)]);
        }
    }

    AxiomReport {
        checks: vec![assoc, unit, mult, munit, compat, ucompat],
    }
}

/// `A₀ ⊗ H*` with `H` acting on the dual factor by `(h·φ)(g) = φ(gh)`.
/// The basis element `a_i ⊗ p_k` sits at index `i * dim H + k`.
pub fn dual_action_extension(a0: &Algebra, h: &HopfAlgebra) -> HModuleAlgebra {
    let m = h.dim();
    let hd = dual(h);
    let dual_alg = Algebra::from_dense(
        hd.labels().to_vec(),
        (0..m * m).map(|x| hd.product_of_basis(x / m, x % m).to_vec()).collect(),
        Some(hd.unit().to_vec()),
    )
    .expect("dual Hopf algebra is an algebra");
    let algebra = Algebra::tensor(a0, &dual_alg);
    // b_i · p_k = Σ_j (coefficient of b_k in b_j b_i) p_j
    let translations: Vec<Matrix> = (0..m)
        .map(|i| {
            let mut t = Matrix::zeros(m, m);
            for j in 0..m {
                for k in 0..m {
                    let c = &h.product_of_basis(j, i)[k];
                    if !c.is_zero() {
                        t.set(j, k, c.clone());
                    }
                }
            }
            t
        })
        .collect();
    let id = Matrix::identity(a0.dim());
    let action = translations.iter().map(|t| id.kron(t)).collect();
    HModuleAlgebra::new(h.clone(), algebra, action).expect("dimensions agree by construction")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PhiReport {
    /// Coordinates of φ in the dual basis: `φ(b_i) = δ_{0,i}`.
    #[serde(with = "crate::rational::serde_q::vec")]
    pub phi: Vec<Q>,
    pub rank: usize,
    pub independent: bool,
}

/// The functional `φ(b_i) = δ_{0,i}` and the rank of `{b_i · φ}` in `H*`.
pub fn phi_functional(h: &HopfAlgebra) -> PhiReport {
    let m = h.dim();
    let phi = unit_vector(m, 0);
    let ext = dual_action_extension(&Algebra::rationals(), h);
    let rows: Vec<Vec<Q>> = (0..m).map(|i| ext.act(i, &phi)).collect();
    let rank = Matrix::from_rows(rows).rank();
    PhiReport {
        phi,
        rank,
        independent: rank == m,
    }
}

/// Adjoins a unit `1` (appended last) on which `h` acts by `ε(h)`.
/// Returns the input unchanged, with `false`, when it already has a unit.
pub fn adjoin_unit(a: &HModuleAlgebra) -> (HModuleAlgebra, bool) {
    if a.algebra.find_unit().is_some() {
        return (a.clone(), false);
    }
    let n = a.dim();
    let one = n;
    let mut labels = a.labels().to_vec();
    labels.push("1".into());
    let mut entries = a.algebra.entries();
    for i in 0..=n {
        entries.push((one, i, i, Q::one()));
        if i != one {
            entries.push((i, one, i, Q::one()));
        }
    }
    let algebra = Algebra::from_entries(labels, entries, Some(unit_vector(n + 1, one)))
        .expect("indices in range");
    let action = a
        .action
        .iter()
        .zip(a.hopf.counit())
        .map(|(m, e)| {
            let mut big = Matrix::zeros(n + 1, n + 1);
            for i in 0..n {
                for j in 0..n {
                    big.set(i, j, m.get(i, j).clone());
                }
            }
            big.set(one, one, e.clone());
            big
        })
        .collect();
    (
        HModuleAlgebra {
            hopf: a.hopf.clone(),
            algebra,
            action,
        },
        true,
    )
}

/// Basis of the Jacobson radical: elements `x` with `tr L_x = 0` and
/// `tr L_{x b_j} = 0` for every basis element `b_j`.
pub fn radical(a: &HModuleAlgebra) -> Vec<Vec<Q>> {
    radical_of(&a.algebra)
}

pub fn radical_of(alg: &Algebra) -> Vec<Vec<Q>> {
    let n = alg.dim();
    let traces: Vec<Q> = (0..n).map(|i| alg.left_mult(&unit_vector(n, i)).trace()).collect();
    // tr L_{b_i b_j} = Σ_k c_ij^k tr L_{b_k}
    let mut rows = Vec::with_capacity(n + 1);
    for j in 0..n {
        let row = (0..n)
            .map(|i| {
                alg.product_of_basis(i, j)
                    .iter()
                    .map(|(k, c)| c * &traces[*k])
                    .sum()
            })
            .collect();
        rows.push(row);
    }
    rows.push(traces);
    Matrix::from_rows(rows).nullspace()
}

/// Certified Wedderburn–Malcev data: `A = R_1 ⊕ .. ⊕ R_q ⊕ J`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WedderburnData {
    pub components: Vec<Vec<Vec<Q>>>,
    pub radical_basis: Vec<Vec<Q>>,
    pub nilpotency_index: usize,
}

impl WedderburnData {
    /// `d = Σ dim R_i`.
    pub fn semisimple_dim(&self) -> usize {
        self.components.iter().map(Vec::len).sum()
    }

    /// Components given by coordinate indices in the ambient basis.
    pub fn from_indices(dim: usize, components: &[&[usize]], radical: &[usize], nilpotency_index: usize) -> Self {
        WedderburnData {
            components: components
                .iter()
                .map(|c| c.iter().map(|&i| unit_vector(dim, i)).collect())
                .collect(),
            radical_basis: radical.iter().map(|&i| unit_vector(dim, i)).collect(),
            nilpotency_index,
        }
    }

    /// Transports the data to the basis given by the columns of `p`.
    pub fn change_basis(&self, p: &Matrix) -> Result<Self> {
        let inv = p
            .inverse()
            .ok_or_else(|| Error::InvalidInput("basis change matrix is singular".into()))?;
        let map = |vs: &Vec<Vec<Q>>| vs.iter().map(|v| inv.mul_vec(v)).collect::<Vec<_>>();
        Ok(WedderburnData {
            components: self.components.iter().map(map).collect(),
            radical_basis: map(&self.radical_basis),
            nilpotency_index: self.nilpotency_index,
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum WedderburnAxiom {
    DirectSum,
    ComponentClosed,
    ComponentStable,
    ComponentUnital,
    Orthogonal,
    RadicalIdeal,
    RadicalStable,
    Nilpotency,
    RadicalMatches,
}

impl fmt::Display for WedderburnAxiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            WedderburnAxiom::DirectSum => "direct_sum",
            WedderburnAxiom::ComponentClosed => "component_closed",
            WedderburnAxiom::ComponentStable => "component_stable",
            WedderburnAxiom::ComponentUnital => "component_unital",
            WedderburnAxiom::Orthogonal => "orthogonal",
            WedderburnAxiom::RadicalIdeal => "radical_ideal",
            WedderburnAxiom::RadicalStable => "radical_stable",
            WedderburnAxiom::Nilpotency => "nilpotency",
            WedderburnAxiom::RadicalMatches => "radical_matches",
        };
        f.write_str(s)
    }
}

pub type WedderburnReport = AxiomReport<WedderburnAxiom>;

fn check_lengths(a: &HModuleAlgebra, w: &WedderburnData) -> Result<()> {
    let n = a.dim();
    for v in w.components.iter().flatten().chain(&w.radical_basis) {
        if v.len() != n {
            return Err(Error::DimensionMismatch {
                context: "Wedderburn data vector".into(),
                expected: n,
                found: v.len(),
            });
        }
    }
    Ok(())
}

/// Unit of the subalgebra spanned by `basis`, if it has one.
pub fn subalgebra_unit(a: &HModuleAlgebra, basis: &[Vec<Q>]) -> Option<Vec<Q>> {
    let n = a.dim();
    let r = basis.len();
    if r == 0 {
        return None;
    }
    // u = Σ c_l v_l with u v_j = v_j = v_j u
    let mut rows: Vec<Vec<Q>> = Vec::new();
    let mut rhs = Vec::new();
    for vj in basis {
        let left: Vec<Vec<Q>> = basis.iter().map(|vl| a.mul(vl, vj)).collect();
        let right: Vec<Vec<Q>> = basis.iter().map(|vl| a.mul(vj, vl)).collect();
        for k in 0..n {
            rows.push(left.iter().map(|p| p[k].clone()).collect());
            rhs.push(vj[k].clone());
            rows.push(right.iter().map(|p| p[k].clone()).collect());
            rhs.push(vj[k].clone());
        }
    }
    let c = Matrix::from_rows(rows).solve(&rhs)?;
    let mut u = vec![Q::zero(); n];
    for (cl, vl) in c.iter().zip(basis) {
        add_scaled(&mut u, cl, vl);
    }
    Some(u)
}

/// Checks every invariant of `w` against `a`.
pub fn wedderburn_certify(a: &HModuleAlgebra, w: &WedderburnData) -> Result<WedderburnReport> {
    check_lengths(a, w)?;
    let n = a.dim();
    let lab = |s: String| vec![s];

    let mut direct = AxiomCheck::new(WedderburnAxiom::DirectSum);
    let all: Vec<Vec<Q>> = w
        .components
        .iter()
        .flatten()
        .chain(&w.radical_basis)
        .cloned()
        .collect();
    let total = Subspace::span(n, all.iter().cloned());
    direct.record(all.len() == n && total.dim() == n, || {
        lab(format!("{} vectors spanning dimension {} of {n}", all.len(), total.dim()))
    });

    let spaces: Vec<Subspace> = w
        .components
        .iter()
        .map(|c| Subspace::span(n, c.iter().cloned()))
        .collect();
    let rad = Subspace::span(n, w.radical_basis.iter().cloned());

    let mut closed = AxiomCheck::new(WedderburnAxiom::ComponentClosed);
    let mut stable = AxiomCheck::new(WedderburnAxiom::ComponentStable);
    let mut unital = AxiomCheck::new(WedderburnAxiom::ComponentUnital);
    for (ci, (c, s)) in w.components.iter().zip(&spaces).enumerate() {
        let name = format!("component {}", ci + 1);
        let ok = c.iter().all(|u| c.iter().all(|v| s.contains(&a.mul(u, v))));
        closed.record(ok, || lab(name.clone()));
        for (hi, act) in a.action.iter().enumerate() {
            stable.record(s.is_invariant_under(act), || {
                vec![name.clone(), a.hopf.labels()[hi].clone()]
            });
        }
        let ok = subalgebra_unit(a, c).is_some_and(|u| s.contains(&u));
        unital.record(ok, || lab(name.clone()));
    }

    let mut orth = AxiomCheck::new(WedderburnAxiom::Orthogonal);
    for (i, ci) in w.components.iter().enumerate() {
        for (j, cj) in w.components.iter().enumerate() {
            if i == j {
                continue;
            }
            let ok = ci
                .iter()
                .all(|u| cj.iter().all(|v| is_zero_vector(&a.mul(u, v))));
            orth.record(ok, || {
                vec![format!("component {}", i + 1), format!("component {}", j + 1)]
            });
        }
    }

    let mut ideal = AxiomCheck::new(WedderburnAxiom::RadicalIdeal);
    for r in &w.radical_basis {
        for i in 0..n {
            let e = unit_vector(n, i);
            let ok = rad.contains(&a.mul(r, &e)) && rad.contains(&a.mul(&e, r));
            ideal.record(ok, || vec![a.labels()[i].clone()]);
        }
    }
    let mut rstable = AxiomCheck::new(WedderburnAxiom::RadicalStable);
    for (hi, act) in a.action.iter().enumerate() {
        rstable.record(rad.is_invariant_under(act), || vec![a.hopf.labels()[hi].clone()]);
    }

    let mut nil = AxiomCheck::new(WedderburnAxiom::Nilpotency);
    let idx = w.nilpotency_index;
    let ok = idx == nilpotency_index(&a.algebra, &rad);
    nil.record(ok, || lab(format!("nilpotency index {idx}")));

    let mut matches = AxiomCheck::new(WedderburnAxiom::RadicalMatches);
    let computed = Subspace::span(n, radical(a));
    matches.record(computed.same_as(&rad), || {
        lab(format!("declared dimension {}, computed {}", rad.dim(), computed.dim()))
    });

    Ok(AxiomReport {
        checks: vec![direct, closed, stable, unital, orth, ideal, rstable, nil, matches],
    })
}

/// Least `k >= 1` with `J^k = 0`; `1` for the zero ideal.
pub fn nilpotency_index(alg: &Algebra, j: &Subspace) -> usize {
    let mut power = j.clone();
    let mut k = 1;
    while !power.is_zero() {
        power = alg.product_space(&power, j);
        k += 1;
        assert!(k <= alg.dim() + 1, "ideal is not nilpotent");
    }
    k
}

/// `wedderburn_certify` as a gate: fails naming the first violated invariant.
pub fn require_certified(a: &HModuleAlgebra, w: &WedderburnData) -> Result<()> {
    let report = wedderburn_certify(a, w)?;
    match report.first_failure() {
        None => Ok(()),
        Some(c) => Err(Error::Uncertified(format!(
            "{} fails at {}",
            c.axiom,
            c.first_violation.clone().unwrap_or_default().join(", ")
        ))),
    }
}

/// `Par(A) = (Σ dim R_i, n_A - 1)`.
pub fn par(w: &WedderburnData) -> (usize, usize) {
    (w.semisimple_dim(), w.nilpotency_index.saturating_sub(1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::{group_algebra, GroupTable};
    use crate::rational::q;

    fn c2() -> HopfAlgebra {
        group_algebra(&GroupTable::cyclic(2))
    }

    #[test]
    fn m2_with_counit_action_passes() {
        let a = HModuleAlgebra::plain(Algebra::matrix(2));
        assert!(verify_module_algebra(&a).passed());
    }

    #[test]
    fn left_regular_action_is_not_module_algebra() {
        let h = c2();
        let alg = Algebra::from_dense(
            h.labels().to_vec(),
            (0..4).map(|x| h.product_of_basis(x / 2, x % 2).to_vec()).collect(),
            Some(h.unit().to_vec()),
        )
        .unwrap();
        let action = (0..2).map(|i| alg.left_mult(&unit_vector(2, i))).collect();
        let a = HModuleAlgebra::new(h, alg, action).unwrap();
        let report = verify_module_algebra(&a);
        let failure = report.first_failure().unwrap();
        assert_eq!(failure.axiom, ModuleAxiom::Compatibility);
    }

    #[test]
    fn swap_on_q_times_q_passes() {
        let qq = Algebra::direct_product(&Algebra::rationals(), &Algebra::rationals());
        let swap = Matrix::from_i64(&[&[0, 1], &[1, 0]]);
        let a = HModuleAlgebra::new(c2(), qq, vec![Matrix::identity(2), swap]).unwrap();
        assert!(verify_module_algebra(&a).passed());
    }

    #[test]
    fn dual_action_on_delta_e() {
        let a = dual_action_extension(&Algebra::rationals(), &c2());
        assert!(verify_module_algebra(&a).passed());
        assert_eq!(a.act(1, &unit_vector(2, 0)), unit_vector(2, 1));
        assert_eq!(a.action(0), &Matrix::identity(2));
    }

    #[test]
    fn dual_action_with_trivial_hopf_is_plain() {
        let a = dual_action_extension(&Algebra::matrix(2), &HopfAlgebra::trivial());
        assert_eq!(a.dim(), 4);
        assert_eq!(a.algebra().entries(), Algebra::matrix(2).entries());
        assert_eq!(a.action(0), &Matrix::identity(4));
    }

    #[test]
    fn phi_ranks() {
        assert_eq!(phi_functional(&HopfAlgebra::trivial()).rank, 1);
        assert_eq!(phi_functional(&c2()).rank, 2);
        let s3 = phi_functional(&group_algebra(&GroupTable::symmetric(3)));
        assert!(s3.independent);
        assert_eq!(s3.rank, 6);
    }

    #[test]
    fn adjoin_unit_cases() {
        let (n1, changed) = adjoin_unit(&HModuleAlgebra::plain(Algebra::zero_product(1)));
        assert!(changed);
        assert_eq!(n1.dim(), 2);
        assert!(verify_module_algebra(&n1).passed());
        assert_eq!(radical(&n1).len(), 1);

        let m2 = HModuleAlgebra::plain(Algebra::matrix(2));
        let (same, changed) = adjoin_unit(&m2);
        assert!(!changed);
        assert_eq!(same, m2);

        // strictly upper 2x2 plus unit is Q[x]/(x^2): x^2 = 0, 1 central
        let (dual_numbers, _) =
            adjoin_unit(&HModuleAlgebra::plain(Algebra::strictly_upper_triangular(2)));
        let x = unit_vector(2, 0);
        assert!(is_zero_vector(&dual_numbers.mul(&x, &x)));
        assert!(dual_numbers.algebra().is_commutative());
    }

    #[test]
    fn radicals() {
        assert!(radical(&HModuleAlgebra::plain(Algebra::matrix(2))).is_empty());
        let ut = radical(&HModuleAlgebra::plain(Algebra::upper_triangular(2)));
        assert_eq!(ut, vec![unit_vector(3, 1)]);
        assert_eq!(radical(&HModuleAlgebra::plain(Algebra::zero_product(1))).len(), 1);
    }

    #[test]
    fn par_values() {
        let m2 = HModuleAlgebra::plain(Algebra::matrix(2));
        let w = WedderburnData::from_indices(4, &[&[0, 1, 2, 3]], &[], 1);
        assert!(wedderburn_certify(&m2, &w).unwrap().passed());
        assert_eq!(par(&w), (4, 0));

        let ut = HModuleAlgebra::plain(Algebra::upper_triangular(2));
        let w = WedderburnData::from_indices(3, &[&[0], &[2]], &[1], 2);
        assert!(wedderburn_certify(&ut, &w).unwrap().passed());
        assert_eq!(par(&w), (2, 1));

        let bad = WedderburnData { nilpotency_index: 3, ..w };
        assert!(require_certified(&ut, &bad).is_err());

        let qa = HModuleAlgebra::plain(Algebra::rationals());
        let w = WedderburnData::from_indices(1, &[&[0]], &[], 1);
        assert!(wedderburn_certify(&qa, &w).unwrap().passed());
        assert_eq!(par(&w), (1, 0));
    }

    #[test]
    fn change_basis_preserves_axioms() {
        let a = dual_action_extension(&Algebra::upper_triangular(2), &c2());
        let mut p = Matrix::identity(6);
        p.set(0, 3, q(2));
        p.set(4, 1, q(-1));
        let b = a.change_basis(&p).unwrap();
        assert!(verify_module_algebra(&b).passed());
    }
}
