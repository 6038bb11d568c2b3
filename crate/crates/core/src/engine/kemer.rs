//! Bounded search for non-identities alternating on `mu` small sets of size
//! `alpha` and `s` big sets of size `alpha + 1`.
//!
//! Candidates are `Alt_{X_1} ⋯ Alt_{X_k}(w)` for skeleton words `w` in which the
//! variables of each set appear in increasing order; every polynomial of the
//! shape is a combination of these, so a complete sweep of one degree is a proof
//! that the shape yields only identities there. Evaluation runs on the certified
//! Wedderburn basis (semisimple elements, then radical elements).

use serde::Serialize;

use super::capelli::for_each_combination;
use super::evaluate::{densify, for_each_tuple, BasisEvaluator};
use crate::error::{Error, Result};
use crate::linalg::{is_zero_vector, Matrix};
use crate::module_algebra::{require_certified, HModuleAlgebra, WedderburnData};
use crate::perm::Permutation;
use crate::poly::{alt, HPolynomial, Monomial, Var};
use crate::rational::Q;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct KemerShape {
    pub alpha: usize,
    pub s: usize,
    pub mu: usize,
}

impl KemerShape {
    /// Number of alternating variables.
    pub fn width(&self) -> usize {
        self.mu * self.alpha + self.s * (self.alpha + 1)
    }

    /// Small sets first, then big sets, numbered `x1, x2, ..` consecutively.
    pub fn sets(&self) -> Vec<Vec<Var>> {
        let mut next = 1u32;
        let mut out = Vec::new();
        let sizes = std::iter::repeat_n(self.alpha, self.mu)
            .chain(std::iter::repeat_n(self.alpha + 1, self.s));
        for size in sizes {
            out.push((next..next + size as u32).map(Var::x).collect());
            next += size as u32;
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KemerWitness {
    pub alpha: usize,
    pub s: usize,
    pub mu: usize,
    pub degree: usize,
    /// `Alt_{X_1} ⋯ Alt_{X_k}(skeleton)`.
    #[serde(skip)]
    pub polynomial: HPolynomial,
    #[serde(skip)]
    pub skeleton: Monomial,
    pub sets: Vec<Vec<String>>,
    /// Certificate: variable and its value in the algebra's own coordinates.
    pub assignment: Vec<(String, Vec<String>)>,
    #[serde(with = "crate::rational::serde_q::vec")]
    pub value: Vec<Q>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum KemerOutcome {
    Witness(KemerWitness),
    /// No witness. `complete` means every candidate up to `max_degree` was evaluated.
    Exhausted { complete: bool },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KemerSearchReport {
    pub alpha: usize,
    pub s: usize,
    pub mu: usize,
    pub max_degree: usize,
    pub candidates_examined: u64,
    pub work: u128,
    pub outcome: KemerOutcome,
}

impl KemerSearchReport {
    pub fn witness(&self) -> Option<&KemerWitness> {
        match &self.outcome {
            KemerOutcome::Witness(w) => Some(w),
            KemerOutcome::Exhausted { .. } => None,
        }
    }
}

/// Columns: component vectors in order, then radical vectors.
fn wedderburn_basis(w: &WedderburnData, n: usize) -> Matrix {
    let cols: Vec<Vec<Q>> = w
        .components
        .iter()
        .flatten()
        .chain(&w.radical_basis)
        .cloned()
        .collect();
    Matrix::from_columns(&cols, n)
}

/// Skeleton words of length `degree`, in lexicographic order.
fn skeletons(sets: &[Vec<Var>], ys: &[Var], m: usize, mut f: impl FnMut(&Monomial) -> bool) {
    let degree = sets.iter().map(Vec::len).sum::<usize>() + ys.len();
    let mut next_in_set = vec![0usize; sets.len()];
    let mut y_used = vec![false; ys.len()];
    let mut word: Monomial = Vec::with_capacity(degree);
    fn rec(
        sets: &[Vec<Var>],
        ys: &[Var],
        m: usize,
        degree: usize,
        next_in_set: &mut [usize],
        y_used: &mut [bool],
        word: &mut Monomial,
        f: &mut dyn FnMut(&Monomial) -> bool,
    ) -> bool {
        if word.len() == degree {
            return f(word);
        }
        // choices in variable order: x-sets are numbered below every y
        for si in 0..sets.len() {
            let k = next_in_set[si];
            if k == sets[si].len() {
                continue;
            }
            next_in_set[si] += 1;
            for h in 0..m {
                word.push((sets[si][k], h));
                let go = rec(sets, ys, m, degree, next_in_set, y_used, word, f);
                word.pop();
                if !go {
                    next_in_set[si] -= 1;
                    return false;
                }
            }
            next_in_set[si] -= 1;
        }
        for yi in 0..ys.len() {
            if y_used[yi] {
                continue;
            }
            y_used[yi] = true;
            for h in 0..m {
                word.push((ys[yi], h));
                let go = rec(sets, ys, m, degree, next_in_set, y_used, word, f);
                word.pop();
                if !go {
                    y_used[yi] = false;
                    return false;
                }
            }
            y_used[yi] = false;
        }
        true
    }
    rec(sets, ys, m, degree, &mut next_in_set, &mut y_used, &mut word, &mut f);
}

/// Searches degrees `width..=max_degree` for a non-identity of the given shape.
pub fn kemer_witness_search(
    a: &HModuleAlgebra,
    w: &WedderburnData,
    shape: KemerShape,
    max_degree: usize,
    budget: u128,
) -> Result<KemerSearchReport> {
    require_certified(a, w)?;
    if shape.alpha == 0 {
        return Err(Error::InvalidInput("alpha must be at least 1".into()));
    }
    if shape.width() == 0 {
        return Err(Error::InvalidInput("at least one alternating set is required".into()));
    }
    let n = a.dim();
    let m = a.hopf_dim();
    let p = wedderburn_basis(w, n);
    let wa = a.change_basis(&p)?;
    let ev = BasisEvaluator::new(&wa);
    let sets = shape.sets();
    let set_perms: Vec<Vec<Permutation>> = sets.iter().map(|s| Permutation::all(s.len())).collect();
    // each set takes an increasing combination of basis indices, each y any basis element
    let combos: Vec<Vec<Vec<usize>>> = sets
        .iter()
        .map(|s| {
            let mut cs = Vec::new();
            for_each_combination(n, s.len(), |c| {
                cs.push(c.to_vec());
                true
            });
            cs
        })
        .collect();
    let mut candidates = 0u64;
    let mut work: u128 = 0;
    let mut found: Option<(usize, Monomial, Vec<usize>, Vec<Q>)> = None;
    let mut out_of_budget = false;

    for degree in shape.width()..=max_degree {
        let ys: Vec<Var> = (1..=(degree - shape.width()) as u32).map(Var::y).collect();
        skeletons(&sets, &ys, m, |word| {
            candidates += 1;
            let mut choice = vec![0usize; sets.len()];
            let total: usize = combos.iter().map(Vec::len).product();
            for _ in 0..total {
                let mut stop = false;
                for_each_tuple(ys.len(), n, |yt| {
                    let value = alternated_value(&ev, word, &sets, &set_perms, &combos, &choice, yt, &mut work);
                    if !is_zero_vector(&value) {
                        let mut tuple: Vec<usize> = Vec::new();
                        for (si, c) in choice.iter().enumerate() {
                            tuple.extend(&combos[si][*c]);
                        }
                        tuple.extend(yt);
                        found = Some((degree, word.clone(), tuple, value));
                        stop = true;
                        return false;
                    }
                    if work > budget {
                        out_of_budget = true;
                        stop = true;
                        return false;
                    }
                    true
                });
                if stop {
                    return false;
                }
                // odometer over combination choices
                for k in (0..choice.len()).rev() {
                    choice[k] += 1;
                    if choice[k] < combos[k].len() {
                        break;
                    }
                    choice[k] = 0;
                }
            }
            true
        });
        if found.is_some() || out_of_budget {
            break;
        }
    }

    let outcome = match found {
        Some((degree, skeleton, tuple, value)) => {
            let mut f = HPolynomial::from_monomial(m, skeleton.clone());
            for s in &sets {
                f = alt(&f, s);
            }
            let vars: Vec<Var> = sets
                .iter()
                .flatten()
                .copied()
                .chain((1..=(degree - shape.width()) as u32).map(Var::y))
                .collect();
            let assignment = vars
                .iter()
                .zip(&tuple)
                .map(|(v, &j)| (v.to_string(), p.column(j).iter().map(crate::rational::format_q).collect()))
                .collect();
            KemerOutcome::Witness(KemerWitness {
                alpha: shape.alpha,
                s: shape.s,
                mu: shape.mu,
                degree,
                polynomial: f,
                skeleton,
                sets: sets
                    .iter()
                    .map(|s| s.iter().map(Var::to_string).collect())
                    .collect(),
                assignment,
                value: p.mul_vec(&value),
            })
        }
        None => KemerOutcome::Exhausted {
            complete: !out_of_budget,
        },
    };
    Ok(KemerSearchReport {
        alpha: shape.alpha,
        s: shape.s,
        mu: shape.mu,
        max_degree,
        candidates_examined: candidates,
        work,
        outcome,
    })
}

/// `Σ_{σ_i} Π sign(σ_i) w(...)` at the chosen combinations and y-values.
#[allow(clippy::too_many_arguments)]
fn alternated_value(
    ev: &BasisEvaluator,
    word: &Monomial,
    sets: &[Vec<Var>],
    set_perms: &[Vec<Permutation>],
    combos: &[Vec<Vec<usize>>],
    choice: &[usize],
    ys: &[usize],
    work: &mut u128,
) -> Vec<Q> {
    let n = ev.dim();
    let mut total = vec![Q::default(); n];
    let k = sets.len();
    let mut idx = vec![0usize; k];
    loop {
        let mut sign = 1i64;
        for si in 0..k {
            sign *= set_perms[si][idx[si]].sign();
        }
        let basis_of = |v: Var| -> usize {
            if v.family == crate::poly::Family::Y {
                return ys[(v.index - 1) as usize];
            }
            for (si, s) in sets.iter().enumerate() {
                if let Some(pos) = s.iter().position(|u| *u == v) {
                    return combos[si][choice[si]][set_perms[si][idx[si]].apply(pos)];
                }
            }
            unreachable!("variable outside the layout")
        };
        *work += 1;
        let val = ev.word(word, basis_of);
        let c = Q::from_integer(sign.into());
        for (i, x) in densify(&val, n).into_iter().enumerate() {
            total[i] += &c * x;
        }
        let mut p = k;
        loop {
            if p == 0 {
                return total;
            }
            p -= 1;
            idx[p] += 1;
            if idx[p] < set_perms[p].len() {
                break;
            }
            idx[p] = 0;
        }
    }
}

/// Best `(alpha, s)` in lexicographic order with a witness for `mu` small sets
/// at degree `<= max_degree`, with that witness.
pub fn best_index_evidence(
    a: &HModuleAlgebra,
    w: &WedderburnData,
    mu: usize,
    max_degree: usize,
    budget: u128,
) -> Result<Option<KemerWitness>> {
    for alpha in (1..=a.dim() + 1).rev() {
        if mu * alpha > max_degree {
            continue;
        }
        let max_s = (max_degree - mu * alpha) / (alpha + 1);
        for s in (0..=max_s).rev() {
            let shape = KemerShape { alpha, s, mu };
            if shape.width() == 0 {
                continue;
            }
            let report = kemer_witness_search(a, w, shape, max_degree, budget)?;
            if let KemerOutcome::Witness(wit) = report.outcome {
                return Ok(Some(wit));
            }
        }
    }
    Ok(None)
}
