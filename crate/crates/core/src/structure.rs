//! The exponent formula over chains of simple components, codimension growth
//! brackets, and the trace identity for alternating polynomials.

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use crate::engine::{codimension, evaluate, Assignment};
use crate::error::{Error, Result};
use crate::linalg::{is_zero_vector, Matrix, Subspace};
use crate::module_algebra::{require_certified, HModuleAlgebra, WedderburnData};
use crate::poly::{HPolynomial, Var};
use crate::rational::{nth_root_bracket, Q};

/// Nonzero product `r_1 j_1 r_2 ⋯ j_{t-1} r_t` along the best chain.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChainCertificate {
    #[serde(with = "crate::rational::serde_q::nested_vec")]
    pub factors: Vec<Vec<Q>>,
    #[serde(with = "crate::rational::serde_q::vec")]
    pub product: Vec<Q>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CodimRoot {
    pub n: usize,
    pub codim: usize,
    /// `low <= codim^(1/n) <= high`.
    #[serde(with = "crate::rational::serde_q")]
    pub low: Q,
    #[serde(with = "crate::rational::serde_q")]
    pub high: Q,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExponentReport {
    pub formula_value: usize,
    pub chains_examined: u64,
    /// Component numbers, counted from 1.
    pub best_chain: Vec<usize>,
    pub certificate: Option<ChainCertificate>,
    pub codim_roots: Option<Vec<CodimRoot>>,
}

/// `max Σ dim R_{i_k}` over distinct `i_1..i_t` with `R_{i_1} J ⋯ J R_{i_t} ≠ 0`.
pub fn exponent_formula(a: &HModuleAlgebra, w: &WedderburnData) -> Result<ExponentReport> {
    require_certified(a, w)?;
    let alg = a.algebra();
    let n = a.dim();
    let comps: Vec<Subspace> = w.components.iter().map(|c| Subspace::span(n, c.clone())).collect();
    let j = Subspace::span(n, w.radical_basis.clone());
    let mut best: (usize, Vec<usize>) = (0, Vec::new());
    let mut examined = 0u64;
    let mut chain = Vec::new();
    let mut used = vec![false; comps.len()];
    #[allow(clippy::too_many_arguments)]
    fn extend(
        alg: &crate::algebra::Algebra,
        comps: &[Subspace],
        j: &Subspace,
        prefix: &Subspace,
        total: usize,
        chain: &mut Vec<usize>,
        used: &mut [bool],
        examined: &mut u64,
        best: &mut (usize, Vec<usize>),
    ) {
        let through_j = alg.product_space(prefix, j);
        if through_j.is_zero() {
            return;
        }
        for i in 0..comps.len() {
            if used[i] {
                continue;
            }
            *examined += 1;
            let next = alg.product_space(&through_j, &comps[i]);
            if next.is_zero() {
                continue;
            }
            let t = total + comps[i].dim();
            chain.push(i);
            used[i] = true;
            if t > best.0 {
                *best = (t, chain.clone());
            }
            extend(alg, comps, j, &next, t, chain, used, examined, best);
            used[i] = false;
            chain.pop();
        }
    }
    for i in 0..comps.len() {
        examined += 1;
        if comps[i].is_zero() {
            continue;
        }
        chain.push(i);
        used[i] = true;
        if comps[i].dim() > best.0 {
            best = (comps[i].dim(), chain.clone());
        }
        extend(alg, &comps, &j, &comps[i], comps[i].dim(), &mut chain, &mut used, &mut examined, &mut best);
        used[i] = false;
        chain.pop();
    }
    let certificate = if best.1.is_empty() {
        None
    } else {
        Some(chain_certificate(a, w, &best.1).ok_or(Error::Uncertified(
            "chain product vanishes on basis elements".into(),
        ))?)
    };
    Ok(ExponentReport {
        formula_value: best.0,
        chains_examined: examined,
        best_chain: best.1.iter().map(|i| i + 1).collect(),
        certificate,
        codim_roots: None,
    })
}

/// Depth-first search over basis factors for a nonzero chain product.
fn chain_certificate(a: &HModuleAlgebra, w: &WedderburnData, chain: &[usize]) -> Option<ChainCertificate> {
    let mut slots: Vec<&[Vec<Q>]> = Vec::new();
    for (k, &i) in chain.iter().enumerate() {
        if k > 0 {
            slots.push(&w.radical_basis);
        }
        slots.push(&w.components[i]);
    }
    fn rec(a: &HModuleAlgebra, slots: &[&[Vec<Q>]], value: Vec<Q>, factors: &mut Vec<Vec<Q>>) -> Option<Vec<Q>> {
        if factors.len() == slots.len() {
            return Some(value);
        }
        for b in slots[factors.len()] {
            let next = a.mul(&value, b);
            if is_zero_vector(&next) {
                continue;
            }
            factors.push(b.clone());
            if let Some(p) = rec(a, slots, next, factors) {
                return Some(p);
            }
            factors.pop();
        }
        None
    }
    for b in slots[0] {
        let mut factors = vec![b.clone()];
        if let Some(product) = rec(a, &slots, b.clone(), &mut factors) {
            return Some(ChainCertificate { factors, product });
        }
    }
    None
}

/// `c_n^H(a)` and an exact bracket around `c_n^{1/n}` for `1 <= n <= n_max`.
pub fn exp_estimate(a: &HModuleAlgebra, n_max: usize, budget: u128) -> Result<Vec<CodimRoot>> {
    (1..=n_max)
        .map(|n| {
            let c = codimension(a, n, budget)?.codim;
            let (low, high) = nth_root_bracket(&BigInt::from(c), n as u32, 1000);
            Ok(CodimRoot { n, codim: c, low, high })
        })
        .collect()
}

/// Coordinates over the Wedderburn basis (component vectors in order, then radical).
fn wedderburn_coordinates(w: &WedderburnData, n: usize, v: &[Q]) -> Result<Vec<Q>> {
    let cols: Vec<Vec<Q>> = w.components.iter().flatten().chain(&w.radical_basis).cloned().collect();
    Matrix::from_columns(&cols, n)
        .solve(v)
        .ok_or_else(|| Error::InvalidInput("Wedderburn data does not span the algebra".into()))
}

/// Per-component traces `(tr_{R_1}(L_{r_1}), .., tr_{R_q}(L_{r_q}))` of the left
/// regular representation, where `v = r_1 + .. + r_q + j`; radical parts contribute 0.
pub fn trace_of(a: &HModuleAlgebra, w: &WedderburnData, v: &[Q]) -> Result<Vec<Q>> {
    let n = a.dim();
    if v.len() != n {
        return Err(Error::DimensionMismatch {
            context: "element".into(),
            expected: n,
            found: v.len(),
        });
    }
    let coords = wedderburn_coordinates(w, n, v)?;
    let mut offset = 0;
    let mut out = Vec::with_capacity(w.components.len());
    for comp in &w.components {
        let r = comp.len();
        let mut part = vec![Q::zero(); n];
        for (c, b) in coords[offset..offset + r].iter().zip(comp) {
            crate::linalg::add_scaled(&mut part, c, b);
        }
        let mut tr = Q::zero();
        for (k, b) in comp.iter().enumerate() {
            let image = wedderburn_coordinates(w, n, &a.mul(&part, b))?;
            tr += &image[offset + k];
        }
        out.push(tr);
        offset += r;
    }
    Ok(out)
}

/// Scalar trace: the sum of the per-component traces.
pub fn trace_scalar(a: &HModuleAlgebra, w: &WedderburnData, v: &[Q]) -> Result<Q> {
    Ok(trace_of(a, w, v)?.into_iter().fold(Q::zero(), |s, x| s + x))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TraceReport {
    pub equal: bool,
    #[serde(with = "crate::rational::serde_q")]
    pub trace: Q,
    /// `tr(a_0) f(a_1, .., a_d, Y)`.
    #[serde(with = "crate::rational::serde_q::vec")]
    pub lhs: Vec<Q>,
    /// `Σ_k f(a_1, .., a_0 a_k, .., a_d, Y)`.
    #[serde(with = "crate::rational::serde_q::vec")]
    pub rhs: Vec<Q>,
}

/// Evaluates both sides of `tr(a_0) f = Σ_k f(.., a_0 a_k, ..)` over the designated variables.
pub fn trace_identity_check(
    f: &HPolynomial,
    a: &HModuleAlgebra,
    w: &WedderburnData,
    designated: &[Var],
    a0: &[Q],
    asg: &Assignment,
) -> Result<TraceReport> {
    require_certified(a, w)?;
    let d = w.semisimple_dim();
    if designated.len() != d {
        return Err(Error::WidthMismatch {
            expected: d,
            found: designated.len(),
        });
    }
    let trace = trace_scalar(a, w, a0)?;
    let base = evaluate(f, a, asg)?;
    let lhs: Vec<Q> = base.iter().map(|x| &trace * x).collect();
    let mut rhs = vec![Q::zero(); a.dim()];
    for v in designated {
        let mut shifted = asg.clone();
        let value = asg
            .get(v)
            .ok_or_else(|| Error::InvalidInput(format!("no value assigned to {v}")))?;
        shifted.insert(*v, a.mul(a0, value));
        for (o, x) in rhs.iter_mut().zip(evaluate(f, a, &shifted)?) {
            *o += x;
        }
    }
    Ok(TraceReport {
        equal: lhs == rhs,
        trace,
        lhs,
        rhs,
    })
}

/// A violating basis assignment: the index of `a_0`, the basis index per variable, and the report.
pub type TraceCounterexample = (usize, Vec<(Var, usize)>, TraceReport);

/// First basis assignment (`a_0` first, then variables in order) violating the trace identity.
pub fn trace_counterexample_search(
    f: &HPolynomial,
    a: &HModuleAlgebra,
    w: &WedderburnData,
    designated: &[Var],
) -> Result<Option<TraceCounterexample>> {
    let vars: Vec<Var> = f.variables().into_iter().collect();
    let n = a.dim();
    let mut found = None;
    let mut err = None;
    crate::engine::evaluate::for_each_tuple(vars.len() + 1, n, |t| {
        let a0 = crate::linalg::unit_vector(n, t[0]);
        let asg: Assignment = vars
            .iter()
            .zip(&t[1..])
            .map(|(v, &i)| (*v, crate::linalg::unit_vector(n, i)))
            .collect();
        match trace_identity_check(f, a, w, designated, &a0, &asg) {
            Ok(r) if !r.equal => {
                found = Some((t[0], vars.iter().copied().zip(t[1..].iter().copied()).collect(), r));
                false
            }
            Ok(_) => true,
            Err(e) => {
                err = Some(e);
                false
            }
        }
    });
    match err {
        Some(e) => Err(e),
        None => Ok(found),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Algebra;
    use crate::linalg::unit_vector;
    use crate::poly::{alt, parse_polynomial};
    use crate::rational::q;

    fn ut2() -> (HModuleAlgebra, WedderburnData) {
        (
            HModuleAlgebra::plain(Algebra::upper_triangular(2)),
            WedderburnData::from_indices(3, &[&[0], &[2]], &[1], 2),
        )
    }

    #[test]
    fn formula_on_examples() {
        let m2 = HModuleAlgebra::plain(Algebra::matrix(2));
        let w = WedderburnData::from_indices(4, &[&[0, 1, 2, 3]], &[], 1);
        let r = exponent_formula(&m2, &w).unwrap();
        assert_eq!(r.formula_value, 4);
        assert_eq!(r.best_chain, vec![1]);

        let (ut, w) = ut2();
        let r = exponent_formula(&ut, &w).unwrap();
        assert_eq!(r.formula_value, 2);
        assert_eq!(r.best_chain, vec![1, 2]);
        let cert = r.certificate.unwrap();
        assert_eq!(cert.product, unit_vector(3, 1));
        assert_eq!(cert.factors.len(), 3);

        let qq = HModuleAlgebra::plain(Algebra::direct_product(&Algebra::rationals(), &Algebra::rationals()));
        let w = WedderburnData::from_indices(2, &[&[0], &[1]], &[], 1);
        assert_eq!(exponent_formula(&qq, &w).unwrap().formula_value, 1);
    }

    #[test]
    fn brackets() {
        let q1 = HModuleAlgebra::plain(Algebra::rationals());
        for r in exp_estimate(&q1, 3, 1_000_000).unwrap() {
            assert_eq!((r.low, r.high), (q(1), q(1)));
        }
    }

    #[test]
    fn traces_on_ut2() {
        let (ut, w) = ut2();
        let v = vec![q(3), q(5), q(7)];
        assert_eq!(trace_of(&ut, &w, &v).unwrap(), vec![q(3), q(7)]);
        let m2 = HModuleAlgebra::plain(Algebra::matrix(2));
        let w = WedderburnData::from_indices(4, &[&[0, 1, 2, 3]], &[], 1);
        // left regular trace on M_2 is twice the matrix trace
        assert_eq!(trace_scalar(&m2, &w, &[q(1), q(9), q(9), q(2)]).unwrap(), q(6));
    }

    #[test]
    fn identity_on_q_and_ut2() {
        let q1 = HModuleAlgebra::plain(Algebra::rationals());
        let w = WedderburnData::from_indices(1, &[&[0]], &[], 1);
        let f = parse_polynomial(q1.hopf(), "x1").unwrap();
        let asg = Assignment::from([(Var::x(1), vec![q(5)])]);
        let r = trace_identity_check(&f, &q1, &w, &[Var::x(1)], &[q(3)], &asg).unwrap();
        assert!(r.equal);
        assert_eq!(r.lhs, vec![q(15)]);

        let (ut, w) = ut2();
        let base = parse_polynomial(ut.hopf(), "x1 x3 x4 x5 x2").unwrap();
        let f = alt(&alt(&base, &[Var::x(1), Var::x(2)]), &[Var::x(3), Var::x(4), Var::x(5)]);
        let designated = [Var::x(1), Var::x(2)];
        assert!(trace_counterexample_search(&f, &ut, &w, &designated).unwrap().is_none());
    }

    #[test]
    fn non_alternating_control_fails() {
        let (ut, w) = ut2();
        let f = parse_polynomial(ut.hopf(), "x1 x2").unwrap();
        let found = trace_counterexample_search(&f, &ut, &w, &[Var::x(1), Var::x(2)]).unwrap();
        assert!(found.is_some());
    }

    #[test]
    fn width_mismatch() {
        let (ut, w) = ut2();
        let f = parse_polynomial(ut.hopf(), "x1").unwrap();
        let asg = Assignment::from([(Var::x(1), vec![q(1), q(0), q(0)])]);
        let err = trace_identity_check(&f, &ut, &w, &[Var::x(1)], &[q(1), q(0), q(0)], &asg).unwrap_err();
        assert!(matches!(err, Error::WidthMismatch { expected: 2, found: 1 }));
    }
}
