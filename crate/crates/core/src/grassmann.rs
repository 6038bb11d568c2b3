//! Truncated Grassmann superalgebras, `H₂`-module algebras, the envelope
//! `E(W) = W₀⊗E₀ ⊕ W₁⊗E₁`, `W ⊗ E`, and the checks relating them.

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::Algebra;
use crate::engine::{codimension, identity_subspace, is_identity_multilinear, monomial_kernel};
use crate::error::{Error, Result};
use crate::hopf::{h2_of, AxiomCheck, AxiomReport, HopfAlgebra};
use crate::linalg::{unit_vector, Matrix, Subspace};
use crate::module_algebra::{verify_module_algebra, HModuleAlgebra, ModuleReport};
use crate::perm::sign_of_sequence;
use crate::poly::{multilinear_basis, tilde, xs, Family, HPolynomial, Monomial, Var};
use crate::rational::Q;

/// `E` on `k` generators; basis element `e_S` sits at the bitmask of `S`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedGrassmann {
    pub k: usize,
    pub algebra: Algebra,
}

impl TruncatedGrassmann {
    pub fn dim(&self) -> usize {
        1 << self.k
    }

    /// `|S| mod 2` for the basis element at `mask`.
    pub fn parity(mask: usize) -> usize {
        mask.count_ones() as usize % 2
    }

    /// Projection onto `E₀` (`c = 0`) or `E₁` (`c = 1`).
    pub fn projection(&self, c: usize) -> Matrix {
        let n = self.dim();
        let mut p = Matrix::zeros(n, n);
        for s in 0..n {
            if Self::parity(s) == c {
                p.set(s, s, Q::one());
            }
        }
        p
    }
}

fn mask_label(mask: usize) -> String {
    if mask == 0 {
        return "1".into();
    }
    (0..usize::BITS as usize)
        .filter(|i| mask >> i & 1 == 1)
        .map(|i| format!("e{}", i + 1))
        .collect()
}

/// Sign of `e_S e_T` for disjoint `S`, `T`: the parity of inversions between them.
fn grassmann_sign(s: usize, t: usize) -> Q {
    let mut seq: Vec<u32> = (0..32).filter(|i| s >> i & 1 == 1).collect();
    seq.extend((0..32).filter(|i| t >> i & 1 == 1));
    Q::from_integer(sign_of_sequence(&seq).into())
}

pub fn grassmann(k: usize) -> TruncatedGrassmann {
    let n = 1usize << k;
    let labels = (0..n).map(mask_label).collect();
    let mut entries = Vec::new();
    for s in 0..n {
        for t in 0..n {
            if s & t == 0 {
                entries.push((s, t, s | t, grassmann_sign(s, t)));
            }
        }
    }
    let algebra = Algebra::from_entries(labels, entries, Some(unit_vector(n, 0))).unwrap();
    TruncatedGrassmann { k, algebra }
}

/// An `H₂`-module algebra: the Hopf algebra is `H ⊗ (F C₂)*`, basis `b_h ⊗ p_c` at `2h + c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct H2ModuleAlgebra {
    base: HopfAlgebra,
    inner: HModuleAlgebra,
}

impl H2ModuleAlgebra {
    /// Wraps an `H₂`-module algebra whose Hopf algebra is `h2_of(base)`.
    pub fn new(base: HopfAlgebra, inner: HModuleAlgebra) -> Result<Self> {
        let h2 = h2_of(&base);
        if !inner.hopf().same_structure(&h2, &(0..h2.dim()).collect::<Vec<_>>()) {
            return Err(Error::InvalidInput("Hopf algebra is not H ⊗ (F C2)*".into()));
        }
        Ok(H2ModuleAlgebra { base, inner })
    }

    /// `H`-module algebra with grading projections `p0`, `p1`; `b_h ⊗ p_c` acts as `A_h P_c`.
    pub fn from_grading(a: &HModuleAlgebra, p0: &Matrix, p1: &Matrix) -> Result<Self> {
        let mut action = Vec::with_capacity(2 * a.hopf_dim());
        for h in 0..a.hopf_dim() {
            action.push(a.action(h).mul(p0));
            action.push(a.action(h).mul(p1));
        }
        let inner = HModuleAlgebra::new(h2_of(a.hopf()), a.algebra().clone(), action)?;
        Ok(H2ModuleAlgebra {
            base: a.hopf().clone(),
            inner,
        })
    }

    /// Trivial grading: everything even.
    pub fn purely_even(a: &HModuleAlgebra) -> Self {
        let n = a.dim();
        Self::from_grading(a, &Matrix::identity(n), &Matrix::zeros(n, n)).expect("trivial grading")
    }

    pub fn base_hopf(&self) -> &HopfAlgebra {
        &self.base
    }

    pub fn module(&self) -> &HModuleAlgebra {
        &self.inner
    }

    pub fn dim(&self) -> usize {
        self.inner.dim()
    }

    /// Action of `1_H ⊗ p_c`.
    pub fn projection(&self, c: usize) -> Matrix {
        let mut h = vec![Q::zero(); self.inner.hopf_dim()];
        for (i, x) in self.base.unit().iter().enumerate() {
            h[2 * i + c] = x.clone();
        }
        self.inner.action_of(&h)
    }

    /// `(W₀, W₁)` as images of the grading projections.
    pub fn grading(&self) -> (Subspace, Subspace) {
        let n = self.dim();
        let image = |p: Matrix| Subspace::span(n, (0..n).map(|j| p.column(j)));
        (image(self.projection(0)), image(self.projection(1)))
    }

    /// `W` as an `H`-module algebra: `b_h` acts as `b_h ⊗ (p_e + p_g)`.
    pub fn forget_grading(&self) -> HModuleAlgebra {
        let action = (0..self.base.dim())
            .map(|h| self.inner.action(2 * h).add(self.inner.action(2 * h + 1)))
            .collect();
        HModuleAlgebra::new(self.base.clone(), self.inner.algebra().clone(), action)
            .expect("forgetting the grading keeps an H-module algebra")
    }

    /// Same algebra in a basis of homogeneous elements, even ones first.
    /// Returns the parity of each new basis element.
    pub fn homogeneous(&self) -> Result<(H2ModuleAlgebra, Vec<usize>)> {
        let (w0, w1) = self.grading();
        let mut cols: Vec<Vec<Q>> = w0.basis().to_vec();
        cols.extend(w1.basis().iter().cloned());
        let parity: Vec<usize> = (0..w0.dim()).map(|_| 0).chain((0..w1.dim()).map(|_| 1)).collect();
        let p = Matrix::from_columns(&cols, self.dim());
        let inner = self.inner.change_basis(&p)?;
        Ok((
            H2ModuleAlgebra {
                base: self.base.clone(),
                inner,
            },
            parity,
        ))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GradingAxiom {
    Idempotent,
    Orthogonal,
    Complete,
    Stable,
    Graded,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct H2Report {
    pub module: ModuleReport,
    pub grading: AxiomReport<GradingAxiom>,
}

impl H2Report {
    pub fn passed(&self) -> bool {
        self.module.passed() && self.grading.passed()
    }
}

/// Module-algebra axioms plus the superalgebra conditions on the derived grading.
pub fn verify_h2(a: &H2ModuleAlgebra) -> H2Report {
    let module = verify_module_algebra(&a.inner);
    let n = a.dim();
    let p = [a.projection(0), a.projection(1)];
    let names = ["W0", "W1"];
    let mut idem = AxiomCheck::new(GradingAxiom::Idempotent);
    for c in 0..2 {
        idem.record(p[c].mul(&p[c]) == p[c], || vec![names[c].into()]);
    }
    let mut orth = AxiomCheck::new(GradingAxiom::Orthogonal);
    orth.record(p[0].mul(&p[1]).is_zero() && p[1].mul(&p[0]).is_zero(), || {
        names.iter().map(|s| s.to_string()).collect()
    });
    let mut complete = AxiomCheck::new(GradingAxiom::Complete);
    complete.record(p[0].add(&p[1]) == Matrix::identity(n), || vec!["W0+W1".into()]);
    let (w0, w1) = a.grading();
    let w = [w0, w1];
    let mut stable = AxiomCheck::new(GradingAxiom::Stable);
    for h in 0..a.base.dim() {
        let op = a.forget_grading().action(h).clone();
        for c in 0..2 {
            stable.record(w[c].is_invariant_under(&op), || {
                vec![a.base.labels()[h].clone(), names[c].into()]
            });
        }
    }
    let mut graded = AxiomCheck::new(GradingAxiom::Graded);
    let alg = a.inner.algebra();
    for c in 0..2 {
        for d in 0..2 {
            let prod = alg.product_space(&w[c], &w[d]);
            graded.record(w[(c + d) % 2].contains_subspace(&prod), || {
                vec![names[c].into(), names[d].into()]
            });
        }
    }
    H2Report {
        module,
        grading: AxiomReport {
            checks: vec![idem, orth, complete, stable, graded],
        },
    }
}

/// `E(W) = W₀⊗E₀ ⊕ W₁⊗E₁` over `k` generators; `H` acts on the left factor.
pub fn envelope(a: &H2ModuleAlgebra, k: usize) -> Result<H2ModuleAlgebra> {
    let (hw, parity) = a.homogeneous()?;
    let e = grassmann(k);
    let inner = &hw.inner;
    let alg = inner.algebra();
    // (i, S) with parity(i) = |S| mod 2
    let basis: Vec<(usize, usize)> = (0..hw.dim())
        .flat_map(|i| (0..e.dim()).map(move |s| (i, s)))
        .filter(|&(i, s)| parity[i] == TruncatedGrassmann::parity(s))
        .collect();
    let index = |i: usize, s: usize| basis.iter().position(|&b| b == (i, s));
    let labels = basis
        .iter()
        .map(|&(i, s)| format!("w{}.{}", i + 1, mask_label(s)))
        .collect();
    let mut entries = Vec::new();
    for (x, &(i, s)) in basis.iter().enumerate() {
        for (y, &(j, t)) in basis.iter().enumerate() {
            if s & t != 0 {
                continue;
            }
            let sign = grassmann_sign(s, t);
            for (l, c) in alg.product_of_basis(i, j) {
                let z = index(*l, s | t).ok_or_else(|| Error::InvalidInput("grading is not multiplicative".into()))?;
                entries.push((x, y, z, &sign * c));
            }
        }
    }
    let unit = match alg.unit() {
        Some(u) => {
            let mut v = vec![Q::zero(); basis.len()];
            for (i, x) in u.iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                let z = index(i, 0).ok_or_else(|| Error::InvalidInput("unit is not even".into()))?;
                v[z] = x.clone();
            }
            Some(v)
        }
        None => None,
    };
    let env = Algebra::from_entries(labels, entries, unit)?;
    let n = basis.len();
    let mut action = Vec::with_capacity(inner.hopf_dim());
    for h in 0..a.base.dim() {
        let op = hw.forget_grading().action(h).clone();
        for c in 0..2 {
            let mut m = Matrix::zeros(n, n);
            for (x, &(i, s)) in basis.iter().enumerate() {
                if parity[i] != c {
                    continue;
                }
                for l in 0..hw.dim() {
                    let v = op.get(l, i);
                    if !v.is_zero() {
                        let z = index(l, s).ok_or_else(|| Error::InvalidInput("action does not preserve the grading".into()))?;
                        m.set(z, x, v.clone());
                    }
                }
            }
            action.push(m);
        }
    }
    let inner = HModuleAlgebra::new(h2_of(&a.base), env, action)?;
    Ok(H2ModuleAlgebra {
        base: a.base.clone(),
        inner,
    })
}

/// `W ⊗ E` over `k` generators, graded by `E`, with `H` acting on `W`.
pub fn tensor_with_grassmann(w: &HModuleAlgebra, k: usize) -> Result<H2ModuleAlgebra> {
    let e = grassmann(k);
    let alg = Algebra::tensor(w.algebra(), &e.algebra);
    let mut action = Vec::with_capacity(2 * w.hopf_dim());
    for h in 0..w.hopf_dim() {
        for c in 0..2 {
            action.push(w.action(h).kron(&e.projection(c)));
        }
    }
    let inner = HModuleAlgebra::new(h2_of(w.hopf()), alg, action)?;
    Ok(H2ModuleAlgebra {
        base: w.hopf().clone(),
        inner,
    })
}

/// Rewrites a parity-tagged polynomial over `H` as an `H₂`-polynomial in `x`
/// variables: `y_i^h ↦ x_{2i-1}^{b_h⊗p_e}`, `z_i^h ↦ x_{2i}^{b_h⊗p_g}`.
pub fn to_h2_polynomial(f: &HPolynomial) -> Result<HPolynomial> {
    f.multilinear_variables()?;
    let mut out = HPolynomial::zero(2 * f.hopf_dim());
    for (w, c) in f.terms() {
        let mut word: Monomial = Vec::with_capacity(w.len());
        for (v, h) in w {
            let (index, parity) = match v.family {
                Family::Y => (2 * v.index - 1, 0),
                Family::Z => (2 * v.index, 1),
                Family::X => return Err(Error::UntaggedVariable(v.to_string())),
            };
            word.push((Var::x(index), 2 * h + parity));
        }
        out.add_term(word, c.clone());
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TildeReport {
    pub degree: usize,
    pub k: usize,
    /// `f ∈ id^{H₂}(W)`.
    pub on_algebra: bool,
    /// `f̃ ∈ id^{H₂}(E(W))`.
    pub on_envelope: bool,
    pub agree: bool,
}

/// Decides both sides of `f ∈ id^{H₂}(W) ⇔ f̃ ∈ id^{H₂}(E(W))`.
pub fn tilde_correspondence_check(f: &HPolynomial, a: &H2ModuleAlgebra, k: usize) -> Result<TildeReport> {
    let env = envelope(a, k)?;
    tilde_check_with_envelope(f, a, &env, k)
}

/// As [`tilde_correspondence_check`] with a precomputed `envelope(a, k)`.
pub fn tilde_check_with_envelope(
    f: &HPolynomial,
    a: &H2ModuleAlgebra,
    env: &H2ModuleAlgebra,
    k: usize,
) -> Result<TildeReport> {
    let degree = f.multilinear_variables()?.len();
    if k < degree {
        return Err(Error::TruncationUnsound { k, degree });
    }
    if f.hopf_dim() != a.base.dim() {
        return Err(Error::DimensionMismatch {
            context: "polynomial decorations vs H".into(),
            expected: a.base.dim(),
            found: f.hopf_dim(),
        });
    }
    let on_algebra = is_identity_multilinear(&to_h2_polynomial(f)?, &a.inner)?.identity;
    let on_envelope = is_identity_multilinear(&to_h2_polynomial(&tilde(f)?)?, &env.inner)?.identity;
    Ok(TildeReport {
        degree,
        k,
        on_algebra,
        on_envelope,
        agree: on_algebra == on_envelope,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CodimComparison {
    pub n: usize,
    pub k: usize,
    /// `c_n^H(E(A))` with the grading forgotten.
    pub h_envelope: usize,
    /// `c_n^{H₂}(A)`.
    pub h2_algebra: usize,
    /// `c_n^{H₂}(E(A))`.
    pub h2_envelope: usize,
    pub inequality_holds: bool,
    pub equality_holds: bool,
}

/// `c_n^H(E(A)) <= c_n^{H₂}(A)` and `c_n^{H₂}(E(A)) = c_n^{H₂}(A)`.
pub fn codim_comparison_check(a: &H2ModuleAlgebra, n: usize, k: usize, budget: u128) -> Result<CodimComparison> {
    if k < n {
        return Err(Error::TruncationUnsound { k, degree: n });
    }
    let env = envelope(a, k)?;
    let h_envelope = codimension(&env.forget_grading(), n, budget)?.codim;
    let h2_algebra = codimension(&a.inner, n, budget)?.codim;
    let h2_envelope = codimension(&env.inner, n, budget)?.codim;
    Ok(CodimComparison {
        n,
        k,
        h_envelope,
        h2_algebra,
        h2_envelope,
        inequality_holds: h_envelope <= h2_algebra,
        equality_holds: h2_envelope == h2_algebra,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EmbeddingReport {
    pub n: usize,
    /// `c_n^H(A)` for the grading-forgotten action.
    pub source_codim: usize,
    /// Rank of the image of `P_n^H` in `P_n^{H₂}` modulo `id^{H₂}(A)`.
    pub image_rank: usize,
    pub injective: bool,
}

/// Rank of `P_n^H/(P_n^H ∩ id^H) → P_n^{H₂}/(P_n^{H₂} ∩ id^{H₂})`, `x^h ↦ x^{h⊗p_e} + x^{h⊗p_g}`.
pub fn embedding_rank_check(a: &H2ModuleAlgebra, n: usize, budget: u128) -> Result<EmbeddingReport> {
    let m = a.base.dim();
    let source_codim = codimension(&a.forget_grading(), n, budget)?.codim;
    let vars = xs(n);
    let target = multilinear_basis(&vars, 2 * m);
    let position = |w: &Monomial| target.binary_search(w).expect("canonical basis is sorted");
    let ids = identity_subspace(&a.inner, n, budget)?;
    let mut span = Subspace::span(target.len(), ids);
    let base_rank = span.dim();
    for w in multilinear_basis(&vars, m) {
        let mut v = vec![Q::zero(); target.len()];
        for bits in 0..1usize << n {
            let image: Monomial = w
                .iter()
                .enumerate()
                .map(|(p, (x, h))| (*x, 2 * h + (bits >> p & 1)))
                .collect();
            v[position(&image)] += Q::one();
        }
        span.add(v);
    }
    let image_rank = span.dim() - base_rank;
    Ok(EmbeddingReport {
        n,
        source_codim,
        image_rank,
        injective: image_rank == source_codim,
    })
}

/// Deterministic sample of parity-tagged multilinear polynomials of degree
/// `1..=max_degree` (cycling). Even positions draw a random element of
/// `P ∩ id^{H₂}(a)`, odd positions a random combination of monomials.
pub fn tagged_sample(a: &H2ModuleAlgebra, count: usize, max_degree: usize, seed: u64) -> Result<Vec<HPolynomial>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let m = a.base.dim();
    let mut out = Vec::with_capacity(count);
    for idx in 0..count {
        let n = idx % max_degree + 1;
        let vars: Vec<Var> = (1..=n as u32)
            .map(|i| if rng.gen_bool(0.5) { Var::z(i) } else { Var::y(i) })
            .collect();
        let monomials = multilinear_basis(&vars, m);
        let coeff = |rng: &mut ChaCha8Rng| {
            let c: i64 = rng.gen_range(1..=3);
            Q::from_integer(if rng.gen_bool(0.5) { c } else { -c }.into())
        };
        let mut f = HPolynomial::zero(m);
        if idx % 2 == 0 {
            let h2_words: Vec<Monomial> = monomials
                .iter()
                .map(|w| to_h2_polynomial(&HPolynomial::from_monomial(m, w.clone())).map(|p| p.terms().next().unwrap().0.clone()))
                .collect::<Result<_>>()?;
            for v in monomial_kernel(&a.inner, &h2_words)? {
                let c = coeff(&mut rng);
                for (w, x) in monomials.iter().zip(&v) {
                    if !x.is_zero() {
                        f.add_term(w.clone(), &c * x);
                    }
                }
            }
        }
        if f.is_zero() {
            for _ in 0..rng.gen_range(1..=3) {
                let w = monomials[rng.gen_range(0..monomials.len())].clone();
                f.add_term(w, coeff(&mut rng));
            }
        }
        if f.is_zero() {
            f.add_term(monomials[0].clone(), Q::one());
        }
        out.push(f);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_polynomial;
    use crate::rational::q;

    pub(crate) fn graded_ut2() -> H2ModuleAlgebra {
        let a = HModuleAlgebra::plain(Algebra::upper_triangular(2));
        let p0 = Matrix::from_i64(&[&[1, 0, 0], &[0, 0, 0], &[0, 0, 1]]);
        let p1 = Matrix::from_i64(&[&[0, 0, 0], &[0, 1, 0], &[0, 0, 0]]);
        H2ModuleAlgebra::from_grading(&a, &p0, &p1).unwrap()
    }

    #[test]
    fn grassmann_relations() {
        for k in 0..=4 {
            let e = grassmann(k);
            assert_eq!(e.dim(), 1 << k);
            let alg = &e.algebra;
            assert!(alg.associativity_violation().is_none());
            let n = e.dim();
            for s in 0..n {
                for t in 0..n {
                    let st = alg.mul(&unit_vector(n, s), &unit_vector(n, t));
                    let ts = alg.mul(&unit_vector(n, t), &unit_vector(n, s));
                    let sign = if TruncatedGrassmann::parity(s) * TruncatedGrassmann::parity(t) == 1 { q(-1) } else { q(1) };
                    assert_eq!(st, ts.iter().map(|x| &sign * x).collect::<Vec<_>>());
                }
            }
        }
        let e = grassmann(3);
        let evens = (0..8).filter(|&s| TruncatedGrassmann::parity(s) == 0).count();
        assert_eq!(evens, 4);
        let e2 = grassmann(2);
        let e12 = unit_vector(4, 3);
        assert!(e2.algebra.mul(&e12, &e12).iter().all(Zero::is_zero));
        assert_eq!(e.algebra.labels()[3], "e1e2");
    }

    #[test]
    fn envelope_dimensions_and_verification() {
        let ut = graded_ut2();
        assert!(verify_h2(&ut).passed());
        for k in 1..=3 {
            let env = envelope(&ut, k).unwrap();
            assert_eq!(env.dim(), 3 << (k - 1));
            assert!(verify_h2(&env).passed());
        }
        let q1 = H2ModuleAlgebra::purely_even(&HModuleAlgebra::plain(Algebra::rationals()));
        let env = envelope(&q1, 2).unwrap();
        assert_eq!(env.dim(), 2);
        assert!(env.module().algebra().is_commutative());
    }

    #[test]
    fn tensor_with_grassmann_verifies() {
        let m2 = HModuleAlgebra::plain(Algebra::matrix(2));
        let t = tensor_with_grassmann(&m2, 2).unwrap();
        assert_eq!(t.dim(), 16);
        assert!(verify_h2(&t).passed());
        let t0 = tensor_with_grassmann(&m2, 0).unwrap();
        assert_eq!(t0.grading().1.dim(), 0);
    }

    #[test]
    fn odd_commutator_on_graded_ut2() {
        let ut = graded_ut2();
        let h = HopfAlgebra::trivial();
        let f = parse_polynomial(&h, "z1 z2 - z2 z1").unwrap();
        let r = tilde_correspondence_check(&f, &ut, 3).unwrap();
        assert!(r.agree);
        assert!(r.on_algebra);
        let g = parse_polynomial(&h, "y1 z2 - z2 y1").unwrap();
        let r = tilde_correspondence_check(&g, &ut, 3).unwrap();
        assert!(r.agree);
        assert!(!r.on_algebra);
        assert!(matches!(
            tilde_correspondence_check(&f, &ut, 1),
            Err(Error::TruncationUnsound { k: 1, degree: 2 })
        ));
    }

    #[test]
    fn comparison_on_ut2_and_q() {
        let ut = graded_ut2();
        let r = codim_comparison_check(&ut, 2, 2, 10_000_000).unwrap();
        assert!(r.inequality_holds && r.equality_holds);
        let q1 = H2ModuleAlgebra::purely_even(&HModuleAlgebra::plain(Algebra::rationals()));
        let r = codim_comparison_check(&q1, 2, 2, 10_000_000).unwrap();
        assert_eq!((r.h_envelope, r.h2_algebra, r.h2_envelope), (1, 1, 1));
    }

    #[test]
    fn embedding_is_injective() {
        let ut = graded_ut2();
        for n in 1..=2 {
            assert!(embedding_rank_check(&ut, n, 10_000_000).unwrap().injective);
        }
    }
}
