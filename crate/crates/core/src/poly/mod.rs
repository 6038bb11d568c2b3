//! Free H-polynomials: rational combinations of words in decorated variables `x^h`.

mod text;
mod young;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::hopf::HopfAlgebra;
use crate::linalg::unit_vector;
use crate::perm::{sign_of_sequence, Permutation};
use crate::rational::Q;

pub use text::{format_polynomial, parse_polynomial};
pub use young::{hook_partition, young_element, young_symmetrizer, YoungTableau};

/// Variable families: `x` carries no parity, `y` is even, `z` is odd.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    X,
    Y,
    Z,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::X => 'x',
            Family::Y => 'y',
            Family::Z => 'z',
        }
    }

    pub fn from_letter(c: char) -> Option<Family> {
        match c {
            'x' => Some(Family::X),
            'y' => Some(Family::Y),
            'z' => Some(Family::Z),
            _ => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Var {
    pub family: Family,
    pub index: u32,
}

impl Var {
    pub fn x(index: u32) -> Var {
        Var {
            family: Family::X,
            index,
        }
    }

    pub fn y(index: u32) -> Var {
        Var {
            family: Family::Y,
            index,
        }
    }

    pub fn z(index: u32) -> Var {
        Var {
            family: Family::Z,
            index,
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.index)
    }
}

/// A decorated variable `var^{b_hopf}`.
pub type Letter = (Var, usize);

/// A nonempty word of decorated variables.
pub type Monomial = Vec<Letter>;

/// Canonical form: no zero coefficients, no empty words, monomials in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HPolynomial {
    hopf_dim: usize,
    terms: BTreeMap<Monomial, Q>,
}

impl HPolynomial {
    pub fn zero(hopf_dim: usize) -> Self {
        HPolynomial {
            hopf_dim,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_monomial(hopf_dim: usize, word: Monomial) -> Self {
        let mut f = Self::zero(hopf_dim);
        f.add_term(word, Q::one());
        f
    }

    /// Product of undecorated variables (decorated by basis index 0).
    pub fn word(hopf_dim: usize, vars: &[Var]) -> Self {
        Self::from_monomial(hopf_dim, vars.iter().map(|&v| (v, 0)).collect())
    }

    pub fn from_terms(hopf_dim: usize, terms: impl IntoIterator<Item = (Monomial, Q)>) -> Self {
        let mut f = Self::zero(hopf_dim);
        for (w, c) in terms {
            f.add_term(w, c);
        }
        f
    }

    pub fn hopf_dim(&self) -> usize {
        self.hopf_dim
    }

    /// Panics on the empty word or an out-of-range decoration.
    pub fn add_term(&mut self, word: Monomial, c: Q) {
        assert!(!word.is_empty(), "polynomials have no constant term");
        assert!(
            word.iter().all(|(_, h)| *h < self.hopf_dim),
            "decoration out of range"
        );
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(word);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Q)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, word: &[Letter]) -> Q {
        self.terms.get(word).cloned().unwrap_or_else(Q::zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Q::one()))
    }

    pub fn scale(&self, c: &Q) -> Self {
        if c.is_zero() {
            return Self::zero(self.hopf_dim);
        }
        HPolynomial {
            hopf_dim: self.hopf_dim,
            terms: self.terms.iter().map(|(w, x)| (w.clone(), x * c)).collect(),
        }
    }

    /// Concatenation product.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.hopf_dim);
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                let mut w = u.clone();
                w.extend(v.iter().cloned());
                out.add_term(w, a * b);
            }
        }
        out
    }

    pub fn variables(&self) -> BTreeSet<Var> {
        self.terms
            .keys()
            .flat_map(|w| w.iter().map(|(v, _)| *v))
            .collect()
    }

    /// Every monomial uses every variable of the polynomial exactly once.
    pub fn is_multilinear(&self) -> bool {
        let vars = self.variables();
        self.terms.keys().all(|w| {
            let mut seen: Vec<Var> = w.iter().map(|(v, _)| *v).collect();
            seen.sort_unstable();
            seen.len() == vars.len() && seen.iter().copied().eq(vars.iter().copied())
        })
    }

    /// Sorted variables, or an error naming the first failing monomial.
    pub fn multilinear_variables(&self) -> Result<Vec<Var>> {
        if self.is_zero() {
            return Ok(Vec::new());
        }
        if !self.is_multilinear() {
            let vars = self.variables();
            let bad = self
                .terms
                .keys()
                .find(|w| {
                    let mut seen: Vec<Var> = w.iter().map(|(v, _)| *v).collect();
                    seen.sort_unstable();
                    !seen.iter().copied().eq(vars.iter().copied())
                })
                .unwrap();
            return Err(Error::NotMultilinear(
                bad.iter().map(|(v, _)| v.to_string()).collect::<Vec<_>>().join(" "),
            ));
        }
        Ok(self.variables().into_iter().collect())
    }

    /// Applies `var ↦ map(var)` to every letter, keeping decorations.
    pub fn rename(&self, map: impl Fn(Var) -> Var) -> Self {
        Self::from_terms(
            self.hopf_dim,
            self.terms.iter().map(|(w, c)| {
                (
                    w.iter().map(|(v, h)| (map(*v), *h)).collect(),
                    c.clone(),
                )
            }),
        )
    }
}

/// `h · f`: each word of length `k` receives `Δ^(k-1)(h)` multiplied into its decorations.
pub fn hopf_act(hopf: &HopfAlgebra, h: &[Q], f: &HPolynomial) -> HPolynomial {
    let m = hopf.dim();
    assert_eq!(h.len(), m, "Hopf element length");
    assert_eq!(f.hopf_dim(), m, "polynomial decorated by another Hopf algebra");
    let mut out = HPolynomial::zero(m);
    let mut cache: BTreeMap<usize, Vec<(Vec<usize>, Q)>> = BTreeMap::new();
    for (word, c) in f.terms() {
        let k = word.len();
        let parts = cache
            .entry(k)
            .or_insert_with(|| hopf.iterated_coproduct(h, k));
        for (idx, d) in parts.iter() {
            // expand Π (b_{idx_p} b_{h_p}) over the Hopf basis
            let mut partial: Vec<(Monomial, Q)> = vec![(Vec::with_capacity(k), c * d)];
            for ((var, dec), &ip) in word.iter().zip(idx) {
                let prod = hopf.product_of_basis(ip, *dec);
                let mut next = Vec::new();
                for (w, x) in &partial {
                    for (b, y) in prod.iter().enumerate().filter(|(_, y)| !y.is_zero()) {
                        let mut w2 = w.clone();
                        w2.push((*var, b));
                        next.push((w2, x * y));
                    }
                }
                partial = next;
            }
            for (w, x) in partial {
                out.add_term(w, x);
            }
        }
    }
    out
}

/// `h · f` for a Hopf basis element.
pub fn hopf_act_basis(hopf: &HopfAlgebra, i: usize, f: &HPolynomial) -> HPolynomial {
    hopf_act(hopf, &unit_vector(hopf.dim(), i), f)
}

/// Full polarization: one multilinear polynomial per multihomogeneous component.
/// A variable of degree `d` becomes `d` fresh copies, numbered consecutively within
/// its family in order of the original variables.
pub fn multilinearize(f: &HPolynomial) -> Vec<HPolynomial> {
    let mut components: BTreeMap<BTreeMap<Var, usize>, Vec<(&Monomial, &Q)>> = BTreeMap::new();
    for (w, c) in f.terms() {
        let mut deg = BTreeMap::new();
        for (v, _) in w {
            *deg.entry(*v).or_insert(0) += 1;
        }
        components.entry(deg).or_default().push((w, c));
    }
    let mut out = Vec::new();
    for (deg, terms) in components {
        // fresh copies per variable
        let mut next_index: BTreeMap<Family, u32> = BTreeMap::new();
        let mut copies: BTreeMap<Var, Vec<Var>> = BTreeMap::new();
        for (v, d) in &deg {
            let counter = next_index.entry(v.family).or_insert(1);
            let vs = (0..*d as u32)
                .map(|k| Var {
                    family: v.family,
                    index: *counter + k,
                })
                .collect();
            *counter += *d as u32;
            copies.insert(*v, vs);
        }
        let mut g = HPolynomial::zero(f.hopf_dim());
        for (w, c) in terms {
            // assign the copies of each variable to its occurrences in every order
            let mut partial: Vec<Monomial> = vec![Vec::new()];
            let mut used: Vec<BTreeMap<Var, Vec<bool>>> = vec![BTreeMap::new()];
            for (v, h) in w {
                let vs = &copies[v];
                let mut next = Vec::new();
                let mut next_used = Vec::new();
                for (p, u) in partial.iter().zip(&used) {
                    let flags = u.get(v).cloned().unwrap_or_else(|| vec![false; vs.len()]);
                    for (k, copy) in vs.iter().enumerate() {
                        if flags[k] {
                            continue;
                        }
                        let mut p2 = p.clone();
                        p2.push((*copy, *h));
                        let mut u2 = u.clone();
                        let mut fl = flags.clone();
                        fl[k] = true;
                        u2.insert(*v, fl);
                        next.push(p2);
                        next_used.push(u2);
                    }
                }
                partial = next;
                used = next_used;
            }
            for p in partial {
                g.add_term(p, c.clone());
            }
        }
        if !g.is_zero() {
            out.push(g);
        }
    }
    out
}

/// `Alt_X(f) = Σ_{σ ∈ S_X} sign(σ) f|_{x ← σ(x)}`.
pub fn alt(f: &HPolynomial, set: &[Var]) -> HPolynomial {
    let mut sorted = set.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    let n = sorted.len();
    let mut out = HPolynomial::zero(f.hopf_dim());
    for p in Permutation::all(n) {
        let g = f.rename(|v| match sorted.binary_search(&v) {
            Ok(i) => sorted[p.apply(i)],
            Err(_) => v,
        });
        out = out.add(&g.scale(&Q::from_integer(p.sign().into())));
    }
    out
}

/// `σ · f` for multilinear `f`: the `i`-th variable (in sorted order) becomes the
/// `σ(i)`-th, decorations stay with their positions.
pub fn sn_act(sigma: &Permutation, f: &HPolynomial) -> Result<HPolynomial> {
    let vars = f.multilinear_variables()?;
    if f.is_zero() {
        return Ok(f.clone());
    }
    if sigma.len() != vars.len() {
        return Err(Error::DimensionMismatch {
            context: "permutation degree".into(),
            expected: vars.len(),
            found: sigma.len(),
        });
    }
    Ok(f.rename(|v| vars[sigma.apply(vars.binary_search(&v).unwrap())]))
}

/// Multiplies each monomial by the sign of the order in which its odd variables occur.
pub fn tilde(f: &HPolynomial) -> Result<HPolynomial> {
    f.multilinear_variables()?;
    if let Some(v) = f.variables().into_iter().find(|v| v.family == Family::X) {
        return Err(Error::UntaggedVariable(v.to_string()));
    }
    Ok(HPolynomial::from_terms(
        f.hopf_dim(),
        f.terms().map(|(w, c)| {
            let odd: Vec<u32> = w
                .iter()
                .filter(|(v, _)| v.family == Family::Z)
                .map(|(v, _)| v.index)
                .collect();
            (w.clone(), c * Q::from_integer(sign_of_sequence(&odd).into()))
        }),
    ))
}

/// Canonical basis of `P_n^H` on `vars`: every ordering of the variables with
/// every decoration, in canonical order. Its size is `m^n n!`.
pub fn multilinear_basis(vars: &[Var], hopf_dim: usize) -> Vec<Monomial> {
    let n = vars.len();
    let mut sorted = vars.to_vec();
    sorted.sort_unstable();
    let mut out = Vec::new();
    for p in Permutation::all(n) {
        let order: Vec<Var> = (0..n).map(|i| sorted[p.apply(i)]).collect();
        let total = hopf_dim.pow(n as u32);
        for code in 0..total {
            let mut c = code;
            let mut decs = vec![0; n];
            for d in decs.iter_mut().rev() {
                *d = c % hopf_dim;
                c /= hopf_dim;
            }
            out.push(order.iter().copied().zip(decs).collect());
        }
    }
    out.sort();
    out
}

/// `x_1, .., x_n`.
pub fn xs(n: usize) -> Vec<Var> {
    (1..=n as u32).map(Var::x).collect()
}

/// The standard polynomial `St_n = Σ sign(σ) x_σ(1) ⋯ x_σ(n)` (undecorated).
pub fn standard_polynomial(n: usize, hopf_dim: usize) -> HPolynomial {
    alt(&HPolynomial::word(hopf_dim, &xs(n)), &xs(n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::{dual, group_algebra, GroupTable};
    use crate::rational::q;

    #[test]
    fn canonical_form_merges_and_drops() {
        let mut f = HPolynomial::word(1, &[Var::x(1), Var::x(2)]);
        f.add_term(vec![(Var::x(1), 0), (Var::x(2), 0)], q(-1));
        assert!(f.is_zero());
    }

    #[test]
    fn group_like_action_on_words() {
        let h = group_algebra(&GroupTable::cyclic(2));
        let f = HPolynomial::word(2, &[Var::x(1), Var::x(2)]);
        let g = hopf_act_basis(&h, 1, &f);
        assert_eq!(
            g,
            HPolynomial::from_monomial(2, vec![(Var::x(1), 1), (Var::x(2), 1)])
        );
        assert_eq!(hopf_act_basis(&h, 0, &f), f);
    }

    #[test]
    fn idempotent_action_on_graded_words() {
        let h = dual(&group_algebra(&GroupTable::cyclic(2)));
        let f = HPolynomial::from_monomial(2, vec![(Var::x(1), 0), (Var::x(2), 1)]);
        assert_eq!(hopf_act_basis(&h, 1, &f), f);
        assert!(hopf_act_basis(&h, 0, &f).is_zero());
    }

    #[test]
    fn polarization_of_square() {
        let f = HPolynomial::word(1, &[Var::x(1), Var::x(1)]);
        let ml = multilinearize(&f);
        assert_eq!(ml.len(), 1);
        let expect = HPolynomial::word(1, &[Var::x(1), Var::x(2)])
            .add(&HPolynomial::word(1, &[Var::x(2), Var::x(1)]));
        assert_eq!(ml[0], expect);
    }

    #[test]
    fn polarization_of_x_squared_y() {
        let f = HPolynomial::word(1, &[Var::x(1), Var::x(1), Var::y(1)]);
        let ml = multilinearize(&f);
        let expect = HPolynomial::word(1, &[Var::x(1), Var::x(2), Var::y(1)])
            .add(&HPolynomial::word(1, &[Var::x(2), Var::x(1), Var::y(1)]));
        assert_eq!(ml, vec![expect]);
    }

    #[test]
    fn alt_basics() {
        let f = HPolynomial::word(1, &[Var::x(1), Var::x(2)]);
        let a = alt(&f, &xs(2));
        assert_eq!(
            a,
            f.sub(&HPolynomial::word(1, &[Var::x(2), Var::x(1)]))
        );
        assert_eq!(alt(&a, &xs(2)), a.scale(&q(2)));
        let sym = f.add(&HPolynomial::word(1, &[Var::x(2), Var::x(1)]));
        assert!(alt(&sym, &xs(2)).is_zero());
    }

    #[test]
    fn sn_act_moves_variables_not_decorations() {
        let f = HPolynomial::from_monomial(2, vec![(Var::x(1), 0), (Var::x(2), 1)]);
        let t = Permutation::transposition(2, 0, 1);
        let g = sn_act(&t, &f).unwrap();
        assert_eq!(
            g,
            HPolynomial::from_monomial(2, vec![(Var::x(2), 0), (Var::x(1), 1)])
        );
        let sq = HPolynomial::word(1, &[Var::x(1), Var::x(1)]);
        assert!(matches!(sn_act(&t, &sq), Err(Error::NotMultilinear(_))));
    }

    #[test]
    fn tilde_signs() {
        let f = HPolynomial::word(1, &[Var::z(2), Var::z(1)]);
        assert_eq!(tilde(&f).unwrap(), f.scale(&q(-1)));
        let g = HPolynomial::word(1, &[Var::y(2), Var::y(1)]);
        assert_eq!(tilde(&g).unwrap(), g);
        let untagged = HPolynomial::word(1, &[Var::x(1)]);
        assert!(matches!(tilde(&untagged), Err(Error::UntaggedVariable(_))));
    }

    #[test]
    fn multilinear_basis_size() {
        for m in 1..=3 {
            for n in 1..=3 {
                let b = multilinear_basis(&xs(n), m);
                let fact: usize = (1..=n).product();
                assert_eq!(b.len(), m.pow(n as u32) * fact);
                assert!(b.windows(2).all(|w| w[0] < w[1]));
            }
        }
    }
}
