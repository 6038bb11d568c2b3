//! Permutations of `{0, .., n-1}` and the group algebra `Q[S_n]`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::rational::Q;

/// A permutation stored by its image list: `self.apply(i) == images[i]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation((0..n).collect())
    }

    /// Returns `None` unless `images` is a bijection of `0..len`.
    pub fn from_images(images: Vec<usize>) -> Option<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return None;
            }
            seen[i] = true;
        }
        Some(Permutation(images))
    }

    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        let mut v: Vec<usize> = (0..n).collect();
        v.swap(a, b);
        Permutation(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.len(), other.len(), "composing permutations of different degree");
        Permutation(other.0.iter().map(|&i| self.0[i]).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut v = vec![0; self.len()];
        for (i, &j) in self.0.iter().enumerate() {
            v[j] = i;
        }
        Permutation(v)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// +1 or -1.
    pub fn sign(&self) -> i64 {
        sign_of_sequence(&self.0)
    }

    /// All permutations of degree `n` in lexicographic order of image lists.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut cur: Vec<usize> = (0..n).collect();
        loop {
            out.push(Permutation(cur.clone()));
            if !next_permutation(&mut cur) {
                break;
            }
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, i) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}", i + 1)?;
        }
        write!(f, "]")
    }
}

/// Sign of the permutation that sorts a sequence of distinct keys.
pub fn sign_of_sequence<T: Ord>(seq: &[T]) -> i64 {
    let mut inversions = 0usize;
    for i in 0..seq.len() {
        for j in i + 1..seq.len() {
            if seq[i] > seq[j] {
                inversions += 1;
            }
        }
    }
    if inversions.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Advances to the next lexicographic permutation; false when `v` was the last one.
pub fn next_permutation<T: Ord>(v: &mut [T]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Permutations of `points` (a subset of `0..n`) extended by the identity elsewhere.
pub fn permutations_of_subset(n: usize, points: &[usize]) -> Vec<Permutation> {
    let mut sorted = points.to_vec();
    sorted.sort_unstable();
    let mut arrangement = sorted.clone();
    let mut out = Vec::new();
    loop {
        let mut img: Vec<usize> = (0..n).collect();
        for (src, dst) in sorted.iter().zip(&arrangement) {
            img[*src] = *dst;
        }
        out.push(Permutation(img));
        if !next_permutation(&mut arrangement) {
            break;
        }
    }
    out
}

/// An element of the group algebra `Q[S_n]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupAlgebraElement {
    degree: usize,
    terms: BTreeMap<Permutation, Q>,
}

impl GroupAlgebraElement {
    pub fn zero(degree: usize) -> Self {
        GroupAlgebraElement {
            degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn basis(p: Permutation) -> Self {
        let mut e = Self::zero(p.len());
        e.add_term(p, Q::from_integer(1.into()));
        e
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn add_term(&mut self, p: Permutation, c: Q) {
        assert_eq!(p.len(), self.degree);
        let entry = self.terms.entry(p).or_insert_with(Q::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Permutation, &Q)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &Q) -> Self {
        let mut out = Self::zero(self.degree);
        if !c.is_zero() {
            for (p, x) in &self.terms {
                out.terms.insert(p.clone(), x * c);
            }
        }
        out
    }

    /// Product with `(σ·τ)` meaning `σ ∘ τ`.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.degree, other.degree);
        let mut out = Self::zero(self.degree);
        for (s, a) in &self.terms {
            for (t, b) in &other.terms {
                out.add_term(s.compose(t), a * b);
            }
        }
        out
    }

    /// Returns `c` with `self == c * other`, if any.
    pub fn ratio_to(&self, other: &Self) -> Option<Q> {
        if other.is_zero() {
            return if self.is_zero() { Some(Q::zero()) } else { None };
        }
        let (p, c) = other.terms.iter().next().unwrap();
        let ratio = self.terms.get(p).cloned().unwrap_or_else(Q::zero) / c;
        (*self == other.scale(&ratio)).then_some(ratio)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_and_inverse() {
        let p = Permutation::from_images(vec![1, 2, 0]).unwrap();
        assert_eq!(p.compose(&p.inverse()), Permutation::identity(3));
        assert_eq!(p.compose(&p).compose(&p), Permutation::identity(3));
        assert_eq!(p.sign(), 1);
        assert_eq!(Permutation::transposition(4, 1, 3).sign(), -1);
    }

    #[test]
    fn enumeration_is_lexicographic_and_complete() {
        let all = Permutation::all(4);
        assert_eq!(all.len(), 24);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(all.iter().filter(|p| p.sign() == 1).count(), 12);
    }

    #[test]
    fn subset_permutations_fix_the_rest() {
        let ps = permutations_of_subset(5, &[3, 1]);
        assert_eq!(ps.len(), 2);
        assert!(ps.iter().all(|p| p.apply(0) == 0 && p.apply(2) == 2 && p.apply(4) == 4));
    }

    #[test]
    fn rejects_non_bijection() {
        assert!(Permutation::from_images(vec![0, 0]).is_none());
        assert!(Permutation::from_images(vec![2, 0]).is_none());
    }
}
