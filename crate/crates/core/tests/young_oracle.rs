//! Alternation and Young symmetrizers checked against brute-force counts.

use hmodpi::poly::{standard_polynomial, xs, young_element, young_symmetrizer, YoungTableau};
use hmodpi::{alt, is_identity_multilinear, Algebra, HModuleAlgebra, HPolynomial, Q, Var};
use num_traits::{One, Signed};

fn partitions(n: usize, max: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in (1..=n.min(max)).rev() {
        for mut rest in partitions(n - first, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

/// Number of standard tableaux of shape `shape`, by trying every filling.
fn standard_tableaux(shape: &[usize]) -> usize {
    let n: usize = shape.iter().sum();
    let cells: Vec<(usize, usize)> = shape
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
        .collect();
    let mut filling: Vec<usize> = (0..n).collect();
    let mut count = 0;
    loop {
        let at = |r: usize, c: usize| filling[cells.iter().position(|&x| x == (r, c)).unwrap()];
        let ok = cells.iter().all(|&(r, c)| {
            (c == 0 || at(r, c - 1) < at(r, c)) && (r == 0 || at(r - 1, c) < at(r, c))
        });
        if ok {
            count += 1;
        }
        if !hmodpi::perm::next_permutation(&mut filling) {
            break;
        }
    }
    count
}

#[test]
fn alt_squared_is_factorial_times_alt() {
    for k in 1..=4 {
        let vars = xs(k);
        let mut word = vars.clone();
        word.reverse();
        word.push(Var::y(1));
        let f = HPolynomial::word(1, &word).add(&HPolynomial::word(1, &[Var::y(1)].iter().chain(&vars).copied().collect::<Vec<_>>()));
        let once = alt(&f, &vars);
        let twice = alt(&once, &vars);
        assert_eq!(twice, once.scale(&Q::from_integer((factorial(k) as i64).into())), "|X| = {k}");
        assert!(!once.is_zero());
    }
}

#[test]
fn young_elements_are_quasi_idempotent() {
    for n in 1..=4 {
        for shape in partitions(n, n) {
            let t = YoungTableau::row_reading(&shape, &xs(n)).unwrap();
            let e = young_element(&t);
            let expected = Q::new(factorial(n).into(), standard_tableaux(&shape).into());
            assert_eq!(e.mul(&e).ratio_to(&e), Some(expected), "shape {shape:?}");
        }
    }
}

#[test]
fn standard_tableau_counts_sum_of_squares() {
    for n in 1..=4 {
        let total: usize = partitions(n, n).iter().map(|s| standard_tableaux(s).pow(2)).sum();
        assert_eq!(total, factorial(n));
    }
}

#[test]
fn single_column_gives_st4_which_vanishes_on_m2() {
    let t = YoungTableau::row_reading(&[1, 1, 1, 1], &xs(4)).unwrap();
    let st4 = young_symmetrizer(&t, &HPolynomial::word(1, &xs(4))).unwrap();
    assert_eq!(st4, standard_polynomial(4, 1));
    assert_eq!(st4.len(), 24);
    assert!(st4.terms().all(|(_, c)| c.abs() == Q::one()));
    let m2 = HModuleAlgebra::plain(Algebra::matrix(2));
    assert!(is_identity_multilinear(&st4, &m2).unwrap().identity);
}
