//! Codimensions against the naive oracle.

mod common;

use common::naive::naive_codim;
use hmodpi::grassmann::grassmann;
use hmodpi::{codimension, Algebra, HModuleAlgebra, DEFAULT_BUDGET};

fn check(a: &HModuleAlgebra, degrees: std::ops::RangeInclusive<usize>) -> Vec<usize> {
    degrees
        .map(|n| {
            let fast = codimension(a, n, DEFAULT_BUDGET).unwrap().codim;
            assert_eq!(fast, naive_codim(a, n), "degree {n}");
            fast
        })
        .collect()
}

#[test]
fn rationals_have_codimension_one() {
    let q = HModuleAlgebra::plain(Algebra::rationals());
    assert_eq!(check(&q, 1..=4), vec![1, 1, 1, 1]);
}

#[test]
fn matrices_of_order_two() {
    let m2 = HModuleAlgebra::plain(Algebra::matrix(2));
    let c = check(&m2, 1..=3);
    assert_eq!(c[0], 1);
}

#[test]
fn upper_triangular_two_by_two() {
    let ut = HModuleAlgebra::plain(Algebra::upper_triangular(2));
    check(&ut, 1..=3);
}

#[test]
fn grassmann_with_as_many_generators_as_the_degree() {
    for n in 1..=4 {
        let e = HModuleAlgebra::plain(grassmann(n).algebra);
        let c = codimension(&e, n, DEFAULT_BUDGET).unwrap().codim;
        assert_eq!(c, naive_codim(&e, n));
        assert_eq!(c, 1 << (n - 1));
    }
}

#[test]
fn group_graded_action_agrees() {
    let h = hmodpi::group_algebra(&hmodpi::GroupTable::cyclic(2));
    let a = hmodpi::dual_action_extension(&Algebra::rationals(), &h);
    check(&a, 1..=2);
}
