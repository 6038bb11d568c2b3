use hmodpi::engine::{evaluate, Assignment};
use hmodpi::poly::{hopf_act, multilinear_basis, xs};
use hmodpi::{
    alt, codimension, dual, dual_action_extension, exponent_formula, format_polynomial, group_algebra,
    parse_polynomial, sn_act, tilde, Algebra, GroupTable, HModuleAlgebra, HPolynomial, HopfAlgebra,
    Matrix, Permutation, Var, WedderburnData, DEFAULT_BUDGET, Q,
};
use proptest::prelude::*;

fn small_q() -> impl Strategy<Value = Q> {
    (-4i64..=4, 1i64..=3).prop_map(|(p, q)| Q::new(p.into(), q.into()))
}

fn hopf_element(m: usize) -> impl Strategy<Value = Vec<Q>> {
    proptest::collection::vec(small_q(), m)
}

/// A multilinear polynomial in `x1..xn` with decorations below `m`.
fn polynomial(n: usize, m: usize) -> impl Strategy<Value = HPolynomial> {
    let words = multilinear_basis(&xs(n), m);
    let len = words.len();
    proptest::collection::vec((0..len, small_q()), 1..5).prop_map(move |terms| {
        HPolynomial::from_terms(m, terms.into_iter().map(|(i, c)| (words[i].clone(), c)))
    })
}

fn tagged(n: usize) -> impl Strategy<Value = HPolynomial> {
    (polynomial(n, 1), proptest::collection::vec(any::<bool>(), n)).prop_map(|(f, odd)| {
        f.rename(|v| {
            let i = v.index;
            if odd[(i - 1) as usize] {
                Var::z(i)
            } else {
                Var::y(i)
            }
        })
    })
}

fn s3() -> HopfAlgebra {
    group_algebra(&GroupTable::symmetric(3))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn hopf_action_is_a_module_action(g in hopf_element(6), h in hopf_element(6), f in polynomial(2, 6)) {
        let hopf = s3();
        let gh = hopf.mul(&g, &h);
        prop_assert_eq!(hopf_act(&hopf, &gh, &f), hopf_act(&hopf, &g, &hopf_act(&hopf, &h, &f)));
    }

    #[test]
    fn dual_hopf_action_is_a_module_action(g in hopf_element(3), h in hopf_element(3), f in polynomial(3, 3)) {
        let hopf = dual(&group_algebra(&GroupTable::cyclic(3)));
        let gh = hopf.mul(&g, &h);
        prop_assert_eq!(hopf_act(&hopf, &gh, &f), hopf_act(&hopf, &g, &hopf_act(&hopf, &h, &f)));
    }

    #[test]
    fn evaluation_commutes_with_the_action(
        h in hopf_element(2),
        f in polynomial(3, 2),
        values in proptest::collection::vec(small_q(), 6),
    ) {
        let hopf = group_algebra(&GroupTable::cyclic(2));
        let a = dual_action_extension(&Algebra::rationals(), &hopf);
        let asg: Assignment = (0..3).map(|i| (Var::x(i as u32 + 1), values[2 * i..2 * i + 2].to_vec())).collect();
        let lhs = evaluate(&hopf_act(&hopf, &h, &f), &a, &asg).unwrap();
        let rhs = a.action_of(&h).mul_vec(&evaluate(&f, &a, &asg).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn symmetric_group_action_composes(s in 0usize..24, t in 0usize..24, f in polynomial(4, 2)) {
        let all = Permutation::all(4);
        let (s, t) = (&all[s], &all[t]);
        prop_assert_eq!(sn_act(&s.compose(t), &f).unwrap(), sn_act(s, &sn_act(t, &f).unwrap()).unwrap());
    }

    #[test]
    fn tilde_is_an_involution(f in tagged(4)) {
        prop_assert_eq!(tilde(&tilde(&f).unwrap()).unwrap(), f);
    }

    #[test]
    fn alternation_flips_sign_under_a_transposition(f in polynomial(3, 2)) {
        let set = [Var::x(1), Var::x(2)];
        let a = alt(&f, &set);
        let swapped = a.rename(|v| match v.index {
            1 => Var::x(2),
            2 => Var::x(1),
            _ => v,
        });
        prop_assert_eq!(swapped, a.scale(&Q::from_integer((-1).into())));
    }

    #[test]
    fn polynomial_text_round_trips(f in polynomial(3, 6)) {
        let hopf = s3();
        let text = format_polynomial(&hopf, &f);
        prop_assert_eq!(parse_polynomial(&hopf, &text).unwrap(), f);
    }

    #[test]
    fn codimension_is_basis_independent(x in small_q(), y in small_q(), z in small_q()) {
        let ut = HModuleAlgebra::plain(Algebra::upper_triangular(2));
        let one = Q::from_integer(1.into());
        let zero = Q::from_integer(0.into());
        let p = Matrix::from_rows(vec![
            vec![one.clone(), x, y],
            vec![zero.clone(), one.clone(), z],
            vec![zero.clone(), zero, one],
        ]);
        let moved = ut.change_basis(&p).unwrap();
        for n in 1..=3 {
            prop_assert_eq!(
                codimension(&ut, n, DEFAULT_BUDGET).unwrap().codim,
                codimension(&moved, n, DEFAULT_BUDGET).unwrap().codim
            );
        }
    }

    #[test]
    fn exponent_formula_is_basis_independent(x in small_q(), y in small_q()) {
        let ut = HModuleAlgebra::plain(Algebra::upper_triangular(2));
        let one = Q::from_integer(1.into());
        let zero = Q::from_integer(0.into());
        // conjugated complement: e11 + y e12 and e22 - y e12, radical scaled by s
        let s = if x == zero { one.clone() } else { x };
        let p = Matrix::from_rows(vec![
            vec![one.clone(), zero.clone(), zero.clone()],
            vec![y.clone(), s, -y],
            vec![zero.clone(), zero, one],
        ]);
        let moved = ut.change_basis(&p).unwrap();
        let w = WedderburnData::from_indices(3, &[&[0], &[2]], &[1], 2);
        prop_assert!(hmodpi::wedderburn_certify(&moved, &w).unwrap().passed());
        let r = exponent_formula(&moved, &w).unwrap();
        prop_assert_eq!(r.formula_value, 2);
        prop_assert!(r.certificate.is_some());
    }
}
