//! Polynomial text: parse after print is the identity on a 200-polynomial corpus.

use hmodpi::poly::multilinear_basis;
use hmodpi::{dual, format_polynomial, group_algebra, parse_polynomial, GroupTable, HPolynomial, HopfAlgebra, Var, Q};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn corpus(hopf: &HopfAlgebra, count: usize, seed: u64) -> Vec<HPolynomial> {
    let m = hopf.dim();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|i| {
            let n = i % 3 + 1;
            let vars: Vec<Var> = (1..=n as u32)
                .map(|j| match rng.gen_range(0..3) {
                    0 => Var::x(j),
                    1 => Var::y(j),
                    _ => Var::z(j),
                })
                .collect();
            let words = multilinear_basis(&vars, m);
            let mut f = HPolynomial::zero(m);
            for _ in 0..rng.gen_range(0..5) {
                let w = words[rng.gen_range(0..words.len())].clone();
                let c = Q::new(rng.gen_range(-7i64..=7).into(), rng.gen_range(1i64..=5).into());
                f.add_term(w, c);
            }
            f
        })
        .collect()
}

#[test]
fn two_hundred_polynomials_round_trip() {
    let hopfs = [
        group_algebra(&GroupTable::trivial()),
        group_algebra(&GroupTable::symmetric(3)),
        dual(&group_algebra(&GroupTable::cyclic(2))),
        hmodpi::h2_of(&group_algebra(&GroupTable::trivial())),
    ];
    let mut total = 0;
    for (i, h) in hopfs.iter().enumerate() {
        for f in corpus(h, 50, i as u64) {
            let text = format_polynomial(h, &f);
            let back = parse_polynomial(h, &text).unwrap_or_else(|e| panic!("{text}: {e}"));
            assert_eq!(back, f, "{text}");
            assert_eq!(format_polynomial(h, &back), text);
            total += 1;
        }
    }
    assert_eq!(total, 200);
}
