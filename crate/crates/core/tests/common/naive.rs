//! Naive codimension oracle: every multilinear monomial is evaluated on every
//! basis tuple with dense arithmetic, and the rank of the resulting matrix is
//! taken by plain Gaussian elimination.

use std::collections::HashSet;

use hmodpi::{HModuleAlgebra, Q};
use num_traits::{Signed, Zero};

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

fn dense_mul(table: &[(usize, usize, usize, Q)], n: usize, u: &[Q], v: &[Q]) -> Vec<Q> {
    let mut out = vec![Q::zero(); n];
    for (i, j, k, c) in table {
        if !u[*i].is_zero() && !v[*j].is_zero() {
            out[*k] += &u[*i] * &v[*j] * c;
        }
    }
    out
}

fn dense_act(a: &HModuleAlgebra, h: usize, v: &[Q]) -> Vec<Q> {
    let m = a.action(h);
    (0..a.dim())
        .map(|i| (0..a.dim()).fold(Q::zero(), |s, j| s + m.get(i, j) * &v[j]))
        .collect()
}

fn rank(mut rows: Vec<Vec<Q>>) -> usize {
    let mut r = 0;
    let cols = rows.first().map_or(0, Vec::len);
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let pivot = rows[r].clone();
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = &rows[i][c] / &pivot[c];
                for (x, y) in rows[i].iter_mut().zip(&pivot) {
                    *x -= &f * y;
                }
            }
        }
        r += 1;
    }
    r
}

/// `dim P_n^H / (P_n^H ∩ id^H(A))` by brute force.
pub fn naive_codim(a: &HModuleAlgebra, n: usize) -> usize {
    let dim = a.dim();
    let m = a.hopf_dim();
    let table = a.algebra().entries();
    let mut monomials: Vec<(Vec<usize>, Vec<usize>)> = Vec::new();
    for p in permutations(n) {
        for code in 0..m.pow(n as u32) {
            let decs = (0..n).map(|i| code / m.pow(i as u32) % m).collect();
            monomials.push((p.clone(), decs));
        }
    }
    let acted: Vec<Vec<Vec<Q>>> = (0..m)
        .map(|h| {
            (0..dim)
                .map(|i| {
                    let mut v = vec![Q::zero(); dim];
                    v[i] = Q::from_integer(1.into());
                    dense_act(a, h, &v)
                })
                .collect()
        })
        .collect();
    // columns are (tuple, coordinate); identical columns up to sign are kept once
    let mut seen: HashSet<Vec<Q>> = HashSet::new();
    let mut columns: Vec<Vec<Q>> = Vec::new();
    for code in 0..dim.pow(n as u32) {
        let tuple: Vec<usize> = (0..n).map(|i| code / dim.pow(i as u32) % dim).collect();
        let values: Vec<Vec<Q>> = monomials
            .iter()
            .map(|(p, decs)| {
                let mut acc = acted[decs[0]][tuple[p[0]]].clone();
                for pos in 1..n {
                    if acc.iter().all(Zero::is_zero) {
                        break;
                    }
                    acc = dense_mul(&table, dim, &acc, &acted[decs[pos]][tuple[p[pos]]]);
                }
                acc
            })
            .collect();
        for k in 0..dim {
            let mut col: Vec<Q> = values.iter().map(|v| v[k].clone()).collect();
            let Some(lead) = col.iter().find(|x| !x.is_zero()).cloned() else {
                continue;
            };
            let lead = lead.abs();
            for x in col.iter_mut() {
                *x /= &lead;
            }
            if col.iter().find(|x| !x.is_zero()).unwrap().is_negative() {
                for x in col.iter_mut() {
                    *x = -x.clone();
                }
            }
            if seen.insert(col.clone()) {
                columns.push(col);
            }
        }
    }
    if columns.is_empty() {
        return 0;
    }
    rank(columns)
}
