use super::{sn_act, HPolynomial, Var};
use crate::error::{Error, Result};
use crate::perm::{permutations_of_subset, GroupAlgebraElement, Permutation};
use crate::rational::Q;

/// A Young tableau whose cells are filled with distinct variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct YoungTableau {
    rows: Vec<Vec<Var>>,
}

impl YoungTableau {
    pub fn new(rows: Vec<Vec<Var>>) -> Result<Self> {
        if rows.iter().any(Vec::is_empty) {
            return Err(Error::InvalidInput("tableau rows must be nonempty".into()));
        }
        if rows.windows(2).any(|w| w[0].len() < w[1].len()) {
            return Err(Error::InvalidInput("tableau row lengths must weakly decrease".into()));
        }
        let mut all: Vec<Var> = rows.iter().flatten().copied().collect();
        all.sort_unstable();
        if all.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidInput("tableau filling repeats a variable".into()));
        }
        Ok(YoungTableau { rows })
    }

    /// Fills the shape row by row with `vars` in the given order.
    pub fn row_reading(shape: &[usize], vars: &[Var]) -> Result<Self> {
        if shape.iter().sum::<usize>() != vars.len() {
            return Err(Error::InvalidInput(format!(
                "shape {shape:?} does not have {} cells",
                vars.len()
            )));
        }
        let mut rows = Vec::new();
        let mut it = vars.iter().copied();
        for &len in shape {
            rows.push(it.by_ref().take(len).collect());
        }
        Self::new(rows)
    }

    pub fn shape(&self) -> Vec<usize> {
        self.rows.iter().map(Vec::len).collect()
    }

    pub fn rows(&self) -> &[Vec<Var>] {
        &self.rows
    }

    pub fn columns(&self) -> Vec<Vec<Var>> {
        let width = self.rows.first().map_or(0, Vec::len);
        (0..width)
            .map(|j| self.rows.iter().filter_map(|r| r.get(j).copied()).collect())
            .collect()
    }

    /// Filling in sorted order.
    pub fn variables(&self) -> Vec<Var> {
        let mut v: Vec<Var> = self.rows.iter().flatten().copied().collect();
        v.sort_unstable();
        v
    }
}

/// All products of permutations, one from each block's symmetric group.
fn stabilizer(n: usize, blocks: &[Vec<usize>]) -> Vec<Permutation> {
    let mut group = vec![Permutation::identity(n)];
    for block in blocks.iter().filter(|b| b.len() > 1) {
        let local = permutations_of_subset(n, block);
        group = group
            .iter()
            .flat_map(|g| local.iter().map(move |p| g.compose(p)))
            .collect();
    }
    group
}

/// `e_T = Σ_{σ ∈ R_T, τ ∈ C_T} sign(τ) στ` acting on positions in the sorted filling.
pub fn young_element(t: &YoungTableau) -> GroupAlgebraElement {
    let vars = t.variables();
    let n = vars.len();
    let pos = |v: &Var| vars.binary_search(v).unwrap();
    let blocks = |groups: Vec<Vec<Var>>| -> Vec<Vec<usize>> {
        groups.iter().map(|g| g.iter().map(pos).collect()).collect()
    };
    let rows = stabilizer(n, &blocks(t.rows.clone()));
    let cols = stabilizer(n, &blocks(t.columns()));
    let mut e = GroupAlgebraElement::zero(n);
    for s in &rows {
        for c in &cols {
            e.add_term(s.compose(c), Q::from_integer(c.sign().into()));
        }
    }
    e
}

/// `e_T · f` for multilinear `f` in exactly the variables of `t`.
pub fn young_symmetrizer(t: &YoungTableau, f: &HPolynomial) -> Result<HPolynomial> {
    let vars = f.multilinear_variables()?;
    if vars != t.variables() {
        return Err(Error::InvalidInput(
            "tableau filling and polynomial variables differ".into(),
        ));
    }
    let mut out = HPolynomial::zero(f.hopf_dim());
    for (p, c) in young_element(t).terms() {
        out = out.add(&sn_act(p, f)?.scale(c));
    }
    Ok(out)
}

/// `h(d, l, t) = ((l+t)^d, l^t)` with zero parts dropped.
pub fn hook_partition(d: usize, l: usize, t: usize) -> Result<Vec<usize>> {
    let mut parts = vec![l + t; d];
    parts.extend(std::iter::repeat_n(l, t));
    parts.retain(|&p| p > 0);
    if parts.is_empty() {
        return Err(Error::DegenerateHook { d, l, t });
    }
    Ok(parts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{standard_polynomial, xs};
    use crate::rational::q;

    #[test]
    fn hooks() {
        assert_eq!(hook_partition(2, 1, 2).unwrap(), vec![3, 3, 1, 1]);
        assert_eq!(hook_partition(3, 2, 0).unwrap(), vec![2, 2, 2]);
        assert_eq!(hook_partition(3, 2, 1).unwrap().iter().sum::<usize>(), 11);
        assert!(hook_partition(0, 0, 0).is_err());
    }

    #[test]
    fn single_column_gives_standard_polynomial() {
        let t = YoungTableau::row_reading(&[1, 1, 1, 1], &xs(4)).unwrap();
        let f = HPolynomial::word(1, &xs(4));
        assert_eq!(young_symmetrizer(&t, &f).unwrap(), standard_polynomial(4, 1));
    }

    #[test]
    fn single_row_symmetrizes() {
        let t = YoungTableau::row_reading(&[2], &xs(2)).unwrap();
        let f = HPolynomial::word(1, &xs(2));
        let g = young_symmetrizer(&t, &f).unwrap();
        assert_eq!(g, f.add(&HPolynomial::word(1, &[Var::x(2), Var::x(1)])));
    }

    #[test]
    fn hook_21_scalar_is_three() {
        let t = YoungTableau::row_reading(&[2, 1], &xs(3)).unwrap();
        let e = young_element(&t);
        assert_eq!(e.mul(&e).ratio_to(&e), Some(q(3)));
    }
}
