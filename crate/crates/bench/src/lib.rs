//! Fixtures shared by the benchmarks.

use hmodpi::{Algebra, HModuleAlgebra, WedderburnData};

pub fn ut2() -> (HModuleAlgebra, WedderburnData) {
    (
        HModuleAlgebra::plain(Algebra::upper_triangular(2)),
        WedderburnData::from_indices(3, &[&[0], &[2]], &[1], 2),
    )
}

pub fn m2() -> HModuleAlgebra {
    HModuleAlgebra::plain(Algebra::matrix(2))
}
