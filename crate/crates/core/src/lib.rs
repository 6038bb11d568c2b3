//! Exact polynomial-identity computations for module algebras over
//! finite-dimensional Hopf algebras.

pub mod algebra;
pub mod engine;
pub mod error;
pub mod grassmann;
pub mod hopf;
pub mod linalg;
pub mod module_algebra;
pub mod perm;
pub mod poly;
pub mod rational;
pub mod structure;

pub use algebra::Algebra;
pub use engine::{
    best_index_evidence, capelli_check, codimension, default_budget, evaluate, identity_subspace,
    is_identity_multilinear, kemer_witness_search, monomial_kernel, multilinear_dim, Assignment,
    CapelliReport, CodimReport, IdentityReport, KemerOutcome, KemerSearchReport, KemerShape,
    KemerWitness, DEFAULT_BUDGET,
};
pub use error::{Error, Result};
pub use grassmann::{
    codim_comparison_check, embedding_rank_check, envelope, grassmann, tagged_sample,
    tensor_with_grassmann, tilde_correspondence_check, verify_h2, CodimComparison, H2ModuleAlgebra,
    H2Report, TildeReport, TruncatedGrassmann,
};
pub use hopf::{dual, group_algebra, h2_of, tensor, verify_hopf, GroupTable, HopfAlgebra, HopfReport};
pub use linalg::{Matrix, Subspace};
pub use module_algebra::{
    adjoin_unit, dual_action_extension, par, phi_functional, verify_module_algebra, wedderburn_certify,
    HModuleAlgebra, ModuleReport, WedderburnData, WedderburnReport,
};
pub use perm::Permutation;
pub use poly::{
    alt, format_polynomial, parse_polynomial, sn_act, tilde, HPolynomial, Var,
};
pub use rational::Q;
pub use structure::{
    exp_estimate, exponent_formula, trace_identity_check, trace_of, ExponentReport, TraceReport,
};
