//! Evaluation of H-polynomials and the linear algebra built on it.

pub mod capelli;
pub mod codim;
pub mod evaluate;
pub mod identity;
pub mod kemer;

pub use capelli::{capelli_check, CapelliDegree, CapelliReport};
pub use codim::{
    codim_work, codimension, default_budget, identity_subspace, multilinear_dim, CodimReport,
    DEFAULT_BUDGET,
};
pub use evaluate::{evaluate, Assignment};
pub use identity::{is_identity_multilinear, monomial_kernel, IdentityReport};
pub use kemer::{
    best_index_evidence, kemer_witness_search, KemerOutcome, KemerSearchReport, KemerShape,
    KemerWitness,
};
