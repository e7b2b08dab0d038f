//! Exact computation of first twisted cohomology groups of
//! finite-dimensional unital associative algebras over the rationals,
//! with dedicated support for triangular algebras `Tri(A, M, B)`:
//! corner decompositions, the block decomposition of H1, dual towers and
//! weak amenability, and the obstruction that amenability places on the
//! off-diagonal part of an endomorphism.
//!
//! All arithmetic is exact rational; every computed object carries enough
//! structure to be re-verified (derivations are re-checked against the
//! product rule, decompositions against the original module, and so on).

pub mod algebra;
pub mod catalog;
pub mod cli;
pub mod cohomology;
pub mod duals;
pub mod linalg;
pub mod rat;
pub mod specfile;
pub mod triangular;

pub use algebra::{
    direct_sum, hom_direct_sum, quotient_algebra, AlgebraHom, Bimodule, FiniteAlgebra, HomPair,
    Ideal, QuotientAlgebra, ValidationReport, Violation,
};
pub use cohomology::{derivation_space, inner_derivation, DerivationSpace, TriCohomology};
pub use duals::{
    build_obstruction_derivation, build_obstruction_module, dual_bimodule, iterated_dual,
    obstruction_inner_test, weak_amenability_check,
};
pub use linalg::Mat;
pub use rat::Rat;
pub use triangular::{build_tri, corner_decompose, lift_hom, restrict_hom, TriangularAlgebra};

/// Failure modes, split by what the caller got wrong: malformed input
/// shapes, parse errors, broken axioms, or violated hypotheses of a
/// specific construction.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("shape error: {0}")]
    Shape(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("inclusion error: {0}")]
    Inclusion(String),
    #[error("invariance error: {0}")]
    Invariance(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("corner condition violated: {0}")]
    Corner(String),
    #[error("semilinearity violated: {0}")]
    Semilinearity(String),
    #[error("compatibility conditions violated: {0}")]
    Theta(String),
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}
