//! Kernels, cokernels and Lambek invariants relative to a closed null
//! ideal, written against an exchangeable model category.
//!
//! The engine never looks inside a model's payloads: everything is built
//! from the primitive contract in [`model::Model`] — composition, identity,
//! equality, the null test, kernels, cokernels, the isomorphism test and
//! the two factorization solvers. Concrete models (pointed sets, finitely
//! generated abelian groups, finite groups) live in a separate crate.

pub mod arrows;
pub mod classify;
pub mod error;
pub mod lambek;
pub mod limits;
pub mod model;
pub mod sequence;

pub use arrows::{
    cofactor_through, cokernel, factor_through, kernel, quotient_equal, subobject_equal,
    CokernelArrow, KernelArrow,
};
pub use classify::{classify, normal_decomposition, MorphismClassification, NormalDecomposition};
pub use error::CategoryError;
pub use lambek::{
    lambek_check, lambek_invariants, lambek_morphism, CheckReport, LambekDiagram, LambekResult,
};
pub use limits::{
    homology_object, induced_boundary_morphisms, pullback_of_kernel, pushout_of_cokernel,
    HomologyTriple, Square,
};
pub use model::{comp, Model};
pub use sequence::{composition_sequence, sequence_report, SequenceReport, SixTermSequence};
