//! Independent recomputation of kernels, cokernels and the two Lambek
//! invariants, straight from the group-theoretic formulas
//! `Im S = (Im b ∩ Im f')/Im(bf)` and `Ker T = Ker(cg)/(Ker b · Ker g)`.
//!
//! This crate is the anti-circularity ground truth: it never touches the
//! categorical engine (the dependency graph forbids it) and recomputes
//! everything at the element or lattice level. Pointed sets count
//! elementwise, abelian groups run lattice arithmetic on presentations,
//! finite groups chase cosets.

pub mod abenum;
pub mod abgroup;
pub mod grp;
pub mod ptset;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("instance too large to enumerate (bound {bound})")]
    TooLarge { bound: u64 },
    #[error("unsupported instance: {0}")]
    Unsupported(&'static str),
    #[error(transparent)]
    Arithmetic(#[from] lambek_models::int::Overflow),
}

/// The seven morphisms of two adjacent commutative squares, as bare model
/// maps. The caller guarantees endpoints and commutativity.
#[derive(Debug, Clone)]
pub struct LambekInput<Map> {
    pub f: Map,
    pub g: Map,
    pub f2: Map,
    pub g2: Map,
    pub a: Map,
    pub b: Map,
    pub c: Map,
}

/// Oracle fingerprints next to the engine's, with the agreement verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleReport {
    pub im_s_fingerprint: String,
    pub ker_t_fingerprint: String,
    pub agrees: bool,
}

impl OracleReport {
    pub fn compare(
        im_s_fingerprint: String,
        ker_t_fingerprint: String,
        engine_im_s: &str,
        engine_ker_t: &str,
    ) -> Self {
        let agrees = im_s_fingerprint == engine_im_s && ker_t_fingerprint == engine_ker_t;
        OracleReport {
            im_s_fingerprint,
            ker_t_fingerprint,
            agrees,
        }
    }
}
