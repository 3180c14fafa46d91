//! The three executable model categories and the exact integer
//! linear algebra underneath them.
//!
//! The linear-algebra layer ([`mat`], [`hnf`], [`snf`]) is generic over the
//! scalar through the [`int::Int`] trait: the default is the unbounded
//! `BigInt`, and a checked `i64` mode signals overflow instead of wrapping.
//! Concrete aliases for the default scalar live at the crate root.

pub mod abgroup;
pub mod grp;
pub mod hnf;
pub mod int;
pub mod mat;
pub mod ptset;
pub mod snf;

use num_bigint::BigInt;

/// Default exact scalar.
pub type Scalar = BigInt;

/// Integer matrix over the default scalar.
pub type IMat = mat::Mat<Scalar>;

/// The abelian-group model over the default scalar.
pub type AbExact = abgroup::Ab<Scalar>;

/// The abelian-group model over the checked fixed-width scalar; overflow
/// is signalled, never wrapped.
pub type AbChecked = abgroup::Ab<i64>;

pub use abgroup::{AbMap, AbObject};
pub use grp::{builtin_group, CayleyGroup, Grp, GrpFingerprint, GrpHom};
pub use ptset::{Pt, PtMap, PtObject};

/// Default-scalar presentation and map aliases.
pub type AbObjectExact = AbObject<Scalar>;
pub type AbMapExact = AbMap<Scalar>;
