//! The primitive contract a concrete model category has to satisfy.

use std::fmt::Debug;

/// A semiexact category presented through executable primitives.
///
/// A model supplies objects, morphisms, a decidable null ideal, and a kernel
/// and cokernel for every morphism. Everything else in this crate is derived
/// from these primitives and is shared by all models.
///
/// Beyond the categorical operations, a model has to be able to *solve*
/// factorization problems: [`Model::lift`] finds `u` with `through ∘ u = x`
/// and [`Model::descend`] finds `u` with `u ∘ through = y`. The engine only
/// calls them through kernel and cokernel arrows, where the universal
/// property guarantees a unique solution once the matching null test has
/// passed.
pub trait Model {
    type Object: Clone + PartialEq + Debug;
    type Map: Clone + Debug;

    /// Short tag used in reports ("ptset", "abgroup", "grp").
    const NAME: &'static str;

    /// Whether the model is homological (kernels/cokernels compose and
    /// homology objects exist). Pointed sets and abelian groups are, the
    /// category of groups is not.
    const IS_HOMOLOGICAL: bool;

    fn src(f: &Self::Map) -> &Self::Object;
    fn dst(f: &Self::Map) -> &Self::Object;

    fn identity(x: &Self::Object) -> Self::Map;

    /// The composite `g ∘ f`. Callers must ensure `dst(f) = src(g)`.
    fn compose(g: &Self::Map, f: &Self::Map) -> Self::Map;

    /// Equality of parallel morphisms (same source and target).
    fn map_eq(f: &Self::Map, g: &Self::Map) -> bool;

    /// Membership in the null ideal.
    fn is_null(f: &Self::Map) -> bool;

    /// Whether the identity of `x` is null.
    fn is_null_object(x: &Self::Object) -> bool;

    fn is_iso(f: &Self::Map) -> bool;

    /// The canonical kernel arrow `Ker f -> src(f)`.
    fn kernel(f: &Self::Map) -> Self::Map;

    /// The canonical cokernel arrow `dst(f) -> Coker f`.
    fn cokernel(f: &Self::Map) -> Self::Map;

    /// Some `u` with `through ∘ u = x`, if one exists. `dst(through)` and
    /// `dst(x)` must agree.
    fn lift(through: &Self::Map, x: &Self::Map) -> Option<Self::Map>;

    /// Some `u` with `u ∘ through = y`, if one exists. `src(through)` and
    /// `src(y)` must agree.
    fn descend(through: &Self::Map, y: &Self::Map) -> Option<Self::Map>;
}

/// `g ∘ f` with an endpoint check; the engine composes through this.
pub fn comp<M: Model>(g: &M::Map, f: &M::Map) -> M::Map {
    assert!(
        M::dst(f) == M::src(g),
        "composition endpoint mismatch in model {}",
        M::NAME
    );
    M::compose(g, f)
}
