//! Normal decomposition and the derived classification flags.

use crate::arrows::{cofactor_through, cokernel, factor_through, kernel, CokernelArrow, KernelArrow};
use crate::model::{comp, Model};

/// The factorization `f = im ∘ middle ∘ coim` with
/// `coim = coker(ker f)` and `im = ker(coker f)`.
#[derive(Debug, Clone)]
pub struct NormalDecomposition<M: Model> {
    pub coim: CokernelArrow<M>,
    pub middle: M::Map,
    pub im: KernelArrow<M>,
    /// `f` is exact when the middle morphism is an isomorphism.
    pub exact: bool,
}

/// Classification of a morphism relative to the null ideal.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MorphismClassification {
    pub is_null: bool,
    pub is_n_mono: bool,
    pub is_n_epi: bool,
    pub is_exact: bool,
    pub is_kernel: bool,
    pub is_cokernel: bool,
    pub is_iso: bool,
}

/// Computes the normal decomposition of `f`.
///
/// The middle morphism is obtained by the two unique factorizations: `f`
/// lifts through `im f` because `(coker f) ∘ f` is null, and the lift
/// descends through `coim f` because its composite with `ker f` is null.
pub fn normal_decomposition<M: Model>(f: &M::Map) -> NormalDecomposition<M> {
    let k = kernel::<M>(f);
    let c = cokernel::<M>(f);
    let coim = cokernel::<M>(&k.arrow);
    let im = kernel::<M>(&c.arrow);

    let through_im = factor_through::<M>(&im, f)
        .expect("(coker f) ∘ f is null, so f factors through im f");
    let middle = cofactor_through::<M>(&coim, &through_im)
        .expect("the im-factor of f kills ker f, so it descends to coim f");

    let exact = M::is_iso(&middle);
    debug_assert!(M::map_eq(
        &comp::<M>(&im.arrow, &comp::<M>(&middle, &coim.arrow)),
        f
    ));

    NormalDecomposition {
        coim,
        middle,
        im,
        exact,
    }
}

/// Classifies `f`: N-mono by nullity of its kernel, N-epi by nullity of its
/// cokernel, exactness through the normal decomposition, and
/// kernel/cokernel as exact N-mono / exact N-epi.
pub fn classify<M: Model>(f: &M::Map) -> MorphismClassification {
    let dec = normal_decomposition::<M>(f);
    // coim.of is ker f and im.of is coker f.
    let is_n_mono = M::is_null(&dec.coim.of);
    let is_n_epi = M::is_null(&dec.im.of);
    let is_exact = dec.exact;
    MorphismClassification {
        is_null: M::is_null(f),
        is_n_mono,
        is_n_epi,
        is_exact,
        is_kernel: is_n_mono && is_exact,
        is_cokernel: is_n_epi && is_exact,
        is_iso: M::is_iso(f),
    }
}
