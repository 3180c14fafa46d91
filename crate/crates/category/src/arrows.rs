//! Kernel and cokernel arrows and factorization through them.

use crate::error::CategoryError;
use crate::model::{comp, Model};

/// A morphism together with the morphism it is a kernel of.
///
/// The type invariant — `of ∘ arrow` is null and `arrow` factors every `x`
/// with `of ∘ x` null, uniquely — holds for values produced by [`kernel`]
/// and is checked by [`KernelArrow::from_mono`].
#[derive(Debug, Clone)]
pub struct KernelArrow<M: Model> {
    pub arrow: M::Map,
    pub of: M::Map,
}

/// A morphism together with the morphism it is a cokernel of.
#[derive(Debug, Clone)]
pub struct CokernelArrow<M: Model> {
    pub arrow: M::Map,
    pub of: M::Map,
}

/// The canonical kernel of `f`. Total: every morphism of a semiexact model
/// has one. For null `f` the model returns the identity on the source.
pub fn kernel<M: Model>(f: &M::Map) -> KernelArrow<M> {
    KernelArrow {
        arrow: M::kernel(f),
        of: f.clone(),
    }
}

/// The canonical cokernel of `f`; dual to [`kernel`].
pub fn cokernel<M: Model>(f: &M::Map) -> CokernelArrow<M> {
    CokernelArrow {
        arrow: M::cokernel(f),
        of: f.clone(),
    }
}

impl<M: Model> KernelArrow<M> {
    /// Wraps an arrow that is already a kernel of something.
    ///
    /// A morphism is a kernel exactly when it is an exact N-monomorphism,
    /// and in that case it is a kernel of its own cokernel. Returns
    /// `PreconditionFailed` when the classification test fails.
    pub fn from_mono(arrow: M::Map) -> Result<Self, CategoryError> {
        let c = crate::classify::classify::<M>(&arrow);
        if !c.is_kernel {
            return Err(CategoryError::PreconditionFailed(
                "arrow is not an exact N-monomorphism, hence not a kernel",
            ));
        }
        let of = M::cokernel(&arrow);
        Ok(KernelArrow { arrow, of })
    }

    pub fn source(&self) -> &M::Object {
        M::src(&self.arrow)
    }
}

impl<M: Model> CokernelArrow<M> {
    /// Wraps an arrow that is already a cokernel of something; dual to
    /// [`KernelArrow::from_mono`].
    pub fn from_epi(arrow: M::Map) -> Result<Self, CategoryError> {
        let c = crate::classify::classify::<M>(&arrow);
        if !c.is_cokernel {
            return Err(CategoryError::PreconditionFailed(
                "arrow is not an exact N-epimorphism, hence not a cokernel",
            ));
        }
        let of = M::kernel(&arrow);
        Ok(CokernelArrow { arrow, of })
    }

    pub fn target(&self) -> &M::Object {
        M::dst(&self.arrow)
    }
}

/// The unique `u` with `k.arrow ∘ u = x`.
///
/// `x` factors through the kernel exactly when `k.of ∘ x` is null; that is
/// the precondition test, and the error reports that `x` does not land in
/// the subobject.
pub fn factor_through<M: Model>(k: &KernelArrow<M>, x: &M::Map) -> Result<M::Map, CategoryError> {
    assert!(
        M::dst(x) == M::dst(&k.arrow),
        "factor_through: x and the kernel arrow must share a codomain"
    );
    if !M::is_null(&comp::<M>(&k.of, x)) {
        return Err(CategoryError::PreconditionFailed(
            "morphism does not factor through the kernel (null test failed)",
        ));
    }
    let u = M::lift(&k.arrow, x)
        .expect("kernel universal property: factorization must exist after the null test");
    debug_assert!(M::map_eq(&comp::<M>(&k.arrow, &u), x));
    Ok(u)
}

/// The unique `u` with `u ∘ c.arrow = y`; dual to [`factor_through`].
pub fn cofactor_through<M: Model>(
    c: &CokernelArrow<M>,
    y: &M::Map,
) -> Result<M::Map, CategoryError> {
    assert!(
        M::src(y) == M::src(&c.arrow),
        "cofactor_through: y and the cokernel arrow must share a domain"
    );
    if !M::is_null(&comp::<M>(y, &c.of)) {
        return Err(CategoryError::PreconditionFailed(
            "morphism does not factor through the cokernel (null test failed)",
        ));
    }
    let u = M::descend(&c.arrow, y)
        .expect("cokernel universal property: factorization must exist after the null test");
    debug_assert!(M::map_eq(&comp::<M>(&u, &c.arrow), y));
    Ok(u)
}

/// Whether two kernel arrows into the same object present the same
/// subobject, i.e. each factors through the other. Canonical representatives
/// differ across constructions, so this is the only notion of sameness the
/// engine ever uses for subobjects.
pub fn subobject_equal<M: Model>(k1: &KernelArrow<M>, k2: &KernelArrow<M>) -> bool {
    assert!(
        M::dst(&k1.arrow) == M::dst(&k2.arrow),
        "subobject_equal: kernel arrows must share a codomain"
    );
    factor_through::<M>(k2, &k1.arrow).is_ok() && factor_through::<M>(k1, &k2.arrow).is_ok()
}

/// Whether two cokernel arrows out of the same object present the same
/// quotient; dual to [`subobject_equal`].
pub fn quotient_equal<M: Model>(c1: &CokernelArrow<M>, c2: &CokernelArrow<M>) -> bool {
    assert!(
        M::src(&c1.arrow) == M::src(&c2.arrow),
        "quotient_equal: cokernel arrows must share a domain"
    );
    cofactor_through::<M>(c2, &c1.arrow).is_ok() && cofactor_through::<M>(c1, &c2.arrow).is_ok()
}
