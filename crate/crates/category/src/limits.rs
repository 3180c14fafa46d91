//! Pullbacks along kernels, pushouts along cokernels, induced boundary
//! morphisms and homology objects.
//!
//! No general limit machinery: the only pullbacks and pushouts ever computed
//! are the kernel/cokernel-shaped ones that exist in every semiexact model.

use crate::arrows::{cofactor_through, cokernel, factor_through, kernel, CokernelArrow, KernelArrow};
use crate::error::CategoryError;
use crate::model::{comp, Model};

/// A commutative square: `right ∘ top = bottom ∘ left`.
#[derive(Debug, Clone)]
pub struct Square<M: Model> {
    pub top: M::Map,
    pub left: M::Map,
    pub right: M::Map,
    pub bottom: M::Map,
}

impl<M: Model> Square<M> {
    /// Builds a square, checking endpoints and commutativity.
    pub fn new(
        top: M::Map,
        left: M::Map,
        right: M::Map,
        bottom: M::Map,
    ) -> Result<Self, CategoryError> {
        let endpoints_ok = M::src(&top) == M::src(&left)
            && M::dst(&top) == M::src(&right)
            && M::dst(&left) == M::src(&bottom)
            && M::dst(&right) == M::dst(&bottom);
        if !endpoints_ok {
            return Err(CategoryError::PreconditionFailed(
                "square endpoints do not match",
            ));
        }
        if !M::map_eq(&comp::<M>(&right, &top), &comp::<M>(&bottom, &left)) {
            return Err(CategoryError::PreconditionFailed("square does not commute"));
        }
        Ok(Square {
            top,
            left,
            right,
            bottom,
        })
    }
}

/// Pulls a kernel back along an arbitrary morphism.
///
/// For `beta` a kernel into `D` and `f : D' -> D`, returns the pair
/// `(k, f')` where `k = ker(β' ∘ f)` with `β' = coker(beta.arrow)` and
/// `f'` is the unique morphism with `beta.arrow ∘ f' = f ∘ k.arrow`; the
/// square so formed is a pullback.
pub fn pullback_of_kernel<M: Model>(
    beta: &KernelArrow<M>,
    f: &M::Map,
) -> (KernelArrow<M>, M::Map) {
    assert!(
        M::dst(f) == M::dst(&beta.arrow),
        "pullback_of_kernel: f and the kernel must share a codomain"
    );
    let beta_prime = M::cokernel(&beta.arrow);
    let k = kernel::<M>(&comp::<M>(&beta_prime, f));
    let f_leg = factor_through::<M>(beta, &comp::<M>(f, &k.arrow))
        .expect("f ∘ k kills coker(beta), so it factors through the kernel beta");
    (k, f_leg)
}

/// Pushes a cokernel out along an arbitrary morphism; dual to
/// [`pullback_of_kernel`]. Returns `(c, g')` with
/// `c = coker(g ∘ α')`, `α' = ker(alpha.arrow)`, and
/// `g' ∘ alpha.arrow = c.arrow ∘ g`.
pub fn pushout_of_cokernel<M: Model>(
    alpha: &CokernelArrow<M>,
    g: &M::Map,
) -> (CokernelArrow<M>, M::Map) {
    assert!(
        M::src(g) == M::src(&alpha.arrow),
        "pushout_of_cokernel: g and the cokernel must share a domain"
    );
    let alpha_prime = M::kernel(&alpha.arrow);
    let c = cokernel::<M>(&comp::<M>(g, &alpha_prime));
    let g_leg = cofactor_through::<M>(alpha, &comp::<M>(&c.arrow, g))
        .expect("c ∘ g kills ker(alpha), so it factors through the cokernel alpha");
    (c, g_leg)
}

/// The induced morphism of kernels and of cokernels of a commutative square.
///
/// Returns `(g_hat, f_hat)` with
/// `ker(bottom) ∘ g_hat = left ∘ ker(top)` and
/// `f_hat ∘ coker(top) = coker(bottom) ∘ right`.
pub fn induced_boundary_morphisms<M: Model>(sq: &Square<M>) -> (M::Map, M::Map) {
    let k_top = kernel::<M>(&sq.top);
    let k_bottom = kernel::<M>(&sq.bottom);
    let g_hat = factor_through::<M>(&k_bottom, &comp::<M>(&sq.left, &k_top.arrow))
        .expect("bottom ∘ left ∘ ker(top) is null by commutativity");

    let c_top = cokernel::<M>(&sq.top);
    let c_bottom = cokernel::<M>(&sq.bottom);
    let f_hat = cofactor_through::<M>(&c_top, &comp::<M>(&c_bottom.arrow, &sq.right))
        .expect("coker(bottom) ∘ right ∘ top is null by commutativity");

    (g_hat, f_hat)
}

/// The commuting square of a kernel `i` and a cokernel `q`.
#[derive(Debug, Clone)]
pub struct HomologyTriple<M: Model> {
    pub pi: CokernelArrow<M>,
    pub iota: KernelArrow<M>,
    pub h: M::Object,
}

/// Computes the homology object of a kernel `i : A ↣ B` and a cokernel
/// `q : B ↠ C` with `(coker i) ∘ (ker q)` null: a cokernel
/// `pi : A ↠ H` and a kernel `iota : H ↣ C` with
/// `iota ∘ pi = q ∘ i`. In a homological model `q ∘ i` is exact, which is
/// what makes `iota` a kernel.
pub fn homology_object<M: Model>(
    i: &KernelArrow<M>,
    q: &CokernelArrow<M>,
) -> Result<HomologyTriple<M>, CategoryError> {
    if M::dst(&i.arrow) != M::src(&q.arrow) {
        return Err(CategoryError::PreconditionFailed(
            "homology_object: the kernel must land where the cokernel departs",
        ));
    }
    let coker_i = M::cokernel(&i.arrow);
    let ker_q = M::kernel(&q.arrow);
    if !M::is_null(&comp::<M>(&coker_i, &ker_q)) {
        return Err(CategoryError::PreconditionFailed(
            "homology_object: (coker i)(ker q) is not null",
        ));
    }

    let qi = comp::<M>(&q.arrow, &i.arrow);
    let dec = crate::classify::normal_decomposition::<M>(&qi);
    // Folding the middle morphism into the image side keeps
    // iota ∘ pi = q ∘ i on the nose.
    let iota = KernelArrow {
        arrow: comp::<M>(&dec.im.arrow, &dec.middle),
        of: dec.im.of,
    };
    let h = M::dst(&dec.coim.arrow).clone();
    Ok(HomologyTriple {
        pi: dec.coim,
        iota,
        h,
    })
}
