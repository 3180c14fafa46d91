//! Null-sequences, exactness reports and the six-term sequence of a
//! composition.

use crate::arrows::{cofactor_through, cokernel, factor_through, kernel, subobject_equal};
use crate::classify::classify;
use crate::error::CategoryError;
use crate::model::{comp, Model};

/// Exactness report for a chain of composable morphisms. Position `i` sits
/// between `ms[i]` and `ms[i+1]`, i.e. at the object `dst(ms[i])`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequenceReport {
    /// Whether `ms[i+1] ∘ ms[i]` is null.
    pub order_two: Vec<bool>,
    /// Whether `im ms[i] = ker ms[i+1]` as subobjects.
    pub exact_at: Vec<bool>,
}

impl SequenceReport {
    pub fn all_order_two(&self) -> bool {
        self.order_two.iter().all(|&b| b)
    }
    pub fn all_exact(&self) -> bool {
        self.exact_at.iter().all(|&b| b)
    }
}

/// Order-two and exactness flags for each interior position of a chain.
/// A single morphism yields an empty report.
pub fn sequence_report<M: Model>(ms: &[M::Map]) -> Result<SequenceReport, CategoryError> {
    for i in 0..ms.len().saturating_sub(1) {
        if M::dst(&ms[i]) != M::src(&ms[i + 1]) {
            return Err(CategoryError::CompositionMismatch(i, i + 1));
        }
    }
    let mut order_two = Vec::new();
    let mut exact_at = Vec::new();
    for w in ms.windows(2) {
        order_two.push(M::is_null(&comp::<M>(&w[1], &w[0])));
        let im_in = kernel::<M>(&M::cokernel(&w[0]));
        let ker_out = kernel::<M>(&w[1]);
        exact_at.push(subobject_equal::<M>(&im_in, &ker_out));
    }
    Ok(SequenceReport {
        order_two,
        exact_at,
    })
}

/// The six-term sequence
/// `Ker f -> Ker(gf) -> Ker g -> Coker f -> Coker(gf) -> Coker g`
/// of a composable pair, with per-position exactness and the exactness of
/// the four comparison morphisms.
#[derive(Debug, Clone)]
pub struct SixTermSequence<M: Model> {
    pub phi: M::Map,
    pub psi: M::Map,
    pub chi: M::Map,
    pub epsilon: M::Map,
    pub omega: M::Map,
    /// Null flags of the five consecutive composites (there are four
    /// interior pairs).
    pub order_two: Vec<bool>,
    /// Exactness at `Ker f`, `Ker(gf)`, `Ker g`, `Coker f`, `Coker(gf)`,
    /// `Coker g`, in this order.
    pub exact_at: [bool; 6],
    pub phi_exact: bool,
    pub psi_exact: bool,
    pub epsilon_exact: bool,
    pub omega_exact: bool,
}

/// Builds the six-term sequence of `g ∘ f`.
///
/// The four comparison morphisms come from the universal properties:
/// `ker f = ker(gf) ∘ φ`, `f ∘ ker(gf) = ker(g) ∘ ψ`,
/// `coker(gf) ∘ g = ε ∘ coker f`, `coker g = ω ∘ coker(gf)`,
/// and `χ := (coker f) ∘ (ker g)`.
pub fn composition_sequence<M: Model>(
    f: &M::Map,
    g: &M::Map,
) -> Result<SixTermSequence<M>, CategoryError> {
    if M::dst(f) != M::src(g) {
        return Err(CategoryError::CompositionMismatch(0, 1));
    }
    let gf = comp::<M>(g, f);

    let ker_f = kernel::<M>(f);
    let ker_gf = kernel::<M>(&gf);
    let ker_g = kernel::<M>(g);
    let coker_f = cokernel::<M>(f);
    let coker_gf = cokernel::<M>(&gf);
    let coker_g = cokernel::<M>(g);

    let phi = factor_through::<M>(&ker_gf, &ker_f.arrow)
        .expect("gf ∘ ker f is null, so ker f factors through ker(gf)");
    let psi = factor_through::<M>(&ker_g, &comp::<M>(f, &ker_gf.arrow))
        .expect("g ∘ f ∘ ker(gf) is null, so f ∘ ker(gf) factors through ker g");
    let chi = comp::<M>(&coker_f.arrow, &ker_g.arrow);
    let epsilon = cofactor_through::<M>(&coker_f, &comp::<M>(&coker_gf.arrow, g))
        .expect("coker(gf) ∘ g ∘ f is null, so coker(gf) ∘ g descends to coker f");
    let omega = cofactor_through::<M>(&coker_gf, &coker_g.arrow)
        .expect("coker g ∘ gf is null, so coker g descends to coker(gf)");

    let chain = [&phi, &psi, &chi, &epsilon, &omega];
    let order_two = chain
        .windows(2)
        .map(|w| M::is_null(&comp::<M>(w[1], w[0])))
        .collect();

    let interior = |incoming: &M::Map, outgoing: &M::Map| {
        let im_in = kernel::<M>(&M::cokernel(incoming));
        subobject_equal::<M>(&im_in, &kernel::<M>(outgoing))
    };
    let exact_at = [
        // At the two ends, exactness amounts to φ being N-mono and ω N-epi.
        classify::<M>(&phi).is_n_mono,
        interior(&phi, &psi),
        interior(&psi, &chi),
        interior(&chi, &epsilon),
        interior(&epsilon, &omega),
        classify::<M>(&omega).is_n_epi,
    ];

    Ok(SixTermSequence {
        phi_exact: classify::<M>(&phi).is_exact,
        psi_exact: classify::<M>(&psi).is_exact,
        epsilon_exact: classify::<M>(&epsilon).is_exact,
        omega_exact: classify::<M>(&omega).is_exact,
        phi,
        psi,
        chi,
        epsilon,
        omega,
        order_two,
        exact_at,
    })
}
