//! The Lambek invariants of a commutative square and the comparison
//! morphism between the invariants of two adjacent squares.

use crate::arrows::{cofactor_through, cokernel, factor_through, kernel, CokernelArrow, KernelArrow};
use crate::classify::{classify, normal_decomposition};
use crate::error::CategoryError;
use crate::limits::{pullback_of_kernel, pushout_of_cokernel, Square};
use crate::model::{comp, Model};
use crate::sequence::sequence_report;

/// Two consecutive commutative squares sharing the middle vertical `b`:
///
/// ```text
///     A --f--> B --g--> C
///     |a       |b       |c
///     v        v        v
///     A'--f'-> B'--g'-> C'
/// ```
#[derive(Debug, Clone)]
pub struct LambekDiagram<M: Model> {
    pub f: M::Map,
    pub g: M::Map,
    pub f2: M::Map,
    pub g2: M::Map,
    pub a: M::Map,
    pub b: M::Map,
    pub c: M::Map,
}

impl<M: Model> LambekDiagram<M> {
    /// Validates endpoints and commutativity of both squares.
    pub fn new(
        f: M::Map,
        g: M::Map,
        f2: M::Map,
        g2: M::Map,
        a: M::Map,
        b: M::Map,
        c: M::Map,
    ) -> Result<Self, CategoryError> {
        if M::dst(&f) != M::src(&g) || M::dst(&f2) != M::src(&g2) {
            return Err(CategoryError::PreconditionFailed(
                "rows do not compose (dst f ≠ src g or dst f' ≠ src g')",
            ));
        }
        Square::<M>::new(f.clone(), a.clone(), b.clone(), f2.clone())?;
        Square::<M>::new(g.clone(), b.clone(), c.clone(), g2.clone())?;
        Ok(LambekDiagram {
            f,
            g,
            f2,
            g2,
            a,
            b,
            c,
        })
    }

    /// The left square `S = (f, a, b, f')`.
    pub fn square_s(&self) -> Square<M> {
        Square {
            top: self.f.clone(),
            left: self.a.clone(),
            right: self.b.clone(),
            bottom: self.f2.clone(),
        }
    }

    /// The right square `T = (g, b, c, g')`.
    pub fn square_t(&self) -> Square<M> {
        Square {
            top: self.g.clone(),
            left: self.b.clone(),
            right: self.c.clone(),
            bottom: self.g2.clone(),
        }
    }
}

/// The invariants of the square pair: `Im S = Coker λ_S` built from the
/// pullback of the images of `b` and `f'`, `Ker T = Ker ρ_T` built from the
/// pushout of the coimages of `b` and `g`, and — when requested through
/// [`lambek_morphism`] — the witnesses `α`, `β` and the comparison `Λ`.
#[derive(Debug, Clone)]
pub struct LambekResult<M: Model> {
    /// `λ_S : A -> M`, the arrow into the pullback.
    pub lambda: M::Map,
    /// `coker λ_S`, with target `Im S`.
    pub im_s: CokernelArrow<M>,
    /// `ρ_T : N -> C'`, the arrow out of the pushout.
    pub rho: M::Map,
    /// `ker ρ_T`, with source `Ker T`.
    pub ker_t: KernelArrow<M>,
    /// `l_S : M ↣ Im b`, the pullback leg opposite `im f'`.
    pub l: M::Map,
    /// `r_T : • ↠ N`, the pushout leg opposite `coim g`.
    pub r: M::Map,
    /// `α : Coker λ_S -> N` with `α ∘ coker λ_S = r ∘ l`.
    pub alpha: Option<M::Map>,
    /// `β : M -> Ker ρ_T` with `ker ρ_T ∘ β = r ∘ l`.
    pub beta: Option<M::Map>,
    /// `Λ : Im S -> Ker T` with `r ∘ l = (ker ρ_T) ∘ Λ ∘ (coker λ_S)`.
    pub lambek: Option<M::Map>,
}

impl<M: Model> LambekResult<M> {
    pub fn im_s_object(&self) -> &M::Object {
        M::dst(&self.im_s.arrow)
    }

    pub fn ker_t_object(&self) -> &M::Object {
        M::src(&self.ker_t.arrow)
    }

    /// Checks `r ∘ l = (ker ρ_T) ∘ Λ ∘ (coker λ_S)`. Only meaningful when
    /// `Λ` is set and the two middle objects are fused (i.e. the result came
    /// from [`lambek_morphism`]).
    pub fn defining_equation_holds(&self) -> bool {
        match &self.lambek {
            None => false,
            Some(lam) => {
                let rl = comp::<M>(&self.r, &self.l);
                let rhs = comp::<M>(&self.ker_t.arrow, &comp::<M>(lam, &self.im_s.arrow));
                M::map_eq(&rl, &rhs)
            }
        }
    }
}

/// Builds `Im S` and `Ker T` without assuming anything beyond the diagram
/// invariants. The `α`, `β`, `Λ` fields stay unset.
///
/// The two unnamed cone legs — `B -> Im b` and `A' -> Im f'` on the pullback
/// side, and dually on the pushout side — are the canonical im- and
/// coim-factors of the normal decompositions.
pub fn lambek_invariants<M: Model>(d: &LambekDiagram<M>) -> LambekResult<M> {
    let dec_b = normal_decomposition::<M>(&d.b);
    let dec_f2 = normal_decomposition::<M>(&d.f2);
    let dec_g = normal_decomposition::<M>(&d.g);

    // B -> Im b, the im-factor of b.
    let imfac_b = comp::<M>(&dec_b.middle, &dec_b.coim.arrow);
    // Coim b -> B', the coim-factor of b.
    let coimfac_b = comp::<M>(&dec_b.im.arrow, &dec_b.middle);

    // M := pullback of (im b, im f') over B'; l lands in Im b.
    let (l_ker, _s) = pullback_of_kernel::<M>(&dec_f2.im, &dec_b.im.arrow);
    let lambda = factor_through::<M>(&l_ker, &comp::<M>(&imfac_b, &d.f))
        .expect("commutativity of S makes the cone leg factor through the pullback");
    let im_s = cokernel::<M>(&lambda);

    // N := pushout of (coim g, coim b) under B; r departs from Coim b.
    let (r_coker, _t) = pushout_of_cokernel::<M>(&dec_g.coim, &dec_b.coim.arrow);
    let rho = cofactor_through::<M>(&r_coker, &comp::<M>(&d.g2, &coimfac_b))
        .expect("commutativity of T makes the cocone leg factor through the pushout");
    let ker_t = kernel::<M>(&rho);

    LambekResult {
        lambda,
        im_s,
        rho,
        ker_t,
        l: l_ker.arrow,
        r: r_coker.arrow,
        alpha: None,
        beta: None,
        lambek: None,
    }
}

/// Builds the comparison `Λ : Im S -> Ker T`.
///
/// Requires `g ∘ f` and `g' ∘ f'` null and `b` exact; a failing hypothesis
/// is reported by name and the construction is not attempted. With `b`
/// exact, its decomposition is folded through the single middle object
/// `Im b`, so `l` and `r` compose and `Λ` is carved out of `r ∘ l` by
/// factoring through `coker λ_S` and `ker ρ_T`.
pub fn lambek_morphism<M: Model>(d: &LambekDiagram<M>) -> Result<LambekResult<M>, CategoryError> {
    if !M::is_null(&comp::<M>(&d.g, &d.f)) {
        return Err(CategoryError::HypothesisFailed("g∘f is not null"));
    }
    if !M::is_null(&comp::<M>(&d.g2, &d.f2)) {
        return Err(CategoryError::HypothesisFailed("g'∘f' is not null"));
    }
    let dec_b = normal_decomposition::<M>(&d.b);
    if !dec_b.exact {
        return Err(CategoryError::HypothesisFailed("b is not exact"));
    }

    // b = (im b) ∘ q_b through the single object Im b; q_b is a cokernel of
    // ker b because the middle isomorphism preserves cokernels.
    let q_b = CokernelArrow::<M> {
        arrow: comp::<M>(&dec_b.middle, &dec_b.coim.arrow),
        of: dec_b.coim.of.clone(),
    };
    let i_b = &dec_b.im;

    let dec_f2 = normal_decomposition::<M>(&d.f2);
    let dec_g = normal_decomposition::<M>(&d.g);

    let (l_ker, _s) = pullback_of_kernel::<M>(&dec_f2.im, &i_b.arrow);
    let lambda = factor_through::<M>(&l_ker, &comp::<M>(&q_b.arrow, &d.f))
        .expect("commutativity of S makes the cone leg factor through the pullback");
    let im_s = cokernel::<M>(&lambda);

    let (r_coker, _t) = pushout_of_cokernel::<M>(&dec_g.coim, &q_b.arrow);
    let rho = cofactor_through::<M>(&r_coker, &comp::<M>(&d.g2, &i_b.arrow))
        .expect("commutativity of T makes the cocone leg factor through the pushout");
    let ker_t = kernel::<M>(&rho);

    let rl = comp::<M>(&r_coker.arrow, &l_ker.arrow);
    let alpha = cofactor_through::<M>(&im_s, &rl)
        .expect("r∘l kills λ because (coim g)∘f is null when g∘f is");
    let beta = factor_through::<M>(&ker_t, &rl)
        .expect("ρ kills r∘l because g'∘(im f') is null when g'∘f' is");

    let lambek = factor_through::<M>(&ker_t, &alpha)
        .expect("ρ∘α is null by N-epi cancellation along coker λ");
    let beta_descended = cofactor_through::<M>(&im_s, &beta)
        .expect("β∘λ is null by N-mono cancellation along ker ρ");
    debug_assert!(
        M::map_eq(&lambek, &beta_descended),
        "the two routes to Λ must agree"
    );

    let result = LambekResult {
        lambda,
        im_s,
        rho,
        ker_t,
        l: l_ker.arrow,
        r: r_coker.arrow,
        alpha: Some(alpha),
        beta: Some(beta),
        lambek: Some(lambek),
    };
    debug_assert!(result.defining_equation_holds());
    Ok(result)
}

/// Everything `lambek_check` can tell about a diagram. Failures are report
/// entries, never errors.
#[derive(Debug, Clone)]
pub struct CheckReport<M: Model> {
    pub model: &'static str,
    pub homological: bool,
    /// `g∘f` and `g'∘f'` null.
    pub rows_null: bool,
    /// Row exactness at `B` resp. `B'`.
    pub row1_exact: bool,
    pub row2_exact: bool,
    pub b_exact: bool,
    pub lambda_exists: bool,
    /// `Λ` satisfies the defining equation and both routes to it agree.
    pub lambda_unique: Option<bool>,
    pub lambda_iso: Option<bool>,
    /// Whether the isomorphism conclusion is actually predicted for this
    /// input (homological model, exact `b`, null and exact rows).
    pub iso_predicted: bool,
    pub result: Option<LambekResult<M>>,
}

/// Checks the hypotheses of the isomorphism theorem on a diagram, builds
/// `Λ` whenever the existence hypotheses hold, and reports what it found.
pub fn lambek_check<M: Model>(d: &LambekDiagram<M>) -> CheckReport<M> {
    let rows_null =
        M::is_null(&comp::<M>(&d.g, &d.f)) && M::is_null(&comp::<M>(&d.g2, &d.f2));
    let row1 = sequence_report::<M>(&[d.f.clone(), d.g.clone()])
        .expect("row 1 composes by the diagram invariant");
    let row2 = sequence_report::<M>(&[d.f2.clone(), d.g2.clone()])
        .expect("row 2 composes by the diagram invariant");
    let row1_exact = row1.exact_at[0];
    let row2_exact = row2.exact_at[0];
    let b_exact = classify::<M>(&d.b).is_exact;

    let mut report = CheckReport {
        model: M::NAME,
        homological: M::IS_HOMOLOGICAL,
        rows_null,
        row1_exact,
        row2_exact,
        b_exact,
        lambda_exists: false,
        lambda_unique: None,
        lambda_iso: None,
        iso_predicted: M::IS_HOMOLOGICAL && rows_null && row1_exact && row2_exact && b_exact,
        result: None,
    };

    if let Ok(res) = lambek_morphism::<M>(d) {
        let lam = res.lambek.as_ref().expect("lambek_morphism sets Λ");
        let unique = res.defining_equation_holds()
            && classify::<M>(&res.ker_t.arrow).is_n_mono
            && classify::<M>(&res.im_s.arrow).is_n_epi;
        report.lambda_exists = true;
        report.lambda_unique = Some(unique);
        report.lambda_iso = Some(classify::<M>(lam).is_iso);
        report.result = Some(res);
    }
    report
}
