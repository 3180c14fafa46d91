//! Seeded property suites: the lemma catalogue an instance model is
//! expected to satisfy, plus the oracle agreement checks.
//!
//! Every suite is deterministic in `(seed, trials, max_size)`. Failures are
//! counted, never panicked, so a run always produces a full report.

use crate::doc::ModelTag;
use crate::gen;
use lambek_category::{
    classify, cofactor_through, cokernel, comp, composition_sequence, factor_through,
    homology_object, induced_boundary_morphisms, kernel, lambek_check, normal_decomposition,
    pullback_of_kernel, quotient_equal, subobject_equal, CokernelArrow, KernelArrow,
    LambekDiagram, Model, MorphismClassification, Square,
};
use lambek_models::{abgroup, builtin_group, grp, ptset, AbExact, Grp, Pt};
use lambek_oracle::{LambekInput, OracleError};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// One suite's tally.
#[derive(Debug, Clone)]
pub struct SuiteOutcome {
    pub name: &'static str,
    pub trials: usize,
    pub failures: usize,
    /// For conditional laws: how often the premise actually fired.
    pub premise_hits: Option<usize>,
    pub notes: Vec<String>,
}

impl SuiteOutcome {
    fn new(name: &'static str) -> Self {
        SuiteOutcome {
            name,
            trials: 0,
            failures: 0,
            premise_hits: None,
            notes: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }

    fn check(&mut self, cond: bool, label: &str) {
        if !cond {
            self.failures += 1;
            if self.notes.len() < 5 {
                self.notes.push(format!("trial {}: {label}", self.trials));
            }
        }
    }

    fn hit(&mut self) {
        *self.premise_hits.get_or_insert(0) += 1;
    }

    fn note(&mut self, s: String) {
        if self.notes.len() < 8 {
            self.notes.push(s);
        }
    }
}

/// What the suites need from a model beyond the categorical primitives:
/// seeded samplers, fingerprints, and its oracles.
pub trait Harness: Model + Sized {
    const TAG: ModelTag;

    fn rand_object(rng: &mut ChaCha8Rng, max: usize) -> Self::Object;
    fn rand_map(rng: &mut ChaCha8Rng, max: usize) -> Self::Map;
    fn rand_map_from(rng: &mut ChaCha8Rng, src: &Self::Object, max: usize) -> Self::Map;
    fn rand_map_into(rng: &mut ChaCha8Rng, dst: &Self::Object, max: usize) -> Self::Map;
    /// A kernel arrow whose source is `src`.
    fn rand_kernel_from(rng: &mut ChaCha8Rng, src: &Self::Object, max: usize) -> Self::Map;
    /// An exact morphism landing in `dst`.
    fn rand_exact_into(rng: &mut ChaCha8Rng, dst: &Self::Object, max: usize) -> Self::Map;

    fn gen_diagram(rng: &mut ChaCha8Rng, max: usize) -> LambekDiagram<Self>;

    fn fingerprint(obj: &Self::Object) -> String;
    /// Kernel/cokernel fingerprints recomputed by the oracle; `None` when
    /// the instance is out of enumeration reach.
    fn oracle_kernel_cokernel(f: &Self::Map) -> Option<(String, String)>;
    /// The categorical kernel/cokernel, fingerprinted in the same
    /// convention as the oracle.
    fn engine_kernel_cokernel(f: &Self::Map) -> Option<(String, String)>;
    fn oracle_lambek(d: &LambekDiagram<Self>) -> Result<OraclePair, OracleError>;
}

#[derive(Debug, Clone)]
pub struct OraclePair {
    pub im_s: String,
    pub ker_t: String,
    pub anomalies: Vec<String>,
}

fn diagram_input<M: Model>(d: &LambekDiagram<M>) -> LambekInput<M::Map> {
    LambekInput {
        f: d.f.clone(),
        g: d.g.clone(),
        f2: d.f2.clone(),
        g2: d.g2.clone(),
        a: d.a.clone(),
        b: d.b.clone(),
        c: d.c.clone(),
    }
}

impl Harness for Pt {
    const TAG: ModelTag = ModelTag::Ptset;

    fn rand_object(rng: &mut ChaCha8Rng, max: usize) -> Self::Object {
        ptset::sample::random_object(rng, max)
    }
    fn rand_map(rng: &mut ChaCha8Rng, max: usize) -> Self::Map {
        ptset::sample::random_map(rng, max)
    }
    fn rand_map_from(rng: &mut ChaCha8Rng, src: &Self::Object, max: usize) -> Self::Map {
        let dst = ptset::sample::random_object(rng, max);
        ptset::sample::random_map_between(rng, src, &dst)
    }
    fn rand_map_into(rng: &mut ChaCha8Rng, dst: &Self::Object, max: usize) -> Self::Map {
        let src = ptset::sample::random_object(rng, max);
        ptset::sample::random_map_between(rng, &src, dst)
    }
    fn rand_kernel_from(rng: &mut ChaCha8Rng, src: &Self::Object, max: usize) -> Self::Map {
        ptset::sample::random_kernel_from(rng, src, max.max(src.size))
    }
    fn rand_exact_into(rng: &mut ChaCha8Rng, dst: &Self::Object, max: usize) -> Self::Map {
        // Kill a few fresh elements, embed the rest injectively into dst.
        let alive = rng.random_range(0..dst.size);
        let killed = 1 + rng.random_range(0..=max.min(3));
        let src = lambek_models::PtObject::new(alive + killed).unwrap();
        let mut targets: Vec<usize> = (1..dst.size).collect();
        for i in 0..alive.min(targets.len()) {
            let j = rng.random_range(i..targets.len());
            targets.swap(i, j);
        }
        let mut killed_left = killed - 1;
        let mut alive_left = alive;
        let mut table = vec![0usize];
        let mut next = 0;
        for _ in 1..src.size {
            let kill = if alive_left == 0 {
                true
            } else if killed_left == 0 {
                false
            } else {
                rng.random_bool(0.4)
            };
            if kill {
                killed_left -= 1;
                table.push(0);
            } else {
                alive_left -= 1;
                table.push(targets[next]);
                next += 1;
            }
        }
        lambek_models::PtMap::new(src, *dst, table).expect("constructed exact map is valid")
    }

    fn gen_diagram(rng: &mut ChaCha8Rng, max: usize) -> LambekDiagram<Self> {
        gen::generate_ptset(rng, max)
    }

    fn fingerprint(obj: &Self::Object) -> String {
        obj.size.to_string()
    }
    fn oracle_kernel_cokernel(f: &Self::Map) -> Option<(String, String)> {
        let (k, c) = lambek_oracle::ptset::elementwise_kernel_cokernel(f);
        Some((k.to_string(), c.to_string()))
    }
    fn engine_kernel_cokernel(f: &Self::Map) -> Option<(String, String)> {
        let k = kernel::<Pt>(f).arrow.src().size;
        let c = cokernel::<Pt>(f).arrow.dst().size;
        Some((k.to_string(), c.to_string()))
    }
    fn oracle_lambek(d: &LambekDiagram<Self>) -> Result<OraclePair, OracleError> {
        let (im_s, ker_t) = lambek_oracle::ptset::lambek_fingerprints(&diagram_input(d));
        Ok(OraclePair {
            im_s: im_s.to_string(),
            ker_t: ker_t.to_string(),
            anomalies: Vec::new(),
        })
    }
}

impl Harness for AbExact {
    const TAG: ModelTag = ModelTag::Abgroup;

    fn rand_object(rng: &mut ChaCha8Rng, max: usize) -> Self::Object {
        abgroup::sample::random_object(rng, max.min(3), 3)
    }
    fn rand_map(rng: &mut ChaCha8Rng, max: usize) -> Self::Map {
        abgroup::sample::random_map(rng, max.min(3), 3)
    }
    fn rand_map_from(rng: &mut ChaCha8Rng, src: &Self::Object, max: usize) -> Self::Map {
        abgroup::sample::random_map_from(rng, src, max.min(3), 3)
    }
    fn rand_map_into(rng: &mut ChaCha8Rng, dst: &Self::Object, max: usize) -> Self::Map {
        let src = abgroup::sample::random_object(rng, max.min(3), 3);
        abgroup::sample::random_map_between(rng, &src, dst)
    }
    fn rand_kernel_from(rng: &mut ChaCha8Rng, src: &Self::Object, max: usize) -> Self::Map {
        abgroup::sample::random_summand_inclusion(rng, src, max.min(3), 3)
    }
    fn rand_exact_into(rng: &mut ChaCha8Rng, dst: &Self::Object, max: usize) -> Self::Map {
        // Every morphism of an abelian instance is exact.
        Self::rand_map_into(rng, dst, max)
    }

    fn gen_diagram(rng: &mut ChaCha8Rng, max: usize) -> LambekDiagram<Self> {
        gen::generate_abgroup(rng, max.min(3))
    }

    fn fingerprint(obj: &Self::Object) -> String {
        abgroup::factors_display(&obj.invariant_factors().expect("unbounded scalar"))
    }
    fn oracle_kernel_cokernel(f: &Self::Map) -> Option<(String, String)> {
        match lambek_oracle::abgroup::elementwise_kernel_cokernel(f, lambek_oracle::abgroup::ENUM_BOUND)
        {
            Ok((k, c)) => Some((k.to_string(), c.to_string())),
            Err(_) => None,
        }
    }
    fn engine_kernel_cokernel(f: &Self::Map) -> Option<(String, String)> {
        let k = kernel::<AbExact>(f).arrow.src().order().expect("unbounded scalar")?;
        let c = cokernel::<AbExact>(f).arrow.dst().order().expect("unbounded scalar")?;
        Some((k.to_string(), c.to_string()))
    }
    fn oracle_lambek(d: &LambekDiagram<Self>) -> Result<OraclePair, OracleError> {
        let (im_s, ker_t) = lambek_oracle::abgroup::lambek_fingerprints(&diagram_input(d))?;
        Ok(OraclePair {
            im_s: abgroup::factors_display(&im_s),
            ker_t: abgroup::factors_display(&ker_t),
            anomalies: Vec::new(),
        })
    }
}

impl Harness for Grp {
    const TAG: ModelTag = ModelTag::Grp;

    fn rand_object(rng: &mut ChaCha8Rng, max: usize) -> Self::Object {
        grp::sample::random_group(rng, max.min(12))
    }
    fn rand_map(rng: &mut ChaCha8Rng, max: usize) -> Self::Map {
        grp::sample::random_hom(rng, max.min(12))
    }
    fn rand_map_from(rng: &mut ChaCha8Rng, src: &Self::Object, max: usize) -> Self::Map {
        let dst = grp::sample::random_group(rng, max.min(12));
        grp::sample::random_hom_between(rng, src, &dst)
    }
    fn rand_map_into(rng: &mut ChaCha8Rng, dst: &Self::Object, max: usize) -> Self::Map {
        let src = grp::sample::random_group(rng, max.min(12));
        grp::sample::random_hom_between(rng, &src, dst)
    }
    fn rand_kernel_from(rng: &mut ChaCha8Rng, src: &Self::Object, max: usize) -> Self::Map {
        grp::sample::random_kernel_from(rng, src, max.min(12).max(src.order()))
    }
    fn rand_exact_into(rng: &mut ChaCha8Rng, dst: &Self::Object, max: usize) -> Self::Map {
        let src = grp::sample::random_group(rng, max.min(12));
        let exact: Vec<lambek_models::GrpHom> = grp::enumerate_homs(&src, dst)
            .into_iter()
            .filter(|h| h.dst().is_normal(&h.image()))
            .collect();
        exact[rng.random_range(0..exact.len())].clone()
    }

    fn gen_diagram(rng: &mut ChaCha8Rng, max: usize) -> LambekDiagram<Self> {
        gen::generate_grp(rng, max.min(12))
    }

    fn fingerprint(obj: &Self::Object) -> String {
        obj.fingerprint().to_string()
    }
    fn oracle_kernel_cokernel(f: &Self::Map) -> Option<(String, String)> {
        let (k, c) = lambek_oracle::grp::elementwise_kernel_cokernel(f);
        Some((k.to_string(), c.to_string()))
    }
    fn engine_kernel_cokernel(f: &Self::Map) -> Option<(String, String)> {
        let k = kernel::<Grp>(f).arrow.src().fingerprint();
        let c = cokernel::<Grp>(f).arrow.dst().fingerprint();
        Some((k.to_string(), c.to_string()))
    }
    fn oracle_lambek(d: &LambekDiagram<Self>) -> Result<OraclePair, OracleError> {
        let report = lambek_oracle::grp::lambek_fingerprints(&diagram_input(d))?;
        let mut anomalies = Vec::new();
        if !report.im_bf_normal {
            anomalies.push("Im(bf) not normal in the image intersection".to_string());
        }
        if !report.kernel_product_normal {
            anomalies.push("kernel product not normal in Ker(cg)".to_string());
        }
        Ok(OraclePair {
            im_s: report.im_s.to_string(),
            ker_t: report.ker_t.to_string(),
            anomalies,
        })
    }
}

fn rng_for(seed: u64, salt: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed ^ salt.wrapping_mul(0x9E37_79B9_7F4A_7C15))
}

/// A kernel arrow with a random target: the kernel of a random departure.
fn rand_kernel_into<M: Harness>(
    rng: &mut ChaCha8Rng,
    dst: &M::Object,
    max: usize,
) -> KernelArrow<M> {
    kernel::<M>(&M::rand_map_from(rng, dst, max))
}

/// A cokernel arrow with a random source: the cokernel of a random arrival.
fn rand_cokernel_from<M: Harness>(
    rng: &mut ChaCha8Rng,
    src: &M::Object,
    max: usize,
) -> CokernelArrow<M> {
    cokernel::<M>(&M::rand_map_into(rng, src, max))
}

/// N-mono characterization: when `f` is N-mono, `ker(f∘h) = ker h`.
pub fn suite_nmono_characterization<M: Harness>(seed: u64, trials: usize, max: usize) -> SuiteOutcome {
    let mut out = SuiteOutcome::new("nmono_characterization");
    let mut rng = rng_for(seed, 1);
    out.premise_hits = Some(0);
    for _ in 0..trials {
        out.trials += 1;
        let f = M::rand_map(&mut rng, max);
        let c = classify::<M>(&f);
        out.check(
            c.is_n_mono == M::is_null(&kernel::<M>(&f).arrow),
            "n_mono flag must match kernel nullity",
        );
        if c.is_n_mono {
            out.hit();
            let h = M::rand_map_into(&mut rng, M::src(&f), max);
            let lhs = kernel::<M>(&comp::<M>(&f, &h));
            let rhs = kernel::<M>(&h);
            out.check(
                subobject_equal::<M>(&lhs, &rhs),
                "ker(f∘h) must equal ker h for N-mono f",
            );
        }
    }
    out
}

/// `coker(g ∘ im f) = coker(gf)` and `ker(coim g ∘ f) = ker(gf)`.
pub fn suite_kop_weg<M: Harness>(seed: u64, trials: usize, max: usize) -> SuiteOutcome {
    let mut out = SuiteOutcome::new("coker_of_image_composite");
    let mut rng = rng_for(seed, 2);
    for _ in 0..trials {
        out.trials += 1;
        let f = M::rand_map(&mut rng, max);
        let g = M::rand_map_from(&mut rng, M::dst(&f), max);
        let gf = comp::<M>(&g, &f);

        let im_f = kernel::<M>(&cokernel::<M>(&f).arrow);
        let lhs = cokernel::<M>(&comp::<M>(&g, &im_f.arrow));
        out.check(
            quotient_equal::<M>(&lhs, &cokernel::<M>(&gf)),
            "coker(g∘im f) must equal coker(gf)",
        );

        let coim_g = cokernel::<M>(&kernel::<M>(&g).arrow);
        let lhs = kernel::<M>(&comp::<M>(&coim_g.arrow, &f));
        out.check(
            subobject_equal::<M>(&lhs, &kernel::<M>(&gf)),
            "ker(coim g∘f) must equal ker(gf)",
        );
    }
    out
}

/// In ex2 models: `im(gf) = g∘(im f)` for `g` a kernel.
pub fn suite_image_of_composite<M: Harness>(seed: u64, trials: usize, max: usize) -> SuiteOutcome {
    let mut out = SuiteOutcome::new("image_of_composite_with_kernel");
    let mut rng = rng_for(seed, 3);
    for _ in 0..trials {
        out.trials += 1;
        let f = M::rand_map(&mut rng, max);
        let g = M::rand_kernel_from(&mut rng, M::dst(&f), max);
        let im_f = kernel::<M>(&cokernel::<M>(&f).arrow);
        let g_im_f = comp::<M>(&g, &im_f.arrow);
        match KernelArrow::<M>::from_mono(g_im_f) {
            Err(_) => out.check(false, "g∘(im f) must stay a kernel in an ex2 model"),
            Ok(k) => {
                let im_gf = kernel::<M>(&cokernel::<M>(&comp::<M>(&g, &f)).arrow);
                out.check(
                    subobject_equal::<M>(&im_gf, &k),
                    "im(gf) must equal g∘(im f)",
                );
            }
        }
    }
    out
}

/// Exact-morphism properties: kernels are exact N-monos, cokernels exact
/// N-epis, and kernel∘cokernel composites are exact with the expected image.
pub fn suite_exact_morphisms<M: Harness>(seed: u64, trials: usize, max: usize) -> SuiteOutcome {
    let mut out = SuiteOutcome::new("exact_morphism_properties");
    let mut rng = rng_for(seed, 4);
    for _ in 0..trials {
        out.trials += 1;
        let alpha = M::rand_map(&mut rng, max);
        let kc = classify::<M>(&kernel::<M>(&alpha).arrow);
        out.check(kc.is_kernel, "ker α must classify as an exact N-mono");
        let cc = classify::<M>(&cokernel::<M>(&alpha).arrow);
        out.check(cc.is_cokernel, "coker α must classify as an exact N-epi");

        // f = h∘g with h a kernel and g a cokernel.
        let w = M::rand_object(&mut rng, max);
        let g = rand_cokernel_from::<M>(&mut rng, &w, max);
        let h = M::rand_kernel_from(&mut rng, M::dst(&g.arrow), max);
        let f = comp::<M>(&h, &g.arrow);
        let fc = classify::<M>(&f);
        out.check(fc.is_exact, "kernel∘cokernel composites must be exact");
        match KernelArrow::<M>::from_mono(h) {
            Err(_) => out.check(false, "the sampler must produce kernel arrows"),
            Ok(hk) => {
                let im_f = kernel::<M>(&cokernel::<M>(&f).arrow);
                out.check(
                    subobject_equal::<M>(&im_f, &hk),
                    "im f must equal the kernel factor",
                );
            }
        }
    }
    out
}

/// Ex2 models: the middle morphism of a normal decomposition is both
/// N-mono and N-epi.
pub fn suite_middle_morphism<M: Harness>(seed: u64, trials: usize, max: usize) -> SuiteOutcome {
    let mut out = SuiteOutcome::new("middle_morphism");
    let mut rng = rng_for(seed, 5);
    for _ in 0..trials {
        out.trials += 1;
        let f = M::rand_map(&mut rng, max);
        let dec = normal_decomposition::<M>(&f);
        let c = classify::<M>(&dec.middle);
        out.check(c.is_n_mono, "middle morphism must be N-mono");
        out.check(c.is_n_epi, "middle morphism must be N-epi");
        let recomposed = comp::<M>(&dec.im.arrow, &comp::<M>(&dec.middle, &dec.coim.arrow));
        out.check(
            M::map_eq(&recomposed, &f),
            "normal decomposition must recompose to f",
        );
    }
    out
}

/// Ex2 models: kernels and cokernels are closed under composition.
pub fn suite_kernels_compose<M: Harness>(seed: u64, trials: usize, max: usize) -> SuiteOutcome {
    let mut out = SuiteOutcome::new("kernels_compose");
    let mut rng = rng_for(seed, 6);
    for _ in 0..trials {
        out.trials += 1;
        let x = M::rand_object(&mut rng, max);
        let k1 = M::rand_kernel_from(&mut rng, &x, max);
        let k2 = M::rand_kernel_from(&mut rng, M::dst(&k1), max);
        out.check(
            classify::<M>(&comp::<M>(&k2, &k1)).is_kernel,
            "composite of kernels must be a kernel",
        );

        let w = M::rand_object(&mut rng, max);
        let c1 = rand_cokernel_from::<M>(&mut rng, &w, max);
        let c2 = rand_cokernel_from::<M>(&mut rng, M::dst(&c1.arrow), max);
        out.check(
            classify::<M>(&comp::<M>(&c2.arrow, &c1.arrow)).is_cokernel,
            "composite of cokernels must be a cokernel",
        );
    }
    out
}

/// Ex2 models: if `α∘β` is a kernel then `β` is.
///
/// Only the kernel direction: the dual clause needs N-monomorphisms to be
/// actual monomorphisms, which fails for fold maps in pointed sets (an
/// isomorphism can factor as a non-cokernel after an injection).
pub fn suite_kernel_cancellation<M: Harness>(seed: u64, trials: usize, max: usize) -> SuiteOutcome {
    let mut out = SuiteOutcome::new("kernel_cancellation");
    let mut rng = rng_for(seed, 7);
    out.premise_hits = Some(0);
    for _ in 0..trials {
        out.trials += 1;
        let beta = M::rand_map(&mut rng, max);
        let alpha = M::rand_map_from(&mut rng, M::dst(&beta), max);
        let ab = comp::<M>(&alpha, &beta);
        if classify::<M>(&ab).is_kernel {
            out.hit();
            out.check(
                classify::<M>(&beta).is_kernel,
                "β must be a kernel when α∘β is",
            );
        }
    }
    out
}

/// Homological models: pulling a kernel back along an exact morphism gives
/// an exact opposite leg, and the induced cokernel morphism is N-mono.
pub fn suite_pullback_of_exact<M: Harness>(seed: u64, trials: usize, max: usize) -> SuiteOutcome {
    let mut out = SuiteOutcome::new("pullback_of_exact");
    let mut rng = rng_for(seed, 8);
    for _ in 0..trials {
        out.trials += 1;
        let d_obj = M::rand_object(&mut rng, max);
        let beta = rand_kernel_into::<M>(&mut rng, &d_obj, max);
        let f = M::rand_exact_into(&mut rng, &d_obj, max);
        out.check(classify::<M>(&f).is_exact, "sampler must produce exact maps");

        let (k, f_leg) = pullback_of_kernel::<M>(&beta, &f);
        out.check(
            classify::<M>(&f_leg).is_exact,
            "the leg opposite an exact map must be exact",
        );

        let square = Square::<M>::new(f_leg, k.arrow.clone(), beta.arrow.clone(), f.clone())
            .expect("pullback square commutes");
        let (_, f_hat) = induced_boundary_morphisms::<M>(&square);
        out.check(
            classify::<M>(&f_hat).is_n_mono,
            "the induced cokernel morphism must be N-mono",
        );
    }
    out
}

/// Homological models: Axiom 4 instances succeed, the composite is exact,
/// and the triple recomposes; plus the 4* pullback shape.
pub fn suite_homology<M: Harness>(seed: u64, trials: usize, max: usize) -> SuiteOutcome {
    let mut out = SuiteOutcome::new("homology_object");
    let mut rng = rng_for(seed, 9);
    for _ in 0..trials {
        out.trials += 1;
        let b_obj = M::rand_object(&mut rng, max);
        let i = rand_kernel_into::<M>(&mut rng, &b_obj, max);
        // q kills part of the subobject, so the precondition holds by
        // construction.
        let v = M::rand_map_into(&mut rng, M::src(&i.arrow), max);
        let q = cokernel::<M>(&comp::<M>(&i.arrow, &v));

        match homology_object::<M>(&i, &q) {
            Err(e) => out.check(false, &format!("homology must exist here: {e}")),
            Ok(h) => {
                let qi = comp::<M>(&q.arrow, &i.arrow);
                out.check(classify::<M>(&qi).is_exact, "q∘i must be exact");
                let recomposed = comp::<M>(&h.iota.arrow, &h.pi.arrow);
                out.check(M::map_eq(&recomposed, &qi), "ι∘π must equal q∘i");
                out.check(
                    classify::<M>(&h.pi.arrow).is_cokernel,
                    "π must be a cokernel",
                );
                out.check(classify::<M>(&h.iota.arrow).is_kernel, "ι must be a kernel");
            }
        }

        // Consistency of the precondition on an unconstrained pair: the
        // triple exists exactly when the null test passes.
        let i2 = rand_kernel_into::<M>(&mut rng, &b_obj, max);
        let q2 = rand_cokernel_from::<M>(&mut rng, &b_obj, max);
        let null_test = M::is_null(&comp::<M>(
            &M::cokernel(&i2.arrow),
            &M::kernel(&q2.arrow),
        ));
        out.check(
            homology_object::<M>(&i2, &q2).is_ok() == null_test,
            "homology existence must match the null test",
        );
    }
    out
}

/// Semiexact axioms: kernels and cokernels satisfy their universal
/// properties on constructed factorization instances.
pub fn suite_universal_properties<M: Harness>(seed: u64, trials: usize, max: usize) -> SuiteOutcome {
    let mut out = SuiteOutcome::new("universal_properties");
    let mut rng = rng_for(seed, 10);
    for _ in 0..trials {
        out.trials += 1;
        let f = M::rand_map(&mut rng, max);

        let k = kernel::<M>(&f);
        out.check(
            M::is_null(&comp::<M>(&f, &k.arrow)),
            "f ∘ ker f must be null",
        );
        out.check(
            classify::<M>(&k.arrow).is_n_mono,
            "kernel arrows must be N-mono",
        );
        let x = comp::<M>(&k.arrow, &M::rand_map_into(&mut rng, M::src(&k.arrow), max));
        match factor_through::<M>(&k, &x) {
            Err(e) => out.check(false, &format!("kernel factorization must exist: {e}")),
            Ok(u) => out.check(
                M::map_eq(&comp::<M>(&k.arrow, &u), &x),
                "kernel factorization must reproduce x",
            ),
        }

        let c = cokernel::<M>(&f);
        out.check(
            M::is_null(&comp::<M>(&c.arrow, &f)),
            "coker f ∘ f must be null",
        );
        out.check(
            classify::<M>(&c.arrow).is_n_epi,
            "cokernel arrows must be N-epi",
        );
        let y = comp::<M>(&M::rand_map_from(&mut rng, M::dst(&c.arrow), max), &c.arrow);
        match cofactor_through::<M>(&c, &y) {
            Err(e) => out.check(false, &format!("cokernel factorization must exist: {e}")),
            Ok(u) => out.check(
                M::map_eq(&comp::<M>(&u, &c.arrow), &y),
                "cokernel factorization must reproduce y",
            ),
        }
    }
    out
}

/// The six-term composition sequence.
///
/// The unconditional clauses hold in every model. The conditional clauses
/// ("f exact ⟹ exact at Ker g", "g exact ⟹ exact at Coker f") are part of
/// a lemma about homological categories, and genuinely fail in grp — the
/// proof leans on the induced-morphism lemma, which needs the pullback
/// axiom grp lacks. In grp they are tallied, not asserted.
pub fn suite_composition_lemma<M: Harness>(seed: u64, trials: usize, max: usize) -> SuiteOutcome {
    let mut out = SuiteOutcome::new("composition_lemma");
    let mut rng = rng_for(seed, 11);
    let mut conditional_held = 0usize;
    let mut conditional_failed = 0usize;
    for _ in 0..trials {
        out.trials += 1;
        let f = M::rand_map(&mut rng, max);
        let g = M::rand_map_from(&mut rng, M::dst(&f), max);
        let s = composition_sequence::<M>(&f, &g).expect("composable by construction");

        out.check(s.order_two.iter().all(|&b| b), "sequence must have order two");
        out.check(s.exact_at[0], "exact at Ker f");
        out.check(s.exact_at[1], "exact at Ker(gf)");
        out.check(s.exact_at[4], "exact at Coker(gf)");
        out.check(s.exact_at[5], "exact at Coker g");
        out.check(s.phi_exact, "φ must be exact");
        out.check(s.omega_exact, "ω must be exact");

        let mut conditional = |holds: bool, label: &str| {
            if M::IS_HOMOLOGICAL {
                out.check(holds, label);
            } else if holds {
                conditional_held += 1;
            } else {
                conditional_failed += 1;
            }
        };
        if classify::<M>(&f).is_exact {
            conditional(s.exact_at[2], "exact at Ker g when f is exact");
            conditional(s.psi_exact, "ψ must be exact when f is exact");
        }
        if classify::<M>(&g).is_exact {
            conditional(s.exact_at[3], "exact at Coker f when g is exact");
            conditional(s.epsilon_exact, "ε must be exact when g is exact");
        }
    }
    if !M::IS_HOMOLOGICAL {
        out.note(format!(
            "conditional clauses observed outside their hypotheses: \
             {conditional_held} held, {conditional_failed} failed",
        ));
    }
    out
}

/// Oracle agreement on kernels and cokernels of random morphisms.
pub fn suite_oracle_agreement<M: Harness>(seed: u64, trials: usize, max: usize) -> SuiteOutcome {
    let mut out = SuiteOutcome::new("oracle_kernel_cokernel");
    let mut rng = rng_for(seed, 12);
    out.premise_hits = Some(0);
    for _ in 0..trials {
        out.trials += 1;
        let f = M::rand_map(&mut rng, max);
        if let Some((ok, oc)) = M::oracle_kernel_cokernel(&f) {
            out.hit();
            match M::engine_kernel_cokernel(&f) {
                None => out.check(false, "engine must fingerprint what the oracle can"),
                Some((ek, ec)) => {
                    out.check(ok == ek, &format!("kernel fingerprints differ: {ok} vs {ek}"));
                    out.check(oc == ec, &format!("cokernel fingerprints differ: {oc} vs {ec}"));
                }
            }
        }
    }
    out
}

/// Generated diagrams: hypotheses hold by construction, Λ exists and is
/// unique, the isomorphism conclusion holds in homological models, and the
/// oracle agrees with the engine's invariants.
pub fn suite_lambek_theorem<M: Harness>(seed: u64, trials: usize, max: usize) -> SuiteOutcome {
    let mut out = SuiteOutcome::new("lambek_theorem");
    let mut rng = rng_for(seed, 13);
    let mut iso_count = 0usize;
    let mut non_iso_count = 0usize;
    for _ in 0..trials {
        out.trials += 1;
        let d = M::gen_diagram(&mut rng, max);
        let report = lambek_check::<M>(&d);
        out.check(report.rows_null, "generated rows must have null composites");
        out.check(
            report.row1_exact && report.row2_exact,
            "generated rows must be exact",
        );
        out.check(report.b_exact, "generated b must be exact");
        out.check(report.lambda_exists, "Λ must exist under the hypotheses");
        out.check(
            report.lambda_unique == Some(true),
            "Λ must satisfy the defining equation uniquely",
        );
        if M::IS_HOMOLOGICAL {
            out.check(
                report.lambda_iso == Some(true),
                "Λ must be an isomorphism in a homological model",
            );
        } else {
            match report.lambda_iso {
                Some(true) => iso_count += 1,
                _ => non_iso_count += 1,
            }
        }

        let result = report.result.as_ref().expect("Λ exists");
        let engine_im_s = M::fingerprint(result.im_s_object());
        let engine_ker_t = M::fingerprint(result.ker_t_object());
        if M::IS_HOMOLOGICAL {
            out.check(
                engine_im_s == engine_ker_t,
                "isomorphic invariants must share a fingerprint",
            );
        }
        match M::oracle_lambek(&d) {
            Err(e) => out.check(false, &format!("oracle must handle generated diagrams: {e}")),
            Ok(pair) => {
                out.check(
                    pair.im_s == engine_im_s,
                    &format!("oracle Im S {} vs engine {}", pair.im_s, engine_im_s),
                );
                out.check(
                    pair.ker_t == engine_ker_t,
                    &format!("oracle Ker T {} vs engine {}", pair.ker_t, engine_ker_t),
                );
                // With exact rows the group-theoretic theorem applies in
                // every model, including grp.
                out.check(
                    pair.im_s == pair.ker_t,
                    "oracle fingerprints of Im S and Ker T must coincide on exact rows",
                );
                for a in pair.anomalies {
                    out.note(format!("oracle anomaly: {a}"));
                }
            }
        }
    }
    if !M::IS_HOMOLOGICAL {
        out.note(format!(
            "grp Λ iso observed: {iso_count} iso, {non_iso_count} not asserted either way",
        ));
    }
    out
}

/// Pointed sets only: exactness coincides with injectivity off the kernel.
pub fn suite_ptset_exactness(seed: u64, trials: usize, max: usize) -> SuiteOutcome {
    let mut out = SuiteOutcome::new("ptset_exactness_criterion");
    let mut rng = rng_for(seed, 14);
    for _ in 0..trials {
        out.trials += 1;
        let f = ptset::sample::random_map(&mut rng, max);
        out.check(
            classify::<Pt>(&f).is_exact == f.injective_off_kernel(),
            "exactness must match the elementwise criterion",
        );
    }
    out
}

/// The executable witness that grp is not ex2: the composite of the two
/// kernel inclusions `<t> ⊴ V4 ⊴ A4` is not a kernel.
pub fn grp_ex2_witness() -> (
    MorphismClassification,
    MorphismClassification,
    MorphismClassification,
) {
    let a4 = builtin_group("A4").expect("catalog");
    let v4_els: Vec<usize> = (0..12)
        .filter(|&x| x == 0 || a4.element_order(x) == 2)
        .collect();
    let (v4, incl_v4) = a4.subgroup(&v4_els).expect("V4 is a subgroup of A4");
    let t_els = v4.subgroup_generated(&[1]);
    let (_, incl_t) = v4.subgroup(&t_els).expect("<t> is a subgroup of V4");
    let composite = incl_v4.compose(&incl_t);
    (
        classify::<Grp>(&incl_t),
        classify::<Grp>(&incl_v4),
        classify::<Grp>(&composite),
    )
}

/// Axiom 4* shape check: the pullback of a cokernel-kernel cospan has
/// kernel and cokernel legs.
pub fn suite_axiom4_star<M: Harness>(seed: u64, trials: usize, max: usize) -> SuiteOutcome {
    let mut out = SuiteOutcome::new("axiom4_star_shape");
    let mut rng = rng_for(seed, 15);
    for _ in 0..trials {
        out.trials += 1;
        // Cospan X ↠ Z ↢ Y sharing Z: a cokernel out of X with target Z,
        // and a kernel into Z.
        let x_obj = M::rand_object(&mut rng, max);
        let q = rand_cokernel_from::<M>(&mut rng, &x_obj, max);
        let z_obj = M::dst(&q.arrow).clone();
        let beta = rand_kernel_into::<M>(&mut rng, &z_obj, max);

        let (k, leg) = pullback_of_kernel::<M>(&beta, &q.arrow);
        out.check(
            classify::<M>(&k.arrow).is_kernel,
            "the leg opposite the kernel must be a kernel",
        );
        out.check(
            classify::<M>(&leg).is_cokernel,
            "the leg opposite the cokernel must be a cokernel",
        );
    }
    out
}

/// Every suite applicable to the model, in report order.
pub fn run_model_suites<M: Harness>(seed: u64, trials: usize, max: usize) -> Vec<SuiteOutcome> {
    let mut out = vec![
        suite_universal_properties::<M>(seed, trials, max),
        suite_nmono_characterization::<M>(seed, trials, max),
        suite_kop_weg::<M>(seed, trials, max),
        suite_exact_morphisms::<M>(seed, trials, max),
        suite_composition_lemma::<M>(seed, trials, max),
        suite_oracle_agreement::<M>(seed, trials, max),
    ];
    if M::IS_HOMOLOGICAL {
        out.push(suite_image_of_composite::<M>(seed, trials, max));
        out.push(suite_middle_morphism::<M>(seed, trials, max));
        out.push(suite_kernels_compose::<M>(seed, trials, max));
        out.push(suite_kernel_cancellation::<M>(seed, trials, max));
        out.push(suite_pullback_of_exact::<M>(seed, trials, max));
        out.push(suite_homology::<M>(seed, trials, max));
        out.push(suite_axiom4_star::<M>(seed, trials, max));
    }
    out.push(suite_lambek_theorem::<M>(seed, trials, max));
    out
}
