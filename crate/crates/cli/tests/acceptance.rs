//! The acceptance suite: one test per criterion, at the stated scale.
//! Each test prints a single PASS line once its assertions hold.

use lambek_category::{classify, lambek_check, lambek_morphism};
use lambek_cli::doc::DiagramDoc;
use lambek_cli::laws::{self, Harness};
use lambek_cli::{generate_diagram, run_check, run_lambek, Format, GenConfig, ModelTag, RunConfig};
use lambek_models::{abgroup, AbExact, Grp, Pt};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::time::Instant;

fn machine_cfg() -> RunConfig {
    RunConfig {
        seed: 0,
        trials: 10,
        max_size: 8,
        format: Format::Machine,
    }
}

fn corpus_dir() -> std::path::PathBuf {
    std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("../../diagrams")
}

/// Criterion 1: 1000 seeded ptset diagrams, sizes ≤ 8 — Λ exists, unique,
/// iso, and both invariant cardinalities match the elementwise oracle.
/// The whole batch has to finish within ten seconds.
#[test]
fn criterion_1_lambek_isomorphism_ptset() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut nontrivial = 0usize;
    for trial in 0..1000 {
        let d = Pt::gen_diagram(&mut rng, 8);
        let report = lambek_check::<Pt>(&d);
        assert!(report.iso_predicted, "trial {trial}: hypotheses must hold");
        assert_eq!(report.lambda_iso, Some(true), "trial {trial}: Λ must be iso");
        assert_eq!(report.lambda_unique, Some(true), "trial {trial}");
        let result = report.result.expect("Λ exists");
        let im_s = result.im_s_object().size;
        let ker_t = result.ker_t_object().size;
        assert_eq!(im_s, ker_t, "trial {trial}: |Im S| must equal |Ker T|");
        let pair = <Pt as Harness>::oracle_lambek(&d).expect("ptset oracle is total");
        assert_eq!(pair.im_s, im_s.to_string(), "trial {trial}: oracle |Im S|");
        assert_eq!(pair.ker_t, ker_t.to_string(), "trial {trial}: oracle |Ker T|");
        if im_s > 1 {
            nontrivial += 1;
        }
    }
    let elapsed = start.elapsed();
    assert!(
        elapsed.as_secs_f64() < 10.0,
        "1000 ptset diagrams took {elapsed:?}, budget is 10 s"
    );
    println!(
        "criterion 1 PASS: 1000/1000 ptset diagrams, Λ iso everywhere, \
         oracle agreement, {nontrivial} nontrivial, {elapsed:?}"
    );
}

/// Criterion 2: 300 seeded abgroup diagrams, rank ≤ 3, entries ≤ |3| —
/// invariant factors of Im S equal those of Ker T and match the lattice
/// oracle; finite instances of order ≤ 10^4 are re-counted by enumeration.
#[test]
fn criterion_2_lambek_isomorphism_abgroup() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut nontrivial = 0usize;
    let mut enumerated = 0usize;
    for trial in 0..300 {
        let d = AbExact::gen_diagram(&mut rng, 3);
        let report = lambek_check::<AbExact>(&d);
        assert!(report.iso_predicted, "trial {trial}: hypotheses must hold");
        assert_eq!(report.lambda_iso, Some(true), "trial {trial}: Λ must be iso");
        let result = report.result.expect("Λ exists");

        let im_s = result.im_s_object();
        let ker_t = result.ker_t_object();
        let fact_im = im_s.invariant_factors().unwrap();
        let fact_ker = ker_t.invariant_factors().unwrap();
        assert_eq!(fact_im, fact_ker, "trial {trial}: invariant factors");

        let pair =
            <AbExact as Harness>::oracle_lambek(&d).expect("lattice oracle is total here");
        assert_eq!(pair.im_s, abgroup::factors_display(&fact_im), "trial {trial}");
        assert_eq!(pair.ker_t, abgroup::factors_display(&fact_ker), "trial {trial}");

        // Enumeration cross-check on finite invariants of order ≤ 10^4.
        if let Ok(order) = lambek_oracle::abenum::Enumerator::new(im_s)
            .and_then(|e| e.bounded_order(10_000))
        {
            let expected: u64 = fact_im
                .iter()
                .map(|d| lambek_models::int::Int::to_i64(d).unwrap() as u64)
                .product();
            assert_eq!(order, expected, "trial {trial}: enumerated order");
            enumerated += 1;
        }
        if !fact_im.is_empty() {
            nontrivial += 1;
        }
    }
    println!(
        "criterion 2 PASS: 300/300 abgroup diagrams, factors(Im S) = factors(Ker T) = \
         lattice oracle, {enumerated} enumerated, {nontrivial} nontrivial"
    );
}

/// Criterion 3: the golden ×2/mod-2 diagram gives Z/2 on both sides with
/// fingerprint `2`, and Λ is an isomorphism.
#[test]
fn criterion_3_golden_example() {
    let text = std::fs::read_to_string(corpus_dir().join("abgroup_times2.diag")).unwrap();
    let (code, out) = run_lambek(&text, &machine_cfg());
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("imS.fingerprint=2"), "{out}");
    assert!(out.contains("kerT.fingerprint=2"), "{out}");
    assert!(out.contains("oracle.imS=2"), "{out}");
    assert!(out.contains("oracle.kerT=2"), "{out}");
    assert!(out.contains("oracle.agrees=true"), "{out}");
    assert!(out.contains("lambek.iso=true"), "{out}");
    println!("criterion 3 PASS: golden diagram yields Z/2 ≅ Z/2 with Λ iso");
}

/// Criterion 4: the composition-lemma suite on 1000 random composable
/// pairs per model.
#[test]
fn criterion_4_composition_lemma() {
    let pt = laws::suite_composition_lemma::<Pt>(4, 1000, 8);
    assert_eq!(pt.failures, 0, "{:?}", pt.notes);
    let ab = laws::suite_composition_lemma::<AbExact>(4, 1000, 3);
    assert_eq!(ab.failures, 0, "{:?}", ab.notes);
    let gr = laws::suite_composition_lemma::<Grp>(4, 1000, 12);
    assert_eq!(gr.failures, 0, "{:?}", gr.notes);
    println!(
        "criterion 4 PASS: composition lemma on 1000 pairs per model \
         (ptset, abgroup, grp), zero failures"
    );
}

/// Criterion 5: the lemma suites at ≥ 500 random cases each, in every
/// applicable model, zero failures.
#[test]
fn criterion_5_lemma_suites() {
    fn run_all<M: Harness>(max: usize) -> Vec<laws::SuiteOutcome> {
        laws::run_model_suites::<M>(5, 500, max)
    }
    let mut total = 0usize;
    for outcome in run_all::<Pt>(8)
        .into_iter()
        .chain(run_all::<AbExact>(3))
        .chain(run_all::<Grp>(12))
        .chain(std::iter::once(laws::suite_ptset_exactness(5, 1000, 8)))
    {
        assert_eq!(
            outcome.failures, 0,
            "suite {} failed: {:?}",
            outcome.name, outcome.notes
        );
        assert!(outcome.trials >= 500, "suite {} undersampled", outcome.name);
        total += 1;
    }
    println!("criterion 5 PASS: {total} lemma suites at ≥ 500 cases each, zero failures");
}

/// Criterion 6: the inclusion chain C2 ⊴ V4 ⊴ A4 — both factors classify
/// as kernels, the composite does not.
#[test]
fn criterion_6_grp_witness() {
    let (t, v4, composite) = laws::grp_ex2_witness();
    assert!(t.is_kernel, "C2 into V4 must be a kernel");
    assert!(v4.is_kernel, "V4 into A4 must be a kernel");
    assert!(!composite.is_kernel, "the composite must not be a kernel");
    assert!(composite.is_n_mono, "the composite is still N-mono");
    assert!(!composite.is_exact, "the closure gap shows as non-exactness");
    println!(
        "criterion 6 PASS: C2⊴V4 and V4⊴A4 are kernels, the composite \
         C2→A4 is not (is_kernel=false)"
    );
}

/// Criterion 7: 200 generated exact-row grp diagrams — the two oracle
/// fingerprints coincide; the categorical Λ iso status is tallied, not
/// asserted.
#[test]
fn criterion_7_introduction_theorem_in_grp() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut iso = 0usize;
    let mut not_iso = 0usize;
    for trial in 0..200 {
        let d = Grp::gen_diagram(&mut rng, 12);
        let pair = <Grp as Harness>::oracle_lambek(&d).expect("grp oracle is total");
        assert_eq!(
            pair.im_s, pair.ker_t,
            "trial {trial}: the Introduction theorem fingerprints must coincide"
        );
        match lambek_morphism::<Grp>(&d) {
            Ok(res) => {
                if classify::<Grp>(res.lambek.as_ref().unwrap()).is_iso {
                    iso += 1;
                } else {
                    not_iso += 1;
                }
            }
            Err(e) => panic!("trial {trial}: Λ must exist on generated diagrams: {e}"),
        }
    }
    println!(
        "criterion 7 PASS: 200/200 grp diagrams with coinciding oracle \
         fingerprints; categorical Λ iso observed {iso}, non-iso {not_iso} (reported, not asserted)"
    );
}

/// Criterion 8: oracle/engine agreement on kernels, cokernels, Im S and
/// Ker T across every finite instance the other criteria exercise.
#[test]
fn criterion_8_oracle_engine_agreement() {
    let pt = laws::suite_oracle_agreement::<Pt>(8, 500, 8);
    assert_eq!(pt.failures, 0, "{:?}", pt.notes);
    let ab = laws::suite_oracle_agreement::<AbExact>(8, 500, 3);
    assert_eq!(ab.failures, 0, "{:?}", ab.notes);
    assert!(ab.premise_hits.unwrap_or(0) > 50, "too few finite instances");
    let gr = laws::suite_oracle_agreement::<Grp>(8, 500, 12);
    assert_eq!(gr.failures, 0, "{:?}", gr.notes);

    // Im S / Ker T agreement rides inside the lambek suites.
    let pt = laws::suite_lambek_theorem::<Pt>(8, 300, 8);
    assert_eq!(pt.failures, 0, "{:?}", pt.notes);
    let ab = laws::suite_lambek_theorem::<AbExact>(8, 150, 3);
    assert_eq!(ab.failures, 0, "{:?}", ab.notes);
    let gr = laws::suite_lambek_theorem::<Grp>(8, 100, 12);
    assert_eq!(gr.failures, 0, "{:?}", gr.notes);
    println!(
        "criterion 8 PASS: zero oracle/engine disagreements on kernels, \
         cokernels, Im S and Ker T"
    );
}

/// Criterion 9: fixed seeds reproduce byte-identical machine reports, and
/// parse∘serialize∘parse is the identity on the shipped corpus, which
/// covers all three models and contains a failing-hypothesis case.
#[test]
fn criterion_9_cli_determinism_and_round_trip() {
    let mut files: Vec<_> = std::fs::read_dir(corpus_dir())
        .expect("diagrams directory")
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|e| e == "diag"))
        .collect();
    files.sort();
    assert!(files.len() >= 6, "corpus must have at least six files");

    let mut models_seen = std::collections::BTreeSet::new();
    let mut exit3_seen = false;
    for path in &files {
        let text = std::fs::read_to_string(path).unwrap();
        let doc = DiagramDoc::parse(&text).unwrap();
        models_seen.insert(doc.model.to_string());
        let again = DiagramDoc::parse(&doc.serialize()).unwrap();
        assert_eq!(doc, again, "round-trip failed for {path:?}");

        let (c1, o1) = run_check(&text, &machine_cfg());
        let (c2, o2) = run_check(&text, &machine_cfg());
        assert_eq!((c1, &o1), (c2, &o2), "reports must be reproducible");
        assert!(c1 == 0 || c1 == 3, "corpus outcome for {path:?}: {c1}\n{o1}");
        exit3_seen |= c1 == 3;
    }
    assert_eq!(models_seen.len(), 3, "corpus must cover all three models");
    assert!(exit3_seen, "corpus must include a failing-hypothesis case");

    // Seeded generation and the axioms runner are byte-stable too.
    for model in [ModelTag::Ptset, ModelTag::Abgroup, ModelTag::Grp] {
        let once = generate_diagram(&GenConfig {
            model,
            seed: 42,
            max_size: 8,
        })
        .serialize();
        let twice = generate_diagram(&GenConfig {
            model,
            seed: 42,
            max_size: 8,
        })
        .serialize();
        assert_eq!(once, twice);
    }
    let (ca, oa) = lambek_cli::run_axioms(Some(ModelTag::Ptset), &machine_cfg());
    let (cb, ob) = lambek_cli::run_axioms(Some(ModelTag::Ptset), &machine_cfg());
    assert_eq!((ca, &oa), (cb, &ob));
    assert_eq!(ca, 0);
    println!(
        "criterion 9 PASS: byte-identical reports on fixed seeds; \
         {} corpus files round-trip across {} models with an exit-3 case",
        files.len(),
        models_seen.len()
    );
}
