//! Parser, round-trip, determinism and exit-code behavior.

use lambek_cli::doc::{DiagramDoc, ParseError};
use lambek_cli::{
    generate_diagram, run_check, run_gen, run_lambek, Format, GenConfig, ModelTag, RunConfig,
};

fn cfg() -> RunConfig {
    RunConfig {
        seed: 0,
        trials: 10,
        max_size: 8,
        format: Format::Machine,
    }
}

const MINIMAL_PTSET: &str = "\
model ptset
object A size 1
object B size 2
object C size 2
object A2 size 2
object B2 size 2
object C2 size 1
morph f A B [0]
morph g B C [0 1]
morph f2 A2 B2 [0 1]
morph g2 B2 C2 [0 0]
morph a A A2 [0]
morph b B B2 [0 1]
morph c C C2 [0 0]
lambek f g f2 g2 a b c
";

#[test]
fn minimal_document_parses_with_all_parts() {
    let doc = DiagramDoc::parse(MINIMAL_PTSET).unwrap();
    assert_eq!(doc.objects.len(), 6);
    assert_eq!(doc.morphs.len(), 7);
    assert!(doc.build().is_ok());
}

#[test]
fn comments_and_blank_lines_are_ignored() {
    let text = format!("# heading\n\n{MINIMAL_PTSET}\n# trailing\n");
    let doc = DiagramDoc::parse(&text).unwrap();
    assert_eq!(doc, DiagramDoc::parse(MINIMAL_PTSET).unwrap());
}

#[test]
fn parse_serialize_parse_is_the_identity() {
    let doc = DiagramDoc::parse(MINIMAL_PTSET).unwrap();
    let again = DiagramDoc::parse(&doc.serialize()).unwrap();
    assert_eq!(doc, again);
}

#[test]
fn endpoint_typo_names_the_morphism() {
    // b declared B -> B instead of B -> B2.
    let text = MINIMAL_PTSET.replace("morph b B B2 [0 1]", "morph b B B [0 1]");
    let doc = DiagramDoc::parse(&text).unwrap();
    assert_eq!(
        doc.build().err(),
        Some(ParseError::EndpointMismatch {
            name: "b".to_string()
        })
    );
}

#[test]
fn non_commuting_square_names_the_square() {
    // Break S in the abgroup model, where both legs are visible: a = [3]
    // makes f'∘a = [6] while b∘f = [4].
    let ab = "\
model abgroup
object A gens 1 rels []
object B gens 1 rels []
object C gens 1 rels [2]
object A2 gens 1 rels []
object B2 gens 1 rels []
object C2 gens 1 rels [2]
morph f A B [2]
morph g B C [1]
morph f2 A2 B2 [2]
morph g2 B2 C2 [1]
morph a A A2 [3]
morph b B B2 [2]
morph c C C2 [0]
lambek f g f2 g2 a b c
";
    let doc = DiagramDoc::parse(ab).unwrap();
    assert_eq!(
        doc.build().err(),
        Some(ParseError::NonCommutingSquare { square: "S" })
    );
}

#[test]
fn unknown_names_are_reported_with_their_line() {
    let text = MINIMAL_PTSET.replace("morph f A B [0]", "morph f A Bx [0]");
    let doc = DiagramDoc::parse(&text).unwrap();
    assert!(matches!(
        doc.build().err(),
        Some(ParseError::UnknownName { name, .. }) if name == "Bx"
    ));
}

#[test]
fn syntax_errors_carry_line_numbers() {
    let err = DiagramDoc::parse("model ptset\nobject A size x\n").unwrap_err();
    assert!(matches!(err, ParseError::Syntax { line: 2, .. }));

    let err = DiagramDoc::parse("object A size 3\n").unwrap_err();
    assert!(matches!(err, ParseError::Syntax { line: 1, .. }));
}

#[test]
fn invalid_payloads_name_the_entity() {
    let text = MINIMAL_PTSET.replace("morph c C C2 [0 0]", "morph c C C2 [0 5]");
    let doc = DiagramDoc::parse(&text).unwrap();
    assert!(matches!(
        doc.build().err(),
        Some(ParseError::InvalidEntity { name, .. }) if name == "c"
    ));
}

#[test]
fn generation_is_deterministic_per_seed() {
    for model in [ModelTag::Ptset, ModelTag::Abgroup, ModelTag::Grp] {
        let gen = |seed| {
            generate_diagram(&GenConfig {
                model,
                seed,
                max_size: 8,
            })
            .serialize()
        };
        assert_eq!(gen(7), gen(7), "same seed must give byte-identical docs");
        assert_ne!(gen(7), gen(8), "different seeds should differ");
    }
}

#[test]
fn generated_documents_round_trip_and_pass() {
    for model in [ModelTag::Ptset, ModelTag::Abgroup, ModelTag::Grp] {
        for seed in 0..6 {
            let doc = generate_diagram(&GenConfig {
                model,
                seed,
                max_size: 8,
            });
            let text = doc.serialize();
            let reparsed = DiagramDoc::parse(&text).unwrap();
            assert_eq!(doc, reparsed, "serialize must round-trip");
            reparsed.build().expect("generated documents must build");

            let (code, out) = run_lambek(&text, &cfg());
            assert_eq!(code, 0, "generated diagram failed:\n{out}");
        }
    }
}

#[test]
fn machine_reports_are_deterministic() {
    let doc = generate_diagram(&GenConfig {
        model: ModelTag::Abgroup,
        seed: 3,
        max_size: 8,
    })
    .serialize();
    let (c1, o1) = run_lambek(&doc, &cfg());
    let (c2, o2) = run_lambek(&doc, &cfg());
    assert_eq!((c1, &o1), (c2, &o2));

    let (g1_code, g1) = run_gen(ModelTag::Grp, &cfg());
    let (g2_code, g2) = run_gen(ModelTag::Grp, &cfg());
    assert_eq!(g1_code, 0);
    assert_eq!((g1_code, &g1), (g2_code, &g2));
}

#[test]
fn exit_codes_follow_the_contract() {
    // Input error.
    let (code, _) = run_lambek("model ptset\n", &cfg());
    assert_eq!(code, 1);

    // Pass.
    let (code, out) = run_lambek(MINIMAL_PTSET, &cfg());
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("lambek.iso=true"));
    assert!(out.contains("imS.fingerprint=2"));
    assert!(out.contains("kerT.fingerprint=2"));
    assert!(out.contains("oracle.agrees=true"));
    assert!(out.contains("rows.exact=true"));

    // Hypotheses unmet: non-exact rows.
    let nonexact = "\
model abgroup
object A gens 1 rels []
object B gens 1 rels []
object C gens 1 rels [2]
object A2 gens 1 rels []
object B2 gens 1 rels []
object C2 gens 1 rels [2]
morph f A B [4]
morph g B C [1]
morph f2 A2 B2 [4]
morph g2 B2 C2 [1]
morph a A A2 [1]
morph b B B2 [1]
morph c C C2 [1]
lambek f g f2 g2 a b c
";
    let (code, out) = run_check(nonexact, &cfg());
    assert_eq!(code, 3, "{out}");
    assert!(out.contains("rows.exact=false"));
}
