//! Acceptance suite: one test per release criterion, each printing a
//! PASS line (run with `--nocapture` to see them).
//!
//! Library-level checks go through `fca_core` directly; end-to-end checks
//! run the `fca` binary. All randomness is seeded, all comparisons are
//! exact set or byte equality, and every frozen count is re-derived from
//! the brute-force oracles at test time so a stale golden file cannot
//! silently pass.

use std::collections::BTreeSet;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use fca_core::io::{parse_context, serialize_context, ContextDocument, ContextFormat};
use fca_core::{
    build_lattice, concept_leq, enumerate_concepts, implication_basis, join, lattice_to_dot,
    meet, syntactic_closure, AttributeSet, DotOptions, FormalConcept, FormalContext, ObjectSet,
};
use fca_testkit::{
    check_dot, lectic_less, oracle_close_attributes, oracle_concepts, oracle_covers,
    random_context, random_subset, seeded_rng, IdSet,
};
use rand::Rng;

const FORMATS: [ContextFormat; 3] = [
    ContextFormat::Xml,
    ContextFormat::Csv,
    ContextFormat::Burmeister,
];

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures/crime")
        .join(name)
}

fn read_fixture(name: &str) -> Vec<u8> {
    std::fs::read(fixture(name)).unwrap_or_else(|e| panic!("reading fixture {name}: {e}"))
}

fn fixture_context(name: &str, format: ContextFormat) -> FormalContext {
    parse_context(&read_fixture(name), format)
        .unwrap_or_else(|e| panic!("parsing fixture {name}: {e}"))
        .into_context()
}

fn fca(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fca"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn objects_by_name(ctx: &FormalContext, names: &[&str]) -> ObjectSet {
    ObjectSet::from_indices(
        ctx.object_count(),
        names.iter().map(|n| ctx.object_index(n).unwrap()),
    )
    .unwrap()
}

fn attributes_by_name(ctx: &FormalContext, names: &[&str]) -> AttributeSet {
    AttributeSet::from_indices(
        ctx.attribute_count(),
        names.iter().map(|n| ctx.attribute_index(n).unwrap()),
    )
    .unwrap()
}

fn ids(iter: impl Iterator<Item = usize>) -> IdSet {
    iter.collect()
}

fn concept_ids(c: &FormalConcept) -> (IdSet, IdSet) {
    (ids(c.extent().iter()), ids(c.intent().iter()))
}

/// The frozen lattice counts, derived from the brute-force oracle before
/// being written down; parsed here and re-checked against the oracle in
/// the criteria that use them.
fn golden_counts() -> (usize, usize) {
    let text = String::from_utf8(read_fixture("lattice_counts.txt")).unwrap();
    let mut concepts = None;
    let mut covers = None;
    for line in text.lines() {
        match line.split_once('=') {
            Some(("concepts", v)) => concepts = v.parse().ok(),
            Some(("covers", v)) => covers = v.parse().ok(),
            _ => panic!("unexpected golden line {line:?}"),
        }
    }
    (concepts.expect("concepts="), covers.expect("covers="))
}

/// Criterion 1 — fixture fidelity: the three shipped encodings decode to
/// one identical context, and the spot derivations match exactly.
#[test]
fn criterion_1_fixture_fidelity() {
    let from_csv = fixture_context("context.csv", ContextFormat::Csv);
    let from_xml = fixture_context("context.xml", ContextFormat::Xml);
    let from_cxt = fixture_context("context.cxt", ContextFormat::Burmeister);
    assert_eq!(from_csv, from_xml);
    assert_eq!(from_xml, from_cxt);

    let ctx = &from_xml;
    assert_eq!(
        ctx.derive_objects(&objects_by_name(ctx, &["A"])),
        attributes_by_name(ctx, &["P1", "P3", "P7"])
    );
    assert_eq!(
        ctx.derive_attributes(&attributes_by_name(ctx, &["P5"])),
        objects_by_name(ctx, &["B", "C", "D", "F"])
    );
    assert_eq!(
        ctx.close_attributes(&attributes_by_name(ctx, &["P1", "P2"])),
        attributes_by_name(ctx, &["P1", "P2", "P6"])
    );
    println!("criterion 1 (fixture fidelity): PASS");
}

/// Criterion 2 — concept enumeration equals the exhaustive subset-closure
/// oracle on the fixture context and on 200 seeded random contexts up to
/// 12x12, duplicate-free and lectically monotone.
#[test]
fn criterion_2_concept_oracle_equivalence() {
    let mut contexts = vec![fixture_context("context.xml", ContextFormat::Xml)];
    let mut rng = seeded_rng(0x5eed_0002);
    contexts.extend((0..200).map(|_| random_context(&mut rng, 12, 12)));

    for ctx in &contexts {
        let concepts = enumerate_concepts(ctx);
        let as_sets: BTreeSet<_> = concepts.iter().map(concept_ids).collect();
        assert_eq!(as_sets.len(), concepts.len(), "duplicates emitted");
        assert_eq!(as_sets, oracle_concepts(ctx));
        for pair in concepts.windows(2) {
            assert!(lectic_less(
                &ids(pair[0].intent().iter()),
                &ids(pair[1].intent().iter())
            ));
        }
    }

    // the fixture's concept count is also frozen as a golden value
    let (golden_concepts, _) = golden_counts();
    assert_eq!(enumerate_concepts(&contexts[0]).len(), golden_concepts);
    assert_eq!(oracle_concepts(&contexts[0]).len(), golden_concepts);
    println!(
        "criterion 2 (oracle equivalence on {} contexts): PASS",
        contexts.len()
    );
}

/// Criterion 3 — Galois laws: anti-monotonicity, extensivity and A′ = A‴
/// on 1000 sampled (context, set) cases plus exhaustively on small
/// contexts; exact set equality throughout.
#[test]
fn criterion_3_galois_law_suite() {
    let mut rng = seeded_rng(0x5eed_0003);
    let mut cases = 0;
    while cases < 1000 {
        let ctx = random_context(&mut rng, 10, 10);
        for _ in 0..4 {
            let a2 = ObjectSet::from_indices(
                ctx.object_count(),
                random_subset(&mut rng, ctx.object_count()),
            )
            .unwrap();
            let a1 = ObjectSet::from_indices(
                ctx.object_count(),
                a2.iter().filter(|_| rng.random_bool(0.5)),
            )
            .unwrap();

            // anti-monotonicity on both sides
            assert!(ctx.derive_objects(&a2).is_subset(&ctx.derive_objects(&a1)));
            let b2 = ctx.derive_objects(&a1);
            let b1 = AttributeSet::from_indices(
                ctx.attribute_count(),
                b2.iter().filter(|_| rng.random_bool(0.5)),
            )
            .unwrap();
            assert!(ctx
                .derive_attributes(&b2)
                .is_subset(&ctx.derive_attributes(&b1)));

            // extensivity
            assert!(a2.is_subset(&ctx.close_objects(&a2)));
            assert!(b1.is_subset(&ctx.close_attributes(&b1)));

            // triple prime collapses
            let derived = ctx.derive_objects(&a2);
            assert_eq!(
                ctx.derive_objects(&ctx.derive_attributes(&derived)),
                derived
            );
            cases += 1;
        }
    }

    // exhaustive over all subsets and nested pairs on small contexts
    let mut exhaustive = vec![fixture_context("context.xml", ContextFormat::Xml)];
    exhaustive.extend((0..4).map(|_| random_context(&mut rng, 8, 8)));
    for ctx in &exhaustive {
        let g = ctx.object_count();
        for mask in 0u32..(1 << g) {
            let a2 = ObjectSet::from_indices(
                ctx.object_count(),
                (0..g).filter(|&i| mask & (1 << i) != 0),
            )
            .unwrap();
            let derived = ctx.derive_objects(&a2);
            assert!(a2.is_subset(&ctx.close_objects(&a2)));
            assert_eq!(
                ctx.derive_objects(&ctx.derive_attributes(&derived)),
                derived
            );
            let mut sub = mask;
            loop {
                let a1 = ObjectSet::from_indices(
                    ctx.object_count(),
                    (0..g).filter(|&i| sub & (1 << i) != 0),
                )
                .unwrap();
                assert!(derived.is_subset(&ctx.derive_objects(&a1)));
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & mask;
            }
        }
    }
    println!("criterion 3 (Galois laws, {cases} sampled cases + exhaustive): PASS");
}

/// Criterion 4 — lattice laws: meet/join are valid concepts satisfying the
/// bound definitions against the full order; covers equal the independent
/// cubic reduction oracle. Checked on every generated lattice with at most
/// 200 concepts.
#[test]
fn criterion_4_lattice_laws() {
    let mut rng = seeded_rng(0x5eed_0004);
    let mut contexts = vec![fixture_context("context.xml", ContextFormat::Xml)];
    contexts.extend((0..30).map(|_| random_context(&mut rng, 8, 8)));
    contexts.extend((0..4).map(|_| random_context(&mut rng, 11, 11)));

    let mut checked = 0;
    for ctx in &contexts {
        let lat = build_lattice(ctx);
        if lat.len() > 200 {
            continue;
        }
        checked += 1;

        let extents: Vec<IdSet> = lat
            .concepts()
            .iter()
            .map(|c| ids(c.extent().iter()))
            .collect();
        let got: BTreeSet<(usize, usize)> = lat.covers().iter().copied().collect();
        assert_eq!(got, oracle_covers(&extents));

        let concepts = lat.concepts();
        for c1 in concepts {
            for c2 in concepts {
                let m = meet(ctx, c1, c2);
                let j = join(ctx, c1, c2);
                assert!(m.is_valid(ctx));
                assert!(j.is_valid(ctx));
                assert!(concept_leq(&m, c1).unwrap() && concept_leq(&m, c2).unwrap());
                assert!(concept_leq(c1, &j).unwrap() && concept_leq(c2, &j).unwrap());
                for other in concepts {
                    if concept_leq(other, c1).unwrap() && concept_leq(other, c2).unwrap() {
                        assert!(concept_leq(other, &m).unwrap(), "meet is not greatest");
                    }
                    if concept_leq(c1, other).unwrap() && concept_leq(c2, other).unwrap() {
                        assert!(concept_leq(&j, other).unwrap(), "join is not least");
                    }
                }
            }
        }
    }
    assert!(checked >= 30, "too few lattices within the size bound");
    println!("criterion 4 (lattice laws on {checked} lattices): PASS");
}

/// Criterion 5 — implication basis: syntactic closure under the computed
/// basis equals X″ for every attribute subset, exhaustively, on the
/// fixture and on seeded random contexts with |M| ≤ 8; plus the two CLI
/// exit-code checks.
#[test]
fn criterion_5_implication_basis() {
    let mut rng = seeded_rng(0x5eed_0005);
    let mut contexts = vec![fixture_context("context.xml", ContextFormat::Xml)];
    contexts.extend((0..50).map(|_| random_context(&mut rng, 10, 8)));

    for ctx in &contexts {
        let basis = implication_basis(ctx);
        let m = ctx.attribute_count();
        for mask in 0u32..(1 << m) {
            let subset: IdSet = (0..m).filter(|&i| mask & (1 << i) != 0).collect();
            let x = AttributeSet::from_indices(m, subset.iter().copied()).unwrap();
            let closed = syntactic_closure(&basis, &x);
            assert_eq!(ids(closed.iter()), oracle_close_attributes(ctx, &subset));
        }
    }

    let path = fixture("context.xml");
    let holds = fca(&[
        "implications",
        path.to_str().unwrap(),
        "--check",
        "P1,P2 -> P6",
    ]);
    assert_eq!(holds.status.code(), Some(0));
    let fails = fca(&["implications", path.to_str().unwrap(), "--check", "P1 -> P3"]);
    assert_eq!(fails.status.code(), Some(1));
    println!(
        "criterion 5 (basis completeness on {} contexts + CLI checks): PASS",
        contexts.len()
    );
}

/// Criterion 6 — round-trips: parse ∘ serialize identity across the three
/// formats on 100 seeded random contexts; the serialized fixture context
/// reproduces the shipped XML, BIN header attributes byte-exact.
#[test]
fn criterion_6_round_trips() {
    let mut rng = seeded_rng(0x5eed_0006);
    for _ in 0..100 {
        let ctx = random_context(&mut rng, 12, 12);
        for format in FORMATS {
            let doc = ContextDocument::new("roundtrip", ctx.clone(), format).unwrap();
            let bytes = serialize_context(&doc, format).unwrap();
            let parsed = parse_context(&bytes, format).unwrap();
            assert_eq!(parsed.context(), &ctx, "{format} round trip");
        }
    }

    // byte-exact golden: re-serializing the parsed fixture reproduces it
    let fixture_bytes = read_fixture("context.xml");
    let doc = parse_context(&fixture_bytes, ContextFormat::Xml).unwrap();
    assert_eq!(doc.name(), "Crime patternContext.slf");
    let reserialized = serialize_context(&doc, ContextFormat::Xml).unwrap();
    assert_eq!(reserialized, fixture_bytes);

    let text = String::from_utf8(reserialized).unwrap();
    assert!(text.contains(
        "<BIN name=\"Crime patternContext.slf\" nbObj=\"6\" nbAtt=\"8\" type=\"BinaryRelation\">"
    ));
    println!("criterion 6 (round-trips + byte-exact BIN header): PASS");
}

/// Criterion 7 — rendering: DOT node and edge counts equal the
/// oracle-derived golden values, and reduced labelling places each of the
/// 6 object and 8 attribute labels exactly once.
#[test]
fn criterion_7_rendering() {
    let ctx = fixture_context("context.xml", ContextFormat::Xml);
    let lat = build_lattice(&ctx);
    let dot = lattice_to_dot(&lat, &ctx, &DotOptions::default()).unwrap();
    let summary = check_dot(&dot).expect("lattice DOT must satisfy the grammar");

    // golden counts, cross-checked against the oracle right here
    let (golden_concepts, golden_covers) = golden_counts();
    let oracle = oracle_concepts(&ctx);
    assert_eq!(oracle.len(), golden_concepts, "stale golden concept count");
    let mut oracle_sorted: Vec<(IdSet, IdSet)> = oracle.into_iter().collect();
    oracle_sorted.sort_by(|a, b| {
        if a.1 == b.1 {
            std::cmp::Ordering::Equal
        } else if lectic_less(&a.1, &b.1) {
            std::cmp::Ordering::Less
        } else {
            std::cmp::Ordering::Greater
        }
    });
    let oracle_extents: Vec<IdSet> = oracle_sorted.into_iter().map(|(e, _)| e).collect();
    assert_eq!(
        oracle_covers(&oracle_extents).len(),
        golden_covers,
        "stale golden cover count"
    );

    assert_eq!(summary.nodes, golden_concepts);
    assert_eq!(summary.edges, golden_covers);

    let mut tokens: Vec<String> = Vec::new();
    for label in &summary.labels {
        for line in label.split('\n') {
            tokens.extend(line.split(", ").filter(|t| !t.is_empty()).map(String::from));
        }
    }
    for name in ctx.object_names().iter().chain(ctx.attribute_names()) {
        assert_eq!(
            tokens.iter().filter(|t| *t == name).count(),
            1,
            "label {name} must appear exactly once"
        );
    }
    println!("criterion 7 (rendering counts + reduced labelling): PASS");
}

/// Criterion 8 — end-to-end: ingest the incident log, then lattice and
/// implications on the result; exit 0 everywhere and byte-identical
/// output across two runs.
#[test]
fn criterion_8_end_to_end() {
    let dir = tempfile::tempdir().unwrap();
    let incidents = fixture("incidents.csv");

    let mut transcripts = Vec::new();
    for run in 0..2 {
        let ctx_path = dir.path().join(format!("run{run}.xml"));
        let dot_path = dir.path().join(format!("run{run}.dot"));

        let ingest = fca(&[
            "ingest",
            incidents.to_str().unwrap(),
            "--out",
            ctx_path.to_str().unwrap(),
            "--objects",
            "A,B,C,D,E,F",
            "--attributes",
            "P1,P2,P3,P4,P5,P6,P7,P8",
            "--name",
            "Crime patternContext.slf",
        ]);
        assert!(ingest.status.success());

        let lattice = fca(&[
            "lattice",
            ctx_path.to_str().unwrap(),
            "--dot",
            dot_path.to_str().unwrap(),
        ]);
        assert!(lattice.status.success());

        let implications = fca(&["implications", ctx_path.to_str().unwrap()]);
        assert!(implications.status.success());

        let report = fca(&["report", ctx_path.to_str().unwrap()]);
        assert!(report.status.success());

        transcripts.push((
            std::fs::read(&ctx_path).unwrap(),
            std::fs::read(&dot_path).unwrap(),
            lattice.stdout,
            implications.stdout,
            report.stdout,
        ));
    }
    assert_eq!(transcripts[0], transcripts[1], "runs must be byte-identical");

    // the ingested context is exactly the shipped XML fixture
    assert_eq!(transcripts[0].0, read_fixture("context.xml"));
    println!("criterion 8 (deterministic ingest → lattice → implications): PASS");
}
