//! Round-trip and cross-format properties of the three context formats.

use fca_core::io::{
    parse_burmeister, parse_context, parse_csv_context, parse_xml_context, serialize_context,
    ContextDocument, ContextFormat,
};
use fca_core::FormalContext;
use proptest::prelude::*;

const FORMATS: [ContextFormat; 3] = [
    ContextFormat::Xml,
    ContextFormat::Csv,
    ContextFormat::Burmeister,
];

/// Labels with characters that exercise escaping and quoting; uniqueness is
/// guaranteed by an appended index. Line breaks are exercised separately
/// (the line-oriented format rejects them).
fn labelled_context_strategy() -> impl Strategy<Value = FormalContext> {
    let label = "[a-zA-Z0-9 &<>'\",.:#-]{0,6}";
    (0usize..=6, 0usize..=6).prop_flat_map(move |(g, m)| {
        (
            proptest::collection::vec(label, g),
            proptest::collection::vec(label, m),
            proptest::collection::vec(any::<bool>(), g * m),
        )
            .prop_map(move |(object_bases, attribute_bases, cells)| {
                let objects: Vec<String> = object_bases
                    .iter()
                    .enumerate()
                    .map(|(i, base)| format!("{base}{i}"))
                    .collect();
                let attributes: Vec<String> = attribute_bases
                    .iter()
                    .enumerate()
                    .map(|(i, base)| format!("{base}{i}"))
                    .collect();
                let pairs: Vec<(usize, usize)> = cells
                    .iter()
                    .enumerate()
                    .filter_map(|(i, &inc)| inc.then(|| (i / m.max(1), i % m.max(1))))
                    .collect();
                FormalContext::build(objects, attributes, &pairs).unwrap()
            })
    })
}

proptest! {
    /// parse ∘ serialize is the identity on contexts, per format.
    #[test]
    fn round_trip_identity(ctx in labelled_context_strategy()) {
        for format in FORMATS {
            let doc = ContextDocument::new("roundtrip", ctx.clone(), format).unwrap();
            let bytes = serialize_context(&doc, format).unwrap();
            let parsed = parse_context(&bytes, format).unwrap();
            prop_assert_eq!(parsed.context(), &ctx, "format {}", format);
        }
    }

    /// Converting through a chain of formats preserves the context.
    #[test]
    fn cross_format_conversion_preserves_context(ctx in labelled_context_strategy()) {
        let doc = ContextDocument::new("chain", ctx.clone(), ContextFormat::Xml).unwrap();
        let xml = serialize_context(&doc, ContextFormat::Xml).unwrap();
        let from_xml = parse_xml_context(&xml).unwrap();
        let cxt = serialize_context(&from_xml, ContextFormat::Burmeister).unwrap();
        let from_cxt = parse_burmeister(&cxt).unwrap();
        let csv = serialize_context(&from_cxt, ContextFormat::Csv).unwrap();
        let from_csv = parse_csv_context(&csv).unwrap();
        prop_assert_eq!(from_csv.context(), &ctx);
    }

    /// Serialization is deterministic: equal contexts give equal bytes.
    #[test]
    fn serialization_is_deterministic(ctx in labelled_context_strategy()) {
        for format in FORMATS {
            let doc = ContextDocument::new("det", ctx.clone(), format).unwrap();
            prop_assert_eq!(
                serialize_context(&doc, format).unwrap(),
                serialize_context(&doc, format).unwrap()
            );
        }
    }
}

#[test]
fn document_name_survives_xml_and_burmeister() {
    let ctx = FormalContext::build(vec!["g".into()], vec!["m".into()], &[(0, 0)]).unwrap();
    let doc = ContextDocument::new("a name with spaces", ctx, ContextFormat::Xml).unwrap();
    for format in [ContextFormat::Xml, ContextFormat::Burmeister] {
        let bytes = serialize_context(&doc, format).unwrap();
        let parsed = parse_context(&bytes, format).unwrap();
        assert_eq!(parsed.name(), "a name with spaces");
        assert_eq!(parsed.source_format(), format);
    }
}
