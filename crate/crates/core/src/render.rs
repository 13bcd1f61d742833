//! Lattice rendering: DOT (Hasse diagram) export and the plain-text
//! concept report.
//!
//! Layout is left entirely to external DOT processors; this module only
//! fixes the graph structure and the labels, deterministically.

use crate::context::FormalContext;
use crate::error::{Error, Result};
use crate::lattice::{attribute_concept, object_concept, ConceptLattice};

/// What to print inside each node.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum LabelMode {
    /// Complete extent and intent at every node.
    Full,
    /// Each attribute at its attribute concept, each object at its object
    /// concept: every label appears exactly once in the whole diagram.
    Reduced,
}

/// Rank direction of the emitted graph. Edges are oriented so that the top
/// concept is drawn at the top either way.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RankDir {
    TopToBottom,
    BottomToTop,
}

impl RankDir {
    fn dot_value(self) -> &'static str {
        match self {
            RankDir::TopToBottom => "TB",
            RankDir::BottomToTop => "BT",
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct DotOptions {
    pub label_mode: LabelMode,
    pub rankdir: RankDir,
}

impl Default for DotOptions {
    fn default() -> Self {
        DotOptions {
            label_mode: LabelMode::Reduced,
            rankdir: RankDir::TopToBottom,
        }
    }
}

/// Emits the Hasse diagram of `lat` as a DOT digraph: one node per concept
/// (named `c0..`, in canonical order), one edge per cover pair.
pub fn lattice_to_dot(
    lat: &ConceptLattice,
    ctx: &FormalContext,
    options: &DotOptions,
) -> Result<String> {
    if !lat.matches_context(ctx) {
        return Err(Error::MismatchedContext {
            left_objects: lat.object_count(),
            left_attributes: lat.attribute_count(),
            right_objects: ctx.object_count(),
            right_attributes: ctx.attribute_count(),
        });
    }

    let labels = match options.label_mode {
        LabelMode::Full => full_labels(lat, ctx),
        LabelMode::Reduced => reduced_labels(lat, ctx),
    };

    let mut out = String::new();
    out.push_str("digraph concept_lattice {\n");
    out.push_str(&format!("  rankdir={};\n", options.rankdir.dot_value()));
    for (index, label) in labels.iter().enumerate() {
        out.push_str(&format!("  c{index} [label=\"{}\"];\n", escape_dot(label)));
    }
    for &(lower, upper) in lat.covers() {
        let (from, to) = match options.rankdir {
            RankDir::TopToBottom => (upper, lower),
            RankDir::BottomToTop => (lower, upper),
        };
        out.push_str(&format!("  c{from} -> c{to};\n"));
    }
    out.push_str("}\n");
    Ok(out)
}

/// Two lines per node: intent above extent.
fn full_labels(lat: &ConceptLattice, ctx: &FormalContext) -> Vec<String> {
    lat.concepts()
        .iter()
        .map(|c| {
            format!(
                "{}\n{}",
                ctx.format_attributes(c.intent()),
                ctx.format_objects(c.extent())
            )
        })
        .collect()
}

/// Two lines per node: introduced attributes above introduced objects.
fn reduced_labels(lat: &ConceptLattice, ctx: &FormalContext) -> Vec<String> {
    let mut attribute_lines = vec![Vec::new(); lat.len()];
    for m in 0..ctx.attribute_count() {
        let concept = attribute_concept(ctx, m);
        let index = lat
            .index_of_intent(concept.intent())
            .expect("attribute concept must be in the lattice");
        attribute_lines[index].push(ctx.attribute_name(m));
    }
    let mut object_lines = vec![Vec::new(); lat.len()];
    for g in 0..ctx.object_count() {
        let concept = object_concept(ctx, g);
        let index = lat
            .index_of_intent(concept.intent())
            .expect("object concept must be in the lattice");
        object_lines[index].push(ctx.object_name(g));
    }
    attribute_lines
        .iter()
        .zip(&object_lines)
        .map(|(atts, objs)| format!("{}\n{}", atts.join(", "), objs.join(", ")))
        .collect()
}

/// DOT double-quoted string escaping; real newlines become `\n` sequences.
fn escape_dot(label: &str) -> String {
    let mut out = String::with_capacity(label.len());
    for c in label.chars() {
        match c {
            '\\' => out.push_str("\\\\"),
            '"' => out.push_str("\\\""),
            '\n' => out.push_str("\\n"),
            _ => out.push(c),
        }
    }
    out
}

/// Plain-text listing of all concepts in canonical order: one header line,
/// then `extent={..} intent={..} size=N` per concept. This is the
/// "locations grouped by shared profile" report; byte-identical across runs
/// on the same input.
pub fn pattern_report(lat: &ConceptLattice, ctx: &FormalContext) -> Result<String> {
    if !lat.matches_context(ctx) {
        return Err(Error::MismatchedContext {
            left_objects: lat.object_count(),
            left_attributes: lat.attribute_count(),
            right_objects: ctx.object_count(),
            right_attributes: ctx.attribute_count(),
        });
    }
    let mut out = format!(
        "# {} objects, {} attributes, {} concepts\n",
        ctx.object_count(),
        ctx.attribute_count(),
        lat.len()
    );
    for concept in lat.concepts() {
        out.push_str(&format!(
            "extent={} intent={} size={}\n",
            ctx.format_objects(concept.extent()),
            ctx.format_attributes(concept.intent()),
            concept.extent().len()
        ));
    }
    Ok(out)
}
