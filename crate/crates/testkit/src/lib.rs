//! Brute-force oracles and random generators shared by the test suites.
//!
//! Everything here recomputes its answer from the raw incidence bits with
//! naive set logic over `BTreeSet`s — deliberately none of the library's
//! bitset derivations, closure enumeration, or cover computation — so these
//! functions can serve as independent references for property and
//! acceptance tests. They are exhaustive and slow; keep inputs desk-sized.

use std::collections::BTreeSet;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use fca_core::FormalContext;

pub type IdSet = BTreeSet<usize>;

/// Attributes common to all of `objects`, by scanning the incidence matrix.
pub fn oracle_intent(ctx: &FormalContext, objects: &IdSet) -> IdSet {
    (0..ctx.attribute_count())
        .filter(|&m| objects.iter().all(|&g| ctx.has_incidence(g, m)))
        .collect()
}

/// Objects having all of `attributes`.
pub fn oracle_extent(ctx: &FormalContext, attributes: &IdSet) -> IdSet {
    (0..ctx.object_count())
        .filter(|&g| attributes.iter().all(|&m| ctx.has_incidence(g, m)))
        .collect()
}

/// Closure X ↦ X″ on attribute id sets.
pub fn oracle_close_attributes(ctx: &FormalContext, attributes: &IdSet) -> IdSet {
    oracle_intent(ctx, &oracle_extent(ctx, attributes))
}

/// Closure A ↦ A″ on object id sets.
pub fn oracle_close_objects(ctx: &FormalContext, objects: &IdSet) -> IdSet {
    oracle_extent(ctx, &oracle_intent(ctx, objects))
}

/// Every formal concept, computed exhaustively: close all 2^|G| object
/// subsets and deduplicate. Requires |G| ≤ 20.
pub fn oracle_concepts(ctx: &FormalContext) -> BTreeSet<(IdSet, IdSet)> {
    let g = ctx.object_count();
    assert!(g <= 20, "oracle_concepts is exponential in the object count");
    let mut concepts = BTreeSet::new();
    for mask in 0u32..(1u32 << g) {
        let subset: IdSet = (0..g).filter(|&i| mask & (1 << i) != 0).collect();
        let intent = oracle_intent(ctx, &subset);
        let extent = oracle_extent(ctx, &intent);
        concepts.insert((extent, intent));
    }
    concepts
}

/// Transitive reduction of the extent-inclusion order over `extents`,
/// as (lower index, upper index) pairs; all-pairs subset test plus a
/// triple scan.
pub fn oracle_covers(extents: &[IdSet]) -> BTreeSet<(usize, usize)> {
    let n = extents.len();
    let strict = |i: usize, j: usize| i != j && extents[i].is_subset(&extents[j]);
    let mut covers = BTreeSet::new();
    for i in 0..n {
        for j in 0..n {
            if strict(i, j) && !(0..n).any(|k| strict(i, k) && strict(k, j)) {
                covers.insert((i, j));
            }
        }
    }
    covers
}

/// Lectic order on id sets: `a < b` iff the smallest element of the
/// symmetric difference lies in `b`.
pub fn lectic_less(a: &IdSet, b: &IdSet) -> bool {
    match a.symmetric_difference(b).next() {
        Some(min) => b.contains(min),
        None => false,
    }
}

/// Deterministic RNG for seeded test loops.
pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random context with up to `max_objects` × `max_attributes` (bounds
/// inclusive, possibly zero) and a density drawn per context. Names are
/// `g0..`/`m0..`.
pub fn random_context(
    rng: &mut impl Rng,
    max_objects: usize,
    max_attributes: usize,
) -> FormalContext {
    let objects = rng.random_range(0..=max_objects);
    let attributes = rng.random_range(0..=max_attributes);
    let density = rng.random_range(0.05..0.95);
    random_context_exact(rng, objects, attributes, density)
}

/// A random context of exactly the given shape and incidence density.
pub fn random_context_exact(
    rng: &mut impl Rng,
    objects: usize,
    attributes: usize,
    density: f64,
) -> FormalContext {
    let mut pairs = Vec::new();
    for g in 0..objects {
        for m in 0..attributes {
            if rng.random_bool(density) {
                pairs.push((g, m));
            }
        }
    }
    FormalContext::build(
        (0..objects).map(|g| format!("g{g}")).collect(),
        (0..attributes).map(|m| format!("m{m}")).collect(),
        &pairs,
    )
    .expect("generated names are unique and pairs in range")
}

/// A random subset of `0..domain`.
pub fn random_subset(rng: &mut impl Rng, domain: usize) -> IdSet {
    (0..domain).filter(|_| rng.random_bool(0.5)).collect()
}

/// Structure of a parsed DOT digraph.
#[derive(Debug, PartialEq, Eq)]
pub struct DotSummary {
    pub nodes: usize,
    pub edges: usize,
    pub labels: Vec<String>,
}

/// Checks `dot` against the digraph grammar subset used for Hasse diagrams
/// (graph attribute statements, node statements with a quoted label, edge
/// statements) and returns the node/edge/label summary.
pub fn check_dot(dot: &str) -> Result<DotSummary, String> {
    let mut lines = dot.lines();
    let header = lines.next().ok_or("empty document")?;
    let name = header
        .strip_prefix("digraph ")
        .and_then(|h| h.strip_suffix(" {"))
        .ok_or_else(|| format!("bad header: {header:?}"))?;
    if !is_dot_id(name) {
        return Err(format!("bad graph name: {name:?}"));
    }

    let mut summary = DotSummary {
        nodes: 0,
        edges: 0,
        labels: Vec::new(),
    };
    let mut closed = false;
    for line in lines.by_ref() {
        if line == "}" {
            closed = true;
            break;
        }
        let stmt = line
            .strip_prefix("  ")
            .ok_or_else(|| format!("statement not indented: {line:?}"))?;
        let stmt = stmt
            .strip_suffix(';')
            .ok_or_else(|| format!("statement not terminated: {line:?}"))?;
        if let Some((key, value)) = stmt.split_once('=') {
            if !stmt.contains(' ') {
                if !is_dot_id(key) || !is_dot_id(value) {
                    return Err(format!("bad attribute statement: {line:?}"));
                }
                continue;
            }
        }
        if let Some((from, to)) = stmt.split_once(" -> ") {
            if !is_dot_id(from) || !is_dot_id(to) {
                return Err(format!("bad edge statement: {line:?}"));
            }
            summary.edges += 1;
            continue;
        }
        if let Some((node, rest)) = stmt.split_once(" [label=\"") {
            if !is_dot_id(node) {
                return Err(format!("bad node name: {node:?}"));
            }
            let label = rest
                .strip_suffix("\"]")
                .ok_or_else(|| format!("unterminated label: {line:?}"))?;
            summary.labels.push(unescape_dot(label)?);
            summary.nodes += 1;
            continue;
        }
        return Err(format!("unrecognized statement: {line:?}"));
    }
    if !closed {
        return Err("missing closing brace".into());
    }
    if lines.next().is_some() {
        return Err("content after closing brace".into());
    }
    Ok(summary)
}

fn is_dot_id(s: &str) -> bool {
    !s.is_empty()
        && !s.starts_with(|c: char| c.is_ascii_digit())
        && s.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
}

fn unescape_dot(label: &str) -> Result<String, String> {
    let mut out = String::new();
    let mut chars = label.chars();
    while let Some(c) = chars.next() {
        if c == '"' {
            return Err(format!("unescaped quote inside label: {label:?}"));
        }
        if c != '\\' {
            out.push(c);
            continue;
        }
        match chars.next() {
            Some('\\') => out.push('\\'),
            Some('"') => out.push('"'),
            Some('n') => out.push('\n'),
            other => return Err(format!("bad escape {other:?} in label {label:?}")),
        }
    }
    Ok(out)
}
