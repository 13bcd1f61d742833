//! Concept enumeration and the concept lattice.
//!
//! Concepts are generated by canonical closure generation in lectic order
//! over attribute sets (the next-closure scheme): every closed intent is
//! produced exactly once, in a total order fixed by the attribute ids, so
//! all downstream output is deterministic for a given input file.

use std::cmp::Ordering;

use crate::context::{AttributeSet, FormalContext, ObjectSet};
use crate::error::{Error, Result};

/// A formal concept: a pair (extent, intent) with extent′ = intent and
/// intent′ = extent. Equivalently, both components are closed.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct FormalConcept {
    extent: ObjectSet,
    intent: AttributeSet,
}

impl FormalConcept {
    pub fn extent(&self) -> &ObjectSet {
        &self.extent
    }

    pub fn intent(&self) -> &AttributeSet {
        &self.intent
    }

    /// The concept generated by an object set: (A″, A′).
    pub fn from_objects(ctx: &FormalContext, a: &ObjectSet) -> Self {
        let intent = ctx.derive_objects(a);
        let extent = ctx.derive_attributes(&intent);
        FormalConcept { extent, intent }
    }

    /// The concept generated by an attribute set: (B′, B″).
    pub fn from_attributes(ctx: &FormalContext, b: &AttributeSet) -> Self {
        let extent = ctx.derive_attributes(b);
        let intent = ctx.derive_objects(&extent);
        FormalConcept { extent, intent }
    }

    /// Checks the defining mutual-derivation condition against `ctx`.
    pub fn is_valid(&self, ctx: &FormalContext) -> bool {
        self.extent.domain() == ctx.object_count()
            && self.intent.domain() == ctx.attribute_count()
            && ctx.derive_objects(&self.extent) == self.intent
            && ctx.derive_attributes(&self.intent) == self.extent
    }
}

/// The object concept of `g`: ({g}″, {g}′), the least concept whose extent
/// contains `g`.
pub fn object_concept(ctx: &FormalContext, g: usize) -> FormalConcept {
    let mut a = ObjectSet::empty(ctx.object_count());
    a.insert(g);
    FormalConcept::from_objects(ctx, &a)
}

/// The attribute concept of `m`: ({m}′, {m}″), the greatest concept whose
/// intent contains `m`.
pub fn attribute_concept(ctx: &FormalContext, m: usize) -> FormalConcept {
    let mut b = AttributeSet::empty(ctx.attribute_count());
    b.insert(m);
    FormalConcept::from_attributes(ctx, &b)
}

/// Subconcept order: (A1, B1) ≤ (A2, B2) iff A1 ⊆ A2 (iff B1 ⊇ B2).
///
/// Rejects concepts whose index spaces differ; concepts of equally shaped
/// but distinct contexts are indistinguishable here, which is why lattices
/// cache nothing across contexts.
pub fn concept_leq(c1: &FormalConcept, c2: &FormalConcept) -> Result<bool> {
    if c1.extent.domain() != c2.extent.domain() || c1.intent.domain() != c2.intent.domain() {
        return Err(Error::MismatchedContext {
            left_objects: c1.extent.domain(),
            left_attributes: c1.intent.domain(),
            right_objects: c2.extent.domain(),
            right_attributes: c2.intent.domain(),
        });
    }
    Ok(c1.extent.is_subset(&c2.extent))
}

/// Greatest common subconcept: (A1 ∩ A2, (A1 ∩ A2)′).
///
/// The intent equals (B1 ∪ B2)″; a plain union of intents is generally not
/// closed, so the closure is taken via the intersected extent.
pub fn meet(ctx: &FormalContext, c1: &FormalConcept, c2: &FormalConcept) -> FormalConcept {
    let extent = c1.extent.intersection(&c2.extent);
    let intent = ctx.derive_objects(&extent);
    FormalConcept { extent, intent }
}

/// Least common superconcept: ((B1 ∩ B2)′, B1 ∩ B2), dually to [`meet`].
pub fn join(ctx: &FormalContext, c1: &FormalConcept, c2: &FormalConcept) -> FormalConcept {
    let intent = c1.intent.intersection(&c2.intent);
    let extent = ctx.derive_attributes(&intent);
    FormalConcept { extent, intent }
}

/// Next-closure step: the lectically smallest closed attribute set greater
/// than `current`, or None when `current` is the last one (all of M).
fn next_intent(ctx: &FormalContext, current: &AttributeSet) -> Option<AttributeSet> {
    let m = ctx.attribute_count();
    let mut a = current.clone();
    for i in (0..m).rev() {
        if a.contains(i) {
            a.remove(i);
        } else {
            let mut candidate = a.clone();
            candidate.insert(i);
            let closed = ctx.close_attributes(&candidate);
            // Canonical iff closing added nothing below the pivot.
            if !closed.has_extra_below(&a, i) {
                return Some(closed);
            }
        }
    }
    None
}

/// Enumerates every formal concept of `ctx` exactly once, intents in
/// strictly increasing lectic order. The first concept is the top (G, G′),
/// the last is the bottom (M′, M). A context with no objects or no
/// attributes has exactly one concept.
pub fn enumerate_concepts(ctx: &FormalContext) -> Vec<FormalConcept> {
    let mut concepts = Vec::new();
    let mut intent = ctx.close_attributes(&AttributeSet::empty(ctx.attribute_count()));
    loop {
        concepts.push(FormalConcept::from_attributes(ctx, &intent));
        match next_intent(ctx, &intent) {
            Some(next) => intent = next,
            None => break,
        }
    }
    concepts
}

/// All concepts of a context plus the covering (Hasse) relation of ≤.
///
/// Concepts are sorted by lectic order of intents — the crate-wide canonical
/// concept order. `covers` is the transitive reduction of ≤, stored as
/// `(lower index, upper index)` pairs sorted likewise.
#[derive(Clone, Debug)]
pub struct ConceptLattice {
    object_count: usize,
    attribute_count: usize,
    concepts: Vec<FormalConcept>,
    covers: Vec<(usize, usize)>,
    top: usize,
    bottom: usize,
}

impl ConceptLattice {
    pub fn object_count(&self) -> usize {
        self.object_count
    }

    pub fn attribute_count(&self) -> usize {
        self.attribute_count
    }

    pub fn concepts(&self) -> &[FormalConcept] {
        &self.concepts
    }

    pub fn concept(&self, index: usize) -> &FormalConcept {
        &self.concepts[index]
    }

    /// Number of concepts; at least 1 for any context.
    pub fn len(&self) -> usize {
        self.concepts.len()
    }

    /// Cover pairs (lower, upper): upper covers lower in ≤.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    /// Index of the greatest concept (G, G′); always 0 in lectic order.
    pub fn top_index(&self) -> usize {
        self.top
    }

    /// Index of the least concept (M′, M); always the last in lectic order.
    pub fn bottom_index(&self) -> usize {
        self.bottom
    }

    /// Finds a concept by its intent (binary search over the lectic order).
    pub fn index_of_intent(&self, intent: &AttributeSet) -> Option<usize> {
        self.concepts
            .binary_search_by(|c| c.intent().lectic_cmp(intent))
            .ok()
    }

    /// Whether compatible in shape with `ctx` (necessary for having been
    /// built from it).
    pub fn matches_context(&self, ctx: &FormalContext) -> bool {
        self.object_count == ctx.object_count() && self.attribute_count == ctx.attribute_count()
    }
}

/// Builds the concept lattice: enumeration in canonical order plus the
/// covering relation, computed by the all-pairs subset test followed by a
/// cubic transitive-reduction scan. Lattices at this crate's working scale
/// are small; asymptotically faster reductions are out of scope.
pub fn build_lattice(ctx: &FormalContext) -> ConceptLattice {
    let concepts = enumerate_concepts(ctx);
    let n = concepts.len();

    // strict[i][j]: concept i < concept j (proper extent inclusion).
    let mut strict = vec![vec![false; n]; n];
    for i in 0..n {
        for j in 0..n {
            strict[i][j] = i != j && concepts[i].extent().is_subset(concepts[j].extent());
        }
    }

    let mut covers = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if !strict[i][j] {
                continue;
            }
            let has_intermediate = (0..n).any(|k| strict[i][k] && strict[k][j]);
            if !has_intermediate {
                covers.push((i, j));
            }
        }
    }
    covers.sort_unstable();

    let top = 0;
    let bottom = n - 1;
    debug_assert_eq!(concepts[top].extent().len(), ctx.object_count());
    debug_assert_eq!(concepts[bottom].intent().len(), ctx.attribute_count());

    ConceptLattice {
        object_count: ctx.object_count(),
        attribute_count: ctx.attribute_count(),
        concepts,
        covers,
        top,
        bottom,
    }
}

/// Canonical total order on concepts = lectic order of intents.
pub fn canonical_cmp(c1: &FormalConcept, c2: &FormalConcept) -> Ordering {
    c1.intent().lectic_cmp(c2.intent())
}
