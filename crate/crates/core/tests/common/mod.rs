//! Shared strategies and fixtures for the property suites.
//!
//! Each test binary uses its own subset of these helpers.
#![allow(dead_code)]

use fca_core::{AttributeSet, FormalContext, ObjectSet};
use proptest::prelude::*;

/// The 6-location × 8-crime-type example context (22 incidence marks).
pub fn crime_context() -> FormalContext {
    FormalContext::build(
        ["A", "B", "C", "D", "E", "F"].map(String::from).to_vec(),
        ["P1", "P2", "P3", "P4", "P5", "P6", "P7", "P8"]
            .map(String::from)
            .to_vec(),
        &[
            (0, 0),
            (0, 2),
            (0, 6),
            (1, 1),
            (1, 2),
            (1, 4),
            (1, 7),
            (2, 3),
            (2, 4),
            (2, 5),
            (3, 0),
            (3, 2),
            (3, 4),
            (3, 6),
            (4, 0),
            (4, 1),
            (4, 5),
            (5, 1),
            (5, 3),
            (5, 4),
            (5, 6),
            (5, 7),
        ],
    )
    .unwrap()
}

/// Random context with plain `g0..`/`m0..` names, up to the given bounds
/// (inclusive, possibly zero-dimensional).
pub fn context_strategy(
    max_objects: usize,
    max_attributes: usize,
) -> impl Strategy<Value = FormalContext> {
    (0..=max_objects, 0..=max_attributes).prop_flat_map(|(g, m)| {
        proptest::collection::vec(any::<bool>(), g * m).prop_map(move |cells| {
            let pairs: Vec<(usize, usize)> = cells
                .iter()
                .enumerate()
                .filter_map(|(i, &inc)| inc.then(|| (i / m.max(1), i % m.max(1))))
                .collect();
            FormalContext::build(
                (0..g).map(|i| format!("g{i}")).collect(),
                (0..m).map(|i| format!("m{i}")).collect(),
                &pairs,
            )
            .unwrap()
        })
    })
}

pub fn mask_to_objects(mask: &[bool]) -> ObjectSet {
    ObjectSet::from_indices(
        mask.len(),
        mask.iter().enumerate().filter_map(|(i, &b)| b.then_some(i)),
    )
    .unwrap()
}

pub fn mask_to_attributes(mask: &[bool]) -> AttributeSet {
    AttributeSet::from_indices(
        mask.len(),
        mask.iter().enumerate().filter_map(|(i, &b)| b.then_some(i)),
    )
    .unwrap()
}

/// A context plus two independent object-set masks over it.
pub fn ctx_with_object_masks(
    max_objects: usize,
    max_attributes: usize,
) -> impl Strategy<Value = (FormalContext, Vec<bool>, Vec<bool>)> {
    context_strategy(max_objects, max_attributes).prop_flat_map(|ctx| {
        let g = ctx.object_count();
        (
            Just(ctx),
            proptest::collection::vec(any::<bool>(), g),
            proptest::collection::vec(any::<bool>(), g),
        )
    })
}

/// A context plus two independent attribute-set masks over it.
pub fn ctx_with_attribute_masks(
    max_objects: usize,
    max_attributes: usize,
) -> impl Strategy<Value = (FormalContext, Vec<bool>, Vec<bool>)> {
    context_strategy(max_objects, max_attributes).prop_flat_map(|ctx| {
        let m = ctx.attribute_count();
        (
            Just(ctx),
            proptest::collection::vec(any::<bool>(), m),
            proptest::collection::vec(any::<bool>(), m),
        )
    })
}

pub fn attribute_subset(ctx: &FormalContext, mask: u32) -> AttributeSet {
    AttributeSet::from_indices(
        ctx.attribute_count(),
        (0..ctx.attribute_count()).filter(|&m| mask & (1 << m) != 0),
    )
    .unwrap()
}

pub fn object_subset(ctx: &FormalContext, mask: u32) -> ObjectSet {
    ObjectSet::from_indices(
        ctx.object_count(),
        (0..ctx.object_count()).filter(|&g| mask & (1 << g) != 0),
    )
    .unwrap()
}

pub fn to_id_set(iter: impl Iterator<Item = usize>) -> fca_testkit::IdSet {
    iter.collect()
}
