//! Attribute implications: validity, independence, and the canonical basis.
//!
//! An implication X → Y holds in a context when every object having all
//! attributes of X also has all attributes of Y, i.e. Y ⊆ X″. The canonical
//! (stem) basis pairs each pseudo-intent P with its closure P″; it is sound,
//! and complete in the sense that closing any set syntactically under the
//! basis reproduces the context closure.

use crate::context::{AttributeSet, FormalContext};
use crate::error::{Error, Result};

/// An attribute implication premise → conclusion over one context's
/// attribute space. The conclusion may overlap the premise.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Implication {
    premise: AttributeSet,
    conclusion: AttributeSet,
}

impl Implication {
    pub fn new(premise: AttributeSet, conclusion: AttributeSet) -> Result<Self> {
        if premise.domain() != conclusion.domain() {
            return Err(Error::MismatchedAttributeSpace {
                left: premise.domain(),
                right: conclusion.domain(),
            });
        }
        Ok(Implication { premise, conclusion })
    }

    pub fn premise(&self) -> &AttributeSet {
        &self.premise
    }

    pub fn conclusion(&self) -> &AttributeSet {
        &self.conclusion
    }
}

/// True iff `imp` holds in `ctx`: conclusion ⊆ premise″ (equivalently,
/// premise′ ⊆ conclusion′).
pub fn implication_holds(ctx: &FormalContext, imp: &Implication) -> bool {
    imp.conclusion.is_subset(&ctx.close_attributes(&imp.premise))
}

/// True iff no attribute of `x` is implied by the remaining ones: for every
/// m ∈ X, m ∉ (X \ {m})″.
///
/// Note the edge this definition forces: a singleton {m} is dependent
/// exactly when m is universal (held by every object), since then ∅ → {m}
/// already holds.
pub fn attributes_independent(ctx: &FormalContext, x: &AttributeSet) -> bool {
    for m in x.iter() {
        let mut rest = x.clone();
        rest.remove(m);
        if ctx.close_attributes(&rest).contains(m) {
            return false;
        }
    }
    true
}

/// Least superset of `x` stable under every implication of `basis`:
/// the fixpoint of repeated forward application (premise ⊆ set ⇒ add
/// conclusion). Monotone and bounded by M, so it terminates.
pub fn syntactic_closure(basis: &[Implication], x: &AttributeSet) -> AttributeSet {
    let mut current = x.clone();
    loop {
        let mut changed = false;
        for imp in basis {
            if imp.premise.is_subset(&current) && !imp.conclusion.is_subset(&current) {
                current.union_with(&imp.conclusion);
                changed = true;
            }
        }
        if !changed {
            return current;
        }
    }
}

/// Closure under `basis` where an implication fires only on proper supersets
/// of its premise. Its fixed points are exactly the context's intents and
/// pseudo-intents, which is what makes the lectic basis enumeration work.
fn proper_premise_closure(basis: &[Implication], x: &AttributeSet) -> AttributeSet {
    let mut current = x.clone();
    loop {
        let mut changed = false;
        for imp in basis {
            if imp.premise.is_subset(&current)
                && imp.premise != current
                && !imp.conclusion.is_subset(&current)
            {
                current.union_with(&imp.conclusion);
                changed = true;
            }
        }
        if !changed {
            return current;
        }
    }
}

/// Next-closure step for [`proper_premise_closure`] fixed points.
fn next_stable_set(
    basis: &[Implication],
    current: &AttributeSet,
    attribute_count: usize,
) -> Option<AttributeSet> {
    let mut a = current.clone();
    for i in (0..attribute_count).rev() {
        if a.contains(i) {
            a.remove(i);
        } else {
            let mut candidate = a.clone();
            candidate.insert(i);
            let closed = proper_premise_closure(basis, &candidate);
            if !closed.has_extra_below(&a, i) {
                return Some(closed);
            }
        }
    }
    None
}

/// Computes the canonical stem basis: one implication P → P″ per
/// pseudo-intent P, in lectic order of premises.
///
/// Intents and pseudo-intents are enumerated together in lectic order; each
/// visited set that is not context-closed is a pseudo-intent and contributes
/// an implication, which immediately joins the closure operator used for the
/// remaining enumeration.
pub fn implication_basis(ctx: &FormalContext) -> Vec<Implication> {
    let m = ctx.attribute_count();
    let mut basis: Vec<Implication> = Vec::new();
    let mut current = AttributeSet::empty(m);
    loop {
        let closed = ctx.close_attributes(&current);
        if closed != current {
            basis.push(Implication {
                premise: current.clone(),
                conclusion: closed,
            });
        }
        if current.len() == m {
            break;
        }
        match next_stable_set(&basis, &current, m) {
            Some(next) => current = next,
            None => break,
        }
    }
    basis
}
