//! Formal contexts and the derivation operators.
//!
//! A formal context is a triple (G, M, I): a finite set of objects G, a
//! finite set of attributes M, and an incidence relation I between them.
//! Objects and attributes are addressed by their position in the name lists;
//! the relation is stored twice, as per-object attribute bitsets (rows) and
//! per-attribute object bitsets (columns), so both derivation directions are
//! intersections over packed words.

use std::collections::HashSet;
use std::fmt;

use crate::bitset::BitSet;
use crate::error::{Error, Result};

macro_rules! id_set_type {
    ($name:ident, $noun:literal) => {
        #[doc = concat!("A set of ", $noun, " ids tied to one context's index space.")]
        ///
        /// The domain is the size of that index space; all members are
        /// `< domain`. Sets from contexts of different shape never compare
        /// equal and must not be mixed in set operations.
        #[derive(Clone, PartialEq, Eq, Hash)]
        pub struct $name {
            bits: BitSet,
        }

        impl $name {
            pub fn empty(domain: usize) -> Self {
                Self { bits: BitSet::empty(domain) }
            }

            pub fn full(domain: usize) -> Self {
                Self { bits: BitSet::full(domain) }
            }

            /// Builds a set from ids, rejecting anything outside the domain.
            pub fn from_indices<I>(domain: usize, ids: I) -> Result<Self>
            where
                I: IntoIterator<Item = usize>,
            {
                let mut bits = BitSet::empty(domain);
                for id in ids {
                    if id >= domain {
                        return Err(Error::IndexOutOfRange { index: id, domain });
                    }
                    bits.insert(id);
                }
                Ok(Self { bits })
            }

            pub fn domain(&self) -> usize {
                self.bits.domain()
            }

            pub fn len(&self) -> usize {
                self.bits.len()
            }

            pub fn is_empty(&self) -> bool {
                self.bits.is_empty()
            }

            pub fn contains(&self, id: usize) -> bool {
                self.bits.contains(id)
            }

            /// Panics when `id` is outside the domain; use [`Self::from_indices`]
            /// for untrusted input.
            pub fn insert(&mut self, id: usize) {
                self.bits.insert(id);
            }

            pub fn remove(&mut self, id: usize) {
                self.bits.remove(id);
            }

            pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
                self.bits.iter()
            }

            pub fn is_subset(&self, other: &Self) -> bool {
                self.bits.is_subset(&other.bits)
            }

            pub fn intersection(&self, other: &Self) -> Self {
                Self { bits: self.bits.intersection(&other.bits) }
            }

            pub fn union(&self, other: &Self) -> Self {
                Self { bits: self.bits.union(&other.bits) }
            }

            pub fn intersect_with(&mut self, other: &Self) {
                self.bits.intersect_with(&other.bits);
            }

            pub fn union_with(&mut self, other: &Self) {
                self.bits.union_with(&other.bits);
            }

            /// Lectic order induced by the id order; see [`BitSet::lectic_cmp`].
            pub fn lectic_cmp(&self, other: &Self) -> std::cmp::Ordering {
                self.bits.lectic_cmp(&other.bits)
            }
        }

        impl fmt::Debug for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.debug_set().entries(self.bits.iter()).finish()
            }
        }
    };
}

id_set_type!(ObjectSet, "object");
id_set_type!(AttributeSet, "attribute");

impl AttributeSet {
    /// True if `self` holds some id `< bound` that `other` does not; the
    /// canonicity test of lectic enumeration.
    pub(crate) fn has_extra_below(&self, other: &Self, bound: usize) -> bool {
        self.bits.has_extra_below(&other.bits, bound)
    }
}

/// An immutable formal context (G, M, I).
///
/// Identity of objects and attributes is positional: names are opaque,
/// unique labels, and two distinct columns may well carry labels that a
/// human would read as synonyms. Once built, a context never changes;
/// "editing" means building a new one.
#[derive(Clone, PartialEq, Eq)]
pub struct FormalContext {
    object_names: Vec<String>,
    attribute_names: Vec<String>,
    /// Row g: the attributes of object g (domain = attribute count).
    rows: Vec<AttributeSet>,
    /// Column m: the objects having attribute m (domain = object count).
    columns: Vec<ObjectSet>,
}

impl FormalContext {
    /// Builds a context from name lists and incidence pairs
    /// `(object id, attribute id)`.
    ///
    /// Duplicate names and out-of-range pairs are rejected. Repeated pairs
    /// are harmless (the relation is a set).
    pub fn build(
        object_names: Vec<String>,
        attribute_names: Vec<String>,
        pairs: &[(usize, usize)],
    ) -> Result<Self> {
        let mut seen = HashSet::new();
        for name in &object_names {
            if !seen.insert(name) {
                return Err(Error::DuplicateObjectName(name.clone()));
            }
        }
        let mut seen = HashSet::new();
        for name in &attribute_names {
            if !seen.insert(name) {
                return Err(Error::DuplicateAttributeName(name.clone()));
            }
        }

        let objects = object_names.len();
        let attributes = attribute_names.len();
        let mut rows = vec![AttributeSet::empty(attributes); objects];
        let mut columns = vec![ObjectSet::empty(objects); attributes];
        for &(g, m) in pairs {
            if g >= objects || m >= attributes {
                return Err(Error::PairOutOfRange {
                    object: g,
                    attribute: m,
                    objects,
                    attributes,
                });
            }
            rows[g].insert(m);
            columns[m].insert(g);
        }

        Ok(FormalContext {
            object_names,
            attribute_names,
            rows,
            columns,
        })
    }

    pub fn object_count(&self) -> usize {
        self.object_names.len()
    }

    pub fn attribute_count(&self) -> usize {
        self.attribute_names.len()
    }

    pub fn object_names(&self) -> &[String] {
        &self.object_names
    }

    pub fn attribute_names(&self) -> &[String] {
        &self.attribute_names
    }

    pub fn object_name(&self, g: usize) -> &str {
        &self.object_names[g]
    }

    pub fn attribute_name(&self, m: usize) -> &str {
        &self.attribute_names[m]
    }

    pub fn object_index(&self, name: &str) -> Option<usize> {
        self.object_names.iter().position(|n| n == name)
    }

    pub fn attribute_index(&self, name: &str) -> Option<usize> {
        self.attribute_names.iter().position(|n| n == name)
    }

    pub fn has_incidence(&self, g: usize, m: usize) -> bool {
        self.rows[g].contains(m)
    }

    /// The attributes of object `g` (a row of the incidence table).
    pub fn object_intent(&self, g: usize) -> &AttributeSet {
        &self.rows[g]
    }

    /// The objects having attribute `m` (a column of the incidence table).
    pub fn attribute_extent(&self, m: usize) -> &ObjectSet {
        &self.columns[m]
    }

    /// All incidence pairs in (object id, attribute id) order.
    pub fn incidence_pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(g, row)| row.iter().map(move |m| (g, m)))
    }

    pub fn incidence_count(&self) -> usize {
        self.rows.iter().map(AttributeSet::len).sum()
    }

    /// Derivation A ↦ A′: the attributes common to every object of `A`.
    ///
    /// `A′ = {m ∈ M | ∀g ∈ A: (g, m) ∈ I}`, computed as the intersection of
    /// the member rows. The empty set derives to all of M: the universal
    /// quantification over no objects is vacuously true.
    pub fn derive_objects(&self, a: &ObjectSet) -> AttributeSet {
        assert_eq!(
            a.domain(),
            self.object_count(),
            "object set domain does not match context"
        );
        let mut out = AttributeSet::full(self.attribute_count());
        for g in a.iter() {
            out.intersect_with(&self.rows[g]);
        }
        out
    }

    /// Derivation B ↦ B′: the objects having every attribute of `B`.
    ///
    /// Dual of [`Self::derive_objects`]; the empty set derives to all of G.
    pub fn derive_attributes(&self, b: &AttributeSet) -> ObjectSet {
        assert_eq!(
            b.domain(),
            self.attribute_count(),
            "attribute set domain does not match context"
        );
        let mut out = ObjectSet::full(self.object_count());
        for m in b.iter() {
            out.intersect_with(&self.columns[m]);
        }
        out
    }

    /// Closure X ↦ X″ on attribute sets. Extensive, monotone, idempotent;
    /// its fixed points are exactly the concept intents.
    pub fn close_attributes(&self, x: &AttributeSet) -> AttributeSet {
        self.derive_objects(&self.derive_attributes(x))
    }

    /// Closure A ↦ A″ on object sets; fixed points are the concept extents.
    pub fn close_objects(&self, a: &ObjectSet) -> ObjectSet {
        self.derive_attributes(&self.derive_objects(a))
    }

    /// Formats a set of object ids as `{name, name, ..}`.
    pub fn format_objects(&self, a: &ObjectSet) -> String {
        format_names(a.iter().map(|g| self.object_name(g)))
    }

    /// Formats a set of attribute ids as `{name, name, ..}`.
    pub fn format_attributes(&self, b: &AttributeSet) -> String {
        format_names(b.iter().map(|m| self.attribute_name(m)))
    }
}

impl fmt::Debug for FormalContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "FormalContext({}x{}, {} incidences)",
            self.object_count(),
            self.attribute_count(),
            self.incidence_count()
        )
    }
}

fn format_names<'a>(names: impl Iterator<Item = &'a str>) -> String {
    let mut out = String::from("{");
    for (i, name) in names.enumerate() {
        if i > 0 {
            out.push_str(", ");
        }
        out.push_str(name);
    }
    out.push('}');
    out
}
