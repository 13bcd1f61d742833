//! Formal concept analysis over binary object×attribute data.
//!
//! The crate takes a formal context — objects, attributes, and an incidence
//! relation, e.g. geographic locations × incident categories — and computes
//! the two classic outputs: the concept lattice (all maximal
//! object-set/attribute-set rectangles, ordered by extent inclusion) and the
//! canonical basis of attribute implications. Around that core sit parsers
//! and serializers for three context file formats, an incident-log ingester,
//! and DOT/report rendering of the lattice.
//!
//! ```
//! use fca_core::{build_lattice, FormalContext};
//!
//! let ctx = FormalContext::build(
//!     vec!["north".into(), "south".into()],
//!     vec!["burglary".into(), "arson".into()],
//!     &[(0, 0), (1, 1)],
//! )?;
//! // a diamond: top, one concept per district, bottom
//! let lattice = build_lattice(&ctx);
//! assert_eq!(lattice.len(), 4);
//! assert_eq!(lattice.covers().len(), 4);
//! # Ok::<(), fca_core::Error>(())
//! ```

pub mod bitset;
pub mod context;
pub mod error;
pub mod implications;
pub mod ingest;
pub mod io;
pub mod lattice;
pub mod render;

pub use context::{AttributeSet, FormalContext, ObjectSet};
pub use error::{Error, Result};
pub use implications::{
    attributes_independent, implication_basis, implication_holds, syntactic_closure, Implication,
};
pub use ingest::{incidents_to_context, read_incidents_csv, IncidentRecord};
pub use io::{parse_context, serialize_context, ContextDocument, ContextFormat};
pub use lattice::{
    attribute_concept, build_lattice, concept_leq, enumerate_concepts, join, meet,
    object_concept, ConceptLattice, FormalConcept,
};
pub use render::{lattice_to_dot, pattern_report, DotOptions, LabelMode, RankDir};
