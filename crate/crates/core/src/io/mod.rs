//! Context file formats: BIN XML, CSV cross-table, and Burmeister text.
//!
//! All three serializers emit UTF-8 with LF line endings and a canonical
//! element/field order, so serialized output is byte-stable and fit for
//! golden files. Parsers validate and reject; they never repair, truncate,
//! or pad.

use std::fmt;
use std::path::Path;

use crate::context::FormalContext;
use crate::error::{Error, Result};

mod burmeister;
mod csv_table;
mod xml;

pub use burmeister::{parse_burmeister, serialize_burmeister};
pub use csv_table::{parse_csv_context, serialize_csv_context};
pub use xml::{parse_xml_context, serialize_xml_context};

/// The three supported context file formats.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ContextFormat {
    Xml,
    Csv,
    Burmeister,
}

impl ContextFormat {
    /// Infers the format from a file extension: `.xml`, `.csv`, or `.cxt`.
    pub fn from_extension(path: &Path) -> Option<ContextFormat> {
        match path.extension()?.to_str()? {
            "xml" => Some(ContextFormat::Xml),
            "csv" => Some(ContextFormat::Csv),
            "cxt" => Some(ContextFormat::Burmeister),
            _ => None,
        }
    }
}

impl fmt::Display for ContextFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ContextFormat::Xml => "xml",
            ContextFormat::Csv => "csv",
            ContextFormat::Burmeister => "cxt",
        })
    }
}

/// A named formal context as read from, or destined for, a file.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ContextDocument {
    name: String,
    context: FormalContext,
    source_format: ContextFormat,
}

impl ContextDocument {
    /// Rejects empty names; everything else about the name is opaque.
    pub fn new(
        name: impl Into<String>,
        context: FormalContext,
        source_format: ContextFormat,
    ) -> Result<Self> {
        let name = name.into();
        if name.is_empty() {
            return Err(Error::EmptyDocumentName);
        }
        Ok(ContextDocument {
            name,
            context,
            source_format,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn context(&self) -> &FormalContext {
        &self.context
    }

    pub fn source_format(&self) -> ContextFormat {
        self.source_format
    }

    pub fn into_context(self) -> FormalContext {
        self.context
    }

    /// Same document under a different name.
    pub fn renamed(self, name: impl Into<String>) -> Result<Self> {
        ContextDocument::new(name, self.context, self.source_format)
    }
}

/// Parses `bytes` in the given format.
pub fn parse_context(bytes: &[u8], format: ContextFormat) -> Result<ContextDocument> {
    match format {
        ContextFormat::Xml => parse_xml_context(bytes),
        ContextFormat::Csv => parse_csv_context(bytes),
        ContextFormat::Burmeister => parse_burmeister(bytes),
    }
}

/// Serializes `doc` in the given format (not necessarily its source format).
pub fn serialize_context(doc: &ContextDocument, format: ContextFormat) -> Result<Vec<u8>> {
    match format {
        ContextFormat::Xml => serialize_xml_context(doc),
        ContextFormat::Csv => serialize_csv_context(doc),
        ContextFormat::Burmeister => serialize_burmeister(doc),
    }
}

/// Default document name for formats that do not carry one.
pub(crate) const DEFAULT_DOCUMENT_NAME: &str = "context";
