use thiserror::Error;

use crate::io::ContextFormat;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("duplicate object name {0:?}")]
    DuplicateObjectName(String),

    #[error("duplicate attribute name {0:?}")]
    DuplicateAttributeName(String),

    #[error("incidence pair ({object}, {attribute}) out of range for a {objects}x{attributes} context")]
    PairOutOfRange {
        object: usize,
        attribute: usize,
        objects: usize,
        attributes: usize,
    },

    #[error("id {index} out of range (domain size {domain})")]
    IndexOutOfRange { index: usize, domain: usize },

    #[error("operands belong to different contexts ({left_objects}x{left_attributes} vs {right_objects}x{right_attributes})")]
    MismatchedContext {
        left_objects: usize,
        left_attributes: usize,
        right_objects: usize,
        right_attributes: usize,
    },

    #[error("attribute sets cover different attribute spaces ({left} vs {right})")]
    MismatchedAttributeSpace { left: usize, right: usize },

    #[error("unknown attribute label {0:?}")]
    UnknownAttribute(String),

    #[error("unknown object label {0:?}")]
    UnknownObject(String),

    #[error("context document name must not be empty")]
    EmptyDocumentName,

    #[error("incident record {index}: empty {field} label")]
    EmptyIncidentLabel { index: usize, field: &'static str },

    #[error("incident record {index}: {label:?} does not occur in the explicit {kind} order")]
    LabelNotInOrder {
        index: usize,
        label: String,
        kind: &'static str,
    },

    #[error("no incident records and no explicit object/attribute orders given")]
    EmptyIngest,

    #[error("{format} parse error{}: {message}", line_suffix(.line))]
    Parse {
        format: ContextFormat,
        line: Option<usize>,
        message: String,
    },

    #[error("{format} serialize error: {message}")]
    Serialize {
        format: ContextFormat,
        message: String,
    },

    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),
}

fn line_suffix(line: &Option<usize>) -> String {
    match line {
        Some(n) => format!(" at line {n}"),
        None => String::new(),
    }
}

impl Error {
    pub(crate) fn parse(format: ContextFormat, line: impl Into<Option<usize>>, message: impl Into<String>) -> Self {
        Error::Parse {
            format,
            line: line.into(),
            message: message.into(),
        }
    }
}
