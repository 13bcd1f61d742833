//! The CSV cross-table context format.
//!
//! The first row is an empty cell followed by the attribute names; every
//! further row is an object name followed by one cell per attribute, `x`
//! for an incidence and empty otherwise. Quoting follows common CSV
//! conventions (handled by the `csv` crate), so names may contain commas,
//! quotes, or line breaks.

use crate::context::FormalContext;
use crate::error::{Error, Result};
use crate::ingest::csv_error;
use crate::io::{ContextDocument, ContextFormat, DEFAULT_DOCUMENT_NAME};

const FORMAT: ContextFormat = ContextFormat::Csv;

/// Cross-table CSV carries no document name; the result is named
/// "context".
pub fn parse_csv_context(bytes: &[u8]) -> Result<ContextDocument> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .from_reader(bytes);

    let mut records = reader.records();
    let header = match records.next() {
        Some(record) => record.map_err(|e| csv_error(FORMAT, e))?,
        None => return Err(Error::parse(FORMAT, None, "empty document")),
    };
    let mut header_cells = header.iter();
    let corner = header_cells.next().unwrap_or("");
    if !corner.is_empty() {
        return Err(Error::parse(
            FORMAT,
            1,
            format!("first header cell must be empty, found {corner:?}"),
        ));
    }
    let attribute_names: Vec<String> = header_cells.map(String::from).collect();

    let mut object_names = Vec::new();
    let mut pairs = Vec::new();
    for record in records {
        let record = record.map_err(|e| csv_error(FORMAT, e))?;
        let line = record.position().map(|p| p.line() as usize);
        let mut cells = record.iter();
        let object_name = cells.next().unwrap_or("").to_string();
        let g = object_names.len();
        for (m, cell) in cells.enumerate() {
            match cell {
                "x" => pairs.push((g, m)),
                "" => {}
                other => {
                    return Err(Error::parse(
                        FORMAT,
                        line,
                        format!(
                            "cell for object {object_name:?}, attribute {:?} must be \"x\" or empty, found {other:?}",
                            attribute_names.get(m).map(String::as_str).unwrap_or("?")
                        ),
                    ));
                }
            }
        }
        object_names.push(object_name);
    }

    let context = FormalContext::build(object_names, attribute_names, &pairs)?;
    ContextDocument::new(DEFAULT_DOCUMENT_NAME, context, FORMAT)
}

pub fn serialize_csv_context(doc: &ContextDocument) -> Result<Vec<u8>> {
    let ctx = doc.context();
    let mut writer = csv::Writer::from_writer(Vec::new());

    let mut header = vec![String::new()];
    header.extend(ctx.attribute_names().iter().cloned());
    writer
        .write_record(&header)
        .map_err(serialize_error)?;

    for g in 0..ctx.object_count() {
        let mut row = Vec::with_capacity(ctx.attribute_count() + 1);
        row.push(ctx.object_name(g).to_string());
        for m in 0..ctx.attribute_count() {
            row.push(if ctx.has_incidence(g, m) { "x" } else { "" }.to_string());
        }
        writer.write_record(&row).map_err(serialize_error)?;
    }

    writer.into_inner().map_err(|e| Error::Serialize {
        format: FORMAT,
        message: e.to_string(),
    })
}

fn serialize_error(error: csv::Error) -> Error {
    Error::Serialize {
        format: FORMAT,
        message: error.to_string(),
    }
}
