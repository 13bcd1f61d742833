//! Incident-record ingestion: event rows → formal context.
//!
//! Each record pairs a location label with a crime-type label (plus an
//! optional timestamp that is carried but never interpreted). Locations
//! become objects, crime types become attributes, and an incidence mark is
//! set as soon as at least one record pairs the two — the context is binary,
//! frequencies are deliberately discarded.

use std::collections::HashMap;
use std::io::Read;

use crate::context::FormalContext;
use crate::error::{Error, Result};
use crate::io::ContextFormat;

/// One incident event. Labels are compared case-sensitively after trimming
/// surrounding whitespace.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IncidentRecord {
    pub location: String,
    pub crime_type: String,
    /// ISO-8601 text, carried through unparsed.
    pub timestamp: Option<String>,
}

impl IncidentRecord {
    pub fn new(
        location: impl Into<String>,
        crime_type: impl Into<String>,
        timestamp: Option<String>,
    ) -> Self {
        IncidentRecord {
            location: location.into(),
            crime_type: crime_type.into(),
            timestamp,
        }
    }
}

/// Builds a formal context from incident records.
///
/// Objects are the distinct locations, attributes the distinct crime types.
/// With an explicit order, labels follow it exactly and records mentioning
/// labels outside it are rejected; without one, labels appear in
/// first-appearance order. Repeated identical records collapse to a single
/// incidence mark, so the result is invariant under record multiplicity and,
/// when both orders are explicit, under record shuffling.
pub fn incidents_to_context(
    records: &[IncidentRecord],
    object_order: Option<&[String]>,
    attribute_order: Option<&[String]>,
) -> Result<FormalContext> {
    if records.is_empty() && (object_order.is_none() || attribute_order.is_none()) {
        return Err(Error::EmptyIngest);
    }

    let mut objects = LabelIndex::new(object_order);
    let mut attributes = LabelIndex::new(attribute_order);
    let mut pairs = Vec::with_capacity(records.len());

    for (index, record) in records.iter().enumerate() {
        let location = record.location.trim();
        if location.is_empty() {
            return Err(Error::EmptyIncidentLabel { index, field: "location" });
        }
        let crime_type = record.crime_type.trim();
        if crime_type.is_empty() {
            return Err(Error::EmptyIncidentLabel { index, field: "crime_type" });
        }
        let g = objects.resolve(location, index, "object")?;
        let m = attributes.resolve(crime_type, index, "attribute")?;
        pairs.push((g, m));
    }

    FormalContext::build(objects.into_names(), attributes.into_names(), &pairs)
}

/// Label-to-id assignment, either frozen by an explicit order or grown in
/// first-appearance order.
struct LabelIndex {
    names: Vec<String>,
    ids: HashMap<String, usize>,
    explicit: bool,
}

impl LabelIndex {
    fn new(order: Option<&[String]>) -> Self {
        match order {
            Some(names) => LabelIndex {
                ids: names
                    .iter()
                    .enumerate()
                    .map(|(i, n)| (n.clone(), i))
                    .collect(),
                names: names.to_vec(),
                explicit: true,
            },
            None => LabelIndex {
                names: Vec::new(),
                ids: HashMap::new(),
                explicit: false,
            },
        }
    }

    fn resolve(&mut self, label: &str, record_index: usize, kind: &'static str) -> Result<usize> {
        if let Some(&id) = self.ids.get(label) {
            return Ok(id);
        }
        if self.explicit {
            return Err(Error::LabelNotInOrder {
                index: record_index,
                label: label.to_string(),
                kind,
            });
        }
        let id = self.names.len();
        self.names.push(label.to_string());
        self.ids.insert(label.to_string(), id);
        Ok(id)
    }

    fn into_names(self) -> Vec<String> {
        self.names
    }
}

/// Reads incident records from CSV with header
/// `location,crime_type[,timestamp]`. Fields are trimmed; an empty or
/// missing timestamp field yields `None`.
pub fn read_incidents_csv<R: Read>(reader: R) -> Result<Vec<IncidentRecord>> {
    let mut csv_reader = csv::ReaderBuilder::new()
        .has_headers(true)
        .from_reader(reader);

    let headers = csv_reader
        .headers()
        .map_err(|e| csv_error(ContextFormat::Csv, e))?
        .clone();
    let header_fields: Vec<&str> = headers.iter().map(str::trim).collect();
    let valid = header_fields == ["location", "crime_type"]
        || header_fields == ["location", "crime_type", "timestamp"];
    if !valid {
        return Err(Error::parse(
            ContextFormat::Csv,
            1,
            format!(
                "expected header \"location,crime_type[,timestamp]\", found {:?}",
                header_fields.join(",")
            ),
        ));
    }

    let mut records = Vec::new();
    for row in csv_reader.records() {
        let row = row.map_err(|e| csv_error(ContextFormat::Csv, e))?;
        let location = row.get(0).unwrap_or("").trim().to_string();
        let crime_type = row.get(1).unwrap_or("").trim().to_string();
        let timestamp = row
            .get(2)
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(String::from);
        records.push(IncidentRecord {
            location,
            crime_type,
            timestamp,
        });
    }
    Ok(records)
}

pub(crate) fn csv_error(format: ContextFormat, error: csv::Error) -> Error {
    let line = error.position().map(|p| p.line() as usize);
    Error::parse(format, line, error.to_string())
}
