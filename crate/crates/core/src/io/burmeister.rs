//! The Burmeister-style plain-text context format (`.cxt`).
//!
//! Layout, one item per line, LF endings:
//!
//! ```text
//! B
//! <name>
//! <object count>
//! <attribute count>
//! <blank>
//! <object name> x |G|
//! <attribute name> x |M|
//! <row of X/.> x |G|
//! ```
//!
//! The format is line-oriented, so names containing line breaks cannot be
//! written and are rejected at serialization time. Parsing accepts CRLF
//! input by stripping one trailing `\r` per line; an empty name line falls
//! back to the default document name for interoperability with headerless
//! files.

use crate::context::FormalContext;
use crate::error::{Error, Result};
use crate::io::{ContextDocument, ContextFormat, DEFAULT_DOCUMENT_NAME};

const FORMAT: ContextFormat = ContextFormat::Burmeister;

pub fn parse_burmeister(bytes: &[u8]) -> Result<ContextDocument> {
    let text = std::str::from_utf8(bytes)
        .map_err(|e| Error::parse(FORMAT, None, format!("invalid UTF-8: {e}")))?;
    let mut lines = Lines::new(text);

    let magic = lines.next_line("format marker")?;
    if magic != "B" {
        return Err(lines.error(format!("expected format marker \"B\", found {magic:?}")));
    }
    let name = lines.next_line("context name")?.to_string();
    let object_count = lines.next_count("object count")?;
    let attribute_count = lines.next_count("attribute count")?;
    let blank = lines.next_line("separator line")?;
    if !blank.is_empty() {
        return Err(lines.error(format!("expected a blank separator line, found {blank:?}")));
    }

    let mut object_names = Vec::with_capacity(object_count);
    for _ in 0..object_count {
        object_names.push(lines.next_line("object name")?.to_string());
    }
    let mut attribute_names = Vec::with_capacity(attribute_count);
    for _ in 0..attribute_count {
        attribute_names.push(lines.next_line("attribute name")?.to_string());
    }

    let mut pairs = Vec::new();
    for g in 0..object_count {
        let row = lines.next_line("incidence row")?;
        let cells: Vec<char> = row.chars().collect();
        if cells.len() != attribute_count {
            return Err(lines.error(format!(
                "row for object {:?} has {} cells, expected {attribute_count}",
                object_names[g],
                cells.len()
            )));
        }
        for (m, &cell) in cells.iter().enumerate() {
            match cell {
                'X' => pairs.push((g, m)),
                '.' => {}
                other => {
                    return Err(lines.error(format!(
                        "row for object {:?} contains {other:?}, expected 'X' or '.'",
                        object_names[g]
                    )));
                }
            }
        }
    }
    lines.expect_end()?;

    let name = if name.is_empty() {
        DEFAULT_DOCUMENT_NAME.to_string()
    } else {
        name
    };
    let context = FormalContext::build(object_names, attribute_names, &pairs)?;
    ContextDocument::new(name, context, FORMAT)
}

pub fn serialize_burmeister(doc: &ContextDocument) -> Result<Vec<u8>> {
    let ctx = doc.context();
    check_line(doc.name(), "context name")?;
    for name in ctx.object_names() {
        check_line(name, "object name")?;
    }
    for name in ctx.attribute_names() {
        check_line(name, "attribute name")?;
    }

    let mut out = String::new();
    out.push_str("B\n");
    out.push_str(doc.name());
    out.push('\n');
    out.push_str(&format!("{}\n{}\n\n", ctx.object_count(), ctx.attribute_count()));
    for name in ctx.object_names() {
        out.push_str(name);
        out.push('\n');
    }
    for name in ctx.attribute_names() {
        out.push_str(name);
        out.push('\n');
    }
    for g in 0..ctx.object_count() {
        for m in 0..ctx.attribute_count() {
            out.push(if ctx.has_incidence(g, m) { 'X' } else { '.' });
        }
        out.push('\n');
    }
    Ok(out.into_bytes())
}

fn check_line(value: &str, what: &str) -> Result<()> {
    if value.contains('\n') || value.contains('\r') {
        return Err(Error::Serialize {
            format: FORMAT,
            message: format!("{what} {value:?} contains a line break"),
        });
    }
    Ok(())
}

struct Lines<'a> {
    lines: std::str::Split<'a, char>,
    current: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        Lines {
            lines: text.split('\n'),
            current: 0,
        }
    }

    fn error(&self, message: impl Into<String>) -> Error {
        Error::parse(FORMAT, self.current, message.into())
    }

    fn next_line(&mut self, what: &str) -> Result<&'a str> {
        self.current += 1;
        match self.lines.next() {
            Some(line) => Ok(line.strip_suffix('\r').unwrap_or(line)),
            None => Err(self.error(format!("missing {what}"))),
        }
    }

    fn next_count(&mut self, what: &str) -> Result<usize> {
        let line = self.next_line(what)?;
        line.trim()
            .parse::<usize>()
            .map_err(|_| self.error(format!("{what} is not a non-negative integer: {line:?}")))
    }

    /// Only an optional final empty line (from the trailing LF) may remain.
    fn expect_end(&mut self) -> Result<()> {
        for line in self.lines.by_ref() {
            self.current += 1;
            if !line.is_empty() {
                return Err(self.error(format!("unexpected trailing content: {line:?}")));
            }
        }
        Ok(())
    }
}
