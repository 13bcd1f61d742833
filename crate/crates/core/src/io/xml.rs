//! The BIN XML context format.
//!
//! Layout:
//!
//! ```xml
//! <?xml version="1.0" encoding="UTF-8"?>
//! <BIN name="..." nbObj="2" nbAtt="2" type="BinaryRelation">
//! <OBJS>
//! <OBJ id="0">first</OBJ>
//! ...
//! </OBJS>
//! <ATTS>
//! <ATT id="0">red</ATT>
//! ...
//! </ATTS>
//! <RELS>
//! <REL idObj="0" idAtt="1" />
//! ...
//! </RELS>
//! </BIN>
//! ```
//!
//! Ids are positional and must be exactly `0..n-1`; `nbObj`/`nbAtt` must
//! match the element counts; `type` must be `BinaryRelation`. The schema is
//! small and fixed, so parsing is done with a purpose-built scanner rather
//! than a general XML library: declarations and comments are skipped,
//! elements may come with arbitrary inter-element whitespace, and the five
//! named entities plus numeric character references are decoded in labels.

use crate::context::FormalContext;
use crate::error::{Error, Result};
use crate::io::{ContextDocument, ContextFormat};

const FORMAT: ContextFormat = ContextFormat::Xml;

pub fn parse_xml_context(bytes: &[u8]) -> Result<ContextDocument> {
    let text = std::str::from_utf8(bytes)
        .map_err(|e| Error::parse(FORMAT, None, format!("invalid UTF-8: {e}")))?;
    let mut scanner = Scanner::new(text);

    scanner.skip_misc();
    let bin = scanner.read_open_tag()?;
    bin.expect_name("BIN", &scanner)?;
    if bin.self_closing {
        return Err(scanner.error("BIN element must contain OBJS, ATTS and RELS"));
    }
    bin.expect_attrs(&["name", "nbObj", "nbAtt", "type"], &scanner)?;
    let name = bin.attr("name").unwrap();
    let nb_obj = parse_count(bin.attr("nbObj").unwrap(), "nbObj", &scanner)?;
    let nb_att = parse_count(bin.attr("nbAtt").unwrap(), "nbAtt", &scanner)?;
    let relation_type = bin.attr("type").unwrap();
    if relation_type != "BinaryRelation" {
        return Err(scanner.error(format!(
            "type must be \"BinaryRelation\", found {relation_type:?}"
        )));
    }
    if name.is_empty() {
        return Err(Error::EmptyDocumentName);
    }

    let object_names = parse_labelled_block(&mut scanner, "OBJS", "OBJ", "nbObj", nb_obj)?;
    let attribute_names = parse_labelled_block(&mut scanner, "ATTS", "ATT", "nbAtt", nb_att)?;
    let pairs = parse_rels(&mut scanner, nb_obj, nb_att)?;

    scanner.skip_misc();
    scanner.read_close_tag("BIN")?;
    scanner.skip_misc();
    if !scanner.at_end() {
        return Err(scanner.error("unexpected content after closing BIN"));
    }

    let context = FormalContext::build(object_names, attribute_names, &pairs)?;
    ContextDocument::new(name, context, FORMAT)
}

/// Parses `<OBJS>..</OBJS>` or `<ATTS>..</ATTS>`: `count` elements named
/// `item_tag`, each carrying a dense 0-based `id` and a text label.
fn parse_labelled_block(
    scanner: &mut Scanner,
    block_tag: &str,
    item_tag: &str,
    count_attr: &str,
    count: usize,
) -> Result<Vec<String>> {
    scanner.skip_misc();
    let block = scanner.read_open_tag()?;
    block.expect_name(block_tag, scanner)?;
    block.expect_attrs(&[], scanner)?;

    let mut labels: Vec<Option<String>> = vec![None; count];
    let mut seen = 0usize;
    if !block.self_closing {
        loop {
            scanner.skip_misc();
            if scanner.peek_close_tag() {
                scanner.read_close_tag(block_tag)?;
                break;
            }
            let item = scanner.read_open_tag()?;
            item.expect_name(item_tag, scanner)?;
            item.expect_attrs(&["id"], scanner)?;
            let id = parse_count(item.attr("id").unwrap(), "id", scanner)?;
            let label = if item.self_closing {
                String::new()
            } else {
                let text = scanner.read_text()?;
                scanner.read_close_tag(item_tag)?;
                text
            };
            if id >= count {
                return Err(scanner.error(format!(
                    "{item_tag} id {id} out of range ({count_attr} is {count})"
                )));
            }
            if labels[id].is_some() {
                return Err(scanner.error(format!("duplicate {item_tag} id {id}")));
            }
            labels[id] = Some(label);
            seen += 1;
        }
    }

    if seen != count {
        return Err(scanner.error(format!(
            "{count_attr} is {count} but {seen} {item_tag} elements found"
        )));
    }
    // counts match, ids are in range and distinct, hence dense
    Ok(labels.into_iter().map(Option::unwrap).collect())
}

fn parse_rels(scanner: &mut Scanner, nb_obj: usize, nb_att: usize) -> Result<Vec<(usize, usize)>> {
    scanner.skip_misc();
    let block = scanner.read_open_tag()?;
    block.expect_name("RELS", scanner)?;
    block.expect_attrs(&[], scanner)?;

    let mut pairs = Vec::new();
    if !block.self_closing {
        loop {
            scanner.skip_misc();
            if scanner.peek_close_tag() {
                scanner.read_close_tag("RELS")?;
                break;
            }
            let rel = scanner.read_open_tag()?;
            rel.expect_name("REL", scanner)?;
            rel.expect_attrs(&["idObj", "idAtt"], scanner)?;
            let id_obj = parse_count(rel.attr("idObj").unwrap(), "idObj", scanner)?;
            let id_att = parse_count(rel.attr("idAtt").unwrap(), "idAtt", scanner)?;
            if !rel.self_closing {
                scanner.skip_misc();
                scanner.read_close_tag("REL")?;
            }
            let describe = || format!("REL idObj=\"{id_obj}\" idAtt=\"{id_att}\"");
            if id_obj >= nb_obj {
                return Err(scanner.error(format!(
                    "{}: object id {id_obj} out of range (nbObj is {nb_obj})",
                    describe()
                )));
            }
            if id_att >= nb_att {
                return Err(scanner.error(format!(
                    "{}: attribute id {id_att} out of range (nbAtt is {nb_att})",
                    describe()
                )));
            }
            pairs.push((id_obj, id_att));
        }
    }
    Ok(pairs)
}

fn parse_count(value: &str, what: &str, scanner: &Scanner) -> Result<usize> {
    value
        .parse::<usize>()
        .map_err(|_| scanner.error(format!("{what} is not a non-negative integer: {value:?}")))
}

/// Serializes in the canonical layout shown in the module docs: one element
/// per line, LF endings, ids dense in order, RELS sorted by (idObj, idAtt).
pub fn serialize_xml_context(doc: &ContextDocument) -> Result<Vec<u8>> {
    let ctx = doc.context();
    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    out.push_str(&format!(
        "<BIN name=\"{}\" nbObj=\"{}\" nbAtt=\"{}\" type=\"BinaryRelation\">\n",
        escape_attr(doc.name()),
        ctx.object_count(),
        ctx.attribute_count()
    ));

    out.push_str("<OBJS>\n");
    for (id, name) in ctx.object_names().iter().enumerate() {
        out.push_str(&format!("<OBJ id=\"{id}\">{}</OBJ>\n", escape_text(name)));
    }
    out.push_str("</OBJS>\n<ATTS>\n");
    for (id, name) in ctx.attribute_names().iter().enumerate() {
        out.push_str(&format!("<ATT id=\"{id}\">{}</ATT>\n", escape_text(name)));
    }
    out.push_str("</ATTS>\n<RELS>\n");
    // incidence_pairs already yields (idObj, idAtt) in sorted order
    for (g, m) in ctx.incidence_pairs() {
        out.push_str(&format!("<REL idObj=\"{g}\" idAtt=\"{m}\" />\n"));
    }
    out.push_str("</RELS>\n</BIN>\n");
    Ok(out.into_bytes())
}

fn escape_attr(value: &str) -> String {
    let mut out = String::with_capacity(value.len());
    for c in value.chars() {
        match c {
            '&' => out.push_str("&amp;"),
            '<' => out.push_str("&lt;"),
            '>' => out.push_str("&gt;"),
            '"' => out.push_str("&quot;"),
            _ => out.push(c),
        }
    }
    out
}

fn escape_text(value: &str) -> String {
    let mut out = String::with_capacity(value.len());
    for c in value.chars() {
        match c {
            '&' => out.push_str("&amp;"),
            '<' => out.push_str("&lt;"),
            '>' => out.push_str("&gt;"),
            _ => out.push(c),
        }
    }
    out
}

struct OpenTag {
    name: String,
    attrs: Vec<(String, String)>,
    self_closing: bool,
    line: usize,
}

impl OpenTag {
    fn attr(&self, name: &str) -> Option<&str> {
        self.attrs
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, v)| v.as_str())
    }

    fn expect_name(&self, expected: &str, scanner: &Scanner) -> Result<()> {
        if self.name != expected {
            return Err(scanner.error_at(
                self.line,
                format!("expected <{expected}>, found <{}>", self.name),
            ));
        }
        Ok(())
    }

    /// Requires exactly the given attributes, in any order.
    fn expect_attrs(&self, expected: &[&str], scanner: &Scanner) -> Result<()> {
        for name in expected {
            if self.attr(name).is_none() {
                return Err(scanner.error_at(
                    self.line,
                    format!("<{}> is missing the {name} attribute", self.name),
                ));
            }
        }
        for (name, _) in &self.attrs {
            if !expected.contains(&name.as_str()) {
                return Err(scanner.error_at(
                    self.line,
                    format!("<{}> has an unexpected attribute {name:?}", self.name),
                ));
            }
        }
        if self.attrs.len() != expected.len() {
            return Err(scanner.error_at(
                self.line,
                format!("<{}> repeats an attribute", self.name),
            ));
        }
        Ok(())
    }
}

struct Scanner<'a> {
    input: &'a str,
    pos: usize,
    line: usize,
}

impl<'a> Scanner<'a> {
    fn new(input: &'a str) -> Self {
        Scanner {
            input,
            pos: 0,
            line: 1,
        }
    }

    fn error(&self, message: impl Into<String>) -> Error {
        Error::parse(FORMAT, self.line, message.into())
    }

    fn error_at(&self, line: usize, message: impl Into<String>) -> Error {
        Error::parse(FORMAT, line, message.into())
    }

    fn rest(&self) -> &'a str {
        &self.input[self.pos..]
    }

    fn at_end(&self) -> bool {
        self.pos >= self.input.len()
    }

    fn peek(&self) -> Option<char> {
        self.rest().chars().next()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += c.len_utf8();
        if c == '\n' {
            self.line += 1;
        }
        Some(c)
    }

    fn eat(&mut self, expected: char) -> Result<()> {
        match self.bump() {
            Some(c) if c == expected => Ok(()),
            Some(c) => Err(self.error(format!("expected {expected:?}, found {c:?}"))),
            None => Err(self.error(format!("expected {expected:?}, found end of input"))),
        }
    }

    fn skip_whitespace(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_whitespace()) {
            self.bump();
        }
    }

    /// Skips whitespace, XML declarations / processing instructions, and
    /// comments.
    fn skip_misc(&mut self) {
        loop {
            self.skip_whitespace();
            if self.rest().starts_with("<?") {
                self.skip_until("?>");
            } else if self.rest().starts_with("<!--") {
                self.skip_until("-->");
            } else {
                return;
            }
        }
    }

    fn skip_until(&mut self, terminator: &str) {
        while !self.at_end() && !self.rest().starts_with(terminator) {
            self.bump();
        }
        for _ in 0..terminator.len() {
            self.bump();
        }
    }

    fn peek_close_tag(&self) -> bool {
        self.rest().starts_with("</")
    }

    fn read_name(&mut self) -> Result<String> {
        let mut name = String::new();
        while let Some(c) = self.peek() {
            if c.is_ascii_alphanumeric() || matches!(c, '_' | '-' | ':' | '.') {
                name.push(c);
                self.bump();
            } else {
                break;
            }
        }
        if name.is_empty() {
            return Err(self.error("expected a name"));
        }
        Ok(name)
    }

    fn read_open_tag(&mut self) -> Result<OpenTag> {
        let line = self.line;
        self.eat('<')?;
        let name = self.read_name()?;
        let mut attrs = Vec::new();
        loop {
            self.skip_whitespace();
            match self.peek() {
                Some('>') => {
                    self.bump();
                    return Ok(OpenTag {
                        name,
                        attrs,
                        self_closing: false,
                        line,
                    });
                }
                Some('/') => {
                    self.bump();
                    self.eat('>')?;
                    return Ok(OpenTag {
                        name,
                        attrs,
                        self_closing: true,
                        line,
                    });
                }
                Some(_) => {
                    let attr_name = self.read_name()?;
                    self.skip_whitespace();
                    self.eat('=')?;
                    self.skip_whitespace();
                    let quote = match self.bump() {
                        Some(q @ ('"' | '\'')) => q,
                        _ => return Err(self.error("attribute value must be quoted")),
                    };
                    let mut raw = String::new();
                    loop {
                        match self.bump() {
                            Some(c) if c == quote => break,
                            Some(c) => raw.push(c),
                            None => {
                                return Err(self.error("unterminated attribute value"));
                            }
                        }
                    }
                    attrs.push((attr_name, self.unescape(&raw)?));
                }
                None => return Err(self.error("unterminated tag")),
            }
        }
    }

    fn read_close_tag(&mut self, expected: &str) -> Result<()> {
        self.eat('<')?;
        self.eat('/')?;
        let name = self.read_name()?;
        self.skip_whitespace();
        self.eat('>')?;
        if name != expected {
            return Err(self.error(format!("expected </{expected}>, found </{name}>")));
        }
        Ok(())
    }

    /// Text content up to the next `<`, entities decoded, whitespace kept
    /// verbatim (labels are opaque).
    fn read_text(&mut self) -> Result<String> {
        let mut raw = String::new();
        while let Some(c) = self.peek() {
            if c == '<' {
                break;
            }
            raw.push(c);
            self.bump();
        }
        self.unescape(&raw)
    }

    fn unescape(&self, raw: &str) -> Result<String> {
        let mut out = String::with_capacity(raw.len());
        let mut pos = 0;
        while let Some(offset) = raw[pos..].find('&') {
            let amp = pos + offset;
            out.push_str(&raw[pos..amp]);
            let rest = &raw[amp + 1..];
            let end = rest
                .find(';')
                .ok_or_else(|| self.error("unterminated entity reference"))?;
            let entity = &rest[..end];
            out.push(decode_entity(entity).ok_or_else(|| {
                self.error(format!("unknown entity reference \"&{entity};\""))
            })?);
            pos = amp + 1 + end + 1;
        }
        out.push_str(&raw[pos..]);
        Ok(out)
    }
}

fn decode_entity(entity: &str) -> Option<char> {
    match entity {
        "amp" => Some('&'),
        "lt" => Some('<'),
        "gt" => Some('>'),
        "quot" => Some('"'),
        "apos" => Some('\''),
        _ => {
            let code = entity.strip_prefix("#x").map_or_else(
                || entity.strip_prefix('#')?.parse::<u32>().ok(),
                |hex| u32::from_str_radix(hex, 16).ok(),
            )?;
            char::from_u32(code)
        }
    }
}
