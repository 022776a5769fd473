use std::collections::HashMap;
use std::fmt;
use std::fs::File;
use std::io::{self, BufReader, Read};
use std::path::Path;
use std::str::FromStr;

use oxrdf::{NamedOrBlankNode, Term as OxTerm};
use oxttl::{NQuadsParser, TurtleParseError, TurtleParser};

use crate::graph::{GraphBuilder, TripleGraph};
use crate::term::{Term, RDF_LANG_STRING};

/// Serializations accepted by [`parse`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Syntax {
    Turtle,
    NTriples,
}

impl Syntax {
    pub fn as_str(self) -> &'static str {
        match self {
            Syntax::Turtle => "turtle",
            Syntax::NTriples => "ntriples",
        }
    }
}

impl fmt::Display for Syntax {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Syntax {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "turtle" | "ttl" => Ok(Syntax::Turtle),
            "ntriples" | "n-triples" | "nt" => Ok(Syntax::NTriples),
            other => Err(format!("unknown syntax {other:?}; expected turtle or ntriples")),
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum ParseError {
    #[error("{path}: {message}")]
    UnrecognizedSyntax { path: String, message: String },
    /// Line and column are 1-based.
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: u64,
        column: u64,
        message: String,
    },
    #[error("I/O error: {0}")]
    Io(#[from] io::Error),
}

/// Number of leading bytes [`detect_syntax`] looks at.
pub const SNIFF_LEN: usize = 1024;

/// Picks a parser from the file name and the first bytes of the document.
///
/// Known extensions win. Otherwise Turtle directives select Turtle, a head
/// whose every complete line looks like an N-Triples statement selects
/// N-Triples, and anything else falls back to Turtle.
pub fn detect_syntax(filename: &str, head: &[u8]) -> Result<Syntax, ParseError> {
    let ext = Path::new(filename)
        .extension()
        .and_then(|e| e.to_str())
        .map(str::to_ascii_lowercase);
    let unsupported = |format: &str| ParseError::UnrecognizedSyntax {
        path: filename.to_string(),
        message: format!(
            "{format} is not supported; convert the file to Turtle first \
             (for example `robot convert --input {filename} --output out.ttl` \
             or `riot --output=turtle {filename}`)"
        ),
    };
    match ext.as_deref() {
        Some("ttl" | "turtle") => return Ok(Syntax::Turtle),
        Some("nt" | "ntriples" | "nq") => return Ok(Syntax::NTriples),
        Some("owl" | "rdf" | "xml" | "owx") => return Err(unsupported("RDF/XML or OWL/XML")),
        Some("jsonld" | "json") => return Err(unsupported("JSON-LD")),
        Some("trig") => return Err(unsupported("TriG")),
        _ => {}
    }

    let head = &head[..head.len().min(SNIFF_LEN)];
    let text = String::from_utf8_lossy(head);
    let trimmed = text.trim_start_matches('\u{feff}').trim_start();
    if trimmed.starts_with("<?xml") || trimmed.starts_with("<rdf:RDF") {
        return Err(unsupported("RDF/XML"));
    }
    if trimmed.starts_with('{') || trimmed.starts_with('[') && trimmed.contains("\"@") {
        return Err(unsupported("JSON-LD"));
    }
    if has_turtle_directive(&text) {
        return Ok(Syntax::Turtle);
    }
    // The last line may be cut off by the sniff window, so skip it unless
    // the whole document fit.
    let mut lines: Vec<&str> = text.lines().collect();
    if head.len() == SNIFF_LEN && !text.ends_with('\n') {
        lines.pop();
    }
    let statements: Vec<&str> = lines
        .iter()
        .map(|l| l.trim())
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .collect();
    if !statements.is_empty() && statements.iter().all(|l| looks_like_ntriples(l)) {
        return Ok(Syntax::NTriples);
    }
    Ok(Syntax::Turtle)
}

fn has_turtle_directive(text: &str) -> bool {
    text.lines().map(str::trim_start).any(|l| {
        let lower = l.get(..7).map(str::to_ascii_lowercase);
        l.starts_with("@prefix")
            || l.starts_with("@base")
            || matches!(lower.as_deref(), Some("prefix ") | Some("prefix\t"))
            || l.get(..5).is_some_and(|p| p.eq_ignore_ascii_case("base "))
    })
}

/// Cheap structural check of one N-Triples (or N-Quads) line: an IRI or
/// blank subject, an IRI predicate, some object, and a final `.`.
fn looks_like_ntriples(line: &str) -> bool {
    let Some(body) = line.strip_suffix('.') else {
        return false;
    };
    let rest = body.trim_start();
    let Some(rest) = skip_node(rest) else {
        return false;
    };
    let rest = rest.trim_start();
    if !rest.starts_with('<') {
        return false;
    }
    let Some(rest) = skip_node(rest) else {
        return false;
    };
    let rest = rest.trim_start();
    !rest.is_empty() && (rest.starts_with('<') || rest.starts_with("_:") || rest.starts_with('"'))
}

fn skip_node(s: &str) -> Option<&str> {
    if let Some(rest) = s.strip_prefix('<') {
        let end = rest.find('>')?;
        let iri = &rest[..end];
        if iri.contains(char::is_whitespace) {
            return None;
        }
        Some(&rest[end + 1..])
    } else if let Some(rest) = s.strip_prefix("_:") {
        let end = rest.find(char::is_whitespace).unwrap_or(rest.len());
        (end > 0).then(|| &rest[end..])
    } else {
        None
    }
}

/// Parses a document into a [`TripleGraph`].
///
/// Input is consumed as a stream. Blank-node labels are replaced with
/// fresh ids (`b0`, `b1`, …) in order of first appearance, so identical
/// bytes always yield identical graphs. In N-Triples mode an optional
/// fourth (graph) term is accepted and dropped.
pub fn parse<R: Read>(source: R, syntax: Syntax) -> Result<TripleGraph, ParseError> {
    parse_with_base(source, syntax, None)
}

/// Like [`parse`], resolving relative IRIs in Turtle against `base_iri`.
pub fn parse_with_base<R: Read>(
    source: R,
    syntax: Syntax,
    base_iri: Option<&str>,
) -> Result<TripleGraph, ParseError> {
    let mut sink = Sink::default();
    match syntax {
        Syntax::Turtle => {
            let mut parser = TurtleParser::new();
            if let Some(base) = base_iri {
                parser = parser.with_base_iri(base).map_err(|e| ParseError::Syntax {
                    line: 0,
                    column: 0,
                    message: format!("invalid base IRI {base:?}: {e}"),
                })?;
            }
            let mut reader = parser.for_reader(source);
            for triple in reader.by_ref() {
                let triple = triple.map_err(convert_error)?;
                sink.push(triple.subject, triple.predicate.into_string(), triple.object);
            }
            for (prefix, ns) in reader.prefixes() {
                sink.builder.add_prefix(prefix, ns);
            }
        }
        Syntax::NTriples => {
            for quad in NQuadsParser::new().for_reader(source) {
                let quad = quad.map_err(convert_error)?;
                sink.push(quad.subject, quad.predicate.into_string(), quad.object);
            }
        }
    }
    Ok(sink.builder.build())
}

/// Opens, sniffs (unless `syntax` is given) and parses a file. Turtle
/// documents get the file's `file://` URL as base IRI.
pub fn parse_file(path: &Path, syntax: Option<Syntax>) -> Result<TripleGraph, ParseError> {
    let mut file = BufReader::with_capacity(1 << 16, File::open(path)?);
    let mut head = Vec::with_capacity(SNIFF_LEN);
    (&mut file).take(SNIFF_LEN as u64).read_to_end(&mut head)?;
    let syntax = match syntax {
        Some(s) => s,
        None => detect_syntax(&path.to_string_lossy(), &head)?,
    };
    let base = std::fs::canonicalize(path)
        .ok()
        .map(|abs| format!("file://{}", abs.display()))
        .filter(|b| !b.contains(char::is_whitespace));
    parse_with_base(io::Cursor::new(head).chain(file), syntax, base.as_deref())
}

fn convert_error(e: TurtleParseError) -> ParseError {
    match e {
        TurtleParseError::Io(e) => ParseError::Io(e),
        TurtleParseError::Syntax(e) => {
            let at = e.location().start;
            ParseError::Syntax {
                line: at.line + 1,
                column: at.column + 1,
                message: e.message().to_string(),
            }
        }
    }
}

#[derive(Default)]
struct Sink {
    builder: GraphBuilder,
    blanks: HashMap<String, String>,
}

impl Sink {
    fn blank(&mut self, label: &str) -> Term {
        let next = self.blanks.len();
        let id = self
            .blanks
            .entry(label.to_string())
            .or_insert_with(|| format!("b{next}"));
        Term::blank(id.clone())
    }

    fn push(&mut self, subject: NamedOrBlankNode, predicate: String, object: OxTerm) {
        let subject = match subject {
            NamedOrBlankNode::NamedNode(n) => Term::iri(n.into_string()),
            NamedOrBlankNode::BlankNode(b) => self.blank(b.as_str()),
        };
        let object = match object {
            OxTerm::NamedNode(n) => Term::iri(n.into_string()),
            OxTerm::BlankNode(b) => self.blank(b.as_str()),
            OxTerm::Literal(l) => {
                let (value, datatype, language) = l.destruct();
                match (language, datatype) {
                    (Some(lang), _) => Term::lang_literal(value, lang),
                    (None, Some(dt)) if dt.as_str() != RDF_LANG_STRING => {
                        Term::typed_literal(value, dt.into_string())
                    }
                    (None, _) => Term::literal(value),
                }
            }
        };
        self.builder.insert(subject, Term::iri(predicate), object);
    }
}
