use std::fmt;

/// The three RDF term kinds. Declaration order fixes the sort order
/// of terms: IRIs first, then blank nodes, then literals.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TermKind {
    Iri,
    Blank,
    Literal,
}

/// An RDF term.
///
/// `value` holds the full IRI, the blank-node id (without the `_:` prefix)
/// or the lexical form of a literal. Plain `xsd:string` literals carry no
/// datatype, and language-tagged literals carry only their tag.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Term {
    kind: TermKind,
    value: String,
    datatype: Option<String>,
    language: Option<String>,
}

pub(crate) const XSD_STRING: &str = "http://www.w3.org/2001/XMLSchema#string";
pub(crate) const RDF_LANG_STRING: &str = "http://www.w3.org/1999/02/22-rdf-syntax-ns#langString";

impl Term {
    /// Builds an IRI term.
    ///
    /// # Panics
    ///
    /// Panics when `iri` has no scheme separator; IRIs are stored absolute.
    pub fn iri(iri: impl Into<String>) -> Self {
        let value = iri.into();
        assert!(
            is_absolute_iri(&value),
            "IRI terms must be absolute, got {value:?}"
        );
        Self {
            kind: TermKind::Iri,
            value,
            datatype: None,
            language: None,
        }
    }

    pub fn blank(id: impl Into<String>) -> Self {
        Self {
            kind: TermKind::Blank,
            value: id.into(),
            datatype: None,
            language: None,
        }
    }

    /// A plain (`xsd:string`) literal.
    pub fn literal(lexical: impl Into<String>) -> Self {
        Self {
            kind: TermKind::Literal,
            value: lexical.into(),
            datatype: None,
            language: None,
        }
    }

    pub fn lang_literal(lexical: impl Into<String>, language: impl Into<String>) -> Self {
        Self {
            kind: TermKind::Literal,
            value: lexical.into(),
            datatype: None,
            language: Some(language.into().to_ascii_lowercase()),
        }
    }

    /// A typed literal. `xsd:string` collapses to a plain literal.
    pub fn typed_literal(lexical: impl Into<String>, datatype: impl Into<String>) -> Self {
        let datatype = datatype.into();
        let datatype = (datatype != XSD_STRING).then_some(datatype);
        Self {
            kind: TermKind::Literal,
            value: lexical.into(),
            datatype,
            language: None,
        }
    }

    pub fn kind(&self) -> TermKind {
        self.kind
    }

    pub fn value(&self) -> &str {
        &self.value
    }

    pub fn datatype(&self) -> Option<&str> {
        self.datatype.as_deref()
    }

    pub fn language(&self) -> Option<&str> {
        self.language.as_deref()
    }

    pub fn is_iri(&self) -> bool {
        self.kind == TermKind::Iri
    }

    pub fn is_blank(&self) -> bool {
        self.kind == TermKind::Blank
    }

    pub fn is_literal(&self) -> bool {
        self.kind == TermKind::Literal
    }

    /// The IRI string, when this term is an IRI.
    pub fn as_iri(&self) -> Option<&str> {
        self.is_iri().then_some(self.value.as_str())
    }
}

/// Formats the term in N-Triples syntax.
impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            TermKind::Iri => write!(f, "<{}>", escape_iri(&self.value)),
            TermKind::Blank => write!(f, "_:{}", self.value),
            TermKind::Literal => {
                write!(f, "\"{}\"", escape_literal(&self.value))?;
                if let Some(lang) = &self.language {
                    write!(f, "@{lang}")
                } else if let Some(dt) = &self.datatype {
                    write!(f, "^^<{}>", escape_iri(dt))
                } else {
                    Ok(())
                }
            }
        }
    }
}

pub(crate) fn is_absolute_iri(value: &str) -> bool {
    match value.split_once(':') {
        Some((scheme, _)) => {
            let mut chars = scheme.chars();
            matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
                && chars.all(|c| c.is_ascii_alphanumeric() || matches!(c, '+' | '-' | '.'))
        }
        None => false,
    }
}

fn escape_iri(iri: &str) -> String {
    let mut out = String::with_capacity(iri.len());
    for c in iri.chars() {
        match c {
            '\u{0}'..='\u{20}' | '<' | '>' | '"' | '{' | '}' | '|' | '^' | '`' | '\\' => {
                out.push_str(&format!("\\u{:04X}", c as u32));
            }
            _ => out.push(c),
        }
    }
    out
}

fn escape_literal(value: &str) -> String {
    let mut out = String::with_capacity(value.len() + 2);
    for c in value.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\r' => out.push_str("\\r"),
            _ => out.push(c),
        }
    }
    out
}

/// A subject–predicate–object statement over owned terms.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Triple {
    pub subject: Term,
    pub predicate: Term,
    pub object: Term,
}

impl Triple {
    /// # Panics
    ///
    /// Panics when the subject is a literal or the predicate is not an IRI.
    pub fn new(subject: Term, predicate: Term, object: Term) -> Self {
        assert!(!subject.is_literal(), "literal subject: {subject}");
        assert!(predicate.is_iri(), "non-IRI predicate: {predicate}");
        Self {
            subject,
            predicate,
            object,
        }
    }
}

impl fmt::Display for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {} .", self.subject, self.predicate, self.object)
    }
}

/// A borrowed view of a triple stored in a [`crate::TripleGraph`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TripleRef<'a> {
    pub subject: &'a Term,
    pub predicate: &'a Term,
    pub object: &'a Term,
}

impl TripleRef<'_> {
    pub fn to_owned(&self) -> Triple {
        Triple {
            subject: self.subject.clone(),
            predicate: self.predicate.clone(),
            object: self.object.clone(),
        }
    }
}

impl fmt::Display for TripleRef<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {} .", self.subject, self.predicate, self.object)
    }
}
