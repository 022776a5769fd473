//! RDF terms, an immutable indexed triple graph, and Turtle / N-Triples
//! loading.
//!
//! ```
//! use wiseowl_rdf::{parse, Syntax, Term};
//!
//! let doc = "@prefix ex: <http://example.org/> .\nex:a ex:p ex:b , ex:c .";
//! let graph = parse(doc.as_bytes(), Syntax::Turtle).unwrap();
//! let a = Term::iri("http://example.org/a");
//! let p = Term::iri("http://example.org/p");
//! assert_eq!(graph.objects(&a, &p).len(), 2);
//! ```

mod graph;
mod parse;
mod term;

pub use graph::{GraphBuilder, MatchIds, TermId, TripleGraph, TripleIds};
pub use parse::{
    detect_syntax, parse, parse_file, parse_with_base, ParseError, Syntax, SNIFF_LEN,
};
pub use term::{Term, TermKind, Triple, TripleRef};
