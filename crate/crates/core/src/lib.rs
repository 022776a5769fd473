//! Ontology quality scoring.
//!
//! Four scores on a 0–10 scale are computed from a parsed RDF graph:
//!
//! * **Well-Described**: share of entities with a descriptive annotation
//!   ([`described`]).
//! * **Well-Defined**: semantic relevance and textual adequacy of
//!   definitions ([`defined`], backed by [`embedding`]).
//! * **Connection**: coverage, diversity and richness of object-property
//!   links ([`connection`]).
//! * **Hierarchical Breadth**: depth and branching of the class hierarchy
//!   ([`hierarchy`]).
//!
//! [`report`] ties them together and renders JSON, CSV and HTML.
//!
//! ```
//! use wiseowl_core::{model::EntityCatalog, described::score_described};
//! use wiseowl_rdf::{parse, Syntax};
//!
//! let ttl = b"@prefix owl: <http://www.w3.org/2002/07/owl#> .
//! @prefix rdfs: <http://www.w3.org/2000/01/rdf-schema#> .
//! <http://ex.org/A> a owl:Class ; rdfs:label \"A\" .
//! <http://ex.org/B> a owl:Class .";
//! let graph = parse(&ttl[..], Syntax::Turtle).unwrap();
//! let catalog = EntityCatalog::extract(&graph);
//! assert_eq!(score_described(&graph, &catalog, false).score, 5.0);
//! ```

pub mod connection;
pub mod defined;
pub mod described;
pub mod embedding;
pub mod hierarchy;
pub mod model;
pub mod report;
pub mod text;
pub mod vocab;

pub use connection::{score_connection, ConnectionResult};
pub use defined::{score_defined, DefinedResult};
pub use described::{score_described, DescribedResult};
pub use embedding::{EmbedConfig, EmbedError, Embedder, Provider};
pub use hierarchy::{score_hierarchy, HierarchyResult};
pub use model::EntityCatalog;
pub use report::{evaluate, OntologyReport, ReportError, RunConfig};
pub use wiseowl_rdf::Syntax;
