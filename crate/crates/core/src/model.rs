//! Entity and property catalogs extracted from a parsed ontology.

use std::collections::BTreeSet;

use wiseowl_rdf::{Term, TermId, TermKind, TripleGraph};

use crate::vocab;

/// The sets every metric works from.
///
/// Classes, individuals, entities and object properties are terms of the
/// graph and are held as [`TermId`]s, which sort like the terms themselves.
/// Annotation properties are IRIs, since the built-in ones need not occur
/// in the graph at all.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct EntityCatalog {
    pub classes: BTreeSet<TermId>,
    pub individuals: BTreeSet<TermId>,
    /// `classes ∪ individuals`; a punned term appears once.
    pub entities: BTreeSet<TermId>,
    pub object_properties: BTreeSet<TermId>,
    pub annotation_properties: BTreeSet<String>,
}

impl EntityCatalog {
    pub fn extract(graph: &TripleGraph) -> Self {
        let classes = extract_classes(graph);
        let individuals = extract_individuals(graph, &classes);
        let entities = classes.union(&individuals).copied().collect();
        let annotation_properties = extract_annotation_properties(graph);
        let object_properties = extract_object_properties(graph, &annotation_properties);
        Self {
            classes,
            individuals,
            entities,
            object_properties,
            annotation_properties,
        }
    }

    pub fn summary(&self) -> CatalogSummary {
        CatalogSummary {
            classes: self.classes.len(),
            individuals: self.individuals.len(),
            entities: self.entities.len(),
            object_properties: self.object_properties.len(),
            annotation_properties: self.annotation_properties.len(),
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct CatalogSummary {
    pub classes: usize,
    pub individuals: usize,
    pub entities: usize,
    pub object_properties: usize,
    pub annotation_properties: usize,
}

/// Predicates excluded from link counting: RDF/RDFS/OWL plumbing plus the
/// OWL reserved annotation vocabulary.
pub fn is_structural_predicate(iri: &str) -> bool {
    vocab::STRUCTURAL_PREDICATES.contains(&iri) || vocab::NON_SEMANTIC_PREDICATES.contains(&iri)
}

/// Declared classes (`owl:Class`, `rdfs:Class`, `skos:Concept`) plus the IRI
/// endpoints of every `rdfs:subClassOf` triple. Anonymous class
/// expressions are left out.
pub fn extract_classes(graph: &TripleGraph) -> BTreeSet<TermId> {
    let mut out = BTreeSet::new();
    let Some(rdf_type) = graph.iri_id(vocab::RDF_TYPE) else {
        return subclass_endpoints(graph, out);
    };
    for class_type in vocab::CLASS_TYPES {
        if let Some(ty) = graph.iri_id(class_type) {
            out.extend(
                graph
                    .subject_ids(rdf_type, ty)
                    .filter(|s| graph.term(*s).is_iri()),
            );
        }
    }
    subclass_endpoints(graph, out)
}

fn subclass_endpoints(graph: &TripleGraph, mut out: BTreeSet<TermId>) -> BTreeSet<TermId> {
    if let Some(sub) = graph.iri_id(vocab::RDFS_SUBCLASS_OF) {
        for [s, _, o] in graph.match_ids(None, Some(sub), None) {
            for end in [s, o] {
                if graph.term(end).is_iri() {
                    out.insert(end);
                }
            }
        }
    }
    out
}

/// Subjects typed with a cataloged class, plus `owl:NamedIndividual`
/// declarations.
pub fn extract_individuals(graph: &TripleGraph, classes: &BTreeSet<TermId>) -> BTreeSet<TermId> {
    let mut out = BTreeSet::new();
    let Some(rdf_type) = graph.iri_id(vocab::RDF_TYPE) else {
        return out;
    };
    for class in classes {
        out.extend(graph.subject_ids(rdf_type, *class));
    }
    if let Some(named) = graph.iri_id(vocab::OWL_NAMED_INDIVIDUAL) {
        out.extend(graph.subject_ids(rdf_type, named));
    }
    out
}

/// Declared `owl:AnnotationProperty` IRIs plus the built-in descriptive
/// predicates.
pub fn extract_annotation_properties(graph: &TripleGraph) -> BTreeSet<String> {
    let mut out: BTreeSet<String> = vocab::DESCRIPTIVE_PREDICATES
        .iter()
        .map(|s| s.to_string())
        .collect();
    if let (Some(rdf_type), Some(ap)) = (
        graph.iri_id(vocab::RDF_TYPE),
        graph.iri_id(vocab::OWL_ANNOTATION_PROPERTY),
    ) {
        out.extend(
            graph
                .subject_ids(rdf_type, ap)
                .filter_map(|s| graph.term(s).as_iri().map(str::to_string)),
        );
    }
    out
}

/// Declared `owl:ObjectProperty` subjects and every predicate used with a
/// non-literal object, minus annotation and structural predicates.
pub fn extract_object_properties(
    graph: &TripleGraph,
    annotation_properties: &BTreeSet<String>,
) -> BTreeSet<TermId> {
    let mut out = BTreeSet::new();
    if let (Some(rdf_type), Some(op)) = (
        graph.iri_id(vocab::RDF_TYPE),
        graph.iri_id(vocab::OWL_OBJECT_PROPERTY),
    ) {
        out.extend(
            graph
                .subject_ids(rdf_type, op)
                .filter(|s| !graph.term(*s).is_literal()),
        );
    }
    for p in graph.predicate_ids() {
        // Literals sort last, so the first object of `p` is non-literal iff
        // some object is.
        let first = graph.match_ids(None, Some(p), None).next();
        if first.is_some_and(|[_, _, o]| graph.term(o).kind() != TermKind::Literal) {
            out.insert(p);
        }
    }
    out.retain(|p| match graph.term(*p).as_iri() {
        Some(iri) => !annotation_properties.contains(iri) && !is_structural_predicate(iri),
        None => true,
    });
    out
}

/// Human-readable fallback label derived from an IRI: the fragment or last
/// path segment with underscores as spaces and camelCase split into
/// lowercase words.
pub fn local_name(iri: &str) -> String {
    let trimmed = iri.trim_end_matches(['#', '/']);
    let tail = match trimmed.rfind('#') {
        Some(i) => &trimmed[i + 1..],
        None => trimmed.rsplit('/').next().unwrap_or(trimmed),
    };
    let chars: Vec<char> = tail.replace('_', " ").chars().collect();
    let mut out = String::with_capacity(chars.len() + 4);
    for (i, &c) in chars.iter().enumerate() {
        if c.is_uppercase() && i > 0 {
            let prev = chars[i - 1];
            let next_lower = chars.get(i + 1).is_some_and(|n| n.is_lowercase());
            if prev.is_lowercase() || prev.is_numeric() || (prev.is_uppercase() && next_lower) {
                out.push(' ');
            }
        }
        out.extend(c.to_lowercase());
    }
    out.split_whitespace().collect::<Vec<_>>().join(" ")
}

/// Display form used in reports: the IRI itself, or `_:id` for blank nodes.
pub fn term_label(term: &Term) -> String {
    match term.kind() {
        TermKind::Iri => term.value().to_string(),
        _ => term.to_string(),
    }
}
