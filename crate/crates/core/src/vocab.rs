//! IRIs of the RDF, RDFS, OWL, SKOS, Dublin Core and OBO terms the metrics
//! look for.

pub const RDF: &str = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
pub const RDFS: &str = "http://www.w3.org/2000/01/rdf-schema#";
pub const OWL: &str = "http://www.w3.org/2002/07/owl#";
pub const XSD: &str = "http://www.w3.org/2001/XMLSchema#";
pub const SKOS: &str = "http://www.w3.org/2004/02/skos/core#";
pub const SKOSXL: &str = "http://www.w3.org/2008/05/skos-xl#";
pub const DCTERMS: &str = "http://purl.org/dc/terms/";
pub const DC: &str = "http://purl.org/dc/elements/1.1/";
pub const OBO: &str = "http://purl.obolibrary.org/obo/";
pub const OBO_IN_OWL: &str = "http://www.geneontology.org/formats/oboInOwl#";

macro_rules! iri {
    ($name:ident, $ns:literal, $local:literal) => {
        pub const $name: &str = concat!($ns, $local);
    };
}

iri!(RDF_TYPE, "http://www.w3.org/1999/02/22-rdf-syntax-ns#", "type");
iri!(RDF_FIRST, "http://www.w3.org/1999/02/22-rdf-syntax-ns#", "first");
iri!(RDF_REST, "http://www.w3.org/1999/02/22-rdf-syntax-ns#", "rest");
iri!(RDF_NIL, "http://www.w3.org/1999/02/22-rdf-syntax-ns#", "nil");

iri!(RDFS_CLASS, "http://www.w3.org/2000/01/rdf-schema#", "Class");
iri!(RDFS_LABEL, "http://www.w3.org/2000/01/rdf-schema#", "label");
iri!(RDFS_COMMENT, "http://www.w3.org/2000/01/rdf-schema#", "comment");
iri!(RDFS_SUBCLASS_OF, "http://www.w3.org/2000/01/rdf-schema#", "subClassOf");
iri!(RDFS_SUBPROPERTY_OF, "http://www.w3.org/2000/01/rdf-schema#", "subPropertyOf");
iri!(RDFS_DOMAIN, "http://www.w3.org/2000/01/rdf-schema#", "domain");
iri!(RDFS_RANGE, "http://www.w3.org/2000/01/rdf-schema#", "range");
iri!(RDFS_SEE_ALSO, "http://www.w3.org/2000/01/rdf-schema#", "seeAlso");
iri!(RDFS_IS_DEFINED_BY, "http://www.w3.org/2000/01/rdf-schema#", "isDefinedBy");
iri!(RDFS_LITERAL, "http://www.w3.org/2000/01/rdf-schema#", "Literal");

iri!(OWL_CLASS, "http://www.w3.org/2002/07/owl#", "Class");
iri!(OWL_NAMED_INDIVIDUAL, "http://www.w3.org/2002/07/owl#", "NamedIndividual");
iri!(OWL_OBJECT_PROPERTY, "http://www.w3.org/2002/07/owl#", "ObjectProperty");
iri!(OWL_ANNOTATION_PROPERTY, "http://www.w3.org/2002/07/owl#", "AnnotationProperty");
iri!(OWL_EQUIVALENT_CLASS, "http://www.w3.org/2002/07/owl#", "equivalentClass");
iri!(OWL_EQUIVALENT_PROPERTY, "http://www.w3.org/2002/07/owl#", "equivalentProperty");
iri!(OWL_DISJOINT_WITH, "http://www.w3.org/2002/07/owl#", "disjointWith");
iri!(OWL_INVERSE_OF, "http://www.w3.org/2002/07/owl#", "inverseOf");
iri!(OWL_ON_PROPERTY, "http://www.w3.org/2002/07/owl#", "onProperty");
iri!(OWL_SOME_VALUES_FROM, "http://www.w3.org/2002/07/owl#", "someValuesFrom");
iri!(OWL_ALL_VALUES_FROM, "http://www.w3.org/2002/07/owl#", "allValuesFrom");
iri!(OWL_HAS_VALUE, "http://www.w3.org/2002/07/owl#", "hasValue");
iri!(OWL_INTERSECTION_OF, "http://www.w3.org/2002/07/owl#", "intersectionOf");
iri!(OWL_UNION_OF, "http://www.w3.org/2002/07/owl#", "unionOf");
iri!(OWL_COMPLEMENT_OF, "http://www.w3.org/2002/07/owl#", "complementOf");
iri!(OWL_IMPORTS, "http://www.w3.org/2002/07/owl#", "imports");
iri!(OWL_VERSION_IRI, "http://www.w3.org/2002/07/owl#", "versionIRI");
iri!(OWL_RESTRICTION, "http://www.w3.org/2002/07/owl#", "Restriction");

iri!(SKOS_CONCEPT, "http://www.w3.org/2004/02/skos/core#", "Concept");
iri!(SKOS_PREF_LABEL, "http://www.w3.org/2004/02/skos/core#", "prefLabel");
iri!(SKOS_ALT_LABEL, "http://www.w3.org/2004/02/skos/core#", "altLabel");
iri!(SKOS_HIDDEN_LABEL, "http://www.w3.org/2004/02/skos/core#", "hiddenLabel");
iri!(SKOS_DEFINITION, "http://www.w3.org/2004/02/skos/core#", "definition");
iri!(SKOS_NOTE, "http://www.w3.org/2004/02/skos/core#", "note");
iri!(SKOS_SCOPE_NOTE, "http://www.w3.org/2004/02/skos/core#", "scopeNote");
iri!(SKOS_EXAMPLE, "http://www.w3.org/2004/02/skos/core#", "example");

iri!(SKOSXL_PREF_LABEL, "http://www.w3.org/2008/05/skos-xl#", "prefLabel");
iri!(SKOSXL_ALT_LABEL, "http://www.w3.org/2008/05/skos-xl#", "altLabel");
iri!(SKOSXL_HIDDEN_LABEL, "http://www.w3.org/2008/05/skos-xl#", "hiddenLabel");
iri!(SKOSXL_LITERAL_FORM, "http://www.w3.org/2008/05/skos-xl#", "literalForm");

iri!(DCTERMS_DESCRIPTION, "http://purl.org/dc/terms/", "description");
iri!(DCTERMS_TITLE, "http://purl.org/dc/terms/", "title");
iri!(DC_DESCRIPTION, "http://purl.org/dc/elements/1.1/", "description");
iri!(DC_TITLE, "http://purl.org/dc/elements/1.1/", "title");

iri!(IAO_DEFINITION, "http://purl.obolibrary.org/obo/", "IAO_0000115");
iri!(OBO_HAS_DEFINITION, "http://www.geneontology.org/formats/oboInOwl#", "hasDefinition");
iri!(OBO_HAS_EXACT_SYNONYM, "http://www.geneontology.org/formats/oboInOwl#", "hasExactSynonym");
iri!(OBO_HAS_RELATED_SYNONYM, "http://www.geneontology.org/formats/oboInOwl#", "hasRelatedSynonym");
iri!(OBO_HAS_BROAD_SYNONYM, "http://www.geneontology.org/formats/oboInOwl#", "hasBroadSynonym");
iri!(OBO_HAS_NARROW_SYNONYM, "http://www.geneontology.org/formats/oboInOwl#", "hasNarrowSynonym");

/// The built-in descriptive annotation predicates.
pub const DESCRIPTIVE_PREDICATES: [&str; 22] = [
    RDFS_LABEL,
    RDFS_COMMENT,
    SKOS_PREF_LABEL,
    SKOS_ALT_LABEL,
    SKOS_HIDDEN_LABEL,
    SKOS_DEFINITION,
    SKOS_NOTE,
    SKOS_SCOPE_NOTE,
    SKOS_EXAMPLE,
    SKOSXL_PREF_LABEL,
    SKOSXL_ALT_LABEL,
    SKOSXL_HIDDEN_LABEL,
    DCTERMS_DESCRIPTION,
    DCTERMS_TITLE,
    DC_DESCRIPTION,
    DC_TITLE,
    IAO_DEFINITION,
    OBO_HAS_DEFINITION,
    OBO_HAS_EXACT_SYNONYM,
    OBO_HAS_RELATED_SYNONYM,
    OBO_HAS_BROAD_SYNONYM,
    OBO_HAS_NARROW_SYNONYM,
];

/// SKOS-XL label predicates whose objects are label nodes, not text.
pub const SKOSXL_LABELS: [&str; 3] = [SKOSXL_PREF_LABEL, SKOSXL_ALT_LABEL, SKOSXL_HIDDEN_LABEL];

/// Predicates that carry definition text, sorted by IRI; their values are
/// concatenated in this order.
pub const DEFINITION_PREDICATES: [&str; 8] = [
    IAO_DEFINITION,
    DC_DESCRIPTION,
    DCTERMS_DESCRIPTION,
    OBO_HAS_DEFINITION,
    RDFS_COMMENT,
    SKOS_DEFINITION,
    SKOS_NOTE,
    SKOS_SCOPE_NOTE,
];

/// RDF/RDFS/OWL plumbing predicates that never count as semantic links.
pub const STRUCTURAL_PREDICATES: [&str; 20] = [
    RDF_TYPE,
    RDFS_SUBCLASS_OF,
    RDFS_SUBPROPERTY_OF,
    RDFS_DOMAIN,
    RDFS_RANGE,
    OWL_EQUIVALENT_CLASS,
    OWL_EQUIVALENT_PROPERTY,
    OWL_DISJOINT_WITH,
    OWL_INVERSE_OF,
    OWL_ON_PROPERTY,
    OWL_SOME_VALUES_FROM,
    OWL_ALL_VALUES_FROM,
    OWL_HAS_VALUE,
    OWL_INTERSECTION_OF,
    OWL_UNION_OF,
    OWL_COMPLEMENT_OF,
    RDF_FIRST,
    RDF_REST,
    OWL_IMPORTS,
    OWL_VERSION_IRI,
];

/// OWL 2 reserved annotation properties and the remaining axiom-encoding
/// vocabulary. Like [`STRUCTURAL_PREDICATES`], these are never link
/// predicates, but they are not descriptive text either.
pub const NON_SEMANTIC_PREDICATES: [&str; 27] = [
    RDFS_SEE_ALSO,
    RDFS_IS_DEFINED_BY,
    "http://www.w3.org/2002/07/owl#versionInfo",
    "http://www.w3.org/2002/07/owl#priorVersion",
    "http://www.w3.org/2002/07/owl#backwardCompatibleWith",
    "http://www.w3.org/2002/07/owl#incompatibleWith",
    "http://www.w3.org/2002/07/owl#deprecated",
    "http://www.w3.org/2002/07/owl#annotatedSource",
    "http://www.w3.org/2002/07/owl#annotatedProperty",
    "http://www.w3.org/2002/07/owl#annotatedTarget",
    "http://www.w3.org/2002/07/owl#members",
    "http://www.w3.org/2002/07/owl#distinctMembers",
    "http://www.w3.org/2002/07/owl#oneOf",
    "http://www.w3.org/2002/07/owl#onClass",
    "http://www.w3.org/2002/07/owl#onDataRange",
    "http://www.w3.org/2002/07/owl#onProperties",
    "http://www.w3.org/2002/07/owl#onDatatype",
    "http://www.w3.org/2002/07/owl#withRestrictions",
    "http://www.w3.org/2002/07/owl#propertyChainAxiom",
    "http://www.w3.org/2002/07/owl#disjointUnionOf",
    "http://www.w3.org/2002/07/owl#propertyDisjointWith",
    "http://www.w3.org/2002/07/owl#hasKey",
    "http://www.w3.org/2002/07/owl#sourceIndividual",
    "http://www.w3.org/2002/07/owl#assertionProperty",
    "http://www.w3.org/2002/07/owl#targetIndividual",
    "http://www.w3.org/2002/07/owl#targetValue",
    "http://www.w3.org/2002/07/owl#datatypeComplementOf",
];

/// Class declarations that put their subject in the class catalog.
pub const CLASS_TYPES: [&str; 3] = [OWL_CLASS, RDFS_CLASS, SKOS_CONCEPT];

/// Restriction filler predicates.
pub const FILLER_PREDICATES: [&str; 3] = [OWL_SOME_VALUES_FROM, OWL_ALL_VALUES_FROM, OWL_HAS_VALUE];

/// True for IRIs naming datatypes rather than classes.
pub fn is_datatype_iri(iri: &str) -> bool {
    iri.starts_with(XSD) || iri == RDFS_LITERAL || iri == concat!("http://www.w3.org/1999/02/22-rdf-syntax-ns#", "PlainLiteral")
}
