//! Well-Described: share of entities carrying at least one descriptive
//! annotation, scaled to 0–10.

use std::collections::{BTreeSet, HashSet};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use wiseowl_rdf::{TermId, TripleGraph};

use crate::model::{term_label, EntityCatalog};
use crate::vocab;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DescribedResult {
    pub score: f64,
    pub described_count: usize,
    pub entity_count: usize,
    #[serde(skip)]
    pub per_entity: Vec<DescribedRow>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DescribedRow {
    pub entity: String,
    pub described: bool,
    /// First predicate (in IRI order) that made the entity described.
    pub witness: Option<String>,
}

/// Built-in descriptive predicates plus the catalog's annotation
/// properties.
pub fn descriptive_predicates(catalog: &EntityCatalog) -> BTreeSet<String> {
    let mut out: BTreeSet<String> = vocab::DESCRIPTIVE_PREDICATES
        .iter()
        .map(|s| s.to_string())
        .collect();
    out.extend(catalog.annotation_properties.iter().cloned());
    out
}

/// Descriptive predicates resolved against one graph.
#[derive(Debug, Clone)]
pub struct PredicateSet {
    plain: HashSet<TermId>,
    skosxl: HashSet<TermId>,
    literal_form: Option<TermId>,
    strict: bool,
}

impl PredicateSet {
    /// `strict` additionally requires the object of a plain annotation to
    /// be a literal.
    pub fn resolve(graph: &TripleGraph, preds: &BTreeSet<String>, strict: bool) -> Self {
        let mut plain = HashSet::new();
        let mut skosxl = HashSet::new();
        for iri in preds {
            if let Some(id) = graph.iri_id(iri) {
                if vocab::SKOSXL_LABELS.contains(&iri.as_str()) {
                    skosxl.insert(id);
                } else {
                    plain.insert(id);
                }
            }
        }
        Self {
            plain,
            skosxl,
            literal_form: graph.iri_id(vocab::SKOSXL_LITERAL_FORM),
            strict,
        }
    }
}

/// The predicate witnessing that `entity` is described, if any.
///
/// A SKOS-XL label counts only when its label node has a literal
/// `skosxl:literalForm`.
pub fn described_by(graph: &TripleGraph, entity: TermId, preds: &PredicateSet) -> Option<TermId> {
    graph
        .match_ids(Some(entity), None, None)
        .find(|&[_, p, o]| {
            if preds.plain.contains(&p) {
                !preds.strict || graph.term(o).is_literal()
            } else if preds.skosxl.contains(&p) {
                preds.literal_form.is_some_and(|lf| {
                    graph
                        .object_ids(o, lf)
                        .any(|form| graph.term(form).is_literal())
                })
            } else {
                false
            }
        })
        .map(|[_, p, _]| p)
}

pub fn is_described(graph: &TripleGraph, entity: TermId, preds: &PredicateSet) -> bool {
    described_by(graph, entity, preds).is_some()
}

pub fn score_described(graph: &TripleGraph, catalog: &EntityCatalog, strict: bool) -> DescribedResult {
    let preds = PredicateSet::resolve(graph, &descriptive_predicates(catalog), strict);
    let entities: Vec<TermId> = catalog.entities.iter().copied().collect();
    let per_entity: Vec<DescribedRow> = entities
        .par_iter()
        .map(|&e| {
            let witness = described_by(graph, e, &preds);
            DescribedRow {
                entity: term_label(graph.term(e)),
                described: witness.is_some(),
                witness: witness.map(|p| term_label(graph.term(p))),
            }
        })
        .collect();
    let described_count = per_entity.iter().filter(|r| r.described).count();
    let entity_count = per_entity.len();
    let score = if entity_count == 0 {
        0.0
    } else {
        10.0 * described_count as f64 / entity_count as f64
    };
    DescribedResult {
        score,
        described_count,
        entity_count,
        per_entity,
    }
}
