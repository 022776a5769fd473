//! Well-Defined: per-entity blend of label/definition semantic relevance
//! (weight 0.4) and definition adequacy (weight 0.6), averaged over all
//! entities and scaled to 0–10.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use wiseowl_rdf::{TermId, TripleGraph};

use crate::embedding::{cosine, EmbedError, Embedder};
use crate::model::{local_name, term_label, EntityCatalog};
use crate::text::{adequacy, tokenize};
use crate::vocab;

pub const RELEVANCE_WEIGHT: f64 = 0.4;
pub const ADEQUACY_WEIGHT: f64 = 0.6;

/// Batch spread below which every relevance is the sigmoid midpoint.
pub const MIN_SIGMA: f64 = 1e-9;

/// Defined entities embedded per provider call; bounds memory on large
/// ontologies without changing any value.
const EMBED_CHUNK_ENTITIES: usize = 2048;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LabelSource {
    PrefLabel,
    RdfsLabel,
    LocalName,
}

#[derive(Debug, Clone, PartialEq)]
pub struct DefinedRow {
    pub entity: String,
    pub label: String,
    pub label_source: LabelSource,
    pub definition: Option<String>,
    /// Label/definition cosine before batch normalization.
    pub raw_similarity: Option<f64>,
    pub relevance: f64,
    pub adequacy: f64,
    pub entity_score: f64,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize, Deserialize)]
pub struct BatchStats {
    pub count: usize,
    pub mean: f64,
    pub std: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DefinedResult {
    pub score: f64,
    pub entity_count: usize,
    pub defined_count: usize,
    pub batch_stats: BatchStats,
    /// True when the metric was not computed (no embedder requested).
    pub skipped: bool,
    #[serde(skip)]
    pub per_entity: Vec<DefinedRow>,
}

impl DefinedResult {
    pub fn skipped(entity_count: usize) -> Self {
        Self {
            score: 0.0,
            entity_count,
            defined_count: 0,
            batch_stats: BatchStats::default(),
            skipped: true,
            per_entity: Vec::new(),
        }
    }
}

fn language_rank(lang: Option<&str>) -> u8 {
    match lang {
        Some(l) if l == "en" || l.starts_with("en-") => 0,
        None => 1,
        Some(_) => 2,
    }
}

fn best_literal(graph: &TripleGraph, entity: TermId, predicate: &str) -> Option<String> {
    let p = graph.iri_id(predicate)?;
    graph
        .object_ids(entity, p)
        .map(|o| graph.term(o))
        .filter(|t| t.is_literal())
        .min_by(|a, b| {
            (language_rank(a.language()), a.value()).cmp(&(language_rank(b.language()), b.value()))
        })
        .map(|t| t.value().to_string())
}

/// The entity's display label: `skos:prefLabel`, then `rdfs:label`
/// (English first, then untagged, then lexical order), then the IRI's
/// local name.
pub fn collect_label(graph: &TripleGraph, entity: TermId) -> (String, LabelSource) {
    if let Some(l) = best_literal(graph, entity, vocab::SKOS_PREF_LABEL) {
        return (l, LabelSource::PrefLabel);
    }
    if let Some(l) = best_literal(graph, entity, vocab::RDFS_LABEL) {
        return (l, LabelSource::RdfsLabel);
    }
    let term = graph.term(entity);
    let fallback = match term.as_iri() {
        Some(iri) => local_name(iri),
        None => term.value().to_string(),
    };
    (fallback, LabelSource::LocalName)
}

/// All literal definition texts of the entity, ordered by predicate IRI and
/// then lexically, joined with `". "`.
pub fn collect_definition(graph: &TripleGraph, entity: TermId) -> Option<String> {
    let mut parts: Vec<&str> = Vec::new();
    for pred in vocab::DEFINITION_PREDICATES {
        let Some(p) = graph.iri_id(pred) else { continue };
        parts.extend(
            graph
                .object_ids(entity, p)
                .map(|o| graph.term(o))
                .filter(|t| t.is_literal())
                .map(|t| t.value()),
        );
    }
    (!parts.is_empty()).then(|| parts.join(". "))
}

/// Logistic squashing of each value's z-score within the batch, using the
/// population standard deviation.
pub fn sigmoid_normalize(raw: &[f64]) -> Vec<f64> {
    let stats = batch_stats(raw);
    raw.iter()
        .map(|&x| {
            if stats.std < MIN_SIGMA {
                0.5
            } else {
                1.0 / (1.0 + (-(x - stats.mean) / stats.std).exp())
            }
        })
        .collect()
}

pub fn batch_stats(raw: &[f64]) -> BatchStats {
    if raw.is_empty() {
        return BatchStats::default();
    }
    let n = raw.len() as f64;
    let mean = raw.iter().sum::<f64>() / n;
    let var = raw.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / n;
    BatchStats {
        count: raw.len(),
        mean,
        std: var.sqrt(),
    }
}

pub fn entity_score(relevance: f64, adequacy: f64) -> f64 {
    RELEVANCE_WEIGHT * relevance + ADEQUACY_WEIGHT * adequacy
}

pub fn score_defined(
    graph: &TripleGraph,
    catalog: &EntityCatalog,
    embedder: &dyn Embedder,
) -> Result<DefinedResult, EmbedError> {
    let entities: Vec<TermId> = catalog.entities.iter().copied().collect();
    let mut rows: Vec<DefinedRow> = entities
        .par_iter()
        .map(|&e| {
            let (label, label_source) = collect_label(graph, e);
            let definition = collect_definition(graph, e);
            let adequacy = definition
                .as_deref()
                .map_or(0.0, |d| adequacy(&tokenize(d)));
            DefinedRow {
                entity: term_label(graph.term(e)),
                label,
                label_source,
                definition,
                raw_similarity: None,
                relevance: 0.0,
                adequacy,
                entity_score: 0.0,
            }
        })
        .collect();

    let defined: Vec<usize> = rows
        .iter()
        .enumerate()
        .filter(|(_, r)| r.definition.is_some())
        .map(|(i, _)| i)
        .collect();

    let mut raw = Vec::with_capacity(defined.len());
    for chunk in defined.chunks(EMBED_CHUNK_ENTITIES) {
        let mut texts = Vec::with_capacity(chunk.len() * 2);
        for &i in chunk {
            texts.push(rows[i].label.clone());
            texts.push(rows[i].definition.clone().unwrap_or_default());
        }
        let vectors = embedder.embed_batch(&texts)?;
        if vectors.len() != texts.len() {
            return Err(EmbedError::BadResponse(format!(
                "asked for {} embeddings, got {}",
                texts.len(),
                vectors.len()
            )));
        }
        for pair in vectors.chunks_exact(2) {
            raw.push(cosine(&pair[0], &pair[1])?);
        }
    }

    let stats = batch_stats(&raw);
    let relevance = sigmoid_normalize(&raw);
    for ((&i, &sim), &rel) in defined.iter().zip(&raw).zip(&relevance) {
        let row = &mut rows[i];
        row.raw_similarity = Some(sim);
        row.relevance = rel;
        row.entity_score = entity_score(rel, row.adequacy);
    }

    let score = if rows.is_empty() {
        0.0
    } else {
        10.0 * rows.iter().map(|r| r.entity_score).sum::<f64>() / rows.len() as f64
    };
    Ok(DefinedResult {
        score,
        entity_count: rows.len(),
        defined_count: defined.len(),
        batch_stats: stats,
        skipped: false,
        per_entity: rows,
    })
}
