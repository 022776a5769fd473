//! Connection: how densely entities are linked through object properties.
//!
//! `score = 10 × (0.7·coverage + 0.2·diversity + 0.1·richness)`.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use wiseowl_rdf::{TermId, TripleGraph};

use crate::model::{term_label, EntityCatalog};
use crate::vocab;

pub const COVERAGE_WEIGHT: f64 = 0.7;
pub const DIVERSITY_WEIGHT: f64 = 0.2;
pub const RICHNESS_WEIGHT: f64 = 0.1;
pub const DIVERSITY_TARGET: f64 = 5.0;
/// Link count at which richness saturates (`log₁₁(10 + 1) = 1`).
pub const RICHNESS_TARGET: f64 = 10.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Direction {
    Outgoing,
    Incoming,
}

/// One counted link: predicate, the other endpoint, and which way it
/// points relative to the entity.
pub type Link = (TermId, TermId, Direction);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConnectionRow {
    pub entity: String,
    pub distinct_predicates: usize,
    pub total_connections: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConnectionResult {
    pub score: f64,
    pub coverage: f64,
    pub diversity: f64,
    pub richness: f64,
    pub entity_count: usize,
    pub connecting_predicates: usize,
    #[serde(skip)]
    pub per_entity: Vec<ConnectionRow>,
}

pub fn connecting_predicates(catalog: &EntityCatalog) -> BTreeSet<TermId> {
    catalog.object_properties.clone()
}

/// Vocabulary ids resolved once per graph.
struct RestrictionVocab {
    axioms: Vec<TermId>,
    equivalent: Option<TermId>,
    on_property: Option<TermId>,
    fillers: Vec<TermId>,
}

impl RestrictionVocab {
    fn resolve(graph: &TripleGraph) -> Self {
        let sub = graph.iri_id(vocab::RDFS_SUBCLASS_OF);
        let equivalent = graph.iri_id(vocab::OWL_EQUIVALENT_CLASS);
        Self {
            axioms: sub.into_iter().chain(equivalent).collect(),
            equivalent,
            on_property: graph.iri_id(vocab::OWL_ON_PROPERTY),
            fillers: vocab::FILLER_PREDICATES
                .iter()
                .filter_map(|f| graph.iri_id(f))
                .collect(),
        }
    }

    /// Class expressions `c` is tied to by `⊑` or `≡` (either side).
    fn axiom_targets<'g>(&'g self, graph: &'g TripleGraph, c: TermId) -> impl Iterator<Item = TermId> + 'g {
        let forward = self.axioms.iter().flat_map(move |&a| graph.object_ids(c, a));
        let backward = self
            .equivalent
            .into_iter()
            .flat_map(move |eq| graph.subject_ids(eq, c));
        forward.chain(backward)
    }

    /// Classes tied to the class expression `r` by `⊑` or `≡`.
    fn axiom_sources<'g>(&'g self, graph: &'g TripleGraph, r: TermId) -> impl Iterator<Item = TermId> + 'g {
        let backward = self.axioms.iter().flat_map(move |&a| graph.subject_ids(a, r));
        let forward = self
            .equivalent
            .into_iter()
            .flat_map(move |eq| graph.object_ids(r, eq));
        backward.chain(forward)
    }

    /// `(p, F)` for every restriction `r` on a connecting property `p` with
    /// an IRI filler `F`.
    fn restriction_parts(
        &self,
        graph: &TripleGraph,
        r: TermId,
        preds: &BTreeSet<TermId>,
        out: &mut Vec<(TermId, TermId)>,
    ) {
        let Some(on) = self.on_property else { return };
        for p in graph.object_ids(r, on).filter(|p| preds.contains(p)) {
            for &f in &self.fillers {
                out.extend(
                    graph
                        .object_ids(r, f)
                        .filter(|o| graph.term(*o).is_iri())
                        .map(|o| (p, o)),
                );
            }
        }
    }
}

/// Distinct links of `entity` under the connecting predicates `preds`.
///
/// Direct triples count in both directions when the other endpoint is not a
/// literal. A class tied by `⊑` or `≡` to a restriction on `p` with IRI
/// filler `F` gets an outgoing link to `F`; `F`, if an entity, gets the
/// matching incoming link.
pub fn entity_links(
    graph: &TripleGraph,
    entity: TermId,
    preds: &BTreeSet<TermId>,
    entities: &BTreeSet<TermId>,
) -> BTreeSet<Link> {
    let rv = RestrictionVocab::resolve(graph);
    links_with(graph, &rv, entity, preds, entities)
}

fn links_with(
    graph: &TripleGraph,
    rv: &RestrictionVocab,
    entity: TermId,
    preds: &BTreeSet<TermId>,
    entities: &BTreeSet<TermId>,
) -> BTreeSet<Link> {
    let mut links = BTreeSet::new();
    for [_, p, o] in graph.match_ids(Some(entity), None, None) {
        if preds.contains(&p) && !graph.term(o).is_literal() {
            links.insert((p, o, Direction::Outgoing));
        }
    }
    for [s, p, _] in graph.match_ids(None, None, Some(entity)) {
        if preds.contains(&p) {
            links.insert((p, s, Direction::Incoming));
        }
    }

    let mut parts = Vec::new();
    for r in rv.axiom_targets(graph, entity) {
        parts.clear();
        rv.restriction_parts(graph, r, preds, &mut parts);
        links.extend(parts.iter().map(|&(p, f)| (p, f, Direction::Outgoing)));
    }

    if let Some(on) = rv.on_property {
        for &f in &rv.fillers {
            for r in graph.subject_ids(f, entity) {
                for p in graph.object_ids(r, on).filter(|p| preds.contains(p)) {
                    for c in rv.axiom_sources(graph, r).filter(|c| entities.contains(c)) {
                        links.insert((p, c, Direction::Incoming));
                    }
                }
            }
        }
    }
    links
}

/// `(distinct predicates, total links)` for one entity.
pub fn entity_connections(
    graph: &TripleGraph,
    entity: TermId,
    preds: &BTreeSet<TermId>,
    entities: &BTreeSet<TermId>,
) -> (BTreeSet<TermId>, usize) {
    let links = entity_links(graph, entity, preds, entities);
    let distinct = links.iter().map(|(p, _, _)| *p).collect();
    (distinct, links.len())
}

pub fn diversity_term(distinct: usize) -> f64 {
    (distinct as f64 / DIVERSITY_TARGET).min(1.0)
}

pub fn richness_term(total: usize) -> f64 {
    ((total as f64 + 1.0).ln() / (RICHNESS_TARGET + 1.0).ln()).min(1.0)
}

pub fn connection_score(coverage: f64, diversity: f64, richness: f64) -> f64 {
    10.0 * (COVERAGE_WEIGHT * coverage + DIVERSITY_WEIGHT * diversity + RICHNESS_WEIGHT * richness)
}

pub fn score_connection(graph: &TripleGraph, catalog: &EntityCatalog) -> ConnectionResult {
    let preds = connecting_predicates(catalog);
    let rv = RestrictionVocab::resolve(graph);
    let entities: Vec<TermId> = catalog.entities.iter().copied().collect();
    let counts: Vec<(usize, usize)> = entities
        .par_iter()
        .map(|&e| {
            let links = links_with(graph, &rv, e, &preds, &catalog.entities);
            let distinct: BTreeSet<TermId> = links.iter().map(|(p, _, _)| *p).collect();
            (distinct.len(), links.len())
        })
        .collect();

    let n = entities.len();
    let (coverage, diversity, richness) = if n == 0 {
        (0.0, 0.0, 0.0)
    } else {
        let nf = n as f64;
        (
            counts.iter().filter(|(_, t)| *t >= 1).count() as f64 / nf,
            counts.iter().map(|(d, _)| diversity_term(*d)).sum::<f64>() / nf,
            counts.iter().map(|(_, t)| richness_term(*t)).sum::<f64>() / nf,
        )
    };
    let per_entity = entities
        .iter()
        .zip(&counts)
        .map(|(&e, &(d, t))| ConnectionRow {
            entity: term_label(graph.term(e)),
            distinct_predicates: d,
            total_connections: t,
        })
        .collect();
    ConnectionResult {
        score: if n == 0 { 0.0 } else { connection_score(coverage, diversity, richness) },
        coverage,
        diversity,
        richness,
        entity_count: n,
        connecting_predicates: preds.len(),
        per_entity,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use wiseowl_rdf::{parse, Syntax};

    const PREFIXES: &str = "@prefix : <http://example.org/> .
@prefix rdfs: <http://www.w3.org/2000/01/rdf-schema#> .
@prefix owl: <http://www.w3.org/2002/07/owl#> .
";

    fn graph(body: &str) -> TripleGraph {
        parse(format!("{PREFIXES}{body}").as_bytes(), Syntax::Turtle).unwrap()
    }

    fn id(g: &TripleGraph, local: &str) -> TermId {
        g.iri_id(&format!("http://example.org/{local}")).unwrap()
    }

    fn conn(g: &TripleGraph, local: &str) -> (usize, usize) {
        let c = EntityCatalog::extract(g);
        let (d, t) = entity_connections(g, id(g, local), &connecting_predicates(&c), &c.entities);
        (d.len(), t)
    }

    #[test]
    fn single_triple_counts_both_ends() {
        let g = graph(":A a owl:Class . :B a owl:Class . :C a owl:Class . :D a owl:Class . :A :p :B .");
        assert_eq!(conn(&g, "A"), (1, 1));
        assert_eq!(conn(&g, "B"), (1, 1));
        assert_eq!(conn(&g, "C"), (0, 0));
        let r = score_connection(&g, &EntityCatalog::extract(&g));
        assert_eq!(r.coverage, 0.5);
        assert!((r.diversity - 0.1).abs() < 1e-12);
        let rich = 2.0 * 2f64.ln() / 11f64.ln() / 4.0;
        assert!((r.richness - rich).abs() < 1e-12);
        assert!((r.score - 3.84).abs() < 0.005, "{}", r.score);
    }

    #[test]
    fn restriction_links() {
        let g = graph(
            ":p a owl:ObjectProperty . :A a owl:Class . :B a owl:Class .
             :A rdfs:subClassOf [ a owl:Restriction ; owl:onProperty :p ; owl:someValuesFrom :B ] .",
        );
        assert_eq!(conn(&g, "A"), (1, 1));
        assert_eq!(conn(&g, "B"), (1, 1));
    }

    #[test]
    fn redundant_restrictions_count_once() {
        let g = graph(
            ":p a owl:ObjectProperty . :A a owl:Class . :B a owl:Class .
             :A rdfs:subClassOf [ owl:onProperty :p ; owl:someValuesFrom :B ] ,
                                [ owl:onProperty :p ; owl:someValuesFrom :B ] ;
                :p :B .",
        );
        assert_eq!(conn(&g, "A"), (1, 1));
        assert_eq!(conn(&g, "B"), (1, 1));
    }

    #[test]
    fn literals_and_structural_predicates_do_not_link() {
        let g = graph(
            ":A a owl:Class ; rdfs:label \"a\" ; :size 3 ; rdfs:seeAlso :B . :B a owl:Class ; rdfs:subClassOf :A .",
        );
        assert_eq!(conn(&g, "A"), (0, 0));
        let r = score_connection(&g, &EntityCatalog::extract(&g));
        assert_eq!(r.score, 0.0);
    }

    #[test]
    fn saturation_scores_ten() {
        let mut body = String::from(":X a owl:Class . :Y a owl:Class .\n");
        for p in 0..5 {
            for k in 0..2 {
                body.push_str(&format!(":X :p{p} :t{k} . :Y :p{p} :t{k} .\n"));
            }
        }
        let g = graph(&body);
        let r = score_connection(&g, &EntityCatalog::extract(&g));
        assert!((r.score - 10.0).abs() < 1e-12, "{}", r.score);
    }

    #[test]
    fn empty_catalog_scores_zero() {
        let g = graph("");
        assert_eq!(score_connection(&g, &EntityCatalog::extract(&g)).score, 0.0);
    }
}
