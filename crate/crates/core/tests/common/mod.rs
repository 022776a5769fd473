//! Shared fixtures: a random ontology generator and brute-force metric
//! implementations that work on a plain triple list.

#![allow(dead_code)]

use std::collections::BTreeSet;

use proptest::prelude::*;
use wiseowl_core::vocab::*;
use wiseowl_rdf::{Term, Triple, TripleGraph};

pub const NS: &str = "http://example.org/r#";

pub fn ex(local: &str) -> Term {
    Term::iri(format!("{NS}{local}"))
}

pub fn iri(s: &str) -> Term {
    Term::iri(s)
}

pub fn lit(s: &str) -> Term {
    Term::literal(s)
}

pub fn entity(i: u8) -> Term {
    ex(&format!("E{i}"))
}

pub fn property(i: u8) -> Term {
    ex(&format!("P{i}"))
}

/// One generator move; each expands to one to four triples.
#[derive(Debug, Clone)]
pub enum Item {
    DeclareClass(u8),
    TypeAs(u8, u8),
    NamedIndividual(u8),
    SubClass(u8, u8),
    Link(u8, u8, u8),
    DataValue(u8, u8),
    Label(u8),
    XlLabel(u8, u8, bool),
    CustomNote(u8, bool),
    DeclareProperty(u8),
    Restriction { class: u8, equivalent: bool, reversed: bool, prop: u8, filler_kind: u8, filler: u8, node: u8 },
    SeeAlso(u8, u8),
    Comment(u8),
}

pub fn item(max_entity: u8) -> impl Strategy<Value = Item> {
    let e = 0..max_entity;
    let p = 0u8..4;
    prop_oneof![
        3 => e.clone().prop_map(Item::DeclareClass),
        1 => (e.clone(), e.clone()).prop_map(|(a, b)| Item::TypeAs(a, b)),
        1 => e.clone().prop_map(Item::NamedIndividual),
        2 => (e.clone(), e.clone()).prop_map(|(a, b)| Item::SubClass(a, b)),
        3 => (e.clone(), p.clone(), e.clone()).prop_map(|(a, p, b)| Item::Link(a, p, b)),
        1 => (e.clone(), p.clone()).prop_map(|(a, p)| Item::DataValue(a, p)),
        2 => e.clone().prop_map(Item::Label),
        1 => (e.clone(), 0u8..4, any::<bool>()).prop_map(|(a, n, f)| Item::XlLabel(a, n, f)),
        1 => (e.clone(), any::<bool>()).prop_map(|(a, d)| Item::CustomNote(a, d)),
        1 => p.clone().prop_map(Item::DeclareProperty),
        2 => (e.clone(), any::<bool>(), any::<bool>(), p.clone(), 0u8..3, e.clone(), 0u8..6).prop_map(
            |(class, equivalent, reversed, prop, filler_kind, filler, node)| Item::Restriction {
                class,
                equivalent,
                reversed,
                prop,
                filler_kind,
                filler,
                node
            }
        ),
        1 => (e.clone(), e.clone()).prop_map(|(a, b)| Item::SeeAlso(a, b)),
        1 => e.prop_map(Item::Comment),
    ]
}

pub fn expand(items: &[Item]) -> Vec<Triple> {
    let mut out = Vec::new();
    let t = |s: Term, p: Term, o: Term| Triple::new(s, p, o);
    for it in items {
        match *it {
            Item::DeclareClass(a) => out.push(t(entity(a), iri(RDF_TYPE), iri(OWL_CLASS))),
            Item::TypeAs(a, b) => out.push(t(entity(a), iri(RDF_TYPE), entity(b))),
            Item::NamedIndividual(a) => out.push(t(entity(a), iri(RDF_TYPE), iri(OWL_NAMED_INDIVIDUAL))),
            Item::SubClass(a, b) => out.push(t(entity(a), iri(RDFS_SUBCLASS_OF), entity(b))),
            Item::Link(a, p, b) => out.push(t(entity(a), property(p), entity(b))),
            Item::DataValue(a, p) => out.push(t(entity(a), property(p), lit("42"))),
            Item::Label(a) => out.push(t(entity(a), iri(RDFS_LABEL), lit(&format!("entity {a}")))),
            Item::XlLabel(a, n, with_form) => {
                let node = ex(&format!("L{n}"));
                out.push(t(entity(a), iri(SKOSXL_PREF_LABEL), node.clone()));
                if with_form {
                    out.push(t(node, iri(SKOSXL_LITERAL_FORM), lit("form")));
                }
            }
            Item::CustomNote(a, declared) => {
                out.push(t(entity(a), ex("note"), lit("note")));
                if declared {
                    out.push(t(ex("note"), iri(RDF_TYPE), iri(OWL_ANNOTATION_PROPERTY)));
                }
            }
            Item::DeclareProperty(p) => out.push(t(property(p), iri(RDF_TYPE), iri(OWL_OBJECT_PROPERTY))),
            Item::Restriction { class, equivalent, reversed, prop, filler_kind, filler, node } => {
                let r = Term::blank(format!("r{node}"));
                let axiom = if equivalent { OWL_EQUIVALENT_CLASS } else { RDFS_SUBCLASS_OF };
                if equivalent && reversed {
                    out.push(t(r.clone(), iri(axiom), entity(class)));
                } else {
                    out.push(t(entity(class), iri(axiom), r.clone()));
                }
                out.push(t(r.clone(), iri(OWL_ON_PROPERTY), property(prop)));
                let fp = [OWL_SOME_VALUES_FROM, OWL_ALL_VALUES_FROM, OWL_HAS_VALUE][filler_kind as usize];
                out.push(t(r, iri(fp), entity(filler)));
            }
            Item::SeeAlso(a, b) => out.push(t(entity(a), iri(RDFS_SEE_ALSO), entity(b))),
            Item::Comment(a) => out.push(t(entity(a), iri(RDFS_COMMENT), lit("a comment"))),
        }
    }
    out
}

/// Up to 60 triples over at most 25 entity IRIs.
pub fn ontology() -> impl Strategy<Value = Vec<Triple>> {
    (1u8..=25)
        .prop_flat_map(|n| proptest::collection::vec(item(n), 0..30))
        .prop_map(|items| {
            let mut triples = expand(&items);
            triples.truncate(60);
            triples
        })
}

pub fn graph_of(triples: &[Triple]) -> TripleGraph {
    TripleGraph::from_triples(triples.iter().cloned())
}

/// Deduplicated copy, as a graph would hold it.
pub fn triple_set(triples: &[Triple]) -> Vec<Triple> {
    let mut out: Vec<Triple> = Vec::new();
    for t in triples {
        if !out.contains(t) {
            out.push(t.clone());
        }
    }
    out
}

pub struct BruteCatalog {
    pub entities: BTreeSet<Term>,
    pub object_properties: BTreeSet<Term>,
    pub annotation_properties: BTreeSet<String>,
}

pub fn brute_catalog(triples: &[Triple]) -> BruteCatalog {
    let ts = triple_set(triples);
    let mut classes = BTreeSet::new();
    for t in &ts {
        let p = t.predicate.value();
        if p == RDF_TYPE && CLASS_TYPES.contains(&t.object.value()) && t.object.is_iri() && t.subject.is_iri() {
            classes.insert(t.subject.clone());
        }
        if p == RDFS_SUBCLASS_OF {
            for end in [&t.subject, &t.object] {
                if end.is_iri() {
                    classes.insert(end.clone());
                }
            }
        }
    }
    let mut entities = classes.clone();
    for t in &ts {
        if t.predicate.value() == RDF_TYPE
            && (classes.contains(&t.object) || t.object == iri(OWL_NAMED_INDIVIDUAL))
        {
            entities.insert(t.subject.clone());
        }
    }
    let mut annotation_properties: BTreeSet<String> =
        DESCRIPTIVE_PREDICATES.iter().map(|s| s.to_string()).collect();
    for t in &ts {
        if t.predicate.value() == RDF_TYPE && t.object == iri(OWL_ANNOTATION_PROPERTY) && t.subject.is_iri() {
            annotation_properties.insert(t.subject.value().to_string());
        }
    }
    let mut object_properties = BTreeSet::new();
    for t in &ts {
        if t.predicate.value() == RDF_TYPE && t.object == iri(OWL_OBJECT_PROPERTY) && !t.subject.is_literal() {
            object_properties.insert(t.subject.clone());
        }
        if !t.object.is_literal() {
            object_properties.insert(t.predicate.clone());
        }
    }
    object_properties.retain(|p| {
        let v = p.value();
        !(p.is_iri()
            && (annotation_properties.contains(v)
                || STRUCTURAL_PREDICATES.contains(&v)
                || NON_SEMANTIC_PREDICATES.contains(&v)))
    });
    BruteCatalog {
        entities,
        object_properties,
        annotation_properties,
    }
}

/// `10 × described / N` by direct enumeration.
pub fn brute_describe(triples: &[Triple]) -> f64 {
    let ts = triple_set(triples);
    let cat = brute_catalog(&ts);
    if cat.entities.is_empty() {
        return 0.0;
    }
    let mut preds: BTreeSet<String> = DESCRIPTIVE_PREDICATES.iter().map(|s| s.to_string()).collect();
    preds.extend(cat.annotation_properties.iter().cloned());
    let described = cat
        .entities
        .iter()
        .filter(|e| {
            ts.iter().any(|t| {
                if &t.subject != *e || !preds.contains(t.predicate.value()) {
                    return false;
                }
                if SKOSXL_LABELS.contains(&t.predicate.value()) {
                    ts.iter().any(|u| {
                        u.subject == t.object
                            && u.predicate.value() == SKOSXL_LITERAL_FORM
                            && u.object.is_literal()
                    })
                } else {
                    true
                }
            })
        })
        .count();
    10.0 * described as f64 / cat.entities.len() as f64
}

/// Links per entity: `(predicate, other endpoint, outgoing?)`.
pub fn brute_links(triples: &[Triple]) -> Vec<(Term, BTreeSet<(Term, Term, bool)>)> {
    let ts = triple_set(triples);
    let cat = brute_catalog(&ts);
    let ops = &cat.object_properties;

    // (class, restriction node) pairs from ⊑ and ≡ in either orientation.
    let mut axioms: Vec<(Term, Term)> = Vec::new();
    for t in &ts {
        let p = t.predicate.value();
        if p == RDFS_SUBCLASS_OF || p == OWL_EQUIVALENT_CLASS {
            axioms.push((t.subject.clone(), t.object.clone()));
        }
        if p == OWL_EQUIVALENT_CLASS {
            axioms.push((t.object.clone(), t.subject.clone()));
        }
    }
    // (class, property, filler) restriction links.
    let mut restricted: Vec<(Term, Term, Term)> = Vec::new();
    for (c, r) in &axioms {
        for on in ts.iter().filter(|t| &t.subject == r && t.predicate.value() == OWL_ON_PROPERTY) {
            if !ops.contains(&on.object) {
                continue;
            }
            for f in ts.iter().filter(|t| {
                &t.subject == r && FILLER_PREDICATES.contains(&t.predicate.value()) && t.object.is_iri()
            }) {
                restricted.push((c.clone(), on.object.clone(), f.object.clone()));
            }
        }
    }

    cat.entities
        .iter()
        .map(|e| {
            let mut links = BTreeSet::new();
            for t in &ts {
                if !ops.contains(&t.predicate) {
                    continue;
                }
                if &t.subject == e && !t.object.is_literal() {
                    links.insert((t.predicate.clone(), t.object.clone(), true));
                }
                if &t.object == e {
                    links.insert((t.predicate.clone(), t.subject.clone(), false));
                }
            }
            for (c, p, f) in &restricted {
                if c == e {
                    links.insert((p.clone(), f.clone(), true));
                }
                if f == e && cat.entities.contains(c) {
                    links.insert((p.clone(), c.clone(), false));
                }
            }
            (e.clone(), links)
        })
        .collect()
}

/// Connection score by direct enumeration.
pub fn brute_connection(triples: &[Triple]) -> f64 {
    let per = brute_links(triples);
    if per.is_empty() {
        return 0.0;
    }
    let n = per.len() as f64;
    let mut cov = 0.0;
    let mut div = 0.0;
    let mut rich = 0.0;
    for (_, links) in &per {
        let total = links.len();
        let distinct: BTreeSet<&Term> = links.iter().map(|(p, _, _)| p).collect();
        if total >= 1 {
            cov += 1.0;
        }
        div += f64::min(distinct.len() as f64 / 5.0, 1.0);
        rich += f64::min(((total + 1) as f64).log(11.0), 1.0);
    }
    10.0 * (0.7 * cov / n + 0.2 * div / n + 0.1 * rich / n)
}

/// Longest simple path in edges by exhaustive search; small graphs only.
pub fn brute_longest_path(n: usize, edges: &[(usize, usize)]) -> usize {
    fn go(node: usize, edges: &[(usize, usize)], on: &mut Vec<bool>) -> usize {
        let mut best = 0;
        for &(a, b) in edges {
            if a == node && !on[b] {
                on[b] = true;
                best = best.max(1 + go(b, edges, on));
                on[b] = false;
            }
        }
        best
    }
    let mut best = 0;
    for start in 0..n {
        let mut on = vec![false; n];
        on[start] = true;
        best = best.max(go(start, edges, &mut on));
    }
    best
}
