//! Hierarchical Breadth: depth and branching of the class hierarchy.
//!
//! The hierarchy is read from `rdfs:subClassOf`, restriction fillers,
//! intersection members and `owl:equivalentClass` axioms, without
//! reasoning.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use serde::{Deserialize, Serialize};
use wiseowl_rdf::{TermId, TripleGraph};

use crate::model::{term_label, EntityCatalog};
use crate::vocab;

pub const DEPTH_TARGET: f64 = 5.0;
pub const BREADTH_TARGET: f64 = 3.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EdgeSource {
    Subclass,
    RestrictionFiller,
    IntersectionMember,
    Equivalence,
}

/// Parent→child relation over IRI nodes.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct HierarchyGraph {
    pub children: BTreeMap<TermId, BTreeSet<TermId>>,
    pub roots: BTreeSet<TermId>,
    /// First rule that produced each `(parent, child)` edge.
    pub edge_provenance: BTreeMap<(TermId, TermId), EdgeSource>,
    /// Named classes declared equivalent; no edge is drawn between them.
    pub named_equivalences: BTreeSet<(TermId, TermId)>,
}

impl HierarchyGraph {
    pub fn edge_count(&self) -> usize {
        self.edge_provenance.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edge_provenance.is_empty()
    }

    pub fn nodes(&self) -> BTreeSet<TermId> {
        self.edge_provenance
            .keys()
            .flat_map(|&(p, c)| [p, c])
            .collect()
    }

    fn add_edge(&mut self, parent: TermId, child: TermId, source: EdgeSource) {
        if parent == child {
            return;
        }
        self.children.entry(parent).or_default().insert(child);
        self.edge_provenance.entry((parent, child)).or_insert(source);
    }

    fn finish(&mut self) {
        let has_parent: HashSet<TermId> = self.edge_provenance.keys().map(|&(_, c)| c).collect();
        self.roots = self
            .children
            .keys()
            .copied()
            .filter(|n| !has_parent.contains(n))
            .collect();
    }
}

struct Vocab {
    sub_class_of: Option<TermId>,
    equivalent: Option<TermId>,
    intersection_of: Option<TermId>,
    first: Option<TermId>,
    rest: Option<TermId>,
    fillers: Vec<TermId>,
}

impl Vocab {
    fn resolve(graph: &TripleGraph) -> Self {
        Self {
            sub_class_of: graph.iri_id(vocab::RDFS_SUBCLASS_OF),
            equivalent: graph.iri_id(vocab::OWL_EQUIVALENT_CLASS),
            intersection_of: graph.iri_id(vocab::OWL_INTERSECTION_OF),
            first: graph.iri_id(vocab::RDF_FIRST),
            rest: graph.iri_id(vocab::RDF_REST),
            fillers: vocab::FILLER_PREDICATES
                .iter()
                .filter_map(|f| graph.iri_id(f))
                .collect(),
        }
    }

    /// Elements of the RDF list starting at `head`; stops on cycles.
    fn list_items(&self, graph: &TripleGraph, head: TermId) -> Vec<TermId> {
        let (Some(first), Some(rest)) = (self.first, self.rest) else {
            return Vec::new();
        };
        let mut out = Vec::new();
        let mut seen = HashSet::new();
        let mut cell = Some(head);
        while let Some(c) = cell {
            if !seen.insert(c) {
                break;
            }
            out.extend(graph.object_ids(c, first));
            cell = graph.object_ids(c, rest).next();
        }
        out
    }

    /// IRI fillers of `x` read as a restriction; datatypes are skipped.
    fn fillers_of<'g>(&'g self, graph: &'g TripleGraph, x: TermId) -> impl Iterator<Item = TermId> + 'g {
        self.fillers
            .iter()
            .flat_map(move |&f| graph.object_ids(x, f))
            .filter(move |&o| graph.term(o).as_iri().is_some_and(|i| !vocab::is_datatype_iri(i)))
    }

    /// Intersection lists of `x`.
    fn intersections<'g>(&'g self, graph: &'g TripleGraph, x: TermId) -> impl Iterator<Item = TermId> + 'g {
        self.intersection_of
            .into_iter()
            .flat_map(move |i| graph.object_ids(x, i))
    }
}

fn is_class_node(graph: &TripleGraph, id: TermId) -> bool {
    graph
        .term(id)
        .as_iri()
        .is_some_and(|i| !vocab::is_datatype_iri(i))
}

/// Parents of `c` contributed by the class expression `x` through the
/// intersection member rule.
fn intersection_parents(graph: &TripleGraph, v: &Vocab, x: TermId, out: &mut Vec<(TermId, EdgeSource)>) {
    for list in v.intersections(graph, x) {
        for m in v.list_items(graph, list) {
            if is_class_node(graph, m) {
                out.push((m, EdgeSource::IntersectionMember));
            } else if !graph.term(m).is_literal() {
                out.extend(v.fillers_of(graph, m).map(|f| (f, EdgeSource::IntersectionMember)));
            }
        }
    }
}

pub fn build_hierarchy(graph: &TripleGraph, _catalog: &EntityCatalog) -> HierarchyGraph {
    let v = Vocab::resolve(graph);
    let mut h = HierarchyGraph::default();
    let mut parents = Vec::new();

    if let Some(sub) = v.sub_class_of {
        for [c, _, x] in graph.match_ids(None, Some(sub), None) {
            if !is_class_node(graph, c) {
                continue;
            }
            parents.clear();
            if is_class_node(graph, x) {
                parents.push((x, EdgeSource::Subclass));
            } else if !graph.term(x).is_literal() {
                parents.extend(v.fillers_of(graph, x).map(|f| (f, EdgeSource::RestrictionFiller)));
                intersection_parents(graph, &v, x, &mut parents);
            }
            for &(p, src) in &parents {
                h.add_edge(p, c, src);
            }
        }
    }

    if let Some(eq) = v.equivalent {
        for [a, _, b] in graph.match_ids(None, Some(eq), None) {
            let (a_named, b_named) = (is_class_node(graph, a), is_class_node(graph, b));
            if a_named && b_named {
                if a != b {
                    h.named_equivalences.insert((a.min(b), a.max(b)));
                }
                continue;
            }
            for (c, x) in [(a, b), (b, a)] {
                if !is_class_node(graph, c) || graph.term(x).is_literal() {
                    continue;
                }
                parents.clear();
                intersection_parents(graph, &v, x, &mut parents);
                parents.extend(v.fillers_of(graph, x).map(|f| (f, EdgeSource::Equivalence)));
                for &(p, src) in &parents {
                    h.add_edge(p, c, src);
                }
            }
        }
    }

    h.finish();
    h
}

/// Longest parent→child path in edges, found with an explicit stack.
///
/// Paths start from the roots, or from every node when the hierarchy has
/// no root. Edges leading back to a node on the current path are skipped.
/// Exact on acyclic hierarchies; where cycles exist, each node's depth is
/// fixed the first time it is finished, which may undercount paths that
/// pass through a cycle.
pub fn max_depth(h: &HierarchyGraph) -> usize {
    if h.is_empty() {
        return 0;
    }
    let starts: Vec<TermId> = if h.roots.is_empty() {
        h.children.keys().copied().collect()
    } else {
        h.roots.iter().copied().collect()
    };

    let empty = BTreeSet::new();
    // Longest downward path from each finished node.
    let mut height: BTreeMap<TermId, usize> = BTreeMap::new();
    let mut on_path: HashSet<TermId> = HashSet::new();
    let mut best = 0;
    for start in starts {
        if height.contains_key(&start) {
            best = best.max(height[&start]);
            continue;
        }
        let mut stack: Vec<(TermId, std::collections::btree_set::Iter<'_, TermId>, usize)> = Vec::new();
        on_path.insert(start);
        stack.push((start, h.children.get(&start).unwrap_or(&empty).iter(), 0));
        while let Some((node, iter, acc)) = stack.last_mut() {
            match iter.next() {
                Some(&child) => {
                    if on_path.contains(&child) {
                        continue;
                    }
                    if let Some(&hc) = height.get(&child) {
                        *acc = (*acc).max(hc + 1);
                        continue;
                    }
                    on_path.insert(child);
                    stack.push((child, h.children.get(&child).unwrap_or(&empty).iter(), 0));
                }
                None => {
                    let (node, acc) = (*node, *acc);
                    stack.pop();
                    on_path.remove(&node);
                    height.insert(node, acc);
                    if let Some((_, _, parent_acc)) = stack.last_mut() {
                        *parent_acc = (*parent_acc).max(acc + 1);
                    }
                }
            }
        }
        best = best.max(height[&start]);
    }
    best
}

/// Mean number of direct children over nodes that have any.
pub fn mean_breadth(h: &HierarchyGraph) -> f64 {
    let parents: Vec<usize> = h.children.values().map(BTreeSet::len).filter(|&n| n > 0).collect();
    if parents.is_empty() {
        0.0
    } else {
        parents.iter().sum::<usize>() as f64 / parents.len() as f64
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HierarchyResult {
    pub score: u8,
    pub max_depth: usize,
    pub mean_breadth: f64,
    pub depth_norm: f64,
    pub breadth_norm: f64,
    pub root_count: usize,
    pub edge_count: usize,
    /// Pairs of named classes declared equivalent, as IRIs.
    pub named_equivalences: Vec<(String, String)>,
}

/// `round(10 × (depth_norm + breadth_norm) / 2)`, halves away from zero.
///
/// The mean is first snapped to 9 decimals so that float noise such as
/// `0.6 + 0.7 = 1.2999…` does not push an exact half below the midpoint.
pub fn hierarchy_score(depth_norm: f64, breadth_norm: f64) -> u8 {
    let raw = 10.0 * (depth_norm + breadth_norm) / 2.0;
    let snapped = (raw * 1e9).round() / 1e9;
    snapped.round().clamp(0.0, 10.0) as u8
}

pub fn summarize(graph: &TripleGraph, h: &HierarchyGraph) -> HierarchyResult {
    let depth = max_depth(h);
    let breadth = mean_breadth(h);
    let depth_norm = (depth as f64 / DEPTH_TARGET).min(1.0);
    let breadth_norm = (breadth / BREADTH_TARGET).min(1.0);
    HierarchyResult {
        score: hierarchy_score(depth_norm, breadth_norm),
        max_depth: depth,
        mean_breadth: breadth,
        depth_norm,
        breadth_norm,
        root_count: h.roots.len(),
        edge_count: h.edge_count(),
        named_equivalences: h
            .named_equivalences
            .iter()
            .map(|&(a, b)| (term_label(graph.term(a)), term_label(graph.term(b))))
            .collect(),
    }
}

pub fn score_hierarchy(graph: &TripleGraph, catalog: &EntityCatalog) -> HierarchyResult {
    summarize(graph, &build_hierarchy(graph, catalog))
}
