use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::io::{self, Write};

use crate::term::{Term, TermKind, Triple, TripleRef};

/// Dense handle for a term interned in one [`TripleGraph`].
///
/// Ids are assigned in term sort order, so comparing two ids of the same
/// graph compares the terms themselves.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TermId(u32);

impl TermId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for TermId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

/// Triple as three term ids, always in subject, predicate, object order.
pub type TripleIds = [TermId; 3];

/// Immutable, indexed set of triples.
///
/// Three sorted permutations (SPO, POS, OSP) answer every triple pattern
/// with a single range scan.
#[derive(Clone, Default)]
pub struct TripleGraph {
    terms: Vec<Term>,
    iri_count: usize,
    spo: Vec<TripleIds>,
    pos: Vec<TripleIds>,
    osp: Vec<TripleIds>,
    prefixes: BTreeMap<String, String>,
}

impl fmt::Debug for TripleGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("TripleGraph")
            .field("triples", &self.spo.len())
            .field("terms", &self.terms.len())
            .field("prefixes", &self.prefixes)
            .finish()
    }
}

impl TripleGraph {
    pub fn builder() -> GraphBuilder {
        GraphBuilder::default()
    }

    pub fn from_triples(triples: impl IntoIterator<Item = Triple>) -> Self {
        let mut builder = GraphBuilder::default();
        for t in triples {
            builder.insert(t.subject, t.predicate, t.object);
        }
        builder.build()
    }

    pub fn len(&self) -> usize {
        self.spo.len()
    }

    pub fn is_empty(&self) -> bool {
        self.spo.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Namespace prefixes declared in the source document.
    pub fn prefixes(&self) -> &BTreeMap<String, String> {
        &self.prefixes
    }

    pub fn term(&self, id: TermId) -> &Term {
        &self.terms[id.index()]
    }

    pub fn term_id(&self, term: &Term) -> Option<TermId> {
        self.terms.binary_search(term).ok().map(|i| TermId(i as u32))
    }

    /// Looks up an IRI without allocating a [`Term`].
    pub fn iri_id(&self, iri: &str) -> Option<TermId> {
        self.terms[..self.iri_count]
            .binary_search_by(|t| t.value().cmp(iri))
            .ok()
            .map(|i| TermId(i as u32))
    }

    pub fn triple_ref(&self, ids: TripleIds) -> TripleRef<'_> {
        TripleRef {
            subject: self.term(ids[0]),
            predicate: self.term(ids[1]),
            object: self.term(ids[2]),
        }
    }

    /// Every triple in SPO order.
    pub fn iter(&self) -> impl Iterator<Item = TripleRef<'_>> + '_ {
        self.spo.iter().map(move |t| self.triple_ref(*t))
    }

    pub fn iter_ids(&self) -> impl Iterator<Item = TripleIds> + '_ {
        self.spo.iter().copied()
    }

    /// Triples agreeing with every bound position, as id triples.
    ///
    /// The order is that of the index serving the pattern, so it is fixed
    /// for a given graph.
    pub fn match_ids(
        &self,
        s: Option<TermId>,
        p: Option<TermId>,
        o: Option<TermId>,
    ) -> MatchIds<'_> {
        let z = TermId(0);
        let (rows, perm, key, n): (&[TripleIds], Perm, TripleIds, usize) = match (s, p, o) {
            (Some(s), Some(p), Some(o)) => (&self.spo, Perm::Spo, [s, p, o], 3),
            (Some(s), Some(p), None) => (&self.spo, Perm::Spo, [s, p, z], 2),
            (Some(s), None, None) => (&self.spo, Perm::Spo, [s, z, z], 1),
            (Some(s), None, Some(o)) => (&self.osp, Perm::Osp, [o, s, z], 2),
            (None, Some(p), Some(o)) => (&self.pos, Perm::Pos, [p, o, z], 2),
            (None, Some(p), None) => (&self.pos, Perm::Pos, [p, z, z], 1),
            (None, None, Some(o)) => (&self.osp, Perm::Osp, [o, z, z], 1),
            (None, None, None) => (&self.spo, Perm::Spo, [z, z, z], 0),
        };
        let key = &key[..n];
        let start = rows.partition_point(|row| prefix_cmp(row, key) == Ordering::Less);
        let len = rows[start..].partition_point(|row| prefix_cmp(row, key) == Ordering::Equal);
        MatchIds {
            rows: &rows[start..start + len],
            perm,
        }
    }

    /// Triples agreeing with every bound term. A bound term absent from the
    /// graph yields an empty stream.
    pub fn match_pattern<'a>(
        &'a self,
        s: Option<&Term>,
        p: Option<&Term>,
        o: Option<&Term>,
    ) -> impl Iterator<Item = TripleRef<'a>> + 'a {
        let resolve = |t: Option<&Term>| match t {
            None => Some(None),
            Some(t) => self.term_id(t).map(Some),
        };
        let ids = match (resolve(s), resolve(p), resolve(o)) {
            (Some(s), Some(p), Some(o)) => Some(self.match_ids(s, p, o)),
            _ => None,
        };
        ids.into_iter()
            .flatten()
            .map(move |t| self.triple_ref(t))
    }

    pub fn contains(&self, triple: &Triple) -> bool {
        self.match_pattern(
            Some(&triple.subject),
            Some(&triple.predicate),
            Some(&triple.object),
        )
        .next()
        .is_some()
    }

    pub fn objects(&self, s: &Term, p: &Term) -> Vec<&Term> {
        self.match_pattern(Some(s), Some(p), None)
            .map(|t| t.object)
            .collect()
    }

    pub fn subjects(&self, p: &Term, o: &Term) -> Vec<&Term> {
        self.match_pattern(None, Some(p), Some(o))
            .map(|t| t.subject)
            .collect()
    }

    /// Object ids of `(s, p, ?)` in object order.
    pub fn object_ids(&self, s: TermId, p: TermId) -> impl Iterator<Item = TermId> + '_ {
        self.match_ids(Some(s), Some(p), None).map(|t| t[2])
    }

    /// Subject ids of `(?, p, o)` in subject order.
    pub fn subject_ids(&self, p: TermId, o: TermId) -> impl Iterator<Item = TermId> + '_ {
        self.match_ids(None, Some(p), Some(o)).map(|t| t[0])
    }

    /// Distinct predicates in use, sorted.
    pub fn predicate_ids(&self) -> Vec<TermId> {
        let mut out: Vec<TermId> = Vec::new();
        for row in &self.pos {
            if out.last() != Some(&row[0]) {
                out.push(row[0]);
            }
        }
        out
    }

    /// Writes the graph as canonical N-Triples: one statement per line,
    /// sorted by subject, predicate, object.
    pub fn write_ntriples<W: Write>(&self, mut out: W) -> io::Result<()> {
        for t in self.iter() {
            writeln!(out, "{t}")?;
        }
        Ok(())
    }

    pub fn to_ntriples(&self) -> String {
        let mut buf = Vec::new();
        self.write_ntriples(&mut buf).expect("writing to a Vec");
        String::from_utf8(buf).expect("terms are UTF-8")
    }
}

#[derive(Clone, Copy)]
enum Perm {
    Spo,
    Pos,
    Osp,
}

impl Perm {
    fn to_spo(self, row: TripleIds) -> TripleIds {
        match self {
            Perm::Spo => row,
            Perm::Pos => [row[2], row[0], row[1]],
            Perm::Osp => [row[1], row[2], row[0]],
        }
    }
}

fn prefix_cmp(row: &TripleIds, key: &[TermId]) -> Ordering {
    row[..key.len()].cmp(key)
}

/// Iterator returned by [`TripleGraph::match_ids`].
pub struct MatchIds<'a> {
    rows: &'a [TripleIds],
    perm: Perm,
}

impl Iterator for MatchIds<'_> {
    type Item = TripleIds;

    fn next(&mut self) -> Option<TripleIds> {
        let (first, rest) = self.rows.split_first()?;
        self.rows = rest;
        Some(self.perm.to_spo(*first))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        (self.rows.len(), Some(self.rows.len()))
    }
}

impl ExactSizeIterator for MatchIds<'_> {}

/// Accumulates triples, interning terms, then freezes into a
/// [`TripleGraph`]. Duplicate triples collapse at build time.
#[derive(Default)]
pub struct GraphBuilder {
    interner: HashMap<Term, u32>,
    terms: Vec<Term>,
    triples: Vec<[u32; 3]>,
    prefixes: BTreeMap<String, String>,
}

impl GraphBuilder {
    fn intern(&mut self, term: Term) -> u32 {
        if let Some(&id) = self.interner.get(&term) {
            return id;
        }
        let id = u32::try_from(self.terms.len()).expect("more than u32::MAX distinct terms");
        self.terms.push(term.clone());
        self.interner.insert(term, id);
        id
    }

    /// # Panics
    ///
    /// Panics when the subject is a literal or the predicate is not an IRI.
    pub fn insert(&mut self, subject: Term, predicate: Term, object: Term) {
        assert!(!subject.is_literal(), "literal subject: {subject}");
        assert!(predicate.is_iri(), "non-IRI predicate: {predicate}");
        let s = self.intern(subject);
        let p = self.intern(predicate);
        let o = self.intern(object);
        self.triples.push([s, p, o]);
    }

    pub fn add_prefix(&mut self, prefix: impl Into<String>, namespace: impl Into<String>) {
        self.prefixes.insert(prefix.into(), namespace.into());
    }

    pub fn len_hint(&self) -> usize {
        self.triples.len()
    }

    pub fn build(self) -> TripleGraph {
        let GraphBuilder {
            interner,
            terms,
            triples,
            prefixes,
        } = self;
        drop(interner);

        let mut order: Vec<u32> = (0..terms.len() as u32).collect();
        order.sort_unstable_by(|a, b| terms[*a as usize].cmp(&terms[*b as usize]));
        let mut remap = vec![TermId(0); terms.len()];
        for (new, old) in order.iter().enumerate() {
            remap[*old as usize] = TermId(new as u32);
        }
        let mut slots: Vec<Option<Term>> = terms.into_iter().map(Some).collect();
        let terms: Vec<Term> = order
            .iter()
            .map(|old| slots[*old as usize].take().expect("each term moved once"))
            .collect();
        drop(slots);
        let iri_count = terms.partition_point(|t| t.kind() == TermKind::Iri);

        let mut spo: Vec<TripleIds> = triples
            .into_iter()
            .map(|[s, p, o]| [remap[s as usize], remap[p as usize], remap[o as usize]])
            .collect();
        spo.sort_unstable();
        spo.dedup();
        let mut pos: Vec<TripleIds> = spo.iter().map(|&[s, p, o]| [p, o, s]).collect();
        pos.sort_unstable();
        let mut osp: Vec<TripleIds> = spo.iter().map(|&[s, p, o]| [o, s, p]).collect();
        osp.sort_unstable();

        TripleGraph {
            terms,
            iri_count,
            spo,
            pos,
            osp,
            prefixes,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ex(local: &str) -> Term {
        Term::iri(format!("http://example.org/{local}"))
    }

    const LABEL: &str = "http://www.w3.org/2000/01/rdf-schema#label";

    fn sample() -> TripleGraph {
        TripleGraph::from_triples([
            Triple::new(ex("X"), Term::iri(LABEL), Term::literal("one")),
            Triple::new(ex("X"), Term::iri(LABEL), Term::literal("two")),
            Triple::new(ex("X"), ex("p"), ex("Y")),
            Triple::new(ex("Y"), ex("p"), ex("X")),
            Triple::new(Term::blank("b0"), ex("p"), ex("Y")),
            Triple::new(ex("X"), ex("p"), ex("Y")),
        ])
    }

    #[test]
    fn duplicates_collapse() {
        assert_eq!(sample().len(), 5);
    }

    #[test]
    fn match_by_subject_and_predicate() {
        let g = sample();
        let hits: Vec<_> = g
            .match_pattern(Some(&ex("X")), Some(&Term::iri(LABEL)), None)
            .collect();
        assert_eq!(hits.len(), 2);
        assert_eq!(hits[0].object, &Term::literal("one"));
    }

    #[test]
    fn wildcard_and_absent_terms() {
        let g = sample();
        assert_eq!(g.match_pattern(None, None, None).count(), g.len());
        assert_eq!(g.match_pattern(Some(&ex("nope")), None, None).count(), 0);
        assert!(g.objects(&ex("Y"), &Term::iri(LABEL)).is_empty());
    }

    #[test]
    fn every_pattern_shape_agrees_with_a_filter() {
        let g = sample();
        let all: Vec<Triple> = g.iter().map(|t| t.to_owned()).collect();
        let terms: Vec<Option<Term>> = vec![
            None,
            Some(ex("X")),
            Some(ex("Y")),
            Some(ex("p")),
            Some(Term::iri(LABEL)),
            Some(Term::blank("b0")),
        ];
        for s in &terms {
            for p in &terms {
                for o in &terms {
                    let mut got: Vec<Triple> = g
                        .match_pattern(s.as_ref(), p.as_ref(), o.as_ref())
                        .map(|t| t.to_owned())
                        .collect();
                    got.sort();
                    let want: Vec<Triple> = all
                        .iter()
                        .filter(|t| {
                            s.as_ref().map_or(true, |s| &t.subject == s)
                                && p.as_ref().map_or(true, |p| &t.predicate == p)
                                && o.as_ref().map_or(true, |o| &t.object == o)
                        })
                        .cloned()
                        .collect();
                    assert_eq!(got, want, "pattern {s:?} {p:?} {o:?}");
                }
            }
        }
    }

    #[test]
    fn iri_lookup_without_allocation() {
        let g = sample();
        let id = g.iri_id("http://example.org/X").unwrap();
        assert_eq!(g.term(id), &ex("X"));
        assert_eq!(g.iri_id("http://example.org/Z"), None);
        assert_eq!(g.term_id(&Term::literal("two")).map(|i| g.term(i).value()), Some("two"));
    }

    #[test]
    fn ids_follow_term_order() {
        let g = sample();
        for w in (0..g.term_count()).collect::<Vec<_>>().windows(2) {
            assert!(g.terms[w[0]] < g.terms[w[1]]);
        }
    }

    #[test]
    fn canonical_output_is_sorted() {
        let text = sample().to_ntriples();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 5);
        assert_eq!(
            lines[0],
            "<http://example.org/X> <http://example.org/p> <http://example.org/Y> ."
        );
        assert!(lines.last().unwrap().starts_with("_:b0 "));
    }
}
