use std::collections::{BTreeMap, BTreeSet};

use super::{RdfError, Term};

/// A subject/predicate/object statement.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Triple {
    subject: Term,
    predicate: Term,
    object: Term,
}

impl Triple {
    /// Rejects literal subjects and non-IRI predicates.
    pub fn new(subject: Term, predicate: Term, object: Term) -> Result<Self, RdfError> {
        if subject.is_literal() {
            return Err(RdfError::InvalidTriple(format!(
                "literal {subject} cannot be a subject"
            )));
        }
        if !predicate.is_iri() {
            return Err(RdfError::InvalidTriple(format!(
                "{predicate} cannot be a predicate"
            )));
        }
        Ok(Self {
            subject,
            predicate,
            object,
        })
    }

    pub fn subject(&self) -> &Term {
        &self.subject
    }

    pub fn predicate(&self) -> &Term {
        &self.predicate
    }

    pub fn object(&self) -> &Term {
        &self.object
    }

    pub fn into_parts(self) -> (Term, Term, Term) {
        (self.subject, self.predicate, self.object)
    }
}

type Index = BTreeMap<Term, BTreeMap<Term, BTreeSet<Term>>>;

fn index_insert(index: &mut Index, a: &Term, b: &Term, c: &Term) -> bool {
    index
        .entry(a.clone())
        .or_default()
        .entry(b.clone())
        .or_default()
        .insert(c.clone())
}

fn index_remove(index: &mut Index, a: &Term, b: &Term, c: &Term) {
    if let Some(by_b) = index.get_mut(a) {
        if let Some(cs) = by_b.get_mut(b) {
            cs.remove(c);
            if cs.is_empty() {
                by_b.remove(b);
            }
        }
        if by_b.is_empty() {
            index.remove(a);
        }
    }
}

/// A set of triples, indexed by subject, predicate and object.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Graph {
    spo: Index,
    pos: Index,
    osp: Index,
    len: usize,
}

impl Graph {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Inserts a triple. Returns `false` when it was already present.
    pub fn insert(&mut self, triple: Triple) -> bool {
        let (s, p, o) = (&triple.subject, &triple.predicate, &triple.object);
        if !index_insert(&mut self.spo, s, p, o) {
            return false;
        }
        index_insert(&mut self.pos, p, o, s);
        index_insert(&mut self.osp, o, s, p);
        self.len += 1;
        true
    }

    /// Validates and inserts `(s, p, o)`.
    pub fn add(&mut self, s: Term, p: Term, o: Term) -> Result<bool, RdfError> {
        Ok(self.insert(Triple::new(s, p, o)?))
    }

    pub fn remove(&mut self, triple: &Triple) -> bool {
        if !self.contains(triple) {
            return false;
        }
        let (s, p, o) = (&triple.subject, &triple.predicate, &triple.object);
        index_remove(&mut self.spo, s, p, o);
        index_remove(&mut self.pos, p, o, s);
        index_remove(&mut self.osp, o, s, p);
        self.len -= 1;
        true
    }

    pub fn contains(&self, triple: &Triple) -> bool {
        self.spo
            .get(&triple.subject)
            .and_then(|m| m.get(&triple.predicate))
            .is_some_and(|os| os.contains(&triple.object))
    }

    /// All triples in subject, predicate, object order.
    pub fn iter(&self) -> impl Iterator<Item = Triple> + '_ {
        self.spo.iter().flat_map(|(s, by_p)| {
            by_p.iter().flat_map(move |(p, os)| {
                os.iter().map(move |o| Triple {
                    subject: s.clone(),
                    predicate: p.clone(),
                    object: o.clone(),
                })
            })
        })
    }

    /// Triples agreeing with every bound position.
    pub fn matching(&self, s: Option<&Term>, p: Option<&Term>, o: Option<&Term>) -> Vec<Triple> {
        let mk = |s: &Term, p: &Term, o: &Term| Triple {
            subject: s.clone(),
            predicate: p.clone(),
            object: o.clone(),
        };
        match (s, p, o) {
            (None, None, None) => self.iter().collect(),
            (Some(s), _, _) => {
                let Some(by_p) = self.spo.get(s) else {
                    return Vec::new();
                };
                let mut out = Vec::new();
                let preds: Box<dyn Iterator<Item = (&Term, &BTreeSet<Term>)>> = match p {
                    Some(p) => Box::new(by_p.get_key_value(p).into_iter()),
                    None => Box::new(by_p.iter()),
                };
                for (pred, objects) in preds {
                    match o {
                        Some(o) => {
                            if objects.contains(o) {
                                out.push(mk(s, pred, o));
                            }
                        }
                        None => out.extend(objects.iter().map(|obj| mk(s, pred, obj))),
                    }
                }
                out
            }
            (None, Some(p), _) => {
                let Some(by_o) = self.pos.get(p) else {
                    return Vec::new();
                };
                let mut out = Vec::new();
                let objs: Box<dyn Iterator<Item = (&Term, &BTreeSet<Term>)>> = match o {
                    Some(o) => Box::new(by_o.get_key_value(o).into_iter()),
                    None => Box::new(by_o.iter()),
                };
                for (obj, subjects) in objs {
                    out.extend(subjects.iter().map(|subj| mk(subj, p, obj)));
                }
                out
            }
            (None, None, Some(o)) => self
                .osp
                .get(o)
                .into_iter()
                .flat_map(|by_s| {
                    by_s.iter()
                        .flat_map(move |(s, ps)| ps.iter().map(move |p| mk(s, p, o)))
                })
                .collect(),
        }
    }

    /// Objects of `(s, p, ?)`.
    pub fn objects<'a>(&'a self, s: &Term, p: &Term) -> impl Iterator<Item = &'a Term> + 'a {
        self.spo
            .get(s)
            .and_then(|m| m.get(p))
            .into_iter()
            .flat_map(|os| os.iter())
    }

    pub fn object(&self, s: &Term, p: &Term) -> Option<&Term> {
        self.objects(s, p).next()
    }

    /// Subjects of `(?, p, o)`.
    pub fn subjects<'a>(&'a self, p: &Term, o: &Term) -> impl Iterator<Item = &'a Term> + 'a {
        self.pos
            .get(p)
            .and_then(|m| m.get(o))
            .into_iter()
            .flat_map(|ss| ss.iter())
    }

    /// Every `(s, o)` pair linked by `p`.
    pub fn pairs<'a>(&'a self, p: &Term) -> impl Iterator<Item = (&'a Term, &'a Term)> + 'a {
        self.pos
            .get(p)
            .into_iter()
            .flat_map(|by_o| by_o.iter().flat_map(|(o, ss)| ss.iter().map(move |s| (s, o))))
    }

    pub fn has(&self, s: &Term, p: &Term, o: &Term) -> bool {
        self.spo
            .get(s)
            .and_then(|m| m.get(p))
            .is_some_and(|os| os.contains(o))
    }

    /// Distinct subjects, in term order.
    pub fn subject_terms(&self) -> impl Iterator<Item = &Term> {
        self.spo.keys()
    }

    pub fn extend<I: IntoIterator<Item = Triple>>(&mut self, triples: I) {
        for t in triples {
            self.insert(t);
        }
    }
}

impl FromIterator<Triple> for Graph {
    fn from_iter<I: IntoIterator<Item = Triple>>(iter: I) -> Self {
        let mut g = Graph::new();
        g.extend(iter);
        g
    }
}

/// A default graph plus graphs keyed by IRI or blank node name.
///
/// Blank node labels are shared across all graphs of a dataset.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Dataset {
    default_graph: Graph,
    named: BTreeMap<Term, Graph>,
}

impl Dataset {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_default(graph: Graph) -> Self {
        Self {
            default_graph: graph,
            named: BTreeMap::new(),
        }
    }

    pub fn default_graph(&self) -> &Graph {
        &self.default_graph
    }

    pub fn default_graph_mut(&mut self) -> &mut Graph {
        &mut self.default_graph
    }

    pub fn named_graph(&self, name: &Term) -> Option<&Graph> {
        self.named.get(name)
    }

    /// Returns the named graph, creating it when absent. Literal names are rejected.
    pub fn named_graph_mut(&mut self, name: Term) -> Result<&mut Graph, RdfError> {
        if name.is_literal() {
            return Err(RdfError::InvalidTriple(format!(
                "literal {name} cannot name a graph"
            )));
        }
        Ok(self.named.entry(name).or_default())
    }

    pub fn named_graphs(&self) -> impl Iterator<Item = (&Term, &Graph)> {
        self.named.iter()
    }

    /// Total number of quads.
    pub fn len(&self) -> usize {
        self.default_graph.len() + self.named.values().map(Graph::len).sum::<usize>()
    }

    pub fn is_empty(&self) -> bool {
        self.default_graph.is_empty() && self.named.values().all(Graph::is_empty)
    }

    /// Merges another dataset into this one. Blank labels are taken as-is.
    pub fn merge(&mut self, other: Dataset) {
        self.default_graph.extend(other.default_graph.iter());
        for (name, graph) in other.named {
            self.named.entry(name).or_default().extend(graph.iter());
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iri(s: &str) -> Term {
        Term::named(&format!("http://example.org/{s}"))
    }

    #[test]
    fn insert_singleton_and_idempotent() {
        let mut g = Graph::new();
        let t = Triple::new(iri("s"), iri("p"), iri("o")).unwrap();
        assert!(g.insert(t.clone()));
        assert_eq!(g.len(), 1);
        assert!(!g.insert(t.clone()));
        assert_eq!(g.len(), 1);
        assert_eq!(g.iter().collect::<Vec<_>>(), vec![t]);
    }

    #[test]
    fn literal_subject_rejected() {
        assert!(Triple::new(Term::string("x"), iri("p"), iri("o")).is_err());
        assert!(Triple::new(iri("s"), Term::blank("b"), iri("o")).is_err());
        assert!(Graph::new().add(Term::string("x"), iri("p"), iri("o")).is_err());
    }

    #[test]
    fn matching_positions() {
        let mut g = Graph::new();
        g.add(iri("a"), iri("p"), iri("b")).unwrap();
        g.add(iri("a"), iri("q"), iri("c")).unwrap();
        g.add(iri("d"), iri("p"), iri("b")).unwrap();
        assert_eq!(g.matching(None, None, None).len(), 3);
        assert_eq!(g.matching(Some(&iri("a")), None, None).len(), 2);
        assert_eq!(g.matching(None, Some(&iri("p")), None).len(), 2);
        assert_eq!(g.matching(None, None, Some(&iri("b"))).len(), 2);
        assert_eq!(
            g.matching(Some(&iri("a")), Some(&iri("p")), Some(&iri("b"))).len(),
            1
        );
        assert!(g
            .matching(Some(&iri("a")), Some(&iri("p")), Some(&iri("c")))
            .is_empty());
        assert!(Graph::new().matching(Some(&iri("a")), None, None).is_empty());
    }

    #[test]
    fn remove_keeps_indexes_consistent() {
        let mut g = Graph::new();
        let t = Triple::new(iri("a"), iri("p"), iri("b")).unwrap();
        g.insert(t.clone());
        assert!(g.remove(&t));
        assert!(!g.remove(&t));
        assert!(g.is_empty());
        assert!(g.matching(None, Some(&iri("p")), None).is_empty());
        assert!(g.matching(None, None, Some(&iri("b"))).is_empty());
    }

    #[test]
    fn dataset_rejects_literal_graph_name() {
        let mut d = Dataset::new();
        assert!(d.named_graph_mut(Term::string("g")).is_err());
        d.named_graph_mut(iri("g"))
            .unwrap()
            .add(iri("a"), iri("p"), iri("b"))
            .unwrap();
        assert_eq!(d.len(), 1);
    }
}
