use std::collections::{BTreeSet, VecDeque};

use super::{Graph, Term};

/// Property path over predicates: a single predicate, a sequence, or
/// zero-or-more repetition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PathExpr {
    Pred(Term),
    Seq(Box<PathExpr>, Box<PathExpr>),
    Star(Box<PathExpr>),
}

impl PathExpr {
    pub fn pred(iri: &str) -> Self {
        PathExpr::Pred(Term::named(iri))
    }

    pub fn seq(first: PathExpr, then: PathExpr) -> Self {
        PathExpr::Seq(Box::new(first), Box::new(then))
    }

    pub fn star(inner: PathExpr) -> Self {
        PathExpr::Star(Box::new(inner))
    }
}

/// Terms reachable from `start` along `path`.
pub fn eval_path(graph: &Graph, start: &Term, path: &PathExpr) -> BTreeSet<Term> {
    let mut from = BTreeSet::new();
    from.insert(start.clone());
    eval_from(graph, from, path)
}

fn eval_from(graph: &Graph, from: BTreeSet<Term>, path: &PathExpr) -> BTreeSet<Term> {
    match path {
        PathExpr::Pred(p) => from
            .iter()
            .flat_map(|s| graph.objects(s, p).cloned())
            .collect(),
        PathExpr::Seq(a, b) => {
            let mid = eval_from(graph, from, a);
            eval_from(graph, mid, b)
        }
        PathExpr::Star(inner) => {
            let mut seen = from.clone();
            let mut queue: VecDeque<Term> = from.into_iter().collect();
            while let Some(node) = queue.pop_front() {
                let mut one = BTreeSet::new();
                one.insert(node);
                for next in eval_from(graph, one, inner) {
                    if seen.insert(next.clone()) {
                        queue.push_back(next);
                    }
                }
            }
            seen
        }
    }
}
