//! The seven competency questions as fixed graph queries.
//!
//! Each query walks the default graph with index lookups; only CQ6 looks
//! inside body graphs. Results follow graph order, which is deterministic.

use std::collections::{BTreeMap, BTreeSet};

use crate::lift::vocab::*;
use crate::rdf::vocab::{RDF_FIRST, RDF_NIL, RDF_REST};
use crate::rdf::{Dataset, Graph, Term};
use crate::validate::media_range_matches;

pub type Binding = BTreeMap<String, Term>;

fn t(iri: &str) -> Term {
    Term::named(iri)
}

fn binding<const N: usize>(pairs: [(&str, Term); N]) -> Binding {
    pairs.into_iter().map(|(k, v)| (k.to_owned(), v)).collect()
}

/// CQ1: media types of messages that have a body. Variables `m`, `mt`.
pub fn cq1_media_types(d: &Dataset) -> Vec<Binding> {
    let g = d.default_graph();
    g.pairs(&t(CONTENT_TYPE))
        .filter(|(m, _)| g.object(m, &t(BODY)).is_some())
        .map(|(m, mt)| binding([("m", m.clone()), ("mt", mt.clone())]))
        .collect()
}

fn status_numbers<'a>(g: &'a Graph, r: &Term) -> impl Iterator<Item = &'a Term> + 'a {
    let sc = t(STATUS_CODE_NUMBER);
    g.objects(r, &t(SC_PROP))
        .flat_map(move |s| g.objects(s, &sc))
}

/// CQ2: status code number of every response to every request.
/// Variables `q`, `status`.
pub fn cq2_interaction_status(d: &Dataset) -> Vec<Binding> {
    let g = d.default_graph();
    let mut out = Vec::new();
    for (q, r) in g.pairs(&t(RESP)) {
        for n in status_numbers(g, r) {
            out.push(binding([("q", q.clone()), ("status", n.clone())]));
        }
    }
    out
}

/// CQ3: Location targets of responses. Variable `next`.
pub fn cq3_locations(d: &Dataset) -> Vec<Binding> {
    let g = d.default_graph();
    let mut out = Vec::new();
    for (_, r) in g.pairs(&t(RESP)) {
        for next in g.objects(r, &t(LOCATION)) {
            out.push(binding([("next", next.clone())]));
        }
    }
    out
}

/// CQ4: final status of every request whose URI is the Location target of
/// some response. Variable `status`.
pub fn cq4_conversation_status(d: &Dataset) -> Vec<Binding> {
    let g = d.default_graph();
    let mut out = Vec::new();
    for (_, r1) in g.pairs(&t(RESP)) {
        for next in g.objects(r1, &t(LOCATION)) {
            for q2 in g.subjects(&t(URI_PROP), next) {
                for r2 in g.objects(q2, &t(RESP)) {
                    if g.has(r2, &t(RDF_TYPE), &t(INTERIM_RESPONSE)) {
                        continue;
                    }
                    for n in status_numbers(g, r2) {
                        out.push(binding([("status", n.clone())]));
                    }
                }
            }
        }
    }
    out
}

fn lexical(term: &Term) -> Option<&str> {
    term.as_literal().map(|l| l.lexical())
}

/// CQ5: whether some response to `request` has a Content-Type that matches
/// one of the request's accepted media types. False when either is absent.
pub fn cq5_negotiation(d: &Dataset, request: &Term) -> bool {
    let g = d.default_graph();
    let accepted: Vec<&str> = g
        .objects(request, &t(ACCEPT))
        .flat_map(|a| g.objects(a, &t(MEDIA_TYPE)))
        .filter_map(lexical)
        .collect();
    g.objects(request, &t(RESP))
        .flat_map(|r| g.objects(r, &t(CONTENT_TYPE)))
        .filter_map(lexical)
        .any(|ct| accepted.iter().any(|mt| mt.contains(ct) || ct.contains(mt)))
}

/// Like [`cq5_negotiation`], but treating `*/*` and `type/*` as wildcards.
pub fn cq5_negotiation_with_wildcards(d: &Dataset, request: &Term) -> bool {
    let g = d.default_graph();
    let accepted: Vec<&str> = g
        .objects(request, &t(ACCEPT))
        .flat_map(|a| g.objects(a, &t(MEDIA_TYPE)))
        .filter_map(lexical)
        .collect();
    g.objects(request, &t(RESP))
        .flat_map(|r| g.objects(r, &t(CONTENT_TYPE)))
        .filter_map(lexical)
        .any(|ct| accepted.iter().any(|mt| media_range_matches(mt, ct)))
}

/// Items of the collection headed by `head`, or `None` when `head` is not a
/// well-formed list.
fn collection(g: &Graph, head: &Term) -> Option<Vec<Term>> {
    let nil = t(RDF_NIL);
    let mut items = Vec::new();
    let mut seen = BTreeSet::new();
    let mut node = head.clone();
    while node != nil {
        if !seen.insert(node.clone()) {
            return None;
        }
        items.push(g.object(&node, &t(RDF_FIRST))?.clone());
        node = g.object(&node, &t(RDF_REST))?.clone();
    }
    Some(items)
}

/// CQ6: values of `prop` inside RDF body graphs, with collections flattened
/// in list order.
pub fn cq6_body_values(d: &Dataset, prop: &str) -> Vec<Term> {
    let g = d.default_graph();
    let p = t(prop);
    let mut out = Vec::new();
    for (_, content) in g.pairs(&t(BODY)) {
        for name in g.objects(content, &t(ABOUT)) {
            let Some(body) = d.named_graph(name) else { continue };
            for (_, o) in body.pairs(&p) {
                match collection(body, o) {
                    Some(items) => out.extend(items),
                    None => out.push(o.clone()),
                }
            }
        }
    }
    out
}

/// CQ7: values of the query parameter `name` in request URIs.
pub fn cq7_query_param(d: &Dataset, name: &str) -> Vec<Term> {
    let g = d.default_graph();
    let wanted = Term::string(name);
    let mut out = Vec::new();
    for (_, u) in g.pairs(&t(URI_PROP)) {
        for p in g.objects(u, &t(QUERY_PARAMS)) {
            if g.has(p, &t(PARAM_NAME), &wanted) {
                out.extend(g.objects(p, &t(PARAM_VALUE)).cloned());
            }
        }
    }
    out
}

/// Request nodes, in graph order.
pub fn requests(d: &Dataset) -> Vec<Term> {
    d.default_graph()
        .subjects(&t(RDF_TYPE), &t(REQUEST))
        .cloned()
        .collect()
}
