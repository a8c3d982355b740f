//! Random graphs and datasets within the supported Turtle/TriG subset.

use httplift::rdf::vocab::{RDF_FIRST, RDF_NIL, RDF_REST, RDF_TYPE};
use httplift::rdf::{Dataset, Graph, Literal, PrefixMap, Term, Triple, XSD_BOOLEAN, XSD_DECIMAL, XSD_DOUBLE, XSD_INTEGER};
use proptest::prelude::*;

pub fn prefixes() -> PrefixMap {
    [("ex", "http://ex.org/"), ("", "http://w3id.org/http#"), ("xsd", "http://www.w3.org/2001/XMLSchema#")]
        .into_iter()
        .collect()
}

fn iri() -> impl Strategy<Value = Term> {
    prop_oneof![
        prop::sample::select(vec![
            "http://ex.org/a",
            "http://ex.org/b/c",
            "http://ex.org/",
            "http://w3id.org/http#Request",
            "urn:x:1",
            "http://ex.org/caf\u{e9}",
            "http://ex.org/a.b",
            "http://ex.org/q?x=1#frag",
            RDF_NIL,
        ])
        .prop_map(Term::named),
        "[a-z][a-z0-9_-]{0,6}".prop_map(|l| Term::named(&format!("http://ex.org/{l}"))),
    ]
}

fn blank() -> impl Strategy<Value = Term> {
    "[a-z][0-9]?".prop_map(Term::blank)
}

fn literal() -> impl Strategy<Value = Term> {
    prop_oneof![
        "[a-zA-Z0-9 \"'\\\\\n\t\r\u{e9}\u{20ac}\u{1F600}<>{}.;,#@^_:-]{0,12}".prop_map(Term::string),
        ("[a-z]{0,6}", "[a-z]{2}(-[a-zA-Z]{2})?")
            .prop_map(|(s, tag)| Term::Literal(Literal::lang(s, &tag))),
        any::<i64>().prop_map(Term::integer),
        "[+-]?[0-9]{1,5}".prop_map(|l| Term::typed(l, XSD_INTEGER)),
        "[+-]?[0-9]{0,3}\\.[0-9]{1,3}".prop_map(|l| Term::typed(l, XSD_DECIMAL)),
        "[0-9]\\.[0-9][eE][+-]?[0-9]".prop_map(|l| Term::typed(l, XSD_DOUBLE)),
        prop::sample::select(vec!["true", "false", "1", "0"]).prop_map(|l| Term::typed(l, XSD_BOOLEAN)),
        "[a-z0-9 ]{0,5}".prop_map(|l| Term::typed(l, "http://ex.org/dt")),
    ]
}

fn subject() -> impl Strategy<Value = Term> {
    prop_oneof![2 => iri(), 1 => blank()]
}

fn predicate() -> impl Strategy<Value = Term> {
    prop_oneof![
        3 => iri(),
        1 => prop::sample::select(vec![RDF_TYPE, RDF_FIRST, RDF_REST]).prop_map(Term::named),
    ]
}

fn object() -> impl Strategy<Value = Term> {
    prop_oneof![2 => iri(), 1 => blank(), 3 => literal()]
}

pub fn triple() -> impl Strategy<Value = Triple> {
    (subject(), predicate(), object()).prop_map(|(s, p, o)| Triple::new(s, p, o).unwrap())
}

pub fn graph() -> impl Strategy<Value = Graph> {
    prop::collection::vec(triple(), 0..24).prop_map(|ts| ts.into_iter().collect())
}

pub fn dataset() -> impl Strategy<Value = Dataset> {
    (
        graph(),
        prop::collection::vec((subject(), prop::collection::vec(triple(), 1..8)), 0..3),
    )
        .prop_map(|(default, named)| {
            let mut d = Dataset::from_default(default);
            for (name, triples) in named {
                d.named_graph_mut(name).unwrap().extend(triples);
            }
            d
        })
}
