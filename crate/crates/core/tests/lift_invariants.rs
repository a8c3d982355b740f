mod common;

use std::collections::BTreeSet;

use common::*;
use httplift::lift::vocab::*;
use httplift::lift::{lift_conversation, prefixes, unknown_terms, LiftOptions};
use httplift::rdf::{serialize_trig, Dataset, Term};
use proptest::prelude::*;

fn t(s: &str) -> Term {
    Term::named(s)
}

fn check_invariants(d: &Dataset) -> Result<(), TestCaseError> {
    let g = d.default_graph();
    for q in g.subjects(&t(RDF_TYPE), &t(REQUEST)) {
        prop_assert_eq!(g.objects(q, &t(MTHD_PROP)).count(), 1);
        prop_assert_eq!(g.objects(q, &t(URI_PROP)).count(), 1);
    }
    for r in g.subjects(&t(RDF_TYPE), &t(RESPONSE)) {
        prop_assert_eq!(g.objects(r, &t(SC_PROP)).count(), 1);
    }
    for (m, _) in g.pairs(&t(BODY)) {
        prop_assert_eq!(g.objects(m, &t(BODY)).count(), 1);
    }
    // chain: hdr / isLocationHeader / link implies location
    for (m, h) in g.pairs(&t(HDR)) {
        if g.has(h, &t(IS_LOCATION_HEADER), h) {
            for u in g.objects(h, &t(LINK)) {
                prop_assert!(g.has(m, &t(LOCATION), u));
            }
        }
    }
    // and nothing else produces location
    for (m, u) in g.pairs(&t(LOCATION)) {
        let derived = g
            .objects(m, &t(HDR))
            .any(|h| g.has(h, &t(IS_LOCATION_HEADER), h) && g.has(h, &t(LINK), u));
        prop_assert!(derived);
    }
    for r in g.subjects(&t(RDF_TYPE), &t(FINAL_RESPONSE)) {
        prop_assert!(g.has(r, &t(RDF_TYPE), &t(RESPONSE)));
        prop_assert!(!g.has(r, &t(RDF_TYPE), &t(INTERIM_RESPONSE)));
    }
    prop_assert_eq!(unknown_terms(d), BTreeSet::new());
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn lifted_datasets_keep_invariants(c in conversation()) {
        let d = lift_conversation(&c, &LiftOptions::default()).unwrap();
        check_invariants(&d)?;
        let with_base = lift_conversation(&c, &LiftOptions::with_base("http://example.org/run/")).unwrap();
        check_invariants(&with_base)?;
    }

    #[test]
    fn lifting_is_deterministic(c in conversation()) {
        let opts = LiftOptions::default();
        let a = serialize_trig(&lift_conversation(&c, &opts).unwrap(), &prefixes());
        let b = serialize_trig(&lift_conversation(&c, &opts).unwrap(), &prefixes());
        prop_assert_eq!(a, b);
    }

    #[test]
    fn uri_nodes_are_unified(c in conversation()) {
        let d = lift_conversation(&c, &LiftOptions::default()).unwrap();
        let g = d.default_graph();
        let mut seen = BTreeSet::new();
        for u in g.subjects(&t(RDF_TYPE), &t(URI)) {
            let id = g.object(u, &t(ID_RES)).unwrap().clone();
            let query = g.object(u, &t(QUERY)).cloned();
            let fragment = g.object(u, &t(FRAGMENT)).cloned();
            prop_assert!(seen.insert((id, query, fragment)));
        }
    }
}

#[test]
fn golden_fixtures_keep_invariants() {
    for text in [REGISTRAR, REGISTRAR_TURTLE, PARAMS] {
        check_invariants(&lift_text(text)).unwrap();
    }
}
