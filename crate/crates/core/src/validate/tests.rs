use proptest::prelude::*;

use super::*;
use crate::ingest::load_transcript;
use crate::lift::{lift_conversation, LiftOptions};
use crate::rdf::parse_trig;

const REGISTRAR: &str = include_str!("../../tests/fixtures/registrar.http");
const REGISTRAR_TURTLE: &str = include_str!("../../tests/fixtures/registrar_turtle.http");

fn lift_text(text: &str) -> Dataset {
    lift_conversation(&load_transcript(text).unwrap(), &LiftOptions::default()).unwrap()
}

fn trig(body: &str) -> Dataset {
    parse_trig(&format!(
        "@prefix : <http://w3id.org/http#> . @prefix sc: <http://w3id.org/http/sc#> .\n\
         @prefix mthd: <http://w3id.org/http/mthd#> . @prefix hds: <http://w3id.org/http/headers#> .\n{body}"
    ))
    .unwrap()
}

fn fired(d: &Dataset) -> Vec<&'static str> {
    validate(d).fired_rules()
}

#[test]
fn registrar_is_clean() {
    assert!(validate(&lift_text(REGISTRAR)).is_clean());
    assert!(validate(&lift_text(REGISTRAR_TURTLE)).is_clean());
}

#[test]
fn deleted_content_type_is_r6() {
    let text = REGISTRAR.replace("Content-Type: application/json\n", "");
    let report = validate(&lift_text(&text));
    assert_eq!(report.findings.len(), 1);
    assert_eq!(report.findings[0].rule_id, "R6");
}

#[test]
fn head_with_body_is_r7() {
    let text = "HEAD /x HTTP/1.1\nHost: a\n---\nHTTP/1.1 200 OK\nContent-Type: text/plain\n\nhello\n";
    let report = validate(&lift_text(text));
    assert_eq!(report.findings.len(), 1);
    assert_eq!(report.findings[0].rule_id, "R7");
}

#[test]
fn functional_and_completeness() {
    let d = trig("_:q a :Request ; :uri <urn:a>, <urn:b> .");
    assert_eq!(fired(&d), ["R1", "R2"]);
    let d = trig("_:r a :Response . _:s a :Response ; :sc _:c .");
    let report = validate(&d);
    assert_eq!(report.fired_rules(), ["R3"]);
    assert_eq!(report.findings.len(), 2);
}

#[test]
fn status_sanity() {
    let d = trig("_:r a :Response ; :sc _:c . _:c :statusCodeNumber 99 .");
    let report = validate(&d);
    assert_eq!(report.fired_rules(), ["R4"]);
    assert!(!report.has_violations());
    let d = trig("_:r a :Response ; :sc sc:OK . sc:OK :statusCodeNumber 201 .");
    assert!(validate(&d).has_violations());
    let d = trig("_:r a :Response ; :sc _:c . _:c :statusCodeNumber 1000 .");
    assert!(validate(&d).has_violations());
    let d = trig("_:r a :Response ; :sc _:c . _:c :statusCodeNumber \"two hundred\" .");
    assert!(validate(&d).has_violations());
}

#[test]
fn aborted_har_entry_warns() {
    let har = r#"{"log": {"entries": [{"request": {"method": "GET", "url": "http://a/"},
        "response": {"status": 0, "headers": []}}]}}"#;
    let d = lift_conversation(&crate::ingest::load_har(har).unwrap(), &LiftOptions::default()).unwrap();
    let report = validate(&d);
    assert_eq!(report.fired_rules(), ["R4"]);
    assert!(!report.has_violations());
}

#[test]
fn interim_responses_do_not_count_as_final() {
    let text = "PUT /x HTTP/1.1\nHost: a\n---\nHTTP/1.1 100 Continue\n---\nHTTP/1.1 102 Processing\n---\nHTTP/1.1 201 Created\n";
    assert!(validate(&lift_text(text)).is_clean());
    let d = trig("_:q :resp _:a, _:b . _:a a :FinalResponse . _:b a :FinalResponse .");
    assert_eq!(fired(&d), ["R5"]);
}

#[test]
fn negotiation() {
    let base = "GET /x HTTP/1.1\nHost: a\nAccept: ACCEPT\n---\nHTTP/1.1 200 OK\nContent-Type: CT\n\nbody\n";
    let run = |accept: &str, ct: &str| fired(&lift_text(&base.replace("ACCEPT", accept).replace("CT", ct)));
    assert!(run("application/json", "application/json").is_empty());
    assert!(run("application/json", "application/json; charset=utf-8").is_empty());
    assert!(run("*/*", "image/png").is_empty());
    assert!(run("text/*", "text/html").is_empty());
    assert!(run("text/html, application/xml", "application/xml").is_empty());
    assert_eq!(run("text/html", "application/json"), ["R8"]);
    assert_eq!(run("text/*", "image/png"), ["R8"]);
    // no Accept header at all: nothing to negotiate
    let text = "GET /x HTTP/1.1\nHost: a\n---\nHTTP/1.1 200 OK\nContent-Type: image/png\n\nbody\n";
    assert!(fired(&lift_text(text)).is_empty());
}

#[test]
fn method_tokens() {
    assert_eq!(fired(&trig("_:m :methodName \"\" .")), ["R9"]);
    assert_eq!(fired(&trig("_:m :methodName \"GE T\" .")), ["R9"]);
    assert_eq!(fired(&trig("_:m :methodName \"GET(\" .")), ["R9"]);
    assert!(fired(&trig("_:m :methodName \"PURGE\" .")).is_empty());
}

#[test]
fn unresolvable_location() {
    let text = "POST /reg HTTP/1.1\nHost: a\n---\nHTTP/1.1 201 Created\nLocation: x8344\n";
    let report = validate(&lift_text(text));
    assert_eq!(report.fired_rules(), ["R10"]);
    assert_eq!(report.findings.len(), 1);
}

#[test]
fn explain_registry() {
    assert!(explain("R6").unwrap().contains("Content-Type"));
    assert!(explain("R5").unwrap().contains("interim"));
    assert_eq!(explain("R99"), Err(UnknownRule("R99".into())));
    for rule in &RULES {
        assert!(explain(rule.id).unwrap().starts_with(rule.id));
    }
}

#[test]
fn report_formats() {
    let d = trig("_:q a :Request .");
    let report = validate(&d);
    let tsv = report.to_tsv();
    assert_eq!(tsv.lines().count(), 2);
    for line in tsv.lines() {
        let cols: Vec<&str> = line.split('\t').collect();
        assert_eq!(cols.len(), 4);
        assert_eq!(cols[0], "violation");
        assert_eq!(cols[1], "R2");
    }
    let text = report.to_text(&crate::lift::prefixes());
    assert!(text.ends_with("2 violation(s), 0 warning(s), 10 rule(s) checked\n"));
}

#[test]
fn order_is_by_rule_number() {
    let d = trig("_:q a :Request ; :uri <urn:a>, <urn:b> ; :mthd _:m . _:m :methodName \"\" . _:h :hdrName \"Location\" .");
    let ids: Vec<_> = validate(&d).findings.iter().map(|f| f.rule_id).collect();
    assert_eq!(ids, ["R1", "R9", "R10"]);
}

#[test]
fn strategies_agree() {
    let d = trig("_:q a :Request ; :uri <urn:a>, <urn:b> . _:r a :Response . _:m :methodName \"\" .");
    assert_eq!(validate_with(&d, Exec::Sequential), validate_with(&d, Exec::Parallel));
}

fn arb_term(pool: &'static [&'static str]) -> impl Strategy<Value = Term> {
    prop::sample::select(pool).prop_map(|s| {
        if let Some(label) = s.strip_prefix("_:") {
            Term::blank(label)
        } else {
            Term::named(s)
        }
    })
}

const NODES: &[&str] = &["_:q", "_:r", "_:x", "urn:a", "http://w3id.org/http/sc#OK"];
const PREDICATES: &[&str] = &[
    RDF_TYPE, MTHD_PROP, URI_PROP, SC_PROP, STATUS_CODE_NUMBER, BODY, HDR, RESP, "urn:p",
];
const OBJECTS: &[&str] = &["_:q", "_:r", "_:x", "urn:a", REQUEST, RESPONSE, FINAL_RESPONSE];

fn closed_world(report: &ValidationReport) -> BTreeSet<(String, String)> {
    report
        .findings
        .iter()
        .filter(|f| f.rule_id == "R2" || f.rule_id == "R3")
        .map(|f| (f.focus.to_string(), f.message.clone()))
        .collect()
}

proptest! {
    // Adding a triple can only retire an R2/R3 finding by supplying the
    // missing property.
    #[test]
    fn monotone_closed_world(
        base in prop::collection::vec((arb_term(NODES), arb_term(PREDICATES), arb_term(OBJECTS)), 0..12),
        extra in (arb_term(NODES), arb_term(PREDICATES), arb_term(OBJECTS)),
    ) {
        let mut d = trig("_:q a :Request . _:r a :Response ; :sc _:c .");
        for (s, p, o) in base {
            d.default_graph_mut().add(s, p, o).unwrap();
        }
        let before = closed_world(&validate(&d));
        let (s, p, o) = extra;
        let supplied = p.as_iri().unwrap().to_owned();
        let subject = s.to_string();
        d.default_graph_mut().add(s, p, o).unwrap();
        let after = closed_world(&validate(&d));
        for (focus, message) in before.difference(&after) {
            prop_assert_eq!(focus, &subject);
            prop_assert!(
                message.ends_with(&format!(":{}", local(&supplied))) || supplied == RDF_TYPE,
                "{} retired by {}", message, supplied
            );
        }
    }
}
