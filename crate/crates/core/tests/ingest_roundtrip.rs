mod common;

use common::*;
use httplift::http::{Interaction, Request, Response};
use httplift::ingest::{
    load_har, load_transcript, parse_http_request, parse_http_response, request_to_wire,
    response_to_wire, Direction, Transcript,
};
use httplift::lift::{lift_conversation, LiftOptions};
use httplift::rdf::isomorphic_datasets;
use proptest::prelude::*;

fn rewire(c: &httplift::http::Conversation) -> httplift::http::Conversation {
    let interactions = c
        .interactions
        .iter()
        .map(|i| {
            let request: Request = parse_http_request(&request_to_wire(i.request())).unwrap();
            let mut out = Interaction::new(request);
            for r in i.responses() {
                let r: Response = parse_http_response(&response_to_wire(r)).unwrap();
                out.push_response(r).unwrap();
            }
            out
        })
        .collect();
    httplift::http::Conversation::new(interactions)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn wire_round_trip_is_semantically_stable(c in conversation()) {
        let opts = LiftOptions::default();
        let lifted = lift_conversation(&c, &opts).unwrap();
        let again = lift_conversation(&rewire(&c), &opts).unwrap();
        prop_assert!(isomorphic_datasets(&lifted, &again));
    }

    #[test]
    fn transcript_round_trip_is_semantically_stable(c in conversation()) {
        let opts = LiftOptions::default();
        let text = Transcript::render(&c);
        let reloaded = load_transcript(&text).unwrap();
        prop_assert!(isomorphic_datasets(
            &lift_conversation(&c, &opts).unwrap(),
            &lift_conversation(&reloaded, &opts).unwrap()
        ));
    }

    #[test]
    fn pairing_preserves_message_counts(c in conversation()) {
        let text = Transcript::render(&c);
        let blocks = Transcript::parse(&text).blocks;
        let requests = blocks.iter().filter(|b| b.direction == Direction::Request).count();
        let responses = blocks.len() - requests;
        let reloaded = load_transcript(&text).unwrap();
        prop_assert_eq!(reloaded.len(), requests);
        prop_assert_eq!(reloaded.response_count(), responses);
    }
}

#[test]
fn registrar_transcript() {
    let c = load_transcript(REGISTRAR).unwrap();
    assert_eq!(c.len(), 2);
    assert_eq!(c.response_count(), 2);
}

#[test]
fn har_and_transcript_agree() {
    let from_har = load_har(SECOND_HAR).unwrap();
    assert_eq!(from_har.len(), 1);
    assert_eq!(from_har.interactions[0].final_response().unwrap().status.as_u16(), 200);
    let opts = LiftOptions::default();
    assert!(isomorphic_datasets(
        &lift_conversation(&from_har, &opts).unwrap(),
        &lift_conversation(&load_transcript(SECOND_HTTP).unwrap(), &opts).unwrap()
    ));
}
