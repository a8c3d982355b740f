#![allow(dead_code)]
pub mod rdf_gen;

use httplift::http::{Body, Conversation, Header, Interaction, Method, Request, Response, StatusCode};
use httplift::ingest::load_transcript;
use httplift::lift::{lift_conversation, LiftOptions};
use httplift::rdf::Dataset;
use httplift::uri::parse_uri;
use proptest::prelude::*;

pub const REGISTRAR: &str = include_str!("../fixtures/registrar.http");
pub const REGISTRAR_TURTLE: &str = include_str!("../fixtures/registrar_turtle.http");
pub const GOLDEN: &str = include_str!("../fixtures/registrar_turtle.trig");
pub const PARAMS: &str = include_str!("../fixtures/params.http");
pub const SECOND_HAR: &str = include_str!("../fixtures/registrar_second.har");
pub const SECOND_HTTP: &str = include_str!("../fixtures/registrar_second.http");

pub fn lift_text(text: &str) -> Dataset {
    lift_conversation(&load_transcript(text).unwrap(), &LiftOptions::default()).unwrap()
}

fn word() -> impl Strategy<Value = String> {
    "[a-z][a-z0-9]{0,5}"
}

fn path() -> impl Strategy<Value = String> {
    prop::collection::vec(word(), 0..3).prop_map(|segs| format!("/{}", segs.join("/")))
}

fn query() -> impl Strategy<Value = Option<String>> {
    prop::option::of(prop::collection::vec((word(), "[a-zA-Z0-9]{0,4}"), 1..3).prop_map(|ps| {
        ps.into_iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join("&")
    }))
}

fn method() -> impl Strategy<Value = Method> {
    prop_oneof![
        4 => prop::sample::select(Method::STANDARD.to_vec()),
        1 => "[A-Z]{3,7}".prop_map(|m| Method::parse(&m).unwrap()),
    ]
}

fn body() -> impl Strategy<Value = Option<(String, Vec<u8>)>> {
    prop_oneof![
        2 => Just(None),
        1 => "[a-z ]{1,12}".prop_map(|s| Some(("text/plain".to_owned(), s.into_bytes()))),
        1 => prop::collection::vec(0i64..100, 0..4).prop_map(|items| {
            let list: Vec<String> = items.iter().map(i64::to_string).collect();
            Some((
                "text/turtle".to_owned(),
                format!("_:x <http://example.org/ns#ids> ({}) . _:x <http://example.org/ns#n> \"v\" .", list.join(" "))
                    .into_bytes(),
            ))
        }),
    ]
}

fn attach(headers: &mut Vec<Header>, body: Option<(String, Vec<u8>)>) -> Option<Body> {
    let (media_type, octets) = body?;
    headers.push(Header::new("Content-Type", media_type.clone()).unwrap());
    Some(Body::new(Some(media_type), octets))
}

const HOSTS: [&str; 3] = ["example.org", "example.org:8080", "api.example.com"];

fn interaction() -> impl Strategy<Value = Interaction> {
    (
        method(),
        prop::sample::select(HOSTS.to_vec()),
        path(),
        query(),
        prop::option::of(prop::sample::select(vec!["text/turtle", "application/json", "*/*", "text/*"])),
        body(),
        prop::collection::vec(prop::sample::select(vec![100u32, 102, 103]), 0..2),
        prop::sample::select(vec![200u32, 201, 204, 299, 301, 404, 500, 599]),
        prop::option::of(path()),
        body(),
    )
        .prop_map(|(m, host, path, query, accept, req_body, interims, status, location, resp_body)| {
            let mut target = path;
            if let Some(q) = &query {
                target = format!("{target}?{q}");
            }
            let mut request = Request::new(m, parse_uri(&format!("http://{host}{target}")).unwrap());
            request.http_version = Some("HTTP/1.1".into());
            request.headers.push(Header::new("Host", host).unwrap());
            if let Some(a) = accept {
                request.headers.push(Header::new("Accept", a).unwrap());
            }
            request.body = attach(&mut request.headers, req_body);
            let mut i = Interaction::new(request);
            for code in interims {
                let mut r = Response::new(StatusCode::new(code).unwrap());
                r.http_version = Some("HTTP/1.1".into());
                i.push_response(r).unwrap();
            }
            let mut r = Response::new(StatusCode::new(status).unwrap());
            r.http_version = Some("HTTP/1.1".into());
            if let Some(loc) = location {
                r.headers.push(Header::new("Location", loc).unwrap());
            }
            r.body = attach(&mut r.headers, resp_body);
            i.push_response(r).unwrap();
            i
        })
}

pub fn conversation() -> impl Strategy<Value = Conversation> {
    prop::collection::vec(interaction(), 0..5).prop_map(Conversation::new)
}
