//! Lifting conversations into RDF datasets shaped by the interaction
//! ontology.
//!
//! Property chains are materialized while lifting (a Location header yields
//! `hds:location` directly) so queries run on the raw dataset. Message,
//! header, parameter and content nodes are blank unless a base IRI is given,
//! in which case requests and responses get stable IRIs. URI nodes are always
//! IRIs and are shared by every occurrence of the same recomposed URI.

use std::collections::{BTreeSet, HashMap};
use std::sync::OnceLock;

use percent_encoding::{utf8_percent_encode, AsciiSet, NON_ALPHANUMERIC};

use crate::exec::Exec;
use crate::http::{
    standard_status_name, Body, Conversation, Header, Interaction, Method, Request, Response,
};
use crate::rdf::{parse_turtle, Dataset, Graph, PrefixMap, RdfError, Term, Triple};
use crate::uri::{resolve_reference, UriParts};

pub mod vocab;

use vocab::*;

pub const ONTOLOGY_TTL: &str = include_str!("ontology.ttl");
pub const EXTENSIONS_TTL: &str = include_str!("extensions.ttl");

/// Base for URI nodes when no base IRI is configured.
pub const DEFAULT_URI_BASE: &str = "urn:httplift:";

/// The vendored ontology as a graph.
pub fn embedded_ontology() -> Graph {
    static CELL: OnceLock<Graph> = OnceLock::new();
    CELL.get_or_init(|| parse_turtle(ONTOLOGY_TTL).expect("vendored ontology parses"))
        .clone()
}

/// Declarations of the extension terms.
pub fn extension_ontology() -> Graph {
    static CELL: OnceLock<Graph> = OnceLock::new();
    CELL.get_or_init(|| parse_turtle(EXTENSIONS_TTL).expect("extension terms parse"))
        .clone()
}

/// Prefixes used when writing lifted data.
pub fn prefixes() -> PrefixMap {
    [
        ("", HTTP),
        ("mthd", MTHD),
        ("sc", SC),
        ("hds", HDS),
        ("cnt", CNT),
        ("rdf", RDF),
        ("rdfs", RDFS),
        ("owl", OWL),
        ("xsd", XSD),
        ("sd", SD),
    ]
    .into_iter()
    .collect()
}

// Unreserved characters stay readable, everything else is escaped.
const URI_NODE_SET: &AsciiSet = &NON_ALPHANUMERIC.remove(b'-').remove(b'.').remove(b'_').remove(b'~');

fn iri(s: &str) -> Term {
    Term::named(s)
}

fn rdf_type() -> Term {
    Term::named(RDF_TYPE)
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LiftOptions {
    /// Mints request/response IRIs (and URI nodes) under this base.
    pub base: Option<String>,
}

impl LiftOptions {
    pub fn with_base(base: impl Into<String>) -> Self {
        Self {
            base: Some(base.into()),
        }
    }
}

/// Stateful lifting run. The blank node counter and the URI node cache live
/// only as long as the lifter.
#[derive(Debug)]
pub struct Lifter {
    base: Option<String>,
    uri_base: String,
    dataset: Dataset,
    uri_nodes: HashMap<String, Term>,
    next_blank: usize,
    interactions: usize,
}

impl Default for Lifter {
    fn default() -> Self {
        Self::new(&LiftOptions::default()).expect("default options are valid")
    }
}

impl Lifter {
    pub fn new(options: &LiftOptions) -> Result<Self, RdfError> {
        if let Some(base) = &options.base {
            Term::iri(format!("{base}q1"))?;
        }
        Ok(Self {
            uri_base: options.base.clone().unwrap_or_else(|| DEFAULT_URI_BASE.to_owned()),
            base: options.base.clone(),
            dataset: Dataset::new(),
            uri_nodes: HashMap::new(),
            next_blank: 0,
            interactions: 0,
        })
    }

    pub fn dataset(&self) -> &Dataset {
        &self.dataset
    }

    pub fn finish(self) -> Dataset {
        self.dataset
    }

    fn blank(&mut self) -> Term {
        self.next_blank += 1;
        Term::blank(format!("n{}", self.next_blank))
    }

    fn emit(&mut self, s: &Term, p: &str, o: Term) {
        let t = Triple::new(s.clone(), iri(p), o).expect("lifted subjects are resources");
        self.dataset.default_graph_mut().insert(t);
    }

    fn typed(&mut self, s: &Term, class: &str) {
        let t = Triple::new(s.clone(), rdf_type(), iri(class)).expect("lifted subjects are resources");
        self.dataset.default_graph_mut().insert(t);
    }

    /// Lifts a URI to its node. A URI seen before returns the existing node
    /// without re-asserting its parts.
    pub fn lift_uri(&mut self, u: &UriParts) -> Term {
        let text = u.recompose();
        if let Some(node) = self.uri_nodes.get(&text) {
            return node.clone();
        }
        let node = Term::named(&format!(
            "{}{}",
            self.uri_base,
            utf8_percent_encode(&text, URI_NODE_SET)
        ));
        self.uri_nodes.insert(text, node.clone());
        self.typed(&node, URI);
        self.emit(&node, SCHEME, Term::string(&u.scheme));
        self.emit(&node, AUTHORITY, Term::string(&u.authority));
        self.emit(&node, PATH, Term::string(&u.path));
        if let Some(q) = &u.query {
            self.emit(&node, QUERY, Term::string(q));
        }
        if let Some(f) = &u.fragment {
            self.emit(&node, FRAGMENT, Term::string(f));
        }
        self.emit(&node, ID_RES, Term::string(u.id_res()));
        for param in &u.params {
            let p = self.blank();
            self.emit(&node, QUERY_PARAMS, p.clone());
            self.typed(&p, QUERY_PARAM);
            self.emit(&p, PARAM_NAME, Term::string(&param.name));
            self.emit(&p, PARAM_VALUE, Term::string(&param.value));
        }
        node
    }

    /// Lifts one header of `msg`. Location values are resolved against
    /// `request_uri`; when that fails only the plain header triples remain.
    pub fn lift_header(&mut self, h: &Header, msg: &Term, request_uri: Option<&UriParts>) {
        let node = self.blank();
        self.emit(msg, HDR, node.clone());
        self.typed(&node, HEADER);
        self.emit(&node, HDR_NAME, Term::string(&h.name));
        self.emit(&node, HDR_VALUE, Term::string(&h.value));
        if h.is("Location") {
            let resolved = match request_uri {
                Some(base) => resolve_reference(h.value.trim(), base),
                None => crate::uri::parse_uri(h.value.trim()),
            };
            if let Ok(target) = resolved {
                let u = self.lift_uri(&target);
                self.emit(&node, IS_LOCATION_HEADER, node.clone());
                self.emit(&node, LINK, u.clone());
                self.emit(msg, LOCATION, u);
            }
        } else if h.is("Content-Type") {
            self.typed(&node, CONTENT_TYPE_HEADER);
            self.emit(msg, CONTENT_TYPE, Term::string(h.value.trim()));
        } else if h.is("Accept") {
            self.typed(&node, ACCEPT_HEADER);
            self.emit(msg, ACCEPT, node.clone());
            for range in h.value.split(',').map(str::trim).filter(|r| !r.is_empty()) {
                self.emit(&node, MEDIA_TYPE, Term::string(range));
            }
        }
    }

    /// Lifts a body. RDF payloads become a named graph with fresh blank
    /// node labels; other payloads contribute only the content node.
    pub fn lift_body(&mut self, b: &Body, msg: &Term) {
        let content = self.blank();
        self.emit(msg, BODY, content.clone());
        self.typed(&content, CONTENT);
        let Some(graph) = &b.rdf else { return };
        self.typed(&content, CONTENT_AS_RDF);
        let name = match msg.as_iri() {
            Some(m) => Term::named(&format!("{m}/body-graph")),
            None => self.blank(),
        };
        self.typed(&name, SD_GRAPH);
        self.emit(&content, ABOUT, name.clone());

        let mut relabel: HashMap<Term, Term> = HashMap::new();
        let mut fresh = |t: Term, lifter: &mut Self| -> Term {
            if !t.is_blank() {
                return t;
            }
            relabel.entry(t).or_insert_with(|| lifter.blank()).clone()
        };
        let mut triples = Vec::with_capacity(graph.len());
        for t in graph.iter() {
            let (s, p, o) = t.into_parts();
            let s = fresh(s, self);
            let o = fresh(o, self);
            triples.push(Triple::new(s, p, o).expect("relabeling keeps triples valid"));
        }
        let target = self
            .dataset
            .named_graph_mut(name)
            .expect("graph names are resources");
        target.extend(triples);
    }

    fn message_node(&mut self, local: String) -> Term {
        match &self.base {
            Some(base) => Term::named(&format!("{base}{local}")),
            None => self.blank(),
        }
    }

    fn lift_method(&mut self, method: &Method) -> Term {
        let token = method.as_str();
        let node = if method.is_standard() {
            Term::named(&method_iri(token))
        } else {
            self.blank()
        };
        self.typed(&node, METHOD);
        self.emit(&node, METHOD_NAME, Term::string(token));
        node
    }

    fn lift_status(&mut self, code: u16) -> Term {
        let node = match standard_status_name(code.into()) {
            Some(name) => Term::named(&status_iri(name)),
            None => self.blank(),
        };
        self.typed(&node, STATUS_CODE);
        self.emit(&node, STATUS_CODE_NUMBER, Term::integer(code.into()));
        node
    }

    fn lift_request(&mut self, r: &Request, n: usize) -> Term {
        let q = self.message_node(format!("q{n}"));
        self.typed(&q, REQUEST);
        let m = self.lift_method(&r.method);
        self.emit(&q, MTHD_PROP, m);
        let u = self.lift_uri(&r.uri);
        self.emit(&q, URI_PROP, u);
        if let Some(v) = &r.http_version {
            self.emit(&q, HTTP_VERSION, Term::string(v));
        }
        for h in &r.headers {
            self.lift_header(h, &q, Some(&r.uri));
        }
        if let Some(b) = &r.body {
            self.lift_body(b, &q);
        }
        q
    }

    fn lift_response(&mut self, r: &Response, local: String, request_uri: &UriParts) -> Term {
        let node = self.message_node(local);
        self.typed(&node, RESPONSE);
        self.typed(&node, if r.is_interim() { INTERIM_RESPONSE } else { FINAL_RESPONSE });
        let s = self.lift_status(r.status.as_u16());
        self.emit(&node, SC_PROP, s);
        if let Some(v) = &r.http_version {
            self.emit(&node, HTTP_VERSION, Term::string(v));
        }
        for h in &r.headers {
            self.lift_header(h, &node, Some(request_uri));
        }
        if let Some(b) = &r.body {
            self.lift_body(b, &node);
        }
        node
    }

    /// Lifts one interaction and returns its request node.
    pub fn lift_interaction(&mut self, i: &Interaction) -> Term {
        self.interactions += 1;
        let n = self.interactions;
        let request = i.request();
        let q = self.lift_request(request, n);
        for (k, r) in i.interim_responses().iter().enumerate() {
            let node = self.lift_response(r, format!("r{n}i{}", k + 1), &request.uri);
            self.emit(&q, RESP, node);
        }
        if let Some(r) = i.final_response() {
            let node = self.lift_response(r, format!("r{n}"), &request.uri);
            self.emit(&q, RESP, node);
        }
        q
    }

    pub fn lift_conversation(&mut self, c: &Conversation) {
        for i in &c.interactions {
            self.lift_interaction(i);
        }
    }
}

/// Lifts a conversation with fresh lifter state.
pub fn lift_conversation(c: &Conversation, options: &LiftOptions) -> Result<Dataset, RdfError> {
    let mut lifter = Lifter::new(options)?;
    lifter.lift_conversation(c);
    Ok(lifter.finish())
}

pub fn lift_interaction(i: &Interaction) -> Dataset {
    let mut lifter = Lifter::default();
    lifter.lift_interaction(i);
    lifter.finish()
}

/// The URI node and the triples describing it.
pub fn lift_uri(u: &UriParts) -> (Term, Vec<Triple>) {
    let mut lifter = Lifter::default();
    let node = lifter.lift_uri(u);
    (node, lifter.finish().default_graph().iter().collect())
}

/// Triples for one header of `msg`, with no request URI to resolve against.
pub fn lift_header(h: &Header, msg: &Term) -> Vec<Triple> {
    let mut lifter = Lifter::default();
    lifter.lift_header(h, msg, None);
    lifter.finish().default_graph().iter().collect()
}

/// Adds a body of `msg` to `dataset`. Blank labels are chosen so they do not
/// clash with labels already in the dataset.
pub fn lift_body(b: &Body, msg: &Term, dataset: Dataset) -> Dataset {
    let mut lifter = Lifter::default();
    lifter.next_blank = max_blank_index(&dataset);
    lifter.dataset = dataset;
    lifter.lift_body(b, msg);
    lifter.finish()
}

fn max_blank_index(d: &Dataset) -> usize {
    let mut max = 0;
    let mut see = |t: &Term| {
        if let Term::BlankNode(l) = t {
            if let Some(n) = l.strip_prefix('n').and_then(|n| n.parse::<usize>().ok()) {
                max = max.max(n);
            }
        }
    };
    let graphs = std::iter::once((None, d.default_graph())).chain(d.named_graphs().map(|(n, g)| (Some(n), g)));
    for (name, g) in graphs {
        if let Some(n) = name {
            see(n);
        }
        for t in g.iter() {
            see(t.subject());
            see(t.object());
        }
    }
    max
}

/// Lifts many conversations independently.
pub fn lift_batch(
    conversations: &[Conversation],
    options: &LiftOptions,
    exec: Exec,
) -> Result<Vec<Dataset>, RdfError> {
    exec.map(conversations, |c| lift_conversation(c, options))
        .into_iter()
        .collect()
}

/// Predicates, classes and ontology-namespace IRIs in the default graph that
/// neither the vendored ontology nor the extension terms declare.
pub fn unknown_terms(d: &Dataset) -> BTreeSet<String> {
    static KNOWN: OnceLock<BTreeSet<String>> = OnceLock::new();
    let known = KNOWN.get_or_init(|| {
        let mut known = BTreeSet::new();
        for g in [embedded_ontology(), extension_ontology()] {
            for t in g.iter() {
                for term in [t.subject(), t.predicate(), t.object()] {
                    if let Some(i) = term.as_iri() {
                        known.insert(i.to_owned());
                    }
                }
            }
        }
        known
    });
    let ours = |i: &str| [HTTP, MTHD, SC, HDS, CNT].iter().any(|ns| i.starts_with(ns));
    let mut unknown = BTreeSet::new();
    for t in d.default_graph().iter() {
        let mut check = |term: &Term| {
            if let Some(i) = term.as_iri() {
                if !known.contains(i) {
                    unknown.insert(i.to_owned());
                }
            }
        };
        check(t.predicate());
        if t.predicate().as_iri() == Some(RDF_TYPE) {
            check(t.object());
        }
        for term in [t.subject(), t.object()] {
            if term.as_iri().is_some_and(ours) {
                check(term);
            }
        }
    }
    unknown
}
