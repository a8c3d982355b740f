//! IRIs of the interaction ontology, plus the header extension terms.

pub const HTTP: &str = "http://w3id.org/http#";
pub const MTHD: &str = "http://w3id.org/http/mthd#";
pub const SC: &str = "http://w3id.org/http/sc#";
pub const HDS: &str = "http://w3id.org/http/headers#";
pub const CNT: &str = "http://w3id.org/http/content#";
pub const XSD: &str = crate::rdf::XSD;
pub use crate::rdf::vocab::{OWL, RDF, RDFS, RDF_TYPE, SD};

macro_rules! terms {
    ($($name:ident = $ns:literal $local:literal;)*) => {
        $(pub const $name: &str = concat!($ns, $local);)*
    };
}

terms! {
    MESSAGE = "http://w3id.org/http#" "Message";
    REQUEST = "http://w3id.org/http#" "Request";
    RESPONSE = "http://w3id.org/http#" "Response";
    INTERIM_RESPONSE = "http://w3id.org/http#" "InterimResponse";
    FINAL_RESPONSE = "http://w3id.org/http#" "FinalResponse";
    METHOD = "http://w3id.org/http#" "Method";
    URI = "http://w3id.org/http#" "URI";
    HEADER = "http://w3id.org/http#" "Header";
    QUERY_PARAM = "http://w3id.org/http#" "QueryParam";
    STATUS_CODE = "http://w3id.org/http#" "StatusCode";

    RESP = "http://w3id.org/http#" "resp";
    MTHD_PROP = "http://w3id.org/http#" "mthd";
    METHOD_NAME = "http://w3id.org/http#" "methodName";
    URI_PROP = "http://w3id.org/http#" "uri";
    SCHEME = "http://w3id.org/http#" "scheme";
    AUTHORITY = "http://w3id.org/http#" "authority";
    PATH = "http://w3id.org/http#" "path";
    QUERY = "http://w3id.org/http#" "query";
    FRAGMENT = "http://w3id.org/http#" "fragment";
    ID_RES = "http://w3id.org/http#" "idRes";
    QUERY_PARAMS = "http://w3id.org/http#" "queryParams";
    PARAM_NAME = "http://w3id.org/http#" "paramName";
    PARAM_VALUE = "http://w3id.org/http#" "paramValue";
    HDR = "http://w3id.org/http#" "hdr";
    HDR_NAME = "http://w3id.org/http#" "hdrName";
    HDR_VALUE = "http://w3id.org/http#" "hdrValue";
    LINK = "http://w3id.org/http#" "link";
    BODY = "http://w3id.org/http#" "body";
    SC_PROP = "http://w3id.org/http#" "sc";
    STATUS_CODE_NUMBER = "http://w3id.org/http#" "statusCodeNumber";
    HTTP_VERSION = "http://w3id.org/http#" "httpVersion";

    IS_LOCATION_HEADER = "http://w3id.org/http/headers#" "isLocationHeader";
    LOCATION = "http://w3id.org/http/headers#" "location";
    CONTENT_TYPE_HEADER = "http://w3id.org/http/headers#" "ContentTypeHeader";
    CONTENT_TYPE = "http://w3id.org/http/headers#" "content-type";
    ACCEPT_HEADER = "http://w3id.org/http/headers#" "AcceptHeader";
    ACCEPT = "http://w3id.org/http/headers#" "accept";
    MEDIA_TYPE = "http://w3id.org/http/headers#" "media-type";

    CONTENT = "http://w3id.org/http/content#" "Content";
    CONTENT_AS_RDF = "http://w3id.org/http/content#" "ContentAsRDF";
    ABOUT = "http://w3id.org/http/content#" "about";

    SD_GRAPH = "http://www.w3.org/ns/sparql-service-description#" "Graph";
}

/// Terms minted outside the vendored ontology.
pub const EXTENSION_TERMS: [&str; 5] = [
    CONTENT_TYPE_HEADER,
    CONTENT_TYPE,
    ACCEPT_HEADER,
    ACCEPT,
    MEDIA_TYPE,
];

pub fn method_iri(token: &str) -> String {
    format!("{MTHD}{token}")
}

pub fn status_iri(name: &str) -> String {
    format!("{SC}{name}")
}

/// The five status class IRIs, in code order.
pub const STATUS_CLASSES: [&str; 5] = [
    "http://w3id.org/http/sc#Informational",
    "http://w3id.org/http/sc#Successful",
    "http://w3id.org/http/sc#Redirection",
    "http://w3id.org/http/sc#ClientError",
    "http://w3id.org/http/sc#ServerError",
];
