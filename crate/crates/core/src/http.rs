//! Protocol-level model of HTTP messages, interactions and conversations.

use std::fmt;

use crate::rdf::Graph;
use crate::uri::UriParts;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ModelError {
    #[error("invalid method token {0:?}")]
    InvalidMethod(String),
    #[error("invalid header name {0:?}")]
    InvalidHeaderName(String),
    #[error("status code {0} has more than three digits")]
    StatusOutOfRange(u32),
    #[error("interaction already has a final response ({existing}); got {incoming}")]
    SecondFinal { existing: u16, incoming: u16 },
    #[error("interim response {0} after the final response")]
    InterimAfterFinal(u16),
}

/// RFC 7230 `tchar`.
pub fn is_tchar(c: char) -> bool {
    c.is_ascii_alphanumeric() || "!#$%&'*+-.^_`|~".contains(c)
}

pub fn is_token(s: &str) -> bool {
    !s.is_empty() && s.chars().all(is_tchar)
}

/// Request method. The nine standard methods are distinct variants.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    Get,
    Head,
    Post,
    Put,
    Delete,
    Connect,
    Options,
    Trace,
    Patch,
    Extension(String),
}

impl Method {
    pub const STANDARD: [Method; 9] = [
        Method::Get,
        Method::Head,
        Method::Post,
        Method::Put,
        Method::Delete,
        Method::Connect,
        Method::Options,
        Method::Trace,
        Method::Patch,
    ];

    /// Parses a method token. Matching is case-sensitive, as in HTTP.
    pub fn parse(token: &str) -> Result<Self, ModelError> {
        if !is_token(token) {
            return Err(ModelError::InvalidMethod(token.to_owned()));
        }
        Ok(match token {
            "GET" => Method::Get,
            "HEAD" => Method::Head,
            "POST" => Method::Post,
            "PUT" => Method::Put,
            "DELETE" => Method::Delete,
            "CONNECT" => Method::Connect,
            "OPTIONS" => Method::Options,
            "TRACE" => Method::Trace,
            "PATCH" => Method::Patch,
            other => Method::Extension(other.to_owned()),
        })
    }

    pub fn as_str(&self) -> &str {
        match self {
            Method::Get => "GET",
            Method::Head => "HEAD",
            Method::Post => "POST",
            Method::Put => "PUT",
            Method::Delete => "DELETE",
            Method::Connect => "CONNECT",
            Method::Options => "OPTIONS",
            Method::Trace => "TRACE",
            Method::Patch => "PATCH",
            Method::Extension(name) => name,
        }
    }

    pub fn is_standard(&self) -> bool {
        !matches!(self, Method::Extension(_))
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A header field. Names compare case-insensitively; the original case is kept.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Header {
    pub name: String,
    pub value: String,
}

impl Header {
    pub fn new(name: impl Into<String>, value: impl Into<String>) -> Result<Self, ModelError> {
        let name = name.into();
        if !is_token(&name) {
            return Err(ModelError::InvalidHeaderName(name));
        }
        Ok(Self {
            name,
            value: value.into(),
        })
    }

    pub fn is(&self, name: &str) -> bool {
        self.name.eq_ignore_ascii_case(name)
    }
}

/// First value of the header called `name`, compared case-insensitively.
pub fn header_value<'a>(headers: &'a [Header], name: &str) -> Option<&'a str> {
    headers.iter().find(|h| h.is(name)).map(|h| h.value.as_str())
}

/// Media types whose bodies are parsed into RDF.
pub const RDF_MEDIA_TYPES: [&str; 2] = ["text/turtle", "application/trig"];

/// The essence (`type/subtype`, lowercased) of a Content-Type value.
pub fn media_type_essence(value: &str) -> String {
    value
        .split(';')
        .next()
        .unwrap_or("")
        .trim()
        .to_ascii_lowercase()
}

/// Message payload.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Body {
    /// Content-Type value, parameters included.
    pub media_type: Option<String>,
    pub octets: Vec<u8>,
    /// Parsed content, present only for RDF media types that parsed cleanly.
    pub rdf: Option<Graph>,
}

impl Body {
    /// Builds a body, parsing the octets when the media type is an RDF syntax.
    /// TriG payloads are flattened into one graph.
    pub fn new(media_type: Option<String>, octets: Vec<u8>) -> Self {
        let rdf = media_type
            .as_deref()
            .map(media_type_essence)
            .and_then(|essence| {
                let text = std::str::from_utf8(&octets).ok()?;
                match essence.as_str() {
                    "text/turtle" => crate::rdf::parse_turtle(text).ok(),
                    "application/trig" => crate::rdf::parse_trig(text).ok().map(|d| {
                        let mut g = d.default_graph().clone();
                        for (_, named) in d.named_graphs() {
                            g.extend(named.iter());
                        }
                        g
                    }),
                    _ => None,
                }
            });
        Self {
            media_type,
            octets,
            rdf,
        }
    }
}

/// A status code in `[0, 999]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StatusCode(u16);

impl StatusCode {
    pub fn new(code: u32) -> Result<Self, ModelError> {
        if code > 999 {
            return Err(ModelError::StatusOutOfRange(code));
        }
        Ok(Self(code as u16))
    }

    pub fn as_u16(self) -> u16 {
        self.0
    }

    pub fn class(self) -> Option<StatusClass> {
        StatusClass::of(self.0)
    }
}

impl fmt::Display for StatusCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:03}", self.0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StatusClass {
    Informational,
    Successful,
    Redirection,
    ClientError,
    ServerError,
}

impl StatusClass {
    fn of(code: u16) -> Option<Self> {
        match code {
            100..=199 => Some(StatusClass::Informational),
            200..=299 => Some(StatusClass::Successful),
            300..=399 => Some(StatusClass::Redirection),
            400..=499 => Some(StatusClass::ClientError),
            500..=599 => Some(StatusClass::ServerError),
            _ => None,
        }
    }

    /// Local name of the class in the `sc:` namespace.
    pub fn local_name(self) -> &'static str {
        match self {
            StatusClass::Informational => "Informational",
            StatusClass::Successful => "Successful",
            StatusClass::Redirection => "Redirection",
            StatusClass::ClientError => "ClientError",
            StatusClass::ServerError => "ServerError",
        }
    }
}

/// Classifies a code; codes above 999 are an error, classless codes give `None`.
pub fn status_class(code: u32) -> Result<Option<StatusClass>, ModelError> {
    Ok(StatusCode::new(code)?.class())
}

/// Status code individuals of the vocabulary, as (code, local name).
pub const STANDARD_STATUSES: [(u16, &str); 51] = [
    (100, "Continue"),
    (101, "SwitchingProtocols"),
    (102, "Processing"),
    (200, "OK"),
    (201, "Created"),
    (202, "Accepted"),
    (203, "NonAuthoritativeInformation"),
    (204, "NoContent"),
    (205, "ResetContent"),
    (206, "PartialContent"),
    (207, "MultiStatus"),
    (226, "IMUsed"),
    (300, "MultipleChoices"),
    (301, "MovedPermanently"),
    (302, "Found"),
    (303, "SeeOther"),
    (304, "NotModified"),
    (305, "UseProxy"),
    (306, "Reserved"),
    (307, "TemporaryRedirect"),
    (400, "BadRequest"),
    (401, "Unauthorized"),
    (402, "PaymentRequired"),
    (403, "Forbidden"),
    (404, "NotFound"),
    (405, "MethodNotAllowed"),
    (406, "NotAcceptable"),
    (407, "ProxyAuthenticationRequired"),
    (408, "RequestTimeout"),
    (409, "Conflict"),
    (410, "Gone"),
    (411, "LengthRequired"),
    (412, "PreconditionFailed"),
    (413, "RequestEntityTooLarge"),
    (414, "RequestURITooLong"),
    (415, "UnsupportedMediaType"),
    (416, "RequestedRangeNotSatisfiable"),
    (417, "ExpectationFailed"),
    (422, "UnprocessableEntity"),
    (423, "Locked"),
    (424, "FailedDependency"),
    (426, "UpgradeRequired"),
    (500, "InternalServerError"),
    (501, "NotImplemented"),
    (502, "BadGateway"),
    (503, "ServiceUnavailable"),
    (504, "GatewayTimeout"),
    (505, "HTTPVersionNotSupported"),
    (506, "VariantAlsoNegotiates"),
    (507, "InsufficientStorage"),
    (510, "NotExtended"),
];

/// Local name of the standard status individual for `code`, if any.
pub fn standard_status_name(code: u32) -> Option<&'static str> {
    STANDARD_STATUSES
        .binary_search_by_key(&code, |(c, _)| u32::from(*c))
        .ok()
        .map(|i| STANDARD_STATUSES[i].1)
}

/// Inverse of [`standard_status_name`].
pub fn standard_status_code(name: &str) -> Option<u16> {
    STANDARD_STATUSES
        .iter()
        .find(|(_, n)| *n == name)
        .map(|(c, _)| *c)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Request {
    pub method: Method,
    pub uri: UriParts,
    pub headers: Vec<Header>,
    pub body: Option<Body>,
    pub http_version: Option<String>,
}

impl Request {
    pub fn new(method: Method, uri: UriParts) -> Self {
        Self {
            method,
            uri,
            headers: Vec::new(),
            body: None,
            http_version: None,
        }
    }

    pub fn header(&self, name: &str) -> Option<&str> {
        header_value(&self.headers, name)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Response {
    pub status: StatusCode,
    pub headers: Vec<Header>,
    pub body: Option<Body>,
    pub http_version: Option<String>,
}

impl Response {
    pub fn new(status: StatusCode) -> Self {
        Self {
            status,
            headers: Vec::new(),
            body: None,
            http_version: None,
        }
    }

    pub fn header(&self, name: &str) -> Option<&str> {
        header_value(&self.headers, name)
    }

    pub fn is_interim(&self) -> bool {
        is_interim(self)
    }
}

pub fn is_interim(response: &Response) -> bool {
    response.status.class() == Some(StatusClass::Informational)
}

/// A request with its interim responses and at most one final response.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interaction {
    request: Request,
    interim: Vec<Response>,
    final_response: Option<Response>,
}

impl Interaction {
    pub fn new(request: Request) -> Self {
        Self {
            request,
            interim: Vec::new(),
            final_response: None,
        }
    }

    /// Appends a response in wire order. 1xx responses are interim; the
    /// first other response is final and closes the interaction.
    pub fn push_response(&mut self, response: Response) -> Result<(), ModelError> {
        let code = response.status.as_u16();
        if let Some(existing) = &self.final_response {
            return Err(if response.is_interim() {
                ModelError::InterimAfterFinal(code)
            } else {
                ModelError::SecondFinal {
                    existing: existing.status.as_u16(),
                    incoming: code,
                }
            });
        }
        if response.is_interim() {
            self.interim.push(response);
        } else {
            self.final_response = Some(response);
        }
        Ok(())
    }

    pub fn with_response(mut self, response: Response) -> Result<Self, ModelError> {
        self.push_response(response)?;
        Ok(self)
    }

    pub fn request(&self) -> &Request {
        &self.request
    }

    pub fn interim_responses(&self) -> &[Response] {
        &self.interim
    }

    pub fn final_response(&self) -> Option<&Response> {
        self.final_response.as_ref()
    }

    pub fn is_complete(&self) -> bool {
        self.final_response.is_some()
    }

    /// Interim responses followed by the final one.
    pub fn responses(&self) -> impl Iterator<Item = &Response> {
        self.interim.iter().chain(self.final_response.iter())
    }
}

/// Interactions in the wire order of their requests.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Conversation {
    pub interactions: Vec<Interaction>,
}

impl Conversation {
    pub fn new(interactions: Vec<Interaction>) -> Self {
        Self { interactions }
    }

    pub fn len(&self) -> usize {
        self.interactions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.interactions.is_empty()
    }

    pub fn response_count(&self) -> usize {
        self.interactions.iter().map(|i| i.responses().count()).sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::uri::parse_uri;

    fn response(code: u32) -> Response {
        Response::new(StatusCode::new(code).unwrap())
    }

    #[test]
    fn status_class_exhaustive() {
        // Brute-force range table over every representable code.
        let table = [
            (100..200, StatusClass::Informational),
            (200..300, StatusClass::Successful),
            (300..400, StatusClass::Redirection),
            (400..500, StatusClass::ClientError),
            (500..600, StatusClass::ServerError),
        ];
        for code in 0..=999u32 {
            let expected = table
                .iter()
                .find(|(r, _)| r.contains(&code))
                .map(|(_, c)| *c);
            assert_eq!(status_class(code).unwrap(), expected, "code {code}");
            let interim = is_interim(&response(code));
            assert_eq!(interim, expected == Some(StatusClass::Informational));
        }
        assert_eq!(status_class(201).unwrap(), Some(StatusClass::Successful));
        assert_eq!(status_class(99).unwrap(), None);
        assert!(status_class(1000).is_err());
    }

    #[test]
    fn interim_examples() {
        assert!(is_interim(&response(100)));
        assert!(!is_interim(&response(201)));
        assert!(!is_interim(&response(599)));
    }

    #[test]
    fn status_names() {
        assert_eq!(standard_status_name(201), Some("Created"));
        assert_eq!(standard_status_name(200), Some("OK"));
        assert_eq!(standard_status_name(302), Some("Found"));
        assert_eq!(standard_status_name(226), Some("IMUsed"));
        assert_eq!(standard_status_name(506), Some("VariantAlsoNegotiates"));
        assert_eq!(standard_status_name(299), None);
        assert!(STANDARD_STATUSES.windows(2).all(|w| w[0].0 < w[1].0));
        let names: std::collections::HashSet<_> = STANDARD_STATUSES.iter().map(|s| s.1).collect();
        assert_eq!(names.len(), STANDARD_STATUSES.len());
        assert_eq!(standard_status_code("IMUsed"), Some(226));
    }

    #[test]
    fn header_lookup() {
        let headers = vec![
            Header::new("Host", "example.org:8080").unwrap(),
            Header::new("X-A", "1").unwrap(),
            Header::new("x-a", "2").unwrap(),
        ];
        assert_eq!(header_value(&headers, "host"), Some("example.org:8080"));
        assert_eq!(header_value(&headers, "X-A"), Some("1"));
        assert_eq!(header_value(&[], "Location"), None);
        assert!(Header::new("Bad Name", "x").is_err());
    }

    #[test]
    fn methods() {
        assert_eq!(Method::parse("POST").unwrap(), Method::Post);
        assert_eq!(
            Method::parse("PURGE").unwrap(),
            Method::Extension("PURGE".into())
        );
        assert!(Method::parse("").is_err());
        assert!(Method::parse("GE T").is_err());
        assert!(Method::STANDARD.iter().all(Method::is_standard));
    }

    #[test]
    fn interaction_rejects_second_final() {
        let req = Request::new(Method::Get, parse_uri("http://a/x").unwrap());
        let mut i = Interaction::new(req);
        i.push_response(response(100)).unwrap();
        i.push_response(response(200)).unwrap();
        assert_eq!(i.interim_responses().len(), 1);
        assert!(matches!(
            i.push_response(response(404)),
            Err(ModelError::SecondFinal { existing: 200, incoming: 404 })
        ));
        assert!(matches!(
            i.push_response(response(103)),
            Err(ModelError::InterimAfterFinal(103))
        ));
        assert_eq!(i.responses().count(), 2);
    }

    #[test]
    fn rdf_body_detection() {
        let b = Body::new(
            Some("text/turtle; charset=utf-8".into()),
            b"<http://a/s> <http://a/p> (1 2) .".to_vec(),
        );
        assert_eq!(b.rdf.as_ref().map(Graph::len), Some(5));
        let j = Body::new(Some("application/json".into()), b"{}".to_vec());
        assert!(j.rdf.is_none());
    }
}
