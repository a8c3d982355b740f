use crate::http::{Body, Header, Method, Request, Response, StatusCode};
use crate::uri::effective_request_uri;

use super::IngestError;

pub(crate) struct Head<'a> {
    pub start_line: &'a str,
    pub headers: Vec<Header>,
    pub body: &'a [u8],
}

fn split_head(raw: &[u8]) -> (&[u8], &[u8]) {
    let mut i = 0;
    while i < raw.len() {
        if raw[i..].starts_with(b"\r\n\r\n") {
            return (&raw[..i], &raw[i + 4..]);
        }
        if raw[i..].starts_with(b"\n\n") {
            return (&raw[..i], &raw[i + 2..]);
        }
        if raw[i..].starts_with(b"\n\r\n") {
            return (&raw[..i], &raw[i + 3..]);
        }
        i += 1;
    }
    (raw, &[])
}

pub(crate) fn parse_head(raw: &[u8]) -> Result<Head<'_>, IngestError> {
    let (head, rest) = split_head(raw);
    let head = std::str::from_utf8(head).map_err(|_| IngestError::NotUtf8)?;
    let mut lines = head.split('\n').map(|l| l.strip_suffix('\r').unwrap_or(l));
    let start_line = lines.next().unwrap_or("");
    let mut headers = Vec::new();
    for line in lines {
        if line.is_empty() {
            continue;
        }
        if line.starts_with([' ', '\t']) {
            return Err(IngestError::MalformedHeader(format!(
                "obsolete line folding: {line:?}"
            )));
        }
        let (name, value) = line
            .split_once(':')
            .ok_or_else(|| IngestError::MalformedHeader(line.to_owned()))?;
        let header = Header::new(name, value.trim_matches([' ', '\t']))
            .map_err(|_| IngestError::MalformedHeader(line.to_owned()))?;
        headers.push(header);
    }
    let body = frame_body(&headers, rest)?;
    Ok(Head {
        start_line,
        headers,
        body,
    })
}

// Content-Length wins; otherwise the body is the rest of the input.
fn frame_body<'a>(headers: &[Header], rest: &'a [u8]) -> Result<&'a [u8], IngestError> {
    if let Some(te) = crate::http::header_value(headers, "Transfer-Encoding") {
        if te.to_ascii_lowercase().contains("chunked") {
            return Err(IngestError::ChunkedUnsupported);
        }
    }
    match crate::http::header_value(headers, "Content-Length") {
        Some(len) => {
            let len: usize = len
                .trim()
                .parse()
                .map_err(|_| IngestError::BadContentLength(len.to_owned()))?;
            if rest.len() < len {
                return Err(IngestError::TruncatedBody {
                    expected: len,
                    actual: rest.len(),
                });
            }
            Ok(&rest[..len])
        }
        None => Ok(rest),
    }
}

fn make_body(headers: &[Header], octets: &[u8]) -> Option<Body> {
    if octets.is_empty() {
        return None;
    }
    let media_type = crate::http::header_value(headers, "Content-Type").map(str::to_owned);
    Some(Body::new(media_type, octets.to_vec()))
}

fn is_version(s: &str) -> bool {
    s.strip_prefix("HTTP/")
        .is_some_and(|v| !v.is_empty() && v.chars().all(|c| c.is_ascii_digit() || c == '.'))
}

/// True when the first line of `raw` looks like a status line in either order.
pub(crate) fn looks_like_response(first_line: &str) -> bool {
    let first = first_line.split_whitespace().next().unwrap_or("");
    let last = first_line.split_whitespace().last().unwrap_or("");
    is_version(first)
        || (first.chars().all(|c| c.is_ascii_digit()) && !first.is_empty() && is_version(last))
}

/// Parses a request with the `http` scheme for origin-form targets.
pub fn parse_http_request(raw: &[u8]) -> Result<Request, IngestError> {
    parse_http_request_with_scheme(raw, "http")
}

pub fn parse_http_request_with_scheme(raw: &[u8], scheme: &str) -> Result<Request, IngestError> {
    let head = parse_head(raw)?;
    let parts: Vec<&str> = head.start_line.split_whitespace().collect();
    let [method, target, version] = parts[..] else {
        return Err(IngestError::MalformedRequestLine(head.start_line.to_owned()));
    };
    if !is_version(version) {
        return Err(IngestError::MalformedRequestLine(head.start_line.to_owned()));
    }
    let method = Method::parse(method)
        .map_err(|_| IngestError::MalformedRequestLine(head.start_line.to_owned()))?;
    let host = crate::http::header_value(&head.headers, "Host");
    let uri = effective_request_uri(target, host, scheme)?;
    Ok(Request {
        method,
        uri,
        body: make_body(&head.headers, head.body),
        headers: head.headers,
        http_version: Some(version.to_owned()),
    })
}

/// Parses a response. Accepts `HTTP/1.1 201 Created` as well as the
/// version-last rendering `201 Created HTTP/1.1`.
pub fn parse_http_response(raw: &[u8]) -> Result<Response, IngestError> {
    let head = parse_head(raw)?;
    let parts: Vec<&str> = head.start_line.split_whitespace().collect();
    let malformed = || IngestError::MalformedStatusLine(head.start_line.to_owned());
    let (version, code) = match parts.as_slice() {
        [v, code, ..] if is_version(v) => (*v, *code),
        [code, .., v] if is_version(v) => (*v, *code),
        _ => return Err(malformed()),
    };
    if code.is_empty() || !code.chars().all(|c| c.is_ascii_digit()) {
        return Err(IngestError::NonNumericStatus(code.to_owned()));
    }
    if code.len() > 3 {
        return Err(IngestError::StatusTooLong(code.to_owned()));
    }
    let status = StatusCode::new(code.parse().map_err(|_| malformed())?)?;
    Ok(Response {
        status,
        body: make_body(&head.headers, head.body),
        headers: head.headers,
        http_version: Some(version.to_owned()),
    })
}

fn write_headers(out: &mut Vec<u8>, headers: &[Header], body: Option<&Body>) {
    for h in headers {
        out.extend_from_slice(format!("{}: {}\r\n", h.name, h.value).as_bytes());
    }
    out.extend_from_slice(b"\r\n");
    if let Some(body) = body {
        out.extend_from_slice(&body.octets);
    }
}

/// Renders a request in origin form with a Host header when one is present.
pub fn request_to_wire(request: &Request) -> Vec<u8> {
    let uri = &request.uri;
    let has_host = request.headers.iter().any(|h| h.is("Host"));
    let mut target = if has_host {
        uri.path.clone()
    } else {
        uri.id_res()
    };
    if has_host && target.is_empty() {
        target.push('/');
    }
    if let Some(q) = &uri.query {
        target.push('?');
        target.push_str(q);
    }
    let version = request.http_version.as_deref().unwrap_or("HTTP/1.1");
    let mut out = format!("{} {} {}\r\n", request.method, target, version).into_bytes();
    write_headers(&mut out, &request.headers, request.body.as_ref());
    out
}

/// Renders a response with the status line in RFC order.
pub fn response_to_wire(response: &Response) -> Vec<u8> {
    let version = response.http_version.as_deref().unwrap_or("HTTP/1.1");
    let code = response.status.as_u16();
    let reason = crate::http::standard_status_name(code.into()).unwrap_or("");
    let mut out = format!("{version} {:03} {reason}\r\n", code).into_bytes();
    write_headers(&mut out, &response.headers, response.body.as_ref());
    out
}
