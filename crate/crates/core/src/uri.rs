//! URI decomposition, `application/x-www-form-urlencoded` query decoding
//! and effective request URI computation.

use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum UriError {
    #[error("empty URI")]
    Empty,
    #[error("missing scheme in {0:?}")]
    MissingScheme(String),
    #[error("illegal character in scheme {0:?}")]
    InvalidScheme(String),
    #[error("{0:?} has no authority component (expected \"scheme://\")")]
    MissingAuthority(String),
    #[error("illegal character {ch:?} at offset {offset}")]
    IllegalCharacter { ch: char, offset: usize },
    #[error("malformed percent escape at offset {offset}")]
    BadPercentEscape { offset: usize },
    #[error("origin-form target {0:?} needs a Host header")]
    MissingHost(String),
    #[error("unsupported request target form {0:?}")]
    UnsupportedTarget(String),
    #[error("cannot resolve reference {0:?}")]
    UnresolvableReference(String),
}

/// A decoded `name=value` pair from a query string.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct QueryParam {
    pub name: String,
    pub value: String,
}

impl QueryParam {
    pub fn new(name: impl Into<String>, value: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            value: value.into(),
        }
    }
}

/// An absolute hierarchical URI split into its components.
///
/// `query` keeps the raw text; `params` holds its decoded pairs in wire order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UriParts {
    pub scheme: String,
    pub authority: String,
    pub path: String,
    pub query: Option<String>,
    pub fragment: Option<String>,
    pub params: Vec<QueryParam>,
}

impl UriParts {
    /// The resource identifier: everything but the query and fragment.
    pub fn id_res(&self) -> String {
        format!("{}://{}{}", self.scheme, self.authority, self.path)
    }

    pub fn recompose(&self) -> String {
        let mut s = self.id_res();
        if let Some(q) = &self.query {
            s.push('?');
            s.push_str(q);
        }
        if let Some(f) = &self.fragment {
            s.push('#');
            s.push_str(f);
        }
        s
    }
}

impl fmt::Display for UriParts {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.recompose())
    }
}

/// Free-function form of [`UriParts::id_res`].
pub fn id_res(uri: &UriParts) -> String {
    uri.id_res()
}

fn valid_scheme(scheme: &str) -> bool {
    let mut chars = scheme.chars();
    chars.next().is_some_and(|c| c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric() || matches!(c, '+' | '-' | '.'))
}

/// Parses an absolute URI of the form `scheme://authority path [?query] [#fragment]`.
pub fn parse_uri(text: &str) -> Result<UriParts, UriError> {
    if text.is_empty() {
        return Err(UriError::Empty);
    }
    if let Some((offset, ch)) = text
        .char_indices()
        .find(|(_, c)| c.is_whitespace() || c.is_control())
    {
        return Err(UriError::IllegalCharacter { ch, offset });
    }
    let Some(colon) = text.find(':') else {
        return Err(UriError::MissingScheme(text.to_owned()));
    };
    let scheme = &text[..colon];
    if scheme.is_empty() {
        return Err(UriError::MissingScheme(text.to_owned()));
    }
    if !valid_scheme(scheme) {
        // "ftp//x:y" style inputs: the text before ':' is not a scheme at all
        if scheme.contains('/') {
            return Err(UriError::MissingScheme(text.to_owned()));
        }
        return Err(UriError::InvalidScheme(scheme.to_owned()));
    }
    let Some(rest) = text[colon + 1..].strip_prefix("//") else {
        return Err(UriError::MissingAuthority(text.to_owned()));
    };
    let (before_fragment, fragment) = match rest.split_once('#') {
        Some((a, f)) => (a, Some(f.to_owned())),
        None => (rest, None),
    };
    let (hier, query) = match before_fragment.split_once('?') {
        Some((h, q)) => (h, Some(q.to_owned())),
        None => (before_fragment, None),
    };
    let (authority, path) = match hier.find('/') {
        Some(i) => (&hier[..i], &hier[i..]),
        None => (hier, ""),
    };
    let params = match &query {
        Some(q) => decode_query_params(q).map_err(|e| match e {
            // report offsets relative to the whole URI
            UriError::BadPercentEscape { offset } => UriError::BadPercentEscape {
                offset: offset + colon + 3 + hier.len() + 1,
            },
            other => other,
        })?,
        None => Vec::new(),
    };
    Ok(UriParts {
        scheme: scheme.to_owned(),
        authority: authority.to_owned(),
        path: path.to_owned(),
        query,
        fragment,
        params,
    })
}

fn hex_value(b: u8) -> Option<u8> {
    match b {
        b'0'..=b'9' => Some(b - b'0'),
        b'a'..=b'f' => Some(b - b'a' + 10),
        b'A'..=b'F' => Some(b - b'A' + 10),
        _ => None,
    }
}

// Decodes `+` and `%XX`; `base` is the segment's offset in the full query.
fn form_decode(segment: &str, base: usize) -> Result<String, UriError> {
    let bytes = segment.as_bytes();
    let mut out = Vec::with_capacity(bytes.len());
    let mut i = 0;
    while i < bytes.len() {
        match bytes[i] {
            b'+' => {
                out.push(b' ');
                i += 1;
            }
            b'%' => {
                let hi = bytes.get(i + 1).copied().and_then(hex_value);
                let lo = bytes.get(i + 2).copied().and_then(hex_value);
                match (hi, lo) {
                    (Some(hi), Some(lo)) => out.push(hi << 4 | lo),
                    _ => return Err(UriError::BadPercentEscape { offset: base + i }),
                }
                i += 3;
            }
            b => {
                out.push(b);
                i += 1;
            }
        }
    }
    Ok(String::from_utf8_lossy(&out).into_owned())
}

/// Decodes an `application/x-www-form-urlencoded` string into ordered pairs.
///
/// Empty segments are skipped; a segment without `=` yields an empty value.
/// Duplicate names are kept.
pub fn decode_query_params(query: &str) -> Result<Vec<QueryParam>, UriError> {
    let mut params = Vec::new();
    let mut offset = 0;
    for segment in query.split('&') {
        let base = offset;
        offset += segment.len() + 1;
        if segment.is_empty() {
            continue;
        }
        let (name, value, value_base) = match segment.split_once('=') {
            Some((n, v)) => (n, v, base + n.len() + 1),
            None => (segment, "", base + segment.len()),
        };
        params.push(QueryParam {
            name: form_decode(name, base)?,
            value: form_decode(value, value_base)?,
        });
    }
    Ok(params)
}

/// Computes the effective request URI from a request target.
///
/// Origin-form targets (`/path?query`) are combined with `host` and
/// `scheme`; absolute-form targets are parsed as they are. Asterisk-form and
/// authority-form targets are rejected.
pub fn effective_request_uri(
    target: &str,
    host: Option<&str>,
    scheme: &str,
) -> Result<UriParts, UriError> {
    if target.starts_with('/') {
        let host = host
            .map(str::trim)
            .filter(|h| !h.is_empty())
            .ok_or_else(|| UriError::MissingHost(target.to_owned()))?;
        return parse_uri(&format!("{scheme}://{host}{target}"));
    }
    if target == "*" {
        return Err(UriError::UnsupportedTarget(target.to_owned()));
    }
    match target.split_once("://") {
        Some((s, _)) if valid_scheme(s) => parse_uri(target),
        _ => Err(UriError::UnsupportedTarget(target.to_owned())),
    }
}

/// Resolves a reference found in a header (e.g. `Location`) against `base`.
///
/// Absolute URIs, network-path (`//host/p`) and absolute-path (`/p`)
/// references are supported.
pub fn resolve_reference(reference: &str, base: &UriParts) -> Result<UriParts, UriError> {
    let reference = reference.trim();
    let reference = reference
        .strip_prefix('<')
        .and_then(|r| r.strip_suffix('>'))
        .unwrap_or(reference);
    if reference.starts_with("//") {
        return parse_uri(&format!("{}:{reference}", base.scheme));
    }
    if reference.starts_with('/') {
        return parse_uri(&format!("{}://{}{reference}", base.scheme, base.authority));
    }
    match reference.split_once(':') {
        Some((s, _)) if valid_scheme(s) => parse_uri(reference),
        _ => Err(UriError::UnresolvableReference(reference.to_owned())),
    }
}
