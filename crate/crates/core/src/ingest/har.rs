//! HAR 1.2 subset: only the request line, headers, post data and the
//! response status, headers and content are read.

use base64::Engine;
use chrono::DateTime;
use serde::Deserialize;

use crate::http::{Body, Conversation, Header, Interaction, Method, Request, Response, StatusCode};
use crate::uri::parse_uri;

use super::IngestError;

#[derive(Deserialize)]
struct Har {
    log: Log,
}

#[derive(Deserialize)]
struct Log {
    #[serde(default)]
    entries: Vec<Entry>,
}

#[derive(Deserialize)]
#[serde(rename_all = "camelCase")]
struct Entry {
    started_date_time: Option<String>,
    request: Option<HarRequest>,
    response: Option<HarResponse>,
}

#[derive(Deserialize)]
#[serde(rename_all = "camelCase")]
struct HarRequest {
    method: Option<String>,
    url: Option<String>,
    http_version: Option<String>,
    #[serde(default)]
    headers: Vec<HarHeader>,
    post_data: Option<PostData>,
}

#[derive(Deserialize)]
#[serde(rename_all = "camelCase")]
struct HarResponse {
    status: Option<u32>,
    http_version: Option<String>,
    #[serde(default)]
    headers: Vec<HarHeader>,
    content: Option<Content>,
}

#[derive(Deserialize)]
struct HarHeader {
    name: String,
    value: String,
}

#[derive(Deserialize)]
#[serde(rename_all = "camelCase")]
struct PostData {
    mime_type: Option<String>,
    text: Option<String>,
}

#[derive(Deserialize)]
#[serde(rename_all = "camelCase")]
struct Content {
    mime_type: Option<String>,
    text: Option<String>,
    encoding: Option<String>,
}

fn headers(raw: Vec<HarHeader>, entry: usize) -> Result<Vec<Header>, IngestError> {
    raw.into_iter()
        // HTTP/2 pseudo-headers have no HTTP/1.1 counterpart.
        .filter(|h| !h.name.starts_with(':'))
        .map(|h| {
            Header::new(h.name.clone(), h.value).map_err(|_| IngestError::Har {
                entry,
                message: format!("invalid header name {:?}", h.name),
            })
        })
        .collect()
}

fn body(headers: &[Header], fallback_type: Option<String>, octets: Vec<u8>) -> Option<Body> {
    if octets.is_empty() {
        return None;
    }
    let media_type = crate::http::header_value(headers, "Content-Type")
        .map(str::to_owned)
        .or(fallback_type.filter(|m| !m.is_empty()));
    Some(Body::new(media_type, octets))
}

fn version(v: Option<String>) -> Option<String> {
    v.filter(|v| v.starts_with("HTTP/"))
}

fn entry_to_interaction(index: usize, entry: Entry) -> Result<Interaction, IngestError> {
    let missing = |what: &str| IngestError::Har {
        entry: index,
        message: format!("missing {what}"),
    };
    let req = entry.request.ok_or_else(|| missing("request"))?;
    let resp = entry.response.ok_or_else(|| missing("response"))?;
    let method = req.method.ok_or_else(|| missing("request.method"))?;
    let url = req.url.ok_or_else(|| missing("request.url"))?;
    let status = resp.status.ok_or_else(|| missing("response.status"))?;

    let method = Method::parse(&method).map_err(|e| IngestError::Har {
        entry: index,
        message: e.to_string(),
    })?;
    let mut request = Request::new(method, parse_uri(&url)?);
    request.headers = headers(req.headers, index)?;
    request.http_version = version(req.http_version);
    if let Some(post) = req.post_data {
        let octets = post.text.unwrap_or_default().into_bytes();
        request.body = body(&request.headers, post.mime_type, octets);
    }

    let mut response = Response::new(StatusCode::new(status)?);
    response.headers = headers(resp.headers, index)?;
    response.http_version = version(resp.http_version);
    if let Some(content) = resp.content {
        let text = content.text.unwrap_or_default();
        let octets = match content.encoding.as_deref() {
            Some("base64") => base64::engine::general_purpose::STANDARD
                .decode(text.trim())
                .map_err(|e| IngestError::Har {
                    entry: index,
                    message: format!("bad base64 content: {e}"),
                })?,
            _ => text.into_bytes(),
        };
        response.body = body(&response.headers, content.mime_type, octets);
    }

    let mut interaction = Interaction::new(request);
    interaction.push_response(response)?;
    Ok(interaction)
}

/// Loads a HAR document. Entries are ordered by `startedDateTime` when every
/// entry carries a parseable timestamp, and by file order otherwise.
pub fn load_har(text: &str) -> Result<Conversation, IngestError> {
    let har: Har = serde_json::from_str(text).map_err(|e| IngestError::NotHar(e.to_string()))?;
    let mut entries: Vec<(usize, Entry)> = har.log.entries.into_iter().enumerate().collect();
    let stamps: Option<Vec<_>> = entries
        .iter()
        .map(|(_, e)| {
            e.started_date_time
                .as_deref()
                .and_then(|s| DateTime::parse_from_rfc3339(s).ok())
        })
        .collect();
    if let Some(stamps) = stamps {
        let mut keyed: Vec<_> = stamps.into_iter().zip(entries).collect();
        // stable: equal timestamps keep file order
        keyed.sort_by_key(|(t, _)| *t);
        entries = keyed.into_iter().map(|(_, e)| e).collect();
    }
    let interactions = entries
        .into_iter()
        .map(|(i, e)| entry_to_interaction(i, e))
        .collect::<Result<_, _>>()?;
    Ok(Conversation::new(interactions))
}
