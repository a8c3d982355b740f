//! Turning captured traffic into [`Conversation`](crate::http::Conversation)s.

mod har;
mod transcript;
mod wire;

pub use har::load_har;
pub use transcript::{load_transcript, Block, Direction, Transcript};
pub use wire::{
    parse_http_request, parse_http_request_with_scheme, parse_http_response, request_to_wire,
    response_to_wire,
};

use crate::http::ModelError;
use crate::uri::UriError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum IngestError {
    #[error("message head is not valid UTF-8")]
    NotUtf8,
    #[error("malformed header line: {0}")]
    MalformedHeader(String),
    #[error("chunked transfer coding is not supported")]
    ChunkedUnsupported,
    #[error("bad Content-Length {0:?}")]
    BadContentLength(String),
    #[error("body shorter than Content-Length: expected {expected} bytes, got {actual}")]
    TruncatedBody { expected: usize, actual: usize },
    #[error("malformed request line {0:?}")]
    MalformedRequestLine(String),
    #[error("malformed status line {0:?}")]
    MalformedStatusLine(String),
    #[error("status code {0:?} is not numeric")]
    NonNumericStatus(String),
    #[error("status code {0:?} has more than three digits")]
    StatusTooLong(String),
    #[error("response before any request")]
    ResponseBeforeRequest,
    #[error("block {index}: {source}")]
    Block {
        index: usize,
        #[source]
        source: Box<IngestError>,
    },
    #[error("not a HAR document: {0}")]
    NotHar(String),
    #[error("HAR entry {entry}: {message}")]
    Har { entry: usize, message: String },
    #[error(transparent)]
    Uri(#[from] UriError),
    #[error(transparent)]
    Model(#[from] ModelError),
}
