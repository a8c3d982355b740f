//! Plain-text transcripts: raw HTTP/1.1 messages separated by lines that
//! contain exactly `---`.

use crate::http::{Conversation, Interaction};

use super::wire::{looks_like_response, parse_http_request, parse_http_response};
use super::wire::{request_to_wire, response_to_wire};
use super::IngestError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    Request,
    Response,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    pub direction: Direction,
    pub raw: Vec<u8>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Transcript {
    pub blocks: Vec<Block>,
}

fn is_separator(line: &str) -> bool {
    line.strip_suffix('\r').unwrap_or(line) == "---"
}

// Leading blank lines and the trailing line terminators of a block are not
// part of the message.
fn clean_block(lines: &[&str]) -> Option<String> {
    let start = lines.iter().position(|l| !l.trim().is_empty())?;
    let text = lines[start..].join("\n");
    Some(text.trim_end_matches(['\r', '\n']).to_owned())
}

impl Transcript {
    /// Splits text into message blocks and infers each block's direction.
    pub fn parse(text: &str) -> Self {
        let mut blocks = Vec::new();
        let mut current: Vec<&str> = Vec::new();
        let mut flush = |current: &mut Vec<&str>| {
            if let Some(raw) = clean_block(current) {
                let first = raw.lines().next().unwrap_or("");
                let direction = if looks_like_response(first) {
                    Direction::Response
                } else {
                    Direction::Request
                };
                blocks.push(Block {
                    direction,
                    raw: raw.into_bytes(),
                });
            }
            current.clear();
        };
        for line in text.split('\n') {
            if is_separator(line) {
                flush(&mut current);
            } else {
                current.push(line);
            }
        }
        flush(&mut current);
        Self { blocks }
    }

    /// Pairs blocks into interactions: a request opens an interaction,
    /// 1xx responses become interim, the first other response closes it.
    pub fn into_conversation(self) -> Result<Conversation, IngestError> {
        let mut interactions: Vec<Interaction> = Vec::new();
        for (index, block) in self.blocks.into_iter().enumerate() {
            let at = |source: IngestError| IngestError::Block {
                index,
                source: Box::new(source),
            };
            match block.direction {
                Direction::Request => {
                    let request = parse_http_request(&block.raw).map_err(at)?;
                    interactions.push(Interaction::new(request));
                }
                Direction::Response => {
                    let response = parse_http_response(&block.raw).map_err(at)?;
                    let current = interactions
                        .last_mut()
                        .ok_or_else(|| at(IngestError::ResponseBeforeRequest))?;
                    current
                        .push_response(response)
                        .map_err(|e| at(IngestError::Model(e)))?;
                }
            }
        }
        Ok(Conversation::new(interactions))
    }

    /// Renders a conversation back into transcript text.
    pub fn render(conversation: &Conversation) -> String {
        let mut parts: Vec<String> = Vec::new();
        for interaction in &conversation.interactions {
            parts.push(String::from_utf8_lossy(&request_to_wire(interaction.request())).into_owned());
            for response in interaction.responses() {
                parts.push(String::from_utf8_lossy(&response_to_wire(response)).into_owned());
            }
        }
        let mut out = parts.join("\n---\n");
        if !out.is_empty() {
            out.push('\n');
        }
        out
    }
}

/// Loads a transcript into a conversation.
pub fn load_transcript(text: &str) -> Result<Conversation, IngestError> {
    Transcript::parse(text).into_conversation()
}
