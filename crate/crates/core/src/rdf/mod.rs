//! Minimal RDF model: terms, triples, indexed graphs and named-graph
//! datasets, with a Turtle/TriG reader and writer, property path
//! evaluation and blank-node-aware isomorphism.

mod graph;
mod iso;
mod parse;
mod path;
mod term;
pub mod vocab;
mod write;

pub use graph::{Dataset, Graph, Triple};
pub use iso::{isomorphic, isomorphic_datasets};
pub use parse::{parse_trig, parse_turtle};
pub use path::{eval_path, PathExpr};
pub use term::{
    Literal, Term, RDF_LANG_STRING, XSD, XSD_BOOLEAN, XSD_DECIMAL, XSD_DOUBLE, XSD_INTEGER,
    XSD_STRING,
};
pub use write::{serialize_trig, serialize_turtle, PrefixMap, TermWriter};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RdfError {
    #[error("invalid IRI {0:?}")]
    InvalidIri(String),
    #[error("invalid triple: {0}")]
    InvalidTriple(String),
    #[error("syntax error at {line}:{column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("unknown prefix {prefix:?} at {line}:{column}")]
    UnknownPrefix {
        prefix: String,
        line: usize,
        column: usize,
    },
    #[error("unterminated literal starting at {line}:{column}")]
    UnterminatedLiteral { line: usize, column: usize },
}
