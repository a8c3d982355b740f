use std::fmt;

use super::RdfError;

pub const XSD: &str = "http://www.w3.org/2001/XMLSchema#";
pub const XSD_STRING: &str = "http://www.w3.org/2001/XMLSchema#string";
pub const XSD_INTEGER: &str = "http://www.w3.org/2001/XMLSchema#integer";
pub const XSD_DECIMAL: &str = "http://www.w3.org/2001/XMLSchema#decimal";
pub const XSD_DOUBLE: &str = "http://www.w3.org/2001/XMLSchema#double";
pub const XSD_BOOLEAN: &str = "http://www.w3.org/2001/XMLSchema#boolean";
pub const RDF_LANG_STRING: &str = "http://www.w3.org/1999/02/22-rdf-syntax-ns#langString";

/// A literal value. Equality is purely syntactic: `"01"` and `"1"` typed
/// as integers are different literals.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Literal {
    lexical: String,
    datatype: String,
    language: Option<String>,
}

impl Literal {
    pub fn string(lexical: impl Into<String>) -> Self {
        Self {
            lexical: lexical.into(),
            datatype: XSD_STRING.to_owned(),
            language: None,
        }
    }

    pub fn typed(lexical: impl Into<String>, datatype: impl Into<String>) -> Self {
        Self {
            lexical: lexical.into(),
            datatype: datatype.into(),
            language: None,
        }
    }

    /// Language-tagged string. Tags are lowercased.
    pub fn lang(lexical: impl Into<String>, language: &str) -> Self {
        Self {
            lexical: lexical.into(),
            datatype: RDF_LANG_STRING.to_owned(),
            language: Some(language.to_ascii_lowercase()),
        }
    }

    pub fn integer(value: i64) -> Self {
        Self::typed(value.to_string(), XSD_INTEGER)
    }

    pub fn lexical(&self) -> &str {
        &self.lexical
    }

    pub fn datatype(&self) -> &str {
        &self.datatype
    }

    pub fn language(&self) -> Option<&str> {
        self.language.as_deref()
    }

    /// Integer value when the literal is an `xsd:integer` with a canonical-ish lexical form.
    pub fn as_integer(&self) -> Option<i64> {
        if self.datatype == XSD_INTEGER {
            self.lexical.parse().ok()
        } else {
            None
        }
    }
}

/// An RDF term.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Term {
    Iri(String),
    BlankNode(String),
    Literal(Literal),
}

impl Term {
    /// Builds an IRI term, rejecting empty text and whitespace.
    pub fn iri(text: impl Into<String>) -> Result<Self, RdfError> {
        let text = text.into();
        check_iri(&text)?;
        Ok(Term::Iri(text))
    }

    /// Builds an IRI from a compile-time constant known to be valid.
    pub fn named(text: &str) -> Self {
        debug_assert!(check_iri(text).is_ok(), "invalid IRI constant {text}");
        Term::Iri(text.to_owned())
    }

    pub fn blank(label: impl Into<String>) -> Self {
        Term::BlankNode(label.into())
    }

    pub fn string(lexical: impl Into<String>) -> Self {
        Term::Literal(Literal::string(lexical))
    }

    pub fn integer(value: i64) -> Self {
        Term::Literal(Literal::integer(value))
    }

    pub fn typed(lexical: impl Into<String>, datatype: impl Into<String>) -> Self {
        Term::Literal(Literal::typed(lexical, datatype))
    }

    pub fn is_iri(&self) -> bool {
        matches!(self, Term::Iri(_))
    }

    pub fn is_blank(&self) -> bool {
        matches!(self, Term::BlankNode(_))
    }

    pub fn is_literal(&self) -> bool {
        matches!(self, Term::Literal(_))
    }

    pub fn as_iri(&self) -> Option<&str> {
        match self {
            Term::Iri(iri) => Some(iri),
            _ => None,
        }
    }

    pub fn as_literal(&self) -> Option<&Literal> {
        match self {
            Term::Literal(lit) => Some(lit),
            _ => None,
        }
    }

    pub fn as_integer(&self) -> Option<i64> {
        self.as_literal().and_then(Literal::as_integer)
    }
}

pub(crate) fn check_iri(text: &str) -> Result<(), RdfError> {
    if text.is_empty() {
        return Err(RdfError::InvalidIri(text.to_owned()));
    }
    if text
        .chars()
        .any(|c| c.is_whitespace() || c.is_control() || matches!(c, '<' | '>' | '"'))
    {
        return Err(RdfError::InvalidIri(text.to_owned()));
    }
    Ok(())
}

/// Escapes a string for use between double quotes in Turtle.
pub(crate) fn escape_string(text: &str, out: &mut String) {
    for c in text.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\r' => out.push_str("\\r"),
            '\t' => out.push_str("\\t"),
            c if c.is_control() => out.push_str(&format!("\\u{:04X}", c as u32)),
            c => out.push(c),
        }
    }
}

/// Renders terms in N-Triples style: full IRIs, `_:` labels, quoted literals.
impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Iri(iri) => write!(f, "<{iri}>"),
            Term::BlankNode(label) => write!(f, "_:{label}"),
            Term::Literal(lit) => {
                let mut s = String::with_capacity(lit.lexical.len() + 2);
                s.push('"');
                escape_string(&lit.lexical, &mut s);
                s.push('"');
                if let Some(lang) = &lit.language {
                    s.push('@');
                    s.push_str(lang);
                } else if lit.datatype != XSD_STRING {
                    s.push_str("^^<");
                    s.push_str(&lit.datatype);
                    s.push('>');
                }
                f.write_str(&s)
            }
        }
    }
}
