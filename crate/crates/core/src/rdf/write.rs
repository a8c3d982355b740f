use std::collections::BTreeMap;

use super::term::{escape_string, XSD_BOOLEAN, XSD_DECIMAL, XSD_INTEGER, XSD_STRING};
use super::vocab::RDF_TYPE;
use super::{Dataset, Graph, Term};

/// Ordered prefix table. Declaration order is kept for output.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PrefixMap {
    entries: Vec<(String, String)>,
}

impl PrefixMap {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds or replaces a prefix.
    pub fn insert(&mut self, prefix: impl Into<String>, namespace: impl Into<String>) {
        let prefix = prefix.into();
        let namespace = namespace.into();
        match self.entries.iter_mut().find(|(p, _)| *p == prefix) {
            Some(entry) => entry.1 = namespace,
            None => self.entries.push((prefix, namespace)),
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &str)> {
        self.entries.iter().map(|(p, n)| (p.as_str(), n.as_str()))
    }

    pub fn get(&self, prefix: &str) -> Option<&str> {
        self.entries
            .iter()
            .find(|(p, _)| p == prefix)
            .map(|(_, n)| n.as_str())
    }

    /// Compacts an IRI using the longest matching namespace.
    pub fn compact(&self, iri: &str) -> Option<String> {
        self.entries
            .iter()
            .filter(|(_, ns)| iri.starts_with(ns.as_str()))
            .filter(|(_, ns)| is_safe_local(&iri[ns.len()..]))
            .max_by_key(|(_, ns)| ns.len())
            .map(|(p, ns)| format!("{p}:{}", &iri[ns.len()..]))
    }
}

impl<P: Into<String>, N: Into<String>> FromIterator<(P, N)> for PrefixMap {
    fn from_iter<I: IntoIterator<Item = (P, N)>>(iter: I) -> Self {
        let mut map = PrefixMap::new();
        for (p, n) in iter {
            map.insert(p, n);
        }
        map
    }
}

// Conservative subset of PN_LOCAL that never needs escaping.
fn is_safe_local(local: &str) -> bool {
    let mut chars = local.chars();
    match chars.next() {
        None => true,
        Some(c) if c.is_ascii_alphanumeric() || c == '_' => {
            chars.all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '-')
        }
        Some(_) => false,
    }
}

fn is_integer(lex: &str) -> bool {
    let digits = lex.strip_prefix(['+', '-']).unwrap_or(lex);
    !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
}

fn is_decimal(lex: &str) -> bool {
    let body = lex.strip_prefix(['+', '-']).unwrap_or(lex);
    match body.split_once('.') {
        Some((int, frac)) => {
            int.bytes().all(|b| b.is_ascii_digit())
                && !frac.is_empty()
                && frac.bytes().all(|b| b.is_ascii_digit())
        }
        None => false,
    }
}

/// Renders terms in Turtle syntax against a prefix table.
pub struct TermWriter<'a> {
    prefixes: &'a PrefixMap,
}

impl<'a> TermWriter<'a> {
    pub fn new(prefixes: &'a PrefixMap) -> Self {
        Self { prefixes }
    }

    pub fn iri(&self, iri: &str) -> String {
        self.prefixes
            .compact(iri)
            .unwrap_or_else(|| format!("<{iri}>"))
    }

    pub fn term(&self, term: &Term) -> String {
        match term {
            Term::Iri(iri) => self.iri(iri),
            Term::BlankNode(label) => format!("_:{label}"),
            Term::Literal(lit) => {
                let lex = lit.lexical();
                let dt = lit.datatype();
                if dt == XSD_INTEGER && is_integer(lex)
                    || dt == XSD_DECIMAL && is_decimal(lex)
                    || dt == XSD_BOOLEAN && (lex == "true" || lex == "false")
                {
                    return lex.to_owned();
                }
                let mut out = String::with_capacity(lex.len() + 2);
                out.push('"');
                escape_string(lex, &mut out);
                out.push('"');
                if let Some(lang) = lit.language() {
                    out.push('@');
                    out.push_str(lang);
                } else if dt != XSD_STRING {
                    out.push_str("^^");
                    out.push_str(&self.iri(dt));
                }
                out
            }
        }
    }

    fn predicate(&self, term: &Term) -> String {
        match term {
            Term::Iri(iri) if iri == RDF_TYPE => "a".to_owned(),
            other => self.term(other),
        }
    }
}

fn header(prefixes: &PrefixMap, out: &mut String) {
    for (p, ns) in prefixes.iter() {
        out.push_str(&format!("@prefix {p}: <{ns}> .\n"));
    }
}

fn write_triples(graph: &Graph, writer: &TermWriter<'_>, indent: &str, out: &mut String) {
    // subject -> predicate -> objects, all as rendered text
    let mut rendered: BTreeMap<String, BTreeMap<String, Vec<String>>> = BTreeMap::new();
    for t in graph.iter() {
        rendered
            .entry(writer.term(t.subject()))
            .or_default()
            .entry(writer.predicate(t.predicate()))
            .or_default()
            .push(writer.term(t.object()));
    }
    for (subject, preds) in rendered {
        out.push_str(indent);
        out.push_str(&subject);
        let n = preds.len();
        for (i, (pred, mut objects)) in preds.into_iter().enumerate() {
            objects.sort();
            if i == 0 {
                out.push(' ');
            } else {
                out.push_str(indent);
                out.push_str("    ");
            }
            out.push_str(&pred);
            out.push(' ');
            out.push_str(&objects.join(", "));
            out.push_str(if i + 1 == n { " .\n" } else { " ;\n" });
        }
    }
}

/// Serializes a graph as Turtle. Output is byte-stable for equal graphs.
pub fn serialize_turtle(graph: &Graph, prefixes: &PrefixMap) -> String {
    let mut out = String::new();
    header(prefixes, &mut out);
    if !graph.is_empty() {
        out.push('\n');
        write_triples(graph, &TermWriter::new(prefixes), "", &mut out);
    }
    out
}

/// Serializes a dataset as TriG: default graph triples first, then each
/// named graph in order of its rendered name.
pub fn serialize_trig(dataset: &Dataset, prefixes: &PrefixMap) -> String {
    let writer = TermWriter::new(prefixes);
    let mut out = String::new();
    header(prefixes, &mut out);
    if !dataset.default_graph().is_empty() {
        out.push('\n');
        write_triples(dataset.default_graph(), &writer, "", &mut out);
    }
    let mut named: Vec<(String, &Graph)> = dataset
        .named_graphs()
        .map(|(name, g)| (writer.term(name), g))
        .collect();
    named.sort_by(|a, b| a.0.cmp(&b.0));
    for (name, graph) in named {
        out.push('\n');
        out.push_str(&name);
        out.push_str(" {\n");
        write_triples(graph, &writer, "    ", &mut out);
        out.push_str("}\n");
    }
    out
}
