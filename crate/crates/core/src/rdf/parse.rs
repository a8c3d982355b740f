//! Parser for the Turtle and TriG subset used by this crate.
//!
//! Supported: `@prefix`/`PREFIX` directives, absolute IRIs, prefixed names,
//! labeled and anonymous blank nodes, blank node property lists, collections,
//! quoted strings (short and long forms), numbers, booleans, language tags,
//! `^^` datatypes, the `a` keyword and `;`/`,` continuations. TriG adds
//! `name { ... }`, `GRAPH name { ... }` and `{ ... }` blocks.
//! Base IRI resolution is not supported; relative IRIs are rejected.

use std::collections::{BTreeMap, HashSet};

use super::term::{check_iri, XSD_BOOLEAN, XSD_DECIMAL, XSD_DOUBLE, XSD_INTEGER};
use super::vocab::{RDF_FIRST, RDF_NIL, RDF_REST, RDF_TYPE};
use super::{Dataset, Graph, Literal, RdfError, Term, Triple};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Iri(String),
    PName(String, String),
    Blank(String),
    Str(String),
    Lang(String),
    Carets,
    Integer(String),
    Decimal(String),
    Double(String),
    Word(String),
    AtPrefix,
    AtBase,
    Dot,
    Semi,
    Comma,
    LBracket,
    RBracket,
    LParen,
    RParen,
    LBrace,
    RBrace,
}

#[derive(Clone, Copy, Debug)]
struct Pos {
    line: usize,
    col: usize,
}

struct Lexer<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    line: usize,
    col: usize,
    pending_dots: usize,
}

fn is_name_start(c: char) -> bool {
    c.is_alphanumeric() || c == '_' || c == ':'
}

fn is_name_char(c: char) -> bool {
    c.is_alphanumeric() || matches!(c, '_' | '-' | '.' | ':' | '%' | '\\')
}

impl<'a> Lexer<'a> {
    fn new(text: &'a str) -> Self {
        Self {
            chars: text.chars().peekable(),
            line: 1,
            col: 1,
            pending_dots: 0,
        }
    }

    fn pos(&self) -> Pos {
        Pos {
            line: self.line,
            col: self.col,
        }
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.chars.next()?;
        if c == '\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(c)
    }

    fn peek(&mut self) -> Option<char> {
        self.chars.peek().copied()
    }

    fn peek2(&self) -> Option<char> {
        let mut it = self.chars.clone();
        it.next();
        it.next()
    }

    fn err(&self, pos: Pos, message: impl Into<String>) -> RdfError {
        RdfError::Syntax {
            line: pos.line,
            column: pos.col,
            message: message.into(),
        }
    }

    fn tokenize(mut self) -> Result<Vec<(Tok, Pos)>, RdfError> {
        let mut out = Vec::new();
        loop {
            self.skip_ws();
            let pos = self.pos();
            let Some(c) = self.peek() else { break };
            let tok = match c {
                '<' => self.iri()?,
                '"' | '\'' => self.string(c)?,
                '_' if self.peek2() == Some(':') => {
                    self.bump();
                    self.bump();
                    let label = self.take_while(|c| c.is_alphanumeric() || matches!(c, '_' | '-' | '.'));
                    let label = self.trim_dots(label);
                    if label.is_empty() {
                        return Err(self.err(pos, "empty blank node label"));
                    }
                    out.push((Tok::Blank(label), pos));
                    self.flush_dots(&mut out);
                    continue;
                }
                '@' => {
                    self.bump();
                    let word = self.take_while(|c| c.is_ascii_alphanumeric() || c == '-');
                    match word.as_str() {
                        "prefix" => Tok::AtPrefix,
                        "base" => Tok::AtBase,
                        "" => return Err(self.err(pos, "empty language tag")),
                        _ => Tok::Lang(word),
                    }
                }
                '^' => {
                    self.bump();
                    if self.bump() != Some('^') {
                        return Err(self.err(pos, "expected '^^'"));
                    }
                    Tok::Carets
                }
                '.' if self.peek2().is_some_and(|c| c.is_ascii_digit()) => self.number()?,
                '+' | '-' => self.number()?,
                c if c.is_ascii_digit() => self.number()?,
                '.' => self.punct(Tok::Dot),
                ';' => self.punct(Tok::Semi),
                ',' => self.punct(Tok::Comma),
                '[' => self.punct(Tok::LBracket),
                ']' => self.punct(Tok::RBracket),
                '(' => self.punct(Tok::LParen),
                ')' => self.punct(Tok::RParen),
                '{' => self.punct(Tok::LBrace),
                '}' => self.punct(Tok::RBrace),
                c if is_name_start(c) => {
                    let name = self.name(pos)?;
                    let name = self.trim_dots(name);
                    let tok = match name.split_once(':') {
                        Some((prefix, local)) => Tok::PName(prefix.to_owned(), unescape_local(local)),
                        None => Tok::Word(name),
                    };
                    out.push((tok, pos));
                    self.flush_dots(&mut out);
                    continue;
                }
                other => return Err(self.err(pos, format!("unexpected character {other:?}"))),
            };
            out.push((tok, pos));
        }
        Ok(out)
    }

    // Trailing dots of names and labels belong to the statement, not the name.
    // They are recorded here and emitted after the name token by `flush_dots`.
    fn trim_dots(&mut self, mut name: String) -> String {
        let mut n = 0;
        while name.ends_with('.') {
            name.pop();
            n += 1;
        }
        self.pending_dots = n;
        name
    }

    fn flush_dots(&mut self, out: &mut Vec<(Tok, Pos)>) {
        let pos = Pos {
            line: self.line,
            col: self.col.saturating_sub(self.pending_dots),
        };
        for _ in 0..self.pending_dots {
            out.push((Tok::Dot, pos));
        }
        self.pending_dots = 0;
    }

    fn punct(&mut self, tok: Tok) -> Tok {
        self.bump();
        tok
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if c.is_whitespace() {
                self.bump();
            } else if c == '#' {
                while let Some(c) = self.bump() {
                    if c == '\n' {
                        break;
                    }
                }
            } else {
                break;
            }
        }
    }

    fn take_while(&mut self, f: impl Fn(char) -> bool) -> String {
        let mut s = String::new();
        while let Some(c) = self.peek() {
            if !f(c) {
                break;
            }
            s.push(c);
            self.bump();
        }
        s
    }

    fn name(&mut self, pos: Pos) -> Result<String, RdfError> {
        let mut s = String::new();
        while let Some(c) = self.peek() {
            if !is_name_char(c) {
                break;
            }
            self.bump();
            if c == '\\' {
                match self.bump() {
                    Some(e) => {
                        s.push('\\');
                        s.push(e);
                    }
                    None => return Err(self.err(pos, "dangling escape in name")),
                }
            } else {
                s.push(c);
            }
        }
        Ok(s)
    }

    fn iri(&mut self) -> Result<Tok, RdfError> {
        let pos = self.pos();
        self.bump();
        let mut s = String::new();
        loop {
            match self.bump() {
                Some('>') => break,
                Some(c) if c.is_whitespace() => {
                    return Err(self.err(pos, "whitespace inside IRI"));
                }
                Some(c) => s.push(c),
                None => return Err(self.err(pos, "unterminated IRI")),
            }
        }
        Ok(Tok::Iri(s))
    }

    fn string(&mut self, quote: char) -> Result<Tok, RdfError> {
        let pos = self.pos();
        self.bump();
        let long = self.peek() == Some(quote) && self.peek2() == Some(quote);
        if long {
            self.bump();
            self.bump();
        } else if self.peek() == Some(quote) {
            self.bump();
            return Ok(Tok::Str(String::new()));
        }
        let unterminated = || RdfError::UnterminatedLiteral {
            line: pos.line,
            column: pos.col,
        };
        let mut s = String::new();
        loop {
            let c = self.bump().ok_or_else(unterminated)?;
            match c {
                '\\' => {
                    let e = self.bump().ok_or_else(unterminated)?;
                    match e {
                        't' => s.push('\t'),
                        'n' => s.push('\n'),
                        'r' => s.push('\r'),
                        'b' => s.push('\u{8}'),
                        'f' => s.push('\u{c}'),
                        '"' | '\'' | '\\' => s.push(e),
                        'u' | 'U' => {
                            let n = if e == 'u' { 4 } else { 8 };
                            let mut hex = String::new();
                            for _ in 0..n {
                                hex.push(self.bump().ok_or_else(unterminated)?);
                            }
                            let ch = u32::from_str_radix(&hex, 16)
                                .ok()
                                .and_then(char::from_u32)
                                .ok_or_else(|| self.err(pos, format!("bad escape \\{e}{hex}")))?;
                            s.push(ch);
                        }
                        other => return Err(self.err(pos, format!("bad escape \\{other}"))),
                    }
                }
                c if c == quote => {
                    if !long {
                        break;
                    }
                    if self.peek() == Some(quote) && self.peek2() == Some(quote) {
                        self.bump();
                        self.bump();
                        // """a"""" ends with an embedded quote
                        while self.peek() == Some(quote) {
                            s.push(quote);
                            self.bump();
                        }
                        break;
                    }
                    s.push(c);
                }
                '\n' | '\r' if !long => return Err(unterminated()),
                c => s.push(c),
            }
        }
        Ok(Tok::Str(s))
    }

    fn number(&mut self) -> Result<Tok, RdfError> {
        let pos = self.pos();
        let mut s = String::new();
        if let Some(c @ ('+' | '-')) = self.peek() {
            s.push(c);
            self.bump();
        }
        s.push_str(&self.take_while(|c| c.is_ascii_digit()));
        let mut kind = 0; // 0 integer, 1 decimal, 2 double
        if self.peek() == Some('.') && self.peek2().is_some_and(|c| c.is_ascii_digit()) {
            self.bump();
            s.push('.');
            s.push_str(&self.take_while(|c| c.is_ascii_digit()));
            kind = 1;
        }
        if let Some(e @ ('e' | 'E')) = self.peek() {
            self.bump();
            s.push(e);
            if let Some(sign @ ('+' | '-')) = self.peek() {
                self.bump();
                s.push(sign);
            }
            let exp = self.take_while(|c| c.is_ascii_digit());
            if exp.is_empty() {
                return Err(self.err(pos, "malformed exponent"));
            }
            s.push_str(&exp);
            kind = 2;
        }
        if !s.chars().any(|c| c.is_ascii_digit()) {
            return Err(self.err(pos, format!("malformed number {s:?}")));
        }
        Ok(match kind {
            0 => Tok::Integer(s),
            1 => Tok::Decimal(s),
            _ => Tok::Double(s),
        })
    }
}

fn unescape_local(local: &str) -> String {
    let mut out = String::with_capacity(local.len());
    let mut chars = local.chars();
    while let Some(c) = chars.next() {
        if c == '\\' {
            if let Some(e) = chars.next() {
                out.push(e);
            }
        } else {
            out.push(c);
        }
    }
    out
}

struct Parser {
    toks: Vec<(Tok, Pos)>,
    at: usize,
    prefixes: BTreeMap<String, String>,
    used_labels: HashSet<String>,
    next_label: usize,
    trig: bool,
    dataset: Dataset,
    graph: Option<Term>,
}

impl Parser {
    fn new(toks: Vec<(Tok, Pos)>, trig: bool) -> Self {
        let used_labels = toks
            .iter()
            .filter_map(|(t, _)| match t {
                Tok::Blank(l) => Some(l.clone()),
                _ => None,
            })
            .collect();
        Self {
            toks,
            at: 0,
            prefixes: BTreeMap::new(),
            used_labels,
            next_label: 0,
            trig,
            dataset: Dataset::new(),
            graph: None,
        }
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(t, _)| t)
    }

    fn peek_at(&self, offset: usize) -> Option<&Tok> {
        self.toks.get(self.at + offset).map(|(t, _)| t)
    }

    fn pos(&self) -> Pos {
        self.toks
            .get(self.at)
            .or_else(|| self.toks.last())
            .map(|(_, p)| *p)
            .unwrap_or(Pos { line: 1, col: 1 })
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.at).map(|(t, _)| t.clone());
        if t.is_some() {
            self.at += 1;
        }
        t
    }

    fn err(&self, message: impl Into<String>) -> RdfError {
        let pos = self.pos();
        let message = message.into();
        let message = if self.at >= self.toks.len() {
            format!("{message} (at end of input)")
        } else {
            message
        };
        RdfError::Syntax {
            line: pos.line,
            column: pos.col,
            message,
        }
    }

    fn expect(&mut self, want: Tok, what: &str) -> Result<(), RdfError> {
        if self.peek() == Some(&want) {
            self.at += 1;
            Ok(())
        } else {
            Err(self.err(format!("expected {what}")))
        }
    }

    fn fresh(&mut self) -> Term {
        loop {
            let label = format!("b{}", self.next_label);
            self.next_label += 1;
            if !self.used_labels.contains(&label) {
                self.used_labels.insert(label.clone());
                return Term::BlankNode(label);
            }
        }
    }

    fn emit(&mut self, s: Term, p: Term, o: Term) -> Result<(), RdfError> {
        let triple = Triple::new(s, p, o).map_err(|e| self.err(e.to_string()))?;
        match &self.graph {
            None => self.dataset.default_graph_mut().insert(triple),
            Some(name) => self.dataset.named_graph_mut(name.clone())?.insert(triple),
        };
        Ok(())
    }

    fn document(&mut self) -> Result<(), RdfError> {
        while let Some(tok) = self.peek() {
            match tok {
                Tok::AtPrefix => {
                    self.at += 1;
                    self.prefix_decl()?;
                    self.expect(Tok::Dot, "'.' after @prefix")?;
                }
                Tok::Word(w) if w.eq_ignore_ascii_case("prefix") => {
                    self.at += 1;
                    self.prefix_decl()?;
                }
                Tok::AtBase => return Err(self.err("@base is not supported")),
                Tok::Word(w) if w.eq_ignore_ascii_case("base") => {
                    return Err(self.err("BASE is not supported"))
                }
                Tok::Word(w) if self.trig && w.eq_ignore_ascii_case("graph") => {
                    self.at += 1;
                    let name = self.graph_name()?;
                    self.wrapped_graph(Some(name))?;
                }
                Tok::LBrace if self.trig => self.wrapped_graph(None)?,
                Tok::LBrace => return Err(self.err("graph blocks are only allowed in TriG")),
                _ if self.trig && self.starts_graph_block() => {
                    let name = self.graph_name()?;
                    self.wrapped_graph(Some(name))?;
                }
                _ => {
                    self.triples()?;
                    self.expect(Tok::Dot, "'.' at end of statement")?;
                }
            }
        }
        Ok(())
    }

    fn starts_graph_block(&self) -> bool {
        match self.peek() {
            Some(Tok::Iri(_) | Tok::PName(..) | Tok::Blank(_)) => {
                self.peek_at(1) == Some(&Tok::LBrace)
            }
            Some(Tok::LBracket) => {
                self.peek_at(1) == Some(&Tok::RBracket) && self.peek_at(2) == Some(&Tok::LBrace)
            }
            _ => false,
        }
    }

    fn graph_name(&mut self) -> Result<Term, RdfError> {
        match self.peek() {
            Some(Tok::LBracket) => {
                self.at += 1;
                self.expect(Tok::RBracket, "']'")?;
                Ok(self.fresh())
            }
            Some(Tok::Blank(_)) => match self.next() {
                Some(Tok::Blank(l)) => Ok(Term::BlankNode(l)),
                _ => unreachable!(),
            },
            _ => self.iri_like(),
        }
    }

    fn wrapped_graph(&mut self, name: Option<Term>) -> Result<(), RdfError> {
        self.expect(Tok::LBrace, "'{'")?;
        let saved = std::mem::replace(&mut self.graph, name.clone());
        if let Some(name) = name {
            self.dataset.named_graph_mut(name)?;
        }
        loop {
            if self.peek() == Some(&Tok::RBrace) {
                self.at += 1;
                break;
            }
            if self.peek().is_none() {
                return Err(self.err("unterminated graph block"));
            }
            self.triples()?;
            match self.peek() {
                Some(Tok::Dot) => self.at += 1,
                Some(Tok::RBrace) => {}
                _ => return Err(self.err("expected '.' or '}'")),
            }
        }
        self.graph = saved;
        Ok(())
    }

    fn prefix_decl(&mut self) -> Result<(), RdfError> {
        let prefix = match self.next() {
            Some(Tok::PName(p, l)) if l.is_empty() => p,
            _ => {
                self.at = self.at.saturating_sub(1);
                return Err(self.err("expected prefix name ending in ':'"));
            }
        };
        let iri = match self.next() {
            Some(Tok::Iri(iri)) => iri,
            _ => {
                self.at = self.at.saturating_sub(1);
                return Err(self.err("expected IRI in prefix declaration"));
            }
        };
        self.prefixes.insert(prefix, iri);
        Ok(())
    }

    fn triples(&mut self) -> Result<(), RdfError> {
        match self.peek() {
            Some(Tok::LBracket) => {
                let subject = self.blank_property_list()?;
                if self.starts_verb() {
                    self.predicate_object_list(&subject)?;
                }
                Ok(())
            }
            _ => {
                let subject = self.subject()?;
                self.predicate_object_list(&subject)
            }
        }
    }

    fn starts_verb(&self) -> bool {
        matches!(self.peek(), Some(Tok::Iri(_) | Tok::PName(..)))
            || matches!(self.peek(), Some(Tok::Word(w)) if w == "a")
    }

    fn subject(&mut self) -> Result<Term, RdfError> {
        match self.peek() {
            Some(Tok::Blank(_)) => match self.next() {
                Some(Tok::Blank(l)) => Ok(Term::BlankNode(l)),
                _ => unreachable!(),
            },
            Some(Tok::LParen) => self.collection(),
            Some(Tok::Iri(_) | Tok::PName(..)) => self.iri_like(),
            _ => Err(self.err("expected subject")),
        }
    }

    fn predicate_object_list(&mut self, subject: &Term) -> Result<(), RdfError> {
        loop {
            let verb = self.verb()?;
            loop {
                let object = self.object()?;
                self.emit(subject.clone(), verb.clone(), object)?;
                if self.peek() == Some(&Tok::Comma) {
                    self.at += 1;
                } else {
                    break;
                }
            }
            if self.peek() != Some(&Tok::Semi) {
                return Ok(());
            }
            while self.peek() == Some(&Tok::Semi) {
                self.at += 1;
            }
            if !self.starts_verb() {
                return Ok(());
            }
        }
    }

    fn verb(&mut self) -> Result<Term, RdfError> {
        match self.peek() {
            Some(Tok::Word(w)) if w == "a" => {
                self.at += 1;
                Ok(Term::named(RDF_TYPE))
            }
            Some(Tok::Iri(_) | Tok::PName(..)) => self.iri_like(),
            _ => Err(self.err("expected predicate")),
        }
    }

    fn object(&mut self) -> Result<Term, RdfError> {
        match self.peek() {
            Some(Tok::Iri(_) | Tok::PName(..)) => self.iri_like(),
            Some(Tok::Blank(_)) => match self.next() {
                Some(Tok::Blank(l)) => Ok(Term::BlankNode(l)),
                _ => unreachable!(),
            },
            Some(Tok::LBracket) => self.blank_property_list(),
            Some(Tok::LParen) => self.collection(),
            Some(Tok::Str(_)) => self.literal(),
            Some(Tok::Integer(_)) | Some(Tok::Decimal(_)) | Some(Tok::Double(_)) => {
                let (lexical, dt) = match self.next() {
                    Some(Tok::Integer(s)) => (s, XSD_INTEGER),
                    Some(Tok::Decimal(s)) => (s, XSD_DECIMAL),
                    Some(Tok::Double(s)) => (s, XSD_DOUBLE),
                    _ => unreachable!(),
                };
                Ok(Term::typed(lexical, dt))
            }
            Some(Tok::Word(w)) if w == "true" || w == "false" => {
                let w = w.clone();
                self.at += 1;
                Ok(Term::typed(w, XSD_BOOLEAN))
            }
            _ => Err(self.err("expected object")),
        }
    }

    fn literal(&mut self) -> Result<Term, RdfError> {
        let Some(Tok::Str(lexical)) = self.next() else {
            unreachable!()
        };
        match self.peek() {
            Some(Tok::Lang(_)) => {
                let Some(Tok::Lang(tag)) = self.next() else {
                    unreachable!()
                };
                Ok(Term::Literal(Literal::lang(lexical, &tag)))
            }
            Some(Tok::Carets) => {
                self.at += 1;
                let dt = self.iri_like()?;
                let Term::Iri(dt) = dt else { unreachable!() };
                Ok(Term::typed(lexical, dt))
            }
            _ => Ok(Term::string(lexical)),
        }
    }

    fn iri_like(&mut self) -> Result<Term, RdfError> {
        let here = self.at;
        match self.next() {
            Some(Tok::Iri(iri)) => {
                self.at = here;
                if !iri.contains(':') {
                    return Err(self.err(format!(
                        "relative IRI <{iri}> is not supported (no base resolution)"
                    )));
                }
                check_iri(&iri).map_err(|_| self.err(format!("invalid IRI <{iri}>")))?;
                self.at = here + 1;
                Ok(Term::Iri(iri))
            }
            Some(Tok::PName(prefix, local)) => match self.prefixes.get(&prefix) {
                Some(ns) => Ok(Term::Iri(format!("{ns}{local}"))),
                None => {
                    let pos = self.toks[here].1;
                    Err(RdfError::UnknownPrefix {
                        prefix,
                        line: pos.line,
                        column: pos.col,
                    })
                }
            },
            _ => {
                self.at = here;
                Err(self.err("expected IRI"))
            }
        }
    }

    fn blank_property_list(&mut self) -> Result<Term, RdfError> {
        self.expect(Tok::LBracket, "'['")?;
        let node = self.fresh();
        if self.peek() == Some(&Tok::RBracket) {
            self.at += 1;
            return Ok(node);
        }
        self.predicate_object_list(&node)?;
        self.expect(Tok::RBracket, "']'")?;
        Ok(node)
    }

    fn collection(&mut self) -> Result<Term, RdfError> {
        self.expect(Tok::LParen, "'('")?;
        let mut items = Vec::new();
        while self.peek() != Some(&Tok::RParen) {
            if self.peek().is_none() {
                return Err(self.err("unterminated collection"));
            }
            items.push(self.object()?);
        }
        self.at += 1;
        let mut head = Term::named(RDF_NIL);
        let nodes: Vec<Term> = items.iter().map(|_| self.fresh()).collect();
        for (i, item) in items.into_iter().enumerate().rev() {
            let node = nodes[i].clone();
            self.emit(node.clone(), Term::named(RDF_FIRST), item)?;
            self.emit(node.clone(), Term::named(RDF_REST), head)?;
            head = node;
        }
        Ok(head)
    }
}

fn run(text: &str, trig: bool) -> Result<Dataset, RdfError> {
    let toks = Lexer::new(text).tokenize()?;
    let mut parser = Parser::new(toks, trig);
    parser.document()?;
    Ok(parser.dataset)
}

/// Parses a Turtle document into a graph.
pub fn parse_turtle(text: &str) -> Result<Graph, RdfError> {
    let dataset = run(text, false)?;
    Ok(dataset.default_graph().clone())
}

/// Parses a TriG document. Blank node labels are scoped to the whole document.
pub fn parse_trig(text: &str) -> Result<Dataset, RdfError> {
    run(text, true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rdf::term::XSD;

    #[test]
    fn collection_expands_to_seven_triples() {
        let g = parse_turtle("@prefix : <http://ex.org/> .\n:foo :ids (1 2 3) .").unwrap();
        assert_eq!(g.len(), 7);
        let firsts = g.matching(None, Some(&Term::named(RDF_FIRST)), None);
        let mut values: Vec<_> = firsts.iter().map(|t| t.object().clone()).collect();
        values.sort();
        assert_eq!(values, vec![Term::integer(1), Term::integer(2), Term::integer(3)]);
        assert_eq!(
            g.matching(None, Some(&Term::named(RDF_REST)), Some(&Term::named(RDF_NIL)))
                .len(),
            1
        );
    }

    #[test]
    fn date_literal_keeps_datatype() {
        let text = "@prefix : <http://ex.org/> .\n@prefix xsd: <http://www.w3.org/2001/XMLSchema#> .\n\
                    :foo :ids (1 2 3) ;\n     :date \"2003-02-10\"^^xsd:date .";
        let g = parse_turtle(text).unwrap();
        let date = g
            .object(&Term::named("http://ex.org/foo"), &Term::named("http://ex.org/date"))
            .unwrap();
        assert_eq!(date, &Term::typed("2003-02-10", format!("{XSD}date")));
    }

    #[test]
    fn missing_object_is_syntax_error() {
        let err = parse_turtle("@prefix : <http://ex.org/> .\n:a :b").unwrap_err();
        assert!(matches!(err, RdfError::Syntax { line: 2, .. }), "{err:?}");
    }

    #[test]
    fn unknown_prefix_reported_with_position() {
        let err = parse_turtle("ex:a ex:b ex:c .").unwrap_err();
        assert!(matches!(
            err,
            RdfError::UnknownPrefix { ref prefix, line: 1, column: 1 } if prefix == "ex"
        ));
    }

    #[test]
    fn unterminated_literal() {
        let err = parse_turtle("<http://a/s> <http://a/p> \"abc .").unwrap_err();
        assert!(matches!(err, RdfError::UnterminatedLiteral { line: 1, column: 27 }), "{err:?}");
    }

    #[test]
    fn trailing_dot_after_pname() {
        let g = parse_turtle("@prefix : <http://ex.org/> .\n:a :b :c.").unwrap();
        assert_eq!(g.len(), 1);
        let g = parse_turtle("@prefix : <http://ex.org/> .\n:a :b _:x.").unwrap();
        assert_eq!(g.len(), 1);
    }

    #[test]
    fn property_lists_and_semicolons() {
        let text = "@prefix : <http://ex.org/> .\n: a :T ; :p [ :q 1 ; ] ; .\n";
        let g = parse_turtle(text).unwrap();
        assert_eq!(g.len(), 3);
        assert!(g.has(
            &Term::named("http://ex.org/"),
            &Term::named(RDF_TYPE),
            &Term::named("http://ex.org/T")
        ));
    }

    #[test]
    fn strings_and_escapes() {
        let text = r#"<http://a/s> <http://a/p> "a\"bA", 'x', """multi
line""", "en"@en-GB, true, -4.5, 1e3 ."#;
        let g = parse_turtle(text).unwrap();
        let objects: Vec<_> = g.iter().map(|t| t.object().clone()).collect();
        assert!(objects.contains(&Term::string("a\"bA")));
        assert!(objects.contains(&Term::string("multi\nline")));
        assert!(objects.contains(&Term::Literal(Literal::lang("en", "en-gb"))));
        assert!(objects.contains(&Term::typed("true", XSD_BOOLEAN)));
        assert!(objects.contains(&Term::typed("-4.5", XSD_DECIMAL)));
        assert!(objects.contains(&Term::typed("1e3", XSD_DOUBLE)));
    }

    #[test]
    fn trig_blocks() {
        let text = "@prefix : <http://ex.org/> .\n\
                    :m :body :b .\n\
                    :B { :foo :ids (1 2) ; :n 3 }\n\
                    GRAPH _:g { :x :y :z . }\n\
                    { :d :e :f }";
        let d = parse_trig(text).unwrap();
        assert_eq!(d.default_graph().len(), 2);
        assert_eq!(d.named_graph(&Term::named("http://ex.org/B")).unwrap().len(), 6);
        assert_eq!(d.named_graph(&Term::blank("g")).unwrap().len(), 1);
    }

    #[test]
    fn turtle_rejects_graph_blocks_and_relative_iris() {
        assert!(parse_turtle("{ <http://a/b> <http://a/c> <http://a/d> }").is_err());
        assert!(parse_turtle("<rel> <http://a/c> <http://a/d> .").is_err());
        assert!(parse_turtle("@base <http://a/> .").is_err());
    }

    #[test]
    fn fresh_labels_avoid_document_labels() {
        let g = parse_turtle("_:b0 <http://a/p> [] .").unwrap();
        let t = g.iter().next().unwrap();
        assert_ne!(t.subject(), t.object());
    }

    #[test]
    fn empty_and_sparql_prefix() {
        assert!(parse_turtle("").unwrap().is_empty());
        let g = parse_turtle("PREFIX ex: <http://ex.org/>\nex:a ex:b () .").unwrap();
        assert_eq!(g.iter().next().unwrap().object(), &Term::named(RDF_NIL));
    }
}
