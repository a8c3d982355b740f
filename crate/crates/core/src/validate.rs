//! Closed-world conformance rules over lifted datasets.
//!
//! Rules read the default graph only; body graphs are payload, not protocol.
//! Every problem is reported as a [`Finding`], never as an error.

use std::collections::BTreeSet;
use std::fmt;

use crate::exec::Exec;
use crate::http::{is_token, media_type_essence, standard_status_code};
use crate::lift::vocab::*;
use crate::rdf::{Dataset, Graph, PrefixMap, Term, TermWriter};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Severity {
    Violation,
    Warning,
}

impl fmt::Display for Severity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Severity::Violation => "violation",
            Severity::Warning => "warning",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Finding {
    pub rule_id: &'static str,
    pub severity: Severity,
    pub focus: Term,
    pub message: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub findings: Vec<Finding>,
    pub checked_rules: Vec<&'static str>,
}

impl ValidationReport {
    pub fn is_clean(&self) -> bool {
        self.findings.is_empty()
    }

    pub fn violations(&self) -> impl Iterator<Item = &Finding> {
        self.findings.iter().filter(|f| f.severity == Severity::Violation)
    }

    pub fn has_violations(&self) -> bool {
        self.violations().next().is_some()
    }

    /// Distinct rule ids that produced findings, in registry order.
    pub fn fired_rules(&self) -> Vec<&'static str> {
        let fired: BTreeSet<usize> = self.findings.iter().map(|f| rule_index(f.rule_id)).collect();
        fired.into_iter().map(|i| RULES[i].id).collect()
    }

    /// One tab-separated line per finding: severity, rule, focus, message.
    pub fn to_tsv(&self) -> String {
        self.findings
            .iter()
            .map(|f| format!("{}\t{}\t{}\t{}\n", f.severity, f.rule_id, f.focus, f.message))
            .collect()
    }

    pub fn to_text(&self, prefixes: &PrefixMap) -> String {
        let w = TermWriter::new(prefixes);
        let mut out = String::new();
        for f in &self.findings {
            out.push_str(&format!("{} {} {}: {}\n", f.severity, f.rule_id, w.term(&f.focus), f.message));
        }
        let violations = self.violations().count();
        let warnings = self.findings.len() - violations;
        out.push_str(&format!(
            "{violations} violation(s), {warnings} warning(s), {} rule(s) checked\n",
            self.checked_rules.len()
        ));
        out
    }
}

pub struct Rule {
    pub id: &'static str,
    pub title: &'static str,
    pub explanation: &'static str,
    check: fn(&Graph) -> Vec<Finding>,
}

pub static RULES: [Rule; 10] = [
    Rule {
        id: "R1",
        title: "functional properties",
        explanation: ":mthd, :uri, :sc, :body, :link and :statusCodeNumber are functional: \
            a node may carry at most one value for each.",
        check: r1_functional,
    },
    Rule {
        id: "R2",
        title: "request completeness",
        explanation: "Every request must have a method (:mthd) and a target URI (:uri).",
        check: r2_request,
    },
    Rule {
        id: "R3",
        title: "response completeness",
        explanation: "Every response must have a status code (:sc), and every status code node \
            must carry its number (:statusCodeNumber).",
        check: r3_response,
    },
    Rule {
        id: "R4",
        title: "status code sanity",
        explanation: "A status code is a three digit number. Codes outside 100-599 belong to no \
            class and are reported as warnings; a standard status individual carrying a number \
            other than its own is a violation.",
        check: r4_status,
    },
    Rule {
        id: "R5",
        title: "single final response",
        explanation: "A request may receive any number of interim (1xx) responses but only one \
            final response.",
        check: r5_single_final,
    },
    Rule {
        id: "R6",
        title: "content type with body",
        explanation: "A message carrying a body should declare the media type of its content \
            with a Content-Type header (RFC 7231, section 3.1.1.5).",
        check: r6_content_type,
    },
    Rule {
        id: "R7",
        title: "HEAD without body",
        explanation: "A response to a HEAD request must not carry a body \
            (RFC 7231, section 4.3.2).",
        check: r7_head,
    },
    Rule {
        id: "R8",
        title: "content negotiation",
        explanation: "When a request has an Accept header, the Content-Type of its response \
            should match one of the accepted media ranges. Matching is substring containment in \
            either direction; */* and type/* ranges are wildcards. Reported as a warning.",
        check: r8_negotiation,
    },
    Rule {
        id: "R9",
        title: "method token",
        explanation: "A method name must be a non-empty token without separators \
            (RFC 7230, section 3.2.6).",
        check: r9_method_token,
    },
    Rule {
        id: "R10",
        title: "well-formed Location",
        explanation: "A Location header must link to a URI; its value could not be resolved \
            against the request URI (RFC 7231, section 7.1.2).",
        check: r10_location,
    },
];

fn rule_index(id: &str) -> usize {
    RULES.iter().position(|r| r.id == id).expect("finding ids come from the registry")
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown rule {0:?}")]
pub struct UnknownRule(pub String);

/// Human-readable description of a rule.
pub fn explain(rule_id: &str) -> Result<String, UnknownRule> {
    let rule = RULES
        .iter()
        .find(|r| r.id.eq_ignore_ascii_case(rule_id))
        .ok_or_else(|| UnknownRule(rule_id.to_owned()))?;
    Ok(format!("{} {}: {}", rule.id, rule.title, rule.explanation))
}

pub fn validate(dataset: &Dataset) -> ValidationReport {
    validate_with(dataset, Exec::default())
}

/// Runs every rule. Findings are ordered by rule, then focus, then message,
/// whatever the execution strategy.
pub fn validate_with(dataset: &Dataset, exec: Exec) -> ValidationReport {
    let g = dataset.default_graph();
    let mut findings: Vec<Finding> = exec.map(&RULES, |rule| (rule.check)(g)).into_iter().flatten().collect();
    findings.sort_by_cached_key(|f| (rule_index(f.rule_id), f.focus.to_string(), f.message.clone()));
    findings.dedup();
    ValidationReport {
        findings,
        checked_rules: RULES.iter().map(|r| r.id).collect(),
    }
}

fn t(iri: &str) -> Term {
    Term::named(iri)
}

fn finding(rule_id: &'static str, severity: Severity, focus: &Term, message: String) -> Finding {
    Finding {
        rule_id,
        severity,
        focus: focus.clone(),
        message,
    }
}

fn typed<'a>(g: &'a Graph, class: &str) -> impl Iterator<Item = &'a Term> + 'a {
    g.subjects(&t(RDF_TYPE), &t(class))
}

fn local(iri: &str) -> &str {
    iri.rsplit(['#', '/']).next().unwrap_or(iri)
}

fn r1_functional(g: &Graph) -> Vec<Finding> {
    let mut out = Vec::new();
    for p in [MTHD_PROP, URI_PROP, SC_PROP, BODY, LINK, STATUS_CODE_NUMBER] {
        let subjects: BTreeSet<&Term> = g.pairs(&t(p)).map(|(s, _)| s).collect();
        for s in subjects {
            let n = g.objects(s, &t(p)).count();
            if n > 1 {
                out.push(finding("R1", Severity::Violation, s, format!("{n} values for functional property :{}", local(p))));
            }
        }
    }
    out
}

fn r2_request(g: &Graph) -> Vec<Finding> {
    let mut out = Vec::new();
    for q in typed(g, REQUEST) {
        for p in [MTHD_PROP, URI_PROP] {
            if g.object(q, &t(p)).is_none() {
                out.push(finding("R2", Severity::Violation, q, format!("request has no :{}", local(p))));
            }
        }
    }
    out
}

fn r3_response(g: &Graph) -> Vec<Finding> {
    let mut out = Vec::new();
    for r in typed(g, RESPONSE) {
        if g.object(r, &t(SC_PROP)).is_none() {
            out.push(finding("R3", Severity::Violation, r, "response has no :sc".into()));
        }
    }
    let codes: BTreeSet<&Term> = g.pairs(&t(SC_PROP)).map(|(_, s)| s).collect();
    for s in codes {
        if g.object(s, &t(STATUS_CODE_NUMBER)).is_none() {
            out.push(finding("R3", Severity::Violation, s, "status code has no :statusCodeNumber".into()));
        }
    }
    out
}

fn r4_status(g: &Graph) -> Vec<Finding> {
    let mut out = Vec::new();
    for (s, v) in g.pairs(&t(STATUS_CODE_NUMBER)) {
        let Some(n) = v.as_integer().filter(|n| (0..=999).contains(n)) else {
            out.push(finding("R4", Severity::Violation, s, format!("{v} is not a three digit number")));
            continue;
        };
        if !(100..=599).contains(&n) {
            out.push(finding("R4", Severity::Warning, s, format!("status {n} belongs to no status class")));
        }
        let standard = s
            .as_iri()
            .and_then(|i| i.strip_prefix(SC))
            .and_then(standard_status_code);
        if let Some(expected) = standard {
            if i64::from(expected) != n {
                out.push(finding("R4", Severity::Violation, s, format!("standard status {expected} carries number {n}")));
            }
        }
    }
    out
}

fn r5_single_final(g: &Graph) -> Vec<Finding> {
    let mut out = Vec::new();
    let requests: BTreeSet<&Term> = g.pairs(&t(RESP)).map(|(q, _)| q).collect();
    for q in requests {
        let finals = g
            .objects(q, &t(RESP))
            .filter(|r| !g.has(r, &t(RDF_TYPE), &t(INTERIM_RESPONSE)))
            .count();
        if finals > 1 {
            out.push(finding("R5", Severity::Violation, q, format!("{finals} final responses")));
        }
    }
    out
}

fn r6_content_type(g: &Graph) -> Vec<Finding> {
    let messages: BTreeSet<&Term> = g.pairs(&t(BODY)).map(|(m, _)| m).collect();
    messages
        .into_iter()
        .filter(|m| g.object(m, &t(CONTENT_TYPE)).is_none())
        .map(|m| finding("R6", Severity::Violation, m, "message has a body but no Content-Type".into()))
        .collect()
}

fn r7_head(g: &Graph) -> Vec<Finding> {
    let head = t(&method_iri("HEAD"));
    let mut out = Vec::new();
    for q in g.subjects(&t(MTHD_PROP), &head) {
        for r in g.objects(q, &t(RESP)) {
            if g.object(r, &t(BODY)).is_some() {
                out.push(finding("R7", Severity::Violation, r, "response to a HEAD request has a body".into()));
            }
        }
    }
    out
}

/// The media range matching used by content negotiation checks.
pub fn media_range_matches(range: &str, content_type: &str) -> bool {
    let essence = media_type_essence(range);
    if essence == "*/*" {
        return true;
    }
    if let Some(major) = essence.strip_suffix("/*") {
        return media_type_essence(content_type)
            .split('/')
            .next()
            .is_some_and(|m| m == major);
    }
    range.contains(content_type) || content_type.contains(range)
}

fn lexical(term: &Term) -> Option<&str> {
    term.as_literal().map(|l| l.lexical())
}

fn r8_negotiation(g: &Graph) -> Vec<Finding> {
    let mut out = Vec::new();
    for (q, r) in g.pairs(&t(RESP)) {
        let ranges: Vec<&str> = g
            .objects(q, &t(ACCEPT))
            .flat_map(|a| g.objects(a, &t(MEDIA_TYPE)))
            .filter_map(lexical)
            .collect();
        let types: Vec<&str> = g.objects(r, &t(CONTENT_TYPE)).filter_map(lexical).collect();
        if ranges.is_empty() || types.is_empty() {
            continue;
        }
        let ok = types
            .iter()
            .any(|ct| ranges.iter().any(|range| media_range_matches(range, ct)));
        if !ok {
            out.push(finding(
                "R8",
                Severity::Warning,
                r,
                format!("Content-Type {} matches no accepted range ({})", types.join(", "), ranges.join(", ")),
            ));
        }
    }
    out
}

fn r9_method_token(g: &Graph) -> Vec<Finding> {
    g.pairs(&t(METHOD_NAME))
        .filter(|(_, v)| !lexical(v).is_some_and(is_token))
        .map(|(m, v)| finding("R9", Severity::Violation, m, format!("method name {v} is not a token")))
        .collect()
}

fn r10_location(g: &Graph) -> Vec<Finding> {
    g.pairs(&t(HDR_NAME))
        .filter(|(_, n)| lexical(n).is_some_and(|n| n.eq_ignore_ascii_case("Location")))
        .filter(|(h, _)| g.object(h, &t(LINK)).is_none())
        .map(|(h, _)| {
            let value = g.object(h, &t(HDR_VALUE)).and_then(lexical).unwrap_or("");
            finding("R10", Severity::Violation, h, format!("Location {value:?} does not link to a URI"))
        })
        .collect()
}

#[cfg(test)]
mod tests;
