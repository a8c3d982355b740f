//! `httplift`: lift HTTP traffic to RDF, validate it and answer the
//! competency questions.
//!
//! Exit codes: 0 success, 1 conformance violations (validate only),
//! 2 bad input or invocation.

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use httplift::ingest::{load_har, load_transcript};
use httplift::lift::{self, LiftOptions, EXTENSIONS_TTL, ONTOLOGY_TTL};
use httplift::query;
use httplift::rdf::{parse_trig, serialize_trig, serialize_turtle, Dataset, PrefixMap, Term, TermWriter};
use httplift::validate::validate;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum InputFormat {
    Transcript,
    Har,
    Trig,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Text,
    Tsv,
}

#[derive(Parser, Debug)]
#[command(name = "httplift", version, about = "Lift HTTP interactions into RDF, validate and query them")]
struct Cli {
    /// Input format; guessed from the file extension when omitted
    #[arg(long, global = true, value_enum)]
    format: Option<InputFormat>,

    /// Base IRI for stable request/response node names
    #[arg(long, global = true, value_name = "IRI")]
    base: Option<String>,

    /// Write output here instead of stdout
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,

    /// Validation report style
    #[arg(long, global = true, value_enum, default_value = "text")]
    report: ReportFormat,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Lift traffic to TriG (or Turtle for the default graph only)
    Lift {
        /// Input file, `-` for stdin
        input: String,
        /// Write only the default graph, as Turtle
        #[arg(long)]
        turtle: bool,
    },
    /// Check a dataset against the conformance rules
    Validate {
        input: String,
    },
    /// Answer a competency question (1-7)
    Query {
        cq: u32,
        input: String,
        /// Query parameter name (CQ7)
        #[arg(long)]
        name: Option<String>,
        /// Body property IRI (CQ6)
        #[arg(long)]
        prop: Option<String>,
        /// Request node (CQ5); all requests when omitted
        #[arg(long)]
        request: Option<String>,
    },
    /// Print the vendored ontology
    Ontology {
        /// Append the header extension terms
        #[arg(long)]
        extensions: bool,
    },
}

fn read_input(path: &str) -> Result<String> {
    if path == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).context("reading stdin")?;
        return Ok(s);
    }
    fs::read_to_string(path).with_context(|| format!("reading {path}"))
}

fn guess_format(path: &str) -> InputFormat {
    match Path::new(path).extension().and_then(|e| e.to_str()) {
        Some(e) if e.eq_ignore_ascii_case("har") => InputFormat::Har,
        Some(e) if e.eq_ignore_ascii_case("trig") => InputFormat::Trig,
        _ => InputFormat::Transcript,
    }
}

fn load(cli: &Cli, path: &str) -> Result<Dataset> {
    let text = read_input(path)?;
    let conversation = match cli.format.unwrap_or_else(|| guess_format(path)) {
        InputFormat::Trig => return parse_trig(&text).with_context(|| format!("parsing {path}")),
        InputFormat::Har => load_har(&text),
        InputFormat::Transcript => load_transcript(&text),
    }
    .with_context(|| format!("loading {path}"))?;
    let options = LiftOptions {
        base: cli.base.clone(),
    };
    lift::lift_conversation(&conversation, &options).context("lifting")
}

fn emit(cli: &Cli, text: &str) -> Result<()> {
    match &cli.out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            let mut stdout = io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            stdout.flush()?;
            Ok(())
        }
    }
}

/// Accepts `_:label`, `<iri>`, a prefixed name or a bare absolute IRI.
fn parse_term(text: &str, prefixes: &PrefixMap) -> Result<Term> {
    if let Some(label) = text.strip_prefix("_:") {
        return Ok(Term::blank(label));
    }
    if let Some(iri) = text.strip_prefix('<').and_then(|t| t.strip_suffix('>')) {
        return Ok(Term::iri(iri)?);
    }
    if let Some((prefix, local)) = text.split_once(':') {
        if let Some(ns) = prefixes.get(prefix) {
            return Ok(Term::iri(format!("{ns}{local}"))?);
        }
    }
    Ok(Term::iri(text)?)
}

fn run_query(cq: u32, d: &Dataset, name: Option<&str>, prop: Option<&str>, request: Option<&str>) -> Result<String> {
    let prefixes = lift::prefixes();
    let w = TermWriter::new(&prefixes);
    let lines: Vec<String> = match cq {
        1 => query::cq1_media_types(d)
            .iter()
            .map(|b| format!("{}\t{}", w.term(&b["m"]), w.term(&b["mt"])))
            .collect(),
        2 => query::cq2_interaction_status(d)
            .iter()
            .map(|b| format!("{}\t{}", w.term(&b["q"]), w.term(&b["status"])))
            .collect(),
        3 => query::cq3_locations(d).iter().map(|b| w.term(&b["next"])).collect(),
        4 => query::cq4_conversation_status(d).iter().map(|b| w.term(&b["status"])).collect(),
        5 => match request {
            Some(r) => vec![query::cq5_negotiation(d, &parse_term(r, &prefixes)?).to_string()],
            None => query::requests(d)
                .iter()
                .map(|q| format!("{}\t{}", w.term(q), query::cq5_negotiation(d, q)))
                .collect(),
        },
        6 => {
            let prop = prop.ok_or_else(|| anyhow!("query 6 needs --prop <IRI>"))?;
            let prop = parse_term(prop, &prefixes)?;
            let iri = prop.as_iri().ok_or_else(|| anyhow!("--prop must be an IRI"))?;
            query::cq6_body_values(d, iri).iter().map(|t| w.term(t)).collect()
        }
        7 => {
            let name = name.ok_or_else(|| anyhow!("query 7 needs --name <NAME>"))?;
            query::cq7_query_param(d, name).iter().map(|t| w.term(t)).collect()
        }
        n => bail!("no competency question {n}; expected 1-7"),
    };
    Ok(lines.into_iter().map(|l| l + "\n").collect())
}

fn run(cli: &Cli) -> Result<u8> {
    match &cli.command {
        Command::Lift { input, turtle } => {
            let d = load(cli, input)?;
            let text = if *turtle {
                serialize_turtle(d.default_graph(), &lift::prefixes())
            } else {
                serialize_trig(&d, &lift::prefixes())
            };
            emit(cli, &text)?;
            Ok(0)
        }
        Command::Validate { input } => {
            let d = load(cli, input)?;
            let report = validate(&d);
            let text = match cli.report {
                ReportFormat::Text => report.to_text(&lift::prefixes()),
                ReportFormat::Tsv => report.to_tsv(),
            };
            emit(cli, &text)?;
            Ok(if report.has_violations() { 1 } else { 0 })
        }
        Command::Query {
            cq,
            input,
            name,
            prop,
            request,
        } => {
            if !(1..=7).contains(cq) {
                bail!("no competency question {cq}; expected 1-7");
            }
            let d = load(cli, input)?;
            let text = run_query(*cq, &d, name.as_deref(), prop.as_deref(), request.as_deref())?;
            emit(cli, &text)?;
            Ok(0)
        }
        Command::Ontology { extensions } => {
            let mut text = ONTOLOGY_TTL.to_owned();
            if *extensions {
                text.push('\n');
                text.push_str(EXTENSIONS_TTL);
            }
            emit(cli, &text)?;
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("httplift: {e:#}");
            ExitCode::from(2)
        }
    }
}
