use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use coindex_core::arith::{binary, HrDecomposition};
use coindex_core::bilinear::{
    exact_certificate, parse_vector, probe, verify_hr, BilinearTensor, Construction, ProbeOutcome,
};
use coindex_core::bounds::{coindex_bounds, radon_table, replay, BoundCertificate, BoundQuery, ReplayReport};
use coindex_core::kneser::{
    chromatic_number_with_budget, kneser_graph, sarkaria_decomposition, verify_decomposition, DEFAULT_NODE_BUDGET,
};
use coindex_core::{named, Error, SimplicialComplex};

const SCHEMA_VERSION: u32 = 1;
const BUDGET_ENV: &str = "COINDEX_NODE_BUDGET";

/// Certified coindex bounds for spaces of (almost-)embeddings of simplicial complexes.
#[derive(Parser)]
#[command(name = "coindex", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// f-vector, Euler characteristic, minimal nonfaces and bipartition property.
    Info { complex: String },
    /// Chromatic number of the Kneser graph of minimal nonfaces, with a coloring.
    Chi {
        complex: String,
        /// Also build and verify the decomposition indexed by the colors.
        #[arg(long)]
        decompose: bool,
    },
    /// Certified coindex interval for one (d, ell) query.
    Bound {
        complex: String,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        ell: usize,
        /// Known embedding dimension; defaults to the complex file's `embed_dim`.
        #[arg(long)]
        embed_dim: Option<usize>,
        /// Color count to use instead of the computed chromatic number.
        #[arg(long)]
        c: Option<usize>,
        /// Largest d' searched by the monotonicity rules (default d + 64).
        #[arg(long)]
        horizon: Option<usize>,
        /// Replay the certificate before printing it.
        #[arg(long)]
        check: bool,
    },
    /// Coindex table for boundaries of simplices.
    RadonTable {
        #[arg(long, default_value_t = 8)]
        pmax: usize,
        #[arg(long, default_value_t = 25)]
        dmax: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Replay every cell certificate.
        #[arg(long)]
        check: bool,
    },
    /// Hurwitz-Radon number with the decomposition n = 2^(b+4c)(2a+1).
    Rho { n: u64 },
    /// Nonsingular bilinear map catalog.
    Bilinear {
        #[command(subcommand)]
        action: BilinearAction,
    },
    /// Replay a certificate file written by `bound` or `radon-table`.
    Check { file: PathBuf },
}

#[derive(Subcommand)]
enum BilinearAction {
    /// Catalog entries up to an output dimension.
    List {
        #[arg(long, default_value_t = 32)]
        max_output: usize,
    },
    /// Print a construction's coefficients.
    Show { name: String },
    /// Exact certificate and randomized probe for a construction.
    Verify {
        name: String,
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Evaluate B(x, y) for comma-separated rational vectors.
    Apply {
        name: String,
        #[arg(allow_hyphen_values = true)]
        x: String,
        #[arg(allow_hyphen_values = true)]
        y: String,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Ascii,
    Csv,
    Json,
}

#[derive(Clone, Copy, Serialize, PartialEq, Eq)]
#[serde(rename_all = "kebab-case")]
enum Status {
    Ok,
    InputError,
    BudgetExceeded,
    InternalError,
}

impl Status {
    fn exit_code(self) -> u8 {
        match self {
            Status::Ok => 0,
            Status::InputError => 1,
            Status::BudgetExceeded | Status::InternalError => 2,
        }
    }
}

enum Output {
    Document(Status, Value),
    Text(String),
}

struct Failure(Status, Value);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(Status::InputError, json!({ "error": e.to_string() }))
    }
}

fn input_error(msg: impl Into<String>) -> Failure {
    Failure(Status::InputError, json!({ "error": msg.into() }))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let name = command_name(&cli.command);
    let (status, text) = match run(cli.command) {
        Ok(Output::Text(t)) => (Status::Ok, t),
        Ok(Output::Document(status, payload)) => (status, envelope(name, status, payload)),
        Err(Failure(status, payload)) => (status, envelope(name, status, payload)),
    };
    let mut out = std::io::stdout().lock();
    let newline = if text.ends_with('\n') { "" } else { "\n" };
    if write!(out, "{text}{newline}").and_then(|()| out.flush()).is_err() {
        return ExitCode::from(Status::InternalError.exit_code());
    }
    ExitCode::from(status.exit_code())
}

fn envelope(command: &str, status: Status, payload: Value) -> String {
    let doc = json!({ "schema_version": SCHEMA_VERSION, "command": command, "status": status, "payload": payload });
    serde_json::to_string_pretty(&doc).expect("json values serialize")
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Info { .. } => "info",
        Command::Chi { .. } => "chi",
        Command::Bound { .. } => "bound",
        Command::RadonTable { .. } => "radon-table",
        Command::Rho { .. } => "rho",
        Command::Bilinear { action } => match action {
            BilinearAction::List { .. } => "bilinear list",
            BilinearAction::Show { .. } => "bilinear show",
            BilinearAction::Verify { .. } => "bilinear verify",
            BilinearAction::Apply { .. } => "bilinear apply",
        },
        Command::Check { .. } => "check",
    }
}

fn run(command: Command) -> Result<Output, Failure> {
    match command {
        Command::Info { complex } => cmd_info(&complex),
        Command::Chi { complex, decompose } => cmd_chi(&complex, decompose),
        Command::Bound { complex, d, ell, embed_dim, c, horizon, check } => {
            cmd_bound(&complex, d, ell, embed_dim, c, horizon, check)
        }
        Command::RadonTable { pmax, dmax, format, check } => cmd_radon_table(pmax, dmax, format, check),
        Command::Rho { n } => cmd_rho(n),
        Command::Bilinear { action } => match action {
            BilinearAction::List { max_output } => cmd_bilinear_list(max_output),
            BilinearAction::Show { name } => cmd_bilinear_show(&name),
            BilinearAction::Verify { name, trials, seed } => cmd_bilinear_verify(&name, trials, seed),
            BilinearAction::Apply { name, x, y } => cmd_bilinear_apply(&name, &x, &y),
        },
        Command::Check { file } => cmd_check(&file),
    }
}

fn ok(payload: Value) -> Result<Output, Failure> {
    Ok(Output::Document(Status::Ok, payload))
}

/// A bundled name, a specifier such as `skeleton:7:2`, or a JSON file path.
fn load_complex(spec: &str) -> Result<SimplicialComplex, Failure> {
    if let Some(c) = named::from_spec(spec) {
        return Ok(c?);
    }
    SimplicialComplex::load(spec).map_err(|e| input_error(format!("{spec}: {e}")))
}

fn node_budget() -> Result<u64, Failure> {
    match std::env::var(BUDGET_ENV) {
        Ok(v) => {
            v.trim().parse().map_err(|_| input_error(format!("{BUDGET_ENV} must be a nonnegative integer, got `{v}`")))
        }
        Err(_) => Ok(DEFAULT_NODE_BUDGET),
    }
}

fn faces_json(faces: &[coindex_core::Face]) -> Value {
    json!(faces.iter().map(|f| f.to_vec()).collect::<Vec<_>>())
}

fn cmd_info(spec: &str) -> Result<Output, Failure> {
    let c = load_complex(spec)?;
    let nonfaces = c.minimal_nonfaces();
    ok(json!({
        "name": c.name(),
        "n": c.n(),
        "dim": c.dim(),
        "facets": c.facets().len(),
        "f_vector": c.f_vector().counts,
        "euler_characteristic": c.euler_characteristic(),
        "minimal_nonfaces": nonfaces.len(),
        "bipartition_property": c.bipartition_property(),
        "embed_dim": c.embed_dim(),
    }))
}

fn cmd_chi(spec: &str, decompose: bool) -> Result<Output, Failure> {
    let c = load_complex(spec)?;
    let kg = kneser_graph(&c);
    let budget = node_budget()?;
    let coloring = match chromatic_number_with_budget(kg.graph(), budget) {
        Ok(w) => w,
        Err(e) => {
            return Err(Failure(
                Status::BudgetExceeded,
                json!({
                    "error": e.to_string(),
                    "node_budget": budget,
                    "lower": e.lower,
                    "upper": e.best.num_colors,
                    "best_coloring": e.best.assignment,
                }),
            ))
        }
    };
    let mut payload = json!({
        "name": c.name(),
        "chi": coloring.num_colors,
        "minimal_nonfaces": faces_json(kg.vertices()),
        "kneser_edges": kg.graph().edge_count(),
        "coloring": coloring.assignment,
    });
    if decompose {
        let dec = sarkaria_decomposition(&c, &coloring)?;
        let verified = verify_decomposition(&c, &dec);
        let pieces: Vec<Value> = dec
            .subcomplexes
            .iter()
            .enumerate()
            .map(|(color, s)| {
                json!({ "color": color, "facets": faces_json(s.facets()), "minimal_nonfaces": faces_json(&s.minimal_nonfaces()) })
            })
            .collect();
        payload["decomposition"] = json!({ "verified": verified, "subcomplexes": pieces });
        if !verified {
            return Ok(Output::Document(Status::InternalError, payload));
        }
    }
    ok(payload)
}

fn cmd_bound(
    spec: &str,
    d: usize,
    ell: usize,
    embed_dim: Option<usize>,
    c: Option<usize>,
    horizon: Option<usize>,
    check: bool,
) -> Result<Output, Failure> {
    let complex = load_complex(spec)?;
    let e = embed_dim.or(complex.embed_dim());
    let q = BoundQuery::new(complex, d, ell)?.with_c(c).with_embed_dim(e)?.with_node_budget(node_budget()?);
    let horizon = horizon.unwrap_or_else(|| q.default_horizon());
    let cert = coindex_bounds(&q, horizon)?;
    let mut payload = json!({ "certificate": cert });
    let mut status = if cert.budget_exceeded { Status::BudgetExceeded } else { Status::Ok };
    if check {
        let report = replay(&cert)?;
        if !report.ok {
            status = Status::InternalError;
        }
        payload["replay"] = json!(report);
    }
    Ok(Output::Document(status, payload))
}

fn cmd_radon_table(pmax: usize, dmax: usize, format: Format, check: bool) -> Result<Output, Failure> {
    let table = radon_table(pmax, dmax)?;
    let mut failed = Vec::new();
    if check {
        for e in &table.entries {
            if !replay(&e.certificate)?.ok {
                failed.push(json!([e.p, e.d]));
            }
        }
    }
    if !failed.is_empty() {
        return Err(Failure(Status::InternalError, json!({ "error": "certificate replay failed", "cells": failed })));
    }
    match format {
        Format::Ascii => Ok(Output::Text(table.to_ascii())),
        Format::Csv => Ok(Output::Text(table.to_csv())),
        Format::Json => {
            let mut payload = json!(table);
            if check {
                payload["replayed"] = json!(table.entries.len());
            }
            ok(payload)
        }
    }
}

fn cmd_rho(n: u64) -> Result<Output, Failure> {
    let dec = HrDecomposition::of(n)?;
    ok(json!({
        "n": n,
        "binary": binary(n),
        "rho": dec.rho(),
        "a": dec.a,
        "b": dec.b,
        "c": dec.c,
        "formula": format!("2^{} + 8*{} = {}", dec.b, dec.c, dec.rho()),
    }))
}

fn construction(name: &str) -> Result<Construction, Failure> {
    name.parse::<Construction>().map_err(Failure::from)
}

fn cmd_bilinear_list(max_output: usize) -> Result<Output, Failure> {
    let items: Vec<Value> = Construction::catalog(max_output)
        .into_iter()
        .map(|c| {
            let (a, b, d) = c.dims();
            json!({ "name": c.to_string(), "kind": c.kind(), "dims": [a, b, d] })
        })
        .collect();
    ok(json!({ "max_output": max_output, "count": items.len(), "constructions": items }))
}

fn cmd_bilinear_show(name: &str) -> Result<Output, Failure> {
    let c = construction(name)?;
    let t = c.build()?;
    ok(json!({ "name": c.to_string(), "tensor": t.to_document(), "exact_certificate": exact_certificate(&t) }))
}

fn cmd_bilinear_verify(name: &str, trials: usize, seed: u64) -> Result<Output, Failure> {
    if trials == 0 {
        return Err(input_error("--trials must be at least 1"));
    }
    let c = construction(name)?;
    let t = c.build()?;
    let family = c.hr_family().map(|f| json!({ "size": f.len(), "dim": f.dim(), "verified": verify_hr(&f) }));
    let cert = exact_certificate(&t);
    let outcome: ProbeOutcome = probe(&t, trials, seed);
    let family_ok = family.as_ref().is_none_or(|f| f["verified"] == json!(true));
    let status = if outcome.passed && family_ok { Status::Ok } else { Status::InternalError };
    let (a, b, d) = t.dims();
    Ok(Output::Document(
        status,
        json!({
            "name": c.to_string(),
            "dims": [a, b, d],
            "exact_certificate": cert,
            "hr_family": family,
            "probe": { "trials": trials, "seed": seed, "outcome": outcome },
        }),
    ))
}

fn cmd_bilinear_apply(name: &str, x: &str, y: &str) -> Result<Output, Failure> {
    let t: BilinearTensor = construction(name)?.build()?;
    let xs = parse_vector(x)?;
    let ys = parse_vector(y)?;
    let out = t.apply(&xs, &ys)?;
    let show = |v: &[coindex_core::bilinear::Rational]| v.iter().map(ToString::to_string).collect::<Vec<_>>();
    ok(json!({ "name": name, "x": show(&xs), "y": show(&ys), "result": show(&out) }))
}

/// Finds certificates in a `bound` or `radon-table` document, with or
/// without the output envelope.
fn certificates_in(doc: &Value) -> Vec<(String, &Value)> {
    let root = doc.get("payload").unwrap_or(doc);
    if let Some(c) = root.get("certificate") {
        return vec![("certificate".into(), c)];
    }
    if let Some(entries) = root.get("entries").and_then(Value::as_array) {
        return entries
            .iter()
            .filter_map(|e| {
                let label = format!("cell ({}, {})", e.get("p")?, e.get("d")?);
                e.get("certificate").map(|c| (label, c))
            })
            .collect();
    }
    if root.get("derivation").is_some() {
        return vec![("certificate".into(), root)];
    }
    Vec::new()
}

fn cmd_check(path: &PathBuf) -> Result<Output, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| input_error(format!("{}: {e}", path.display())))?;
    let doc: Value = serde_json::from_str(&text).map_err(|e| {
        input_error(format!("{}: parse error at line {}, column {}: {e}", path.display(), e.line(), e.column()))
    })?;
    let found = certificates_in(&doc);
    if found.is_empty() {
        return Err(input_error(format!("{}: no certificate found", path.display())));
    }
    let mut results = Vec::new();
    let mut all_ok = true;
    for (label, value) in found {
        let cert: BoundCertificate = serde_json::from_value(value.clone())
            .map_err(|e| input_error(format!("{label}: malformed certificate: {e}")))?;
        let report: ReplayReport = replay(&cert)?;
        all_ok &= report.ok;
        results.push(json!({ "label": label, "lower": cert.lower, "upper": cert.upper, "report": report }));
    }
    let payload = json!({ "certificates": results.len(), "all_ok": all_ok, "results": results });
    Ok(Output::Document(if all_ok { Status::Ok } else { Status::InputError }, payload))
}
