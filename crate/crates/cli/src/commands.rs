use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use nlmult_core::classify::{
    lemma_sweep_with, scan_order, spectral_classify, structural_classify, DsEntry, ScanOptions, SpectralVerdict,
    StructuralVerdict, TheoremReport,
};
use nlmult_core::enumeration::{connected_graphs, ingest_graph6, IngestOptions};
use nlmult_core::families::{bootstrap_exceptional_catalog, ExceptionalCatalog};
use nlmult_core::spectra::{cross_validate, float_spectrum, multiplicity_profile};
use nlmult_core::{write_graph6, Error, Graph};
use rayon::prelude::*;
use serde::Serialize;

use crate::args::{AnalyzeArgs, BootstrapArgs, EnumerateArgs, OrderSelection, ScanArgs};

/// Why a command could not produce a verdict.
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::OutOfRange { .. } | Error::InvalidOrder(_) | Error::Catalog(_) => Failure::Usage(e.to_string()),
            other => Failure::Internal(other.to_string()),
        }
    }
}

fn io_failure(path: &Path, e: io::Error) -> Failure {
    Failure::Internal(format!("{}: {e}", path.display()))
}

/// `Ok(true)` when every checked claim holds.
pub type Outcome = Result<bool, Failure>;

fn open_output(path: Option<&PathBuf>) -> Result<Box<dyn Write>, Failure> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p).map_err(|e| io_failure(p, e))?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn write_json<T: Serialize>(path: Option<&PathBuf>, value: &T) -> Result<(), Failure> {
    let mut out = open_output(path)?;
    serde_json::to_writer_pretty(&mut out, value).map_err(|e| Failure::Internal(e.to_string()))?;
    writeln!(out).and_then(|_| out.flush()).map_err(|e| Failure::Internal(e.to_string()))
}

fn load_catalog(path: Option<&PathBuf>) -> Result<ExceptionalCatalog, Failure> {
    Ok(match path {
        Some(stem) => ExceptionalCatalog::load(stem)?,
        None => ExceptionalCatalog::builtin()?,
    })
}

fn orders(select: &OrderSelection) -> Result<std::ops::RangeInclusive<usize>, Failure> {
    select.range().ok_or_else(|| Failure::Usage("give exactly one of --order or --orders".into()))
}

#[derive(Serialize)]
struct FloatCheck {
    ok: bool,
    error: Option<String>,
    eigenvalues: Vec<f64>,
}

#[derive(Serialize)]
struct AnalyzeRecord {
    g6: String,
    order: usize,
    status: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    theta_factor: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    mult: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    spectral: Option<SpectralVerdict>,
    #[serde(skip_serializing_if = "Option::is_none")]
    structural: Option<StructuralVerdict>,
    #[serde(skip_serializing_if = "Option::is_none")]
    float_check: Option<FloatCheck>,
}

impl AnalyzeRecord {
    fn skipped(g: &Graph, why: &str) -> Self {
        AnalyzeRecord {
            g6: write_graph6(g),
            order: g.order(),
            status: format!("skipped: {why}"),
            theta_factor: None,
            mult: None,
            spectral: None,
            structural: None,
            float_check: None,
        }
    }
}

fn analyze_one(g: &Graph, catalog: &ExceptionalCatalog, float: bool) -> Result<AnalyzeRecord, Failure> {
    if !g.is_connected() {
        return Ok(AnalyzeRecord::skipped(g, "disconnected"));
    }
    if g.order() < 5 {
        return Ok(AnalyzeRecord::skipped(g, "order < 5"));
    }
    let spectral = spectral_classify(g)?;
    let structural = structural_classify(g, catalog)?;
    let float_check = if float {
        let profile = multiplicity_profile(g)?;
        let eigenvalues = float_spectrum(g)?;
        let error = cross_validate(&profile, &eigenvalues).err().map(|e| e.to_string());
        Some(FloatCheck { ok: error.is_none(), error, eigenvalues })
    } else {
        None
    };
    let first = spectral.thetas.first();
    Ok(AnalyzeRecord {
        g6: write_graph6(g),
        order: g.order(),
        status: "ok".into(),
        theta_factor: first.map(|t| t.factor.to_string()),
        mult: first.map(|t| t.multiplicity),
        structural: Some(structural),
        spectral: Some(spectral),
        float_check,
    })
}

pub fn analyze(args: &AnalyzeArgs) -> Outcome {
    let catalog = load_catalog(args.catalog.as_ref())?;
    let reader: Box<dyn BufRead> = match &args.input {
        Some(p) => Box::new(BufReader::new(File::open(p).map_err(|e| Failure::Usage(format!("{}: {e}", p.display())))?)),
        None => Box::new(BufReader::new(io::stdin().lock())),
    };
    let mut ingest = ingest_graph6(reader, IngestOptions { policy: args.on_error.into(), connected_only: false });
    let mut graphs = Vec::new();
    for item in ingest.by_ref() {
        graphs.push(item.map_err(|e| Failure::Usage(e.to_string()))?);
    }
    let records: Vec<AnalyzeRecord> =
        graphs.par_iter().map(|g| analyze_one(g, &catalog, args.with_float_check)).collect::<Result<_, _>>()?;
    let mut out = open_output(args.output.as_ref())?;
    let mut warnings = ingest.skipped.len();
    let mut float_ok = true;
    for r in &records {
        if r.status != "ok" {
            warnings += 1;
        }
        float_ok &= r.float_check.as_ref().is_none_or(|f| f.ok);
        let line = serde_json::to_string(r).map_err(|e| Failure::Internal(e.to_string()))?;
        writeln!(out, "{line}").map_err(|e| Failure::Internal(e.to_string()))?;
    }
    out.flush().map_err(|e| Failure::Internal(e.to_string()))?;
    if warnings > 0 {
        eprintln!("{warnings} warning(s): {} unreadable line(s), {} skipped graph(s)", ingest.skipped.len(), warnings - ingest.skipped.len());
    }
    Ok(float_ok)
}

#[derive(Serialize)]
struct OrderReport {
    #[serde(flatten)]
    theorem: TheoremReport,
    ds: Vec<DsEntry>,
}

#[derive(Serialize)]
struct RunReport<T> {
    command: &'static str,
    verified: bool,
    reports: Vec<T>,
}

pub fn verify(args: &ScanArgs) -> Outcome {
    let catalog = load_catalog(args.catalog.as_ref())?;
    let opts = ScanOptions { float_check: args.with_float_check, ds: true };
    let mut reports = Vec::new();
    let mut verified = true;
    for n in orders(&args.select)? {
        let scan = scan_order(n, &catalog, opts)?;
        let ds = scan.ds.expect("requested");
        verified &= scan.theorem.verified() && ds.verified();
        reports.push(OrderReport { theorem: scan.theorem, ds: ds.ds });
    }
    write_json(args.output.as_ref(), &RunReport { command: "verify", verified, reports })?;
    Ok(verified)
}

pub fn ds(args: &ScanArgs) -> Outcome {
    let catalog = load_catalog(args.catalog.as_ref())?;
    let opts = ScanOptions { float_check: args.with_float_check, ds: true };
    let mut reports = Vec::new();
    for n in orders(&args.select)? {
        reports.push(scan_order(n, &catalog, opts)?.ds.expect("requested"));
    }
    let verified = reports.iter().all(|r| r.verified());
    write_json(args.output.as_ref(), &RunReport { command: "ds", verified, reports })?;
    Ok(verified)
}

pub fn lemmas(args: &ScanArgs) -> Outcome {
    let mut reports = Vec::new();
    for n in orders(&args.select)? {
        reports.push(lemma_sweep_with(n, args.with_float_check)?);
    }
    let verified = reports.iter().all(|r| r.verified());
    write_json(args.output.as_ref(), &RunReport { command: "lemmas", verified, reports })?;
    Ok(verified)
}

#[derive(Serialize)]
struct BootstrapEntry {
    id: String,
    order: usize,
    clause: String,
    g6: String,
}

pub fn bootstrap(args: &BootstrapArgs) -> Outcome {
    let catalog = bootstrap_exceptional_catalog(args.order)?;
    catalog.validate()?;
    let stem = args.output.clone().unwrap_or_else(|| PathBuf::from("exceptional"));
    catalog.save(&stem)?;
    let entries: Vec<BootstrapEntry> = catalog
        .entries
        .iter()
        .map(|e| BootstrapEntry { id: e.id.clone(), order: e.order, clause: e.clause.to_string(), g6: write_graph6(&e.graph) })
        .collect();
    write_json(None, &entries)?;
    Ok(true)
}

pub fn enumerate(args: &EnumerateArgs) -> Outcome {
    let graphs = connected_graphs(args.order)?;
    let mut out = open_output(args.output.as_ref())?;
    for g in graphs {
        writeln!(out, "{}", write_graph6(&g)).map_err(|e| Failure::Internal(e.to_string()))?;
    }
    out.flush().map_err(|e| Failure::Internal(e.to_string()))?;
    Ok(true)
}
