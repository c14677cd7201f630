//! The exceptional graphs: members of `𝒢(n, n-3)` outside the infinite
//! families, discovered by enumeration and frozen as a fixture.

use std::fmt;
use std::path::Path;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::enumeration::{canonical_form, connected_graphs_vec, CanonicalCode};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6::{parse_graph6, write_graph6};
use crate::spectra::{has_eigenvalue_of_multiplicity, multiplicity_profile, rho_n_minus_1_is_one_in};
use crate::structure::{independence_number, is_cograph};

use super::{as_complete_minus_edge, as_complete_tripartite, is_five_cycle};

pub const FIXTURE_VERSION: u32 = 1;

const BUILTIN_G6: &str = include_str!("../../fixtures/exceptional.g6");
const BUILTIN_JSON: &str = include_str!("../../fixtures/exceptional.json");

/// The case of the classification an exceptional graph falls under.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Clause {
    /// `ρ_{n-1} ≠ 1` and `ν ≠ 2`.
    Ii,
    /// `ρ_{n-1} ≠ 1`, `ν = 2` and diameter 3.
    Iii,
    /// Cograph with `ρ_{n-1} ≠ 1` and `ν = 2`.
    Iv,
}

impl fmt::Display for Clause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Clause::Ii => "ii",
            Clause::Iii => "iii",
            Clause::Iv => "iv",
        })
    }
}

/// Invariants that decide the clause.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClauseInputs {
    pub rho_n_minus_1_is_one: bool,
    pub nu: usize,
    pub diameter: Option<usize>,
    pub cograph: bool,
}

impl ClauseInputs {
    pub fn of(g: &Graph) -> Result<Self> {
        let profile = multiplicity_profile(g)?;
        Ok(ClauseInputs {
            rho_n_minus_1_is_one: rho_n_minus_1_is_one_in(g, &profile),
            nu: independence_number(g),
            diameter: g.diameter(),
            cograph: is_cograph(g),
        })
    }

    /// Every clause whose predicate holds; a well-formed exceptional graph
    /// has exactly one.
    pub fn tags(&self) -> Vec<Clause> {
        let free = !self.rho_n_minus_1_is_one;
        let mut out = Vec::new();
        if free && self.nu != 2 {
            out.push(Clause::Ii);
        }
        if free && self.nu == 2 && self.diameter == Some(3) {
            out.push(Clause::Iii);
        }
        if free && self.nu == 2 && self.cograph {
            out.push(Clause::Iv);
        }
        out
    }
}

fn single_clause(g: &Graph) -> Result<Clause> {
    match ClauseInputs::of(g)?.tags().as_slice() {
        &[c] => Ok(c),
        tags => Err(Error::Catalog(format!("{} satisfies clauses {tags:?}", write_graph6(g)))),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExceptionalEntry {
    pub id: String,
    pub graph: Graph,
    pub code: CanonicalCode,
    pub clause: Clause,
    pub order: usize,
    /// Nonincreasing.
    pub degree_sequence: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct EntryMeta {
    id: String,
    order: usize,
    clause: Clause,
    degree_sequence: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct Sidecar {
    version: u32,
    entries: Vec<EntryMeta>,
}

fn degree_sequence(g: &Graph) -> Vec<usize> {
    let mut d = g.degrees();
    d.sort_unstable_by(|a, b| b.cmp(a));
    d
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ExceptionalCatalog {
    pub entries: Vec<ExceptionalEntry>,
}

impl ExceptionalCatalog {
    /// The committed fixture.
    pub fn builtin() -> Result<Self> {
        Self::from_fixture(BUILTIN_G6, BUILTIN_JSON)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn find(&self, code: &CanonicalCode) -> Option<&ExceptionalEntry> {
        self.entries.iter().find(|e| &e.code == code)
    }

    pub fn of_order(&self, n: usize) -> impl Iterator<Item = &ExceptionalEntry> {
        self.entries.iter().filter(move |e| e.order == n)
    }

    /// Parse the graph6 list and its JSON sidecar, checking that they agree.
    pub fn from_fixture(g6: &str, json: &str) -> Result<Self> {
        let bad = |m: String| Error::Catalog(m);
        let sidecar: Sidecar = serde_json::from_str(json).map_err(|e| bad(format!("sidecar: {e}")))?;
        if sidecar.version != FIXTURE_VERSION {
            return Err(bad(format!("unsupported fixture version {}", sidecar.version)));
        }
        let lines: Vec<&str> = g6.lines().map(str::trim).filter(|l| !l.is_empty()).collect();
        if lines.len() != sidecar.entries.len() {
            return Err(bad(format!("{} graphs but {} metadata entries", lines.len(), sidecar.entries.len())));
        }
        let mut entries = Vec::with_capacity(lines.len());
        for (line, meta) in lines.into_iter().zip(sidecar.entries) {
            let graph = parse_graph6(line)?;
            if graph.order() != meta.order || degree_sequence(&graph) != meta.degree_sequence {
                return Err(bad(format!("{}: metadata does not match {line}", meta.id)));
            }
            let code = canonical_form(&graph)?;
            if entries.iter().any(|e: &ExceptionalEntry| e.code == code) {
                return Err(bad(format!("{}: duplicate graph {line}", meta.id)));
            }
            entries.push(ExceptionalEntry {
                id: meta.id,
                graph,
                code,
                clause: meta.clause,
                order: meta.order,
                degree_sequence: meta.degree_sequence,
            });
        }
        Ok(ExceptionalCatalog { entries })
    }

    /// Graph6 text and JSON sidecar.
    pub fn to_fixture(&self) -> (String, String) {
        let g6: String = self.entries.iter().map(|e| write_graph6(&e.graph) + "\n").collect();
        let sidecar = Sidecar {
            version: FIXTURE_VERSION,
            entries: self
                .entries
                .iter()
                .map(|e| EntryMeta {
                    id: e.id.clone(),
                    order: e.order,
                    clause: e.clause,
                    degree_sequence: e.degree_sequence.clone(),
                })
                .collect(),
        };
        (g6, serde_json::to_string_pretty(&sidecar).expect("plain data") + "\n")
    }

    /// Reads `<stem>.g6` and `<stem>.json`.
    pub fn load(stem: &Path) -> Result<Self> {
        let read = |ext: &str| {
            let p = stem.with_extension(ext);
            std::fs::read_to_string(&p).map_err(|e| Error::Catalog(format!("{}: {e}", p.display())))
        };
        Self::from_fixture(&read("g6")?, &read("json")?)
    }

    pub fn save(&self, stem: &Path) -> Result<()> {
        let (g6, json) = self.to_fixture();
        for (ext, text) in [("g6", g6), ("json", json)] {
            let p = stem.with_extension(ext);
            std::fs::write(&p, text).map_err(|e| Error::Catalog(format!("{}: {e}", p.display())))?;
        }
        Ok(())
    }

    /// Re-evaluate every entry: in `𝒢(n, n-3)`, outside the infinite
    /// families, and tagged with the one clause its invariants satisfy.
    pub fn validate(&self) -> Result<()> {
        for e in &self.entries {
            let found = exceptional_clause(&e.graph)?;
            if found != Some(e.clause) {
                return Err(Error::Catalog(format!("{}: recorded clause {}, found {found:?}", e.id, e.clause)));
            }
        }
        Ok(())
    }
}

/// `Some(clause)` if `g` is an exceptional member of `𝒢(n, n-3)`.
pub fn exceptional_clause(g: &Graph) -> Result<Option<Clause>> {
    let n = g.order();
    if n < 5 || !g.is_connected() {
        return Ok(None);
    }
    if as_complete_tripartite(g).is_some() || as_complete_minus_edge(g).is_some() || is_five_cycle(g) {
        return Ok(None);
    }
    if !has_eigenvalue_of_multiplicity(g, n - 3)? {
        return Ok(None);
    }
    single_clause(g).map(Some)
}

/// Enumerate orders `5..=n_max` and collect the exceptional graphs. Ids
/// `G1, G2, …` follow the order (clause, order, graph6).
pub fn bootstrap_exceptional_catalog(n_max: usize) -> Result<ExceptionalCatalog> {
    if n_max < 5 {
        return Err(Error::OutOfRange { what: "bootstrap order n_max >= 5", got: n_max });
    }
    let mut found = Vec::new();
    for n in 5..=n_max {
        let graphs = connected_graphs_vec(n)?;
        let hits: Vec<(Clause, String, Graph)> = graphs
            .par_iter()
            .map(|g| Ok(exceptional_clause(g)?.map(|c| (c, write_graph6(g), g.clone()))))
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .flatten()
            .collect();
        log::info!("order {n}: {} exceptional graphs among {}", hits.len(), graphs.len());
        found.extend(hits.into_iter().map(|(c, s, g)| (c, n, s, g)));
    }
    found.sort_by(|a, b| (a.0, a.1, &a.2).cmp(&(b.0, b.1, &b.2)));
    let entries = found
        .into_iter()
        .enumerate()
        .map(|(i, (clause, order, _, graph))| {
            Ok(ExceptionalEntry {
                id: format!("G{}", i + 1),
                code: canonical_form(&graph)?,
                degree_sequence: degree_sequence(&graph),
                graph,
                clause,
                order,
            })
        })
        .collect::<Result<_>>()?;
    Ok(ExceptionalCatalog { entries })
}
