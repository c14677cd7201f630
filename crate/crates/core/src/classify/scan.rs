//! Exhaustive per-order scans: the spectral set against the structural
//! set, the `ν = 2` question for `ρ_1`, and cospectral mates.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_bigint::BigInt;
use num_integer::Integer;
use rayon::prelude::*;
use serde::Serialize;

use super::{spectral_classify_with, structural_matches, Case, SpectralVerdict, StructuralVerdict};
use crate::algebra::squarefree::squarefree_int;
use crate::algebra::IntPoly;
use crate::enumeration::{canonical_form, connected_graphs_vec};
use crate::error::{Error, Result};
use crate::families::ExceptionalCatalog;
use crate::graph::Graph;
use crate::graph6::write_graph6;
use crate::spectra::charpoly::shifted_determinant_poly_i128;
use crate::spectra::{charpoly_from_numerator, cross_validate, float_spectrum, MultiplicityProfile, ThetaDescriptor};

pub const MIN_SCAN_ORDER: usize = 5;
pub const MAX_SCAN_ORDER: usize = 9;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ScanOptions {
    /// Cross-validate every scanned graph against the float spectrum.
    pub float_check: bool,
    /// Also collect cospectral mates.
    pub ds: bool,
}

/// One member of the spectral or structural set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpectralRecord {
    /// Canonical graph6.
    pub g6: String,
    pub theta_factor: String,
    /// Ascending exact coefficients of `theta_factor`.
    pub theta_coefficients: Vec<String>,
    pub mult: usize,
    pub is_rho1: bool,
    pub is_rho_n_minus_1: bool,
    pub equals_one: bool,
    pub thetas: Vec<ThetaDescriptor>,
    pub rho_n_minus_1_is_one: bool,
    pub nu: usize,
    pub diam: usize,
    pub cograph: bool,
    pub case: Option<Case>,
    #[serde(flatten)]
    pub family: StructuralVerdict,
}

impl SpectralRecord {
    fn new(g6: String, v: &SpectralVerdict, family: StructuralVerdict) -> Self {
        let first = v.thetas.first();
        SpectralRecord {
            g6,
            theta_factor: first.map_or_else(String::new, |t| t.factor.to_string()),
            theta_coefficients: first.map_or_else(Vec::new, |t| t.factor.to_fraction_strings()),
            mult: first.map_or(0, |t| t.multiplicity),
            is_rho1: v.thetas.iter().any(|t| t.is_rho1),
            is_rho_n_minus_1: v.thetas.iter().any(|t| t.is_rho_n_minus_1),
            equals_one: v.thetas.iter().any(|t| t.equals_one),
            thetas: v.thetas.clone(),
            rho_n_minus_1_is_one: v.rho_nminus1_is_one,
            nu: v.nu,
            diam: v.diam,
            cograph: v.cograph,
            case: v.case(),
            family,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MismatchKind {
    /// Has an eigenvalue of multiplicity `n - 3` but matches no family.
    SpectralOnly,
    /// Matches a family but has no eigenvalue of multiplicity `n - 3`.
    StructuralOnly,
    /// Member of both sets, but its invariants select another case.
    CaseDisagreement,
    SeveralFamilies,
    /// A part-size triple missing from, or repeated in, the tripartite slice.
    TripartiteSlice,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Mismatch {
    pub kind: MismatchKind,
    pub g6: String,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct FloatFailure {
    pub g6: String,
    pub error: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TheoremReport {
    pub order: usize,
    pub scanned: usize,
    pub spectral: Vec<SpectralRecord>,
    pub spectral_set: Vec<String>,
    pub structural_set: Vec<String>,
    pub mismatches: Vec<Mismatch>,
    pub problem_counterexamples: Vec<String>,
    pub clause_histogram: BTreeMap<Case, usize>,
    pub float_checked: usize,
    pub float_failures: Vec<FloatFailure>,
}

impl TheoremReport {
    pub fn theorem_verified(&self) -> bool {
        self.mismatches.is_empty() && self.spectral_set == self.structural_set
    }

    pub fn problem_answered(&self) -> bool {
        self.problem_counterexamples.is_empty()
    }

    pub fn float_verified(&self) -> bool {
        self.float_failures.is_empty()
    }

    pub fn verified(&self) -> bool {
        self.theorem_verified() && self.problem_answered() && self.float_verified()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DsEntry {
    pub g6: String,
    /// Ascending exact coefficients of the monic characteristic polynomial.
    pub charpoly: Vec<String>,
    pub mates: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DsReport {
    pub order: usize,
    pub scanned: usize,
    pub ds: Vec<DsEntry>,
}

impl DsReport {
    pub fn verified(&self) -> bool {
        self.ds.iter().all(|e| e.mates.is_empty())
    }
}

#[derive(Clone, Debug)]
pub struct OrderScan {
    pub theorem: TheoremReport,
    pub ds: Option<DsReport>,
}

struct GraphScan {
    key: Option<Vec<i128>>,
    member: bool,
    families: Vec<StructuralVerdict>,
    profile: Option<MultiplicityProfile>,
    float_error: Option<String>,
}

/// Primitive numerator with positive leading coefficient: two graphs are
/// cospectral exactly when these agree.
fn ds_key(num: &[i128]) -> Vec<i128> {
    let g = num.iter().fold(0i128, |a, b| a.gcd(b));
    num.iter().map(|c| c / g).collect()
}

fn scan_graph(g: &Graph, catalog: &ExceptionalCatalog, opts: ScanOptions) -> Result<GraphScan> {
    let n = g.order();
    let num = shifted_determinant_poly_i128(g).ok_or(Error::OutOfRange { what: "order with i128 charpoly", got: n })?;
    let big: Vec<BigInt> = num.iter().map(|&c| BigInt::from(c)).collect();
    let families = structural_matches(g, catalog)?;
    let mut float_error = None;
    let mut profile = None;
    let member = if opts.float_check {
        let p = MultiplicityProfile::from_charpoly(n, charpoly_from_numerator(big))?;
        let checked = float_spectrum(g).map_err(|e| e.to_string()).and_then(|f| cross_validate(&p, &f).map_err(|e| e.to_string()));
        float_error = checked.err();
        let m = p.decomposition.parts.iter().any(|part| part.multiplicity == n - 3);
        profile = Some(p);
        m
    } else {
        squarefree_int(&IntPoly::new(big.clone())).iter().any(|(_, m)| *m == n - 3)
    };
    let interesting = member || !families.is_empty() || opts.ds;
    if !interesting {
        profile = None;
    } else if profile.is_none() && (member || !families.is_empty()) {
        profile = Some(MultiplicityProfile::from_charpoly(n, charpoly_from_numerator(num.iter().map(|&c| c.into()).collect()))?);
    }
    Ok(GraphScan { key: opts.ds.then(|| ds_key(&num)), member, families, profile, float_error })
}

fn tripartite_triples(n: usize) -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for a in 1..=n / 3 {
        for b in a..=(n - a) / 2 {
            out.push([a, b, n - a - b]);
        }
    }
    out
}

fn canonical_g6(g: &Graph) -> Result<String> {
    Ok(write_graph6(&canonical_form(g)?.to_graph()))
}

fn guard(n: usize) -> Result<()> {
    if !(MIN_SCAN_ORDER..=MAX_SCAN_ORDER).contains(&n) {
        return Err(Error::OutOfRange { what: "scan order 5..=9", got: n });
    }
    Ok(())
}

/// Scan every connected graph of order `n` once.
pub fn scan_order(n: usize, catalog: &ExceptionalCatalog, opts: ScanOptions) -> Result<OrderScan> {
    guard(n)?;
    let graphs = connected_graphs_vec(n)?;
    let scans: Vec<GraphScan> = graphs.par_iter().map(|g| scan_graph(g, catalog, opts)).collect::<Result<_>>()?;
    log::info!("order {n}: scanned {} graphs", graphs.len());

    let mut records = Vec::new();
    let mut mismatches = Vec::new();
    let mut float_failures = Vec::new();
    let mut spectral_set = BTreeSet::new();
    let mut structural_set = BTreeSet::new();
    let mut verdicts: HashMap<usize, (String, SpectralVerdict)> = HashMap::new();
    for (i, (g, s)) in graphs.iter().zip(&scans).enumerate() {
        if let Some(error) = &s.float_error {
            float_failures.push(FloatFailure { g6: canonical_g6(g)?, error: error.clone() });
        }
        if !s.member && s.families.is_empty() {
            continue;
        }
        let g6 = canonical_g6(g)?;
        let profile = s.profile.as_ref().expect("kept for members");
        let verdict = spectral_classify_with(g, profile)?;
        if s.member {
            spectral_set.insert(g6.clone());
        }
        if !s.families.is_empty() {
            structural_set.insert(g6.clone());
        }
        let family = s.families.first().cloned().unwrap_or(StructuralVerdict::NotInFamily);
        let mut flag = |kind, detail: String| mismatches.push(Mismatch { kind, g6: g6.clone(), detail });
        if s.families.len() > 1 {
            flag(MismatchKind::SeveralFamilies, format!("{:?}", s.families));
        }
        match (s.member, s.families.is_empty()) {
            (true, true) => flag(MismatchKind::SpectralOnly, format!("case {:?}, thetas {}", verdict.case(), verdict.thetas.len())),
            (false, false) => flag(MismatchKind::StructuralOnly, format!("{family:?}")),
            _ => {
                if family.expected_case() != verdict.case() {
                    flag(
                        MismatchKind::CaseDisagreement,
                        format!("{family:?} expects {:?}, invariants give {:?}", family.expected_case(), verdict.case()),
                    );
                }
            }
        }
        records.push(SpectralRecord::new(g6.clone(), &verdict, family));
        verdicts.insert(i, (g6, verdict));
    }

    // Each part-size triple must occur exactly once among the members.
    let mut slice: BTreeMap<[usize; 3], usize> = BTreeMap::new();
    for r in records.iter().filter(|r| r.case.is_some() && !r.thetas.is_empty()) {
        if let StructuralVerdict::Tripartite { parts } = r.family {
            *slice.entry(parts).or_default() += 1;
        }
    }
    for t in tripartite_triples(n) {
        let seen = slice.remove(&t).unwrap_or(0);
        if seen != 1 {
            mismatches.push(Mismatch { kind: MismatchKind::TripartiteSlice, g6: String::new(), detail: format!("K{t:?} seen {seen} times") });
        }
    }
    for (t, seen) in slice {
        mismatches.push(Mismatch { kind: MismatchKind::TripartiteSlice, g6: String::new(), detail: format!("unexpected K{t:?} seen {seen} times") });
    }

    let mut clause_histogram = BTreeMap::new();
    let mut problem_counterexamples = Vec::new();
    for r in records.iter().filter(|r| !r.thetas.is_empty()) {
        if let Some(c) = r.case {
            *clause_histogram.entry(c).or_default() += 1;
        }
        if n >= 6 && r.is_rho1 && r.nu == 2 {
            problem_counterexamples.push(r.g6.clone());
        }
    }

    let ds = if opts.ds {
        let mut buckets: HashMap<&[i128], Vec<usize>> = HashMap::new();
        for (i, s) in scans.iter().enumerate() {
            buckets.entry(s.key.as_deref().expect("keys collected")).or_default().push(i);
        }
        let mut entries = Vec::new();
        for (&i, (g6, v)) in &verdicts {
            if !(v.in_g_n_nminus3 && v.theta_is_rho1()) {
                continue;
            }
            let key = scans[i].key.as_deref().expect("keys collected");
            let mut mates = buckets[key].iter().filter(|&&j| j != i).map(|&j| canonical_g6(&graphs[j])).collect::<Result<Vec<_>>>()?;
            mates.sort();
            let charpoly = scans[i].profile.as_ref().expect("kept for members").charpoly.to_fraction_strings();
            entries.push(DsEntry { g6: g6.clone(), charpoly, mates });
        }
        entries.sort_by(|a, b| a.g6.cmp(&b.g6));
        Some(DsReport { order: n, scanned: graphs.len(), ds: entries })
    } else {
        None
    };

    records.sort_by(|a, b| a.g6.cmp(&b.g6));
    mismatches.sort();
    float_failures.sort();
    problem_counterexamples.sort();
    let theorem = TheoremReport {
        order: n,
        scanned: graphs.len(),
        spectral: records,
        spectral_set: spectral_set.into_iter().collect(),
        structural_set: structural_set.into_iter().collect(),
        mismatches,
        problem_counterexamples,
        clause_histogram,
        float_checked: if opts.float_check { graphs.len() } else { 0 },
        float_failures,
    };
    Ok(OrderScan { theorem, ds })
}

/// Spectral set against structural set at order `n`, using the built-in
/// catalog.
pub fn verify_theorem(n: usize) -> Result<TheoremReport> {
    Ok(scan_order(n, &ExceptionalCatalog::builtin()?, ScanOptions::default())?.theorem)
}

/// Cospectral mates of every graph whose largest eigenvalue has
/// multiplicity `n - 3`.
pub fn ds_check(n: usize) -> Result<DsReport> {
    let scan = scan_order(n, &ExceptionalCatalog::builtin()?, ScanOptions { float_check: false, ds: true })?;
    Ok(scan.ds.expect("requested"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete_minus_edge, complete_tripartite, cycle};

    fn g6(g: &Graph) -> String {
        canonical_g6(g).unwrap()
    }

    #[test]
    fn order_five() {
        let r = verify_theorem(5).unwrap();
        assert_eq!(r.scanned, 21);
        assert!(r.verified(), "{:?}", r.mismatches);
        for g in [complete_tripartite(1, 1, 3), complete_tripartite(2, 2, 1), complete_minus_edge(5), cycle(5)] {
            assert!(r.spectral_set.contains(&g6(&g.unwrap())));
        }
        assert_eq!(r.clause_histogram[&Case::Omega], 1);
        let c5 = r.spectral.iter().find(|s| s.family == StructuralVerdict::CycleC5).unwrap();
        assert_eq!(c5.theta_factor, "x^2 - 5/2 x + 5/4");
        assert_eq!((c5.mult, c5.nu, c5.diam), (2, 2, 2));
    }

    #[test]
    fn small_orders_agree() {
        for n in 6..=7 {
            let r = verify_theorem(n).unwrap();
            assert!(r.verified(), "n = {n}: {:?} {:?}", r.mismatches, r.problem_counterexamples);
            assert_eq!(r.spectral_set, r.structural_set);
        }
    }

    #[test]
    fn five_cycle_has_no_mate() {
        let ds = ds_check(5).unwrap();
        let c5 = g6(&cycle(5).unwrap());
        let e = ds.ds.iter().find(|e| e.g6 == c5).unwrap();
        assert!(e.mates.is_empty());
        assert!(ds.verified());
    }

    #[test]
    fn float_checked_scan() {
        let s = scan_order(6, &ExceptionalCatalog::builtin().unwrap(), ScanOptions { float_check: true, ds: true }).unwrap();
        assert_eq!(s.theorem.float_checked, 112);
        assert!(s.theorem.verified());
        assert!(s.ds.unwrap().verified());
    }

    #[test]
    fn guards_and_triples() {
        assert!(verify_theorem(4).is_err());
        assert!(ds_check(10).is_err());
        assert_eq!(tripartite_triples(5), vec![[1, 1, 3], [1, 2, 2]]);
        assert_eq!(tripartite_triples(9).len(), 7);
        assert_eq!(ds_key(&[0, 4, -6, 2]), vec![0, 2, -3, 1]);
    }

    #[test]
    fn cospectral_keys_detect_mates() {
        // Two non-isomorphic graphs of order 6 sharing a spectrum show up
        // in each other's buckets.
        let graphs = connected_graphs_vec(6).unwrap();
        let mut seen: HashMap<Vec<i128>, usize> = HashMap::new();
        for g in &graphs {
            *seen.entry(ds_key(&shifted_determinant_poly_i128(g).unwrap())).or_default() += 1;
        }
        assert!(seen.len() < graphs.len());
    }
}
