//! Per-graph checks of the spectral and structural facts the
//! classification rests on, and exhaustive sweeps over them.

use std::collections::{BTreeMap, HashMap};

use num_rational::BigRational;
use rayon::prelude::*;
use serde::Serialize;

use super::scan::FloatFailure;
use crate::enumeration::{canonical_form, connected_graphs_vec};
use crate::error::{Error, Result};
use crate::families::{is_complete_bipartite, is_complete_split, PatternId};
use crate::graph::Graph;
use crate::graph6::write_graph6;
use crate::spectra::{
    count_eigenvalues_at_least, cross_validate, find_theta_in, float_spectrum, has_nonzero_eigenvalue_at_most_one,
    multiplicity_profile, rho_n_minus_1_is_one_in,
};
use crate::structure::{
    check_twin_eigenvalue, find_induced, find_induced_labeled, independence_number, pattern_relation_polys,
    path_identity_poly, trace_partition, twin_cliques, vanishes_at,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum LemmaCheck {
    /// `ρ_2 ≥ (n-1)/(n-2)` unless `G` is `K_{p,q}` or `K_a ∨ (n-a)K_1`.
    SecondLargestBound,
    /// `ρ_{n-1} ≤ 1` for non-complete graphs.
    SmallestNonzeroAtMostOne,
    /// A twin clique of size `q` forces `1 + 1/d` with multiplicity `q - 1`.
    TwinCliqueEigenvalue,
    /// `θ ≠ 1` when `ρ_{n-1} ≠ 1`.
    ThetaNotOne,
    /// The four-degree identity on every induced `P4` of an Ω graph.
    PathIdentity,
    /// Induced `P4`s sharing three path vertices agree on the fourth degree.
    PathDegrees,
    /// The degree relations attached to `H1`–`H6`.
    PatternRelations,
    /// With `ν = 2`, outside vertices see at least two path vertices and
    /// never exactly `{v1,v3}`, `{v2,v4}` or `{v2,v3}`.
    TraceBuckets,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Violation {
    pub g6: String,
    pub check: LemmaCheck,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GraphLemmas {
    pub checked: BTreeMap<LemmaCheck, usize>,
    pub violations: Vec<(LemmaCheck, String)>,
    pub float_error: Option<String>,
    pub omega: bool,
}

impl GraphLemmas {
    fn record(&mut self, check: LemmaCheck, ok: bool, detail: impl FnOnce() -> String) {
        *self.checked.entry(check).or_default() += 1;
        if !ok {
            self.violations.push((check, detail()));
        }
    }
}

/// Run every applicable check on one connected graph.
pub fn check_graph_lemmas(g: &Graph, float_check: bool) -> Result<GraphLemmas> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.order();
    let profile = multiplicity_profile(g)?;
    let mut out = GraphLemmas::default();
    if float_check {
        out.float_error = float_spectrum(g)
            .map_err(|e| e.to_string())
            .and_then(|f| cross_validate(&profile, &f).map_err(|e| e.to_string()))
            .err();
    }

    if n >= 4 && !is_complete_bipartite(g) && !is_complete_split(g) {
        let c = BigRational::new((n as i64 - 1).into(), (n as i64 - 2).into());
        let above = count_eigenvalues_at_least(&profile, &c);
        out.record(LemmaCheck::SecondLargestBound, above >= 2, || format!("{above} eigenvalues >= {c}"));
    }
    if !g.is_complete() {
        out.record(LemmaCheck::SmallestNonzeroAtMostOne, has_nonzero_eigenvalue_at_most_one(&profile), || {
            "no eigenvalue in (0, 1]".into()
        });
    }
    for k in twin_cliques(g) {
        let ok = check_twin_eigenvalue(g, &k)?;
        out.record(LemmaCheck::TwinCliqueEigenvalue, ok, || format!("twin clique {k:?}"));
    }

    let nu = independence_number(g);
    let p4s = find_induced(g, PatternId::P4);
    if nu == 2 {
        for e in &p4s {
            let t = trace_partition(g, e)?;
            let forbidden: [&[usize]; 8] = [&[], &[1], &[2], &[3], &[4], &[1, 3], &[2, 4], &[2, 3]];
            let bad: Vec<_> = forbidden.iter().filter(|u| t.bucket(u) != 0).collect();
            out.record(LemmaCheck::TraceBuckets, bad.is_empty(), || format!("path {:?}: nonempty {bad:?}", e.map));
        }
    }

    if n < 5 {
        return Ok(out);
    }
    let thetas = find_theta_in(g, &profile)?;
    if thetas.is_empty() {
        return Ok(out);
    }
    let rho_one = rho_n_minus_1_is_one_in(g, &profile);
    if !rho_one {
        for t in &thetas {
            out.record(LemmaCheck::ThetaNotOne, !t.equals_one, || "θ = 1".into());
        }
    }
    out.omega = !rho_one && nu == 2 && g.diameter() == Some(2) && !p4s.is_empty();
    if !out.omega {
        return Ok(out);
    }
    let deg = |v: usize| g.degree(v) as u64;
    for t in &thetas {
        for e in &p4s {
            let d = [deg(e.map[0]), deg(e.map[1]), deg(e.map[2]), deg(e.map[3])];
            let ok = vanishes_at(&path_identity_poly(d), t);
            out.record(LemmaCheck::PathIdentity, ok, || format!("path {:?} degrees {d:?}", e.map));
        }
        for id in PatternId::H {
            for e in find_induced(g, id) {
                let mut d = [0u64; 5];
                for (slot, &v) in d.iter_mut().zip(&e.map) {
                    *slot = deg(v);
                }
                for (i, p) in pattern_relation_polys(id, &d).iter().enumerate() {
                    let ok = vanishes_at(p, t);
                    out.record(LemmaCheck::PatternRelations, ok, || format!("{id} relation {i} at {:?}", e.map));
                }
            }
        }
    }
    // Paths u1 v2 v3 v4 and v1 v2 v3 v4 give d(u1) = d(v1); paths
    // v1 u2 v3 v4 and v1 v2 v3 v4 give d(u2) = d(v2).
    let labeled = find_induced_labeled(g, PatternId::P4);
    for (free, fixed) in [(0usize, [1usize, 2, 3]), (1, [0, 2, 3])] {
        let mut groups: HashMap<[usize; 3], Vec<usize>> = HashMap::new();
        for e in &labeled {
            groups.entry(fixed.map(|i| e.map[i])).or_default().push(e.map[free]);
        }
        for (key, vs) in groups {
            let ok = vs.iter().all(|&v| g.degree(v) == g.degree(vs[0]));
            out.record(LemmaCheck::PathDegrees, ok, || format!("role {} over {key:?}: {vs:?}", free + 1));
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LemmaReport {
    pub order: usize,
    pub scanned: usize,
    pub checked: BTreeMap<LemmaCheck, usize>,
    pub omega_graphs: Vec<String>,
    pub violations: Vec<Violation>,
    pub float_checked: usize,
    pub float_failures: Vec<FloatFailure>,
}

impl LemmaReport {
    pub fn verified(&self) -> bool {
        self.violations.is_empty() && self.float_failures.is_empty()
    }
}

pub const MAX_SWEEP_ORDER: usize = 8;

/// Every check over every connected graph of order `n`.
pub fn lemma_sweep(n: usize) -> Result<LemmaReport> {
    lemma_sweep_with(n, false)
}

pub fn lemma_sweep_with(n: usize, float_check: bool) -> Result<LemmaReport> {
    if !(5..=MAX_SWEEP_ORDER).contains(&n) {
        return Err(Error::OutOfRange { what: "sweep order 5..=8", got: n });
    }
    let graphs = connected_graphs_vec(n)?;
    let results: Vec<GraphLemmas> = graphs.par_iter().map(|g| check_graph_lemmas(g, float_check)).collect::<Result<_>>()?;
    let mut report = LemmaReport {
        order: n,
        scanned: graphs.len(),
        checked: BTreeMap::new(),
        omega_graphs: Vec::new(),
        violations: Vec::new(),
        float_checked: if float_check { graphs.len() } else { 0 },
        float_failures: Vec::new(),
    };
    let name = |g: &Graph| -> Result<String> { Ok(write_graph6(&canonical_form(g)?.to_graph())) };
    for (g, r) in graphs.iter().zip(results) {
        for (k, c) in r.checked {
            *report.checked.entry(k).or_default() += c;
        }
        if r.omega {
            report.omega_graphs.push(name(g)?);
        }
        for (check, detail) in r.violations {
            report.violations.push(Violation { g6: name(g)?, check, detail });
        }
        if let Some(error) = r.float_error {
            report.float_failures.push(FloatFailure { g6: name(g)?, error });
        }
    }
    report.omega_graphs.sort();
    report.violations.sort();
    report.float_failures.sort();
    Ok(report)
}
