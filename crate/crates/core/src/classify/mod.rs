//! Classification of `𝒢(n, n-3)`: structural families, spectral
//! invariants, exhaustive verification, cospectrality and lemma sweeps.

pub mod lemmas;
pub mod scan;

use serde::Serialize;

use crate::enumeration::canonical_form;
use crate::error::{Error, Result};
use crate::families::{
    as_clique_with_two_attachments, as_complete_minus_edge, as_complete_tripartite, is_clique_with_pendant,
    is_five_cycle, Clause, ExceptionalCatalog,
};
use crate::graph::Graph;
use crate::spectra::{find_theta_in, multiplicity_profile, rho_n_minus_1_is_one_in, MultiplicityProfile, ThetaDescriptor};
use crate::structure::{find_induced, independence_number, is_cograph};
use crate::families::PatternId;

pub use lemmas::{check_graph_lemmas, lemma_sweep, lemma_sweep_with, GraphLemmas, LemmaCheck, LemmaReport, Violation};
pub use scan::{
    ds_check, scan_order, verify_theorem, DsEntry, DsReport, FloatFailure, Mismatch, MismatchKind, OrderScan, ScanOptions,
    SpectralRecord, TheoremReport,
};

/// The named family a graph belongs to, with its witness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum StructuralVerdict {
    Tripartite { parts: [usize; 3] },
    CompleteMinusEdge { missing: (usize, usize) },
    /// `id` is the catalog id, or a shape name beyond the catalog's orders.
    Exceptional { id: String, clause: Clause },
    CycleC5,
    NotInFamily,
}

/// Which case of the classification a member falls under.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Case {
    /// `ρ_{n-1} = 1`.
    I,
    Ii,
    Iii,
    Iv,
    /// Induced `P4`, `ρ_{n-1} ≠ 1`, `ν = diam = 2`.
    Omega,
}

impl From<Clause> for Case {
    fn from(c: Clause) -> Self {
        match c {
            Clause::Ii => Case::Ii,
            Clause::Iii => Case::Iii,
            Clause::Iv => Case::Iv,
        }
    }
}

impl StructuralVerdict {
    pub fn is_member(&self) -> bool {
        *self != StructuralVerdict::NotInFamily
    }

    /// The case a member of this family must satisfy.
    pub fn expected_case(&self) -> Option<Case> {
        match self {
            StructuralVerdict::Tripartite { .. } | StructuralVerdict::CompleteMinusEdge { .. } => Some(Case::I),
            StructuralVerdict::Exceptional { clause, .. } => Some((*clause).into()),
            StructuralVerdict::CycleC5 => Some(Case::Omega),
            StructuralVerdict::NotInFamily => None,
        }
    }
}

fn require_classifiable(g: &Graph) -> Result<()> {
    if g.order() < 5 {
        return Err(Error::OutOfRange { what: "order n >= 5", got: g.order() });
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(())
}

/// Every family `g` matches; the families are disjoint, so a well-formed
/// answer has at most one entry.
pub fn structural_matches(g: &Graph, catalog: &ExceptionalCatalog) -> Result<Vec<StructuralVerdict>> {
    require_classifiable(g)?;
    let n = g.order();
    let mut out = Vec::new();
    if let Some((a, b, c)) = as_complete_tripartite(g) {
        out.push(StructuralVerdict::Tripartite { parts: [a, b, c] });
    }
    if let Some(missing) = as_complete_minus_edge(g) {
        out.push(StructuralVerdict::CompleteMinusEdge { missing });
    }
    if is_five_cycle(g) {
        out.push(StructuralVerdict::CycleC5);
    }
    let mut degrees = g.degrees();
    degrees.sort_unstable_by(|a, b| b.cmp(a));
    let candidates: Vec<_> = catalog.of_order(n).filter(|e| e.degree_sequence == degrees).collect();
    let mut catalog_hit = None;
    if !candidates.is_empty() {
        let code = canonical_form(g)?;
        if let Some(e) = candidates.into_iter().find(|e| e.code == code) {
            catalog_hit = Some(e);
            out.push(StructuralVerdict::Exceptional { id: e.id.clone(), clause: e.clause });
        }
    }
    // The two attachment families exist at every order; the catalog only
    // names their members up to its largest order.
    if catalog_hit.is_none() {
        if is_clique_with_pendant(g) {
            out.push(StructuralVerdict::Exceptional { id: format!("clique-with-pendant({n})"), clause: Clause::Iv });
        } else if let Some((a, b)) = as_clique_with_two_attachments(g) {
            out.push(StructuralVerdict::Exceptional {
                id: format!("clique-with-two-attachments({a},{b})"),
                clause: Clause::Iii,
            });
        }
    }
    Ok(out)
}

pub fn structural_classify(g: &Graph, catalog: &ExceptionalCatalog) -> Result<StructuralVerdict> {
    let mut m = structural_matches(g, catalog)?;
    match m.len() {
        0 => Ok(StructuralVerdict::NotInFamily),
        1 => Ok(m.remove(0)),
        _ => Err(Error::Catalog(format!("graph matches several families: {m:?}"))),
    }
}

/// Spectral and structural invariants in one record.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpectralVerdict {
    pub in_g_n_nminus3: bool,
    pub thetas: Vec<ThetaDescriptor>,
    pub rho_nminus1_is_one: bool,
    pub nu: usize,
    pub diam: usize,
    pub cograph: bool,
    pub has_induced_p4: bool,
}

impl SpectralVerdict {
    /// The case the invariants select, for members only.
    pub fn case(&self) -> Option<Case> {
        if !self.in_g_n_nminus3 {
            return None;
        }
        if self.rho_nminus1_is_one {
            return Some(Case::I);
        }
        match (self.nu, self.diam) {
            (nu, _) if nu != 2 => Some(Case::Ii),
            (_, 3) => Some(Case::Iii),
            (_, 2) if self.cograph => Some(Case::Iv),
            (_, 2) => Some(Case::Omega),
            _ => None,
        }
    }

    /// Some θ is the largest eigenvalue.
    pub fn theta_is_rho1(&self) -> bool {
        self.thetas.iter().any(|t| t.is_rho1)
    }

    pub fn is_omega(&self) -> bool {
        self.case() == Some(Case::Omega)
    }
}

pub fn spectral_classify(g: &Graph) -> Result<SpectralVerdict> {
    require_classifiable(g)?;
    spectral_classify_with(g, &multiplicity_profile(g)?)
}

pub fn spectral_classify_with(g: &Graph, profile: &MultiplicityProfile) -> Result<SpectralVerdict> {
    require_classifiable(g)?;
    let thetas = find_theta_in(g, profile)?;
    let has_induced_p4 = !find_induced(g, PatternId::P4).is_empty();
    Ok(SpectralVerdict {
        in_g_n_nminus3: !thetas.is_empty(),
        thetas,
        rho_nminus1_is_one: rho_n_minus_1_is_one_in(g, profile),
        nu: independence_number(g),
        diam: g.diameter().ok_or(Error::Disconnected)?,
        cograph: is_cograph(g),
        has_induced_p4,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{clique_with_pendant, complete_minus_edge, complete_tripartite, cycle, path};

    fn cat() -> ExceptionalCatalog {
        ExceptionalCatalog::builtin().unwrap()
    }

    #[test]
    fn structural_examples() {
        let c = cat();
        assert_eq!(
            structural_classify(&complete_tripartite(2, 1, 2).unwrap(), &c).unwrap(),
            StructuralVerdict::Tripartite { parts: [1, 2, 2] }
        );
        assert!(matches!(
            structural_classify(&complete_minus_edge(6).unwrap(), &c).unwrap(),
            StructuralVerdict::CompleteMinusEdge { .. }
        ));
        assert_eq!(structural_classify(&cycle(5).unwrap(), &c).unwrap(), StructuralVerdict::CycleC5);
        assert_eq!(structural_classify(&cycle(6).unwrap(), &c).unwrap(), StructuralVerdict::NotInFamily);
        assert!(structural_classify(&path(4).unwrap(), &c).is_err());
        let disconnected = Graph::from_edges(5, &[(0, 1), (2, 3), (3, 4)]).unwrap();
        assert_eq!(structural_classify(&disconnected, &c), Err(Error::Disconnected));
    }

    #[test]
    fn exceptional_ids() {
        let c = cat();
        let v = structural_classify(&clique_with_pendant(6).unwrap(), &c).unwrap();
        assert!(matches!(v, StructuralVerdict::Exceptional { clause: Clause::Iv, ref id } if id.starts_with('G')));
        let v = structural_classify(&clique_with_pendant(11).unwrap(), &c).unwrap();
        assert_eq!(v, StructuralVerdict::Exceptional { id: "clique-with-pendant(11)".into(), clause: Clause::Iv });
    }

    #[test]
    fn spectral_examples() {
        let v = spectral_classify(&cycle(5).unwrap()).unwrap();
        assert!(v.in_g_n_nminus3 && !v.rho_nminus1_is_one && v.has_induced_p4 && !v.cograph);
        assert_eq!((v.nu, v.diam), (2, 2));
        assert_eq!(v.case(), Some(Case::Omega));

        let v = spectral_classify(&complete_tripartite(1, 2, 2).unwrap()).unwrap();
        assert!(v.in_g_n_nminus3 && v.rho_nminus1_is_one && v.cograph);
        assert_eq!(v.case(), Some(Case::I));

        let v = spectral_classify(&path(6).unwrap()).unwrap();
        assert!(!v.in_g_n_nminus3 && v.thetas.is_empty());
        assert_eq!(v.case(), None);
    }

    #[test]
    fn every_catalog_entry_has_its_case() {
        for e in &cat().entries {
            let v = spectral_classify(&e.graph).unwrap();
            assert_eq!(v.case(), Some(e.clause.into()), "{}", e.id);
            let s = structural_classify(&e.graph, &cat()).unwrap();
            assert_eq!(s.expected_case(), v.case());
        }
    }
}
