//! Constructive equitable colorings of corona products.
//!
//! Every operation here takes a coloring of the base graph and emits a
//! [`Certificate`]: the full product coloring, the route tag that produced
//! it, the claimed number of colors, and whether the claim is an equality or
//! an upper bound. Certificates are validated on construction (proper and
//! equitable, with the declared color count), and the verifier can
//! additionally confirm equality claims against the exact oracle.

mod balance;
mod complete;
mod cycles;
mod fill;
mod k1;
mod multipartite;
mod paths;

pub use complete::color_complete_corona;
pub use cycles::{
    color_even_cycle_corona_3, color_even_cycle_corona_4, color_odd_cycle_corona,
    extend_even_cycle_3, tail_plan, three_color_size_recurrence, TailPlan,
};
pub use fill::{cycle_fill, path_fill};
pub use k1::{color_k1_cycle_corona, color_k1_path_corona, fan_equitable, wheel_equitable};
pub use multipartite::color_multipartite_corona;
pub use paths::{color_path_corona_3, color_path_corona_4};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::coloring::{analyze_coloring, Coloring};
use crate::corona::{corona_power, CoronaError, CoronaSpec, DEFAULT_ORDER_CAP};
use crate::graph::{Graph, GraphError};
use crate::oracle::{self, OracleError, SearchLimits};

#[derive(Debug, Error)]
pub enum ColorerError {
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("infeasible counts: {0}")]
    InfeasibleCounts(String),
    #[error("no balanced pattern assignment found: {0}")]
    BalancingFailed(String),
    #[error("no applicable route: {0}")]
    NoApplicableRoute(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Corona(#[from] CoronaError),
    #[error("oracle failure during dispatch: {0}")]
    Oracle(#[from] OracleError),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

/// Route that produced a certificate. The tags are stable strings in the
/// certificate JSON and the survey output.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum TheoremTag {
    P1,
    T2,
    C3,
    T4,
    T5,
    T6,
    T7,
    T8,
    E1,
    C9,
    T10,
    C11,
    T13,
    #[serde(rename = "FAN")]
    Fan,
    #[serde(rename = "fallback")]
    Fallback,
}

impl std::fmt::Display for TheoremTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            TheoremTag::P1 => "P1",
            TheoremTag::T2 => "T2",
            TheoremTag::C3 => "C3",
            TheoremTag::T4 => "T4",
            TheoremTag::T5 => "T5",
            TheoremTag::T6 => "T6",
            TheoremTag::T7 => "T7",
            TheoremTag::T8 => "T8",
            TheoremTag::E1 => "E1",
            TheoremTag::C9 => "C9",
            TheoremTag::T10 => "T10",
            TheoremTag::C11 => "C11",
            TheoremTag::T13 => "T13",
            TheoremTag::Fan => "FAN",
            TheoremTag::Fallback => "fallback",
        };
        f.write_str(s)
    }
}

/// Whether the certificate claims the exact equitable chromatic number or
/// only an upper bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Claim {
    Equality,
    UpperBound,
}

impl std::fmt::Display for Claim {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Claim::Equality => "equality",
            Claim::UpperBound => "upper_bound",
        })
    }
}

/// Structural description of the attached graph `H`, which selects the
/// coloring route.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HShape {
    Complete(usize),
    /// Cycle on an even number `m >= 4` of vertices.
    EvenCycle(usize),
    /// Cycle on an odd number `m >= 3` of vertices.
    OddCycle(usize),
    Path(usize),
    /// Complete multipartite with the given part sizes.
    Multipartite(Vec<usize>),
    /// Arbitrary graph with a caller-supplied partition into independent sets.
    General { graph: Graph, parts: Vec<Vec<usize>> },
}

impl HShape {
    /// Classifies a cycle length into the even or odd variant.
    pub fn cycle(m: usize) -> Result<Self, ColorerError> {
        if m < 3 {
            return Err(ColorerError::Precondition("cycle needs m >= 3".into()));
        }
        Ok(if m.is_multiple_of(2) {
            HShape::EvenCycle(m)
        } else {
            HShape::OddCycle(m)
        })
    }

    pub fn order(&self) -> usize {
        match self {
            HShape::Complete(m) | HShape::EvenCycle(m) | HShape::OddCycle(m) | HShape::Path(m) => {
                *m
            }
            HShape::Multipartite(sizes) => sizes.iter().sum(),
            HShape::General { graph, .. } => graph.n(),
        }
    }

    /// Builds the concrete graph in canonical numbering.
    pub fn realize(&self) -> Result<Graph, ColorerError> {
        let g = match self {
            HShape::Complete(m) => Graph::complete(*m)?,
            HShape::EvenCycle(m) => {
                if *m % 2 != 0 {
                    return Err(ColorerError::Precondition(format!(
                        "even cycle length {m} is odd"
                    )));
                }
                Graph::cycle(*m)?
            }
            HShape::OddCycle(m) => {
                if *m % 2 == 0 {
                    return Err(ColorerError::Precondition(format!(
                        "odd cycle length {m} is even"
                    )));
                }
                Graph::cycle(*m)?
            }
            HShape::Path(m) => Graph::path(*m)?,
            HShape::Multipartite(sizes) => Graph::complete_multipartite(sizes)?,
            HShape::General { graph, .. } => graph.clone(),
        };
        Ok(g)
    }
}

/// A coloring of a corona product together with the route used, the claimed
/// value and the class-size statistics. Construction validates the coloring,
/// so holding a `Certificate` implies it is proper and equitable with exactly
/// `claimed_k` declared colors.
#[derive(Debug, Clone)]
pub struct Certificate {
    pub spec: CoronaSpec,
    pub coloring: Coloring,
    pub theorem: TheoremTag,
    pub claim: Claim,
    pub claimed_k: usize,
    pub sizes: Vec<usize>,
    /// For routes that reorder base vertices: `permutation[i]` is the vertex
    /// placed at position `i+1` of the first reordered level. The coloring is
    /// always stated in original vertex order regardless.
    pub permutation: Option<Vec<usize>>,
}

/// Serialized form of a certificate (the CLI's JSON output).
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CertificateJson {
    pub theorem: TheoremTag,
    pub claim: Claim,
    pub k: usize,
    pub g_n: usize,
    pub h_n: usize,
    pub l: usize,
    pub product_n: usize,
    pub sizes: Vec<usize>,
    pub coloring: Vec<usize>,
    pub permutation: Option<Vec<usize>>,
}

impl Certificate {
    pub fn product(&self) -> Result<Graph, CoronaError> {
        corona_power(&self.spec, DEFAULT_ORDER_CAP)
    }

    pub fn to_json(&self) -> CertificateJson {
        CertificateJson {
            theorem: self.theorem,
            claim: self.claim,
            k: self.claimed_k,
            g_n: self.spec.g.n(),
            h_n: self.spec.h.n(),
            l: self.spec.l,
            product_n: self.coloring.len(),
            sizes: self.sizes.clone(),
            coloring: self.coloring.colors().to_vec(),
            permutation: self.permutation.clone(),
        }
    }
}

/// Builds and validates a certificate from raw construction output.
pub(crate) fn seal_certificate(
    spec: CoronaSpec,
    colors: Vec<usize>,
    k: usize,
    theorem: TheoremTag,
    claim: Claim,
    permutation: Option<Vec<usize>>,
) -> Result<Certificate, ColorerError> {
    let product = corona_power(&spec, DEFAULT_ORDER_CAP)?;
    let coloring = Coloring::new(k, colors)?;
    let report = analyze_coloring(&product, &coloring)?;
    if !report.proper {
        return Err(ColorerError::Internal(format!(
            "{theorem} construction produced an improper coloring"
        )));
    }
    if !report.equitable {
        return Err(ColorerError::Internal(format!(
            "{theorem} construction produced discrepancy {}",
            report.discrepancy
        )));
    }
    Ok(Certificate {
        spec,
        coloring,
        theorem,
        claim,
        claimed_k: k,
        sizes: report.sizes,
        permutation,
    })
}

/// Checks that `c` is proper on `g`; returns the analysis.
pub(crate) fn require_proper(
    g: &Graph,
    c: &Coloring,
    what: &str,
) -> Result<crate::coloring::ColoringReport, ColorerError> {
    let report = analyze_coloring(g, c)?;
    if !report.proper {
        return Err(ColorerError::Precondition(format!("{what} is not proper")));
    }
    Ok(report)
}

/// Checks that `c` is a proper equitable coloring of `g` with exactly `k`
/// declared colors.
pub(crate) fn require_equitable(
    g: &Graph,
    c: &Coloring,
    k: usize,
    what: &str,
) -> Result<(), ColorerError> {
    if c.k() != k {
        return Err(ColorerError::Precondition(format!(
            "{what} declares {} colors, expected {k}",
            c.k()
        )));
    }
    let report = require_proper(g, c, what)?;
    if !report.equitable {
        return Err(ColorerError::Precondition(format!(
            "{what} is not equitable (discrepancy {})",
            report.discrepancy
        )));
    }
    Ok(())
}

/// Colorings of the base graph available to the dispatcher, either supplied
/// or found by the oracle.
struct BaseColorings {
    eq3: Option<Coloring>,
    eq4: Option<Coloring>,
    supplied: Vec<Coloring>,
}

impl BaseColorings {
    fn collect(g: &Graph, supplied: &[Coloring], oracle: Option<&SearchLimits>) -> Self {
        let mut eq3 = None;
        let mut eq4 = None;
        for c in supplied {
            if c.len() != g.n() {
                continue;
            }
            let Ok(report) = analyze_coloring(g, c) else {
                continue;
            };
            if !report.proper || !report.equitable {
                continue;
            }
            if c.k() == 3 && eq3.is_none() {
                eq3 = Some(c.clone());
            }
            if c.k() == 4 && eq4.is_none() {
                eq4 = Some(c.clone());
            }
        }
        if let Some(limits) = oracle {
            if g.n() <= limits.max_vertices {
                if eq3.is_none() {
                    eq3 = oracle::is_equitably_k_colorable(g, 3, limits).unwrap_or(None);
                }
                if eq4.is_none() {
                    eq4 = oracle::is_equitably_k_colorable(g, 4, limits).unwrap_or(None);
                }
            }
        }
        BaseColorings {
            eq3,
            eq4,
            supplied: supplied.to_vec(),
        }
    }

    /// Any supplied proper coloring using at most `kmax` colors, or an
    /// oracle-found one.
    fn proper_within(
        &self,
        g: &Graph,
        kmax: usize,
        oracle: Option<&SearchLimits>,
    ) -> Option<Coloring> {
        for c in &self.supplied {
            if c.len() != g.n() || c.max_color_used() > kmax {
                continue;
            }
            if let Ok(report) = analyze_coloring(g, c) {
                if report.proper {
                    return Some(c.clone());
                }
            }
        }
        for c in [&self.eq3, &self.eq4].into_iter().flatten() {
            if c.max_color_used() <= kmax {
                return Some(c.clone());
            }
        }
        let limits = oracle?;
        if g.n() > limits.max_vertices {
            return None;
        }
        oracle::proper_k_coloring(g, kmax, limits).unwrap_or(None)
    }

    /// Equitable coloring with exactly `k` declared colors.
    fn equitable_k(
        &self,
        g: &Graph,
        k: usize,
        oracle: Option<&SearchLimits>,
    ) -> Option<Coloring> {
        match k {
            3 => self.eq3.clone(),
            4 => self.eq4.clone(),
            _ => {
                for c in &self.supplied {
                    if c.k() != k || c.len() != g.n() {
                        continue;
                    }
                    if let Ok(report) = analyze_coloring(g, c) {
                        if report.proper && report.equitable {
                            return Some(c.clone());
                        }
                    }
                }
                let limits = oracle?;
                if g.n() > limits.max_vertices {
                    return None;
                }
                oracle::is_equitably_k_colorable(g, k, limits).unwrap_or(None)
            }
        }
    }
}

/// Selects and runs the strongest applicable route for `G ∘^l H`.
///
/// Preference order: equality with 3 colors, then equality with 4, then
/// bounds with 4, then the generic `m+1` bound obtained by treating `H` as a
/// subgraph of `K_m`. Base colorings missing from `colorings` are requested
/// from the oracle when `oracle` is set and `G` is small enough.
pub fn dispatch(
    g: &Graph,
    colorings: &[Coloring],
    shape: &HShape,
    l: usize,
    oracle: Option<&SearchLimits>,
) -> Result<Certificate, ColorerError> {
    if l == 0 {
        return Err(ColorerError::Precondition("level must be at least 1".into()));
    }
    if g.n() == 0 {
        return Err(ColorerError::Precondition("base graph is empty".into()));
    }
    let m = shape.order();
    if m == 0 {
        return Err(ColorerError::Precondition("H is empty".into()));
    }
    let base = BaseColorings::collect(g, colorings, oracle);
    let mut notes: Vec<String> = Vec::new();

    match shape {
        HShape::Complete(_) => {}
        HShape::Path(1) => {} // P1 handles K_1 attachments below
        HShape::EvenCycle(mm) => {
            return dispatch_even_cycle(g, &base, *mm, l, oracle, &mut notes);
        }
        HShape::OddCycle(mm) => {
            return dispatch_odd_cycle(g, &base, *mm, l, oracle, &mut notes);
        }
        HShape::Path(mm) => {
            return dispatch_path(g, &base, *mm, l, oracle, &mut notes);
        }
        HShape::Multipartite(_) | HShape::General { .. } => {
            return dispatch_multipartite(g, &base, shape, l, oracle, &mut notes);
        }
    }

    // Complete graphs (and P_1 = K_1): the m+1 equality route.
    match base.proper_within(g, m + 1, oracle) {
        Some(c) => color_complete_corona(g, &c, m, l),
        None => Err(ColorerError::NoApplicableRoute(format!(
            "no proper coloring of G with at most {} colors available",
            m + 1
        ))),
    }
}

fn dispatch_even_cycle(
    g: &Graph,
    base: &BaseColorings,
    m: usize,
    l: usize,
    oracle: Option<&SearchLimits>,
    notes: &mut Vec<String>,
) -> Result<Certificate, ColorerError> {
    let n = g.n();
    if n == 1 {
        return color_k1_cycle_corona(m, l);
    }
    let k = m / 2;
    // Equality with 3 colors: any n when m = 4, otherwise 3 | n.
    if k == 2 || n.is_multiple_of(3) {
        if let Some(c3) = &base.eq3 {
            return color_even_cycle_corona_3(g, c3, k, l);
        }
        notes.push("no equitable 3-coloring of G".into());
    }
    if let Some(c4) = &base.eq4 {
        if k >= 3 {
            return color_even_cycle_corona_4(g, c4, k, l);
        }
        // m = 4 without an equitable 3-coloring: rotation when 4 | n, else
        // the balancing fallback. Neither is covered by a named route.
        if n.is_multiple_of(4) {
            let parts = vec![vec![0, 2], vec![1, 3]];
            let h = Graph::cycle(4)?;
            return color_multipartite_corona(g, c4, &h, &parts, l);
        }
        return cycles::even_cycle_fallback_4(g, c4, l);
    }
    notes.push("no equitable 4-coloring of G".into());
    fallback_supergraph(g, base, &HShape::EvenCycle(m), l, oracle, notes)
}

fn dispatch_odd_cycle(
    g: &Graph,
    base: &BaseColorings,
    m: usize,
    l: usize,
    oracle: Option<&SearchLimits>,
    notes: &mut Vec<String>,
) -> Result<Certificate, ColorerError> {
    if g.n() == 1 {
        return color_k1_cycle_corona(m, l);
    }
    if let Some(c4) = &base.eq4 {
        return color_odd_cycle_corona(g, c4, m / 2, l);
    }
    notes.push("no equitable 4-coloring of G".into());
    if m == 3 {
        // C_3 = K_3: the complete route claims the same value with a weaker
        // precondition.
        if let Some(c) = base.proper_within(g, 4, oracle) {
            return color_complete_corona(g, &c, 3, l);
        }
        notes.push("no proper 4-coloring of G".into());
    }
    fallback_supergraph(g, base, &HShape::OddCycle(m), l, oracle, notes)
}

fn dispatch_path(
    g: &Graph,
    base: &BaseColorings,
    m: usize,
    l: usize,
    oracle: Option<&SearchLimits>,
    notes: &mut Vec<String>,
) -> Result<Certificate, ColorerError> {
    let n = g.n();
    if n == 1 {
        return color_k1_path_corona(m, l);
    }
    if m >= 2 && (m <= 5 || n.is_multiple_of(3)) {
        if let Some(c3) = &base.eq3 {
            return color_path_corona_3(g, c3, m, l);
        }
        notes.push("no equitable 3-coloring of G".into());
    }
    if m >= 6 {
        if let Some(c4) = &base.eq4 {
            return color_path_corona_4(g, c4, m, l);
        }
        notes.push("no equitable 4-coloring of G".into());
    }
    fallback_supergraph(g, base, &HShape::Path(m), l, oracle, notes)
}

fn dispatch_multipartite(
    g: &Graph,
    base: &BaseColorings,
    shape: &HShape,
    l: usize,
    oracle: Option<&SearchLimits>,
    notes: &mut Vec<String>,
) -> Result<Certificate, ColorerError> {
    let n = g.n();
    let (h, parts) = match shape {
        HShape::Multipartite(sizes) => (
            Graph::complete_multipartite(sizes)?,
            Graph::consecutive_parts(sizes),
        ),
        HShape::General { graph, parts } => (graph.clone(), parts.clone()),
        _ => unreachable!("dispatch_multipartite called on a non-partitioned shape"),
    };
    let r = parts.len();
    let m = h.n();
    if n == 1 && l == 1 {
        // A single level around one vertex: the hub takes its own class and
        // each part pairs up internally, which needs 1 + sum(ceil(|X_j|/2))
        // colors and never exceeds the product's max degree.
        return k1_paired_parts(g, h, &parts);
    }
    // Smallest k with k >= r+1, k | n and an equitable k-coloring available.
    for k in (r + 1)..=n {
        if !n.is_multiple_of(k) || k > m + 1 {
            // Beyond m+1 the generic bound is at least as good.
            if k > m + 1 {
                break;
            }
            continue;
        }
        if let Some(ck) = base.equitable_k(g, k, oracle) {
            return color_multipartite_corona(g, &ck, &h, &parts, l);
        }
        notes.push(format!("no equitable {k}-coloring of G"));
    }
    fallback_supergraph(g, base, shape, l, oracle, notes)
}

fn k1_paired_parts(
    g: &Graph,
    h: Graph,
    parts: &[Vec<usize>],
) -> Result<Certificate, ColorerError> {
    let m = h.n();
    let mut colors = vec![0usize; m + 1];
    colors[0] = 1;
    let mut next = 2usize;
    for part in parts {
        for pair in part.chunks(2) {
            for &v in pair {
                if v >= m || colors[1 + v] != 0 {
                    return Err(ColorerError::Precondition(
                        "parts must partition V(H)".into(),
                    ));
                }
                colors[1 + v] = next;
            }
            next += 1;
        }
    }
    if colors.contains(&0) {
        return Err(ColorerError::Precondition(
            "parts do not cover all of V(H)".into(),
        ));
    }
    let spec = CoronaSpec::new(g.clone(), h, 1)?;
    seal_certificate(
        spec,
        colors,
        next - 1,
        TheoremTag::Fallback,
        Claim::UpperBound,
        None,
    )
}

/// The generic bound: treat `H` as a subgraph of `K_m`, color the complete
/// pattern, reuse the identical vertex coloring on the real product.
fn fallback_supergraph(
    g: &Graph,
    base: &BaseColorings,
    shape: &HShape,
    l: usize,
    oracle: Option<&SearchLimits>,
    notes: &[String],
) -> Result<Certificate, ColorerError> {
    let m = shape.order();
    let Some(c) = base.proper_within(g, m + 1, oracle) else {
        return Err(ColorerError::NoApplicableRoute(format!(
            "tried: {}; and no proper coloring of G with at most {} colors",
            notes.join("; "),
            m + 1
        )));
    };
    let h = shape.realize()?;
    complete::complete_pattern_certificate(
        g,
        &c,
        h,
        l,
        TheoremTag::Fallback,
        Claim::UpperBound,
    )
}
