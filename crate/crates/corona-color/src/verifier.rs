//! Certificate validation and the survey harness.
//!
//! A certificate passes when its coloring is proper and equitable on the
//! product with exactly the claimed number of declared colors. Equality
//! claims are additionally confirmed against the oracle whenever the product
//! is within the search limit: no smaller color count may admit an equitable
//! coloring. Products above the limit keep the structural verdict and carry a
//! "not verified (size)" note instead.

use serde::Serialize;

use crate::coloring::analyze_coloring;
use crate::colorers::{dispatch, Certificate, Claim, ColorerError, HShape, TheoremTag};
use crate::coloring::Coloring;
use crate::corona::{corona_power, CoronaSpec, DEFAULT_ORDER_CAP};
use crate::graph::{Graph, GraphError};
use crate::oracle::{self, OracleError, SearchLimits};

/// One named check inside a verification report.
#[derive(Debug, Clone, Serialize)]
pub struct CheckLine {
    pub name: String,
    pub pass: bool,
    pub note: String,
}

/// How far the oracle got on an equality claim.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum OracleStatus {
    /// Every smaller color count was refuted.
    Confirmed,
    /// Structural checks only; the claim was a bound.
    NotApplicable,
    /// Product larger than the search limit.
    SkippedSize,
    /// A search timed out; the claim stands unrefuted but unconfirmed.
    TimedOut,
    /// A smaller color count admits an equitable coloring: claim is wrong.
    Refuted,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub pass: bool,
    pub oracle: OracleStatus,
    pub checks: Vec<CheckLine>,
}

impl VerifyReport {
    fn push(&mut self, name: &str, pass: bool, note: impl Into<String>) {
        self.checks.push(CheckLine {
            name: name.into(),
            pass,
            note: note.into(),
        });
        self.pass &= pass;
    }
}

/// Validates a certificate against the product graph it claims to color.
pub fn verify_certificate(
    product: &Graph,
    cert: &Certificate,
    limits: &SearchLimits,
) -> VerifyReport {
    let mut report = VerifyReport {
        pass: true,
        oracle: OracleStatus::NotApplicable,
        checks: Vec::new(),
    };

    let analysis = match analyze_coloring(product, &cert.coloring) {
        Ok(a) => a,
        Err(e) => {
            report.push("coverage", false, e.to_string());
            return report;
        }
    };
    report.push("coverage", true, format!("{} vertices", product.n()));
    report.push("proper", analysis.proper, "no edge joins equal colors");
    report.push(
        "equitable",
        analysis.equitable,
        format!("discrepancy {}", analysis.discrepancy),
    );
    report.push(
        "declared-k",
        cert.coloring.k() == cert.claimed_k,
        format!("declared {}, claimed {}", cert.coloring.k(), cert.claimed_k),
    );
    report.push(
        "sizes",
        analysis.sizes == cert.sizes,
        "recorded class sizes match the coloring",
    );

    match check_ecc(product, cert.claimed_k) {
        Ok(ok) => report.push(
            "ecc",
            ok,
            format!("k = {} vs max degree {}", cert.claimed_k, product.max_degree()),
        ),
        Err(e) => report.push("ecc", false, e.to_string()),
    }

    if cert.claim == Claim::Equality && report.pass {
        report.oracle = confirm_minimality(product, cert.claimed_k, limits, &mut report);
    }
    report
}

fn confirm_minimality(
    product: &Graph,
    k: usize,
    limits: &SearchLimits,
    report: &mut VerifyReport,
) -> OracleStatus {
    if product.n() > limits.max_vertices {
        report.push(
            "minimality",
            true,
            format!("not verified (size {} > {})", product.n(), limits.max_vertices),
        );
        return OracleStatus::SkippedSize;
    }
    for smaller in 1..k {
        match oracle::is_equitably_k_colorable(product, smaller, limits) {
            Ok(None) => {}
            Ok(Some(_)) => {
                report.push(
                    "minimality",
                    false,
                    format!("equitable {smaller}-coloring exists, claim k = {k} is not minimal"),
                );
                return OracleStatus::Refuted;
            }
            Err(OracleError::Timeout(d)) => {
                report.push(
                    "minimality",
                    true,
                    format!("not verified (timeout {d:?} at k = {smaller})"),
                );
                return OracleStatus::TimedOut;
            }
            Err(e) => {
                report.push("minimality", true, format!("not verified ({e})"));
                return OracleStatus::TimedOut;
            }
        }
    }
    report.push("minimality", true, format!("no equitable coloring below {k}"));
    OracleStatus::Confirmed
}

/// True when `k_used <= max_degree(product)`, or the product is exempt
/// (complete or an odd cycle). Errors on disconnected input.
pub fn check_ecc(product: &Graph, k_used: usize) -> Result<bool, GraphError> {
    if !product.is_connected() {
        return Err(GraphError::InvalidParameter(
            "ECC check needs a connected graph".into(),
        ));
    }
    Ok(product.is_complete() || product.is_odd_cycle() || k_used <= product.max_degree())
}

// ---------------------------------------------------------------------------
// Survey
// ---------------------------------------------------------------------------

/// One survey instance: a base graph with any colorings to hand the
/// dispatcher, an attachment shape, a level, and an optional expected cell.
#[derive(Debug, Clone)]
pub struct SurveyRow {
    pub id: String,
    pub g: Graph,
    pub colorings: Vec<Coloring>,
    pub shape: HShape,
    pub l: usize,
    pub expected: Option<(Claim, usize)>,
}

/// Outcome of one survey row.
#[derive(Debug, Clone, Serialize)]
pub struct SurveyOutcome {
    pub id: String,
    pub theorem: Option<TheoremTag>,
    pub claim: Option<Claim>,
    pub k: Option<usize>,
    /// Exact equitable chromatic number when the product is within oracle
    /// reach.
    pub oracle_value: Option<usize>,
    pub note: String,
    /// Claim consistent with the oracle and with the expected cell (if any).
    pub matched: bool,
}

/// Runs the dispatcher over each row and cross-checks the claims. Rows run
/// in input order (optionally chunked over `jobs` threads); the report order
/// is fixed either way. Per-row failures and timeouts are recorded, never
/// fatal.
pub fn survey_table(rows: &[SurveyRow], limits: &SearchLimits, jobs: usize) -> Vec<SurveyOutcome> {
    if jobs <= 1 || rows.len() <= 1 {
        return rows.iter().map(|r| survey_one(r, limits)).collect();
    }
    let mut outcomes: Vec<Option<SurveyOutcome>> = vec![None; rows.len()];
    let chunk = rows.len().div_ceil(jobs);
    std::thread::scope(|scope| {
        for (slot, row_chunk) in outcomes.chunks_mut(chunk).zip(rows.chunks(chunk)) {
            scope.spawn(move || {
                for (out, row) in slot.iter_mut().zip(row_chunk) {
                    *out = Some(survey_one(row, limits));
                }
            });
        }
    });
    outcomes.into_iter().map(|o| o.expect("filled")).collect()
}

fn survey_one(row: &SurveyRow, limits: &SearchLimits) -> SurveyOutcome {
    let cert = match dispatch(&row.g, &row.colorings, &row.shape, row.l, Some(limits)) {
        Ok(c) => c,
        Err(e) => {
            return SurveyOutcome {
                id: row.id.clone(),
                theorem: None,
                claim: None,
                k: None,
                oracle_value: None,
                note: format!("dispatch failed: {e}"),
                matched: false,
            }
        }
    };
    let product = match cert.product() {
        Ok(p) => p,
        Err(e) => {
            return SurveyOutcome {
                id: row.id.clone(),
                theorem: Some(cert.theorem),
                claim: Some(cert.claim),
                k: Some(cert.claimed_k),
                oracle_value: None,
                note: format!("product build failed: {e}"),
                matched: false,
            }
        }
    };
    let verify = verify_certificate(&product, &cert, limits);
    let mut matched = verify.pass;
    let mut notes: Vec<String> = Vec::new();
    if !verify.pass {
        notes.push("verification failed".into());
    }

    // Exact value: the certificate witnesses k, so only smaller counts need
    // searching.
    let oracle_value = if product.n() <= limits.max_vertices {
        match smallest_equitable_up_to(&product, cert.claimed_k, limits) {
            Ok(v) => Some(v),
            Err(e) => {
                notes.push(format!("oracle: {e}"));
                None
            }
        }
    } else {
        notes.push(format!("oracle skipped (order {})", product.n()));
        None
    };
    if let Some(value) = oracle_value {
        match cert.claim {
            Claim::Equality => {
                if value != cert.claimed_k {
                    matched = false;
                    notes.push(format!("oracle value {value} != claimed {}", cert.claimed_k));
                }
            }
            Claim::UpperBound => {
                if value > cert.claimed_k {
                    matched = false;
                    notes.push(format!("oracle value {value} above bound {}", cert.claimed_k));
                }
            }
        }
    }
    if let Some((claim, k)) = row.expected {
        if claim != cert.claim || k != cert.claimed_k {
            matched = false;
            notes.push(format!(
                "expected {claim} {k}, got {} {}",
                cert.claim, cert.claimed_k
            ));
        }
    }
    SurveyOutcome {
        id: row.id.clone(),
        theorem: Some(cert.theorem),
        claim: Some(cert.claim),
        k: Some(cert.claimed_k),
        oracle_value,
        note: notes.join("; "),
        matched,
    }
}

/// Smallest `j <= k` admitting an equitable j-coloring of `g`. The caller
/// guarantees `k` itself does (witnessed by a certificate).
fn smallest_equitable_up_to(
    g: &Graph,
    k: usize,
    limits: &SearchLimits,
) -> Result<usize, OracleError> {
    for j in 1..k {
        if oracle::is_equitably_k_colorable(g, j, limits)?.is_some() {
            return Ok(j);
        }
    }
    Ok(k)
}

/// The bundled desk-scale suite: four base graphs crossed with ten
/// attachment shapes at levels 1 and 2, each with its expected claim.
pub fn bundled_suite() -> Vec<SurveyRow> {
    let bases: Vec<(Graph, Vec<Coloring>)> = vec![
        (
            Graph::path(3).unwrap(),
            vec![Coloring::new(3, vec![1, 2, 3]).unwrap()],
        ),
        (
            Graph::cycle(5).unwrap(),
            vec![Coloring::new(3, vec![1, 2, 1, 2, 3]).unwrap()],
        ),
        (
            Graph::path(4).unwrap(),
            vec![Coloring::new(4, vec![1, 2, 3, 4]).unwrap()],
        ),
        (
            Graph::cycle(6).unwrap(),
            vec![Coloring::new(3, vec![1, 2, 3, 1, 2, 3]).unwrap()],
        ),
    ];
    let shapes: Vec<HShape> = vec![
        HShape::Path(2),
        HShape::Path(3),
        HShape::Path(4),
        HShape::Path(5),
        HShape::Path(6),
        HShape::EvenCycle(4),
        HShape::EvenCycle(6),
        HShape::OddCycle(5),
        HShape::Complete(2),
        HShape::Complete(3),
    ];
    let mut rows = Vec::new();
    for (g, colorings) in &bases {
        for shape in &shapes {
            for l in [1usize, 2] {
                let expected = expected_cell(g.n(), shape);
                let id = format!(
                    "{} x {:?} l={}",
                    g.name().unwrap_or("G"),
                    shape_id(shape),
                    l
                );
                rows.push(SurveyRow {
                    id,
                    g: g.clone(),
                    colorings: colorings.clone(),
                    shape: shape.clone(),
                    l,
                    expected: Some(expected),
                });
            }
        }
    }
    rows
}

fn shape_id(shape: &HShape) -> String {
    match shape {
        HShape::Complete(m) => format!("K{m}"),
        HShape::EvenCycle(m) | HShape::OddCycle(m) => format!("C{m}"),
        HShape::Path(m) => format!("P{m}"),
        HShape::Multipartite(sizes) => format!("K{sizes:?}"),
        HShape::General { graph, .. } => graph.name().unwrap_or("H").to_string(),
    }
}

/// The expected claim for the bundled bases (all of which are equitably
/// 3-colorable, so the strongest row of the summary applies).
fn expected_cell(n: usize, shape: &HShape) -> (Claim, usize) {
    match shape {
        HShape::Complete(m) => (Claim::Equality, m + 1),
        HShape::EvenCycle(4) => (Claim::Equality, 3),
        HShape::EvenCycle(_) => {
            if n.is_multiple_of(3) {
                (Claim::Equality, 3)
            } else {
                (Claim::Equality, 4)
            }
        }
        HShape::OddCycle(_) => (Claim::Equality, 4),
        HShape::Path(m) if *m <= 5 => (Claim::Equality, 3),
        HShape::Path(m) if *m % 2 == 0 => {
            if n.is_multiple_of(3) {
                (Claim::Equality, 3)
            } else {
                (Claim::Equality, 4)
            }
        }
        HShape::Path(_) => {
            if n.is_multiple_of(3) {
                (Claim::Equality, 3)
            } else {
                (Claim::UpperBound, 4)
            }
        }
        HShape::Multipartite(sizes) => (Claim::UpperBound, sizes.len() + 1),
        HShape::General { parts, .. } => (Claim::UpperBound, parts.len() + 1),
    }
}

/// Builds the product for a spec, capped.
pub fn build_product(spec: &CoronaSpec) -> Result<Graph, ColorerError> {
    Ok(corona_power(spec, DEFAULT_ORDER_CAP)?)
}
