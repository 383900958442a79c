//! The rotation route for r-partite attachments.
//!
//! With an equitable k-coloring of `G` (class sizes all `n/k` since `k | n`)
//! and a partition of `H` into `r <= k-1` independent sets, part `X_j` of the
//! copy at an owner of class `i` goes to class `i - j (mod k)`. Spokes are
//! proper because `j` is never `0 (mod k)`; each class ends with exactly
//! `n(1 + |X_1| + ... + |X_r|)/k` vertices, so the output is strongly
//! equitable and the same argument applies to every further level. Parts
//! absent up to `k-1` behave as empty sets.

use super::{seal_certificate, Certificate, Claim, ColorerError, TheoremTag};
use crate::coloring::Coloring;
use crate::corona::CoronaSpec;
use crate::graph::Graph;

/// Colors `G ∘^l H` with the k-class rotation, an upper-bound route.
pub fn color_multipartite_corona(
    g: &Graph,
    c: &Coloring,
    h: &Graph,
    parts: &[Vec<usize>],
    l: usize,
) -> Result<Certificate, ColorerError> {
    let n = g.n();
    let k = c.k();
    let r = parts.len();
    if l == 0 {
        return Err(ColorerError::Precondition("level must be at least 1".into()));
    }
    validate_partition(h, parts)?;
    if k < 2 || r > k - 1 {
        return Err(ColorerError::Precondition(format!(
            "rotation needs r <= k-1 parts, got r = {r}, k = {k}"
        )));
    }
    if !n.is_multiple_of(k) {
        return Err(ColorerError::Precondition(format!(
            "rotation needs k | n, got n = {n}, k = {k}"
        )));
    }
    super::require_equitable(g, c, k, "input coloring")?;

    let mut colors = c.colors().to_vec();
    for _ in 0..l {
        rotation_extend(&mut colors, k, parts, h.n());
    }
    let spec = CoronaSpec::new(g.clone(), h.clone(), l)?;
    let tag = if r == k - 1 { TheoremTag::T2 } else { TheoremTag::C3 };
    seal_certificate(spec, colors, k, tag, Claim::UpperBound, None)
}

/// One rotation level, in place. Caller guarantees the current coloring is
/// strongly equitable with `k` classes and the parts are valid for `m`.
pub(crate) fn rotation_extend(colors: &mut Vec<usize>, k: usize, parts: &[Vec<usize>], m: usize) {
    let prev = colors.len();
    colors.reserve(prev * m);
    for u in 0..prev {
        let owner = colors[u];
        let mut copy = vec![0usize; m];
        for (j0, part) in parts.iter().enumerate() {
            let j = j0 + 1;
            let color = (owner + k - j - 1) % k + 1;
            for &hv in part {
                copy[hv] = color;
            }
        }
        colors.extend(copy);
    }
}

fn validate_partition(h: &Graph, parts: &[Vec<usize>]) -> Result<(), ColorerError> {
    let m = h.n();
    if parts.is_empty() {
        return Err(ColorerError::Precondition("partition has no parts".into()));
    }
    let mut seen = vec![false; m];
    for part in parts {
        if part.is_empty() {
            return Err(ColorerError::Precondition("empty part in partition".into()));
        }
        for &v in part {
            if v >= m {
                return Err(ColorerError::Precondition(format!(
                    "part vertex {v} out of range 0..{m}"
                )));
            }
            if seen[v] {
                return Err(ColorerError::Precondition(format!(
                    "vertex {v} appears in two parts"
                )));
            }
            seen[v] = true;
        }
        for (i, &u) in part.iter().enumerate() {
            for &v in &part[i + 1..] {
                if h.has_edge(u, v) {
                    return Err(ColorerError::Precondition(format!(
                        "part containing {u} and {v} is not independent"
                    )));
                }
            }
        }
    }
    if !seen.iter().all(|&s| s) {
        return Err(ColorerError::Precondition(
            "parts do not cover all of V(H)".into(),
        ));
    }
    Ok(())
}
