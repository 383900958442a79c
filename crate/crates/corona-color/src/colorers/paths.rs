//! Path attachments.
//!
//! Three colors suffice for `m <= 5` and whenever `3 | n`: copies of `P_2`
//! take one vertex of each free color, copies of `P_4` alternate the two free
//! colors, and copies of `P_3`/`P_5` split `(2,1)` or `(3,2)` between them
//! with the orientation chosen by exact balancing; `3 | N` levels use the
//! rotation over the path bipartition. For `m >= 6` the product is colored as
//! a subgraph of the cycle on the same vertices: the cycle coloring is reused
//! verbatim, and for even `m` with `3 ∤ n` the forced per-copy counts make
//! 4 colors necessary as well, so the bound tightens to an equality.

use super::cycles::{extend_colors_even4, extend_colors_odd4, sizes_of};
use super::fill::path_fill;
use super::multipartite::rotation_extend;
use super::{seal_certificate, Certificate, Claim, ColorerError, TheoremTag};
use crate::coloring::Coloring;
use crate::corona::CoronaSpec;
use crate::graph::Graph;

/// Path bipartition (even positions, odd positions).
fn path_parts(m: usize) -> Vec<Vec<usize>> {
    vec![(0..m).step_by(2).collect(), (1..m).step_by(2).collect()]
}

/// One three-color path level, in place.
pub(crate) fn extend_colors_path3(colors: &mut Vec<usize>, m: usize) -> Result<(), ColorerError> {
    let n = colors.len();
    let sizes = sizes_of(colors, 3);
    let all_equal = sizes.iter().all(|&s| s == sizes[0]);
    if n.is_multiple_of(3) && all_equal {
        rotation_extend(colors, 3, &path_parts(m), m);
        return Ok(());
    }
    match m {
        2 => {
            for u in 0..n {
                let (a, b) = two_others(colors[u]);
                colors.push(a);
                colors.push(b);
            }
            Ok(())
        }
        4 => {
            for u in 0..n {
                let (a, b) = two_others(colors[u]);
                colors.extend([a, b, a, b]);
            }
            Ok(())
        }
        3 | 5 => {
            let hi = m.div_ceil(2) as u64;
            let lo = (m / 2) as u64;
            let menu = move |owner: usize| -> Vec<Vec<u64>> {
                let (a, b) = two_others(owner);
                let mut heavy_a = vec![0u64; 3];
                heavy_a[a - 1] = hi;
                heavy_a[b - 1] = lo;
                let mut heavy_b = vec![0u64; 3];
                heavy_b[a - 1] = lo;
                heavy_b[b - 1] = hi;
                vec![heavy_a, heavy_b]
            };
            super::cycles::dp_extend_level(colors, 3, m, &[&menu], &path_fill, "path level")
        }
        _ => Err(ColorerError::Precondition(format!(
            "three-color path level needs m in {{2,3,4,5}} or 3 | N, got m = {m}, N = {n}"
        ))),
    }
}

fn two_others(owner: usize) -> (usize, usize) {
    match owner {
        1 => (2, 3),
        2 => (1, 3),
        _ => (1, 2),
    }
}

/// Equality route on 3 colors for `G ∘^l P_m`: `m ∈ {2,3,4,5}` or `3 | n`.
pub fn color_path_corona_3(
    g: &Graph,
    c3: &Coloring,
    m: usize,
    l: usize,
) -> Result<Certificate, ColorerError> {
    let n = g.n();
    if n < 2 {
        return Err(ColorerError::Precondition("base graph needs n >= 2".into()));
    }
    if l == 0 {
        return Err(ColorerError::Precondition("level must be at least 1".into()));
    }
    if m < 2 {
        return Err(ColorerError::Precondition(
            "three-color path route needs m >= 2".into(),
        ));
    }
    if m > 5 && !n.is_multiple_of(3) {
        return Err(ColorerError::Precondition(
            "three-color path route needs m <= 5 or 3 | n".into(),
        ));
    }
    super::require_equitable(g, c3, 3, "input coloring")?;
    let mut colors = c3.colors().to_vec();
    for _ in 0..l {
        extend_colors_path3(&mut colors, m)?;
    }
    let tag = if m == 4 || n.is_multiple_of(3) {
        TheoremTag::C9
    } else {
        TheoremTag::T10
    };
    let spec = CoronaSpec::new(g.clone(), Graph::path(m)?, l)?;
    seal_certificate(spec, colors, 3, tag, Claim::Equality, None)
}

/// Four-color route for `G ∘^l P_m`, `m >= 6`, via the cycle on the same
/// vertex set. Equality when `m` is even and `3` does not divide `n`.
pub fn color_path_corona_4(
    g: &Graph,
    c4: &Coloring,
    m: usize,
    l: usize,
) -> Result<Certificate, ColorerError> {
    let n = g.n();
    if n < 2 {
        return Err(ColorerError::Precondition("base graph needs n >= 2".into()));
    }
    if m < 6 {
        return Err(ColorerError::Precondition(
            "four-color path route needs m >= 6".into(),
        ));
    }
    if l == 0 {
        return Err(ColorerError::Precondition("level must be at least 1".into()));
    }
    super::require_equitable(g, c4, 4, "input coloring")?;
    let mut colors = c4.colors().to_vec();
    let mut permutation = None;
    for level in 1..=l {
        if m.is_multiple_of(2) {
            let perm = extend_colors_even4(&mut colors, m / 2, true)?;
            if level == 1 {
                permutation = perm;
            }
        } else {
            extend_colors_odd4(&mut colors, m / 2)?;
        }
    }
    let claim = if m.is_multiple_of(2) && !n.is_multiple_of(3) {
        Claim::Equality
    } else {
        Claim::UpperBound
    };
    let spec = CoronaSpec::new(g.clone(), Graph::path(m)?, l)?;
    seal_certificate(spec, colors, 4, TheoremTag::C11, claim, permutation)
}
