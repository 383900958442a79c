//! The complete-attachment route: every copy of `K_m` receives the `m` colors
//! its owner does not use, one each.
//!
//! After a single level every class size equals the previous product order,
//! so the output is strongly equitable from level 1 on regardless of how
//! unbalanced the input coloring was. The same per-copy pattern also colors
//! any `H` on `m` vertices properly (each copy vertex gets a distinct color
//! different from the owner), which is the generic `m+1` upper bound.

use super::{seal_certificate, Certificate, Claim, ColorerError, TheoremTag};
use crate::coloring::Coloring;
use crate::corona::CoronaSpec;
use crate::graph::Graph;

/// Colors `G ∘^l K_m` with exactly `m + 1` colors, an equality route.
/// Requires a proper coloring of `G` using colors within `1..=m+1`.
pub fn color_complete_corona(
    g: &Graph,
    c: &Coloring,
    m: usize,
    l: usize,
) -> Result<Certificate, ColorerError> {
    if m < 1 {
        return Err(ColorerError::Precondition("K_m needs m >= 1".into()));
    }
    complete_pattern_certificate(g, c, Graph::complete(m)?, l, TheoremTag::P1, Claim::Equality)
}

/// Shared construction: complete-pattern colors over copies of an arbitrary
/// `h`, sealed with the caller's tag and claim.
pub(crate) fn complete_pattern_certificate(
    g: &Graph,
    c: &Coloring,
    h: Graph,
    l: usize,
    theorem: TheoremTag,
    claim: Claim,
) -> Result<Certificate, ColorerError> {
    let m = h.n();
    super::require_proper(g, c, "input coloring")?;
    if c.max_color_used() > m + 1 {
        return Err(ColorerError::Precondition(format!(
            "input coloring uses color {} but only 1..={} are allowed",
            c.max_color_used(),
            m + 1
        )));
    }
    if l == 0 {
        return Err(ColorerError::Precondition("level must be at least 1".into()));
    }
    let mut colors = c.colors().to_vec();
    for _ in 0..l {
        let prev = colors.len();
        colors.reserve(prev * m);
        for u in 0..prev {
            let owner = colors[u];
            for color in 1..=m + 1 {
                if color != owner {
                    colors.push(color);
                }
            }
        }
    }
    let spec = CoronaSpec::new(g.clone(), h, l)?;
    seal_certificate(spec, colors, m + 1, theorem, claim, None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::analyze_coloring;

    #[test]
    fn triangle_with_k2_balances_immediately() {
        let g = Graph::cycle(3).unwrap();
        let c = Coloring::new(3, vec![1, 2, 3]).unwrap();
        let cert = color_complete_corona(&g, &c, 2, 1).unwrap();
        assert_eq!(cert.claimed_k, 3);
        assert_eq!(cert.sizes, vec![3, 3, 3]);
        assert_eq!(cert.claim, Claim::Equality);
    }

    #[test]
    fn two_levels_stay_strongly_equitable() {
        let g = Graph::cycle(3).unwrap();
        let c = Coloring::new(3, vec![1, 2, 3]).unwrap();
        let cert = color_complete_corona(&g, &c, 2, 2).unwrap();
        assert_eq!(cert.coloring.len(), 27);
        assert_eq!(cert.sizes, vec![9, 9, 9]);
    }

    #[test]
    fn k1_attachments_alternate() {
        let g = Graph::path(2).unwrap();
        let c = Coloring::new(2, vec![1, 2]).unwrap();
        let cert = color_complete_corona(&g, &c, 1, 1).unwrap();
        assert_eq!(cert.claimed_k, 2);
        assert_eq!(cert.sizes, vec![2, 2]);
    }

    #[test]
    fn unbalanced_input_still_balances() {
        // A star colored (1, 2, 2, 2): wildly unbalanced, still fine.
        let g = Graph::new(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let c = Coloring::new(3, vec![1, 2, 2, 2]).unwrap();
        let cert = color_complete_corona(&g, &c, 2, 1).unwrap();
        let product = cert.product().unwrap();
        let report = analyze_coloring(&product, &cert.coloring).unwrap();
        assert!(report.proper && report.strongly_equitable);
    }

    #[test]
    fn rejects_too_many_colors() {
        let g = Graph::complete(4).unwrap();
        let c = Coloring::new(4, vec![1, 2, 3, 4]).unwrap();
        assert!(color_complete_corona(&g, &c, 2, 1).is_err());
    }
}
