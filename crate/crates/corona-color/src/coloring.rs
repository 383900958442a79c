//! Vertex colorings and their analysis: properness, class sizes, discrepancy,
//! equitability.

use serde::{Deserialize, Serialize};

use crate::graph::{Graph, GraphError};

/// A total assignment of vertices to colors `1..=k`. The declared `k` may
/// exceed the number of colors actually used; classes may be empty, and empty
/// classes count toward the discrepancy.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coloring {
    k: usize,
    colors: Vec<usize>,
}

impl Coloring {
    pub fn new(k: usize, colors: Vec<usize>) -> Result<Self, GraphError> {
        for &c in &colors {
            if c == 0 || c > k {
                return Err(GraphError::ColorOutOfRange { color: c, k });
            }
        }
        Ok(Coloring { k, colors })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn color(&self, v: usize) -> usize {
        self.colors[v]
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    /// Size of each declared class, including empty ones.
    pub fn class_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0usize; self.k];
        for &c in &self.colors {
            sizes[c - 1] += 1;
        }
        sizes
    }

    /// Largest color actually used (0 when there are no vertices).
    pub fn max_color_used(&self) -> usize {
        self.colors.iter().copied().max().unwrap_or(0)
    }
}

/// The verdict of [`analyze_coloring`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ColoringReport {
    pub proper: bool,
    /// Per-class sizes over all `k` declared classes.
    pub sizes: Vec<usize>,
    /// Max class size minus min class size over the declared classes.
    pub discrepancy: usize,
    /// `discrepancy <= 1`.
    pub equitable: bool,
    /// `discrepancy == 0`.
    pub strongly_equitable: bool,
}

/// Checks a coloring against a graph: properness plus the class-size facts.
/// The coloring must cover every vertex exactly once.
pub fn analyze_coloring(g: &Graph, c: &Coloring) -> Result<ColoringReport, GraphError> {
    if c.len() != g.n() {
        return Err(GraphError::AssignmentSizeMismatch {
            expected: g.n(),
            got: c.len(),
        });
    }
    let proper = g.edges().all(|(u, v)| c.color(u) != c.color(v));
    let sizes = c.class_sizes();
    let discrepancy = match (sizes.iter().max(), sizes.iter().min()) {
        (Some(max), Some(min)) => max - min,
        _ => 0,
    };
    Ok(ColoringReport {
        proper,
        discrepancy,
        equitable: discrepancy <= 1,
        strongly_equitable: discrepancy == 0,
        sizes,
    })
}

/// Class sizes of a (possibly only implied) coloring of a corona level,
/// stamped with the level they describe. Sizes are kept as `u64` so the
/// recurrence can run far beyond graphs that are actually built.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassSizeVector {
    pub level: usize,
    pub sizes: Vec<u64>,
}

impl ClassSizeVector {
    pub fn new(level: usize, sizes: Vec<u64>) -> Self {
        ClassSizeVector { level, sizes }
    }

    pub fn total(&self) -> u64 {
        self.sizes.iter().sum()
    }

    pub fn max_difference(&self) -> u64 {
        match (self.sizes.iter().max(), self.sizes.iter().min()) {
            (Some(max), Some(min)) => max - min,
            _ => 0,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn p2_two_colors_is_strongly_equitable() {
        let g = Graph::path(2).unwrap();
        let c = Coloring::new(2, vec![1, 2]).unwrap();
        let r = analyze_coloring(&g, &c).unwrap();
        assert!(r.proper);
        assert_eq!(r.sizes, vec![1, 1]);
        assert_eq!(r.discrepancy, 0);
        assert!(r.equitable && r.strongly_equitable);
    }

    #[test]
    fn p2_monochromatic_is_improper() {
        let g = Graph::path(2).unwrap();
        let c = Coloring::new(2, vec![1, 1]).unwrap();
        assert!(!analyze_coloring(&g, &c).unwrap().proper);
    }

    #[test]
    fn empty_class_counts_toward_discrepancy() {
        let g = Graph::path(2).unwrap();
        let c = Coloring::new(3, vec![1, 2]).unwrap();
        let r = analyze_coloring(&g, &c).unwrap();
        assert!(r.proper);
        assert_eq!(r.sizes, vec![1, 1, 0]);
        assert_eq!(r.discrepancy, 1);
        assert!(r.equitable && !r.strongly_equitable);
    }

    #[test]
    fn rejects_color_out_of_range_and_size_mismatch() {
        assert!(Coloring::new(2, vec![1, 3]).is_err());
        assert!(Coloring::new(2, vec![0]).is_err());
        let g = Graph::path(3).unwrap();
        let c = Coloring::new(2, vec![1, 2]).unwrap();
        assert_eq!(
            analyze_coloring(&g, &c),
            Err(GraphError::AssignmentSizeMismatch { expected: 3, got: 2 })
        );
    }
}
