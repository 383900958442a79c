//! Realizes per-copy color counts as explicit proper sequences along a cycle
//! or path.
//!
//! Feasibility: a cyclic sequence of length `L` avoiding equal neighbours
//! (including the wrap pair) exists iff the largest count is at most
//! `floor(L/2)`; for paths the bound is `ceil(L/2)`. Construction: expand the
//! counts sorted by multiplicity (descending) and deal them onto even
//! positions first, then odd positions. Two occurrences of one color then sit
//! at least two apart, so the result is proper without any repair step.

use super::ColorerError;

/// Cyclically proper sequence of length `len` with exactly the requested
/// counts. Counts of zero are ignored; positions `i` and `i+1 mod len` always
/// receive different colors.
pub fn cycle_fill(len: usize, counts: &[(usize, usize)]) -> Result<Vec<usize>, ColorerError> {
    let active = check_counts(len, counts)?;
    let max = active.iter().map(|&(_, c)| c).max().unwrap_or(0);
    if max > len / 2 {
        return Err(ColorerError::InfeasibleCounts(format!(
            "cyclic fill of length {len} cannot place {max} copies of one color"
        )));
    }
    Ok(deal(len, &active))
}

/// Proper (non-cyclic) sequence of length `len` with exactly the requested
/// counts.
pub fn path_fill(len: usize, counts: &[(usize, usize)]) -> Result<Vec<usize>, ColorerError> {
    let active = check_counts(len, counts)?;
    let max = active.iter().map(|&(_, c)| c).max().unwrap_or(0);
    if max > len.div_ceil(2) {
        return Err(ColorerError::InfeasibleCounts(format!(
            "path fill of length {len} cannot place {max} copies of one color"
        )));
    }
    Ok(deal(len, &active))
}

fn check_counts(len: usize, counts: &[(usize, usize)]) -> Result<Vec<(usize, usize)>, ColorerError> {
    let total: usize = counts.iter().map(|&(_, c)| c).sum();
    if total != len {
        return Err(ColorerError::InfeasibleCounts(format!(
            "counts sum to {total}, expected {len}"
        )));
    }
    let mut active: Vec<(usize, usize)> = counts.iter().copied().filter(|&(_, c)| c > 0).collect();
    // Heaviest first; ties by color index for determinism.
    active.sort_by(|a, b| b.1.cmp(&a.1).then(a.0.cmp(&b.0)));
    Ok(active)
}

fn deal(len: usize, sorted_counts: &[(usize, usize)]) -> Vec<usize> {
    let mut seq = vec![0usize; len];
    let mut positions = (0..len).step_by(2).chain((1..len).step_by(2));
    for &(color, count) in sorted_counts {
        for _ in 0..count {
            seq[positions.next().expect("counts sum to len")] = color;
        }
    }
    debug_assert!(seq.windows(2).all(|w| w[0] != w[1]));
    seq
}

#[cfg(test)]
mod tests {
    use super::*;

    fn counts_of(seq: &[usize]) -> std::collections::BTreeMap<usize, usize> {
        let mut m = std::collections::BTreeMap::new();
        for &c in seq {
            *m.entry(c).or_insert(0) += 1;
        }
        m
    }

    fn cyclically_proper(seq: &[usize]) -> bool {
        (0..seq.len()).all(|i| seq[i] != seq[(i + 1) % seq.len()])
    }

    #[test]
    fn cycle_fill_examples() {
        let seq = cycle_fill(6, &[(1, 3), (2, 2), (3, 1)]).unwrap();
        assert!(cyclically_proper(&seq));
        assert_eq!(counts_of(&seq), [(1, 3), (2, 2), (3, 1)].into_iter().collect());

        let seq = cycle_fill(6, &[(1, 3), (2, 3)]).unwrap();
        assert_eq!(seq, vec![1, 2, 1, 2, 1, 2]);

        assert!(cycle_fill(4, &[(1, 3), (2, 1)]).is_err());
        assert!(cycle_fill(5, &[(1, 3), (2, 2)]).is_err());
        assert!(cycle_fill(4, &[(1, 2), (2, 1)]).is_err()); // sums to 3
    }

    #[test]
    fn path_fill_examples() {
        assert_eq!(path_fill(3, &[(1, 2), (2, 1)]).unwrap(), vec![1, 2, 1]);
        assert_eq!(
            path_fill(5, &[(1, 3), (2, 2)]).unwrap(),
            vec![1, 2, 1, 2, 1]
        );
        assert_eq!(path_fill(2, &[(1, 1), (2, 1)]).unwrap(), vec![1, 2]);
        assert!(path_fill(4, &[(1, 3), (2, 1)]).is_err());
    }

    #[test]
    fn zero_counts_are_ignored() {
        let seq = cycle_fill(4, &[(1, 2), (2, 0), (3, 2)]).unwrap();
        assert!(cyclically_proper(&seq));
        assert_eq!(counts_of(&seq), [(1, 2), (3, 2)].into_iter().collect());
    }
}
