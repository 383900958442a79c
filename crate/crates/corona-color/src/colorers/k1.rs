//! Attachments to a single vertex: wheels, fans, and their iterated products.
//!
//! One level around `K_1` is a wheel (cycle rim) or fan (path rim); the hub
//! is adjacent to everything, so it sits alone in its class and the rim pairs
//! up into non-adjacent pairs, giving `ceil(m/2) + 1` colors. From the second
//! level on the picture changes completely: four colors always suffice (three
//! for a `C_4`/`P_4` rim and other short paths), because the first level may
//! be colored off-balance and the huge second level absorbs the slack. The
//! first-level colorings used here are therefore *not* equitable for large
//! rims; only the final level is.

use super::cycles::{dp_extend_level, extend_colors_even4, extend_colors_odd4};
use super::fill::cycle_fill;
use super::paths::extend_colors_path3;
use super::{seal_certificate, Certificate, Claim, ColorerError, TheoremTag};
use crate::coloring::Coloring;
use crate::corona::CoronaSpec;
use crate::graph::Graph;

/// Pairs the vertices of a path or cycle `0..m` into non-adjacent pairs plus
/// one singleton when `m` is odd: even positions first, then odd positions,
/// chunked in twos.
fn rim_pairs(m: usize) -> Vec<Vec<usize>> {
    let walk: Vec<usize> = (0..m).step_by(2).chain((1..m).step_by(2)).collect();
    walk.chunks(2).map(|c| c.to_vec()).collect()
}

/// Equitable coloring of the wheel `K_1 ∘ C_m` with `ceil(m/2) + 1` colors
/// (4 when `m = 3`, where the wheel is complete). Hub is vertex 0.
pub fn wheel_equitable(m: usize) -> Result<Coloring, ColorerError> {
    if m < 3 {
        return Err(ColorerError::Precondition("wheel needs m >= 3".into()));
    }
    if m == 3 {
        return Ok(Coloring::new(4, vec![1, 2, 3, 4]).expect("colors in range"));
    }
    let pairs = rim_pairs(m);
    let k = 1 + pairs.len();
    let mut colors = vec![0usize; m + 1];
    colors[0] = 1;
    for (i, pair) in pairs.iter().enumerate() {
        for &v in pair {
            colors[1 + v] = i + 2;
        }
    }
    Ok(Coloring::new(k, colors).expect("colors in range"))
}

/// Equitable coloring of the fan `K_1 ∘ P_m` with `ceil(m/2) + 1` colors for
/// `m >= 3`; the degenerate fans are complete graphs (2 colors for `m = 1`,
/// 3 for `m = 2`).
pub fn fan_equitable(m: usize) -> Result<Coloring, ColorerError> {
    match m {
        0 => Err(ColorerError::Precondition("fan needs m >= 1".into())),
        1 => Ok(Coloring::new(2, vec![1, 2]).expect("colors in range")),
        2 => Ok(Coloring::new(3, vec![1, 2, 3]).expect("colors in range")),
        _ => {
            let pairs = rim_pairs(m);
            let k = 1 + pairs.len();
            let mut colors = vec![0usize; m + 1];
            colors[0] = 1;
            for (i, pair) in pairs.iter().enumerate() {
                for &v in pair {
                    colors[1 + v] = i + 2;
                }
            }
            Ok(Coloring::new(k, colors).expect("colors in range"))
        }
    }
}

/// Colors and class count for `K_1 ∘^l C_m`, `l >= 2`, `m >= 4`.
fn k1_cycle_colors(m: usize, l: usize) -> Result<(Vec<usize>, usize), ColorerError> {
    debug_assert!(l >= 2 && m >= 4);
    if m == 4 {
        // Wheel on a C4 rim takes 3 colors; every further level alternates
        // the two free colors inside each copy.
        let mut colors = wheel_equitable(4)?.colors().to_vec();
        for _ in 2..=l {
            super::cycles::extend_colors_even3(&mut colors, 2);
        }
        return Ok((colors, 3));
    }
    if m.is_multiple_of(2) {
        // First level: hub plus a rim split as evenly as three colors allow.
        // Not equitable; the second level balances it exactly.
        let k = m / 2;
        let mut colors = vec![1usize];
        let rim = cycle_fill(
            m,
            &[
                (2, m.div_ceil(3)),
                (3, (m - 1).div_ceil(3)),
                (4, (m - 2).div_ceil(3)),
            ],
        )?;
        colors.extend(rim);
        let q = m / 3;
        let r = m % 3;
        let near_equal = move |owner: usize| -> Vec<Vec<u64>> {
            let mut values = vec![q; 3];
            for v in values.iter_mut().take(r) {
                *v += 1;
            }
            super::cycles::assignments_of(owner, &values)
        };
        // When 3 | m the near-equal triple is rigid and cannot always absorb
        // the first level's imbalance; widen the menu in that case.
        let primary = super::cycles::even_menu(k);
        let wide = super::cycles::even_menu_wide(k);
        dp_extend_level(
            &mut colors,
            4,
            m,
            &[&near_equal, &primary, &wide],
            &cycle_fill,
            "second wheel level",
        )?;
        for _ in 3..=l {
            extend_colors_even4(&mut colors, k, true)?;
        }
        Ok((colors, 4))
    } else {
        // Odd rim m = 2k+1: hub 1, rim (k, k, 1) over colors 2..4, then a
        // fixed per-owner-color count table for the second level.
        let k = m / 2;
        let mut colors = vec![1usize];
        colors.extend(cycle_fill(m, &[(2, k), (3, k), (4, 1)])?);
        let prev = colors.len();
        for u in 0..prev {
            let counts: Vec<(usize, usize)> = match colors[u] {
                1 => vec![(2, 1), (3, k), (4, k)],
                2 => vec![(1, 1), (3, k), (4, k)],
                3 => vec![(1, k), (2, k), (4, 1)],
                _ => vec![(1, k), (2, k), (3, 1)],
            };
            colors.extend(cycle_fill(m, &counts)?);
        }
        for _ in 3..=l {
            extend_colors_odd4(&mut colors, k)?;
        }
        Ok((colors, 4))
    }
}

/// Certificate for `K_1 ∘^l C_m`: the wheel formula at `l = 1` and the flat
/// values (3 for `m = 4`, otherwise 4) from `l = 2` on.
pub fn color_k1_cycle_corona(m: usize, l: usize) -> Result<Certificate, ColorerError> {
    if m < 3 {
        return Err(ColorerError::Precondition("cycle needs m >= 3".into()));
    }
    if l == 0 {
        return Err(ColorerError::Precondition("level must be at least 1".into()));
    }
    let g = Graph::complete(1)?;
    let h = Graph::cycle(m)?;
    if l == 1 {
        let coloring = wheel_equitable(m)?;
        let k = coloring.k();
        let spec = CoronaSpec::new(g, h, 1)?;
        return seal_certificate(
            spec,
            coloring.colors().to_vec(),
            k,
            TheoremTag::E1,
            Claim::Equality,
            None,
        );
    }
    if m == 3 {
        // The rim is complete, so the complete-attachment route gives the
        // same product and value at every level.
        let hub = Coloring::new(1, vec![1]).expect("single color");
        return super::complete::complete_pattern_certificate(
            &g,
            &hub,
            h,
            l,
            TheoremTag::P1,
            Claim::Equality,
        );
    }
    let (colors, k) = k1_cycle_colors(m, l)?;
    let spec = CoronaSpec::new(g, h, l)?;
    seal_certificate(spec, colors, k, TheoremTag::T8, Claim::Equality, None)
}

/// Certificate for `K_1 ∘^l P_m`: the fan formula at `l = 1`; from `l = 2`
/// on, 3 colors for `m <= 5`, and the cycle coloring reused for `m >= 6`
/// (an equality for even `m`, a bound for odd `m`).
pub fn color_k1_path_corona(m: usize, l: usize) -> Result<Certificate, ColorerError> {
    if m < 1 {
        return Err(ColorerError::Precondition("path needs m >= 1".into()));
    }
    if l == 0 {
        return Err(ColorerError::Precondition("level must be at least 1".into()));
    }
    let g = Graph::complete(1)?;
    let h = Graph::path(m)?;
    if l == 1 {
        let coloring = fan_equitable(m)?;
        let k = coloring.k();
        let spec = CoronaSpec::new(g, h, 1)?;
        return seal_certificate(
            spec,
            coloring.colors().to_vec(),
            k,
            TheoremTag::Fan,
            Claim::Equality,
            None,
        );
    }
    if m == 1 {
        let hub = Coloring::new(1, vec![1]).expect("single color");
        return super::complete::complete_pattern_certificate(
            &g,
            &hub,
            h,
            l,
            TheoremTag::P1,
            Claim::Equality,
        );
    }
    if m <= 5 {
        // Start from a 3-chromatic fan coloring (equitable only for m <= 4)
        // and balance level by level.
        let mut colors = vec![1usize];
        for j in 0..m {
            colors.push(if j % 2 == 0 { 2 } else { 3 });
        }
        for _ in 2..=l {
            extend_colors_path3(&mut colors, m)?;
        }
        let spec = CoronaSpec::new(g, h, l)?;
        return seal_certificate(spec, colors, 3, TheoremTag::T13, Claim::Equality, None);
    }
    let (colors, k) = k1_cycle_colors(m, l)?;
    let claim = if m.is_multiple_of(2) {
        Claim::Equality
    } else {
        Claim::UpperBound
    };
    let spec = CoronaSpec::new(g, h, l)?;
    seal_certificate(spec, colors, k, TheoremTag::T13, claim, None)
}
