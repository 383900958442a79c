//! Cycle attachments.
//!
//! Even cycles with 3 colors: each copy of `C_4` is forced to alternate the
//! two colors its owner leaves free, which maps class sizes by `s -> 2N - s`
//! and so preserves the discrepancy; for `3 | n` the rotation over the cycle
//! bipartition applies instead. Even cycles with 4 colors: rotation when
//! `4 | N`, the mod-12 tail construction when `3 | N`, and an exact
//! pattern-balancing step otherwise. Odd cycles always need 4 colors;
//! rotation over the three-part split `(k, k, 1)` when `4 | N`, balancing
//! otherwise.
//!
//! The class-size recurrence for forced 3-colorings (`s -> s + k(N - s)`) is
//! also here; it multiplies pairwise size differences by `k - 1` per level,
//! which is what rules 3 colors out whenever the base sizes cannot be exactly
//! equal.

use super::balance::balance_copies;
use super::fill::cycle_fill;
use super::multipartite::rotation_extend;
use super::{seal_certificate, Certificate, Claim, ColorerError, TheoremTag};
use crate::coloring::{ClassSizeVector, Coloring};
use crate::corona::CoronaSpec;
use crate::graph::Graph;

/// Realizes one copy's `(color, count)` list as a proper sequence.
pub(crate) type FillFn = dyn Fn(usize, &[(usize, usize)]) -> Result<Vec<usize>, ColorerError>;

/// Maps any integer `>= 1` into the color range `1..=4`.
pub(crate) fn pcol(x: usize) -> usize {
    (x - 1) % 4 + 1
}

pub(crate) fn sizes_of(colors: &[usize], kc: usize) -> Vec<u64> {
    let mut sizes = vec![0u64; kc];
    for &c in colors {
        sizes[c - 1] += 1;
    }
    sizes
}

fn spread(sizes: &[u64]) -> u64 {
    match (sizes.iter().max(), sizes.iter().min()) {
        (Some(max), Some(min)) => max - min,
        _ => 0,
    }
}

/// Cycle bipartition (even positions, odd positions) of the canonical `C_m`.
pub(crate) fn even_cycle_parts(m: usize) -> Vec<Vec<usize>> {
    vec![
        (0..m).step_by(2).collect(),
        (1..m).step_by(2).collect(),
    ]
}

/// Three-part split `(k, k, 1)` of the canonical odd cycle `C_{2k+1}`.
fn odd_cycle_parts(m: usize) -> Vec<Vec<usize>> {
    vec![
        (0..m - 1).step_by(2).collect(),
        (1..m - 1).step_by(2).collect(),
        vec![m - 1],
    ]
}

// ---------------------------------------------------------------------------
// Even cycles, 3 colors
// ---------------------------------------------------------------------------

/// One corona level of `C_{2k}` copies on three colors.
///
/// For `k = 2` every copy alternates the two non-owner colors; otherwise the
/// current order must be divisible by 3 and the rotation applies.
pub fn extend_even_cycle_3(gcur: &Graph, c3: &Coloring, k: usize) -> Result<Coloring, ColorerError> {
    if k < 2 {
        return Err(ColorerError::Precondition("even cycle needs k >= 2".into()));
    }
    if k != 2 && !gcur.n().is_multiple_of(3) {
        return Err(ColorerError::Precondition(
            "three-color extension needs k = 2 or 3 | n".into(),
        ));
    }
    super::require_equitable(gcur, c3, 3, "input coloring")?;
    let mut colors = c3.colors().to_vec();
    extend_colors_even3(&mut colors, k);
    Ok(Coloring::new(3, colors).expect("colors stay in 1..=3"))
}

/// In-place level step used by the public wrapper and the route drivers.
/// Caller guarantees `k = 2` or `3 | colors.len()` with all sizes equal.
pub(crate) fn extend_colors_even3(colors: &mut Vec<usize>, k: usize) {
    let m = 2 * k;
    if k == 2 {
        let prev = colors.len();
        colors.reserve(prev * m);
        for u in 0..prev {
            let owner = colors[u];
            let (a, b) = two_others(owner);
            for j in 0..m {
                colors.push(if j % 2 == 0 { a } else { b });
            }
        }
    } else {
        rotation_extend(colors, 3, &even_cycle_parts(m), m);
    }
}

fn two_others(owner: usize) -> (usize, usize) {
    match owner {
        1 => (2, 3),
        2 => (1, 3),
        _ => (1, 2),
    }
}

/// Equality route on 3 colors for `G ∘^l C_{2k}`: `k = 2` (any base) or
/// `3 | n`.
pub fn color_even_cycle_corona_3(
    g: &Graph,
    c3: &Coloring,
    k: usize,
    l: usize,
) -> Result<Certificate, ColorerError> {
    if g.n() < 2 {
        return Err(ColorerError::Precondition("base graph needs n >= 2".into()));
    }
    if l == 0 {
        return Err(ColorerError::Precondition("level must be at least 1".into()));
    }
    if k < 2 || (k != 2 && !g.n().is_multiple_of(3)) {
        return Err(ColorerError::Precondition(
            "three-color route needs k = 2 or 3 | n".into(),
        ));
    }
    super::require_equitable(g, c3, 3, "input coloring")?;
    let mut colors = c3.colors().to_vec();
    for _ in 0..l {
        extend_colors_even3(&mut colors, k);
    }
    let spec = CoronaSpec::new(g.clone(), Graph::cycle(2 * k)?, l)?;
    seal_certificate(spec, colors, 3, TheoremTag::T4, Claim::Equality, None)
}

// ---------------------------------------------------------------------------
// Mod-12 tail construction
// ---------------------------------------------------------------------------

/// The copy plan for one four-color even-cycle level on `n ≡ 3, 6, 9
/// (mod 12)` vertices: `4x` leading copies rotate a fixed count pattern, the
/// last few copies follow an explicit table keyed on `n mod 12`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TailPlan {
    pub p: usize,
    pub x: usize,
    /// Per-copy `(color, count)` lists for the final copies, in order.
    pub tail: Vec<Vec<(usize, usize)>>,
}

/// Builds the tail plan. The owner of the `i`-th copy (1-based, after
/// reordering) has color `pcol(i)`, and every tail entry avoids it.
pub fn tail_plan(n: usize, k: usize) -> Result<TailPlan, ColorerError> {
    if k < 3 {
        return Err(ColorerError::Precondition("tail plan needs k >= 3".into()));
    }
    let hi = k.div_ceil(2);
    let lo = k / 2;
    let (p, x, tail) = match n % 12 {
        9 => (
            (n - 9) / 12,
            (n - 5) / 4,
            vec![
                vec![(2, k), (3, hi), (4, lo)],
                vec![(1, k), (4, hi), (3, lo)],
                vec![(1, k), (4, k)],
                vec![(2, k), (3, hi), (1, lo)],
                vec![(3, k), (4, hi), (2, lo)],
            ],
        ),
        6 => (
            (n - 6) / 12,
            (n - 2) / 4,
            vec![
                vec![(2, k), (3, hi), (4, lo)],
                vec![(1, k), (4, hi), (3, lo)],
            ],
        ),
        3 => (
            (n - 3) / 12,
            (n - 3) / 4,
            vec![
                vec![(3, k), (4, hi), (2, lo)],
                vec![(1, k), (4, hi), (3, lo)],
                vec![(2, k), (4, hi), (1, lo)],
            ],
        ),
        _ => {
            return Err(ColorerError::Precondition(format!(
                "tail plan needs n ≡ 3, 6 or 9 (mod 12), got n = {n}"
            )))
        }
    };
    Ok(TailPlan { p, x, tail })
}

/// One four-color level over `n ≡ 3, 6, 9 (mod 12)` owners: relabels colors
/// so class sizes are non-increasing, reorders vertices so position `i` holds
/// a vertex of color `pcol(i)`, then fills the copies. Returns the position
/// sequence (`seq[i]` = vertex placed at position `i+1`).
fn mod12_tail_extend(colors: &mut Vec<usize>, k: usize) -> Result<Vec<usize>, ColorerError> {
    let n = colors.len();
    let m = 2 * k;
    let plan = tail_plan(n, k)?;
    debug_assert_eq!(4 * plan.x + plan.tail.len(), n);

    // Relabel so that new color 1 has the largest class.
    let sizes = sizes_of(colors, 4);
    let mut ranked: Vec<usize> = (1..=4).collect();
    ranked.sort_by_key(|&c| (std::cmp::Reverse(sizes[c - 1]), c));
    let mut relabel = [0usize; 5];
    for (pos, &old) in ranked.iter().enumerate() {
        relabel[old] = pos + 1;
    }
    for c in colors.iter_mut() {
        *c = relabel[*c];
    }

    // Deal vertices round-robin through the relabeled classes: position i
    // (1-based) gets a vertex of color pcol(i).
    let mut queues: Vec<std::collections::VecDeque<usize>> = vec![Default::default(); 4];
    for (v, &c) in colors.iter().enumerate() {
        queues[c - 1].push_back(v);
    }
    let mut seq = Vec::with_capacity(n);
    for i in 0..n {
        let class = i % 4;
        let v = queues[class].pop_front().ok_or_else(|| {
            ColorerError::Internal("equitable class sizes cannot drain early".into())
        })?;
        seq.push(v);
    }
    let mut position = vec![0usize; n]; // 1-based position per vertex
    for (i, &v) in seq.iter().enumerate() {
        position[v] = i + 1;
    }

    let hi = k.div_ceil(2);
    let lo = k / 2;
    for u in 0..n {
        let i = position[u];
        let counts: Vec<(usize, usize)> = if i <= 4 * plan.x {
            vec![(pcol(i + 1), k), (pcol(i + 2), hi), (pcol(i + 3), lo)]
        } else {
            plan.tail[i - 4 * plan.x - 1].clone()
        };
        debug_assert!(counts.iter().all(|&(c, _)| c != colors[u]));
        let copy = cycle_fill(m, &counts)?;
        colors.extend(copy);
    }
    Ok(seq)
}

// ---------------------------------------------------------------------------
// Pattern menus and the balancing driver
// ---------------------------------------------------------------------------

/// Distinct assignments of `values` to the three colors other than `owner`,
/// as per-class count vectors of length 4.
pub(crate) fn assignments_of(owner: usize, values: &[usize]) -> Vec<Vec<u64>> {
    let others: Vec<usize> = (1..=4).filter(|&c| c != owner).collect();
    let mut out: std::collections::BTreeSet<Vec<u64>> = Default::default();
    let perms: [[usize; 3]; 6] = [
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ];
    for p in perms {
        let mut v = vec![0u64; 4];
        for (slot, &vi) in p.iter().enumerate() {
            v[others[slot] - 1] = values[vi] as u64;
        }
        out.insert(v);
    }
    out.into_iter().collect()
}

/// Preferred per-copy counts for an even cycle `C_{2k}`: the rotating pattern
/// `(k, ceil(k/2), floor(k/2))` plus the two-color alternation `(k, k, 0)`.
pub(crate) fn even_menu(k: usize) -> impl Fn(usize) -> Vec<Vec<u64>> {
    move |owner| {
        let mut v = assignments_of(owner, &[k, k.div_ceil(2), k / 2]);
        v.extend(assignments_of(owner, &[k, k, 0]));
        v.sort();
        v.dedup();
        v
    }
}

/// Every cyclically feasible count triple for `C_{2k}`.
pub(crate) fn even_menu_wide(k: usize) -> impl Fn(usize) -> Vec<Vec<u64>> {
    move |owner| {
        let others: Vec<usize> = (1..=4).filter(|&c| c != owner).collect();
        let mut out = Vec::new();
        for a in 0..=k {
            for b in 0..=k {
                let rest = 2 * k - a - b;
                if a + b > 2 * k || rest > k {
                    continue;
                }
                let t = [a, b, rest];
                let zeros = t.iter().filter(|&&x| x == 0).count();
                if zeros > 0 && t.iter().any(|&x| x != 0 && x != k) {
                    continue; // two nonzero counts must both be k
                }
                if zeros > 1 {
                    continue;
                }
                let mut v = vec![0u64; 4];
                for (slot, &val) in t.iter().enumerate() {
                    v[others[slot] - 1] = val as u64;
                }
                out.push(v);
            }
        }
        out.sort();
        out.dedup();
        out
    }
}

/// Preferred per-copy counts for an odd cycle `C_{2k+1}`: `(k, k, 1)`.
fn odd_menu(k: usize) -> impl Fn(usize) -> Vec<Vec<u64>> {
    move |owner| assignments_of(owner, &[k, k, 1])
}

/// Every cyclically feasible count triple for `C_{2k+1}` (all parts in
/// `1..=k`).
fn odd_menu_wide(k: usize) -> impl Fn(usize) -> Vec<Vec<u64>> {
    move |owner| {
        let others: Vec<usize> = (1..=4).filter(|&c| c != owner).collect();
        let mut out = Vec::new();
        for a in 1..=k {
            for b in 1..=k {
                if a + b > 2 * k {
                    continue;
                }
                let rest = 2 * k + 1 - a - b;
                if rest < 1 || rest > k {
                    continue;
                }
                let mut v = vec![0u64; 4];
                for (slot, &val) in [a, b, rest].iter().enumerate() {
                    v[others[slot] - 1] = val as u64;
                }
                out.push(v);
            }
        }
        out.sort();
        out.dedup();
        out
    }
}

/// One corona level chosen by exact balancing: tries each menu in order and
/// realizes the first assignment reaching class sizes within one of each
/// other.
pub(crate) fn dp_extend_level(
    colors: &mut Vec<usize>,
    kc: usize,
    m: usize,
    menus: &[&dyn Fn(usize) -> Vec<Vec<u64>>],
    fill: &FillFn,
    what: &str,
) -> Result<(), ColorerError> {
    let base = sizes_of(colors, kc);
    let owner_colors: Vec<usize> = colors.clone();
    let mut max_entry = 0u64;
    for menu in menus {
        for c in 1..=kc {
            for pat in menu(c) {
                max_entry = max_entry.max(pat.iter().copied().max().unwrap_or(0));
            }
        }
    }
    // A tight band covers almost every instance and keeps the state space
    // small; the wide band is the completeness fallback.
    let spread0 = spread(&base);
    let full_band = spread0 + 4 * max_entry + 8;
    let quick_band = (2 * max_entry + 2).max(spread0 + 2).min(full_band);
    let bands: &[u64] = if quick_band < full_band {
        &[quick_band, full_band]
    } else {
        &[full_band]
    };
    for &band in bands {
        for menu in menus {
            if let Some(choices) = balance_copies(&base, &owner_colors, menu, band) {
                for (u, &pick) in choices.iter().enumerate() {
                    let pat = &menu(owner_colors[u])[pick];
                    let counts: Vec<(usize, usize)> = pat
                        .iter()
                        .enumerate()
                        .filter(|&(_, &cnt)| cnt > 0)
                        .map(|(c, &cnt)| (c + 1, cnt as usize))
                        .collect();
                    let copy = fill(m, &counts)?;
                    colors.extend(copy);
                }
                return Ok(());
            }
        }
    }
    Err(ColorerError::BalancingFailed(format!(
        "{what}: no equitable pattern assignment over {} copies",
        owner_colors.len()
    )))
}

// ---------------------------------------------------------------------------
// Even cycles, 4 colors
// ---------------------------------------------------------------------------

/// One four-color even-cycle level: rotation when `4 | N` (and sizes are all
/// equal), the tail construction when `3 | N`, exact balancing otherwise.
/// Returns the reorder sequence when the tail route ran.
pub(crate) fn extend_colors_even4(
    colors: &mut Vec<usize>,
    k: usize,
    allow_tail: bool,
) -> Result<Option<Vec<usize>>, ColorerError> {
    let n = colors.len();
    let m = 2 * k;
    let sizes = sizes_of(colors, 4);
    if n.is_multiple_of(4) && spread(&sizes) == 0 {
        rotation_extend(colors, 4, &even_cycle_parts(m), m);
        return Ok(None);
    }
    if allow_tail && n.is_multiple_of(3) && spread(&sizes) <= 1 && k >= 3 {
        return mod12_tail_extend(colors, k).map(Some);
    }
    let primary = even_menu(k);
    let wide = even_menu_wide(k);
    dp_extend_level(
        colors,
        4,
        m,
        &[&primary, &wide],
        &cycle_fill,
        "even cycle level",
    )?;
    Ok(None)
}

/// Upper-bound route on 4 colors for `G ∘^l C_{2k}`, `k >= 3`; an equality
/// when `3` does not divide `n`, because every 3-coloring of the product then
/// carries a class-size gap of at least `(k-1)^l >= 2`.
pub fn color_even_cycle_corona_4(
    g: &Graph,
    c4: &Coloring,
    k: usize,
    l: usize,
) -> Result<Certificate, ColorerError> {
    if k < 3 {
        return Err(ColorerError::Precondition(
            "four-color even cycle route needs k >= 3".into(),
        ));
    }
    if g.n() < 2 {
        return Err(ColorerError::Precondition("base graph needs n >= 2".into()));
    }
    if l == 0 {
        return Err(ColorerError::Precondition("level must be at least 1".into()));
    }
    super::require_equitable(g, c4, 4, "input coloring")?;
    let mut colors = c4.colors().to_vec();
    let mut permutation = None;
    for level in 1..=l {
        let perm = extend_colors_even4(&mut colors, k, true)?;
        if level == 1 {
            permutation = perm;
        }
    }
    let (tag, claim) = if g.n().is_multiple_of(3) {
        (TheoremTag::T5, Claim::UpperBound)
    } else {
        (TheoremTag::T6, Claim::Equality)
    };
    let spec = CoronaSpec::new(g.clone(), Graph::cycle(2 * k)?, l)?;
    seal_certificate(spec, colors, 4, tag, claim, permutation)
}

/// Four-color fallback for `C_4` attachments when no equitable 3-coloring of
/// the base exists and `4` does not divide `n`: not covered by a named route,
/// so the certificate is tagged as a plain fallback bound.
pub(crate) fn even_cycle_fallback_4(
    g: &Graph,
    c4: &Coloring,
    l: usize,
) -> Result<Certificate, ColorerError> {
    super::require_equitable(g, c4, 4, "input coloring")?;
    if l == 0 {
        return Err(ColorerError::Precondition("level must be at least 1".into()));
    }
    let mut colors = c4.colors().to_vec();
    for _ in 0..l {
        extend_colors_even4(&mut colors, 2, false)?;
    }
    let spec = CoronaSpec::new(g.clone(), Graph::cycle(4)?, l)?;
    seal_certificate(spec, colors, 4, TheoremTag::Fallback, Claim::UpperBound, None)
}

// ---------------------------------------------------------------------------
// Odd cycles
// ---------------------------------------------------------------------------

/// One four-color odd-cycle level: rotation over the `(k, k, 1)` split when
/// `4 | N`, exact balancing otherwise.
pub(crate) fn extend_colors_odd4(colors: &mut Vec<usize>, k: usize) -> Result<(), ColorerError> {
    let n = colors.len();
    let m = 2 * k + 1;
    let sizes = sizes_of(colors, 4);
    if n.is_multiple_of(4) && spread(&sizes) == 0 {
        rotation_extend(colors, 4, &odd_cycle_parts(m), m);
        return Ok(());
    }
    let primary = odd_menu(k);
    let wide = odd_menu_wide(k);
    dp_extend_level(
        colors,
        4,
        m,
        &[&primary, &wide],
        &cycle_fill,
        "odd cycle level",
    )
}

/// Equality route on 4 colors for `G ∘^l C_{2k+1}`, `n >= 2`. The product
/// contains an odd wheel, so no proper coloring uses fewer than 4 colors.
pub fn color_odd_cycle_corona(
    g: &Graph,
    c4: &Coloring,
    k: usize,
    l: usize,
) -> Result<Certificate, ColorerError> {
    if k < 1 {
        return Err(ColorerError::Precondition("odd cycle needs k >= 1".into()));
    }
    if g.n() < 2 {
        return Err(ColorerError::Precondition("base graph needs n >= 2".into()));
    }
    if l == 0 {
        return Err(ColorerError::Precondition("level must be at least 1".into()));
    }
    super::require_equitable(g, c4, 4, "input coloring")?;
    let mut colors = c4.colors().to_vec();
    for _ in 0..l {
        extend_colors_odd4(&mut colors, k)?;
    }
    let spec = CoronaSpec::new(g.clone(), Graph::cycle(2 * k + 1)?, l)?;
    seal_certificate(spec, colors, 4, TheoremTag::T7, Claim::Equality, None)
}

// ---------------------------------------------------------------------------
// Class-size recurrence
// ---------------------------------------------------------------------------

/// Iterates the forced-3-coloring size recurrence `s -> s + k(N - s)` for `l`
/// levels. When the input sizes are equitable but not all equal (difference
/// exactly 1), also returns the predicted final gap `(k-1)^l`.
pub fn three_color_size_recurrence(
    sizes0: &[u64],
    k: usize,
    l: usize,
) -> Result<(ClassSizeVector, Option<u64>), ColorerError> {
    if sizes0.len() != 3 {
        return Err(ColorerError::Precondition(
            "recurrence takes exactly 3 class sizes".into(),
        ));
    }
    if k < 2 {
        return Err(ColorerError::Precondition("recurrence needs k >= 2".into()));
    }
    let initial_gap = spread(sizes0);
    let mut sizes = sizes0.to_vec();
    for _ in 0..l {
        let total: u64 = sizes.iter().sum();
        for s in &mut sizes {
            *s += (k as u64) * (total - *s);
        }
    }
    let predicted = (initial_gap == 1).then(|| (k as u64 - 1).pow(l as u32));
    Ok((ClassSizeVector::new(l, sizes), predicted))
}
