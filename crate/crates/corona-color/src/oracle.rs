//! Exact decision procedures on small graphs: chromatic number, equitable
//! k-colorability with witness, the equitable chromatic number, and the
//! forced 3-coloring of even-cycle corona products.
//!
//! All searches are plain backtracking over vertices in descending-degree
//! order with two prunes: per-class capacity bounds (class sizes may not
//! exceed `ceil(n/k)`, and at most `n mod k` classes may exceed `floor(n/k)`)
//! and color-symmetry breaking (color `c+1` may be introduced only after
//! color `c`). Witnesses are deterministic for a fixed vertex order.

use std::time::{Duration, Instant};

use thiserror::Error;

use crate::coloring::{analyze_coloring, ClassSizeVector, Coloring};
use crate::corona::CoronaSpec;
use crate::graph::{Graph, GraphError};

/// Hard bound coming from the bitset representation.
const MASK_LIMIT: usize = 128;

/// Resource limits for oracle searches.
#[derive(Debug, Clone)]
pub struct SearchLimits {
    /// Largest instance the oracle will accept.
    pub max_vertices: usize,
    /// Wall-clock budget per decision.
    pub timeout: Duration,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits {
            max_vertices: 64,
            timeout: Duration::from_secs(30),
        }
    }
}

impl SearchLimits {
    pub fn with_max_vertices(mut self, max_vertices: usize) -> Self {
        self.max_vertices = max_vertices;
        self
    }

    pub fn with_timeout(mut self, timeout: Duration) -> Self {
        self.timeout = timeout;
        self
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("instance has {n} vertices, above the search limit {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("search timed out after {0:?}")]
    Timeout(Duration),
    #[error("no proper coloring with at most {cap} colors")]
    ExceedsCap { cap: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("forced propagation requires an even cycle for H")]
    NotEvenCycle,
    #[error("base coloring must be a proper 3-coloring: {0}")]
    BadBaseColoring(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

struct Searcher<'a> {
    g: &'a Graph,
    /// Vertices in search order (descending degree, index ascending).
    order: Vec<usize>,
    /// Adjacency masks over search positions.
    adj: Vec<u128>,
    deadline: Instant,
    budget: Duration,
    nodes: u64,
}

impl<'a> Searcher<'a> {
    fn new(g: &'a Graph, limits: &SearchLimits) -> Result<Self, OracleError> {
        let limit = limits.max_vertices.min(MASK_LIMIT);
        if g.n() > limit {
            return Err(OracleError::TooLarge { n: g.n(), limit });
        }
        let mut order: Vec<usize> = (0..g.n()).collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
        let mut pos = vec![0usize; g.n()];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let adj = order
            .iter()
            .map(|&v| {
                g.neighbors(v)
                    .iter()
                    .fold(0u128, |mask, &w| mask | (1u128 << pos[w]))
            })
            .collect();
        Ok(Searcher {
            g,
            order,
            adj,
            deadline: Instant::now() + limits.timeout,
            budget: limits.timeout,
            nodes: 0,
        })
    }

    fn tick(&mut self) -> Result<(), OracleError> {
        self.nodes += 1;
        if self.nodes.is_multiple_of(4096) && Instant::now() > self.deadline {
            return Err(OracleError::Timeout(self.budget));
        }
        Ok(())
    }

    fn witness(&self, k: usize, assigned: &[usize]) -> Coloring {
        let mut colors = vec![0usize; self.g.n()];
        for (i, &c) in assigned.iter().enumerate() {
            colors[self.order[i]] = c;
        }
        Coloring::new(k, colors).expect("search assigns colors in range")
    }

    /// Backtracking for a proper k-coloring, no balance constraints.
    fn proper(&mut self, k: usize) -> Result<Option<Coloring>, OracleError> {
        let n = self.g.n();
        if n == 0 {
            return Ok(Some(Coloring::new(k, vec![]).unwrap()));
        }
        if k == 0 {
            return Ok(None);
        }
        let mut class_mask = vec![0u128; k];
        let mut assigned = vec![0usize; n];
        let mut depth = 0usize;
        let mut max_used = 0usize;
        // `next_color[d]` is the color to try next at depth d.
        let mut next_color = vec![1usize; n];
        loop {
            self.tick()?;
            if depth == n {
                return Ok(Some(self.witness(k, &assigned)));
            }
            let bit = 1u128 << depth;
            let limit = k.min(max_used + 1);
            let mut advanced = false;
            let mut c = next_color[depth];
            while c <= limit {
                if self.adj[depth] & class_mask[c - 1] == 0 {
                    assigned[depth] = c;
                    class_mask[c - 1] |= bit;
                    next_color[depth] = c + 1;
                    depth += 1;
                    if depth < n {
                        next_color[depth] = 1;
                    }
                    max_used = max_used.max(c);
                    advanced = true;
                    break;
                }
                c += 1;
            }
            if advanced {
                continue;
            }
            // Backtrack.
            if depth == 0 {
                return Ok(None);
            }
            depth -= 1;
            let c = assigned[depth];
            class_mask[c - 1] &= !(1u128 << depth);
            assigned[depth] = 0;
            max_used = assigned[..depth].iter().copied().max().unwrap_or(0);
        }
    }

    /// Backtracking for a proper coloring whose class sizes all lie in
    /// `{floor(n/k), ceil(n/k)}`.
    fn equitable(&mut self, k: usize) -> Result<Option<Coloring>, OracleError> {
        let n = self.g.n();
        if n == 0 {
            return Ok(Some(Coloring::new(k, vec![]).unwrap()));
        }
        if k == 0 {
            return Ok(None);
        }
        let floor = n / k;
        let extra = n % k; // classes allowed to reach floor + 1
        let ceil = floor + usize::from(extra > 0);
        let mut class_mask = vec![0u128; k];
        let mut counts = vec![0usize; k];
        let mut over = 0usize; // classes currently above floor
        let mut assigned = vec![0usize; n];
        let mut depth = 0usize;
        let mut max_used = 0usize;
        let mut next_color = vec![1usize; n];
        loop {
            self.tick()?;
            if depth == n {
                return Ok(Some(self.witness(k, &assigned)));
            }
            let bit = 1u128 << depth;
            let limit = k.min(max_used + 1);
            let mut advanced = false;
            let mut c = next_color[depth];
            while c <= limit {
                let cnt = counts[c - 1];
                let capacity_ok = cnt < ceil && (cnt < floor || over < extra);
                if capacity_ok && self.adj[depth] & class_mask[c - 1] == 0 {
                    assigned[depth] = c;
                    class_mask[c - 1] |= bit;
                    counts[c - 1] += 1;
                    if counts[c - 1] > floor {
                        over += 1;
                    }
                    next_color[depth] = c + 1;
                    depth += 1;
                    if depth < n {
                        next_color[depth] = 1;
                    }
                    max_used = max_used.max(c);
                    advanced = true;
                    break;
                }
                c += 1;
            }
            if advanced {
                continue;
            }
            if depth == 0 {
                return Ok(None);
            }
            depth -= 1;
            let c = assigned[depth];
            class_mask[c - 1] &= !(1u128 << depth);
            if counts[c - 1] > floor {
                over -= 1;
            }
            counts[c - 1] -= 1;
            assigned[depth] = 0;
            max_used = assigned[..depth].iter().copied().max().unwrap_or(0);
        }
    }
}

/// Finds a proper k-coloring if one exists.
pub fn proper_k_coloring(
    g: &Graph,
    k: usize,
    limits: &SearchLimits,
) -> Result<Option<Coloring>, OracleError> {
    Searcher::new(g, limits)?.proper(k)
}

/// Smallest number of colors `<= cap` in a proper coloring.
pub fn chromatic_number(g: &Graph, cap: usize, limits: &SearchLimits) -> Result<usize, OracleError> {
    if g.n() == 0 {
        return Ok(0);
    }
    for k in 1..=cap {
        if Searcher::new(g, limits)?.proper(k)?.is_some() {
            return Ok(k);
        }
    }
    Err(OracleError::ExceedsCap { cap })
}

/// Decides equitable k-colorability, returning a witness when the answer is
/// yes. Equitable colorability is not monotone in `k`, so callers scanning a
/// range must test every value.
pub fn is_equitably_k_colorable(
    g: &Graph,
    k: usize,
    limits: &SearchLimits,
) -> Result<Option<Coloring>, OracleError> {
    Searcher::new(g, limits)?.equitable(k)
}

/// Smallest `k` admitting an equitable k-coloring, with a witness. Scans
/// `k = chromatic_number(G) ..= max_degree(G) + 1`; the upper end of that
/// range always admits one.
pub fn equitable_chromatic_number(
    g: &Graph,
    limits: &SearchLimits,
) -> Result<(usize, Coloring), OracleError> {
    if g.n() == 0 {
        return Ok((0, Coloring::new(0, vec![]).unwrap()));
    }
    let upper = g.max_degree() + 1;
    let chi = chromatic_number(g, upper, limits)?;
    for k in chi..=upper {
        if let Some(witness) = is_equitably_k_colorable(g, k, limits)? {
            return Ok((k, witness));
        }
    }
    Err(OracleError::Internal(
        "no equitable coloring found up to max_degree + 1".into(),
    ))
}

/// Propagates the forced two-color alternation of even-cycle copies through
/// every level of `G ∘^l C_{2k}`, starting from a proper 3-coloring of `G`,
/// and returns the final class sizes. Each copy is adjacent to its owner, so
/// it must alternate the two remaining colors; the class sizes are forced.
pub fn forced_three_coloring_sizes(
    product: &Graph,
    base3: &Coloring,
    spec: &CoronaSpec,
) -> Result<ClassSizeVector, OracleError> {
    let ring = even_cycle_ring(&spec.h).ok_or(OracleError::NotEvenCycle)?;
    if base3.k() != 3 {
        return Err(OracleError::BadBaseColoring(format!(
            "declared k is {}, expected 3",
            base3.k()
        )));
    }
    let report = analyze_coloring(&spec.g, base3)?;
    if !report.proper {
        return Err(OracleError::BadBaseColoring(
            "base coloring is not proper".into(),
        ));
    }
    let m = spec.h.n();
    let mut ring_parity = vec![0usize; m];
    for (i, &v) in ring.iter().enumerate() {
        ring_parity[v] = i % 2;
    }
    let mut colors = base3.colors().to_vec();
    for _ in 0..spec.l {
        let prev = colors.len();
        colors.reserve(prev * m);
        for u in 0..prev {
            let owner = colors[u];
            let mut others = [0usize; 2];
            let mut idx = 0;
            for c in 1..=3 {
                if c != owner {
                    others[idx] = c;
                    idx += 1;
                }
            }
            for h in 0..m {
                colors.push(others[ring_parity[h]]);
            }
        }
    }
    if colors.len() != product.n() {
        return Err(OracleError::Internal(format!(
            "product has {} vertices, propagation produced {}",
            product.n(),
            colors.len()
        )));
    }
    let full = Coloring::new(3, colors).expect("propagated colors in 1..=3");
    let check = analyze_coloring(product, &full)?;
    if !check.proper {
        return Err(OracleError::Internal(
            "forced propagation produced an improper coloring".into(),
        ));
    }
    Ok(ClassSizeVector::new(
        spec.l,
        check.sizes.iter().map(|&s| s as u64).collect(),
    ))
}

/// Cyclic vertex order of `h` when it is an even cycle, `None` otherwise.
fn even_cycle_ring(h: &Graph) -> Option<Vec<usize>> {
    let m = h.n();
    if m < 4 || !m.is_multiple_of(2) || !(0..m).all(|v| h.degree(v) == 2) {
        return None;
    }
    let mut ring = Vec::with_capacity(m);
    let mut prev = 0usize;
    let mut cur = h.neighbors(0)[0];
    ring.push(0);
    while cur != 0 {
        ring.push(cur);
        let next = if h.neighbors(cur)[0] == prev {
            h.neighbors(cur)[1]
        } else {
            h.neighbors(cur)[0]
        };
        prev = cur;
        cur = next;
    }
    if ring.len() == m {
        Some(ring)
    } else {
        None // 2-regular but disconnected
    }
}
