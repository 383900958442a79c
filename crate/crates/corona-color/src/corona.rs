//! Corona products `G ∘ H` and their iterated form `G ∘^l H`, with a stable,
//! navigable vertex numbering.
//!
//! The corona of `G` (order `n`) and `H` (order `m`) consists of one copy of
//! `G` and `n` copies of `H`, with vertex `i` of `G` joined to every vertex of
//! copy `i`. The iterated product applies the same operation `l` times, each
//! time attaching a fresh copy of `H` to every existing vertex.
//!
//! Dense numbering is level-order and append-only: vertices of the previous
//! product keep their indices when a new level is applied, and the copy owned
//! by dense vertex `u` occupies the range `N + u*m .. N + (u+1)*m` where `N`
//! is the previous order. Colorings of earlier levels therefore stay valid as
//! index-stable prefixes, which the inductive coloring constructions rely on.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Graph;

/// Default ceiling on constructed product orders. The CLI exposes a flag to
/// override it; library callers pass a cap explicitly.
pub const DEFAULT_ORDER_CAP: usize = 1_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CoronaError {
    #[error("corona exponent must be at least 1")]
    LevelZero,
    #[error("product order {order} exceeds the configured cap {cap}")]
    OrderCap { order: usize, cap: usize },
    #[error("product order overflows usize")]
    OrderOverflow,
    #[error("index {index} out of range for a product on {order} vertices")]
    IndexOutOfRange { index: usize, order: usize },
    #[error("malformed label: {0}")]
    MalformedLabel(String),
    #[error("vertex {0} is a base vertex and has no owner")]
    BaseVertexHasNoOwner(usize),
}

/// The two factor graphs and the exponent of an iterated corona product.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoronaSpec {
    pub g: Graph,
    pub h: Graph,
    pub l: usize,
}

impl CoronaSpec {
    pub fn new(g: Graph, h: Graph, l: usize) -> Result<Self, CoronaError> {
        if l == 0 {
            return Err(CoronaError::LevelZero);
        }
        Ok(CoronaSpec { g, h, l })
    }

    /// Checked order `n(m+1)^l` of the full product.
    pub fn order(&self) -> Result<usize, CoronaError> {
        self.order_at_level(self.l)
    }

    /// Checked order `n(m+1)^t` of the level-`t` intermediate product.
    pub fn order_at_level(&self, t: usize) -> Result<usize, CoronaError> {
        let mut order = self.g.n();
        for _ in 0..t {
            order = order
                .checked_mul(self.h.n() + 1)
                .ok_or(CoronaError::OrderOverflow)?;
        }
        Ok(order)
    }
}

/// One step of a corona ownership chain: at application `level`, the vertex
/// was created in slot `slot` (its index inside the attached copy of `H`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabelStep {
    pub level: usize,
    pub slot: usize,
}

/// Hierarchical address of a vertex inside `G ∘^l H`.
///
/// `base` is the originating vertex of `G`; `steps` walks the ownership chain
/// downward, one entry per copy, recording at which application level the copy
/// was attached and the vertex's slot inside it. Levels along the chain are
/// strictly increasing. Base vertices have an empty chain. The address is in
/// bijection with the dense numbering; `depth` (chain length) is the distance
/// to the base vertex, while `creation_level` is the application at which the
/// vertex first appeared.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoronaLabel {
    pub base: usize,
    pub steps: Vec<LabelStep>,
}

impl CoronaLabel {
    pub fn depth(&self) -> usize {
        self.steps.len()
    }

    pub fn creation_level(&self) -> usize {
        self.steps.last().map_or(0, |s| s.level)
    }
}

impl std::fmt::Display for CoronaLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.base)?;
        for s in &self.steps {
            write!(f, "/{}.{}", s.level, s.slot)?;
        }
        Ok(())
    }
}

/// Index arithmetic for a corona product: orders per level and conversions
/// between dense indices and labels. Never builds the graph.
#[derive(Debug, Clone)]
pub struct CoronaLayout {
    /// `orders[t]` is the order after `t` applications; `orders[0] = n`.
    orders: Vec<usize>,
    m: usize,
}

impl CoronaLayout {
    pub fn new(spec: &CoronaSpec) -> Result<Self, CoronaError> {
        let mut orders = Vec::with_capacity(spec.l + 1);
        let mut order = spec.g.n();
        orders.push(order);
        for _ in 0..spec.l {
            order = order
                .checked_mul(spec.h.n() + 1)
                .ok_or(CoronaError::OrderOverflow)?;
            orders.push(order);
        }
        Ok(CoronaLayout {
            orders,
            m: spec.h.n(),
        })
    }

    pub fn order(&self) -> usize {
        *self.orders.last().unwrap()
    }

    pub fn levels(&self) -> usize {
        self.orders.len() - 1
    }

    /// Application at which dense vertex `v` was created (0 for base vertices).
    pub fn creation_level(&self, v: usize) -> Result<usize, CoronaError> {
        if v >= self.order() {
            return Err(CoronaError::IndexOutOfRange {
                index: v,
                order: self.order(),
            });
        }
        Ok(self.orders.iter().position(|&o| v < o).unwrap())
    }

    /// The unique lower vertex whose attached copy contains `v`.
    pub fn owner_of(&self, v: usize) -> Result<usize, CoronaError> {
        let t = self.creation_level(v)?;
        if t == 0 {
            return Err(CoronaError::BaseVertexHasNoOwner(v));
        }
        Ok((v - self.orders[t - 1]) / self.m)
    }

    /// Slot of `v` inside its copy (its `H` vertex index).
    pub fn slot_of(&self, v: usize) -> Result<usize, CoronaError> {
        let t = self.creation_level(v)?;
        if t == 0 {
            return Err(CoronaError::BaseVertexHasNoOwner(v));
        }
        Ok((v - self.orders[t - 1]) % self.m)
    }

    pub fn label_of(&self, v: usize) -> Result<CoronaLabel, CoronaError> {
        let mut steps = Vec::new();
        let mut cur = v;
        loop {
            let t = self.creation_level(cur)?;
            if t == 0 {
                steps.reverse();
                return Ok(CoronaLabel { base: cur, steps });
            }
            steps.push(LabelStep {
                level: t,
                slot: self.slot_of(cur)?,
            });
            cur = self.owner_of(cur)?;
        }
    }

    pub fn index_of(&self, label: &CoronaLabel) -> Result<usize, CoronaError> {
        if label.base >= self.orders[0] {
            return Err(CoronaError::MalformedLabel(format!(
                "base {} out of range 0..{}",
                label.base, self.orders[0]
            )));
        }
        let mut index = label.base;
        let mut prev_level = 0usize;
        for step in &label.steps {
            if step.level <= prev_level || step.level > self.levels() {
                return Err(CoronaError::MalformedLabel(format!(
                    "levels must be strictly increasing within 1..={}",
                    self.levels()
                )));
            }
            if step.slot >= self.m {
                return Err(CoronaError::MalformedLabel(format!(
                    "slot {} out of range 0..{}",
                    step.slot, self.m
                )));
            }
            // The owner must already exist when the copy is attached.
            debug_assert!(index < self.orders[step.level - 1]);
            index = self.orders[step.level - 1] + index * self.m + step.slot;
            prev_level = step.level;
        }
        Ok(index)
    }
}

/// One corona application. The result has `n(m+1)` vertices: `G`'s vertices
/// keep their indices, copy `i` of `H` occupies `n + i*m .. n + (i+1)*m` and
/// is joined completely to vertex `i`.
pub fn corona(g: &Graph, h: &Graph) -> Graph {
    let n = g.n();
    let m = h.n();
    let mut edges: Vec<(usize, usize)> = g.edges().collect();
    for i in 0..n {
        let base = n + i * m;
        for (u, v) in h.edges() {
            edges.push((base + u, base + v));
        }
        for j in 0..m {
            edges.push((i, base + j));
        }
    }
    let product = Graph::new(n * (m + 1), &edges).expect("corona edges are in range");
    match (g.name(), h.name()) {
        (Some(a), Some(b)) => product.with_name(format!("{a} o {b}")),
        _ => product,
    }
}

/// The iterated product `G ∘^l H`, refusing to build anything larger than
/// `cap` vertices.
pub fn corona_power(spec: &CoronaSpec, cap: usize) -> Result<Graph, CoronaError> {
    let order = spec.order()?;
    if order > cap {
        return Err(CoronaError::OrderCap { order, cap });
    }
    let mut product = spec.g.clone();
    for _ in 0..spec.l {
        product = corona(&product, &spec.h);
    }
    let name = match (spec.g.name(), spec.h.name()) {
        (Some(a), Some(b)) if spec.l > 1 => Some(format!("{a} o^{} {b}", spec.l)),
        (Some(a), Some(b)) => Some(format!("{a} o {b}")),
        _ => None,
    };
    Ok(match name {
        Some(n) => product.with_name(n),
        None => product,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corona_c3_k2_counts() {
        let g = Graph::cycle(3).unwrap();
        let h = Graph::complete(2).unwrap();
        let p = corona(&g, &h);
        assert_eq!(p.n(), 9);
        // |E| = |E(G)| + n(|E(H)| + m), checked against direct enumeration.
        assert_eq!(p.edge_count(), 3 + 3 * (1 + 2));
        assert_eq!(p.max_degree(), 4);
    }

    #[test]
    fn corona_k1_families() {
        let k1 = Graph::complete(1).unwrap();
        let wheel = corona(&k1, &Graph::cycle(5).unwrap());
        assert_eq!((wheel.n(), wheel.edge_count()), (6, 10));
        let fan = corona(&k1, &Graph::path(3).unwrap());
        assert_eq!((fan.n(), fan.edge_count()), (4, 5));
    }

    #[test]
    fn corona_power_orders() {
        let spec = CoronaSpec::new(Graph::cycle(3).unwrap(), Graph::complete(2).unwrap(), 2)
            .unwrap();
        let p = corona_power(&spec, DEFAULT_ORDER_CAP).unwrap();
        assert_eq!(p.n(), 27);
        assert_eq!(p.max_degree(), 2 + 2 * 2);

        let spec = CoronaSpec::new(Graph::complete(1).unwrap(), Graph::cycle(5).unwrap(), 2)
            .unwrap();
        assert_eq!(spec.order().unwrap(), 36);

        let tiny_cap = CoronaSpec::new(Graph::cycle(3).unwrap(), Graph::complete(2).unwrap(), 2)
            .unwrap();
        assert!(matches!(
            corona_power(&tiny_cap, 10),
            Err(CoronaError::OrderCap { order: 27, cap: 10 })
        ));
    }

    #[test]
    fn power_level_one_equals_single_corona() {
        let g = Graph::path(3).unwrap();
        let h = Graph::cycle(4).unwrap();
        let spec = CoronaSpec::new(g.clone(), h.clone(), 1).unwrap();
        let a = corona_power(&spec, DEFAULT_ORDER_CAP).unwrap();
        let b = corona(&g, &h);
        assert_eq!(a.n(), b.n());
        assert_eq!(a.edges().collect::<Vec<_>>(), b.edges().collect::<Vec<_>>());
    }

    #[test]
    fn labels_round_trip_and_owners() {
        let spec = CoronaSpec::new(Graph::cycle(3).unwrap(), Graph::complete(2).unwrap(), 2)
            .unwrap();
        let layout = CoronaLayout::new(&spec).unwrap();
        assert_eq!(layout.order(), 27);

        let l0 = layout.label_of(0).unwrap();
        assert_eq!((l0.base, l0.depth()), (0, 0));

        // First vertex of the copy attached to vertex 0 at level 1.
        let l3 = layout.label_of(3).unwrap();
        assert_eq!(l3.base, 0);
        assert_eq!(l3.steps, vec![LabelStep { level: 1, slot: 0 }]);
        assert_eq!(layout.owner_of(3).unwrap(), 0);

        for v in 0..layout.order() {
            let label = layout.label_of(v).unwrap();
            assert_eq!(layout.index_of(&label).unwrap(), v);
            if label.depth() >= 1 {
                let owner = layout.owner_of(v).unwrap();
                let owner_label = layout.label_of(owner).unwrap();
                assert_eq!(owner_label.depth(), label.depth() - 1);
            }
        }
    }

    #[test]
    fn owners_are_adjacent_to_their_copies() {
        let spec = CoronaSpec::new(Graph::complete(1).unwrap(), Graph::cycle(4).unwrap(), 2)
            .unwrap();
        let layout = CoronaLayout::new(&spec).unwrap();
        let p = corona_power(&spec, DEFAULT_ORDER_CAP).unwrap();
        for v in 1..p.n() {
            let owner = layout.owner_of(v).unwrap();
            assert!(p.has_edge(owner, v));
        }
        assert!(layout.owner_of(0).is_err());
    }

    #[test]
    fn malformed_labels_rejected() {
        let spec = CoronaSpec::new(Graph::cycle(3).unwrap(), Graph::complete(2).unwrap(), 2)
            .unwrap();
        let layout = CoronaLayout::new(&spec).unwrap();
        let bad_slot = CoronaLabel {
            base: 0,
            steps: vec![LabelStep { level: 1, slot: 5 }],
        };
        assert!(layout.index_of(&bad_slot).is_err());
        let bad_order = CoronaLabel {
            base: 0,
            steps: vec![
                LabelStep { level: 2, slot: 0 },
                LabelStep { level: 1, slot: 0 },
            ],
        };
        assert!(layout.index_of(&bad_order).is_err());
        let bad_base = CoronaLabel { base: 9, steps: vec![] };
        assert!(layout.index_of(&bad_base).is_err());
    }
}
