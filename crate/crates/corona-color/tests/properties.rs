//! Property tests over the construction, oracle and colorer layers.

use proptest::prelude::*;

use corona_color::colorers::{
    color_complete_corona, color_multipartite_corona, cycle_fill, dispatch, path_fill, HShape,
};
use corona_color::io::{dimacs_string, read_dimacs};
use corona_color::verifier::{check_ecc, verify_certificate};
use corona_color::{
    analyze_coloring, corona, corona_power, forced_three_coloring_sizes, is_equitably_k_colorable,
    proper_k_coloring, Coloring, CoronaLayout, CoronaSpec, Graph, SearchLimits, DEFAULT_ORDER_CAP,
};

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let slots = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(any::<bool>(), slots).prop_map(move |mask| {
            let mut edges = Vec::new();
            let mut idx = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if mask[idx] {
                        edges.push((u, v));
                    }
                    idx += 1;
                }
            }
            Graph::new(n, &edges).expect("generated edges are valid")
        })
    })
}

/// Exhaustive equitable k-colorability for tiny graphs.
fn brute_equitable(g: &Graph, k: usize) -> bool {
    let n = g.n();
    let floor = n / k;
    let ceil = floor + usize::from(!n.is_multiple_of(k));
    let mut assignment = vec![1usize; n];
    loop {
        let c = Coloring::new(k, assignment.clone()).unwrap();
        let r = analyze_coloring(g, &c).unwrap();
        if r.proper && r.sizes.iter().all(|&s| s == floor || s == ceil) {
            return true;
        }
        let mut i = 0;
        while i < n {
            if assignment[i] < k {
                assignment[i] += 1;
                break;
            }
            assignment[i] = 1;
            i += 1;
        }
        if i == n {
            return false;
        }
    }
}

proptest! {
    #[test]
    fn handshake(g in arb_graph(10)) {
        let degree_sum: usize = (0..g.n()).map(|v| g.degree(v)).sum();
        prop_assert_eq!(degree_sum, 2 * g.edge_count());
    }

    #[test]
    fn dimacs_round_trip(g in arb_graph(10)) {
        let text = dimacs_string(&g);
        let back = read_dimacs(text.as_bytes()).unwrap();
        prop_assert_eq!(back.n(), g.n());
        prop_assert_eq!(back.edges().collect::<Vec<_>>(), g.edges().collect::<Vec<_>>());
    }

    #[test]
    fn strongly_equitable_implies_k_divides_n(
        g in arb_graph(8),
        k in 1usize..=4,
        seed in any::<u64>(),
    ) {
        let n = g.n();
        let colors: Vec<usize> = (0..n).map(|v| {
            (seed.wrapping_add(v as u64).wrapping_mul(2654435761) % k as u64) as usize + 1
        }).collect();
        let c = Coloring::new(k, colors).unwrap();
        let r = analyze_coloring(&g, &c).unwrap();
        if r.strongly_equitable {
            prop_assert_eq!(n % k, 0);
        }
    }

    #[test]
    fn color_permutation_invariance(
        g in arb_graph(7),
        k in 1usize..=4,
        colors_raw in proptest::collection::vec(1usize..=4, 0..7),
        rot in 0usize..4,
    ) {
        let colors: Vec<usize> = (0..g.n())
            .map(|v| (colors_raw.get(v).copied().unwrap_or(1) - 1) % k + 1)
            .collect();
        let c = Coloring::new(k, colors.clone()).unwrap();
        let permuted: Vec<usize> = colors.iter().map(|&c| (c - 1 + rot) % k + 1).collect();
        let cp = Coloring::new(k, permuted).unwrap();
        let a = analyze_coloring(&g, &c).unwrap();
        let b = analyze_coloring(&g, &cp).unwrap();
        prop_assert_eq!(a.proper, b.proper);
        prop_assert_eq!(a.discrepancy, b.discrepancy);
        prop_assert_eq!(a.equitable, b.equitable);
    }

    #[test]
    fn corona_order_and_degree_law(
        g in arb_graph(5),
        h in arb_graph(4),
        l in 1usize..=2,
    ) {
        let spec = CoronaSpec::new(g.clone(), h.clone(), l).unwrap();
        let p = corona_power(&spec, DEFAULT_ORDER_CAP).unwrap();
        let m = h.n();
        prop_assert_eq!(p.n(), g.n() * (m + 1).pow(l as u32));
        // Edge count after one level: |E(G)| + n(|E(H)| + m).
        let one = corona(&g, &h);
        prop_assert_eq!(one.edge_count(), g.edge_count() + g.n() * (h.edge_count() + m));
        // Degree law for base vertices: original degree + m per level.
        for v in 0..g.n() {
            prop_assert_eq!(p.degree(v), g.degree(v) + m * l);
        }
        // Iterated product equals one more corona application.
        if l == 2 {
            let again = corona(&one, &h);
            prop_assert_eq!(p.edges().collect::<Vec<_>>(), again.edges().collect::<Vec<_>>());
        }
    }

    #[test]
    fn labels_biject_with_dense_indices(
        g in arb_graph(4),
        h in arb_graph(3),
        l in 1usize..=3,
    ) {
        let spec = CoronaSpec::new(g, h, l).unwrap();
        let layout = CoronaLayout::new(&spec).unwrap();
        for v in 0..layout.order() {
            let label = layout.label_of(v).unwrap();
            prop_assert_eq!(layout.index_of(&label).unwrap(), v);
        }
    }

    #[test]
    fn degree_law_at_every_level(
        g in arb_graph(4),
        h in arb_graph(3),
        l in 1usize..=3,
    ) {
        // A vertex created at level j has its creation degree (base degree,
        // or H degree plus the owner spoke) plus m fresh spokes per later
        // level.
        let spec = CoronaSpec::new(g.clone(), h.clone(), l).unwrap();
        let layout = CoronaLayout::new(&spec).unwrap();
        let p = corona_power(&spec, DEFAULT_ORDER_CAP).unwrap();
        let m = h.n();
        for v in 0..p.n() {
            let label = layout.label_of(v).unwrap();
            let j = label.creation_level();
            let at_creation = if j == 0 {
                g.degree(v)
            } else {
                h.degree(label.steps.last().unwrap().slot) + 1
            };
            prop_assert_eq!(p.degree(v), at_creation + m * (l - j));
        }
    }

    #[test]
    fn copies_are_edge_exact_replicas(
        g in arb_graph(4),
        h in arb_graph(3),
    ) {
        let p = corona(&g, &h);
        let n = g.n();
        let m = h.n();
        for i in 0..n {
            let base = n + i * m;
            for a in 0..m {
                // Inside the copy: exactly H's edges.
                for b in a + 1..m {
                    prop_assert_eq!(p.has_edge(base + a, base + b), h.has_edge(a, b));
                }
                // Spokes go to the owner and nowhere else outside the copy.
                for other in 0..n {
                    prop_assert_eq!(p.has_edge(other, base + a), other == i);
                }
            }
        }
    }

    #[test]
    fn fills_match_requested_counts(balls in proptest::collection::vec(1usize..=5, 2..24)) {
        let len = balls.len();
        let mut counts = std::collections::BTreeMap::new();
        for &b in &balls {
            *counts.entry(b).or_insert(0usize) += 1;
        }
        let counts: Vec<(usize, usize)> = counts.into_iter().collect();
        let max = counts.iter().map(|&(_, c)| c).max().unwrap();

        match cycle_fill(len, &counts) {
            Ok(seq) => {
                prop_assert!(max <= len / 2);
                prop_assert_eq!(seq.len(), len);
                for i in 0..len {
                    prop_assert_ne!(seq[i], seq[(i + 1) % len]);
                }
                let mut got = std::collections::BTreeMap::new();
                for &c in &seq {
                    *got.entry(c).or_insert(0usize) += 1;
                }
                prop_assert_eq!(got.into_iter().collect::<Vec<_>>(), counts.clone());
            }
            Err(_) => prop_assert!(max > len / 2),
        }

        match path_fill(len, &counts) {
            Ok(seq) => {
                prop_assert!(max <= len.div_ceil(2));
                for w in seq.windows(2) {
                    prop_assert_ne!(w[0], w[1]);
                }
                let mut got = std::collections::BTreeMap::new();
                for &c in &seq {
                    *got.entry(c).or_insert(0usize) += 1;
                }
                prop_assert_eq!(got.into_iter().collect::<Vec<_>>(), counts);
            }
            Err(_) => prop_assert!(max > len.div_ceil(2)),
        }
    }

    #[test]
    fn complete_route_is_strongly_equitable_for_any_proper_base(
        g in arb_graph(6),
        m in 1usize..=3,
    ) {
        let limits = SearchLimits::default();
        let Some(c) = proper_k_coloring(&g, m + 1, &limits).unwrap() else {
            return Ok(());
        };
        let cert = color_complete_corona(&g, &c, m, 1).unwrap();
        let first = cert.sizes[0];
        prop_assert!(cert.sizes.iter().all(|&s| s == first));
        prop_assert_eq!(first, g.n());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn oracle_agrees_with_brute_force(g in arb_graph(6), k in 1usize..=4) {
        let limits = SearchLimits::default();
        let witness = is_equitably_k_colorable(&g, k, &limits).unwrap();
        prop_assert_eq!(witness.is_some(), brute_equitable(&g, k));
        if let Some(w) = witness {
            let r = analyze_coloring(&g, &w).unwrap();
            prop_assert!(r.proper && r.equitable);
            prop_assert_eq!(w.k(), k);
        }
    }

    #[test]
    fn chi_eq_sits_between_chi_and_max_degree_plus_one(g in arb_graph(7)) {
        prop_assume!(g.is_connected());
        let limits = SearchLimits::default();
        let chi = corona_color::chromatic_number(&g, g.n(), &limits).unwrap();
        let (chi_eq, witness) = corona_color::equitable_chromatic_number(&g, &limits).unwrap();
        prop_assert!(chi <= chi_eq);
        prop_assert!(chi_eq <= g.max_degree() + 1);
        let r = analyze_coloring(&g, &witness).unwrap();
        prop_assert!(r.proper && r.equitable);
    }

    #[test]
    fn forced_sizes_agree_with_the_recurrence(
        g in arb_graph(5),
        half in 2usize..=3,
        l in 1usize..=2,
    ) {
        let limits = SearchLimits::default();
        let Some(base) = proper_k_coloring(&g, 3, &limits).unwrap() else {
            return Ok(());
        };
        let spec = CoronaSpec::new(g, Graph::cycle(2 * half).unwrap(), l).unwrap();
        if spec.order().unwrap() > 10_000 {
            return Ok(());
        }
        let product = corona_power(&spec, DEFAULT_ORDER_CAP).unwrap();
        let forced = forced_three_coloring_sizes(&product, &base, &spec).unwrap();
        let base_sizes: Vec<u64> = base.class_sizes().iter().map(|&s| s as u64).collect();
        let (rec, _) = corona_color::colorers::three_color_size_recurrence(&base_sizes, half, l)
            .unwrap();
        let mut a = forced.sizes.clone();
        let mut b = rec.sizes.clone();
        a.sort_unstable();
        b.sort_unstable();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn rotation_sizes_hit_the_formula(
        k in 2usize..=4,
        mult in 1usize..=2,
        part_sizes in proptest::collection::vec(1usize..=2, 1..=3),
    ) {
        let n = k * mult * 2;
        prop_assume!(part_sizes.len() < k);
        // Planted base: classes are consecutive blocks, edges join distinct
        // classes in a ring, so the planted coloring is proper and exact.
        let class_of = |v: usize| v % k;
        let mut edges = Vec::new();
        for v in 0..n {
            let w = (v + 1) % n;
            if class_of(v) != class_of(w) {
                edges.push((v, w));
            }
        }
        let g = Graph::new(n, &edges).unwrap();
        let colors: Vec<usize> = (0..n).map(|v| class_of(v) + 1).collect();
        let c = Coloring::new(k, colors).unwrap();
        let h = Graph::complete_multipartite(&part_sizes).unwrap();
        let parts = Graph::consecutive_parts(&part_sizes);
        let cert = color_multipartite_corona(&g, &c, &h, &parts, 1).unwrap();
        let total: usize = part_sizes.iter().sum();
        let expected = n * (1 + total) / k;
        prop_assert!(cert.sizes.iter().all(|&s| s == expected));
    }

    #[test]
    fn dispatched_certificates_verify(
        g in arb_graph(5),
        shape_pick in 0usize..4,
        size in 2usize..=5,
    ) {
        prop_assume!(g.is_connected());
        let limits = SearchLimits::default().with_max_vertices(40);
        let shape = match shape_pick {
            0 => HShape::Path(size),
            1 => HShape::cycle(size.max(3)).unwrap(),
            2 => HShape::Complete(size.min(3)),
            _ => HShape::Multipartite(vec![1; size.min(3)]),
        };
        let Ok(cert) = dispatch(&g, &[], &shape, 1, Some(&limits)) else {
            return Ok(());
        };
        let product = cert.product().unwrap();
        let report = verify_certificate(&product, &cert, &limits);
        prop_assert!(report.pass, "{:?}", report.checks);
        prop_assert!(check_ecc(&product, cert.claimed_k).unwrap());
    }
}
