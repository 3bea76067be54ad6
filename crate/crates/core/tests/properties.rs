use dd2_core::approx::*;
use dd2_core::generate::*;
use dd2_core::oracle::*;
use dd2_core::*;
use proptest::prelude::*;

fn graph_from_bits(n: usize, bits: &[bool]) -> Graph {
    let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    Graph::from_edges(n, pairs.zip(bits).filter(|(_, &b)| b).map(|(e, _)| e)).unwrap()
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * (n - 1) / 2)
            .prop_map(move |bits| graph_from_bits(n, &bits))
    })
}

fn arb_dd2_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    arb_graph(max_n).prop_filter("DD2-graphs only", |g| is_dd2(g).is_dd2 && g.m() <= 22)
}

/// Random graph without isolated vertices, with pendants hung on a random
/// subset of its vertices (non-DD2 most of the time).
fn arb_pendant_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (arb_graph(max_n), any::<u16>()).prop_map(|(base, hang)| {
        let n = base.n();
        let mut edges = base.edges().to_vec();
        for v in base.vertices().filter(|&v| base.degree(v) == 0) {
            if n > 1 {
                let w = (v + 1) % n;
                if !edges.contains(&canonical(v, w)) {
                    edges.push(canonical(v, w));
                }
            }
        }
        let mut total = n;
        for v in 0..n {
            if hang >> v & 1 == 1 {
                edges.push((v, total));
                total += 1;
            }
        }
        Graph::from_edges(total, edges).unwrap()
    })
}

fn has_k2_component(g: &Graph) -> bool {
    g.components()
        .iter()
        .any(|c| c.len() == 2 && g.degree(c[0]) == 1)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn edge_list_roundtrip(g in arb_graph(12)) {
        let text = g.to_edge_list(&[("generator", "proptest".to_string())]);
        prop_assert_eq!(parse_edge_list(&text).unwrap(), g);
    }

    #[test]
    fn structural_invariants(g in arb_graph(12)) {
        let degree_sum: usize = g.vertices().map(|v| g.degree(v)).sum();
        prop_assert_eq!(degree_sum, 2 * g.m());

        let comps = g.components();
        let mut all: Vec<Vertex> = comps.iter().flatten().copied().collect();
        all.sort_unstable();
        prop_assert_eq!(all, g.vertices().collect::<Vec<_>>());

        let sides = g.bipartition();
        prop_assert_eq!(sides.len(), comps.len());
        for (comp, side) in comps.iter().zip(&sides) {
            if let Some((x, y)) = side {
                prop_assert_eq!(x[0], comp[0]);
                for &(u, v) in g.edges() {
                    if comp.contains(&u) {
                        prop_assert!(x.contains(&u) != x.contains(&v));
                        prop_assert!(y.contains(&u) != y.contains(&v));
                    }
                }
            }
        }
    }

    #[test]
    fn classification_invariants(g in arb_graph(12)) {
        let c = g.classify_vertices();
        for v in g.vertices() {
            prop_assert_eq!(c.is_leaf(v), g.degree(v) == 1);
            prop_assert!(!(c.is_weak_support(v) && c.is_strong_support(v)));
            if c.is_support(v) {
                prop_assert!(g.neighbors(v).iter().any(|&w| c.is_leaf(w)));
            }
        }
        // A K2 component's endpoints are leaves and weak supports at once.
        if !has_k2_component(&g) {
            for v in g.vertices() {
                prop_assert!(!(c.is_leaf(v) && c.is_support(v)));
            }
        }
    }

    #[test]
    fn recognition_agrees_with_pair_search(g in arb_graph(9)) {
        let pair = exact_has_dd2_pair(&g, &OracleBudget::default()).unwrap();
        prop_assert_eq!(is_dd2(&g).is_dd2, pair.is_some());
        if let Some(p) = pair {
            prop_assert!(verify_pair(&g, &p));
        }
    }

    #[test]
    fn min_degree_two_is_dd2(g in arb_graph(12)) {
        if g.min_degree() >= 2 {
            prop_assert!(is_dd2(&g).is_dd2);
        }
    }

    #[test]
    fn minimalize_structure(g in arb_dd2_graph(12)) {
        for order in [DeletionOrder::Lexicographic, DeletionOrder::LowDegreeFirst, DeletionOrder::HighDegreeFirst] {
            let h = minimalize(&g, &order).unwrap();
            let n = g.n();
            prop_assert!(h.len() >= (2 * n).div_ceil(3));
            prop_assert!(h.len() <= 2 * (n - 2));
            prop_assert!(is_minimal_spanning_dd2(&h));
            prop_assert!(is_minimal_by_deletion(&h));
        }
    }

    #[test]
    fn structural_and_definitional_minimality_agree(g in arb_graph(9)) {
        let h = SpanningSubgraph::full(&g);
        prop_assert_eq!(is_minimal_spanning_dd2(&h), is_minimal_by_deletion(&h));
    }

    #[test]
    fn pair_extraction(g in arb_dd2_graph(12)) {
        let p = find_dd2_pair(&g).unwrap();
        prop_assert!(verify_pair(&g, &p));
        for &a in &p.a {
            prop_assert!(g.neighbors(a).iter().filter(|w| p.b.contains(w)).count() >= 2);
        }
        for &b in &p.b {
            prop_assert!(g.neighbors(b).iter().any(|w| p.a.contains(w)));
        }
    }

    #[test]
    fn spanning_approximations_vs_oracle(g in arb_dd2_graph(9)) {
        let budget = OracleBudget::default();
        let n = g.n() as u64;
        let min = exact_min_spanning_dd2(&g, &budget).unwrap();
        let max = exact_max_minimal_spanning_dd2(&g, &budget).unwrap();
        prop_assert!(3 * min.value >= 2 * n);
        prop_assert!(max.value < 2 * n);
        let a = approx_min_dd2(&g).unwrap();
        prop_assert!(is_minimal_by_deletion(&a));
        prop_assert!(a.len() as u64 <= 3 * min.value);
        let b = approx_max_dd2(&g).unwrap();
        prop_assert!(max.value <= 3 * b.len() as u64);
        for w in [&min.witness, &max.witness] {
            let h = SpanningSubgraph::new(&g, w.iter().copied()).unwrap();
            prop_assert!(is_minimal_by_deletion(&h));
        }
    }

    #[test]
    fn gamma_at_most_gamma2(g in arb_graph(9)) {
        let budget = OracleBudget::default();
        prop_assert!(exact_gamma(&g, &budget).unwrap().value <= exact_gamma2(&g, &budget).unwrap().value);
    }

    #[test]
    fn greedy_domination_within_harmonic(
        g in arb_graph(10),
        seed in any::<u64>(),
    ) {
        let weights: Vec<u64> = (0..g.n() as u64).map(|v| 1 + (seed.rotate_left(v as u32 * 7) % 10)).collect();
        let set = greedy_weighted_dominating_set(&g, &weights);
        let all: Vec<Vertex> = g.vertices().collect();
        let inst = WeightedTDomInstance::new(g.clone(), weights.clone(), all).unwrap();
        prop_assert!(inst.is_feasible(&set));
        let opt = exact_min_weight_tdom(&inst, &OracleBudget::default()).unwrap().value;
        prop_assert!(inst.weight(&set) as f64 <= harmonic(g.n()) * opt as f64 + 1e-9);
    }

    #[test]
    fn tdom_reduction(
        g in arb_graph(10),
        seed in any::<u64>(),
    ) {
        let weights: Vec<u64> = (0..g.n() as u64).map(|v| 1 + (seed.rotate_right(v as u32 * 5) % 10)).collect();
        let targets: Vec<Vertex> = g.vertices().filter(|&v| seed >> (v % 64) & 1 == 1).collect();
        let inst = WeightedTDomInstance::new(g, weights, targets).unwrap();
        let sol = approx_weighted_tdom(&inst);
        prop_assert!(inst.is_feasible(&sol.set));
        prop_assert_eq!(sol.auxiliary_weight, sol.weight + 1);
        let opt = exact_min_weight_tdom(&inst, &OracleBudget::default()).unwrap().value;
        prop_assert!(sol.weight >= opt);
    }

    #[test]
    fn min_to_dd2_plans(base in arb_graph(7)) {
        prop_assume!(!base.has_isolated_vertex());
        let g = gen_non_dd2(&base).unwrap();
        let (plan, trace) = approx_min_to_dd2(&g).unwrap();
        prop_assert!(plan.additions.iter().all(|&(u, v)| !g.has_edge(u, v)));
        prop_assert!(plan.is_feasible_for(&g));
        if !trace.fallback_used {
            let w = trace.support_weight as usize;
            prop_assert!(plan.len() >= w / 2 && plan.len() <= w.div_ceil(2));
        }
        let opt = exact_min_edge_addition(&g, &OracleBudget::default()).unwrap().value;
        prop_assert!(plan.len() as f64 <= (1.0 + (g.n() as f64).ln()) * opt as f64);
    }

    #[test]
    fn min_to_dd2_on_arbitrary_non_dd2(g in arb_pendant_graph(8)) {
        prop_assume!(!g.has_isolated_vertex() && !is_dd2(&g).is_dd2);
        prop_assume!(g.n() > 2);
        let (plan, trace) = approx_min_to_dd2(&g).unwrap();
        prop_assert!(plan.is_feasible_for(&g));
        let cls = g.classify_vertices();
        for &s in &trace.chosen_supports {
            prop_assert!(cls.is_support(s));
        }
        let mut pool: Vec<Vertex> = trace.chosen_supports.iter().flat_map(|&s| cls.pendants[s].clone()).collect();
        pool.sort_unstable();
        pool.dedup();
        prop_assert_eq!(&pool, &trace.pendant_pool);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn cubic_guarantees(half in 2usize..=5, seed in any::<u64>()) {
        let g = gen_random_cubic(2 * half, seed).unwrap();
        let n = g.n();
        prop_assert!(is_dd2(&g).is_dd2);
        let (h, trace) = approx_min_dd2_cubic(&g).unwrap();
        prop_assert!(is_minimal_by_deletion(&h));
        prop_assert!(trace.induced_matching.len() <= 3 * n / 10);
        prop_assert_eq!(trace.result_edges.len(), 2 * (trace.a + trace.t));
        prop_assert!(trace.result_edges.len() <= 6 * n / 5);
        let budget = OracleBudget::default();
        let min = exact_min_spanning_dd2(&g, &budget).unwrap().value;
        prop_assert!(5 * h.len() as u64 <= 9 * min);
        let max = exact_max_minimal_spanning_dd2(&g, &budget).unwrap().value;
        prop_assert!(max <= n as u64);
        let b = approx_max_dd2(&g).unwrap();
        prop_assert!(2 * max <= 3 * b.len() as u64);
        for kept in minimal_spanning_dd2_subgraphs(&g, &budget).unwrap() {
            let h = SpanningSubgraph::new(&g, kept).unwrap().to_graph();
            for comp in h.components() {
                prop_assert!(h.induced_edge_count(&comp) <= comp.len());
            }
        }
    }
}
