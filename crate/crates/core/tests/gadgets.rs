use dd2_core::generate::*;
use dd2_core::oracle::*;
use dd2_core::*;

fn k4() -> Graph {
    gen_named(NamedGraph::Complete { n: 4 }).unwrap()
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let head = rest.remove(i);
        for mut tail in permutations(&rest) {
            tail.insert(0, head);
            out.push(tail);
        }
    }
    out
}

fn cubic_sources() -> Vec<Graph> {
    let mut out = vec![
        k4(),
        gen_named(NamedGraph::CompleteBipartite { a: 3, b: 3 }).unwrap(),
        gen_named(NamedGraph::Petersen).unwrap(),
    ];
    for n in [6, 8, 10] {
        for seed in 0..3 {
            out.push(gen_random_cubic(n, seed).unwrap());
        }
    }
    out
}

#[test]
fn subdivided_gadget_counts() {
    for g in cubic_sources() {
        let (n, m) = (g.n(), g.m());
        let minvc = gen_minvc_gadget(&g).unwrap();
        assert_eq!(minvc.target.n(), n + m + 5 * n);
        assert_eq!(minvc.target.m(), 2 * m + 6 * n);
        assert!(is_dd2(&minvc.target).is_dd2);
        let maxis = gen_maxis_gadget(&g).unwrap();
        assert_eq!(maxis.target.n(), n + m + 4 * n);
        assert_eq!(maxis.target.m(), 2 * m + 4 * n);
        assert!(is_dd2(&maxis.target).is_dd2);
    }
}

#[test]
fn minvc_forward_identity_every_cover_every_order() {
    let budget = OracleBudget::default();
    for g in cubic_sources().into_iter().filter(|g| g.n() <= 8) {
        let map = gen_minvc_gadget(&g).unwrap();
        let n = g.n();
        for cover in minimal_vertex_covers(&g, &budget).unwrap() {
            let orders = if n == 4 {
                permutations(&cover)
            } else {
                vec![cover.clone()]
            };
            for order in orders {
                let h = vc_to_min_subgraph(&map, &order).unwrap();
                assert_eq!(h.len(), 11 * n / 2 + cover.len());
                assert!(is_minimal_spanning_dd2(&h));
                assert!(is_minimal_by_deletion(&h));
                let back = minvc_subgraph_to_vc(&map, &h).unwrap();
                assert_eq!(back.set, cover);
            }
        }
    }
}

#[test]
fn maxis_forward_identity_every_maximal_set() {
    let budget = OracleBudget::default();
    for g in cubic_sources().into_iter().filter(|g| g.n() <= 8) {
        let map = gen_maxis_gadget(&g).unwrap();
        let n = g.n();
        for set in maximal_independent_sets(&g, &budget).unwrap() {
            let h = is_to_max_subgraph(&map, &set).unwrap();
            assert_eq!(h.len(), 9 * n / 2 + set.len());
            assert!(is_minimal_spanning_dd2(&h));
            assert!(is_minimal_by_deletion(&h));
            assert_eq!(maxis_subgraph_to_is(&map, &h).unwrap().set, set);
        }
    }
}

#[test]
fn backward_maps_on_every_minimal_subgraph_of_k4_gadgets() {
    let g = k4();
    let budget = OracleBudget::large();
    let map = gen_minvc_gadget(&g).unwrap();
    for kept in minimal_spanning_dd2_subgraphs(&map.target, &budget).unwrap() {
        let h = SpanningSubgraph::new(&map.target, kept).unwrap();
        let cover = minvc_subgraph_to_vc(&map, &h).unwrap().set;
        assert!(g
            .edges()
            .iter()
            .all(|(u, v)| cover.contains(u) || cover.contains(v)));
    }
    let map = gen_maxis_gadget(&g).unwrap();
    for kept in minimal_spanning_dd2_subgraphs(&map.target, &budget).unwrap() {
        let h = SpanningSubgraph::new(&map.target, kept).unwrap();
        let set = maxis_subgraph_to_is(&map, &h).unwrap().set;
        assert!(set.len() <= 1, "K4 has no independent pair");
    }
}

#[test]
fn minvc_gadget_optimum_on_k4() {
    // A vertex v_i that is already a star center over its edge vertices can
    // drop t_i v_i and keep p_i..t_i as a 5-path, so the optimum is below
    // 11n/2 + (minimum cover) = 25.
    let map = gen_minvc_gadget(&k4()).unwrap();
    let r = exact_min_spanning_dd2(&map.target, &OracleBudget::large()).unwrap();
    assert_eq!(r.value, 22);
}

#[test]
fn maxis_gadget_optimum_on_k4() {
    let map = gen_maxis_gadget(&k4()).unwrap();
    let r = exact_max_minimal_spanning_dd2(&map.target, &OracleBudget::large()).unwrap();
    assert_eq!(r.value, 9 * 4 / 2 + 1);
}

#[test]
fn l_reductions_on_k4() {
    assert_eq!(
        check_gadget_l_reductions(&k4(), &OracleBudget::large()).unwrap(),
        (true, true)
    );
}

#[test]
fn maxmin_gadget_sources() {
    let budget = OracleBudget::default();
    let sources = [
        gen_named(NamedGraph::Path { n: 3 }).unwrap(),
        gen_named(NamedGraph::Path { n: 4 }).unwrap(),
        gen_named(NamedGraph::Cycle { n: 5 }).unwrap(),
    ];
    for g in sources {
        let (n, m) = (g.n(), g.m());
        let map = gen_maxmin_gadget(&g).unwrap();
        assert_eq!(map.target.n(), n + n * (m + 1) + 2 * m + 1);
        assert!(map.target.is_bipartite());
        assert!(!is_dd2(&map.target).is_dd2);
        for cover in minimal_vertex_covers(&g, &budget).unwrap() {
            let plan = vc_to_edge_addition(&map, &cover).unwrap();
            assert_eq!(plan.len(), cover.len() * (m + 1));
            assert!(plan.is_feasible_for(&map.target));
            assert!(is_minimal_addition(&map.target, &plan));
            assert_eq!(edge_addition_to_vc(&map, &plan).unwrap(), cover);
        }
    }
}

#[test]
fn maxmin_backward_map_repairs_foreign_plans() {
    // any feasible plan maps back to a minimal vertex cover
    let g = gen_named(NamedGraph::Path { n: 3 }).unwrap();
    let map = gen_maxmin_gadget(&g).unwrap();
    let (plan, _) = approx::approx_min_to_dd2(&map.target).unwrap();
    let cover = edge_addition_to_vc(&map, &plan).unwrap();
    assert!(cover == vec![1] || cover == vec![0, 2]);
}
