mod common;

use proptest::prelude::*;
use triorient::classes::{atlas_with_cap, class_profile, is_bipartite, three_colouring, Method};
use triorient::{families, solve, ForbiddenSet, Graph};

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |keep| {
            let all = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            Graph::new(n, all.zip(keep).filter(|(_, k)| *k).map(|(e, _)| e)).unwrap()
        })
    })
}

fn yes(g: &Graph, f: &str) -> bool {
    solve(g, f.parse().unwrap()).unwrap().is_yes()
}

#[test]
fn atlas_agrees_on_small_graphs() {
    for n in 0..=5 {
        for g in common::labelled_graphs(n) {
            let report = atlas_with_cap(&g, 14);
            let bad: Vec<_> = report
                .disagreements()
                .map(|r| r.forbid.to_string())
                .collect();
            assert!(bad.is_empty(), "{:?}: {bad:?}", g.edges());
            assert!(report.rows.iter().all(|r| r.decision.is_some()));
        }
    }
}

#[test]
fn oracle_rows_skip_above_cap() {
    let report = atlas_with_cap(&families::complete(6), 14);
    for r in &report.rows {
        assert_eq!(
            r.decision.is_none(),
            r.method == Method::Oracle,
            "{}",
            r.forbid
        );
    }
    let table = report.to_table();
    assert!(table.contains("skipped"));
    assert!(!table.contains("MISMATCH"));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn atlas_agrees_on_random_graphs(g in arb_graph(7)) {
        let report = atlas_with_cap(&g, 14);
        prop_assert_eq!(report.disagreements().count(), 0);
    }

    #[test]
    fn bipartite_matches_two_colouring(g in arb_graph(9)) {
        let two = (0..1u32 << g.n()).any(|mask| g.edges().iter().all(|&(u, v)| (mask >> u & 1) != (mask >> v & 1)));
        prop_assert_eq!(is_bipartite(&g), two);
    }

    #[test]
    fn three_colouring_is_proper_and_complete(g in arb_graph(8)) {
        match three_colouring(&g) {
            Some(c) => {
                prop_assert!(c.iter().all(|&x| x < 3));
                prop_assert!(g.edges().iter().all(|&(u, v)| c[u] != c[v]));
            }
            None => prop_assert!(!common::three_colourable_exhaustive(&g)),
        }
    }

    #[test]
    fn three_colourable_graphs_are_t3_orientable(g in arb_graph(11)) {
        if three_colouring(&g).is_some() {
            prop_assert!(yes(&g, "T3"));
        }
    }

    #[test]
    fn t3_yes_needs_k4_free_and_locally_bipartite(g in arb_graph(10)) {
        if yes(&g, "T3") {
            let p = class_profile(&g);
            prop_assert!(p.k4_free && p.locally_bipartite);
        }
    }

    #[test]
    fn nested_interval_rows_coincide(g in arb_graph(9)) {
        prop_assert_eq!(yes(&g, "B1,B3"), yes(&g, "B2,B3"));
        prop_assert_eq!(yes(&g, "B1,T3"), yes(&g, "B2,T3"));
        prop_assert_eq!(yes(&g, "B1,B3,T3"), yes(&g, "B2,B3,T3"));
    }

    #[test]
    fn comparability_with_t3_is_three_colourable(g in arb_graph(9)) {
        if yes(&g, "B3,T3") {
            prop_assert!(three_colouring(&g).is_some());
        }
    }
}

#[test]
fn profiles_of_named_graphs() {
    let p = class_profile(&families::complete_multipartite(&[1, 2, 3]));
    assert!(p.complete_multipartite && !p.bipartite && p.k4_free);
    let p = class_profile(&families::grotzsch());
    assert!(p.triangle_free && !p.bipartite && !p.unicyclic_per_component);
    let p = class_profile(&families::wheel(5).unwrap());
    assert!(!p.locally_bipartite && p.k4_free);
    let p = class_profile(&Graph::empty(4));
    assert!(p.complete_multipartite && p.complete_components && p.max_degree_le_2);
    let triangle_and_star = common::disjoint_union(&families::complete(3), &families::star(3));
    assert!(class_profile(&triangle_and_star).star_or_triangle_components);
    let f: ForbiddenSet = "B1,B3,T3".parse().unwrap();
    assert!(solve(&triangle_and_star, f).unwrap().is_yes());
}
