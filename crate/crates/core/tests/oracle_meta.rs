use equitable_trees::generators;
use equitable_trees::oracle::{brute_force_search, exhaustive_reference, SearchBudget, SearchOutcome};
use equitable_trees::{verify, Bound, Graph, Params};
use proptest::prelude::*;

fn bound() -> impl Strategy<Value = Bound> {
    prop_oneof![Just(Bound::Unbounded), (0usize..3).prop_map(Bound::Finite)]
}

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        let len = pairs.len();
        proptest::collection::vec(proptest::bool::weighted(0.45), len).prop_map(move |mask| {
            let edges = pairs.iter().zip(&mask).filter(|(_, &keep)| keep).map(|(&e, _)| e);
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn pruned_search_agrees_with_reference(g in graph(8), t in 1usize..4, k in bound(), d in bound()) {
        let p = Params::new(t, k, d).unwrap();
        let pruned = brute_force_search(&g, &p, SearchBudget::default()).unwrap();
        let reference = exhaustive_reference(&g, &p);
        prop_assert_ne!(&pruned, &SearchOutcome::BudgetExceeded);
        prop_assert_eq!(pruned.is_feasible(), reference.is_some());
        if let SearchOutcome::Feasible(c) = pruned {
            prop_assert!(verify(&g, &c, &p).unwrap().verdict);
        }
    }
}

#[test]
fn twelve_vertices_finish_within_budget() {
    let (g, _) = generators::complete_bipartite(6).unwrap();
    for t in 1..=12 {
        for (k, d) in [(Bound::Finite(1), Bound::Finite(1)), (Bound::Unbounded, Bound::Finite(2))] {
            let p = Params::new(t, k, d).unwrap();
            let out = brute_force_search(&g, &p, SearchBudget::default()).unwrap();
            assert_ne!(out, SearchOutcome::BudgetExceeded, "t={t}");
        }
    }
    let dodeca = generators::dodecahedron();
    let out = brute_force_search(&dodeca, &Params::tree(2).unwrap(), SearchBudget::default()).unwrap();
    assert!(out.is_feasible());
}
