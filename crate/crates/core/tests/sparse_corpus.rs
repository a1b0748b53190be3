use equitable_trees::generators;
use equitable_trees::oracle::{brute_force_search, exhaustive_reference, SearchBudget};
use equitable_trees::sparse::{
    color_girth5, color_girth6, color_outerplanar, fill_sequence, find_configuration_mad103,
    find_configuration_mad3, find_configuration_outerplanar, ExtensionSequence, Pins, SparseError,
};
use equitable_trees::{verify, Bound, Graph, Params, TreeColoring};
use proptest::prelude::*;

fn assert_tree_coloring(g: &Graph, c: &TreeColoring, label: &str) {
    let r = verify(g, c, &Params::tree(c.t()).unwrap()).unwrap();
    assert!(r.verdict, "{label}: {}", r.first_violation);
}

fn girth5_corpus() -> Vec<(String, Graph)> {
    let mut out = vec![
        ("dodecahedron".to_string(), generators::dodecahedron()),
        ("C5".to_string(), generators::cycle(5).unwrap()),
        ("C11".to_string(), generators::cycle(11).unwrap()),
        ("subdivided dodecahedron".to_string(), generators::subdivide(&generators::dodecahedron(), 1)),
    ];
    for seed in 0..8 {
        out.push((format!("random girth-5 planar {seed}"), generators::random_girth5_planar(seed)));
    }
    out
}

fn girth6_corpus() -> Vec<(String, Graph)> {
    let mut out = vec![
        ("C6".to_string(), generators::cycle(6).unwrap()),
        ("hex 2x2".to_string(), generators::hex_grid(2, 2).unwrap()),
        ("hex 3x4".to_string(), generators::hex_grid(3, 4).unwrap()),
        ("hex 1x6".to_string(), generators::hex_grid(1, 6).unwrap()),
        ("subdivided dodecahedron".to_string(), generators::subdivide(&generators::dodecahedron(), 1)),
    ];
    for seed in 0..4 {
        out.push((format!("random tree {seed}"), generators::random_tree(40, seed)));
    }
    out
}

#[test]
fn girth5_corpus_all_t() {
    for (label, g) in girth5_corpus() {
        assert!(g.girth() >= Bound::Finite(5), "{label}");
        for t in 3..=20 {
            let c = color_girth5(&g, t).unwrap_or_else(|e| panic!("{label} t={t}: {e}"));
            assert_tree_coloring(&g, &c, &format!("{label} t={t}"));
        }
    }
}

#[test]
fn girth6_corpus_all_t() {
    for (label, g) in girth6_corpus() {
        assert!(g.girth() >= Bound::Finite(6), "{label}");
        for t in 2..=20 {
            let c = color_girth6(&g, t).unwrap_or_else(|e| panic!("{label} t={t}: {e}"));
            assert_tree_coloring(&g, &c, &format!("{label} t={t}"));
        }
    }
}

#[test]
fn outerplanar_corpus_all_t() {
    for n in [1, 2, 3, 7, 30, 64] {
        for seed in 0..3 {
            let g = generators::maximal_outerplanar_random(n, seed).unwrap();
            for t in 2..=20 {
                let c = color_outerplanar(&g, t).unwrap_or_else(|e| panic!("n={n} seed={seed} t={t}: {e}"));
                assert_tree_coloring(&g, &c, &format!("n={n} seed={seed} t={t}"));
            }
        }
    }
    for n in 2..=12 {
        let fan = generators::fan(n).unwrap();
        for t in 2..=6 {
            assert_tree_coloring(&fan, &color_outerplanar(&fan, t).unwrap(), &format!("fan {n} t={t}"));
        }
    }
}

#[test]
fn dense_inputs_fail_gracefully() {
    let k33 = generators::complete_bipartite(3).unwrap().0;
    // K_{3,3} has 9 > 8 edges, over the girth-6 bound; the girth-5 bound is 6.
    assert!(matches!(color_girth6(&k33, 2), Err(SparseError::EdgeBoundViolated { .. })));
    assert!(matches!(color_girth5(&k33, 3), Err(SparseError::EdgeBoundViolated { .. })));
    // The 3-cube passes the outerplanar edge bound but has minimum degree 3.
    let cube = Graph::from_edges(
        8,
        [(0, 1), (1, 3), (3, 2), (2, 0), (4, 5), (5, 7), (7, 6), (6, 4), (0, 4), (1, 5), (2, 6), (3, 7)],
    )
    .unwrap();
    assert!(matches!(
        color_outerplanar(&cube, 2),
        Err(SparseError::ConfigurationNotFound { .. })
    ));
}

#[test]
fn outerplanar_t2_agrees_with_search_on_small_graphs() {
    for seed in 0..10 {
        let g = generators::maximal_outerplanar_random(9, seed).unwrap();
        let c = color_outerplanar(&g, 2).unwrap();
        assert_tree_coloring(&g, &c, &format!("seed={seed}"));
        assert!(brute_force_search(&g, &Params::tree(2).unwrap(), SearchBudget::default()).unwrap().is_feasible());
    }
    let tri = generators::cycle(3).unwrap();
    assert!(exhaustive_reference(&tri, &Params::tree(1).unwrap()).is_none());
}

fn small_graph() -> impl Strategy<Value = Graph> {
    (2usize..=12, proptest::collection::vec((0usize..12, 0usize..12), 0..30)).prop_map(|(n, pairs)| {
        let mut edges: Vec<(usize, usize)> = pairs
            .into_iter()
            .map(|(u, v)| (u % n, v % n))
            .filter(|(u, v)| u != v)
            .map(|(u, v)| (u.min(v), u.max(v)))
            .collect();
        edges.sort_unstable();
        edges.dedup();
        Graph::from_edges(n, edges).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn configurations_satisfy_their_conditions(g in small_graph()) {
        for cfg in [
            find_configuration_mad103(&g),
            find_configuration_mad3(&g),
            find_configuration_outerplanar(&g),
        ].into_iter().flatten() {
            prop_assert!(cfg.holds_in(&g), "{:?}", cfg);
        }
    }

    #[test]
    fn filled_sequences_satisfy_the_bound(g in small_graph(), t in 1usize..6) {
        if let Ok(cfg) = find_configuration_mad103(&g) {
            let pins = Pins::from([(1, cfg.witnesses[0])]);
            if let Ok(seq) = fill_sequence(&g, &pins, t) {
                prop_assert_eq!(seq.vertices()[0], cfg.witnesses[0]);
                prop_assert!(ExtensionSequence::new(&g, seq.vertices().to_vec()).is_ok());
            }
        }
        if let Ok(seq) = fill_sequence(&g, &Pins::new(), t) {
            prop_assert!(ExtensionSequence::new(&g, seq.vertices().to_vec()).is_ok());
        }
    }

    #[test]
    fn any_successful_run_verifies(g in small_graph(), t in 2usize..7) {
        let runs = [
            (t >= 3).then(|| color_girth5(&g, t)),
            Some(color_girth6(&g, t)),
            Some(color_outerplanar(&g, t)),
        ];
        for c in runs.into_iter().flatten().flatten() {
            let r = verify(&g, &c, &Params::tree(t).unwrap()).unwrap();
            prop_assert!(r.verdict, "{}", r.first_violation);
        }
    }

    #[test]
    fn random_girth5_planar_graphs(seed in any::<u64>(), t in 3usize..21) {
        let g = generators::random_girth5_planar(seed);
        let c = color_girth5(&g, t).unwrap();
        prop_assert!(verify(&g, &c, &Params::tree(t).unwrap()).unwrap().verdict);
    }

    #[test]
    fn random_trees_any_t(n in 1usize..80, seed in any::<u64>(), t in 2usize..10) {
        let g = generators::random_tree(n, seed);
        for c in [color_girth6(&g, t).unwrap(), color_outerplanar(&g, t).unwrap()] {
            prop_assert!(verify(&g, &c, &Params::tree(t).unwrap()).unwrap().verdict);
        }
    }
}
