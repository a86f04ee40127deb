use lirr::*;
use proptest::prelude::*;

/// A simple graph on `n` vertices from the lower triangle of `bits`.
fn graph_from_bits(n: usize, bits: &[bool]) -> Graph {
    let mut edges = Vec::new();
    let mut k = 0;
    for v in 0..n {
        for u in 0..v {
            if bits[k] {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// Drops edges that would push a degree above three.
fn subcubic_from_bits(n: usize, bits: &[bool]) -> Graph {
    let g = graph_from_bits(n, bits);
    let mut deg = vec![0; n];
    let edges: Vec<_> = g
        .edges()
        .iter()
        .copied()
        .filter(|&(u, v)| {
            let ok = deg[u] < 3 && deg[v] < 3;
            if ok {
                deg[u] += 1;
                deg[v] += 1;
            }
            ok
        })
        .collect();
    Graph::from_edges(n, &edges).unwrap()
}

fn graphs(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n, proptest::collection::vec(any::<bool>(), max_n * max_n))
        .prop_map(|(n, bits)| graph_from_bits(n, &bits))
}

fn subcubic(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n, proptest::collection::vec(any::<bool>(), max_n * max_n))
        .prop_map(|(n, bits)| subcubic_from_bits(n, &bits))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2000))]

    #[test]
    fn swaps_keep_colorings_valid(g in graphs(9), a in 1usize..5, offset in 1usize..4, v in 0usize..9, extra in 0usize..2) {
        let b = (a - 1 + offset) % 4 + 1;
        let v = v % g.n();
        if let Some(c) = chi_irr(&g, decomposability_bound(&g).max(1)).coloring() {
            let c = EdgeColoring::new(c.k.max(4) + extra, c.colors.clone());
            let comp = kempe_component(&g, &c, a, b, v).unwrap();
            let swapped = swap(&g, &c, &comp).unwrap();
            prop_assert!(verify_coloring(&g, &swapped).unwrap().valid);
            // Swapping back restores the original.
            let back = kempe_component(&g, &swapped, a, b, v).unwrap();
            prop_assert_eq!(swap(&g, &swapped, &back).unwrap().colors, c.colors);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn exact_witness_is_valid_and_minimal(g in graphs(8)) {
        let r = chi_irr(&g, decomposability_bound(&g).max(1));
        match &r.status {
            SolveStatus::Colored { k, coloring } => {
                prop_assert!(verify_coloring(&g, coloring).unwrap().valid);
                prop_assert_eq!(coloring.colors_used(), *k);
                if *k > 0 {
                    prop_assert!(chi_irr(&g, k - 1).colors().is_none());
                }
            }
            SolveStatus::NotDecomposable => prop_assert!(!is_decomposable(&g).0),
            other => prop_assert!(false, "unexpected {:?}", other),
        }
    }

    #[test]
    fn graph6_round_trips(n in 0usize..80, seed in any::<u64>()) {
        let mut x = seed | 1;
        let mut edges = Vec::new();
        for v in 0..n {
            for u in 0..v {
                x ^= x << 13; x ^= x >> 7; x ^= x << 17;
                if x % 5 == 0 { edges.push((u, v)); }
            }
        }
        let g = Graph::from_edges(n, &edges).unwrap();
        let text = write_graph6(&g).unwrap();
        prop_assert_eq!(parse_graph6(&text).unwrap(), g);
    }

    #[test]
    fn decomposition_builders_validate(g in subcubic(10)) {
        if let Ok(d) = two_path_decomposition(&g) {
            prop_assert!(validate_decomposition(&g, &d, Mode::Any).valid);
            prop_assert_eq!(d.counts().0, d.elements.len());
        }
        match strongly_pertinent_decomposition(&g) {
            Ok(d) => {
                prop_assert!(validate_decomposition(&g, &d, Mode::StronglyPertinent).valid);
                let again = Decomposition::from_json_str(&g, &d.to_json_string()).unwrap();
                prop_assert_eq!(again, d);
            }
            Err(_) => prop_assert!(!is_decomposable(&g).0),
        }
    }

    #[test]
    fn subcubic_colorer_succeeds_or_the_decomposition_is_refuted(g in subcubic(10)) {
        let Ok(d) = strongly_pertinent_decomposition(&g) else { return Ok(()) };
        prop_assume!(g.edge_count() > 0);
        match color_subcubic_4(&g, &d) {
            Ok(out) => {
                prop_assert!(verify_coloring(&g, &out.coloring).unwrap().valid);
                prop_assert!(out.coloring.colors_used() <= 4);
                prop_assert!(element_properties_hold(&d, &out.coloring));
            }
            Err(_) => {
                let r = element_uniform_search(&g, &d, 4, false).unwrap();
                prop_assert_eq!(r.status, SolveStatus::Refuted { k_max: 4 });
            }
        }
    }

    #[test]
    fn subdivided_graphs_take_two_colors(n in 2usize..6, pairs in proptest::collection::vec((0usize..6, 0usize..6), 1..8)) {
        let edges: Vec<_> = pairs.into_iter().map(|(u, v)| (u % n, v % n)).filter(|(u, v)| u != v).collect();
        prop_assume!(!edges.is_empty());
        let base = Graph::multigraph_from_edges(n, &edges).unwrap();
        match color_fully_subdivided_2(&base) {
            Ok(c) => {
                prop_assert!(verify_coloring(&fully_subdivide(&base), &c).unwrap().valid);
                prop_assert!(c.colors_used() <= 2);
            }
            Err(e) => prop_assert_eq!(e, ConstructiveError::OddCycleBase),
        }
    }
}
