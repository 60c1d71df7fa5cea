use ordered_paths::contain::{contains_mono_path, embed_generic};
use ordered_paths::io::{
    parse_certificate, parse_coloring, parse_graph, parse_host, write_certificate, write_coloring, write_graph_edges,
    write_graph_matrix, HostFile,
};
use ordered_paths::render::{render_matrix, Annotations};
use ordered_paths::turan::{turan_log_bound, turan_log_bound_refined, turan_recursion_tree, RecursionNode};
use ordered_paths::{
    contains_path, find_mono, Color, Mode, OrderedColoring, OrderedGraph, PathCertificate, PathFamily, PathSpec,
};
use proptest::prelude::*;

fn graph_strategy(max_n: usize) -> impl Strategy<Value = OrderedGraph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut it = bits.into_iter();
            OrderedGraph::from_fn(n, |_, _| it.next().unwrap())
        })
    })
}

fn coloring_strategy(max_n: usize) -> impl Strategy<Value = OrderedColoring> {
    graph_strategy(max_n).prop_map(OrderedColoring::from_red_graph)
}

fn spec_strategy() -> impl Strategy<Value = PathSpec> {
    (prop::sample::select(PathFamily::ALL.to_vec()), 2usize..=6)
        .prop_filter_map("odd length for a halves family", |(f, n)| PathSpec::new(f, n).ok())
}

proptest! {
    #[test]
    fn coloring_round_trip(c in coloring_strategy(12)) {
        let text = write_coloring(&c);
        prop_assert_eq!(parse_coloring(&text).unwrap(), c.clone());
        prop_assert_eq!(parse_host(&text).unwrap().n_vertices(), c.n_vertices());
    }

    #[test]
    fn graph_round_trip(g in graph_strategy(12)) {
        prop_assert_eq!(parse_graph(&write_graph_matrix(&g)).unwrap(), g.clone());
        prop_assert_eq!(parse_graph(&write_graph_edges(&g)).unwrap(), g.clone());
        if g.n_vertices() > 1 {
            prop_assert_eq!(parse_host(&write_graph_matrix(&g)).unwrap(), HostFile::Graph(g));
        }
    }

    #[test]
    fn certificate_round_trip(spec in spec_strategy(), extra in 0usize..6, red in any::<bool>(), seed in any::<u64>()) {
        let nv = spec.n() + extra;
        // pick n distinct vertices from a seeded walk and lay them out in pattern order
        let mut pool: Vec<usize> = (1..=nv).collect();
        let mut s = seed;
        for i in (1..pool.len()).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            pool.swap(i, (s >> 33) as usize % (i + 1));
        }
        let mut chosen = pool[..spec.n()].to_vec();
        chosen.sort_unstable();
        let vertices = spec.traversal().iter().map(|&r| chosen[r - 1]).collect();
        let color = Some(if red { Color::Red } else { Color::Blue });
        let cert = PathCertificate::new(spec, vertices, color);
        cert.check_pattern(nv).unwrap();
        let (back, back_nv) = parse_certificate(&write_certificate(&cert, nv)).unwrap();
        prop_assert_eq!(back, cert);
        prop_assert_eq!(back_nv, nv);
    }

    #[test]
    fn staircase_matches_generic_embedding(g in graph_strategy(9), spec in spec_strategy()) {
        let fast = contains_path(&g, &spec);
        let slow = embed_generic(&g, &spec.pattern_graph()).unwrap();
        prop_assert_eq!(fast.is_some(), slow.is_some());
        if let Some(cert) = fast {
            cert.validate_in_graph(&g).unwrap();
        }
    }

    #[test]
    fn reversal_swaps_ap_and_pgl(g in graph_strategy(10), k in 1usize..=3) {
        let ap = PathSpec::new(PathFamily::Ap, 2 * k).unwrap();
        let pgl = PathSpec::new(PathFamily::Pgl, 2 * k).unwrap();
        prop_assert_eq!(contains_path(&g, &ap).is_some(), contains_path(&g.reverse(), &pgl).is_some());
    }

    #[test]
    fn best_effort_agrees_with_containment(c in coloring_strategy(10), n in 2usize..=5) {
        let spec = PathSpec::ap(n).unwrap();
        if c.n_vertices() >= n {
            if let Some(found) = find_mono(&c, &spec, Mode::BestEffort).unwrap() {
                found.certificate.validate_in_coloring(&c).unwrap();
                let color = found.certificate.color.unwrap();
                prop_assert!(contains_mono_path(&c, &spec, color).is_some());
            }
        }
    }
}

#[test]
fn trace_shows_every_cell_once() {
    let c = OrderedColoring::monochromatic(17, Color::Red);
    let found = find_mono(&c, &PathSpec::ap(8).unwrap(), Mode::Strict).unwrap().unwrap();
    let text = render_matrix(Annotations::Trace(&found.trace));
    let rows: Vec<&str> = text.lines().collect();
    assert_eq!(rows.len(), 17);
    for (i, row) in rows.iter().enumerate() {
        assert_eq!(row.split_whitespace().count(), 16 - i, "row {}", i + 1);
    }
    let cells: Vec<&str> = text.split_whitespace().collect();
    assert_eq!(cells.len(), 17 * 16 / 2);
    assert_eq!(cells.iter().filter(|&&s| s == "g").count(), found.trace.grey_count());
    let removed = cells.iter().filter(|s| s.parse::<usize>().is_ok()).count();
    assert_eq!(removed, found.trace.removed_count());
    assert_eq!(cells.iter().filter(|&&s| s == "*").count(), found.trace.survivors().len());
}

#[test]
fn log_bound_is_monotone_in_host_size() {
    for n in [4, 6, 8, 10] {
        let mut prev = 0;
        for nv in (n..=40 * n).step_by(2) {
            let b = turan_log_bound(nv, n).unwrap();
            assert!(b >= prev, "n={n} N={nv}");
            prev = b;
        }
    }
}

fn recursion_total(node: &RecursionNode) -> u64 {
    match node.bipartite_term {
        None => node.value,
        Some(b) => b + node.children.iter().map(recursion_total).sum::<u64>(),
    }
}

#[test]
fn recursion_stays_under_the_refined_bound() {
    for n in [4, 6, 8] {
        for t in 0..=5 {
            let nv = n << t;
            let tree = turan_recursion_tree(nv, n).unwrap();
            let refined = turan_log_bound_refined(nv, n).unwrap();
            assert!(tree.value <= refined, "n={n} N={nv}: {} > {refined}", tree.value);
            assert!(tree.value <= turan_log_bound(nv, n).unwrap());
            assert_eq!(recursion_total(&tree), tree.value);
            assert_eq!(tree.depth(), t);
        }
    }
}
