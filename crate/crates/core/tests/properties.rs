use proptest::prelude::*;

use rainbowdom::format::{parse_assignment, parse_graph, serialize_assignment, serialize_graph};
use rainbowdom::{
    middle_graph, solve_krdf, solve_middle, verify_krdf, verify_mkrdf, ColorSet, Domain, Graph,
    RainbowAssignment, SolverConfig,
};

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> =
            (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        let m = pairs.len();
        proptest::collection::vec(any::<bool>(), m).prop_map(move |mask| {
            let edges = pairs.iter().zip(&mask).filter(|(_, &b)| b).map(|(&e, _)| e);
            Graph::new(n, edges).unwrap()
        })
    })
}

fn graph_and_assignment(max_n: usize, k: u8) -> impl Strategy<Value = (Graph, RainbowAssignment)> {
    graph(max_n).prop_flat_map(move |g| {
        let len = g.order() + g.size();
        proptest::collection::vec(0u8..1 << k, len).prop_map(move |bits| {
            let values = bits.into_iter().map(ColorSet::from_bits).collect();
            (g.clone(), RainbowAssignment::new(k, Domain::Middle, values).unwrap())
        })
    })
}

fn permutation(k: u8) -> impl Strategy<Value = Vec<u8>> {
    Just((1..=k).collect::<Vec<u8>>()).prop_shuffle()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn middle_verifier_agrees_with_host((g, f) in graph_and_assignment(6, 3)) {
        let host = middle_graph(&g).host;
        let a = verify_mkrdf(&g, &f).unwrap().valid();
        let b = verify_krdf(&host, &f.to_plain()).unwrap().valid();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn adding_colors_keeps_validity(
        (g, f) in graph_and_assignment(6, 3),
        extra in proptest::collection::vec(0u8..8, 21),
    ) {
        prop_assume!(verify_mkrdf(&g, &f).unwrap().valid());
        let mut bigger = f.clone();
        for (i, &e) in extra.iter().enumerate().take(f.len()) {
            bigger.set(i, f.get(i) | ColorSet::from_bits(e));
        }
        prop_assert!(verify_mkrdf(&g, &bigger).unwrap().valid());
        prop_assert!(bigger.weight() >= f.weight());
    }

    #[test]
    fn color_permutation_preserves_validity(
        (g, f) in graph_and_assignment(6, 3),
        perm in permutation(3),
    ) {
        let p = f.permute_colors(&perm);
        prop_assert_eq!(p.weight(), f.weight());
        prop_assert_eq!(
            verify_mkrdf(&g, &p).unwrap().valid(),
            verify_mkrdf(&g, &f).unwrap().valid()
        );
    }

    #[test]
    fn complement_is_involution(g in graph(8)) {
        let c = g.complement();
        prop_assert_eq!(c.size() + g.size(), g.order() * (g.order() - 1) / 2);
        prop_assert_eq!(c.complement(), g);
    }

    #[test]
    fn domain_relabel_round_trips((_g, f) in graph_and_assignment(5, 2)) {
        prop_assert_eq!(f.to_plain().to_middle(), f);
    }

    #[test]
    fn text_formats_round_trip((g, f) in graph_and_assignment(6, 3)) {
        prop_assert_eq!(parse_graph(&serialize_graph(&g)).unwrap(), g.clone());
        let back = parse_assignment(&serialize_assignment(&f, &g), &g).unwrap();
        prop_assert_eq!(back, f);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn optimum_is_label_invariant(g in graph(4), seed in any::<u64>()) {
        let n = g.order();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut s = seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        let relabeled = Graph::new(n, g.edges().iter().map(|&(u, v)| (perm[u], perm[v]))).unwrap();
        let cfg = SolverConfig::default();
        let a = solve_middle(&g, 3, &cfg).unwrap();
        let b = solve_middle(&relabeled, 3, &cfg).unwrap();
        prop_assert_eq!(a.value, b.value);
        prop_assert!(verify_mkrdf(&g, &a.certificate).unwrap().valid());
        prop_assert_eq!(a.certificate.weight(), a.value);
    }

    #[test]
    fn more_colors_cost_no_less(g in graph(5)) {
        let cfg = SolverConfig::default();
        let vals: Vec<usize> = (1..=3).map(|k| solve_krdf(&g, k, &cfg).unwrap().value).collect();
        prop_assert!(vals[0] <= vals[1] && vals[1] <= vals[2]);
        prop_assert!(vals[2] <= g.order());
    }
}
