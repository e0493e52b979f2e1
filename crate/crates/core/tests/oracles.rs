//! Agreement between independent routes to the same numbers.

use rainbowdom::certify::{
    construct_m3rdf, construct_tree_matching, formula_gamma_star_r3, ConstructionKind,
    FormulaFamily,
};
use rainbowdom::domatic::{
    construct_family, domatic_bounds_host, domatic_exact_tiny, verify_family, FamilyKind,
};
use rainbowdom::laws::labelled_graphs;
use rainbowdom::matching::{exhaustive_matching, forest_matching};
use rainbowdom::solver::{brute_force_krdf, brute_force_optimal, enumerate_optimal};
use rainbowdom::{
    dp_middle, generate, middle_graph, solve_krdf, solve_middle, verify_krdf, verify_mkrdf,
    DpKind, Family, Graph, SolverConfig,
};

fn cfg() -> SolverConfig {
    SolverConfig::default()
}

/// SplitMix64 written out from its published constants.
struct Sm64(u64);

impl Sm64 {
    fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }
}

/// Prüfer decoding by repeatedly scanning for the smallest leaf.
fn naive_decode(seq: &[usize]) -> Vec<(usize, usize)> {
    let n = seq.len() + 2;
    let mut degree = vec![1; n];
    for &s in seq {
        degree[s] += 1;
    }
    let mut edges = Vec::new();
    for &s in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
        edges.push((leaf.min(s), leaf.max(s)));
        degree[leaf] = 0;
        degree[s] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    edges.sort();
    edges
}

#[test]
fn random_tree_matches_reference_generator() {
    let mut rng = Sm64(7);
    assert_eq!(rng.next(), 7191089600892374487);
    for (n, seed) in [(9usize, 7u64), (10, 0), (5, 123), (3, 99)] {
        let mut rng = Sm64(seed);
        let zone = (u64::MAX / n as u64) * n as u64;
        let seq: Vec<usize> = (0..n - 2)
            .map(|_| loop {
                let x = rng.next();
                if x < zone {
                    break (x % n as u64) as usize;
                }
            })
            .collect();
        let g = generate(Family::RandomTree { n, seed }).unwrap();
        assert_eq!(g.edges(), naive_decode(&seq).as_slice(), "n={n} seed={seed}");
        assert!(g.is_tree());
    }
}

#[test]
fn random_tree_seed_seven() {
    let g = generate(Family::RandomTree { n: 9, seed: 7 }).unwrap();
    let again = generate(Family::RandomTree { n: 9, seed: 7 }).unwrap();
    assert_eq!(g, again);
    assert_eq!(
        g.edges(),
        &[(0, 4), (0, 6), (1, 3), (2, 6), (3, 6), (3, 7), (5, 7), (7, 8)]
    );
}

#[test]
fn search_matches_exhaustive_on_small_graphs() {
    for g in labelled_graphs(1, 4) {
        for k in 1..=3u8 {
            let plain = solve_krdf(&g, k, &cfg()).unwrap().value;
            assert_eq!(plain, brute_force_krdf(&g, k).unwrap(), "{:?} k={k}", g.edges());
            let m = middle_graph(&g).host;
            if m.order() * k as usize <= 24 {
                let res = solve_middle(&g, k, &cfg()).unwrap();
                assert_eq!(res.value, brute_force_krdf(&m, k).unwrap(), "M{:?} k={k}", g.edges());
                assert!(verify_mkrdf(&g, &res.certificate).unwrap().valid());
            }
        }
    }
    for n in 1..=4 {
        let p = generate(Family::Path { n }).unwrap();
        for k in 1..=3u8 {
            let m = middle_graph(&p).host;
            assert_eq!(
                solve_krdf(&m, k, &cfg()).unwrap().value,
                brute_force_krdf(&m, k).unwrap()
            );
        }
    }
}

/// Domination number by trying every vertex subset.
fn domination_number(h: &Graph) -> usize {
    let n = h.order();
    (0u32..1 << n)
        .filter(|&s| {
            (0..n).all(|v| s >> v & 1 == 1 || h.neighbors(v).iter().any(|&w| s >> w & 1 == 1))
        })
        .map(|s| s.count_ones() as usize)
        .min()
        .unwrap()
}

#[test]
fn one_color_is_ordinary_domination() {
    for g in labelled_graphs(1, 5) {
        assert_eq!(solve_krdf(&g, 1, &cfg()).unwrap().value, domination_number(&g));
    }
    for f in [
        Family::Path { n: 6 },
        Family::Cycle { n: 6 },
        Family::Complete { n: 5 },
        Family::Star { t: 4 },
    ] {
        let m = middle_graph(&generate(f).unwrap()).host;
        assert_eq!(solve_krdf(&m, 1, &cfg()).unwrap().value, domination_number(&m), "{f}");
    }
}

#[test]
fn dynamic_program_matches_search() {
    for k in 1..=4u8 {
        for n in 2..=7 {
            let g = generate(Family::Path { n }).unwrap();
            assert_eq!(
                dp_middle(DpKind::Path, n, k).unwrap(),
                solve_middle(&g, k, &cfg()).unwrap().value,
                "P_{n} k={k}"
            );
        }
        for n in 3..=7 {
            let g = generate(Family::Cycle { n }).unwrap();
            assert_eq!(
                dp_middle(DpKind::Cycle, n, k).unwrap(),
                solve_middle(&g, k, &cfg()).unwrap().value,
                "C_{n} k={k}"
            );
        }
    }
}

#[test]
fn enumeration_matches_exhaustive() {
    for f in [Family::Path { n: 2 }, Family::Path { n: 3 }, Family::Star { t: 2 }] {
        let m = middle_graph(&generate(f).unwrap()).host;
        let (v1, mut a) = enumerate_optimal(&m, 3, &cfg()).unwrap();
        let (v2, mut b) = brute_force_optimal(&m, 3).unwrap();
        assert_eq!(v1, v2);
        let key = |f: &rainbowdom::RainbowAssignment| f.values().iter().map(|s| s.bits()).collect::<Vec<_>>();
        a.sort_by_key(key);
        b.sort_by_key(key);
        assert_eq!(a, b, "{f}");
    }
}

#[test]
fn closed_forms_match_search() {
    let check = |fam: FormulaFamily| {
        let g = fam.graph().unwrap();
        assert_eq!(
            formula_gamma_star_r3(fam).unwrap(),
            solve_middle(&g, 3, &cfg()).unwrap().value,
            "{fam}"
        );
    };
    (2..=8).for_each(|n| check(FormulaFamily::Path { n }));
    (3..=7).for_each(|n| check(FormulaFamily::Cycle { n }));
    (2..=5).for_each(|n| check(FormulaFamily::Complete { n }));
    (2..=5).for_each(|t| check(FormulaFamily::Star { t }));
    for p in 1..=3 {
        for q in 1..=3 {
            check(FormulaFamily::DoubleStar { p, q });
        }
    }
}

#[test]
fn constructions_over_full_ranges() {
    for (kind, range) in [
        (ConstructionKind::Path, 2..=60),
        (ConstructionKind::Cycle, 3..=60),
        (ConstructionKind::Complete, 2..=12),
    ] {
        for n in range {
            let c = construct_m3rdf(kind, n).unwrap();
            assert!(c.verify().valid(), "{kind:?} {n}");
            assert_eq!(c.weight(), formula_gamma_star_r3(kind.formula_family(n)).unwrap());
        }
    }
}

#[test]
fn tree_matching_certificates() {
    for seed in 0..100u64 {
        let n = 1 + (seed % 10) as usize;
        let t = generate(Family::RandomTree { n, seed }).unwrap();
        let alpha = exhaustive_matching(&t).unwrap().size();
        assert_eq!(forest_matching(&t).size(), alpha);
        let f = construct_tree_matching(&t).unwrap();
        assert!(verify_mkrdf(&t, &f).unwrap().valid());
        assert_eq!(f.weight(), n + alpha);
        assert!(solve_middle(&t, 3, &cfg()).unwrap().value <= n + alpha);
    }
}

#[test]
fn domatic_families_are_tight() {
    for n in (4..=20).step_by(2) {
        let fam = construct_family(FamilyKind::Path, n).unwrap();
        assert!(fam.loads().iter().all(|&l| l == 3), "path {n}");
    }
    for n in 4..=20 {
        let fam = construct_family(FamilyKind::Cycle, n).unwrap();
        assert!(verify_family(&fam).unwrap().valid(), "cycle {n}");
        for f in &fam.members {
            assert!(verify_krdf(&fam.host, f).unwrap().valid());
        }
    }
}

#[test]
fn domatic_oracle_within_bounds() {
    let mut hosts: Vec<Graph> = labelled_graphs(1, 4).collect();
    for f in [
        Family::Path { n: 2 },
        Family::Path { n: 3 },
        Family::Path { n: 4 },
        Family::Star { t: 3 },
        Family::Cycle { n: 3 },
    ] {
        hosts.push(middle_graph(&generate(f).unwrap()).host);
    }
    for h in hosts {
        for k in 1..=3u8 {
            let d = domatic_exact_tiny(&h, k).unwrap();
            let b = domatic_bounds_host(&h, k, None, &cfg()).unwrap();
            assert!(b.lower <= d && d <= b.upper, "{:?} k={k}: {d} not in [{}, {}]", h.edges(), b.lower, b.upper);
        }
    }
    let p3 = middle_graph(&generate(Family::Path { n: 3 }).unwrap()).host;
    assert_eq!(domatic_exact_tiny(&p3, 3).unwrap(), 3);
    let p4 = middle_graph(&generate(Family::Path { n: 4 }).unwrap()).host;
    assert_eq!(domatic_exact_tiny(&p4, 3).unwrap(), 4);
}
