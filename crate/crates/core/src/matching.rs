//! Matching number for forests (leaf greedy) and tiny graphs (exhaustive).

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest edge count handled by the exhaustive search.
pub const EXHAUSTIVE_EDGE_CAP: usize = 16;

/// A maximum matching together with its size.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matching {
    /// Canonical edges, sorted.
    pub edges: Vec<(usize, usize)>,
}

impl Matching {
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    /// Whether `v` is an endpoint of some matching edge.
    pub fn saturates(&self, v: usize) -> bool {
        self.edges.iter().any(|&(a, b)| a == v || b == v)
    }
}

/// `α'(G)` with a witness matching. Forests use the leaf greedy; any other
/// graph falls back to the exhaustive search and is capped at
/// [`EXHAUSTIVE_EDGE_CAP`] edges.
pub fn matching_number(g: &Graph) -> Result<Matching> {
    if g.is_forest() {
        Ok(forest_matching(g))
    } else {
        exhaustive_matching(g)
    }
}

/// Leaf greedy: walk each component bottom-up from its smallest vertex and
/// match a vertex to its parent whenever both are still free. Exact on forests.
///
/// # Panics
/// If `g` is not a forest.
pub fn forest_matching(g: &Graph) -> Matching {
    assert!(g.is_forest(), "leaf greedy matching needs a forest");
    let n = g.order();
    let mut parent = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    for root in 0..n {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            order.push(u);
            for &w in g.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    parent[w] = u;
                    queue.push_back(w);
                }
            }
        }
    }
    let mut matched = vec![false; n];
    let mut edges = Vec::new();
    for &v in order.iter().rev() {
        let p = parent[v];
        if p != usize::MAX && !matched[v] && !matched[p] {
            matched[v] = true;
            matched[p] = true;
            edges.push((v.min(p), v.max(p)));
        }
    }
    edges.sort_unstable();
    Matching { edges }
}

/// Tries every edge subset; the first largest matching in subset-mask order wins.
pub fn exhaustive_matching(g: &Graph) -> Result<Matching> {
    let m = g.size();
    if m > EXHAUSTIVE_EDGE_CAP {
        return Err(Error::Capacity {
            what: "exhaustive matching edge count",
            size: m,
            cap: EXHAUSTIVE_EDGE_CAP,
        });
    }
    let edges = g.edges();
    let mut best = 0u32;
    let mut best_size = 0;
    for subset in 0u32..(1 << m) {
        let size = subset.count_ones() as usize;
        if size <= best_size {
            continue;
        }
        let mut used: Vec<usize> = Vec::with_capacity(2 * size);
        let mut ok = true;
        for (i, &(u, v)) in edges.iter().enumerate() {
            if subset >> i & 1 == 1 {
                if used.contains(&u) || used.contains(&v) {
                    ok = false;
                    break;
                }
                used.extend([u, v]);
            }
        }
        if ok {
            best = subset;
            best_size = size;
        }
    }
    let edges = (0..m)
        .filter(|i| best >> i & 1 == 1)
        .map(|i| edges[i])
        .collect();
    Ok(Matching { edges })
}
