//! Simple undirected graphs with a canonical edge list.

use std::collections::VecDeque;

use crate::error::{Error, Result};

/// A simple undirected graph on vertices `0..order`.
///
/// Edges are stored as `(u, v)` with `u < v`, sorted lexicographically. That
/// order fixes the index of every edge, and with it the element order of the
/// middle graph, so everything downstream is deterministic.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    order: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph, rejecting loops, out-of-range endpoints and duplicate edges.
    pub fn new(order: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut canon = Vec::new();
        for (u, v) in edges {
            if u >= order || v >= order {
                return Err(Error::domain(format!(
                    "edge ({u}, {v}) has an endpoint outside 0..{order}"
                )));
            }
            if u == v {
                return Err(Error::domain(format!("loop at vertex {u}")));
            }
            canon.push((u.min(v), u.max(v)));
        }
        canon.sort_unstable();
        if let Some(w) = canon.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::domain(format!(
                "duplicate edge ({}, {})",
                w[0].0, w[0].1
            )));
        }
        Ok(Self::from_canonical(order, canon))
    }

    fn from_canonical(order: usize, edges: Vec<(usize, usize)>) -> Self {
        let mut adj = vec![Vec::new(); order];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph { order, edges, adj }
    }

    /// The edgeless graph on `order` vertices.
    pub fn empty(order: usize) -> Self {
        Self::from_canonical(order, Vec::new())
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edge_index(u, v).is_some()
    }

    /// Position of edge `{u, v}` in the canonical edge list.
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).ok()
    }

    /// Connected components, each listed in increasing vertex order.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.order];
        let mut out = Vec::new();
        for root in 0..self.order {
            if seen[root] {
                continue;
            }
            seen[root] = true;
            let mut comp = vec![root];
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.order > 0 && self.components().len() == 1
    }

    pub fn is_forest(&self) -> bool {
        self.edges.len() + self.components().len() == self.order
    }

    pub fn is_tree(&self) -> bool {
        self.order > 0 && self.is_connected() && self.edges.len() + 1 == self.order
    }

    /// True when the graph is a single path `P_n` (any labelling), `n >= 1`.
    pub fn is_path(&self) -> bool {
        self.is_tree() && self.max_degree() <= 2
    }

    /// True when the graph is a single cycle `C_n`, `n >= 3`.
    pub fn is_cycle(&self) -> bool {
        self.order >= 3
            && self.is_connected()
            && self.adj.iter().all(|a| a.len() == 2)
    }

    pub fn complement(&self) -> Graph {
        let mut edges = Vec::new();
        for u in 0..self.order {
            for v in (u + 1)..self.order {
                if !self.has_edge(u, v) {
                    edges.push((u, v));
                }
            }
        }
        Self::from_canonical(self.order, edges)
    }

    /// `G - v`: the induced subgraph on the remaining vertices, relabelled so
    /// that vertices above `v` shift down by one.
    pub fn remove_vertex(&self, v: usize) -> Result<Graph> {
        if v >= self.order {
            return Err(Error::domain(format!(
                "vertex {v} is not in a graph of order {}",
                self.order
            )));
        }
        let shift = |x: usize| if x > v { x - 1 } else { x };
        let edges = self
            .edges
            .iter()
            .filter(|&&(a, b)| a != v && b != v)
            .map(|&(a, b)| (shift(a), shift(b)))
            .collect();
        Ok(Self::from_canonical(self.order - 1, edges))
    }

    /// `G + e` for a non-edge `e = {u, v}`.
    pub fn add_edge(&self, u: usize, v: usize) -> Result<Graph> {
        if u >= self.order || v >= self.order || u == v {
            return Err(Error::domain(format!("({u}, {v}) is not a vertex pair of G")));
        }
        if self.has_edge(u, v) {
            return Err(Error::domain(format!("({u}, {v}) is already an edge")));
        }
        let mut edges = self.edges.clone();
        edges.push((u.min(v), u.max(v)));
        edges.sort_unstable();
        Ok(Self::from_canonical(self.order, edges))
    }

    /// `G - e` for an edge `e = {u, v}`.
    pub fn delete_edge(&self, u: usize, v: usize) -> Result<Graph> {
        let idx = self
            .edge_index(u, v)
            .ok_or_else(|| Error::domain(format!("({u}, {v}) is not an edge")))?;
        let mut edges = self.edges.clone();
        edges.remove(idx);
        Ok(Self::from_canonical(self.order, edges))
    }

    /// Neighbourhoods as bitmasks; only valid for graphs of order at most 64.
    pub(crate) fn neighbor_masks(&self) -> Vec<u64> {
        debug_assert!(self.order <= 64);
        self.adj
            .iter()
            .map(|a| a.iter().fold(0u64, |m, &w| m | (1 << w)))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p3() -> Graph {
        Graph::new(3, [(1, 0), (2, 1)]).unwrap()
    }

    #[test]
    fn canonicalizes_edges() {
        let g = Graph::new(4, [(3, 2), (1, 0), (2, 0)]).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (0, 2), (2, 3)]);
        assert_eq!(g.neighbors(0), &[1, 2]);
        assert_eq!(g.edge_index(3, 2), Some(2));
    }

    #[test]
    fn rejects_bad_edges() {
        assert!(matches!(Graph::new(2, [(0, 0)]), Err(Error::Domain(_))));
        assert!(matches!(Graph::new(2, [(0, 2)]), Err(Error::Domain(_))));
        assert!(matches!(
            Graph::new(3, [(0, 1), (1, 0)]),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn complement_examples() {
        let k3 = Graph::new(3, [(0, 1), (0, 2), (1, 2)]).unwrap();
        assert_eq!(k3.complement(), Graph::empty(3));
        assert_eq!(Graph::empty(2).complement(), Graph::new(2, [(0, 1)]).unwrap());
        assert_eq!(p3().complement().edges(), &[(0, 2)]);
    }

    #[test]
    fn structure_predicates() {
        assert!(p3().is_tree());
        assert!(p3().is_path());
        assert!(!p3().is_cycle());
        assert!(Graph::empty(1).is_tree());
        assert!(!Graph::empty(3).is_connected());
        assert!(Graph::empty(3).is_forest());
        assert!(!Graph::empty(0).is_tree());
        let c4 = Graph::new(4, [(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        assert!(c4.is_cycle());
        assert!(!c4.is_forest());
    }

    #[test]
    fn vertex_and_edge_surgery() {
        let g = p3();
        assert_eq!(g.remove_vertex(0).unwrap(), Graph::new(2, [(0, 1)]).unwrap());
        assert_eq!(g.remove_vertex(1).unwrap(), Graph::empty(2));
        assert!(g.remove_vertex(3).is_err());
        let c3 = g.add_edge(0, 2).unwrap();
        assert_eq!(c3.size(), 3);
        assert!(g.add_edge(0, 1).is_err());
        assert_eq!(c3.delete_edge(2, 0).unwrap(), g);
        assert!(g.delete_edge(0, 2).is_err());
    }
}
