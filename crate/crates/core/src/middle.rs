//! Middle graphs: vertices and edges of a source graph as one element set.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A vertex or an edge of a source graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Element {
    Vertex(usize),
    /// Canonical edge, `u < v`.
    Edge(usize, usize),
}

impl Element {
    pub fn edge(u: usize, v: usize) -> Self {
        Element::Edge(u.min(v), u.max(v))
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Vertex(v) => write!(f, "v{v}"),
            Element::Edge(u, v) => write!(f, "e{u}-{v}"),
        }
    }
}

/// Element order used everywhere: all vertices, then edges in canonical order.
pub fn elements(g: &Graph) -> Vec<Element> {
    (0..g.order())
        .map(Element::Vertex)
        .chain(g.edges().iter().map(|&(u, v)| Element::Edge(u, v)))
        .collect()
}

/// Index of `x` in [`elements`] order, if `x` belongs to `g`.
pub fn element_index(g: &Graph, x: Element) -> Option<usize> {
    match x {
        Element::Vertex(v) if v < g.order() => Some(v),
        Element::Vertex(_) => None,
        Element::Edge(u, v) => g.edge_index(u, v).map(|i| g.order() + i),
    }
}

/// Inverse of [`element_index`].
pub fn element_at(g: &Graph, idx: usize) -> Option<Element> {
    if idx < g.order() {
        Some(Element::Vertex(idx))
    } else {
        g.edges()
            .get(idx - g.order())
            .map(|&(u, v)| Element::Edge(u, v))
    }
}

/// `N_M(x)`: incident edges of a vertex; for an edge, its two endpoints and
/// every edge sharing an endpoint with it. Returned in element order.
pub fn middle_neighborhood(g: &Graph, x: Element) -> Result<Vec<Element>> {
    if element_index(g, x).is_none() {
        return Err(Error::domain(format!("{x} is not an element of the graph")));
    }
    let mut out = match x {
        Element::Vertex(v) => g
            .neighbors(v)
            .iter()
            .map(|&w| Element::edge(v, w))
            .collect::<Vec<_>>(),
        Element::Edge(u, v) => {
            let mut out = vec![Element::Vertex(u), Element::Vertex(v)];
            for &end in &[u, v] {
                for &w in g.neighbors(end) {
                    let e = Element::edge(end, w);
                    if e != x {
                        out.push(e);
                    }
                }
            }
            out
        }
    };
    out.sort_by_key(|&e| element_index(g, e));
    out.dedup();
    Ok(out)
}

/// `M(G)` as an ordinary graph plus the labelling back to `G`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MiddleGraph {
    pub host: Graph,
    pub labels: Vec<Element>,
    pub source: Graph,
}

impl MiddleGraph {
    pub fn index_of(&self, x: Element) -> Option<usize> {
        element_index(&self.source, x)
    }
}

pub fn middle_graph(g: &Graph) -> MiddleGraph {
    let n = g.order();
    let mut host_edges = Vec::new();
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        host_edges.push((u, n + i));
        host_edges.push((v, n + i));
    }
    for v in 0..n {
        let incident: Vec<usize> = g
            .neighbors(v)
            .iter()
            .map(|&w| n + g.edge_index(v, w).expect("neighbor edge exists"))
            .collect();
        for (a, &ea) in incident.iter().enumerate() {
            for &eb in &incident[a + 1..] {
                host_edges.push((ea, eb));
            }
        }
    }
    let host = Graph::new(n + g.size(), host_edges).expect("middle graph is simple");
    MiddleGraph {
        host,
        labels: elements(g),
        source: g.clone(),
    }
}
