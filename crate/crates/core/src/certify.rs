//! Closed-form middle 3-rainbow domination numbers and explicit certificates.
//!
//! Builders follow the 1-based naming `v_1 .. v_n` of the family generators
//! shifted to 0-based indices: `v_i` is vertex `i - 1`.

use std::fmt;

use crate::error::{Error, Result};
use crate::generate::{generate, Family};
use crate::graph::Graph;
use crate::matching::forest_matching;
use crate::middle::Element;
use crate::rainbow::{verify_mkrdf, ColorSet, RainbowAssignment, VerificationReport};

/// Families with a known closed form for `γ*_r3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FormulaFamily {
    Path { n: usize },
    Cycle { n: usize },
    Complete { n: usize },
    Star { t: usize },
    DoubleStar { p: usize, q: usize },
}

impl FormulaFamily {
    fn check(self) -> Result<()> {
        let ok = match self {
            FormulaFamily::Path { n } => n >= 2,
            FormulaFamily::Cycle { n } => n >= 3,
            FormulaFamily::Complete { n } => n >= 2,
            FormulaFamily::Star { t } => t >= 2,
            FormulaFamily::DoubleStar { p, q } => p >= 1 && q >= 1,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::domain(format!("{self} is outside the closed-form range")))
        }
    }

    pub fn family(self) -> Family {
        match self {
            FormulaFamily::Path { n } => Family::Path { n },
            FormulaFamily::Cycle { n } => Family::Cycle { n },
            FormulaFamily::Complete { n } => Family::Complete { n },
            FormulaFamily::Star { t } => Family::Star { t },
            FormulaFamily::DoubleStar { p, q } => Family::DoubleStar { p, q },
        }
    }

    pub fn graph(self) -> Result<Graph> {
        self.check()?;
        generate(self.family())
    }
}

impl fmt::Display for FormulaFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.family().fmt(f)
    }
}

/// `γ*_r3` of a family member from its closed form.
pub fn formula_gamma_star_r3(family: FormulaFamily) -> Result<usize> {
    family.check()?;
    Ok(match family {
        FormulaFamily::Path { n } => match n % 3 {
            1 => (4 * n - 1) / 3,
            2 => (4 * n + 1) / 3,
            _ => 4 * n / 3,
        },
        FormulaFamily::Cycle { n } => match n % 3 {
            1 => (4 * n + 2) / 3,
            2 => (4 * n + 1) / 3,
            _ => 4 * n / 3,
        },
        FormulaFamily::Complete { n } if n % 2 == 0 => 3 * n / 2,
        FormulaFamily::Complete { n } => (3 * n - 1) / 2,
        FormulaFamily::Star { t } => t + 2,
        FormulaFamily::DoubleStar { p, q } => p + q + 3,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConstructionKind {
    Path,
    Cycle,
    Complete,
}

impl ConstructionKind {
    pub fn formula_family(self, n: usize) -> FormulaFamily {
        match self {
            ConstructionKind::Path => FormulaFamily::Path { n },
            ConstructionKind::Cycle => FormulaFamily::Cycle { n },
            ConstructionKind::Complete => FormulaFamily::Complete { n },
        }
    }
}

/// An explicit middle rainbow dominating function on a concrete graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub graph: Graph,
    pub assignment: RainbowAssignment,
}

impl Certificate {
    pub fn weight(&self) -> usize {
        self.assignment.weight()
    }

    pub fn verify(&self) -> VerificationReport {
        verify_mkrdf(&self.graph, &self.assignment).expect("certificate matches its graph")
    }
}

fn put(f: &mut RainbowAssignment, g: &Graph, x: Element, s: ColorSet) {
    f.set_at(g, x, s).expect("builder only touches elements of the graph");
}

/// The linear pattern on `v_1 .. v_n`: `{1}` on `v_{1+3i}` and `[3]` on
/// `v_{2+3i} v_{3+3i}`, with `{2,3}` on `v_n` when `n ≡ 2 (mod 3)`.
fn linear_pattern(f: &mut RainbowAssignment, g: &Graph, n: usize) {
    let one = ColorSet::singleton(1);
    let full = ColorSet::full(3);
    let singles = match n % 3 {
        1 => (n - 1) / 3,
        2 => (n - 2) / 3,
        _ => (n - 3) / 3,
    };
    for i in 0..=singles {
        put(f, g, Element::Vertex(3 * i), one);
    }
    // x_{4+6i} is the edge v_{2+3i} v_{3+3i}, i.e. 0-based (1+3i, 2+3i)
    let blocks = match n % 3 {
        1 => (n - 1) / 3,
        2 => (n - 2) / 3,
        _ => n / 3,
    };
    for i in 0..blocks {
        put(f, g, Element::edge(1 + 3 * i, 2 + 3 * i), full);
    }
    if n % 3 == 2 {
        put(f, g, Element::Vertex(n - 1), ColorSet::from_colors([2, 3]));
    }
}

/// A middle 3-rainbow dominating function of weight `formula_gamma_star_r3`.
pub fn construct_m3rdf(kind: ConstructionKind, n: usize) -> Result<Certificate> {
    let graph = kind.formula_family(n).graph()?;
    let mut f = RainbowAssignment::empty_middle(3, &graph)?;
    match kind {
        ConstructionKind::Path => linear_pattern(&mut f, &graph, n),
        ConstructionKind::Cycle => {
            linear_pattern(&mut f, &graph, n);
            if n % 3 == 1 {
                // closing edge v_n v_1
                put(&mut f, &graph, Element::edge(n - 1, 0), ColorSet::singleton(1));
            }
            // n ≡ 2: the path certificate already dominates the closing edge,
            // which sees {1} at v_1 and {2,3} at v_n
        }
        ConstructionKind::Complete => {
            let full = ColorSet::full(3);
            if n % 2 == 1 {
                put(&mut f, &graph, Element::Vertex(0), ColorSet::singleton(1));
                for i in 1..=(n - 1) / 2 {
                    put(&mut f, &graph, Element::edge(2 * i - 1, 2 * i), full);
                }
            } else {
                for i in 1..=n / 2 {
                    put(&mut f, &graph, Element::edge(2 * i - 2, 2 * i - 1), full);
                }
            }
        }
    }
    Ok(Certificate { graph, assignment: f })
}

/// Maximum-matching certificate for a tree: `[3]` on the edges of a maximum
/// matching, `{1}` on every unsaturated vertex. Its weight is `n + α'(T)`.
pub fn construct_tree_matching(t: &Graph) -> Result<RainbowAssignment> {
    if !t.is_tree() {
        return Err(Error::domain("construct_tree_matching needs a tree"));
    }
    let matching = forest_matching(t);
    let mut f = RainbowAssignment::empty_middle(3, t)?;
    for &(u, v) in &matching.edges {
        put(&mut f, t, Element::Edge(u, v), ColorSet::full(3));
    }
    for v in 0..t.order() {
        if !matching.saturates(v) {
            put(&mut f, t, Element::Vertex(v), ColorSet::singleton(1));
        }
    }
    Ok(f)
}
