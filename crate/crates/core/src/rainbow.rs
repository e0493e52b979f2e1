//! Color sets, rainbow assignments and their verification.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::middle::{element_at, element_index, Element};

/// Largest supported number of colors.
pub const MAX_COLORS: u8 = 8;

/// A subset of the colors `{1, .., 8}`; bit `c - 1` holds color `c`.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColorSet(u8);

impl ColorSet {
    pub const EMPTY: ColorSet = ColorSet(0);

    /// `[k] = {1, .., k}`.
    pub fn full(k: u8) -> Self {
        assert!(k <= MAX_COLORS);
        ColorSet(((1u16 << k) - 1) as u8)
    }

    pub fn from_bits(bits: u8) -> Self {
        ColorSet(bits)
    }

    /// # Panics
    /// If `c` is not in `1..=8`.
    pub fn singleton(c: u8) -> Self {
        assert!((1..=MAX_COLORS).contains(&c), "color {c} out of range");
        ColorSet(1 << (c - 1))
    }

    pub fn from_colors(colors: impl IntoIterator<Item = u8>) -> Self {
        colors
            .into_iter()
            .fold(ColorSet::EMPTY, |s, c| s | ColorSet::singleton(c))
    }

    pub fn bits(self) -> u8 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, c: u8) -> bool {
        (1..=MAX_COLORS).contains(&c) && self.0 >> (c - 1) & 1 == 1
    }

    pub fn is_subset(self, other: ColorSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Largest color present, 0 for the empty set.
    pub fn max_color(self) -> u8 {
        (8 - self.0.leading_zeros()) as u8
    }

    /// Colors in increasing order.
    pub fn iter(self) -> impl Iterator<Item = u8> {
        (1..=MAX_COLORS).filter(move |&c| self.contains(c))
    }

    /// Renames every color `c` to `perm[c - 1]`.
    pub fn permute(self, perm: &[u8]) -> ColorSet {
        ColorSet::from_colors(self.iter().map(|c| perm[c as usize - 1]))
    }

    /// All subsets of `[k]` ordered by cardinality, then bitmask.
    pub fn candidates(k: u8) -> Vec<ColorSet> {
        let mut all: Vec<ColorSet> = (0..(1u16 << k)).map(|b| ColorSet(b as u8)).collect();
        all.sort_by_key(|s| (s.len(), s.0));
        all
    }
}

impl std::ops::BitOr for ColorSet {
    type Output = ColorSet;
    fn bitor(self, rhs: ColorSet) -> ColorSet {
        ColorSet(self.0 | rhs.0)
    }
}

impl std::ops::BitOrAssign for ColorSet {
    fn bitor_assign(&mut self, rhs: ColorSet) {
        self.0 |= rhs.0;
    }
}

/// Comma-separated colors, or `-` for the empty set.
impl fmt::Display for ColorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("-");
        }
        let parts: Vec<String> = self.iter().map(|c| c.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

impl fmt::Debug for ColorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{self}}}")
    }
}

/// What an assignment is keyed by.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Domain {
    /// Every element of `V(G) ∪ E(G)`, in element order.
    Middle,
    /// Every vertex of a host graph.
    Plain,
}

impl fmt::Display for Domain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Domain::Middle => "middle",
            Domain::Plain => "plain",
        })
    }
}

/// A total map from the keys of a domain to color sets.
///
/// For the middle domain, key `i` is the `i`-th element in
/// [`crate::middle::elements`] order, which is also the host vertex index in
/// [`crate::middle::middle_graph`]. Relabelling between the two domains is
/// therefore the identity on `values`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RainbowAssignment {
    k: u8,
    domain: Domain,
    values: Vec<ColorSet>,
}

impl RainbowAssignment {
    pub fn new(k: u8, domain: Domain, values: Vec<ColorSet>) -> Result<Self> {
        check_k(k)?;
        if let Some((i, s)) = values.iter().enumerate().find(|(_, s)| s.max_color() > k) {
            return Err(Error::domain(format!(
                "value {{{s}}} at key {i} uses a color above k = {k}"
            )));
        }
        Ok(RainbowAssignment { k, domain, values })
    }

    /// The all-empty assignment over `len` keys.
    pub fn empty(k: u8, domain: Domain, len: usize) -> Result<Self> {
        Self::new(k, domain, vec![ColorSet::EMPTY; len])
    }

    /// The all-empty middle assignment over the elements of `g`.
    pub fn empty_middle(k: u8, g: &Graph) -> Result<Self> {
        Self::empty(k, Domain::Middle, g.order() + g.size())
    }

    pub fn k(&self) -> u8 {
        self.k
    }

    pub fn domain(&self) -> Domain {
        self.domain
    }

    pub fn values(&self) -> &[ColorSet] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn get(&self, key: usize) -> ColorSet {
        self.values[key]
    }

    pub fn set(&mut self, key: usize, value: ColorSet) {
        assert!(value.max_color() <= self.k, "color above k");
        self.values[key] = value;
    }

    /// Value of a middle-domain element of `g`.
    pub fn at(&self, g: &Graph, x: Element) -> Result<ColorSet> {
        let idx = element_index(g, x)
            .filter(|&i| i < self.values.len())
            .ok_or_else(|| Error::domain(format!("{x} is not a key of this assignment")))?;
        Ok(self.values[idx])
    }

    pub fn set_at(&mut self, g: &Graph, x: Element, value: ColorSet) -> Result<()> {
        let idx = element_index(g, x)
            .filter(|&i| i < self.values.len())
            .ok_or_else(|| Error::domain(format!("{x} is not a key of this assignment")))?;
        self.set(idx, value);
        Ok(())
    }

    pub fn weight(&self) -> usize {
        self.values.iter().map(|s| s.len()).sum()
    }

    /// The same values keyed by the host vertices of `M(G)`.
    pub fn to_plain(&self) -> RainbowAssignment {
        RainbowAssignment {
            domain: Domain::Plain,
            ..self.clone()
        }
    }

    /// The same values keyed by the elements of `G`, reading `self` as an
    /// assignment on the host of `M(G)`.
    pub fn to_middle(&self) -> RainbowAssignment {
        RainbowAssignment {
            domain: Domain::Middle,
            ..self.clone()
        }
    }

    /// Applies a permutation of the color names to every value.
    pub fn permute_colors(&self, perm: &[u8]) -> RainbowAssignment {
        RainbowAssignment {
            values: self.values.iter().map(|s| s.permute(perm)).collect(),
            ..self.clone()
        }
    }

    /// Key label used in text output: `v<i>` or `e<u>-<v>`.
    pub fn key_label(&self, g: Option<&Graph>, key: usize) -> String {
        match (self.domain, g) {
            (Domain::Middle, Some(g)) => element_at(g, key)
                .map(|e| e.to_string())
                .unwrap_or_else(|| format!("#{key}")),
            _ => format!("v{key}"),
        }
    }
}

pub(crate) fn check_k(k: u8) -> Result<()> {
    if (1..=MAX_COLORS).contains(&k) {
        Ok(())
    } else {
        Err(Error::domain(format!("k must lie in 1..={MAX_COLORS}, got {k}")))
    }
}

/// A single failed condition found by a verifier.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    /// An empty-valued key whose neighbourhood does not see every color.
    Undominated {
        key: usize,
        #[serde(serialize_with = "ser_colors")]
        union: ColorSet,
    },
    /// A family member that is not itself a rainbow dominating function.
    InvalidMember {
        member: usize,
        key: usize,
        #[serde(serialize_with = "ser_colors")]
        union: ColorSet,
    },
    /// A host vertex whose total load over a family exceeds `k`.
    OverCapacity { key: usize, load: usize },
}

fn ser_colors<S: serde::Serializer>(s: &ColorSet, ser: S) -> std::result::Result<S::Ok, S::Error> {
    ser.collect_seq(s.iter())
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub violations: Vec<Violation>,
}

impl VerificationReport {
    pub fn valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks a k-rainbow dominating function on a plain graph.
pub fn verify_krdf(h: &Graph, f: &RainbowAssignment) -> Result<VerificationReport> {
    if f.domain != Domain::Plain || f.len() != h.order() {
        return Err(Error::domain(format!(
            "expected a plain assignment over {} vertices, got a {} assignment over {} keys",
            h.order(),
            f.domain,
            f.len()
        )));
    }
    let full = ColorSet::full(f.k);
    let violations = (0..h.order())
        .filter(|&v| f.values[v].is_empty())
        .filter_map(|v| {
            let union = h
                .neighbors(v)
                .iter()
                .fold(ColorSet::EMPTY, |acc, &w| acc | f.values[w]);
            (union != full).then_some(Violation::Undominated { key: v, union })
        })
        .collect();
    Ok(VerificationReport { violations })
}

/// Checks a middle k-rainbow dominating function directly on `V(G) ∪ E(G)`,
/// using `N_M` rather than the middle graph.
pub fn verify_mkrdf(g: &Graph, f: &RainbowAssignment) -> Result<VerificationReport> {
    let n = g.order();
    if f.domain != Domain::Middle || f.len() != n + g.size() {
        return Err(Error::domain(format!(
            "expected a middle assignment over {} elements, got a {} assignment over {} keys",
            n + g.size(),
            f.domain,
            f.len()
        )));
    }
    let edge_value = |u: usize, v: usize| f.values[n + g.edge_index(u, v).expect("edge")];
    // colors on the edges incident to each vertex
    let incident: Vec<ColorSet> = (0..n)
        .map(|v| {
            g.neighbors(v)
                .iter()
                .fold(ColorSet::EMPTY, |acc, &w| acc | edge_value(v, w))
        })
        .collect();
    let full = ColorSet::full(f.k);
    let mut violations = Vec::new();
    for v in 0..n {
        if f.values[v].is_empty() && incident[v] != full {
            violations.push(Violation::Undominated {
                key: v,
                union: incident[v],
            });
        }
    }
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        let key = n + i;
        if !f.values[key].is_empty() {
            continue;
        }
        // the edge's own value is empty, so it does not pollute the union
        let union = f.values[u] | f.values[v] | incident[u] | incident[v];
        if union != full {
            violations.push(Violation::Undominated { key, union });
        }
    }
    Ok(VerificationReport { violations })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{generate, Family};
    use crate::middle::middle_graph;

    fn cs(colors: &[u8]) -> ColorSet {
        ColorSet::from_colors(colors.iter().copied())
    }

    #[test]
    fn colorset_basics() {
        let s = cs(&[1, 3]);
        assert_eq!(s.bits(), 0b101);
        assert_eq!(s.len(), 2);
        assert_eq!(s.max_color(), 3);
        assert_eq!(s.to_string(), "1,3");
        assert_eq!(ColorSet::EMPTY.to_string(), "-");
        assert_eq!(ColorSet::full(3), cs(&[1, 2, 3]));
        assert_eq!(ColorSet::full(8).len(), 8);
        assert_eq!(s.permute(&[2, 3, 1]), cs(&[2, 1]));
        let order: Vec<u8> = ColorSet::candidates(3).iter().map(|s| s.bits()).collect();
        assert_eq!(order, vec![0, 1, 2, 4, 3, 5, 6, 7]);
    }

    #[test]
    fn assignment_rejects_colors_above_k() {
        assert!(RainbowAssignment::new(2, Domain::Plain, vec![cs(&[3])]).is_err());
        assert!(RainbowAssignment::new(0, Domain::Plain, vec![]).is_err());
        assert!(RainbowAssignment::new(9, Domain::Plain, vec![]).is_err());
    }

    #[test]
    fn p2_full_edge_is_valid() {
        let g = generate(Family::Path { n: 2 }).unwrap();
        let mut f = RainbowAssignment::empty_middle(3, &g).unwrap();
        f.set_at(&g, Element::Edge(0, 1), ColorSet::full(3)).unwrap();
        assert!(verify_mkrdf(&g, &f).unwrap().valid());
        assert_eq!(f.weight(), 3);
    }

    #[test]
    fn p3_all_empty_fails_everywhere() {
        let g = generate(Family::Path { n: 3 }).unwrap();
        let f = RainbowAssignment::empty_middle(3, &g).unwrap();
        let report = verify_mkrdf(&g, &f).unwrap();
        assert_eq!(report.violations.len(), 5);
        assert_eq!(f.weight(), 0);
    }

    #[test]
    fn p5_two_color_tail() {
        let g = generate(Family::Path { n: 5 }).unwrap();
        let mut f = RainbowAssignment::empty_middle(3, &g).unwrap();
        f.set_at(&g, Element::Vertex(0), cs(&[1])).unwrap();
        f.set_at(&g, Element::Vertex(3), cs(&[1])).unwrap();
        f.set_at(&g, Element::Edge(1, 2), ColorSet::full(3)).unwrap();
        f.set_at(&g, Element::Vertex(4), cs(&[2, 3])).unwrap();
        assert!(verify_mkrdf(&g, &f).unwrap().valid());
        assert_eq!(f.weight(), 7);
    }

    #[test]
    fn plain_examples() {
        let k2 = Graph::new(2, [(0, 1)]).unwrap();
        let f = RainbowAssignment::new(1, Domain::Plain, vec![cs(&[1]), ColorSet::EMPTY]).unwrap();
        assert!(verify_krdf(&k2, &f).unwrap().valid());

        let k1 = Graph::empty(1);
        let f = RainbowAssignment::empty(3, Domain::Plain, 1).unwrap();
        let report = verify_krdf(&k1, &f).unwrap();
        assert_eq!(
            report.violations,
            vec![Violation::Undominated { key: 0, union: ColorSet::EMPTY }]
        );
    }

    #[test]
    fn alternating_family_member_on_middle_p4() {
        let g = generate(Family::Path { n: 4 }).unwrap();
        let m = middle_graph(&g);
        let mut f = RainbowAssignment::empty(3, Domain::Plain, m.host.order()).unwrap();
        for (v, c) in [(0, 1), (1, 2), (2, 1), (3, 2)] {
            f.set(v, cs(&[c]));
        }
        f.set(m.index_of(Element::Edge(1, 2)).unwrap(), cs(&[3]));
        assert!(verify_krdf(&m.host, &f).unwrap().valid());
    }

    #[test]
    fn domain_mismatch_is_an_error() {
        let g = generate(Family::Path { n: 3 }).unwrap();
        let f = RainbowAssignment::empty(3, Domain::Plain, 5).unwrap();
        assert!(verify_mkrdf(&g, &f).is_err());
        let f = RainbowAssignment::empty_middle(3, &g).unwrap();
        assert!(verify_krdf(&g, &f).is_err());
        assert!(f.at(&g, Element::Edge(0, 2)).is_err());
    }
}
