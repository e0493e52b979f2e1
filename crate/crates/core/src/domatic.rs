//! Rainbow domatic families.
//!
//! A family is a set of distinct k-rainbow dominating functions on one host
//! whose values never put more than `k` colors on a vertex in total.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::middle::{middle_graph, Element};
use crate::rainbow::{
    check_k, verify_krdf, ColorSet, Domain, RainbowAssignment, VerificationReport, Violation,
};
use crate::solver::{brute_force_krdf, dp_middle, solve_krdf, DpKind, SolverConfig};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RainbowFamily {
    pub host: Graph,
    pub k: u8,
    pub members: Vec<RainbowAssignment>,
}

impl RainbowFamily {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Total number of colors each host vertex receives over all members.
    pub fn loads(&self) -> Vec<usize> {
        let mut load = vec![0; self.host.order()];
        for f in &self.members {
            for (v, s) in f.values().iter().enumerate() {
                load[v] += s.len();
            }
        }
        load
    }
}

/// Checks every member and the per-vertex capacity.
pub fn verify_family(fam: &RainbowFamily) -> Result<VerificationReport> {
    check_k(fam.k)?;
    let mut violations = Vec::new();
    for (i, f) in fam.members.iter().enumerate() {
        if f.k() != fam.k || f.domain() != Domain::Plain || f.len() != fam.host.order() {
            return Err(Error::domain(format!(
                "member {i} is not a plain k = {} assignment over the {} host vertices",
                fam.k,
                fam.host.order()
            )));
        }
        for v in verify_krdf(&fam.host, f)?.violations {
            if let Violation::Undominated { key, union } = v {
                violations.push(Violation::InvalidMember { member: i, key, union });
            }
        }
    }
    for (key, load) in fam.loads().into_iter().enumerate() {
        if load > fam.k as usize {
            violations.push(Violation::OverCapacity { key, load });
        }
    }
    Ok(VerificationReport { violations })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilyKind {
    Path,
    Cycle,
}

/// The four-member 3-rainbow domatic family on `M(P_n)` (even `n ≥ 4`) or
/// `M(C_n)` (`n ≥ 4`).
pub fn construct_family(kind: FamilyKind, n: usize) -> Result<RainbowFamily> {
    let (g, members) = match kind {
        FamilyKind::Path => {
            if n < 4 || n % 2 == 1 {
                return Err(Error::domain(format!("path family needs even n ≥ 4, got {n}")));
            }
            let g = Graph::new(n, (1..n).map(|i| (i - 1, i)))?;
            let members = path_members(&g, n);
            (g, members)
        }
        FamilyKind::Cycle => {
            if n < 4 {
                return Err(Error::domain(format!("cycle family needs n ≥ 4, got {n}")));
            }
            let g = Graph::new(n, (1..n).map(|i| (i - 1, i)).chain([(0, n - 1)]))?;
            let members = if n % 2 == 0 {
                let mut ms = path_members(&g, n);
                let closing = Element::edge(n - 1, 0);
                for f in &mut ms[1..] {
                    put(f, &g, closing, ColorSet::singleton(1));
                }
                ms
            } else {
                let mut ms = path_members(&g, n - 1);
                let tail = [
                    Element::edge(n - 2, n - 1),
                    Element::Vertex(n - 1),
                    Element::edge(n - 1, 0),
                ];
                let sets = |a: &[u8], b: &[u8], c: &[u8]| {
                    [a, b, c].map(|s| ColorSet::from_colors(s.iter().copied()))
                };
                let values = [
                    sets(&[], &[1], &[]),
                    sets(&[3], &[2], &[]),
                    sets(&[1], &[3], &[]),
                    sets(&[], &[], &[1, 2, 3]),
                ];
                for (f, vals) in ms.iter_mut().zip(values) {
                    for (x, s) in tail.iter().zip(vals) {
                        put(f, &g, *x, s);
                    }
                }
                ms
            };
            (g, members)
        }
    };
    Ok(RainbowFamily {
        host: middle_graph(&g).host,
        k: 3,
        members: members.iter().map(|f| f.to_plain()).collect(),
    })
}

fn put(f: &mut RainbowAssignment, g: &Graph, x: Element, s: ColorSet) {
    f.set_at(g, x, s).expect("element of the family graph");
}

/// The path members on `v_1 .. v_m` (`m` even), as middle assignments on `g`,
/// which contains the path as its first `m` vertices.
fn path_members(g: &Graph, m: usize) -> Vec<RainbowAssignment> {
    let empty = RainbowAssignment::empty_middle(3, g).expect("k = 3");
    let mut f1 = empty.clone();
    for i in 0..m / 2 {
        put(&mut f1, g, Element::Edge(2 * i, 2 * i + 1), ColorSet::full(3));
    }
    // (odd vertex, even vertex, even edge) colors for f_2, f_3, f_4
    let rotations = [(1, 2, 3), (2, 3, 1), (3, 1, 2)];
    let mut out = vec![f1];
    for (a, b, c) in rotations {
        let mut f = empty.clone();
        for v in 0..m {
            let color = if v % 2 == 0 { a } else { b };
            put(&mut f, g, Element::Vertex(v), ColorSet::singleton(color));
        }
        for i in 0..m / 2 - 1 {
            put(&mut f, g, Element::Edge(2 * i + 1, 2 * i + 2), ColorSet::singleton(c));
        }
        out.push(f);
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum UpperBound {
    /// `δ + k`
    Degree,
    /// `floor(k·|V| / γ_rk)`
    Product,
}

impl fmt::Display for UpperBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            UpperBound::Degree => "degree",
            UpperBound::Product => "product",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DomaticBounds {
    pub k: u8,
    /// `γ_rk` of the host.
    pub gamma: usize,
    pub lower: usize,
    /// The family that set `lower`, when it beat `k`.
    pub witness: Option<RainbowFamily>,
    pub degree_bound: usize,
    pub product_bound: usize,
    pub upper: usize,
    pub upper_source: UpperBound,
    pub exact: Option<usize>,
}

/// Bounds on `d_rk(M(G))`.
///
/// `γ_rk` of the host comes from the dynamic program for paths and cycles
/// and from the branch and bound otherwise.
pub fn domatic_bounds(
    g: &Graph,
    k: u8,
    family: Option<RainbowFamily>,
    cfg: &SolverConfig,
) -> Result<DomaticBounds> {
    check_k(k)?;
    let host = middle_graph(g).host;
    let dp_kind = if k <= 4 && g.order() >= 3 && g.is_cycle() {
        Some(DpKind::Cycle)
    } else if k <= 4 && g.order() >= 2 && g.is_path() {
        Some(DpKind::Path)
    } else {
        None
    };
    let gamma = match dp_kind {
        Some(kind) => dp_middle(kind, g.order(), k)?,
        None => {
            if host.order() == 0 {
                return Err(Error::domain("domatic bounds need a non-empty graph"));
            }
            solve_krdf(&host, k, cfg)?.value
        }
    };
    bounds_with_gamma(&host, k, gamma, family)
}

/// Bounds on `d_rk(H)` for an arbitrary host, with `γ_rk(H)` from the search.
pub fn domatic_bounds_host(
    h: &Graph,
    k: u8,
    family: Option<RainbowFamily>,
    cfg: &SolverConfig,
) -> Result<DomaticBounds> {
    check_k(k)?;
    if h.order() == 0 {
        return Err(Error::domain("domatic bounds need a non-empty graph"));
    }
    let gamma = solve_krdf(h, k, cfg)?.value;
    bounds_with_gamma(h, k, gamma, family)
}

fn bounds_with_gamma(
    h: &Graph,
    k: u8,
    gamma: usize,
    family: Option<RainbowFamily>,
) -> Result<DomaticBounds> {
    let mut lower = k as usize;
    let mut witness = None;
    if let Some(fam) = family {
        if fam.host != *h || fam.k != k {
            return Err(Error::domain("family does not live on this host with this k"));
        }
        if has_duplicates(&fam) {
            return Err(Error::domain("family members must be distinct"));
        }
        let report = verify_family(&fam)?;
        if !report.valid() {
            return Err(Error::domain(format!(
                "invalid family: {} violations",
                report.violations.len()
            )));
        }
        if fam.len() > lower {
            lower = fam.len();
            witness = Some(fam);
        }
    }
    let degree_bound = h.min_degree() + k as usize;
    let product_bound = k as usize * h.order() / gamma;
    let (upper, upper_source) = if degree_bound <= product_bound {
        (degree_bound, UpperBound::Degree)
    } else {
        (product_bound, UpperBound::Product)
    };
    if lower > upper {
        return Err(Error::domain(format!(
            "lower bound {lower} exceeds upper bound {upper}"
        )));
    }
    Ok(DomaticBounds {
        k,
        gamma,
        lower,
        witness,
        degree_bound,
        product_bound,
        upper,
        upper_source,
        exact: (lower == upper).then_some(lower),
    })
}

fn has_duplicates(fam: &RainbowFamily) -> bool {
    let mut seen = std::collections::HashSet::new();
    !fam.members.iter().all(|f| seen.insert(f.values().to_vec()))
}

/// Largest host order the exact search accepts.
pub const TINY_HOST_CAP: usize = 8;
/// Bound on `k·|V(H)|`, i.e. on the bits of one assignment.
const TINY_BITS: usize = 24;

/// Exact `d_rk(H)` by backtracking over families of distinct members.
pub fn domatic_exact_tiny(h: &Graph, k: u8) -> Result<usize> {
    check_k(k)?;
    let n = h.order();
    let cap = TINY_HOST_CAP.min(TINY_BITS / k as usize);
    if n > cap {
        return Err(Error::Capacity {
            what: "domatic oracle host order",
            size: n,
            cap,
        });
    }
    if n == 0 {
        return Ok(0);
    }
    // `{i}` on every vertex, i = 1..k, is always a family of size k. Any
    // larger family leaves one member at most kn minus k minimum weights.
    let best = k as usize;
    let gamma = brute_force_krdf(h, k)?;
    let budget = (k as usize * n).saturating_sub(best * gamma);
    let mut cands = Vec::new();
    let mut vals = vec![0u8; n];
    collect_valid(h, k, 0, budget, &mut vals, &mut cands);
    cands.sort_by_key(|f: &Vec<u8>| (weight(f), f.clone()));
    let mut search = FamilySearch {
        k: k as usize,
        cands: &cands,
        load: vec![0; n],
        best,
    };
    search.dfs(0, 0, k as usize * n);
    Ok(search.best)
}

fn weight(f: &[u8]) -> usize {
    f.iter().map(|b| b.count_ones() as usize).sum()
}

/// Every valid assignment of weight at most `budget`.
fn collect_valid(h: &Graph, k: u8, v: usize, budget: usize, vals: &mut [u8], out: &mut Vec<Vec<u8>>) {
    let n = h.order();
    if v == n {
        let full = ColorSet::full(k).bits();
        let ok = (0..n).all(|x| {
            vals[x] != 0 || h.neighbors(x).iter().fold(0, |acc, &w| acc | vals[w]) == full
        });
        if ok {
            out.push(vals.to_vec());
        }
        return;
    }
    for bits in 0..(1u16 << k) {
        let c = bits.count_ones() as usize;
        if c > budget {
            continue;
        }
        vals[v] = bits as u8;
        collect_valid(h, k, v + 1, budget - c, vals, out);
    }
    vals[v] = 0;
}

struct FamilySearch<'a> {
    k: usize,
    cands: &'a [Vec<u8>],
    load: Vec<usize>,
    best: usize,
}

impl FamilySearch<'_> {
    fn dfs(&mut self, from: usize, size: usize, room: usize) {
        self.best = self.best.max(size);
        for i in from..self.cands.len() {
            let f = &self.cands[i];
            let w = weight(f);
            // later candidates are no lighter
            if w == 0 || size + room / w <= self.best {
                break;
            }
            if f.iter().zip(&self.load).any(|(b, l)| l + b.count_ones() as usize > self.k) {
                continue;
            }
            for (l, b) in self.load.iter_mut().zip(f) {
                *l += b.count_ones() as usize;
            }
            self.dfs(i + 1, size + 1, room - w);
            for (l, b) in self.load.iter_mut().zip(f) {
                *l -= b.count_ones() as usize;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{generate, Family};

    #[test]
    fn path_family_p4() {
        let fam = construct_family(FamilyKind::Path, 4).unwrap();
        assert_eq!(fam.len(), 4);
        assert!(verify_family(&fam).unwrap().valid());
        let p4 = generate(Family::Path { n: 4 }).unwrap();
        let f2 = fam.members[1].to_middle();
        let labels: Vec<ColorSet> = (0..4).map(|v| f2.at(&p4, Element::Vertex(v)).unwrap()).collect();
        let s = ColorSet::singleton;
        assert_eq!(labels, vec![s(1), s(2), s(1), s(2)]);
        assert_eq!(f2.at(&p4, Element::Edge(1, 2)).unwrap(), s(3));
        assert_eq!(f2.weight(), 5);
        assert!(fam.loads().iter().all(|&l| l == 3));
    }

    #[test]
    fn duplicated_member_overloads_odd_edges() {
        let mut fam = construct_family(FamilyKind::Path, 6).unwrap();
        fam.members.push(fam.members[0].clone());
        let report = verify_family(&fam).unwrap();
        let over: Vec<(usize, usize)> = report
            .violations
            .iter()
            .map(|v| match v {
                Violation::OverCapacity { key, load } => (*key, *load),
                other => panic!("{other:?}"),
            })
            .collect();
        // odd edges v1v2, v3v4, v5v6 are elements 6, 8, 10
        assert_eq!(over, vec![(6, 6), (8, 6), (10, 6)]);
    }

    #[test]
    fn cycle_families() {
        let c6 = construct_family(FamilyKind::Cycle, 6).unwrap();
        assert!(verify_family(&c6).unwrap().valid());
        let g = generate(Family::Cycle { n: 6 }).unwrap();
        let g1 = c6.members[0].to_middle();
        assert_eq!(g1.at(&g, Element::Edge(0, 5)).unwrap(), ColorSet::EMPTY);

        let c5 = construct_family(FamilyKind::Cycle, 5).unwrap();
        assert!(verify_family(&c5).unwrap().valid());
        let g = generate(Family::Cycle { n: 5 }).unwrap();
        let g4 = c5.members[3].to_middle();
        assert_eq!(g4.at(&g, Element::Edge(0, 4)).unwrap(), ColorSet::full(3));
        assert_eq!(g4.at(&g, Element::Vertex(4)).unwrap(), ColorSet::EMPTY);
        assert_eq!(g4.at(&g, Element::Edge(3, 4)).unwrap(), ColorSet::EMPTY);
    }

    #[test]
    fn construction_ranges() {
        assert!(construct_family(FamilyKind::Path, 5).is_err());
        assert!(construct_family(FamilyKind::Path, 2).is_err());
        assert!(construct_family(FamilyKind::Cycle, 3).is_err());
    }

    #[test]
    fn bounds_examples() {
        let cfg = SolverConfig::default();
        for (g, kind, n, gamma, upper) in [
            (Family::Path { n: 4 }, FamilyKind::Path, 4, 5, 4),
            (Family::Cycle { n: 6 }, FamilyKind::Cycle, 6, 8, 4),
            (Family::Cycle { n: 7 }, FamilyKind::Cycle, 7, 10, 4),
        ] {
            let fam = construct_family(kind, n).unwrap();
            let b = domatic_bounds(&generate(g).unwrap(), 3, Some(fam), &cfg).unwrap();
            assert_eq!((b.gamma, b.lower, b.upper, b.exact), (gamma, 4, upper, Some(4)));
        }
    }

    #[test]
    fn invalid_family_is_rejected() {
        let mut fam = construct_family(FamilyKind::Path, 4).unwrap();
        fam.members.push(fam.members[0].clone());
        let g = generate(Family::Path { n: 4 }).unwrap();
        assert!(domatic_bounds(&g, 3, Some(fam), &SolverConfig::default()).is_err());
    }

    #[test]
    fn tiny_oracle() {
        assert_eq!(domatic_exact_tiny(&Graph::empty(1), 3).unwrap(), 3);
        let p3 = middle_graph(&generate(Family::Path { n: 3 }).unwrap()).host;
        assert_eq!(domatic_exact_tiny(&p3, 3).unwrap(), 3);
        let k4 = middle_graph(&generate(Family::Complete { n: 4 }).unwrap()).host;
        assert!(matches!(domatic_exact_tiny(&k4, 3), Err(Error::Capacity { .. })));
    }
}
