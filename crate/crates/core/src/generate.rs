//! Named graph families.
//!
//! Vertex labels are 0-based: the vertex written `v_i` in the usual 1-based
//! notation for paths, cycles and complete graphs is vertex `i - 1` here.

use std::collections::BinaryHeap;
use std::cmp::Reverse;
use std::fmt;

use rand_core::{Rng, SeedableRng};
use rand_xoshiro::SplitMix64;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A named family member together with its parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Path { n: usize },
    Cycle { n: usize },
    Complete { n: usize },
    /// `K_{1,t}`: center 0, leaves `1..=t`.
    Star { t: usize },
    /// `DS_{p,q}`: centers 0 and 1, leaves of 0 are `2..2+p`, leaves of 1 follow.
    DoubleStar { p: usize, q: usize },
    /// `S_{t,r}`: a star `K_{1,t}` with its first `r` edges subdivided.
    /// Center 0, leg heads `1..=t`, and the far end of leg `i < r` is `t + 1 + i`.
    Spider { t: usize, r: usize },
    Empty { n: usize },
    /// Uniform labelled tree, decoded from a seeded Prüfer sequence.
    RandomTree { n: usize, seed: u64 },
}

impl Family {
    /// Resolves a family from its command-line name. Missing parameters are
    /// reported as domain errors.
    pub fn from_name(kind: &str, params: &FamilyParams) -> Result<Family> {
        let need = |v: Option<usize>, name: &str| {
            v.ok_or_else(|| Error::domain(format!("{kind} requires --{name}")))
        };
        let fam = match kind {
            "path" => Family::Path { n: need(params.n, "n")? },
            "cycle" => Family::Cycle { n: need(params.n, "n")? },
            "complete" => Family::Complete { n: need(params.n, "n")? },
            "star" => Family::Star {
                t: need(params.t.or(params.n), "t")?,
            },
            "double_star" => Family::DoubleStar {
                p: need(params.p, "p")?,
                q: need(params.q, "q")?,
            },
            "spider" => Family::Spider {
                t: need(params.t, "t")?,
                r: need(params.r, "r")?,
            },
            "empty" => Family::Empty { n: need(params.n, "n")? },
            "random_tree" => Family::RandomTree {
                n: need(params.n, "n")?,
                seed: params
                    .seed
                    .ok_or_else(|| Error::domain("random_tree requires --seed"))?,
            },
            other => return Err(Error::domain(format!("unknown graph family '{other}'"))),
        };
        Ok(fam)
    }
}

/// Loose parameter bag used when a family is named on the command line.
#[derive(Clone, Copy, Debug, Default)]
pub struct FamilyParams {
    pub n: Option<usize>,
    pub t: Option<usize>,
    pub r: Option<usize>,
    pub p: Option<usize>,
    pub q: Option<usize>,
    pub seed: Option<u64>,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Family::Path { n } => write!(f, "P_{n}"),
            Family::Cycle { n } => write!(f, "C_{n}"),
            Family::Complete { n } => write!(f, "K_{n}"),
            Family::Star { t } => write!(f, "K_{{1,{t}}}"),
            Family::DoubleStar { p, q } => write!(f, "DS_{{{p},{q}}}"),
            Family::Spider { t, r } => write!(f, "S_{{{t},{r}}}"),
            Family::Empty { n } => write!(f, "empty_{n}"),
            Family::RandomTree { n, seed } => write!(f, "random_tree(n={n}, seed={seed})"),
        }
    }
}

fn require(ok: bool, msg: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::domain(msg))
    }
}

pub fn generate(family: Family) -> Result<Graph> {
    match family {
        Family::Path { n } => {
            require(n >= 1, "path requires n ≥ 1")?;
            Graph::new(n, (1..n).map(|i| (i - 1, i)))
        }
        Family::Cycle { n } => {
            require(n >= 3, "cycle requires n ≥ 3")?;
            Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
        }
        Family::Complete { n } => {
            require(n >= 1, "complete requires n ≥ 1")?;
            Graph::new(n, (0..n).flat_map(|u| ((u + 1)..n).map(move |v| (u, v))))
        }
        Family::Star { t } => {
            require(t >= 2, "star requires t ≥ 2")?;
            Graph::new(t + 1, (1..=t).map(|leaf| (0, leaf)))
        }
        Family::DoubleStar { p, q } => {
            require(p >= 1 && q >= 1, "double_star requires p ≥ 1 and q ≥ 1")?;
            let left = (0..p).map(|i| (0, 2 + i));
            let right = (0..q).map(|i| (1, 2 + p + i));
            Graph::new(p + q + 2, std::iter::once((0, 1)).chain(left).chain(right))
        }
        Family::Spider { t, r } => {
            require(t >= 1, "spider requires t ≥ 1")?;
            require(r <= t, "spider requires r ≤ t")?;
            let heads = (1..=t).map(|h| (0, h));
            let tails = (0..r).map(|i| (1 + i, t + 1 + i));
            Graph::new(1 + t + r, heads.chain(tails))
        }
        Family::Empty { n } => {
            require(n >= 1, "empty requires n ≥ 1")?;
            Ok(Graph::empty(n))
        }
        Family::RandomTree { n, seed } => {
            require(n >= 1, "random_tree requires n ≥ 1")?;
            if n == 1 {
                return Ok(Graph::empty(1));
            }
            Ok(prufer_decode(&random_prufer(n, seed)))
        }
    }
}

/// Draws the Prüfer sequence used by `random_tree`.
///
/// The generator is SplitMix64 seeded with `seed`. Each of the `n - 2` entries
/// is drawn by rejection: a 64-bit output `x` is accepted when
/// `x < floor(2^64 / n) * n` (computed as `(u64::MAX / n) * n`) and mapped to
/// `x % n`.
pub fn random_prufer(n: usize, seed: u64) -> Vec<usize> {
    let mut rng = SplitMix64::seed_from_u64(seed);
    let len = n.saturating_sub(2);
    let bound = n as u64;
    let zone = if bound == 0 { 0 } else { (u64::MAX / bound) * bound };
    (0..len)
        .map(|_| loop {
            let x = rng.next_u64();
            if x < zone {
                break (x % bound) as usize;
            }
        })
        .collect()
}

/// Decodes a Prüfer sequence over `0..seq.len() + 2` into its labelled tree.
///
/// At each step the smallest current leaf is joined to the next sequence entry.
pub fn prufer_decode(seq: &[usize]) -> Graph {
    let n = seq.len() + 2;
    if seq.is_empty() {
        return Graph::new(2, [(0, 1)]).expect("single edge");
    }
    let mut degree = vec![1usize; n];
    for &s in seq {
        degree[s] += 1;
    }
    let mut leaves: BinaryHeap<Reverse<usize>> =
        (0..n).filter(|&v| degree[v] == 1).map(Reverse).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &s in seq {
        let Reverse(leaf) = leaves.pop().expect("a Prüfer sequence always has a leaf");
        edges.push((leaf, s));
        degree[s] -= 1;
        if degree[s] == 1 {
            leaves.push(Reverse(s));
        }
    }
    let Reverse(a) = leaves.pop().expect("two leaves remain");
    let Reverse(b) = leaves.pop().expect("two leaves remain");
    edges.push((a, b));
    Graph::new(n, edges).expect("Prüfer decode yields a simple tree")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_four() {
        let g = generate(Family::Path { n: 4 }).unwrap();
        assert_eq!(g.order(), 4);
        assert_eq!(g.edges(), &[(0, 1), (1, 2), (2, 3)]);
    }

    #[test]
    fn double_star_two_two() {
        let g = generate(Family::DoubleStar { p: 2, q: 2 }).unwrap();
        assert_eq!((g.order(), g.size()), (6, 5));
        assert!(g.has_edge(0, 1));
        assert_eq!((g.degree(0), g.degree(1)), (3, 3));
    }

    #[test]
    fn spider_shape() {
        let g = generate(Family::Spider { t: 2, r: 2 }).unwrap();
        assert_eq!((g.order(), g.size()), (5, 4));
        assert!(g.is_tree());
        assert_eq!(g.degree(0), 2);
        let wounded = generate(Family::Spider { t: 3, r: 1 }).unwrap();
        assert_eq!(wounded.order(), 5);
        assert_eq!(wounded.degree(0), 3);
    }

    #[test]
    fn range_errors_name_the_constraint() {
        let err = generate(Family::Cycle { n: 2 }).unwrap_err();
        assert_eq!(err.to_string(), "cycle requires n ≥ 3");
        assert!(generate(Family::Star { t: 1 }).is_err());
        assert!(generate(Family::DoubleStar { p: 0, q: 1 }).is_err());
        assert!(generate(Family::Spider { t: 2, r: 3 }).is_err());
        assert!(generate(Family::Path { n: 0 }).is_err());
        assert!(generate(Family::RandomTree { n: 0, seed: 1 }).is_err());
    }

    #[test]
    fn random_tree_small_orders() {
        assert_eq!(
            generate(Family::RandomTree { n: 1, seed: 3 }).unwrap(),
            Graph::empty(1)
        );
        assert_eq!(
            generate(Family::RandomTree { n: 2, seed: 3 }).unwrap().edges(),
            &[(0, 1)]
        );
    }

    #[test]
    fn prufer_known_decode() {
        // textbook example: sequence (3, 3, 3, 4) over 0..6
        let t = prufer_decode(&[3, 3, 3, 4]);
        assert_eq!(t.edges(), &[(0, 3), (1, 3), (2, 3), (3, 4), (4, 5)]);
    }
}
