//! Full enumeration of every assignment; the reference the search is tested against.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rainbow::{check_k, ColorSet, Domain, RainbowAssignment};

/// Largest number of assignments `(2^k)^|V(H)|` the oracle will enumerate.
pub const BRUTE_FORCE_BUDGET: u128 = 100_000_000;

fn check_budget(h: &Graph, k: u8) -> Result<()> {
    check_k(k)?;
    let bits = k as u32 * h.order() as u32;
    let count = if bits >= 127 { u128::MAX } else { 1u128 << bits };
    if count > BRUTE_FORCE_BUDGET {
        // report in host vertices: the largest order that fits the budget
        let mut cap = 0usize;
        while (1u128 << (k as u32 * (cap as u32 + 1))) <= BRUTE_FORCE_BUDGET {
            cap += 1;
        }
        return Err(Error::Capacity {
            what: "brute-force host order",
            size: h.order(),
            cap,
        });
    }
    Ok(())
}

/// Odometer over all assignments; calls `visit` with every valid one.
fn for_each_valid(h: &Graph, k: u8, mut visit: impl FnMut(&[u8], usize)) {
    let n = h.order();
    let base = 1u16 << k;
    let full = ColorSet::full(k).bits();
    let mut vals = vec![0u8; n];
    loop {
        let valid = (0..n).all(|v| {
            vals[v] != 0
                || h.neighbors(v).iter().fold(0u8, |acc, &w| acc | vals[w]) == full
        });
        if valid {
            let weight = vals.iter().map(|b| b.count_ones() as usize).sum();
            visit(&vals, weight);
        }
        let mut i = 0;
        loop {
            if i == n {
                return;
            }
            if (vals[i] as u16) + 1 < base {
                vals[i] += 1;
                break;
            }
            vals[i] = 0;
            i += 1;
        }
    }
}

/// `γ_rk(H)` by enumerating all `(2^k)^|V(H)|` assignments.
pub fn brute_force_krdf(h: &Graph, k: u8) -> Result<usize> {
    check_budget(h, k)?;
    let mut best = usize::MAX;
    for_each_valid(h, k, |_, w| best = best.min(w));
    Ok(best)
}

/// `γ_rk(H)` together with every assignment attaining it.
pub fn brute_force_optimal(h: &Graph, k: u8) -> Result<(usize, Vec<RainbowAssignment>)> {
    check_budget(h, k)?;
    let mut best = usize::MAX;
    let mut all: Vec<Vec<u8>> = Vec::new();
    for_each_valid(h, k, |vals, w| {
        if w < best {
            best = w;
            all.clear();
        }
        if w == best {
            all.push(vals.to_vec());
        }
    });
    let all = all
        .into_iter()
        .map(|v| {
            RainbowAssignment::new(k, Domain::Plain, v.into_iter().map(ColorSet::from_bits).collect())
                .expect("colors within k")
        })
        .collect();
    Ok((best, all))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{generate, Family};
    use crate::middle::middle_graph;

    fn host(f: Family) -> Graph {
        middle_graph(&generate(f).unwrap()).host
    }

    #[test]
    fn known_values() {
        assert_eq!(brute_force_krdf(&host(Family::Path { n: 3 }), 3).unwrap(), 4);
        assert_eq!(brute_force_krdf(&host(Family::Path { n: 2 }), 3).unwrap(), 3);
        assert_eq!(brute_force_krdf(&Graph::empty(1), 1).unwrap(), 1);
        assert_eq!(brute_force_krdf(&Graph::empty(0), 3).unwrap(), 0);
    }

    #[test]
    fn budget_is_enforced() {
        let k4 = host(Family::Complete { n: 4 });
        match brute_force_krdf(&k4, 3) {
            Err(Error::Capacity { size: 10, cap: 8, .. }) => {}
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn all_optima_of_p2() {
        let (value, all) = brute_force_optimal(&host(Family::Path { n: 2 }), 3).unwrap();
        assert_eq!(value, 3);
        assert!(all.iter().all(|f| f.weight() == 3));
        // [3] on the edge, or a split over the two ends such as {1} / {2,3}
        assert!(all.len() > 1);
    }
}
