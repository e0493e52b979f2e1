//! Sliding-window dynamic program for `γ*_rk` of paths and cycles.
//!
//! Elements are laid out as `x_0 = v_1, x_1 = v_1 v_2, x_2 = v_2, ...`, so
//! even positions are vertices and odd positions are edges. In this order
//! every adjacency of the middle graph spans at most two positions:
//! `x_p ~ x_{p+1}` always, and `x_p ~ x_{p+2}` when `p` is odd (consecutive
//! edges). A cycle adds the closing edge at position `2n - 1`, adjacent to
//! positions 0 and 1.
//!
//! The state after position `p` holds the status of `x_{p-1}` and `x_p`:
//! either a non-empty value, or the empty value together with the colors its
//! neighbourhood still has to supply.

use crate::error::{Error, Result};
use crate::rainbow::check_k;

pub const DP_MAX_N: usize = 100_000;
/// The state space grows as `4^(k+1)`; larger k is left to the search.
const DP_MAX_K: u8 = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DpKind {
    Path,
    Cycle,
}

/// `γ*_rk(P_n)` or `γ*_rk(C_n)`.
pub fn dp_middle(kind: DpKind, n: usize, k: u8) -> Result<usize> {
    check_k(k)?;
    if k > DP_MAX_K {
        return Err(Error::domain(format!("dp supports k ≤ {DP_MAX_K}, got {k}")));
    }
    let min_n = match kind {
        DpKind::Path => 2,
        DpKind::Cycle => 3,
    };
    if n < min_n || n > DP_MAX_N {
        return Err(Error::domain(format!(
            "dp {} requires {min_n} ≤ n ≤ {DP_MAX_N}, got {n}",
            match kind {
                DpKind::Path => "path",
                DpKind::Cycle => "cycle",
            }
        )));
    }
    let window = Window::new(k);
    let best = match kind {
        DpKind::Path => window.sweep(2 * n - 1, None),
        DpKind::Cycle => {
            // By symmetry of the color names only the cardinality of the
            // closing edge's value matters.
            let mut best = window.sweep(2 * n, Some(0));
            for size in 1..=k {
                best = best.min(window.sweep(2 * n, Some((1u8 << size) - 1)));
            }
            best
        }
    };
    Ok(best as usize)
}

const INF: u32 = u32::MAX;

struct Window {
    full: u8,
    values: u16,
    /// Number of element statuses: non-empty values, then empty with a missing set.
    statuses: usize,
}

impl Window {
    fn new(k: u8) -> Self {
        let values = 1u16 << k;
        Window {
            full: (values - 1) as u8,
            values,
            statuses: 2 * values as usize - 1,
        }
    }

    fn encode(&self, val: u8, miss: u8) -> usize {
        if val != 0 {
            val as usize - 1
        } else {
            self.values as usize - 1 + miss as usize
        }
    }

    fn decode(&self, code: usize) -> (u8, u8) {
        let nonempty = self.values as usize - 1;
        if code < nonempty {
            (code as u8 + 1, 0)
        } else {
            (0, (code - nonempty) as u8)
        }
    }

    /// Minimum weight over `len` positions. `closing` is `None` for a path;
    /// for a cycle it fixes the value of the closing edge (last position).
    /// When that value is empty, the union of the first two values is carried
    /// in the state so the closing edge can be checked at the end.
    fn sweep(&self, len: usize, closing: Option<u8>) -> u32 {
        let s = self.statuses;
        let carry_dim = if closing == Some(0) { self.values as usize } else { 1 };
        let idx = |carry: usize, a: usize, b: usize| (carry * s + a) * s + b;
        let phantom = self.encode(0, 0);
        let mut cur = vec![INF; carry_dim * s * s];
        let mut next = cur.clone();
        cur[idx(0, phantom, phantom)] = 0;
        let wrap_colors = match closing {
            Some(z) if z != 0 => z,
            _ => 0,
        };
        for p in 0..len {
            next.fill(INF);
            let reaches_back_two = p % 2 == 1 && p >= 3;
            let pre = if closing.is_some() && p <= 1 { wrap_colors } else { 0 };
            let is_last = p + 1 == len;
            let choices: Vec<u8> = match closing {
                Some(z) if is_last => vec![z],
                _ => (0..self.values).map(|c| c as u8).collect(),
            };
            for carry in 0..carry_dim {
                for a in 0..s {
                    let (va, ma) = self.decode(a);
                    for b in 0..s {
                        let cost = cur[idx(carry, a, b)];
                        if cost == INF {
                            continue;
                        }
                        let (vb, mb) = self.decode(b);
                        for &c in &choices {
                            let ma2 = if reaches_back_two { ma & !c } else { ma };
                            if ma2 != 0 {
                                continue; // x_{p-2} leaves the window unsatisfied
                            }
                            let mb2 = mb & !c;
                            let mut mc = 0;
                            if c == 0 {
                                mc = self.full & !vb & !pre;
                                if reaches_back_two {
                                    mc &= !va;
                                }
                                if is_last && carry_dim > 1 {
                                    mc &= !(carry as u8);
                                }
                            }
                            let carry2 = if carry_dim > 1 && p <= 1 {
                                carry | c as usize
                            } else {
                                carry
                            };
                            let slot = &mut next[idx(carry2, self.encode(vb, mb2), self.encode(c, mc))];
                            *slot = (*slot).min(cost + c.count_ones());
                        }
                    }
                }
            }
            std::mem::swap(&mut cur, &mut next);
        }
        let mut best = INF;
        for carry in 0..carry_dim {
            for a in 0..s {
                for b in 0..s {
                    let cost = cur[idx(carry, a, b)];
                    if cost != INF && self.decode(a).1 == 0 && self.decode(b).1 == 0 {
                        best = best.min(cost);
                    }
                }
            }
        }
        best
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_paths_and_cycles() {
        let paths: Vec<usize> = (2..=6).map(|n| dp_middle(DpKind::Path, n, 3).unwrap()).collect();
        assert_eq!(paths, vec![3, 4, 5, 7, 8]);
        assert_eq!(dp_middle(DpKind::Cycle, 7, 3).unwrap(), 10);
        assert_eq!(dp_middle(DpKind::Cycle, 3, 3).unwrap(), 4);
    }

    #[test]
    fn long_path() {
        assert_eq!(dp_middle(DpKind::Path, 300, 3).unwrap(), 400);
    }

    #[test]
    fn range_checks() {
        assert!(dp_middle(DpKind::Path, 1, 3).is_err());
        assert!(dp_middle(DpKind::Cycle, 2, 3).is_err());
        assert!(dp_middle(DpKind::Path, DP_MAX_N + 1, 3).is_err());
        assert!(dp_middle(DpKind::Path, 4, 5).is_err());
        assert!(dp_middle(DpKind::Path, 4, 0).is_err());
    }
}
