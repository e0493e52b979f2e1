//! Depth-first branch and bound over host vertices in index order.

use std::time::Instant;

use crate::graph::Graph;
use crate::rainbow::{ColorSet, Domain, RainbowAssignment};

use super::{SolveResult, SolveStats};

const INFEASIBLE: usize = usize::MAX / 4;

struct Instance {
    n: usize,
    full: u8,
    open: Vec<u64>,
    closed: Vec<u64>,
    /// `finalize_at[i]`: vertices whose closed neighbourhood is fully
    /// assigned once vertex `i` is.
    finalize_at: Vec<Vec<usize>>,
    candidates: Vec<u8>,
}

impl Instance {
    fn new(h: &Graph, k: u8) -> Self {
        let n = h.order();
        let open = h.neighbor_masks();
        let closed = open.iter().enumerate().map(|(v, &m)| m | 1 << v).collect();
        let mut finalize_at = vec![Vec::new(); n];
        for v in 0..n {
            let last = h.neighbors(v).iter().copied().fold(v, usize::max);
            finalize_at[last].push(v);
        }
        Instance {
            n,
            full: ColorSet::full(k).bits(),
            open,
            closed,
            finalize_at,
            candidates: ColorSet::candidates(k).iter().map(|s| s.bits()).collect(),
        }
    }

    /// Mask of vertices with index at least `from`.
    fn tail(&self, from: usize) -> u64 {
        let all = if self.n == 64 { u64::MAX } else { (1u64 << self.n) - 1 };
        if from >= 64 {
            0
        } else {
            all & !((1u64 << from) - 1)
        }
    }

    /// Value of a quick dominating-set cover: every vertex of a greedy
    /// dominating set gets `[k]`, or every vertex gets `{1}`, whichever is lighter.
    fn greedy_upper(&self, k: u8) -> usize {
        let all = self.tail(0);
        let mut undominated = all;
        let mut picked = 0usize;
        while undominated != 0 {
            let best = (0..self.n)
                .max_by_key(|&v| ((self.closed[v] & undominated).count_ones(), usize::MAX - v))
                .expect("non-empty");
            undominated &= !self.closed[best];
            picked += 1;
        }
        (picked * k as usize).min(self.n)
    }

    /// Admissible lower bound on the weight still needed when vertices
    /// `0..next` are assigned.
    ///
    /// Demands: an assigned empty vertex needs each missing color from an
    /// unassigned neighbour; an unassigned vertex that does not yet see every
    /// color needs at least one unit in its unassigned closed neighbourhood.
    /// The bound is the larger of a greedy packing of demands with disjoint
    /// supplies and the total demand over the best per-unit coverage.
    fn lower_bound(&self, next: usize, vals: &[u8], recv: &[u8; 64]) -> usize {
        let free = self.tail(next);
        let mut used = [0u64; 8];
        let mut packed = 0usize;
        let mut empty_mask = 0u64;
        let mut total = 0usize;
        for x in 0..next {
            if vals[x] != 0 {
                continue;
            }
            let miss = self.full & !recv[x];
            if miss == 0 {
                continue;
            }
            let supply = self.open[x] & free;
            if supply == 0 {
                return INFEASIBLE;
            }
            empty_mask |= 1 << x;
            total += miss.count_ones() as usize;
            for (c, slot) in used.iter_mut().enumerate() {
                if miss >> c & 1 == 1 && *slot & supply == 0 {
                    *slot |= supply;
                    packed += 1;
                }
            }
        }
        let mut used_all = used.iter().fold(0u64, |a, &b| a | b);
        let mut any_mask = 0u64;
        for x in next..self.n {
            if recv[x] == self.full {
                continue;
            }
            any_mask |= 1 << x;
            total += 1;
            let supply = self.closed[x] & free;
            if supply & used_all == 0 {
                used_all |= supply;
                packed += 1;
            }
        }
        if total == 0 {
            return 0;
        }
        let mut max_cover = 0u32;
        let mut rest = free;
        while rest != 0 {
            let y = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let cover = (self.open[y] & empty_mask).count_ones()
                + (self.closed[y] & any_mask).count_ones();
            max_cover = max_cover.max(cover);
        }
        let ratio = total.div_ceil(max_cover.max(1) as usize);
        packed.max(ratio)
    }
}

#[derive(PartialEq, Eq)]
enum Mode {
    /// Keep the first optimum found; prune on `>= best`.
    First,
    /// Keep every optimum; prune on `> best`.
    All,
}

struct Search<'a> {
    inst: &'a Instance,
    mode: Mode,
    vals: Vec<u8>,
    best: usize,
    found: Vec<Vec<u8>>,
    nodes: u64,
}

impl Search<'_> {
    fn pruned(&self, bound: usize) -> bool {
        match self.mode {
            Mode::First => bound >= self.best,
            Mode::All => bound > self.best,
        }
    }

    fn dfs(&mut self, depth: usize, weight: usize, recv: [u8; 64]) {
        self.nodes += 1;
        let inst = self.inst;
        if depth == inst.n {
            if weight < self.best {
                self.best = weight;
                self.found.clear();
            }
            if self.mode == Mode::All || self.found.is_empty() {
                self.found.push(self.vals.clone());
            }
            return;
        }
        for &c in &inst.candidates {
            let w = weight + c.count_ones() as usize;
            // candidates come in increasing cardinality
            if self.pruned(w) {
                break;
            }
            let mut next_recv = recv;
            let mut nb = inst.open[depth];
            while nb != 0 {
                let y = nb.trailing_zeros() as usize;
                nb &= nb - 1;
                next_recv[y] |= c;
            }
            self.vals[depth] = c;
            let dead = inst.finalize_at[depth]
                .iter()
                .any(|&x| self.vals[x] == 0 && next_recv[x] != inst.full);
            if dead {
                continue;
            }
            let lb = inst.lower_bound(depth + 1, &self.vals, &next_recv);
            if lb >= INFEASIBLE || self.pruned(w + lb) {
                continue;
            }
            self.dfs(depth + 1, w, next_recv);
        }
        self.vals[depth] = 0;
    }
}

fn run(h: &Graph, k: u8, mode: Mode) -> (usize, Vec<Vec<u8>>, u64) {
    let inst = Instance::new(h, k);
    let upper = inst.greedy_upper(k);
    let best = match mode {
        // one above a known feasible weight, so the first optimum in search
        // order is always reached before the bound can cut it off
        Mode::First => upper + 1,
        Mode::All => upper,
    };
    let mut search = Search {
        inst: &inst,
        mode,
        vals: vec![0; inst.n],
        best,
        found: Vec::new(),
        nodes: 0,
    };
    search.dfs(0, 0, [0; 64]);
    assert!(!search.found.is_empty(), "greedy upper bound is feasible");
    (search.best, search.found, search.nodes)
}

fn to_assignment(k: u8, vals: &[u8]) -> RainbowAssignment {
    RainbowAssignment::new(
        k,
        Domain::Plain,
        vals.iter().map(|&b| ColorSet::from_bits(b)).collect(),
    )
    .expect("search only uses colors up to k")
}

pub(super) fn solve(h: &Graph, k: u8) -> SolveResult {
    let start = Instant::now();
    let (value, found, nodes) = run(h, k, Mode::First);
    SolveResult {
        value,
        certificate: to_assignment(k, &found[0]),
        stats: SolveStats {
            nodes,
            elapsed: start.elapsed(),
        },
    }
}

pub(super) fn enumerate(h: &Graph, k: u8) -> (usize, Vec<RainbowAssignment>) {
    let (value, found, _) = run(h, k, Mode::All);
    (value, found.iter().map(|v| to_assignment(k, v)).collect())
}
