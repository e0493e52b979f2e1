//! Exact rainbow domination numbers.
//!
//! Three independent routes:
//! - [`solve_krdf`] / [`solve_middle`]: depth-first branch and bound,
//! - [`brute_force_krdf`]: full enumeration for tiny hosts,
//! - [`dp_middle`]: a sliding-window dynamic program for middle graphs of
//!   paths and cycles.

mod bnb;
mod brute;
mod dp;

use std::time::Duration;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::middle::middle_graph;
use crate::rainbow::{check_k, RainbowAssignment};

pub use brute::{brute_force_krdf, brute_force_optimal, BRUTE_FORCE_BUDGET};
pub use dp::{dp_middle, DpKind, DP_MAX_N};

/// Environment variable that overrides [`SolverConfig::DEFAULT_CAP`].
pub const CAP_ENV: &str = "RAINBOWDOM_SOLVER_CAP";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SolverConfig {
    /// Largest host order the branch and bound accepts.
    pub cap: usize,
}

impl SolverConfig {
    pub const DEFAULT_CAP: usize = 24;
    /// Hard limit from the 64-bit neighbourhood masks.
    pub const MAX_CAP: usize = 64;

    pub fn with_cap(cap: usize) -> Self {
        SolverConfig { cap }
    }

    /// Default config, with the cap taken from `RAINBOWDOM_SOLVER_CAP` when set.
    pub fn from_env() -> Result<Self> {
        match std::env::var(CAP_ENV) {
            Ok(v) => v
                .trim()
                .parse()
                .map(Self::with_cap)
                .map_err(|_| Error::domain(format!("{CAP_ENV} must be an integer, got '{v}'"))),
            Err(_) => Ok(Self::default()),
        }
    }
}

impl Default for SolverConfig {
    fn default() -> Self {
        Self::with_cap(Self::DEFAULT_CAP)
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SolveStats {
    /// Search nodes visited.
    pub nodes: u64,
    #[serde(serialize_with = "ser_millis")]
    pub elapsed: Duration,
}

fn ser_millis<S: serde::Serializer>(d: &Duration, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64() * 1e3)
}

#[derive(Clone, Debug)]
pub struct SolveResult {
    pub value: usize,
    pub certificate: RainbowAssignment,
    pub stats: SolveStats,
}

fn check_cap(order: usize, cfg: &SolverConfig) -> Result<()> {
    let cap = cfg.cap.min(SolverConfig::MAX_CAP);
    if order > cap {
        return Err(Error::Capacity {
            what: "branch-and-bound host order",
            size: order,
            cap,
        });
    }
    Ok(())
}

/// `γ_rk(H)` with a certificate.
///
/// The certificate is the first optimal assignment in the fixed search order:
/// vertices in index order, candidate sets by cardinality then bitmask. It
/// does not depend on the pruning used, so it is reproducible.
pub fn solve_krdf(h: &Graph, k: u8, cfg: &SolverConfig) -> Result<SolveResult> {
    check_k(k)?;
    check_cap(h.order(), cfg)?;
    Ok(bnb::solve(h, k))
}

/// `γ*_rk(G) = γ_rk(M(G))`, certificate keyed by the elements of `G`.
pub fn solve_middle(g: &Graph, k: u8, cfg: &SolverConfig) -> Result<SolveResult> {
    let m = middle_graph(g);
    let mut res = solve_krdf(&m.host, k, cfg)?;
    res.certificate = res.certificate.to_middle();
    Ok(res)
}

/// Every optimal k-rainbow dominating function of `h`, in search order.
pub fn enumerate_optimal(h: &Graph, k: u8, cfg: &SolverConfig) -> Result<(usize, Vec<RainbowAssignment>)> {
    check_k(k)?;
    check_cap(h.order(), cfg)?;
    Ok(bnb::enumerate(h, k))
}

/// Every optimal middle k-rainbow dominating function of `g`.
pub fn enumerate_optimal_middle(
    g: &Graph,
    k: u8,
    cfg: &SolverConfig,
) -> Result<(usize, Vec<RainbowAssignment>)> {
    let (value, all) = enumerate_optimal(&middle_graph(g).host, k, cfg)?;
    Ok((value, all.into_iter().map(|f| f.to_middle()).collect()))
}
