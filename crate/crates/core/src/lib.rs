//! k-rainbow domination on middle graphs.
//!
//! The crate computes exact (middle) k-rainbow domination numbers, builds and
//! verifies explicit dominating functions for paths, cycles, complete graphs
//! and trees, checks the general inequalities relating these numbers to
//! vertex deletion, edge perturbation and matching number, and constructs
//! 3-rainbow dominating families on middle graphs of paths and cycles.
//!
//! ```
//! use rainbowdom::{generate, solve_middle, Family, SolverConfig};
//!
//! let p5 = generate(Family::Path { n: 5 }).unwrap();
//! let res = solve_middle(&p5, 3, &SolverConfig::default()).unwrap();
//! assert_eq!(res.value, 7);
//! ```

pub mod certify;
pub mod cli;
pub mod domatic;
pub mod error;
pub mod format;
pub mod generate;
pub mod graph;
pub mod laws;
pub mod matching;
pub mod middle;
pub mod rainbow;
pub mod solver;

pub use error::{Error, Result};
pub use generate::{generate, Family};
pub use graph::Graph;
pub use matching::{matching_number, Matching};
pub use middle::{middle_graph, middle_neighborhood, Element, MiddleGraph};
pub use rainbow::{verify_krdf, verify_mkrdf, ColorSet, Domain, RainbowAssignment, VerificationReport};
pub use solver::{
    brute_force_krdf, dp_middle, solve_krdf, solve_middle, DpKind, SolveResult, SolverConfig,
};
