//! The matching-based upper bound on trees: n + α'(T) is always attained by
//! a valid function, and the exact value sits between the tree bounds.
//!
//!     cargo run --release --example tree_matching -- 9 7

use rainbowdom::certify::construct_tree_matching;
use rainbowdom::laws::check_tree_bounds;
use rainbowdom::{generate, matching_number, verify_mkrdf, Family, SolverConfig};

fn main() -> rainbowdom::Result<()> {
    let args: Vec<u64> = std::env::args().skip(1).filter_map(|s| s.parse().ok()).collect();
    let n = *args.first().unwrap_or(&9) as usize;
    let seed = *args.get(1).unwrap_or(&7);
    let t = generate(Family::RandomTree { n, seed })?;
    println!("edges: {:?}", t.edges());
    let m = matching_number(&t)?;
    println!("maximum matching: {:?}", m.edges);
    let f = construct_tree_matching(&t)?;
    println!("constructed weight {} (valid {})", f.weight(), verify_mkrdf(&t, &f)?.valid());
    let report = check_tree_bounds(&t, &SolverConfig::from_env()?)?;
    println!("{}", report.summary());
    Ok(())
}
