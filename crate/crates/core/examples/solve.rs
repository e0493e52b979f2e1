//! Exact middle k-rainbow domination number with an optimal certificate.
//!
//!     cargo run --release --example solve -- star 4 3

use rainbowdom::format::serialize_solution;
use rainbowdom::{generate, solve_middle, verify_mkrdf, Family, SolverConfig};

fn main() -> rainbowdom::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let kind = args.first().map(String::as_str).unwrap_or("cycle");
    let n: usize = args.get(1).and_then(|s| s.parse().ok()).unwrap_or(6);
    let k: u8 = args.get(2).and_then(|s| s.parse().ok()).unwrap_or(3);
    let family = match kind {
        "path" => Family::Path { n },
        "cycle" => Family::Cycle { n },
        "complete" => Family::Complete { n },
        "star" => Family::Star { t: n },
        _ => Family::RandomTree { n, seed: 7 },
    };
    let g = generate(family)?;
    let res = solve_middle(&g, k, &SolverConfig::from_env()?)?;
    print!("{}", serialize_solution(res.value, &res.certificate, &g));
    assert!(verify_mkrdf(&g, &res.certificate)?.valid());
    eprintln!("{family}, k = {k}: {} nodes in {:?}", res.stats.nodes, res.stats.elapsed);
    Ok(())
}
