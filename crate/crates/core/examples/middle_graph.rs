//! Build M(G) for a small graph and list each element's closed neighborhood.
//!
//!     cargo run --example middle_graph -- 4

use rainbowdom::middle::elements;
use rainbowdom::{generate, middle_graph, middle_neighborhood, Family};

fn main() -> rainbowdom::Result<()> {
    let n = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(4);
    let g = generate(Family::Path { n })?;
    let m = middle_graph(&g);
    println!("P_{n}: {} vertices, {} edges", g.order(), g.size());
    println!("M(P_{n}): {} vertices, {} edges", m.host.order(), m.host.size());
    for x in elements(&g) {
        let nb: Vec<String> = middle_neighborhood(&g, x)?.iter().map(|y| y.to_string()).collect();
        println!("  {:>6}  host {:>2}  N = {{{}}}", x.to_string(), m.index_of(x).unwrap(), nb.join(", "));
    }
    Ok(())
}
