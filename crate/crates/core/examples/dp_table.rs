//! Middle k-rainbow domination numbers of paths and cycles by transfer matrix.
//!
//!     cargo run --release --example dp_table -- 16

use rainbowdom::{dp_middle, DpKind};

fn main() -> rainbowdom::Result<()> {
    let max_n: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(12);
    for (kind, start) in [(DpKind::Path, 2), (DpKind::Cycle, 3)] {
        println!("{kind:?}");
        println!("{:>4} {:>5} {:>5} {:>5} {:>5}", "n", "k=1", "k=2", "k=3", "k=4");
        for n in start..=max_n {
            let row: Vec<String> = (1..=4)
                .map(|k| dp_middle(kind, n, k).map(|v| format!("{v:>5}")))
                .collect::<Result<_, _>>()?;
            println!("{n:>4} {}", row.join(" "));
        }
    }
    println!("P_100000, k = 3: {}", dp_middle(DpKind::Path, 100_000, 3)?);
    Ok(())
}
