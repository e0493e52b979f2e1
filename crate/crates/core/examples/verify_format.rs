//! Parse a graph and an assignment from text, verify it and show what a
//! broken assignment reports.

use rainbowdom::format::{parse_assignment, parse_graph};
use rainbowdom::verify_mkrdf;

const GRAPH: &str = "\
# the path on four vertices
4 3
0 1
1 2
2 3
";

const GOOD: &str = "\
value 5
k 3 middle
v0 1
v3 1
e1-2 1,2,3
";

const BAD: &str = "\
k 3 middle
v0 1,2,3
";

fn main() -> rainbowdom::Result<()> {
    let g = parse_graph(GRAPH)?;
    for text in [GOOD, BAD] {
        let f = parse_assignment(text, &g)?;
        let report = verify_mkrdf(&g, &f)?;
        println!("weight {} valid {}", f.weight(), report.valid());
        for v in &report.violations {
            println!("  {v:?}");
        }
    }
    Ok(())
}
