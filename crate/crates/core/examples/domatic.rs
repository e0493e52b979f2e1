//! 3-rainbow dominating families on middle graphs of paths and cycles, with
//! the resulting bounds on the domatic number.

use rainbowdom::domatic::{construct_family, domatic_bounds, verify_family, FamilyKind};
use rainbowdom::format::serialize_family;
use rainbowdom::{generate, Family, SolverConfig};

fn main() -> rainbowdom::Result<()> {
    let cfg = SolverConfig::from_env()?;
    for (kind, n) in [(FamilyKind::Path, 4), (FamilyKind::Path, 5), (FamilyKind::Path, 8), (FamilyKind::Cycle, 5), (FamilyKind::Cycle, 9)] {
        let (g, name) = match kind {
            FamilyKind::Path => (generate(Family::Path { n })?, format!("P_{n}")),
            FamilyKind::Cycle => (generate(Family::Cycle { n })?, format!("C_{n}")),
        };
        let fam = construct_family(kind, n).ok();
        if let Some(f) = &fam {
            println!("{name}: family of {} members, valid {}", f.len(), verify_family(f)?.valid());
        }
        let b = domatic_bounds(&g, 3, fam, &cfg)?;
        let exact = b.exact.map_or("open".to_string(), |d| d.to_string());
        println!("{name}: {} <= d <= {} ({:?} bound), exact {exact}", b.lower, b.upper, b.upper_source);
    }
    let fam = construct_family(FamilyKind::Cycle, 4)?;
    println!("\n{}", serialize_family(&fam));
    Ok(())
}
