//! Explicit middle 3-rainbow dominating functions that meet the closed forms.

use rainbowdom::certify::{construct_m3rdf, formula_gamma_star_r3, ConstructionKind};
use rainbowdom::format::serialize_assignment;

fn main() -> rainbowdom::Result<()> {
    for (kind, ns) in [
        (ConstructionKind::Path, vec![2, 3, 4, 5, 6, 7]),
        (ConstructionKind::Cycle, vec![3, 4, 5, 6, 7, 8]),
        (ConstructionKind::Complete, vec![2, 3, 4, 5, 6]),
    ] {
        for n in ns {
            let c = construct_m3rdf(kind, n)?;
            let fam = kind.formula_family(n);
            let report = c.verify();
            println!(
                "{fam:<6} weight {:>2}  closed form {:>2}  valid {}",
                c.weight(),
                formula_gamma_star_r3(fam)?,
                report.valid()
            );
        }
    }
    let c = construct_m3rdf(ConstructionKind::Cycle, 7)?;
    println!("\n{}", serialize_assignment(&c.assignment, &c.graph));
    Ok(())
}
