//! Tabulate closed form, transfer matrix and exact search side by side.
//!
//!     cargo run --release --example sweep -- 14

use rainbowdom::certify::{formula_gamma_star_r3, FormulaFamily};
use rainbowdom::{dp_middle, solve_middle, DpKind, SolverConfig};

fn main() -> rainbowdom::Result<()> {
    let max_n: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(10);
    let cfg = SolverConfig::from_env()?;
    let mut out = csv::Writer::from_writer(std::io::stdout());
    out.write_record(["family", "n", "formula", "dp", "solver"]).map_err(std::io::Error::from)?;
    for n in 2..=max_n {
        for (fam, dp) in [
            (FormulaFamily::Path { n }, DpKind::Path),
            (FormulaFamily::Cycle { n }, DpKind::Cycle),
        ] {
            if n < 3 && dp == DpKind::Cycle {
                continue;
            }
            let g = fam.graph()?;
            // the search grows quickly; past the cap only the two formulas are compared
            let solver = match solve_middle(&g, 3, &cfg) {
                Ok(r) => r.value.to_string(),
                Err(_) => "-".into(),
            };
            let row = [
                format!("{dp:?}"),
                n.to_string(),
                formula_gamma_star_r3(fam)?.to_string(),
                dp_middle(dp, n, 3)?.to_string(),
                solver,
            ];
            out.write_record(&row).map_err(std::io::Error::from)?;
        }
    }
    out.flush()?;
    Ok(())
}
