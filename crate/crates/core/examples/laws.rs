//! Run every inequality checker on a small instance and print the reports.

use rainbowdom::laws::{
    characterize_weight_three, check_edge_perturbation, check_observation_lower,
    check_pendant_path_lemma_all, check_tree_bounds, check_vertex_deletion, EdgeMode,
};
use rainbowdom::{generate, Family, SolverConfig};

fn main() -> rainbowdom::Result<()> {
    let cfg = SolverConfig::from_env()?;
    let c5 = generate(Family::Cycle { n: 5 })?;
    let spider = generate(Family::Spider { t: 3, r: 2 })?;
    let reports = [
        check_observation_lower(&c5, 3, &cfg)?,
        check_vertex_deletion(&c5, 0, 3, &cfg)?,
        check_edge_perturbation(&c5, (0, 2), 3, EdgeMode::Add, &cfg)?,
        check_edge_perturbation(&c5, (0, 1), 3, EdgeMode::Delete, &cfg)?,
        check_tree_bounds(&spider, &cfg)?,
        check_pendant_path_lemma_all(&spider, &cfg)?,
        characterize_weight_three(4, &cfg)?,
    ];
    for r in reports {
        println!("{:<18} {:<12} {}", r.law.name(), r.instance, r.summary());
    }
    Ok(())
}
