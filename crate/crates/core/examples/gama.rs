use quip::gama::{gama_solve, CapitalBudgeting, GamaConfig};
use quip::reformulate::ConstraintSystem;

// Pick 4 of 8 projects, trading mean return against risk.
fn main() -> quip::error::Result<()> {
    let mu = vec![0.08, 0.12, 0.10, 0.15, 0.09, 0.11, 0.14, 0.07];
    let sigma = vec![0.02, 0.09, 0.03, 0.12, 0.025, 0.05, 0.10, 0.01];
    let f = CapitalBudgeting::new(mu, sigma, 0.1)?;
    let ip = ConstraintSystem::binary(vec![vec![1; 8]], vec![4], 8)?;
    for fraction in [1.0, 0.25] {
        let cfg = GamaConfig {
            basis_fraction: fraction,
            certify: true,
            seed: 11,
            ..Default::default()
        };
        let r = gama_solve(&ip, &f, &cfg)?;
        println!(
            "fraction {fraction}: basis {}/{} (complete {}), {} seeds, best {:?} = {:.4}",
            r.basis_used, r.basis_size, r.basis_complete, r.seeds_found, r.best, r.best_value
        );
    }
    Ok(())
}
