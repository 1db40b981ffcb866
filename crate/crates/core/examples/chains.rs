use quip::algebra::ratio;
use quip::anneal::{chain_break_stats, simulated_anneal, AnnealSchedule};
use quip::qubo::{chain_duplicate, chain_spins, IsingModel};

// Frustrated triangle with one spin split in two; sweep the chain strength.
fn main() -> quip::error::Result<()> {
    let mut tri = IsingModel::new(3);
    for (i, j) in [(0, 1), (1, 2), (0, 2)] {
        tri.add_coupling(i, j, ratio(1, 1))?;
    }
    let chains = vec![chain_spins(3, 0, 2), vec![1], vec![2]];
    for p in [1, 2, 4, 8, 16] {
        let split = chain_duplicate(&tri, 0, 2, &ratio(p, 4))?;
        let set = simulated_anneal(&split, &AnnealSchedule::new(0.1, 1.0, 100)?, 5000, 3)?;
        let stats = chain_break_stats(&set, &chains, &tri)?;
        println!("p = {:>4}: broken {:.3}", p as f64 / 4.0, stats.any_broken);
    }
    Ok(())
}
