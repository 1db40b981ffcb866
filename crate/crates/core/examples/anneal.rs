use quip::anneal::{parallel_tempering, simulated_anneal, AnnealSchedule};
use quip::graph::Graph;
use quip::qubo::{cut_weight, maxcut_to_ising};

// Max cut on the Petersen graph (optimum 12) with both samplers.
fn main() -> quip::error::Result<()> {
    let g = Graph::petersen();
    let m = maxcut_to_ising(&g);
    let schedule = AnnealSchedule::for_model(&m).with_sweeps(200)?;
    let sa = simulated_anneal(&m, &schedule, 200, 7)?;
    let pt = parallel_tempering(&m, &schedule.clone().with_replicas(6)?, 200, 7)?;
    for (name, set) in [("anneal", &sa), ("tempering", &pt)] {
        let best = cut_weight(&g, &set.records()[0].config);
        let hit = set.fraction_where(|s| cut_weight(&g, s) == best);
        println!("{name}: best cut {best}, reached in {:.0}% of shots", 100.0 * hit);
    }
    Ok(())
}
