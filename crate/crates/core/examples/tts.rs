use quip::anneal::{simulated_anneal, tts, AnnealSchedule};
use quip::graph::Graph;
use quip::qubo::{brute_force_ising, maxcut_to_ising};

fn main() -> quip::error::Result<()> {
    let m = maxcut_to_ising(&Graph::complete(8));
    let ground = quip::algebra::to_f64(&brute_force_ising(&m, None)?.energy);
    for sweeps in [5, 20, 100] {
        let s = AnnealSchedule::for_model(&m).with_sweeps(sweeps)?;
        let set = simulated_anneal(&m, &s, 500, 1)?;
        let p = set.fraction_at_or_below(ground);
        // one sweep counts as one time unit
        let t = tts(&set, sweeps as f64, ground, 0.99)?;
        println!("sweeps {sweeps:>3}: p = {p:.3}, tts99 = {t:.1}");
    }
    Ok(())
}
