use quip::graph::Graph;
use quip::groebner::is_k_colorable;

fn main() -> quip::error::Result<()> {
    let graphs = [
        ("triangle", Graph::cycle(3)),
        ("C5", Graph::cycle(5)),
        ("K4", Graph::complete(4)),
        ("Petersen", Graph::petersen()),
    ];
    for (name, g) in &graphs {
        let ks: Vec<u32> = (2..=4).filter(|&k| is_k_colorable(g, k).unwrap_or(false)).collect();
        println!("{name}: colorable with k in {ks:?}");
    }
    Ok(())
}
