use quip::groebner::{ct_solve, ToricIp};

// Set partitioning: cover each of three rows exactly once at minimum cost.
fn main() -> quip::error::Result<()> {
    let a = vec![
        vec![1, 0, 0, 1, 1, 1, 0, 1, 1, 1, 0],
        vec![0, 1, 0, 1, 0, 1, 1, 0, 1, 1, 1],
        vec![0, 0, 1, 0, 1, 0, 1, 1, 1, 1, 1],
    ];
    let c = vec![2, 4, 4, 4, 4, 4, 5, 4, 5, 6, 5];
    let ip = ToricIp::new(a, vec![1, 1, 1], c)?;
    let x = ct_solve(&ip, None)?;
    println!("x = {x:?}, cost {}", ip.objective(&x));
    Ok(())
}
