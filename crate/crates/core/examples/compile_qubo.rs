use quip::qubo::brute_force;
use quip::reformulate::{compile_qubo, ConstraintSystem, Scheme};

// Bounded integers, one inequality, a quadratic objective.
fn main() -> quip::error::Result<()> {
    let names = quip::algebra::VarNames::indexed(3);
    let f = quip::algebra::parse_polynomial("x0*x1 - 2*x2 + x0", &names)?;
    let ip = ConstraintSystem::boxed(vec![vec![1, 1, 1]], vec![4], vec![0; 3], vec![3, 2, 2])?
        .with_inequalities(&[0])?
        .with_objective(f)?;
    let c = compile_qubo(&ip, Scheme::Binary, None)?;
    println!("{} bits, rho {}, lambda {}", c.qubo.num_vars(), c.report.weights.rho, c.report.weights.lambda);
    let best = brute_force(&c.qubo, None)?;
    let x = c.decode(&best.argmins[0])?;
    println!("minimum {} at x = {x:?}", best.energy);
    Ok(())
}
