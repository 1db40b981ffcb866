use quip::graver::{lawrence_graver, pottier};

fn main() -> quip::error::Result<()> {
    let a = vec![vec![1, 2, 1]];
    let g = pottier(&a, 3)?;
    println!("pottier: {} elements", g.len());
    for v in g.representatives() {
        println!("  ±{v:?}");
    }
    let l = lawrence_graver(&a, 3)?;
    println!("lawrence: {} elements", l.len());

    let b = vec![vec![1, 1, 1, 1], vec![1, 2, 3, 4]];
    println!("[[1,1,1,1],[1,2,3,4]]: {} elements", pottier(&b, 4)?.len());
    Ok(())
}
