use quip::algebra::{format_primitive, parse_polynomial_list, MonomialOrder, VarNames};
use quip::groebner::{buchberger, Ideal};

fn main() -> quip::error::Result<()> {
    let names = VarNames::new(["x", "y", "z"]);
    let gens = parse_polynomial_list("x^2 + y^2 + z^2 - 4\nx^2 + 2*y^2 - 5\nx*z - 1", &names)?;
    for order in [MonomialOrder::lex(3), MonomialOrder::grevlex(3)] {
        let basis = buchberger(&Ideal::new(gens.clone(), names.clone())?, &order)?;
        println!("{}:", order.name());
        for p in basis.polynomials() {
            println!("  {}", format_primitive(p, &order, Some(&names)));
        }
    }
    Ok(())
}
