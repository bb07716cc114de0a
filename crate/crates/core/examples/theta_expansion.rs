//! Truncated expansions of f(x, y) at monomial arguments, including negative exponents.

use theta_dissect::{theta_expand, CyclotomicField, ScaledMonomial, ThetaArgs};

fn main() -> theta_dissect::Result<()> {
    let field = CyclotomicField::new(1);
    let unit = |a, b| ScaledMonomial::unit(&field, a, b);

    let plain = ThetaArgs::new(unit(1, 0), unit(0, 1))?;
    println!("f(a, b)           = {}", theta_expand(&plain, 9));

    // one argument of negative degree; the sum still has finitely many terms per degree
    let skew = ThetaArgs::new(unit(5, 3), unit(-1, 1))?;
    println!("f(a^5 b^3, b/a)   = {}", theta_expand(&skew, 12));

    match ThetaArgs::new(unit(1, 0), unit(-1, 0)) {
        Ok(_) => unreachable!(),
        Err(e) => println!("f(a, 1/a)         : {e}"),
    }
    Ok(())
}
