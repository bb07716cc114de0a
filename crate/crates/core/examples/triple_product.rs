//! Compares f(a, b) with (-a; ab)(-b; ab)(ab; ab) coefficient by coefficient.

use theta_dissect::{theta_expand, triple_product_rhs, CyclotomicField, ScaledMonomial, ThetaArgs};

fn main() -> theta_dissect::Result<()> {
    let n = 50;
    let field = CyclotomicField::new(1);
    let args = ThetaArgs::new(
        ScaledMonomial::unit(&field, 1, 0),
        ScaledMonomial::unit(&field, 0, 1),
    )?;
    let sum = theta_expand(&args, n);
    let product = triple_product_rhs(&args, n)?;
    match sum.equal_through(&product, n)? {
        None => println!("sum and product agree through total degree {n} ({} terms)", sum.len()),
        Some(m) => println!("mismatch at {}: {} vs {}", m.monomial, m.left, m.right),
    }
    Ok(())
}
