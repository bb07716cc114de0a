//! Exact arithmetic in Q(zeta_L): products, inverses, conjugates, and embeddings.

use theta_dissect::{cyclotomic_polynomial, CycloNum, CyclotomicField};

fn main() -> theta_dissect::Result<()> {
    let q12 = CyclotomicField::new(12);
    println!("Phi_12(x) = {}", cyclotomic_polynomial(12));

    let zeta = CycloNum::zeta_power(&q12, 1);
    let x = CycloNum::from_i64(&q12, 2).checked_add(&zeta)?;
    let inv = x.inverse()?;
    println!("x = {x}");
    println!("1/x = {inv}");
    println!("x * (1/x) = {}", x.checked_mul(&inv)?);

    let (re, im) = x.real_imag_parts()?;
    println!("Re(x) = {re}, Im(x) = {im}, conj(x) = {}", x.conj());

    let omega = CycloNum::zeta_power(&CyclotomicField::new(3), 1);
    let lifted = omega.embed(&q12)?;
    println!("omega in Q(zeta_12) is {lifted}; 1 + omega + omega^2 = {}", {
        let sq = omega.checked_mul(&omega)?;
        CycloNum::from_i64(omega.field(), 1).checked_add(&omega)?.checked_add(&sq)?
    });
    Ok(())
}
