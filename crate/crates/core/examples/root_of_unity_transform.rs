//! f(zeta a, zeta b) as a weighted sum of the m residue components, for every root zeta_m^e.

use theta_dissect::catalog::transformation_identity;
use theta_dissect::{transform_lhs, transform_rhs};

fn main() -> theta_dissect::Result<()> {
    let n = 60;
    for m in 1..=8 {
        let agreeing = (0..m)
            .filter(|&e| {
                let lhs = transform_lhs(m, e, n).expect("valid modulus");
                let rhs = transform_rhs(m, e, n).expect("valid modulus");
                lhs.equal_through(&rhs, n).expect("within validity").is_none()
            })
            .count();
        println!("m = {m}: {agreeing}/{m} roots agree through degree {n}");
    }
    println!("\n{}", transformation_identity(3).render());
    Ok(())
}
