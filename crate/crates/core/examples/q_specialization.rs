//! Setting a = b = q: the real and imaginary parts of f(iq, iq) split f(q, q) by parity.

use theta_dissect::{evaluate, parse_expr};

fn main() {
    let n = 40;
    for text in [
        "specq(f(a, b))",
        "specq(Re(f(i*a, i*b)))",
        "f(q^16, q^16) + q^4*f(q^32, 1)",
        "specq(Im(f(i*a, i*b)))",
        "q*f(q^24, q^8) + q^9*f(q^40, q^-8)",
    ] {
        let series = evaluate(&parse_expr(text).expect("valid"), n, 4).expect("evaluates");
        println!("{text:<38} = {series}");
    }
}
