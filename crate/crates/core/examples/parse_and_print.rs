//! Parsing, canonical printing, and evaluation of expressions and identities.

use theta_dissect::{evaluate, parse_expr, parse_identity, print_expr, Identity};

fn main() {
    let text = "1/2*(1+i)*f(a,b) + 1/2*(1-i)*f(-a,-b)";
    let expr = parse_expr(text).expect("valid expression");
    println!("canonical: {}", print_expr(&expr));
    println!("series:    {}", evaluate(&expr, 6, 4).expect("evaluates"));

    for bad in ["a b", "a^2^3", "f(a,"] {
        match parse_expr(bad) {
            Ok(_) => println!("{bad:?} parsed"),
            Err(e) => println!("{bad:?}: {e}"),
        }
    }
    for bad in ["f(a,b)", "x = y = z", "f(a,b = "] {
        match parse_identity(bad) {
            Ok(_) => println!("{bad:?} parsed"),
            Err(e) => println!("{bad:?}: {e}"),
        }
    }

    let id = Identity::parse("mine", "f(a, b) = f(b, a)", "symmetry").expect("valid identity");
    let report = theta_dissect::verify_identity(&id, 30);
    println!("{} -> {:?}", id.render(), report.status);
}
