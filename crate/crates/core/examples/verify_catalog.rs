//! Runs the built-in identity catalog and prints the JSON run document.

use theta_dissect::catalog::verify_all;
use theta_dissect::{builtin_catalog, RunDocument};

fn main() {
    let degree = std::env::args().nth(1).and_then(|s| s.parse().ok());
    let reports = verify_all(&builtin_catalog(), degree, None);
    for r in &reports {
        println!("{:<18} {:?}", r.name, r.status);
    }
    let doc = RunDocument::new(reports);
    println!("{}", serde_json::to_string_pretty(&doc.summary).expect("serializable"));
}
