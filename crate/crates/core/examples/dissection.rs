//! Splits f(a, b) by the summation index mod m and checks each closed-form component.

use theta_dissect::dissect::closed_form;
use theta_dissect::{dissect_closed, dissect_filter, DissectionSpec};

fn main() -> theta_dissect::Result<()> {
    let m = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(4);
    let n = 30;
    for k in 0..m {
        let spec = DissectionSpec::new(m, k)?;
        let form = closed_form(&spec);
        let filtered = dissect_filter(&spec, n);
        let closed = dissect_closed(&spec, n);
        let verdict = if filtered.equal_through(&closed, n)?.is_none() { "agree" } else { "DIFFER" };
        println!(
            "S_{k} = {}*f({}, {})  [{verdict}]",
            form.prefix, form.first, form.second
        );
        println!("     = {closed}");
    }
    Ok(())
}
