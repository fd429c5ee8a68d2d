//! Both sides of the counting identity for two inner shapes, as big integers.

use skewtab::verify;

fn main() {
    let alpha = "2,1".parse().unwrap();
    let beta = "1".parse().unwrap();
    for n in 0..=3 {
        for m in 0..=3 {
            let report = verify::check_counting_identity(&alpha, &beta, n, m);
            println!(
                "n = {n}, m = {m}: {} = {} ({})",
                report.lhs.as_deref().unwrap_or("?"),
                report.rhs.as_deref().unwrap_or("?"),
                if report.passed { "ok" } else { "MISMATCH" }
            );
        }
    }
}
