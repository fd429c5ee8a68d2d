//! The exhaustive checkers over a small grid, printed as JSON lines.
//!
//! ```text
//! cargo run --release --example verify_grid -- 3,2,1 4
//! ```

use skewtab::shapes::{self, Partition};
use skewtab::verify;

fn main() {
    let mut args = std::env::args().skip(1);
    let top: Partition = args.next().unwrap_or_else(|| "2,1".into()).parse().expect("shape like 2,1");
    let n_max: u32 = args.next().map_or(3, |s| s.parse().expect("n must be a number"));

    let mut failed = 0;
    for k in 0..=top.size() {
        for alpha in shapes::enumerate_inner_subshapes(&top, k) {
            for n in 1..=n_max {
                for report in [verify::check_theorem_main(&alpha, n, true), verify::check_theorem_inout(&alpha, n)] {
                    failed += usize::from(!report.passed);
                    println!("{}", serde_json::to_string(&report).unwrap());
                }
            }
        }
    }
    eprintln!("{failed} failing reports");
}
