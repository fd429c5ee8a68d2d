//! Signed sums over permutations increasing on a fixed set of positions.

use skewtab::verify;
use skewtab::words;

fn main() {
    let n = 5;
    for k in 0..=n {
        for idx in words::subsets(n, k) {
            let closed = verify::signed_sum_fixed_positions(n, &idx);
            let brute = verify::signed_sum_brute_force(n, &idx);
            if closed != 0 || k + 1 >= n {
                println!("{idx:?}: {closed} (brute force {brute})");
            }
        }
    }
    let report = verify::check_signed_sum(6);
    println!("n = 6: {} subsets, passed: {}", report.instances, report.passed);
}
