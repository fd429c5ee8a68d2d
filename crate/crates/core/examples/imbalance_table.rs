//! `f` and the sign-imbalance `I` for every shape of a given size, plus the
//! running sums that the imbalance identities talk about.
//!
//! ```text
//! cargo run --release --example imbalance_table -- 7
//! ```

use skewtab::shapes::{self, SkewShape};
use skewtab::tableaux;

fn main() {
    let n: u32 = std::env::args().nth(1).map_or(7, |s| s.parse().expect("n must be a number"));
    let mut sum_i = 0i128;
    let mut signed_squares = 0i128;
    println!("{:<18} {:>8} {:>6}", "λ", "f", "I");
    for lambda in shapes::enumerate_partitions(n) {
        let shape = SkewShape::straight(lambda.clone());
        let f = tableaux::count_standard_tableaux(&shape);
        let i = tableaux::imbalance(&shape);
        println!("{:<18} {f:>8} {i:>6}", lambda.to_string());
        sum_i += i;
        signed_squares += shape.rsgn().value() as i128 * i * i;
    }
    println!("\nΣ I = {sum_i}   (2^⌊n/2⌋ = {})", 1u64 << (n / 2));
    println!("Σ (−1)^v I² = {signed_squares}");

    let skew = SkewShape::new("4,3,2".parse().unwrap(), "2,1".parse().unwrap()).unwrap();
    let (pos, neg) = tableaux::sign_distribution(&skew);
    println!("\n{skew}: {pos} positive, {neg} negative, I = {}", tableaux::imbalance(&skew));
}
