//! Domino and square packings of ordinary shapes, and `rsgn` of skew shapes.
//!
//! ```text
//! cargo run --example shape_statistics -- 6
//! ```

use skewtab::shapes::{self, SkewShape};

fn main() {
    let n: u32 = std::env::args().nth(1).map_or(6, |s| s.parse().expect("n must be a number"));
    println!("{:<16} {:>3} {:>3} {:>3} {:>5} {:>10}", "λ", "v", "h", "d", "rsgn", "conjugate");
    for lambda in shapes::enumerate_partitions(n) {
        let rsgn = SkewShape::straight(lambda.clone()).rsgn();
        println!(
            "{:<16} {:>3} {:>3} {:>3} {:>5} {:>10}",
            lambda.to_string(),
            shapes::v(&lambda),
            shapes::h(&lambda),
            shapes::d(&lambda),
            rsgn.to_string(),
            lambda.conjugate().to_string()
        );
    }

    let skew = SkewShape::new("4,3,1".parse().unwrap(), "2,1".parse().unwrap()).unwrap();
    let cells: Vec<String> = skew.cells().iter().map(|c| c.to_string()).collect();
    println!("\n{skew} has cells {} and rsgn {}", cells.join(" "), skew.rsgn());
}
