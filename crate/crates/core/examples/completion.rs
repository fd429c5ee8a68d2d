//! Completing partial permutations, and the size of `PS_n`.

use skewtab::words::{self, PartialPermutation};

fn main() {
    let pi = PartialPermutation::from_lines(vec![1, 2, 4], vec![4, 2, 3], 5).unwrap();
    let full = pi.complete();
    println!("{} completes to {full} with sign {}", pi.word(), full.sign());

    for n in 0..=4 {
        let all = words::enumerate_partial_permutations(n);
        let even = all.iter().filter(|p| p.complete().sign().is_plus()).count();
        println!("n = {n}: {} partial permutations, {even} with even completion", all.len());
    }
}
