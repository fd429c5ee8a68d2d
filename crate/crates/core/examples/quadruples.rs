//! Triples of partial objects against quadruples of standard objects.

use skewtab::skew_rs;
use skewtab::verify;

fn main() {
    let alpha = "2,1".parse().unwrap();
    let n = 3;
    let triples = skew_rs::enumerate_triples(&alpha, n);
    println!("{} triples for α = {alpha}, n = {n} (expected {})", triples.len(), verify::domain_count(&alpha, n));

    let sample = &triples[triples.len() / 2];
    let quad = skew_rs::lemma6_forward(sample);
    println!("\ntriple: π = {}\nT =\n{}U =\n{}", sample.pi.word(), sample.t, sample.u);
    println!("quadruple: π̃ = {}, indices {:?}\nT̃ =\n{}Ũ =\n{}", quad.perm, quad.indexset, quad.tstd, quad.ustd);

    let all_back = triples.iter().all(|t| skew_rs::lemma6_backward(&skew_rs::lemma6_forward(t)).is_ok_and(|b| &b == t));
    println!("every triple survives the round trip: {all_back}");
}
