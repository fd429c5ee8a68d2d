//! One run of the skew correspondence with its full insertion trace, then
//! back again.

use skewtab::skew_rs::{self, StepKind, Triple};
use skewtab::tableaux::Tableau;
use skewtab::words::PartialPermutation;
use skewtab::SkewShape;

fn main() -> skewtab::Result<()> {
    let shape = SkewShape::new("3,2".parse()?, "1".parse()?)?;
    let t = Tableau::from_rows(shape.clone(), vec![vec![2, 6], vec![1, 4]])?;
    let u = Tableau::from_rows(shape, vec![vec![1, 5], vec![3, 6]])?;
    let pi = PartialPermutation::from_lines(vec![2, 4], vec![5, 3], 6)?;
    let triple = Triple::new(pi, t, u, "3,2".parse()?)?;

    println!("π = {}\nT =\n{}U =\n{}", triple.pi.word(), triple.t, triple.u);
    let out = skew_rs::forward(&triple, true)?;
    for step in &out.trace {
        let kind = match step.kind {
            StepKind::External => "external",
            StepKind::Internal => "internal",
        };
        let path: Vec<String> = step.bumping_path.iter().map(|c| c.to_string()).collect();
        println!(
            "k = {}: {kind:<8} insert {} along {} -> new cell {}, sgn P {} -> {}",
            step.step,
            step.inserted,
            path.join(" "),
            step.new_cell,
            step.sign_p_before,
            step.sign_p_after
        );
    }
    println!("P =\n{}Q =\n{}", out.p, out.q);
    println!("sign relation holds: {}", skew_rs::sign_relation_holds(&triple, &out.p, &out.q));

    let back = skew_rs::reverse(&out.p, &out.q)?;
    println!("reverse recovers the triple: {}", back == triple);
    Ok(())
}
