//! Reading words, signs and inverse signs of a skew tableau, and the chess
//! tableaux of a small shape.

use skewtab::sign::inversion_count;
use skewtab::tableaux::{self, Tableau};
use skewtab::SkewShape;

fn main() {
    let shape = SkewShape::new("6,4,2,2,1".parse().unwrap(), "4,3,2".parse().unwrap()).unwrap();
    let t = Tableau::from_rows(shape, vec![vec![1, 4], vec![3], vec![], vec![2, 6], vec![5]]).unwrap();
    print!("{t}");
    let word = t.reading_word();
    println!("reading word {word:?}");
    println!("inversions {}, sgn {}, invsgn {}", inversion_count(&word), t.sign(), t.invsign());

    let partial = Tableau::from_rows(SkewShape::straight("2,1".parse().unwrap()), vec![vec![2, 7], vec![5]]).unwrap();
    println!("\npartial tableau with entries {:?} standardizes to", partial.values());
    print!("{}", partial.standardize());

    let shape = SkewShape::straight("3,2".parse().unwrap());
    let all = tableaux::enumerate_standard_tableaux(&shape);
    let chess: Vec<_> = all.iter().filter(|t| t.is_chess()).collect();
    println!("\n{shape}: {} standard tableaux, {} chess", all.len(), chess.len());
    for t in chess {
        println!("sgn {}", t.sign());
        print!("{t}");
    }
}
