//! Imbalance generating polynomials in `q`, `t`, `x`.

use skewtab::verify;

fn main() {
    for n in 0..=8 {
        let lhs = verify::imbalance_generating_polynomial(n);
        let t_side = verify::signed_square_t_polynomial(n);
        println!("n = {n}: {lhs}");
        println!("       at q=t=x=1: {}, signed squares in t: {t_side}", lhs.eval(1, 1, 1));
    }
}
