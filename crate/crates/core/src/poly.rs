//! Sparse trivariate polynomials in `q`, `t`, `x` with integer coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::Serialize;

/// Exponents `(q, t, x)`.
pub type Exponents = (u32, u32, u32);

/// No zero coefficients are ever stored, so the zero polynomial is the empty
/// map.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SparsePolynomial {
    terms: BTreeMap<Exponents, i128>,
}

impl SparsePolynomial {
    pub fn zero() -> Self {
        SparsePolynomial::default()
    }

    pub fn one() -> Self {
        Self::monomial((0, 0, 0), 1)
    }

    pub fn monomial(exp: Exponents, coeff: i128) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, coeff);
        p
    }

    pub fn q() -> Self {
        Self::monomial((1, 0, 0), 1)
    }

    pub fn t() -> Self {
        Self::monomial((0, 1, 0), 1)
    }

    pub fn x() -> Self {
        Self::monomial((0, 0, 1), 1)
    }

    pub fn add_term(&mut self, exp: Exponents, coeff: i128) {
        if coeff == 0 {
            return;
        }
        let entry = self.terms.entry(exp).or_insert(0);
        *entry = entry.checked_add(coeff).expect("coefficient overflow");
        if *entry == 0 {
            self.terms.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: Exponents) -> i128 {
        self.terms.get(&exp).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (Exponents, i128)> + '_ {
        self.terms.iter().map(|(&e, &c)| (e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Largest `t`-exponent present, or `None` for zero.
    pub fn t_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.1).max()
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| &acc * self)
    }

    pub fn eval(&self, q: i128, t: i128, x: i128) -> i128 {
        self.terms
            .iter()
            .map(|(&(a, b, c), &coeff)| {
                coeff
                    .checked_mul(q.checked_pow(a).expect("overflow"))
                    .and_then(|v| v.checked_mul(t.checked_pow(b)?))
                    .and_then(|v| v.checked_mul(x.checked_pow(c)?))
                    .expect("evaluation overflow")
            })
            .fold(0i128, |acc, v| acc.checked_add(v).expect("evaluation overflow"))
    }
}

impl Add for &SparsePolynomial {
    type Output = SparsePolynomial;

    fn add(self, rhs: &SparsePolynomial) -> SparsePolynomial {
        let mut out = self.clone();
        for (&e, &c) in &rhs.terms {
            out.add_term(e, c);
        }
        out
    }
}

impl Neg for &SparsePolynomial {
    type Output = SparsePolynomial;

    fn neg(self) -> SparsePolynomial {
        SparsePolynomial { terms: self.terms.iter().map(|(&e, &c)| (e, -c)).collect() }
    }
}

impl Sub for &SparsePolynomial {
    type Output = SparsePolynomial;

    fn sub(self, rhs: &SparsePolynomial) -> SparsePolynomial {
        self + &(-rhs)
    }
}

impl Mul for &SparsePolynomial {
    type Output = SparsePolynomial;

    fn mul(self, rhs: &SparsePolynomial) -> SparsePolynomial {
        let mut out = SparsePolynomial::zero();
        for (&(a1, b1, c1), &k1) in &self.terms {
            for (&(a2, b2, c2), &k2) in &rhs.terms {
                out.add_term((a1 + a2, b1 + b2, c1 + c2), k1.checked_mul(k2).expect("coefficient overflow"));
            }
        }
        out
    }
}

/// Highest total degree first, then by `q`, `t`, `x` exponents descending;
/// e.g. `q^2 + 2*q*x + x^2`.
impl fmt::Display for SparsePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut terms: Vec<(Exponents, i128)> = self.terms().collect();
        terms.sort_by(|(a, _), (b, _)| (b.0 + b.1 + b.2, b).cmp(&(a.0 + a.1 + a.2, a)));
        for (i, ((a, b, c), coeff)) in terms.into_iter().enumerate() {
            let mut vars = Vec::new();
            for (name, e) in [("q", a), ("t", b), ("x", c)] {
                match e {
                    0 => {}
                    1 => vars.push(name.to_string()),
                    _ => vars.push(format!("{name}^{e}")),
                }
            }
            let mag = coeff.unsigned_abs();
            let body = match (mag, vars.is_empty()) {
                (_, true) => mag.to_string(),
                (1, false) => vars.join("*"),
                (_, false) => format!("{mag}*{}", vars.join("*")),
            };
            match (i, coeff < 0) {
                (0, false) => write!(f, "{body}")?,
                (0, true) => write!(f, "-{body}")?,
                (_, false) => write!(f, " + {body}")?,
                (_, true) => write!(f, " - {body}")?,
            }
        }
        Ok(())
    }
}
