//! Biwords, partial permutations and permutations.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::sign::{self, Sign};

/// A two-line array whose top line is weakly increasing.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "BiwordRepr")]
pub struct Biword {
    top: Vec<u32>,
    bottom: Vec<u32>,
}

#[derive(Deserialize)]
struct BiwordRepr {
    top: Vec<u32>,
    bottom: Vec<u32>,
}

impl TryFrom<BiwordRepr> for Biword {
    type Error = Error;

    fn try_from(r: BiwordRepr) -> Result<Biword> {
        Biword::new(r.top, r.bottom)
    }
}

impl Biword {
    pub fn new(top: Vec<u32>, bottom: Vec<u32>) -> Result<Biword> {
        if top.len() != bottom.len() {
            return Err(Error::InvalidBiword(format!(
                "lines have lengths {} and {}",
                top.len(),
                bottom.len()
            )));
        }
        if top.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::InvalidBiword("top line is not weakly increasing".into()));
        }
        if top.iter().chain(&bottom).any(|&x| x == 0) {
            return Err(Error::InvalidBiword("entries must be positive".into()));
        }
        Ok(Biword { top, bottom })
    }

    pub fn empty() -> Biword {
        Biword::default()
    }

    /// The top line `π̂`.
    pub fn top(&self) -> &[u32] {
        &self.top
    }

    /// The bottom line `π̌`.
    pub fn bottom(&self) -> &[u32] {
        &self.bottom
    }

    pub fn len(&self) -> usize {
        self.top.len()
    }

    pub fn is_empty(&self) -> bool {
        self.top.is_empty()
    }

    pub fn pairs(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.top.iter().copied().zip(self.bottom.iter().copied())
    }

    /// Bottom value paired with `top`, if present.
    pub fn image(&self, top: u32) -> Option<u32> {
        self.top.binary_search(&top).ok().map(|i| self.bottom[i])
    }
}

impl fmt::Display for Biword {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let line = |v: &[u32]| v.iter().map(u32::to_string).collect::<Vec<_>>().join(" ");
        write!(f, "[{} / {}]", line(&self.top), line(&self.bottom))
    }
}

/// A biword with distinct entries at most `n` in each line.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct PartialPermutation {
    #[serde(flatten)]
    word: Biword,
    #[serde(skip)]
    n: u32,
}

impl PartialPermutation {
    pub fn new(word: Biword, n: u32) -> Result<PartialPermutation> {
        check_line(word.top(), n, "top")?;
        check_line(word.bottom(), n, "bottom")?;
        if word.top.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidBiword("top line has repeated entries".into()));
        }
        Ok(PartialPermutation { word, n })
    }

    pub fn from_lines(top: Vec<u32>, bottom: Vec<u32>, n: u32) -> Result<PartialPermutation> {
        PartialPermutation::new(Biword::new(top, bottom)?, n)
    }

    pub fn empty(n: u32) -> PartialPermutation {
        PartialPermutation { word: Biword::empty(), n }
    }

    pub fn word(&self) -> &Biword {
        &self.word
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn top(&self) -> &[u32] {
        self.word.top()
    }

    pub fn bottom(&self) -> &[u32] {
        self.word.bottom()
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    /// The completion `π̄ ∈ S_n`.
    pub fn complete(&self) -> Permutation {
        let missing_bottom = missing(self.bottom(), self.n);
        let mut fill = missing_bottom.into_iter();
        let images = (1..=self.n)
            .map(|i| match self.word.image(i) {
                Some(b) => b,
                None => fill.next().expect("missing lines have equal length"),
            })
            .collect();
        Permutation { images }
    }
}

fn check_line(line: &[u32], n: u32, which: &str) -> Result<()> {
    let mut seen = vec![false; n as usize + 1];
    for &x in line {
        if x == 0 || x > n {
            return Err(Error::InvalidBiword(format!("{which} entry {x} outside 1..={n}")));
        }
        if std::mem::replace(&mut seen[x as usize], true) {
            return Err(Error::InvalidBiword(format!("{which} entry {x} repeated")));
        }
    }
    Ok(())
}

/// Values of `1..=n` absent from `line`, increasing.
fn missing(line: &[u32], n: u32) -> Vec<u32> {
    let mut present = vec![false; n as usize + 1];
    for &x in line {
        present[x as usize] = true;
    }
    (1..=n).filter(|&x| !present[x as usize]).collect()
}

pub fn complete(pi: &PartialPermutation) -> Permutation {
    pi.complete()
}

/// A permutation of `1..=n` in one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Permutation {
    images: Vec<u32>,
}

impl TryFrom<Vec<u32>> for Permutation {
    type Error = Error;

    fn try_from(images: Vec<u32>) -> Result<Permutation> {
        Permutation::new(images)
    }
}

impl From<Permutation> for Vec<u32> {
    fn from(p: Permutation) -> Vec<u32> {
        p.images
    }
}

impl Permutation {
    pub fn new(images: Vec<u32>) -> Result<Permutation> {
        let n = images.len() as u32;
        check_line(&images, n, "image").map_err(|e| Error::InvalidPermutation(e.to_string()))?;
        Ok(Permutation { images })
    }

    pub fn identity(n: u32) -> Permutation {
        Permutation { images: (1..=n).collect() }
    }

    pub fn n(&self) -> u32 {
        self.images.len() as u32
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    /// Image of position `i` (1-indexed).
    pub fn at(&self, i: u32) -> u32 {
        self.images[i as usize - 1]
    }

    pub fn sign(&self) -> Sign {
        sign::word_sign(&self.images)
    }

    /// True iff the values at the given positions, taken in increasing
    /// position order, strictly increase.
    pub fn is_increasing_at(&self, indices: &[u32]) -> bool {
        let mut idx = indices.to_vec();
        idx.sort_unstable();
        idx.windows(2).all(|w| self.at(w[0]) < self.at(w[1]))
    }

    /// Two-line form with top line `1..=n`.
    pub fn to_biword(&self) -> Biword {
        Biword { top: (1..=self.n()).collect(), bottom: self.images.clone() }
    }

    /// All of `S_n` in lexicographic order.
    pub fn all(n: u32) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut current = Vec::with_capacity(n as usize);
        let mut used = vec![false; n as usize + 1];
        arrangements(&(1..=n).collect::<Vec<_>>(), n as usize, &mut current, &mut used, &mut |a| {
            out.push(Permutation { images: a.to_vec() })
        });
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.images.iter().any(|&x| x > 9) { " " } else { "" };
        let s: Vec<String> = self.images.iter().map(u32::to_string).collect();
        write!(f, "{}", s.join(sep))
    }
}

pub fn perm_sign(p: &Permutation) -> Sign {
    p.sign()
}

pub fn is_increasing_at(p: &Permutation, indices: &[u32]) -> bool {
    p.is_increasing_at(indices)
}

/// Ordered selections of `k` distinct items of `pool` in lexicographic order.
fn arrangements(
    pool: &[u32],
    k: usize,
    current: &mut Vec<u32>,
    used: &mut Vec<bool>,
    emit: &mut impl FnMut(&[u32]),
) {
    if current.len() == k {
        emit(current);
        return;
    }
    for (i, &x) in pool.iter().enumerate() {
        if used[i] {
            continue;
        }
        used[i] = true;
        current.push(x);
        arrangements(pool, k, current, used, emit);
        current.pop();
        used[i] = false;
    }
}

/// `k`-subsets of `1..=n` in lexicographic order.
pub fn subsets(n: u32, k: u32) -> Vec<Vec<u32>> {
    fn go(start: u32, n: u32, k: u32, current: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if current.len() as u32 == k {
            out.push(current.clone());
            return;
        }
        let needed = k - current.len() as u32;
        for x in start..=n {
            if n - x + 1 < needed {
                break;
            }
            current.push(x);
            go(x + 1, n, k, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        go(1, n, k, &mut Vec::new(), &mut out);
    }
    out
}

/// Every partial `n`-permutation: by size, then top set, then bottom
/// arrangement, each lexicographically.
pub fn enumerate_partial_permutations(n: u32) -> Vec<PartialPermutation> {
    let mut out = Vec::new();
    let pool: Vec<u32> = (1..=n).collect();
    for k in 0..=n {
        for top in subsets(n, k) {
            let mut current = Vec::with_capacity(k as usize);
            let mut used = vec![false; n as usize];
            arrangements(&pool, k as usize, &mut current, &mut used, &mut |bottom| {
                out.push(PartialPermutation {
                    word: Biword { top: top.clone(), bottom: bottom.to_vec() },
                    n,
                })
            });
        }
    }
    out
}

/// Ordered `k`-arrangements of `pool`, lexicographic.
pub(crate) fn enumerate_arrangements(pool: &[u32], k: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut used = vec![false; pool.len()];
    arrangements(pool, k, &mut Vec::with_capacity(k), &mut used, &mut |a| out.push(a.to_vec()));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn completion_examples() {
        let pi = PartialPermutation::from_lines(vec![1, 2, 4], vec![4, 2, 3], 5).unwrap();
        assert_eq!(pi.complete().images(), &[4, 2, 1, 3, 5]);
        assert_eq!(PartialPermutation::empty(3).complete(), Permutation::identity(3));
        let pi = PartialPermutation::from_lines(vec![2], vec![1], 2).unwrap();
        assert_eq!(pi.complete().images(), &[2, 1]);
    }

    #[test]
    fn partial_permutation_rejects() {
        assert!(PartialPermutation::from_lines(vec![1, 1], vec![1, 2], 3).is_err());
        assert!(PartialPermutation::from_lines(vec![1, 2], vec![2, 2], 3).is_err());
        assert!(PartialPermutation::from_lines(vec![1, 4], vec![1, 2], 3).is_err());
        assert!(PartialPermutation::from_lines(vec![2, 1], vec![1, 2], 3).is_err());
        assert!(Biword::new(vec![1], vec![]).is_err());
        assert!(Permutation::new(vec![1, 1]).is_err());
        assert!(Permutation::new(vec![2, 3]).is_err());
    }

    #[test]
    fn sign_examples() {
        let p = Permutation::new(vec![4, 2, 1, 3, 5]).unwrap();
        assert_eq!(p.sign(), Sign::Plus);
        assert_eq!(Permutation::identity(6).sign(), Sign::Plus);
        assert_eq!(Permutation::new(vec![2, 1]).unwrap().sign(), Sign::Minus);
    }

    #[test]
    fn increasing_at_examples() {
        let p = Permutation::new(vec![4, 2, 1, 3, 5]).unwrap();
        assert!(p.is_increasing_at(&[3, 5]));
        assert!(p.is_increasing_at(&[]));
        assert!(!p.is_increasing_at(&[1, 2]));
        assert!(p.is_increasing_at(&[5, 3, 4]));
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_partial_permutations(0).len(), 1);
        assert_eq!(enumerate_partial_permutations(1).len(), 2);
        assert_eq!(enumerate_partial_permutations(2).len(), 7);
        assert_eq!(enumerate_partial_permutations(3).len(), 34);
        assert_eq!(Permutation::all(4).len(), 24);
        assert_eq!(subsets(4, 2).len(), 6);
        assert!(subsets(2, 3).is_empty());
    }

    #[test]
    fn json_forms() {
        let pi = PartialPermutation::from_lines(vec![1, 2, 4], vec![4, 2, 3], 5).unwrap();
        assert_eq!(serde_json::to_string(&pi).unwrap(), r#"{"top":[1,2,4],"bottom":[4,2,3]}"#);
        let p = pi.complete();
        assert_eq!(serde_json::to_string(&p).unwrap(), "[4,2,1,3,5]");
        assert!(serde_json::from_str::<Biword>(r#"{"top":[2,1],"bottom":[1,2]}"#).is_err());
    }
}
