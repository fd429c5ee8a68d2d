//! Brute-force oracles shared by the integration tests. Nothing here calls
//! into the library's counting or statistics code.

#![allow(dead_code)]

use std::collections::BTreeSet;

use itertools::Itertools;

pub type CellSet = BTreeSet<(u32, u32)>;

/// Cells of the ordinary shape with the given parts, 1-indexed.
pub fn ferrers(parts: &[u32]) -> CellSet {
    parts
        .iter()
        .enumerate()
        .flat_map(|(i, &p)| (1..=p).map(move |c| (i as u32 + 1, c)))
        .collect()
}

/// Maximum number of pairwise disjoint translates of `tile` inside `cells`,
/// by exhaustive search over all placements.
pub fn max_packing(cells: &CellSet, tile: &[(u32, u32)]) -> u32 {
    let placements: Vec<Vec<(u32, u32)>> = cells
        .iter()
        .map(|&(r, c)| tile.iter().map(|&(dr, dc)| (r + dr, c + dc)).collect::<Vec<_>>())
        .filter(|p| p.iter().all(|x| cells.contains(x)))
        .collect();

    fn go(placements: &[Vec<(u32, u32)>], used: &mut CellSet, best: &mut u32, count: u32) {
        *best = (*best).max(count);
        if count + placements.len() as u32 <= *best {
            return;
        }
        let Some((first, rest)) = placements.split_first() else { return };
        if first.iter().all(|x| !used.contains(x)) {
            for &x in first {
                used.insert(x);
            }
            go(rest, used, best, count + 1);
            for x in first {
                used.remove(x);
            }
        }
        go(rest, used, best, count);
    }

    let mut best = 0;
    go(&placements, &mut CellSet::new(), &mut best, 0);
    best
}

pub const VERTICAL_DOMINO: [(u32, u32); 2] = [(0, 0), (1, 0)];
pub const HORIZONTAL_DOMINO: [(u32, u32); 2] = [(0, 0), (0, 1)];
pub const SQUARE: [(u32, u32); 4] = [(0, 0), (0, 1), (1, 0), (1, 1)];

/// Skew cells `(r, c)` with `inner_r < c ≤ outer_r`, in reading order.
pub fn skew_cells(outer: &[u32], inner: &[u32]) -> Vec<(u32, u32)> {
    let mut out = Vec::new();
    for (i, &o) in outer.iter().enumerate() {
        let lo = inner.get(i).copied().unwrap_or(0);
        for c in lo + 1..=o {
            out.push((i as u32 + 1, c));
        }
    }
    out
}

/// Every standard filling of the skew shape, as reading words, found by
/// trying all `n!` assignments of `1..=n` to the cells in reading order.
pub fn brute_standard_words(outer: &[u32], inner: &[u32]) -> Vec<Vec<u32>> {
    let cells = skew_cells(outer, inner);
    let n = cells.len() as u32;
    let pos = |cell: (u32, u32)| cells.iter().position(|&c| c == cell);
    (1..=n)
        .permutations(n as usize)
        .filter(|w| {
            cells.iter().enumerate().all(|(i, &(r, c))| {
                let left_ok = pos((r, c.wrapping_sub(1))).is_none_or(|j| w[j] < w[i]);
                let up_ok = pos((r.wrapping_sub(1), c)).is_none_or(|j| w[j] < w[i]);
                left_ok && up_ok
            })
        })
        .collect()
}

pub fn inversions(w: &[u32]) -> usize {
    (0..w.len()).flat_map(|i| (i + 1..w.len()).map(move |j| (i, j))).filter(|&(i, j)| w[i] > w[j]).count()
}

pub fn word_sign(w: &[u32]) -> i64 {
    if inversions(w).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// `(f, I)` by brute force.
pub fn brute_count_and_imbalance(outer: &[u32], inner: &[u32]) -> (usize, i64) {
    let words = brute_standard_words(outer, inner);
    let i = words.iter().map(|w| word_sign(w)).sum();
    (words.len(), i)
}

/// `Σ sgn π` over `π ∈ S_n` increasing at `indices`.
pub fn brute_signed_sum(n: u32, indices: &[u32]) -> i64 {
    (1..=n)
        .permutations(n as usize)
        .filter(|p| indices.windows(2).all(|w| p[w[0] as usize - 1] < p[w[1] as usize - 1]))
        .map(|p| word_sign(&p))
        .sum()
}

/// All partitions of `n` by filtering weakly decreasing sequences from a
/// plain recursive generator (no ordering assumptions).
pub fn brute_partitions(n: u32) -> Vec<Vec<u32>> {
    fn go(n: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if n == 0 {
            if prefix.windows(2).all(|w| w[0] >= w[1]) {
                out.push(prefix.clone());
            }
            return;
        }
        for p in 1..=n {
            prefix.push(p);
            go(n - p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, &mut Vec::new(), &mut out);
    out
}

/// Every subshape of `parts` (as part vectors without trailing zeros).
pub fn brute_subshapes(parts: &[u32]) -> Vec<Vec<u32>> {
    let total: u32 = parts.iter().sum();
    (0..=total)
        .flat_map(brute_partitions)
        .filter(|mu| mu.len() <= parts.len() && mu.iter().zip(parts).all(|(a, b)| a <= b))
        .collect()
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

pub fn factorial(n: u64) -> u64 {
    (1..=n).product()
}
