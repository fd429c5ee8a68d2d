//! Integer partitions, skew shapes and their statistics.
//!
//! A [`Partition`] is kept in normal form: weakly decreasing, strictly
//! positive parts, no trailing zeros. The empty partition is `∅`.
//! A [`SkewShape`] remembers both partitions, so `(6,4,2,2,1)/(4,3,2)` and
//! `(6,4,3,2,1)/(4,3,3)` are different shapes even though they cover the
//! same cells.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::sign::Sign;

/// A cell `(row, col)`, both 1-indexed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cell {
    pub row: u32,
    pub col: u32,
}

impl Cell {
    pub fn new(row: u32, col: u32) -> Cell {
        debug_assert!(row >= 1 && col >= 1, "cells are 1-indexed");
        Cell { row, col }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn empty() -> Partition {
        Partition { parts: Vec::new() }
    }

    /// Builds a partition, stripping trailing zeros.
    pub fn new(mut parts: Vec<u32>) -> Result<Partition> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(parts));
        }
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of nonzero rows.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Length of row `row` (1-indexed), zero past the last part.
    pub fn row(&self, row: u32) -> u32 {
        if row == 0 {
            return 0;
        }
        self.parts.get(row as usize - 1).copied().unwrap_or(0)
    }

    /// Column heights.
    pub fn conjugate(&self) -> Partition {
        let width = self.row(1);
        let parts = (1..=width)
            .map(|c| self.parts.iter().take_while(|&&p| p >= c).count() as u32)
            .collect();
        Partition { parts }
    }

    /// True iff `other ⊆ self`.
    pub fn contains(&self, other: &Partition) -> bool {
        contains(other, self)
    }

    /// Adds one cell at the end of `row`. Fails if the result is not a partition.
    pub fn add_cell(&mut self, row: u32) -> Result<()> {
        let r = row as usize;
        if row == 0 || r > self.parts.len() + 1 {
            return Err(Error::InvalidPartition(self.parts.clone()));
        }
        if r == self.parts.len() + 1 {
            self.parts.push(1);
        } else {
            self.parts[r - 1] += 1;
        }
        if r >= 2 && self.parts[r - 1] > self.parts[r - 2] {
            self.parts[r - 1] -= 1;
            if self.parts[r - 1] == 0 {
                self.parts.pop();
            }
            return Err(Error::InvalidPartition(self.parts.clone()));
        }
        Ok(())
    }

    /// Removes the last cell of `row`. Fails if the result is not a partition.
    pub fn remove_cell(&mut self, row: u32) -> Result<()> {
        let r = row as usize;
        if row == 0 || r > self.parts.len() || self.row(row + 1) >= self.row(row) {
            return Err(Error::InvalidPartition(self.parts.clone()));
        }
        self.parts[r - 1] -= 1;
        if self.parts[r - 1] == 0 {
            self.parts.pop();
        }
        Ok(())
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<u32>) -> Result<Partition> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Vec<u32> {
        p.parts
    }
}

/// Decreasing lexicographic order, so `(3) > (2,1) > (1,1,1)`.
impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.parts.cmp(&other.parts)
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "∅");
        }
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Parses a comma-separated part list; the empty string is `∅`.
impl std::str::FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Partition> {
        let s = s.trim();
        if s.is_empty() || s == "∅" {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|p| p.trim().parse::<u32>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::InvalidPartition(Vec::new()))?;
        Partition::new(parts)
    }
}

#[macro_export]
macro_rules! partition {
    () => { $crate::shapes::Partition::empty() };
    ($($p:expr),+ $(,)?) => {
        $crate::shapes::Partition::new(vec![$($p),+]).expect("valid partition literal")
    };
}

/// True iff `inner_i ≤ outer_i` for every row.
pub fn contains(inner: &Partition, outer: &Partition) -> bool {
    inner.len() <= outer.len() && inner.parts.iter().zip(&outer.parts).all(|(a, b)| a <= b)
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "SkewShapeRepr")]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

#[derive(Deserialize)]
struct SkewShapeRepr {
    outer: Partition,
    inner: Partition,
}

impl TryFrom<SkewShapeRepr> for SkewShape {
    type Error = Error;

    fn try_from(r: SkewShapeRepr) -> Result<SkewShape> {
        SkewShape::new(r.outer, r.inner)
    }
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<SkewShape> {
        if !contains(&inner, &outer) {
            return Err(Error::NotContained { outer: outer.parts, inner: inner.parts });
        }
        Ok(SkewShape { outer, inner })
    }

    /// The ordinary shape `λ/∅`.
    pub fn straight(outer: Partition) -> SkewShape {
        SkewShape { outer, inner: Partition::empty() }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn into_parts(self) -> (Partition, Partition) {
        (self.outer, self.inner)
    }

    /// Number of cells.
    pub fn size(&self) -> u32 {
        self.outer.size() - self.inner.size()
    }

    pub fn num_rows(&self) -> u32 {
        self.outer.len() as u32
    }

    /// Cells of row `row` lie in columns `inner_row + 1 ..= outer_row`.
    pub fn row_span(&self, row: u32) -> (u32, u32) {
        (self.inner.row(row), self.outer.row(row))
    }

    pub fn contains_cell(&self, cell: Cell) -> bool {
        let (lo, hi) = self.row_span(cell.row);
        cell.row >= 1 && lo < cell.col && cell.col <= hi
    }

    /// Cells in row-major (reading) order.
    pub fn cells(&self) -> Vec<Cell> {
        let mut out = Vec::with_capacity(self.size() as usize);
        for r in 1..=self.num_rows() {
            let (lo, hi) = self.row_span(r);
            out.extend((lo + 1..=hi).map(|c| Cell::new(r, c)));
        }
        out
    }

    /// `(-1)` to the sum of `row - 1` over all cells.
    pub fn rsgn(&self) -> Sign {
        let total: u64 = (1..=self.num_rows())
            .map(|r| {
                let (lo, hi) = self.row_span(r);
                u64::from(r - 1) * u64::from(hi - lo)
            })
            .sum();
        Sign::from_parity(total)
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.outer, self.inner)
    }
}

pub fn cells(shape: &SkewShape) -> Vec<Cell> {
    shape.cells()
}

pub fn rsgn(shape: &SkewShape) -> Sign {
    shape.rsgn()
}

/// Maximal number of disjoint vertical dominoes in `λ`.
pub fn v(lambda: &Partition) -> u32 {
    lambda.conjugate().parts.iter().map(|h| h / 2).sum()
}

/// Maximal number of disjoint horizontal dominoes in `λ`.
pub fn h(lambda: &Partition) -> u32 {
    lambda.parts.iter().map(|w| w / 2).sum()
}

/// Maximal number of disjoint 2×2 squares in `λ`, by pairing rows
/// `(1,2), (3,4), …`.
pub fn d(lambda: &Partition) -> u32 {
    lambda.parts.iter().skip(1).step_by(2).map(|w| w / 2).sum()
}

/// All partitions of `n` in decreasing lexicographic order.
pub fn enumerate_partitions(n: u32) -> Vec<Partition> {
    fn go(remaining: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition { parts: prefix.clone() });
            return;
        }
        for part in (1..=remaining.min(max)).rev() {
            prefix.push(part);
            go(remaining - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// All `λ ⊇ α` with `|λ| − |α| = n`, in decreasing lexicographic order.
pub fn enumerate_outer_extensions(alpha: &Partition, n: u32) -> Vec<Partition> {
    fn go(
        alpha: &Partition,
        row: u32,
        remaining: u32,
        max: u32,
        prefix: &mut Vec<u32>,
        out: &mut Vec<Partition>,
    ) {
        let floor = alpha.row(row);
        // the rows of alpha still to come must fit under `max`
        if row as usize > alpha.len() && remaining == 0 {
            out.push(Partition { parts: prefix.clone() });
            return;
        }
        if floor > max {
            return;
        }
        let upper = max.min(floor + remaining);
        for part in (floor.max(1)..=upper).rev() {
            prefix.push(part);
            go(alpha, row + 1, remaining - (part - floor), part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    let first_max = alpha.row(1) + n;
    go(alpha, 1, n, first_max, &mut Vec::new(), &mut out);
    out
}

/// All `μ ⊆ α` with `|α| − |μ| = n`, in decreasing lexicographic order.
pub fn enumerate_inner_subshapes(alpha: &Partition, n: u32) -> Vec<Partition> {
    fn go(
        alpha: &Partition,
        row: u32,
        remaining: u32,
        max: u32,
        prefix: &mut Vec<u32>,
        out: &mut Vec<Partition>,
    ) {
        if row as usize > alpha.len() {
            if remaining == 0 {
                let mut parts = prefix.clone();
                while parts.last() == Some(&0) {
                    parts.pop();
                }
                out.push(Partition { parts });
            }
            return;
        }
        // cells still removable in rows below this one
        let below: u32 = alpha.parts[row as usize..].iter().sum();
        let a = alpha.row(row);
        for part in (0..=a.min(max)).rev() {
            let removed = a - part;
            if removed > remaining || remaining - removed > below {
                continue;
            }
            prefix.push(part);
            go(alpha, row + 1, remaining - removed, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n > alpha.size() {
        return out;
    }
    go(alpha, 1, n, u32::MAX, &mut Vec::new(), &mut out);
    out
}
