//! Partial and standard skew tableaux.
//!
//! A [`Tableau`] stores its entries row by row: row `r` holds the entries of
//! columns `inner_r + 1 ..= outer_r`, left to right. Rows and columns must be
//! strictly increasing and all entries distinct.

use std::collections::HashMap;
use std::fmt;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::shapes::{Cell, Partition, SkewShape};
use crate::sign::{self, Sign};

/// A tableau entry that is either a plain integer or `b·ε`.
///
/// Every `Eps` value is smaller than every `Num` value; within a tier values
/// compare by `b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GhostedValue {
    Eps(u32),
    Num(u32),
}

impl GhostedValue {
    pub fn is_eps(self) -> bool {
        matches!(self, GhostedValue::Eps(_))
    }

    pub fn value(self) -> u32 {
        match self {
            GhostedValue::Eps(b) | GhostedValue::Num(b) => b,
        }
    }
}

impl fmt::Display for GhostedValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GhostedValue::Eps(b) => write!(f, "{b}ε"),
            GhostedValue::Num(b) => write!(f, "{b}"),
        }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum GhostedRepr {
    Num(u32),
    Eps { eps: u32 },
}

impl Serialize for GhostedValue {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match *self {
            GhostedValue::Eps(eps) => GhostedRepr::Eps { eps },
            GhostedValue::Num(n) => GhostedRepr::Num(n),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for GhostedValue {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        Ok(match GhostedRepr::deserialize(d)? {
            GhostedRepr::Num(n) => GhostedValue::Num(n),
            GhostedRepr::Eps { eps } => GhostedValue::Eps(eps),
        })
    }
}

/// A (partial) tableau on a skew shape. `V = u32` for P/T/U tableaux,
/// `V = GhostedValue` for the insertion engine's Q-tableau.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tableau<V = u32> {
    shape: SkewShape,
    rows: Vec<Vec<V>>,
}

impl<V: Ord + Clone> Tableau<V> {
    /// The empty tableau on `λ/λ`.
    pub fn empty(lambda: Partition) -> Tableau<V> {
        let rows = vec![Vec::new(); lambda.len()];
        Tableau { shape: SkewShape::new(lambda.clone(), lambda).expect("λ ⊆ λ"), rows }
    }

    /// Builds and validates a tableau from its rows (row `r` lists the
    /// entries of columns `inner_r + 1 ..= outer_r`).
    pub fn from_rows(shape: SkewShape, rows: Vec<Vec<V>>) -> Result<Tableau<V>> {
        let mut rows = rows;
        while rows.len() > shape.num_rows() as usize && rows.last().is_some_and(Vec::is_empty) {
            rows.pop();
        }
        rows.resize(shape.num_rows() as usize, Vec::new());
        let t = Tableau { shape, rows };
        t.validate()?;
        Ok(t)
    }

    /// Builds and validates a tableau from `(cell, value)` pairs covering
    /// exactly the cells of `shape`.
    pub fn from_entries(shape: SkewShape, entries: Vec<(Cell, V)>) -> Result<Tableau<V>> {
        let mut slots: Vec<Vec<Option<V>>> = (1..=shape.num_rows())
            .map(|r| {
                let (lo, hi) = shape.row_span(r);
                vec![None; (hi - lo) as usize]
            })
            .collect();
        for (cell, value) in entries {
            if !shape.contains_cell(cell) {
                return Err(Error::InvalidTableau(format!("cell {cell} is not in shape {shape}")));
            }
            let lo = shape.inner().row(cell.row);
            let slot = &mut slots[cell.row as usize - 1][(cell.col - lo - 1) as usize];
            if slot.is_some() {
                return Err(Error::InvalidTableau(format!("cell {cell} filled twice")));
            }
            *slot = Some(value);
        }
        let mut rows = Vec::with_capacity(slots.len());
        for (i, row) in slots.into_iter().enumerate() {
            let row: Option<Vec<V>> = row.into_iter().collect();
            rows.push(row.ok_or_else(|| {
                Error::InvalidTableau(format!("row {} of shape {shape} has empty cells", i + 1))
            })?);
        }
        Tableau::from_rows(shape, rows)
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    /// Number of entries, `♯T`.
    pub fn len(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.iter().all(Vec::is_empty)
    }

    /// Entries of row `row` (1-indexed), left to right.
    pub fn row(&self, row: u32) -> &[V] {
        if row == 0 {
            return &[];
        }
        self.rows.get(row as usize - 1).map_or(&[], Vec::as_slice)
    }

    pub fn get(&self, cell: Cell) -> Option<&V> {
        let lo = self.shape.inner().row(cell.row);
        if cell.col <= lo {
            return None;
        }
        self.row(cell.row).get((cell.col - lo - 1) as usize)
    }

    /// `(cell, value)` pairs in reading order.
    pub fn entries(&self) -> Vec<(Cell, V)> {
        let mut out = Vec::with_capacity(self.len());
        for (i, row) in self.rows.iter().enumerate() {
            let r = i as u32 + 1;
            let lo = self.shape.inner().row(r);
            out.extend(row.iter().enumerate().map(|(j, v)| (Cell::new(r, lo + 1 + j as u32), v.clone())));
        }
        out
    }

    pub fn cell_of(&self, value: &V) -> Option<Cell> {
        self.entries().into_iter().find(|(_, v)| v == value).map(|(c, _)| c)
    }

    /// Entries read row by row, left to right, top to bottom.
    pub fn reading_word(&self) -> Vec<V> {
        self.rows.iter().flatten().cloned().collect()
    }

    pub fn sign(&self) -> Sign {
        sign::word_sign(&self.reading_word())
    }

    pub fn invsign(&self) -> Sign {
        sign::word_invsign(&self.reading_word())
    }

    /// Sorted entry values.
    pub fn values(&self) -> Vec<V> {
        let mut v = self.reading_word();
        v.sort();
        v
    }

    pub fn map<W: Ord + Clone>(&self, mut f: impl FnMut(&V) -> W) -> Tableau<W> {
        Tableau {
            shape: self.shape.clone(),
            rows: self.rows.iter().map(|r| r.iter().map(&mut f).collect()).collect(),
        }
    }

    /// Checks row lengths, distinctness, and strict increase along rows and
    /// columns.
    pub fn validate(&self) -> Result<()> {
        let shape = &self.shape;
        if self.rows.len() != shape.num_rows() as usize {
            return Err(Error::InvalidTableau(format!(
                "{} rows stored for shape {shape}",
                self.rows.len()
            )));
        }
        for r in 1..=shape.num_rows() {
            let (lo, hi) = shape.row_span(r);
            let row = self.row(r);
            if row.len() != (hi - lo) as usize {
                return Err(Error::InvalidTableau(format!(
                    "row {r} has {} entries, shape {shape} needs {}",
                    row.len(),
                    hi - lo
                )));
            }
            if row.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::InvalidTableau(format!("row {r} is not strictly increasing")));
            }
            if r >= 2 {
                for (j, v) in row.iter().enumerate() {
                    let above = Cell::new(r - 1, lo + 1 + j as u32);
                    if let Some(a) = self.get(above) {
                        if a >= v {
                            return Err(Error::InvalidTableau(format!(
                                "column {} is not strictly increasing at row {r}",
                                above.col
                            )));
                        }
                    }
                }
            }
        }
        let values = self.values();
        if values.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidTableau("entries are not distinct".into()));
        }
        Ok(())
    }

    pub(crate) fn set(&mut self, cell: Cell, value: V) -> V {
        let lo = self.shape.inner().row(cell.row);
        let slot = &mut self.rows[cell.row as usize - 1][(cell.col - lo - 1) as usize];
        std::mem::replace(slot, value)
    }

    /// Appends `value` in a new cell at the right end of `row`; the outer
    /// shape grows by that cell.
    pub(crate) fn push_outer(&mut self, row: u32, value: V) -> Result<Cell> {
        let (mut outer, inner) = self.shape.clone().into_parts();
        outer.add_cell(row)?;
        let col = outer.row(row);
        self.shape = SkewShape::new(outer, inner)?;
        if self.rows.len() < row as usize {
            self.rows.resize(row as usize, Vec::new());
        }
        self.rows[row as usize - 1].push(value);
        Ok(Cell::new(row, col))
    }

    /// Removes the rightmost cell of `row`; the outer shape shrinks by it.
    pub(crate) fn pop_outer(&mut self, row: u32) -> Result<V> {
        let (mut outer, inner) = self.shape.clone().into_parts();
        if self.row(row).is_empty() {
            return Err(Error::InvalidTableau(format!("row {row} has no skew cells")));
        }
        outer.remove_cell(row)?;
        self.shape = SkewShape::new(outer, inner)?;
        let v = self.rows[row as usize - 1].pop().expect("nonempty row");
        self.rows.truncate(self.shape.num_rows() as usize);
        Ok(v)
    }

    /// Removes the leftmost cell of `row`; the inner shape grows by it.
    pub(crate) fn pop_inner(&mut self, row: u32) -> Result<V> {
        let (outer, mut inner) = self.shape.clone().into_parts();
        if self.row(row).is_empty() {
            return Err(Error::InvalidTableau(format!("row {row} has no skew cells")));
        }
        inner.add_cell(row)?;
        self.shape = SkewShape::new(outer, inner)?;
        Ok(self.rows[row as usize - 1].remove(0))
    }

    /// Prepends `value` in the cell left of the first cell of `row`; the
    /// inner shape shrinks by that cell.
    pub(crate) fn push_inner(&mut self, row: u32, value: V) -> Result<Cell> {
        let (outer, mut inner) = self.shape.clone().into_parts();
        let col = inner.row(row);
        inner.remove_cell(row)?;
        self.shape = SkewShape::new(outer, inner)?;
        self.rows[row as usize - 1].insert(0, value);
        Ok(Cell::new(row, col))
    }
}

impl Tableau<u32> {
    /// True iff the entries are exactly `1..=♯T`.
    pub fn is_standard(&self) -> bool {
        self.values().iter().enumerate().all(|(i, &v)| v as usize == i + 1)
    }

    /// Relabels each entry by its rank among all entries.
    pub fn standardize(&self) -> Tableau<u32> {
        let values = self.values();
        self.map(|v| values.binary_search(v).expect("entry present") as u32 + 1)
    }

    /// True iff every entry `e` at `(r, c)` has `e` odd exactly when
    /// `(r − 1) + (c − 1)` is even, measuring from position `(1,1)` of the
    /// outer shape.
    pub fn is_chess(&self) -> bool {
        self.entries().iter().all(|(cell, e)| (e % 2 == 1) == ((cell.row + cell.col) % 2 == 0))
    }

    pub fn ghosted(&self) -> Tableau<GhostedValue> {
        self.map(|&v| GhostedValue::Num(v))
    }
}

#[derive(Serialize, Deserialize)]
struct TableauRepr<V> {
    outer: Partition,
    inner: Partition,
    entries: Vec<(u32, u32, V)>,
}

impl<V: Ord + Clone + Serialize> Serialize for Tableau<V> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        TableauRepr {
            outer: self.shape.outer().clone(),
            inner: self.shape.inner().clone(),
            entries: self.entries().into_iter().map(|(c, v)| (c.row, c.col, v)).collect(),
        }
        .serialize(s)
    }
}

impl<'de, V: Ord + Clone + DeserializeOwned> Deserialize<'de> for Tableau<V> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = TableauRepr::<V>::deserialize(d)?;
        let shape = SkewShape::new(repr.outer, repr.inner).map_err(serde::de::Error::custom)?;
        let mut entries = Vec::with_capacity(repr.entries.len());
        for (row, col, v) in repr.entries {
            if row == 0 || col == 0 {
                return Err(serde::de::Error::custom("cells are 1-indexed"));
            }
            entries.push((Cell::new(row, col), v));
        }
        Tableau::from_entries(shape, entries).map_err(serde::de::Error::custom)
    }
}

impl<V: fmt::Display> fmt::Display for Tableau<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().enumerate() {
            let lo = self.shape.inner().row(i as u32 + 1);
            for _ in 0..lo {
                write!(f, " .")?;
            }
            for v in row {
                write!(f, " {v}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

pub fn reading_word<V: Ord + Clone>(t: &Tableau<V>) -> Vec<V> {
    t.reading_word()
}

pub fn tableau_sign<V: Ord + Clone>(t: &Tableau<V>) -> Sign {
    t.sign()
}

pub fn tableau_invsign<V: Ord + Clone>(t: &Tableau<V>) -> Sign {
    t.invsign()
}

pub fn standardize(t: &Tableau<u32>) -> Tableau<u32> {
    t.standardize()
}

pub fn is_chess(t: &Tableau<u32>) -> bool {
    t.is_chess()
}

/// Cells that can receive the next value given how many cells of each row
/// are already filled. Returned in row-major order as `(row index, column)`.
fn addable<'a>(shape: &'a SkewShape, filled: &'a [u32]) -> impl Iterator<Item = (usize, u32)> + 'a {
    (1..=shape.num_rows()).filter_map(move |r| {
        let i = r as usize - 1;
        let (lo, hi) = shape.row_span(r);
        let col = lo + filled[i] + 1;
        if col > hi {
            return None;
        }
        if r >= 2 {
            let above_done = shape.inner().row(r - 1) + filled[i - 1];
            if col > above_done {
                return None;
            }
        }
        Some((i, col))
    })
}

/// Every standard tableau of `shape`, in the order produced by placing
/// `1, 2, …` at addable cells tried in row-major order.
pub fn enumerate_standard_tableaux(shape: &SkewShape) -> Vec<Tableau<u32>> {
    fn go(
        shape: &SkewShape,
        next: u32,
        total: u32,
        rows: &mut Vec<Vec<u32>>,
        filled: &mut Vec<u32>,
        out: &mut Vec<Tableau<u32>>,
    ) {
        if next > total {
            out.push(Tableau { shape: shape.clone(), rows: rows.clone() });
            return;
        }
        let slots: Vec<(usize, u32)> = addable(shape, filled).collect();
        for (i, _) in slots {
            rows[i].push(next);
            filled[i] += 1;
            go(shape, next + 1, total, rows, filled, out);
            filled[i] -= 1;
            rows[i].pop();
        }
    }
    let rows_n = shape.num_rows() as usize;
    let mut out = Vec::new();
    go(shape, 1, shape.size(), &mut vec![Vec::new(); rows_n], &mut vec![0; rows_n], &mut out);
    out
}

/// `f_{λ/μ}`: the number of standard tableaux, by memoized removal of outer
/// corners.
pub fn count_standard_tableaux(shape: &SkewShape) -> u128 {
    fn go(outer: &mut Vec<u32>, inner: &Partition, memo: &mut HashMap<Vec<u32>, u128>) -> u128 {
        if outer.iter().enumerate().all(|(i, &p)| p == inner.row(i as u32 + 1)) {
            return 1;
        }
        if let Some(&c) = memo.get(outer.as_slice()) {
            return c;
        }
        let mut total: u128 = 0;
        for i in 0..outer.len() {
            let next = outer.get(i + 1).copied().unwrap_or(0);
            if outer[i] > next && outer[i] > inner.row(i as u32 + 1) {
                outer[i] -= 1;
                let sub = go(outer, inner, memo);
                outer[i] += 1;
                total = total.checked_add(sub).expect("f-count overflow");
            }
        }
        memo.insert(outer.clone(), total);
        total
    }
    let mut outer = shape.outer().parts().to_vec();
    go(&mut outer, shape.inner(), &mut HashMap::new())
}

/// `I_{λ/μ}`: the sum of the signs of all standard tableaux.
///
/// Placing the value `k` in row `r` creates one inversion with every entry
/// already placed in a later row, so the sign can be accumulated over the
/// same fill states the enumeration walks, memoized on the fill vector.
pub fn imbalance(shape: &SkewShape) -> i128 {
    fn go(shape: &SkewShape, filled: &mut Vec<u32>, memo: &mut HashMap<Vec<u32>, i128>) -> i128 {
        if filled.iter().enumerate().all(|(i, &f)| {
            let (lo, hi) = shape.row_span(i as u32 + 1);
            f == hi - lo
        }) {
            return 1;
        }
        if let Some(&s) = memo.get(filled.as_slice()) {
            return s;
        }
        let slots: Vec<(usize, u32)> = addable(shape, filled).collect();
        let mut total: i128 = 0;
        for (i, _) in slots {
            let later: u32 = filled[i + 1..].iter().sum();
            filled[i] += 1;
            let sub = go(shape, filled, memo);
            filled[i] -= 1;
            let signed = if later.is_multiple_of(2) { sub } else { -sub };
            total = total.checked_add(signed).expect("imbalance overflow");
        }
        memo.insert(filled.clone(), total);
        total
    }
    let rows_n = shape.num_rows() as usize;
    go(shape, &mut vec![0; rows_n], &mut HashMap::new())
}

/// `(#positive, #negative)` standard tableaux of `shape`.
pub fn sign_distribution(shape: &SkewShape) -> (u128, u128) {
    let f = count_standard_tableaux(shape) as i128;
    let i = imbalance(shape);
    (((f + i) / 2) as u128, ((f - i) / 2) as u128)
}
