//! The skew Robinson–Schensted correspondence
//! `(π, T, U) ↔ (P, Q)`.
//!
//! The forward map starts from `P = T` and `Q = U·ε` (every entry of `U`
//! demoted to the ε-tier) and processes `k = 1, …, n`:
//!
//! - if `k` is a top entry of `π`, its bottom partner is row-inserted into
//!   `P` from row 1 (an *external* insertion);
//! - otherwise `k` is an entry of `U`. The ε-entry `kε` is then the minimum
//!   of `Q` and sits at an inner corner `(r, c₀)`. That cell leaves the skew
//!   shape (the inner shape grows), and the `P`-value it held is row-inserted
//!   from row `r + 1` (an *internal* insertion).
//!
//! Either way one outer cell is created and `Q` records `k` there. Every step
//! is traced, and the sign ledger relating `sgn P`, `sgn Q` and `rsgn Q`
//! before and after the step can be asserted as it runs.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::shapes::{self, Cell, Partition, SkewShape};
use crate::sign::Sign;
use crate::tableaux::{self, GhostedValue, Tableau};
use crate::words::{self, Biword, PartialPermutation, Permutation};

/// An element of the domain: `π ∈ PS_n` and partial tableaux `T, U` of a
/// common shape `α/μ` with `π̌ ⊎ T = π̂ ⊎ U = [n]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Triple {
    pub pi: PartialPermutation,
    pub t: Tableau<u32>,
    pub u: Tableau<u32>,
    pub n: u32,
    pub alpha: Partition,
}

#[derive(Deserialize)]
struct TripleRepr {
    pi: Biword,
    t: Tableau<u32>,
    u: Tableau<u32>,
    n: u32,
    alpha: Partition,
}

impl<'de> Deserialize<'de> for Triple {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = TripleRepr::deserialize(d)?;
        let pi = PartialPermutation::new(r.pi, r.n).map_err(serde::de::Error::custom)?;
        Triple::new(pi, r.t, r.u, r.alpha).map_err(serde::de::Error::custom)
    }
}

impl Triple {
    /// Validates the domain conditions.
    pub fn new(pi: PartialPermutation, t: Tableau<u32>, u: Tableau<u32>, alpha: Partition) -> Result<Triple> {
        let n = pi.n();
        if t.shape() != u.shape() {
            return Err(Error::Precondition(format!(
                "T has shape {} but U has shape {}",
                t.shape(),
                u.shape()
            )));
        }
        if t.shape().outer() != &alpha {
            return Err(Error::Precondition(format!(
                "tableaux have outer shape {}, expected α = {alpha}",
                t.shape().outer()
            )));
        }
        check_disjoint_union(pi.bottom(), &t.values(), n, "bottom line of π and entries of T")?;
        check_disjoint_union(pi.top(), &u.values(), n, "top line of π and entries of U")?;
        Ok(Triple { pi, t, u, n, alpha })
    }

    /// The inner shape `μ` of `T` and `U`.
    pub fn mu(&self) -> &Partition {
        self.t.shape().inner()
    }
}

fn check_disjoint_union(line: &[u32], entries: &[u32], n: u32, what: &str) -> Result<()> {
    let mut all: Vec<u32> = line.iter().chain(entries).copied().collect();
    all.sort_unstable();
    if all.iter().copied().eq(1..=n) {
        Ok(())
    } else {
        Err(Error::Precondition(format!("{what} do not partition 1..={n}")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum StepKind {
    External,
    Internal,
}

/// One insertion, with everything the sign ledger needs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InsertionStep {
    pub kind: StepKind,
    /// The step number `k` recorded in `Q`.
    pub step: u32,
    /// The value that starts the bumping chain (`a₁`).
    pub inserted: u32,
    /// Cells whose entries were displaced, top to bottom. For an internal
    /// insertion this starts with the source cell `(r, c₀)`.
    pub bumping_path: Vec<Cell>,
    pub new_cell: Cell,
    /// The inner corner that left the skew shape (internal only).
    pub removed_cell: Option<Cell>,
    /// Entries of `P` smaller than `a₁` before the step (external only).
    pub m: Option<u32>,
    /// `♯Q` before the step.
    pub q_size_before: u32,
    pub sign_p_before: Sign,
    pub sign_p_after: Sign,
    pub sign_q_before: Sign,
    pub sign_q_after: Sign,
    pub rsgn_q_before: Sign,
    pub rsgn_q_after: Sign,
}

impl InsertionStep {
    /// `sgn P'/sgn P = (sgn Q'/sgn Q)(rsgn Q'/rsgn Q)(−1)^{♯Q}(−1)^m`, with
    /// the `(−1)^m` factor only for external insertions.
    pub fn ledger_holds(&self) -> bool {
        let lhs = self.sign_p_before * self.sign_p_after;
        let mut rhs = self.sign_q_before
            * self.sign_q_after
            * self.rsgn_q_before
            * self.rsgn_q_after
            * Sign::from_parity(u64::from(self.q_size_before));
        if let Some(m) = self.m {
            rhs *= Sign::from_parity(u64::from(m));
        }
        lhs == rhs
    }

    /// Rows of the path (and new cell) are consecutive and columns weakly
    /// decrease.
    pub fn path_is_well_formed(&self) -> bool {
        let cells: Vec<Cell> = self.bumping_path.iter().copied().chain([self.new_cell]).collect();
        let first_row_ok = match self.kind {
            StepKind::External => cells[0].row == 1,
            StepKind::Internal => Some(cells[0]) == self.removed_cell,
        };
        first_row_ok
            && cells.windows(2).all(|w| w[1].row == w[0].row + 1 && w[1].col <= w[0].col)
    }
}

/// The pair of tableaux during the forward map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InsertionState {
    p: Tableau<u32>,
    q: Tableau<GhostedValue>,
    alpha: Partition,
    step: u32,
    check: bool,
}

impl InsertionState {
    /// `P₀ = T`, `Q₀ = U·ε`.
    pub fn new(t: &Tableau<u32>, u: &Tableau<u32>) -> Result<InsertionState> {
        if t.shape() != u.shape() {
            return Err(Error::Precondition("T and U must share a shape".into()));
        }
        Ok(InsertionState {
            p: t.clone(),
            q: u.map(|&b| GhostedValue::Eps(b)),
            alpha: t.shape().outer().clone(),
            step: 0,
            check: true,
        })
    }

    /// Turns per-step tableau validity and sign-ledger assertions on or off.
    pub fn with_checks(mut self, on: bool) -> InsertionState {
        self.check = on;
        self
    }

    pub fn p(&self) -> &Tableau<u32> {
        &self.p
    }

    /// The adjusted `Q`-tableau, including unconsumed ε-entries.
    pub fn q(&self) -> &Tableau<GhostedValue> {
        &self.q
    }

    pub fn alpha(&self) -> &Partition {
        &self.alpha
    }

    pub fn step(&self) -> u32 {
        self.step
    }

    /// The unadjusted `Q`: only the recorded step numbers, without ε-entries.
    pub fn plain_q(&self) -> Vec<(Cell, u32)> {
        self.q
            .entries()
            .into_iter()
            .filter_map(|(c, v)| match v {
                GhostedValue::Num(k) => Some((c, k)),
                GhostedValue::Eps(_) => None,
            })
            .collect()
    }

    fn check_step_number(&self, k: u32) -> Result<()> {
        let max_plain = self.q.reading_word().into_iter().filter(|v| !v.is_eps()).max();
        if let Some(GhostedValue::Num(top)) = max_plain {
            if k <= top {
                return Err(Error::Precondition(format!(
                    "step {k} is not larger than recorded step {top}"
                )));
            }
        }
        Ok(())
    }

    /// Row-inserts `x` into `P` from `row` downward and records `k` in `Q`
    /// at the new cell.
    fn bump_down(&mut self, mut row: u32, mut x: u32, k: u32, path: &mut Vec<Cell>) -> Result<Cell> {
        loop {
            let lo = self.p.shape().inner().row(row);
            match self.p.row(row).iter().position(|&y| y > x) {
                Some(i) => {
                    let cell = Cell::new(row, lo + 1 + i as u32);
                    x = self.p.set(cell, x);
                    path.push(cell);
                    row += 1;
                }
                None => {
                    let cell = self.p.push_outer(row, x)?;
                    let qcell = self.q.push_outer(row, GhostedValue::Num(k))?;
                    debug_assert_eq!(cell, qcell);
                    return Ok(cell);
                }
            }
        }
    }

    fn snapshot(&self) -> (Sign, Sign, Sign, u32) {
        (self.p.sign(), self.q.sign(), self.q.shape().rsgn(), self.q.len() as u32)
    }

    fn finish(&mut self, step: InsertionStep) -> Result<InsertionStep> {
        self.step += 1;
        if self.check {
            self.p.validate()?;
            self.q.validate()?;
            if !step.path_is_well_formed() {
                return Err(Error::LedgerViolation(format!(
                    "step {}: malformed bumping path {:?} -> {}",
                    step.step, step.bumping_path, step.new_cell
                )));
            }
            if !step.ledger_holds() {
                return Err(Error::LedgerViolation(format!(
                    "step {} ({:?}): sign ratio mismatch",
                    step.step, step.kind
                )));
            }
        }
        Ok(step)
    }

    /// External insertion of `j` with step number `k`.
    pub fn external_insert(&mut self, j: u32, k: u32) -> Result<InsertionStep> {
        if self.p.reading_word().contains(&j) {
            return Err(Error::Precondition(format!("{j} is already an entry of P")));
        }
        self.check_step_number(k)?;
        let (sp, sq, rq, q_size) = self.snapshot();
        let m = self.p.reading_word().iter().filter(|&&y| y < j).count() as u32;
        let mut path = Vec::new();
        let new_cell = self.bump_down(1, j, k, &mut path)?;
        let (sp2, sq2, rq2, _) = self.snapshot();
        self.finish(InsertionStep {
            kind: StepKind::External,
            step: k,
            inserted: j,
            bumping_path: path,
            new_cell,
            removed_cell: None,
            m: Some(m),
            q_size_before: q_size,
            sign_p_before: sp,
            sign_p_after: sp2,
            sign_q_before: sq,
            sign_q_after: sq2,
            rsgn_q_before: rq,
            rsgn_q_after: rq2,
        })
    }

    /// Internal insertion with step number `k`, launched from the cell of the
    /// minimal (ε-tier) entry of `Q`.
    pub fn internal_insert(&mut self, k: u32) -> Result<InsertionStep> {
        self.check_step_number(k)?;
        let (cell, min) = self
            .q
            .entries()
            .into_iter()
            .min_by_key(|(_, v)| *v)
            .ok_or_else(|| Error::Precondition("Q has no ε-entries".into()))?;
        if !min.is_eps() {
            return Err(Error::Precondition("Q has no ε-entries".into()));
        }
        let (sp, sq, rq, q_size) = self.snapshot();
        let inner = self.q.shape().inner();
        if cell.col != inner.row(cell.row) + 1 || (cell.row > 1 && inner.row(cell.row - 1) < cell.col) {
            return Err(Error::InvalidTableau(format!("minimal ε-entry at {cell} is not at an inner corner")));
        }
        let a1 = self.p.pop_inner(cell.row)?;
        self.q.pop_inner(cell.row)?;
        let mut path = vec![cell];
        let new_cell = self.bump_down(cell.row + 1, a1, k, &mut path)?;
        let (sp2, sq2, rq2, _) = self.snapshot();
        self.finish(InsertionStep {
            kind: StepKind::Internal,
            step: k,
            inserted: a1,
            bumping_path: path,
            new_cell,
            removed_cell: Some(cell),
            m: None,
            q_size_before: q_size,
            sign_p_before: sp,
            sign_p_after: sp2,
            sign_q_before: sq,
            sign_q_after: sq2,
            rsgn_q_before: rq,
            rsgn_q_after: rq2,
        })
    }
}

/// Result of the forward map.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ForwardOutput {
    pub p: Tableau<u32>,
    pub q: Tableau<u32>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub trace: Vec<InsertionStep>,
}

/// `(π, T, U) ↦ (P, Q)`. With `check` on, every intermediate pair is
/// validated and the per-step sign ledger is asserted.
pub fn forward(triple: &Triple, check: bool) -> Result<ForwardOutput> {
    let mut state = InsertionState::new(&triple.t, &triple.u)?.with_checks(check);
    let mut trace = Vec::with_capacity(triple.n as usize);
    for k in 1..=triple.n {
        let step = match triple.pi.word().image(k) {
            Some(j) => state.external_insert(j, k)?,
            None => {
                let step = state.internal_insert(k)?;
                let source = step.removed_cell.expect("internal step has a source");
                if triple.u.get(source) != Some(&k) {
                    return Err(Error::InvalidTableau(format!(
                        "internal insertion for step {k} fired from {source}, not from the cell of {k} in U"
                    )));
                }
                step
            }
        };
        trace.push(step);
    }
    let q = state.q.map(|v| v.value());
    if state.q.reading_word().iter().any(|v| v.is_eps()) {
        return Err(Error::InvalidTableau("unconsumed ε-entries remain in Q".into()));
    }
    Ok(ForwardOutput { p: state.p, q, trace })
}

/// `(P, Q) ↦ (π, T, U)`, undoing the forward steps from `k = n` down to 1.
///
/// The value freed at `k`'s cell travels upward: entering row `r` it swaps
/// with the rightmost entry smaller than itself. Leaving row 1 undoes an
/// external insertion. Finding nothing smaller in row `r` undoes an internal
/// insertion: the value settles in a new cell at the left end of row `r` and
/// `U` records `k` there.
pub fn reverse(p: &Tableau<u32>, q: &Tableau<u32>) -> Result<Triple> {
    if p.shape() != q.shape() {
        return Err(Error::Precondition("P and Q must share a shape".into()));
    }
    if !p.is_standard() || !q.is_standard() {
        return Err(Error::Precondition("P and Q must be standard".into()));
    }
    let n = p.len() as u32;
    let alpha = p.shape().inner().clone();
    let mut p = p.clone();
    let mut q = q.map(|&v| GhostedValue::Num(v));
    let mut pairs: Vec<(u32, u32)> = Vec::new();
    for k in (1..=n).rev() {
        let cell = q.cell_of(&GhostedValue::Num(k)).expect("standard Q contains k");
        if q.pop_outer(cell.row)? != GhostedValue::Num(k) {
            return Err(Error::InvalidTableau(format!("{k} is not at the end of row {}", cell.row)));
        }
        let mut x = p.pop_outer(cell.row)?;
        let mut row = cell.row - 1;
        loop {
            if row == 0 {
                pairs.push((k, x));
                break;
            }
            let lo = p.shape().inner().row(row);
            match p.row(row).iter().rposition(|&y| y < x) {
                Some(i) => {
                    x = p.set(Cell::new(row, lo + 1 + i as u32), x);
                    row -= 1;
                }
                None => {
                    let placed = p.push_inner(row, x)?;
                    q.push_inner(row, GhostedValue::Eps(k))?;
                    debug_assert_eq!(placed.row, row);
                    break;
                }
            }
        }
    }
    pairs.reverse();
    let (top, bottom) = pairs.into_iter().unzip();
    let pi = PartialPermutation::from_lines(top, bottom, n)?;
    let u = q.map(|v| v.value());
    Triple::new(pi, p, u, alpha)
}

/// Theorem-level sign relation for one correspondence instance:
/// `(−1)^{v(λ)} sgn P sgn Q = (−1)^{|α|} (−1)^{v(μ)+|μ|} sgn T sgn U sgn π̄`.
pub fn sign_relation_holds(triple: &Triple, p: &Tableau<u32>, q: &Tableau<u32>) -> bool {
    let lambda = p.shape().outer();
    let mu = triple.mu();
    let lhs = Sign::from_parity(u64::from(shapes::v(lambda))) * p.sign() * q.sign();
    let rhs = Sign::from_parity(u64::from(triple.alpha.size()))
        * Sign::from_parity(u64::from(shapes::v(mu) + mu.size()))
        * triple.t.sign()
        * triple.u.sign()
        * triple.pi.complete().sign();
    lhs == rhs
}

/// The standard-tableau form of a triple: `(π̃, Ĩ, T̃, Ũ)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Quadruple {
    pub perm: Permutation,
    pub indexset: Vec<u32>,
    pub tstd: Tableau<u32>,
    pub ustd: Tableau<u32>,
}

pub fn lemma6_forward(triple: &Triple) -> Quadruple {
    Quadruple {
        perm: triple.pi.complete(),
        indexset: triple.u.values(),
        tstd: triple.t.standardize(),
        ustd: triple.u.standardize(),
    }
}

pub fn lemma6_backward(quad: &Quadruple) -> Result<Triple> {
    let perm = &quad.perm;
    let n = perm.n();
    let mut idx = quad.indexset.clone();
    idx.sort_unstable();
    if idx.windows(2).any(|w| w[0] == w[1]) || idx.iter().any(|&i| i == 0 || i > n) {
        return Err(Error::Precondition("index set must be distinct positions in 1..=n".into()));
    }
    if !perm.is_increasing_at(&idx) {
        return Err(Error::Precondition(format!("{perm} is not increasing at {idx:?}")));
    }
    if quad.tstd.shape() != quad.ustd.shape() {
        return Err(Error::Precondition("T̃ and Ũ must share a shape".into()));
    }
    if !quad.tstd.is_standard() || !quad.ustd.is_standard() || quad.tstd.len() != idx.len() {
        return Err(Error::Precondition(format!(
            "T̃ and Ũ must be standard with {} entries",
            idx.len()
        )));
    }
    let (top, bottom) = (1..=n).filter(|i| idx.binary_search(i).is_err()).map(|i| (i, perm.at(i))).unzip();
    let pi = PartialPermutation::from_lines(top, bottom, n)?;
    let u = quad.ustd.map(|&j| idx[j as usize - 1]);
    let t = quad.tstd.map(|&j| perm.at(idx[j as usize - 1]));
    let alpha = quad.tstd.shape().outer().clone();
    Triple::new(pi, t, u, alpha)
}

/// Every triple of the domain for `(α, n)`, generated through quadruples:
/// for each `μ ⊆ α` with `k = |α/μ| ≤ n`, each pair of standard tableaux of
/// `α/μ`, each `k`-subset of positions and of values, and each arrangement
/// of the remaining values.
pub fn enumerate_triples(alpha: &Partition, n: u32) -> Vec<Triple> {
    let mut out = Vec::new();
    for k in 0..=n.min(alpha.size()) {
        for mu in shapes::enumerate_inner_subshapes(alpha, k) {
            out.extend(enumerate_triples_for(alpha, &mu, n));
        }
    }
    out
}

/// Triples with `sh T = sh U = α/μ`.
pub fn enumerate_triples_for(alpha: &Partition, mu: &Partition, n: u32) -> Vec<Triple> {
    let shape = SkewShape::new(alpha.clone(), mu.clone()).expect("μ ⊆ α");
    let k = shape.size();
    if k > n {
        return Vec::new();
    }
    let tabs = tableaux::enumerate_standard_tableaux(&shape);
    let mut out = Vec::new();
    for positions in words::subsets(n, k) {
        for values in words::subsets(n, k) {
            let rest_pos: Vec<u32> = (1..=n).filter(|i| positions.binary_search(i).is_err()).collect();
            let rest_val: Vec<u32> = (1..=n).filter(|i| values.binary_search(i).is_err()).collect();
            for arrangement in words::enumerate_arrangements(&rest_val, rest_val.len()) {
                let mut images = vec![0; n as usize];
                for (&p, &v) in positions.iter().zip(&values) {
                    images[p as usize - 1] = v;
                }
                for (&p, &v) in rest_pos.iter().zip(&arrangement) {
                    images[p as usize - 1] = v;
                }
                let perm = Permutation::new(images).expect("bijection by construction");
                for tstd in &tabs {
                    for ustd in &tabs {
                        let quad = Quadruple {
                            perm: perm.clone(),
                            indexset: positions.clone(),
                            tstd: tstd.clone(),
                            ustd: ustd.clone(),
                        };
                        out.push(lemma6_backward(&quad).expect("valid quadruple by construction"));
                    }
                }
            }
        }
    }
    out
}

/// Every pair `(P, Q)` of standard tableaux of a common shape `λ/α` with
/// `n` cells.
pub fn enumerate_images(alpha: &Partition, n: u32) -> Vec<(Tableau<u32>, Tableau<u32>)> {
    let mut out = Vec::new();
    for lambda in shapes::enumerate_outer_extensions(alpha, n) {
        let shape = SkewShape::new(lambda, alpha.clone()).expect("α ⊆ λ");
        let tabs = tableaux::enumerate_standard_tableaux(&shape);
        for p in &tabs {
            for q in &tabs {
                out.push((p.clone(), q.clone()));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition;

    fn tab(outer: Partition, inner: Partition, rows: Vec<Vec<u32>>) -> Tableau<u32> {
        Tableau::from_rows(SkewShape::new(outer, inner).unwrap(), rows).unwrap()
    }

    fn triple(top: Vec<u32>, bottom: Vec<u32>, n: u32, t: Tableau<u32>, u: Tableau<u32>) -> Triple {
        let alpha = t.shape().outer().clone();
        Triple::new(PartialPermutation::from_lines(top, bottom, n).unwrap(), t, u, alpha).unwrap()
    }

    #[test]
    fn external_into_skew_empty_row() {
        let empty = Tableau::<u32>::empty(partition![1]);
        let mut st = InsertionState::new(&empty, &empty).unwrap();
        let step = st.external_insert(1, 1).unwrap();
        assert_eq!(step.new_cell, Cell::new(1, 2));
        assert!(step.bumping_path.is_empty());
        assert_eq!(step.m, Some(0));
        assert_eq!(st.p(), &tab(partition![2], partition![1], vec![vec![1]]));
        assert!(step.ledger_holds());
    }

    #[test]
    fn external_into_empty_shape() {
        let empty = Tableau::<u32>::empty(Partition::empty());
        let mut st = InsertionState::new(&empty, &empty).unwrap();
        assert_eq!(st.external_insert(1, 1).unwrap().new_cell, Cell::new(1, 1));
    }

    #[test]
    fn external_classical_bump() {
        // P = {(1,1): 2} with step 1 already recorded in Q
        let mut st = InsertionState {
            p: tab(partition![1], Partition::empty(), vec![vec![2]]),
            q: Tableau::from_rows(SkewShape::straight(partition![1]), vec![vec![GhostedValue::Num(1)]]).unwrap(),
            alpha: Partition::empty(),
            step: 1,
            check: true,
        };
        let step = st.external_insert(1, 2).unwrap();
        assert_eq!(step.bumping_path, vec![Cell::new(1, 1)]);
        assert_eq!(step.new_cell, Cell::new(2, 1));
        assert_eq!(st.p(), &tab(partition![1, 1], Partition::empty(), vec![vec![1], vec![2]]));
        assert!(st.external_insert(1, 3).is_err());
        assert!(st.external_insert(5, 2).is_err());
    }

    #[test]
    fn internal_single_cell() {
        let t = tab(partition![1], Partition::empty(), vec![vec![1]]);
        let mut st = InsertionState::new(&t, &t).unwrap();
        let step = st.internal_insert(1).unwrap();
        assert_eq!(step.removed_cell, Some(Cell::new(1, 1)));
        assert_eq!(step.new_cell, Cell::new(2, 1));
        assert_eq!(st.p(), &tab(partition![1, 1], partition![1], vec![vec![], vec![1]]));
        assert_eq!(st.plain_q(), vec![(Cell::new(2, 1), 1)]);
        assert!(st.internal_insert(2).is_err());
    }

    #[test]
    fn internal_from_row_with_two_cells() {
        let t = tab(partition![2], Partition::empty(), vec![vec![1, 3]]);
        let u = tab(partition![2], Partition::empty(), vec![vec![1, 2]]);
        let mut st = InsertionState::new(&t, &u).unwrap();
        let step = st.internal_insert(1).unwrap();
        assert_eq!(step.inserted, 1);
        assert_eq!(step.new_cell, Cell::new(2, 1));
        assert_eq!(st.p(), &tab(partition![2, 1], partition![1], vec![vec![3], vec![1]]));
        assert!(step.ledger_holds());
    }

    #[test]
    fn forward_examples() {
        let empty = Tableau::<u32>::empty(partition![1]);
        let tr = triple(vec![1], vec![1], 1, empty.clone(), empty);
        let out = forward(&tr, true).unwrap();
        let expect = tab(partition![2], partition![1], vec![vec![1]]);
        assert_eq!((&out.p, &out.q), (&expect, &expect));
        assert_eq!(reverse(&out.p, &out.q).unwrap(), tr);

        let t = tab(partition![1], Partition::empty(), vec![vec![1]]);
        let tr = triple(vec![], vec![], 1, t.clone(), t);
        let out = forward(&tr, true).unwrap();
        let expect = tab(partition![1, 1], partition![1], vec![vec![], vec![1]]);
        assert_eq!((&out.p, &out.q), (&expect, &expect));
        assert_eq!(reverse(&out.p, &out.q).unwrap(), tr);

        let e = Tableau::<u32>::empty(Partition::empty());
        let tr = triple(vec![1], vec![1], 1, e.clone(), e);
        let out = forward(&tr, true).unwrap();
        let expect = tab(partition![1], Partition::empty(), vec![vec![1]]);
        assert_eq!((&out.p, &out.q), (&expect, &expect));
        assert_eq!(reverse(&expect, &expect).unwrap(), tr);
    }

    #[test]
    fn reverse_rejects_mismatch() {
        let a = tab(partition![2], Partition::empty(), vec![vec![1, 2]]);
        let b = tab(partition![1, 1], Partition::empty(), vec![vec![1], vec![2]]);
        assert!(reverse(&a, &b).is_err());
        let c = tab(partition![2], Partition::empty(), vec![vec![1, 3]]);
        assert!(reverse(&a, &c).is_err());
    }

    #[test]
    fn triple_domain_checks() {
        let t = tab(partition![1], Partition::empty(), vec![vec![1]]);
        let pi = PartialPermutation::from_lines(vec![1], vec![1], 1).unwrap();
        // bottom line and T overlap
        assert!(Triple::new(pi, t.clone(), t.clone(), partition![1]).is_err());
        let pi = PartialPermutation::empty(1);
        assert!(Triple::new(pi.clone(), t.clone(), t.clone(), partition![2]).is_err());
        let other = tab(partition![1, 1], partition![1], vec![vec![], vec![1]]);
        assert!(Triple::new(pi, t, other, partition![1]).is_err());
    }

    #[test]
    fn lemma6_worked_example() {
        let t = tab(partition![2], Partition::empty(), vec![vec![1, 5]]);
        let u = tab(partition![2], Partition::empty(), vec![vec![3, 5]]);
        let tr = triple(vec![1, 2, 4], vec![4, 2, 3], 5, t, u);
        let quad = lemma6_forward(&tr);
        assert_eq!(quad.perm.images(), &[4, 2, 1, 3, 5]);
        assert_eq!(quad.indexset, vec![3, 5]);
        assert_eq!(quad.tstd.reading_word(), vec![1, 2]);
        assert_eq!(quad.ustd.reading_word(), vec![1, 2]);
        assert_eq!(lemma6_backward(&quad).unwrap(), tr);
    }

    #[test]
    fn lemma6_degenerate_cases() {
        let perm = Permutation::new(vec![2, 3, 1]).unwrap();
        let e = Tableau::<u32>::empty(partition![2]);
        let quad = Quadruple { perm: perm.clone(), indexset: vec![], tstd: e.clone(), ustd: e };
        let tr = lemma6_backward(&quad).unwrap();
        assert_eq!(tr.pi.top(), &[1, 2, 3]);
        assert_eq!(tr.pi.bottom(), &[2, 3, 1]);
        assert!(tr.t.is_empty() && tr.u.is_empty());

        let s = tab(partition![2, 1], Partition::empty(), vec![vec![1, 3], vec![2]]);
        let quad = Quadruple { perm: Permutation::identity(3), indexset: vec![1, 2, 3], tstd: s.clone(), ustd: s.clone() };
        let tr = lemma6_backward(&quad).unwrap();
        assert!(tr.pi.is_empty());
        assert_eq!((&tr.t, &tr.u), (&s, &s));

        let bad = Quadruple { perm, indexset: vec![2, 3], tstd: s.clone(), ustd: s };
        assert!(lemma6_backward(&bad).is_err());
    }
}
