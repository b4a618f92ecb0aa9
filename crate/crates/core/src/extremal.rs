//! The four extremal-filling constructions and the bijections between them.
//!
//! Fixing the multiset of entries in each row, there is exactly one filling
//! with maximal inv, one with maximal quinv (these require the rows to be
//! sets), one with inv = 0, and one with quinv = 0. Each is produced by a
//! greedy rule:
//!
//! * inv-max: row 1 strictly decreasing; below, the largest unused entry
//!   ≤ the cell above, else the largest unused;
//! * quinv-max: bottom row strictly increasing; above, the smallest unused
//!   entry ≥ the cell below, else the smallest unused (cells with no cell
//!   below take the smallest unused);
//! * inv-zero: row 1 weakly increasing; below, the smallest unused entry
//!   > the cell above, else the smallest unused;
//! * quinv-zero: bottom row non-increasing; above, the largest unused
//!   entry < the cell below, else the largest unused (cells with no cell
//!   below take the largest unused).
//!
//! The four rules are written out separately rather than parameterized, so
//! each can be read against its characterization. Mapping an inv-max
//! filling to the quinv-max filling on the same row sets (and inv-zero to
//! quinv-zero on the same row multisets) preserves maj; both maps equal
//! charge/cocharge of the corresponding reading word on their domains.

use std::collections::BTreeSet;
use std::fmt;

use crate::filling::Filling;
use crate::shape::Partition;
use crate::{Error, Result};

/// One set of entries per row; sizes must match the shape when built.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RowSets {
    sets: Vec<Vec<u32>>,
}

/// One multiset of entries per row.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RowMultisets {
    multisets: Vec<Vec<u32>>,
}

impl RowSets {
    /// Validates distinctness within each row; stores each set sorted.
    pub fn new(sets: Vec<Vec<u32>>) -> Result<Self> {
        let mut out = Vec::with_capacity(sets.len());
        for (i, set) in sets.into_iter().enumerate() {
            if set.contains(&0) {
                return Err(Error::EntryNotPositive { row: i + 1 });
            }
            let mut sorted = set.clone();
            sorted.sort_unstable();
            if sorted.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::NotASet {
                    row: i + 1,
                    expected: set.len(),
                    got: set,
                });
            }
            out.push(sorted);
        }
        Ok(RowSets { sets: out })
    }

    /// The row value-sets of a filling; errors if some row repeats a value.
    pub fn from_filling(f: &Filling) -> Result<Self> {
        RowSets::new(f.rows().to_vec())
    }

    pub fn sets(&self) -> &[Vec<u32>] {
        &self.sets
    }
}

impl RowMultisets {
    pub fn new(multisets: Vec<Vec<u32>>) -> Result<Self> {
        let mut out = Vec::with_capacity(multisets.len());
        for (i, multiset) in multisets.into_iter().enumerate() {
            if multiset.contains(&0) {
                return Err(Error::EntryNotPositive { row: i + 1 });
            }
            let mut sorted = multiset;
            sorted.sort_unstable();
            out.push(sorted);
        }
        Ok(RowMultisets { multisets: out })
    }

    pub fn from_filling(f: &Filling) -> Self {
        RowMultisets {
            multisets: f.row_multisets(),
        }
    }

    pub fn multisets(&self) -> &[Vec<u32>] {
        &self.multisets
    }
}

fn check_sizes(shape: &Partition, rows: &[Vec<u32>]) -> Result<()> {
    if rows.len() != shape.num_rows() {
        return Err(Error::FamilyRowCount {
            got: rows.len(),
            expected: shape.num_rows(),
        });
    }
    for (i, row) in rows.iter().enumerate() {
        if row.len() != shape.row_len(i + 1) {
            return Err(Error::FamilySizeMismatch {
                row: i + 1,
                got: row.len(),
                expected: shape.row_len(i + 1),
            });
        }
    }
    Ok(())
}

/// Pool of not-yet-placed entries of one row, kept sorted ascending.
struct Pool(Vec<u32>);

impl Pool {
    fn new(sorted: &[u32]) -> Self {
        Pool(sorted.to_vec())
    }

    fn take_at(&mut self, idx: usize) -> u32 {
        self.0.remove(idx)
    }

    fn take_largest(&mut self) -> u32 {
        self.0.pop().expect("pool sized to the row")
    }

    fn take_smallest(&mut self) -> u32 {
        self.take_at(0)
    }

    // partition_point(|v| v <= bound) is the count of elements ≤ bound
    fn take_largest_le(&mut self, bound: u32) -> Option<u32> {
        match self.0.partition_point(|&v| v <= bound) {
            0 => None,
            k => Some(self.take_at(k - 1)),
        }
    }

    fn take_largest_lt(&mut self, bound: u32) -> Option<u32> {
        match self.0.partition_point(|&v| v < bound) {
            0 => None,
            k => Some(self.take_at(k - 1)),
        }
    }

    fn take_smallest_ge(&mut self, bound: u32) -> Option<u32> {
        let k = self.0.partition_point(|&v| v < bound);
        (k < self.0.len()).then(|| self.take_at(k))
    }

    fn take_smallest_gt(&mut self, bound: u32) -> Option<u32> {
        let k = self.0.partition_point(|&v| v <= bound);
        (k < self.0.len()).then(|| self.take_at(k))
    }
}

/// The unique inv-maximal filling with the given row sets.
pub fn build_inv_max(shape: &Partition, family: &RowSets) -> Result<Filling> {
    check_sizes(shape, family.sets())?;
    let mut rows: Vec<Vec<u32>> = Vec::with_capacity(shape.num_rows());
    for (i, set) in family.sets().iter().enumerate() {
        let mut pool = Pool::new(set);
        let row = if i == 0 {
            set.iter().rev().copied().collect()
        } else {
            rows[i - 1][..set.len()]
                .iter()
                .map(|&above| {
                    pool.take_largest_le(above)
                        .unwrap_or_else(|| pool.take_largest())
                })
                .collect()
        };
        rows.push(row);
    }
    Filling::new(shape.clone(), rows)
}

/// The unique quinv-maximal filling with the given row sets.
pub fn build_quinv_max(shape: &Partition, family: &RowSets) -> Result<Filling> {
    check_sizes(shape, family.sets())?;
    let n = shape.num_rows();
    let mut rows: Vec<Vec<u32>> = vec![Vec::new(); n];
    for i in (0..n).rev() {
        let set = &family.sets()[i];
        let mut pool = Pool::new(set);
        let mut row = Vec::with_capacity(set.len());
        for j in 0..set.len() {
            let below = (i + 1 < n && j < rows[i + 1].len()).then(|| rows[i + 1][j]);
            let entry = match below {
                Some(b) => pool
                    .take_smallest_ge(b)
                    .unwrap_or_else(|| pool.take_smallest()),
                None => pool.take_smallest(),
            };
            row.push(entry);
        }
        rows[i] = row;
    }
    Filling::new(shape.clone(), rows)
}

/// The unique inv-zero filling with the given row multisets.
pub fn build_inv_zero(shape: &Partition, family: &RowMultisets) -> Result<Filling> {
    check_sizes(shape, family.multisets())?;
    let mut rows: Vec<Vec<u32>> = Vec::with_capacity(shape.num_rows());
    for (i, multiset) in family.multisets().iter().enumerate() {
        let mut pool = Pool::new(multiset);
        let row = if i == 0 {
            multiset.clone()
        } else {
            rows[i - 1][..multiset.len()]
                .iter()
                .map(|&above| {
                    pool.take_smallest_gt(above)
                        .unwrap_or_else(|| pool.take_smallest())
                })
                .collect()
        };
        rows.push(row);
    }
    Filling::new(shape.clone(), rows)
}

/// The unique quinv-zero filling with the given row multisets.
pub fn build_quinv_zero(shape: &Partition, family: &RowMultisets) -> Result<Filling> {
    check_sizes(shape, family.multisets())?;
    let n = shape.num_rows();
    let mut rows: Vec<Vec<u32>> = vec![Vec::new(); n];
    for i in (0..n).rev() {
        let multiset = &family.multisets()[i];
        let mut pool = Pool::new(multiset);
        let mut row = Vec::with_capacity(multiset.len());
        for j in 0..multiset.len() {
            let below = (i + 1 < n && j < rows[i + 1].len()).then(|| rows[i + 1][j]);
            let entry = match below {
                Some(b) => pool
                    .take_largest_lt(b)
                    .unwrap_or_else(|| pool.take_largest()),
                None => pool.take_largest(),
            };
            row.push(entry);
        }
        rows[i] = row;
    }
    Filling::new(shape.clone(), rows)
}

/// Maps an inv-maximal filling to the quinv-maximal filling with the same
/// row sets. The precondition is recomputed, never trusted.
pub fn phi(f: &Filling) -> Result<Filling> {
    let expected = f.shape().conjugate().n_stat();
    let inv = f.inv();
    if inv != expected {
        return Err(Error::NotInvMaximal { inv, expected });
    }
    build_quinv_max(f.shape(), &RowSets::from_filling(f)?)
}

/// Maps an inv-zero filling to the quinv-zero filling with the same row
/// multisets.
pub fn varphi(f: &Filling) -> Result<Filling> {
    let inv = f.inv();
    if inv != 0 {
        return Err(Error::NotInvZero { inv });
    }
    build_quinv_zero(f.shape(), &RowMultisets::from_filling(f))
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum ExtremalClass {
    InvMax,
    QuinvMax,
    InvZero,
    QuinvZero,
}

impl fmt::Display for ExtremalClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            ExtremalClass::InvMax => "inv-max",
            ExtremalClass::QuinvMax => "quinv-max",
            ExtremalClass::InvZero => "inv-zero",
            ExtremalClass::QuinvZero => "quinv-zero",
        };
        write!(f, "{name}")
    }
}

/// The extremal classes a filling belongs to; single columns land in all
/// four.
pub fn classify(f: &Filling) -> BTreeSet<ExtremalClass> {
    let max = f.shape().conjugate().n_stat();
    let inv = f.inv();
    let quinv = f.quinv();
    let mut out = BTreeSet::new();
    if inv == max {
        out.insert(ExtremalClass::InvMax);
    }
    if quinv == max {
        out.insert(ExtremalClass::QuinvMax);
    }
    if inv == 0 {
        out.insert(ExtremalClass::InvZero);
    }
    if quinv == 0 {
        out.insert(ExtremalClass::QuinvZero);
    }
    out
}
