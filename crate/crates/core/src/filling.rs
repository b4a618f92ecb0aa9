//! Fillings of Young diagrams and their statistics: content, descents,
//! maj, inv, and quinv.
//!
//! A triple of values `(x, y, z)` counts toward inv or quinv when it lies in
//!
//! ```text
//! { y < z < x,  x < y < z,  z < x < y,  or  x = y ≠ z }
//! ```
//!
//! For inv, `x` is a cell, `y` the cell directly above it (0 above row 1),
//! and `z` any cell strictly to the right of `x` in its row. For quinv, `y`
//! is a cell, `x` the cell directly below it (∞ when the column ends), and
//! `z` any cell strictly to the right of `y`. The sentinel rows are never
//! materialized; 0 compares below and ∞ above every entry.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::shape::{Cell, Partition};
use crate::{Error, Result};

/// An assignment of a positive integer to each cell of a Young diagram.
/// Rows are stored top to bottom (English convention).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "FillingRepr", into = "FillingRepr")]
pub struct Filling {
    shape: Partition,
    rows: Vec<Vec<u32>>,
}

#[derive(Serialize, Deserialize)]
struct FillingRepr {
    shape: Partition,
    rows: Vec<Vec<u32>>,
}

/// Letter multiplicities: `counts()[i]` is the number of occurrences of the
/// letter `i + 1`. Trailing zeros are stripped.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Content {
    counts: Vec<usize>,
}

impl Content {
    pub fn from_counts(mut counts: Vec<usize>) -> Self {
        while counts.last() == Some(&0) {
            counts.pop();
        }
        Content { counts }
    }

    pub fn tally(letters: impl IntoIterator<Item = u32>) -> Self {
        let mut counts: Vec<usize> = Vec::new();
        for letter in letters {
            assert!(letter >= 1, "letters are positive");
            let idx = letter as usize - 1;
            if idx >= counts.len() {
                counts.resize(idx + 1, 0);
            }
            counts[idx] += 1;
        }
        Content::from_counts(counts)
    }

    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    pub fn count_of(&self, letter: u32) -> usize {
        self.counts.get(letter as usize - 1).copied().unwrap_or(0)
    }

    pub fn total(&self) -> usize {
        self.counts.iter().sum()
    }

    /// Whether the multiplicities weakly decrease (letters with no
    /// occurrence may only appear past the last occurring letter).
    pub fn is_partition(&self) -> bool {
        self.counts.windows(2).all(|w| w[0] >= w[1])
    }
}

impl fmt::Display for Content {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.counts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

const INFINITY: u64 = u64::MAX;

/// The triple-value test shared by inv and quinv.
fn in_triple_set(x: u64, y: u64, z: u64) -> bool {
    (y < z && z < x) || (x < y && y < z) || (z < x && x < y) || (x == y && x != z)
}

impl Filling {
    pub fn new(shape: Partition, rows: Vec<Vec<u32>>) -> Result<Self> {
        let expected_rows = shape.num_rows();
        if rows.len() != expected_rows {
            return Err(Error::FillingRowCount {
                got: rows.len(),
                expected: expected_rows,
            });
        }
        for (i, row) in rows.iter().enumerate() {
            let expected = shape.row_len(i + 1);
            if row.len() != expected {
                return Err(Error::RowLengthMismatch {
                    row: i + 1,
                    got: row.len(),
                    expected,
                });
            }
            if row.contains(&0) {
                return Err(Error::EntryNotPositive { row: i + 1 });
            }
        }
        Ok(Filling { shape, rows })
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn value(&self, cell: Cell) -> Result<u32> {
        if !self.shape.contains(cell) {
            return Err(Error::CellOutOfShape {
                row: cell.row,
                col: cell.col,
                shape: self.shape.to_string(),
            });
        }
        Ok(self.rows[cell.row - 1][cell.col - 1])
    }

    fn at(&self, row: usize, col: usize) -> u32 {
        self.rows[row - 1][col - 1]
    }

    pub fn content(&self) -> Content {
        Content::tally(self.rows.iter().flatten().copied())
    }

    /// Cells `u = (i+1, j)` whose entry strictly exceeds the entry above.
    pub fn descents(&self) -> BTreeSet<Cell> {
        let mut out = BTreeSet::new();
        for i in 2..=self.shape.num_rows() {
            for j in 1..=self.shape.row_len(i) {
                if self.at(i, j) > self.at(i - 1, j) {
                    out.insert(Cell::new(i, j));
                }
            }
        }
        out
    }

    /// maj = Σ (leg(u) + 1) over descents u.
    pub fn maj(&self) -> usize {
        self.descents()
            .iter()
            .map(|&u| self.shape.leg(u).unwrap() + 1)
            .sum()
    }

    /// Number of inversion triples: cell `u`, the cell above it (0 above
    /// row 1), and each cell to the right of `u` in its row.
    pub fn inv(&self) -> usize {
        let mut count = 0;
        for i in 1..=self.shape.num_rows() {
            let len = self.shape.row_len(i);
            for j in 1..len {
                let x = u64::from(self.at(i, j));
                let y = if i == 1 {
                    0
                } else {
                    u64::from(self.at(i - 1, j))
                };
                for jr in j + 1..=len {
                    let z = u64::from(self.at(i, jr));
                    if in_triple_set(x, y, z) {
                        count += 1;
                    }
                }
            }
        }
        count
    }

    /// Number of q-inversion triples: cell `v`, the cell below it (∞ when
    /// the column ends), and each cell to the right of `v` in its row.
    pub fn quinv(&self) -> usize {
        let mut count = 0;
        for i in 1..=self.shape.num_rows() {
            let len = self.shape.row_len(i);
            for j in 1..len {
                let y = u64::from(self.at(i, j));
                let x = if self.shape.row_len(i + 1) >= j {
                    u64::from(self.at(i + 1, j))
                } else {
                    INFINITY
                };
                for jr in j + 1..=len {
                    let z = u64::from(self.at(i, jr));
                    if in_triple_set(x, y, z) {
                        count += 1;
                    }
                }
            }
        }
        count
    }

    /// The multiset of entries of each row, in canonical (sorted) form.
    pub fn row_multisets(&self) -> Vec<Vec<u32>> {
        self.rows
            .iter()
            .map(|row| {
                let mut m = row.clone();
                m.sort_unstable();
                m
            })
            .collect()
    }

    /// True iff the two fillings have the same shape and every row of one
    /// is a permutation of the corresponding row of the other.
    pub fn row_equivalent(&self, other: &Filling) -> bool {
        self.shape == other.shape && self.row_multisets() == other.row_multisets()
    }
}

impl TryFrom<FillingRepr> for Filling {
    type Error = Error;
    fn try_from(repr: FillingRepr) -> Result<Self> {
        Filling::new(repr.shape, repr.rows)
    }
}

impl From<Filling> for FillingRepr {
    fn from(f: Filling) -> Self {
        FillingRepr {
            shape: f.shape,
            rows: f.rows,
        }
    }
}

impl fmt::Display for Filling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{\"shape\":{},\"rows\":[", self.shape)?;
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "[")?;
            for (j, v) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{v}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]}}")
    }
}

impl fmt::Debug for Filling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Filling({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn filling(rows: &[&[u32]]) -> Filling {
        let shape = Partition::new(rows.iter().map(|r| r.len()).collect::<Vec<_>>()).unwrap();
        Filling::new(shape, rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    // The worked 3-row filling displayed with maj = 6.
    fn example_maj() -> Filling {
        filling(&[&[1, 3, 5, 5, 6, 8], &[2, 4, 2, 7], &[3, 1]])
    }

    // The variant display used for inv = 3 and quinv = 6. It differs from
    // `example_maj` in two cells; the tests pin every statistic on both.
    fn example_inv() -> Filling {
        filling(&[&[1, 3, 5, 2, 6, 8], &[2, 4, 1, 7], &[3, 1]])
    }

    #[test]
    fn validation() {
        let shape = Partition::new(vec![2, 1]).unwrap();
        assert!(Filling::new(shape.clone(), vec![vec![1, 2]]).is_err());
        assert!(Filling::new(shape.clone(), vec![vec![1], vec![2]]).is_err());
        assert!(Filling::new(shape.clone(), vec![vec![1, 0], vec![2]]).is_err());
        assert!(Filling::new(shape, vec![vec![1, 2], vec![3]]).is_ok());
    }

    #[test]
    fn content_examples() {
        assert_eq!(
            example_maj().content(),
            Content::from_counts(vec![2, 2, 2, 1, 2, 1, 1, 1])
        );
        assert_eq!(
            filling(&[&[1, 1], &[1, 1]]).content(),
            Content::from_counts(vec![4])
        );
        // inv-zero construction example: tally of rows
        // 1223444 / 23441 / 4522 / 53
        let f = filling(&[
            &[1, 2, 2, 3, 4, 4, 4],
            &[2, 3, 4, 4, 1],
            &[4, 5, 2, 2],
            &[5, 3],
        ]);
        assert_eq!(f.content(), Content::from_counts(vec![2, 5, 3, 6, 2]));
    }

    #[test]
    fn descent_examples() {
        let des = example_maj().descents();
        let expected: BTreeSet<Cell> = [
            Cell::new(2, 1),
            Cell::new(2, 2),
            Cell::new(2, 4),
            Cell::new(3, 1),
        ]
        .into_iter()
        .collect();
        assert_eq!(des, expected);
        // entries weakly increase up each column, so no descent fires
        assert!(filling(&[&[3, 4], &[3, 2]]).descents().is_empty());
        assert!(filling(&[&[5, 1, 4]]).descents().is_empty());
    }

    #[test]
    fn maj_examples() {
        assert_eq!(example_maj().maj(), 6);
        assert_eq!(filling(&[&[2, 2], &[2, 2]]).maj(), 0);
        let quinv_zero = filling(&[
            &[2, 4, 3, 2, 1, 4, 4],
            &[3, 1, 4, 4, 2],
            &[4, 2, 5, 2],
            &[5, 3],
        ]);
        assert_eq!(quinv_zero.maj(), 15);
    }

    #[test]
    fn inv_examples() {
        assert_eq!(example_inv().inv(), 3);
        assert_eq!(filling(&[&[3], &[1], &[2]]).inv(), 0);
        assert_eq!(filling(&[&[1, 2, 3, 4, 5]]).inv(), 0);
        assert_eq!(filling(&[&[5, 4, 3, 2, 1]]).inv(), 10);
    }

    #[test]
    fn quinv_examples() {
        assert_eq!(example_inv().quinv(), 6);
        assert_eq!(filling(&[&[3], &[1], &[2]]).quinv(), 0);
        assert_eq!(filling(&[&[1, 2, 3, 4, 5]]).quinv(), 10);
        assert_eq!(filling(&[&[5, 4, 3, 2, 1]]).quinv(), 0);
    }

    #[test]
    fn both_display_variants_pinned() {
        // The two displays share Des, maj and quinv; they differ in inv.
        let a = example_maj();
        let b = example_inv();
        assert_eq!(a.descents(), b.descents());
        assert_eq!((a.maj(), a.inv(), a.quinv()), (6, 1, 6));
        assert_eq!((b.maj(), b.inv(), b.quinv()), (6, 3, 6));
    }

    #[test]
    fn row_multiset_examples() {
        let f = filling(&[
            &[1, 2, 2, 3, 4, 4, 4],
            &[2, 3, 4, 4, 1],
            &[4, 5, 2, 2],
            &[5, 3],
        ]);
        assert_eq!(f.row_multisets()[0], vec![1, 2, 2, 3, 4, 4, 4]);
        let g = filling(&[
            &[7, 6, 5, 4, 3, 2, 1],
            &[7, 5, 2, 10, 9],
            &[6, 10, 9, 8],
            &[8, 7],
        ]);
        assert_eq!(g.row_multisets()[3], vec![7, 8]);
        assert!(Filling::new(Partition::empty(), vec![])
            .unwrap()
            .row_multisets()
            .is_empty());
    }

    #[test]
    fn row_equivalence() {
        let inv_zero = filling(&[
            &[1, 2, 2, 3, 4, 4, 4],
            &[2, 3, 4, 4, 1],
            &[4, 5, 2, 2],
            &[5, 3],
        ]);
        let quinv_zero = filling(&[
            &[2, 4, 3, 2, 1, 4, 4],
            &[3, 1, 4, 4, 2],
            &[4, 2, 5, 2],
            &[5, 3],
        ]);
        assert!(inv_zero.row_equivalent(&quinv_zero));
        assert!(inv_zero.row_equivalent(&inv_zero));
        assert!(!filling(&[&[1, 2], &[3]]).row_equivalent(&filling(&[&[1, 2, 3]])));
    }

    // Independent maj route: per column, sum (leg+1) over descents in that
    // column. Exercised exhaustively over small shapes in tests/properties.rs.
    fn maj_by_columns(f: &Filling) -> usize {
        let shape = f.shape();
        let mut total = 0;
        for j in 1..=shape.row_len(1) {
            let height = shape.conjugate().row_len(j);
            for i in 2..=height {
                if f.at(i, j) > f.at(i - 1, j) {
                    total += shape.leg(Cell::new(i, j)).unwrap() + 1;
                }
            }
        }
        total
    }

    #[test]
    fn maj_column_route_agrees_on_examples() {
        for f in [example_maj(), example_inv()] {
            assert_eq!(f.maj(), maj_by_columns(&f));
        }
    }

    #[test]
    fn serde_round_trip() {
        let f = example_inv();
        let json = serde_json::to_string(&f).unwrap();
        assert_eq!(
            json,
            "{\"shape\":[6,4,2],\"rows\":[[1,3,5,2,6,8],[2,4,1,7],[3,1]]}"
        );
        assert_eq!(json, f.to_string());
        let back: Filling = serde_json::from_str(&json).unwrap();
        assert_eq!(back, f);
        // shape/rows mismatch rejected at parse time
        assert!(serde_json::from_str::<Filling>("{\"shape\":[2],\"rows\":[[1,2],[3]]}").is_err());
    }
}
