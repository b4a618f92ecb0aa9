//! Partitions and Young diagrams in English convention: row 1 on top,
//! `parts[i]` left-justified cells in row `i + 1`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// A partition: a weakly decreasing sequence of positive integers.
///
/// Zero parts are stripped on construction; inputs that are not weakly
/// decreasing are rejected rather than sorted.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

/// A cell of a Young diagram, 1-based: `(row, col)`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }
}

fn binom2(h: usize) -> usize {
    h * h.saturating_sub(1) / 2
}

impl Partition {
    pub fn new(parts: impl Into<Vec<usize>>) -> Result<Self> {
        let mut parts = parts.into();
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotWeaklyDecreasing(parts));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of nonzero parts (rows of the diagram).
    pub fn num_rows(&self) -> usize {
        self.parts.len()
    }

    /// Length of row `i` (1-based); 0 beyond the last row.
    pub fn row_len(&self, i: usize) -> usize {
        if i == 0 {
            0
        } else {
            self.parts.get(i - 1).copied().unwrap_or(0)
        }
    }

    /// |λ|, the number of cells.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The conjugate partition: part k counts the cells in column k.
    pub fn conjugate(&self) -> Partition {
        let cols = self.row_len(1);
        let parts = (1..=cols)
            .map(|k| self.parts.iter().filter(|&&p| p >= k).count())
            .collect();
        Partition { parts }
    }

    /// n(λ) = Σ_k C(λ′_k, 2), summed over the columns of the diagram.
    pub fn n_stat(&self) -> usize {
        self.conjugate().parts.iter().map(|&h| binom2(h)).sum()
    }

    pub fn contains(&self, cell: Cell) -> bool {
        cell.row >= 1 && cell.col >= 1 && cell.col <= self.row_len(cell.row)
    }

    /// All cells in row-major order.
    pub fn cells(&self) -> Vec<Cell> {
        let mut out = Vec::with_capacity(self.size());
        for (i, &len) in self.parts.iter().enumerate() {
            for j in 1..=len {
                out.push(Cell::new(i + 1, j));
            }
        }
        out
    }

    /// Number of cells strictly below `cell` in its column.
    pub fn leg(&self, cell: Cell) -> Result<usize> {
        if !self.contains(cell) {
            return Err(Error::CellOutOfShape {
                row: cell.row,
                col: cell.col,
                shape: self.to_string(),
            });
        }
        Ok(self
            .parts
            .iter()
            .skip(cell.row)
            .filter(|&&p| p >= cell.col)
            .count())
    }

    /// All partitions of `n`, in descending lexicographic order.
    pub fn all_of_size(n: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut current = Vec::new();
        fn rec(
            remaining: usize,
            max_part: usize,
            current: &mut Vec<usize>,
            out: &mut Vec<Partition>,
        ) {
            if remaining == 0 {
                out.push(Partition {
                    parts: current.clone(),
                });
                return;
            }
            for p in (1..=remaining.min(max_part)).rev() {
                current.push(p);
                rec(remaining - p, p, current, out);
                current.pop();
            }
        }
        rec(n, n, &mut current, &mut out);
        out
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition({self})")
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}
