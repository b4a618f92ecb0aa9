//! Total orders on cells and the charge/cocharge reading words of a filling.
//!
//! Cells are listed by decreasing entry; ties are broken by one of two
//! total orders, both row-major from the top but differing within a row:
//! the standard order walks columns right-to-left, the primed order
//! left-to-right. The cocharge word records the row index of each cell in
//! this sequence; the charge word is its reverse. The resulting words do
//! not depend on the choice of order (only column positions within a row
//! change, not row indices), which the test suite checks rather than
//! assumes.

use std::cmp::Ordering;

use crate::charge::Word;
use crate::filling::Filling;
use crate::shape::Cell;

/// Tie-breaking order for cells of equal entry.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CellOrder {
    /// Row-major, right-to-left within a row.
    Standard,
    /// Row-major, left-to-right within a row.
    Primed,
}

impl CellOrder {
    pub fn compare(self, a: Cell, b: Cell) -> Ordering {
        a.row.cmp(&b.row).then_with(|| match self {
            CellOrder::Standard => b.col.cmp(&a.col),
            CellOrder::Primed => a.col.cmp(&b.col),
        })
    }
}

/// Cells sorted by decreasing entry, ties increasing in the given order.
pub fn sort_cells(f: &Filling, order: CellOrder) -> Vec<Cell> {
    let mut cells = f.shape().cells();
    cells.sort_by(|&a, &b| {
        let va = f.value(a).unwrap();
        let vb = f.value(b).unwrap();
        vb.cmp(&va).then_with(|| order.compare(a, b))
    });
    cells
}

/// The word of row indices along `sort_cells`; its content is the shape.
pub fn cocharge_word(f: &Filling, order: CellOrder) -> Word {
    Word::new(
        sort_cells(f, order)
            .iter()
            .map(|c| c.row as u32)
            .collect::<Vec<_>>(),
    )
    .expect("row indices are positive")
}

/// The reverse of the cocharge word.
pub fn charge_word(f: &Filling, order: CellOrder) -> Word {
    cocharge_word(f, order).reversed()
}
