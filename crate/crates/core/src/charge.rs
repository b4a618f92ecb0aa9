//! Words and the charge/cocharge statistics.
//!
//! Charge of a standard word w of length k is Σ (k − i) over the letters i
//! whose successor i+1 occurs to the right of i; cocharge uses "to the
//! left". A word of partition content is split into standard subwords by
//! one of two extraction algorithms, and charge (cocharge) is the sum over
//! the subwords:
//!
//! * classical: scan right-to-left picking 1, 2, 3, …, wrapping to the
//!   rightmost remaining occurrence when the scan runs off the left end;
//! * Killpatrick: scan left-to-right picking m, m−1, …, 1 (m the largest
//!   remaining letter), wrapping to the leftmost remaining occurrence.
//!
//! Both yield the same charge; cocharge here is defined as the sum of
//! subword cocharges over the Killpatrick decomposition.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::filling::Content;
use crate::{Error, Result};

/// A finite word over the positive integers.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Word {
    letters: Vec<u32>,
}

/// Which subword-extraction algorithm to use for charge.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ChargeMethod {
    Classical,
    Killpatrick,
}

/// A complete split of a word into standard subwords.
///
/// `positions[k]` lists the 0-based indices (ascending) of subword k's
/// letters in the parent word; together they partition the index range.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Decomposition {
    pub subwords: Vec<Word>,
    pub positions: Vec<Vec<usize>>,
}

impl Word {
    pub fn new(letters: impl Into<Vec<u32>>) -> Result<Self> {
        let letters = letters.into();
        if letters.contains(&0) {
            return Err(Error::LetterNotPositive);
        }
        Ok(Word { letters })
    }

    pub fn empty() -> Self {
        Word {
            letters: Vec::new(),
        }
    }

    pub fn letters(&self) -> &[u32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn reversed(&self) -> Word {
        let mut letters = self.letters.clone();
        letters.reverse();
        Word { letters }
    }

    pub fn content(&self) -> Content {
        Content::tally(self.letters.iter().copied())
    }

    /// Content (1,1,…,1): each of 1..=k exactly once.
    pub fn is_standard(&self) -> bool {
        self.content().counts().iter().all(|&c| c == 1)
    }

    pub fn has_partition_content(&self) -> bool {
        self.content().is_partition()
    }
}

impl TryFrom<Vec<u32>> for Word {
    type Error = Error;
    fn try_from(letters: Vec<u32>) -> Result<Self> {
        Word::new(letters)
    }
}

impl From<Word> for Vec<u32> {
    fn from(w: Word) -> Self {
        w.letters
    }
}

impl fmt::Display for Word {
    /// Compact digit string when all letters fit one digit, otherwise
    /// space-separated.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.iter().all(|&l| l <= 9) {
            for l in &self.letters {
                write!(f, "{l}")?;
            }
            Ok(())
        } else {
            for (i, l) in self.letters.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{l}")?;
            }
            Ok(())
        }
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

fn ensure_standard(w: &Word) -> Result<()> {
    if w.is_standard() {
        Ok(())
    } else {
        Err(Error::NotStandard(w.content().counts().to_vec()))
    }
}

fn ensure_partition_content(w: &Word) -> Result<()> {
    if w.has_partition_content() {
        Ok(())
    } else {
        Err(Error::NotPartitionContent(w.content().counts().to_vec()))
    }
}

/// Charge of a standard word: Σ (k − i) over i with i+1 right of i.
pub fn charge_standard(w: &Word) -> Result<usize> {
    ensure_standard(w)?;
    let k = w.len();
    let mut pos = vec![0usize; k + 1];
    for (p, &l) in w.letters().iter().enumerate() {
        pos[l as usize] = p;
    }
    Ok((1..k).filter(|&i| pos[i + 1] > pos[i]).map(|i| k - i).sum())
}

/// Cocharge of a standard word: Σ (k − i) over i with i+1 left of i.
pub fn cocharge_standard(w: &Word) -> Result<usize> {
    ensure_standard(w)?;
    let k = w.len();
    let mut pos = vec![0usize; k + 1];
    for (p, &l) in w.letters().iter().enumerate() {
        pos[l as usize] = p;
    }
    Ok((1..k).filter(|&i| pos[i + 1] < pos[i]).map(|i| k - i).sum())
}

/// Shared extraction harness: index bookkeeping over remaining positions,
/// one standard subword per pass.
fn decompose_by<F>(w: &Word, extract_one: F) -> Result<Decomposition>
where
    F: Fn(&[u32], &[bool]) -> Vec<usize>,
{
    ensure_partition_content(w)?;
    let letters = w.letters();
    let mut removed = vec![false; letters.len()];
    let mut remaining = letters.len();
    let mut subwords = Vec::new();
    let mut positions = Vec::new();
    while remaining > 0 {
        let mut sel = extract_one(letters, &removed);
        sel.sort_unstable();
        for &p in &sel {
            removed[p] = true;
        }
        remaining -= sel.len();
        let sub = Word::new(sel.iter().map(|&p| letters[p]).collect::<Vec<_>>())?;
        debug_assert!(sub.is_standard());
        subwords.push(sub);
        positions.push(sel);
    }
    Ok(Decomposition {
        subwords,
        positions,
    })
}

fn max_remaining(letters: &[u32], removed: &[bool]) -> u32 {
    letters
        .iter()
        .zip(removed)
        .filter(|&(_, &r)| !r)
        .map(|(&l, _)| l)
        .max()
        .expect("extraction only runs while letters remain")
}

fn rightmost(
    letters: &[u32],
    removed: &[bool],
    target: u32,
    before: Option<usize>,
) -> Option<usize> {
    let end = before.unwrap_or(letters.len());
    (0..end)
        .rev()
        .find(|&p| !removed[p] && letters[p] == target)
}

fn leftmost(letters: &[u32], removed: &[bool], target: u32, after: Option<usize>) -> Option<usize> {
    let start = after.map_or(0, |p| p + 1);
    (start..letters.len()).find(|&p| !removed[p] && letters[p] == target)
}

/// Classical (Lascoux–Schützenberger) decomposition: each subword picks
/// 1, 2, …, m scanning leftward, wrapping to the rightmost occurrence.
pub fn ls_decompose(w: &Word) -> Result<Decomposition> {
    decompose_by(w, |letters, removed| {
        let m = max_remaining(letters, removed);
        let mut sel = Vec::with_capacity(m as usize);
        let mut cur: Option<usize> = None;
        for target in 1..=m {
            let p = rightmost(letters, removed, target, cur)
                .or_else(|| rightmost(letters, removed, target, None))
                .expect("partition content guarantees every smaller letter remains");
            sel.push(p);
            cur = Some(p);
        }
        sel
    })
}

/// Killpatrick decomposition: each subword picks m, m−1, …, 1 scanning
/// rightward, wrapping to the leftmost occurrence.
pub fn killpatrick_decompose(w: &Word) -> Result<Decomposition> {
    decompose_by(w, |letters, removed| {
        let m = max_remaining(letters, removed);
        let mut sel = Vec::with_capacity(m as usize);
        let mut cur: Option<usize> = None;
        for target in (1..=m).rev() {
            let p = leftmost(letters, removed, target, cur)
                .or_else(|| leftmost(letters, removed, target, None))
                .expect("partition content guarantees every smaller letter remains");
            sel.push(p);
            cur = Some(p);
        }
        sel
    })
}

/// Charge of a word of partition content, by either decomposition.
pub fn charge(w: &Word, method: ChargeMethod) -> Result<usize> {
    let decomposition = match method {
        ChargeMethod::Classical => ls_decompose(w)?,
        ChargeMethod::Killpatrick => killpatrick_decompose(w)?,
    };
    decomposition.subwords.iter().map(charge_standard).sum()
}

/// Cocharge of a word of partition content: the sum of subword cocharges
/// over the Killpatrick decomposition.
pub fn cocharge(w: &Word) -> Result<usize> {
    killpatrick_decompose(w)?
        .subwords
        .iter()
        .map(cocharge_standard)
        .sum()
}
