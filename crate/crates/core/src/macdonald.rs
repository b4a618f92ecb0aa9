//! Enumeration of fillings over a bounded alphabet and the generating
//! functions built from them: the modified Macdonald polynomial via either
//! statistic, its q-Whittaker and modified Hall–Littlewood specializations,
//! and the joint-distribution profiles behind the inv/quinv bijection
//! conjecture.
//!
//! The underlying identities live in infinitely many x variables.
//! Restricting entries to 1..=n realizes the substitution
//! x_{n+1} = x_{n+2} = … = 0, under which both sides of each identity
//! remain equal as polynomials, so a bounded alphabet is a faithful
//! verification substrate.
//!
//! Fillings are enumerated by an odometer over the cells in row-major
//! order with the last cell least significant, so the order is
//! lexicographic on the flattened entries. The index space splits into
//! contiguous ranges, which is the parallelization seam: ranges are folded
//! independently and merged in a fixed order, so results do not depend on
//! the thread count.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::filling::{Content, Filling};
use crate::poly::{Monomial, MultiPoly};
use crate::shape::Partition;
use crate::{Error, Result};

/// Which inversion statistic weights q.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Statistic {
    Inv,
    Quinv,
}

impl Statistic {
    pub fn of(self, f: &Filling) -> usize {
        match self {
            Statistic::Inv => f.inv(),
            Statistic::Quinv => f.quinv(),
        }
    }
}

impl fmt::Display for Statistic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Statistic::Inv => write!(f, "inv"),
            Statistic::Quinv => write!(f, "quinv"),
        }
    }
}

/// Number of fillings of `shape` with entries in 1..=alphabet.
pub fn filling_count(shape: &Partition, alphabet: u32) -> u64 {
    (alphabet as u64)
        .checked_pow(shape.size() as u32)
        .expect("filling count exceeds u64; bound the request")
}

/// Streams every filling of `shape` over 1..=alphabet exactly once.
pub struct FillingIter {
    shape: Partition,
    alphabet: u32,
    digits: Vec<u32>,
    next_index: u64,
    end: u64,
}

impl FillingIter {
    fn digits_for(size: usize, alphabet: u32, index: u64) -> Vec<u32> {
        let mut digits = vec![1u32; size];
        let mut rem = index;
        for d in digits.iter_mut().rev() {
            *d = 1 + (rem % alphabet as u64) as u32;
            rem /= alphabet as u64;
        }
        digits
    }

    /// The sub-stream covering odometer indices `start..end`.
    pub fn range(shape: &Partition, alphabet: u32, start: u64, end: u64) -> Self {
        assert!(alphabet >= 1, "alphabet must be at least 1");
        let digits = Self::digits_for(shape.size(), alphabet, start.min(end));
        FillingIter {
            shape: shape.clone(),
            alphabet,
            digits,
            next_index: start,
            end,
        }
    }

    fn build(&self) -> Filling {
        let mut rows = Vec::with_capacity(self.shape.num_rows());
        let mut offset = 0;
        for &len in self.shape.parts() {
            rows.push(self.digits[offset..offset + len].to_vec());
            offset += len;
        }
        Filling::new(self.shape.clone(), rows).expect("odometer digits are valid entries")
    }

    fn advance(&mut self) {
        for d in self.digits.iter_mut().rev() {
            if *d < self.alphabet {
                *d += 1;
                return;
            }
            *d = 1;
        }
    }
}

impl Iterator for FillingIter {
    type Item = Filling;

    fn next(&mut self) -> Option<Filling> {
        if self.next_index >= self.end {
            return None;
        }
        let f = self.build();
        self.next_index += 1;
        self.advance();
        Some(f)
    }
}

pub fn enumerate_fillings(shape: &Partition, alphabet: u32) -> FillingIter {
    FillingIter::range(shape, alphabet, 0, filling_count(shape, alphabet))
}

/// Folds every filling into per-range accumulators and merges them in
/// range order. `threads == 1` stays on the calling thread.
pub(crate) fn par_fold<R, Seed, Step, Merge>(
    shape: &Partition,
    alphabet: u32,
    threads: usize,
    seed: Seed,
    step: Step,
    merge: Merge,
) -> R
where
    R: Send,
    Seed: Fn() -> R + Sync,
    Step: Fn(&mut R, &Filling) + Sync,
    Merge: Fn(&mut R, R),
{
    let count = filling_count(shape, alphabet);
    let threads = threads.max(1).min(count.max(1) as usize);
    if threads == 1 {
        let mut acc = seed();
        for f in enumerate_fillings(shape, alphabet) {
            step(&mut acc, &f);
        }
        return acc;
    }
    let chunk = count.div_ceil(threads as u64);
    let seed = &seed;
    let step = &step;
    let partials = std::thread::scope(|scope| {
        let handles: Vec<_> = (0..threads as u64)
            .map(|k| {
                let start = k * chunk;
                let end = ((k + 1) * chunk).min(count);
                scope.spawn(move || {
                    let mut acc = seed();
                    for f in FillingIter::range(shape, alphabet, start, end) {
                        step(&mut acc, &f);
                    }
                    acc
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("enumeration worker panicked"))
            .collect::<Vec<R>>()
    });
    let mut iter = partials.into_iter();
    let mut acc = iter.next().expect("at least one range");
    for partial in iter {
        merge(&mut acc, partial);
    }
    acc
}

fn x_monomial(alphabet: u32, content: &Content, qexp: usize, texp: usize) -> Monomial {
    let mut xexp = vec![0u32; alphabet as usize];
    for (i, &c) in content.counts().iter().enumerate() {
        xexp[i] = c as u32;
    }
    Monomial::new(qexp as u32, texp as u32, xexp)
}

/// Σ over fillings of q^stat t^maj x^σ.
pub fn macdonald_poly(
    shape: &Partition,
    alphabet: u32,
    stat: Statistic,
    threads: usize,
) -> MultiPoly {
    par_fold(
        shape,
        alphabet,
        threads,
        || MultiPoly::zero(alphabet as usize),
        |acc, f| {
            let m = x_monomial(alphabet, &f.content(), stat.of(f), f.maj());
            acc.add_term(m, 1).expect("alphabet fixed per fold");
        },
        |acc, partial| acc.merge(partial).expect("alphabet fixed per fold"),
    )
}

/// How to compute the q-Whittaker specialization.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum WhittakerRoute {
    /// Top q-coefficient of the full Macdonald sum.
    Extract,
    /// Direct sum over inv-maximal fillings.
    InvMaxSum,
    /// Direct sum over quinv-maximal fillings.
    QuinvMaxSum,
}

/// How to compute the modified Hall–Littlewood specialization.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum HallLittlewoodRoute {
    /// q-constant term of the full Macdonald sum.
    Extract,
    /// Direct sum over inv-zero fillings.
    InvZeroSum,
    /// Direct sum over quinv-zero fillings.
    QuinvZeroSum,
}

fn filtered_maj_sum<P>(shape: &Partition, alphabet: u32, threads: usize, keep: P) -> MultiPoly
where
    P: Fn(&Filling) -> bool + Sync,
{
    par_fold(
        shape,
        alphabet,
        threads,
        || MultiPoly::zero(alphabet as usize),
        |acc, f| {
            if keep(f) {
                let m = x_monomial(alphabet, &f.content(), 0, f.maj());
                acc.add_term(m, 1).expect("alphabet fixed per fold");
            }
        },
        |acc, partial| acc.merge(partial).expect("alphabet fixed per fold"),
    )
}

/// The q-Whittaker polynomial in x and t.
pub fn q_whittaker(
    shape: &Partition,
    alphabet: u32,
    route: WhittakerRoute,
    threads: usize,
) -> MultiPoly {
    let max = shape.conjugate().n_stat();
    match route {
        WhittakerRoute::Extract => {
            macdonald_poly(shape, alphabet, Statistic::Inv, threads).coeff_of_q(max as u32)
        }
        WhittakerRoute::InvMaxSum => filtered_maj_sum(shape, alphabet, threads, |f| f.inv() == max),
        WhittakerRoute::QuinvMaxSum => {
            filtered_maj_sum(shape, alphabet, threads, |f| f.quinv() == max)
        }
    }
}

/// The modified Hall–Littlewood polynomial in x and t.
pub fn modified_hall_littlewood(
    shape: &Partition,
    alphabet: u32,
    route: HallLittlewoodRoute,
    threads: usize,
) -> MultiPoly {
    match route {
        HallLittlewoodRoute::Extract => {
            macdonald_poly(shape, alphabet, Statistic::Inv, threads).coeff_of_q(0)
        }
        HallLittlewoodRoute::InvZeroSum => {
            filtered_maj_sum(shape, alphabet, threads, |f| f.inv() == 0)
        }
        HallLittlewoodRoute::QuinvZeroSum => {
            filtered_maj_sum(shape, alphabet, threads, |f| f.quinv() == 0)
        }
    }
}

/// Joint-distribution key: the full row-multiset family (which refines
/// content), maj, and the chosen statistic's value.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct ProfileKey {
    pub rows: Vec<Vec<u32>>,
    pub maj: usize,
    pub stat: usize,
}

/// Multiset of profile keys over all fillings of a shape.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StatProfile {
    entries: BTreeMap<ProfileKey, u64>,
}

impl StatProfile {
    pub fn entries(&self) -> &BTreeMap<ProfileKey, u64> {
        &self.entries
    }

    pub fn total(&self) -> u64 {
        self.entries.values().sum()
    }

    /// Coarsening of the profile to (content, maj, stat) keys.
    pub fn by_content(&self) -> BTreeMap<(Vec<usize>, usize, usize), u64> {
        let mut out = BTreeMap::new();
        for (key, &count) in &self.entries {
            let content = Content::tally(key.rows.iter().flatten().copied());
            *out.entry((content.counts().to_vec(), key.maj, key.stat))
                .or_insert(0) += count;
        }
        out
    }
}

/// The joint distribution of (row-multiset family, maj, stat) over all
/// fillings of `shape` with entries ≤ alphabet.
pub fn stat_profile(
    shape: &Partition,
    alphabet: u32,
    stat: Statistic,
    threads: usize,
) -> StatProfile {
    let entries = par_fold(
        shape,
        alphabet,
        threads,
        BTreeMap::new,
        |acc: &mut BTreeMap<ProfileKey, u64>, f| {
            let key = ProfileKey {
                rows: f.row_multisets(),
                maj: f.maj(),
                stat: stat.of(f),
            };
            *acc.entry(key).or_insert(0) += 1;
        },
        |acc, partial| {
            for (key, count) in partial {
                *acc.entry(key).or_insert(0) += count;
            }
        },
    );
    StatProfile { entries }
}

/// One matched pair: `quinv(sigma) = inv(delta) = stat`, equal maj, and
/// row-equivalent fillings.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct MatchPair {
    pub sigma: Filling,
    pub delta: Filling,
    pub maj: usize,
    pub stat: usize,
}

/// A class-size mismatch found while pairing: a counterexample to the
/// conjecture at this shape and alphabet.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MatchFailure {
    pub key: ProfileKey,
    pub quinv_class: Vec<Filling>,
    pub inv_class: Vec<Filling>,
}

impl fmt::Display for MatchFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "class key rows={:?} maj={} stat={}: quinv side has {} fillings {:?}, inv side has {} fillings {:?}",
            self.key.rows,
            self.key.maj,
            self.key.stat,
            self.quinv_class.len(),
            self.quinv_class,
            self.inv_class.len(),
            self.inv_class,
        )
    }
}

/// Pairs every filling σ with a row-equivalent δ of equal maj such that
/// quinv(σ) = inv(δ), by matching equal-rank members of each class. Errors
/// with the offending class if any two classes differ in size.
pub fn conjecture_match(shape: &Partition, alphabet: u32) -> Result<Vec<MatchPair>> {
    let mut quinv_classes: BTreeMap<ProfileKey, Vec<Filling>> = BTreeMap::new();
    let mut inv_classes: BTreeMap<ProfileKey, Vec<Filling>> = BTreeMap::new();
    // enumeration order is lexicographic on the entries, so class members
    // arrive already sorted
    for f in enumerate_fillings(shape, alphabet) {
        let rows = f.row_multisets();
        let maj = f.maj();
        quinv_classes
            .entry(ProfileKey {
                rows: rows.clone(),
                maj,
                stat: f.quinv(),
            })
            .or_default()
            .push(f.clone());
        inv_classes
            .entry(ProfileKey {
                rows,
                maj,
                stat: f.inv(),
            })
            .or_default()
            .push(f);
    }
    let mut pairs = Vec::new();
    for (key, quinv_class) in &quinv_classes {
        let inv_class = inv_classes.get(key).cloned().unwrap_or_default();
        if inv_class.len() != quinv_class.len() {
            return Err(Error::ConjectureMismatch(Box::new(MatchFailure {
                key: key.clone(),
                quinv_class: quinv_class.clone(),
                inv_class,
            })));
        }
        for (sigma, delta) in quinv_class.iter().zip(&inv_class) {
            pairs.push(MatchPair {
                sigma: sigma.clone(),
                delta: delta.clone(),
                maj: key.maj,
                stat: key.stat,
            });
        }
    }
    // classes keyed identically on both sides and sizes all agree, so every
    // filling appears exactly once on each side
    Ok(pairs)
}
