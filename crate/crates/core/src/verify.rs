//! Exhaustive desk-scale verification suites.
//!
//! Each suite sweeps a bounded family (shapes up to a cell count, words up
//! to a length) and emits one PASS/FAIL line per check, with the first
//! failing witness printed. Reports are plain text and byte-identical
//! across runs and thread counts.

use std::fmt;

use crate::charge::{charge, cocharge, cocharge_standard, ls_decompose, ChargeMethod, Word};
use crate::extremal::{
    build_inv_max, build_inv_zero, build_quinv_max, build_quinv_zero, RowMultisets, RowSets,
};
use crate::filling::Filling;
use crate::macdonald::{
    conjecture_match, enumerate_fillings, filling_count, macdonald_poly, modified_hall_littlewood,
    q_whittaker, stat_profile, HallLittlewoodRoute, Statistic, WhittakerRoute,
};
use crate::reading::{charge_word, cocharge_word, CellOrder};
use crate::shape::Partition;
use crate::Error;

/// Suite selector, mirroring the CLI's `verify` subcommand.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Suite {
    /// macdonald_poly via inv equals macdonald_poly via quinv.
    HhlEquality,
    /// swap_qt(H̃λ) = H̃λ′.
    Symmetry,
    /// The three q-Whittaker routes agree.
    Whittaker,
    /// The three modified Hall–Littlewood routes agree.
    HallLittlewood,
    /// Classical charge = Killpatrick charge; cocharge identities.
    ChargeEquiv,
    /// Exactly one extremal filling per row family, equal to the greedy
    /// construction, with the maj = charge/cocharge identities.
    Uniqueness,
    /// Profile equality and a complete inv/quinv matching.
    Conjecture,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::HhlEquality,
        Suite::Symmetry,
        Suite::Whittaker,
        Suite::HallLittlewood,
        Suite::ChargeEquiv,
        Suite::Uniqueness,
        Suite::Conjecture,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::HhlEquality => "hhl-equality",
            Suite::Symmetry => "symmetry",
            Suite::Whittaker => "whittaker",
            Suite::HallLittlewood => "hall-littlewood",
            Suite::ChargeEquiv => "charge-equiv",
            Suite::Uniqueness => "uniqueness",
            Suite::Conjecture => "conjecture",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Sweep bounds. Shape suites cover every partition with at most
/// `max_cells` cells (or just `shape` when set); the word suite covers
/// every partition-content word up to `max_word_len` over letters
/// 1..=max_letter.
#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub max_cells: usize,
    pub alphabet: u32,
    pub max_word_len: usize,
    pub max_letter: u32,
    pub shape: Option<Partition>,
    pub threads: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            max_cells: 6,
            alphabet: 3,
            max_word_len: 8,
            max_letter: 4,
            shape: None,
            threads: 1,
        }
    }
}

impl VerifyOptions {
    fn shapes(&self) -> Vec<Partition> {
        match &self.shape {
            Some(s) => vec![s.clone()],
            None => (0..=self.max_cells)
                .flat_map(Partition::all_of_size)
                .collect(),
        }
    }
}

/// Outcome of one suite run: PASS/FAIL lines plus a summary line.
#[derive(Clone, Debug)]
pub struct VerifyReport {
    pub suite: Suite,
    pub lines: Vec<String>,
    pub checks: usize,
    pub failures: usize,
}

impl VerifyReport {
    fn new(suite: Suite) -> Self {
        VerifyReport {
            suite,
            lines: Vec::new(),
            checks: 0,
            failures: 0,
        }
    }

    fn check(&mut self, label: &str, witness: Option<String>) {
        self.checks += 1;
        match witness {
            None => self.lines.push(format!("PASS {label}")),
            Some(w) => {
                self.failures += 1;
                self.lines.push(format!("FAIL {label}: {w}"));
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for line in &self.lines {
            out.push_str(line);
            out.push('\n');
        }
        out.push_str(&format!(
            "{}: {} checks, {} failures\n",
            self.suite, self.checks, self.failures
        ));
        out
    }
}

pub fn run_suite(suite: Suite, opts: &VerifyOptions) -> VerifyReport {
    let mut report = VerifyReport::new(suite);
    match suite {
        Suite::HhlEquality => hhl_equality(opts, &mut report),
        Suite::Symmetry => symmetry(opts, &mut report),
        Suite::Whittaker => whittaker(opts, &mut report),
        Suite::HallLittlewood => hall_littlewood(opts, &mut report),
        Suite::ChargeEquiv => charge_equiv(opts, &mut report),
        Suite::Uniqueness => uniqueness(opts, &mut report),
        Suite::Conjecture => conjecture(opts, &mut report),
    }
    report
}

fn hhl_equality(opts: &VerifyOptions, report: &mut VerifyReport) {
    for lam in opts.shapes() {
        let p = macdonald_poly(&lam, opts.alphabet, Statistic::Inv, opts.threads);
        let q = macdonald_poly(&lam, opts.alphabet, Statistic::Quinv, opts.threads);
        let witness = (p != q).then(|| format!("diff {}", p.diff_summary(&q)));
        report.check(
            &format!("hhl-equality shape={lam} n={}", opts.alphabet),
            witness,
        );
    }
}

fn symmetry(opts: &VerifyOptions, report: &mut VerifyReport) {
    for lam in opts.shapes() {
        let p = macdonald_poly(&lam, opts.alphabet, Statistic::Inv, opts.threads).swap_qt();
        let q = macdonald_poly(
            &lam.conjugate(),
            opts.alphabet,
            Statistic::Inv,
            opts.threads,
        );
        let witness = (p != q).then(|| format!("diff {}", p.diff_summary(&q)));
        report.check(
            &format!("symmetry shape={lam} n={}", opts.alphabet),
            witness,
        );
    }
}

fn whittaker(opts: &VerifyOptions, report: &mut VerifyReport) {
    for lam in opts.shapes() {
        let extract = q_whittaker(&lam, opts.alphabet, WhittakerRoute::Extract, opts.threads);
        let inv = q_whittaker(&lam, opts.alphabet, WhittakerRoute::InvMaxSum, opts.threads);
        let quinv = q_whittaker(
            &lam,
            opts.alphabet,
            WhittakerRoute::QuinvMaxSum,
            opts.threads,
        );
        let witness = if extract != inv {
            Some(format!("extract vs inv-max {}", extract.diff_summary(&inv)))
        } else if extract != quinv {
            Some(format!(
                "extract vs quinv-max {}",
                extract.diff_summary(&quinv)
            ))
        } else {
            None
        };
        report.check(
            &format!("whittaker shape={lam} n={}", opts.alphabet),
            witness,
        );
    }
}

fn hall_littlewood(opts: &VerifyOptions, report: &mut VerifyReport) {
    for lam in opts.shapes() {
        let extract = modified_hall_littlewood(
            &lam,
            opts.alphabet,
            HallLittlewoodRoute::Extract,
            opts.threads,
        );
        let inv = modified_hall_littlewood(
            &lam,
            opts.alphabet,
            HallLittlewoodRoute::InvZeroSum,
            opts.threads,
        );
        let quinv = modified_hall_littlewood(
            &lam,
            opts.alphabet,
            HallLittlewoodRoute::QuinvZeroSum,
            opts.threads,
        );
        let witness = if extract != inv {
            Some(format!(
                "extract vs inv-zero {}",
                extract.diff_summary(&inv)
            ))
        } else if extract != quinv {
            Some(format!(
                "extract vs quinv-zero {}",
                extract.diff_summary(&quinv)
            ))
        } else {
            None
        };
        report.check(
            &format!("hall-littlewood shape={lam} n={}", opts.alphabet),
            witness,
        );
    }
}

/// All words of the given length over 1..=max_letter with partition
/// content, in lexicographic order.
pub fn partition_content_words(len: usize, max_letter: u32) -> Vec<Word> {
    let mut out = Vec::new();
    let mut letters = vec![1u32; len];
    loop {
        let word = Word::new(letters.clone()).expect("letters start at 1");
        if word.has_partition_content() {
            out.push(word);
        }
        let mut i = len;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if letters[i] < max_letter {
                letters[i] += 1;
                for l in &mut letters[i + 1..] {
                    *l = 1;
                }
                break;
            }
        }
    }
}

fn binom2(h: usize) -> usize {
    h * h.saturating_sub(1) / 2
}

fn charge_equiv(opts: &VerifyOptions, report: &mut VerifyReport) {
    for len in 1..=opts.max_word_len {
        let words = partition_content_words(len, opts.max_letter);
        let mut witness = None;
        for w in &words {
            let classical = charge(w, ChargeMethod::Classical).unwrap();
            let killpatrick = charge(w, ChargeMethod::Killpatrick).unwrap();
            if classical != killpatrick {
                witness = Some(format!(
                    "word {w}: classical charge {classical} != killpatrick {killpatrick}"
                ));
                break;
            }
            let cch = cocharge(w).unwrap();
            let mu = w.content();
            let max_mult = mu.counts().iter().copied().max().unwrap_or(0);
            // Σ_{k=1..μ₁} C(μ′_k, 2) with μ′_k = #{i : μ_i ≥ k}
            let complement: usize = (1..=max_mult)
                .map(|k| binom2(mu.counts().iter().filter(|&&c| c >= k).count()))
                .sum();
            if cch != complement - classical {
                witness = Some(format!(
                    "word {w}: cocharge {cch} != {complement} - charge {classical}"
                ));
                break;
            }
            let classical_route: usize = ls_decompose(w)
                .unwrap()
                .subwords
                .iter()
                .map(|s| cocharge_standard(s).unwrap())
                .sum();
            if cch != classical_route {
                witness = Some(format!(
                    "word {w}: killpatrick cocharge {cch} != classical-subword cocharge {classical_route}"
                ));
                break;
            }
        }
        report.check(
            &format!(
                "charge-equiv len={len} letters<={} words={}",
                opts.max_letter,
                words.len()
            ),
            witness,
        );
    }
}

/// Exhaustive uniqueness sweep: for each row family over the bounded
/// alphabet, exactly one member attains each extreme, and it equals the
/// greedy construction. Returns the verified constructions.
pub fn extremal_uniqueness_sweep(
    shape: &Partition,
    alphabet: u32,
) -> std::result::Result<Vec<(crate::extremal::ExtremalClass, Filling)>, String> {
    use crate::extremal::ExtremalClass;
    use std::collections::BTreeMap;
    let max = shape.conjugate().n_stat();
    let mut by_family: BTreeMap<Vec<Vec<u32>>, Vec<Filling>> = BTreeMap::new();
    for f in enumerate_fillings(shape, alphabet) {
        by_family.entry(f.row_multisets()).or_default().push(f);
    }
    let mut out = Vec::new();
    for (family, members) in &by_family {
        let multisets = RowMultisets::new(family.clone()).expect("entries are positive");
        let zero_cases = [
            (ExtremalClass::InvZero, build_inv_zero(shape, &multisets)),
            (
                ExtremalClass::QuinvZero,
                build_quinv_zero(shape, &multisets),
            ),
        ];
        for (class, built) in zero_cases {
            let built = built.expect("sizes match by construction");
            let found: Vec<&Filling> = members
                .iter()
                .filter(|f| match class {
                    ExtremalClass::InvZero => f.inv() == 0,
                    _ => f.quinv() == 0,
                })
                .collect();
            if found.len() != 1 || *found[0] != built {
                return Err(format!(
                    "family {family:?}: {class} members {found:?}, construction {built}"
                ));
            }
            out.push((class, built));
        }

        let is_sets = family
            .iter()
            .all(|row| row.windows(2).all(|w| w[0] != w[1]));
        if is_sets {
            let sets = RowSets::new(family.clone()).expect("rows are distinct");
            let max_cases = [
                (ExtremalClass::InvMax, build_inv_max(shape, &sets)),
                (ExtremalClass::QuinvMax, build_quinv_max(shape, &sets)),
            ];
            for (class, built) in max_cases {
                let built = built.expect("sizes match by construction");
                let found: Vec<&Filling> = members
                    .iter()
                    .filter(|f| match class {
                        ExtremalClass::InvMax => f.inv() == max,
                        _ => f.quinv() == max,
                    })
                    .collect();
                if found.len() != 1 || *found[0] != built {
                    return Err(format!(
                        "family {family:?}: {class} members {found:?}, construction {built}"
                    ));
                }
                out.push((class, built));
            }
        } else {
            // rows repeat a value, so the maximum must be unattainable
            for f in members {
                if f.inv() == max || f.quinv() == max {
                    return Err(format!(
                        "repeated-row filling {f} attains the maximum {max}"
                    ));
                }
            }
        }
    }
    Ok(out)
}

/// maj = charge/cocharge of the matching reading word, per extremal class.
pub fn check_maj_identity(
    class: crate::extremal::ExtremalClass,
    f: &Filling,
) -> std::result::Result<(), String> {
    use crate::extremal::ExtremalClass;
    let (label, expected) = match class {
        ExtremalClass::InvMax => (
            "ch(w)",
            charge(
                &charge_word(f, CellOrder::Standard),
                ChargeMethod::Classical,
            )
            .unwrap(),
        ),
        ExtremalClass::QuinvMax => (
            "ch(w')",
            charge(&charge_word(f, CellOrder::Primed), ChargeMethod::Classical).unwrap(),
        ),
        ExtremalClass::InvZero => (
            "cch(cw)",
            cocharge(&cocharge_word(f, CellOrder::Standard)).unwrap(),
        ),
        ExtremalClass::QuinvZero => (
            "cch(cw')",
            cocharge(&cocharge_word(f, CellOrder::Primed)).unwrap(),
        ),
    };
    if f.maj() != expected {
        return Err(format!(
            "{class} {f}: maj {} != {label} {expected}",
            f.maj()
        ));
    }
    Ok(())
}

fn uniqueness(opts: &VerifyOptions, report: &mut VerifyReport) {
    for lam in opts.shapes() {
        let outcome = extremal_uniqueness_sweep(&lam, opts.alphabet).and_then(|constructions| {
            for (class, f) in &constructions {
                check_maj_identity(*class, f)?;
            }
            Ok(constructions.len() as u64)
        });
        match outcome {
            Ok(checked) => report.check(
                &format!(
                    "uniqueness shape={lam} n={} constructions={checked}",
                    opts.alphabet
                ),
                None,
            ),
            Err(witness) => report.check(
                &format!("uniqueness shape={lam} n={}", opts.alphabet),
                Some(witness),
            ),
        }
    }
}

fn conjecture(opts: &VerifyOptions, report: &mut VerifyReport) {
    for lam in opts.shapes() {
        let inv = stat_profile(&lam, opts.alphabet, Statistic::Inv, opts.threads);
        let quinv = stat_profile(&lam, opts.alphabet, Statistic::Quinv, opts.threads);
        if inv != quinv {
            let witness = quinv
                .entries()
                .iter()
                .find(|(k, c)| inv.entries().get(k) != Some(c))
                .map(|(k, c)| {
                    format!(
                        "key rows={:?} maj={} stat={}: quinv count {c}, inv count {}",
                        k.rows,
                        k.maj,
                        k.stat,
                        inv.entries().get(k).copied().unwrap_or(0)
                    )
                })
                .unwrap_or_else(|| "profiles differ".to_string());
            report.check(
                &format!("conjecture shape={lam} n={}", opts.alphabet),
                Some(witness),
            );
            continue;
        }
        match conjecture_match(&lam, opts.alphabet) {
            Ok(pairs) => {
                let total = filling_count(&lam, opts.alphabet);
                let bad = pairs.iter().find(|p| {
                    !p.sigma.row_equivalent(&p.delta)
                        || p.sigma.maj() != p.delta.maj()
                        || p.sigma.quinv() != p.delta.inv()
                });
                let witness = if pairs.len() as u64 != total {
                    Some(format!("{} pairs for {total} fillings", pairs.len()))
                } else {
                    bad.map(|p| format!("pair violates predicates: {} -> {}", p.sigma, p.delta))
                };
                match witness {
                    None => report.check(
                        &format!(
                            "conjecture shape={lam} n={} pairs={}",
                            opts.alphabet,
                            pairs.len()
                        ),
                        None,
                    ),
                    Some(w) => report.check(
                        &format!("conjecture shape={lam} n={}", opts.alphabet),
                        Some(w),
                    ),
                }
            }
            Err(Error::ConjectureMismatch(failure)) => report.check(
                &format!("conjecture shape={lam} n={}", opts.alphabet),
                Some(failure.to_string()),
            ),
            Err(other) => report.check(
                &format!("conjecture shape={lam} n={}", opts.alphabet),
                Some(other.to_string()),
            ),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_suites_pass_at_small_bounds() {
        let opts = VerifyOptions {
            max_cells: 4,
            alphabet: 2,
            max_word_len: 5,
            max_letter: 3,
            shape: None,
            threads: 1,
        };
        for suite in Suite::ALL {
            let report = run_suite(suite, &opts);
            assert!(report.passed(), "{}", report.render());
            assert!(report.checks > 0);
            assert!(report.render().contains("0 failures"));
        }
    }

    #[test]
    fn single_shape_option() {
        let opts = VerifyOptions {
            shape: Some(Partition::new(vec![2, 1]).unwrap()),
            alphabet: 2,
            ..VerifyOptions::default()
        };
        let report = run_suite(Suite::HhlEquality, &opts);
        assert_eq!(report.checks, 1);
        assert!(report.passed());
        assert!(report.lines[0].contains("shape=[2,1]"));
    }

    #[test]
    fn reports_identical_across_thread_counts() {
        let base = VerifyOptions {
            max_cells: 4,
            alphabet: 2,
            max_word_len: 4,
            max_letter: 3,
            shape: None,
            threads: 1,
        };
        let threaded = VerifyOptions {
            threads: 4,
            ..base.clone()
        };
        for suite in Suite::ALL {
            assert_eq!(
                run_suite(suite, &base).render(),
                run_suite(suite, &threaded).render(),
                "suite {suite}"
            );
        }
    }

    #[test]
    fn word_enumeration_filters_partition_content() {
        let words = partition_content_words(2, 2);
        let strings: Vec<String> = words.iter().map(|w| w.to_string()).collect();
        assert_eq!(strings, ["11", "12", "21"]);
    }

    #[test]
    fn failing_checks_render_the_witness() {
        let mut report = VerifyReport::new(Suite::Symmetry);
        report.check("symmetry shape=[2] n=2", None);
        report.check(
            "symmetry shape=[2,1] n=2",
            Some("diff x1^1: 1 vs 0".to_string()),
        );
        assert!(!report.passed());
        assert_eq!(
            report.render(),
            "PASS symmetry shape=[2] n=2\n\
             FAIL symmetry shape=[2,1] n=2: diff x1^1: 1 vs 0\n\
             symmetry: 2 checks, 1 failures\n"
        );
    }
}
