//! Command-line front end: statistics of a filling, the four extremal
//! constructions, the maj-preserving bijections, polynomial assembly,
//! distribution profiles, inv/quinv matching, and the verification suites.
//!
//! All subcommands read files or stdin and write stdout; identical
//! invocations produce byte-identical output. Exit codes: 0 success,
//! 1 verification failure or counterexample, 2 usage or parse error.

use std::fs;
use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use macfill::charge::{charge, cocharge, killpatrick_decompose, ls_decompose, ChargeMethod, Word};
use macfill::extremal::{
    build_inv_max, build_inv_zero, build_quinv_max, build_quinv_zero, phi, varphi, RowMultisets,
    RowSets,
};
use macfill::filling::Filling;
use macfill::macdonald::{
    conjecture_match, filling_count, macdonald_poly, modified_hall_littlewood, q_whittaker,
    stat_profile, HallLittlewoodRoute, Statistic, WhittakerRoute,
};
use macfill::poly::MultiPoly;
use macfill::reading::{charge_word, cocharge_word, CellOrder};
use macfill::shape::Partition;
use macfill::verify::{run_suite, Suite, VerifyOptions};

#[derive(Parser)]
#[command(
    name = "macfill",
    version,
    about = "Fillings of Young diagrams: statistics, extremal constructions, bijections, Macdonald-type sums, and exhaustive verification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the statistics of a filling (content, Des, maj, inv, quinv,
    /// reading words, charge, cocharge) or of a word (content,
    /// decompositions, charge, cocharge)
    Stats {
        /// Filling JSON, word JSON array, or compact digit string; - for stdin
        file: PathBuf,
        /// Cell order used to compute the reading words
        #[arg(long, value_enum, default_value_t = OrderArg::Standard)]
        order: OrderArg,
    },
    /// Construct an extremal filling from a family of row sets/multisets
    Build {
        #[arg(long, value_enum)]
        kind: BuildKind,
        /// Shape as comma-separated parts, e.g. 6,4,2
        #[arg(long, value_parser = parse_shape)]
        shape: Partition,
        /// JSON file holding an array of arrays (one row per part), or -
        file: PathBuf,
    },
    /// Apply a maj-preserving bijection to an extremal filling
    Map {
        #[arg(long, value_enum)]
        kind: MapKind,
        /// Filling JSON file, or - for stdin
        file: PathBuf,
    },
    /// Assemble a polynomial by summing over all fillings of a shape
    Poly {
        #[arg(long, value_parser = parse_shape)]
        shape: Partition,
        #[arg(long)]
        alphabet: u32,
        #[arg(long, value_enum, default_value_t = PolyKind::Macdonald)]
        kind: PolyKind,
        /// Statistic weighting q in the macdonald sum
        #[arg(long, value_enum, default_value_t = StatArg::Inv)]
        stat: StatArg,
        /// Route for the q-whittaker / hall-littlewood specializations
        #[arg(long, value_enum, default_value_t = RouteArg::Extract)]
        route: RouteArg,
        #[arg(long, default_value_t = 1)]
        threads: usize,
        /// Write to a file instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        limits: LimitArgs,
    },
    /// Print the joint (row multisets, maj, statistic) distribution
    Profile {
        #[arg(long, value_parser = parse_shape)]
        shape: Partition,
        #[arg(long)]
        alphabet: u32,
        #[arg(long, value_enum, default_value_t = StatArg::Inv)]
        stat: StatArg,
        #[arg(long, default_value_t = 1)]
        threads: usize,
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        limits: LimitArgs,
    },
    /// Pair every filling across the inv and quinv statistics
    Match {
        #[arg(long, value_parser = parse_shape)]
        shape: Partition,
        #[arg(long)]
        alphabet: u32,
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        limits: LimitArgs,
    },
    /// Run an exhaustive verification suite
    Verify {
        #[arg(value_enum)]
        suite: SuiteArg,
        /// Check a single shape instead of sweeping all sizes
        #[arg(long, value_parser = parse_shape)]
        shape: Option<Partition>,
        /// Sweep every partition with at most this many cells
        #[arg(long, default_value_t = 6)]
        max_cells: usize,
        #[arg(long, default_value_t = 3)]
        alphabet: u32,
        /// Longest word checked by the charge-equiv suite
        #[arg(long, default_value_t = 8)]
        max_word_len: usize,
        /// Largest letter used by the charge-equiv suite
        #[arg(long, default_value_t = 4)]
        max_letter: u32,
        #[arg(long, default_value_t = 1)]
        threads: usize,
        #[command(flatten)]
        limits: LimitArgs,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum OrderArg {
    Standard,
    Primed,
}

impl From<OrderArg> for CellOrder {
    fn from(o: OrderArg) -> CellOrder {
        match o {
            OrderArg::Standard => CellOrder::Standard,
            OrderArg::Primed => CellOrder::Primed,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum BuildKind {
    InvMax,
    QuinvMax,
    InvZero,
    QuinvZero,
}

#[derive(Clone, Copy, ValueEnum)]
enum MapKind {
    /// inv-maximal -> quinv-maximal on the same row sets
    Phi,
    /// inv-zero -> quinv-zero on the same row multisets
    Varphi,
}

#[derive(Clone, Copy, ValueEnum)]
enum PolyKind {
    /// Full modified Macdonald sum in x, q, t
    Macdonald,
    /// Top q-coefficient (in x, t)
    QWhittaker,
    /// q-constant term (in x, t)
    HallLittlewood,
}

#[derive(Clone, Copy, ValueEnum)]
enum StatArg {
    Inv,
    Quinv,
}

impl From<StatArg> for Statistic {
    fn from(s: StatArg) -> Statistic {
        match s {
            StatArg::Inv => Statistic::Inv,
            StatArg::Quinv => Statistic::Quinv,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum RouteArg {
    Extract,
    InvSum,
    QuinvSum,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    HhlEquality,
    Symmetry,
    Whittaker,
    HallLittlewood,
    ChargeEquiv,
    Uniqueness,
    Conjecture,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Suite {
        match s {
            SuiteArg::HhlEquality => Suite::HhlEquality,
            SuiteArg::Symmetry => Suite::Symmetry,
            SuiteArg::Whittaker => Suite::Whittaker,
            SuiteArg::HallLittlewood => Suite::HallLittlewood,
            SuiteArg::ChargeEquiv => Suite::ChargeEquiv,
            SuiteArg::Uniqueness => Suite::Uniqueness,
            SuiteArg::Conjecture => Suite::Conjecture,
        }
    }
}

/// Desk-scale ceilings. Enumeration costs grow as alphabet^cells, so
/// requests beyond the ceiling are refused with a cost estimate; the
/// ceilings themselves are capped.
#[derive(Args, Clone, Copy)]
struct LimitArgs {
    /// Ceiling on cells of the shape (hard cap 10)
    #[arg(long, default_value_t = 7)]
    limit_cells: usize,
    /// Ceiling on the alphabet size (hard cap 5)
    #[arg(long, default_value_t = 4)]
    limit_alphabet: u32,
    /// Ceiling on word length for charge sweeps (hard cap 12)
    #[arg(long, default_value_t = 10)]
    limit_word_len: usize,
}

const HARD_CAP_CELLS: usize = 10;
const HARD_CAP_ALPHABET: u32 = 5;
const HARD_CAP_WORD_LEN: usize = 12;

enum CliError {
    /// Bad input or arguments; exit 2.
    Usage(String),
    /// A verification failure or counterexample; exit 1.
    Failure(String),
}

type CliResult = Result<(), CliError>;

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

impl LimitArgs {
    fn validate(&self) -> CliResult {
        if self.limit_cells > HARD_CAP_CELLS {
            return Err(usage(format!(
                "--limit-cells {} exceeds the hard cap {HARD_CAP_CELLS}",
                self.limit_cells
            )));
        }
        if self.limit_alphabet > HARD_CAP_ALPHABET {
            return Err(usage(format!(
                "--limit-alphabet {} exceeds the hard cap {HARD_CAP_ALPHABET}",
                self.limit_alphabet
            )));
        }
        if self.limit_word_len > HARD_CAP_WORD_LEN {
            return Err(usage(format!(
                "--limit-word-len {} exceeds the hard cap {HARD_CAP_WORD_LEN}",
                self.limit_word_len
            )));
        }
        Ok(())
    }

    fn check_enumeration(&self, cells: usize, alphabet: u32) -> CliResult {
        self.validate()?;
        if alphabet == 0 {
            return Err(usage("alphabet must be at least 1"));
        }
        let cost = (alphabet as u128).pow(cells.min(64) as u32);
        if cells > self.limit_cells {
            return Err(usage(format!(
                "{cells} cells exceeds the ceiling {} (raise with --limit-cells, hard cap {HARD_CAP_CELLS}); \
                 this request would enumerate {alphabet}^{cells} = {cost} fillings",
                self.limit_cells
            )));
        }
        if alphabet > self.limit_alphabet {
            return Err(usage(format!(
                "alphabet {alphabet} exceeds the ceiling {} (raise with --limit-alphabet, hard cap {HARD_CAP_ALPHABET}); \
                 this request would enumerate {alphabet}^{cells} = {cost} fillings",
                self.limit_alphabet
            )));
        }
        Ok(())
    }

    fn check_word_len(&self, len: usize, max_letter: u32) -> CliResult {
        self.validate()?;
        if len > self.limit_word_len {
            let cost = (max_letter as u128).pow(len.min(64) as u32);
            return Err(usage(format!(
                "word length {len} exceeds the ceiling {} (raise with --limit-word-len, hard cap {HARD_CAP_WORD_LEN}); \
                 this request would scan up to {max_letter}^{len} = {cost} words",
                self.limit_word_len
            )));
        }
        if max_letter > self.limit_alphabet {
            return Err(usage(format!(
                "letter bound {max_letter} exceeds the ceiling {} (raise with --limit-alphabet, hard cap {HARD_CAP_ALPHABET})",
                self.limit_alphabet
            )));
        }
        Ok(())
    }
}

fn parse_shape(s: &str) -> Result<Partition, String> {
    let parts: Result<Vec<usize>, _> = s
        .split(',')
        .filter(|t| !t.is_empty())
        .map(|t| t.trim().parse::<usize>())
        .collect();
    let parts = parts.map_err(|e| format!("bad shape {s:?}: {e}"))?;
    Partition::new(parts).map_err(|e| e.to_string())
}

fn read_input(path: &Path) -> Result<String, CliError> {
    if path.as_os_str() == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| usage(format!("reading stdin: {e}")))?;
        Ok(buf)
    } else {
        fs::read_to_string(path).map_err(|e| usage(format!("reading {}: {e}", path.display())))
    }
}

fn read_filling(path: &Path) -> Result<Filling, CliError> {
    let text = read_input(path)?;
    serde_json::from_str(&text).map_err(|e| usage(format!("parsing {}: {e}", path.display())))
}

/// Filling object, word array, or compact digit string.
enum StatsInput {
    Filling(Filling),
    Word(Word),
}

fn read_stats_input(path: &Path) -> Result<StatsInput, CliError> {
    let text = read_input(path)?;
    let trimmed = text.trim();
    if trimmed.starts_with('{') {
        return serde_json::from_str(trimmed)
            .map(StatsInput::Filling)
            .map_err(|e| usage(format!("parsing {}: {e}", path.display())));
    }
    if trimmed.starts_with('[') {
        return serde_json::from_str(trimmed)
            .map(StatsInput::Word)
            .map_err(|e| usage(format!("parsing {}: {e}", path.display())));
    }
    if !trimmed.is_empty() && trimmed.bytes().all(|b| b.is_ascii_digit()) {
        let letters: Vec<u32> = trimmed.bytes().map(|b| u32::from(b - b'0')).collect();
        return Word::new(letters)
            .map(StatsInput::Word)
            .map_err(|e| usage(format!("parsing {}: {e}", path.display())));
    }
    Err(usage(format!(
        "parsing {}: expected a filling object, a word array, or a digit string",
        path.display()
    )))
}

fn read_rows(path: &Path) -> Result<Vec<Vec<u32>>, CliError> {
    let text = read_input(path)?;
    serde_json::from_str(&text).map_err(|e| usage(format!("parsing {}: {e}", path.display())))
}

fn write_output(out: Option<&Path>, content: &str) -> CliResult {
    match out {
        None => {
            print!("{content}");
            Ok(())
        }
        Some(path) => {
            fs::write(path, content).map_err(|e| usage(format!("writing {}: {e}", path.display())))
        }
    }
}

fn cmd_stats(file: &Path, order: CellOrder) -> CliResult {
    let f = match read_stats_input(file)? {
        StatsInput::Filling(f) => f,
        StatsInput::Word(w) => return word_stats(&w),
    };
    let mut out = String::new();
    out.push_str(&format!("shape {}\n", f.shape()));
    out.push_str(&format!("content {}\n", f.content()));
    let des: Vec<String> = f.descents().iter().map(|c| c.to_string()).collect();
    out.push_str(&format!("des [{}]\n", des.join(",")));
    out.push_str(&format!("maj {}\n", f.maj()));
    out.push_str(&format!("inv {}\n", f.inv()));
    out.push_str(&format!("quinv {}\n", f.quinv()));
    let cw = cocharge_word(&f, order);
    let w = charge_word(&f, order);
    out.push_str(&format!("cw {cw}\n"));
    out.push_str(&format!("w {w}\n"));
    out.push_str(&format!(
        "charge {}\n",
        charge(&w, ChargeMethod::Classical).map_err(|e| usage(e.to_string()))?
    ));
    out.push_str(&format!(
        "cocharge {}\n",
        cocharge(&cw).map_err(|e| usage(e.to_string()))?
    ));
    print!("{out}");
    Ok(())
}

fn word_stats(w: &Word) -> CliResult {
    let mut out = String::new();
    out.push_str(&format!("word {w}\n"));
    out.push_str(&format!("content {}\n", w.content()));
    let classical = ls_decompose(w).map_err(|e| usage(e.to_string()))?;
    let killpatrick = killpatrick_decompose(w).map_err(|e| usage(e.to_string()))?;
    let render = |d: &macfill::charge::Decomposition| {
        d.subwords
            .iter()
            .map(|s| s.to_string())
            .collect::<Vec<_>>()
            .join(",")
    };
    out.push_str(&format!("subwords-classical [{}]\n", render(&classical)));
    out.push_str(&format!(
        "subwords-killpatrick [{}]\n",
        render(&killpatrick)
    ));
    out.push_str(&format!(
        "charge {}\n",
        charge(w, ChargeMethod::Classical).map_err(|e| usage(e.to_string()))?
    ));
    out.push_str(&format!(
        "cocharge {}\n",
        cocharge(w).map_err(|e| usage(e.to_string()))?
    ));
    print!("{out}");
    Ok(())
}

fn cmd_build(kind: BuildKind, shape: &Partition, file: &Path) -> CliResult {
    let rows = read_rows(file)?;
    let built = match kind {
        BuildKind::InvMax | BuildKind::QuinvMax => {
            let sets = RowSets::new(rows).map_err(|e| usage(e.to_string()))?;
            match kind {
                BuildKind::InvMax => build_inv_max(shape, &sets),
                _ => build_quinv_max(shape, &sets),
            }
        }
        BuildKind::InvZero | BuildKind::QuinvZero => {
            let multisets = RowMultisets::new(rows).map_err(|e| usage(e.to_string()))?;
            match kind {
                BuildKind::InvZero => build_inv_zero(shape, &multisets),
                _ => build_quinv_zero(shape, &multisets),
            }
        }
    }
    .map_err(|e| usage(e.to_string()))?;
    println!("{built}");
    println!("maj {}", built.maj());
    match kind {
        BuildKind::InvMax => println!(
            "charge {}",
            charge(
                &charge_word(&built, CellOrder::Standard),
                ChargeMethod::Classical
            )
            .unwrap()
        ),
        BuildKind::QuinvMax => println!(
            "charge {}",
            charge(
                &charge_word(&built, CellOrder::Primed),
                ChargeMethod::Classical
            )
            .unwrap()
        ),
        BuildKind::InvZero => println!(
            "cocharge {}",
            cocharge(&cocharge_word(&built, CellOrder::Standard)).unwrap()
        ),
        BuildKind::QuinvZero => println!(
            "cocharge {}",
            cocharge(&cocharge_word(&built, CellOrder::Primed)).unwrap()
        ),
    }
    Ok(())
}

fn cmd_map(kind: MapKind, file: &Path) -> CliResult {
    let f = read_filling(file)?;
    let mapped = match kind {
        MapKind::Phi => phi(&f),
        MapKind::Varphi => varphi(&f),
    }
    .map_err(|e| usage(e.to_string()))?;
    println!("{mapped}");
    println!("maj {}", mapped.maj());
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn cmd_poly(
    shape: &Partition,
    alphabet: u32,
    kind: PolyKind,
    stat: Statistic,
    route: RouteArg,
    threads: usize,
    out: Option<&Path>,
    limits: &LimitArgs,
) -> CliResult {
    limits.check_enumeration(shape.size(), alphabet)?;
    let poly: MultiPoly = match kind {
        PolyKind::Macdonald => macdonald_poly(shape, alphabet, stat, threads),
        PolyKind::QWhittaker => {
            let route = match route {
                RouteArg::Extract => WhittakerRoute::Extract,
                RouteArg::InvSum => WhittakerRoute::InvMaxSum,
                RouteArg::QuinvSum => WhittakerRoute::QuinvMaxSum,
            };
            q_whittaker(shape, alphabet, route, threads)
        }
        PolyKind::HallLittlewood => {
            let route = match route {
                RouteArg::Extract => HallLittlewoodRoute::Extract,
                RouteArg::InvSum => HallLittlewoodRoute::InvZeroSum,
                RouteArg::QuinvSum => HallLittlewoodRoute::QuinvZeroSum,
            };
            modified_hall_littlewood(shape, alphabet, route, threads)
        }
    };
    write_output(out, &poly.to_text())
}

#[derive(Serialize)]
struct ProfileLine<'a> {
    rows: &'a [Vec<u32>],
    maj: usize,
    stat: usize,
    count: u64,
}

fn cmd_profile(
    shape: &Partition,
    alphabet: u32,
    stat: Statistic,
    threads: usize,
    out: Option<&Path>,
    limits: &LimitArgs,
) -> CliResult {
    limits.check_enumeration(shape.size(), alphabet)?;
    let profile = stat_profile(shape, alphabet, stat, threads);
    let mut text = String::new();
    for (key, &count) in profile.entries() {
        let line = ProfileLine {
            rows: &key.rows,
            maj: key.maj,
            stat: key.stat,
            count,
        };
        text.push_str(&serde_json::to_string(&line).expect("profile keys serialize"));
        text.push('\n');
    }
    write_output(out, &text)
}

fn cmd_match(
    shape: &Partition,
    alphabet: u32,
    out: Option<&Path>,
    limits: &LimitArgs,
) -> CliResult {
    limits.check_enumeration(shape.size(), alphabet)?;
    match conjecture_match(shape, alphabet) {
        Ok(pairs) => {
            let mut text = String::new();
            for pair in &pairs {
                text.push_str(&serde_json::to_string(pair).expect("pairs serialize"));
                text.push('\n');
            }
            write_output(out, &text)?;
            eprintln!(
                "matched {} of {} fillings",
                pairs.len(),
                filling_count(shape, alphabet)
            );
            Ok(())
        }
        Err(e) => Err(CliError::Failure(e.to_string())),
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_verify(
    suite: Suite,
    shape: Option<Partition>,
    max_cells: usize,
    alphabet: u32,
    max_word_len: usize,
    max_letter: u32,
    threads: usize,
    limits: &LimitArgs,
) -> CliResult {
    match suite {
        Suite::ChargeEquiv => limits.check_word_len(max_word_len, max_letter)?,
        _ => {
            let cells = shape.as_ref().map_or(max_cells, Partition::size);
            limits.check_enumeration(cells, alphabet)?;
        }
    }
    let opts = VerifyOptions {
        max_cells,
        alphabet,
        max_word_len,
        max_letter,
        shape,
        threads,
    };
    let report = run_suite(suite, &opts);
    print!("{}", report.render());
    if report.passed() {
        Ok(())
    } else {
        Err(CliError::Failure(format!(
            "{} failed {} of {} checks",
            suite, report.failures, report.checks
        )))
    }
}

fn run(cli: Cli) -> CliResult {
    match cli.command {
        Command::Stats { file, order } => cmd_stats(&file, order.into()),
        Command::Build { kind, shape, file } => cmd_build(kind, &shape, &file),
        Command::Map { kind, file } => cmd_map(kind, &file),
        Command::Poly {
            shape,
            alphabet,
            kind,
            stat,
            route,
            threads,
            out,
            limits,
        } => cmd_poly(
            &shape,
            alphabet,
            kind,
            stat.into(),
            route,
            threads,
            out.as_deref(),
            &limits,
        ),
        Command::Profile {
            shape,
            alphabet,
            stat,
            threads,
            out,
            limits,
        } => cmd_profile(
            &shape,
            alphabet,
            stat.into(),
            threads,
            out.as_deref(),
            &limits,
        ),
        Command::Match {
            shape,
            alphabet,
            out,
            limits,
        } => cmd_match(&shape, alphabet, out.as_deref(), &limits),
        Command::Verify {
            suite,
            shape,
            max_cells,
            alphabet,
            max_word_len,
            max_letter,
            threads,
            limits,
        } => cmd_verify(
            suite.into(),
            shape,
            max_cells,
            alphabet,
            max_word_len,
            max_letter,
            threads,
            &limits,
        ),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // clap renders its own message; --help and --version exit 0
            e.exit();
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Failure(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
