//! `motzkin-row`: rank, unrank and navigate the row of Motzkin words.

mod parallel;
mod report;

use std::io;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use motzkin_row::blockops::{add, decompose_sum, sub};
use motzkin_row::nav::{self, Direction};
use motzkin_row::rowindex::{range_max, range_min};
use motzkin_row::verify::{enumerate_range, regenerate_addendum, sequence, Check, SequenceName};
use motzkin_row::word::parse_with;
use motzkin_row::{compare, predecessor, rank, successor, unrank, Error, Index, Limits, MotzkinWord};

use report::{
    ArithmeticRecord, BlockRecord, Emitter, Format, ListingRecord, OrderingRecord, TermRecord, ValueRecord,
};

const POSITIONS: &str = "Positions K and L are 1-based and counted from the RIGHT end of the word, \
so in \"()0\" position 1 is the '0' and position 3 is the '('. Words may carry leading zeros; \
they are dropped before ranking. Quote words in the shell, or pass --translit and write o, l, r \
for 0, (, ).";

#[derive(Parser)]
#[command(name = "motzkin-row", version, about = "Exact index arithmetic on the row of Motzkin words")]
#[command(after_help = POSITIONS)]
struct Cli {
    /// Output encoding: plain text, or one JSON record per line
    #[arg(long, value_enum, default_value = "plain", global = true)]
    format: Format,

    /// Read and write words in the o/l/r alphabet instead of 0/(/)
    #[arg(long, global = true)]
    translit: bool,

    /// Largest range enumerated by range, audit and addendum
    #[arg(long, env = "MOTZKIN_ENUM_LIMIT", default_value_t = Limits::DEFAULT_ENUMERATION_RANGE, global = true)]
    enum_limit: usize,

    /// Longest word accepted by rank, unrank and the navigation verbs
    #[arg(long, env = "MOTZKIN_MAX_LENGTH", default_value_t = Limits::DEFAULT_WORD_LENGTH, global = true)]
    max_length: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Side {
    Left,
    Right,
}

#[derive(Subcommand)]
enum Command {
    /// Index of a word
    Rank { word: String },
    /// Word at an index
    Unrank { index: String },
    /// Following word in the row
    Next { word: String },
    /// Preceding word in the row
    Prev { word: String },
    /// Compare two words in row order; prints <, = or >
    Cmp { x: String, y: String },
    /// Block sum of two noncrossing words
    Add { x: String, y: String },
    /// Remove the extended blocks of Y from X
    Sub { x: String, y: String },
    /// Extended blocks of a word and their index sum
    Decompose { word: String },
    /// Move the opening bracket at K by SHIFT places (positive moves left)
    #[command(after_help = POSITIONS)]
    ShiftOpen {
        word: String,
        k: usize,
        #[arg(allow_negative_numbers = true)]
        shift: i64,
    },
    /// Move the closing bracket at K one place
    #[command(after_help = POSITIONS)]
    ShiftClose {
        word: String,
        k: usize,
        #[arg(value_enum)]
        direction: Side,
    },
    /// Delete the touching brackets ')' at L and '(' at K and zero the gap
    #[command(after_help = POSITIONS)]
    RemovePair { word: String, k: usize, l: usize },
    /// Write ')' at L and '(' at K into a zero run inside an outer block
    #[command(after_help = POSITIONS)]
    InsertPair { word: String, k: usize, l: usize },
    /// Fuse the outer blocks touching at K + 1, K
    #[command(after_help = POSITIONS)]
    Merge { word: String, k: usize },
    /// Split an outer block at an inner "()" at K + 1, K
    #[command(after_help = POSITIONS)]
    Split { word: String, k: usize },
    /// Swap the facing brackets of ")0(" at K + 2, K + 1, K
    #[command(after_help = POSITIONS)]
    Swap {
        word: String,
        k: usize,
        /// Split "(0)" at K + 2, K + 1, K into ")0(" instead
        #[arg(long)]
        reverse: bool,
    },
    /// Closing-bracket drift polynomial xi(K)
    Xi { k: usize },
    /// Pair-removal polynomial zeta(K, L)
    Zeta { k: usize, l: usize },
    /// Index change of a bracket swap across a zero, psi(K)
    Psi { k: usize },
    /// All words of the N-range in row order
    Range {
        n: usize,
        /// Print only the first and last words
        #[arg(long)]
        bounds: bool,
    },
    /// Landmark words of the N-range with their closed-form indexes
    ControlPoints { n: usize },
    /// First COUNT terms of a sequence
    Seq {
        #[arg(value_parser = ["motzkin", "unique", "xi", "zeta_adjacent", "psi"])]
        name: String,
        count: usize,
    },
    /// Exhaustive check against the enumeration oracle; exit status 3 on a counterexample
    Audit {
        #[arg(value_parser = Check::ALL.map(|c| c.name()))]
        check: String,
        /// Largest range examined
        #[arg(long, default_value_t = 12)]
        max_range: usize,
        /// Worker threads
        #[arg(long, env = "MOTZKIN_WORKERS", default_value_t = 1)]
        workers: usize,
    },
    /// Listing of the first ranges, nine words per line
    Addendum {
        #[arg(long, default_value_t = 9)]
        max_range: usize,
    },
}

enum Failure {
    Domain(Error),
    Io(io::Error),
    Counterexample,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

struct Context {
    limits: Limits,
    alphabet: [char; 3],
}

impl Context {
    fn word(&self, text: &str) -> Result<MotzkinWord, Error> {
        let w = parse_with(text, self.alphabet)?.into_core();
        self.limits.check_word(&w)?;
        Ok(w)
    }

    fn range(&self, n: usize) -> Result<usize, Error> {
        if n == 0 {
            return Err(Error::Argument("ranges are numbered from 1".into()));
        }
        Ok(n)
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let alphabet = if cli.translit { ['o', 'l', 'r'] } else { ['0', '(', ')'] };
    let cx = Context {
        limits: Limits { max_enumeration_range: cli.enum_limit, max_word_length: cli.max_length },
        alphabet,
    };
    let mut out = Emitter::new(io::stdout().lock(), cli.format, alphabet);
    match cli.command {
        Command::Rank { word } => {
            let w = cx.word(&word)?;
            let i = rank(&w).to_string();
            out.emit(&i, &out.word_record(&w))?;
        }
        Command::Unrank { index } => {
            let i: Index = index.trim().parse()?;
            cx.limits.check_index(&i)?;
            let w = unrank(&i);
            out.emit(&out.word(&w), &out.word_record(&w))?;
        }
        Command::Next { word } => {
            let w = successor(&cx.word(&word)?);
            out.emit(&out.word(&w), &out.word_record(&w))?;
        }
        Command::Prev { word } => {
            let w = predecessor(&cx.word(&word)?)?;
            out.emit(&out.word(&w), &out.word_record(&w))?;
        }
        Command::Cmp { x, y } => {
            let ordering = match compare(&cx.word(&x)?, &cx.word(&y)?) {
                std::cmp::Ordering::Less => ("<", "less"),
                std::cmp::Ordering::Equal => ("=", "equal"),
                std::cmp::Ordering::Greater => (">", "greater"),
            };
            out.emit(ordering.0, &OrderingRecord { ordering: ordering.1 })?;
        }
        Command::Add { x, y } => {
            let (x, y) = (cx.word(&x)?, cx.word(&y)?);
            let s = add(&x, &y)?;
            arithmetic(&mut out, "add", '+', &x, &y, &s)?;
        }
        Command::Sub { x, y } => {
            let (x, y) = (cx.word(&x)?, cx.word(&y)?);
            let d = sub(&x, &y)?;
            arithmetic(&mut out, "sub", '-', &x, &y, &d)?;
        }
        Command::Decompose { word } => {
            let (parts, total) = decompose_sum(&cx.word(&word)?)?;
            for p in &parts {
                let block = out.word_record(p);
                out.emit(&format!("{} {}", block.word, block.index), &BlockRecord { block })?;
            }
            let total = total.to_string();
            out.emit(&format!("= {total}"), &ValueRecord { value: total.clone() })?;
        }
        Command::ShiftOpen { word, k, shift } => out.delta(&nav::shift_open(&cx.word(&word)?, k, shift)?)?,
        Command::ShiftClose { word, k, direction } => {
            let direction = match direction {
                Side::Left => Direction::Left,
                Side::Right => Direction::Right,
            };
            out.delta(&nav::shift_close(&cx.word(&word)?, k, direction)?)?
        }
        Command::RemovePair { word, k, l } => out.delta(&nav::remove_pair(&cx.word(&word)?, k, l)?)?,
        Command::InsertPair { word, k, l } => out.delta(&nav::insert_pair(&cx.word(&word)?, k, l)?)?,
        Command::Merge { word, k } => out.delta(&nav::merge_adjacent(&cx.word(&word)?, k)?)?,
        Command::Split { word, k } => out.delta(&nav::split_block(&cx.word(&word)?, k)?)?,
        Command::Swap { word, k, reverse } => {
            let w = cx.word(&word)?;
            let r = if reverse { nav::split_across_zero(&w, k)? } else { nav::swap_across_zero(&w, k)? };
            out.delta(&r)?
        }
        Command::Xi { k } => value(&mut out, nav::xi(k)?)?,
        Command::Zeta { k, l } => value(&mut out, nav::zeta(k, l)?)?,
        Command::Psi { k } => value(&mut out, nav::psi(k)?)?,
        Command::Range { n, bounds } => {
            let n = cx.range(n)?;
            if bounds {
                for (w, _) in [range_min(n)?, range_max(n)?] {
                    let r = out.word_record(&w);
                    out.emit(&format!("{}: {}", r.index, r.word), &r)?;
                }
            } else {
                for w in enumerate_range(n, &cx.limits)? {
                    let r = out.word_record(&w);
                    out.emit(&format!("{}: {}", r.index, r.word), &r)?;
                }
            }
        }
        Command::ControlPoints { n } => {
            for p in nav::control_points(n)? {
                out.control_point(&p)?;
            }
        }
        Command::Seq { name, count } => {
            let name: SequenceName = name.parse()?;
            for (term, v) in sequence(name, count)?.into_iter().enumerate() {
                let value = v.to_string();
                out.emit(&value, &TermRecord { sequence: name.name(), term, value: value.clone() })?;
            }
        }
        Command::Audit { check, max_range, workers } => {
            let check: Check = check.parse()?;
            let report = parallel::audit(check, max_range, &cx.limits, workers.max(1))?;
            out.audit(&report)?;
            out.flush()?;
            if !report.passed() {
                return Err(Failure::Counterexample);
            }
        }
        Command::Addendum { max_range } => {
            let text = regenerate_addendum(max_range, &cx.limits)?;
            for line in text.lines() {
                let (head, rest) = line.split_once(": ").expect("listing lines carry an index");
                let record = ListingRecord {
                    first_index: head.parse().expect("decimal index"),
                    words: rest.split(", ").map(|w| out.word(&w.parse().expect("listed word"))).collect(),
                };
                let plain = if cli.translit { format!("{head}: {}", record.words.join(", ")) } else { line.into() };
                out.emit(&plain, &record)?;
            }
        }
    }
    out.flush()?;
    Ok(())
}

fn arithmetic(
    out: &mut Emitter<io::StdoutLock<'_>>,
    op: &'static str,
    sign: char,
    x: &MotzkinWord,
    y: &MotzkinWord,
    z: &MotzkinWord,
) -> io::Result<()> {
    let record = ArithmeticRecord { op, left: out.word_record(x), right: out.word_record(y), result: out.word_record(z) };
    let plain = format!(
        "{}\n{} {sign} {} = {}",
        record.result.word, record.left.index, record.right.index, record.result.index
    );
    out.emit(&plain, &record)
}

fn value(out: &mut Emitter<io::StdoutLock<'_>>, v: motzkin_row::BigNat) -> io::Result<()> {
    let value = v.to_string();
    out.emit(&value, &ValueRecord { value: value.clone() })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Counterexample) => ExitCode::from(3),
        Err(Failure::Domain(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

