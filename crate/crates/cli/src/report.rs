//! Output records in two encodings: plain text for people and one JSON object
//! per line for scripts. Big integers are always emitted as decimal strings.

use std::io::{self, Write};

use motzkin_row::nav::{Basis, ControlPoint, DeltaReport};
use motzkin_row::rowindex::rank;
use motzkin_row::verify::{AuditReport, Counterexample};
use motzkin_row::MotzkinWord;
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Plain,
    Lines,
}

pub struct Emitter<W: Write> {
    out: W,
    format: Format,
    alphabet: [char; 3],
}

impl<W: Write> Emitter<W> {
    pub fn new(out: W, format: Format, alphabet: [char; 3]) -> Self {
        Emitter { out, format, alphabet }
    }

    pub fn word(&self, w: &MotzkinWord) -> String {
        w.to_string_with(self.alphabet)
    }

    /// Writes `plain` in plain mode, `record` as one JSON line otherwise.
    pub fn emit<R: Serialize>(&mut self, plain: &str, record: &R) -> io::Result<()> {
        match self.format {
            Format::Plain => writeln!(self.out, "{plain}"),
            Format::Lines => {
                serde_json::to_writer(&mut self.out, record)?;
                writeln!(self.out)
            }
        }
    }

    pub fn flush(&mut self) -> io::Result<()> {
        self.out.flush()
    }

    pub fn word_record(&self, w: &MotzkinWord) -> WordRecord {
        WordRecord { word: self.word(w), index: rank(w).to_string() }
    }

    pub fn delta(&mut self, r: &DeltaReport) -> io::Result<()> {
        let record = DeltaRecord {
            before: self.word_record(&r.before),
            after: self.word_record(&r.after),
            predicted: r.predicted.to_string(),
            verified: r.verified.to_string(),
            site: r.site.clone(),
            basis: basis_name(r.basis),
            agrees: r.agrees(),
        };
        let plain = format!(
            "before {} {}\nafter {} {}\npredicted {}\nverified {}\nsite {}\nbasis {}",
            record.before.word,
            record.before.index,
            record.after.word,
            record.after.index,
            record.predicted,
            record.verified,
            join(&record.site),
            record.basis,
        );
        self.emit(&plain, &record)
    }

    pub fn control_point(&mut self, p: &ControlPoint) -> io::Result<()> {
        let record = ControlPointRecord {
            name: p.name,
            word: self.word(&p.word),
            index: p.index.to_string(),
            rank_matches: p.rank_matches(),
        };
        let mark = if record.rank_matches { "" } else { " (rank differs)" };
        let plain = format!("{} {} {}{mark}", record.name, record.word, record.index);
        self.emit(&plain, &record)
    }

    pub fn audit(&mut self, report: &AuditReport) -> io::Result<()> {
        for c in &report.counterexamples {
            self.counterexample(report, c)?;
        }
        let record = AuditRecord {
            kind: "summary",
            check: report.check.name(),
            scope: report.scope,
            outcome: report.outcome.name(),
            checked: report.checked,
            unit: report.check.unit_label(),
            counterexamples: report.counterexamples.len(),
        };
        let plain = format!(
            "{}; {}={}; counterexamples={}",
            record.outcome, record.unit, record.checked, record.counterexamples
        );
        self.emit(&plain, &record)
    }

    fn counterexample(&mut self, report: &AuditReport, c: &Counterexample) -> io::Result<()> {
        let record = CounterexampleRecord {
            kind: "counterexample",
            check: report.check.name(),
            word: self.word(&c.word),
            site: c.site.clone(),
            predicted: c.predicted.to_string(),
            verified: c.verified.to_string(),
            note: c.note.clone(),
        };
        let plain = format!(
            "counterexample {} site {} predicted {} verified {} {}",
            record.word,
            join(&record.site),
            record.predicted,
            record.verified,
            record.note
        );
        self.emit(&plain, &record)
    }
}

fn join(site: &[usize]) -> String {
    let parts: Vec<String> = site.iter().map(|k| k.to_string()).collect();
    if parts.is_empty() {
        "-".into()
    } else {
        parts.join(",")
    }
}

fn basis_name(b: Basis) -> &'static str {
    match b {
        Basis::Theorem => "theorem",
        Basis::Conjecture => "conjecture",
        Basis::Empirical => "empirical",
    }
}

#[derive(Serialize)]
pub struct WordRecord {
    pub word: String,
    pub index: String,
}

#[derive(Serialize)]
pub struct ValueRecord {
    pub value: String,
}

#[derive(Serialize)]
pub struct TermRecord {
    pub sequence: &'static str,
    pub term: usize,
    pub value: String,
}

#[derive(Serialize)]
pub struct OrderingRecord {
    pub ordering: &'static str,
}

#[derive(Serialize)]
pub struct ArithmeticRecord {
    pub op: &'static str,
    pub left: WordRecord,
    pub right: WordRecord,
    pub result: WordRecord,
}

#[derive(Serialize)]
pub struct BlockRecord {
    pub block: WordRecord,
}

#[derive(Serialize)]
pub struct ListingRecord {
    pub first_index: usize,
    pub words: Vec<String>,
}

#[derive(Serialize)]
struct DeltaRecord {
    before: WordRecord,
    after: WordRecord,
    predicted: String,
    verified: String,
    site: Vec<usize>,
    basis: &'static str,
    agrees: bool,
}

#[derive(Serialize)]
struct ControlPointRecord {
    name: &'static str,
    word: String,
    index: String,
    rank_matches: bool,
}

#[derive(Serialize)]
struct AuditRecord {
    kind: &'static str,
    check: &'static str,
    scope: usize,
    outcome: &'static str,
    checked: u64,
    unit: &'static str,
    counterexamples: usize,
}

#[derive(Serialize)]
struct CounterexampleRecord {
    kind: &'static str,
    check: &'static str,
    word: String,
    site: Vec<usize>,
    predicted: String,
    verified: String,
    note: String,
}
