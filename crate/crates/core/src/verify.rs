//! Brute-force oracle and exhaustive audits.
//!
//! [`enumerate_range`] generates words by plain recursion and sorts them, so it
//! shares nothing with the completion-count arithmetic behind
//! [`rank`](crate::rowindex::rank) and [`unrank`](crate::rowindex::unrank).
//! Every audit compares the library against that oracle or against its own
//! index polynomials and returns an [`AuditReport`]. Audits of conjectured
//! identities never panic on a counterexample; they report it.
//!
//! Audits split into units (usually one range each) that can be run on any
//! number of workers and merged with [`AuditReport::merge`].

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;

use crate::bigcomb::{motzkin, unique_count, BigNat};
use crate::blockops::{add, decompose_sum, sub};
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::nav::{self, DeltaReport, Direction};
use crate::rowindex::{compare, rank, unrank, Index};
use crate::word::{MotzkinWord, Symbol};

/// All canonical `n`-words in row order, by generate-and-sort.
pub fn enumerate_range(n: usize, limits: &Limits) -> Result<Vec<MotzkinWord>> {
    if n == 0 {
        return Err(Error::Argument("ranges are numbered from 1".into()));
    }
    limits.check_range(n)?;
    if n == 1 {
        return Ok(vec![MotzkinWord::zero()]);
    }
    fn grow(prefix: &mut Vec<Symbol>, depth: usize, n: usize, out: &mut Vec<Vec<Symbol>>) {
        if prefix.len() == n {
            if depth == 0 {
                out.push(prefix.clone());
            }
            return;
        }
        for s in [Symbol::Close, Symbol::Open, Symbol::Zero] {
            if prefix.is_empty() && s == Symbol::Zero {
                continue;
            }
            let Some(next) = s.step(depth) else { continue };
            prefix.push(s);
            grow(prefix, next, n, out);
            prefix.pop();
        }
    }
    let mut raw = Vec::new();
    grow(&mut Vec::with_capacity(n), 0, n, &mut raw);
    raw.sort_unstable();
    Ok(raw.into_iter().map(MotzkinWord::from_valid).collect())
}

/// Integer sequences regenerated by the library.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SequenceName {
    /// `M_0, M_1, ...`
    Motzkin,
    /// `U_1, U_2, ...`
    Unique,
    /// `xi_1, xi_2, ...`
    Xi,
    /// `zeta_{2,3}, zeta_{3,4}, ...`
    ZetaAdjacent,
    /// `psi_2, psi_3, ...`
    Psi,
}

impl SequenceName {
    pub const ALL: [SequenceName; 5] = [
        SequenceName::Motzkin,
        SequenceName::Unique,
        SequenceName::Xi,
        SequenceName::ZetaAdjacent,
        SequenceName::Psi,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SequenceName::Motzkin => "motzkin",
            SequenceName::Unique => "unique",
            SequenceName::Xi => "xi",
            SequenceName::ZetaAdjacent => "zeta_adjacent",
            SequenceName::Psi => "psi",
        }
    }
}

impl FromStr for SequenceName {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        SequenceName::ALL
            .into_iter()
            .find(|s| s.name() == text)
            .ok_or_else(|| Error::UnknownSequence(text.into()))
    }
}

/// The first `count` terms of a sequence.
pub fn sequence(name: SequenceName, count: usize) -> Result<Vec<BigNat>> {
    if count == 0 {
        return Err(Error::Argument("a sequence needs at least one term".into()));
    }
    (0..count)
        .map(|i| match name {
            SequenceName::Motzkin => Ok(motzkin(i)),
            SequenceName::Unique => unique_count(i + 1),
            SequenceName::Xi => nav::xi(i + 1),
            SequenceName::ZetaAdjacent => nav::zeta(i + 2, i + 3),
            SequenceName::Psi => nav::psi(i + 2),
        })
        .collect()
}

/// Named exhaustive checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Check {
    /// `unrank` and `rank` against the oracle listing.
    RankRoundtrip,
    /// Row order against index order for every pair within each range.
    OrderAgreement,
    /// Index of a word equals the sum over its extended blocks.
    BlockAdditivity,
    /// Opening-bracket drift polynomial at every site.
    OpenDrift,
    /// Closing-bracket drift polynomial at every site.
    CloseDrift,
    /// Pair removal and insertion polynomial at every site.
    PairRemoval,
    /// Contact merge drops the index by `M_k` at every site.
    ContactMerge,
    /// Swap across a zero measures the same `psi_k` at every site.
    PsiSiteIndependence,
    /// Landmark words rank to their closed-form indexes.
    ControlPoints,
    /// Replays the published worked examples.
    WorkedExamples,
}

impl Check {
    pub const ALL: [Check; 10] = [
        Check::RankRoundtrip,
        Check::OrderAgreement,
        Check::BlockAdditivity,
        Check::OpenDrift,
        Check::CloseDrift,
        Check::PairRemoval,
        Check::ContactMerge,
        Check::PsiSiteIndependence,
        Check::ControlPoints,
        Check::WorkedExamples,
    ];

    /// Stable external name, as accepted on the command line.
    pub fn name(self) -> &'static str {
        match self {
            Check::RankRoundtrip => "rank_roundtrip",
            Check::OrderAgreement => "order_agreement",
            Check::BlockAdditivity => "theorem_2_4",
            Check::OpenDrift => "corollary_3_1",
            Check::CloseDrift => "corollary_3_3",
            Check::PairRemoval => "corollary_4_1",
            Check::ContactMerge => "conjecture_4_3",
            Check::PsiSiteIndependence => "psi_site_independence",
            Check::ControlPoints => "table_1",
            Check::WorkedExamples => "paper_examples",
        }
    }

    /// Whether the checked property is unproved, so agreement is evidence only.
    pub fn is_conjecture(self) -> bool {
        matches!(self, Check::ContactMerge | Check::PsiSiteIndependence)
    }

    /// What `AuditReport::checked` counts.
    pub fn unit_label(self) -> &'static str {
        match self {
            Check::RankRoundtrip | Check::BlockAdditivity => "words",
            Check::OrderAgreement => "pairs",
            Check::ControlPoints => "points",
            Check::WorkedExamples => "cases",
            _ => "sites",
        }
    }

    fn first_range(self) -> usize {
        match self {
            Check::BlockAdditivity => 2,
            Check::ControlPoints => 5,
            _ => 1,
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == text)
            .ok_or_else(|| Error::UnknownCheck(text.into()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Outcome {
    Pass,
    Fail,
    ConjectureHolds,
}

impl Outcome {
    pub fn name(self) -> &'static str {
        match self {
            Outcome::Pass => "pass",
            Outcome::Fail => "fail",
            Outcome::ConjectureHolds => "conjecture-holds",
        }
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One disagreement found by an audit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub word: MotzkinWord,
    pub site: Vec<usize>,
    pub predicted: BigInt,
    pub verified: BigInt,
    pub note: String,
}

impl Counterexample {
    fn from_report(r: &DeltaReport, note: &str) -> Self {
        Counterexample {
            word: r.before.clone(),
            site: r.site.clone(),
            predicted: r.predicted.clone(),
            verified: r.verified.clone(),
            note: note.into(),
        }
    }

    fn failed(word: &MotzkinWord, site: Vec<usize>, err: &Error) -> Self {
        Counterexample {
            word: word.clone(),
            site,
            predicted: BigInt::zero(),
            verified: BigInt::zero(),
            note: format!("operation failed: {err}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuditReport {
    pub check: Check,
    /// Largest range (or `k`) examined.
    pub scope: usize,
    pub outcome: Outcome,
    pub counterexamples: Vec<Counterexample>,
    /// Number of items examined, in units of [`Check::unit_label`].
    pub checked: u64,
}

impl AuditReport {
    fn new(check: Check, scope: usize, checked: u64, counterexamples: Vec<Counterexample>) -> Self {
        let outcome = match (counterexamples.is_empty(), check.is_conjecture()) {
            (false, _) => Outcome::Fail,
            (true, true) => Outcome::ConjectureHolds,
            (true, false) => Outcome::Pass,
        };
        AuditReport { check, scope, outcome, counterexamples, checked }
    }

    /// Combines per-unit reports of one check. Counterexamples come out sorted by
    /// word in row order, then by site, whatever order the parts arrive in.
    pub fn merge(check: Check, scope: usize, parts: impl IntoIterator<Item = AuditReport>) -> Self {
        let mut checked = 0;
        let mut counterexamples = Vec::new();
        for part in parts {
            debug_assert_eq!(part.check, check);
            checked += part.checked;
            counterexamples.extend(part.counterexamples);
        }
        counterexamples.sort_by(|a, b| {
            compare(&a.word, &b.word).then_with(|| a.site.cmp(&b.site)).then_with(|| a.note.cmp(&b.note))
        });
        AuditReport::new(check, scope, checked, counterexamples)
    }

    pub fn passed(&self) -> bool {
        self.outcome != Outcome::Fail
    }
}

/// Independent units of `check` up to `max_scope`, in a fixed order.
pub fn audit_units(check: Check, max_scope: usize) -> Vec<usize> {
    match check {
        Check::WorkedExamples => vec![0],
        _ => (check.first_range()..=max_scope).collect(),
    }
}

fn check_scope(check: Check, max_scope: usize, limits: &Limits) -> Result<()> {
    match check {
        Check::WorkedExamples => Ok(()),
        Check::ControlPoints if max_scope < 5 => {
            Err(Error::Argument("control points start at range 5".into()))
        }
        Check::ControlPoints => Ok(()),
        _ if max_scope == 0 => Err(Error::Argument("scope must be at least 1".into())),
        _ => limits.check_range(max_scope),
    }
}

/// Runs the whole audit on the calling thread.
pub fn audit(check: Check, max_scope: usize, limits: &Limits) -> Result<AuditReport> {
    check_scope(check, max_scope, limits)?;
    let parts = audit_units(check, max_scope)
        .into_iter()
        .map(|unit| audit_unit(check, unit, max_scope, limits))
        .collect::<Result<Vec<_>>>()?;
    Ok(AuditReport::merge(check, max_scope, parts))
}

/// Runs one unit of an audit; `unit` comes from [`audit_units`].
pub fn audit_unit(check: Check, unit: usize, max_scope: usize, limits: &Limits) -> Result<AuditReport> {
    check_scope(check, max_scope, limits)?;
    let mut tally = Tally::default();
    match check {
        Check::RankRoundtrip => roundtrip(unit, limits, &mut tally)?,
        Check::OrderAgreement => order_agreement(unit, limits, &mut tally)?,
        Check::BlockAdditivity => {
            for w in enumerate_range(unit, limits)? {
                let (_, total) = decompose_sum(&w)?;
                let direct = rank(&w);
                tally.expect(total == direct, || Counterexample {
                    word: w.clone(),
                    site: Vec::new(),
                    predicted: BigInt::from(total.into_inner()),
                    verified: BigInt::from(direct.into_inner()),
                    note: "sum over extended blocks".into(),
                });
            }
        }
        Check::OpenDrift => {
            for w in enumerate_range(unit, limits)? {
                open_drift_sites(&w, max_scope, &mut tally);
            }
        }
        Check::CloseDrift => {
            for w in enumerate_range(unit, limits)? {
                close_drift_sites(&w, &mut tally);
            }
        }
        Check::PairRemoval => {
            for w in enumerate_range(unit, limits)? {
                pair_sites(&w, &mut tally);
            }
        }
        Check::ContactMerge => {
            for w in enumerate_range(unit, limits)? {
                for (k1, k) in contacts(&w, 1) {
                    tally.site(&w, vec![k1, k], nav::merge_adjacent(&w, k), "contact merge");
                }
            }
        }
        Check::PsiSiteIndependence => {
            for w in enumerate_range(unit, limits)? {
                for (k2, k) in contacts(&w, 2) {
                    tally.site(&w, vec![k2, k], nav::swap_across_zero(&w, k), "swap across zero");
                }
            }
        }
        Check::ControlPoints => {
            let points = nav::control_points(unit)?;
            for p in &points {
                tally.expect(p.rank_matches(), || Counterexample {
                    word: p.word.clone(),
                    site: Vec::new(),
                    predicted: BigInt::from(p.index.value().clone()),
                    verified: BigInt::from(rank(&p.word).into_inner()),
                    note: format!("control point {} of range {unit}", p.name),
                });
            }
            let ordered = points.windows(2).all(|pair| pair[0].index < pair[1].index);
            if !ordered {
                tally.fail(Counterexample {
                    word: points[0].word.clone(),
                    site: Vec::new(),
                    predicted: BigInt::zero(),
                    verified: BigInt::zero(),
                    note: format!("control points of range {unit} are not in increasing order"),
                });
            }
        }
        Check::WorkedExamples => worked_examples(&mut tally)?,
    }
    Ok(AuditReport::new(check, max_scope, tally.checked, tally.counterexamples))
}

#[derive(Default)]
struct Tally {
    checked: u64,
    counterexamples: Vec<Counterexample>,
}

impl Tally {
    fn expect(&mut self, ok: bool, counterexample: impl FnOnce() -> Counterexample) {
        self.checked += 1;
        if !ok {
            self.counterexamples.push(counterexample());
        }
    }

    fn fail(&mut self, counterexample: Counterexample) {
        self.counterexamples.push(counterexample);
    }

    fn site(&mut self, w: &MotzkinWord, site: Vec<usize>, result: Result<DeltaReport>, note: &str) {
        self.checked += 1;
        match result {
            Ok(r) if r.agrees() => {}
            Ok(r) => self.counterexamples.push(Counterexample::from_report(&r, note)),
            Err(e) => self.counterexamples.push(Counterexample::failed(w, site, &e)),
        }
    }
}

fn range_base(n: usize) -> BigUint {
    if n == 1 {
        BigUint::zero()
    } else {
        motzkin(n - 1)
    }
}

fn roundtrip(n: usize, limits: &Limits, tally: &mut Tally) -> Result<()> {
    let base = range_base(n);
    for (i, w) in enumerate_range(n, limits)?.into_iter().enumerate() {
        let expected = Index::new(&base + BigUint::from(i));
        let back = unrank(&expected);
        let measured = rank(&w);
        tally.expect(back == w && measured == expected, || Counterexample {
            word: w.clone(),
            site: Vec::new(),
            predicted: BigInt::from(expected.into_inner()),
            verified: BigInt::from(measured.into_inner()),
            note: format!("unrank gave {back}"),
        });
    }
    Ok(())
}

fn order_agreement(n: usize, limits: &Limits, tally: &mut Tally) -> Result<()> {
    let words = enumerate_range(n, limits)?;
    let ranks: Vec<Index> = words.iter().map(rank).collect();
    let (lo, hi) = (range_base(n), motzkin(n));
    for (w, r) in words.iter().zip(&ranks) {
        // ranks confined to [M_{n-1}, M_n) settle every cross-range pair at once
        let inside = *r.value() >= lo && *r.value() < hi;
        tally.expect(inside, || Counterexample {
            word: w.clone(),
            site: Vec::new(),
            predicted: BigInt::from(lo.clone()),
            verified: BigInt::from(r.value().clone()),
            note: "index outside its range".into(),
        });
    }
    let sign = |o: Ordering| BigInt::from(o as i8);
    for i in 0..words.len() {
        for j in 0..words.len() {
            let by_word = compare(&words[i], &words[j]);
            let by_rank = ranks[i].cmp(&ranks[j]);
            tally.expect(by_word == by_rank, || Counterexample {
                word: words[i].clone(),
                site: Vec::new(),
                predicted: sign(by_word),
                verified: sign(by_rank),
                note: format!("against {}", words[j]),
            });
        }
    }
    Ok(())
}

/// Pairs `(k + gap, k)` where an outer block closes at `k + gap` and the next opens at `k`.
fn contacts(w: &MotzkinWord, gap: usize) -> Vec<(usize, usize)> {
    w.outer_blocks()
        .windows(2)
        .filter(|pair| pair[0].close == pair[1].open + gap)
        .map(|pair| (pair[0].close, pair[1].open))
        .collect()
}

/// Every left shift until the zero run ends (virtual zeros up to `max_len`) and
/// every right shift within the block's leading zero run.
fn open_drift_sites(w: &MotzkinWord, max_len: usize, tally: &mut Tally) {
    for block in w.outer_blocks() {
        let k = block.open;
        let mut j = 1;
        while k + j <= max_len.max(w.len()) && w.symbol_at(k + j) == Symbol::Zero {
            let shift = j as i64;
            tally.site(w, vec![k, k + j], nav::shift_open_measured(w, k, shift), "open drift");
            j += 1;
        }
        let mut j = 1;
        while j < k && w.symbol_at(k - j) == Symbol::Zero {
            let shift = -(j as i64);
            tally.site(w, vec![k, k - j], nav::shift_open_measured(w, k, shift), "open drift");
            j += 1;
        }
    }
}

fn close_drift_sites(w: &MotzkinWord, tally: &mut Tally) {
    for block in w.outer_blocks() {
        let k = block.close;
        if w.symbol_at(k + 1) == Symbol::Zero {
            let r = nav::shift_close_measured(w, k, Direction::Left);
            tally.site(w, vec![k + 1, k], r, "close drift left");
        }
        if k >= 2 && w.symbol_at(k - 1) == Symbol::Zero {
            let r = nav::shift_close_measured(w, k, Direction::Right);
            tally.site(w, vec![k, k - 1], r, "close drift right");
        }
    }
}

fn pair_sites(w: &MotzkinWord, tally: &mut Tally) {
    for pair in w.outer_blocks().windows(2) {
        let (l, k) = (pair[0].close, pair[1].open);
        if (k + 1..l).all(|p| w.symbol_at(p) == Symbol::Zero) {
            tally.site(w, vec![l, k], nav::remove_pair_measured(w, k, l), "pair removal");
        }
    }
    // zero runs directly inside an outer block
    let mut run: Vec<usize> = Vec::new();
    let mut runs = Vec::new();
    for p in (1..=w.len()).rev() {
        if w.symbol_at(p) == Symbol::Zero && w.depth_before(p) == 1 {
            run.push(p);
        } else if !run.is_empty() {
            runs.push(core::mem::take(&mut run));
        }
    }
    if !run.is_empty() {
        runs.push(run);
    }
    for run in runs {
        for (a, &l) in run.iter().enumerate() {
            for &k in &run[a + 1..] {
                tally.site(w, vec![l, k], nav::insert_pair_measured(w, k, l), "pair insertion");
            }
        }
    }
}

fn word(text: &str) -> MotzkinWord {
    text.parse().expect("worked example words are well formed")
}

/// One published example: an operation whose measured index change and
/// resulting word are compared with the printed ones.
struct Case {
    label: &'static str,
    before: &'static str,
    after: &'static str,
    delta: i64,
}

fn record_case(tally: &mut Tally, case: &Case, outcome: Result<(MotzkinWord, BigInt)>) {
    let before = word(case.before);
    match outcome {
        Ok((after, delta)) => {
            let expected = BigInt::from(case.delta);
            let ok = after == word(case.after) && delta == expected;
            tally.expect(ok, || Counterexample {
                word: before.clone(),
                site: Vec::new(),
                predicted: expected,
                verified: delta,
                note: format!("{}: got {after}, expected {}", case.label, case.after),
            });
        }
        Err(e) => {
            tally.checked += 1;
            tally.fail(Counterexample::failed(&before, Vec::new(), &e));
        }
    }
}

fn delta_of(r: DeltaReport) -> Result<(MotzkinWord, BigInt)> {
    if !r.agrees() {
        return Err(Error::PolynomialMismatch {
            predicted: format!("{}", r.predicted),
            verified: format!("{}", r.verified),
        });
    }
    Ok((r.after, r.verified))
}

fn index_delta(before: &MotzkinWord, after: &MotzkinWord) -> BigInt {
    BigInt::from(rank(after).into_inner()) - BigInt::from(rank(before).into_inner())
}

fn worked_examples(tally: &mut Tally) -> Result<()> {
    // Block sums and differences: the delta is the index of the result.
    let sums: [(&'static str, &'static str, &'static str, &'static str, i64); 3] = [
        ("736 = 708 + 28", "()0000000", "(0())0", "()0(0())0", 736),
        ("782 = 710 + 72", "()0000(0)", "(0)0000", "()(0)0(0)", 782),
        ("782 = 2 + 780 by grouping", "(0)", "()(0)0000", "()(0)0(0)", 782),
    ];
    for (label, x, y, z, total) in sums {
        let case = Case { label, before: x, after: z, delta: total };
        let outcome = add(&word(x), &word(y)).map(|s| {
            let r = BigInt::from(rank(&s).into_inner());
            (s, r)
        });
        record_case(tally, &case, outcome);
    }
    let differences: [(&'static str, &'static str, &'static str, &'static str, i64); 4] = [
        ("708 = 736 - 28", "()0(0())0", "(0())0", "()0000000", 708),
        ("28 = 736 - 708", "()0(0())0", "()0000000", "(0())0", 28),
        ("710 = 782 - 72", "()(0)0(0)", "(0)0000", "()0000(0)", 710),
        ("72 = 782 - 710", "()(0)0(0)", "()0000(0)", "(0)0000", 72),
    ];
    for (label, x, y, z, total) in differences {
        let case = Case { label, before: x, after: z, delta: total };
        let outcome = sub(&word(x), &word(y)).map(|s| {
            let r = BigInt::from(rank(&s).into_inner());
            (s, r)
        });
        record_case(tally, &case, outcome);
    }
    // Regrouping the three blocks of w_782 = w_2 + w_72 + w_708.
    {
        let (w2, w72, w708) = (word("(0)"), word("(0)0000"), word("()0000000"));
        let groupings: [(&'static str, Result<MotzkinWord>); 3] = [
            ("(2 + 72) + 708", add(&w2, &w72).and_then(|s| add(&s, &w708))),
            ("2 + (72 + 708)", add(&w72, &w708).and_then(|s| add(&w2, &s))),
            ("(2 + 708) + 72", add(&w2, &w708).and_then(|s| add(&s, &w72))),
        ];
        for (label, result) in groupings {
            let case = Case { label, before: "(0)", after: "()(0)0(0)", delta: 782 };
            let outcome = result.map(|s| {
                let r = BigInt::from(rank(&s).into_inner());
                (s, r)
            });
            record_case(tally, &case, outcome);
        }
    }
    // Opening bracket drift (k, shift). The w_742 line is reconstructed by unranking.
    let open_moves: [(&'static str, &'static str, usize, i64, &'static str, i64); 7] = [
        ("w_4 +1", "(00)", 4, 1, "(000)", 5),
        ("w_4 +2", "(00)", 4, 2, "(0000)", 17),
        ("w_21 +1", "(0000)", 6, 1, "(00000)", 30),
        ("w_28 -1", "(0())0", 6, -1, "(())0", -12),
        ("w_50 +2", "()()()", 6, 2, "(00)()()", 106),
        ("w_294 -2", "()(000)0", 6, -2, "()00(0)0", -17),
        ("w_742 +1", "()0((0)0)", 6, 1, "()(0(0)0)", 30),
    ];
    for (label, before, k, shift, after, delta) in open_moves {
        let case = Case { label, before, after, delta };
        record_case(tally, &case, nav::shift_open_measured(&word(before), k, shift).and_then(delta_of));
    }
    // Closing bracket drifting left from k = 5.
    let close_moves: [(&'static str, &'static str, &'static str); 3] = [
        ("w_72 xi_5", "(0)0000", "()00000"),
        ("w_154 xi_5", "(00)(())", "(0)0(())"),
        ("w_658 xi_5", "(()0)(0)0", "(())0(0)0"),
    ];
    for (label, before, after) in close_moves {
        let case = Case { label, before, after, delta: 34 };
        let r = nav::shift_close_measured(&word(before), 5, Direction::Left).and_then(delta_of);
        record_case(tally, &case, r);
    }
    // Pair removal and insertion; three of the four word pairs are reconstructed by unranking.
    let pairs: [(&'static str, &'static str, usize, usize, bool, &'static str, i64); 4] = [
        ("zeta_{4,7}", "()00(())", 4, 7, true, "(0000())", -149),
        ("zeta_{4,5}", "(0)(00())", 4, 5, false, "(0)()(())", 25),
        ("zeta_{5,6}", "(0()00)000", 5, 6, false, "(0())()000", 64),
        ("zeta_{5,7}", "()()0(())0", 5, 7, true, "()(000())0", -154),
    ];
    for (label, before, k, l, remove, after, delta) in pairs {
        let case = Case { label, before, after, delta };
        let w = word(before);
        let r = if remove { nav::remove_pair_measured(&w, k, l) } else { nav::insert_pair_measured(&w, k, l) };
        record_case(tally, &case, r.and_then(delta_of));
    }
    // Merging r = b + a into d drops the index by M_{n-3}.
    for n in 7..=12usize {
        let tail = "0".repeat(n - 7);
        let before = format!("(0)()00{tail}");
        let after = format!("(0())00{tail}");
        let r = nav::merge_adjacent(&word(&before), n - 3)?;
        let expected = -BigInt::from(motzkin(n - 3));
        let ok = r.after == word(&after) && r.verified == expected && r.agrees();
        tally.expect(ok, || Counterexample {
            word: word(&before),
            site: r.site.clone(),
            predicted: expected.clone(),
            verified: r.verified.clone(),
            note: format!("merge r -> d in range {n}"),
        });
    }
    // d -> h in three steps: split, closing drift, swap across a zero.
    let d_to_h: [(&'static str, &'static str, &'static str, usize, i64); 2] = [
        ("w_70 -> w_88", "(0())00", "((0))00", 7, 18),
        ("w_464 -> w_584", "(0())(0)0", "((0))(0)0", 9, 120),
    ];
    for (label, before, after, n, delta) in d_to_h {
        let case = Case { label, before, after, delta };
        let start = word(before);
        let outcome = nav::split_block(&start, n - 3)
            .and_then(|r| nav::shift_close(&r.after, n - 2, Direction::Left))
            .and_then(|r| nav::swap_across_zero(&r.after, n - 3))
            .map(|r| {
                let d = index_delta(&start, &r.after);
                (r.after, d)
            });
        record_case(tally, &case, outcome);
    }
    let case = Case { label: "w_1502 psi_7", before: "((0)(()))0", after: "()0((()))0", delta: 456 };
    record_case(tally, &case, nav::split_across_zero(&word(case.before), 7).and_then(delta_of));
    Ok(())
}

/// Listing of ranges `1..=max_range`, nine words per line, each line led by the
/// zero-padded index of its first word.
pub fn regenerate_addendum(max_range: usize, limits: &Limits) -> Result<String> {
    let mut words = Vec::new();
    for n in 1..=max_range {
        words.extend(enumerate_range(n, limits)?);
    }
    let width = format!("{}", words.len().saturating_sub(1)).len().max(3);
    let mut out = String::new();
    for (line, chunk) in words.chunks(9).enumerate() {
        let listed: Vec<String> = chunk.iter().map(|w| format!("{w}")).collect();
        out.push_str(&format!("{:0width$}: {}\n", line * 9, listed.join(", ")));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn names(words: &[MotzkinWord]) -> Vec<String> {
        words.iter().map(|w| w.to_string()).collect()
    }

    #[test]
    fn small_ranges() {
        let limits = Limits::default();
        assert_eq!(names(&enumerate_range(3, &limits).unwrap()), ["(0)", "()0"]);
        assert_eq!(
            names(&enumerate_range(4, &limits).unwrap()),
            ["(00)", "(0)0", "(())", "()00", "()()"]
        );
        assert_eq!(enumerate_range(10, &limits).unwrap().len(), 2188 - 835);
        assert!(matches!(enumerate_range(16, &limits), Err(Error::Limit { .. })));
    }

    #[test]
    fn sequences() {
        let as_u64 = |v: Vec<BigNat>| -> Vec<u64> { v.iter().map(|x| x.try_into().unwrap()).collect() };
        assert_eq!(as_u64(sequence(SequenceName::Xi, 6).unwrap()), [1, 2, 5, 13, 34, 90]);
        assert_eq!(as_u64(sequence(SequenceName::ZetaAdjacent, 5).unwrap()), [4, 10, 25, 64, 166]);
        assert_eq!(
            as_u64(sequence(SequenceName::Psi, 8).unwrap()),
            [4, 10, 25, 65, 171, 456, 1227, 3328]
        );
        assert_eq!(as_u64(sequence(SequenceName::Motzkin, 5).unwrap()), [1, 1, 2, 4, 9]);
        assert_eq!(as_u64(sequence(SequenceName::Unique, 5).unwrap()), [1, 1, 2, 5, 12]);
        assert!(matches!("catalan".parse::<SequenceName>(), Err(Error::UnknownSequence(_))));
    }

    #[test]
    fn check_names_round_trip() {
        for c in Check::ALL {
            assert_eq!(c.name().parse::<Check>().unwrap(), c);
        }
        assert!(matches!("theorem_9".parse::<Check>(), Err(Error::UnknownCheck(_))));
    }

    #[test]
    fn worked_examples_replay() {
        let r = audit(Check::WorkedExamples, 0, &Limits::default()).unwrap();
        assert_eq!(r.counterexamples, []);
        assert_eq!(r.outcome, Outcome::Pass);
    }

    #[test]
    fn merge_is_order_independent() {
        let limits = Limits::default();
        let units = audit_units(Check::ContactMerge, 7);
        let parts: Vec<AuditReport> =
            units.iter().map(|&u| audit_unit(Check::ContactMerge, u, 7, &limits).unwrap()).collect();
        let forward = AuditReport::merge(Check::ContactMerge, 7, parts.clone());
        let backward = AuditReport::merge(Check::ContactMerge, 7, parts.into_iter().rev());
        assert_eq!(forward, backward);
        assert_eq!(forward, audit(Check::ContactMerge, 7, &limits).unwrap());
        assert_eq!(forward.outcome, Outcome::ConjectureHolds);
    }

    #[test]
    fn failing_report_has_counterexamples() {
        let c = Counterexample {
            word: MotzkinWord::zero(),
            site: vec![1],
            predicted: BigInt::zero(),
            verified: BigInt::from(1),
            note: String::new(),
        };
        let r = AuditReport::merge(Check::OpenDrift, 3, [AuditReport::new(Check::OpenDrift, 3, 1, vec![c])]);
        assert_eq!(r.outcome, Outcome::Fail);
        assert!(!r.passed());
    }

    #[test]
    fn addendum_layout() {
        let text = regenerate_addendum(9, &Limits::default()).unwrap();
        let first = text.lines().next().unwrap();
        assert_eq!(first, "000: 0, (), (0), ()0, (00), (0)0, (()), ()00, ()()");
        assert!(text.lines().all(|l| l.split(", ").count() <= 9));
        assert_eq!(text.lines().count(), 835_usize.div_ceil(9));
    }

    #[test]
    fn scopes_are_validated() {
        let limits = Limits::default();
        assert!(matches!(audit(Check::ControlPoints, 4, &limits), Err(Error::Argument(_))));
        assert!(matches!(audit(Check::RankRoundtrip, 16, &limits), Err(Error::Limit { .. })));
    }
}
