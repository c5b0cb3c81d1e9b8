//! Exhaustive and sampled checks of the calendar's structural theorems.
//!
//! The calendar repeats exactly every [`PERIOD_YEARS`] years: that many years
//! hold a whole number of 19-year cycles whose lunations add up to a whole
//! number of weeks. Every per-year property therefore only needs checking on
//! one period, and each sweep here walks years with [`YearSweep`] so a full
//! period costs a few hundred thousand moment additions.
//!
//! Sweeps may be split into chunks and run on a thread pool. Each chunk seeds
//! its first molad with the summation route and steps from there, and chunk
//! results are merged in year order, so the report does not depend on the
//! number of workers.

mod report;

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::ops::RangeInclusive;
use std::time::Instant;

use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

pub use report::{parse_reports, Counterexample, Property, ReportRecord, VerificationReport};

use crate::conversion::{
    absolute_to_hebrew, days_before_month, days_in_month, hebrew_to_absolute, months_in_order,
    HebrewDate,
};
use crate::new_year::{is_admissible_length, year_length, YearRecord, YearSweep};
use crate::time::{Moment, Weekday, LUNATION, PARTS_PER_DAY, PARTS_PER_WEEK};
use crate::year::{
    delay, is_leap, molad, molad_by_summation, months_before_month, Year, CYCLE_MONTHS, CYCLE_YEARS,
};
use crate::Error;

/// Parts in one 19-year cycle of 235 lunations.
pub const CYCLE_PARTS: u64 = 179_876_755;
/// Cycles after which the moladot return to the same time of the week.
pub const PERIOD_CYCLES: u64 = 36_288;
/// Years in one full period of the calendar.
pub const PERIOD_YEARS: Year = 689_472;
/// Days the molad advances over one full period.
pub const PERIOD_DAYS: u64 = 251_827_457;

/// Years beyond this cannot be swept: the sweep looks one year ahead.
pub const MAX_SWEEP_YEAR: Year = Year::MAX - 2;

// Years whose naive molad the structure sweep recomputes.
const NAIVE_MOLAD_PREFIX: Year = 10_000;
const NAIVE_MOLAD_STRIDE: Year = 997;

const PERIODICITY_SEED: u64 = 0x5782_0907;

/// Years swept by default: one full period starting at year 1.
pub fn full_period() -> RangeInclusive<Year> {
    1..=PERIOD_YEARS
}

fn elapsed_since(start: Instant) -> std::time::Duration {
    start.elapsed()
}

/// Recomputes the period constants from the lunation and the week.
pub fn verify_period_constants() -> VerificationReport {
    let started = Instant::now();
    let mut checks: Vec<(&str, u64, u64)> = Vec::new();

    let cycle_parts = CYCLE_MONTHS * LUNATION.total_parts();
    checks.push(("cycle_parts", cycle_parts, CYCLE_PARTS));
    checks.push(("week_parts", PARTS_PER_WEEK, 181_440));

    let gcd = PARTS_PER_WEEK.gcd(&cycle_parts);
    checks.push(("gcd", gcd, 5));
    let cycles = PARTS_PER_WEEK / gcd;
    checks.push(("n_cycles", cycles, PERIOD_CYCLES));
    checks.push(("n_cycles_factored", cycles, 2u64.pow(6) * 3u64.pow(4) * 7));

    // independent of the gcd: the first multiple of the cycle that is a whole number of weeks
    let least = (1..=PARTS_PER_WEEK)
        .find(|n| (n * cycle_parts).is_multiple_of(PARTS_PER_WEEK))
        .unwrap_or(0);
    checks.push(("least_n_by_search", least, PERIOD_CYCLES));

    checks.push((
        "period_years",
        u64::from(CYCLE_YEARS) * cycles,
        u64::from(PERIOD_YEARS),
    ));

    let period_parts = cycles * cycle_parts;
    checks.push(("period_parts", period_parts, 6_527_367_685_440));
    checks.push(("period_parts_whole_days", period_parts % PARTS_PER_DAY, 0));
    checks.push(("day_delta", period_parts / PARTS_PER_DAY, PERIOD_DAYS));
    checks.push(("day_delta_mod_7", PERIOD_DAYS % 7, 0));
    checks.push(("day_delta_weeks", PERIOD_DAYS / 7, 35_975_351));

    let counterexamples = checks
        .iter()
        .filter(|(_, observed, expected)| observed != expected)
        .map(|(name, observed, expected)| {
            Counterexample::new(
                0,
                format!("{name}:{observed}"),
                format!("{name}:{expected}"),
            )
        })
        .collect();
    let n = checks.len() as u64;
    VerificationReport {
        property: Property::Constants,
        start: 1,
        end: n,
        expected_checks: n,
        checked: n,
        counterexamples,
        realized_keviyot: None,
        elapsed: elapsed_since(started),
    }
}

/// Years 1..=1000 plus 1000 pseudo-random years up to 10⁶, from a fixed seed.
pub fn default_periodicity_samples() -> Vec<Year> {
    let mut rng = ChaCha8Rng::seed_from_u64(PERIODICITY_SEED);
    let mut samples: Vec<Year> = (1..=1000).collect();
    samples.extend((0..1000).map(|_| rng.gen_range(1..=1_000_000)));
    samples
}

/// Checks that each sampled year behaves exactly like the same year one period later.
pub fn verify_periodicity(samples: &[Year]) -> Result<VerificationReport, Error> {
    let started = Instant::now();
    if let Some(&bad) = samples
        .iter()
        .find(|&&y| y == 0 || y > MAX_SWEEP_YEAR - PERIOD_YEARS)
    {
        return Err(Error::InvalidRange {
            start: bad,
            end: bad,
        });
    }
    let shift = Moment::new(PERIOD_DAYS, 0, 0).expect("whole days");
    let mut counterexamples = Vec::new();
    for &year in samples {
        let later = year + PERIOD_YEARS;
        let (a, b) = (molad(year), molad(later));
        let mut fail = |observed: String, expected: String| {
            counterexamples.push(Counterexample::new(u64::from(year), observed, expected));
        };
        match b.checked_sub(a) {
            Some(delta) if delta == shift => {}
            delta => fail(
                format!(
                    "delta:{}",
                    delta.map_or("negative".into(), |d| d.to_string().replace(' ', ""))
                ),
                format!("delta:{}", shift.to_string().replace(' ', "")),
            ),
        }
        if (a.hour(), a.part()) != (b.hour(), b.part()) {
            fail(
                format!("time:{}:{}", b.hour(), b.part()),
                format!("time:{}:{}", a.hour(), a.part()),
            );
        }
        if a.weekday() != b.weekday() {
            fail(
                format!("weekday:{}", b.weekday().code()),
                format!("weekday:{}", a.weekday().code()),
            );
        }
        if is_leap(year) != is_leap(later) {
            fail(
                format!("leap:{}", is_leap(later)),
                format!("leap:{}", is_leap(year)),
            );
        }
        let (len, later_len) = (year_length(year), year_length(later));
        if len != later_len {
            fail(format!("length:{later_len}"), format!("length:{len}"));
        }
    }
    let n = samples.len() as u64;
    let (start, end) = samples.iter().fold((u64::MAX, 0), |(lo, hi), &y| {
        (lo.min(y.into()), hi.max(y.into()))
    });
    Ok(VerificationReport {
        property: Property::Periodicity,
        start: if samples.is_empty() { 0 } else { start },
        end,
        expected_checks: n,
        checked: n,
        counterexamples,
        realized_keviyot: None,
        elapsed: elapsed_since(started),
    })
}

/// Per-chunk results, merged associatively.
#[derive(Debug, Default)]
struct Tally {
    checked: u64,
    counterexamples: Vec<Counterexample>,
    keviyot: BTreeSet<(u8, u16)>,
}

impl Tally {
    fn merge(mut self, other: Tally) -> Tally {
        self.checked += other.checked;
        self.counterexamples.extend(other.counterexamples);
        self.keviyot.extend(other.keviyot);
        self
    }

    fn fail(
        &mut self,
        year: Year,
        observed: impl std::fmt::Display,
        expected: impl std::fmt::Display,
    ) {
        self.counterexamples
            .push(Counterexample::new(u64::from(year), observed, expected));
    }
}

fn length_set(leap: bool) -> &'static str {
    if leap {
        "{383,384,385}"
    } else {
        "{353,354,355}"
    }
}

fn check_year_length(record: &YearRecord, tally: &mut Tally) {
    let leap = record.is_leap();
    if !is_admissible_length(record.length(), leap) {
        tally.fail(record.year, record.length(), length_set(leap));
    }
}

fn permitted_lengths(start: Weekday) -> &'static str {
    match start {
        Weekday::Tuesday => "{354,384}",
        Weekday::Saturday | Weekday::Monday => "{353,355,383,385}",
        Weekday::Thursday => "{354,355,383,385}",
        _ => "{}",
    }
}

fn check_keviyah(record: &YearRecord, tally: &mut Tally) {
    let keviyah = record.keviyah();
    tally.keviyot.insert((keviyah.start.code(), keviyah.length));
    if !keviyah.is_permitted() {
        tally.fail(
            record.year,
            format!("({},{})", keviyah.start.code(), keviyah.length),
            permitted_lengths(keviyah.start),
        );
    }
}

fn check_landau(record: &YearRecord, tally: &mut Tally) {
    let leap = record.is_leap();
    let length = record.length();
    for &month in months_in_order(record.year) {
        let month_molad = record.molad + LUNATION.scale(months_before_month(month, leap));
        let first_of_month =
            record.rosh_hashanah + i64::from(days_before_month(month, length, leap));
        if month_molad.day() as i64 > first_of_month {
            tally.fail(
                record.year,
                format!("month{month}:{}", month_molad.day()),
                format!("<={first_of_month}"),
            );
        }
    }
}

fn check_round_trip(year: Year, month: u8, day: u8, absolute: i64, tally: &mut Tally) {
    let back = absolute_to_hebrew(absolute);
    let expected = HebrewDate::new(year, month, day);
    match (&back, &expected) {
        (Ok(date), Ok(want)) if date == want && hebrew_to_absolute(want) == absolute => {}
        _ => tally.fail(
            year,
            format!(
                "A:{absolute}->{}",
                back.map_or_else(|e| format!("{e:?}"), |d| d.to_string())
            ),
            format!("{:04}-{month:02}-{day:02}", year),
        ),
    }
}

fn check_structure(record: &YearRecord, tally: &mut Tally) {
    let year = record.year;
    let start = Weekday::of(record.rosh_hashanah);
    if matches!(
        start,
        Weekday::Sunday | Weekday::Wednesday | Weekday::Friday
    ) {
        tally.fail(year, format!("weekday:{}", start.code()), "{0,2,3,5}");
    }
    let molad_day = record.molad.day() as i64;
    let delayed_day = delay(record.molad).day() as i64;
    let postponed = record.rosh_hashanah - molad_day;
    if record.rosh_hashanah < delayed_day || postponed > 2 {
        tally.fail(year, format!("postponement:{postponed}"), "{0,1,2}");
    }
    if year <= NAIVE_MOLAD_PREFIX || year.is_multiple_of(NAIVE_MOLAD_STRIDE) {
        let naive = molad_by_summation(year);
        if naive != record.molad {
            tally.fail(
                year,
                format!("stepped:{}", record.molad.to_string().replace(' ', "")),
                format!("naive:{}", naive.to_string().replace(' ', "")),
            );
        }
    }
    let length = record.length();
    let leap = record.is_leap();
    for &month in months_in_order(year) {
        let first = record.rosh_hashanah + i64::from(days_before_month(month, length, leap));
        let days = days_in_month(month, length);
        check_round_trip(year, month, 1, first, tally);
        check_round_trip(year, month, days, first + i64::from(days) - 1, tally);
    }
}

/// Runs per-year checks over a range of years, optionally on several threads.
#[derive(Clone, Debug)]
pub struct Sweep {
    start: Year,
    end: Year,
    jobs: usize,
}

impl Sweep {
    pub fn new(range: RangeInclusive<Year>) -> Result<Sweep, Error> {
        let (start, end) = range.into_inner();
        if start == 0 || start > end || end > MAX_SWEEP_YEAR {
            return Err(Error::InvalidRange { start, end });
        }
        Ok(Sweep {
            start,
            end,
            jobs: 1,
        })
    }

    /// One full period from year 1.
    pub fn full_period() -> Sweep {
        Sweep::new(full_period()).expect("valid range")
    }

    pub fn jobs(mut self, jobs: usize) -> Sweep {
        self.jobs = jobs.max(1);
        self
    }

    pub fn range(&self) -> RangeInclusive<Year> {
        self.start..=self.end
    }

    fn covers_full_period(&self) -> bool {
        u64::from(self.end - self.start) + 1 >= u64::from(PERIOD_YEARS)
    }

    fn chunks(&self) -> Vec<RangeInclusive<Year>> {
        let total = u64::from(self.end - self.start) + 1;
        let pieces = if self.jobs == 1 {
            1
        } else {
            self.jobs as u64 * 4
        };
        let size = total.div_ceil(pieces).max(1);
        let mut chunks = Vec::new();
        let mut first = u64::from(self.start);
        while first <= u64::from(self.end) {
            let last = (first + size - 1).min(u64::from(self.end));
            chunks.push(first as Year..=last as Year);
            first = last + 1;
        }
        chunks
    }

    fn run<F>(&self, property: Property, check: F) -> VerificationReport
    where
        F: Fn(&YearRecord, &mut Tally) + Sync,
    {
        let started = Instant::now();
        let sweep_chunk = |chunk: &RangeInclusive<Year>| {
            let mut tally = Tally::default();
            let (first, last) = (*chunk.start(), *chunk.end());
            let records = YearSweep::resume(first, molad_by_summation(first));
            for record in records.take((last - first + 1) as usize) {
                check(&record, &mut tally);
                tally.checked += 1;
            }
            tally
        };
        let chunks = self.chunks();
        let mut tally = if self.jobs == 1 {
            chunks
                .iter()
                .map(sweep_chunk)
                .fold(Tally::default(), Tally::merge)
        } else {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(self.jobs)
                .build()
                .expect("thread pool");
            pool.install(|| {
                chunks
                    .par_iter()
                    .map(sweep_chunk)
                    .reduce(Tally::default, Tally::merge)
            })
        };
        // stable: keeps per-year check order while putting years in order
        tally.counterexamples.sort_by_key(|c| c.year);

        let mut realized_keviyot = None;
        if property == Property::Keviyot {
            if self.covers_full_period() && tally.keviyot.len() != 14 {
                let mut seen = String::new();
                for (dow, len) in &tally.keviyot {
                    let _ = write!(seen, "({dow},{len})");
                }
                tally.counterexamples.push(Counterexample::new(
                    u64::from(self.end),
                    format!("distinct:{}:{seen}", tally.keviyot.len()),
                    "distinct:14",
                ));
            }
            realized_keviyot = Some(tally.keviyot);
        }

        VerificationReport {
            property,
            start: u64::from(self.start),
            end: u64::from(self.end),
            expected_checks: u64::from(self.end - self.start) + 1,
            checked: tally.checked,
            counterexamples: tally.counterexamples,
            realized_keviyot,
            elapsed: elapsed_since(started),
        }
    }

    /// Every year length is 353–355 days (common) or 383–385 (leap).
    pub fn year_lengths(&self) -> VerificationReport {
        self.run(Property::YearLengths, check_year_length)
    }

    /// Every `(start weekday, length)` is one of the fourteen permitted
    /// keviyot; over a full period all fourteen must occur.
    pub fn keviyot(&self) -> VerificationReport {
        self.run(Property::Keviyot, check_keviyah)
    }

    /// The molad of every month falls no later than the first day of the month.
    pub fn landau(&self) -> VerificationReport {
        self.run(Property::Landau, check_landau)
    }

    /// Forbidden weekdays, bounded postponement, naive/stepped molad agreement
    /// and conversion round trips on the first and last day of each month.
    pub fn structure(&self) -> VerificationReport {
        self.run(Property::Structure, check_structure)
    }

    pub fn property(&self, property: Property) -> Option<VerificationReport> {
        Some(match property {
            Property::YearLengths => self.year_lengths(),
            Property::Keviyot => self.keviyot(),
            Property::Landau => self.landau(),
            Property::Structure => self.structure(),
            Property::Constants | Property::Periodicity => return None,
        })
    }
}

pub fn verify_year_lengths(start: Year, end: Year) -> Result<VerificationReport, Error> {
    Ok(Sweep::new(start..=end)?.year_lengths())
}

pub fn verify_keviyot(start: Year, end: Year) -> Result<VerificationReport, Error> {
    Ok(Sweep::new(start..=end)?.keviyot())
}

pub fn verify_landau(start: Year, end: Year) -> Result<VerificationReport, Error> {
    Ok(Sweep::new(start..=end)?.landau())
}

pub fn verify_structure(start: Year, end: Year) -> Result<VerificationReport, Error> {
    Ok(Sweep::new(start..=end)?.structure())
}
