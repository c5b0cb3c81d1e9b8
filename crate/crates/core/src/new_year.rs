//! Rosh Hashanah, year lengths and the keviyah (character) of a year.
//!
//! Rosh Hashanah falls on the day of the delayed molad unless one of three
//! postponements applies:
//!
//! * second: that day is a Sunday, Wednesday or Friday (+1 day);
//! * third: a common year whose delayed molad is on Tuesday at or after
//!   15h 204p (+2 days);
//! * fourth: a year following a leap year whose delayed molad is on Monday at
//!   or after 21h 589p (+1 day).
//!
//! At most one of them applies to a given year.

use std::fmt;

use crate::time::{Moment, Weekday};
use crate::year::{delay, is_leap, molad, molad_next, Year};

/// Which postponement moved Rosh Hashanah past the day of the delayed molad.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Dechiyah {
    None,
    Second,
    Third,
    Fourth,
}

impl Dechiyah {
    /// Days added to the day of the delayed molad.
    pub const fn days(self) -> i64 {
        match self {
            Dechiyah::None => 0,
            Dechiyah::Second | Dechiyah::Fourth => 1,
            Dechiyah::Third => 2,
        }
    }

    pub const fn name(self) -> &'static str {
        match self {
            Dechiyah::None => "none",
            Dechiyah::Second => "second",
            Dechiyah::Third => "third",
            Dechiyah::Fourth => "fourth",
        }
    }
}

impl fmt::Display for Dechiyah {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Decides the postponement for `year` from its delayed molad.
pub fn postponement(delayed: Moment, year: Year) -> Dechiyah {
    match delayed.weekday() {
        Weekday::Sunday | Weekday::Wednesday | Weekday::Friday => Dechiyah::Second,
        Weekday::Tuesday if delayed.time_at_or_after(15, 204) && !is_leap(year) => Dechiyah::Third,
        // year 1 has no predecessor; its delayed molad (11h 204p) is too early anyway
        Weekday::Monday if delayed.time_at_or_after(21, 589) && year > 1 && is_leap(year - 1) => {
            Dechiyah::Fourth
        }
        _ => Dechiyah::None,
    }
}

fn new_year_from_molad(molad: Moment, year: Year) -> (i64, Dechiyah) {
    let delayed = delay(molad);
    let dechiyah = postponement(delayed, year);
    (delayed.day() as i64 + dechiyah.days(), dechiyah)
}

/// Absolute day of Tishri 1 of `year`.
pub fn rosh_hashanah(year: Year) -> i64 {
    new_year_from_molad(molad(year), year).0
}

/// Days from Rosh Hashanah of `year` to Rosh Hashanah of the next year.
pub fn year_length(year: Year) -> u16 {
    (rosh_hashanah(year + 1) - rosh_hashanah(year)) as u16
}

pub fn applied_dechiyah(year: Year) -> Dechiyah {
    new_year_from_molad(molad(year), year).1
}

/// Defective, regular or complete, by how Cheshvan and Kislev are filled.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum YearClass {
    Defective,
    Regular,
    Complete,
}

impl YearClass {
    /// Classifies an admissible year length; `None` for any other length.
    pub fn of_length(length: u16) -> Option<YearClass> {
        match length {
            353 | 383 => Some(YearClass::Defective),
            354 | 384 => Some(YearClass::Regular),
            355 | 385 => Some(YearClass::Complete),
            _ => None,
        }
    }

    pub const fn name(self) -> &'static str {
        match self {
            YearClass::Defective => "defective",
            YearClass::Regular => "regular",
            YearClass::Complete => "complete",
        }
    }
}

impl fmt::Display for YearClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Whether `length` is admissible for a common or a leap year.
pub fn is_admissible_length(length: u16, leap: bool) -> bool {
    if leap {
        matches!(length, 383..=385)
    } else {
        matches!(length, 353..=355)
    }
}

/// The character of a year: the weekday it starts on and its length.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Keviyah {
    pub start: Weekday,
    pub length: u16,
    pub leap: bool,
}

impl Keviyah {
    pub fn class(&self) -> Option<YearClass> {
        YearClass::of_length(self.length)
    }

    /// Whether `(start, length)` is one of the fourteen realizable combinations:
    /// a Tuesday year is regular; a Saturday or Monday year is never regular;
    /// a Thursday year is never a defective common year nor a regular leap year.
    pub fn is_permitted(&self) -> bool {
        match self.start {
            Weekday::Tuesday => matches!(self.length, 354 | 384),
            Weekday::Saturday | Weekday::Monday => matches!(self.length, 353 | 355 | 383 | 385),
            Weekday::Thursday => matches!(self.length, 354 | 355 | 383 | 385),
            _ => false,
        }
    }
}

impl fmt::Display for Keviyah {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}, {}, {})",
            self.start.code(),
            self.length,
            if self.leap { "leap" } else { "common" }
        )
    }
}

pub fn keviyah(year: Year) -> Keviyah {
    Keviyah {
        start: Weekday::of(rosh_hashanah(year)),
        length: year_length(year),
        leap: is_leap(year),
    }
}

/// Everything a sweep needs to know about one year.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct YearRecord {
    pub year: Year,
    pub molad: Moment,
    pub rosh_hashanah: i64,
    pub dechiyah: Dechiyah,
    pub next_rosh_hashanah: i64,
}

impl YearRecord {
    pub fn length(&self) -> u16 {
        (self.next_rosh_hashanah - self.rosh_hashanah) as u16
    }

    pub fn is_leap(&self) -> bool {
        is_leap(self.year)
    }

    pub fn keviyah(&self) -> Keviyah {
        Keviyah {
            start: Weekday::of(self.rosh_hashanah),
            length: self.length(),
            leap: self.is_leap(),
        }
    }
}

/// Walks consecutive years, stepping the molad with [`molad_next`] so that
/// each year costs a constant number of moment additions.
#[derive(Clone, Debug)]
pub struct YearSweep {
    year: Year,
    molad: Moment,
    rosh_hashanah: i64,
    dechiyah: Dechiyah,
}

impl YearSweep {
    /// Starts at `year` with its molad already known.
    pub fn resume(year: Year, molad: Moment) -> Self {
        let (rosh_hashanah, dechiyah) = new_year_from_molad(molad, year);
        YearSweep {
            year,
            molad,
            rosh_hashanah,
            dechiyah,
        }
    }

    pub fn starting_at(year: Year) -> Self {
        YearSweep::resume(year, molad(year))
    }
}

impl Iterator for YearSweep {
    type Item = YearRecord;

    fn next(&mut self) -> Option<YearRecord> {
        let next_year = self.year.checked_add(1)?;
        let next_molad = molad_next(self.molad, self.year);
        let (next_rh, next_dechiyah) = new_year_from_molad(next_molad, next_year);
        let record = YearRecord {
            year: self.year,
            molad: self.molad,
            rosh_hashanah: self.rosh_hashanah,
            dechiyah: self.dechiyah,
            next_rosh_hashanah: next_rh,
        };
        self.year = next_year;
        self.molad = next_molad;
        self.rosh_hashanah = next_rh;
        self.dechiyah = next_dechiyah;
        Some(record)
    }
}
