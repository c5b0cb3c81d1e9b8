//! Conversion between Hebrew, absolute and Gregorian dates.
//!
//! The absolute calendar is a plain day count. Day 1 is the day before
//! Molad Beharad, which is Gregorian September 6, −3760, and Tishri 1 of
//! year 1 is day 2. Hebrew and Gregorian dates convert to each other by way
//! of the absolute day.
//!
//! Months are coded 1 (Tishri) through 12 (Elul); Adar I of a leap year is
//! coded 13 and sits between Shevat (5) and Adar II (6).

mod gregorian;
mod text;

pub use gregorian::{is_gregorian_leap, GregorianDate};
pub use text::DateLiteral;

use crate::new_year::{is_admissible_length, rosh_hashanah, year_length};
use crate::year::{is_leap, validate_month, Year};
use crate::Error;

/// Absolute day of Tishri 1, year 1. Earlier days have no Hebrew date.
pub const FIRST_HEBREW_DAY: i64 = 2;

const COMMON_MONTH_ORDER: [u8; 12] = [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12];
const LEAP_MONTH_ORDER: [u8; 13] = [1, 2, 3, 4, 5, 13, 6, 7, 8, 9, 10, 11, 12];

/// Month codes of `year` in calendar order.
pub fn months_in_order(year: Year) -> &'static [u8] {
    if is_leap(year) {
        &LEAP_MONTH_ORDER
    } else {
        &COMMON_MONTH_ORDER
    }
}

/// Transliterated month name; month 6 is "Adar II" in a leap year.
pub fn month_name(month: u8, leap: bool) -> Option<&'static str> {
    Some(match month {
        1 => "Tishri",
        2 => "Cheshvan",
        3 => "Kislev",
        4 => "Tevat",
        5 => "Shevat",
        6 if leap => "Adar II",
        6 => "Adar",
        7 => "Nisan",
        8 => "Iyar",
        9 => "Sivan",
        10 => "Tammuz",
        11 => "Av",
        12 => "Elul",
        13 => "Adar I",
        _ => return None,
    })
}

// Caller guarantees a valid month for an admissible length.
pub(crate) fn days_in_month(month: u8, year_len: u16) -> u8 {
    match month {
        2 if matches!(year_len, 355 | 385) => 30,
        2 => 29,
        3 if matches!(year_len, 353 | 383) => 29,
        3 => 30,
        m if m % 2 == 1 => 30,
        _ => 29,
    }
}

/// Length of a month in a year of the given length.
///
/// Cheshvan is long only in complete years and Kislev short only in
/// defective years; the other months alternate 30/29 from Tishri, and Adar I
/// has 30 days.
pub fn month_length(month: u8, year_len: u16) -> Result<u8, Error> {
    let leap = year_len > 380;
    if !is_admissible_length(year_len, leap) {
        return Err(Error::InadmissibleYearLength { length: year_len });
    }
    match month {
        1..=12 => {}
        13 if leap => {}
        _ => return Err(Error::InvalidMonth { month }),
    }
    Ok(days_in_month(month, year_len))
}

/// Days of the year elapsed before the first of `month`.
pub(crate) fn days_before_month(month: u8, year_len: u16, leap: bool) -> u32 {
    let mut prior: u32 = (1..month)
        .take_while(|&m| m < 6 || month != 13)
        .map(|m| u32::from(days_in_month(m, year_len)))
        .sum();
    if leap && month >= 6 && month != 13 {
        prior += 30;
    }
    prior
}

/// A validated date of the Hebrew calendar.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct HebrewDate {
    year: Year,
    month: u8,
    day: u8,
}

impl HebrewDate {
    pub fn new(year: Year, month: u8, day: u8) -> Result<Self, Error> {
        if year == 0 {
            return Err(Error::InvalidYear { year });
        }
        validate_month(month, year)?;
        let length = days_in_month(month, year_length(year));
        if day == 0 || day > length {
            return Err(Error::InvalidHebrewDay { year, month, day });
        }
        Ok(HebrewDate { year, month, day })
    }

    pub fn year(&self) -> Year {
        self.year
    }

    pub fn month(&self) -> u8 {
        self.month
    }

    pub fn day(&self) -> u8 {
        self.day
    }

    pub fn month_name(&self) -> &'static str {
        month_name(self.month, is_leap(self.year)).expect("validated month")
    }
}

/// Absolute day of a Hebrew date.
pub fn hebrew_to_absolute(date: &HebrewDate) -> i64 {
    let new_year = rosh_hashanah(date.year);
    let year_len = (rosh_hashanah(date.year + 1) - new_year) as u16;
    let prior = days_before_month(date.month, year_len, is_leap(date.year));
    new_year - 1 + i64::from(prior) + i64::from(date.day)
}

// Mean year of 235/19 lunations, as a ratio of days: 35975351 / 98496.
const MEAN_YEAR_NUMERATOR: i64 = 35_975_351;
const MEAN_YEAR_DENOMINATOR: i64 = 98_496;

fn year_containing(absolute: i64) -> Result<Year, Error> {
    let estimate = (absolute - FIRST_HEBREW_DAY) as i128 * MEAN_YEAR_DENOMINATOR as i128
        / MEAN_YEAR_NUMERATOR as i128
        + 1;
    // leave room for looking one year ahead
    if estimate >= i128::from(Year::MAX - 2) {
        return Err(Error::OutOfDomain { day: absolute });
    }
    let mut year = estimate.max(1) as Year;
    while year > 1 && rosh_hashanah(year) > absolute {
        year -= 1;
    }
    while rosh_hashanah(year + 1) <= absolute {
        year += 1;
    }
    Ok(year)
}

/// The Hebrew date of an absolute day; days before Tishri 1 of year 1 are out of domain.
pub fn absolute_to_hebrew(absolute: i64) -> Result<HebrewDate, Error> {
    if absolute < FIRST_HEBREW_DAY {
        return Err(Error::OutOfDomain { day: absolute });
    }
    let year = year_containing(absolute)?;
    let year_len = year_length(year);
    let mut remaining = absolute - rosh_hashanah(year);
    for &month in months_in_order(year) {
        let length = i64::from(days_in_month(month, year_len));
        if remaining < length {
            return Ok(HebrewDate {
                year,
                month,
                day: remaining as u8 + 1,
            });
        }
        remaining -= length;
    }
    unreachable!("absolute day {absolute} not inside year {year}")
}

pub fn hebrew_to_gregorian(date: &HebrewDate) -> GregorianDate {
    GregorianDate::from_absolute(hebrew_to_absolute(date))
}

pub fn gregorian_to_hebrew(date: &GregorianDate) -> Result<HebrewDate, Error> {
    absolute_to_hebrew(date.to_absolute())
}
