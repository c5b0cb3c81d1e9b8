//! Proleptic Gregorian dates with astronomical year numbering (year 0 exists).

use crate::Error;

/// Standard proleptic Gregorian leap rule.
pub const fn is_gregorian_leap(year: i64) -> bool {
    year.rem_euclid(4) == 0 && (year.rem_euclid(100) != 0 || year.rem_euclid(400) == 0)
}

pub(crate) const fn days_in_gregorian_month(year: i64, month: u8) -> u8 {
    match month {
        1 | 3 | 5 | 7 | 8 | 10 | 12 => 31,
        4 | 6 | 9 | 11 => 30,
        2 if is_gregorian_leap(year) => 29,
        _ => 28,
    }
}

// Days since 0000-03-01 in 400-year eras of 146097 days, with March as the
// first month so that the leap day ends the computational year.
const fn days_from_civil(year: i64, month: u8, day: u8) -> i64 {
    let y = if month <= 2 { year - 1 } else { year };
    let era = y.div_euclid(400);
    let year_of_era = y.rem_euclid(400);
    let m = month as i64;
    let shifted_month = if m > 2 { m - 3 } else { m + 9 };
    let day_of_year = (153 * shifted_month + 2) / 5 + day as i64 - 1;
    let day_of_era = year_of_era * 365 + year_of_era / 4 - year_of_era / 100 + day_of_year;
    era * 146_097 + day_of_era
}

fn civil_from_days(days: i64) -> (i64, u8, u8) {
    let era = days.div_euclid(146_097);
    let day_of_era = days.rem_euclid(146_097);
    let year_of_era =
        (day_of_era - day_of_era / 1460 + day_of_era / 36_524 - day_of_era / 146_096) / 365;
    let day_of_year = day_of_era - (365 * year_of_era + year_of_era / 4 - year_of_era / 100);
    let shifted_month = (5 * day_of_year + 2) / 153;
    let day = (day_of_year - (153 * shifted_month + 2) / 5 + 1) as u8;
    let month = if shifted_month < 10 {
        shifted_month + 3
    } else {
        shifted_month - 9
    } as u8;
    let year = year_of_era + era * 400 + i64::from(month <= 2);
    (year, month, day)
}

/// Gregorian September 6, −3760 is absolute day 1.
const EPOCH_OFFSET: i64 = days_from_civil(-3760, 9, 6) - 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GregorianDate {
    year: i64,
    month: u8,
    day: u8,
}

impl GregorianDate {
    pub fn new(year: i64, month: u8, day: u8) -> Result<Self, Error> {
        if !(1..=12).contains(&month) || day == 0 || day > days_in_gregorian_month(year, month) {
            return Err(Error::InvalidGregorianDate { year, month, day });
        }
        Ok(GregorianDate { year, month, day })
    }

    pub fn year(&self) -> i64 {
        self.year
    }

    pub fn month(&self) -> u8 {
        self.month
    }

    pub fn day(&self) -> u8 {
        self.day
    }

    pub fn to_absolute(&self) -> i64 {
        days_from_civil(self.year, self.month, self.day) - EPOCH_OFFSET
    }

    pub fn from_absolute(absolute: i64) -> Self {
        let (year, month, day) = civil_from_days(absolute + EPOCH_OFFSET);
        GregorianDate { year, month, day }
    }
}
