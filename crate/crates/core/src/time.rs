//! Calendrical moments measured in days, hours and parts.
//!
//! A day has 24 hours and an hour has 1080 parts (ḥalakim). The same
//! [`Moment`] type serves both as an instant, where `day` is an absolute day
//! number, and as a duration, where `day` is a count of days. All arithmetic
//! is exact; totals are carried in `u64`, which comfortably holds the
//! ~6.5×10¹² parts spanned by a full calendar period.

use std::fmt;
use std::ops::Add;

use crate::Error;

pub const PARTS_PER_HOUR: u64 = 1080;
pub const HOURS_PER_DAY: u64 = 24;
pub const PARTS_PER_DAY: u64 = HOURS_PER_DAY * PARTS_PER_HOUR;
pub const PARTS_PER_WEEK: u64 = 7 * PARTS_PER_DAY;

/// The mean synodic month: 29 days, 12 hours, 793 parts.
pub const LUNATION: Moment = Moment::from_raw(29, 12, 793);

/// Molad Beharad, the reference molad of year 1: 5h 204p on day 2.
pub const BEHARAD: Moment = Moment::from_raw(2, 5, 204);

/// A normalized `{day, hour, part}` triple.
///
/// Field order makes the derived `Ord` chronological.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Moment {
    day: u64,
    hour: u32,
    part: u32,
}

impl Moment {
    pub const ZERO: Moment = Moment::from_raw(0, 0, 0);

    pub(crate) const fn from_raw(day: u64, hour: u32, part: u32) -> Self {
        assert!((hour as u64) < HOURS_PER_DAY && (part as u64) < PARTS_PER_HOUR);
        Moment { day, hour, part }
    }

    /// Builds a moment, rejecting an hour outside `0..24` or a part outside `0..1080`.
    pub fn new(day: u64, hour: u32, part: u32) -> Result<Self, Error> {
        if u64::from(hour) >= HOURS_PER_DAY || u64::from(part) >= PARTS_PER_HOUR {
            return Err(Error::InvalidMoment { day, hour, part });
        }
        Ok(Moment { day, hour, part })
    }

    pub fn from_total_parts(total: u64) -> Self {
        Moment {
            day: total / PARTS_PER_DAY,
            hour: ((total % PARTS_PER_DAY) / PARTS_PER_HOUR) as u32,
            part: (total % PARTS_PER_HOUR) as u32,
        }
    }

    pub const fn day(&self) -> u64 {
        self.day
    }

    pub const fn hour(&self) -> u32 {
        self.hour
    }

    pub const fn part(&self) -> u32 {
        self.part
    }

    /// `25920·day + 1080·hour + part`.
    pub const fn total_parts(&self) -> u64 {
        self.day * PARTS_PER_DAY + self.hour as u64 * PARTS_PER_HOUR + self.part as u64
    }

    /// Multiplies by a month count (or any other factor), carrying parts into
    /// hours and hours into days.
    pub fn scale(self, factor: u64) -> Moment {
        let parts = factor * u64::from(self.part);
        let hours = factor * u64::from(self.hour) + parts / PARTS_PER_HOUR;
        Moment {
            day: factor * self.day + hours / HOURS_PER_DAY,
            hour: (hours % HOURS_PER_DAY) as u32,
            part: (parts % PARTS_PER_HOUR) as u32,
        }
    }

    /// The difference `self - earlier`, or `None` if `earlier` is later.
    pub fn checked_sub(self, earlier: Moment) -> Option<Moment> {
        self.total_parts()
            .checked_sub(earlier.total_parts())
            .map(Moment::from_total_parts)
    }

    /// Whether the time of day is at or later than `hour:part`. The day is ignored.
    pub fn time_at_or_after(&self, hour: u32, part: u32) -> bool {
        let own = u64::from(self.hour) * PARTS_PER_HOUR + u64::from(self.part);
        own >= u64::from(hour) * PARTS_PER_HOUR + u64::from(part)
    }

    pub fn weekday(&self) -> Weekday {
        Weekday::of(self.day as i64)
    }
}

impl Add for Moment {
    type Output = Moment;

    fn add(self, rhs: Moment) -> Moment {
        let parts = self.part + rhs.part;
        let hours = self.hour + rhs.hour + parts / PARTS_PER_HOUR as u32;
        Moment {
            day: self.day + rhs.day + u64::from(hours) / HOURS_PER_DAY,
            hour: hours % HOURS_PER_DAY as u32,
            part: parts % PARTS_PER_HOUR as u32,
        }
    }
}

impl fmt::Display for Moment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}, {}, {}}}", self.day, self.hour, self.part)
    }
}

/// Day of the week. A day begins at 6 PM of the preceding civil day.
///
/// The discriminant is the absolute day number modulo 7, so absolute day 1
/// is a Sunday and Molad Beharad (day 2) falls on a Monday.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[repr(u8)]
pub enum Weekday {
    Saturday = 0,
    Sunday = 1,
    Monday = 2,
    Tuesday = 3,
    Wednesday = 4,
    Thursday = 5,
    Friday = 6,
}

impl Weekday {
    const ALL: [Weekday; 7] = [
        Weekday::Saturday,
        Weekday::Sunday,
        Weekday::Monday,
        Weekday::Tuesday,
        Weekday::Wednesday,
        Weekday::Thursday,
        Weekday::Friday,
    ];

    pub fn of(absolute_day: i64) -> Weekday {
        Weekday::ALL[absolute_day.rem_euclid(7) as usize]
    }

    pub fn from_code(code: u8) -> Option<Weekday> {
        Weekday::ALL.get(usize::from(code)).copied()
    }

    pub const fn code(self) -> u8 {
        self as u8
    }

    pub const fn name(self) -> &'static str {
        match self {
            Weekday::Saturday => "Saturday",
            Weekday::Sunday => "Sunday",
            Weekday::Monday => "Monday",
            Weekday::Tuesday => "Tuesday",
            Weekday::Wednesday => "Wednesday",
            Weekday::Thursday => "Thursday",
            Weekday::Friday => "Friday",
        }
    }
}

impl fmt::Display for Weekday {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Day-of-week code of an absolute day: `day mod 7`, Saturday = 0.
pub fn day_of_week(absolute_day: i64) -> u8 {
    Weekday::of(absolute_day).code()
}
