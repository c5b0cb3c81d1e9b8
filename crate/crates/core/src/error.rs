use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid moment {{{day}, {hour}, {part}}}: hour must be < 24 and part < 1080")]
    InvalidMoment { day: u64, hour: u32, part: u32 },
    #[error("invalid Hebrew year {year}: years start at 1")]
    InvalidYear { year: u32 },
    #[error("invalid month {month}: expected 1..=13")]
    InvalidMonth { month: u8 },
    #[error("Adar I (month 13) does not exist in common year {year}")]
    AdarIInCommonYear { year: u32 },
    #[error("{length} is not an admissible year length")]
    InadmissibleYearLength { length: u16 },
    #[error("invalid day {day} for month {month} of year {year}")]
    InvalidHebrewDay { year: u32, month: u8, day: u8 },
    #[error("invalid Gregorian date {year}-{month:02}-{day:02}")]
    InvalidGregorianDate { year: i64, month: u8, day: u8 },
    #[error("absolute day {day} lies outside the Hebrew calendar")]
    OutOfDomain { day: i64 },
    #[error("invalid year range {start}..{end}")]
    InvalidRange { start: u32, end: u32 },
    #[error("cannot parse {input:?}: {reason}")]
    Parse { input: String, reason: &'static str },
}

impl Error {
    /// Dates outside the range the Hebrew calendar covers, as opposed to malformed input.
    pub fn is_out_of_domain(&self) -> bool {
        matches!(self, Error::OutOfDomain { .. })
    }
}
