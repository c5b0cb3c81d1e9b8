//! Canonical text forms: `H:YYYY-MM-DD`, `G:±YYYY-MM-DD` and `A:<day>`.
//!
//! Years are zero-padded to at least four digits and Gregorian years always
//! carry a sign. Parsing is strict: it accepts exactly what rendering emits.

use std::fmt;
use std::str::FromStr;

use super::{absolute_to_hebrew, hebrew_to_absolute, GregorianDate, HebrewDate};
use crate::Error;

impl fmt::Display for HebrewDate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "H:{:04}-{:02}-{:02}",
            self.year(),
            self.month(),
            self.day()
        )
    }
}

impl fmt::Display for GregorianDate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.year() < 0 { '-' } else { '+' };
        write!(
            f,
            "G:{sign}{:04}-{:02}-{:02}",
            self.year().unsigned_abs(),
            self.month(),
            self.day()
        )
    }
}

fn parse_error(input: &str, reason: &'static str) -> Error {
    Error::Parse {
        input: input.to_owned(),
        reason,
    }
}

fn all_digits(s: &str) -> bool {
    !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit())
}

// Splits "YYYY-MM-DD", checking the padding rules.
fn split_ymd<'a>(input: &str, body: &'a str) -> Result<(&'a str, u8, u8), Error> {
    let mut fields = body.split('-');
    let (Some(year), Some(month), Some(day), None) =
        (fields.next(), fields.next(), fields.next(), fields.next())
    else {
        return Err(parse_error(input, "expected YYYY-MM-DD"));
    };
    if !all_digits(year) || year.len() < 4 || (year.len() > 4 && year.starts_with('0')) {
        return Err(parse_error(input, "year must have at least four digits"));
    }
    if month.len() != 2 || day.len() != 2 || !all_digits(month) || !all_digits(day) {
        return Err(parse_error(input, "month and day must have two digits"));
    }
    Ok((year, month.parse().unwrap(), day.parse().unwrap()))
}

impl FromStr for HebrewDate {
    type Err = Error;

    fn from_str(input: &str) -> Result<Self, Error> {
        let body = input
            .strip_prefix("H:")
            .ok_or_else(|| parse_error(input, "Hebrew dates start with H:"))?;
        let (year, month, day) = split_ymd(input, body)?;
        let year = year
            .parse()
            .map_err(|_| parse_error(input, "year out of range"))?;
        HebrewDate::new(year, month, day)
    }
}

impl FromStr for GregorianDate {
    type Err = Error;

    fn from_str(input: &str) -> Result<Self, Error> {
        let body = input
            .strip_prefix("G:")
            .ok_or_else(|| parse_error(input, "Gregorian dates start with G:"))?;
        let (negative, body) = match body.as_bytes().first() {
            Some(b'+') => (false, &body[1..]),
            Some(b'-') => (true, &body[1..]),
            _ => return Err(parse_error(input, "Gregorian year needs a + or - sign")),
        };
        let (year, month, day) = split_ymd(input, body)?;
        let magnitude: i64 = year
            .parse()
            .map_err(|_| parse_error(input, "year out of range"))?;
        if negative && magnitude == 0 {
            return Err(parse_error(input, "year zero is written +0000"));
        }
        GregorianDate::new(if negative { -magnitude } else { magnitude }, month, day)
    }
}

/// A date in any of the three calendars.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DateLiteral {
    Hebrew(HebrewDate),
    Gregorian(GregorianDate),
    Absolute(i64),
}

impl DateLiteral {
    pub fn to_absolute(&self) -> i64 {
        match self {
            DateLiteral::Hebrew(date) => hebrew_to_absolute(date),
            DateLiteral::Gregorian(date) => date.to_absolute(),
            DateLiteral::Absolute(day) => *day,
        }
    }

    pub fn to_hebrew(&self) -> Result<HebrewDate, Error> {
        match self {
            DateLiteral::Hebrew(date) => Ok(*date),
            other => absolute_to_hebrew(other.to_absolute()),
        }
    }

    pub fn to_gregorian(&self) -> GregorianDate {
        match self {
            DateLiteral::Gregorian(date) => *date,
            other => GregorianDate::from_absolute(other.to_absolute()),
        }
    }
}

impl fmt::Display for DateLiteral {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DateLiteral::Hebrew(date) => date.fmt(f),
            DateLiteral::Gregorian(date) => date.fmt(f),
            DateLiteral::Absolute(day) => write!(f, "A:{day}"),
        }
    }
}

impl FromStr for DateLiteral {
    type Err = Error;

    fn from_str(input: &str) -> Result<Self, Error> {
        if input.starts_with("H:") {
            input.parse().map(DateLiteral::Hebrew)
        } else if input.starts_with("G:") {
            input.parse().map(DateLiteral::Gregorian)
        } else if let Some(day) = input.strip_prefix("A:") {
            let digits = day.strip_prefix('-').unwrap_or(day);
            if !all_digits(digits) || (digits.len() > 1 && digits.starts_with('0')) {
                return Err(parse_error(input, "absolute days are plain integers"));
            }
            day.parse()
                .map(DateLiteral::Absolute)
                .map_err(|_| parse_error(input, "absolute day out of range"))
        } else {
            Err(parse_error(input, "expected an H:, G: or A: prefix"))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn rendering() {
        assert_eq!(
            HebrewDate::new(5782, 1, 1).unwrap().to_string(),
            "H:5782-01-01"
        );
        assert_eq!(HebrewDate::new(1, 13, 30).map(|d| d.to_string()).ok(), None);
        assert_eq!(
            HebrewDate::new(3, 13, 30).unwrap().to_string(),
            "H:0003-13-30"
        );
        assert_eq!(
            GregorianDate::new(2021, 9, 7).unwrap().to_string(),
            "G:+2021-09-07"
        );
        assert_eq!(
            GregorianDate::new(-3760, 9, 6).unwrap().to_string(),
            "G:-3760-09-06"
        );
        assert_eq!(
            GregorianDate::new(0, 1, 1).unwrap().to_string(),
            "G:+0000-01-01"
        );
        assert_eq!(
            GregorianDate::new(-5, 1, 1).unwrap().to_string(),
            "G:-0005-01-01"
        );
        assert_eq!(DateLiteral::Absolute(-3).to_string(), "A:-3");
    }

    #[test]
    fn parsing() {
        assert_eq!(
            "H:5782-01-01".parse::<HebrewDate>(),
            HebrewDate::new(5782, 1, 1)
        );
        assert_eq!(
            "G:-3760-09-06".parse::<GregorianDate>(),
            GregorianDate::new(-3760, 9, 6)
        );
        assert_eq!("A:1".parse::<DateLiteral>(), Ok(DateLiteral::Absolute(1)));
        for bad in [
            "H:582-01-01",
            "H:5782-1-01",
            "H:5782-01-01-01",
            "H:05782-01-01",
            "G:2021-09-07",
            "G:-0000-01-01",
            "G:+2021-09-7",
            "A:01",
            "A:",
            "A:1.5",
            "5782-01-01",
            "H:+5782-01-01",
        ] {
            assert!(
                matches!(bad.parse::<DateLiteral>(), Err(Error::Parse { .. })),
                "{bad}"
            );
        }
        // well formed but invalid dates are validation errors
        assert_eq!(
            "H:5781-13-01".parse::<HebrewDate>(),
            Err(Error::AdarIInCommonYear { year: 5781 })
        );
        assert!(matches!(
            "G:+2023-02-29".parse::<GregorianDate>(),
            Err(Error::InvalidGregorianDate { .. })
        ));
    }

    #[test]
    fn literal_conversions() {
        let lit: DateLiteral = "H:5782-01-01".parse().unwrap();
        assert_eq!(lit.to_absolute(), 2_111_469);
        assert_eq!(lit.to_gregorian().to_string(), "G:+2021-09-07");
        let lit: DateLiteral = "G:-3760-09-06".parse().unwrap();
        assert_eq!(lit.to_absolute(), 1);
        assert!(lit.to_hebrew().unwrap_err().is_out_of_domain());
    }

    proptest! {
        #[test]
        fn render_then_parse(a in 2i64..5_000_000) {
            let hebrew = absolute_to_hebrew(a).unwrap();
            prop_assert_eq!(hebrew.to_string().parse::<HebrewDate>(), Ok(hebrew));
            let gregorian = GregorianDate::from_absolute(a - 2_500_000);
            prop_assert_eq!(gregorian.to_string().parse::<GregorianDate>(), Ok(gregorian));
            let literal = DateLiteral::Absolute(a - 2_500_000);
            prop_assert_eq!(literal.to_string().parse::<DateLiteral>(), Ok(literal));
        }
    }
}
