//! The 19-year leap cycle and the molad (mean conjunction) of each year.
//!
//! Two routes compute the molad of Tishri:
//!
//! * [`molad_by_summation`] adds up the months of every preceding year one
//!   year at a time, which costs O(year);
//! * [`molad`] counts whole 19-year cycles (235 months each) and then the
//!   months of the partial cycle, which costs O(1).
//!
//! Sweeps over many consecutive years step from one molad to the next with
//! [`molad_next`], or use the [`Moladot`] iterator built on it.

use crate::time::{Moment, BEHARAD, LUNATION};
use crate::Error;

/// Hebrew year number. Year 1 is the year of Molad Beharad.
pub type Year = u32;

pub const CYCLE_YEARS: u32 = 19;
pub const CYCLE_MONTHS: u64 = 235;

// Months elapsed in a cycle before the year with the given residue 0..=18,
// where residue r means year 19k + r + 1.
const MONTHS_BEFORE_IN_CYCLE: [u64; 19] = {
    let mut table = [0u64; 19];
    let mut r = 1;
    while r < 19 {
        table[r] = table[r - 1] + if is_leap(r as u32) { 13 } else { 12 };
        r += 1;
    }
    table
};

/// Year `y` is a leap year iff `y mod 19` is one of 0, 3, 6, 8, 11, 14, 17.
pub const fn is_leap(year: Year) -> bool {
    matches!(year % 19, 0 | 3 | 6 | 8 | 11 | 14 | 17)
}

pub const fn months_in_year(year: Year) -> u32 {
    if is_leap(year) {
        13
    } else {
        12
    }
}

/// Months elapsed from the molad of year 1 to the molad of `year`.
///
/// # Panics
///
/// Panics if `year` is 0.
pub fn months_before(year: Year) -> u64 {
    assert!(year >= 1, "Hebrew years start at 1");
    let elapsed = year - 1;
    CYCLE_MONTHS * u64::from(elapsed / CYCLE_YEARS)
        + MONTHS_BEFORE_IN_CYCLE[(elapsed % CYCLE_YEARS) as usize]
}

/// The molad of Tishri of `year`.
///
/// # Panics
///
/// Panics if `year` is 0.
pub fn molad(year: Year) -> Moment {
    BEHARAD + LUNATION.scale(months_before(year))
}

/// The molad of Tishri of `year`, summing the months of each preceding year.
///
/// Linear in `year`. This is the reference the faster routes are checked against.
pub fn molad_by_summation(year: Year) -> Moment {
    assert!(year >= 1, "Hebrew years start at 1");
    let mut prior_months: u64 = 0;
    for y in 1..year {
        prior_months += u64::from(months_in_year(y));
    }
    BEHARAD + LUNATION.scale(prior_months)
}

/// Steps from `molad(year)` to `molad(year + 1)`.
pub fn molad_next(prev: Moment, year: Year) -> Moment {
    prev + LUNATION.scale(u64::from(months_in_year(year)))
}

/// The molad pushed six hours later. A delayed molad on a later day than the
/// molad itself absorbs the "molad after noon" postponement.
pub fn delayed_molad(year: Year) -> Moment {
    delay(molad(year))
}

pub(crate) fn delay(molad: Moment) -> Moment {
    molad + SIX_HOURS
}

const SIX_HOURS: Moment = Moment::from_raw(0, 6, 0);

/// Checks a month code against a year: 1..=12 always, 13 (Adar I) only in leap years.
pub fn validate_month(month: u8, year: Year) -> Result<(), Error> {
    match month {
        1..=12 => Ok(()),
        13 if is_leap(year) => Ok(()),
        13 => Err(Error::AdarIInCommonYear { year }),
        _ => Err(Error::InvalidMonth { month }),
    }
}

/// Lunations between the molad of Tishri and the molad of `month`.
///
/// Adar I (13) sits between Shevat (5) and Adar II (6) in a leap year.
pub(crate) fn months_before_month(month: u8, leap: bool) -> u64 {
    let month = u64::from(month);
    if leap && month >= 6 {
        if month == 13 {
            5
        } else {
            month
        }
    } else {
        month - 1
    }
}

/// The molad of a given month of `year`.
pub fn monthly_molad(month: u8, year: Year) -> Result<Moment, Error> {
    validate_month(month, year)?;
    let lunations = months_before_month(month, is_leap(year));
    Ok(molad(year) + LUNATION.scale(lunations))
}

/// Consecutive `(year, molad)` pairs, seeded once and then stepped with
/// [`molad_next`].
#[derive(Clone, Debug)]
pub struct Moladot {
    year: Year,
    molad: Moment,
}

impl Moladot {
    /// Starts at `year`, seeding with the summation route.
    pub fn starting_at(year: Year) -> Self {
        Moladot {
            year,
            molad: molad_by_summation(year),
        }
    }

    /// Starts at `year` from a molad the caller already knows.
    pub fn resume(year: Year, molad: Moment) -> Self {
        Moladot { year, molad }
    }
}

impl Iterator for Moladot {
    type Item = (Year, Moment);

    fn next(&mut self) -> Option<Self::Item> {
        let current = (self.year, self.molad);
        let next_year = self.year.checked_add(1)?;
        self.molad = molad_next(self.molad, self.year);
        self.year = next_year;
        Some(current)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(day: u64, hour: u32, part: u32) -> Moment {
        Moment::new(day, hour, part).unwrap()
    }

    #[test]
    fn leap_cycle() {
        assert!(is_leap(19));
        assert!(!is_leap(1));
        assert!(is_leap(5782));
        assert_eq!(months_in_year(5782), 13);
        assert_eq!(months_in_year(1), 12);
        assert_eq!(months_in_year(19), 13);
    }

    #[test]
    fn every_cycle_has_seven_leap_years() {
        for k in 0..2000u32 {
            let years = 19 * k + 1..=19 * k + 19;
            assert_eq!(years.clone().filter(|&y| is_leap(y)).count(), 7);
            assert_eq!(years.map(months_in_year).sum::<u32>(), 235);
        }
    }

    #[test]
    fn known_moladot() {
        assert_eq!(molad(1), m(2, 5, 204));
        assert_eq!(molad(2), m(356, 14, 0));
        assert_eq!(molad(5782), m(2_111_469, 5, 497));
        assert_eq!(months_before(5782), 71_501);
        assert_eq!(molad_by_summation(5782), m(2_111_469, 5, 497));
    }

    #[test]
    fn stepping() {
        assert_eq!(molad_next(m(2, 5, 204), 1), m(356, 14, 0));
        assert_eq!(molad_next(molad(5782), 5782), m(2_111_853, 3, 6));
    }

    #[test]
    fn routes_agree_on_first_ten_thousand_years() {
        let mut naive_months = 0u64;
        for (year, stepped) in Moladot::starting_at(1).take(10_000) {
            let naive = BEHARAD + LUNATION.scale(naive_months);
            assert_eq!(stepped, naive, "year {year}");
            assert_eq!(molad(year), naive, "year {year}");
            naive_months += u64::from(months_in_year(year));
        }
        for year in [1, 2, 19, 20, 5782, 9999] {
            assert_eq!(molad_by_summation(year), molad(year));
        }
    }

    #[test]
    fn nineteen_year_step_is_235_lunations() {
        for year in (1..700_000).step_by(997) {
            let delta = molad(year + 19).total_parts() - molad(year).total_parts();
            assert_eq!(delta, 179_876_755);
        }
    }

    #[test]
    fn delayed() {
        assert_eq!(delayed_molad(5782), m(2_111_469, 11, 497));
        assert_eq!(delayed_molad(1), m(2, 11, 204));
        for (year, molad) in Moladot::starting_at(1).take(5000) {
            let late = delayed_molad(year);
            let expected = if molad.hour() >= 18 {
                molad.day() + 1
            } else {
                molad.day()
            };
            assert_eq!(late.day(), expected);
        }
    }

    #[test]
    fn month_moladot() {
        let base = molad(5782);
        assert_eq!(monthly_molad(1, 5782).unwrap(), base);
        assert_eq!(monthly_molad(13, 5782).unwrap(), base + LUNATION.scale(5));
        assert_eq!(monthly_molad(7, 5782).unwrap(), base + LUNATION.scale(7));
        assert_eq!(
            monthly_molad(7, 5781).unwrap(),
            molad(5781) + LUNATION.scale(6)
        );
        assert_eq!(
            monthly_molad(13, 5781),
            Err(Error::AdarIInCommonYear { year: 5781 })
        );
        assert_eq!(
            monthly_molad(0, 5782),
            Err(Error::InvalidMonth { month: 0 })
        );
        assert_eq!(
            monthly_molad(14, 5782),
            Err(Error::InvalidMonth { month: 14 })
        );
    }

    #[test]
    fn consecutive_months_are_one_lunation_apart() {
        for year in [5781, 5782, 1, 19, 20] {
            let order: Vec<u8> = if is_leap(year) {
                vec![1, 2, 3, 4, 5, 13, 6, 7, 8, 9, 10, 11, 12]
            } else {
                (1..=12).collect()
            };
            for pair in order.windows(2) {
                let a = monthly_molad(pair[0], year).unwrap();
                let b = monthly_molad(pair[1], year).unwrap();
                assert_eq!(b.checked_sub(a), Some(LUNATION));
            }
            let last = monthly_molad(*order.last().unwrap(), year).unwrap();
            assert_eq!(molad(year + 1).checked_sub(last), Some(LUNATION));
        }
    }
}
