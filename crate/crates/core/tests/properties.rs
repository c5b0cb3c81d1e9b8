use proptest::prelude::*;

use hebcal::conversion::{
    absolute_to_hebrew, gregorian_to_hebrew, hebrew_to_absolute, hebrew_to_gregorian, month_length,
    months_in_order,
};
use hebcal::new_year::{applied_dechiyah, keviyah, rosh_hashanah, year_length, Dechiyah};
use hebcal::time::{Weekday, LUNATION};
use hebcal::verifier::{Sweep, PERIOD_YEARS};
use hebcal::year::{delayed_molad, is_leap, molad, molad_by_summation, monthly_molad};
use hebcal::{GregorianDate, HebrewDate};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn absolute_hebrew_round_trip(a in 2i64..400_000_000) {
        let date = absolute_to_hebrew(a).unwrap();
        prop_assert_eq!(hebrew_to_absolute(&date), a);
    }

    #[test]
    fn absolute_gregorian_round_trip(a in -1_000_000_000i64..1_000_000_000) {
        prop_assert_eq!(GregorianDate::from_absolute(a).to_absolute(), a);
    }

    #[test]
    fn hebrew_gregorian_round_trip(year in 1u32..20_000, month in 1u8..=13, day in 1u8..=30) {
        if let Ok(date) = HebrewDate::new(year, month, day) {
            let gregorian = hebrew_to_gregorian(&date);
            prop_assert_eq!(gregorian_to_hebrew(&gregorian), Ok(date));
        }
    }

    #[test]
    fn landau_bound(year in 1u32..1_000_000) {
        for &month in months_in_order(year) {
            let first = HebrewDate::new(year, month, 1).unwrap();
            let m = monthly_molad(month, year).unwrap();
            prop_assert!(m.day() as i64 <= hebrew_to_absolute(&first));
        }
    }

    #[test]
    fn new_year_rules(year in 1u32..2_000_000) {
        let rh = rosh_hashanah(year);
        let delayed = delayed_molad(year);
        let offset = rh - delayed.day() as i64;
        prop_assert_eq!(offset, applied_dechiyah(year).days());
        prop_assert!(rh - molad(year).day() as i64 <= 2);
        prop_assert!(rosh_hashanah(year + 1) > rh);
        let k = keviyah(year);
        prop_assert!(k.is_permitted());
        prop_assert_eq!(k.leap, is_leap(year));
        if matches!(delayed.weekday(), Weekday::Sunday | Weekday::Wednesday | Weekday::Friday) {
            prop_assert_eq!(applied_dechiyah(year), Dechiyah::Second);
        }
        if k.start == Weekday::Tuesday {
            prop_assert!(matches!(k.length, 354 | 384));
        }
    }

    #[test]
    fn period_shift(year in 1u32..3_000_000) {
        let later = year + PERIOD_YEARS;
        let delta = molad(later).checked_sub(molad(year)).unwrap();
        prop_assert_eq!((delta.day(), delta.hour(), delta.part()), (251_827_457, 0, 0));
        prop_assert_eq!(year_length(later), year_length(year));
        prop_assert_eq!(keviyah(later), keviyah(year));
    }

    #[test]
    fn summation_matches_closed_form(year in 1u32..200_000) {
        prop_assert_eq!(molad_by_summation(year), molad(year));
    }
}

proptest! {
    // each chunk is seeded by the O(year) summation, so keep the case count low
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn sweep_independent_of_partitioning(start in 1u32..500_000, len in 1u32..5_000, jobs in 1usize..9) {
        let single = Sweep::new(start..=start + len).unwrap();
        let multi = single.clone().jobs(jobs);
        prop_assert!(single.keviyot().same_outcome(&multi.keviyot()));
        prop_assert!(single.structure().same_outcome(&multi.structure()));
    }
}

#[test]
fn months_fill_each_year() {
    for year in 1..5000 {
        let length = year_length(year);
        let total: u32 = months_in_order(year)
            .iter()
            .map(|&m| u32::from(month_length(m, length).unwrap()))
            .sum();
        assert_eq!(total, u32::from(length));
    }
}

#[test]
fn consecutive_month_moladot() {
    for year in 5700..5800 {
        let order = months_in_order(year);
        for pair in order.windows(2) {
            let a = monthly_molad(pair[0], year).unwrap();
            let b = monthly_molad(pair[1], year).unwrap();
            assert_eq!(b.checked_sub(a), Some(LUNATION));
        }
    }
}

#[test]
fn every_keviyah_weekday_rule() {
    // the three clauses, year by year over two periods' worth of samples
    for year in (1..2 * PERIOD_YEARS).step_by(101) {
        let k = keviyah(year);
        match k.start {
            Weekday::Tuesday => assert!(matches!(k.length, 354 | 384)),
            Weekday::Saturday | Weekday::Monday => {
                assert!(matches!(k.length, 353 | 355 | 383 | 385))
            }
            Weekday::Thursday => assert!(matches!(k.length, 354 | 355 | 383 | 385)),
            other => panic!("year {year} starts on {other}"),
        }
    }
}
