//! Exact-arithmetic Hebrew calendar.
//!
//! * [`time`]: moments in days, hours and parts;
//! * [`year`]: the leap cycle and the molad of each year;
//! * [`new_year`]: Rosh Hashanah, year lengths, keviyot;
//! * [`conversion`]: Hebrew, absolute and Gregorian dates;
//! * [`verifier`]: exhaustive sweeps of the calendar's structural theorems.

pub mod conversion;
pub mod new_year;
pub mod time;
pub mod verifier;
pub mod year;

mod error;

pub use conversion::{DateLiteral, GregorianDate, HebrewDate};
pub use error::Error;
pub use new_year::{Dechiyah, Keviyah, YearClass};
pub use time::{Moment, Weekday};
pub use year::Year;
