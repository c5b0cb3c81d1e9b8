use std::collections::BTreeSet;
use std::fmt;
use std::time::Duration;

/// The properties the verifier can sweep.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Property {
    Constants,
    Periodicity,
    YearLengths,
    Keviyot,
    Landau,
    Structure,
}

impl Property {
    pub const ALL: [Property; 6] = [
        Property::Constants,
        Property::Periodicity,
        Property::YearLengths,
        Property::Keviyot,
        Property::Landau,
        Property::Structure,
    ];

    pub const fn id(self) -> &'static str {
        match self {
            Property::Constants => "constants",
            Property::Periodicity => "periodicity",
            Property::YearLengths => "year-lengths",
            Property::Keviyot => "keviyot",
            Property::Landau => "landau",
            Property::Structure => "structure",
        }
    }

    pub fn from_id(id: &str) -> Option<Property> {
        Property::ALL.into_iter().find(|p| p.id() == id)
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

/// One failed check. `year` is the subject of the check; checks that are
/// not about a single year (period constants) use 0.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Counterexample {
    pub year: u64,
    pub observed: String,
    pub expected: String,
}

impl Counterexample {
    pub fn new(year: u64, observed: impl fmt::Display, expected: impl fmt::Display) -> Self {
        Counterexample {
            year,
            observed: observed.to_string(),
            expected: expected.to_string(),
        }
    }
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "year={} observed={} expected={}",
            self.year, self.observed, self.expected
        )
    }
}

/// Outcome of one property sweep.
#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub property: Property,
    pub start: u64,
    pub end: u64,
    /// Items the sweep was supposed to check: years, samples or identities.
    pub expected_checks: u64,
    pub checked: u64,
    pub counterexamples: Vec<Counterexample>,
    /// Distinct `(weekday code, length)` pairs seen; only keviyot sweeps fill this.
    pub realized_keviyot: Option<BTreeSet<(u8, u16)>>,
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty() && self.checked == self.expected_checks
    }

    /// Everything except the timing.
    pub fn same_outcome(&self, other: &VerificationReport) -> bool {
        self.property == other.property
            && self.start == other.start
            && self.end == other.end
            && self.expected_checks == other.expected_checks
            && self.checked == other.checked
            && self.counterexamples == other.counterexamples
            && self.realized_keviyot == other.realized_keviyot
    }

    pub fn header(&self) -> String {
        format!(
            "property={} range={}..{}",
            self.property, self.start, self.end
        )
    }

    pub fn trailer(&self) -> String {
        format!(
            "result={} checked={} elapsed_ms={}",
            if self.passed() { "pass" } else { "fail" },
            self.checked,
            self.elapsed.as_millis()
        )
    }
}

/// Renders the line-oriented record: header, one line per counterexample, trailer.
impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.header())?;
        for counterexample in &self.counterexamples {
            writeln!(f, "{counterexample}")?;
        }
        writeln!(f, "{}", self.trailer())
    }
}

/// A parsed report record, the inverse of [`VerificationReport`]'s `Display`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReportRecord {
    pub property: String,
    pub start: u64,
    pub end: u64,
    pub counterexamples: Vec<Counterexample>,
    pub passed: bool,
    pub checked: u64,
    pub elapsed_ms: u128,
}

fn field<'a>(token: Option<&'a str>, key: &str) -> Option<&'a str> {
    token?.strip_prefix(key)?.strip_prefix('=')
}

/// Reads back a stream of report records, returning `None` on malformed input.
pub fn parse_reports(text: &str) -> Option<Vec<ReportRecord>> {
    let mut records = Vec::new();
    let mut lines = text.lines();
    while let Some(line) = lines.next() {
        if line.is_empty() {
            continue;
        }
        let mut tokens = line.split(' ');
        let property = field(tokens.next(), "property")?.to_owned();
        let (start, end) = field(tokens.next(), "range")?.split_once("..")?;
        let mut record = ReportRecord {
            property,
            start: start.parse().ok()?,
            end: end.parse().ok()?,
            counterexamples: Vec::new(),
            passed: false,
            checked: 0,
            elapsed_ms: 0,
        };
        loop {
            let line = lines.next()?;
            let mut tokens = line.split(' ');
            if let Some(result) = field(tokens.clone().next(), "result") {
                tokens.next();
                record.passed = match result {
                    "pass" => true,
                    "fail" => false,
                    _ => return None,
                };
                record.checked = field(tokens.next(), "checked")?.parse().ok()?;
                record.elapsed_ms = field(tokens.next(), "elapsed_ms")?.parse().ok()?;
                break;
            }
            record.counterexamples.push(Counterexample {
                year: field(tokens.next(), "year")?.parse().ok()?,
                observed: field(tokens.next(), "observed")?.to_owned(),
                expected: field(tokens.next(), "expected")?.to_owned(),
            });
        }
        records.push(record);
    }
    Some(records)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn report(counterexamples: Vec<Counterexample>) -> VerificationReport {
        VerificationReport {
            property: Property::YearLengths,
            start: 1,
            end: 19,
            expected_checks: 19,
            checked: 19,
            counterexamples,
            realized_keviyot: None,
            elapsed: Duration::from_millis(7),
        }
    }

    #[test]
    fn renders_format() {
        let text = report(vec![]).to_string();
        assert_eq!(
            text,
            "property=year-lengths range=1..19\nresult=pass checked=19 elapsed_ms=7\n"
        );
        let text = report(vec![Counterexample::new(5, 356, "{353,354,355}")]).to_string();
        assert_eq!(
            text,
            "property=year-lengths range=1..19\nyear=5 observed=356 expected={353,354,355}\nresult=fail checked=19 elapsed_ms=7\n"
        );
    }

    #[test]
    fn short_sweeps_fail() {
        let mut r = report(vec![]);
        r.checked = 18;
        assert!(!r.passed());
    }

    #[test]
    fn parse_inverts_render() {
        let a = report(vec![Counterexample::new(5, 356, "{353,354,355}")]);
        let b = report(vec![]);
        let parsed = parse_reports(&format!("{a}{b}")).unwrap();
        assert_eq!(parsed.len(), 2);
        assert_eq!(parsed[0].counterexamples, a.counterexamples);
        assert!(!parsed[0].passed);
        assert!(parsed[1].passed);
        assert_eq!(
            (parsed[1].start, parsed[1].end, parsed[1].checked),
            (1, 19, 19)
        );
        assert_eq!(parse_reports("property=x\n"), None);
    }

    #[test]
    fn property_ids() {
        for p in Property::ALL {
            assert_eq!(Property::from_id(p.id()), Some(p));
        }
        assert_eq!(Property::from_id("all"), None);
    }
}
