//! `hebcal`: date conversion, molad queries, year summaries and verification sweeps.
//!
//! Exit status: 0 success, 1 verification failure, 2 usage or parse error,
//! 3 date outside the Hebrew calendar.

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use hebcal::conversion::absolute_to_hebrew;
use hebcal::new_year::{applied_dechiyah, keviyah, rosh_hashanah};
use hebcal::verifier::{
    default_periodicity_samples, verify_period_constants, verify_periodicity, Property, Sweep,
    VerificationReport, MAX_SWEEP_YEAR, PERIOD_YEARS,
};
use hebcal::year::{is_leap, molad, monthly_molad};
use hebcal::{DateLiteral, Error, GregorianDate, Moment, Year};

const EXIT_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_DOMAIN: u8 = 3;

#[derive(Parser, Debug)]
#[command(name = "hebcal", version, about = "Exact Hebrew calendar arithmetic")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Convert a date literal (H:YYYY-MM-DD, G:±YYYY-MM-DD or A:<day>)
    Convert {
        #[arg(long, value_enum)]
        to: Target,
        #[arg(allow_hyphen_values = true)]
        date: String,
        #[arg(long)]
        json: bool,
    },
    /// Molad of a year, or of one month of it
    Molad {
        year: Year,
        #[arg(long)]
        month: Option<u8>,
        #[arg(long)]
        json: bool,
    },
    /// Rosh Hashanah, length, keviyah and postponement of a year
    YearInfo {
        year: Year,
        #[arg(long)]
        json: bool,
    },
    /// Run verification sweeps and print their reports
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        #[arg(long)]
        start: Option<Year>,
        #[arg(long)]
        end: Option<Year>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Target {
    Gregorian,
    Hebrew,
    Absolute,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Suite {
    Constants,
    Periodicity,
    YearLengths,
    Keviyot,
    Landau,
    Structure,
    All,
}

impl Suite {
    fn properties(self) -> Vec<Property> {
        match self {
            Suite::Constants => vec![Property::Constants],
            Suite::Periodicity => vec![Property::Periodicity],
            Suite::YearLengths => vec![Property::YearLengths],
            Suite::Keviyot => vec![Property::Keviyot],
            Suite::Landau => vec![Property::Landau],
            Suite::Structure => vec![Property::Structure],
            Suite::All => Property::ALL.to_vec(),
        }
    }
}

/// A failure carrying its exit status.
struct Failure {
    status: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        Failure {
            status: if err.is_out_of_domain() {
                EXIT_DOMAIN
            } else {
                EXIT_USAGE
            },
            message: err.to_string(),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(err: io::Error) -> Self {
        Failure {
            status: EXIT_USAGE,
            message: err.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        status: EXIT_USAGE,
        message: message.into(),
    }
}

fn check_year(year: Year) -> Result<(), Failure> {
    if year == 0 || year > MAX_SWEEP_YEAR {
        return Err(Error::InvalidYear { year }.into());
    }
    Ok(())
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("serializable")
}

#[derive(Serialize)]
struct ConvertRecord {
    input: String,
    result: String,
    absolute: i64,
    hebrew: Option<String>,
    gregorian: String,
    weekday: &'static str,
}

fn cmd_convert(to: Target, date: &str, json: bool) -> Result<String, Failure> {
    let literal: DateLiteral = date.parse()?;
    let absolute = literal.to_absolute();
    let result = match to {
        Target::Gregorian => literal.to_gregorian().to_string(),
        Target::Hebrew => literal.to_hebrew()?.to_string(),
        Target::Absolute => absolute.to_string(),
    };
    if !json {
        return Ok(result);
    }
    let hebrew = match literal.to_hebrew() {
        Ok(date) => Some(date.to_string()),
        Err(err) if err.is_out_of_domain() => None,
        Err(err) => return Err(err.into()),
    };
    Ok(to_json(&ConvertRecord {
        input: literal.to_string(),
        result,
        absolute,
        hebrew,
        gregorian: literal.to_gregorian().to_string(),
        weekday: hebcal::Weekday::of(absolute).name(),
    }))
}

#[derive(Serialize)]
struct MoladRecord {
    year: Year,
    month: Option<u8>,
    day: u64,
    hour: u32,
    part: u32,
    weekday: &'static str,
}

fn cmd_molad(year: Year, month: Option<u8>, json: bool) -> Result<String, Failure> {
    check_year(year)?;
    let moment: Moment = match month {
        Some(month) => monthly_molad(month, year)?,
        None => molad(year),
    };
    let weekday = moment.weekday().name();
    if json {
        return Ok(to_json(&MoladRecord {
            year,
            month,
            day: moment.day(),
            hour: moment.hour(),
            part: moment.part(),
            weekday,
        }));
    }
    Ok(format!("{moment} ({weekday})"))
}

#[derive(Serialize)]
struct YearRecordOut {
    year: Year,
    leap: bool,
    rosh_hashanah: i64,
    rosh_hashanah_hebrew: String,
    rosh_hashanah_gregorian: String,
    weekday: &'static str,
    weekday_code: u8,
    length: u16,
    class: &'static str,
    dechiyah: &'static str,
    molad: String,
}

fn cmd_year_info(year: Year, json: bool) -> Result<String, Failure> {
    check_year(year)?;
    let new_year = rosh_hashanah(year);
    let character = keviyah(year);
    let record = YearRecordOut {
        year,
        leap: is_leap(year),
        rosh_hashanah: new_year,
        rosh_hashanah_hebrew: absolute_to_hebrew(new_year)?.to_string(),
        rosh_hashanah_gregorian: GregorianDate::from_absolute(new_year).to_string(),
        weekday: character.start.name(),
        weekday_code: character.start.code(),
        length: character.length,
        class: character.class().map_or("inadmissible", |c| c.name()),
        dechiyah: applied_dechiyah(year).name(),
        molad: molad(year).to_string(),
    };
    if json {
        return Ok(to_json(&record));
    }
    Ok([
        format!("year: {}", record.year),
        format!("leap: {}", record.leap),
        format!("rosh_hashanah: {}", record.rosh_hashanah),
        format!("rosh_hashanah_hebrew: {}", record.rosh_hashanah_hebrew),
        format!(
            "rosh_hashanah_gregorian: {}",
            record.rosh_hashanah_gregorian
        ),
        format!("weekday: {}", record.weekday),
        format!("length: {}", record.length),
        format!("class: {}", record.class),
        format!("dechiyah: {}", record.dechiyah),
        format!("molad: {}", record.molad),
    ]
    .join("\n"))
}

#[derive(Serialize)]
struct CounterexampleOut<'a> {
    year: u64,
    observed: &'a str,
    expected: &'a str,
}

#[derive(Serialize)]
struct ReportOut<'a> {
    property: &'static str,
    start: u64,
    end: u64,
    passed: bool,
    checked: u64,
    counterexamples: Vec<CounterexampleOut<'a>>,
    distinct_keviyot: Option<usize>,
    elapsed_ms: u128,
}

impl<'a> From<&'a VerificationReport> for ReportOut<'a> {
    fn from(report: &'a VerificationReport) -> Self {
        ReportOut {
            property: report.property.id(),
            start: report.start,
            end: report.end,
            passed: report.passed(),
            checked: report.checked,
            counterexamples: report
                .counterexamples
                .iter()
                .map(|c| CounterexampleOut {
                    year: c.year,
                    observed: &c.observed,
                    expected: &c.expected,
                })
                .collect(),
            distinct_keviyot: report.realized_keviyot.as_ref().map(|k| k.len()),
            elapsed_ms: report.elapsed.as_millis(),
        }
    }
}

fn cmd_verify(
    suite: Suite,
    start: Option<Year>,
    end: Option<Year>,
    jobs: usize,
) -> Result<Vec<VerificationReport>, Failure> {
    if jobs == 0 {
        return Err(usage("--jobs must be at least 1"));
    }
    let default_range = start.is_none() && end.is_none();
    let start = start.unwrap_or(1);
    let end = end.unwrap_or(start.saturating_add(PERIOD_YEARS - 1));
    let sweep = Sweep::new(start..=end)?.jobs(jobs);

    let mut reports = Vec::new();
    for property in suite.properties() {
        let report = match property {
            Property::Constants => verify_period_constants(),
            Property::Periodicity => {
                let samples = if default_range {
                    default_periodicity_samples()
                } else {
                    (start..=end).collect()
                };
                verify_periodicity(&samples)?
            }
            other => sweep.property(other).expect("sweep property"),
        };
        reports.push(report);
    }
    Ok(reports)
}

fn run(cli: Cli) -> Result<u8, Failure> {
    let (output, status, out_path) = match cli.command {
        Command::Convert { to, date, json } => (cmd_convert(to, &date, json)? + "\n", 0, None),
        Command::Molad { year, month, json } => (cmd_molad(year, month, json)? + "\n", 0, None),
        Command::YearInfo { year, json } => (cmd_year_info(year, json)? + "\n", 0, None),
        Command::Verify {
            suite,
            start,
            end,
            jobs,
            out,
            json,
        } => {
            let reports = cmd_verify(suite, start, end, jobs)?;
            let status = if reports.iter().all(VerificationReport::passed) {
                0
            } else {
                EXIT_FAILED
            };
            let text = if json {
                let records: Vec<ReportOut> = reports.iter().map(ReportOut::from).collect();
                to_json(&records) + "\n"
            } else {
                reports.iter().map(ToString::to_string).collect()
            };
            (text, status, out)
        }
    };
    match out_path {
        Some(path) => fs::write(path, output)?,
        None => io::stdout().write_all(output.as_bytes())?,
    }
    Ok(status)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(status) => ExitCode::from(status),
        Err(failure) => {
            eprintln!("hebcal: {}", failure.message);
            ExitCode::from(failure.status)
        }
    }
}
