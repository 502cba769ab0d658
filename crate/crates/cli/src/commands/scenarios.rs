use serde::Serialize;
use weakval_core::linalg::text::format_complex;
use weakval_core::scenarios::{self, ScenarioReport};

use super::Outcome;
use crate::args::OutputFormat;
use crate::error::Result;
use crate::report::{csv_writer, print_json, verdict, RunManifest};

#[derive(Serialize)]
struct Entry {
    name: &'static str,
    description: &'static str,
    observables: Vec<&'static str>,
    fixtures: Vec<&'static str>,
}

#[derive(Serialize)]
struct Listing {
    scenarios: Vec<Entry>,
}

pub fn list(format: OutputFormat) -> Result<Outcome> {
    let scenarios = scenarios::list_scenarios()
        .iter()
        .map(|&name| {
            let s = scenarios::build(name)?;
            Ok(Entry {
                name: s.name,
                description: s.description,
                observables: s.observables.iter().map(|o| o.label).collect(),
                fixtures: s.fixtures,
            })
        })
        .collect::<Result<Vec<_>>>()?;

    match format {
        OutputFormat::Json => print_json(&RunManifest::new(&[], None), &Listing { scenarios })?,
        OutputFormat::Csv => {
            let mut w = csv_writer();
            w.write_record(["name", "observables", "description"])?;
            for e in &scenarios {
                w.write_record([e.name, &e.observables.join(" "), e.description])?;
            }
            w.flush().map_err(csv::Error::from)?;
        }
        OutputFormat::Table => {
            for e in &scenarios {
                println!(
                    "{:<11} {:<26} {}",
                    e.name,
                    e.observables.join(" "),
                    e.description
                );
            }
        }
    }
    Ok(Outcome::Pass)
}

pub fn run(name: &str, tol: f64, format: OutputFormat) -> Result<Outcome> {
    let report = scenarios::run(name, tol)?;
    match format {
        OutputFormat::Json => print_json(&RunManifest::new(&[("tol", tol)], None), &report)?,
        OutputFormat::Csv => write_csv(&report)?,
        OutputFormat::Table => print_table(&report, tol),
    }
    Ok(report.passed.into())
}

fn write_csv(report: &ScenarioReport) -> Result<()> {
    let mut w = csv_writer();
    w.write_record([
        "label",
        "computed_re",
        "computed_im",
        "expected_re",
        "expected_im",
        "gap",
    ])?;
    for row in &report.rows {
        w.write_record([
            row.label.clone(),
            row.computed.re.to_string(),
            row.computed.im.to_string(),
            row.expected.re.to_string(),
            row.expected.im.to_string(),
            row.gap.to_string(),
        ])?;
    }
    w.flush().map_err(csv::Error::from)?;
    Ok(())
}

fn print_table(report: &ScenarioReport, tol: f64) {
    println!("scenario {}", report.name);
    println!(
        "  {:<10} {:>24} {:>24} {:>10}",
        "observable", "weak value", "expected", "gap"
    );
    for row in &report.rows {
        println!(
            "  {:<10} {:>24} {:>24} {:>10.1e}",
            row.label,
            format_complex(row.computed),
            format_complex(row.expected),
            row.gap
        );
    }
    for check in &report.fixtures {
        println!(
            "  fixture {:<20} max residual {:>9.1e}  {}",
            check.fixture,
            check.report.max_residual(),
            verdict(check.report.passed)
        );
    }
    println!("{} (tol {tol:e})", verdict(report.passed));
}
