use serde::Serialize;
use weakval_core::linalg::{self, C64};
use weakval_core::pointer::{
    estimate_mc, shift_convergence, simulate, McEstimate, PointerConfig, PointerResult,
    MIN_POSTSELECTED_NORM,
};
use weakval_core::scenarios;

use super::Outcome;
use crate::args::{OutputFormat, PointerArgs};
use crate::error::Result;
use crate::report::{csv_writer, print_json, RunManifest};

#[derive(Serialize)]
struct SweepPoint {
    g: f64,
    estimate: f64,
}

#[derive(Serialize)]
struct PointerReport<'a> {
    scenario: &'a str,
    observable: &'a str,
    #[serde(with = "linalg::pair")]
    weak_value: C64,
    #[serde(flatten)]
    result: PointerResult,
    #[serde(skip_serializing_if = "Option::is_none")]
    monte_carlo: Option<McEstimate>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    sweep: Vec<SweepPoint>,
}

pub fn run(args: &PointerArgs, format: OutputFormat) -> Result<Outcome> {
    let scenario = scenarios::build(&args.scenario)?;
    let op = &scenario.observable(&args.obs)?.operator;
    let sys = &scenario.system;

    let cfg = match args.halfwidth {
        Some(h) => PointerConfig::new(args.sigma, args.g, args.grid_points, h),
        None => PointerConfig {
            grid_points: args.grid_points,
            ..PointerConfig::for_observable(args.sigma, args.g, op)?
        },
    };
    let result = simulate(op, sys, &cfg)?;
    let monte_carlo = args
        .samples
        .map(|n| estimate_mc(op, sys, &cfg, n, args.seed))
        .transpose()?;
    let sweep = if args.gsweep.is_empty() {
        Vec::new()
    } else {
        shift_convergence(op, sys, args.sigma, &args.gsweep)?
            .into_iter()
            .map(|(g, estimate)| SweepPoint { g, estimate })
            .collect()
    };
    let report = PointerReport {
        scenario: scenario.name,
        observable: &args.obs,
        weak_value: sys.weak_value(op)?.value,
        result,
        monte_carlo,
        sweep,
    };

    match format {
        OutputFormat::Json => {
            let manifest = RunManifest::new(
                &[("min_postselected_norm", MIN_POSTSELECTED_NORM)],
                args.samples.map(|_| args.seed),
            );
            print_json(&manifest, &report)?;
        }
        OutputFormat::Csv => write_csv(&report)?,
        OutputFormat::Table => print_table(&report),
    }
    Ok(Outcome::Pass)
}

/// The convergence table when a sweep was requested, otherwise the
/// post-selected density.
fn write_csv(report: &PointerReport) -> Result<()> {
    let mut w = csv_writer();
    if report.sweep.is_empty() {
        w.write_record(["x", "density"])?;
        let d = &report.result.distribution;
        for (x, p) in d.x.iter().zip(&d.density) {
            w.write_record([x.to_string(), p.to_string()])?;
        }
    } else {
        w.write_record(["g", "estimate"])?;
        for point in &report.sweep {
            w.write_record([point.g.to_string(), point.estimate.to_string()])?;
        }
    }
    w.flush().map_err(csv::Error::from)?;
    Ok(())
}

fn print_table(report: &PointerReport) {
    let r = &report.result;
    let cfg = &r.config;
    println!(
        "{}.{}  Re<O>_w = {}",
        report.scenario, report.observable, report.weak_value.re
    );
    println!(
        "sigma {}  g {}  grid {} points over +/-{}",
        cfg.sigma, cfg.g, cfg.grid_points, cfg.grid_halfwidth
    );
    println!("mean shift                  {}", r.mean_shift);
    println!("estimate (shift / g)        {}", r.weak_value_estimate);
    println!("post-selection probability  {}", r.post_prob);
    if let Some(mc) = &report.monte_carlo {
        println!(
            "monte-carlo                 {} +/- {}  (n = {}, seed = {})",
            mc.estimate, mc.stderr, mc.n_samples, mc.seed
        );
    }
    if !report.sweep.is_empty() {
        println!(
            "{:>12} {:>12} {:>22} {:>12}",
            "g", "g/sigma", "estimate", "error"
        );
        for p in &report.sweep {
            println!(
                "{:>12} {:>12.3e} {:>22} {:>12.3e}",
                p.g,
                p.g / cfg.sigma,
                p.estimate,
                p.estimate - report.weak_value.re
            );
        }
    }
}
