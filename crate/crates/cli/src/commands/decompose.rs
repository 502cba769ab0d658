use serde::Serialize;
use weakval_core::decomp::{self, Decomposition, VerificationReport, SOLVE_TOL};
use weakval_core::linalg::text::format_matrix;
use weakval_core::linalg::ComplexMatrix;
use weakval_core::weak::PrePostSystem;

use super::{read_matrix, read_system, Outcome};
use crate::args::{OutputFormat, SystemFiles, VerifyArgs};
use crate::error::Result;
use crate::report::{csv_writer, print_json, verdict, RunManifest};

#[derive(Serialize)]
struct DecompositionReport<'a> {
    #[serde(skip_serializing_if = "Option::is_none")]
    fixture: Option<&'a str>,
    #[serde(flatten)]
    decomposition: &'a Decomposition,
    report: VerificationReport,
}

pub fn solve(
    files: &SystemFiles,
    p: Option<f64>,
    tol: f64,
    format: OutputFormat,
) -> Result<Outcome> {
    let (op, sys) = read_system(files)?;
    let d = decomp::solve(&op, &sys, p)?;
    let report = decomp::verify(&op, &sys, &d, tol)?;
    emit(
        &DecompositionReport {
            fixture: None,
            decomposition: &d,
            report,
        },
        &[("solver", SOLVE_TOL), ("tol", tol)],
        format,
    )
}

pub fn verify(args: &VerifyArgs, format: OutputFormat) -> Result<Outcome> {
    let (name, op, sys, d) = match &args.fixture {
        Some(name) => {
            let f = decomp::fixture(name)?;
            (Some(f.name), f.observable, f.system, f.decomposition)
        }
        None => {
            // clap guarantees the file set is complete without --fixture
            let files = SystemFiles {
                obs: args.obs.clone().expect("required"),
                pre: args.pre.clone().expect("required"),
                post: args.post.clone().expect("required"),
            };
            let (op, sys): (ComplexMatrix, PrePostSystem) = read_system(&files)?;
            let p_part = read_matrix(args.pfile.as_ref().expect("required"))?;
            let q_part = read_matrix(args.qfile.as_ref().expect("required"))?;
            let d = Decomposition::new(
                p_part,
                q_part,
                args.p.expect("required"),
                args.q.expect("required"),
            )?;
            (None, op, sys, d)
        }
    };
    let report = decomp::verify(&op, &sys, &d, args.tol)?;
    emit(
        &DecompositionReport {
            fixture: name,
            decomposition: &d,
            report,
        },
        &[("tol", args.tol)],
        format,
    )
}

fn emit(
    r: &DecompositionReport,
    tolerances: &[(&'static str, f64)],
    format: OutputFormat,
) -> Result<Outcome> {
    let rep = &r.report;
    let fields = [
        ("p", r.decomposition.p),
        ("q", r.decomposition.q),
        ("residual_sum", rep.residual_sum),
        ("residual_pre", rep.residual_pre),
        ("residual_post", rep.residual_post),
        ("hermiticity_p", rep.hermiticity_p),
        ("hermiticity_q", rep.hermiticity_q),
        ("weak_value_gap", rep.weak_value_gap),
        ("tolerance", rep.tolerance),
    ];
    match format {
        OutputFormat::Json => print_json(&RunManifest::new(tolerances, None), r)?,
        OutputFormat::Csv => {
            let mut w = csv_writer();
            w.write_record(["quantity", "value"])?;
            for (k, v) in fields {
                w.write_record([k.to_string(), v.to_string()])?;
            }
            w.write_record(["passed", if rep.passed { "true" } else { "false" }])?;
            w.flush().map_err(csv::Error::from)?;
        }
        OutputFormat::Table => {
            if let Some(name) = r.fixture {
                println!("fixture {name}");
            }
            print!("P\n{}", format_matrix(&r.decomposition.p_part));
            print!("Q\n{}", format_matrix(&r.decomposition.q_part));
            for (k, v) in &fields[..2] {
                println!("{k:<15} {v}");
            }
            for (k, v) in &fields[2..] {
                println!("{k:<15} {v:.3e}");
            }
            println!("{}", verdict(rep.passed));
        }
    }
    Ok(rep.passed.into())
}
