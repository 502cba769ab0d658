use serde::Serialize;
use weakval_core::linalg::text::format_complex;
use weakval_core::linalg::{self, C64, DEFAULT_TOL};
use weakval_core::weak::ORTHOGONALITY_TOL;

use super::{read_system, Outcome};
use crate::args::{OutputFormat, SystemFiles};
use crate::error::Result;
use crate::report::{csv_writer, print_json, RunManifest};

#[derive(Serialize)]
struct WeakValueReport {
    dim: usize,
    #[serde(with = "linalg::pair")]
    weak_value: C64,
    #[serde(with = "linalg::pair")]
    overlap: C64,
    post_selection_probability: f64,
}

pub fn run(files: &SystemFiles, format: OutputFormat) -> Result<Outcome> {
    let (op, sys) = read_system(files)?;
    let w = sys.weak_value(&op)?;
    let report = WeakValueReport {
        dim: sys.dim(),
        weak_value: w.value,
        overlap: w.overlap,
        post_selection_probability: sys.postselect_probability(),
    };
    match format {
        OutputFormat::Json => {
            let manifest = RunManifest::new(
                &[
                    ("hermiticity", DEFAULT_TOL),
                    ("orthogonality", ORTHOGONALITY_TOL),
                ],
                None,
            );
            print_json(&manifest, &report)?;
        }
        OutputFormat::Csv => {
            let mut w = csv_writer();
            w.write_record([
                "weak_value_re",
                "weak_value_im",
                "overlap_re",
                "overlap_im",
                "post_selection_probability",
            ])?;
            w.write_record([
                report.weak_value.re.to_string(),
                report.weak_value.im.to_string(),
                report.overlap.re.to_string(),
                report.overlap.im.to_string(),
                report.post_selection_probability.to_string(),
            ])?;
            w.flush().map_err(csv::Error::from)?;
        }
        OutputFormat::Table => {
            println!(
                "weak value                  {}",
                format_complex(report.weak_value)
            );
            println!(
                "<psi_f|psi_i>               {}",
                format_complex(report.overlap)
            );
            println!(
                "post-selection probability  {}",
                report.post_selection_probability
            );
        }
    }
    Ok(Outcome::Pass)
}
