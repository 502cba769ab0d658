//! Plain-text matrix and state files.
//!
//! ```text
//! dim 2
//! 0 -i
//! i 0
//! ```
//!
//! A matrix file holds `dim n` followed by `n` rows of `n` entries; a state
//! file holds `dim n` followed by a single row. Entries are `re`, `im i` or
//! `re±im i` with plain decimal or exponent notation (`0.5-0.5i`, `-i`,
//! `1e-3+2i`). Blank lines and lines starting with `#` are ignored.

use super::{ComplexMatrix, StateVector, C64};
use crate::error::{Error, Result};

fn parse_real(s: &str, line: usize) -> Result<f64> {
    let x: f64 = s.parse().map_err(|_| Error::Parse {
        line,
        msg: format!("invalid number `{s}`"),
    })?;
    if !x.is_finite() {
        return Err(Error::Parse {
            line,
            msg: format!("non-finite number `{s}`"),
        });
    }
    Ok(x)
}

fn parse_imag_coefficient(s: &str, line: usize) -> Result<f64> {
    match s {
        "" | "+" => Ok(1.0),
        "-" => Ok(-1.0),
        _ => parse_real(s, line),
    }
}

/// Parses one entry token; `line` is only used for error messages.
pub fn parse_complex(token: &str, line: usize) -> Result<C64> {
    let token = token.trim();
    let Some(body) = token.strip_suffix('i') else {
        return Ok(C64::new(parse_real(token, line)?, 0.0));
    };
    // split at the last sign that is not the leading one or part of an exponent
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&k| matches!(bytes[k], b'+' | b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
    match split {
        Some(k) => Ok(C64::new(
            parse_real(&body[..k], line)?,
            parse_imag_coefficient(&body[k..], line)?,
        )),
        None => Ok(C64::new(0.0, parse_imag_coefficient(body, line)?)),
    }
}

/// Shortest text that parses back to the same bits.
pub fn format_complex(z: C64) -> String {
    let positive_zero = |x: f64| x == 0.0 && x.is_sign_positive();
    if positive_zero(z.im) {
        format!("{}", z.re)
    } else if positive_zero(z.re) {
        format!("{}i", z.im)
    } else if z.im.is_sign_negative() {
        format!("{}-{}i", z.re, -z.im)
    } else {
        format!("{}+{}i", z.re, z.im)
    }
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_header<'a>(lines: &mut impl Iterator<Item = (usize, &'a str)>) -> Result<usize> {
    let (line, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        msg: "missing `dim n` header".into(),
    })?;
    let mut parts = header.split_whitespace();
    let dim = match (parts.next(), parts.next(), parts.next()) {
        (Some("dim"), Some(n), None) => n.parse::<usize>().map_err(|_| Error::Parse {
            line,
            msg: format!("invalid dimension `{n}`"),
        })?,
        _ => {
            return Err(Error::Parse {
                line,
                msg: "expected `dim n` header".into(),
            })
        }
    };
    if dim == 0 {
        return Err(Error::Parse {
            line,
            msg: "dimension must be at least 1".into(),
        });
    }
    Ok(dim)
}

fn parse_row(line: usize, text: &str, dim: usize) -> Result<Vec<C64>> {
    let row = text
        .split_whitespace()
        .map(|t| parse_complex(t, line))
        .collect::<Result<Vec<_>>>()?;
    if row.len() != dim {
        return Err(Error::Parse {
            line,
            msg: format!("expected {dim} entries, found {}", row.len()),
        });
    }
    Ok(row)
}

fn parse_rows(text: &str, rows_wanted: impl Fn(usize) -> usize) -> Result<(usize, Vec<C64>)> {
    let mut lines = content_lines(text);
    let dim = parse_header(&mut lines)?;
    let wanted = rows_wanted(dim);
    let mut entries = Vec::with_capacity(wanted * dim);
    for _ in 0..wanted {
        let (line, row) = lines.next().ok_or(Error::Parse {
            line: text.lines().count(),
            msg: format!("expected {wanted} rows of entries"),
        })?;
        entries.extend(parse_row(line, row, dim)?);
    }
    if let Some((line, _)) = lines.next() {
        return Err(Error::Parse {
            line,
            msg: "unexpected trailing content".into(),
        });
    }
    Ok((dim, entries))
}

pub fn parse_matrix(text: &str) -> Result<ComplexMatrix> {
    let (dim, entries) = parse_rows(text, |n| n)?;
    ComplexMatrix::new(dim, entries)
}

/// Parses a state file; amplitudes must already be normalized.
pub fn parse_state(text: &str) -> Result<StateVector> {
    let (_, entries) = parse_rows(text, |_| 1)?;
    StateVector::new(entries)
}

pub fn format_matrix(m: &ComplexMatrix) -> String {
    let mut out = format!("dim {}\n", m.dim());
    for row in m.rows() {
        let cells: Vec<String> = row.iter().map(|&z| format_complex(z)).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    out
}

pub fn format_state(s: &StateVector) -> String {
    let cells: Vec<String> = s.amplitudes().iter().map(|&z| format_complex(z)).collect();
    format!("dim {}\n{}\n", s.dim(), cells.join(" "))
}
