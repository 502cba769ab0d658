//! Minimum-norm Hermitian `P` under the two eigen-constraints.
//!
//! `P` is parametrized by `n^2` reals: the diagonal entries and, for each
//! `j < k`, `P[j][k] = (u + i v) / sqrt(2)`. With that scaling the Euclidean
//! norm of the parameter vector equals the Frobenius norm of `P`.
//!
//! The constraints `P psi_i = p psi_i` and `P psi_f = (O - q) psi_f` give
//! `4n` real linear equations `A x = b`. The minimum-norm solution is
//! `x = A_S^T (A_S A_S^T)^{-1} b_S`, where `S` is a maximal set of
//! independent rows picked by pivoted Cholesky on the Gram matrix `A A^T`.

use std::f64::consts::FRAC_1_SQRT_2;

use super::{verify, Decomposition, SOLVE_TOL};
use crate::error::{Error, Result};
use crate::linalg::{ComplexMatrix, C64, DEFAULT_TOL};
use crate::weak::{require_hermitian, PrePostSystem};

/// Relative pivot floor for the Gram-matrix factorization.
const PIVOT_RTOL: f64 = 1e-12;

#[derive(Clone, Copy)]
enum Param {
    Diag(usize),
    Re(usize, usize),
    Im(usize, usize),
}

fn params(n: usize) -> Vec<Param> {
    let mut out: Vec<Param> = (0..n).map(Param::Diag).collect();
    for j in 0..n {
        for k in j + 1..n {
            out.push(Param::Re(j, k));
            out.push(Param::Im(j, k));
        }
    }
    out
}

/// Image of `psi` under the Hermitian basis element of `param`.
fn basis_image(param: Param, psi: &[C64]) -> Vec<C64> {
    let mut out = vec![C64::new(0.0, 0.0); psi.len()];
    match param {
        Param::Diag(k) => out[k] = psi[k],
        Param::Re(j, k) => {
            out[j] = psi[k] * FRAC_1_SQRT_2;
            out[k] = psi[j] * FRAC_1_SQRT_2;
        }
        Param::Im(j, k) => {
            out[j] = C64::new(0.0, FRAC_1_SQRT_2) * psi[k];
            out[k] = C64::new(0.0, -FRAC_1_SQRT_2) * psi[j];
        }
    }
    out
}

fn split_re_im(v: &[C64]) -> impl Iterator<Item = f64> + '_ {
    v.iter().map(|z| z.re).chain(v.iter().map(|z| z.im))
}

fn assemble(params: &[Param], x: &[f64], n: usize) -> ComplexMatrix {
    let mut m = ComplexMatrix::zeros(n);
    for (&param, &value) in params.iter().zip(x) {
        match param {
            Param::Diag(k) => m.set(k, k, C64::new(value, 0.0)),
            Param::Re(j, k) => {
                let z = m.get(j, k) + value * FRAC_1_SQRT_2;
                m.set(j, k, z);
                m.set(k, j, z.conj());
            }
            Param::Im(j, k) => {
                let z = m.get(j, k) + C64::new(0.0, value * FRAC_1_SQRT_2);
                m.set(j, k, z);
                m.set(k, j, z.conj());
            }
        }
    }
    m
}

/// Minimum-norm solution of a consistent (possibly rank-deficient) system
/// given as dense rows.
fn min_norm_solve(rows: &[Vec<f64>], rhs: &[f64]) -> Vec<f64> {
    let r = rows.len();
    let dot = |a: &[f64], b: &[f64]| a.iter().zip(b).map(|(x, y)| x * y).sum::<f64>();
    let mut gram: Vec<Vec<f64>> = (0..r)
        .map(|i| (0..r).map(|j| dot(&rows[i], &rows[j])).collect())
        .collect();

    // outer-product Cholesky with diagonal pivoting; `gram` holds the
    // Schur complement below row `k` and the factor L at and above it
    let mut perm: Vec<usize> = (0..r).collect();
    let floor = PIVOT_RTOL * (0..r).map(|i| gram[i][i]).fold(0.0, f64::max);
    let mut rank = 0;
    for k in 0..r {
        let pivot = (k..r)
            .max_by(|&a, &b| gram[a][a].total_cmp(&gram[b][b]))
            .expect("non-empty range");
        if gram[pivot][pivot] <= floor {
            break;
        }
        gram.swap(k, pivot);
        for row in gram.iter_mut() {
            row.swap(k, pivot);
        }
        perm.swap(k, pivot);

        let lkk = gram[k][k].sqrt();
        gram[k][k] = lkk;
        for row in &mut gram[k + 1..] {
            row[k] /= lkk;
        }
        for i in k + 1..r {
            for j in k + 1..=i {
                let update = gram[i][k] * gram[j][k];
                gram[i][j] -= update;
                gram[j][i] = gram[i][j];
            }
        }
        rank += 1;
    }

    // L L^T y = b_S on the selected rows
    let mut y: Vec<f64> = perm[..rank].iter().map(|&i| rhs[i]).collect();
    for i in 0..rank {
        let s: f64 = (0..i).map(|k| gram[i][k] * y[k]).sum();
        y[i] = (y[i] - s) / gram[i][i];
    }
    for i in (0..rank).rev() {
        let s: f64 = (i + 1..rank).map(|k| gram[k][i] * y[k]).sum();
        y[i] = (y[i] - s) / gram[i][i];
    }

    let cols = rows.first().map_or(0, Vec::len);
    let mut x = vec![0.0; cols];
    for (s, &row) in perm[..rank].iter().enumerate() {
        for (xc, a) in x.iter_mut().zip(&rows[row]) {
            *xc += y[s] * a;
        }
    }
    x
}

/// Finds `O = P + Q` with `P psi_i = p psi_i`, `Q psi_f = q psi_f`.
///
/// `p` defaults to half the weak value. Among all Hermitian `P` meeting the
/// constraints the one with the smallest Frobenius norm is returned.
pub fn solve(
    op: &ComplexMatrix,
    sys: &PrePostSystem,
    p_choice: Option<f64>,
) -> Result<Decomposition> {
    let n = sys.dim();
    if op.dim() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: op.dim(),
        });
    }
    require_hermitian(op)?;
    let weak = sys.raw_weak_value(op)?;
    if weak.im.abs() > DEFAULT_TOL {
        return Err(Error::ComplexWeakValue {
            re: weak.re,
            im: weak.im,
        });
    }
    let p = match p_choice {
        Some(p) if !p.is_finite() => {
            return Err(Error::InvalidArgument(format!("p must be finite, got {p}")))
        }
        Some(p) => p,
        None => weak.re / 2.0,
    };
    let q = weak.re - p;

    let pre = sys.pre().amplitudes();
    let post = sys.post().amplitudes();
    let params = params(n);

    // column-major images, then transposed into 4n constraint rows
    let columns: Vec<Vec<f64>> = params
        .iter()
        .map(|&param| {
            let a = basis_image(param, pre);
            let b = basis_image(param, post);
            split_re_im(&a).chain(split_re_im(&b)).collect()
        })
        .collect();
    let rows: Vec<Vec<f64>> = (0..4 * n)
        .map(|i| columns.iter().map(|col| col[i]).collect())
        .collect();

    let target_pre: Vec<C64> = pre.iter().map(|z| z * p).collect();
    let o_post = op.apply(post)?;
    let target_post: Vec<C64> = o_post.iter().zip(post).map(|(o, f)| o - f * q).collect();
    let rhs: Vec<f64> = split_re_im(&target_pre)
        .chain(split_re_im(&target_post))
        .collect();

    let x = min_norm_solve(&rows, &rhs);

    let residual = rows
        .iter()
        .zip(&rhs)
        .map(|(row, b)| (row.iter().zip(&x).map(|(a, v)| a * v).sum::<f64>() - b).abs())
        .fold(0.0, f64::max);
    let scale = 1.0 + rhs.iter().map(|b| b.abs()).fold(0.0, f64::max);
    if residual > SOLVE_TOL * scale {
        return Err(Error::Infeasible { residual });
    }

    let p_part = assemble(&params, &x, n);
    let q_part = op.try_sub(&p_part)?;
    let d = Decomposition::new(p_part, q_part, p, q)?;
    let report = verify(op, sys, &d, SOLVE_TOL)?;
    if !report.passed {
        return Err(Error::Infeasible {
            residual: report.max_residual(),
        });
    }
    Ok(d)
}
