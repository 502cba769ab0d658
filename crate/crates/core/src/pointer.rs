//! Von Neumann pointer coupled to a pre/post-selected system.
//!
//! The pointer starts as a Gaussian whose position density has standard
//! deviation `sigma`. The coupling translates it by `g * lambda_k` on each
//! eigenspace of the observable, so after post-selection the pointer wave
//! function is
//!
//! ```text
//! phi_f(x) = sum_k c_k phi_0(x - g lambda_k),   c_k = <psi_f|k><k|psi_i>
//! ```
//!
//! This is exact for any coupling strength; the weak regime (`g << sigma`)
//! and the strong regime (`g >> sigma`) come out of the same computation.
//! Integrals use the trapezoidal rule on a uniform grid.
//!
//! Sampling draws uniforms from Xoshiro256++ seeded through SplitMix64
//! (`rand_xoshiro::Xoshiro256PlusPlus::seed_from_u64`), each uniform being
//! `(next_u64 >> 11) * 2^-53`, and maps them through the piecewise-linear
//! inverse of the cumulative trapezoid of the post-selected density.

use rand::{Rng, SeedableRng};
use rand_xoshiro::Xoshiro256PlusPlus;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{inner_raw, ComplexMatrix, C64};
use crate::weak::PrePostSystem;

pub const DEFAULT_GRID_POINTS: usize = 4096;
pub const MIN_GRID_POINTS: usize = 256;
/// Post-selected norms below this are treated as impossible post-selections.
pub const MIN_POSTSELECTED_NORM: f64 = 1e-14;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PointerConfig {
    pub sigma: f64,
    pub g: f64,
    pub grid_points: usize,
    pub grid_halfwidth: f64,
}

fn max_abs_eigenvalue(op: &ComplexMatrix) -> Result<f64> {
    Ok(op
        .eig_hermitian()?
        .values
        .iter()
        .fold(0.0, |m: f64, l| m.max(l.abs())))
}

impl PointerConfig {
    pub fn new(sigma: f64, g: f64, grid_points: usize, grid_halfwidth: f64) -> Self {
        Self {
            sigma,
            g,
            grid_points,
            grid_halfwidth,
        }
    }

    /// Default grid for `op`: 4096 points over `8 sigma + |g| max|lambda|`.
    pub fn for_observable(sigma: f64, g: f64, op: &ComplexMatrix) -> Result<Self> {
        let halfwidth = 8.0 * sigma + g.abs() * max_abs_eigenvalue(op)?;
        Ok(Self::new(sigma, g, DEFAULT_GRID_POINTS, halfwidth))
    }

    /// Smallest admissible halfwidth: `6 sigma + |g| max|lambda|`.
    pub fn required_halfwidth(&self, max_abs_eigenvalue: f64) -> f64 {
        6.0 * self.sigma + self.g.abs() * max_abs_eigenvalue
    }

    fn validate(&self, max_abs_eigenvalue: f64) -> Result<()> {
        if !(self.sigma > 0.0 && self.sigma.is_finite()) {
            return Err(Error::InvalidArgument(format!(
                "sigma must be positive, got {}",
                self.sigma
            )));
        }
        if !self.g.is_finite() || self.g == 0.0 {
            return Err(Error::InvalidArgument(format!(
                "coupling g must be finite and non-zero, got {}",
                self.g
            )));
        }
        if self.grid_points < MIN_GRID_POINTS {
            return Err(Error::InvalidArgument(format!(
                "grid_points must be at least {MIN_GRID_POINTS}, got {}",
                self.grid_points
            )));
        }
        let required = self.required_halfwidth(max_abs_eigenvalue);
        if self.grid_halfwidth.is_nan() || self.grid_halfwidth < required {
            return Err(Error::GridTooSmall {
                required,
                actual: self.grid_halfwidth,
            });
        }
        Ok(())
    }

    fn grid(&self) -> Vec<f64> {
        let n = self.grid_points;
        let h = self.grid_halfwidth;
        let dx = 2.0 * h / (n - 1) as f64;
        (0..n).map(|j| -h + j as f64 * dx).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Distribution {
    pub x: Vec<f64>,
    pub density: Vec<f64>,
}

impl Distribution {
    pub fn to_csv(&self) -> String {
        let mut out = String::from("x,density\n");
        for (x, d) in self.x.iter().zip(&self.density) {
            out.push_str(&format!("{x},{d}\n"));
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PointerResult {
    pub config: PointerConfig,
    /// Post-selected mean pointer position.
    pub mean_shift: f64,
    /// Probability that the post-selection succeeds.
    pub post_prob: f64,
    pub weak_value_estimate: f64,
    /// Normalized post-selected position density.
    pub distribution: Distribution,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct McEstimate {
    pub estimate: f64,
    pub stderr: f64,
    pub n_samples: usize,
    pub seed: u64,
}

fn trapezoid(x: &[f64], y: &[f64]) -> f64 {
    x.windows(2)
        .zip(y.windows(2))
        .map(|(xs, ys)| 0.5 * (xs[1] - xs[0]) * (ys[0] + ys[1]))
        .sum()
}

fn gaussian_amplitude(x: f64, sigma: f64) -> f64 {
    (2.0 * std::f64::consts::PI * sigma * sigma).powf(-0.25)
        * (-x * x / (4.0 * sigma * sigma)).exp()
}

/// Exact post-selected pointer state on the configured grid.
pub fn simulate(
    op: &ComplexMatrix,
    sys: &PrePostSystem,
    cfg: &PointerConfig,
) -> Result<PointerResult> {
    if op.dim() != sys.dim() {
        return Err(Error::DimensionMismatch {
            expected: sys.dim(),
            found: op.dim(),
        });
    }
    let eig = op.eig_hermitian()?;
    let max_abs = eig.values.iter().fold(0.0, |m: f64, l| m.max(l.abs()));
    cfg.validate(max_abs)?;

    let pre = sys.pre().amplitudes();
    let post = sys.post().amplitudes();
    let branches: Vec<(f64, C64)> = eig
        .values
        .iter()
        .enumerate()
        .map(|(k, &lambda)| {
            let v = eig.vector(k);
            let weight = inner_raw(post, &v)? * inner_raw(&v, pre)?;
            Ok((cfg.g * lambda, weight))
        })
        .collect::<Result<_>>()?;

    let x = cfg.grid();
    let raw: Vec<f64> = x
        .iter()
        .map(|&xj| {
            branches
                .iter()
                .map(|&(shift, weight)| weight * gaussian_amplitude(xj - shift, cfg.sigma))
                .sum::<C64>()
                .norm_sqr()
        })
        .collect();

    let norm = trapezoid(&x, &raw);
    if norm.is_nan() || norm < MIN_POSTSELECTED_NORM {
        return Err(Error::PostSelectionMeasureZero { norm });
    }
    let first_moment: Vec<f64> = x.iter().zip(&raw).map(|(a, b)| a * b).collect();
    let mean_shift = trapezoid(&x, &first_moment) / norm;
    let density = raw.iter().map(|r| r / norm).collect();

    Ok(PointerResult {
        config: *cfg,
        mean_shift,
        post_prob: norm,
        weak_value_estimate: mean_shift / cfg.g,
        distribution: Distribution { x, density },
    })
}

/// Runs [`simulate`] for each coupling in `g_list` (positive, strictly
/// descending) on the default grid and returns `(g, mean_shift / g)`.
pub fn shift_convergence(
    op: &ComplexMatrix,
    sys: &PrePostSystem,
    sigma: f64,
    g_list: &[f64],
) -> Result<Vec<(f64, f64)>> {
    if g_list.is_empty() {
        return Err(Error::InvalidArgument("g_list is empty".into()));
    }
    if g_list.iter().any(|&g| g.is_nan() || g <= 0.0) || g_list.windows(2).any(|w| w[1] >= w[0]) {
        return Err(Error::InvalidArgument(
            "g_list must be positive and strictly descending".into(),
        ));
    }
    g_list
        .iter()
        .map(|&g| {
            let cfg = PointerConfig::for_observable(sigma, g, op)?;
            Ok((g, simulate(op, sys, &cfg)?.weak_value_estimate))
        })
        .collect()
}

/// Draws `n_samples` pointer readings from the post-selected density and
/// averages them.
pub fn estimate_mc(
    op: &ComplexMatrix,
    sys: &PrePostSystem,
    cfg: &PointerConfig,
    n_samples: usize,
    seed: u64,
) -> Result<McEstimate> {
    if n_samples < 2 {
        return Err(Error::InvalidArgument(format!(
            "n_samples must be at least 2, got {n_samples}"
        )));
    }
    let result = simulate(op, sys, cfg)?;
    let Distribution { x, density } = &result.distribution;

    let mut cdf = Vec::with_capacity(x.len());
    let mut acc = 0.0;
    cdf.push(0.0);
    for j in 1..x.len() {
        acc += 0.5 * (x[j] - x[j - 1]) * (density[j] + density[j - 1]);
        cdf.push(acc);
    }
    let total = acc;

    let mut rng = Xoshiro256PlusPlus::seed_from_u64(seed);
    let mut mean = 0.0;
    let mut m2 = 0.0;
    for i in 0..n_samples {
        let u: f64 = rng.gen::<f64>() * total;
        // first segment whose upper CDF value exceeds u
        let j = cdf.partition_point(|&c| c <= u).clamp(1, x.len() - 1);
        let (c0, c1) = (cdf[j - 1], cdf[j]);
        let t = if c1 > c0 { (u - c0) / (c1 - c0) } else { 0.5 };
        let sample = x[j - 1] + t * (x[j] - x[j - 1]);

        let delta = sample - mean;
        mean += delta / (i + 1) as f64;
        m2 += delta * (sample - mean);
    }
    let sd = (m2 / (n_samples - 1) as f64).sqrt();
    Ok(McEstimate {
        estimate: mean / cfg.g,
        stderr: sd / (cfg.g.abs() * (n_samples as f64).sqrt()),
        n_samples,
        seed,
    })
}
