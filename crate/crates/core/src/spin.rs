//! Spin-j operators (in units of hbar) and directional spin eigenstates.
//!
//! Basis order is `m = j, j-1, ..., -j`, so spin-1/2 reproduces the Pauli
//! matrices divided by two.

use crate::error::{Error, Result};
use crate::linalg::{c, re, ComplexMatrix, StateVector};
use crate::weak::PrePostSystem;

const SPECTRUM_TOL: f64 = 1e-9;

#[derive(Debug, Clone)]
pub struct SpinSystem {
    two_j: u32,
    pub sx: ComplexMatrix,
    pub sy: ComplexMatrix,
    pub sz: ComplexMatrix,
}

impl SpinSystem {
    /// Builds the `2j+1` dimensional representation from the ladder operators.
    pub fn new(two_j: u32) -> Result<Self> {
        if two_j == 0 {
            return Err(Error::InvalidArgument("two_j must be at least 1".into()));
        }
        let dim = two_j as usize + 1;
        let j = f64::from(two_j) / 2.0;
        let m = |k: usize| j - k as f64;

        let sz = ComplexMatrix::from_diag(&(0..dim).map(m).collect::<Vec<_>>())?;
        // <m+1|S+|m> sits one row above the diagonal in m-descending order
        let mut raise = ComplexMatrix::zeros(dim);
        for k in 1..dim {
            let mk = m(k);
            raise.set(k - 1, k, re((j * (j + 1.0) - mk * (mk + 1.0)).sqrt()));
        }
        let lower = raise.adjoint();
        let sx = raise.try_add(&lower)?.scale(0.5);
        let sy = raise.try_sub(&lower)?.scale_complex(c(0.0, -0.5));
        Ok(Self { two_j, sx, sy, sz })
    }

    pub fn two_j(&self) -> u32 {
        self.two_j
    }

    pub fn j(&self) -> f64 {
        f64::from(self.two_j) / 2.0
    }

    pub fn dim(&self) -> usize {
        self.two_j as usize + 1
    }

    /// `S^2 = Sx^2 + Sy^2 + Sz^2`, built from the components rather than `j(j+1) I`.
    pub fn casimir(&self) -> ComplexMatrix {
        let sq = |m: &ComplexMatrix| m.matmul(m).expect("square");
        sq(&self.sx)
            .try_add(&sq(&self.sy))
            .and_then(|s| s.try_add(&sq(&self.sz)))
            .expect("same dimension")
    }

    /// `n . S`
    pub fn along(&self, dir: Direction) -> ComplexMatrix {
        let [nx, ny, nz] = dir.components();
        self.sx
            .scale(nx)
            .try_add(&self.sy.scale(ny))
            .and_then(|s| s.try_add(&self.sz.scale(nz)))
            .expect("same dimension")
    }

    pub fn eigenstate(&self, dir: Direction, m: f64) -> Result<StateVector> {
        spin_eigenstate(self, dir, m)
    }
}

pub fn make_spin(two_j: u32) -> Result<SpinSystem> {
    SpinSystem::new(two_j)
}

/// Unit 3-vector.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Direction([f64; 3]);

impl Direction {
    pub const X: Direction = Direction([1.0, 0.0, 0.0]);
    pub const Y: Direction = Direction([0.0, 1.0, 0.0]);
    pub const Z: Direction = Direction([0.0, 0.0, 1.0]);

    pub fn new(nx: f64, ny: f64, nz: f64) -> Result<Self> {
        let norm = (nx * nx + ny * ny + nz * nz).sqrt();
        if !norm.is_finite() || (norm - 1.0).abs() > 1e-12 {
            return Err(Error::InvalidArgument(format!(
                "direction ({nx}, {ny}, {nz}) is not a unit vector"
            )));
        }
        Ok(Self([nx, ny, nz]))
    }

    /// Direction in the xz plane at angle `alpha` (radians) from +x towards +z.
    pub fn in_xz_plane(alpha: f64) -> Self {
        Self([alpha.cos(), 0.0, alpha.sin()])
    }

    pub fn components(self) -> [f64; 3] {
        self.0
    }
}

/// Eigenvector of `n . S` for eigenvalue `m`, with the phase chosen so the
/// largest-modulus amplitude is real and positive (first index wins ties).
pub fn spin_eigenstate(s: &SpinSystem, dir: Direction, m: f64) -> Result<StateVector> {
    let eig = s.along(dir).eig_hermitian()?;
    let k = eig
        .values
        .iter()
        .position(|&l| (l - m).abs() <= SPECTRUM_TOL)
        .ok_or(Error::NotInSpectrum { value: m })?;
    let v = eig.vector(k);
    let max = v.iter().map(|z| z.norm()).fold(0.0, f64::max);
    let anchor = v
        .iter()
        .find(|z| z.norm() >= max - 1e-12)
        .copied()
        .expect("non-empty eigenvector");
    let phase = anchor.conj() / anchor.norm();
    StateVector::normalized(v.into_iter().map(|z| z * phase).collect())
}

/// Spin-1/2 pre-selected along `xi(alpha)` and post-selected along `+x`.
pub fn spin_half_system(alpha: f64) -> Result<PrePostSystem> {
    let s = SpinSystem::new(1)?;
    let pre = spin_eigenstate(&s, Direction::in_xz_plane(alpha), 0.5)?;
    let post = spin_eigenstate(&s, Direction::X, 0.5)?;
    PrePostSystem::new(pre, post)
}

/// Real part of `<Sz>_w` for the spin-1/2 system of [`spin_half_system`],
/// analytically `tan(alpha/2) / 2`.
pub fn weak_sz_spin_half(alpha: f64) -> Result<f64> {
    if !(0.0..=std::f64::consts::PI).contains(&alpha) {
        return Err(Error::InvalidArgument(format!(
            "alpha = {alpha} outside [0, pi]"
        )));
    }
    let sys = spin_half_system(alpha)?;
    let s = SpinSystem::new(1)?;
    Ok(sys.weak_value(&s.sz)?.value.re)
}

/// Max-entry norm of `Sz - (S_xi - cos(alpha) Sx) / sin(alpha)` for spin-1/2.
pub fn sz_identity_check(alpha: f64) -> Result<f64> {
    let sin = alpha.sin();
    if sin.abs() <= 1e-9 {
        return Err(Error::InvalidArgument(format!(
            "sin(alpha) vanishes for alpha = {alpha}"
        )));
    }
    let s = SpinSystem::new(1)?;
    let s_xi = s.along(Direction::in_xz_plane(alpha));
    let rebuilt = s_xi.try_sub(&s.sx.scale(alpha.cos()))?.scale(1.0 / sin);
    s.sz.max_dist(&rebuilt)
}
