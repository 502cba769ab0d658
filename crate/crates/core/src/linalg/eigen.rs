use super::{ComplexMatrix, C64};
use crate::error::{Error, Result};

/// Hermiticity required of eigensolver input.
pub const HERMITIAN_TOL: f64 = 1e-10;

const OFF_DIAGONAL_RTOL: f64 = 1e-14;
const MAX_SWEEPS: usize = 100;

/// Real spectrum in ascending order plus matching orthonormal eigenvectors
/// stored as the columns of `vectors`.
#[derive(Debug, Clone)]
pub struct HermitianEigen {
    pub values: Vec<f64>,
    pub vectors: ComplexMatrix,
}

impl HermitianEigen {
    pub fn vector(&self, k: usize) -> Vec<C64> {
        self.vectors.column(k)
    }

    /// `V diag(values) V^dagger`
    pub fn reconstruct(&self) -> ComplexMatrix {
        let n = self.values.len();
        let mut out = ComplexMatrix::zeros(n);
        for i in 0..n {
            for j in 0..n {
                let z: C64 = (0..n)
                    .map(|k| {
                        self.vectors.get(i, k) * self.values[k] * self.vectors.get(j, k).conj()
                    })
                    .sum();
                out.set(i, j, z);
            }
        }
        out
    }
}

fn off_diagonal_mass(a: &ComplexMatrix) -> f64 {
    let n = a.dim();
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += a.get(i, j).norm_sqr();
            }
        }
    }
    s.sqrt()
}

pub(super) fn eig_hermitian(input: &ComplexMatrix) -> Result<HermitianEigen> {
    let gap = input.hermiticity_gap();
    if gap > HERMITIAN_TOL {
        return Err(Error::NotHermitian { gap });
    }
    let n = input.dim();
    // symmetrize so rounding in the input cannot bias the rotations
    let mut a = input.try_add(&input.adjoint())?.scale(0.5);
    let mut v = ComplexMatrix::identity(n);
    let threshold = OFF_DIAGONAL_RTOL * input.frobenius_norm();

    let mut sweeps = 0;
    loop {
        let off = off_diagonal_mass(&a);
        if off <= threshold {
            break;
        }
        if sweeps == MAX_SWEEPS {
            return Err(Error::NoConvergence { sweeps, off });
        }
        for p in 0..n {
            for q in p + 1..n {
                rotate(&mut a, &mut v, p, q);
            }
        }
        sweeps += 1;
    }

    // stable sort keeps the diagonal order among ties
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a.get(i, i).re.total_cmp(&a.get(j, j).re));

    let values = order.iter().map(|&k| a.get(k, k).re).collect();
    let mut vectors = ComplexMatrix::zeros(n);
    for (dst, &src) in order.iter().enumerate() {
        for r in 0..n {
            vectors.set(r, dst, v.get(r, src));
        }
    }
    Ok(HermitianEigen { values, vectors })
}

/// One complex Jacobi rotation annihilating `a[p][q]`.
///
/// With `a[p][q] = |z| e^{i phi}`, the unitary acting on columns `(p, q)` is
/// `[[c, s], [-s e^{-i phi}, c e^{-i phi}]]`: a phase that makes the pivot
/// real followed by the usual real symmetric rotation.
fn rotate(a: &mut ComplexMatrix, v: &mut ComplexMatrix, p: usize, q: usize) {
    let z = a.get(p, q);
    let modulus = z.norm();
    if modulus <= f64::MIN_POSITIVE {
        return;
    }
    let phase = z / modulus;
    let (app, aqq) = (a.get(p, p).re, a.get(q, q).re);
    let theta = (aqq - app) / (2.0 * modulus);
    let t = if theta.abs() > 1e150 {
        0.5 / theta
    } else {
        theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
    };
    let cos = 1.0 / (t * t + 1.0).sqrt();
    let sin = t * cos;

    let u_pp = C64::new(cos, 0.0);
    let u_pq = C64::new(sin, 0.0);
    let u_qp = -phase.conj() * sin;
    let u_qq = phase.conj() * cos;

    let n = a.dim();
    // A <- A U
    for k in 0..n {
        let (akp, akq) = (a.get(k, p), a.get(k, q));
        a.set(k, p, akp * u_pp + akq * u_qp);
        a.set(k, q, akp * u_pq + akq * u_qq);
    }
    // A <- U^dagger A
    for k in 0..n {
        let (apk, aqk) = (a.get(p, k), a.get(q, k));
        a.set(p, k, u_pp.conj() * apk + u_qp.conj() * aqk);
        a.set(q, k, u_pq.conj() * apk + u_qq.conj() * aqk);
    }
    a.set(p, q, C64::new(0.0, 0.0));
    a.set(q, p, C64::new(0.0, 0.0));
    a.set(p, p, C64::new(app - t * modulus, 0.0));
    a.set(q, q, C64::new(aqq + t * modulus, 0.0));

    for k in 0..n {
        let (vkp, vkq) = (v.get(k, p), v.get(k, q));
        v.set(k, p, vkp * u_pp + vkq * u_qp);
        v.set(k, q, vkp * u_pq + vkq * u_qq);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{re, I};

    fn residual(m: &ComplexMatrix, eig: &HermitianEigen) -> f64 {
        let mut worst = 0.0f64;
        for (k, &lambda) in eig.values.iter().enumerate() {
            let v = eig.vector(k);
            let mv = m.apply(&v).unwrap();
            let r: f64 = mv
                .iter()
                .zip(&v)
                .map(|(a, b)| (a - b * lambda).norm_sqr())
                .sum::<f64>()
                .sqrt();
            worst = worst.max(r);
        }
        worst
    }

    #[test]
    fn diagonal_sorted_ascending() {
        let m = ComplexMatrix::from_diag(&[3.0, 1.0, 2.0]).unwrap();
        let eig = m.eig_hermitian().unwrap();
        assert_eq!(eig.values, vec![1.0, 2.0, 3.0]);
        assert_eq!(eig.vector(0), vec![re(0.0), re(1.0), re(0.0)]);
    }

    #[test]
    fn ties_keep_diagonal_order() {
        let m = ComplexMatrix::from_diag(&[1.0, 0.0, 1.0]).unwrap();
        let eig = m.eig_hermitian().unwrap();
        assert_eq!(eig.values, vec![0.0, 1.0, 1.0]);
        assert_eq!(eig.vector(1)[0], re(1.0));
        assert_eq!(eig.vector(2)[2], re(1.0));
    }

    #[test]
    fn pauli_y_spectrum() {
        let y = ComplexMatrix::from_rows(&[vec![re(0.0), -I], vec![I, re(0.0)]]).unwrap();
        let eig = y.eig_hermitian().unwrap();
        assert!((eig.values[0] + 1.0).abs() < 1e-14);
        assert!((eig.values[1] - 1.0).abs() < 1e-14);
        assert!(residual(&y, &eig) < 1e-12);
    }

    #[test]
    fn rejects_non_hermitian() {
        let m = ComplexMatrix::from_real_rows(&[vec![0.0, 1.0], vec![0.0, 0.0]]).unwrap();
        assert!(matches!(m.eig_hermitian(), Err(Error::NotHermitian { .. })));
    }

    #[test]
    fn zero_matrix() {
        let eig = ComplexMatrix::zeros(3).eig_hermitian().unwrap();
        assert_eq!(eig.values, vec![0.0; 3]);
    }

    #[test]
    fn dense_complex_example() {
        let m = ComplexMatrix::from_rows(&[
            vec![re(2.0), C64::new(1.0, -1.0), re(0.5)],
            vec![C64::new(1.0, 1.0), re(-1.0), C64::new(0.0, 2.0)],
            vec![re(0.5), C64::new(0.0, -2.0), re(0.25)],
        ])
        .unwrap();
        let eig = m.eig_hermitian().unwrap();
        assert!(residual(&m, &eig) < 1e-10 * m.frobenius_norm());
        assert!(eig.reconstruct().approx_eq(&m, 1e-12));
        let trace: f64 = eig.values.iter().sum();
        assert!((trace - 1.25).abs() < 1e-13);
    }
}
