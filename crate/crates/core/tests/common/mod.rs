#![allow(dead_code)]

use proptest::prelude::*;
use rand::Rng;
use weakval_core::linalg::{c, ComplexMatrix, StateVector, C64};

/// Hermitian matrix from `2 n^2` reals: the first `n^2` fill `A`, the rest
/// its imaginary part; the result is `(A + A^dagger) / 2`.
pub fn hermitian_from(n: usize, raw: &[f64]) -> ComplexMatrix {
    let data: Vec<C64> = (0..n * n).map(|k| c(raw[k], raw[n * n + k])).collect();
    let a = ComplexMatrix::new(n, data).unwrap();
    a.try_add(&a.adjoint()).unwrap().scale(0.5)
}

pub fn general_from(n: usize, raw: &[f64]) -> ComplexMatrix {
    let data: Vec<C64> = (0..n * n).map(|k| c(raw[k], raw[n * n + k])).collect();
    ComplexMatrix::new(n, data).unwrap()
}

/// Normalizes `2 n` reals into a state, or `None` if they are too short.
pub fn state_from(n: usize, raw: &[f64]) -> Option<StateVector> {
    let amps: Vec<C64> = (0..n).map(|k| c(raw[k], raw[n + k])).collect();
    let norm = amps.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    if norm < 1e-3 {
        return None;
    }
    StateVector::normalized(amps).ok()
}

pub fn arb_hermitian(n: usize) -> impl Strategy<Value = ComplexMatrix> {
    prop::collection::vec(-2.0..2.0f64, 2 * n * n).prop_map(move |raw| hermitian_from(n, &raw))
}

pub fn arb_general(n: usize) -> impl Strategy<Value = ComplexMatrix> {
    prop::collection::vec(-2.0..2.0f64, 2 * n * n).prop_map(move |raw| general_from(n, &raw))
}

pub fn arb_state(n: usize) -> impl Strategy<Value = StateVector> {
    prop::collection::vec(-1.0..1.0f64, 2 * n)
        .prop_filter_map("degenerate amplitudes", move |raw| state_from(n, &raw))
}

/// Pre/post pair with overlap modulus at least 0.05.
pub fn arb_pair(n: usize) -> impl Strategy<Value = (StateVector, StateVector)> {
    (arb_state(n), arb_state(n)).prop_filter("nearly orthogonal", |(a, b)| {
        a.inner(b).unwrap().norm() >= 0.05
    })
}

pub fn random_hermitian<R: Rng>(rng: &mut R, n: usize) -> ComplexMatrix {
    let raw: Vec<f64> = (0..2 * n * n).map(|_| rng.gen_range(-1.0..1.0)).collect();
    hermitian_from(n, &raw)
}

pub fn random_state<R: Rng>(rng: &mut R, n: usize) -> StateVector {
    loop {
        let raw: Vec<f64> = (0..2 * n).map(|_| rng.gen_range(-1.0..1.0)).collect();
        if let Some(s) = state_from(n, &raw) {
            return s;
        }
    }
}

/// `(1 - |u><u|) h (1 - |u><u|)`
pub fn compress_off(h: &ComplexMatrix, u: &StateVector) -> ComplexMatrix {
    let comp = ComplexMatrix::identity(u.dim())
        .try_sub(&ComplexMatrix::projector(u))
        .unwrap();
    comp.matmul(h).unwrap().matmul(&comp).unwrap()
}

/// Observable with a real weak value by construction:
/// `O = p0 |pre><pre| + (1-Pi_pre) H (1-Pi_pre) + q0 |post><post| + (1-Pi_post) K (1-Pi_post)`.
pub struct FeasibleInstance {
    pub op: ComplexMatrix,
    /// The `P` the instance was built from.
    pub p_part: ComplexMatrix,
    pub pre: StateVector,
    pub post: StateVector,
    pub p0: f64,
    pub q0: f64,
}

pub fn feasible_instance<R: Rng>(rng: &mut R, n: usize) -> FeasibleInstance {
    let (pre, post) = loop {
        let a = random_state(rng, n);
        let b = random_state(rng, n);
        if a.inner(&b).unwrap().norm() >= 0.05 {
            break (a, b);
        }
    };
    let p0 = rng.gen_range(-2.0..2.0);
    let q0 = rng.gen_range(-2.0..2.0);
    let p_part = ComplexMatrix::projector(&pre)
        .scale(p0)
        .try_add(&compress_off(&random_hermitian(rng, n), &pre))
        .unwrap();
    let q_part = ComplexMatrix::projector(&post)
        .scale(q0)
        .try_add(&compress_off(&random_hermitian(rng, n), &post))
        .unwrap();
    FeasibleInstance {
        op: p_part.try_add(&q_part).unwrap(),
        p_part,
        pre,
        post,
        p0,
        q0,
    }
}
