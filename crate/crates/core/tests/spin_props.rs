use std::f64::consts::PI;

use proptest::prelude::*;
use weakval_core::linalg::{ComplexMatrix, I};
use weakval_core::spin::{
    spin_eigenstate, sz_identity_check, weak_sz_spin_half, Direction, SpinSystem,
};

fn commutator(a: &ComplexMatrix, b: &ComplexMatrix) -> ComplexMatrix {
    a.matmul(b).unwrap().try_sub(&b.matmul(a).unwrap()).unwrap()
}

#[test]
fn commutators_and_casimir() {
    for two_j in 1..=4 {
        let s = SpinSystem::new(two_j).unwrap();
        let cyclic = [
            (&s.sx, &s.sy, &s.sz),
            (&s.sy, &s.sz, &s.sx),
            (&s.sz, &s.sx, &s.sy),
        ];
        for (a, b, c) in cyclic {
            assert!(
                commutator(a, b).approx_eq(&c.scale_complex(I), 1e-12),
                "two_j = {two_j}"
            );
        }
        for m in [&s.sx, &s.sy, &s.sz] {
            assert!(m.is_hermitian(1e-14));
        }
        let j = s.j();
        assert!(s.casimir().approx_eq(
            &ComplexMatrix::identity(s.dim()).scale(j * (j + 1.0)),
            1e-12
        ));
    }
}

#[test]
fn spin_half_weak_value_follows_half_tangent() {
    for k in 0..100 {
        let alpha = 0.99 * PI * k as f64 / 99.0;
        let w = weak_sz_spin_half(alpha).unwrap();
        let expected = 0.5 * (alpha / 2.0).tan();
        assert!(
            (w - expected).abs() <= 1e-10,
            "alpha = {alpha}: {w} vs {expected}"
        );
    }
}

#[test]
fn sz_identity_over_many_angles() {
    for k in 1..=20 {
        let alpha = PI * k as f64 / 21.0;
        assert!(
            sz_identity_check(alpha).unwrap() <= 1e-12,
            "alpha = {alpha}"
        );
    }
}

#[test]
fn spin_two_square_identity() {
    let s = SpinSystem::new(4).unwrap();
    let sq = |m: &ComplexMatrix| m.matmul(m).unwrap();
    let split = s
        .casimir()
        .try_sub(&sq(&s.sx))
        .unwrap()
        .try_add(&sq(&s.sz).scale(-1.0))
        .unwrap();
    assert!(split.approx_eq(&sq(&s.sy), 1e-12));
    assert!(s
        .casimir()
        .approx_eq(&ComplexMatrix::identity(5).scale(6.0), 1e-12));
}

fn arb_direction() -> impl Strategy<Value = Direction> {
    (0.0..PI, 0.0..2.0 * PI).prop_map(|(theta, phi)| {
        let [x, y, z] = [
            theta.sin() * phi.cos(),
            theta.sin() * phi.sin(),
            theta.cos(),
        ];
        let norm = (x * x + y * y + z * z).sqrt();
        Direction::new(x / norm, y / norm, z / norm).unwrap()
    })
}

proptest! {
    #[test]
    fn eigenstates_solve_the_directional_problem(two_j in 1u32..=4, dir in arb_direction(), pick in 0usize..5) {
        let s = SpinSystem::new(two_j).unwrap();
        let m = s.j() - (pick % s.dim()) as f64;
        let v = spin_eigenstate(&s, dir, m).unwrap();
        let image = s.along(dir).apply(v.amplitudes()).unwrap();
        let residual = image
            .iter()
            .zip(v.amplitudes())
            .map(|(a, b)| (a - b * m).norm_sqr())
            .sum::<f64>()
            .sqrt();
        prop_assert!(residual <= 1e-10, "residual {residual}");
    }
}
