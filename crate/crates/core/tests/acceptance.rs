//! Acceptance suite: one line per criterion, non-zero exit if any fails.

mod common;

use std::f64::consts::PI;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};
use rand::{Rng, SeedableRng};
use rand_xoshiro::Xoshiro256PlusPlus;
use weakval_core::decomp::{fixture, solve, verify, FIXTURE_NAMES};
use weakval_core::error::Error;
use weakval_core::linalg::{re, ComplexMatrix, StateVector, C64};
use weakval_core::pointer::{estimate_mc, simulate, PointerConfig};
use weakval_core::scenarios::{self, build, list_scenarios, SPIN100_ALPHA_DEG};
use weakval_core::spin::{sz_identity_check, weak_sz_spin_half, SpinSystem};
use weakval_core::weak::{weak_value, PrePostSystem};

const SCENARIO_TOL: f64 = 1e-10;
const SCENARIO_BUDGET: Duration = Duration::from_secs(1);
const SPIN100_BAND: (f64, f64) = (99.0, 102.0);
const TAN_GRID_TOL: f64 = 1e-10;
const TAN_GRID_POINTS: usize = 100;
const TAN_GRID_MAX: f64 = 0.99 * PI;
const SZ_IDENTITY_TOL: f64 = 1e-12;
const SZ_IDENTITY_ANGLES: usize = 20;
const SPIN2_IDENTITY_TOL: f64 = 1e-12;
const FIXTURE_TOL: f64 = 1e-12;
const SOLVER_INSTANCES: usize = 200;
const SOLVER_DIMS: [usize; 4] = [2, 3, 4, 8];
const SOLVER_VERIFY_TOL: f64 = 1e-9;
const SOLVER_BUDGET: Duration = Duration::from_secs(10);
const WEAK_LIMIT_G: f64 = 0.01;
const WEAK_LIMIT_COARSE_G: f64 = 0.02;
const WEAK_LIMIT_REL: f64 = 0.02;
const WEAK_LIMIT_RATIO: f64 = 3.0;
/// Errors below this count as exact; their ratio is not meaningful.
const WEAK_LIMIT_FLOOR: f64 = 1e-9;
const SPIN100_G: f64 = 1e-3;
const SPIN100_REL: f64 = 0.01;
const POINTER_BUDGET: Duration = Duration::from_secs(5);
const MC_SAMPLES: usize = 100_000;
const MC_SEED: u64 = 20_240_917;
const MC_G: f64 = 0.01;
const MC_SIGMAS: f64 = 3.0;
const PROPERTY_CASES: u32 = 128;

type Criterion = (&'static str, fn() -> Outcome);

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        passed,
        detail: detail.into(),
    }
}

fn scenario_weak_values() -> Outcome {
    let expected: [(&str, &[f64]); 5] = [
        ("threebox", &[1.0, 1.0, -1.0]),
        ("cheshire", &[1.0, 0.0, 0.0, 1.0]),
        ("nested_mzi", &[1.0, -1.0, 0.0]),
        ("pigeonhole", &[0.0, 0.0, 0.0]),
        ("spin2", &[-2.0]),
    ];
    let start = Instant::now();
    let mut worst = 0.0f64;
    let mut ok = true;
    for (name, values) in expected {
        let scenario = build(name).unwrap();
        ok &= scenario.observables.len() == values.len();
        for (o, &v) in scenario.observables.iter().zip(values) {
            let w = weak_value(&scenario.system, &o.operator).unwrap().value;
            worst = worst.max((w - re(v)).norm());
        }
    }
    let elapsed = start.elapsed();
    ok &= worst <= SCENARIO_TOL && elapsed < SCENARIO_BUDGET;
    outcome(
        ok,
        format!("max gap {worst:.1e} (tol {SCENARIO_TOL:e}), {elapsed:.2?}"),
    )
}

fn spin100() -> Outcome {
    let w = weak_sz_spin_half(SPIN100_ALPHA_DEG.to_radians()).unwrap();
    let in_band = (SPIN100_BAND.0..=SPIN100_BAND.1).contains(&w);
    let worst = (0..TAN_GRID_POINTS)
        .map(|k| {
            let alpha = TAN_GRID_MAX * k as f64 / (TAN_GRID_POINTS - 1) as f64;
            (weak_sz_spin_half(alpha).unwrap() - 0.5 * (alpha / 2.0).tan()).abs()
        })
        .fold(0.0, f64::max);
    outcome(
        in_band && worst <= TAN_GRID_TOL,
        format!("<Sz>_w(179.43 deg) = {w:.4} hbar, tan grid max gap {worst:.1e}"),
    )
}

fn operator_identities() -> Outcome {
    let sz_worst = (1..=SZ_IDENTITY_ANGLES)
        .map(|k| sz_identity_check(PI * k as f64 / (SZ_IDENTITY_ANGLES + 1) as f64).unwrap())
        .fold(0.0, f64::max);
    let s = SpinSystem::new(4).unwrap();
    let sq = |m: &ComplexMatrix| m.matmul(m).unwrap();
    let split = s
        .casimir()
        .try_sub(&sq(&s.sx))
        .unwrap()
        .try_add(&sq(&s.sz).scale(-1.0))
        .unwrap();
    let sy2_gap = split.max_dist(&sq(&s.sy)).unwrap();
    let casimir_gap = s
        .casimir()
        .max_dist(&ComplexMatrix::identity(5).scale(6.0))
        .unwrap();
    outcome(
        sz_worst <= SZ_IDENTITY_TOL
            && sy2_gap <= SPIN2_IDENTITY_TOL
            && casimir_gap <= SPIN2_IDENTITY_TOL,
        format!("Sz identity {sz_worst:.1e}, Sy^2 split {sy2_gap:.1e}, S^2 - 6I {casimir_gap:.1e}"),
    )
}

fn fixtures() -> Outcome {
    let mut failures = Vec::new();
    for name in FIXTURE_NAMES {
        let f = fixture(name).unwrap();
        let passed = verify(&f.observable, &f.system, &f.decomposition, FIXTURE_TOL)
            .unwrap()
            .passed;
        let w = weak_value(&f.system, &f.observable).unwrap().value;
        if !passed || (w - re(f.expected_p + f.expected_q)).norm() > FIXTURE_TOL {
            failures.push(name);
        }
    }
    outcome(
        failures.is_empty(),
        format!(
            "{}/{} fixtures verified at {FIXTURE_TOL:e}",
            FIXTURE_NAMES.len() - failures.len(),
            FIXTURE_NAMES.len()
        ),
    )
}

fn solver_round_trip() -> Outcome {
    let start = Instant::now();
    let mut rng = Xoshiro256PlusPlus::seed_from_u64(0xdec0);
    let mut passed = 0;
    for (trial, &n) in SOLVER_DIMS
        .iter()
        .cycle()
        .take(SOLVER_INSTANCES)
        .enumerate()
    {
        let inst = common::feasible_instance(&mut rng, n);
        let sys = PrePostSystem::new(inst.pre, inst.post).unwrap();
        let p = (trial % 2 == 1).then(|| rng.gen_range(-3.0..3.0));
        if let Ok(d) = solve(&inst.op, &sys, p) {
            passed += usize::from(
                verify(&inst.op, &sys, &d, SOLVER_VERIFY_TOL)
                    .unwrap()
                    .passed,
            );
        }
    }
    let mut complex = 0;
    let mut rejected = 0;
    for &n in SOLVER_DIMS.iter().cycle().take(40) {
        let sys = PrePostSystem::new(
            common::random_state(&mut rng, n),
            common::random_state(&mut rng, n),
        )
        .unwrap();
        let op = common::random_hermitian(&mut rng, n);
        if weak_value(&sys, &op).unwrap().value.im.abs() > 1e-10 {
            complex += 1;
            rejected += usize::from(matches!(
                solve(&op, &sys, None),
                Err(Error::ComplexWeakValue { .. })
            ));
        }
    }
    let elapsed = start.elapsed();
    outcome(
        passed == SOLVER_INSTANCES && complex > 0 && rejected == complex && elapsed < SOLVER_BUDGET,
        format!("{passed}/{SOLVER_INSTANCES} verified at {SOLVER_VERIFY_TOL:e}, {rejected}/{complex} complex rejected, {elapsed:.2?}"),
    )
}

fn pointer_weak_limit() -> Outcome {
    let mut ok = true;
    let mut checked = 0;
    let mut spin100_note = String::new();
    for &name in list_scenarios() {
        let start = Instant::now();
        let scenario = build(name).unwrap();
        for o in &scenario.observables {
            let w = weak_value(&scenario.system, &o.operator).unwrap().value;
            if w.im.abs() > 1e-10 {
                continue;
            }
            let estimate = |g: f64| {
                let cfg = PointerConfig::for_observable(1.0, g, &o.operator).unwrap();
                simulate(&o.operator, &scenario.system, &cfg)
                    .unwrap()
                    .weak_value_estimate
            };
            if name == "spin100" {
                let analytic = weak_sz_spin_half(SPIN100_ALPHA_DEG.to_radians()).unwrap();
                let est = estimate(SPIN100_G);
                let rel = (est - analytic).abs() / analytic;
                ok &= rel <= SPIN100_REL;
                spin100_note =
                    format!("spin100 at g/sigma = {SPIN100_G:e}: {est:.3} vs {analytic:.3}");
                continue;
            }
            let fine = (estimate(WEAK_LIMIT_G) - w.re).abs();
            let coarse = (estimate(WEAK_LIMIT_COARSE_G) - w.re).abs();
            ok &= fine <= WEAK_LIMIT_REL * (1.0 + w.re.abs());
            ok &= fine <= WEAK_LIMIT_FLOOR || coarse >= WEAK_LIMIT_RATIO * fine;
            checked += 1;
        }
        ok &= start.elapsed() < POINTER_BUDGET;
    }
    outcome(
        ok,
        format!("{checked} observables in the weak limit; {spin100_note}"),
    )
}

fn monte_carlo() -> Outcome {
    let sys = scenarios::three_box_system();
    let op = scenarios::path_projector(3, 0);
    let cfg = PointerConfig::for_observable(1.0, MC_G, &op).unwrap();
    let first = estimate_mc(&op, &sys, &cfg, MC_SAMPLES, MC_SEED).unwrap();
    let second = estimate_mc(&op, &sys, &cfg, MC_SAMPLES, MC_SEED).unwrap();
    let within = (first.estimate - 1.0).abs() <= MC_SIGMAS * first.stderr;
    let identical = first.estimate.to_bits() == second.estimate.to_bits()
        && first.stderr.to_bits() == second.stderr.to_bits()
        && first == second;
    outcome(
        within && identical,
        format!(
            "estimate {:.4} +/- {:.4}, rerun identical: {identical}",
            first.estimate, first.stderr
        ),
    )
}

fn property_suites() -> Outcome {
    let mut runner = TestRunner::new(Config {
        cases: PROPERTY_CASES,
        failure_persistence: None,
        ..Config::default()
    });
    let instance = (2usize..=6).prop_flat_map(|n| {
        (
            common::arb_pair(n),
            common::arb_hermitian(n),
            common::arb_hermitian(n),
        )
    });
    let mut failed = Vec::new();

    let linearity = runner.run(
        &(instance.clone(), -3.0..3.0f64, -3.0..3.0f64),
        |(((pre, post), a, b), x, y)| {
            let sys = PrePostSystem::new(pre, post).unwrap();
            let combo = a.scale(x).try_add(&b.scale(y)).unwrap();
            let lhs = weak_value(&sys, &combo).unwrap().value;
            let rhs =
                weak_value(&sys, &a).unwrap().value * x + weak_value(&sys, &b).unwrap().value * y;
            prop_assert!((lhs - rhs).norm() <= 1e-12 * (1.0 + lhs.norm()));
            Ok(())
        },
    );
    if linearity.is_err() {
        failed.push("linearity");
    }

    let identity = runner.run(&instance, |((pre, post), _, _)| {
        let sys = PrePostSystem::new(pre, post).unwrap();
        let w = weak_value(&sys, &ComplexMatrix::identity(sys.dim()))
            .unwrap()
            .value;
        prop_assert!((w - re(1.0)).norm() <= 1e-14);
        Ok(())
    });
    if identity.is_err() {
        failed.push("identity");
    }

    let sum_rule = runner.run(&instance, |((pre, post), h, _)| {
        let sys = PrePostSystem::new(pre, post).unwrap();
        let eig = h.eig_hermitian().unwrap();
        let total: C64 = (0..sys.dim())
            .map(|k| {
                let v = StateVector::normalized(eig.vector(k)).unwrap();
                weak_value(&sys, &ComplexMatrix::projector(&v))
                    .unwrap()
                    .value
            })
            .sum();
        prop_assert!((total - re(1.0)).norm() <= 1e-9 * (1.0 + 1.0 / sys.overlap().norm()));
        Ok(())
    });
    if sum_rule.is_err() {
        failed.push("sum rule");
    }

    for name in ["threebox", "nested_mzi"] {
        let sys = build(name).unwrap().system;
        let projectors: Vec<_> = (0..3).map(|k| scenarios::path_projector(3, k)).collect();
        let sum = projectors
            .iter()
            .fold(ComplexMatrix::zeros(3), |acc, p| acc.try_add(p).unwrap());
        let total: C64 = projectors
            .iter()
            .map(|p| weak_value(&sys, p).unwrap().value)
            .sum();
        if !sum.approx_eq(&ComplexMatrix::identity(3), 1e-15) || (total - re(1.0)).norm() > 1e-12 {
            failed.push("projector completeness");
        }
    }

    let pigeon = build("pigeonhole").unwrap();
    let same: Vec<C64> = ["PiSame12", "PiSame13", "PiSame23"]
        .iter()
        .map(|l| {
            weak_value(&pigeon.system, &pigeon.observable(l).unwrap().operator)
                .unwrap()
                .value
        })
        .collect();
    if same.iter().any(|w| (w - same[0]).norm() > 1e-12) {
        failed.push("pigeonhole symmetry");
    }

    let mut normalized = true;
    for &name in list_scenarios() {
        let scenario = build(name).unwrap();
        for o in &scenario.observables {
            for g in [1e-3, 0.1, 1.0] {
                let cfg = PointerConfig::for_observable(1.0, g, &o.operator).unwrap();
                let d = simulate(&o.operator, &scenario.system, &cfg)
                    .unwrap()
                    .distribution;
                let mass: f64 =
                    d.x.windows(2)
                        .zip(d.density.windows(2))
                        .map(|(x, y)| 0.5 * (x[1] - x[0]) * (y[0] + y[1]))
                        .sum();
                normalized &= d.density.iter().all(|&v| v >= 0.0) && (mass - 1.0).abs() <= 1e-8;
            }
        }
    }
    if !normalized {
        failed.push("density normalization");
    }

    outcome(
        failed.is_empty(),
        if failed.is_empty() {
            "all suites green".to_string()
        } else {
            format!("failed: {failed:?}")
        },
    )
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("scenario weak values", scenario_weak_values),
        ("spin-100 weak value", spin100),
        ("operator identities", operator_identities),
        ("fixture verification", fixtures),
        ("solver round-trip", solver_round_trip),
        ("pointer weak limit", pointer_weak_limit),
        ("monte-carlo estimation", monte_carlo),
        ("property suites", property_suites),
    ];
    let mut all = true;
    for (k, (name, check)) in criteria.iter().enumerate() {
        let result = check();
        all &= result.passed;
        let tag = if result.passed { "PASS" } else { "FAIL" };
        println!("{tag} [{}] {name}: {}", k + 1, result.detail);
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
