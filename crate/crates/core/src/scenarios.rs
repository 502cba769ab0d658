//! Registry of the six pre/post-selection paradoxes.
//!
//! Each scenario fixes a pre- and post-selected state, the observables whose
//! weak values make up the paradox (with the values that are claimed for
//! them), and the decomposition fixtures that explain those values.
//!
//! Conventions:
//! - `threebox` and `nested_mzi` use the path basis `{A, B, C}`.
//! - `cheshire` uses `{LH, LV, RH, RV}`; circular kets are
//!   `|+-> = (|H> +- i|V>)/sqrt2`, so `sigma_z` is Pauli-Y in the H/V basis.
//! - `nested_mzi` path `E` is `|E> = (|A> + i|B>)/sqrt2`, the combination
//!   orthogonal to the post-selection inside the inner interferometer.
//! - `pigeonhole` lives in the 8-dimensional three-particle space, particle
//!   1 most significant, `|L> = |0>`, `|R> = |1>`.
//! - Spin quantities are in units of hbar.

use serde::Serialize;

use crate::decomp::{self, VerificationReport};
use crate::error::{Error, Result};
use crate::linalg::{self, c, re, ComplexMatrix, StateVector, C64};
use crate::spin::{self, Direction, SpinSystem};
use crate::weak::PrePostSystem;

pub const SCENARIO_NAMES: [&str; 6] = [
    "spin100",
    "threebox",
    "cheshire",
    "nested_mzi",
    "pigeonhole",
    "spin2",
];

/// Angle between the pre-selection axis and +x in the 100-hbar setup.
pub const SPIN100_ALPHA_DEG: f64 = 179.43;

#[derive(Debug, Clone)]
pub struct Observable {
    pub label: &'static str,
    pub operator: ComplexMatrix,
    pub expected: C64,
}

#[derive(Debug, Clone)]
pub struct Scenario {
    pub name: &'static str,
    pub description: &'static str,
    pub system: PrePostSystem,
    pub observables: Vec<Observable>,
    pub fixtures: Vec<&'static str>,
}

impl Scenario {
    pub fn observable(&self, label: &str) -> Result<&Observable> {
        self.observables
            .iter()
            .find(|o| o.label == label)
            .ok_or_else(|| Error::UnknownObservable {
                scenario: self.name.to_string(),
                label: label.to_string(),
            })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScenarioRow {
    pub label: String,
    #[serde(with = "linalg::pair")]
    pub computed: C64,
    #[serde(with = "linalg::pair")]
    pub expected: C64,
    pub gap: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FixtureCheck {
    pub fixture: String,
    #[serde(flatten)]
    pub report: VerificationReport,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScenarioReport {
    pub name: String,
    pub passed: bool,
    pub rows: Vec<ScenarioRow>,
    pub fixtures: Vec<FixtureCheck>,
}

pub fn list_scenarios() -> &'static [&'static str] {
    &SCENARIO_NAMES
}

fn state(amplitudes: Vec<C64>) -> StateVector {
    StateVector::normalized(amplitudes).expect("non-zero literal state")
}

fn system(pre: StateVector, post: StateVector) -> PrePostSystem {
    PrePostSystem::new(pre, post).expect("registry selections are not orthogonal")
}

/// `|k><k|` in a `dim`-dimensional path basis.
pub fn path_projector(dim: usize, k: usize) -> ComplexMatrix {
    ComplexMatrix::projector(&StateVector::basis(dim, k))
}

pub fn three_box_system() -> PrePostSystem {
    system(
        state(vec![re(1.0), re(1.0), re(1.0)]),
        state(vec![re(1.0), re(1.0), re(-1.0)]),
    )
}

pub fn cheshire_system() -> PrePostSystem {
    // (i|L> + |R>)|H>  and  |L>|H> + |R>|V>
    system(
        state(vec![c(0.0, 1.0), re(0.0), re(1.0), re(0.0)]),
        state(vec![re(1.0), re(0.0), re(0.0), re(1.0)]),
    )
}

/// `sigma_z = |+><+| - |-><-|` on polarization.
pub fn circular_sigma_z() -> ComplexMatrix {
    let plus = state(vec![re(1.0), c(0.0, 1.0)]);
    let minus = state(vec![re(1.0), c(0.0, -1.0)]);
    ComplexMatrix::projector(&plus)
        .try_sub(&ComplexMatrix::projector(&minus))
        .expect("same dimension")
}

/// `Pi_path (x) I` with path 0 = L, 1 = R.
pub fn cheshire_path_projector(path: usize) -> ComplexMatrix {
    path_projector(2, path).kron(&ComplexMatrix::identity(2))
}

/// `Pi_path (x) sigma_z`.
pub fn cheshire_circular_polarization(path: usize) -> ComplexMatrix {
    path_projector(2, path).kron(&circular_sigma_z())
}

pub fn nested_mzi_system() -> PrePostSystem {
    system(
        state(vec![re(1.0), c(0.0, 1.0), re(1.0)]),
        state(vec![re(1.0), c(0.0, -1.0), re(1.0)]),
    )
}

pub fn nested_mzi_e_state() -> StateVector {
    state(vec![re(1.0), c(0.0, 1.0), re(0.0)])
}

pub fn nested_mzi_e_projector() -> ComplexMatrix {
    ComplexMatrix::projector(&nested_mzi_e_state())
}

fn single_particle_x() -> StateVector {
    state(vec![re(1.0), re(1.0)])
}

fn single_particle_plus() -> StateVector {
    state(vec![re(1.0), c(0.0, 1.0)])
}

/// Product pre/post-selection `|x>...|x>`, `|+>...|+>` for `particles` particles.
pub fn pigeonhole_system(particles: usize) -> PrePostSystem {
    assert!(particles >= 1);
    let product =
        |single: StateVector| (1..particles).fold(single.clone(), |acc, _| acc.kron(&single));
    system(
        product(single_particle_x()),
        product(single_particle_plus()),
    )
}

/// Single-particle operator `op` acting on particle `slot` of `particles`.
fn embed(op: &ComplexMatrix, slot: usize, particles: usize) -> ComplexMatrix {
    let id = ComplexMatrix::identity(2);
    (1..particles).fold(if slot == 0 { op.clone() } else { id.clone() }, |acc, k| {
        acc.kron(if k == slot { op } else { &id })
    })
}

/// `Pi^same_{i,j}`: particles `i` and `j` (0-based) share a box.
pub fn pigeonhole_same_projector(particles: usize, i: usize, j: usize) -> ComplexMatrix {
    assert!(i != j && i < particles && j < particles);
    (0..2)
        .map(|b| {
            let box_b = path_projector(2, b);
            embed(&box_b, i, particles)
                .matmul(&embed(&box_b, j, particles))
                .expect("same dimension")
        })
        .reduce(|a, b| a.try_add(&b).expect("same dimension"))
        .expect("two boxes")
}

pub fn spin2_system() -> PrePostSystem {
    let s = SpinSystem::new(4).expect("spin-2");
    let pre = spin::spin_eigenstate(&s, Direction::X, 2.0).expect("2 is in the spectrum");
    let post = spin::spin_eigenstate(&s, Direction::Z, 2.0).expect("2 is in the spectrum");
    system(pre, post)
}

pub fn spin100_system() -> PrePostSystem {
    spin::spin_half_system(SPIN100_ALPHA_DEG.to_radians()).expect("alpha < 180 degrees")
}

fn obs(label: &'static str, operator: ComplexMatrix, expected: f64) -> Observable {
    Observable {
        label,
        operator,
        expected: re(expected),
    }
}

pub fn build(name: &str) -> Result<Scenario> {
    let scenario = match name {
        "spin100" => {
            let s = SpinSystem::new(1)?;
            let alpha = SPIN100_ALPHA_DEG.to_radians();
            Scenario {
                name: "spin100",
                description: "spin-1/2 pre-selected along xi (179.43 deg from x in the xz plane), \
                              post-selected along +x; <Sz>_w = tan(alpha/2)/2, about 100 hbar",
                system: spin100_system(),
                observables: vec![obs("Sz", s.sz, 0.5 * (alpha / 2.0).tan())],
                fixtures: vec![],
            }
        }
        "threebox" => Scenario {
            name: "threebox",
            description: "three boxes: pre (A+B+C)/sqrt3, post (A+B-C)/sqrt3",
            system: three_box_system(),
            observables: vec![
                obs("PiA", path_projector(3, 0), 1.0),
                obs("PiB", path_projector(3, 1), 1.0),
                obs("PiC", path_projector(3, 2), -1.0),
            ],
            fixtures: vec!["threebox.PiA", "threebox.PiB", "threebox.PiC"],
        },
        "cheshire" => Scenario {
            name: "cheshire",
            description: "quantum Cheshire cat: pre (iL+R)H/sqrt2, post (LH+RV)/sqrt2",
            system: cheshire_system(),
            observables: vec![
                obs("PiL", cheshire_path_projector(0), 1.0),
                obs("PiR", cheshire_path_projector(1), 0.0),
                obs("SigmaL", cheshire_circular_polarization(0), 0.0),
                obs("SigmaR", cheshire_circular_polarization(1), 1.0),
            ],
            fixtures: vec![
                "cheshire.PiL",
                "cheshire.PiR",
                "cheshire.SigmaL",
                "cheshire.SigmaR",
            ],
        },
        "nested_mzi" => Scenario {
            name: "nested_mzi",
            description: "past of a photon in a nested interferometer: pre (A+iB+C)/sqrt3, \
                          post (A-iB+C)/sqrt3, E = (A+iB)/sqrt2",
            system: nested_mzi_system(),
            observables: vec![
                obs("PiA", path_projector(3, 0), 1.0),
                obs("PiB", path_projector(3, 1), -1.0),
                obs("PiE", nested_mzi_e_projector(), 0.0),
            ],
            fixtures: vec!["past.PiA", "past.PiB", "past.PiE"],
        },
        "pigeonhole" => Scenario {
            name: "pigeonhole",
            description: "three particles in two boxes: pre |x>|x>|x>, post |+>|+>|+>",
            system: pigeonhole_system(3),
            observables: vec![
                obs("PiSame12", pigeonhole_same_projector(3, 0, 1), 0.0),
                obs("PiSame13", pigeonhole_same_projector(3, 0, 2), 0.0),
                obs("PiSame23", pigeonhole_same_projector(3, 1, 2), 0.0),
            ],
            fixtures: vec!["pigeonhole.PiSame"],
        },
        "spin2" => {
            let s = SpinSystem::new(4)?;
            Scenario {
                name: "spin2",
                description: "spin-2 pre-selected in |2>_x, post-selected in |2>_z; \
                              <Sy^2>_w = -2 hbar^2",
                system: spin2_system(),
                observables: vec![obs("Sy2", s.sy.matmul(&s.sy)?, -2.0)],
                fixtures: vec!["spin2.Sy2"],
            }
        }
        _ => return Err(Error::UnknownScenario(name.to_string())),
    };
    Ok(scenario)
}

/// Evaluates every weak value of a scenario and verifies its fixtures.
pub fn run(name: &str, tol: f64) -> Result<ScenarioReport> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::InvalidArgument(format!(
            "tolerance must be positive, got {tol}"
        )));
    }
    let scenario = build(name)?;
    let rows = scenario
        .observables
        .iter()
        .map(|o| {
            let computed = scenario.system.weak_value(&o.operator)?.value;
            Ok(ScenarioRow {
                label: o.label.to_string(),
                computed,
                expected: o.expected,
                gap: (computed - o.expected).norm(),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let fixtures = scenario
        .fixtures
        .iter()
        .map(|&f| {
            let fx = decomp::fixture(f)?;
            Ok(FixtureCheck {
                fixture: f.to_string(),
                report: decomp::verify(&fx.observable, &fx.system, &fx.decomposition, tol)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let passed = rows.iter().all(|r| r.gap <= tol) && fixtures.iter().all(|f| f.report.passed);
    Ok(ScenarioReport {
        name: scenario.name.to_string(),
        passed,
        rows,
        fixtures,
    })
}
