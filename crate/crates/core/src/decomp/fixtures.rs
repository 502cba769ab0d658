//! Hand-built decompositions for every paradox observable in the scenario
//! registry.

use super::Decomposition;
use crate::error::{Error, Result};
use crate::linalg::{c, re, ComplexMatrix, C64};
use crate::scenarios;
use crate::spin::SpinSystem;
use crate::weak::PrePostSystem;

pub const FIXTURE_NAMES: [&str; 12] = [
    "threebox.PiA",
    "threebox.PiB",
    "threebox.PiC",
    "cheshire.PiL",
    "cheshire.PiR",
    "cheshire.SigmaL",
    "cheshire.SigmaR",
    "past.PiA",
    "past.PiB",
    "past.PiE",
    "pigeonhole.PiSame",
    "spin2.Sy2",
];

#[derive(Debug, Clone)]
pub struct Fixture {
    pub name: &'static str,
    pub observable: ComplexMatrix,
    pub decomposition: Decomposition,
    pub expected_p: f64,
    pub expected_q: f64,
    /// The pre/post-selection the split refers to.
    pub system: PrePostSystem,
}

fn mat<const N: usize>(rows: [[C64; N]; N]) -> ComplexMatrix {
    let rows: Vec<Vec<C64>> = rows.iter().map(|r| r.to_vec()).collect();
    ComplexMatrix::from_rows(&rows).expect("fixture tables are square")
}

fn real<const N: usize>(rows: [[f64; N]; N]) -> ComplexMatrix {
    mat(rows.map(|r| r.map(re)))
}

const O: C64 = C64::new(0.0, 0.0);
const ONE: C64 = C64::new(1.0, 0.0);
const M1: C64 = C64::new(-1.0, 0.0);
const I: C64 = C64::new(0.0, 1.0);
const MI: C64 = C64::new(0.0, -1.0);

struct Entry {
    observable: ComplexMatrix,
    p_part: ComplexMatrix,
    q_part: ComplexMatrix,
    p: f64,
    q: f64,
    system: PrePostSystem,
}

fn table(name: &str) -> Option<Entry> {
    let entry = match name {
        "threebox.PiA" => Entry {
            observable: scenarios::path_projector(3, 0),
            p_part: real([
                [5.0 / 3.0, -7.0 / 6.0, 0.0],
                [-7.0 / 6.0, 7.0 / 6.0, 1.0 / 2.0],
                [0.0, 1.0 / 2.0, 0.0],
            ]),
            q_part: real([
                [-2.0 / 3.0, 7.0 / 6.0, 0.0],
                [7.0 / 6.0, -7.0 / 6.0, -1.0 / 2.0],
                [0.0, -1.0 / 2.0, 0.0],
            ]),
            p: 0.5,
            q: 0.5,
            system: scenarios::three_box_system(),
        },
        "threebox.PiB" => Entry {
            observable: scenarios::path_projector(3, 1),
            p_part: real([[-0.5, 1.0, 0.5], [1.0, 0.0, 0.0], [0.5, 0.0, 0.5]]),
            q_part: real([[0.5, -1.0, -0.5], [-1.0, 1.0, 0.0], [-0.5, 0.0, -0.5]]),
            p: 1.0,
            q: 0.0,
            system: scenarios::three_box_system(),
        },
        "threebox.PiC" => Entry {
            observable: scenarios::path_projector(3, 2),
            p_part: real([[0.5, 0.5, -0.5], [0.5, 0.5, -0.5], [-0.5, -0.5, 1.5]]),
            q_part: real([[-0.5, -0.5, 0.5], [-0.5, -0.5, 0.5], [0.5, 0.5, -0.5]]),
            p: 0.5,
            q: -1.5,
            system: scenarios::three_box_system(),
        },
        "cheshire.PiL" => Entry {
            observable: scenarios::cheshire_path_projector(0),
            p_part: mat([
                [re(2.0), ONE, MI, M1],
                [ONE, ONE, MI, M1],
                [I, I, re(2.0), MI],
                [M1, M1, I, ONE],
            ]),
            q_part: mat([
                [M1, M1, I, ONE],
                [M1, O, I, ONE],
                [MI, MI, re(-2.0), I],
                [ONE, ONE, MI, M1],
            ]),
            p: 1.0,
            q: 0.0,
            system: scenarios::cheshire_system(),
        },
        "cheshire.PiR" => Entry {
            observable: scenarios::cheshire_path_projector(1),
            p_part: mat([
                [O, ONE, I, ONE],
                [ONE, ONE, MI, M1],
                [MI, I, O, I],
                [ONE, M1, MI, ONE],
            ]),
            q_part: mat([
                [O, M1, MI, M1],
                [M1, M1, I, ONE],
                [I, MI, ONE, MI],
                [M1, ONE, I, O],
            ]),
            p: 1.0,
            q: -1.0,
            system: scenarios::cheshire_system(),
        },
        "cheshire.SigmaL" => Entry {
            observable: scenarios::cheshire_circular_polarization(0),
            p_part: mat([
                [ONE, O, O, O],
                [O, ONE, O, I],
                [O, O, ONE, O],
                [O, MI, O, ONE],
            ]),
            q_part: mat([[M1, MI, O, O], [I, M1, O, MI], [O, O, M1, O], [O, I, O, M1]]),
            p: 1.0,
            q: -1.0,
            system: scenarios::cheshire_system(),
        },
        "cheshire.SigmaR" => Entry {
            observable: scenarios::cheshire_circular_polarization(1),
            p_part: mat([
                [ONE, ONE, O, M1],
                [ONE, ONE, MI, M1],
                [O, I, ONE, MI],
                [M1, M1, I, ONE],
            ]),
            q_part: mat([
                [M1, M1, O, ONE],
                [M1, M1, I, ONE],
                [O, MI, M1, O],
                [ONE, ONE, O, M1],
            ]),
            p: 1.0,
            q: 0.0,
            system: scenarios::cheshire_system(),
        },
        "past.PiA" => Entry {
            observable: scenarios::path_projector(3, 0),
            p_part: mat([
                [re(2.0), O, ONE],
                [O, O, c(0.0, 3.0)],
                [ONE, c(0.0, -3.0), M1],
            ])
            .scale(1.0 / 6.0),
            q_part: mat([
                [re(4.0), O, M1],
                [O, O, c(0.0, -3.0)],
                [M1, c(0.0, 3.0), ONE],
            ])
            .scale(1.0 / 6.0),
            p: 0.5,
            q: 0.5,
            system: scenarios::nested_mzi_system(),
        },
        "past.PiB" => Entry {
            observable: scenarios::path_projector(3, 1),
            p_part: mat([
                [ONE, c(0.0, 3.0), M1],
                [c(0.0, -3.0), re(3.0), c(0.0, -3.0)],
                [M1, c(0.0, 3.0), ONE],
            ])
            .scale(1.0 / 6.0),
            q_part: mat([
                [M1, c(0.0, -3.0), ONE],
                [c(0.0, 3.0), re(3.0), c(0.0, 3.0)],
                [ONE, c(0.0, -3.0), M1],
            ])
            .scale(1.0 / 6.0),
            p: -0.5,
            q: -0.5,
            system: scenarios::nested_mzi_system(),
        },
        "past.PiE" => {
            let pi_e = scenarios::nested_mzi_e_projector();
            Entry {
                observable: pi_e.clone(),
                p_part: ComplexMatrix::zeros(3),
                q_part: pi_e,
                p: 0.0,
                q: 0.0,
                system: scenarios::nested_mzi_system(),
            }
        }
        "pigeonhole.PiSame" => Entry {
            observable: scenarios::pigeonhole_same_projector(2, 0, 1),
            p_part: mat([
                [re(5.0), re(5.0), c(-4.0, -1.0), c(-2.0, 1.0)],
                [re(5.0), re(5.0), c(-6.0, 5.0), c(0.0, -5.0)],
                [c(-4.0, 1.0), c(-6.0, -5.0), re(13.0), c(1.0, 4.0)],
                [c(-2.0, -1.0), c(0.0, 5.0), c(1.0, -4.0), re(5.0)],
            ])
            .scale(0.25),
            q_part: mat([
                [M1, re(-5.0), c(4.0, 1.0), c(2.0, -1.0)],
                [re(-5.0), re(-5.0), c(6.0, -5.0), c(0.0, 5.0)],
                [c(4.0, -1.0), c(6.0, 5.0), re(-13.0), c(-1.0, -4.0)],
                [c(2.0, 1.0), c(0.0, -5.0), c(-1.0, 4.0), M1],
            ])
            .scale(0.25),
            p: 1.0,
            q: -1.0,
            system: scenarios::pigeonhole_system(2),
        },
        "spin2.Sy2" => {
            let s = SpinSystem::new(4).expect("spin-2");
            let sq = |m: &ComplexMatrix| m.matmul(m).expect("square");
            let total = ComplexMatrix::identity(5).scale(s.j() * (s.j() + 1.0));
            Entry {
                observable: sq(&s.sy),
                p_part: total.try_sub(&sq(&s.sx)).expect("same dimension"),
                q_part: sq(&s.sz).scale(-1.0),
                p: 6.0 - 4.0,
                q: -4.0,
                system: scenarios::spin2_system(),
            }
        }
        _ => return None,
    };
    Some(entry)
}

pub fn fixture(name: &str) -> Result<Fixture> {
    let (&name, entry) = FIXTURE_NAMES
        .iter()
        .find(|&&n| n == name)
        .zip(table(name))
        .ok_or_else(|| Error::UnknownFixture(name.to_string()))?;
    Ok(Fixture {
        name,
        observable: entry.observable,
        decomposition: Decomposition::new(entry.p_part, entry.q_part, entry.p, entry.q)?,
        expected_p: entry.p,
        expected_q: entry.q,
        system: entry.system,
    })
}
