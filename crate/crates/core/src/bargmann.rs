//! Bargmann invariants, geometric phases and the null-phase test.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::statespace::{PureState, StateCurve, ORTHO_TOL};

/// Seed used when none is given.
pub const DEFAULT_SEED: u64 = 7;
/// Largest `|Im Δ3|` still counted as real.
pub const IM_TOL: f64 = 1e-9;
/// `Re Δ3` must exceed this.
pub const RE_FLOOR: f64 = 1e-12;

/// `Δ3 = ⟨ψ1|ψ2⟩⟨ψ2|ψ3⟩⟨ψ3|ψ1⟩`.
#[derive(Clone, Debug, PartialEq)]
pub struct TripleBI {
    pub value: Complex64,
    pub arg: f64,
    pub states: [PureState; 3],
}

fn overlap(a: &PureState, b: &PureState) -> Result<Complex64> {
    let ov = a.inner(b)?;
    if ov.norm() <= ORTHO_TOL {
        return Err(Error::Orthogonal { overlap: ov.norm() });
    }
    Ok(ov)
}

pub fn bi3(p1: &PureState, p2: &PureState, p3: &PureState) -> Result<TripleBI> {
    let value = overlap(p1, p2)? * overlap(p2, p3)? * overlap(p3, p1)?;
    Ok(TripleBI { value, arg: value.arg(), states: [p1.clone(), p2.clone(), p3.clone()] })
}

/// Cyclic product `⟨ψ1|ψ2⟩⟨ψ2|ψ3⟩…⟨ψn|ψ1⟩`.
pub fn bi_n(states: &[PureState]) -> Result<Complex64> {
    if states.is_empty() {
        return Err(Error::TooFewSamples { min: 1, found: 0 });
    }
    let n = states.len();
    (0..n).try_fold(Complex64::new(1.0, 0.0), |acc, i| Ok(acc * overlap(&states[i], &states[(i + 1) % n])?))
}

/// `-arg Δn` of the polygon closed by geodesic chords.
pub fn geometric_phase_closed(states: &[PureState]) -> Result<f64> {
    // subtracting from +0 keeps a zero phase from printing as -0
    Ok(0.0 - bi_n(states)?.arg())
}

/// Geometric phase of a sampled curve closed by the chord from its last
/// sample back to its first.
pub fn closed_loop_phase(c: &StateCurve) -> Result<f64> {
    geometric_phase_closed(c.states())
}

/// `{"pass", "max_abs_im", "min_re", "n_triples", "seed"}`
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct NpcReport {
    pub pass: bool,
    pub max_abs_im: f64,
    pub min_re: f64,
    pub n_triples: usize,
    pub seed: u64,
}

/// Draws `n_triples` index triples from the sample grid and checks that every
/// `Δ3` is real and positive. Indices within a triple are distinct when the
/// curve has at least three samples.
pub fn verify_npc(c: &StateCurve, n_triples: usize, seed: u64) -> Result<NpcReport> {
    if n_triples == 0 {
        return Err(Error::OutOfRange("at least one triple is required".into()));
    }
    let n = c.len();
    let states = c.states();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut max_abs_im = 0.0f64;
    let mut min_re = f64::INFINITY;
    for _ in 0..n_triples {
        let (i, j, k) = if n >= 3 {
            let i = rng.random_range(0..n);
            let mut j = rng.random_range(0..n - 1);
            if j >= i {
                j += 1;
            }
            let mut k = rng.random_range(0..n - 2);
            for skip in [i.min(j), i.max(j)] {
                if k >= skip {
                    k += 1;
                }
            }
            (i, j, k)
        } else {
            (rng.random_range(0..n), rng.random_range(0..n), rng.random_range(0..n))
        };
        let d = bi3(&states[i], &states[j], &states[k])?.value;
        max_abs_im = max_abs_im.max(d.im.abs());
        min_re = min_re.min(d.re);
    }
    Ok(NpcReport { pass: max_abs_im <= IM_TOL && min_re > RE_FLOOR, max_abs_im, min_re, n_triples, seed })
}
