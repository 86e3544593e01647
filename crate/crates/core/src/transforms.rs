//! Unitaries that carry a pair of states to the degenerate canonical frame.
//!
//! The canonical pair for overlap `ξ` in dimension `n` is `|0⟩` and the
//! symmetric power `|φ⟩^{⊗(n-1)}` with `φ = (α, β)`, `α = ξ^{1/(n-1)}`: both
//! have fully degenerate constellations (north pole and `φ`).

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::majorana::degenerate_state;
use crate::statespace::{PureState, Star, StateCurve, ORTHO_TOL};

pub type CMatrix = DMatrix<Complex64>;
type CVector = DVector<Complex64>;

/// Overlaps at or above this are treated as identical end states.
const IDENTICAL_TOL: f64 = 1e-12;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    /// Apply `W`: source frame to canonical frame.
    Forward,
    /// Apply `W†`: canonical frame back to the source frame.
    Inverse,
}

/// A unitary `W` with `W ψ1 = |0⟩`, `W ψ2 = |φ⟩^{⊗(n-1)}`.
#[derive(Clone, Debug)]
pub struct FrameMap {
    unitary: CMatrix,
    source: (PureState, PureState),
    canonical: (PureState, PureState),
    xi: f64,
}

impl FrameMap {
    pub fn unitary(&self) -> &CMatrix {
        &self.unitary
    }

    pub fn inverse_matrix(&self) -> CMatrix {
        self.unitary.adjoint()
    }

    /// The source pair; the second state is gauge-aligned to the first.
    pub fn source(&self) -> (&PureState, &PureState) {
        (&self.source.0, &self.source.1)
    }

    pub fn canonical(&self) -> (&PureState, &PureState) {
        (&self.canonical.0, &self.canonical.1)
    }

    /// Real positive overlap `ξ = cos θ` shared by both pairs.
    pub fn xi(&self) -> f64 {
        self.xi
    }

    pub fn theta(&self) -> f64 {
        self.xi.acos()
    }

    pub fn dim(&self) -> usize {
        self.unitary.nrows()
    }

    pub fn apply(&self, psi: &PureState, direction: Direction) -> Result<PureState> {
        match direction {
            Direction::Forward => apply_matrix(&self.unitary, psi),
            Direction::Inverse => apply_matrix(&self.unitary.adjoint(), psi),
        }
    }

    /// `max |(W W† - I)_{ij}|`.
    pub fn unitarity_defect(&self) -> f64 {
        let prod = &self.unitary * self.unitary.adjoint();
        let n = self.dim();
        let mut worst: f64 = 0.0;
        for i in 0..n {
            for j in 0..n {
                let target = if i == j { 1.0 } else { 0.0 };
                worst = worst.max((prod[(i, j)] - Complex64::new(target, 0.0)).norm());
            }
        }
        worst
    }
}

pub fn apply_matrix(m: &CMatrix, psi: &PureState) -> Result<PureState> {
    if m.ncols() != psi.dim() {
        return Err(Error::DimensionMismatch { expected: m.ncols(), found: psi.dim() });
    }
    let v = m * CVector::from_column_slice(psi.amps());
    PureState::new(v.iter().copied().collect())
}

/// `(|0⟩, |φ⟩^{⊗(dim-1)})` with `⟨0|φ^{⊗(dim-1)}⟩ = xi`.
pub fn canonical_pair(dim: usize, xi: f64) -> Result<(PureState, PureState)> {
    if dim < 2 {
        return Err(Error::DimensionTooSmall { min: 2, found: dim });
    }
    if !(xi > 0.0 && xi < 1.0) {
        return Err(Error::OutOfRange(format!("overlap {xi} not in (0, 1)")));
    }
    let alpha = xi.powf(1.0 / (dim - 1) as f64);
    let beta = (1.0 - alpha * alpha).sqrt();
    let phi = Star::new(Complex64::new(alpha, 0.0), Complex64::new(beta, 0.0))?;
    Ok((PureState::basis(dim, 0)?, degenerate_state(&phi, dim)?))
}

/// Gauge-aligns `psi2` to `psi1` and returns it with the real overlap.
pub(crate) fn aligned_overlap(psi1: &PureState, psi2: &PureState) -> Result<(PureState, f64)> {
    let aligned = psi1.gauge_align(psi2)?;
    let xi = psi1.inner(&aligned)?.re;
    if xi <= ORTHO_TOL {
        return Err(Error::Orthogonal { overlap: xi });
    }
    if xi >= 1.0 - IDENTICAL_TOL {
        return Err(Error::IdenticalStates { overlap: xi });
    }
    Ok((aligned, xi))
}

fn column(psi: &PureState) -> CVector {
    CVector::from_column_slice(psi.amps())
}

fn project_out(v: &mut CVector, basis: &[CVector]) {
    for b in basis {
        let coeff = b.dotc(v);
        *v -= b * coeff;
    }
}

/// Extends an orthonormal list to a basis of `C^n` by Gram-Schmidt over the
/// standard basis, each vector orthogonalized twice; at each step the
/// candidate with the largest residual is taken.
fn orthonormal_completion(mut basis: Vec<CVector>, n: usize) -> Vec<CVector> {
    let mut remaining: Vec<usize> = (0..n).collect();
    while basis.len() < n {
        let mut best: Option<(usize, CVector, f64)> = None;
        for (pos, &k) in remaining.iter().enumerate() {
            let mut v = CVector::zeros(n);
            v[k] = Complex64::new(1.0, 0.0);
            project_out(&mut v, &basis);
            project_out(&mut v, &basis);
            let norm = v.norm();
            if best.as_ref().is_none_or(|(_, _, b)| norm > *b) {
                best = Some((pos, v, norm));
            }
        }
        let (pos, v, norm) = best.expect("fewer than n basis vectors leaves a candidate");
        remaining.remove(pos);
        basis.push(v / Complex64::new(norm, 0.0));
    }
    basis
}

/// Rotates `v` so its largest-magnitude entry is real and positive.
fn fix_phase(v: CVector) -> CVector {
    let (_, big) =
        v.iter()
            .enumerate()
            .fold((0, Complex64::new(0.0, 0.0)), |acc, (i, c)| if c.norm() > acc.1.norm() { (i, *c) } else { acc });
    let w = big.conj() / big.norm();
    v * w
}

fn unit(v: CVector) -> CVector {
    let n = v.norm();
    v / Complex64::new(n, 0.0)
}

/// Two-stage three-level construction: first `|0⟩⟨ψ1| + e^{-iφ}|1⟩⟨ψ̄1| +
/// |2⟩⟨ψ̄̄1|`, taking `ψ2` to `(cos θ, sin θ, 0)`, then a real rotation in
/// the `{|1⟩, |2⟩}` block taking that to `(α², √2 αβ, β²)`.
pub fn canonical_frame_3d(psi1: &PureState, psi2: &PureState) -> Result<FrameMap> {
    if psi1.dim() != 3 {
        return Err(Error::DimensionMismatch { expected: 3, found: psi1.dim() });
    }
    let (psi2, xi) = aligned_overlap(psi1, psi2)?;
    let theta = xi.acos();
    let (sin_t, cos_t) = theta.sin_cos();

    let p1 = column(psi1);
    let p2 = column(&psi2);
    let bar = fix_phase(unit(&p2 - &p1 * Complex64::new(xi, 0.0)));
    let gamma = bar.dotc(&p2);
    let phase = Complex64::from_polar(1.0, -gamma.arg());
    let completed = orthonormal_completion(vec![p1.clone(), bar.clone()], 3);
    let barbar = &completed[2];

    let mut first = CMatrix::zeros(3, 3);
    for j in 0..3 {
        first[(0, j)] = p1[j].conj();
        first[(1, j)] = phase * bar[j].conj();
        first[(2, j)] = barbar[j].conj();
    }

    let alpha = cos_t.sqrt();
    let beta = (1.0 - cos_t).sqrt();
    let a = 2f64.sqrt() * alpha * beta / sin_t;
    let b = beta * beta / sin_t;
    let r = |x: f64| Complex64::new(x, 0.0);
    let second = CMatrix::from_row_slice(3, 3, &[r(1.0), r(0.0), r(0.0), r(0.0), r(a), r(-b), r(0.0), r(b), r(a)]);

    let unitary = second * first;
    let canonical = canonical_pair(3, xi)?;
    Ok(FrameMap { unitary, source: (psi1.clone(), psi2), canonical, xi })
}

/// Any dimension: both pairs share the overlap `ξ`, so their two-dimensional
/// Gram matrices agree; `W` maps an orthonormal basis adapted to the source
/// pair onto one adapted to the canonical pair.
pub fn canonical_frame_nd(psi1: &PureState, psi2: &PureState) -> Result<FrameMap> {
    let n = psi1.dim();
    let (psi2, xi) = aligned_overlap(psi1, psi2)?;
    let canonical = canonical_pair(n, xi)?;
    let perp = (1.0 - xi * xi).sqrt();

    let s0 = column(psi1);
    let s1 = (column(&psi2) - &s0 * Complex64::new(xi, 0.0)) / Complex64::new(perp, 0.0);
    let t0 = column(&canonical.0);
    let t1 = (column(&canonical.1) - &t0 * Complex64::new(xi, 0.0)) / Complex64::new(perp, 0.0);
    let src = orthonormal_completion(vec![s0, unit(s1)], n);
    let dst = orthonormal_completion(vec![t0, unit(t1)], n);

    let mut unitary = CMatrix::zeros(n, n);
    for (t, s) in dst.iter().zip(&src) {
        unitary += t * s.adjoint();
    }
    Ok(FrameMap { unitary, source: (psi1.clone(), psi2), canonical, xi })
}

/// Applies `W` or `W†` to every sample of a curve.
pub fn conjugate_curve(map: &FrameMap, c: &StateCurve, direction: Direction) -> Result<StateCurve> {
    if c.dim() != map.dim() {
        return Err(Error::DimensionMismatch { expected: map.dim(), found: c.dim() });
    }
    let m = match direction {
        Direction::Forward => map.unitary.clone(),
        Direction::Inverse => map.unitary.adjoint(),
    };
    c.try_map(|psi| apply_matrix(&m, psi))
}

/// Row-major `{"n": n, "re": [[..]], "im": [[..]]}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MatrixJson {
    pub n: usize,
    pub re: Vec<Vec<f64>>,
    pub im: Vec<Vec<f64>>,
}

impl From<&CMatrix> for MatrixJson {
    fn from(m: &CMatrix) -> Self {
        let n = m.nrows();
        MatrixJson {
            n,
            re: (0..n).map(|i| (0..m.ncols()).map(|j| m[(i, j)].re).collect()).collect(),
            im: (0..n).map(|i| (0..m.ncols()).map(|j| m[(i, j)].im).collect()).collect(),
        }
    }
}

impl TryFrom<&MatrixJson> for CMatrix {
    type Error = Error;

    fn try_from(j: &MatrixJson) -> Result<Self> {
        let n = j.n;
        let rows_ok = j.re.len() == n && j.im.len() == n;
        if !rows_ok || j.re.iter().chain(&j.im).any(|row| row.len() != n) {
            return Err(Error::DimensionMismatch { expected: n, found: j.re.len() });
        }
        Ok(CMatrix::from_fn(n, n, |i, k| Complex64::new(j.re[i][k], j.im[i][k])))
    }
}
