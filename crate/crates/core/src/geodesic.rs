//! Geodesics in pure-state space and their Majorana star tracks.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::assign::optimal_assignment;
use crate::circle::{fit_circle, CircleFit, CircleJson};
use crate::error::{Error, Result};
use crate::majorana::{decompose, DEGENERACY_TOL};
use crate::statespace::{uniform_grid, BlochVector, PureState, Star, StateCurve};
use crate::transforms::{
    aligned_overlap, canonical_frame_3d, canonical_frame_nd, canonical_pair, conjugate_curve, Direction, FrameMap,
};

/// How close end states must be to the degenerate canonical form for the
/// closed-form track constructions.
pub const CANONICAL_TOL: f64 = 1e-9;

/// Two gauge-aligned end states and a sample count.
#[derive(Clone, Debug, PartialEq)]
pub struct GeodesicSpec {
    psi1: PureState,
    psi2: PureState,
    xi: f64,
    theta: f64,
    n_samples: usize,
}

impl GeodesicSpec {
    /// `psi2` is rephased so that `⟨psi1|psi2⟩ = ξ` is real and positive.
    pub fn new(psi1: &PureState, psi2: &PureState, n_samples: usize) -> Result<Self> {
        if n_samples < 2 {
            return Err(Error::TooFewSamples { min: 2, found: n_samples });
        }
        if psi1.dim() != psi2.dim() {
            return Err(Error::DimensionMismatch { expected: psi1.dim(), found: psi2.dim() });
        }
        let (psi2, xi) = aligned_overlap(psi1, psi2)?;
        Ok(Self { psi1: psi1.clone(), psi2, xi, theta: xi.acos(), n_samples })
    }

    /// `|0⟩` to the `(dim-1)`-fold degenerate state at angle `theta`.
    pub fn canonical(dim: usize, theta: f64, n_samples: usize) -> Result<Self> {
        if !(theta > 0.0 && theta < PI / 2.0) {
            return Err(Error::OutOfRange(format!("theta {theta} not in (0, pi/2)")));
        }
        let (psi1, psi2) = canonical_pair(dim, theta.cos())?;
        Self::new(&psi1, &psi2, n_samples)
    }

    pub fn psi1(&self) -> &PureState {
        &self.psi1
    }

    pub fn psi2(&self) -> &PureState {
        &self.psi2
    }

    pub fn xi(&self) -> f64 {
        self.xi
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn n_samples(&self) -> usize {
        self.n_samples
    }

    pub fn dim(&self) -> usize {
        self.psi1.dim()
    }

    /// Uniform grid on `[0, θ]`.
    pub fn grid(&self) -> Vec<f64> {
        uniform_grid(0.0, self.theta, self.n_samples)
    }

    /// Whether the ends are `|0⟩` and the symmetric power of `(α, β)`.
    pub fn is_canonical(&self) -> bool {
        let Ok((e0, target)) = canonical_pair(self.dim(), self.xi) else {
            return false;
        };
        let close = |a: &PureState, b: &PureState| a.distance_up_to_phase(b).is_ok_and(|d| d <= CANONICAL_TOL);
        close(&self.psi1, &e0) && close(&self.psi2, &target)
    }

    fn require_canonical(&self) -> Result<()> {
        if self.is_canonical() {
            Ok(())
        } else {
            Err(Error::NotCanonical("end states are not |0> and a degenerate symmetric power".into()))
        }
    }

    /// `α = ξ^{1/(n-1)}` and `β = sqrt(1 - α²)`.
    fn star_amplitudes(&self) -> (f64, f64) {
        let alpha = self.xi.powf(1.0 / (self.dim() - 1) as f64);
        (alpha, (1.0 - alpha * alpha).sqrt())
    }
}

/// Samples `cos s ψ1 + sin s (ψ2 - ξψ1)/sqrt(1-ξ²)` on `[0, θ]`.
pub fn geodesic_curve(spec: &GeodesicSpec) -> Result<StateCurve> {
    let grid = spec.grid();
    let perp = (1.0 - spec.xi * spec.xi).sqrt();
    let p1 = spec.psi1.amps();
    let p2 = spec.psi2.amps();
    let last = grid.len() - 1;
    let mut states = Vec::with_capacity(grid.len());
    for (i, &s) in grid.iter().enumerate() {
        let state = if i == 0 {
            spec.psi1.clone()
        } else if i == last {
            spec.psi2.clone()
        } else {
            let (sin, cos) = s.sin_cos();
            let amps = p1.iter().zip(p2).map(|(&a, &b)| a * cos + (b - a * spec.xi) * (sin / perp)).collect();
            PureState::normalized(amps)?
        };
        states.push(state);
    }
    StateCurve::new(grid, states)
}

type CVec = Vec<Complex64>;

fn combine(terms: &[(f64, &[Complex64])]) -> CVec {
    let n = terms[0].1.len();
    (0..n).map(|k| terms.iter().map(|(w, v)| v[k] * *w).sum()).collect()
}

fn cnorm(v: &[Complex64]) -> f64 {
    v.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt()
}

fn cdot(a: &[Complex64], b: &[Complex64]) -> Complex64 {
    a.iter().zip(b).map(|(x, y)| x.conj() * y).sum()
}

/// `|u - ⟨ψ|u⟩ψ|`
fn transverse_speed(psi: &[Complex64], u: &[Complex64]) -> f64 {
    let p = cdot(psi, u);
    let perp: CVec = u.iter().zip(psi).map(|(&x, &y)| x - y * p).collect();
    cnorm(&perp)
}

/// Fubini–Study length: trapezoid rule over the transverse speed, with
/// second-order finite differences on the possibly non-uniform grid. The
/// curve is first put in the parallel-transport gauge so that sampled
/// phases do not enter the derivative.
pub fn curve_length(c: &StateCurve) -> Result<f64> {
    let n = c.len();
    if n < 2 {
        return Err(Error::TooFewSamples { min: 2, found: n });
    }
    let c = c.parallel_transported();
    let s = c.params();
    let psi: Vec<&[Complex64]> = c.states().iter().map(|p| p.amps()).collect();

    let mut speed = vec![0.0; n];
    if n == 2 {
        let h = s[1] - s[0];
        let u = combine(&[(-1.0 / h, psi[0]), (1.0 / h, psi[1])]);
        speed[0] = transverse_speed(psi[0], &u);
        speed[1] = transverse_speed(psi[1], &u);
    } else {
        for i in 0..n {
            let u = if i == 0 {
                let (h1, h2) = (s[1] - s[0], s[2] - s[1]);
                combine(&[
                    (-(2.0 * h1 + h2) / (h1 * (h1 + h2)), psi[0]),
                    ((h1 + h2) / (h1 * h2), psi[1]),
                    (-h1 / (h2 * (h1 + h2)), psi[2]),
                ])
            } else if i == n - 1 {
                let (h1, h2) = (s[n - 2] - s[n - 3], s[n - 1] - s[n - 2]);
                combine(&[
                    (h2 / (h1 * (h1 + h2)), psi[n - 3]),
                    (-(h1 + h2) / (h1 * h2), psi[n - 2]),
                    ((2.0 * h2 + h1) / (h2 * (h1 + h2)), psi[n - 1]),
                ])
            } else {
                let (h1, h2) = (s[i] - s[i - 1], s[i + 1] - s[i]);
                combine(&[
                    (-h2 / (h1 * (h1 + h2)), psi[i - 1]),
                    ((h2 - h1) / (h1 * h2), psi[i]),
                    (h1 / (h2 * (h1 + h2)), psi[i + 1]),
                ])
            };
            speed[i] = transverse_speed(psi[i], &u);
        }
    }
    Ok(s.windows(2).zip(speed.windows(2)).map(|(w, v)| 0.5 * (w[1] - w[0]) * (v[0] + v[1])).sum())
}

/// Largest interior value of `‖Ψ̈ + ⟨Ψ̇|Ψ̇⟩Ψ‖`, central differences on a
/// uniform grid, in the parallel-transport gauge.
pub fn geodesic_residual(c: &StateCurve) -> Result<f64> {
    if c.len() < 5 {
        return Err(Error::TooFewSamples { min: 5, found: c.len() });
    }
    let h = c.uniform_step().ok_or(Error::NonUniformGrid)?;
    let c = c.parallel_transported();
    let psi: Vec<&[Complex64]> = c.states().iter().map(|p| p.amps()).collect();
    let mut worst = 0.0f64;
    for i in 1..psi.len() - 1 {
        let acc = combine(&[(1.0 / (h * h), psi[i - 1]), (-2.0 / (h * h), psi[i]), (1.0 / (h * h), psi[i + 1])]);
        let vel = combine(&[(-0.5 / h, psi[i - 1]), (0.5 / h, psi[i + 1])]);
        let speed2 = cnorm(&vel).powi(2);
        let r: CVec = acc.iter().zip(psi[i]).map(|(&a, &p)| a + p * speed2).collect();
        worst = worst.max(cnorm(&r));
    }
    Ok(worst)
}

/// Dual pairs `(i, j)` of track indices and an optional self-dual track.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct DualPairing {
    pub pairs: Vec<(usize, usize)>,
    pub self_dual: Option<usize>,
}

impl DualPairing {
    /// Pairs as index arrays; the self-dual track appears as `[k, k]`.
    pub fn as_arrays(&self) -> Vec<[usize; 2]> {
        let mut out: Vec<[usize; 2]> = self.pairs.iter().map(|&(i, j)| [i, j]).collect();
        if let Some(k) = self.self_dual {
            out.push([k, k]);
        }
        out
    }
}

/// Principal `(n-1)`-th root of `Π ω_k = (-1)^{n-2}`, with
/// `ω_k = e^{2πik/(n-1)}`. Computed in closed form: numerically the product
/// lands at `-1 ± iε` and the sign of `ε` would pick the branch.
fn delta(m: usize) -> Complex64 {
    if m % 2 == 1 {
        Complex64::new(1.0, 0.0)
    } else {
        Complex64::from_polar(1.0, PI / m as f64)
    }
}

/// `Δ ω_k` for the `(n-1)`-star ansatz.
pub fn ansatz_phase(n: usize, k: usize) -> Complex64 {
    let m = n - 1;
    delta(m) * Complex64::from_polar(1.0, 2.0 * PI * k as f64 / m as f64)
}

/// Track pairing for the ansatz labels. Tracks `i` and `j` are mirror images
/// through the xz-plane exactly when `Δω_j = conj(Δω_i)`, which for the
/// principal branch reads `i + j ≡ n-2 (mod n-1)` for odd `n` and
/// `i + j ≡ 0 (mod n-1)` for even `n`, where `k = 0` is self-dual.
pub fn dual_pairs(n: usize) -> Result<DualPairing> {
    if n < 3 {
        return Err(Error::DimensionTooSmall { min: 3, found: n });
    }
    let m = n - 1;
    let target = if n % 2 == 1 { m - 1 } else { 0 };
    let mut pairs = Vec::new();
    let mut self_dual = None;
    for i in 0..m {
        let j = (target + m - i) % m;
        match i.cmp(&j) {
            std::cmp::Ordering::Less => pairs.push((i, j)),
            std::cmp::Ordering::Equal => self_dual = Some(i),
            std::cmp::Ordering::Greater => {}
        }
    }
    Ok(DualPairing { pairs, self_dual })
}

/// Radius of the circle carrying ansatz track `k`:
/// `2β / sqrt(4β² - α²(conj(Δω_k) - Δω_k)²)`.
pub fn radius_formula(n: usize, k: usize, xi: f64) -> Result<f64> {
    if n < 3 {
        return Err(Error::DimensionTooSmall { min: 3, found: n });
    }
    if k > n - 2 {
        return Err(Error::OutOfRange(format!("track index {k} exceeds {}", n - 2)));
    }
    if !(xi > 0.0 && xi < 1.0) {
        return Err(Error::OutOfRange(format!("overlap {xi} not in (0, 1)")));
    }
    let alpha = xi.powf(1.0 / (n - 1) as f64);
    let beta = (1.0 - alpha * alpha).sqrt();
    let c = ansatz_phase(n, k);
    // (c̄ - c)² = -4 Im(c)², so the radicand is 4(β² + α² Im(c)²)
    let diff = c.conj() - c;
    let radicand = Complex64::new(4.0 * beta * beta, 0.0) - diff * diff * (alpha * alpha);
    Ok(2.0 * beta / radicand.re.sqrt())
}

/// Worst violation of the mirror relation `x_i = x_j, y_i = -y_j, z_i = z_j`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReflectionDefect {
    pub y_sum: f64,
    pub x_diff: f64,
    pub z_diff: f64,
}

impl ReflectionDefect {
    pub fn max(&self) -> f64 {
        self.y_sum.max(self.x_diff).max(self.z_diff)
    }
}

/// `n - 1` continuous star tracks sampled on a common grid.
#[derive(Clone, Debug, PartialEq)]
pub struct StarTrackSet {
    params: Vec<f64>,
    tracks: Vec<Vec<BlochVector>>,
    pairing: Option<DualPairing>,
    collisions: Vec<usize>,
}

impl StarTrackSet {
    pub fn new(params: Vec<f64>, tracks: Vec<Vec<BlochVector>>) -> Result<Self> {
        if tracks.is_empty() {
            return Err(Error::InvalidCurve("no tracks".into()));
        }
        if let Some(t) = tracks.iter().find(|t| t.len() != params.len()) {
            return Err(Error::InvalidCurve(format!("track of {} points on {} samples", t.len(), params.len())));
        }
        Ok(Self { params, tracks, pairing: None, collisions: Vec::new() })
    }

    pub fn with_pairing(mut self, pairing: DualPairing) -> Self {
        self.pairing = Some(pairing);
        self
    }

    pub fn params(&self) -> &[f64] {
        &self.params
    }

    pub fn tracks(&self) -> &[Vec<BlochVector>] {
        &self.tracks
    }

    pub fn track(&self, k: usize) -> &[BlochVector] {
        &self.tracks[k]
    }

    pub fn pairing(&self) -> Option<&DualPairing> {
        self.pairing.as_ref()
    }

    /// Sample indices where two or more stars coincide within
    /// [`DEGENERACY_TOL`]; track identity through these points is a
    /// continuity choice, not an observable.
    pub fn collisions(&self) -> &[usize] {
        &self.collisions
    }

    pub fn n_tracks(&self) -> usize {
        self.tracks.len()
    }

    pub fn n_samples(&self) -> usize {
        self.params.len()
    }

    /// Largest jump between consecutive points of any track.
    pub fn max_step(&self) -> f64 {
        self.tracks.iter().flat_map(|t| t.windows(2).map(|w| (w[1] - w[0]).norm())).fold(0.0, f64::max)
    }

    /// Mirror test for tracks `i` and `j` through the xz-plane. With `i == j`
    /// it measures how far the track leaves that plane.
    pub fn reflection_defect(&self, i: usize, j: usize) -> ReflectionDefect {
        let mut d = ReflectionDefect { y_sum: 0.0, x_diff: 0.0, z_diff: 0.0 };
        for (p, q) in self.tracks[i].iter().zip(&self.tracks[j]) {
            d.y_sum = d.y_sum.max((p.y + q.y).abs());
            d.x_diff = d.x_diff.max((p.x - q.x).abs());
            d.z_diff = d.z_diff.max((p.z - q.z).abs());
        }
        d
    }

    /// Worst reflection defect over the attached pairing, self-dual included.
    pub fn pairing_defect(&self) -> Option<f64> {
        let p = self.pairing.as_ref()?;
        Some(p.as_arrays().iter().map(|&[i, j]| self.reflection_defect(i, j).max()).fold(0.0, f64::max))
    }

    /// Pairing found from the tracks alone: each track is matched to the
    /// track closest to its mirror image, and the match is accepted when the
    /// defect is within `tol`.
    pub fn mirror_pairs(&self, tol: f64) -> Option<DualPairing> {
        let n = self.n_tracks();
        let cost: Vec<Vec<f64>> =
            (0..n).map(|i| (0..n).map(|j| self.reflection_defect(i, j).max()).collect()).collect();
        let assignment = optimal_assignment(&cost);
        let mut pairing = DualPairing::default();
        for (i, &j) in assignment.iter().enumerate() {
            if cost[i][j] > tol || assignment[j] != i {
                return None;
            }
            match i.cmp(&j) {
                std::cmp::Ordering::Less => pairing.pairs.push((i, j)),
                std::cmp::Ordering::Equal => {
                    if pairing.self_dual.replace(i).is_some() {
                        return None;
                    }
                }
                std::cmp::Ordering::Greater => {}
            }
        }
        Some(pairing)
    }

    /// Pointwise distance to another track set on the same grid, minimized
    /// over relabelings of the tracks.
    pub fn distance_to(&self, other: &StarTrackSet) -> Result<f64> {
        Ok(self.matching(other)?.1)
    }

    /// Relabeling `k -> labels[k]` of this set's tracks onto `other`'s that
    /// minimizes the pointwise distance, and that distance.
    pub fn matching(&self, other: &StarTrackSet) -> Result<(Vec<usize>, f64)> {
        if self.n_tracks() != other.n_tracks() {
            return Err(Error::DimensionMismatch { expected: self.n_tracks(), found: other.n_tracks() });
        }
        if self.n_samples() != other.n_samples() {
            return Err(Error::InvalidCurve(format!("{} samples against {}", self.n_samples(), other.n_samples())));
        }
        let sup =
            |a: &[BlochVector], b: &[BlochVector]| a.iter().zip(b).map(|(p, q)| (p - q).norm()).fold(0.0, f64::max);
        let cost: Vec<Vec<f64>> =
            self.tracks.iter().map(|a| other.tracks.iter().map(|b| sup(a, b)).collect()).collect();
        let assignment = optimal_assignment(&cost);
        let worst = assignment.iter().enumerate().map(|(i, &j)| cost[i][j]).fold(0.0, f64::max);
        Ok((assignment, worst))
    }

    /// Circle fit of every track.
    pub fn fit_circles(&self) -> Result<Vec<CircleFit>> {
        self.tracks.iter().map(|t| fit_circle(t)).collect()
    }
}

/// Decomposes every sample and links stars into tracks. Each new
/// constellation is assigned to the tracks by minimum total distance to a
/// linear prediction from the previous two points.
pub fn decompose_curve(c: &StateCurve) -> Result<StarTrackSet> {
    let n_stars = c.dim() - 1;
    if n_stars == 0 {
        return Err(Error::DimensionTooSmall { min: 2, found: c.dim() });
    }
    let mut tracks: Vec<Vec<BlochVector>> = vec![Vec::with_capacity(c.len()); n_stars];
    let mut collisions = Vec::new();
    for (i, psi) in c.states().iter().enumerate() {
        let constellation = decompose(psi)?;
        if constellation.multiplicities(DEGENERACY_TOL).iter().any(|&m| m > 1) {
            collisions.push(i);
        }
        let points = constellation.bloch_vectors();
        if i == 0 {
            for (t, p) in tracks.iter_mut().zip(points) {
                t.push(p);
            }
            continue;
        }
        let predicted: Vec<BlochVector> = tracks
            .iter()
            .map(|t| match t.len() {
                1 => t[0],
                k => 2.0 * t[k - 1] - t[k - 2],
            })
            .collect();
        let cost: Vec<Vec<f64>> = predicted.iter().map(|q| points.iter().map(|p| (p - q).norm()).collect()).collect();
        for (t, j) in tracks.iter_mut().zip(optimal_assignment(&cost)) {
            t.push(points[j]);
        }
    }
    let mut set = StarTrackSet::new(c.params().to_vec(), tracks)?;
    set.collisions = collisions;
    Ok(set)
}

/// Closed-form three-level tracks:
/// `n = (√2 a sin s, ±√2 sqrt(b sin 2s - a² sin² s), cos s - b sin s) / (cos s + b sin s)`
/// with `a = √2αβ/sin θ`, `b = β²/sin θ`. Track 0 has `y ≥ 0`.
pub fn analytic_tracks_3d(spec: &GeodesicSpec) -> Result<StarTrackSet> {
    if spec.dim() != 3 {
        return Err(Error::DimensionMismatch { expected: 3, found: spec.dim() });
    }
    spec.require_canonical()?;
    let (alpha, beta) = spec.star_amplitudes();
    let sin_t = spec.theta.sin();
    let a = 2f64.sqrt() * alpha * beta / sin_t;
    let b = beta * beta / sin_t;
    let grid = spec.grid();
    let mut plus = Vec::with_capacity(grid.len());
    let mut minus = Vec::with_capacity(grid.len());
    for &s in &grid {
        let (sin, cos) = s.sin_cos();
        let den = cos + b * sin;
        // b sin 2s - a² sin² s, rewritten with α² = cos θ so that it does not
        // cancel near s = θ
        let disc = (2.0 * beta * beta * sin * (spec.theta - s).sin() / (sin_t * sin_t)).max(0.0);
        let x = 2f64.sqrt() * a * sin / den;
        let y = 2f64.sqrt() * disc.sqrt() / den;
        let z = (cos - b * sin) / den;
        plus.push(BlochVector::new(x, y, z));
        minus.push(BlochVector::new(x, -y, z));
    }
    Ok(StarTrackSet::new(grid, vec![plus, minus])?.with_pairing(DualPairing { pairs: vec![(0, 1)], self_dual: None }))
}

/// Tracks from the ansatz `|χ_k⟩ = |0⟩ + Δω_k A(s)|φ⟩` with
/// `A(s)^{n-1} = sin s / (cos s sqrt(1-ξ²) - ξ sin s)`. The coefficient
/// diverges at `s = θ`, so the last sample is the end star itself.
pub fn ansatz_tracks_nd(spec: &GeodesicSpec) -> Result<StarTrackSet> {
    spec.require_canonical()?;
    let n = spec.dim();
    let m = n - 1;
    let (alpha, beta) = spec.star_amplitudes();
    let perp = (1.0 - spec.xi * spec.xi).sqrt();
    let end = Star::new(Complex64::new(alpha, 0.0), Complex64::new(beta, 0.0))?.bloch();
    let grid = spec.grid();
    let last = grid.len() - 1;
    let mut tracks: Vec<Vec<BlochVector>> = vec![Vec::with_capacity(grid.len()); m];
    for (i, &s) in grid.iter().enumerate() {
        if i == last {
            for t in tracks.iter_mut() {
                t.push(end);
            }
            continue;
        }
        let (sin, cos) = s.sin_cos();
        let den = cos * perp - spec.xi * sin;
        if den <= 0.0 {
            return Err(Error::SingularParameterization(s));
        }
        let amp = (sin / den).powf(1.0 / m as f64);
        for (k, t) in tracks.iter_mut().enumerate() {
            let c = ansatz_phase(n, k) * amp;
            let star = Star::from_unnormalized(Complex64::new(1.0, 0.0) + c * alpha, c * beta)?;
            t.push(star.bloch());
        }
    }
    let pairing = if n == 2 { DualPairing { pairs: vec![], self_dual: Some(0) } } else { dual_pairs(n)? };
    Ok(StarTrackSet::new(grid, tracks)?.with_pairing(pairing))
}

/// A geodesic between arbitrary end states, computed in the degenerate
/// frame and mapped back.
#[derive(Clone, Debug)]
pub struct FramedGeodesic {
    pub frame: FrameMap,
    /// Geodesic between the canonical images.
    pub canonical: GeodesicSpec,
    /// Geodesic between the original end states.
    pub curve: StateCurve,
}

pub fn geodesic_between(psi1: &PureState, psi2: &PureState, n_samples: usize) -> Result<FramedGeodesic> {
    let frame = if psi1.dim() == 3 { canonical_frame_3d(psi1, psi2)? } else { canonical_frame_nd(psi1, psi2)? };
    let (c1, c2) = frame.canonical();
    let canonical = GeodesicSpec::new(c1, c2, n_samples)?;
    let curve = conjugate_curve(&frame, &geodesic_curve(&canonical)?, Direction::Inverse)?;
    Ok(FramedGeodesic { frame, canonical, curve })
}

/// Track JSON:
/// `{"dim", "theta", "samples", "tracks": [[[x,y,z],..],..], "pairs", "circles"}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TrackFile {
    pub dim: usize,
    pub theta: f64,
    pub samples: usize,
    pub tracks: Vec<Vec<[f64; 3]>>,
    #[serde(default)]
    pub pairs: Vec<[usize; 2]>,
    #[serde(default)]
    pub circles: Vec<CircleJson>,
}

impl TrackFile {
    pub fn new(set: &StarTrackSet, theta: f64, circles: &[CircleFit]) -> Self {
        TrackFile {
            dim: set.n_tracks() + 1,
            theta,
            samples: set.n_samples(),
            tracks: set.tracks().iter().map(|t| t.iter().map(|p| [p.x, p.y, p.z]).collect()).collect(),
            pairs: set.pairing().map(|p| p.as_arrays()).unwrap_or_default(),
            circles: circles.iter().map(CircleJson::from).collect(),
        }
    }

    pub fn bloch_tracks(&self) -> Vec<Vec<BlochVector>> {
        self.tracks.iter().map(|t| t.iter().map(|p| BlochVector::from(*p)).collect()).collect()
    }
}
