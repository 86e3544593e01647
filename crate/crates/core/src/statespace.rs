//! Pure states, qubit stars and sampled state curves.
//!
//! Everything here is immutable once constructed. Constructors accept inputs
//! whose norm is within [`RENORM_TOL`] of one and renormalize them; anything
//! further off is rejected rather than silently rescaled.

use nalgebra::Vector3;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Norm tolerance satisfied by every constructed state.
pub const NORM_TOL: f64 = 1e-12;
/// Inputs within this distance of unit norm are renormalized on construction.
pub const RENORM_TOL: f64 = 1e-9;
/// Overlaps below this magnitude are treated as orthogonal.
pub const ORTHO_TOL: f64 = 1e-12;

/// Real unit vector on the Bloch sphere.
pub type BlochVector = Vector3<f64>;

/// Two independent standard normals via Box-Muller.
fn gaussian_pair<R: rand::Rng + ?Sized>(rng: &mut R) -> Complex64 {
    let u1: f64 = 1.0 - rng.random::<f64>();
    let u2: f64 = rng.random::<f64>();
    Complex64::from_polar((-2.0 * u1.ln()).sqrt(), std::f64::consts::TAU * u2)
}

fn norm_of(amps: &[Complex64]) -> f64 {
    amps.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt()
}

/// Unit-norm vector of complex amplitudes in the computational basis.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "PureStateJson", into = "PureStateJson")]
pub struct PureState {
    amps: Vec<Complex64>,
}

impl PureState {
    /// Builds a state from amplitudes that are already (nearly) normalized.
    pub fn new(amps: Vec<Complex64>) -> Result<Self> {
        if amps.len() < 2 {
            return Err(Error::DimensionTooSmall { min: 2, found: amps.len() });
        }
        let norm = norm_of(&amps);
        if !norm.is_finite() || (norm - 1.0).abs() > RENORM_TOL {
            return Err(Error::NotNormalized { norm });
        }
        Ok(Self::rescaled(amps, norm))
    }

    /// Builds a state by normalizing an arbitrary nonzero vector.
    pub fn normalized(amps: Vec<Complex64>) -> Result<Self> {
        if amps.len() < 2 {
            return Err(Error::DimensionTooSmall { min: 2, found: amps.len() });
        }
        let norm = norm_of(&amps);
        if !norm.is_finite() || norm == 0.0 {
            return Err(Error::ZeroVector);
        }
        Ok(Self::rescaled(amps, norm))
    }

    /// Haar-random state (normalized complex Gaussian vector).
    pub fn random<R: rand::Rng + ?Sized>(rng: &mut R, dim: usize) -> Result<Self> {
        let amps = (0..dim).map(|_| gaussian_pair(rng)).collect();
        Self::normalized(amps)
    }

    pub fn from_real(amps: &[f64]) -> Result<Self> {
        Self::new(amps.iter().map(|&x| Complex64::new(x, 0.0)).collect())
    }

    /// Computational basis vector `|k⟩` of dimension `dim`.
    pub fn basis(dim: usize, k: usize) -> Result<Self> {
        if k >= dim {
            return Err(Error::OutOfRange(format!("basis index {k} >= dim {dim}")));
        }
        let mut amps = vec![Complex64::new(0.0, 0.0); dim];
        amps[k] = Complex64::new(1.0, 0.0);
        Self::new(amps)
    }

    fn rescaled(mut amps: Vec<Complex64>, norm: f64) -> Self {
        if norm != 1.0 {
            let inv = 1.0 / norm;
            amps.iter_mut().for_each(|c| *c *= inv);
        }
        Self { amps }
    }

    pub fn dim(&self) -> usize {
        self.amps.len()
    }

    pub fn amps(&self) -> &[Complex64] {
        &self.amps
    }

    pub fn into_amps(self) -> Vec<Complex64> {
        self.amps
    }

    /// `⟨self|other⟩ = Σ conj(self_r) other_r`.
    pub fn inner(&self, other: &PureState) -> Result<Complex64> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: other.dim() });
        }
        Ok(self.inner_unchecked(other))
    }

    pub(crate) fn inner_unchecked(&self, other: &PureState) -> Complex64 {
        self.amps.iter().zip(&other.amps).map(|(a, b)| a.conj() * b).sum()
    }

    /// `|⟨self|other⟩|²`.
    pub fn fidelity(&self, other: &PureState) -> Result<f64> {
        Ok(self.inner(other)?.norm_sqr())
    }

    /// Multiplies every amplitude by `e^{i phi}`.
    pub fn with_phase(&self, phi: f64) -> PureState {
        let w = Complex64::from_polar(1.0, phi);
        PureState { amps: self.amps.iter().map(|c| c * w).collect() }
    }

    /// Returns `other` rephased so that `⟨self|other⟩` is real and positive.
    pub fn gauge_align(&self, other: &PureState) -> Result<PureState> {
        let ov = self.inner(other)?;
        if ov.norm() <= ORTHO_TOL {
            return Err(Error::Orthogonal { overlap: ov.norm() });
        }
        let w = ov.conj() / ov.norm();
        Ok(PureState { amps: other.amps.iter().map(|c| c * w).collect() })
    }

    /// Largest componentwise distance after removing the relative global phase.
    pub fn distance_up_to_phase(&self, other: &PureState) -> Result<f64> {
        let aligned = self.gauge_align(other)?;
        Ok(self.amps.iter().zip(&aligned.amps).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max))
    }
}

/// `{"dim": n, "re": [...], "im": [...]}`
#[derive(Serialize, Deserialize)]
struct PureStateJson {
    dim: usize,
    re: Vec<f64>,
    im: Vec<f64>,
}

impl TryFrom<PureStateJson> for PureState {
    type Error = Error;

    fn try_from(j: PureStateJson) -> Result<Self> {
        if j.re.len() != j.dim {
            return Err(Error::DimensionMismatch { expected: j.dim, found: j.re.len() });
        }
        if j.im.len() != j.dim {
            return Err(Error::DimensionMismatch { expected: j.dim, found: j.im.len() });
        }
        PureState::new(j.re.iter().zip(&j.im).map(|(&r, &i)| Complex64::new(r, i)).collect())
    }
}

impl From<PureState> for PureStateJson {
    fn from(s: PureState) -> Self {
        PureStateJson {
            dim: s.dim(),
            re: s.amps.iter().map(|c| c.re).collect(),
            im: s.amps.iter().map(|c| c.im).collect(),
        }
    }
}

/// A qubit ray `alpha|0⟩ + beta|1⟩`, stored in a canonical phase chart.
///
/// The representative has `alpha` real and non-negative; when `alpha == 0`
/// the representative has `beta == 1`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "StarJson", into = "StarJson")]
pub struct Star {
    alpha: Complex64,
    beta: Complex64,
}

impl Star {
    pub fn new(alpha: Complex64, beta: Complex64) -> Result<Self> {
        let norm = (alpha.norm_sqr() + beta.norm_sqr()).sqrt();
        if !norm.is_finite() || (norm - 1.0).abs() > RENORM_TOL {
            return Err(Error::NotNormalized { norm });
        }
        Ok(Self::canonical(alpha / norm, beta / norm))
    }

    /// Normalizes an arbitrary nonzero qubit vector.
    pub fn from_unnormalized(alpha: Complex64, beta: Complex64) -> Result<Self> {
        let norm = (alpha.norm_sqr() + beta.norm_sqr()).sqrt();
        if !norm.is_finite() || norm == 0.0 {
            return Err(Error::ZeroVector);
        }
        Ok(Self::canonical(alpha / norm, beta / norm))
    }

    pub fn north() -> Self {
        Self { alpha: Complex64::new(1.0, 0.0), beta: Complex64::new(0.0, 0.0) }
    }

    pub fn south() -> Self {
        Self { alpha: Complex64::new(0.0, 0.0), beta: Complex64::new(1.0, 0.0) }
    }

    fn canonical(alpha: Complex64, beta: Complex64) -> Self {
        let a = alpha.norm();
        if a > 0.0 {
            let w = alpha.conj() / a;
            Self { alpha: Complex64::new(a, 0.0), beta: beta * w }
        } else {
            Self { alpha: Complex64::new(0.0, 0.0), beta: Complex64::new(1.0, 0.0) }
        }
    }

    pub fn alpha(&self) -> Complex64 {
        self.alpha
    }

    pub fn beta(&self) -> Complex64 {
        self.beta
    }

    /// Pauli expectation values `⟨ψ|σ|ψ⟩`.
    pub fn bloch(&self) -> BlochVector {
        let cross = self.alpha.conj() * self.beta;
        BlochVector::new(2.0 * cross.re, 2.0 * cross.im, self.alpha.norm_sqr() - self.beta.norm_sqr())
    }

    /// Inverse of [`Star::bloch`] for unit vectors.
    pub fn from_bloch(v: &BlochVector) -> Result<Self> {
        let norm = v.norm();
        if !norm.is_finite() || (norm - 1.0).abs() > RENORM_TOL {
            return Err(Error::NotNormalized { norm });
        }
        let v = v / norm;
        // half-angle forms stay accurate near both poles
        let cos_half = ((1.0 + v.z) / 2.0).max(0.0).sqrt();
        let sin_half = ((1.0 - v.z) / 2.0).max(0.0).sqrt();
        let phi = v.y.atan2(v.x);
        Ok(Self::canonical(Complex64::new(cos_half, 0.0), Complex64::from_polar(sin_half, phi)))
    }

    /// Complex conjugate ray: the mirror image through the xz-plane.
    pub fn conj(&self) -> Self {
        Self::canonical(self.alpha.conj(), self.beta.conj())
    }

    /// Euclidean distance between Bloch vectors.
    pub fn distance(&self, other: &Star) -> f64 {
        (self.bloch() - other.bloch()).norm()
    }
}

/// `{"alpha": [re, im], "beta": [re, im]}`
#[derive(Serialize, Deserialize)]
struct StarJson {
    alpha: [f64; 2],
    beta: [f64; 2],
}

impl TryFrom<StarJson> for Star {
    type Error = Error;

    fn try_from(j: StarJson) -> Result<Self> {
        Star::new(Complex64::new(j.alpha[0], j.alpha[1]), Complex64::new(j.beta[0], j.beta[1]))
    }
}

impl From<Star> for StarJson {
    fn from(s: Star) -> Self {
        StarJson { alpha: [s.alpha.re, s.alpha.im], beta: [s.beta.re, s.beta.im] }
    }
}

/// Unordered multiset of stars; the constellation of a `dim`-level state has
/// `dim - 1` members. Stars are kept sorted by `(z, atan2(y, x))` so that
/// serialization is deterministic.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "ConstellationJson", into = "ConstellationJson")]
pub struct Constellation {
    stars: Vec<Star>,
}

impl Constellation {
    pub fn new(mut stars: Vec<Star>) -> Result<Self> {
        if stars.is_empty() {
            return Err(Error::DimensionTooSmall { min: 2, found: 1 });
        }
        stars.sort_by(|a, b| {
            let (va, vb) = (a.bloch(), b.bloch());
            va.z.total_cmp(&vb.z).then(va.y.atan2(va.x).total_cmp(&vb.y.atan2(vb.x)))
        });
        Ok(Self { stars })
    }

    /// Dimension of the state this constellation describes.
    pub fn dim(&self) -> usize {
        self.stars.len() + 1
    }

    pub fn stars(&self) -> &[Star] {
        &self.stars
    }

    pub fn bloch_vectors(&self) -> Vec<BlochVector> {
        self.stars.iter().map(Star::bloch).collect()
    }

    /// Mirror image through the xz-plane.
    pub fn conj(&self) -> Constellation {
        Constellation::new(self.stars.iter().map(Star::conj).collect()).expect("non-empty")
    }

    /// Largest Bloch distance between stars paired by the minimum-total-distance
    /// matching of the two multisets.
    pub fn matching_distance(&self, other: &Constellation) -> Result<f64> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: other.dim() });
        }
        let a = self.bloch_vectors();
        let b = other.bloch_vectors();
        let cost: Vec<Vec<f64>> = a.iter().map(|p| b.iter().map(|q| (p - q).norm()).collect()).collect();
        let perm = crate::assign::optimal_assignment(&cost);
        Ok(perm.iter().enumerate().map(|(i, &j)| cost[i][j]).fold(0.0, f64::max))
    }

    /// Largest distance between any two stars; zero for a fully degenerate
    /// constellation.
    pub fn spread(&self) -> f64 {
        let v = self.bloch_vectors();
        let mut worst: f64 = 0.0;
        for i in 0..v.len() {
            for j in i + 1..v.len() {
                worst = worst.max((v[i] - v[j]).norm());
            }
        }
        worst
    }

    /// Groups stars closer than `tol` (single linkage) and returns the group
    /// sizes in descending order.
    pub fn multiplicities(&self, tol: f64) -> Vec<usize> {
        let v = self.bloch_vectors();
        let mut group: Vec<usize> = (0..v.len()).collect();
        fn find(g: &mut [usize], i: usize) -> usize {
            let mut r = i;
            while g[r] != r {
                r = g[r];
            }
            g[i] = r;
            r
        }
        for i in 0..v.len() {
            for j in i + 1..v.len() {
                if (v[i] - v[j]).norm() <= tol {
                    let (ri, rj) = (find(&mut group, i), find(&mut group, j));
                    group[ri] = rj;
                }
            }
        }
        let mut counts = vec![0usize; v.len()];
        for i in 0..v.len() {
            let r = find(&mut group, i);
            counts[r] += 1;
        }
        let mut sizes: Vec<usize> = counts.into_iter().filter(|&c| c > 0).collect();
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        sizes
    }
}

/// `{"dim": n, "stars": [Star, ...]}`
#[derive(Serialize, Deserialize)]
struct ConstellationJson {
    dim: usize,
    stars: Vec<Star>,
}

impl TryFrom<ConstellationJson> for Constellation {
    type Error = Error;

    fn try_from(j: ConstellationJson) -> Result<Self> {
        if j.stars.len() + 1 != j.dim {
            return Err(Error::DimensionMismatch { expected: j.dim - 1, found: j.stars.len() });
        }
        Constellation::new(j.stars)
    }
}

impl From<Constellation> for ConstellationJson {
    fn from(c: Constellation) -> Self {
        ConstellationJson { dim: c.dim(), stars: c.stars }
    }
}

/// Ordered samples `(s_i, |Ψ(s_i)⟩)` of a curve in state space.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "StateCurveJson", into = "StateCurveJson")]
pub struct StateCurve {
    params: Vec<f64>,
    states: Vec<PureState>,
}

impl StateCurve {
    pub fn new(params: Vec<f64>, states: Vec<PureState>) -> Result<Self> {
        if params.len() != states.len() {
            return Err(Error::InvalidCurve(format!("{} parameters for {} states", params.len(), states.len())));
        }
        if states.is_empty() {
            return Err(Error::TooFewSamples { min: 1, found: 0 });
        }
        if params.iter().any(|s| !s.is_finite()) {
            return Err(Error::InvalidCurve("non-finite parameter".into()));
        }
        if params.windows(2).any(|w| w[1] <= w[0]) {
            return Err(Error::InvalidCurve("parameters must be strictly increasing".into()));
        }
        let dim = states[0].dim();
        if let Some(bad) = states.iter().find(|s| s.dim() != dim) {
            return Err(Error::DimensionMismatch { expected: dim, found: bad.dim() });
        }
        for (i, w) in states.windows(2).enumerate() {
            let ov = w[0].inner_unchecked(&w[1]).norm();
            if ov <= ORTHO_TOL {
                return Err(Error::InvalidCurve(format!("consecutive samples {i} and {} are orthogonal", i + 1)));
            }
        }
        Ok(Self { params, states })
    }

    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.states[0].dim()
    }

    pub fn params(&self) -> &[f64] {
        &self.params
    }

    pub fn states(&self) -> &[PureState] {
        &self.states
    }

    /// Grid spacing if the parameters are uniformly spaced.
    pub fn uniform_step(&self) -> Option<f64> {
        if self.params.len() < 2 {
            return None;
        }
        let n = self.params.len();
        let h = (self.params[n - 1] - self.params[0]) / (n - 1) as f64;
        let tol = 1e-9 * h.abs().max(f64::MIN_POSITIVE);
        self.params.windows(2).all(|w| ((w[1] - w[0]) - h).abs() <= tol).then_some(h)
    }

    /// Discrete parallel transport: rephases every sample so that consecutive
    /// overlaps are real and positive. The first sample keeps its phase.
    pub fn parallel_transported(&self) -> StateCurve {
        let mut states = Vec::with_capacity(self.states.len());
        states.push(self.states[0].clone());
        for next in &self.states[1..] {
            let prev = states.last().expect("non-empty");
            // consecutive overlaps were checked on construction
            let aligned = prev.gauge_align(next).unwrap_or_else(|_| next.clone());
            states.push(aligned);
        }
        StateCurve { params: self.params.clone(), states }
    }

    /// Applies `f` to every state, keeping the parameter grid.
    pub fn try_map<F>(&self, f: F) -> Result<StateCurve>
    where
        F: FnMut(&PureState) -> Result<PureState>,
    {
        let states = self.states.iter().map(f).collect::<Result<Vec<_>>>()?;
        StateCurve::new(self.params.clone(), states)
    }
}

/// `{"params": [...], "states": [PureState, ...]}`
#[derive(Serialize, Deserialize)]
struct StateCurveJson {
    params: Vec<f64>,
    states: Vec<PureState>,
}

impl TryFrom<StateCurveJson> for StateCurve {
    type Error = Error;

    fn try_from(j: StateCurveJson) -> Result<Self> {
        StateCurve::new(j.params, j.states)
    }
}

impl From<StateCurve> for StateCurveJson {
    fn from(c: StateCurve) -> Self {
        StateCurveJson { params: c.params, states: c.states }
    }
}

/// Uniform grid of `n` points on `[a, b]`, with both endpoints exact.
pub fn uniform_grid(a: f64, b: f64, n: usize) -> Vec<f64> {
    match n {
        0 => vec![],
        1 => vec![a],
        _ => {
            let h = (b - a) / (n - 1) as f64;
            let mut g: Vec<f64> = (0..n).map(|i| a + h * i as f64).collect();
            g[n - 1] = b;
            g
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_1_SQRT_2, PI};

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn inner_of_basis_vectors() {
        let e0 = PureState::basis(3, 0).unwrap();
        let e1 = PureState::basis(3, 1).unwrap();
        assert_eq!(e0.inner(&e0).unwrap(), c(1.0, 0.0));
        assert_eq!(e0.inner(&e1).unwrap(), c(0.0, 0.0));
    }

    #[test]
    fn inner_of_degenerate_end_states_is_alpha_squared() {
        let theta = PI / 3.0;
        let alpha2 = theta.cos();
        let (a, b) = (alpha2.sqrt(), (1.0 - alpha2).sqrt());
        let psi1 = PureState::basis(3, 0).unwrap();
        let psi2 = PureState::from_real(&[a * a, 2f64.sqrt() * a * b, b * b]).unwrap();
        let ov = psi1.inner(&psi2).unwrap();
        assert!((ov.re - alpha2).abs() < 1e-15 && ov.im == 0.0);
    }

    #[test]
    fn inner_rejects_dimension_mismatch() {
        let a = PureState::basis(2, 0).unwrap();
        let b = PureState::basis(3, 0).unwrap();
        assert!(matches!(a.inner(&b), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn construction_renormalizes_or_rejects() {
        let s = PureState::from_real(&[1.0 + 5e-10, 0.0]).unwrap();
        assert!((norm_of(s.amps()) - 1.0).abs() < NORM_TOL);
        assert!(matches!(PureState::from_real(&[1.1, 0.0]), Err(Error::NotNormalized { .. })));
        assert!(matches!(PureState::from_real(&[1.0]), Err(Error::DimensionTooSmall { .. })));
        assert!(matches!(PureState::normalized(vec![c(0.0, 0.0); 3]), Err(Error::ZeroVector)));
    }

    #[test]
    fn gauge_align_removes_global_phase() {
        let a = PureState::new(vec![c(0.6, 0.0), c(0.0, 0.8)]).unwrap();
        let b = a.with_phase(PI / 3.0);
        let b2 = a.gauge_align(&b).unwrap();
        for (x, y) in a.amps().iter().zip(b2.amps()) {
            assert!((x - y).norm() < 1e-15);
        }
    }

    #[test]
    fn gauge_align_flips_negative_overlap() {
        let a = PureState::from_real(&[1.0, 0.0]).unwrap();
        let b = PureState::from_real(&[-0.5, 0.75f64.sqrt()]).unwrap();
        assert!((a.inner(&b).unwrap().re + 0.5).abs() < 1e-15);
        let b2 = a.gauge_align(&b).unwrap();
        let ov = a.inner(&b2).unwrap();
        assert!((ov.re - 0.5).abs() < 1e-15 && ov.im.abs() < 1e-15);
    }

    #[test]
    fn gauge_align_rejects_orthogonal() {
        let a = PureState::basis(2, 0).unwrap();
        let b = PureState::basis(2, 1).unwrap();
        assert!(matches!(a.gauge_align(&b), Err(Error::Orthogonal { .. })));
    }

    #[test]
    fn bloch_of_standard_stars() {
        let n = Star::new(c(1.0, 0.0), c(0.0, 0.0)).unwrap().bloch();
        assert_eq!(n, BlochVector::new(0.0, 0.0, 1.0));
        let p = Star::new(c(FRAC_1_SQRT_2, 0.0), c(FRAC_1_SQRT_2, 0.0)).unwrap().bloch();
        assert!((p - BlochVector::new(1.0, 0.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn bloch_matches_spherical_angles() {
        // (cos t/2, e^{iφ} sin t/2) -> (sin t cos φ, sin t sin φ, cos t)
        for &(t, phi) in &[(0.3, 1.1), (2.0, -2.5), (PI - 1e-3, 0.7), (1.2, PI)] {
            let s = Star::new(c((t / 2.0f64).cos(), 0.0), Complex64::from_polar((t / 2.0f64).sin(), phi)).unwrap();
            let expect = BlochVector::new(t.sin() * phi.cos(), t.sin() * phi.sin(), t.cos());
            assert!((s.bloch() - expect).norm() < 1e-14);
        }
    }

    #[test]
    fn canonical_chart() {
        let s = Star::new(c(0.0, 0.6), c(0.8, 0.0)).unwrap();
        assert!(s.alpha().im == 0.0 && s.alpha().re > 0.0);
        assert!((s.beta() - c(0.0, -0.8)).norm() < 1e-15);
        let south = Star::new(c(0.0, 0.0), c(0.0, -1.0)).unwrap();
        assert_eq!(south, Star::south());
    }

    #[test]
    fn from_bloch_rejects_non_unit() {
        assert!(Star::from_bloch(&BlochVector::new(0.0, 0.0, 2.0)).is_err());
    }

    #[test]
    fn curve_validation() {
        let e0 = PureState::basis(2, 0).unwrap();
        let e1 = PureState::basis(2, 1).unwrap();
        assert!(StateCurve::new(vec![0.0, 1.0], vec![e0.clone(), e1]).is_err());
        assert!(StateCurve::new(vec![1.0, 0.0], vec![e0.clone(), e0.clone()]).is_err());
        assert!(StateCurve::new(vec![0.0], vec![]).is_err());
        let ok = StateCurve::new(vec![0.0, 1.0, 2.0], vec![e0.clone(), e0.clone(), e0]).unwrap();
        assert_eq!(ok.uniform_step(), Some(1.0));
    }

    #[test]
    fn json_shapes() {
        let s = PureState::new(vec![c(0.6, 0.0), c(0.0, 0.8)]).unwrap();
        let j = serde_json::to_value(&s).unwrap();
        assert_eq!(j, serde_json::json!({"dim": 2, "re": [0.6, 0.0], "im": [0.0, 0.8]}));
        let star = Star::north();
        let j = serde_json::to_value(star).unwrap();
        assert_eq!(j, serde_json::json!({"alpha": [1.0, 0.0], "beta": [0.0, 0.0]}));
        let bad: std::result::Result<PureState, _> =
            serde_json::from_str(r#"{"dim": 2, "re": [1.0, 1.0], "im": [0.0, 0.0]}"#);
        assert!(bad.is_err());
    }
}
