//! Null phase curves built from dual pairs of star tracks.
//!
//! A star `(cos η/2, e^{iΓ} sin η/2)` and its mirror image
//! `(cos η/2, e^{-iΓ} sin η/2)` span a real symmetric polynomial, so the
//! curve they trace in state space has only real, positive third-order
//! Bargmann invariants.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::majorana::reconstruct;
use crate::statespace::{uniform_grid, Constellation, PureState, Star, StateCurve};

/// Tolerance on the boundary values of profiles and of `g`.
pub const BOUNDARY_TOL: f64 = 1e-9;
/// Negative `4AC - B²` up to this size is rounding and is clamped.
pub const DISC_TOL: f64 = 1e-12;

/// Sampled polar angle `η(s)` and azimuth `Γ(s)` of one star of a dual pair.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "ProfileJson", into = "ProfileJson")]
pub struct CurveProfile {
    s: Vec<f64>,
    eta: Vec<f64>,
    gamma: Vec<f64>,
}

/// `{"s": [...], "eta": [...], "gamma": [...]}`
#[derive(Serialize, Deserialize)]
struct ProfileJson {
    s: Vec<f64>,
    eta: Vec<f64>,
    gamma: Vec<f64>,
}

impl TryFrom<ProfileJson> for CurveProfile {
    type Error = Error;

    fn try_from(j: ProfileJson) -> Result<Self> {
        CurveProfile::new(j.s, j.eta, j.gamma)
    }
}

impl From<CurveProfile> for ProfileJson {
    fn from(p: CurveProfile) -> Self {
        ProfileJson { s: p.s, eta: p.eta, gamma: p.gamma }
    }
}

impl CurveProfile {
    pub fn new(s: Vec<f64>, eta: Vec<f64>, gamma: Vec<f64>) -> Result<Self> {
        if s.len() != eta.len() || s.len() != gamma.len() {
            return Err(Error::InvalidProfile(format!(
                "lengths differ: s {}, eta {}, gamma {}",
                s.len(),
                eta.len(),
                gamma.len()
            )));
        }
        if s.len() < 2 {
            return Err(Error::TooFewSamples { min: 2, found: s.len() });
        }
        if s.iter().chain(&eta).chain(&gamma).any(|v| !v.is_finite()) {
            return Err(Error::InvalidProfile("non-finite sample".into()));
        }
        if s.windows(2).any(|w| w[1] <= w[0]) {
            return Err(Error::InvalidProfile("s must be strictly increasing".into()));
        }
        Ok(Self { s, eta, gamma })
    }

    /// `Γ ≡ 0`.
    pub fn self_dual(s: Vec<f64>, eta: Vec<f64>) -> Result<Self> {
        let gamma = vec![0.0; s.len()];
        Self::new(s, eta, gamma)
    }

    pub fn s(&self) -> &[f64] {
        &self.s
    }

    pub fn eta(&self) -> &[f64] {
        &self.eta
    }

    pub fn gamma(&self) -> &[f64] {
        &self.gamma
    }

    pub fn len(&self) -> usize {
        self.s.len()
    }

    pub fn is_empty(&self) -> bool {
        self.s.is_empty()
    }

    /// Requires `η = 0` and `Γ = 0` at the start, `η = eta_end` and `Γ = 0`
    /// at the end.
    pub fn check_boundary(&self, eta_end: f64) -> Result<()> {
        let n = self.len() - 1;
        let checks = [
            ("eta(s1)", self.eta[0], 0.0),
            ("eta(s2)", self.eta[n], eta_end),
            ("gamma(s1)", self.gamma[0], 0.0),
            ("gamma(s2)", self.gamma[n], 0.0),
        ];
        for (name, got, want) in checks {
            if (got - want).abs() > BOUNDARY_TOL {
                return Err(Error::BoundaryViolation(format!("{name} = {got}, expected {want}")));
            }
        }
        Ok(())
    }

    fn star(&self, i: usize) -> Result<Star> {
        let (sin, cos) = (self.eta[i] / 2.0).sin_cos();
        Star::new(Complex64::new(cos, 0.0), Complex64::from_polar(sin, self.gamma[i]))
    }
}

/// `η` at the end of a dual-pair profile in dimension `dim`: twice the polar
/// half-angle of the end star, `2 acos(ξ^{1/(dim-1)})`.
pub fn end_eta(dim: usize, theta: f64) -> Result<f64> {
    check_theta(theta)?;
    if dim < 2 {
        return Err(Error::DimensionTooSmall { min: 2, found: dim });
    }
    Ok(2.0 * theta.cos().powf(1.0 / (dim - 1) as f64).acos())
}

fn check_theta(theta: f64) -> Result<()> {
    if theta > 0.0 && theta < PI / 2.0 {
        Ok(())
    } else {
        Err(Error::OutOfRange(format!("theta {theta} not in (0, pi/2)")))
    }
}

/// Three-level curve whose two stars are the profile star and its mirror
/// image. Connects `|0⟩` to `(α², √2αβ, β²)` with `α² = cos θ`.
pub fn dual_pair_npc(profile: &CurveProfile, theta: f64) -> Result<StateCurve> {
    multi_pair_npc(3, theta, std::slice::from_ref(profile), None)
}

/// Three-level curve `ψ(s) ⊗ ψ(s)` with real `ψ = (cos η/2, sin η/2)`.
pub fn selfdual_npc(s: &[f64], eta: &[f64], theta: f64) -> Result<StateCurve> {
    dual_pair_npc(&CurveProfile::self_dual(s.to_vec(), eta.to_vec())?, theta)
}

/// `η(s) = 2 acos(α) (s/θ)³`, a self-dual profile meeting the boundary
/// conditions.
pub fn cubic_eta(dim: usize, theta: f64, s: &[f64]) -> Result<Vec<f64>> {
    let end = end_eta(dim, theta)?;
    Ok(s.iter().map(|&x| end * (x / theta).powi(3)).collect())
}

/// Curve in dimension `dim` from `⌊(dim-1)/2⌋` dual pairs plus, for even
/// `dim`, one self-dual star following `selfdual_eta`. All profiles share
/// one grid and end at the `(dim-1)`-fold degenerate star.
pub fn multi_pair_npc(
    dim: usize,
    theta: f64,
    pairs: &[CurveProfile],
    selfdual_eta: Option<&[f64]>,
) -> Result<StateCurve> {
    let m = dim.checked_sub(1).filter(|&m| m >= 1).ok_or(Error::DimensionTooSmall { min: 2, found: dim })?;
    if pairs.len() != m / 2 {
        return Err(Error::InvalidProfile(format!("dimension {dim} needs {} dual pairs, got {}", m / 2, pairs.len())));
    }
    if (m % 2 == 1) != selfdual_eta.is_some() {
        return Err(Error::InvalidProfile(format!(
            "dimension {dim} {} a self-dual track",
            if m % 2 == 1 { "needs" } else { "has no" }
        )));
    }
    let eta_end = end_eta(dim, theta)?;
    let grid =
        pairs.first().map(|p| p.s().to_vec()).or_else(|| selfdual_eta.map(|e| uniform_grid(0.0, theta, e.len())));
    let grid = grid.expect("dimension >= 2 has a pair or a self-dual track");
    let mut profiles: Vec<CurveProfile> = pairs.to_vec();
    let self_profile = match selfdual_eta {
        Some(eta) => Some(CurveProfile::self_dual(grid.clone(), eta.to_vec())?),
        None => None,
    };
    for p in profiles.iter().chain(&self_profile) {
        if p.s() != grid.as_slice() {
            return Err(Error::InvalidProfile("profiles must share one grid".into()));
        }
        p.check_boundary(eta_end)?;
    }
    if let Some(p) = self_profile {
        profiles.push(p);
    }

    let mut states = Vec::with_capacity(grid.len());
    for i in 0..grid.len() {
        let mut stars = Vec::with_capacity(m);
        for (k, p) in profiles.iter().enumerate() {
            let star = p.star(i)?;
            stars.push(star);
            if k < pairs.len() {
                stars.push(star.conj());
            }
        }
        let psi = reconstruct(&Constellation::new(stars)?)?;
        states.push(real_gauge(psi));
    }
    StateCurve::new(grid, states)
}

/// Removes the global phase of a state whose amplitudes are real up to one
/// common phase, making the largest amplitude positive.
fn real_gauge(psi: PureState) -> PureState {
    let big = psi.amps().iter().copied().fold(Complex64::new(0.0, 0.0), |a, c| if c.norm() > a.norm() { c } else { a });
    psi.with_phase(-big.arg())
}

/// Uniform grid of `n` points on `[0, θ]`.
pub fn example_grid(theta: f64, n: usize) -> Vec<f64> {
    uniform_grid(0.0, theta, n)
}

/// `g(s) = cos[s(s - θ)]`.
pub fn default_g(theta: f64, s: &[f64]) -> Vec<f64> {
    s.iter().map(|&x| (x * (x - theta)).cos()).collect()
}

fn check_g(g: &[f64]) -> Result<()> {
    if g.len() < 2 {
        return Err(Error::TooFewSamples { min: 2, found: g.len() });
    }
    if let Some(v) = g.iter().find(|v| !v.is_finite() || **v < -BOUNDARY_TOL || **v > 1.0 + BOUNDARY_TOL) {
        return Err(Error::InvalidProfile(format!("g = {v} outside [0, 1]")));
    }
    let last = g[g.len() - 1];
    if (g[0] - 1.0).abs() > BOUNDARY_TOL || (last - 1.0).abs() > BOUNDARY_TOL {
        return Err(Error::BoundaryViolation(format!("g(0) = {}, g(theta) = {last}, both must be 1", g[0])));
    }
    Ok(())
}

/// `(g cos s, g sin s, e^{iχ} sqrt(1 - g²))` on a uniform grid over `[0, θ]`
/// with one sample per entry of `g`, joining `|0⟩` and `(cos θ, sin θ, 0)`.
pub fn example_npc(theta: f64, g: &[f64], chi: f64) -> Result<StateCurve> {
    check_theta(theta)?;
    check_g(g)?;
    let grid = example_grid(theta, g.len());
    let phase = Complex64::from_polar(1.0, chi);
    let states = grid
        .iter()
        .zip(g)
        .map(|(&s, &gv)| {
            let gv = gv.clamp(0.0, 1.0);
            let h = (1.0 - gv * gv).sqrt();
            PureState::normalized(vec![Complex64::new(gv * s.cos(), 0.0), Complex64::new(gv * s.sin(), 0.0), phase * h])
        })
        .collect::<Result<Vec<_>>>()?;
    StateCurve::new(grid, states)
}

/// Dual-pair profile reproducing the `χ = 0` example curve in the degenerate
/// frame. With `h = sqrt(1 - g²)`, `a = √2αβ/sin θ`, `b = β²/sin θ`:
/// `A = g cos s`, `B = √2(a g sin s - b h)`, `C = a h + b g sin s`,
/// `η = acos((A - C)/(A + C))`, `Γ = atan2(sqrt(4AC - B²), B)` unwrapped.
pub fn profile_from_example(theta: f64, g: &[f64]) -> Result<CurveProfile> {
    check_theta(theta)?;
    check_g(g)?;
    let grid = example_grid(theta, g.len());
    let alpha = theta.cos().sqrt();
    let beta = (1.0 - alpha * alpha).sqrt();
    let a = 2f64.sqrt() * alpha * beta / theta.sin();
    let b = beta * beta / theta.sin();

    let mut eta = Vec::with_capacity(g.len());
    let mut gamma: Vec<f64> = Vec::with_capacity(g.len());
    for (&s, &gv) in grid.iter().zip(g) {
        let gv = gv.clamp(0.0, 1.0);
        let h = (1.0 - gv * gv).sqrt();
        let (sin, cos) = s.sin_cos();
        let big_a = gv * cos;
        let big_b = 2f64.sqrt() * (a * gv * sin - b * h);
        let big_c = a * h + b * gv * sin;
        let sum = big_a + big_c;
        if sum.abs() <= 1e-15 {
            return Err(Error::InvalidProfile(format!("A + C vanishes at s = {s}")));
        }
        let disc = 4.0 * big_a * big_c - big_b * big_b;
        if disc < -DISC_TOL {
            return Err(Error::InvalidProfile(format!("4AC - B^2 = {disc} < 0 at s = {s}")));
        }
        eta.push(((big_a - big_c) / sum).clamp(-1.0, 1.0).acos());
        let mut g_angle = disc.max(0.0).sqrt().atan2(big_b);
        if let Some(&prev) = gamma.last() {
            g_angle += 2.0 * PI * ((prev - g_angle) / (2.0 * PI)).round();
        }
        gamma.push(g_angle);
    }
    CurveProfile::new(grid, eta, gamma)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bargmann::{verify_npc, DEFAULT_SEED};
    use crate::geodesic::decompose_curve;
    use crate::transforms::{canonical_frame_3d, canonical_pair, conjugate_curve, Direction};
    use std::f64::consts::FRAC_PI_3;

    fn same_rays(a: &StateCurve, b: &StateCurve) -> f64 {
        a.states().iter().zip(b.states()).map(|(x, y)| x.distance_up_to_phase(y).unwrap()).fold(0.0, f64::max)
    }

    fn frame(theta: f64) -> crate::transforms::FrameMap {
        let e0 = PureState::basis(3, 0).unwrap();
        let end = PureState::from_real(&[theta.cos(), theta.sin(), 0.0]).unwrap();
        canonical_frame_3d(&e0, &end).unwrap()
    }

    #[test]
    fn boundary_conditions_enforced() {
        let s = uniform_grid(0.0, 1.0, 5);
        let end = end_eta(3, 1.0).unwrap();
        let good = CurveProfile::new(s.clone(), cubic_eta(3, 1.0, &s).unwrap(), vec![0.0, 0.3, 0.2, 0.1, 0.0]).unwrap();
        assert!(good.check_boundary(end).is_ok());
        let bad = CurveProfile::new(s.clone(), cubic_eta(3, 1.0, &s).unwrap(), vec![0.0, 0.3, 0.2, 0.1, 0.1]).unwrap();
        assert!(matches!(dual_pair_npc(&bad, 1.0), Err(Error::BoundaryViolation(_))));
        assert!(CurveProfile::new(s.clone(), vec![0.0; 4], vec![0.0; 5]).is_err());
    }

    #[test]
    fn endpoints_are_the_canonical_pair() {
        let theta = 0.9;
        let s = uniform_grid(0.0, theta, 41);
        let c = selfdual_npc(&s, &cubic_eta(3, theta, &s).unwrap(), theta).unwrap();
        let (e0, end) = canonical_pair(3, theta.cos()).unwrap();
        assert!(c.states()[0].distance_up_to_phase(&e0).unwrap() < 1e-12);
        assert!(c.states()[40].distance_up_to_phase(&end).unwrap() < 1e-12);
    }

    #[test]
    fn zero_gamma_is_self_dual() {
        let theta = FRAC_PI_3;
        let s = uniform_grid(0.0, theta, 21);
        let eta = cubic_eta(3, theta, &s).unwrap();
        let a = dual_pair_npc(&CurveProfile::new(s.clone(), eta.clone(), vec![0.0; 21]).unwrap(), theta).unwrap();
        let b = selfdual_npc(&s, &eta, theta).unwrap();
        assert!(same_rays(&a, &b) < 1e-15);
    }

    #[test]
    fn linear_eta_gives_coincident_tracks() {
        let theta = 0.8;
        let s = uniform_grid(0.0, theta, 101);
        let end = end_eta(3, theta).unwrap();
        let eta: Vec<f64> = s.iter().map(|x| end * x / theta).collect();
        let tracks = decompose_curve(&selfdual_npc(&s, &eta, theta).unwrap()).unwrap();
        for (p, q) in tracks.track(0).iter().zip(tracks.track(1)) {
            assert!((p - q).norm() < 1e-6);
            assert!(p.y.abs() < 1e-6);
        }
    }

    #[test]
    fn example_round_trip() {
        for theta in [FRAC_PI_3, PI / 5.0, PI / 6.0] {
            let s = example_grid(theta, 201);
            let g = default_g(theta, &s);
            let profile = profile_from_example(theta, &g).unwrap();
            assert!(profile.eta()[0].abs() < 1e-12 && profile.gamma()[0].abs() < 1e-12);
            let built = dual_pair_npc(&profile, theta).unwrap();
            let example = example_npc(theta, &g, 0.0).unwrap();
            let mapped = conjugate_curve(&frame(theta), &example, Direction::Forward).unwrap();
            assert!(same_rays(&built, &mapped) < 1e-9, "theta {theta}");
        }
    }

    #[test]
    fn constant_g_is_the_rotation_path() {
        let s = example_grid(1.0, 11);
        let c = example_npc(1.0, &[1.0; 11], 0.0).unwrap();
        for (x, psi) in s.iter().zip(c.states()) {
            assert!((psi.amps()[0].re - x.cos()).abs() < 1e-15);
            assert!((psi.amps()[1].re - x.sin()).abs() < 1e-15);
            assert_eq!(psi.amps()[2], Complex64::new(0.0, 0.0));
        }
    }

    #[test]
    fn invalid_g_rejected() {
        assert!(matches!(example_npc(1.0, &[1.0, 1.2, 1.0], 0.0), Err(Error::InvalidProfile(_))));
        assert!(matches!(example_npc(1.0, &[1.0, 0.5, 0.9], 0.0), Err(Error::BoundaryViolation(_))));
        assert!(example_npc(PI / 2.0, &[1.0, 1.0], 0.0).is_err());
    }

    #[test]
    fn constructions_pass_the_npc_test() {
        let theta = FRAC_PI_3;
        let s = example_grid(theta, 301);
        let g = default_g(theta, &s);
        for chi in [0.0, FRAC_PI_3] {
            assert!(verify_npc(&example_npc(theta, &g, chi).unwrap(), 3000, DEFAULT_SEED).unwrap().pass);
        }
        let eta = cubic_eta(3, theta, &s).unwrap();
        assert!(verify_npc(&selfdual_npc(&s, &eta, theta).unwrap(), 3000, DEFAULT_SEED).unwrap().pass);
        let gamma: Vec<f64> = s.iter().map(|x| 0.7 * (PI * x / theta).sin()).collect();
        let profile = CurveProfile::new(s.clone(), eta, gamma).unwrap();
        let c = dual_pair_npc(&profile, theta).unwrap();
        assert!(verify_npc(&c, 3000, DEFAULT_SEED).unwrap().pass);
        let tracks = decompose_curve(&c).unwrap();
        assert!(tracks.reflection_defect(0, 1).max() < 1e-8);
    }

    #[test]
    fn phase_twisted_example_is_not_a_mirror_pair() {
        let theta = FRAC_PI_3;
        let s = example_grid(theta, 301);
        let c = example_npc(theta, &default_g(theta, &s), FRAC_PI_3).unwrap();
        let mapped = conjugate_curve(&frame(theta), &c, Direction::Forward).unwrap();
        let tracks = decompose_curve(&mapped).unwrap();
        assert!(tracks.reflection_defect(0, 1).y_sum >= 1e-2);
    }

    #[test]
    fn higher_dimensions() {
        let theta = 0.9;
        let s = uniform_grid(0.0, theta, 201);
        for dim in [4, 5, 6, 7] {
            let end = end_eta(dim, theta).unwrap();
            let pairs: Vec<CurveProfile> = (0..(dim - 1) / 2)
                .map(|k| {
                    // distinct slopes at both ends keep the stars apart near the poles
                    let d = 0.5 - 0.45 * k as f64;
                    let eta = s.iter().map(|x| end * (x / theta) * (1.0 + d * (1.0 - x / theta))).collect();
                    let gamma = s.iter().map(|x| (0.4 + 0.3 * k as f64) * (PI * x / theta).sin()).collect();
                    CurveProfile::new(s.clone(), eta, gamma).unwrap()
                })
                .collect();
            let self_eta = (dim % 2 == 0).then(|| cubic_eta(dim, theta, &s).unwrap());
            let c = multi_pair_npc(dim, theta, &pairs, self_eta.as_deref()).unwrap();
            let (e0, target) = canonical_pair(dim, theta.cos()).unwrap();
            assert!(c.states()[0].distance_up_to_phase(&e0).unwrap() < 1e-12);
            assert!(c.states()[200].distance_up_to_phase(&target).unwrap() < 1e-9);
            assert!(verify_npc(&c, 2000, DEFAULT_SEED).unwrap().pass, "dim {dim}");
            let tracks = decompose_curve(&c).unwrap();
            // up to six stars leave the pole together, so the roots there are
            // only good to ~1e-4; pairing detection needs a looser bound
            assert!(tracks.mirror_pairs(1e-2).is_some(), "dim {dim}");
        }
        assert!(multi_pair_npc(5, theta, &[], None).is_err());
    }

    #[test]
    fn profile_json() {
        let p = CurveProfile::new(vec![0.0, 1.0], vec![0.0, 0.5], vec![0.0, 0.0]).unwrap();
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(json, r#"{"s":[0.0,1.0],"eta":[0.0,0.5],"gamma":[0.0,0.0]}"#);
        assert_eq!(serde_json::from_str::<CurveProfile>(&json).unwrap(), p);
        assert!(serde_json::from_str::<CurveProfile>(r#"{"s":[1.0,0.0],"eta":[0,0],"gamma":[0,0]}"#).is_err());
    }
}
