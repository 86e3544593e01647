//! Majorana polynomial and the state ↔ constellation correspondence.
//!
//! A state `Σ c_r |r⟩` of an `n`-level system maps to the polynomial
//! `Σ f_r x^(n-1-r)` with `f_r = (-1)^r c_r / sqrt(r! (n-1-r)!)`, which factors
//! as `Π_k (alpha_k x - beta_k)`. Each factor is one star.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::polyroots::projective_roots;
use crate::statespace::{Constellation, PureState, Star};

/// Root-space tolerance used when reporting star multiplicities.
pub const DEGENERACY_TOL: f64 = 1e-7;

/// Coefficients `f_0..f_{n-1}`; `f_r` multiplies `x^(n-1-r)`.
#[derive(Clone, Debug, PartialEq)]
pub struct MajoranaPolynomial {
    coeffs: Vec<Complex64>,
}

impl MajoranaPolynomial {
    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// Nominal degree `n - 1`, counting roots at infinity.
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn eval(&self, x: Complex64) -> Complex64 {
        self.coeffs.iter().fold(Complex64::new(0.0, 0.0), |acc, &c| acc * x + c)
    }
}

/// `sqrt(r! (m - r)!)` for `r = 0..=m`.
fn weights(m: usize) -> Vec<f64> {
    let mut fact = vec![1.0f64; m + 1];
    for k in 1..=m {
        fact[k] = fact[k - 1] * k as f64;
    }
    (0..=m).map(|r| (fact[r] * fact[m - r]).sqrt()).collect()
}

fn sign(r: usize) -> f64 {
    if r.is_multiple_of(2) {
        1.0
    } else {
        -1.0
    }
}

pub fn build_polynomial(psi: &PureState) -> MajoranaPolynomial {
    let m = psi.dim() - 1;
    let w = weights(m);
    let coeffs = psi.amps().iter().enumerate().map(|(r, c)| c * (sign(r) / w[r])).collect();
    MajoranaPolynomial { coeffs }
}

/// The `n - 1` stars of `psi`. Roots at infinity become south-pole stars.
pub fn decompose(psi: &PureState) -> Result<Constellation> {
    let poly = build_polynomial(psi);
    let roots = projective_roots(poly.coeffs())?;
    debug_assert_eq!(roots.len(), poly.degree());
    Constellation::new(roots.iter().map(|r| r.star()).collect())
}

/// Expands `Π_k (alpha_k x - beta_k)`, inverts the coefficient map and
/// normalizes. The symmetrization constant is not tracked; only the ray is.
pub fn reconstruct(c: &Constellation) -> Result<PureState> {
    let stars = c.stars();
    let mut poly = vec![Complex64::new(1.0, 0.0)];
    for s in stars {
        let mut next = vec![Complex64::new(0.0, 0.0); poly.len() + 1];
        for (i, &a) in poly.iter().enumerate() {
            next[i] += a * s.alpha();
            next[i + 1] -= a * s.beta();
        }
        poly = next;
    }
    let m = stars.len();
    let w = weights(m);
    let amps = poly.iter().enumerate().map(|(r, f)| f * (sign(r) * w[r])).collect();
    PureState::normalized(amps)
}

/// The state whose `dim - 1` stars all sit at `star`: the symmetric tensor
/// power, with components `sqrt(C(m, r)) alpha^(m-r) beta^r`.
pub fn degenerate_state(star: &Star, dim: usize) -> Result<PureState> {
    if dim < 2 {
        return Err(Error::DimensionTooSmall { min: 2, found: dim });
    }
    let m = dim - 1;
    let mut binom = 1.0f64;
    let mut amps = Vec::with_capacity(dim);
    for r in 0..=m {
        if r > 0 {
            binom = binom * (m - r + 1) as f64 / r as f64;
        }
        amps.push(star.alpha().powu((m - r) as u32) * star.beta().powu(r as u32) * binom.sqrt());
    }
    PureState::normalized(amps)
}
