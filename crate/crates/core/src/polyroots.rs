//! Projective roots of complex polynomials.
//!
//! Roots are found as eigenvalues of a companion matrix and then polished by
//! Newton iteration on the original polynomial. Each root lives in one of two
//! charts: the direct chart (`x`, used when `|x| <= 1`) or the inverted chart
//! (`y = 1/x`, used for `|x| > 1`, polished on the reversed polynomial), so
//! roots near or at infinity are as accurate as roots near zero.
//!
//! Clusters of roots that are numerically consistent with a single multiple
//! root are collapsed onto the root of the appropriate derivative. Without
//! this, a k-fold root is only resolved to about `eps^(1/k)`.

use nalgebra::{DMatrix, Schur};
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::statespace::{BlochVector, Star};

/// Candidate radius (Bloch distance) when looking for multiple-root clusters.
const CLUSTER_RADIUS: f64 = 5e-2;
/// Relative backward error a collapsed cluster must meet on every derivative.
const MERGE_TOL: f64 = 1e-10;
const NEWTON_MAX_ITER: usize = 80;

#[derive(Clone, Copy, Debug, PartialEq)]
pub(crate) enum Chart {
    /// value is `x`
    Direct,
    /// value is `1/x`
    Inverted,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub(crate) struct ProjRoot {
    pub z: Complex64,
    pub chart: Chart,
}

impl ProjRoot {
    fn from_value(x: Complex64, chart: Chart) -> Self {
        if x.norm() <= 1.0 {
            ProjRoot { z: x, chart }
        } else {
            let other = match chart {
                Chart::Direct => Chart::Inverted,
                Chart::Inverted => Chart::Direct,
            };
            ProjRoot { z: x.inv(), chart: other }
        }
    }

    fn in_chart(&self, chart: Chart) -> Complex64 {
        if self.chart == chart {
            self.z
        } else {
            self.z.inv()
        }
    }

    /// Star whose Majorana factor `(alpha x - beta)` vanishes at this root.
    pub fn star(&self) -> Star {
        let one = Complex64::new(1.0, 0.0);
        let s = match self.chart {
            Chart::Direct => Star::from_unnormalized(one, self.z),
            Chart::Inverted => Star::from_unnormalized(self.z, one),
        };
        s.expect("chart value is finite and the other entry is one")
    }

    fn bloch(&self) -> BlochVector {
        self.star().bloch()
    }
}

/// Coefficients are ordered from the highest power down.
fn horner(p: &[Complex64], z: Complex64) -> Complex64 {
    p.iter().fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z + c)
}

fn horner_with_derivative(p: &[Complex64], z: Complex64) -> (Complex64, Complex64) {
    let zero = Complex64::new(0.0, 0.0);
    let mut val = zero;
    let mut der = zero;
    for &c in p {
        der = der * z + val;
        val = val * z + c;
    }
    (val, der)
}

/// `Σ |p_i| max(1, |z|)^(deg - i)`: the scale against which `|p(z)|` is judged.
fn magnitude_bound(p: &[Complex64], z: Complex64) -> f64 {
    let r = z.norm().max(1.0);
    p.iter().fold(0.0, |acc, c| acc * r + c.norm())
}

fn derivative(p: &[Complex64]) -> Vec<Complex64> {
    let deg = p.len().saturating_sub(1);
    p.iter().take(deg).enumerate().map(|(i, c)| c * (deg - i) as f64).collect()
}

fn reversed(p: &[Complex64]) -> Vec<Complex64> {
    p.iter().rev().copied().collect()
}

fn polish(p: &[Complex64], z0: Complex64) -> Complex64 {
    let mut z = z0;
    let mut val = horner(p, z).norm();
    for _ in 0..NEWTON_MAX_ITER {
        if val == 0.0 {
            break;
        }
        let (v, d) = horner_with_derivative(p, z);
        if d.norm() == 0.0 {
            break;
        }
        let next = z - v / d;
        let next_val = horner(p, next).norm();
        if next_val.is_nan() || next_val >= val {
            break;
        }
        let moved = (next - z).norm();
        z = next;
        val = next_val;
        if moved <= 4.0 * f64::EPSILON * (1.0 + z.norm()) {
            break;
        }
    }
    z
}

/// Eigenvalues of the companion matrix of `p` (degree >= 1, `p[0] != 0`).
fn companion_roots(p: &[Complex64]) -> Result<Vec<Complex64>> {
    let deg = p.len() - 1;
    let lead = p[0];
    if deg == 1 {
        return Ok(vec![-p[1] / lead]);
    }
    let mut m = DMatrix::<Complex64>::zeros(deg, deg);
    for j in 0..deg {
        m[(0, j)] = -p[j + 1] / lead;
    }
    for i in 1..deg {
        m[(i, i - 1)] = Complex64::new(1.0, 0.0);
    }
    let schur = Schur::try_new(m, f64::EPSILON, 10_000)
        .ok_or_else(|| Error::RootFinding("Schur iteration did not converge".into()))?;
    let (_, t) = schur.unpack();
    Ok((0..deg).map(|i| t[(i, i)]).collect())
}

/// All `deg` projective roots of the polynomial `Σ p_r x^(deg - r)`.
///
/// Vanishing leading coefficients contribute roots at infinity, vanishing
/// trailing coefficients roots at zero; both are exact.
pub(crate) fn projective_roots(p: &[Complex64]) -> Result<Vec<ProjRoot>> {
    if p.iter().all(|c| c.norm() == 0.0) {
        return Err(Error::RootFinding("zero polynomial".into()));
    }
    if p.iter().any(|c| !c.re.is_finite() || !c.im.is_finite()) {
        return Err(Error::RootFinding("non-finite coefficient".into()));
    }
    let lead_zeros = p.iter().take_while(|c| c.norm() == 0.0).count();
    let trail_zeros = p.iter().rev().take_while(|c| c.norm() == 0.0).count();
    let zero = Complex64::new(0.0, 0.0);
    let mut roots: Vec<ProjRoot> = Vec::with_capacity(p.len() - 1);
    roots.extend((0..lead_zeros).map(|_| ProjRoot { z: zero, chart: Chart::Inverted }));
    roots.extend((0..trail_zeros).map(|_| ProjRoot { z: zero, chart: Chart::Direct }));

    let core = &p[lead_zeros..p.len() - trail_zeros];
    if core.len() <= 1 {
        return Ok(roots);
    }
    let rev = reversed(core);
    let (raw, chart) = if core[0].norm() >= core[core.len() - 1].norm() {
        (companion_roots(core)?, Chart::Direct)
    } else {
        (companion_roots(&rev)?, Chart::Inverted)
    };

    let mut found: Vec<ProjRoot> = raw
        .into_iter()
        .map(|x| {
            let r = ProjRoot::from_value(x, chart);
            let poly = match r.chart {
                Chart::Direct => core,
                Chart::Inverted => &rev[..],
            };
            ProjRoot { z: polish(poly, r.z), chart: r.chart }
        })
        .collect();
    collapse_multiple_roots(core, &rev, &mut found);
    roots.extend(found);
    Ok(roots)
}

fn collapse_multiple_roots(core: &[Complex64], rev: &[Complex64], roots: &mut [ProjRoot]) {
    let n = roots.len();
    if n < 2 {
        return;
    }
    let pts: Vec<BlochVector> = roots.iter().map(ProjRoot::bloch).collect();
    // single-linkage clusters
    let mut label: Vec<usize> = (0..n).collect();
    for i in 0..n {
        for j in i + 1..n {
            if (pts[i] - pts[j]).norm() <= CLUSTER_RADIUS {
                let (li, lj) = (label[i], label[j]);
                if li != lj {
                    label.iter_mut().filter(|l| **l == lj).for_each(|l| *l = li);
                }
            }
        }
    }
    let mut done = vec![false; n];
    for i in 0..n {
        if done[i] {
            continue;
        }
        let members: Vec<usize> = (0..n).filter(|&j| label[j] == label[i]).collect();
        members.iter().for_each(|&j| done[j] = true);
        let k = members.len();
        if k < 2 {
            continue;
        }
        let mean_z: f64 = members.iter().map(|&j| pts[j].z).sum::<f64>() / k as f64;
        let (chart, poly) = if mean_z >= 0.0 { (Chart::Direct, core) } else { (Chart::Inverted, rev) };
        let centroid = members.iter().map(|&j| roots[j].in_chart(chart)).sum::<Complex64>() / k as f64;

        let mut derivs = vec![poly.to_vec()];
        for _ in 1..k {
            let next = derivative(derivs.last().expect("non-empty"));
            derivs.push(next);
        }
        let z = polish(&derivs[k - 1], centroid);
        let consistent = derivs.iter().all(|d| {
            let bound = magnitude_bound(d, z);
            bound == 0.0 || horner(d, z).norm() <= MERGE_TOL * bound
        });
        if consistent {
            for &j in &members {
                roots[j] = ProjRoot { z, chart };
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn poly_from_roots(roots: &[Complex64]) -> Vec<Complex64> {
        let mut p = vec![c(1.0, 0.0)];
        for &r in roots {
            let mut next = vec![c(0.0, 0.0); p.len() + 1];
            for (i, &a) in p.iter().enumerate() {
                next[i] += a;
                next[i + 1] -= a * r;
            }
            p = next;
        }
        p
    }

    fn values(roots: &[ProjRoot]) -> Vec<Complex64> {
        roots.iter().map(|r| r.in_chart(Chart::Direct)).collect()
    }

    #[test]
    fn simple_roots_recovered() {
        let expect = [c(0.5, 0.2), c(-1.5, 0.0), c(0.0, 3.0), c(0.1, -0.1)];
        let roots = projective_roots(&poly_from_roots(&expect)).unwrap();
        let got = values(&roots);
        for e in expect {
            let best = got.iter().map(|g| (g - e).norm() / (1.0 + e.norm())).fold(1.0, f64::min);
            assert!(best < 1e-13, "missing {e}: {best}");
        }
    }

    #[test]
    fn leading_and_trailing_zeros_are_exact() {
        // 0·x^3 + 2x^2 + 0·x + 0 → roots ∞, 0, 0
        let roots = projective_roots(&[c(0.0, 0.0), c(2.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)]).unwrap();
        assert_eq!(roots.len(), 3);
        assert_eq!(roots.iter().filter(|r| r.chart == Chart::Inverted && r.z == c(0.0, 0.0)).count(), 1);
        assert_eq!(roots.iter().filter(|r| r.chart == Chart::Direct && r.z == c(0.0, 0.0)).count(), 2);
        assert_eq!(roots[0].star(), Star::south());
    }

    #[test]
    fn perturbed_quadruple_root_collapses() {
        let r = c(0.3, -0.4);
        let mut p = poly_from_roots(&[r, r, r, r]);
        p[3] += c(3e-16, -2e-16);
        let roots = projective_roots(&p).unwrap();
        for v in values(&roots) {
            assert!((v - r).norm() < 1e-12, "{v}");
        }
    }

    #[test]
    fn distinct_close_roots_are_kept_apart() {
        let roots_in = [c(0.2, 0.0), c(0.2 + 1e-3, 0.0), c(-0.7, 0.3)];
        let roots = projective_roots(&poly_from_roots(&roots_in)).unwrap();
        let mut got: Vec<f64> = values(&roots).iter().map(|v| v.re).collect();
        got.sort_by(f64::total_cmp);
        assert!((got[1] - 0.2).abs() < 1e-12 && (got[2] - 0.201).abs() < 1e-12);
    }

    #[test]
    fn huge_roots_live_in_the_inverted_chart() {
        let big = c(1e9, 1e9);
        let roots = projective_roots(&poly_from_roots(&[big, c(0.5, 0.0)])).unwrap();
        let inv = roots.iter().find(|r| r.chart == Chart::Inverted).unwrap();
        assert!((inv.z - big.inv()).norm() < 1e-22);
    }

    #[test]
    fn zero_polynomial_is_an_error() {
        assert!(projective_roots(&[c(0.0, 0.0), c(0.0, 0.0)]).is_err());
    }
}
