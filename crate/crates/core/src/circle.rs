//! Circle fits for star tracks on the unit sphere.

use nalgebra::{Matrix3, SymmetricEigen};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::statespace::BlochVector;

/// Circle in space: the intersection of the sphere with the plane
/// `⟨p, normal⟩ = ⟨center, normal⟩`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CircleFit {
    pub center: BlochVector,
    pub normal: BlochVector,
    pub radius: f64,
    /// Worst deviation of a fitted point from the plane or from the circle.
    pub max_residual: f64,
}

/// `{"center": [x,y,z], "normal": [x,y,z], "radius": r}`
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CircleJson {
    pub center: [f64; 3],
    pub normal: [f64; 3],
    pub radius: f64,
}

impl From<&CircleFit> for CircleJson {
    fn from(c: &CircleFit) -> Self {
        CircleJson { center: c.center.into(), normal: c.normal.into(), radius: c.radius }
    }
}

/// Unit normal of the plane through three points, or `None` if collinear.
pub fn triple_normal(p1: &BlochVector, p2: &BlochVector, p3: &BlochVector) -> Option<BlochVector> {
    let cross = (p2 - p1).cross(&(p3 - p1));
    let scale = (p2 - p1).norm() * (p3 - p1).norm();
    let n = cross.norm();
    if scale == 0.0 || n <= 1e-12 * scale {
        None
    } else {
        Some(cross / n)
    }
}

/// Fits a circle to points on the unit sphere.
///
/// An initial normal is averaged from cross products over evenly spread
/// triples; the plane is then refined as the least-variance direction of
/// the point scatter, oriented like the initial normal. The center is the
/// foot of the plane on the normal line through the origin.
pub fn fit_circle(points: &[BlochVector]) -> Result<CircleFit> {
    let n = points.len();
    if n < 3 {
        return Err(Error::TooFewSamples { min: 3, found: n });
    }

    let stride = n / 3;
    let n_triples = stride.clamp(1, 64);
    let mut initial = BlochVector::zeros();
    let mut reference: Option<BlochVector> = None;
    for t in 0..n_triples {
        let i = if stride > 1 { t * (stride - 1) / (n_triples.max(2) - 1).max(1) } else { 0 };
        let (a, b, c) = (i, (i + stride).min(n - 1), (i + 2 * stride).min(n - 1));
        let (a, b, c) = if stride == 0 { (0, n / 2, n - 1) } else { (a, b, c) };
        if let Some(m) = triple_normal(&points[a], &points[b], &points[c]) {
            let r = *reference.get_or_insert(m);
            initial += if m.dot(&r) < 0.0 { -m } else { m };
        }
    }
    if initial.norm() == 0.0 {
        // evenly spread triples can all be degenerate for short tracks
        if let Some(m) = triple_normal(&points[0], &points[n / 2], &points[n - 1]) {
            initial = m;
        } else {
            return Err(Error::Collinear);
        }
    }
    let initial = initial.normalize();

    let centroid = points.iter().sum::<BlochVector>() / n as f64;
    let mut scatter = Matrix3::zeros();
    for p in points {
        let d = p - centroid;
        scatter += d * d.transpose();
    }
    let eig = SymmetricEigen::new(scatter);
    let mut order = [0usize, 1, 2];
    order.sort_by(|&a, &b| eig.eigenvalues[a].total_cmp(&eig.eigenvalues[b]));
    let spread = eig.eigenvalues[order[2]].max(f64::MIN_POSITIVE);
    if eig.eigenvalues[order[1]] <= 1e-24 * spread.max(1.0) {
        return Err(Error::Collinear);
    }
    let mut normal: BlochVector = eig.eigenvectors.column(order[0]).into_owned().normalize();
    if normal.dot(&initial) < 0.0 {
        normal = -normal;
    }

    let offset = points.iter().map(|p| p.dot(&normal)).sum::<f64>() / n as f64;
    let center = normal * offset;
    let radius = points.iter().map(|p| (p - center).norm()).sum::<f64>() / n as f64;
    let max_residual = points
        .iter()
        .map(|p| (p.dot(&normal) - offset).abs().max(((p - center).norm() - radius).abs()))
        .fold(0.0, f64::max);
    Ok(CircleFit { center, normal, radius, max_residual })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn small_circle(axis: BlochVector, polar: f64, from: f64, to: f64, n: usize) -> Vec<BlochVector> {
        let axis = axis.normalize();
        let helper = if axis.x.abs() < 0.9 { BlochVector::x() } else { BlochVector::y() };
        let u = axis.cross(&helper).normalize();
        let v = axis.cross(&u);
        (0..n)
            .map(|i| {
                let t = from + (to - from) * i as f64 / (n - 1) as f64;
                axis * polar.cos() + (u * t.cos() + v * t.sin()) * polar.sin()
            })
            .collect()
    }

    #[test]
    fn great_circle_arc() {
        let pts = small_circle(BlochVector::new(0.0, 1.0, 0.0), PI / 2.0, 0.0, 1.0, 50);
        let fit = fit_circle(&pts).unwrap();
        assert!((fit.radius - 1.0).abs() < 1e-12);
        assert!(fit.center.norm() < 1e-12);
        assert!(fit.max_residual < 1e-12);
    }

    #[test]
    fn small_circle_arc() {
        let axis = BlochVector::new(0.3, -0.2, 0.9);
        let pts = small_circle(axis, 0.4, -0.5, 2.0, 101);
        let fit = fit_circle(&pts).unwrap();
        assert!((fit.radius - 0.4f64.sin()).abs() < 1e-12);
        assert!((fit.center - axis.normalize() * 0.4f64.cos()).norm() < 1e-12);
    }

    #[test]
    fn three_points() {
        let pts = small_circle(BlochVector::z(), 1.0, 0.0, 2.0, 3);
        let fit = fit_circle(&pts).unwrap();
        assert!((fit.radius - 1.0f64.sin()).abs() < 1e-12);
    }

    #[test]
    fn collinear_points_rejected() {
        let pts: Vec<BlochVector> = (0..5).map(|i| BlochVector::new(i as f64, 0.0, 0.0)).collect();
        assert_eq!(fit_circle(&pts), Err(Error::Collinear));
        let same = vec![BlochVector::z(); 4];
        assert_eq!(fit_circle(&same), Err(Error::Collinear));
        assert!(matches!(fit_circle(&pts[..2]), Err(Error::TooFewSamples { .. })));
    }
}
