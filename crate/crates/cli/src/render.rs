//! Orthographic SVG pictures of star tracks on the Bloch sphere.

use std::f64::consts::TAU;
use std::fmt::Write;

use msr_core::{BlochVector, Constellation, TrackFile};
use serde_json::Value;

use crate::error::{CliError, CliResult};

pub const PALETTE: [&str; 10] =
    ["#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"];

#[derive(Clone, Debug, PartialEq)]
pub struct RenderSpec {
    /// Unit vector pointing from the sphere towards the viewer.
    pub view: BlochVector,
    pub size_px: u32,
    pub show_sphere: bool,
    pub track_colors: Vec<String>,
}

impl RenderSpec {
    pub fn new(view: BlochVector, size_px: u32, show_sphere: bool) -> CliResult<Self> {
        let n = view.norm();
        if !n.is_finite() || n == 0.0 {
            return Err(CliError::Usage("view direction must be a non-zero vector".into()));
        }
        if size_px < 16 {
            return Err(CliError::Usage("size must be at least 16 pixels".into()));
        }
        Ok(Self { view: view / n, size_px, show_sphere, track_colors: PALETTE.iter().map(|c| c.to_string()).collect() })
    }
}

pub fn parse_view(text: &str) -> CliResult<BlochVector> {
    let parts: Vec<f64> = text
        .split(',')
        .map(|p| p.trim().parse::<f64>())
        .collect::<Result<_, _>>()
        .map_err(|_| CliError::Usage(format!("view \"{text}\" is not three numbers")))?;
    match parts[..] {
        [x, y, z] if parts.iter().all(|v| v.is_finite()) => Ok(BlochVector::new(x, y, z)),
        _ => Err(CliError::Usage(format!("view \"{text}\" is not three finite numbers"))),
    }
}

/// What gets drawn: continuous tracks and isolated stars.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Scene {
    pub tracks: Vec<Vec<BlochVector>>,
    pub stars: Vec<BlochVector>,
}

impl Scene {
    /// Accepts track JSON (a `tracks` field) or constellation JSON (a
    /// `stars` field).
    pub fn from_json(value: Value) -> Result<Self, String> {
        if value.get("tracks").is_some() {
            let file: TrackFile = serde_json::from_value(value).map_err(|e| e.to_string())?;
            let tracks = file.bloch_tracks();
            if tracks.iter().any(|t| t.is_empty()) {
                return Err("empty track".into());
            }
            Ok(Scene { tracks, stars: vec![] })
        } else if value.get("stars").is_some() {
            let c: Constellation = serde_json::from_value(value).map_err(|e| e.to_string())?;
            Ok(Scene { tracks: vec![], stars: c.bloch_vectors() })
        } else {
            Err("expected a \"tracks\" or \"stars\" field".into())
        }
    }
}

struct Projector {
    right: BlochVector,
    up: BlochVector,
    view: BlochVector,
    center: f64,
    radius: f64,
}

impl Projector {
    fn new(spec: &RenderSpec) -> Self {
        let view = spec.view;
        let helper = if view.cross(&BlochVector::z()).norm() > 1e-9 { BlochVector::z() } else { BlochVector::y() };
        let right = helper.cross(&view).normalize();
        let up = view.cross(&right);
        let center = spec.size_px as f64 / 2.0;
        Self { right, up, view, center, radius: center * 0.85 }
    }

    fn xy(&self, p: &BlochVector) -> (f64, f64) {
        (self.center + self.radius * p.dot(&self.right), self.center - self.radius * p.dot(&self.up))
    }

    fn front(&self, p: &BlochVector) -> bool {
        p.dot(&self.view) >= 0.0
    }
}

/// Two decimals, with negative zero printed as zero.
fn num(x: f64) -> String {
    let s = format!("{x:.2}");
    if s == "-0.00" {
        "0.00".into()
    } else {
        s
    }
}

/// Splits a polyline into runs on the visible and hidden hemispheres,
/// classifying each segment by its midpoint.
fn runs<'a>(pts: &'a [BlochVector], proj: &Projector) -> Vec<(bool, &'a [BlochVector])> {
    let mut out = Vec::new();
    if pts.len() < 2 {
        return out;
    }
    let side = |i: usize| proj.front(&((pts[i] + pts[i + 1]) / 2.0));
    let mut start = 0;
    let mut current = side(0);
    for i in 1..pts.len() - 1 {
        let s = side(i);
        if s != current {
            out.push((current, &pts[start..=i]));
            start = i;
            current = s;
        }
    }
    out.push((current, &pts[start..]));
    out
}

fn polyline(svg: &mut String, pts: &[BlochVector], proj: &Projector, style: &str) {
    let coords: Vec<String> = pts
        .iter()
        .map(|p| {
            let (x, y) = proj.xy(p);
            format!("{},{}", num(x), num(y))
        })
        .collect();
    let _ = writeln!(svg, r#"<polyline points="{}" fill="none" {style}/>"#, coords.join(" "));
}

fn dot(svg: &mut String, p: &BlochVector, proj: &Projector, r: f64, fill: &str) {
    let (x, y) = proj.xy(p);
    let opacity = if proj.front(p) { "1" } else { "0.35" };
    let _ = writeln!(
        svg,
        r#"<circle cx="{}" cy="{}" r="{}" fill="{fill}" fill-opacity="{opacity}" stroke="black" stroke-width="0.5"/>"#,
        num(x),
        num(y),
        num(r)
    );
}

fn great_circle(axis_a: BlochVector, axis_b: BlochVector) -> Vec<BlochVector> {
    (0..=180)
        .map(|i| {
            let t = TAU * i as f64 / 180.0;
            axis_a * t.cos() + axis_b * t.sin()
        })
        .collect()
}

/// Deterministic SVG text for a scene.
pub fn render_svg(scene: &Scene, spec: &RenderSpec) -> String {
    let proj = Projector::new(spec);
    let size = spec.size_px;
    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" viewBox="0 0 {size} {size}">"#
    );
    let _ = writeln!(svg, r#"<rect width="{size}" height="{size}" fill="white"/>"#);

    if spec.show_sphere {
        let _ = writeln!(
            svg,
            r##"<circle cx="{c}" cy="{c}" r="{r}" fill="#f7f7f7" stroke="#444444" stroke-width="1"/>"##,
            c = num(proj.center),
            r = num(proj.radius)
        );
        // equator and the xz great circle, which holds both end stars
        for ring in [great_circle(BlochVector::x(), BlochVector::y()), great_circle(BlochVector::x(), BlochVector::z())]
        {
            for (front, run) in runs(&ring, &proj) {
                let style = if front {
                    r##"stroke="#999999" stroke-width="0.8""##
                } else {
                    r##"stroke="#bbbbbb" stroke-width="0.6" stroke-dasharray="3,3""##
                };
                polyline(&mut svg, run, &proj, style);
            }
        }
        for (label, p) in [("x", BlochVector::x()), ("y", BlochVector::y()), ("z", BlochVector::z())] {
            let (x, y) = proj.xy(&(p * 1.08));
            let _ = writeln!(
                svg,
                r##"<text x="{}" y="{}" font-family="sans-serif" font-size="12" fill="#444444" text-anchor="middle">{label}</text>"##,
                num(x),
                num(y)
            );
        }
    }

    for (k, track) in scene.tracks.iter().enumerate() {
        let color = &spec.track_colors[k % spec.track_colors.len()];
        for (front, run) in runs(track, &proj) {
            let style = if front {
                format!(r#"stroke="{color}" stroke-width="2""#)
            } else {
                format!(r#"stroke="{color}" stroke-width="1.5" stroke-opacity="0.35" stroke-dasharray="4,2""#)
            };
            polyline(&mut svg, run, &proj, &style);
        }
    }

    let mut ends: Vec<BlochVector> = Vec::new();
    for track in &scene.tracks {
        for p in [track[0], track[track.len() - 1]] {
            if ends.iter().all(|q| (q - p).norm() > 1e-6) {
                ends.push(p);
            }
        }
    }
    for p in &ends {
        dot(&mut svg, p, &proj, 4.0, "black");
    }
    for (k, p) in scene.stars.iter().enumerate() {
        dot(&mut svg, p, &proj, 5.0, &spec.track_colors[k % spec.track_colors.len()]);
    }
    svg.push_str("</svg>\n");
    svg
}
