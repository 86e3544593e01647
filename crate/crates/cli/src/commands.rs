use std::f64::consts::PI;
use std::path::Path;

use msr_core::bargmann::{closed_loop_phase, verify_npc, NpcReport};
use msr_core::geodesic::{
    ansatz_tracks_nd, curve_length, decompose_curve, geodesic_between, geodesic_curve, geodesic_residual,
    radius_formula, GeodesicSpec, ReflectionDefect, StarTrackSet, TrackFile,
};
use msr_core::npc::{
    cubic_eta, default_g, dual_pair_npc, example_grid, example_npc, profile_from_example, selfdual_npc, CurveProfile,
};
use msr_core::statespace::uniform_grid;
use msr_core::transforms::{canonical_frame_3d, conjugate_curve, Direction};
use msr_core::{decompose, majorana::DEGENERACY_TOL, PureState, Star, StateCurve};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::args::{DecomposeArgs, GeodesicArgs, NpcArgs, NpcKind, RenderArgs, VerifyArgs};
use crate::error::{CliError, CliResult};
use crate::input::{emit, parse_coeffs, read_g_csv, read_json, resolve_seed, to_json};
use crate::render::{parse_view, render_svg, RenderSpec, Scene};

/// Tracks closer than this to mirror images count as a dual pair.
const MIRROR_TOL: f64 = 1e-8;

/// `Ok(false)` means the command ran but a verification failed.
pub type Outcome = CliResult<bool>;

#[derive(Serialize)]
struct DecomposeOut {
    dim: usize,
    stars: Vec<Star>,
    bloch: Vec<[f64; 3]>,
    multiplicities: Vec<usize>,
}

pub fn decompose_cmd(args: &DecomposeArgs) -> Outcome {
    let psi: PureState = match (&args.state, &args.coeffs) {
        (Some(path), _) => read_json(path)?,
        (None, Some(text)) => PureState::new(parse_coeffs(text)?)?,
        (None, None) => return Err(CliError::Usage("give a state file or --coeffs".into())),
    };
    let c = decompose(&psi)?;
    let out = DecomposeOut {
        dim: c.dim(),
        stars: c.stars().to_vec(),
        bloch: c.bloch_vectors().iter().map(|v| [v.x, v.y, v.z]).collect(),
        multiplicities: c.multiplicities(DEGENERACY_TOL),
    };
    emit(args.out.output.as_deref(), &to_json(&out))?;
    Ok(true)
}

#[derive(Deserialize)]
struct EndStates {
    psi1: PureState,
    psi2: PureState,
}

#[derive(Serialize)]
struct GeodesicOut {
    #[serde(flatten)]
    tracks: TrackFile,
    /// Worst distance of a track point from its fitted circle.
    circle_residuals: Vec<f64>,
    /// Predicted radii, canonical end states only.
    #[serde(skip_serializing_if = "Option::is_none")]
    radius_formula: Option<Vec<f64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pairing_defect: Option<f64>,
    /// Distance between the closed-form tracks and the numerical
    /// decomposition of the sampled curve, canonical end states only.
    #[serde(skip_serializing_if = "Option::is_none")]
    decomposition_agreement: Option<f64>,
    collisions: Vec<usize>,
    length: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    residual: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    unitarity_defect: Option<f64>,
    curve: StateCurve,
}

fn residual_if_possible(c: &StateCurve) -> Option<f64> {
    geodesic_residual(c).ok()
}

pub fn geodesic_cmd(args: &GeodesicArgs) -> Outcome {
    let out = if let Some(path) = &args.end_states {
        let ends: EndStates = read_json(path)?;
        let g = geodesic_between(&ends.psi1, &ends.psi2, args.samples)?;
        let tracks = decompose_curve(&g.curve)?;
        let circles = tracks.fit_circles()?;
        GeodesicOut {
            tracks: TrackFile::new(&tracks, g.canonical.theta(), &circles),
            circle_residuals: circles.iter().map(|c| c.max_residual).collect(),
            radius_formula: None,
            pairing_defect: None,
            decomposition_agreement: None,
            collisions: tracks.collisions().to_vec(),
            length: curve_length(&g.curve)?,
            residual: residual_if_possible(&g.curve),
            unitarity_defect: Some(g.frame.unitarity_defect()),
            curve: g.curve,
        }
    } else {
        let (Some(dim), Some(theta)) = (args.dim, args.theta) else {
            return Err(CliError::Usage("give --dim and --theta, or --end-states".into()));
        };
        let spec = GeodesicSpec::canonical(dim, theta, args.samples)?;
        let curve = geodesic_curve(&spec)?;
        let tracks = ansatz_tracks_nd(&spec)?;
        let numeric = decompose_curve(&curve)?;
        let circles = tracks.fit_circles()?;
        let radii = if dim >= 3 {
            Some((0..dim - 1).map(|k| radius_formula(dim, k, spec.xi())).collect::<Result<Vec<_>, _>>()?)
        } else {
            None
        };
        GeodesicOut {
            tracks: TrackFile::new(&tracks, spec.theta(), &circles),
            circle_residuals: circles.iter().map(|c| c.max_residual).collect(),
            radius_formula: radii,
            pairing_defect: tracks.pairing_defect(),
            decomposition_agreement: Some(numeric.distance_to(&tracks)?),
            collisions: numeric.collisions().to_vec(),
            length: curve_length(&curve)?,
            residual: residual_if_possible(&curve),
            unitarity_defect: None,
            curve,
        }
    };
    emit(args.out.output.as_deref(), &to_json(&out))?;
    Ok(true)
}

#[derive(Serialize)]
struct Reflection {
    #[serde(flatten)]
    defect: ReflectionDefect,
    mirror_symmetric: bool,
}

#[derive(Serialize)]
struct NpcOut {
    kind: &'static str,
    chi: f64,
    report: NpcReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    closed_loop_phase: Option<f64>,
    length: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    residual: Option<f64>,
    /// Mirror test of the two tracks through the plane of the end stars.
    reflection: Reflection,
    /// Tracks in the frame where the end states are degenerate.
    #[serde(flatten)]
    tracks: TrackFile,
    #[serde(skip_serializing_if = "Option::is_none")]
    profile: Option<CurveProfile>,
    curve: StateCurve,
}

fn g_samples(args: &NpcArgs) -> CliResult<Vec<f64>> {
    match &args.g {
        Some(path) => read_g_csv(path, args.theta),
        None => Ok(default_g(args.theta, &example_grid(args.theta, args.samples))),
    }
}

fn check_npc_theta(theta: f64) -> CliResult<()> {
    if theta > 0.0 && theta < PI / 2.0 {
        Ok(())
    } else {
        Err(CliError::Usage(format!("--theta {theta} must lie in (0, pi/2)")))
    }
}

pub fn npc_cmd(args: &NpcArgs) -> Outcome {
    check_npc_theta(args.theta)?;
    if args.samples < 2 {
        return Err(CliError::Usage("--samples must be at least 2".into()));
    }
    let seed = resolve_seed(args.seed)?;
    let theta = args.theta;
    let read_profile = |p: &Path| read_json::<CurveProfile>(p);

    let (kind, curve, profile, framed) = match args.kind {
        NpcKind::Example => {
            let curve = example_npc(theta, &g_samples(args)?, args.chi)?;
            let e0 = PureState::basis(3, 0)?;
            let end = PureState::from_real(&[theta.cos(), theta.sin(), 0.0])?;
            let frame = canonical_frame_3d(&e0, &end)?;
            let framed = conjugate_curve(&frame, &curve, Direction::Forward)?;
            ("example", curve, None, framed)
        }
        NpcKind::Dual => {
            let profile = match &args.profile {
                Some(p) => read_profile(p)?,
                None => profile_from_example(theta, &g_samples(args)?)?,
            };
            let curve = dual_pair_npc(&profile, theta)?;
            ("dual", curve.clone(), Some(profile), curve)
        }
        NpcKind::Selfdual => {
            let (s, eta) = match &args.profile {
                Some(p) => {
                    let profile = read_profile(p)?;
                    if profile.gamma().iter().any(|g| *g != 0.0) {
                        return Err(CliError::Usage("a self-dual profile must have gamma = 0".into()));
                    }
                    (profile.s().to_vec(), profile.eta().to_vec())
                }
                None => {
                    let s = uniform_grid(0.0, theta, args.samples);
                    let eta = cubic_eta(3, theta, &s)?;
                    (s, eta)
                }
            };
            let curve = selfdual_npc(&s, &eta, theta)?;
            let profile = CurveProfile::self_dual(s, eta)?;
            ("selfdual", curve.clone(), Some(profile), curve)
        }
    };

    let tracks: StarTrackSet = decompose_curve(&framed)?;
    let defect = tracks.reflection_defect(0, 1);
    let out = NpcOut {
        kind,
        chi: if args.kind == NpcKind::Example { args.chi } else { 0.0 },
        report: verify_npc(&curve, args.triples, seed)?,
        closed_loop_phase: closed_loop_phase(&curve).ok(),
        length: curve_length(&curve)?,
        residual: residual_if_possible(&curve),
        reflection: Reflection { defect, mirror_symmetric: defect.max() <= MIRROR_TOL },
        tracks: TrackFile::new(&tracks, theta, &[]),
        profile,
        curve,
    };
    emit(args.out.output.as_deref(), &to_json(&out))?;
    Ok(true)
}

#[derive(Serialize)]
struct VerifyOut {
    #[serde(flatten)]
    report: NpcReport,
    dim: usize,
    samples: usize,
    length: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    residual: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    closed_loop_phase: Option<f64>,
}

pub fn verify_cmd(args: &VerifyArgs) -> Outcome {
    let seed = resolve_seed(args.seed)?;
    let mut value: Value = read_json(&args.curve)?;
    if let Some(inner) = value.get_mut("curve") {
        value = inner.take();
    }
    let curve: StateCurve = serde_json::from_value(value).map_err(|e| CliError::parse(&args.curve, e))?;
    let report = verify_npc(&curve, args.triples, seed)?;
    let pass = report.pass;
    let out = VerifyOut {
        report,
        dim: curve.dim(),
        samples: curve.len(),
        length: curve_length(&curve).unwrap_or(0.0),
        residual: residual_if_possible(&curve),
        closed_loop_phase: closed_loop_phase(&curve).ok(),
    };
    emit(args.out.output.as_deref(), &to_json(&out))?;
    Ok(pass)
}

pub fn render_cmd(args: &RenderArgs) -> Outcome {
    let spec = RenderSpec::new(parse_view(&args.view)?, args.size, !args.no_sphere)?;
    let value: Value = read_json(&args.input)?;
    let scene = Scene::from_json(value).map_err(|e| CliError::parse(&args.input, e))?;
    emit(Some(&args.output), &render_svg(&scene, &spec))?;
    Ok(true)
}
