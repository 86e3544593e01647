//! Majorana-star geometry of geodesics and null phase curves.
//!
//! An `n`-level pure state is equivalent to an unordered set of `n - 1` points
//! on the Bloch sphere. Following a curve of states therefore traces `n - 1`
//! curves on the sphere; this crate computes those decompositions for
//! geodesics and null phase curves, builds such curves from their star
//! tracks, and checks the geometric-phase properties numerically.

pub mod assign;
pub mod bargmann;
pub mod circle;
pub mod error;
pub mod geodesic;
pub mod majorana;
pub mod npc;
mod polyroots;
pub mod statespace;
pub mod transforms;

pub use bargmann::{bi3, bi_n, geometric_phase_closed, verify_npc, NpcReport, TripleBI};
pub use circle::{fit_circle, CircleFit};
pub use error::{Error, Result};
pub use geodesic::{
    analytic_tracks_3d, ansatz_tracks_nd, curve_length, decompose_curve, dual_pairs, geodesic_curve, geodesic_residual,
    radius_formula, DualPairing, GeodesicSpec, StarTrackSet, TrackFile,
};
pub use majorana::{build_polynomial, decompose, degenerate_state, reconstruct, MajoranaPolynomial};
pub use npc::CurveProfile;
pub use statespace::{BlochVector, Constellation, PureState, Star, StateCurve};
pub use transforms::{FrameMap, MatrixJson};
