//! Stereo thermal perception of overheated targets.
//!
//! A pair of aligned low-resolution thermal cameras watches a scene; this
//! crate turns their frames into relative 3D positions of heat sources:
//!
//! 1. [`thermal`] pairs frames by acquisition skew, band-filters them, and
//!    reduces over-threshold blobs to sub-pixel heat points;
//! 2. [`matcher`] establishes left/right correspondences by normalized
//!    polygon shape matching with a temperature gate;
//! 3. [`geometry`] and [`localization`] convert disparities into depths
//!    with the +/-1 px quantization interval attached;
//! 4. [`synth`] renders synthetic scenes for end-to-end evaluation, and
//!    [`io`] defines the frame-stream, scene, and CSV formats.
//!
//! All math is generic over the [`scalar::Real`] scalar (`f32` or `f64`);
//! the `*64` aliases below fix the default pipeline scalar.

pub mod geometry;
pub mod io;
pub mod localization;
pub mod matcher;
pub mod scalar;
pub mod synth;
pub mod thermal;

pub use scalar::Real;
pub use thermal::CameraId;

/// Default-precision aliases for the pipeline-facing types.
pub type CameraIntrinsics64 = geometry::CameraIntrinsics<f64>;
pub type StereoRig64 = geometry::StereoRig<f64>;
pub type DepthInterval64 = geometry::DepthInterval<f64>;
pub type Point64 = geometry::Point3<f64>;
pub type ThermalFrame64 = thermal::ThermalFrame<f64>;
pub type HeatPoint64 = thermal::HeatPoint<f64>;
pub type TemperatureBand64 = thermal::TemperatureBand<f64>;
pub type FramePairer64 = thermal::FramePairer<f64>;
pub type PointSet64 = matcher::PointSet<f64>;
pub type MatchOptions64 = matcher::MatchOptions<f64>;
pub type Correspondence64 = matcher::Correspondence<f64>;
pub type TargetEstimate64 = localization::TargetEstimate<f64>;
pub type LabeledEstimate64 = localization::LabeledEstimate<f64>;
pub type WindowStats64 = localization::WindowStats<f64>;
pub type SceneConfig64 = synth::SceneConfig<f64>;
