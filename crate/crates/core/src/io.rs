//! On-disk formats: newline-delimited JSON frame streams (one file per
//! camera), the scene description JSON, and the CSV outputs for estimates,
//! window statistics, and simulator ground truth.
//!
//! CSVs carry a header row, '.' decimal separators and UNIX newlines, and
//! all float formatting is the shortest round-trip representation, so
//! outputs are byte-stable for golden-file comparison. Angles cross this
//! boundary in degrees; everything internal is radians.

use crate::geometry::{CameraIntrinsics, GeometryError, Point3, StereoRig};
use crate::localization::{LabeledEstimate, WindowStats};
use crate::scalar::Real;
use crate::synth::{HeatElement, SceneConfig, SynthError, TruthRecord};
use crate::thermal::{CameraId, ThermalError, ThermalFrame};
use serde::{Deserialize, Serialize};
use std::io::{BufRead, Write};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum IoError {
    #[error("i/o failure: {0}")]
    Io(#[from] std::io::Error),
    #[error("{path}:{line}: malformed frame record: {source}")]
    MalformedFrame {
        path: String,
        line: usize,
        source: serde_json::Error,
    },
    #[error("{path}:{line}: {source}")]
    InvalidFrame {
        path: String,
        line: usize,
        source: ThermalError,
    },
    #[error("malformed scene: {0}")]
    MalformedScene(serde_json::Error),
    #[error("json encoding failed: {0}")]
    JsonEncode(#[from] serde_json::Error),
    #[error("invalid scene: {0}")]
    InvalidScene(#[from] SynthError),
    #[error("invalid rig: {0}")]
    InvalidRig(#[from] GeometryError),
    #[error("csv failure: {0}")]
    Csv(#[from] csv::Error),
}

/// One frame stream record:
/// `{"camera": "left", "t": 0.0, "w": 32, "h": 32, "celsius": [...]}`.
#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FrameRecord {
    camera: CameraId,
    t: f64,
    w: usize,
    h: usize,
    celsius: Vec<f64>,
}

/// Writes frames as newline-delimited JSON, one record per line.
pub fn write_frame_stream<T: Real, W: Write>(
    writer: &mut W,
    frames: &[ThermalFrame<T>],
) -> Result<(), IoError> {
    for frame in frames {
        let record = FrameRecord {
            camera: frame.camera(),
            t: frame.timestamp(),
            w: frame.width(),
            h: frame.height(),
            celsius: frame
                .temperatures()
                .iter()
                .map(|t| t.to_f64().expect("finite temperature"))
                .collect(),
        };
        serde_json::to_writer(&mut *writer, &record)?;
        writer.write_all(b"\n")?;
    }
    Ok(())
}

/// Reads a newline-delimited frame stream, reporting the offending line on
/// parse failures. `path` is used only for error messages.
pub fn read_frame_stream<R: BufRead>(
    reader: R,
    path: &str,
) -> Result<Vec<ThermalFrame<f64>>, IoError> {
    let mut frames = Vec::new();
    for (index, line) in reader.lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let record: FrameRecord =
            serde_json::from_str(&line).map_err(|source| IoError::MalformedFrame {
                path: path.to_string(),
                line: index + 1,
                source,
            })?;
        let frame = ThermalFrame::new(record.camera, record.t, record.w, record.h, record.celsius)
            .map_err(|source| IoError::InvalidFrame {
                path: path.to_string(),
                line: index + 1,
                source,
            })?;
        frames.push(frame);
    }
    Ok(frames)
}

/// Rig description as it appears in config and scene files. The field of
/// view is given in degrees here and converted on construction.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct RigFile {
    pub image_width: u32,
    pub image_height: u32,
    pub fov_deg: f64,
    pub baseline_m: f64,
}

impl RigFile {
    pub fn build(&self) -> Result<StereoRig<f64>, IoError> {
        let intrinsics = CameraIntrinsics::new(
            self.image_width,
            self.image_height,
            self.fov_deg.to_radians(),
        )?;
        Ok(StereoRig::new(intrinsics, self.baseline_m)?)
    }
}

impl Default for RigFile {
    fn default() -> Self {
        Self {
            image_width: 32,
            image_height: 32,
            fov_deg: 33.0,
            baseline_m: 0.2,
        }
    }
}

/// One heat element in a scene file.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct ElementFile {
    pub x: f64,
    pub y: f64,
    pub z: f64,
    pub radius_m: f64,
    pub temperature_c: f64,
}

fn default_frame_rate() -> f64 {
    8.0
}

fn default_duration() -> f64 {
    20.0
}

fn default_supersampling() -> u32 {
    8
}

/// Scene description document for the simulator.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct SceneFile {
    #[serde(default)]
    pub rig: RigFile,
    pub elements: Vec<ElementFile>,
    #[serde(default = "default_ambient")]
    pub ambient_c: f64,
    #[serde(default = "default_frame_rate")]
    pub frame_rate_hz: f64,
    #[serde(default)]
    pub phase_offset_s: f64,
    #[serde(default)]
    pub temperature_noise_std_c: f64,
    #[serde(default)]
    pub centroid_jitter_std_px: f64,
    #[serde(default = "default_duration")]
    pub duration_s: f64,
    #[serde(default)]
    pub seed: u64,
    #[serde(default = "default_supersampling")]
    pub supersampling: u32,
}

fn default_ambient() -> f64 {
    20.0
}

impl SceneFile {
    pub fn from_json(json: &str) -> Result<Self, IoError> {
        serde_json::from_str(json).map_err(IoError::MalformedScene)
    }

    /// Builds the scene, optionally overriding the stored seed.
    pub fn build(&self, seed_override: Option<u64>) -> Result<SceneConfig<f64>, IoError> {
        let rig = self.rig.build()?;
        let elements = self
            .elements
            .iter()
            .map(|e| HeatElement {
                position: Point3::new(e.x, e.y, e.z),
                radius: e.radius_m,
                temperature: e.temperature_c,
            })
            .collect();
        let scene = SceneConfig::new(
            rig,
            elements,
            self.ambient_c,
            self.frame_rate_hz,
            self.phase_offset_s,
            self.temperature_noise_std_c,
            self.centroid_jitter_std_px,
            self.duration_s,
            seed_override.unwrap_or(self.seed),
        )?
        .with_supersampling(self.supersampling)?;
        Ok(scene)
    }
}

/// Shortest-round-trip float formatting shared by every CSV column;
/// infinities come out as `inf`/`-inf`.
pub fn format_float(value: f64) -> String {
    format!("{value}")
}

/// Writes the estimates CSV: `t,label,x,y,z,z_min,z_max,disparity_px,temp_c`.
pub fn write_estimates_csv<T: Real, W: Write>(
    writer: W,
    estimates: &[LabeledEstimate<T>],
) -> Result<(), IoError> {
    let mut csv = csv::Writer::from_writer(writer);
    csv.write_record([
        "t",
        "label",
        "x",
        "y",
        "z",
        "z_min",
        "z_max",
        "disparity_px",
        "temp_c",
    ])?;
    let f = |v: T| format_float(v.to_f64().expect("numeric"));
    for le in estimates {
        let e = &le.estimate;
        csv.write_record([
            format_float(e.timestamp),
            le.label.to_string(),
            f(e.position.x),
            f(e.position.y),
            f(e.position.z),
            f(e.depth_interval.nearest()),
            f(e.depth_interval.farthest()),
            f(e.disparity),
            f(e.mean_temperature),
        ])?;
    }
    csv.flush()?;
    Ok(())
}

/// Writes the window statistics CSV: `label,window_start,count,mean_z,std_z`.
pub fn write_stats_csv<T: Real, W: Write>(
    writer: W,
    stats: &[WindowStats<T>],
) -> Result<(), IoError> {
    let mut csv = csv::Writer::from_writer(writer);
    csv.write_record(["label", "window_start", "count", "mean_z", "std_z"])?;
    let f = |v: T| format_float(v.to_f64().expect("numeric"));
    for s in stats {
        csv.write_record([
            s.label.to_string(),
            format_float(s.window_start),
            s.count.to_string(),
            f(s.mean_distance),
            f(s.std_distance),
        ])?;
    }
    csv.flush()?;
    Ok(())
}

/// Writes the simulator ground truth CSV: `t,element_id,x,y,z,temperature`.
pub fn write_truth_csv<T: Real, W: Write>(
    writer: W,
    records: &[TruthRecord<T>],
) -> Result<(), IoError> {
    let mut csv = csv::Writer::from_writer(writer);
    csv.write_record(["t", "element_id", "x", "y", "z", "temperature"])?;
    let f = |v: T| format_float(v.to_f64().expect("numeric"));
    for r in records {
        csv.write_record([
            format_float(r.t),
            r.element_id.to_string(),
            f(r.position.x),
            f(r.position.y),
            f(r.position.z),
            f(r.temperature),
        ])?;
    }
    csv.flush()?;
    Ok(())
}
