//! Pipeline configuration document (single JSON file, unknown keys
//! rejected). Field-of-view degrees and all other unit-suffixed fields are
//! converted to the library's internal units on build.

use serde::{Deserialize, Serialize};
use std::path::PathBuf;
use thermostereo::io::RigFile;
use thermostereo::thermal::CentroidWeighting;

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PipelineConfig {
    #[serde(default)]
    pub rig: RigFile,
    #[serde(default)]
    pub band: BandConfig,
    #[serde(default = "default_min_blob_pixels")]
    pub min_blob_pixels: usize,
    #[serde(default = "default_weighting")]
    pub centroid_weighting: CentroidWeighting,
    #[serde(default = "default_max_skew")]
    pub max_skew_s: f64,
    #[serde(default = "default_max_temp_delta")]
    pub max_temp_delta_c: f64,
    /// Optional epipolar sanity gate; `null` (the default) disables it.
    #[serde(default)]
    pub max_vertical_disparity_px: Option<f64>,
    #[serde(default = "default_max_points")]
    pub max_points_per_image: usize,
    #[serde(default = "default_window")]
    pub stats_window_s: f64,
    #[serde(default = "default_gate_radius")]
    pub gate_radius_m: f64,
    /// Fallback output paths, overridden by the command-line flags.
    #[serde(default)]
    pub out_estimates: Option<PathBuf>,
    #[serde(default)]
    pub out_stats: Option<PathBuf>,
}

impl Default for PipelineConfig {
    fn default() -> Self {
        serde_json::from_str("{}").expect("empty config parses to defaults")
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BandConfig {
    pub low_c: f64,
    pub high_c: f64,
    pub background_sentinel_c: f64,
}

impl Default for BandConfig {
    fn default() -> Self {
        Self {
            low_c: 125.0,
            high_c: 550.0,
            background_sentinel_c: -273.15,
        }
    }
}

fn default_min_blob_pixels() -> usize {
    1
}

fn default_weighting() -> CentroidWeighting {
    CentroidWeighting::Temperature
}

fn default_max_skew() -> f64 {
    0.1
}

fn default_max_temp_delta() -> f64 {
    10.0
}

fn default_max_points() -> usize {
    8
}

fn default_window() -> f64 {
    20.0
}

fn default_gate_radius() -> f64 {
    0.3
}

impl PipelineConfig {
    pub fn from_json(json: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(json)
    }
}
