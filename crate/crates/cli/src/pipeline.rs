//! The `run` subcommand: replay two frame streams through pairing,
//! filtering, blob detection, matching, and localization, then write the
//! estimate and window-statistics CSVs.

use crate::config::PipelineConfig;
use anyhow::{bail, Context, Result};
use log::{debug, info, warn};
use std::fs::File;
use std::io::{BufReader, BufWriter};
use std::path::Path;
use thermostereo::io::{read_frame_stream, write_estimates_csv, write_stats_csv};
use thermostereo::localization::{accumulate_stats, estimate_target, TargetLabeler};
use thermostereo::matcher::{match_points, MatchError, MatchOptions, PointSet};
use thermostereo::thermal::{
    detect_blobs, BlobOptions, CameraId, FramePair, FramePairer, TemperatureBand,
};
use thermostereo::{StereoRig64, ThermalFrame64};

pub fn run(
    config_path: &Path,
    left_path: &Path,
    right_path: &Path,
    out_estimates: Option<&Path>,
    out_stats: Option<&Path>,
) -> Result<()> {
    let config_text = std::fs::read_to_string(config_path)
        .with_context(|| format!("reading config {}", config_path.display()))?;
    let config = PipelineConfig::from_json(&config_text)
        .with_context(|| format!("parsing config {}", config_path.display()))?;

    let out_estimates = out_estimates
        .map(Path::to_path_buf)
        .or_else(|| config.out_estimates.clone())
        .context("no estimates output path: pass --out-estimates or set it in the config")?;
    let out_stats = out_stats
        .map(Path::to_path_buf)
        .or_else(|| config.out_stats.clone())
        .context("no stats output path: pass --out-stats or set it in the config")?;

    let rig = config.rig.build().context("building rig from config")?;
    let band = TemperatureBand::new(
        config.band.low_c,
        config.band.high_c,
        config.band.background_sentinel_c,
    )
    .context("building temperature band from config")?;

    let left_frames = load_stream(left_path, CameraId::Left, &rig)?;
    let right_frames = load_stream(right_path, CameraId::Right, &rig)?;
    info!(
        "loaded {} left and {} right frames",
        left_frames.len(),
        right_frames.len()
    );

    let pairs = pair_streams(left_frames, right_frames, config.max_skew_s)?;
    info!("paired {} frame pairs", pairs.len());

    let blob_options = BlobOptions {
        min_blob_pixels: config.min_blob_pixels,
        weighting: config.centroid_weighting,
    };
    let match_options = MatchOptions {
        max_temp_delta: config.max_temp_delta_c,
        max_points_per_image: config.max_points_per_image,
        max_vertical_disparity: config.max_vertical_disparity_px,
    };

    let mut labeler = TargetLabeler::new(config.gate_radius_m)?;
    let mut labeled = Vec::new();
    for pair in pairs {
        let timestamp = pair.timestamp();
        let mut estimates = Vec::new();
        match correspondences(&pair, &band, &blob_options, &match_options) {
            Ok(matched) => {
                for correspondence in matched {
                    match estimate_target(&rig, &correspondence, timestamp) {
                        Ok(estimate) => estimates.push(estimate),
                        Err(err) => debug!("t={timestamp}: correspondence dropped: {err}"),
                    }
                }
            }
            Err(err) => warn!("t={timestamp}: frame pair skipped: {err}"),
        }
        labeled.extend(labeler.label_frame(estimates));
    }
    info!("{} labeled estimates", labeled.len());

    let stats = accumulate_stats(&labeled, config.stats_window_s)?;
    write_estimates_csv(
        BufWriter::new(
            File::create(&out_estimates).with_context(|| {
                format!("creating estimates output {}", out_estimates.display())
            })?,
        ),
        &labeled,
    )?;
    write_stats_csv(
        BufWriter::new(
            File::create(&out_stats)
                .with_context(|| format!("creating stats output {}", out_stats.display()))?,
        ),
        &stats,
    )?;
    Ok(())
}

fn load_stream(path: &Path, expected: CameraId, rig: &StereoRig64) -> Result<Vec<ThermalFrame64>> {
    let file =
        File::open(path).with_context(|| format!("opening frame stream {}", path.display()))?;
    let frames = read_frame_stream(BufReader::new(file), &path.display().to_string())?;
    let (w, h) = (
        rig.intrinsics().image_width() as usize,
        rig.intrinsics().image_height() as usize,
    );
    for frame in &frames {
        if frame.camera() != expected {
            bail!(
                "{}: found a {} frame in the {} stream",
                path.display(),
                frame.camera(),
                expected
            );
        }
        if frame.width() != w || frame.height() != h {
            bail!(
                "{}: frame is {}x{} but the configured rig expects {}x{}",
                path.display(),
                frame.width(),
                frame.height(),
                w,
                h
            );
        }
    }
    Ok(frames)
}

/// Replays both streams through the pairer in acquisition order.
///
/// A buffered pairing is only consumed once the replay clock has advanced
/// past `max(t_l, t_r) + skew`: no frame still to come can beat it. When
/// the best buffered pairing exceeds the skew limit and can no longer
/// improve, the oldest frame is evicted unpaired.
fn pair_streams(
    left: Vec<ThermalFrame64>,
    right: Vec<ThermalFrame64>,
    max_skew: f64,
) -> Result<Vec<FramePair<f64>>> {
    let mut merged: Vec<ThermalFrame64> = left.into_iter().chain(right).collect();
    merged.sort_by(|a, b| {
        a.timestamp()
            .partial_cmp(&b.timestamp())
            .expect("finite timestamps")
            .then_with(|| (a.camera() == CameraId::Right).cmp(&(b.camera() == CameraId::Right)))
    });

    let mut pairer = FramePairer::new(max_skew);
    let mut pairs = Vec::new();
    for frame in merged {
        let now = frame.timestamp();
        pairer.push(frame)?;
        while let Some(best) = pairer.peek_best() {
            if best.left_timestamp.max(best.right_timestamp) + best.skew > now {
                break;
            }
            match pairer.select() {
                Some(pair) => pairs.push(pair),
                None => {
                    pairer.pop_oldest();
                }
            }
        }
    }
    loop {
        match pairer.select() {
            Some(pair) => pairs.push(pair),
            None => {
                if pairer.pop_oldest().is_none() {
                    break;
                }
            }
        }
    }
    Ok(pairs)
}

/// Blob detection and matching for one frame pair. Skippable failures
/// (too many points, coincident centroids) surface as errors here and are
/// logged by the caller; the paper's pipeline simply moves to the next pair.
fn correspondences(
    pair: &FramePair<f64>,
    band: &TemperatureBand<f64>,
    blob_options: &BlobOptions,
    match_options: &MatchOptions<f64>,
) -> Result<Vec<thermostereo::Correspondence64>, MatchError> {
    let left_blobs = detect_blobs(&pair.left, band, blob_options);
    let right_blobs = detect_blobs(&pair.right, band, blob_options);
    let left_set = PointSet::new(CameraId::Left, left_blobs)?;
    let right_set = PointSet::new(CameraId::Right, right_blobs)?;
    let result = match_points(&left_set, &right_set, match_options)?;
    Ok(result.pairs)
}
