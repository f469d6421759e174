//! The `theory` subcommand: tabulate the ideal disparity and the +/-1 px
//! depth interval over a distance range for one or more baselines,
//! producing plot-ready CSV.

use crate::config::PipelineConfig;
use anyhow::{ensure, Context, Result};
use std::fs::File;
use std::io::BufWriter;
use std::path::Path;
use thermostereo::geometry::StereoRig;
use thermostereo::io::format_float;

pub fn theory(
    config_path: &Path,
    z_min: f64,
    z_max: f64,
    z_step: f64,
    baselines: &[f64],
    out: &Path,
) -> Result<()> {
    ensure!(z_min > 0.0, "distance range must be positive");
    ensure!(z_max >= z_min, "z-max must not be below z-min");
    ensure!(z_step > 0.0, "z-step must be positive");

    let config_text = std::fs::read_to_string(config_path)
        .with_context(|| format!("reading config {}", config_path.display()))?;
    let config = PipelineConfig::from_json(&config_text)
        .with_context(|| format!("parsing config {}", config_path.display()))?;
    let rig = config.rig.build()?;
    let baselines: Vec<f64> = if baselines.is_empty() {
        vec![rig.baseline()]
    } else {
        baselines.to_vec()
    };

    let mut csv = csv::Writer::from_writer(BufWriter::new(
        File::create(out).with_context(|| format!("creating {}", out.display()))?,
    ));
    csv.write_record(["baseline", "z", "disparity", "z_min", "z_max"])?;

    let steps = ((z_max - z_min) / z_step + 1e-9).floor() as usize;
    for &baseline in &baselines {
        let rig_b = StereoRig::new(*rig.intrinsics(), baseline)
            .with_context(|| format!("baseline {baseline} is invalid"))?;
        for i in 0..=steps {
            let z = z_min + i as f64 * z_step;
            let disparity = rig_b.disparity_for_distance(z)?;
            let interval = rig_b.depth_bounds(z)?;
            csv.write_record([
                format_float(baseline),
                format_float(z),
                format_float(disparity),
                format_float(interval.nearest()),
                format_float(interval.farthest()),
            ])?;
        }
    }
    csv.flush()?;
    Ok(())
}
