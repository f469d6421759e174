//! The `simulate` subcommand: render a scene description into the two
//! frame-stream files plus a ground-truth CSV.

use anyhow::{Context, Result};
use log::info;
use std::fs::File;
use std::io::BufWriter;
use std::path::Path;
use thermostereo::io::{write_frame_stream, write_truth_csv, SceneFile};
use thermostereo::synth::{generate_streams, ground_truth};

pub fn simulate(
    scene_path: &Path,
    left_out: &Path,
    right_out: &Path,
    truth_out: &Path,
    seed: Option<u64>,
) -> Result<()> {
    let scene_text = std::fs::read_to_string(scene_path)
        .with_context(|| format!("reading scene {}", scene_path.display()))?;
    let scene = SceneFile::from_json(&scene_text)?
        .build(seed)
        .with_context(|| format!("building scene {}", scene_path.display()))?;

    let (left, right) = generate_streams(&scene)?;
    info!(
        "rendered {} left and {} right frames over {} s",
        left.len(),
        right.len(),
        scene.duration()
    );

    let mut left_writer = BufWriter::new(
        File::create(left_out).with_context(|| format!("creating {}", left_out.display()))?,
    );
    write_frame_stream(&mut left_writer, &left)?;
    let mut right_writer = BufWriter::new(
        File::create(right_out).with_context(|| format!("creating {}", right_out.display()))?,
    );
    write_frame_stream(&mut right_writer, &right)?;

    write_truth_csv(
        BufWriter::new(
            File::create(truth_out).with_context(|| format!("creating {}", truth_out.display()))?,
        ),
        &ground_truth(&scene),
    )?;
    Ok(())
}
