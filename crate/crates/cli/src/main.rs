//! `thermostereo` command line: replay stereo thermal frame streams into
//! 3D target estimates (`run`), render synthetic scenes (`simulate`), and
//! tabulate the theoretical disparity/error curves (`theory`).

mod config;
mod pipeline;
mod simulate;
mod theory;

use clap::{Parser, Subcommand};
use std::path::PathBuf;

#[derive(Parser)]
#[command(
    name = "thermostereo",
    version,
    about = "Stereo thermal detection and 3D localization of overheated targets"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Replay left/right frame streams through the full pipeline.
    Run {
        /// Pipeline configuration (JSON).
        #[arg(long)]
        config: PathBuf,
        /// Left-camera frame stream (newline-delimited JSON).
        #[arg(long)]
        left: PathBuf,
        /// Right-camera frame stream (newline-delimited JSON).
        #[arg(long)]
        right: PathBuf,
        /// Per-estimate CSV output (falls back to the config).
        #[arg(long)]
        out_estimates: Option<PathBuf>,
        /// Windowed statistics CSV output (falls back to the config).
        #[arg(long)]
        out_stats: Option<PathBuf>,
    },
    /// Tabulate ideal disparity and the +/-1 px depth interval.
    Theory {
        /// Pipeline configuration (JSON); supplies the rig.
        #[arg(long)]
        config: PathBuf,
        #[arg(long, default_value_t = 1.0)]
        z_min: f64,
        #[arg(long, default_value_t = 8.0)]
        z_max: f64,
        #[arg(long, default_value_t = 0.1)]
        z_step: f64,
        /// Baselines in meters, comma separated; defaults to the rig's.
        #[arg(long, value_delimiter = ',')]
        baselines: Vec<f64>,
        /// Output CSV path.
        #[arg(long)]
        out: PathBuf,
    },
    /// Render a synthetic scene into frame streams plus ground truth.
    Simulate {
        /// Scene description (JSON).
        #[arg(long)]
        scene: PathBuf,
        /// Left-camera frame stream output.
        #[arg(long)]
        left: PathBuf,
        /// Right-camera frame stream output.
        #[arg(long)]
        right: PathBuf,
        /// Ground-truth CSV output.
        #[arg(long)]
        out_truth: PathBuf,
        /// Overrides the seed stored in the scene file.
        #[arg(long)]
        seed: Option<u64>,
    },
}

fn main() {
    env_logger::Builder::from_env(env_logger::Env::new().filter_or("THERMOSTEREO_LOG", "warn"))
        .init();

    let cli = Cli::parse();
    let result = match cli.command {
        Command::Run {
            config,
            left,
            right,
            out_estimates,
            out_stats,
        } => pipeline::run(
            &config,
            &left,
            &right,
            out_estimates.as_deref(),
            out_stats.as_deref(),
        ),
        Command::Theory {
            config,
            z_min,
            z_max,
            z_step,
            baselines,
            out,
        } => theory::theory(&config, z_min, z_max, z_step, &baselines, &out),
        Command::Simulate {
            scene,
            left,
            right,
            out_truth,
            seed,
        } => simulate::simulate(&scene, &left, &right, &out_truth, seed),
    };

    if let Err(err) = result {
        eprintln!("error: {err:#}");
        std::process::exit(1);
    }
}
