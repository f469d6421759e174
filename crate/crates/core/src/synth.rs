//! Synthetic stereo thermal scenes: heat discs rendered through the rig
//! into low-resolution frames with per-pixel temperature averaging,
//! asynchronous timestamps, and optional Gaussian noise. Stands in for a
//! physical test rig when exercising the pipeline end to end.

use crate::geometry::{Point3, StereoRig};
use crate::scalar::Real;
use crate::thermal::{CameraId, ThermalFrame};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum SynthError {
    #[error("heat element must sit in front of the rig with positive radius and a temperature above ambient")]
    InvalidElement,
    #[error("frame rate and duration must be positive")]
    InvalidTiming,
    #[error("noise standard deviations must be non-negative and finite")]
    InvalidNoise,
    #[error("supersampling factor must be at least 1")]
    InvalidSupersampling,
    #[error("timestamp {t} outside the scene duration [0, {duration}]")]
    TimestampOutOfRange { t: f64, duration: f64 },
}

/// A Lambertian disc heat source facing the rig.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HeatElement<T> {
    /// Disc center in the rig frame, meters.
    pub position: Point3<T>,
    /// Disc radius, meters.
    pub radius: T,
    /// Surface temperature, degrees Celsius.
    pub temperature: T,
}

/// A complete synthetic measurement scene.
#[derive(Debug, Clone, PartialEq)]
pub struct SceneConfig<T> {
    rig: StereoRig<T>,
    elements: Vec<HeatElement<T>>,
    ambient: T,
    frame_rate: f64,
    phase_offset: f64,
    temperature_noise_std: T,
    centroid_jitter_std: T,
    duration: f64,
    rng_seed: u64,
    supersampling: u32,
}

impl<T: Real> SceneConfig<T> {
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        rig: StereoRig<T>,
        elements: Vec<HeatElement<T>>,
        ambient: T,
        frame_rate: f64,
        phase_offset: f64,
        temperature_noise_std: T,
        centroid_jitter_std: T,
        duration: f64,
        rng_seed: u64,
    ) -> Result<Self, SynthError> {
        for e in &elements {
            let physical = e.position.z.is_strictly_positive()
                && e.radius.is_strictly_positive()
                && e.temperature > ambient;
            if !physical {
                return Err(SynthError::InvalidElement);
            }
        }
        if !(frame_rate.is_strictly_positive()
            && duration.is_strictly_positive()
            && phase_offset.is_finite())
        {
            return Err(SynthError::InvalidTiming);
        }
        let noise_valid = temperature_noise_std >= T::zero()
            && temperature_noise_std.is_finite()
            && centroid_jitter_std >= T::zero()
            && centroid_jitter_std.is_finite();
        if !noise_valid {
            return Err(SynthError::InvalidNoise);
        }
        Ok(Self {
            rig,
            elements,
            ambient,
            frame_rate,
            phase_offset,
            temperature_noise_std,
            centroid_jitter_std,
            duration,
            rng_seed,
            supersampling: 8,
        })
    }

    pub fn with_supersampling(mut self, factor: u32) -> Result<Self, SynthError> {
        if factor == 0 {
            return Err(SynthError::InvalidSupersampling);
        }
        self.supersampling = factor;
        Ok(self)
    }

    pub fn rig(&self) -> &StereoRig<T> {
        &self.rig
    }

    pub fn elements(&self) -> &[HeatElement<T>] {
        &self.elements
    }

    pub fn ambient(&self) -> T {
        self.ambient
    }

    pub fn frame_rate(&self) -> f64 {
        self.frame_rate
    }

    pub fn phase_offset(&self) -> f64 {
        self.phase_offset
    }

    pub fn duration(&self) -> f64 {
        self.duration
    }

    pub fn rng_seed(&self) -> u64 {
        self.rng_seed
    }

    fn camera_phase(&self, camera: CameraId) -> f64 {
        match camera {
            CameraId::Left => 0.0,
            CameraId::Right => self.phase_offset,
        }
    }

    /// Frame timestamps of one camera over the scene duration.
    pub fn timestamps(&self, camera: CameraId) -> Vec<f64> {
        let phase = self.camera_phase(camera);
        let mut out = Vec::new();
        let mut k = 0u64;
        loop {
            let t = k as f64 / self.frame_rate + phase;
            if t > self.duration {
                break;
            }
            if t >= 0.0 {
                out.push(t);
            }
            k += 1;
        }
        out
    }
}

/// One independent RNG stream per (seed, camera, frame index) so frames can
/// be rendered in any order, or in parallel, without changing the output.
fn frame_rng(seed: u64, camera: CameraId, frame_index: u64) -> ChaCha8Rng {
    let mut bytes = [0u8; 32];
    bytes[..8].copy_from_slice(&seed.to_le_bytes());
    bytes[8] = match camera {
        CameraId::Left => 0,
        CameraId::Right => 1,
    };
    bytes[9..17].copy_from_slice(&frame_index.to_le_bytes());
    bytes[17..21].copy_from_slice(b"thst");
    ChaCha8Rng::from_seed(bytes)
}

/// Renders the scene into one camera's frame at time `t`.
///
/// Every element projects to a disc of `f*radius/z` pixels; each pixel
/// averages element and ambient temperature over a supersampling grid, the
/// nearer element winning where discs overlap. Optional Gaussian pixel
/// noise and per-element centroid jitter are drawn from an RNG stream
/// derived from (seed, camera, frame index).
pub fn render_frame<T: Real>(
    scene: &SceneConfig<T>,
    camera: CameraId,
    t: f64,
) -> Result<ThermalFrame<T>, SynthError> {
    if !(0.0..=scene.duration).contains(&t) {
        return Err(SynthError::TimestampOutOfRange {
            t,
            duration: scene.duration,
        });
    }
    let frame_index = ((t - scene.camera_phase(camera)) * scene.frame_rate)
        .round()
        .max(0.0) as u64;
    let mut rng = frame_rng(scene.rng_seed, camera, frame_index);

    let intr = scene.rig.intrinsics();
    let f = intr.focal_length_pixels();
    let pp = intr.principal_point();
    let half = T::from_f64_lossy(0.5);
    let half_b = scene.rig.baseline() * half;
    let cam_x = match camera {
        CameraId::Left => -half_b,
        CameraId::Right => half_b,
    };

    // Visible elements as image-space discs (center, radius^2, depth, temp).
    struct Disc<T> {
        u: T,
        v: T,
        radius_sq: T,
        z: T,
        temperature: T,
    }
    let jitter = scene.centroid_jitter_std;
    let mut discs: Vec<Disc<T>> = Vec::new();
    for e in &scene.elements {
        if !e.position.z.is_strictly_positive() {
            continue;
        }
        let mut u = pp.u + f * (e.position.x - cam_x) / e.position.z;
        let mut v = pp.v + f * e.position.y / e.position.z;
        if jitter > T::zero() {
            let normal =
                Normal::new(0.0, jitter.to_f64().expect("finite std")).expect("validated std");
            u = u + T::from_f64_lossy(normal.sample(&mut rng));
            v = v + T::from_f64_lossy(normal.sample(&mut rng));
        }
        let radius_px = f * e.radius / e.position.z;
        discs.push(Disc {
            u,
            v,
            radius_sq: radius_px * radius_px,
            z: e.position.z,
            temperature: e.temperature,
        });
    }

    let (w, h) = (intr.image_width() as usize, intr.image_height() as usize);
    let s = scene.supersampling as usize;
    let samples_per_pixel = T::from_count(s * s);
    let mut temperatures = Vec::with_capacity(w * h);
    for row in 0..h {
        for col in 0..w {
            let mut sum = T::zero();
            for sv in 0..s {
                for su in 0..s {
                    let du = (T::from_count(su) + half) / T::from_count(s) - half;
                    let dv = (T::from_count(sv) + half) / T::from_count(s) - half;
                    let u = T::from_count(col) + du;
                    let v = T::from_count(row) + dv;
                    let mut sample = scene.ambient;
                    let mut depth = T::infinity();
                    for disc in &discs {
                        let (ru, rv) = (u - disc.u, v - disc.v);
                        if ru * ru + rv * rv <= disc.radius_sq && disc.z < depth {
                            sample = disc.temperature;
                            depth = disc.z;
                        }
                    }
                    sum = sum + sample;
                }
            }
            temperatures.push(sum / samples_per_pixel);
        }
    }

    if scene.temperature_noise_std > T::zero() {
        let normal = Normal::new(
            0.0,
            scene.temperature_noise_std.to_f64().expect("finite std"),
        )
        .expect("validated std");
        for t in &mut temperatures {
            *t = *t + T::from_f64_lossy(normal.sample(&mut rng));
        }
    }

    Ok(ThermalFrame::new(camera, t, w, h, temperatures).expect("rendered frame is well-formed"))
}

/// A full left and right frame stream, in acquisition order.
pub type StereoStreams<T> = (Vec<ThermalFrame<T>>, Vec<ThermalFrame<T>>);

/// Renders both cameras' full frame streams. Left timestamps are `k/rate`,
/// right ones `k/rate + phase_offset`; everything is deterministic in the
/// scene seed.
pub fn generate_streams<T: Real>(scene: &SceneConfig<T>) -> Result<StereoStreams<T>, SynthError> {
    let render_all = |camera: CameraId| -> Result<Vec<ThermalFrame<T>>, SynthError> {
        scene
            .timestamps(camera)
            .into_iter()
            .map(|t| render_frame(scene, camera, t))
            .collect()
    };
    Ok((render_all(CameraId::Left)?, render_all(CameraId::Right)?))
}

/// Ground-truth record: where element `element_id` really was at time `t`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TruthRecord<T> {
    pub t: f64,
    pub element_id: usize,
    pub position: Point3<T>,
    pub temperature: T,
}

/// Ground truth sampled at every left-camera frame time.
pub fn ground_truth<T: Real>(scene: &SceneConfig<T>) -> Vec<TruthRecord<T>> {
    scene
        .timestamps(CameraId::Left)
        .into_iter()
        .flat_map(|t| {
            scene
                .elements
                .iter()
                .enumerate()
                .map(move |(id, e)| TruthRecord {
                    t,
                    element_id: id,
                    position: e.position,
                    temperature: e.temperature,
                })
        })
        .collect()
}
