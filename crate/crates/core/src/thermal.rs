//! Thermal frames and their reduction to heat points: radiometric
//! conversion, temperature-band filtering, connected-component blob
//! extraction with sub-pixel centroids, and min-skew frame pairing for the
//! two unsynchronized cameras.

use crate::scalar::Real;
use serde::{Deserialize, Serialize};
use std::collections::VecDeque;
use thiserror::Error;

/// Stefan-Boltzmann constant, W m^-2 K^-4.
pub const STEFAN_BOLTZMANN: f64 = 5.670374419e-8;

/// Offset between Celsius and Kelvin.
pub const CELSIUS_ZERO_KELVIN: f64 = 273.15;

/// Emissivity assumed by the sensor for common surfaces (plastic, iron,
/// glass). Highly reflective materials such as aluminum read lower.
pub const DEFAULT_EMISSIVITY: f64 = 0.95;

#[derive(Debug, Error, PartialEq)]
pub enum ThermalError {
    #[error("radiant intensity must be positive, got {0}")]
    NonPhysicalRadiance(f64),
    #[error("emissivity must lie in (0, 1], got {0}")]
    InvalidEmissivity(f64),
    #[error("frame data length {len} does not match {width}x{height}")]
    DimensionMismatch {
        len: usize,
        width: usize,
        height: usize,
    },
    #[error("frame contains a non-finite temperature")]
    NonFiniteTemperature,
    #[error("frame timestamp must be finite")]
    NonFiniteTimestamp,
    #[error("temperature band requires low < high")]
    InvalidBand,
    #[error("background sentinel must lie below the band")]
    SentinelInsideBand,
    #[error("frame for camera {camera} arrived out of time order ({timestamp} < {last})")]
    OutOfOrderFrame {
        camera: CameraId,
        timestamp: f64,
        last: f64,
    },
}

/// Which camera of the pair a frame or point came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CameraId {
    Left,
    Right,
}

impl std::fmt::Display for CameraId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CameraId::Left => write!(f, "left"),
            CameraId::Right => write!(f, "right"),
        }
    }
}

/// One timestamped temperature grid from one camera, row-major, degrees
/// Celsius. The sensor modeled here is 32x32 but any positive size works.
#[derive(Debug, Clone, PartialEq)]
pub struct ThermalFrame<T> {
    camera: CameraId,
    timestamp: f64,
    width: usize,
    height: usize,
    temperatures: Vec<T>,
}

impl<T: Real> ThermalFrame<T> {
    pub fn new(
        camera: CameraId,
        timestamp: f64,
        width: usize,
        height: usize,
        temperatures: Vec<T>,
    ) -> Result<Self, ThermalError> {
        if temperatures.len() != width * height || width == 0 || height == 0 {
            return Err(ThermalError::DimensionMismatch {
                len: temperatures.len(),
                width,
                height,
            });
        }
        if temperatures.iter().any(|t| !t.is_finite()) {
            return Err(ThermalError::NonFiniteTemperature);
        }
        Ok(Self {
            camera,
            timestamp,
            width,
            height,
            temperatures,
        })
    }

    pub fn camera(&self) -> CameraId {
        self.camera
    }

    pub fn timestamp(&self) -> f64 {
        self.timestamp
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    /// Temperature at column `u`, row `v`.
    pub fn at(&self, u: usize, v: usize) -> T {
        debug_assert!(u < self.width && v < self.height);
        self.temperatures[v * self.width + u]
    }

    /// Row-major temperature slice.
    pub fn temperatures(&self) -> &[T] {
        &self.temperatures
    }
}

/// Closed temperature interval of interest plus the sentinel that filtered
/// frames use for background pixels. The sentinel sits strictly below the
/// band so filtering is idempotent.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TemperatureBand<T> {
    low: T,
    high: T,
    background_sentinel: T,
}

impl<T: Real> TemperatureBand<T> {
    pub fn new(low: T, high: T, background_sentinel: T) -> Result<Self, ThermalError> {
        let band_ordered = low < high;
        if !band_ordered {
            return Err(ThermalError::InvalidBand);
        }
        let sentinel_below = background_sentinel < low;
        if !sentinel_below {
            return Err(ThermalError::SentinelInsideBand);
        }
        Ok(Self {
            low,
            high,
            background_sentinel,
        })
    }

    /// Band used throughout the experiments: overheated equipment above
    /// 125 C, capped at the sensor's practical ceiling, with absolute zero
    /// as the background marker.
    pub fn overheat_default() -> Self {
        Self::new(
            T::from_f64_lossy(125.0),
            T::from_f64_lossy(550.0),
            T::from_f64_lossy(-CELSIUS_ZERO_KELVIN),
        )
        .expect("default band is valid")
    }

    pub fn low(&self) -> T {
        self.low
    }

    pub fn high(&self) -> T {
        self.high
    }

    pub fn background_sentinel(&self) -> T {
        self.background_sentinel
    }

    pub fn contains(&self, temperature: T) -> bool {
        temperature >= self.low && temperature <= self.high
    }
}

/// Sub-pixel centroid of one connected over-threshold blob, with the blob's
/// mean temperature kept for later disambiguation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HeatPoint<T> {
    pub u: T,
    pub v: T,
    pub mean_temperature: T,
    pub pixel_count: usize,
    pub camera: CameraId,
}

/// A left/right frame pair selected for matching.
#[derive(Debug, Clone, PartialEq)]
pub struct FramePair<T> {
    pub left: ThermalFrame<T>,
    pub right: ThermalFrame<T>,
    /// Acquisition-time difference `|t_left - t_right|`.
    pub skew: f64,
}

impl<T> FramePair<T> {
    /// Midpoint of the two acquisition times; used to timestamp estimates.
    pub fn timestamp(&self) -> f64
    where
        T: Real,
    {
        (self.left.timestamp() + self.right.timestamp()) * 0.5
    }
}

/// Inverts the Stefan-Boltzmann law: raw IR radiant intensity (W/m^2) and a
/// surface emissivity in (0, 1] give the temperature in degrees Celsius.
pub fn intensity_to_temperature<T: Real>(intensity: T, emissivity: T) -> Result<T, ThermalError> {
    let emissivity_in_range = emissivity > T::zero() && emissivity <= T::one();
    if !emissivity_in_range {
        return Err(ThermalError::InvalidEmissivity(
            emissivity.to_f64().unwrap_or(f64::NAN),
        ));
    }
    if !intensity.is_strictly_positive() {
        return Err(ThermalError::NonPhysicalRadiance(
            intensity.to_f64().unwrap_or(f64::NAN),
        ));
    }
    let sigma = T::from_f64_lossy(STEFAN_BOLTZMANN);
    let kelvin = (intensity / (emissivity * sigma)).powf(T::from_f64_lossy(0.25));
    Ok(kelvin - T::from_f64_lossy(CELSIUS_ZERO_KELVIN))
}

/// Replaces every pixel outside the band with the background sentinel.
/// Idempotent: the sentinel itself is outside the band.
pub fn filter_frame<T: Real>(
    frame: &ThermalFrame<T>,
    band: &TemperatureBand<T>,
) -> ThermalFrame<T> {
    let temperatures = frame
        .temperatures
        .iter()
        .map(|&t| {
            if band.contains(t) {
                t
            } else {
                band.background_sentinel()
            }
        })
        .collect();
    ThermalFrame {
        camera: frame.camera,
        timestamp: frame.timestamp,
        width: frame.width,
        height: frame.height,
        temperatures,
    }
}

/// How blob centroids weight their member pixels.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CentroidWeighting {
    /// Weight each pixel by `T - band.low + 1` so hotter pixels pull the
    /// centroid harder. Degrades to the uniform centroid for uniform blobs.
    Temperature,
    /// Plain arithmetic mean of member pixel centers.
    Uniform,
}

/// Knobs for [`detect_blobs`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BlobOptions {
    /// Components smaller than this are dropped. Targets can subtend a
    /// single pixel at range, so the default keeps everything.
    pub min_blob_pixels: usize,
    pub weighting: CentroidWeighting,
}

impl Default for BlobOptions {
    fn default() -> Self {
        Self {
            min_blob_pixels: 1,
            weighting: CentroidWeighting::Temperature,
        }
    }
}

/// Extracts 8-connected components of in-band pixels as heat points.
///
/// The frame is band-filtered internally, so callers may pass raw frames.
/// Output is sorted by descending pixel count, ties by ascending centroid
/// `(u, v)`, so downstream matching sees a deterministic order.
pub fn detect_blobs<T: Real>(
    frame: &ThermalFrame<T>,
    band: &TemperatureBand<T>,
    options: &BlobOptions,
) -> Vec<HeatPoint<T>> {
    let (w, h) = (frame.width, frame.height);
    let in_band = |idx: usize| band.contains(frame.temperatures[idx]);
    let mut visited = vec![false; w * h];
    let mut blobs = Vec::new();
    let mut stack = Vec::new();

    for start in 0..w * h {
        if visited[start] || !in_band(start) {
            continue;
        }
        // Flood fill one component over the 8-neighborhood.
        let mut members = Vec::new();
        visited[start] = true;
        stack.push(start);
        while let Some(idx) = stack.pop() {
            members.push(idx);
            let (u, v) = (idx % w, idx / w);
            for dv in -1isize..=1 {
                for du in -1isize..=1 {
                    if du == 0 && dv == 0 {
                        continue;
                    }
                    let (nu, nv) = (u as isize + du, v as isize + dv);
                    if nu < 0 || nv < 0 || nu >= w as isize || nv >= h as isize {
                        continue;
                    }
                    let nidx = nv as usize * w + nu as usize;
                    if !visited[nidx] && in_band(nidx) {
                        visited[nidx] = true;
                        stack.push(nidx);
                    }
                }
            }
        }
        if members.len() < options.min_blob_pixels {
            continue;
        }

        let mut weight_sum = T::zero();
        let mut u_sum = T::zero();
        let mut v_sum = T::zero();
        let mut temp_sum = T::zero();
        for &idx in &members {
            let t = frame.temperatures[idx];
            let weight = match options.weighting {
                CentroidWeighting::Temperature => t - band.low() + T::one(),
                CentroidWeighting::Uniform => T::one(),
            };
            weight_sum = weight_sum + weight;
            u_sum = u_sum + weight * T::from_count(idx % w);
            v_sum = v_sum + weight * T::from_count(idx / w);
            temp_sum = temp_sum + t;
        }
        blobs.push(HeatPoint {
            u: u_sum / weight_sum,
            v: v_sum / weight_sum,
            mean_temperature: temp_sum / T::from_count(members.len()),
            pixel_count: members.len(),
            camera: frame.camera,
        });
    }

    blobs.sort_by(|a, b| {
        b.pixel_count
            .cmp(&a.pixel_count)
            .then(a.u.partial_cmp(&b.u).expect("finite centroid"))
            .then(a.v.partial_cmp(&b.v).expect("finite centroid"))
    });
    blobs
}

/// Pairs frames from the two unsynchronized cameras by minimal acquisition
/// skew.
///
/// Frames are pushed per camera in time order; [`FramePairer::select`]
/// consumes the buffered pair with the smallest `|t_left - t_right|`,
/// discarding everything older on both sides. Producers on separate threads
/// must serialize access (e.g. behind a `Mutex`); the methods take
/// `&mut self` so unsynchronized sharing cannot compile.
#[derive(Debug, Clone)]
pub struct FramePairer<T> {
    max_skew: f64,
    left: VecDeque<ThermalFrame<T>>,
    right: VecDeque<ThermalFrame<T>>,
}

impl<T: Real> FramePairer<T> {
    pub fn new(max_skew: f64) -> Self {
        Self {
            max_skew,
            left: VecDeque::new(),
            right: VecDeque::new(),
        }
    }

    pub fn max_skew(&self) -> f64 {
        self.max_skew
    }

    /// Buffers one frame. Each camera's stream must be time-ordered.
    pub fn push(&mut self, frame: ThermalFrame<T>) -> Result<(), ThermalError> {
        let queue = match frame.camera() {
            CameraId::Left => &mut self.left,
            CameraId::Right => &mut self.right,
        };
        if let Some(last) = queue.back() {
            if frame.timestamp() < last.timestamp() {
                return Err(ThermalError::OutOfOrderFrame {
                    camera: frame.camera(),
                    timestamp: frame.timestamp(),
                    last: last.timestamp(),
                });
            }
        }
        queue.push_back(frame);
        Ok(())
    }

    /// Skew and timestamps of the current best pair, without consuming it.
    /// Reports the best pair even when its skew exceeds the limit so that
    /// callers can decide to evict.
    pub fn peek_best(&self) -> Option<PendingPair> {
        let mut best: Option<PendingPair> = None;
        for l in &self.left {
            for r in &self.right {
                let candidate = PendingPair {
                    skew: (l.timestamp() - r.timestamp()).abs(),
                    left_timestamp: l.timestamp(),
                    right_timestamp: r.timestamp(),
                };
                let better = match &best {
                    None => true,
                    Some(b) => {
                        (
                            candidate.skew,
                            candidate.left_timestamp,
                            candidate.right_timestamp,
                        ) < (b.skew, b.left_timestamp, b.right_timestamp)
                    }
                };
                if better {
                    best = Some(candidate);
                }
            }
        }
        best
    }

    /// Consumes the minimum-skew pair among the buffered frames, dropping
    /// all older frames on both sides. `None` when no pair is buffered or
    /// the best skew exceeds the limit (nothing is discarded then).
    pub fn select(&mut self) -> Option<FramePair<T>> {
        let best = self.peek_best()?;
        if best.skew > self.max_skew {
            return None;
        }
        let left_idx = self
            .left
            .iter()
            .position(|f| f.timestamp() == best.left_timestamp)?;
        let right_idx = self
            .right
            .iter()
            .position(|f| f.timestamp() == best.right_timestamp)?;
        let left = self.left[left_idx].clone();
        let right = self.right[right_idx].clone();
        self.left.drain(..=left_idx);
        self.right.drain(..=right_idx);
        Some(FramePair {
            skew: best.skew,
            left,
            right,
        })
    }

    /// Evicts the single oldest buffered frame (used to drain frames that
    /// can never pair within the skew limit).
    pub fn pop_oldest(&mut self) -> Option<ThermalFrame<T>> {
        match (self.left.front(), self.right.front()) {
            (Some(l), Some(r)) => {
                if l.timestamp() <= r.timestamp() {
                    self.left.pop_front()
                } else {
                    self.right.pop_front()
                }
            }
            (Some(_), None) => self.left.pop_front(),
            (None, Some(_)) => self.right.pop_front(),
            (None, None) => None,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.left.is_empty() && self.right.is_empty()
    }
}

/// Best currently-buffered pairing, as reported by [`FramePairer::peek_best`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PendingPair {
    pub skew: f64,
    pub left_timestamp: f64,
    pub right_timestamp: f64,
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn frame(camera: CameraId, t: f64, temps: Vec<f64>) -> ThermalFrame<f64> {
        let side = (temps.len() as f64).sqrt() as usize;
        ThermalFrame::new(camera, t, side, side, temps).unwrap()
    }

    fn uniform(camera: CameraId, t: f64, size: usize, value: f64) -> ThermalFrame<f64> {
        ThermalFrame::new(camera, t, size, size, vec![value; size * size]).unwrap()
    }

    fn band() -> TemperatureBand<f64> {
        TemperatureBand::new(125.0, 500.0, -273.15).unwrap()
    }

    #[test]
    fn stefan_boltzmann_inversion() {
        // Forward law evaluated independently: I = 0.95 * sigma * 398.15^4.
        let t = intensity_to_temperature::<f64>(1353.699355555836, DEFAULT_EMISSIVITY).unwrap();
        assert!((t - 125.0).abs() < 0.1);

        let t0 = intensity_to_temperature(STEFAN_BOLTZMANN * 273.15f64.powi(4), 1.0).unwrap();
        assert_relative_eq!(t0, 0.0, epsilon = 1e-9);
    }

    #[test]
    fn lower_emissivity_raises_reading() {
        let hot = intensity_to_temperature(1000.0, 0.5).unwrap();
        let cool = intensity_to_temperature(1000.0, 0.95).unwrap();
        assert!(hot > cool);
    }

    #[test]
    fn radiometric_errors() {
        assert!(matches!(
            intensity_to_temperature(-1.0, 0.95),
            Err(ThermalError::NonPhysicalRadiance(_))
        ));
        assert!(matches!(
            intensity_to_temperature(100.0, 0.0),
            Err(ThermalError::InvalidEmissivity(_))
        ));
        assert!(matches!(
            intensity_to_temperature(100.0, 1.5),
            Err(ThermalError::InvalidEmissivity(_))
        ));
    }

    #[test]
    fn band_validation() {
        assert!(TemperatureBand::new(125.0, 125.0, -273.15).is_err());
        assert!(TemperatureBand::new(125.0, 500.0, 125.0).is_err());
        assert!(TemperatureBand::new(125.0, 500.0, 124.9).is_ok());
    }

    #[test]
    fn filter_uniform_cold_frame() {
        let f = uniform(CameraId::Left, 0.0, 8, 20.0);
        let filtered = filter_frame(&f, &band());
        assert!(filtered.temperatures().iter().all(|&t| t == -273.15));
    }

    #[test]
    fn filter_keeps_single_hot_pixel() {
        let mut temps = vec![20.0; 64];
        temps[3 * 8 + 5] = 150.0;
        let f = frame(CameraId::Left, 0.0, temps);
        let filtered = filter_frame(&f, &band());
        assert_eq!(filtered.at(5, 3), 150.0);
        assert_eq!(filtered.at(0, 0), -273.15);
    }

    #[test]
    fn filter_band_edges_are_closed() {
        let f = frame(CameraId::Left, 0.0, vec![120.0, 125.0, 500.0, 501.0]);
        let filtered = filter_frame(&f, &band());
        assert_eq!(filtered.temperatures(), &[-273.15, 125.0, 500.0, -273.15]);
    }

    #[test]
    fn filter_is_idempotent() {
        let mut temps: Vec<f64> = (0..64).map(|i| i as f64 * 10.0).collect();
        temps[10] = 130.0;
        let f = frame(CameraId::Left, 0.0, temps);
        let once = filter_frame(&f, &band());
        let twice = filter_frame(&once, &band());
        assert_eq!(once, twice);
    }

    #[test]
    fn single_hot_pixel_blob() {
        let mut temps = vec![20.0; 32 * 32];
        temps[7 * 32 + 10] = 150.0;
        let f = ThermalFrame::new(CameraId::Left, 0.0, 32, 32, temps).unwrap();
        let blobs = detect_blobs(&f, &band(), &BlobOptions::default());
        assert_eq!(blobs.len(), 1);
        assert_eq!(blobs[0].u, 10.0);
        assert_eq!(blobs[0].v, 7.0);
        assert_eq!(blobs[0].pixel_count, 1);
        assert_eq!(blobs[0].mean_temperature, 150.0);
    }

    #[test]
    fn uniform_square_blob_centroid() {
        let mut temps = vec![20.0; 32 * 32];
        for v in 7..9 {
            for u in 10..12 {
                temps[v * 32 + u] = 200.0;
            }
        }
        let f = ThermalFrame::new(CameraId::Left, 0.0, 32, 32, temps).unwrap();
        let blobs = detect_blobs(&f, &band(), &BlobOptions::default());
        assert_eq!(blobs.len(), 1);
        assert_relative_eq!(blobs[0].u, 10.5);
        assert_relative_eq!(blobs[0].v, 7.5);
        assert_eq!(blobs[0].pixel_count, 4);
    }

    #[test]
    fn diagonal_pixels_are_disconnected_beyond_one_step() {
        let mut temps = vec![20.0; 32 * 32];
        temps[0] = 150.0; // (0, 0)
        temps[2 * 32 + 2] = 150.0; // (2, 2)
        let f = ThermalFrame::new(CameraId::Left, 0.0, 32, 32, temps).unwrap();
        let blobs = detect_blobs(&f, &band(), &BlobOptions::default());
        assert_eq!(blobs.len(), 2);
    }

    #[test]
    fn diagonal_neighbors_are_connected() {
        let mut temps = vec![20.0; 32 * 32];
        temps[0] = 150.0;
        temps[33] = 150.0; // (1, 1)
        let f = ThermalFrame::new(CameraId::Left, 0.0, 32, 32, temps).unwrap();
        let blobs = detect_blobs(&f, &band(), &BlobOptions::default());
        assert_eq!(blobs.len(), 1);
        assert_eq!(blobs[0].pixel_count, 2);
    }

    #[test]
    fn weighted_centroid_leans_toward_hot_pixel() {
        let mut temps = vec![20.0; 32 * 32];
        temps[5 * 32 + 5] = 400.0;
        temps[5 * 32 + 6] = 130.0;
        let f = ThermalFrame::new(CameraId::Left, 0.0, 32, 32, temps).unwrap();
        let weighted = detect_blobs(&f, &band(), &BlobOptions::default());
        let uniform = detect_blobs(
            &f,
            &band(),
            &BlobOptions {
                weighting: CentroidWeighting::Uniform,
                ..Default::default()
            },
        );
        // w(400) = 276, w(130) = 6 -> centroid u = 5 + 6/282.
        assert_relative_eq!(weighted[0].u, 5.0 + 6.0 / 282.0, epsilon = 1e-12);
        assert_relative_eq!(uniform[0].u, 5.5);
        assert_relative_eq!(weighted[0].mean_temperature, 265.0);
    }

    #[test]
    fn min_blob_pixels_drops_specks() {
        let mut temps = vec![20.0; 32 * 32];
        temps[0] = 150.0;
        for u in 10..13 {
            temps[5 * 32 + u] = 150.0;
        }
        let f = ThermalFrame::new(CameraId::Left, 0.0, 32, 32, temps).unwrap();
        let opts = BlobOptions {
            min_blob_pixels: 2,
            ..Default::default()
        };
        let blobs = detect_blobs(&f, &band(), &opts);
        assert_eq!(blobs.len(), 1);
        assert_eq!(blobs[0].pixel_count, 3);
    }

    #[test]
    fn pairer_picks_minimum_skew() {
        let mut pairer = FramePairer::new(0.5);
        pairer.push(uniform(CameraId::Left, 1.00, 4, 20.0)).unwrap();
        pairer
            .push(uniform(CameraId::Right, 0.90, 4, 20.0))
            .unwrap();
        pairer
            .push(uniform(CameraId::Right, 1.02, 4, 20.0))
            .unwrap();
        let pair = pairer.select().unwrap();
        assert_eq!(pair.right.timestamp(), 1.02);
        assert_relative_eq!(pair.skew, 0.02, epsilon = 1e-12);
        // The older right frame was discarded along with the consumed ones.
        assert!(pairer.is_empty());
    }

    #[test]
    fn pairer_rejects_excessive_skew() {
        let mut pairer = FramePairer::new(0.5);
        pairer.push(uniform(CameraId::Left, 1.0, 4, 20.0)).unwrap();
        pairer.push(uniform(CameraId::Right, 2.0, 4, 20.0)).unwrap();
        assert!(pairer.select().is_none());
        assert!(!pairer.is_empty());
    }

    #[test]
    fn pairer_global_argmin_over_buffer() {
        let mut pairer = FramePairer::new(0.5);
        pairer.push(uniform(CameraId::Left, 1.0, 4, 20.0)).unwrap();
        pairer.push(uniform(CameraId::Left, 1.1, 4, 20.0)).unwrap();
        pairer
            .push(uniform(CameraId::Right, 1.04, 4, 20.0))
            .unwrap();
        let pair = pairer.select().unwrap();
        assert_eq!(pair.left.timestamp(), 1.0);
        assert_eq!(pair.right.timestamp(), 1.04);
        assert_relative_eq!(pair.skew, 0.04, epsilon = 1e-12);
        // Left 1.1 is newer than the consumed pair and must survive.
        assert!(!pairer.is_empty());
        assert!(pairer.select().is_none());
    }

    #[test]
    fn pairer_rejects_out_of_order_frames() {
        let mut pairer = FramePairer::new(0.5);
        pairer.push(uniform(CameraId::Left, 2.0, 4, 20.0)).unwrap();
        assert!(matches!(
            pairer.push(uniform(CameraId::Left, 1.0, 4, 20.0)),
            Err(ThermalError::OutOfOrderFrame { .. })
        ));
    }

    #[test]
    fn frame_validation() {
        assert!(ThermalFrame::new(CameraId::Left, 0.0, 4, 4, vec![0.0; 15]).is_err());
        assert!(ThermalFrame::new(CameraId::Left, 0.0, 4, 4, vec![f64::NAN; 16]).is_err());
    }
}
