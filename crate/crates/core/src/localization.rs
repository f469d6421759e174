//! From correspondences to relative 3D target estimates, plus the
//! frame-to-frame label association and windowed mean/std statistics used
//! to evaluate measurement runs.

use crate::geometry::{DepthInterval, GeometryError, Point3, StereoRig};
use crate::matcher::Correspondence;
use crate::scalar::Real;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum LocalizationError {
    #[error("degenerate correspondence: horizontal disparity {0} is not positive")]
    DegenerateCorrespondence(f64),
    #[error("association gate radius must be positive")]
    InvalidGate,
    #[error("stats window must be positive")]
    InvalidWindow,
}

/// Relative 3D position of one heat source, in the rig frame (origin midway
/// between the cameras, z along the optical axes), with the depth bracket
/// induced by the +/-1 px disparity error.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TargetEstimate<T> {
    pub position: Point3<T>,
    pub depth_interval: DepthInterval<T>,
    pub mean_temperature: T,
    /// The measured horizontal disparity the depth was derived from.
    pub disparity: T,
    pub timestamp: f64,
}

/// Triangulates one correspondence.
///
/// Depth is `z = f*b/d` with `d = u_left - u_right`; the lateral
/// coordinates back-project the midpoint of the two image positions, which
/// corresponds to the rig-center ray. The depth interval applies the +/-1 px
/// error model at the measured disparity: `[f*b/(d+1), f*b/(d-1)]`, the far
/// bound unbounded once `d <= 1`.
pub fn estimate_target<T: Real>(
    rig: &StereoRig<T>,
    pair: &Correspondence<T>,
    timestamp: f64,
) -> Result<TargetEstimate<T>, LocalizationError> {
    let disparity = pair.horizontal_disparity();
    if !disparity.is_strictly_positive() {
        return Err(LocalizationError::DegenerateCorrespondence(
            disparity.to_f64().unwrap_or(f64::NAN),
        ));
    }
    let f = rig.intrinsics().focal_length_pixels();
    let fb = rig.focal_baseline();
    let pp = rig.intrinsics().principal_point();
    let half = T::from_f64_lossy(0.5);

    let z = fb / disparity;
    let u_mid = (pair.left.u + pair.right.u) * half;
    let v_mid = (pair.left.v + pair.right.v) * half;
    let position = Point3::new(z * (u_mid - pp.u) / f, z * (v_mid - pp.v) / f, z);

    let nearest = fb / (disparity + T::one());
    let farthest = if disparity > T::one() {
        fb / (disparity - T::one())
    } else {
        T::infinity()
    };
    let depth_interval = DepthInterval::new(nearest, z, farthest).map_err(|_: GeometryError| {
        LocalizationError::DegenerateCorrespondence(disparity.to_f64().unwrap_or(f64::NAN))
    })?;

    Ok(TargetEstimate {
        position,
        depth_interval,
        mean_temperature: (pair.left.mean_temperature + pair.right.mean_temperature) * half,
        disparity,
        timestamp,
    })
}

/// A target estimate with its persistent track label.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LabeledEstimate<T> {
    pub label: u32,
    pub estimate: TargetEstimate<T>,
}

/// Frame-to-frame nearest-neighbor association of estimates.
///
/// Each new frame's estimates are matched against the previous frame's
/// labeled positions, closest distance first, within the gate radius.
/// Anything unassociated starts a new label, so a target that skips a frame
/// reappears under a fresh label.
#[derive(Debug, Clone)]
pub struct TargetLabeler<T> {
    gate_radius: T,
    next_label: u32,
    previous: Vec<(u32, Point3<T>)>,
}

impl<T: Real> TargetLabeler<T> {
    pub fn new(gate_radius: T) -> Result<Self, LocalizationError> {
        if !gate_radius.is_strictly_positive() {
            return Err(LocalizationError::InvalidGate);
        }
        Ok(Self {
            gate_radius,
            next_label: 0,
            previous: Vec::new(),
        })
    }

    /// Labels one frame worth of estimates.
    pub fn label_frame(&mut self, estimates: Vec<TargetEstimate<T>>) -> Vec<LabeledEstimate<T>> {
        // All candidate (distance, new index, old slot) edges within the
        // gate, assigned greedily by ascending distance. Index order breaks
        // exact distance ties deterministically.
        let mut edges: Vec<(T, usize, usize)> = Vec::new();
        for (i, est) in estimates.iter().enumerate() {
            for (j, (_, pos)) in self.previous.iter().enumerate() {
                let d = est.position.distance(pos);
                if d <= self.gate_radius {
                    edges.push((d, i, j));
                }
            }
        }
        edges.sort_by(|a, b| {
            a.0.partial_cmp(&b.0)
                .expect("finite distances")
                .then(a.1.cmp(&b.1))
                .then(a.2.cmp(&b.2))
        });

        let mut label_of: Vec<Option<u32>> = vec![None; estimates.len()];
        let mut taken = vec![false; self.previous.len()];
        for (_, i, j) in edges {
            if label_of[i].is_none() && !taken[j] {
                label_of[i] = Some(self.previous[j].0);
                taken[j] = true;
            }
        }

        let labeled: Vec<LabeledEstimate<T>> = estimates
            .into_iter()
            .zip(label_of)
            .map(|(estimate, label)| {
                let label = label.unwrap_or_else(|| {
                    let fresh = self.next_label;
                    self.next_label += 1;
                    fresh
                });
                LabeledEstimate { label, estimate }
            })
            .collect();

        self.previous = labeled
            .iter()
            .map(|le| (le.label, le.estimate.position))
            .collect();
        labeled
    }
}

/// Convenience wrapper labeling a whole run of per-frame estimate lists.
pub fn label_targets<T: Real>(
    frames: impl IntoIterator<Item = Vec<TargetEstimate<T>>>,
    gate_radius: T,
) -> Result<Vec<Vec<LabeledEstimate<T>>>, LocalizationError> {
    let mut labeler = TargetLabeler::new(gate_radius)?;
    Ok(frames.into_iter().map(|f| labeler.label_frame(f)).collect())
}

/// Windowed depth statistics for one label.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WindowStats<T> {
    pub label: u32,
    /// Start of the window; windows tile the time axis from t = 0 so that
    /// statistics do not depend on where a recording was cut.
    pub window_start: f64,
    pub count: usize,
    pub mean_distance: T,
    /// Sample standard deviation (n-1 denominator), zero for a single sample.
    pub std_distance: T,
}

/// Per-label mean and sample standard deviation of the estimated depth `z`
/// over fixed windows of `window` seconds. Output is sorted by window
/// start, then label.
pub fn accumulate_stats<T: Real>(
    estimates: &[LabeledEstimate<T>],
    window: f64,
) -> Result<Vec<WindowStats<T>>, LocalizationError> {
    if !(window.is_strictly_positive() && window.is_finite()) {
        return Err(LocalizationError::InvalidWindow);
    }
    let mut groups: Vec<((i64, u32), Vec<T>)> = Vec::new();
    for le in estimates {
        let window_index = (le.estimate.timestamp / window).floor() as i64;
        let key = (window_index, le.label);
        match groups.iter_mut().find(|(k, _)| *k == key) {
            Some((_, zs)) => zs.push(le.estimate.position.z),
            None => groups.push((key, vec![le.estimate.position.z])),
        }
    }
    groups.sort_by_key(|(k, _)| *k);

    Ok(groups
        .into_iter()
        .map(|((window_index, label), zs)| {
            let n = T::from_count(zs.len());
            let mean = zs.iter().fold(T::zero(), |acc, &z| acc + z) / n;
            let std = if zs.len() > 1 {
                let ss = zs
                    .iter()
                    .fold(T::zero(), |acc, &z| acc + (z - mean) * (z - mean));
                (ss / (n - T::one())).sqrt()
            } else {
                T::zero()
            };
            WindowStats {
                label,
                window_start: window_index as f64 * window,
                count: zs.len(),
                mean_distance: mean,
                std_distance: std,
            }
        })
        .collect())
}
