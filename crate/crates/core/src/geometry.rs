//! Ideal aligned pinhole stereo geometry.
//!
//! Both cameras are identical and axis-aligned (rectified geometry), so the
//! whole rig is described by one set of intrinsics plus a metric baseline.
//! Depth follows from disparity as `z = f*b/d`, and the +/-1 px disparity
//! quantization induces the depth interval `[f*b/(d+1), f*b/(d-1)]` that
//! every estimate carries around.

use crate::scalar::Real;
use thiserror::Error;

/// Errors from rig construction and the projective operations.
#[derive(Debug, Error, PartialEq)]
pub enum GeometryError {
    #[error("image dimensions must be positive, got {width}x{height}")]
    InvalidImageSize { width: u32, height: u32 },
    #[error("horizontal field of view must lie in (0, pi) radians")]
    InvalidFov,
    #[error("baseline must be positive and finite")]
    InvalidBaseline,
    #[error("point is behind the camera (z <= 0)")]
    PointBehindCamera,
    #[error("distance must be positive")]
    NonPositiveDistance,
    #[error("disparity must be positive (target at infinity or degenerate correspondence)")]
    NonPositiveDisparity,
    #[error("target too close: both fields of view cannot contain it")]
    TargetTooClose,
}

/// A 3D point in the rig frame: origin midway between the camera centers,
/// x to the right, y down, z along the shared optical axes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point3<T> {
    pub x: T,
    pub y: T,
    pub z: T,
}

impl<T> Point3<T> {
    pub fn new(x: T, y: T, z: T) -> Self {
        Self { x, y, z }
    }
}

impl<T: Real> Point3<T> {
    /// Euclidean distance to another point.
    pub fn distance(&self, other: &Self) -> T {
        let dx = self.x - other.x;
        let dy = self.y - other.y;
        let dz = self.z - other.z;
        (dx * dx + dy * dy + dz * dz).sqrt()
    }
}

/// Continuous image coordinates in pixels. Integer pixel `(i, j)` has its
/// center at `(i, j)`; a `WxH` image spans `[-0.5, W-0.5) x [-0.5, H-0.5)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ImagePoint<T> {
    pub u: T,
    pub v: T,
}

impl<T> ImagePoint<T> {
    pub fn new(u: T, v: T) -> Self {
        Self { u, v }
    }
}

/// Pinhole intrinsics shared by both cameras of the rig.
///
/// Square pixels are assumed: the focal length derived from the horizontal
/// field of view applies to both axes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CameraIntrinsics<T> {
    image_width: u32,
    image_height: u32,
    fov_horizontal: T,
    principal_point: ImagePoint<T>,
}

impl<T: Real> CameraIntrinsics<T> {
    /// Intrinsics with the principal point at the geometric image center
    /// `(W/2 - 0.5, H/2 - 0.5)` under the pixel-center convention.
    pub fn new(
        image_width: u32,
        image_height: u32,
        fov_horizontal: T,
    ) -> Result<Self, GeometryError> {
        if image_width == 0 || image_height == 0 {
            return Err(GeometryError::InvalidImageSize {
                width: image_width,
                height: image_height,
            });
        }
        let fov_in_range =
            fov_horizontal > T::zero() && fov_horizontal < T::from_f64_lossy(std::f64::consts::PI);
        if !fov_in_range {
            return Err(GeometryError::InvalidFov);
        }
        let half = T::from_f64_lossy(0.5);
        let principal_point = ImagePoint::new(
            T::from_count(image_width as usize) * half - half,
            T::from_count(image_height as usize) * half - half,
        );
        Ok(Self {
            image_width,
            image_height,
            fov_horizontal,
            principal_point,
        })
    }

    /// Intrinsics pinned to an exact focal length; the field of view is
    /// recovered as `2*atan((W/2)/f)`.
    pub fn from_focal_length(
        image_width: u32,
        image_height: u32,
        focal_length: T,
    ) -> Result<Self, GeometryError> {
        if !(focal_length.is_strictly_positive() && focal_length.is_finite()) {
            return Err(GeometryError::InvalidFov);
        }
        let half_width = T::from_count(image_width as usize) * T::from_f64_lossy(0.5);
        let fov = (half_width / focal_length).atan() * T::from_f64_lossy(2.0);
        Self::new(image_width, image_height, fov)
    }

    pub fn with_principal_point(mut self, principal_point: ImagePoint<T>) -> Self {
        self.principal_point = principal_point;
        self
    }

    pub fn image_width(&self) -> u32 {
        self.image_width
    }

    pub fn image_height(&self) -> u32 {
        self.image_height
    }

    pub fn fov_horizontal(&self) -> T {
        self.fov_horizontal
    }

    pub fn principal_point(&self) -> ImagePoint<T> {
        self.principal_point
    }

    /// Focal length in pixels: `f = (W/2) / tan(fov/2)`.
    pub fn focal_length_pixels(&self) -> T {
        let half = T::from_f64_lossy(0.5);
        let half_width = T::from_count(self.image_width as usize) * half;
        half_width / (self.fov_horizontal * half).tan()
    }

    /// Whether a continuous image point falls inside the sensor under the
    /// pixel-center convention.
    pub fn contains(&self, point: ImagePoint<T>) -> bool {
        let half = T::from_f64_lossy(0.5);
        let w = T::from_count(self.image_width as usize);
        let h = T::from_count(self.image_height as usize);
        point.u >= -half && point.u < w - half && point.v >= -half && point.v < h - half
    }
}

/// The aligned stereo pair: shared intrinsics plus the metric baseline.
/// The left camera center sits at `x = -b/2`, the right at `x = +b/2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StereoRig<T> {
    intrinsics: CameraIntrinsics<T>,
    baseline: T,
}

/// Projection of a 3D point into both cameras; a side is `None` when the
/// point falls outside that camera's sensor.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StereoProjection<T> {
    pub left: Option<ImagePoint<T>>,
    pub right: Option<ImagePoint<T>>,
}

impl<T: Real> StereoRig<T> {
    pub fn new(intrinsics: CameraIntrinsics<T>, baseline: T) -> Result<Self, GeometryError> {
        if !(baseline.is_strictly_positive() && baseline.is_finite()) {
            return Err(GeometryError::InvalidBaseline);
        }
        Ok(Self {
            intrinsics,
            baseline,
        })
    }

    pub fn intrinsics(&self) -> &CameraIntrinsics<T> {
        &self.intrinsics
    }

    pub fn baseline(&self) -> T {
        self.baseline
    }

    /// The product `f*b` that all depth formulas share.
    pub fn focal_baseline(&self) -> T {
        self.intrinsics.focal_length_pixels() * self.baseline
    }

    /// Raw projection into both cameras without the sensor-bounds check.
    /// Used by the renderer, where a source straddling the image border
    /// still contributes partial pixels.
    pub fn project_unclipped(
        &self,
        point: Point3<T>,
    ) -> Result<(ImagePoint<T>, ImagePoint<T>), GeometryError> {
        if !point.z.is_strictly_positive() {
            return Err(GeometryError::PointBehindCamera);
        }
        let f = self.intrinsics.focal_length_pixels();
        let pp = self.intrinsics.principal_point();
        let half = T::from_f64_lossy(0.5);
        let half_b = self.baseline * half;
        let v = pp.v + f * point.y / point.z;
        let left = ImagePoint::new(pp.u + f * (point.x + half_b) / point.z, v);
        let right = ImagePoint::new(pp.u + f * (point.x - half_b) / point.z, v);
        Ok((left, right))
    }

    /// Projects a 3D point into both cameras, marking a side absent when the
    /// coordinate falls outside the sensor.
    pub fn project_point(&self, point: Point3<T>) -> Result<StereoProjection<T>, GeometryError> {
        let (left, right) = self.project_unclipped(point)?;
        Ok(StereoProjection {
            left: self.intrinsics.contains(left).then_some(left),
            right: self.intrinsics.contains(right).then_some(right),
        })
    }

    /// Ideal sub-pixel disparity of a target at distance `z`: `d = f*b/z`.
    pub fn disparity_for_distance(&self, distance: T) -> Result<T, GeometryError> {
        if !distance.is_strictly_positive() {
            return Err(GeometryError::NonPositiveDistance);
        }
        Ok(self.focal_baseline() / distance)
    }

    /// Distance of the target from the camera origins: `z = f*b/d`.
    pub fn depth_from_disparity(&self, disparity: T) -> Result<T, GeometryError> {
        if !disparity.is_strictly_positive() {
            return Err(GeometryError::NonPositiveDisparity);
        }
        Ok(self.focal_baseline() / disparity)
    }

    /// Depth interval induced by the +/-1 px disparity quantization around
    /// the ideal disparity of a target at distance `distance`.
    ///
    /// The far bound diverges once `distance >= f*b` (the ideal disparity
    /// drops to one pixel or below) and is reported as `+inf`.
    pub fn depth_bounds(&self, distance: T) -> Result<DepthInterval<T>, GeometryError> {
        if !distance.is_strictly_positive() {
            return Err(GeometryError::NonPositiveDistance);
        }
        let fb = self.focal_baseline();
        let nearest = fb * distance / (fb + distance);
        let farthest = if distance < fb {
            fb * distance / (fb - distance)
        } else {
            T::infinity()
        };
        DepthInterval::new(nearest, distance, farthest)
    }
}

/// Largest baseline keeping a target of width `object_width` at distance
/// `min_distance` inside both fields of view:
/// `b_max = 2*tan(fov/2)*(z_m - (w_o/2)/tan(fov/2))`.
pub fn max_baseline<T: Real>(
    intrinsics: &CameraIntrinsics<T>,
    min_distance: T,
    object_width: T,
) -> Result<T, GeometryError> {
    let half = T::from_f64_lossy(0.5);
    let tan_half = (intrinsics.fov_horizontal() * half).tan();
    let closest_usable = object_width * half / tan_half;
    let target_visible = min_distance > closest_usable;
    if !target_visible {
        return Err(GeometryError::TargetTooClose);
    }
    Ok(T::from_f64_lossy(2.0) * tan_half * (min_distance - closest_usable))
}

/// Depth bracket `[nearest, farthest]` around an estimate; `farthest` is
/// `+inf` when the error model leaves the far side unbounded.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DepthInterval<T> {
    nearest: T,
    estimate: T,
    farthest: T,
}

impl<T: Real> DepthInterval<T> {
    pub fn new(nearest: T, estimate: T, farthest: T) -> Result<Self, GeometryError> {
        let ordered = nearest.is_strictly_positive() && nearest <= estimate && estimate <= farthest;
        if !ordered {
            return Err(GeometryError::NonPositiveDistance);
        }
        Ok(Self {
            nearest,
            estimate,
            farthest,
        })
    }

    pub fn nearest(&self) -> T {
        self.nearest
    }

    pub fn estimate(&self) -> T {
        self.estimate
    }

    pub fn farthest(&self) -> T {
        self.farthest
    }

    pub fn is_unbounded(&self) -> bool {
        self.farthest.is_infinite()
    }

    /// Interval width `farthest - nearest` (`+inf` when unbounded).
    pub fn width(&self) -> T {
        self.farthest - self.nearest
    }

    pub fn contains(&self, depth: T) -> bool {
        depth >= self.nearest && depth <= self.farthest
    }
}
