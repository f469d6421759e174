//! Left/right correspondence matching between heat-point sets.
//!
//! Low resolution and unsynchronized shutters rule out similarity search
//! along epipolar lines, so points are matched by shape instead: every
//! k-subset of each image's points forms a candidate polygon (k being the
//! smaller point count), polygons are normalized against their vertex
//! centroid to cancel translation, vertices are put in angular order, and
//! the candidate pair with the smallest summed vertex offset distance wins.
//! The cyclic vertex alignment inside a candidate pair is fixed separately
//! by minimizing the RMSE of the vertex angles. A final gate rejects pairs
//! whose mean blob temperatures disagree.

use crate::scalar::Real;
use crate::thermal::{CameraId, HeatPoint};
use itertools::Itertools;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum MatchError {
    #[error("point set mixes cameras")]
    MixedCameras,
    #[error("point set contains duplicate coordinates")]
    DuplicateCoordinates,
    #[error("polygon size {k} out of range 1..={available}")]
    PolygonSizeOutOfRange { k: usize, available: usize },
    #[error("polygons have different vertex counts ({left} vs {right})")]
    SizeMismatch { left: usize, right: usize },
    #[error("degenerate polygon: a vertex coincides with the centroid")]
    DegeneratePolygon,
    #[error("{count} points exceed the combinatorial cap of {cap} per image")]
    TooManyPoints { count: usize, cap: usize },
}

/// Heat points of one camera, validated to share the camera id and to have
/// pairwise distinct coordinates.
#[derive(Debug, Clone, PartialEq)]
pub struct PointSet<T> {
    camera: CameraId,
    points: Vec<HeatPoint<T>>,
}

impl<T: Real> PointSet<T> {
    pub fn new(camera: CameraId, points: Vec<HeatPoint<T>>) -> Result<Self, MatchError> {
        if points.iter().any(|p| p.camera != camera) {
            return Err(MatchError::MixedCameras);
        }
        for (i, a) in points.iter().enumerate() {
            for b in &points[i + 1..] {
                if a.u == b.u && a.v == b.v {
                    return Err(MatchError::DuplicateCoordinates);
                }
            }
        }
        Ok(Self { camera, points })
    }

    pub fn camera(&self) -> CameraId {
        self.camera
    }

    pub fn points(&self) -> &[HeatPoint<T>] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

/// The point-count situation of a frame pair, which decides the matching
/// strategy.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MatchCase {
    /// Exactly one point on each side.
    Single,
    /// The same count greater than one on both sides.
    Equal,
    /// Different non-zero counts.
    Unequal,
    /// At least one side is empty; matching is skipped.
    OneSided,
}

pub fn classify_case<T: Real>(left: &PointSet<T>, right: &PointSet<T>) -> MatchCase {
    match (left.len(), right.len()) {
        (0, _) | (_, 0) => MatchCase::OneSided,
        (1, 1) => MatchCase::Single,
        (l, r) if l == r => MatchCase::Equal,
        _ => MatchCase::Unequal,
    }
}

/// A matched left/right heat point pair. `score` is the pair's Euclidean
/// offset distance in the normalized polygon frame (0 for the single-point
/// case).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Correspondence<T> {
    pub left: HeatPoint<T>,
    pub right: HeatPoint<T>,
    pub score: T,
}

impl<T: Real> Correspondence<T> {
    /// Euclidean offset between the two image positions.
    pub fn disparity(&self) -> T {
        let du = self.left.u - self.right.u;
        let dv = self.left.v - self.right.v;
        (du * du + dv * dv).sqrt()
    }

    /// Signed horizontal offset `u_left - u_right`; positive for any target
    /// in front of an aligned rig. This is the disparity that depth
    /// estimation divides by.
    pub fn horizontal_disparity(&self) -> T {
        self.left.u - self.right.u
    }

    pub fn vertical_offset(&self) -> T {
        self.left.v - self.right.v
    }

    pub fn temperature_delta(&self) -> T {
        (self.left.mean_temperature - self.right.mean_temperature).abs()
    }
}

/// Outcome of matching one frame pair.
#[derive(Debug, Clone, PartialEq)]
pub struct MatchResult<T> {
    pub pairs: Vec<Correspondence<T>>,
    pub unmatched_left: Vec<HeatPoint<T>>,
    pub unmatched_right: Vec<HeatPoint<T>>,
    pub case: MatchCase,
}

/// Matching knobs.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MatchOptions<T> {
    /// Pairs whose mean blob temperatures differ by more than this are
    /// rejected (degrees Celsius).
    pub max_temp_delta: T,
    /// Hard cap on points per image; candidate enumeration is
    /// combinatorial, so larger sets are refused rather than ground through.
    pub max_points_per_image: usize,
    /// Optional rejection of pairs with a vertical offset above this many
    /// pixels. Off by default: camera vibration makes small vertical shifts
    /// legitimate.
    pub max_vertical_disparity: Option<T>,
}

impl<T: Real> Default for MatchOptions<T> {
    fn default() -> Self {
        Self {
            max_temp_delta: T::from_f64_lossy(10.0),
            max_points_per_image: 8,
            max_vertical_disparity: None,
        }
    }
}

/// All `C(n, k)` k-subsets of the set's points, each in canonical angular
/// order, listed in lexicographic order of member indices. Returned values
/// index into `points.points()`.
pub fn enumerate_polygons<T: Real>(
    points: &PointSet<T>,
    k: usize,
) -> Result<Vec<Vec<usize>>, MatchError> {
    if k == 0 || k > points.len() {
        return Err(MatchError::PolygonSizeOutOfRange {
            k,
            available: points.len(),
        });
    }
    Ok((0..points.len())
        .combinations(k)
        .map(|combo| order_indices(points.points(), &combo).unwrap_or(combo))
        .collect())
}

/// Vertex centroid of a polygon.
fn centroid<T: Real>(polygon: &[HeatPoint<T>]) -> (T, T) {
    let n = T::from_count(polygon.len());
    let mut u = T::zero();
    let mut v = T::zero();
    for p in polygon {
        u = u + p.u;
        v = v + p.v;
    }
    (u / n, v / n)
}

/// Angle of the vector from the centroid to a vertex, in `(-pi, pi]`.
fn vertex_angle<T: Real>(du: T, dv: T) -> T {
    // Clear the sign of a negative zero so horizontal vectors land at an
    // exact 0 or pi rather than -pi.
    let dv = if dv == T::zero() { T::zero() } else { dv };
    let angle = dv.atan2(du);
    if angle == -T::from_f64_lossy(std::f64::consts::PI) {
        -angle
    } else {
        angle
    }
}

fn order_indices<T: Real>(
    points: &[HeatPoint<T>],
    combo: &[usize],
) -> Result<Vec<usize>, MatchError> {
    if combo.len() < 2 {
        return Ok(combo.to_vec());
    }
    let members: Vec<HeatPoint<T>> = combo.iter().map(|&i| points[i]).collect();
    let (cu, cv) = centroid(&members);
    let mut keyed: Vec<(T, T, usize)> = Vec::with_capacity(combo.len());
    for (&idx, p) in combo.iter().zip(&members) {
        let (du, dv) = (p.u - cu, p.v - cv);
        if du == T::zero() && dv == T::zero() {
            return Err(MatchError::DegeneratePolygon);
        }
        keyed.push((vertex_angle(du, dv), du * du + dv * dv, idx));
    }
    keyed.sort_by(|a, b| {
        a.0.partial_cmp(&b.0)
            .expect("finite angles")
            .then(a.1.partial_cmp(&b.1).expect("finite radii"))
    });
    Ok(keyed.into_iter().map(|(_, _, idx)| idx).collect())
}

/// Sorts a polygon's vertices by ascending angle of the centroid-to-vertex
/// vector, ties broken by ascending radius. A single vertex is trivially
/// ordered; with two or more vertices, a vertex sitting exactly on the
/// centroid makes the angle undefined and is reported as degenerate.
pub fn order_points<T: Real>(polygon: &[HeatPoint<T>]) -> Result<Vec<HeatPoint<T>>, MatchError> {
    let combo: Vec<usize> = (0..polygon.len()).collect();
    let order = order_indices(polygon, &combo)?;
    Ok(order.into_iter().map(|i| polygon[i]).collect())
}

/// Subtracts the vertex centroid from every vertex, cancelling translation.
/// The returned offsets sum to (0, 0).
pub fn normalize_polygon<T: Real>(polygon: &[HeatPoint<T>]) -> Vec<(T, T)> {
    if polygon.is_empty() {
        return Vec::new();
    }
    let (cu, cv) = centroid(polygon);
    polygon.iter().map(|p| (p.u - cu, p.v - cv)).collect()
}

/// Cyclic alignment of two equal-size normalized polygons: the rotation of
/// `b` minimizing the RMSE of paired vertex angles, with ties resolved by
/// the smaller offset-distance sum and then the smaller rotation.
fn align_polygons<T: Real>(a: &[(T, T)], b: &[(T, T)]) -> (usize, T) {
    let k = a.len();
    let angle = |o: &(T, T)| vertex_angle(o.0, o.1);
    let angles_a: Vec<T> = a.iter().map(angle).collect();
    let angles_b: Vec<T> = b.iter().map(angle).collect();
    let two_pi = T::from_f64_lossy(std::f64::consts::TAU);
    let pi = T::from_f64_lossy(std::f64::consts::PI);

    let mut best: Option<(T, T, usize)> = None; // (rmse, distance sum, rotation)
    for rotation in 0..k {
        let mut sq_sum = T::zero();
        let mut dist_sum = T::zero();
        for i in 0..k {
            let j = (i + rotation) % k;
            // Wrap the angular difference into [-pi, pi).
            let mut delta = (angles_a[i] - angles_b[j] + pi) % two_pi;
            if delta < T::zero() {
                delta = delta + two_pi;
            }
            delta = delta - pi;
            sq_sum = sq_sum + delta * delta;
            let (du, dv) = (a[i].0 - b[j].0, a[i].1 - b[j].1);
            dist_sum = dist_sum + (du * du + dv * dv).sqrt();
        }
        let rmse = (sq_sum / T::from_count(k)).sqrt();
        let better = match &best {
            None => true,
            Some((best_rmse, best_dist, _)) => {
                rmse < *best_rmse || (rmse == *best_rmse && dist_sum < *best_dist)
            }
        };
        if better {
            best = Some((rmse, dist_sum, rotation));
        }
    }
    let (_, dist, rotation) = best.expect("k >= 1");
    (rotation, dist)
}

/// Similarity score of two normalized polygons: the sum of Euclidean
/// distances between vertices paired under the angle-RMSE-optimal cyclic
/// alignment. Zero for identical shapes.
pub fn polygon_distance<T: Real>(a: &[(T, T)], b: &[(T, T)]) -> Result<T, MatchError> {
    if a.is_empty() || a.len() != b.len() {
        return Err(MatchError::SizeMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    Ok(align_polygons(a, b).1)
}

/// One fully prepared candidate polygon: member indices in angular order
/// plus the normalized offsets.
struct Candidate<T> {
    ordered: Vec<usize>,
    offsets: Vec<(T, T)>,
}

/// Best-so-far candidate pair during the subset search.
struct Winner<T> {
    score: T,
    key: Vec<(T, T)>,
    left_index: usize,
    right_index: usize,
    rotation: usize,
}

fn candidates<T: Real>(set: &PointSet<T>, k: usize) -> Vec<Candidate<T>> {
    (0..set.len())
        .combinations(k)
        .filter_map(|combo| {
            let ordered = order_indices(set.points(), &combo).ok()?;
            let members: Vec<HeatPoint<T>> = ordered.iter().map(|&i| set.points()[i]).collect();
            Some(Candidate {
                offsets: normalize_polygon(&members),
                ordered,
            })
        })
        .collect()
}

/// Deterministic, permutation-invariant tie key: the ordered vertex
/// coordinates of the left polygon followed by the right polygon.
fn tie_key<T: Real>(
    left: &PointSet<T>,
    right: &PointSet<T>,
    lc: &Candidate<T>,
    rc: &Candidate<T>,
) -> Vec<(T, T)> {
    lc.ordered
        .iter()
        .map(|&i| (left.points()[i].u, left.points()[i].v))
        .chain(
            rc.ordered
                .iter()
                .map(|&i| (right.points()[i].u, right.points()[i].v)),
        )
        .collect()
}

fn key_less<T: Real>(a: &[(T, T)], b: &[(T, T)]) -> bool {
    for (x, y) in a.iter().zip(b) {
        if x.0 != y.0 {
            return x.0 < y.0;
        }
        if x.1 != y.1 {
            return x.1 < y.1;
        }
    }
    false
}

fn sort_points<T: Real>(points: &mut [HeatPoint<T>]) {
    points.sort_by(|a, b| {
        a.u.partial_cmp(&b.u)
            .expect("finite coordinates")
            .then(a.v.partial_cmp(&b.v).expect("finite coordinates"))
    });
}

/// Matches the two point sets of a frame pair.
///
/// One-sided inputs skip matching entirely; a single point on both sides is
/// assumed to be the same object; otherwise the best-scoring pair of
/// k-subset polygons decides the correspondences, where `k` is the smaller
/// point count. Pairs failing the temperature gate (or the optional
/// vertical gate) are dropped to the unmatched lists, as are all points
/// outside the winning polygons.
///
/// Among equal-score candidates the winner is the one with the
/// lexicographically smallest ordered vertex coordinates, which keeps the
/// result independent of input point order.
pub fn match_points<T: Real>(
    left: &PointSet<T>,
    right: &PointSet<T>,
    options: &MatchOptions<T>,
) -> Result<MatchResult<T>, MatchError> {
    let cap = options.max_points_per_image;
    if left.len() > cap || right.len() > cap {
        return Err(MatchError::TooManyPoints {
            count: left.len().max(right.len()),
            cap,
        });
    }
    let case = classify_case(left, right);

    let mut pairs = Vec::new();
    let mut unmatched_left: Vec<HeatPoint<T>> = Vec::new();
    let mut unmatched_right: Vec<HeatPoint<T>> = Vec::new();

    let mut gate = |l: HeatPoint<T>, r: HeatPoint<T>, score: T| {
        let pair = Correspondence {
            left: l,
            right: r,
            score,
        };
        let temp_ok = pair.temperature_delta() <= options.max_temp_delta;
        let vertical_ok = options
            .max_vertical_disparity
            .is_none_or(|limit| pair.vertical_offset().abs() <= limit);
        if temp_ok && vertical_ok {
            pairs.push(pair);
        } else {
            unmatched_left.push(l);
            unmatched_right.push(r);
        }
    };

    match case {
        MatchCase::OneSided => {
            unmatched_left.extend_from_slice(left.points());
            unmatched_right.extend_from_slice(right.points());
        }
        MatchCase::Single => {
            gate(left.points()[0], right.points()[0], T::zero());
        }
        MatchCase::Equal | MatchCase::Unequal => {
            let k = left.len().min(right.len());
            let left_candidates = candidates(left, k);
            let right_candidates = candidates(right, k);

            let mut best: Option<Winner<T>> = None;
            for (li, lc) in left_candidates.iter().enumerate() {
                for (ri, rc) in right_candidates.iter().enumerate() {
                    let (rotation, score) = align_polygons(&lc.offsets, &rc.offsets);
                    let better = match &best {
                        None => true,
                        Some(winner) => {
                            score < winner.score
                                || (score == winner.score
                                    && key_less(&tie_key(left, right, lc, rc), &winner.key))
                        }
                    };
                    if better {
                        best = Some(Winner {
                            score,
                            key: tie_key(left, right, lc, rc),
                            left_index: li,
                            right_index: ri,
                            rotation,
                        });
                    }
                }
            }

            match best {
                Some(Winner {
                    left_index,
                    right_index,
                    rotation,
                    ..
                }) => {
                    let lc = &left_candidates[left_index];
                    let rc = &right_candidates[right_index];
                    let mut in_left = vec![false; left.len()];
                    let mut in_right = vec![false; right.len()];
                    for i in 0..k {
                        let j = (i + rotation) % k;
                        let (lo, ro) = (lc.offsets[i], rc.offsets[j]);
                        let (du, dv) = (lo.0 - ro.0, lo.1 - ro.1);
                        let pair_score = (du * du + dv * dv).sqrt();
                        in_left[lc.ordered[i]] = true;
                        in_right[rc.ordered[j]] = true;
                        gate(
                            left.points()[lc.ordered[i]],
                            right.points()[rc.ordered[j]],
                            pair_score,
                        );
                    }
                    for (i, p) in left.points().iter().enumerate() {
                        if !in_left[i] {
                            unmatched_left.push(*p);
                        }
                    }
                    for (i, p) in right.points().iter().enumerate() {
                        if !in_right[i] {
                            unmatched_right.push(*p);
                        }
                    }
                }
                None => {
                    // Every candidate polygon was degenerate; nothing to match.
                    unmatched_left.extend_from_slice(left.points());
                    unmatched_right.extend_from_slice(right.points());
                }
            }
        }
    }

    sort_points(&mut unmatched_left);
    sort_points(&mut unmatched_right);
    Ok(MatchResult {
        pairs,
        unmatched_left,
        unmatched_right,
        case,
    })
}
