//! Independent oracles and generators shared by the integration tests.
//!
//! Everything here deliberately re-derives results from scratch (no calls
//! into the library's matching or labeling internals) so the tests compare
//! two unrelated code paths.

// Each test target compiles this module separately and uses a subset of it.
#![allow(dead_code)]

use rand::Rng;
use thermostereo::matcher::Correspondence;
use thermostereo::thermal::{CameraId, HeatPoint};

/// Exhaustive reference implementation of the point matcher.
///
/// Enumerates every k-subset pair by recursion, orders vertices by its own
/// angle sort, fixes the cyclic alignment by angle RMSE (ties: smaller
/// distance sum, then smaller rotation), scores by summed vertex offset
/// distance, and picks the global minimum with the ordered-coordinate tie
/// key. Returns accepted pairings as (left index, right index) pairs.
pub mod match_oracle {
    use super::*;

    #[derive(Clone)]
    struct Polygon {
        /// Original point indices in angular order.
        indices: Vec<usize>,
        /// Normalized offsets in the same order.
        offsets: Vec<(f64, f64)>,
    }

    fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
        fn recurse(
            start: usize,
            n: usize,
            k: usize,
            prefix: &mut Vec<usize>,
            out: &mut Vec<Vec<usize>>,
        ) {
            if prefix.len() == k {
                out.push(prefix.clone());
                return;
            }
            for i in start..n {
                prefix.push(i);
                recurse(i + 1, n, k, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        recurse(0, n, k, &mut Vec::new(), &mut out);
        out
    }

    fn angle(du: f64, dv: f64) -> f64 {
        let dv = if dv == 0.0 { 0.0 } else { dv };
        let a = dv.atan2(du);
        if a == -std::f64::consts::PI {
            -a
        } else {
            a
        }
    }

    fn polygon(points: &[HeatPoint<f64>], subset: &[usize]) -> Option<Polygon> {
        let n = subset.len() as f64;
        let cu = subset.iter().map(|&i| points[i].u).sum::<f64>() / n;
        let cv = subset.iter().map(|&i| points[i].v).sum::<f64>() / n;
        let mut keyed: Vec<(f64, f64, usize)> = Vec::new();
        for &i in subset {
            let (du, dv) = (points[i].u - cu, points[i].v - cv);
            if subset.len() > 1 && du == 0.0 && dv == 0.0 {
                return None;
            }
            keyed.push((angle(du, dv), du * du + dv * dv, i));
        }
        keyed.sort_by(|a, b| a.partial_cmp(b).unwrap());
        Some(Polygon {
            offsets: keyed
                .iter()
                .map(|&(_, _, i)| (points[i].u - cu, points[i].v - cv))
                .collect(),
            indices: keyed.into_iter().map(|(_, _, i)| i).collect(),
        })
    }

    fn wrap(x: f64) -> f64 {
        let two_pi = std::f64::consts::TAU;
        let mut d = (x + std::f64::consts::PI).rem_euclid(two_pi);
        if d < 0.0 {
            d += two_pi;
        }
        d - std::f64::consts::PI
    }

    /// Best rotation of `b` against `a` and the distance sum there.
    fn align(a: &[(f64, f64)], b: &[(f64, f64)]) -> (usize, f64) {
        let k = a.len();
        let mut best: Option<(f64, f64, usize)> = None;
        for rot in 0..k {
            let mut sq = 0.0;
            let mut dist = 0.0;
            for (i, va) in a.iter().enumerate() {
                let vb = &b[(i + rot) % k];
                let d = wrap(angle(va.0, va.1) - angle(vb.0, vb.1));
                sq += d * d;
                dist += ((va.0 - vb.0).powi(2) + (va.1 - vb.1).powi(2)).sqrt();
            }
            let rmse = (sq / k as f64).sqrt();
            let better = match best {
                None => true,
                Some((br, bd, _)) => rmse < br || (rmse == br && dist < bd),
            };
            if better {
                best = Some((rmse, dist, rot));
            }
        }
        let (_, dist, rot) = best.unwrap();
        (rot, dist)
    }

    fn coordinate_key(
        left: &[HeatPoint<f64>],
        right: &[HeatPoint<f64>],
        lp: &Polygon,
        rp: &Polygon,
    ) -> Vec<(f64, f64)> {
        lp.indices
            .iter()
            .map(|&i| (left[i].u, left[i].v))
            .chain(rp.indices.iter().map(|&i| (right[i].u, right[i].v)))
            .collect()
    }

    /// Accepted pairings `(left_index, right_index)` after the temperature
    /// gate, or the reason nothing matched.
    pub fn best_pairing(
        left: &[HeatPoint<f64>],
        right: &[HeatPoint<f64>],
        max_temp_delta: f64,
    ) -> Vec<(usize, usize)> {
        if left.is_empty() || right.is_empty() {
            return Vec::new();
        }
        if left.len() == 1 && right.len() == 1 {
            return if (left[0].mean_temperature - right[0].mean_temperature).abs() <= max_temp_delta
            {
                vec![(0, 0)]
            } else {
                Vec::new()
            };
        }

        type Best = (f64, Vec<(f64, f64)>, Polygon, Polygon, usize);
        let k = left.len().min(right.len());
        let mut best: Option<Best> = None;
        for ls in subsets(left.len(), k) {
            let Some(lp) = polygon(left, &ls) else {
                continue;
            };
            for rs in subsets(right.len(), k) {
                let Some(rp) = polygon(right, &rs) else {
                    continue;
                };
                let (rot, score) = align(&lp.offsets, &rp.offsets);
                let key = coordinate_key(left, right, &lp, &rp);
                let better = match &best {
                    None => true,
                    Some((bs, bk, ..)) => score < *bs || (score == *bs && key < *bk),
                };
                if better {
                    best = Some((score, key, lp.clone(), rp.clone(), rot));
                }
            }
        }
        let Some((_, _, lp, rp, rot)) = best else {
            return Vec::new();
        };
        let mut pairs = Vec::new();
        for i in 0..k {
            let j = (i + rot) % k;
            let (li, ri) = (lp.indices[i], rp.indices[j]);
            if (left[li].mean_temperature - right[ri].mean_temperature).abs() <= max_temp_delta {
                pairs.push((li, ri));
            }
        }
        pairs
    }
}

/// Reference connected-component labeling by iterated minimum-label
/// propagation over the 8-neighborhood, run to a fixpoint.
pub mod blob_oracle {
    /// Pixel index sets of all components of `mask`, one sorted vec per
    /// component, components ordered by smallest member.
    pub fn components(mask: &[bool], width: usize, height: usize) -> Vec<Vec<usize>> {
        let mut label: Vec<usize> = (0..mask.len()).collect();
        let mut changed = true;
        while changed {
            changed = false;
            for v in 0..height {
                for u in 0..width {
                    let idx = v * width + u;
                    if !mask[idx] {
                        continue;
                    }
                    let mut smallest = label[idx];
                    for dv in -1i64..=1 {
                        for du in -1i64..=1 {
                            let (nu, nv) = (u as i64 + du, v as i64 + dv);
                            if nu < 0 || nv < 0 || nu >= width as i64 || nv >= height as i64 {
                                continue;
                            }
                            let nidx = nv as usize * width + nu as usize;
                            if mask[nidx] {
                                smallest = smallest.min(label[nidx]);
                            }
                        }
                    }
                    if smallest < label[idx] {
                        label[idx] = smallest;
                        changed = true;
                    }
                }
            }
        }
        let mut groups: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
        for idx in 0..mask.len() {
            if mask[idx] {
                // Chase the label chain to its root.
                let mut root = label[idx];
                while label[root] != root {
                    root = label[root];
                }
                groups.entry(root).or_default().push(idx);
            }
        }
        groups.into_values().collect()
    }
}

/// Random heat points on one camera with coordinates unique by construction.
pub fn random_points<R: Rng>(
    rng: &mut R,
    camera: CameraId,
    count: usize,
    paired_temps: Option<&[f64]>,
) -> Vec<HeatPoint<f64>> {
    (0..count)
        .map(|i| HeatPoint {
            u: rng.gen_range(0.0..31.0),
            v: rng.gen_range(0.0..31.0),
            mean_temperature: match paired_temps {
                // Temperatures near a partner point's, so gates mostly pass.
                Some(temps) if i < temps.len() => temps[i] + rng.gen_range(-4.0..4.0),
                _ => rng.gen_range(130.0..400.0),
            },
            pixel_count: rng.gen_range(1..6),
            camera,
        })
        .collect()
}

/// Maps matched heat points back to indices in the original slices by exact
/// coordinate identity (coordinates are unique within a set).
pub fn pairing_indices(
    pairs: &[Correspondence<f64>],
    left: &[HeatPoint<f64>],
    right: &[HeatPoint<f64>],
) -> Vec<(usize, usize)> {
    let find = |points: &[HeatPoint<f64>], p: &HeatPoint<f64>| {
        points
            .iter()
            .position(|q| q.u == p.u && q.v == p.v)
            .expect("matched point exists in its input set")
    };
    let mut indices: Vec<(usize, usize)> = pairs
        .iter()
        .map(|c| (find(left, &c.left), find(right, &c.right)))
        .collect();
    indices.sort_unstable();
    indices
}
