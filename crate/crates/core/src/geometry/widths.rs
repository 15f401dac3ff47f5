//! Minimal and maximal widths of an annular region: extremal lengths of
//! segments hitting the inner boundary orthogonally and running to the outer
//! boundary.

use super::curve::{golden_min, BoundaryCurve};
use super::Point2;
use crate::error::{FluxgapError, Result};

/// Default number of outward normals sampled on the inner curve.
pub const WIDTH_SAMPLES: usize = 4096;

/// Returns (beta, B): the minimal and maximal length of a segment contained
/// in the annular region between `inner` and `outer`, leaving `inner` along
/// an outward normal (with the full normal cone at polygon corners).
///
/// Exact for concentric or offset circle pairs and for polygon pairs with
/// convex outer boundary; other combinations sample `WIDTH_SAMPLES` normals
/// with golden-section refinement around each extremum.
pub fn widths(outer: &BoundaryCurve, inner: &BoundaryCurve) -> Result<(f64, f64)> {
    match (outer, inner) {
        (
            BoundaryCurve::Circle {
                center: co,
                radius: ro,
            },
            BoundaryCurve::Circle {
                center: ci,
                radius: ri,
            },
        ) => {
            let d = co.dist(*ci);
            if d + ri >= *ro {
                return Err(FluxgapError::InvalidGeometry(
                    "inner circle not strictly inside outer circle".into(),
                ));
            }
            Ok((ro - ri - d, ro - ri + d))
        }
        (BoundaryCurve::Polygon { vertices: vo }, BoundaryCurve::Polygon { vertices: vi })
            if super::polygon_is_convex(vo) =>
        {
            polygon_polygon_widths(vo, vi, outer)
        }
        _ => sampled_widths(outer, inner),
    }
}

/// Degenerate inner curve collapsed to a point: beta and B are the minimal
/// and maximal distance from `p` to the outer boundary.
pub fn widths_from_point(outer: &BoundaryCurve, p: Point2) -> Result<(f64, f64)> {
    if !outer.contains(p) {
        return Err(FluxgapError::PointOutsideDomain { x: p.x, y: p.y });
    }
    match outer {
        BoundaryCurve::Circle { center, radius } => {
            let d = p.dist(*center);
            Ok((radius - d, radius + d))
        }
        BoundaryCurve::Polygon { vertices } => {
            let n = vertices.len();
            let mut min_d = f64::INFINITY;
            let mut max_d: f64 = 0.0;
            for i in 0..n {
                min_d = min_d.min(super::point_segment_distance(
                    p,
                    vertices[i],
                    vertices[(i + 1) % n],
                ));
                max_d = max_d.max(p.dist(vertices[i]));
            }
            Ok((min_d, max_d))
        }
        _ => {
            let min_d = outer.distance_to(p);
            let mut max_d: f64 = 0.0;
            for q in outer.to_polyline(8192) {
                max_d = max_d.max(p.dist(q));
            }
            Ok((min_d, max_d))
        }
    }
}

/// Exact extremal widths for a polygon inside a convex polygon.
///
/// The raycast length along an inner edge is piecewise linear in the foot
/// position (breakpoints where the ray passes through an outer vertex), and
/// along a corner fan it is piecewise smooth with extrema at cone ends,
/// outer-vertex directions and outer-edge perpendiculars; enumerating those
/// candidates gives the exact min and max.
fn polygon_polygon_widths(
    outer_v: &[Point2],
    inner_v: &[Point2],
    outer: &BoundaryCurve,
) -> Result<(f64, f64)> {
    let n = inner_v.len();
    let m = outer_v.len();
    let mut best_min = f64::INFINITY;
    let mut best_max: f64 = 0.0;
    let mut consider = |origin: Point2, dir: Point2| -> Result<()> {
        match outer.ray_first_hit(origin, dir) {
            Some(t) => {
                best_min = best_min.min(t);
                best_max = best_max.max(t);
                Ok(())
            }
            None => Err(FluxgapError::RayMiss {
                x: origin.x,
                y: origin.y,
            }),
        }
    };

    for i in 0..n {
        let a = inner_v[i];
        let b = inner_v[(i + 1) % n];
        let d = b - a;
        // CCW inner polygon: outward (away from the hole interior) is right.
        let normal = Point2::new(d.y, -d.x).normalized();
        consider(a, normal)?;
        consider(b, normal)?;
        for &w in outer_v {
            let denom = d.cross(normal);
            let s = (w - a).cross(normal) / denom;
            if (0.0..=1.0).contains(&s) {
                consider(a + d * s, normal)?;
            }
        }

        // Corner fan at vertex b.
        let c = inner_v[(i + 2) % n];
        let e = c - b;
        let next_normal = Point2::new(e.y, -e.x).normalized();
        let a0 = normal.angle();
        let span = wrap_positive(next_normal.angle() - a0);
        if span > 1e-12 && span < std::f64::consts::PI {
            consider(b, normal)?;
            consider(b, next_normal)?;
            for &w in outer_v {
                let dir = w - b;
                if dir.norm() > 1e-14 && wrap_positive(dir.angle() - a0) <= span {
                    consider(b, dir.normalized())?;
                }
            }
            for j in 0..m {
                let p = outer_v[j];
                let q = outer_v[(j + 1) % m];
                let edge = q - p;
                // Perpendicular foot direction from b onto the outer edge.
                let t = ((b - p).dot(edge) / edge.norm_sq()).clamp(0.0, 1.0);
                let foot = p + edge * t;
                let dir = foot - b;
                if dir.norm() > 1e-14 && wrap_positive(dir.angle() - a0) <= span {
                    consider(b, dir.normalized())?;
                }
            }
        }
    }
    Ok((best_min, best_max))
}

fn sampled_widths(outer: &BoundaryCurve, inner: &BoundaryCurve) -> Result<(f64, f64)> {
    let rays = inner.normal_ray_samples(WIDTH_SAMPLES);
    if rays.is_empty() {
        return Err(FluxgapError::InvalidGeometry(
            "inner curve yields no normal rays".into(),
        ));
    }
    let mut lengths = Vec::with_capacity(rays.len());
    for (origin, dir) in &rays {
        match outer.ray_first_hit(*origin, *dir) {
            Some(t) => lengths.push(t),
            None => {
                return Err(FluxgapError::RayMiss {
                    x: origin.x,
                    y: origin.y,
                })
            }
        }
    }
    let (mut i_min, mut i_max) = (0usize, 0usize);
    for (i, &l) in lengths.iter().enumerate() {
        if l < lengths[i_min] {
            i_min = i;
        }
        if l > lengths[i_max] {
            i_max = i;
        }
    }
    // One golden-section refinement per extremum when the inner curve has a
    // smooth continuous parameterization (circle or ellipse).
    let ray_at: Option<Box<dyn Fn(f64) -> (Point2, Point2)>> = match inner {
        BoundaryCurve::Circle { center, radius } => {
            let (c, r) = (*center, *radius);
            Some(Box::new(move |t: f64| {
                let ang = 2.0 * std::f64::consts::PI * t;
                let n = Point2::new(ang.cos(), ang.sin());
                (c + n * r, n)
            }))
        }
        BoundaryCurve::Ellipse { center, semi_axes } => {
            let (c, (a, b)) = (*center, *semi_axes);
            Some(Box::new(move |t: f64| {
                let ang = 2.0 * std::f64::consts::PI * t;
                let p = c + Point2::new(a * ang.cos(), b * ang.sin());
                let n = Point2::new(b * ang.cos(), a * ang.sin()).normalized();
                (p, n)
            }))
        }
        _ => None,
    };
    if let Some(ray_at) = ray_at {
        let n = rays.len() as f64;
        let mut refine = |idx: usize, minimize: bool| -> f64 {
            let eval = |t: f64| -> f64 {
                let (origin, dir) = ray_at(t.rem_euclid(1.0));
                let v = outer.ray_first_hit(origin, dir).unwrap_or(f64::INFINITY);
                if minimize {
                    v
                } else {
                    -v
                }
            };
            let t0 = idx as f64 / n;
            let t = golden_min(&eval, t0 - 1.5 / n, t0 + 1.5 / n, 1e-9);
            eval(t).abs()
        };
        let beta = refine(i_min, true).min(lengths[i_min]);
        let b = refine(i_max, false).max(lengths[i_max]);
        Ok((beta, b))
    } else {
        // Corner fans are already included in the polygon samples.
        Ok((lengths[i_min], lengths[i_max]))
    }
}

fn wrap_positive(mut ang: f64) -> f64 {
    use std::f64::consts::PI;
    while ang < 0.0 {
        ang += 2.0 * PI;
    }
    while ang >= 2.0 * PI {
        ang -= 2.0 * PI;
    }
    ang
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn concentric_circles() {
        let outer = BoundaryCurve::circle(Point2::new(0.0, 0.0), 1.0).unwrap();
        let inner = BoundaryCurve::circle(Point2::new(0.0, 0.0), 0.5).unwrap();
        let (beta, b) = widths(&outer, &inner).unwrap();
        assert!((beta - 0.5).abs() < 1e-14);
        assert!((b - 0.5).abs() < 1e-14);
    }

    #[test]
    fn offset_circles() {
        let outer = BoundaryCurve::circle(Point2::new(0.0, 0.0), 1.0).unwrap();
        let inner = BoundaryCurve::circle(Point2::new(0.2, 0.0), 0.3).unwrap();
        let (beta, b) = widths(&outer, &inner).unwrap();
        assert!((beta - 0.5).abs() < 1e-14);
        assert!((b - 0.9).abs() < 1e-14);
    }

    #[test]
    fn point_in_disk() {
        let outer = BoundaryCurve::circle(Point2::new(0.0, 0.0), 1.0).unwrap();
        let (beta, b) = widths_from_point(&outer, Point2::new(0.0, 0.0)).unwrap();
        assert!((beta - 1.0).abs() < 1e-14 && (b - 1.0).abs() < 1e-14);
        let (beta, b) = widths_from_point(&outer, Point2::new(0.25, 0.0)).unwrap();
        assert!((beta - 0.75).abs() < 1e-14 && (b - 1.25).abs() < 1e-14);
    }

    #[test]
    fn square_annulus_exact() {
        // Outer square [-2,2]^2, inner square [-1,1]^2: beta = 1 along the
        // edges, B = sqrt(2) from a corner of the inner to the corner of the
        // outer square.
        let outer =
            BoundaryCurve::rectangle(Point2::new(-2.0, -2.0), Point2::new(2.0, 2.0)).unwrap();
        let inner =
            BoundaryCurve::rectangle(Point2::new(-1.0, -1.0), Point2::new(1.0, 1.0)).unwrap();
        let (beta, b) = widths(&outer, &inner).unwrap();
        assert!((beta - 1.0).abs() < 1e-12);
        assert!((b - 2.0f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn beta_at_most_b_for_conic_pairs() {
        let outer = BoundaryCurve::ellipse(Point2::new(0.0, 0.0), 2.0, 1.5).unwrap();
        let inner = BoundaryCurve::ellipse(Point2::new(0.1, 0.0), 0.6, 0.4).unwrap();
        let (beta, b) = widths(&outer, &inner).unwrap();
        assert!(beta > 0.0 && beta <= b);
    }
}
