//! Boundary curve primitives: circles, ellipses, polygons and rounded
//! rectangles, all stored counterclockwise.

use super::convex::{hull_diameter, polygon_area, polygon_centroid, polygon_is_convex};
use super::{point_segment_distance, Point2, Segment, BOUNDARY_TOL};
use crate::error::{FluxgapError, Result};
use std::f64::consts::PI;

/// A simple closed boundary curve.
///
/// Curves are parametric primitives rather than free splines so that areas,
/// perimeters, diameters and interior-ball radii have exact values.
#[derive(Debug, Clone, PartialEq)]
pub enum BoundaryCurve {
    Circle {
        center: Point2,
        radius: f64,
    },
    Ellipse {
        center: Point2,
        /// (a, b) along the x and y axes.
        semi_axes: (f64, f64),
    },
    /// Counterclockwise vertex list.
    Polygon {
        vertices: Vec<Point2>,
    },
    /// Axis-aligned rectangle spanned by `min`/`max` with circular corner
    /// arcs of radius `corner_radius`.
    RoundedRect {
        min: Point2,
        max: Point2,
        corner_radius: f64,
    },
}

impl BoundaryCurve {
    pub fn circle(center: Point2, radius: f64) -> Result<Self> {
        if !(radius > 0.0) || !center.is_finite() {
            return Err(FluxgapError::InvalidGeometry(format!(
                "circle needs positive finite radius, got {radius}"
            )));
        }
        Ok(BoundaryCurve::Circle { center, radius })
    }

    pub fn ellipse(center: Point2, a: f64, b: f64) -> Result<Self> {
        if !(a > 0.0) || !(b > 0.0) || !center.is_finite() {
            return Err(FluxgapError::InvalidGeometry(format!(
                "ellipse needs positive semi-axes, got ({a}, {b})"
            )));
        }
        Ok(BoundaryCurve::Ellipse {
            center,
            semi_axes: (a, b),
        })
    }

    /// Builds a polygon, normalizing the orientation to counterclockwise and
    /// rejecting self-intersecting or degenerate vertex lists.
    pub fn polygon(mut vertices: Vec<Point2>) -> Result<Self> {
        if vertices.len() < 3 {
            return Err(FluxgapError::InvalidGeometry(format!(
                "polygon needs at least 3 vertices, got {}",
                vertices.len()
            )));
        }
        if vertices.iter().any(|v| !v.is_finite()) {
            return Err(FluxgapError::InvalidGeometry(
                "polygon vertex is not finite".into(),
            ));
        }
        let area = polygon_area(&vertices);
        if area.abs() < 1e-300 {
            return Err(FluxgapError::InvalidGeometry(
                "polygon has zero area".into(),
            ));
        }
        if area < 0.0 {
            vertices.reverse();
        }
        // Simplicity: no two non-adjacent edges may cross.
        let n = vertices.len();
        for i in 0..n {
            let si = Segment::new(vertices[i], vertices[(i + 1) % n]);
            if si.length() < 1e-14 {
                return Err(FluxgapError::InvalidGeometry(
                    "polygon has a zero-length edge".into(),
                ));
            }
            for j in (i + 1)..n {
                let sj = Segment::new(vertices[j], vertices[(j + 1) % n]);
                if si.crosses(&sj) {
                    return Err(FluxgapError::InvalidGeometry(
                        "polygon is self-intersecting".into(),
                    ));
                }
            }
        }
        Ok(BoundaryCurve::Polygon { vertices })
    }

    pub fn rectangle(min: Point2, max: Point2) -> Result<Self> {
        BoundaryCurve::polygon(vec![
            min,
            Point2::new(max.x, min.y),
            max,
            Point2::new(min.x, max.y),
        ])
    }

    pub fn rounded_rect(corner_a: Point2, corner_b: Point2, corner_radius: f64) -> Result<Self> {
        let min = Point2::new(corner_a.x.min(corner_b.x), corner_a.y.min(corner_b.y));
        let max = Point2::new(corner_a.x.max(corner_b.x), corner_a.y.max(corner_b.y));
        let w = max.x - min.x;
        let h = max.y - min.y;
        if !(corner_radius > 0.0) || corner_radius > 0.5 * w.min(h) {
            return Err(FluxgapError::InvalidGeometry(format!(
                "rounded rectangle needs 0 < corner radius <= min(w, h)/2, got {corner_radius}"
            )));
        }
        Ok(BoundaryCurve::RoundedRect {
            min,
            max,
            corner_radius,
        })
    }

    /// Area enclosed by the curve.
    pub fn enclosed_area(&self) -> f64 {
        match self {
            BoundaryCurve::Circle { radius, .. } => PI * radius * radius,
            BoundaryCurve::Ellipse { semi_axes, .. } => PI * semi_axes.0 * semi_axes.1,
            BoundaryCurve::Polygon { vertices } => polygon_area(vertices),
            BoundaryCurve::RoundedRect {
                min,
                max,
                corner_radius,
            } => {
                let w = max.x - min.x;
                let h = max.y - min.y;
                w * h - (4.0 - PI) * corner_radius * corner_radius
            }
        }
    }

    /// Arc length; exact for circles, polygons and rounded rectangles,
    /// adaptive quadrature for ellipses (relative error below 1e-10).
    pub fn perimeter(&self) -> f64 {
        match self {
            BoundaryCurve::Circle { radius, .. } => 2.0 * PI * radius,
            BoundaryCurve::Ellipse { semi_axes, .. } => {
                let (a, b) = *semi_axes;
                4.0 * adaptive_simpson(
                    &|t: f64| {
                        let s = t.sin();
                        let c = t.cos();
                        (a * a * s * s + b * b * c * c).sqrt()
                    },
                    0.0,
                    PI / 2.0,
                    1e-13,
                    40,
                )
            }
            BoundaryCurve::Polygon { vertices } => {
                let n = vertices.len();
                (0..n)
                    .map(|i| vertices[i].dist(vertices[(i + 1) % n]))
                    .sum()
            }
            BoundaryCurve::RoundedRect {
                min,
                max,
                corner_radius,
            } => {
                let w = max.x - min.x;
                let h = max.y - min.y;
                2.0 * (w - 2.0 * corner_radius) + 2.0 * (h - 2.0 * corner_radius)
                    + 2.0 * PI * corner_radius
            }
        }
    }

    /// Diameter of the enclosed region (max pairwise distance).
    pub fn diameter(&self) -> f64 {
        match self {
            BoundaryCurve::Circle { radius, .. } => 2.0 * radius,
            BoundaryCurve::Ellipse { semi_axes, .. } => 2.0 * semi_axes.0.max(semi_axes.1),
            BoundaryCurve::Polygon { vertices } => hull_diameter(vertices),
            BoundaryCurve::RoundedRect {
                min,
                max,
                corner_radius,
            } => {
                let w = max.x - min.x - 2.0 * corner_radius;
                let h = max.y - min.y - 2.0 * corner_radius;
                w.hypot(h) + 2.0 * corner_radius
            }
        }
    }

    pub fn centroid(&self) -> Point2 {
        match self {
            BoundaryCurve::Circle { center, .. } | BoundaryCurve::Ellipse { center, .. } => *center,
            BoundaryCurve::Polygon { vertices } => polygon_centroid(vertices),
            BoundaryCurve::RoundedRect { min, max, .. } => (*min + *max) * 0.5,
        }
    }

    pub fn is_convex(&self) -> bool {
        match self {
            BoundaryCurve::Polygon { vertices } => polygon_is_convex(vertices),
            _ => true,
        }
    }

    /// Largest delta such that every boundary point admits an internally
    /// tangent disk of radius delta: the radius for circles, b^2/a for
    /// ellipses, the corner radius for rounded rectangles and 0 for polygons
    /// (corners admit no tangent ball).
    pub fn interior_ball_radius(&self) -> f64 {
        match self {
            BoundaryCurve::Circle { radius, .. } => *radius,
            BoundaryCurve::Ellipse { semi_axes, .. } => {
                let a = semi_axes.0.max(semi_axes.1);
                let b = semi_axes.0.min(semi_axes.1);
                b * b / a
            }
            BoundaryCurve::Polygon { .. } => 0.0,
            BoundaryCurve::RoundedRect { corner_radius, .. } => *corner_radius,
        }
    }

    /// Strict interior test; points within `BOUNDARY_TOL` of the curve count
    /// as outside so that solver masks are deterministic.
    pub fn contains(&self, p: Point2) -> bool {
        match self {
            BoundaryCurve::Circle { center, radius } => p.dist(*center) < radius - BOUNDARY_TOL,
            BoundaryCurve::Ellipse { center, semi_axes } => {
                let q = Point2::new((p.x - center.x) / semi_axes.0, (p.y - center.y) / semi_axes.1);
                // Rescale the tolerance conservatively by the larger axis.
                let tol = BOUNDARY_TOL / semi_axes.0.min(semi_axes.1);
                q.norm() < 1.0 - tol
            }
            BoundaryCurve::Polygon { vertices } => {
                winding_number(vertices, p) != 0 && self.distance_to(p) > BOUNDARY_TOL
            }
            BoundaryCurve::RoundedRect {
                min,
                max,
                corner_radius,
            } => {
                core_rect_distance(p, *min, *max, *corner_radius) < corner_radius - BOUNDARY_TOL
            }
        }
    }

    /// Distance from `p` to the curve (zero on the curve, positive elsewhere).
    pub fn distance_to(&self, p: Point2) -> f64 {
        match self {
            BoundaryCurve::Circle { center, radius } => (p.dist(*center) - radius).abs(),
            BoundaryCurve::Ellipse { .. } => p.dist(self.closest_point(p)),
            BoundaryCurve::Polygon { vertices } => {
                let n = vertices.len();
                (0..n)
                    .map(|i| point_segment_distance(p, vertices[i], vertices[(i + 1) % n]))
                    .fold(f64::INFINITY, f64::min)
            }
            BoundaryCurve::RoundedRect {
                min,
                max,
                corner_radius,
            } => (core_rect_distance(p, *min, *max, *corner_radius) - corner_radius).abs(),
        }
    }

    /// Closest point on the curve to `p`.
    pub fn closest_point(&self, p: Point2) -> Point2 {
        match self {
            BoundaryCurve::Circle { center, radius } => {
                let d = p - *center;
                let n = d.norm();
                if n < 1e-300 {
                    *center + Point2::new(*radius, 0.0)
                } else {
                    *center + d * (*radius / n)
                }
            }
            BoundaryCurve::Ellipse { center, semi_axes } => {
                // Golden-section refinement of the parametric distance.
                let (a, b) = *semi_axes;
                let f = |t: f64| {
                    let q = *center + Point2::new(a * t.cos(), b * t.sin());
                    q.dist(p)
                };
                let m = 512usize;
                let mut best_t = 0.0;
                let mut best = f64::INFINITY;
                for i in 0..m {
                    let t = 2.0 * PI * i as f64 / m as f64;
                    let v = f(t);
                    if v < best {
                        best = v;
                        best_t = t;
                    }
                }
                let span = 2.0 * PI / m as f64;
                let t = golden_min(&f, best_t - span, best_t + span, 1e-14);
                *center + Point2::new(a * t.cos(), b * t.sin())
            }
            BoundaryCurve::Polygon { vertices } => {
                let n = vertices.len();
                let mut best = Point2::new(f64::INFINITY, f64::INFINITY);
                let mut best_d = f64::INFINITY;
                for i in 0..n {
                    let a = vertices[i];
                    let b = vertices[(i + 1) % n];
                    let d = b - a;
                    let t = if d.norm_sq() > 0.0 {
                        ((p - a).dot(d) / d.norm_sq()).clamp(0.0, 1.0)
                    } else {
                        0.0
                    };
                    let q = a + d * t;
                    let dist = q.dist(p);
                    if dist < best_d {
                        best_d = dist;
                        best = q;
                    }
                }
                best
            }
            BoundaryCurve::RoundedRect {
                min,
                max,
                corner_radius,
            } => {
                let (cmin, cmax) = (
                    Point2::new(min.x + corner_radius, min.y + corner_radius),
                    Point2::new(max.x - corner_radius, max.y - corner_radius),
                );
                let q = Point2::new(p.x.clamp(cmin.x, cmax.x), p.y.clamp(cmin.y, cmax.y));
                let d = p - q;
                let n = d.norm();
                if n < 1e-300 {
                    // Deep inside: project horizontally.
                    Point2::new(q.x + *corner_radius, q.y)
                } else {
                    q + d * (*corner_radius / n)
                }
            }
        }
    }

    /// First intersection parameter `t > tol` of the ray `origin + t dir`
    /// with the curve, if any.
    pub fn ray_first_hit(&self, origin: Point2, dir: Point2) -> Option<f64> {
        let tol = 1e-9;
        match self {
            BoundaryCurve::Circle { center, radius } => {
                ray_circle_hits(origin, dir, *center, *radius)
                    .into_iter()
                    .filter(|t| *t > tol)
                    .fold(None, |acc, t| Some(acc.map_or(t, |a: f64| a.min(t))))
            }
            BoundaryCurve::Ellipse { center, semi_axes } => {
                let (a, b) = *semi_axes;
                let o = Point2::new((origin.x - center.x) / a, (origin.y - center.y) / b);
                let d = Point2::new(dir.x / a, dir.y / b);
                ray_circle_hits(o, d, Point2::new(0.0, 0.0), 1.0)
                    .into_iter()
                    .filter(|t| *t > tol)
                    .fold(None, |acc, t| Some(acc.map_or(t, |x: f64| x.min(t))))
            }
            BoundaryCurve::Polygon { vertices } => {
                let n = vertices.len();
                let mut best: Option<f64> = None;
                for i in 0..n {
                    if let Some(t) =
                        ray_segment_hit(origin, dir, vertices[i], vertices[(i + 1) % n])
                    {
                        if t > tol && best.map_or(true, |b| t < b) {
                            best = Some(t);
                        }
                    }
                }
                best
            }
            BoundaryCurve::RoundedRect { .. } => {
                let mut best: Option<f64> = None;
                for piece in self.rounded_rect_pieces() {
                    let hit = match piece {
                        RrPiece::Seg(a, b) => ray_segment_hit(origin, dir, a, b),
                        RrPiece::Arc(c, r, a0, a1) => {
                            ray_circle_hits(origin, dir, c, r)
                                .into_iter()
                                .filter(|t| {
                                    if *t <= tol {
                                        return false;
                                    }
                                    let ang = (origin + dir * *t - c).angle();
                                    angle_in_range(ang, a0, a1)
                                })
                                .fold(None, |acc: Option<f64>, t| {
                                    Some(acc.map_or(t, |a| a.min(t)))
                                })
                        }
                    };
                    if let Some(t) = hit {
                        if t > tol && best.map_or(true, |b| t < b) {
                            best = Some(t);
                        }
                    }
                }
                best
            }
        }
    }

    /// Counterclockwise polyline approximation with `n` vertices for conics;
    /// polygons return their own vertices.
    pub fn to_polyline(&self, n: usize) -> Vec<Point2> {
        match self {
            BoundaryCurve::Circle { center, radius } => (0..n)
                .map(|i| {
                    let t = 2.0 * PI * i as f64 / n as f64;
                    *center + Point2::new(radius * t.cos(), radius * t.sin())
                })
                .collect(),
            BoundaryCurve::Ellipse { center, semi_axes } => (0..n)
                .map(|i| {
                    let t = 2.0 * PI * i as f64 / n as f64;
                    *center + Point2::new(semi_axes.0 * t.cos(), semi_axes.1 * t.sin())
                })
                .collect(),
            BoundaryCurve::Polygon { vertices } => vertices.clone(),
            BoundaryCurve::RoundedRect { .. } => {
                let per_arc = (n / 8).max(4);
                let mut pts = Vec::new();
                for piece in self.rounded_rect_pieces() {
                    match piece {
                        RrPiece::Seg(a, _) => pts.push(a),
                        RrPiece::Arc(c, r, a0, a1) => {
                            let span = wrap_positive(a1 - a0);
                            for i in 0..per_arc {
                                let t = a0 + span * i as f64 / per_arc as f64;
                                pts.push(c + Point2::new(r * t.cos(), r * t.sin()));
                            }
                        }
                    }
                }
                pts
            }
        }
    }

    pub fn bbox(&self) -> (Point2, Point2) {
        match self {
            BoundaryCurve::Circle { center, radius } => (
                Point2::new(center.x - radius, center.y - radius),
                Point2::new(center.x + radius, center.y + radius),
            ),
            BoundaryCurve::Ellipse { center, semi_axes } => (
                Point2::new(center.x - semi_axes.0, center.y - semi_axes.1),
                Point2::new(center.x + semi_axes.0, center.y + semi_axes.1),
            ),
            BoundaryCurve::Polygon { vertices } => {
                let mut lo = Point2::new(f64::INFINITY, f64::INFINITY);
                let mut hi = Point2::new(f64::NEG_INFINITY, f64::NEG_INFINITY);
                for v in vertices {
                    lo.x = lo.x.min(v.x);
                    lo.y = lo.y.min(v.y);
                    hi.x = hi.x.max(v.x);
                    hi.y = hi.y.max(v.y);
                }
                (lo, hi)
            }
            BoundaryCurve::RoundedRect { min, max, .. } => (*min, *max),
        }
    }

    /// Uniformly scale about the origin.
    pub fn scaled(&self, t: f64) -> BoundaryCurve {
        match self {
            BoundaryCurve::Circle { center, radius } => BoundaryCurve::Circle {
                center: *center * t,
                radius: radius * t,
            },
            BoundaryCurve::Ellipse { center, semi_axes } => BoundaryCurve::Ellipse {
                center: *center * t,
                semi_axes: (semi_axes.0 * t, semi_axes.1 * t),
            },
            BoundaryCurve::Polygon { vertices } => BoundaryCurve::Polygon {
                vertices: vertices.iter().map(|v| *v * t).collect(),
            },
            BoundaryCurve::RoundedRect {
                min,
                max,
                corner_radius,
            } => BoundaryCurve::RoundedRect {
                min: *min * t,
                max: *max * t,
                corner_radius: corner_radius * t,
            },
        }
    }

    pub fn translated(&self, v: Point2) -> BoundaryCurve {
        match self {
            BoundaryCurve::Circle { center, radius } => BoundaryCurve::Circle {
                center: *center + v,
                radius: *radius,
            },
            BoundaryCurve::Ellipse { center, semi_axes } => BoundaryCurve::Ellipse {
                center: *center + v,
                semi_axes: *semi_axes,
            },
            BoundaryCurve::Polygon { vertices } => BoundaryCurve::Polygon {
                vertices: vertices.iter().map(|p| *p + v).collect(),
            },
            BoundaryCurve::RoundedRect {
                min,
                max,
                corner_radius,
            } => BoundaryCurve::RoundedRect {
                min: *min + v,
                max: *max + v,
                corner_radius: *corner_radius,
            },
        }
    }

    /// Outward-normal ray starts: (boundary point, unit outward direction).
    /// Polygons contribute edge samples plus a fan of directions at each
    /// vertex so that corner-anchored extremal widths are seen.
    pub fn normal_ray_samples(&self, m: usize) -> Vec<(Point2, Point2)> {
        match self {
            BoundaryCurve::Circle { center, radius } => (0..m)
                .map(|i| {
                    let t = 2.0 * PI * i as f64 / m as f64;
                    let n = Point2::new(t.cos(), t.sin());
                    (*center + n * *radius, n)
                })
                .collect(),
            BoundaryCurve::Ellipse { center, semi_axes } => {
                let (a, b) = *semi_axes;
                (0..m)
                    .map(|i| {
                        let t = 2.0 * PI * i as f64 / m as f64;
                        let p = *center + Point2::new(a * t.cos(), b * t.sin());
                        let n = Point2::new(b * t.cos(), a * t.sin()).normalized();
                        (p, n)
                    })
                    .collect()
            }
            BoundaryCurve::Polygon { vertices } => {
                let n = vertices.len();
                let perim = self.perimeter();
                let mut out = Vec::new();
                for i in 0..n {
                    let a = vertices[i];
                    let b = vertices[(i + 1) % n];
                    let d = b - a;
                    // CCW polygon: interior is to the left, outward is right.
                    let normal = Point2::new(d.y, -d.x).normalized();
                    let count = ((m as f64 * d.norm() / perim).ceil() as usize).max(2);
                    for j in 0..count {
                        let t = (j as f64 + 0.5) / count as f64;
                        out.push((a + d * t, normal));
                    }
                    // Fan at vertex b between this edge normal and the next.
                    let c = vertices[(i + 2) % n];
                    let next_normal = {
                        let e = c - b;
                        Point2::new(e.y, -e.x).normalized()
                    };
                    let a0 = normal.angle();
                    let span = wrap_positive(next_normal.angle() - a0);
                    if span > 1e-12 && span < PI {
                        let fan = ((m as f64 * span / (2.0 * PI)).ceil() as usize).max(4);
                        for j in 0..=fan {
                            let ang = a0 + span * j as f64 / fan as f64;
                            out.push((b, Point2::new(ang.cos(), ang.sin())));
                        }
                    }
                }
                out
            }
            BoundaryCurve::RoundedRect { .. } => {
                let mut out = Vec::new();
                let per_piece = (m / 8).max(8);
                for piece in self.rounded_rect_pieces() {
                    match piece {
                        RrPiece::Seg(a, b) => {
                            let d = b - a;
                            let normal = Point2::new(d.y, -d.x).normalized();
                            for j in 0..per_piece {
                                let t = (j as f64 + 0.5) / per_piece as f64;
                                out.push((a + d * t, normal));
                            }
                        }
                        RrPiece::Arc(c, r, a0, a1) => {
                            let span = wrap_positive(a1 - a0);
                            for j in 0..=per_piece {
                                let ang = a0 + span * j as f64 / per_piece as f64;
                                let n = Point2::new(ang.cos(), ang.sin());
                                out.push((c + n * r, n));
                            }
                        }
                    }
                }
                out
            }
        }
    }

    fn rounded_rect_pieces(&self) -> Vec<RrPiece> {
        let (min, max, r) = match self {
            BoundaryCurve::RoundedRect {
                min,
                max,
                corner_radius,
            } => (*min, *max, *corner_radius),
            _ => return Vec::new(),
        };
        let c_bl = Point2::new(min.x + r, min.y + r);
        let c_br = Point2::new(max.x - r, min.y + r);
        let c_tr = Point2::new(max.x - r, max.y - r);
        let c_tl = Point2::new(min.x + r, max.y - r);
        vec![
            RrPiece::Seg(Point2::new(c_bl.x, min.y), Point2::new(c_br.x, min.y)),
            RrPiece::Arc(c_br, r, -PI / 2.0, 0.0),
            RrPiece::Seg(Point2::new(max.x, c_br.y), Point2::new(max.x, c_tr.y)),
            RrPiece::Arc(c_tr, r, 0.0, PI / 2.0),
            RrPiece::Seg(Point2::new(c_tr.x, max.y), Point2::new(c_tl.x, max.y)),
            RrPiece::Arc(c_tl, r, PI / 2.0, PI),
            RrPiece::Seg(Point2::new(min.x, c_tl.y), Point2::new(min.x, c_bl.y)),
            RrPiece::Arc(c_bl, r, PI, 3.0 * PI / 2.0),
        ]
    }
}

enum RrPiece {
    Seg(Point2, Point2),
    /// (center, radius, start angle, end angle), counterclockwise.
    Arc(Point2, f64, f64, f64),
}

/// Distance from `p` to the solid core rectangle of a rounded rectangle
/// (the rounded rectangle is the corner-radius offset of that core).
fn core_rect_distance(p: Point2, min: Point2, max: Point2, r: f64) -> f64 {
    let cx = p.x.clamp(min.x + r, max.x - r);
    let cy = p.y.clamp(min.y + r, max.y - r);
    (p - Point2::new(cx, cy)).norm()
}

/// Standard nonzero winding number.
pub fn winding_number(vertices: &[Point2], p: Point2) -> i32 {
    let n = vertices.len();
    let mut wn = 0i32;
    for i in 0..n {
        let a = vertices[i];
        let b = vertices[(i + 1) % n];
        if a.y <= p.y {
            if b.y > p.y && (b - a).cross(p - a) > 0.0 {
                wn += 1;
            }
        } else if b.y <= p.y && (b - a).cross(p - a) < 0.0 {
            wn -= 1;
        }
    }
    wn
}

fn ray_circle_hits(origin: Point2, dir: Point2, center: Point2, radius: f64) -> Vec<f64> {
    let o = origin - center;
    let a = dir.norm_sq();
    let b = 2.0 * o.dot(dir);
    let c = o.norm_sq() - radius * radius;
    let disc = b * b - 4.0 * a * c;
    if disc < 0.0 || a == 0.0 {
        return Vec::new();
    }
    let sq = disc.sqrt();
    vec![(-b - sq) / (2.0 * a), (-b + sq) / (2.0 * a)]
}

fn ray_segment_hit(origin: Point2, dir: Point2, a: Point2, b: Point2) -> Option<f64> {
    let d = b - a;
    let denom = dir.cross(d);
    if denom.abs() < 1e-15 {
        return None;
    }
    let r = a - origin;
    let t = r.cross(d) / denom;
    let s = r.cross(dir) / denom;
    if t > 0.0 && (-1e-12..=1.0 + 1e-12).contains(&s) {
        Some(t)
    } else {
        None
    }
}

fn angle_in_range(ang: f64, a0: f64, a1: f64) -> bool {
    let span = wrap_positive(a1 - a0);
    let rel = wrap_positive(ang - a0);
    rel <= span + 1e-12
}

fn wrap_positive(mut ang: f64) -> f64 {
    while ang < 0.0 {
        ang += 2.0 * PI;
    }
    while ang >= 2.0 * PI {
        ang -= 2.0 * PI;
    }
    ang
}

fn adaptive_simpson(f: &dyn Fn(f64) -> f64, a: f64, b: f64, tol: f64, depth: u32) -> f64 {
    fn simpson(f: &dyn Fn(f64) -> f64, a: f64, b: f64) -> f64 {
        (b - a) / 6.0 * (f(a) + 4.0 * f(0.5 * (a + b)) + f(b))
    }
    fn recurse(
        f: &dyn Fn(f64) -> f64,
        a: f64,
        b: f64,
        whole: f64,
        tol: f64,
        depth: u32,
    ) -> f64 {
        let m = 0.5 * (a + b);
        let left = simpson(f, a, m);
        let right = simpson(f, m, b);
        if depth == 0 || (left + right - whole).abs() < 15.0 * tol {
            left + right + (left + right - whole) / 15.0
        } else {
            recurse(f, a, m, left, tol / 2.0, depth - 1)
                + recurse(f, m, b, right, tol / 2.0, depth - 1)
        }
    }
    let whole = simpson(f, a, b);
    recurse(f, a, b, whole, tol * whole.abs().max(1.0), depth)
}

/// Golden-section minimizer on [a, b].
pub(crate) fn golden_min(f: &dyn Fn(f64) -> f64, mut a: f64, mut b: f64, tol: f64) -> f64 {
    let phi = (5.0f64.sqrt() - 1.0) / 2.0;
    let mut c = b - phi * (b - a);
    let mut d = a + phi * (b - a);
    let mut fc = f(c);
    let mut fd = f(d);
    while (b - a).abs() > tol {
        if fc < fd {
            b = d;
            d = c;
            fd = fc;
            c = b - phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + phi * (b - a);
            fd = f(d);
        }
    }
    0.5 * (a + b)
}
