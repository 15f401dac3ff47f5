//! Convex-polygon primitives: hulls, diameters, half-plane clipping and the
//! exact polygon/disk overlap area used by Voronoi cells and raster checks.

use super::Point2;

/// Signed (shoelace) area; positive for counterclockwise orientation.
pub fn polygon_area(vertices: &[Point2]) -> f64 {
    let n = vertices.len();
    let mut acc = 0.0;
    for i in 0..n {
        let a = vertices[i];
        let b = vertices[(i + 1) % n];
        acc += a.cross(b);
    }
    0.5 * acc
}

/// Area centroid of a simple polygon.
pub fn polygon_centroid(vertices: &[Point2]) -> Point2 {
    let n = vertices.len();
    let mut cx = 0.0;
    let mut cy = 0.0;
    let mut area = 0.0;
    for i in 0..n {
        let a = vertices[i];
        let b = vertices[(i + 1) % n];
        let w = a.cross(b);
        cx += (a.x + b.x) * w;
        cy += (a.y + b.y) * w;
        area += w;
    }
    Point2::new(cx / (3.0 * area), cy / (3.0 * area))
}

pub fn polygon_is_convex(vertices: &[Point2]) -> bool {
    let n = vertices.len();
    if n < 3 {
        return false;
    }
    let mut sign = 0.0f64;
    for i in 0..n {
        let a = vertices[i];
        let b = vertices[(i + 1) % n];
        let c = vertices[(i + 2) % n];
        let cr = (b - a).cross(c - b);
        if cr.abs() > 1e-14 {
            if sign != 0.0 && cr.signum() != sign {
                return false;
            }
            sign = cr.signum();
        }
    }
    true
}

/// Andrew monotone-chain convex hull, counterclockwise.
pub fn convex_hull(points: &[Point2]) -> Vec<Point2> {
    let mut pts: Vec<Point2> = points.to_vec();
    pts.sort_by(|a, b| (a.x, a.y).partial_cmp(&(b.x, b.y)).unwrap());
    pts.dedup_by(|a, b| a.dist(*b) < 1e-15);
    let n = pts.len();
    if n < 3 {
        return pts;
    }
    let mut hull: Vec<Point2> = Vec::with_capacity(2 * n);
    for &p in pts.iter() {
        while hull.len() >= 2 {
            let q = hull[hull.len() - 1];
            let r = hull[hull.len() - 2];
            if (q - r).cross(p - q) <= 0.0 {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(p);
    }
    let lower_len = hull.len() + 1;
    for &p in pts.iter().rev() {
        while hull.len() >= lower_len {
            let q = hull[hull.len() - 1];
            let r = hull[hull.len() - 2];
            if (q - r).cross(p - q) <= 0.0 {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(p);
    }
    hull.pop();
    hull
}

/// Maximum pairwise distance over the hull of `points`.
pub fn hull_diameter(points: &[Point2]) -> f64 {
    let hull = convex_hull(points);
    let mut best = 0.0f64;
    for i in 0..hull.len() {
        for j in (i + 1)..hull.len() {
            best = best.max(hull[i].dist(hull[j]));
        }
    }
    best
}

/// Clip a polygon against the half-plane `normal . x <= offset`
/// (Sutherland-Hodgman step). Returns an empty vector when nothing remains.
pub fn clip_polygon_halfplane(vertices: &[Point2], normal: Point2, offset: f64) -> Vec<Point2> {
    let n = vertices.len();
    if n == 0 {
        return Vec::new();
    }
    let mut out = Vec::with_capacity(n + 2);
    for i in 0..n {
        let a = vertices[i];
        let b = vertices[(i + 1) % n];
        let da = normal.dot(a) - offset;
        let db = normal.dot(b) - offset;
        if da <= 0.0 {
            out.push(a);
        }
        if (da < 0.0 && db > 0.0) || (da > 0.0 && db < 0.0) {
            let t = da / (da - db);
            out.push(a + (b - a) * t);
        }
    }
    out
}

/// Exact area of the intersection of a simple polygon with the disk of
/// radius `r` centered at `c`, by Green's theorem along the polygon edges
/// with circular-sector contributions for the parts outside the disk.
pub fn polygon_circle_area(vertices: &[Point2], c: Point2, r: f64) -> f64 {
    let n = vertices.len();
    if n < 3 {
        return 0.0;
    }
    let mut total = 0.0;
    for i in 0..n {
        let a = vertices[i] - c;
        let b = vertices[(i + 1) % n] - c;
        total += edge_disk_contribution(a, b, r);
    }
    total
}

// Contribution of the directed edge a -> b (circle centered at the origin):
// triangle terms for the part inside the disk, sector terms outside.
fn edge_disk_contribution(a: Point2, b: Point2, r: f64) -> f64 {
    let r2 = r * r;
    let a_in = a.norm_sq() <= r2;
    let b_in = b.norm_sq() <= r2;
    if a_in && b_in {
        return 0.5 * a.cross(b);
    }
    // Intersection parameters of the segment with the circle.
    let d = b - a;
    let qa = d.norm_sq();
    let qb = 2.0 * a.dot(d);
    let qc = a.norm_sq() - r2;
    let disc = qb * qb - 4.0 * qa * qc;
    let sector = |u: Point2, v: Point2| -> f64 {
        let ang = wrap_angle(v.angle() - u.angle());
        0.5 * r2 * ang
    };
    if disc <= 0.0 {
        // Entirely outside: sweep a sector.
        return sector(a, b);
    }
    let sq = disc.sqrt();
    let t0 = ((-qb - sq) / (2.0 * qa)).clamp(0.0, 1.0);
    let t1 = ((-qb + sq) / (2.0 * qa)).clamp(0.0, 1.0);
    if t0 >= t1 {
        return sector(a, b);
    }
    let p0 = a + d * t0;
    let p1 = a + d * t1;
    let mut acc = 0.0;
    if t0 > 0.0 {
        acc += sector(a, p0);
    }
    acc += 0.5 * p0.cross(p1);
    if t1 < 1.0 {
        acc += sector(p1, b);
    }
    acc
}

fn wrap_angle(mut ang: f64) -> f64 {
    use std::f64::consts::PI;
    while ang > PI {
        ang -= 2.0 * PI;
    }
    while ang <= -PI {
        ang += 2.0 * PI;
    }
    ang
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn square(half: f64) -> Vec<Point2> {
        vec![
            Point2::new(-half, -half),
            Point2::new(half, -half),
            Point2::new(half, half),
            Point2::new(-half, half),
        ]
    }

    #[test]
    fn shoelace_matches_triangle_fan() {
        // Convex polygon: shoelace equals the sum of triangle-fan areas.
        let poly = vec![
            Point2::new(0.0, 0.0),
            Point2::new(2.0, 0.0),
            Point2::new(3.0, 1.5),
            Point2::new(1.0, 3.0),
            Point2::new(-0.5, 1.0),
        ];
        let shoelace = polygon_area(&poly);
        let p0 = poly[0];
        let mut fan = 0.0;
        for i in 1..poly.len() - 1 {
            fan += 0.5 * (poly[i] - p0).cross(poly[i + 1] - p0);
        }
        assert!((shoelace - fan).abs() / fan.abs() < 1e-12);
    }

    #[test]
    fn hull_diameter_square() {
        let d = hull_diameter(&square(1.0));
        assert!((d - 2.0 * 2.0f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn clip_keeps_half() {
        // Keep x <= 0 of the unit square centered at the origin.
        let clipped = clip_polygon_halfplane(&square(1.0), Point2::new(1.0, 0.0), 0.0);
        assert!((polygon_area(&clipped) - 2.0).abs() < 1e-12);
    }

    #[test]
    fn disk_inside_polygon() {
        // Small disk fully inside a big square: overlap is the disk.
        let a = polygon_circle_area(&square(10.0), Point2::new(1.0, 2.0), 0.5);
        assert!((a - PI * 0.25).abs() < 1e-12);
    }

    #[test]
    fn polygon_inside_disk() {
        let a = polygon_circle_area(&square(0.5), Point2::new(0.0, 0.0), 10.0);
        assert!((a - 1.0).abs() < 1e-12);
    }

    #[test]
    fn half_overlap() {
        // Square [0,2]^2 against unit disk at origin: overlap is a quarter disk.
        let poly = vec![
            Point2::new(0.0, 0.0),
            Point2::new(2.0, 0.0),
            Point2::new(2.0, 2.0),
            Point2::new(0.0, 2.0),
        ];
        let a = polygon_circle_area(&poly, Point2::new(0.0, 0.0), 1.0);
        assert!((a - PI / 4.0).abs() < 1e-12);
    }

    #[test]
    fn overlap_matches_raster_on_random_offsetsderived() {
        // Raster-count oracle at fine resolution for a handful of offsets.
        let poly = square(1.0);
        for (dx, dy, r) in [(0.3, 0.1, 0.9), (1.0, 0.0, 0.7), (0.9, 0.9, 0.6)] {
            let c = Point2::new(dx, dy);
            let exact = polygon_circle_area(&poly, c, r);
            let n = 1200usize;
            let h = 2.0 * r / n as f64;
            let mut count = 0u64;
            for i in 0..n {
                for j in 0..n {
                    let p = Point2::new(
                        c.x - r + (i as f64 + 0.5) * h,
                        c.y - r + (j as f64 + 0.5) * h,
                    );
                    if (p - c).norm_sq() <= r * r
                        && p.x.abs() <= 1.0
                        && p.y.abs() <= 1.0
                    {
                        count += 1;
                    }
                }
            }
            let approx = count as f64 * h * h;
            assert!(
                (exact - approx).abs() < 3e-3 * exact.max(1e-3),
                "exact {exact} vs raster {approx}"
            );
        }
    }
}
