//! Search for a ball avoiding every pole with controlled area growth.

use crate::error::{FluxgapError, Result};
use crate::geometry::{PlanarDomain, Point2};
use crate::par;

/// Area-growth threshold guaranteed by the packing argument.
pub const GOOD_BALL_RATIO: f64 = 34.0;

/// A ball B(center, radius) with no pole inside B(center, 2 radius) and
/// |B(center, 2r) ∩ Ω| / |B(center, r) ∩ Ω| below [`GOOD_BALL_RATIO`].
#[derive(Debug, Clone, Copy)]
pub struct GoodBall {
    pub center: Point2,
    pub radius: f64,
    pub area_ratio: f64,
}

/// Radius used by the good-ball search: (1/(4 sqrt pi)) sqrt(area/n).
pub fn good_ball_radius(area: f64, n: usize) -> f64 {
    (area / n as f64).sqrt() / (4.0 * std::f64::consts::PI.sqrt())
}

/// Finds a good ball: removes the 2r-disks around the poles, builds a
/// maximal r-separated net in the remainder and returns the first net point
/// whose raster area ratio is at most 34. The packing argument guarantees
/// one exists; failure at the sampling resolution is reported as an error,
/// not a disproof.
pub fn good_ball(domain: &PlanarDomain, poles: &[Point2]) -> Result<GoodBall> {
    let n = poles.len();
    if n == 0 {
        return Err(FluxgapError::InvalidParameter(
            "good ball needs at least one pole".into(),
        ));
    }
    let r = good_ball_radius(domain.area(), n);
    let region = |p: Point2| -> bool {
        domain.contains(p) && poles.iter().all(|q| q.dist(p) >= 2.0 * r)
    };
    let (lo, hi) = domain.bbox();
    let net = super::greedy_packing(lo, hi, &region, r, r / 10.0, None);
    for q in net {
        let outer = raster_ball_area(domain, q, 2.0 * r, r / 200.0);
        let inner = raster_ball_area(domain, q, r, r / 200.0);
        if inner <= 0.0 {
            continue;
        }
        let ratio = outer / inner;
        if ratio <= GOOD_BALL_RATIO {
            return Ok(GoodBall {
                center: q,
                radius: r,
                area_ratio: ratio,
            });
        }
    }
    Err(FluxgapError::ResolutionFailure(format!(
        "no net point with area ratio <= {GOOD_BALL_RATIO} at raster spacing {:.3e}",
        r / 200.0
    )))
}

/// Deterministic raster count of |B(center, radius) ∩ Ω| at the given cell
/// spacing (cell midpoints, chunked rows).
pub fn raster_ball_area(domain: &PlanarDomain, center: Point2, radius: f64, spacing: f64) -> f64 {
    let cells = (2.0 * radius / spacing).ceil() as usize;
    let x0 = center.x - radius;
    let y0 = center.y - radius;
    let r2 = radius * radius;
    let counts = par::chunk_map(cells, |lo, hi| {
        let mut count = 0u64;
        for j in lo..hi {
            let y = y0 + (j as f64 + 0.5) * spacing;
            for i in 0..cells {
                let p = Point2::new(x0 + (i as f64 + 0.5) * spacing, y);
                if (p - center).norm_sq() <= r2 && domain.contains(p) {
                    count += 1;
                }
            }
        }
        count
    });
    counts.into_iter().sum::<u64>() as f64 * spacing * spacing
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{make_disk, make_square};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;
    use std::f64::consts::PI;

    #[test]
    fn radius_formula() {
        // Disk of area pi with one pole: r = (1/(4 sqrt pi)) sqrt(pi) = 1/4.
        assert!((good_ball_radius(PI, 1) - 0.25).abs() < 1e-15);
    }

    #[test]
    fn unclipped_ball_ratio_is_four() {
        // Far from the boundary the ratio reduces to area scaling (2r/r)^2.
        let big = make_disk(100.0).unwrap();
        let a2 = raster_ball_area(&big, Point2::new(0.0, 0.0), 2.0, 0.01);
        let a1 = raster_ball_area(&big, Point2::new(0.0, 0.0), 1.0, 0.005);
        assert!((a2 / a1 - 4.0).abs() < 1e-2);
    }

    #[test]
    fn raster_area_matches_monte_carlo() {
        let disk = make_disk(1.0).unwrap();
        let center = Point2::new(0.6, 0.0);
        let radius = 0.5;
        let raster = raster_ball_area(&disk, center, radius, radius / 200.0);
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let samples = 1_000_000usize;
        let mut hits = 0usize;
        for _ in 0..samples {
            let p = Point2::new(
                center.x + radius * (2.0 * rng.gen::<f64>() - 1.0),
                center.y + radius * (2.0 * rng.gen::<f64>() - 1.0),
            );
            if (p - center).norm_sq() <= radius * radius && disk.contains(p) {
                hits += 1;
            }
        }
        let mc = hits as f64 / samples as f64 * (2.0 * radius) * (2.0 * radius);
        assert!((raster - mc).abs() / raster < 5e-3, "raster {raster} mc {mc}");
    }

    #[test]
    fn good_ball_found_for_random_poles() {
        let square = make_square(1.0).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..3 {
            let n = rng.gen_range(1..=6);
            let poles: Vec<Point2> = (0..n)
                .map(|_| Point2::new(rng.gen::<f64>(), rng.gen::<f64>()))
                .collect();
            let ball = good_ball(&square, &poles).unwrap();
            assert!(ball.area_ratio <= GOOD_BALL_RATIO);
            for p in &poles {
                assert!(p.dist(ball.center) >= 2.0 * ball.radius - 1e-12);
            }
        }
    }
}
