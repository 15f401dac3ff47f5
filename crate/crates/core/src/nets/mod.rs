//! Maximal epsilon-nets, packing-count estimates and the good-ball search.

mod goodball;
mod voronoi;

pub use goodball::{good_ball, raster_ball_area, GoodBall, GOOD_BALL_RATIO};
pub use voronoi::{
    verify_partition_inclusions, voronoi_partition, InclusionReport, VoronoiCell,
    VoronoiPartition,
};

use crate::error::{FluxgapError, Result};
use crate::geometry::{PlanarDomain, Point2};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// A maximal epsilon-net: points pairwise at least epsilon apart and at
/// least epsilon from the boundary, to which no probe-lattice point can be
/// added. Maximality is certified against the recorded probe resolution,
/// not the continuum.
#[derive(Debug, Clone, PartialEq)]
pub struct EpsNet {
    pub epsilon: f64,
    /// Probe-lattice spacing the net was built and certified on.
    pub probe: f64,
    pub points: Vec<Point2>,
}

impl EpsNet {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

/// Greedy maximal epsilon-net over a probe lattice in raster order.
/// Deterministic; see [`maximal_eps_net_seeded`] for randomized insertion.
pub fn maximal_eps_net(domain: &PlanarDomain, epsilon: f64, probe: f64) -> Result<EpsNet> {
    maximal_eps_net_impl(domain, epsilon, probe, None)
}

/// Greedy maximal epsilon-net with seeded random insertion order, followed by
/// a raster certification pass that inserts anything still admissible.
pub fn maximal_eps_net_seeded(
    domain: &PlanarDomain,
    epsilon: f64,
    probe: f64,
    seed: u64,
) -> Result<EpsNet> {
    maximal_eps_net_impl(domain, epsilon, probe, Some(seed))
}

fn maximal_eps_net_impl(
    domain: &PlanarDomain,
    epsilon: f64,
    probe: f64,
    seed: Option<u64>,
) -> Result<EpsNet> {
    if !domain.is_convex() {
        return Err(FluxgapError::InvalidParameter(
            "maximal epsilon-nets require a convex domain".into(),
        ));
    }
    if !(epsilon > 0.0) || !(probe > 0.0) || probe > epsilon / 10.0 + 1e-15 {
        return Err(FluxgapError::InvalidParameter(format!(
            "need 0 < probe <= epsilon/10, got probe {probe}, epsilon {epsilon}"
        )));
    }
    let admissible = |p: Point2| -> bool {
        domain.contains(p)
            && domain
                .distance_to_boundary(p)
                .map(|d| d >= epsilon - 1e-12)
                .unwrap_or(false)
    };
    let probes = probe_lattice(domain, probe, &admissible);
    let mut order: Vec<usize> = (0..probes.len()).collect();
    if let Some(seed) = seed {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        order.shuffle(&mut rng);
    }
    let mut points: Vec<Point2> = Vec::new();
    let mut insert_pass = |order: &[usize], points: &mut Vec<Point2>| {
        for &i in order {
            let p = probes[i];
            if points.iter().all(|q| q.dist(p) >= epsilon - 1e-12) {
                points.push(p);
            }
        }
    };
    insert_pass(&order, &mut points);
    if seed.is_some() {
        // Certification pass in raster order; a maximal net gains nothing.
        let raster: Vec<usize> = (0..probes.len()).collect();
        insert_pass(&raster, &mut points);
    }
    if points.is_empty() {
        return Err(FluxgapError::EmptyNet { epsilon });
    }
    Ok(EpsNet {
        epsilon,
        probe,
        points,
    })
}

/// Probe-lattice maximality: every admissible probe point (at least epsilon
/// from the boundary) lies within epsilon of some net point.
pub fn certify_maximality(domain: &PlanarDomain, net: &EpsNet) -> bool {
    let admissible = |p: Point2| -> bool {
        domain.contains(p)
            && domain
                .distance_to_boundary(p)
                .map(|d| d >= net.epsilon - 1e-12)
                .unwrap_or(false)
    };
    for p in probe_lattice(domain, net.probe, &admissible) {
        let near = net
            .points
            .iter()
            .any(|q| q.dist(p) <= net.epsilon + 1e-12);
        if !near {
            return false;
        }
    }
    true
}

fn probe_lattice(
    domain: &PlanarDomain,
    probe: f64,
    admissible: &dyn Fn(Point2) -> bool,
) -> Vec<Point2> {
    let (lo, hi) = domain.bbox();
    let nx = ((hi.x - lo.x) / probe).ceil() as usize + 1;
    let ny = ((hi.y - lo.y) / probe).ceil() as usize + 1;
    let mut out = Vec::new();
    for j in 0..ny {
        for i in 0..nx {
            let p = Point2::new(lo.x + i as f64 * probe, lo.y + j as f64 * probe);
            if admissible(p) {
                out.push(p);
            }
        }
    }
    out
}

/// Maximal packing: points pairwise at least `sep` apart inside the disk of
/// radius `radius` about `center` (no boundary clearance), greedy over a
/// probe lattice with optional seeded insertion order.
pub fn maximal_packing_in_ball(
    center: Point2,
    radius: f64,
    sep: f64,
    probe: f64,
    seed: Option<u64>,
) -> Vec<Point2> {
    let pred = |p: Point2| p.dist(center) <= radius;
    greedy_packing(
        Point2::new(center.x - radius, center.y - radius),
        Point2::new(center.x + radius, center.y + radius),
        &pred,
        sep,
        probe,
        seed,
    )
}

/// Greedy maximal `sep`-separated point set over the probe lattice inside
/// the predicate region.
pub fn greedy_packing(
    lo: Point2,
    hi: Point2,
    region: &dyn Fn(Point2) -> bool,
    sep: f64,
    probe: f64,
    seed: Option<u64>,
) -> Vec<Point2> {
    let nx = ((hi.x - lo.x) / probe).ceil() as usize + 1;
    let ny = ((hi.y - lo.y) / probe).ceil() as usize + 1;
    let mut probes = Vec::new();
    for j in 0..ny {
        for i in 0..nx {
            let p = Point2::new(lo.x + i as f64 * probe, lo.y + j as f64 * probe);
            if region(p) {
                probes.push(p);
            }
        }
    }
    let mut order: Vec<usize> = (0..probes.len()).collect();
    if let Some(seed) = seed {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        order.shuffle(&mut rng);
    }
    let mut points: Vec<Point2> = Vec::new();
    for &i in &order {
        let p = probes[i];
        if points.iter().all(|q| q.dist(p) >= sep - 1e-12) {
            points.push(p);
        }
    }
    // Raster pass so shuffled runs are still probe-maximal.
    for &p in &probes {
        if points.iter().all(|q| q.dist(p) >= sep - 1e-12) {
            points.push(p);
        }
    }
    points
}

/// Packing-count estimate for the maximal number N(a, b) of b-separated
/// points in a ball of radius a: (a/b)^2 <= N <= ((2a + b)/b)^2.
pub fn packing_count_bounds(a: f64, b: f64) -> Result<(f64, f64)> {
    if !(a > b && b > 0.0) {
        return Err(FluxgapError::InvalidParameter(format!(
            "packing bounds need a > b > 0, got ({a}, {b})"
        )));
    }
    let lower = (a / b) * (a / b);
    let upper = ((2.0 * a + b) / b) * ((2.0 * a + b) / b);
    Ok((lower, upper))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::make_disk;
    use crate::geometry::BoundaryCurve;

    #[test]
    fn tight_epsilon_leaves_only_center() {
        let disk = make_disk(1.0).unwrap();
        let net = maximal_eps_net(&disk, 1.0, 0.1).unwrap();
        assert_eq!(net.len(), 1);
        assert!(net.points[0].norm() < 1e-9);
    }

    #[test]
    fn net_cardinality_bound() {
        let disk = make_disk(1.0).unwrap();
        let net = maximal_eps_net(&disk, 0.25, 0.025).unwrap();
        let bound = 4.0 * disk.area() / (std::f64::consts::PI * 0.0625);
        assert!(net.len() as f64 <= bound, "{} > {bound}", net.len());
        assert!(certify_maximality(&disk, &net));
    }

    #[test]
    fn separation_and_boundary_distance() {
        let square = PlanarDomain::simply_connected(
            BoundaryCurve::rectangle(Point2::new(-1.0, -1.0), Point2::new(1.0, 1.0)).unwrap(),
        )
        .unwrap();
        let net = maximal_eps_net(&square, 0.5, 0.05).unwrap();
        for (i, p) in net.points.iter().enumerate() {
            assert!(square.distance_to_boundary(*p).unwrap() >= 0.5 - 1e-9);
            for q in net.points.iter().skip(i + 1) {
                assert!(p.dist(*q) >= 0.5 - 1e-9);
            }
        }
    }

    #[test]
    fn seeded_nets_are_maximal_and_deterministic() {
        let disk = make_disk(1.0).unwrap();
        let n1 = maximal_eps_net_seeded(&disk, 0.3, 0.03, 7).unwrap();
        let n2 = maximal_eps_net_seeded(&disk, 0.3, 0.03, 7).unwrap();
        assert_eq!(n1, n2);
        assert!(certify_maximality(&disk, &n1));
    }

    #[test]
    fn empty_net_is_error() {
        let disk = make_disk(0.4).unwrap();
        assert!(matches!(
            maximal_eps_net(&disk, 1.0, 0.1),
            Err(FluxgapError::EmptyNet { .. })
        ));
    }

    #[test]
    fn non_convex_rejected() {
        let annulus = crate::families::make_annulus(0.5, 1.0).unwrap();
        assert!(maximal_eps_net(&annulus, 0.1, 0.01).is_err());
    }

    #[test]
    fn packing_bounds_values() {
        let (lo, hi) = packing_count_bounds(2.0, 1.0).unwrap();
        assert_eq!((lo, hi), (4.0, 25.0));
        let (lo, hi) = packing_count_bounds(1.0, 0.5).unwrap();
        assert_eq!((lo, hi), (4.0, 25.0));
        assert!(packing_count_bounds(1.0, 1.0).is_err());
    }

    #[test]
    fn empirical_packing_in_bounds() {
        // Greedy maximal 0.5-nets in the unit ball over random restarts.
        let (lo, hi) = packing_count_bounds(1.0, 0.5).unwrap();
        for seed in 0..20u64 {
            let pts =
                maximal_packing_in_ball(Point2::new(0.0, 0.0), 1.0, 0.5, 0.05, Some(seed));
            let n = pts.len() as f64;
            assert!(n >= lo && n <= hi, "seed {seed}: {n} outside [{lo}, {hi}]");
        }
    }
}
