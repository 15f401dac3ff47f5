//! Planar domains: an outer boundary, hole boundaries and puncture points.

use super::curve::BoundaryCurve;
use super::{Point2, BOUNDARY_TOL};
use crate::error::{FluxgapError, Result};

/// A bounded planar domain with holes and punctures. The number of holes
/// plus punctures is the topological complexity n.
#[derive(Debug, Clone, PartialEq)]
pub struct PlanarDomain {
    pub outer: BoundaryCurve,
    pub holes: Vec<BoundaryCurve>,
    pub punctures: Vec<Point2>,
}

impl PlanarDomain {
    pub fn new(
        outer: BoundaryCurve,
        holes: Vec<BoundaryCurve>,
        punctures: Vec<Point2>,
    ) -> Result<Self> {
        let domain = PlanarDomain {
            outer,
            holes,
            punctures,
        };
        domain.validate()?;
        Ok(domain)
    }

    pub fn simply_connected(outer: BoundaryCurve) -> Result<Self> {
        PlanarDomain::new(outer, Vec::new(), Vec::new())
    }

    fn validate(&self) -> Result<()> {
        const SAMPLES: usize = 256;
        for (i, hole) in self.holes.iter().enumerate() {
            for p in hole.to_polyline(SAMPLES) {
                if !self.outer.contains(p) {
                    return Err(FluxgapError::InvalidGeometry(format!(
                        "hole {i} is not strictly inside the outer boundary"
                    )));
                }
            }
            for (j, other) in self.holes.iter().enumerate().skip(i + 1) {
                // Disjoint closures: no boundary sample of one may lie in or
                // near the other.
                for p in hole.to_polyline(SAMPLES) {
                    if other.contains(p) || other.distance_to(p) <= BOUNDARY_TOL {
                        return Err(FluxgapError::InvalidGeometry(format!(
                            "hole closures {i} and {j} intersect"
                        )));
                    }
                }
                if hole.contains(other.centroid()) {
                    return Err(FluxgapError::InvalidGeometry(format!(
                        "hole {j} lies inside hole {i}"
                    )));
                }
            }
        }
        for (i, p) in self.punctures.iter().enumerate() {
            if !self.contains_ignoring_punctures(*p) {
                return Err(FluxgapError::InvalidGeometry(format!(
                    "puncture {i} at ({}, {}) is not in the open domain",
                    p.x, p.y
                )));
            }
        }
        for (i, p) in self.punctures.iter().enumerate() {
            for q in self.punctures.iter().skip(i + 1) {
                if p.dist(*q) <= BOUNDARY_TOL {
                    return Err(FluxgapError::InvalidGeometry(
                        "punctures are not pairwise distinct".into(),
                    ));
                }
            }
        }
        Ok(())
    }

    /// Number of holes plus punctures.
    pub fn n(&self) -> usize {
        self.holes.len() + self.punctures.len()
    }

    /// Area of the outer region minus the hole areas; punctures contribute
    /// zero measure.
    pub fn area(&self) -> f64 {
        self.outer.enclosed_area() - self.holes.iter().map(|h| h.enclosed_area()).sum::<f64>()
    }

    fn contains_ignoring_punctures(&self, p: Point2) -> bool {
        if !self.outer.contains(p) {
            return false;
        }
        for hole in &self.holes {
            if hole.contains(p) || hole.distance_to(p) <= BOUNDARY_TOL {
                return false;
            }
        }
        true
    }

    /// Strict membership in the open set (inside outer, outside all hole
    /// closures). Punctures are measure zero and not tested here.
    pub fn contains(&self, p: Point2) -> bool {
        self.contains_ignoring_punctures(p)
    }

    /// Minimal distance to the outer and hole boundaries. Punctures do not
    /// count as boundary here.
    pub fn distance_to_boundary(&self, p: Point2) -> Result<f64> {
        if !self.contains(p) {
            return Err(FluxgapError::PointOutsideDomain { x: p.x, y: p.y });
        }
        let mut d = self.outer.distance_to(p);
        for hole in &self.holes {
            d = d.min(hole.distance_to(p));
        }
        Ok(d)
    }

    /// Interior-ball radius of the boundary: analytic for hole-free domains,
    /// zero as soon as holes are present (the interior-ball hypotheses of the
    /// net lemmas only apply to convex hole-free domains).
    pub fn interior_ball_radius(&self) -> f64 {
        if self.holes.is_empty() {
            self.outer.interior_ball_radius()
        } else {
            0.0
        }
    }

    pub fn is_convex(&self) -> bool {
        self.holes.is_empty() && self.outer.is_convex()
    }

    pub fn bbox(&self) -> (Point2, Point2) {
        self.outer.bbox()
    }

    pub fn scaled(&self, t: f64) -> PlanarDomain {
        PlanarDomain {
            outer: self.outer.scaled(t),
            holes: self.holes.iter().map(|h| h.scaled(t)).collect(),
            punctures: self.punctures.iter().map(|p| *p * t).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn unit_disk() -> PlanarDomain {
        PlanarDomain::simply_connected(
            BoundaryCurve::circle(Point2::new(0.0, 0.0), 1.0).unwrap(),
        )
        .unwrap()
    }

    fn annulus(r1: f64, r2: f64) -> PlanarDomain {
        PlanarDomain::new(
            BoundaryCurve::circle(Point2::new(0.0, 0.0), r2).unwrap(),
            vec![BoundaryCurve::circle(Point2::new(0.0, 0.0), r1).unwrap()],
            vec![],
        )
        .unwrap()
    }

    #[test]
    fn disk_area_is_pi() {
        assert!((unit_disk().area() - PI).abs() < 1e-14);
    }

    #[test]
    fn annulus_area_and_topology() {
        let a = annulus(0.5, 1.0);
        assert!((a.area() - 0.75 * PI).abs() < 1e-14);
        assert_eq!(a.n(), 1);
        assert!(a.contains(Point2::new(0.75, 0.0)));
        assert!(!a.contains(Point2::new(0.0, 0.0)));
        assert!(!a.contains(Point2::new(0.25, 0.0)));
    }

    #[test]
    fn distance_to_boundary_cases() {
        let d = unit_disk();
        assert!((d.distance_to_boundary(Point2::new(0.0, 0.0)).unwrap() - 1.0).abs() < 1e-14);
        assert!((d.distance_to_boundary(Point2::new(0.9, 0.0)).unwrap() - 0.1).abs() < 1e-12);
        let a = annulus(0.5, 1.0);
        assert!(
            (a.distance_to_boundary(Point2::new(0.25 + 0.5, 0.0)).unwrap() - 0.25).abs() < 1e-12
        );
        assert!(a.distance_to_boundary(Point2::new(0.0, 0.0)).is_err());
    }

    #[test]
    fn hole_outside_outer_rejected() {
        let res = PlanarDomain::new(
            BoundaryCurve::circle(Point2::new(0.0, 0.0), 1.0).unwrap(),
            vec![BoundaryCurve::circle(Point2::new(2.0, 0.0), 0.2).unwrap()],
            vec![],
        );
        assert!(res.is_err());
    }

    #[test]
    fn puncture_must_be_interior() {
        let res = PlanarDomain::new(
            BoundaryCurve::circle(Point2::new(0.0, 0.0), 1.0).unwrap(),
            vec![],
            vec![Point2::new(2.0, 0.0)],
        );
        assert!(res.is_err());
        let ok = PlanarDomain::new(
            BoundaryCurve::circle(Point2::new(0.0, 0.0), 1.0).unwrap(),
            vec![],
            vec![Point2::new(0.3, 0.2)],
        );
        assert!(ok.is_ok());
        assert_eq!(ok.unwrap().n(), 1);
    }

    #[test]
    fn area_scales_quadratically() {
        let a = annulus(0.5, 1.0);
        for t in [0.5, 2.0, 5.0] {
            assert!((a.scaled(t).area() - t * t * a.area()).abs() < 1e-12 * t * t);
        }
    }

    #[test]
    fn interior_ball_radius_per_kind() {
        assert!((unit_disk().interior_ball_radius() - 1.0).abs() < 1e-14);
        let square = PlanarDomain::simply_connected(
            BoundaryCurve::rectangle(Point2::new(0.0, 0.0), Point2::new(1.0, 1.0)).unwrap(),
        )
        .unwrap();
        assert_eq!(square.interior_ball_radius(), 0.0);
        // Holes force delta to zero regardless of the outer curve.
        assert_eq!(annulus(0.5, 1.0).interior_ball_radius(), 0.0);
    }
}
