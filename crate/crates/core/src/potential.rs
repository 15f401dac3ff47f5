//! Closed Aharonov-Bohm potentials with poles: line-integral phases, loop
//! fluxes and distances of fluxes to the integers.
//!
//! A pole at `p` with flux `phi` contributes the closed 1-form `phi * dtheta`
//! centered at `p`; sums of such poles realize any prescribed flux vector on
//! a domain with holes and punctures.

use crate::error::{FluxgapError, Result};
use crate::geometry::{PlanarDomain, Point2, Segment};

/// One Aharonov-Bohm pole: position and dimensionless flux.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Pole {
    pub position: Point2,
    pub flux: f64,
}

/// A closed 1-form given as a sum of pole potentials.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct PolePotential {
    pub poles: Vec<Pole>,
}

/// Per-component fluxes with their distances to the nearest integer.
#[derive(Debug, Clone, PartialEq)]
pub struct FluxReport {
    pub fluxes: Vec<f64>,
    /// |flux - nearest integer|, each in [0, 1/2].
    pub dist_to_integers: Vec<f64>,
    /// min over components; zero when any flux is integral.
    pub min_dist: f64,
}

impl PolePotential {
    pub fn empty() -> Self {
        PolePotential { poles: Vec::new() }
    }

    pub fn new(poles: Vec<Pole>) -> Result<Self> {
        for (i, p) in poles.iter().enumerate() {
            for q in poles.iter().skip(i + 1) {
                if p.position.dist(q.position) <= 1e-12 {
                    return Err(FluxgapError::InvalidGeometry(
                        "pole positions are not pairwise distinct".into(),
                    ));
                }
            }
        }
        Ok(PolePotential { poles })
    }

    /// One pole per hole (at the hole centroid) and one per puncture (at the
    /// puncture), carrying the given fluxes in holes-then-punctures order.
    pub fn from_domain(domain: &PlanarDomain, fluxes: &[f64]) -> Result<Self> {
        if fluxes.len() != domain.n() {
            return Err(FluxgapError::FluxCountMismatch {
                expected: domain.n(),
                got: fluxes.len(),
            });
        }
        let mut poles = Vec::with_capacity(domain.n());
        for (hole, &flux) in domain.holes.iter().zip(fluxes.iter()) {
            poles.push(Pole {
                position: hole.centroid(),
                flux,
            });
        }
        for (p, &flux) in domain
            .punctures
            .iter()
            .zip(fluxes.iter().skip(domain.holes.len()))
        {
            poles.push(Pole { position: *p, flux });
        }
        PolePotential::new(poles)
    }

    pub fn is_empty(&self) -> bool {
        self.poles.is_empty()
    }

    /// Line integral of the potential along a straight segment, computed
    /// analytically: each pole contributes flux times the signed angle the
    /// segment subtends at the pole (continuous branch; a straight segment
    /// avoiding the pole subtends strictly less than pi).
    pub fn edge_phase(&self, seg: &Segment) -> Result<f64> {
        let mut theta = 0.0;
        for pole in &self.poles {
            let d = seg.dist_to_point(pole.position);
            if d <= 1e-12 {
                return Err(FluxgapError::PoleOnSegment {
                    x: pole.position.x,
                    y: pole.position.y,
                    dist: d,
                });
            }
            let a0 = (seg.a - pole.position).angle();
            let a1 = (seg.b - pole.position).angle();
            theta += pole.flux * wrap_pi(a1 - a0);
        }
        Ok(theta)
    }

    /// Flux (1/2pi times the circulation) around a closed polyline; equals
    /// the winding-weighted sum of pole fluxes.
    pub fn loop_flux(&self, loop_points: &[Point2]) -> Result<f64> {
        let n = loop_points.len();
        if n < 3 {
            return Err(FluxgapError::InvalidGeometry(
                "loop needs at least 3 points".into(),
            ));
        }
        let mut total = 0.0;
        for i in 0..n {
            let seg = Segment::new(loop_points[i], loop_points[(i + 1) % n]);
            total += self.edge_phase(&seg)?;
        }
        Ok(total / (2.0 * std::f64::consts::PI))
    }

    pub fn flux_report(&self) -> FluxReport {
        let fluxes: Vec<f64> = self.poles.iter().map(|p| p.flux).collect();
        let dist_to_integers: Vec<f64> = fluxes.iter().map(|&f| dist_to_integers(f)).collect();
        let min_dist = dist_to_integers
            .iter()
            .copied()
            .fold(f64::INFINITY, f64::min)
            .min(f64::INFINITY);
        FluxReport {
            min_dist: if fluxes.is_empty() { 0.0 } else { min_dist },
            fluxes,
            dist_to_integers,
        }
    }
}

/// Distance of a flux to the nearest integer; half-integers map to exactly
/// one half.
pub fn dist_to_integers(phi: f64) -> f64 {
    (phi - phi.round()).abs()
}

fn wrap_pi(mut ang: f64) -> f64 {
    use std::f64::consts::PI;
    while ang > PI {
        ang -= 2.0 * PI;
    }
    while ang <= -PI {
        ang += 2.0 * PI;
    }
    ang
}
