//! Parametric domain generators: annuli, punctured domains over nets,
//! thin-bridge domains and the tiled square family with its fundamental
//! piece.

use crate::error::{FluxgapError, Result};
use crate::geometry::{BoundaryCurve, PlanarDomain, Point2};
use crate::nets::EpsNet;

/// Concentric circular annulus with radii 0 < r1 < r2.
pub fn make_annulus(r1: f64, r2: f64) -> Result<PlanarDomain> {
    if !(r1 > 0.0 && r2 > r1) {
        return Err(FluxgapError::InvalidParameter(format!(
            "annulus needs 0 < r1 < r2, got ({r1}, {r2})"
        )));
    }
    let origin = Point2::new(0.0, 0.0);
    PlanarDomain::new(
        BoundaryCurve::circle(origin, r2)?,
        vec![BoundaryCurve::circle(origin, r1)?],
        vec![],
    )
}

pub fn make_disk(radius: f64) -> Result<PlanarDomain> {
    PlanarDomain::simply_connected(BoundaryCurve::circle(Point2::new(0.0, 0.0), radius)?)
}

/// Fundamental piece of the tiled family: outer square of side 4/k on
/// (-2/k, 0)..(2/k, 4/k) with an inner rectangle leaving a bottom and top gap
/// of 1/k^(5/2) and side gaps of 1/k.
pub fn make_fundamental_piece(k: u32) -> Result<PlanarDomain> {
    if k < 2 {
        return Err(FluxgapError::InvalidParameter(format!(
            "fundamental piece needs k >= 2, got {k}"
        )));
    }
    let kf = k as f64;
    let g = kf.powf(-2.5);
    let outer = BoundaryCurve::rectangle(
        Point2::new(-2.0 / kf, 0.0),
        Point2::new(2.0 / kf, 4.0 / kf),
    )?;
    let inner = BoundaryCurve::rectangle(
        Point2::new(-1.0 / kf, g),
        Point2::new(1.0 / kf, 4.0 / kf - g),
    )?;
    PlanarDomain::new(outer, vec![inner], vec![])
}

/// The k x k tiling of fundamental pieces filling the square of side 4 on
/// [-2, 2] x [0, 4]: k^2 rectangular holes.
pub fn make_omega_k(k: u32) -> Result<PlanarDomain> {
    if k < 2 {
        return Err(FluxgapError::InvalidParameter(format!(
            "tiled family needs k >= 2, got {k}"
        )));
    }
    let kf = k as f64;
    let g = kf.powf(-2.5);
    let outer = BoundaryCurve::rectangle(Point2::new(-2.0, 0.0), Point2::new(2.0, 4.0))?;
    let mut holes = Vec::with_capacity((k * k) as usize);
    for col in 0..k {
        // Piece column covers x in [-2 + 4 col/k, -2 + 4 (col+1)/k].
        let cx = -2.0 + (4.0 * col as f64 + 2.0) / kf;
        for row in 0..k {
            let y0 = 4.0 * row as f64 / kf;
            holes.push(BoundaryCurve::rectangle(
                Point2::new(cx - 1.0 / kf, y0 + g),
                Point2::new(cx + 1.0 / kf, y0 + 4.0 / kf - g),
            )?);
        }
    }
    PlanarDomain::new(outer, holes, vec![])
}

/// Domain punctured at the points of a maximal eps-net.
pub fn make_punctured(domain: &PlanarDomain, net: &EpsNet) -> Result<PlanarDomain> {
    let mut punctures = domain.punctures.clone();
    for p in &net.points {
        if !domain.contains(*p) {
            return Err(FluxgapError::PointOutsideDomain { x: p.x, y: p.y });
        }
        punctures.push(*p);
    }
    PlanarDomain::new(domain.outer.clone(), domain.holes.clone(), punctures)
}

/// Rectangle-minus-rectangle domain whose boundary components approach to a
/// gap `eps` on the top side; the other three gaps stay fixed by the sizes.
pub fn make_thin_bridge(
    outer_rect: (f64, f64),
    inner_rect: (f64, f64),
    eps: f64,
) -> Result<PlanarDomain> {
    let (ow, oh) = outer_rect;
    let (iw, ih) = inner_rect;
    if !(eps > 0.0) {
        return Err(FluxgapError::InvalidParameter(format!(
            "gap must be positive, got {eps}"
        )));
    }
    let side_gap = (ow - iw) / 2.0;
    let bottom_gap = oh - ih - eps;
    if side_gap <= eps || bottom_gap <= eps {
        return Err(FluxgapError::InvalidParameter(format!(
            "inner rectangle must fit with the approach gap smallest: side gap {side_gap}, bottom gap {bottom_gap}, eps {eps}"
        )));
    }
    let outer = BoundaryCurve::rectangle(Point2::new(0.0, 0.0), Point2::new(ow, oh))?;
    let inner = BoundaryCurve::rectangle(
        Point2::new(side_gap, oh - eps - ih),
        Point2::new(side_gap + iw, oh - eps),
    )?;
    PlanarDomain::new(outer, vec![inner], vec![])
}

/// Closed-form quantities of the tiled family and its fundamental piece.
#[derive(Debug, Clone, Copy)]
pub struct OmegaKForms {
    pub k: u32,
    /// Area of the fundamental piece: 8/k^2 + 4/k^(7/2).
    pub piece_area: f64,
    /// Area enclosed by the piece's outer square: 16/k^2.
    pub outer_piece_area: f64,
    /// Minimal width: 1/k^(5/2).
    pub beta: f64,
    /// Maximal width: (1/k) sqrt(1 + 1/k^3).
    pub b_max: f64,
    /// Diameter of the outer square: 4 sqrt(2)/k.
    pub diameter: f64,
    /// Perimeter of the outer square: 16/k.
    pub outer_perimeter: f64,
    /// Total length of the reference cut: (2k - 1)/k^(3/2).
    pub cut_total: f64,
    /// Area of the assembled domain: 8 + 4/k^(3/2).
    pub omega_area: f64,
}

pub fn omega_k_closed_forms(k: u32) -> OmegaKForms {
    let kf = k as f64;
    OmegaKForms {
        k,
        piece_area: 8.0 / (kf * kf) + 4.0 / kf.powf(3.5),
        outer_piece_area: 16.0 / (kf * kf),
        beta: kf.powf(-2.5),
        b_max: (1.0 + kf.powi(-3)).sqrt() / kf,
        diameter: 4.0 * 2.0f64.sqrt() / kf,
        outer_perimeter: 16.0 / kf,
        cut_total: (2.0 * kf - 1.0) / kf.powf(1.5),
        omega_area: 8.0 + 4.0 / kf.powf(1.5),
    }
}
