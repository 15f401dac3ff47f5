//! Planar geometry for domains with holes: boundary curves, containment,
//! measures, widths and interior-ball radii.

mod convex;
mod curve;
mod domain;
mod widths;

pub use convex::{
    clip_polygon_halfplane, convex_hull, hull_diameter, polygon_area, polygon_centroid,
    polygon_circle_area, polygon_is_convex,
};
pub use curve::BoundaryCurve;
pub use domain::PlanarDomain;
pub use widths::{widths, widths_from_point};

use std::ops::{Add, Mul, Neg, Sub};

/// Points within this distance of a boundary curve are classified as
/// lying on it (and therefore outside the open domain).
pub const BOUNDARY_TOL: f64 = 1e-12;

/// A point in the plane (length units).
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Point2 {
    pub x: f64,
    pub y: f64,
}

impl Point2 {
    pub const fn new(x: f64, y: f64) -> Self {
        Point2 { x, y }
    }

    pub fn dot(self, other: Point2) -> f64 {
        self.x * other.x + self.y * other.y
    }

    /// z-component of the cross product, positive when `other` is
    /// counterclockwise from `self`.
    pub fn cross(self, other: Point2) -> f64 {
        self.x * other.y - self.y * other.x
    }

    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn norm_sq(self) -> f64 {
        self.x * self.x + self.y * self.y
    }

    pub fn dist(self, other: Point2) -> f64 {
        (self - other).norm()
    }

    pub fn normalized(self) -> Point2 {
        let n = self.norm();
        Point2::new(self.x / n, self.y / n)
    }

    /// Rotate by +90 degrees.
    pub fn perp(self) -> Point2 {
        Point2::new(-self.y, self.x)
    }

    pub fn angle(self) -> f64 {
        self.y.atan2(self.x)
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }
}

impl Add for Point2 {
    type Output = Point2;
    fn add(self, o: Point2) -> Point2 {
        Point2::new(self.x + o.x, self.y + o.y)
    }
}

impl Sub for Point2 {
    type Output = Point2;
    fn sub(self, o: Point2) -> Point2 {
        Point2::new(self.x - o.x, self.y - o.y)
    }
}

impl Mul<f64> for Point2 {
    type Output = Point2;
    fn mul(self, t: f64) -> Point2 {
        Point2::new(self.x * t, self.y * t)
    }
}

impl Neg for Point2 {
    type Output = Point2;
    fn neg(self) -> Point2 {
        Point2::new(-self.x, -self.y)
    }
}

/// A straight segment with positive length.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Segment {
    pub a: Point2,
    pub b: Point2,
}

impl Segment {
    pub fn new(a: Point2, b: Point2) -> Self {
        Segment { a, b }
    }

    pub fn length(&self) -> f64 {
        self.a.dist(self.b)
    }

    pub fn midpoint(&self) -> Point2 {
        (self.a + self.b) * 0.5
    }

    pub fn point_at(&self, t: f64) -> Point2 {
        self.a + (self.b - self.a) * t
    }

    /// Distance from `p` to the closed segment.
    pub fn dist_to_point(&self, p: Point2) -> f64 {
        let d = self.b - self.a;
        let len_sq = d.norm_sq();
        if len_sq == 0.0 {
            return p.dist(self.a);
        }
        let t = ((p - self.a).dot(d) / len_sq).clamp(0.0, 1.0);
        p.dist(self.point_at(t))
    }

    /// Proper intersection test between the open interiors, with shared
    /// endpoints not counted as crossings.
    pub fn crosses(&self, other: &Segment) -> bool {
        let eps = 1e-12;
        for p in [other.a, other.b] {
            if self.a.dist(p) < eps || self.b.dist(p) < eps {
                return false;
            }
        }
        let d1 = self.b - self.a;
        let d2 = other.b - other.a;
        let denom = d1.cross(d2);
        if denom.abs() < 1e-15 {
            return false;
        }
        let r = other.a - self.a;
        let t = r.cross(d2) / denom;
        let s = r.cross(d1) / denom;
        t > eps && t < 1.0 - eps && s > eps && s < 1.0 - eps
    }
}

/// Distance from `p` to the segment `[a, b]`.
pub fn point_segment_distance(p: Point2, a: Point2, b: Point2) -> f64 {
    Segment::new(a, b).dist_to_point(p)
}
