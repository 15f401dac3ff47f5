//! fluxgap: a spectral laboratory for the lowest eigenvalue of the magnetic
//! Neumann Laplacian with closed (zero-field) Aharonov-Bohm potentials on
//! planar domains with holes.
//!
//! The crate combines exact planar geometry, pole potentials with analytic
//! link phases, a masked finite-difference discretization of the magnetic
//! Laplacian, maximal epsilon-nets with their Voronoi partitions, admissible
//! cuts with a Cheeger-type length constant, and every closed-form eigenvalue
//! bound the pieces feed into.
//!
//! Heavy kernels (operator application, raster area counts, mask
//! construction) are data-parallel via rayon behind the default `parallel`
//! feature; disabling it yields a sequential build with bit-identical
//! results.

pub mod bounds;
pub mod cuts;
pub mod error;
pub mod families;
pub mod geometry;
pub mod io;
pub mod nets;
pub mod par;
pub mod potential;
pub mod render;
pub mod solver;

pub use error::{FluxgapError, Result};
pub use geometry::{BoundaryCurve, PlanarDomain, Point2, Segment};
pub use potential::{dist_to_integers, Pole, PolePotential};
