//! Exterior conformal maps, logarithmic capacity and outer conformal centers
//! of triangles.
//!
//! All numerics are generic over [`Real`] (`f32`/`f64`); the aliases at the
//! crate root fix the scalar to `f64`.

pub mod capacity;
pub mod error;
pub mod geometry;
pub mod halfdisk;
pub mod optimize;
pub mod quad;
pub mod sc_exterior;
pub mod scalar;
pub mod specfun;

pub use error::{Error, Result};
pub use scalar::Real;

pub type ComplexValue = num_complex::Complex<f64>;
pub type AppellArgs = specfun::AppellArgs<f64>;
pub type F1Value = specfun::F1Value<f64>;
pub type Triangle = geometry::Triangle<f64>;
pub type ApexAngle = geometry::ApexAngle<f64>;
pub type TriangleGeometry = geometry::TriangleGeometry<f64>;
pub type CapacityResult = capacity::CapacityResult<f64>;
pub type IsoscelesMaximum = capacity::IsoscelesMaximum<f64>;
pub type ExteriorMapSpec = sc_exterior::ExteriorMapSpec<f64>;
pub type PathSpec = sc_exterior::PathSpec<f64>;
pub type BranchTracker = sc_exterior::BranchTracker<f64>;
pub type LaurentSummary = sc_exterior::LaurentSummary<f64>;
pub type MapGrid = sc_exterior::MapGrid<f64>;
pub type InnerCenterResult = halfdisk::InnerCenterResult<f64>;
pub type OuterSummaryHalfDisk = halfdisk::OuterSummaryHalfDisk<f64>;
