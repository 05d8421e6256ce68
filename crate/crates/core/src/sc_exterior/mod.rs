//! Exterior Schwarz–Christoffel maps of triangles.

mod closed;
mod grid;
mod integral;
mod laurent;
mod map;
mod path;
mod prevertex;

pub use closed::{
    closed_form_lambda_right_isosceles, f_closed_isosceles, outer_center_unit_legs_right_triangle, right_isosceles_kappa,
};
pub use grid::{grid_radii, map_grid, CurveKind, GridCurve, MapGrid, MIN_GRID_RADIUS};
pub use integral::{arc_values, chain_values, circle_values, integrate_to, MapConfig, PathValue, PathWalker, ScIntegrand};
pub use laurent::{circle_moments, laurent_summary, laurent_summary_with, LaurentSummary, MomentConfig};
pub use map::{f_numeric, make_general_map, make_isosceles_map, make_unit_legs_right_map, ExteriorMapSpec};
pub use path::{build_path, BranchTracker, PathConfig, PathSpec, Segment};
pub use prevertex::{
    exponents_from_triangle, isosceles_exponents, isosceles_prevertices, residue_constraint, solve_prevertices,
    PrevertexOrder,
};
