//! Building verification through the `W`-valued distance, and C3-geometry
//! checks: incidence, shadows, axiom (LL) and the subgroup criterion ⋆.

mod building;
mod c3;
mod geometry;
mod star;

pub use building::{
    is_building, is_building_inferred, is_building_with_budget, w_distance, BuildingReport, Violation,
    MAX_REPORTED_VIOLATIONS,
};
pub use c3::{c3_relabeling, is_c3_geometry, is_residually_connected, ll_verdict, C3Report, LlVerdict};
pub use geometry::{check_ll, IncidenceGeometry, LlReport, LlWitness, Vertex};
pub use star::{check_star, StarReport, StarWitness};
