//! Chamber systems: panels, residues, galleries, coset constructions,
//! polygon checks, simpliciality, quotients and isomorphism search.

mod coset;
mod dot;
mod gallery;
mod iso;
mod polygon;
mod quotient;
mod simplicial;
mod system;

pub use coset::{from_cosets, HomogeneousSpec};
pub use dot::{adjacency_dot, incidence_dot};
pub use gallery::{
    distances_from, min_gallery, minimal_gallery_types, minimal_gallery_types_from, TypedGallery,
    DEFAULT_TYPE_SET_CAP,
};
pub use iso::{find_isomorphism, find_isomorphism_with_budget, is_isomorphism, DEFAULT_ISO_BUDGET};
pub use polygon::{infer_type_matrix, is_generalized_mgon, polygon_parameters, rank2_residue, IncidenceGraph};
pub(crate) use quotient::rank2_type_sets;
pub use quotient::{orbit_quotient, quotient, Quotient};
pub use simplicial::{
    is_simplicial, is_simplicial_with_budget, vertex_ids, SimplicialReport, SimplicialWitness, DEFAULT_PAIR_BUDGET,
};
pub use system::{ChamberSystem, ChamberSystemJson, Residue};
