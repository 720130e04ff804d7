//! Bisection, subdivision extraction, the boost witness pipeline and the hexagonal-grid construction.

mod bisection;
mod boost;
mod hexgrid;
mod k6;

pub use bisection::{meets_bound, random_bisection, Bisection};
pub use boost::{boost_witness_pipeline, BoostReport, BISECTION_ATTEMPTS};
pub use hexgrid::{hexgrid_construction, HexGrid};
pub use k6::{extract_disjoint_subdivisions, find_k6_subdivision};
