//! Exact geometric kernel.

pub mod fast;
mod homog;
pub mod planar;
pub mod plucker;
pub mod scalar;
pub mod transversal;
pub mod vector;

pub use plucker::{plucker_from_segment, side_product, PluckerLine, PluckerLineDoc};
pub use scalar::{format_rational, parse_rational, Field, QuadExt, QuadExtDoc, Rational};
pub use transversal::{
    line_hits_segment, transversal_exists_segments, transversals_of_4_lines, verify_witness, TransversalSearch,
    TransversalWitness,
    Transversals,
};
pub use vector::{Point3, PointDoc, Segment3, Vec3};
