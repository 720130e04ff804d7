//! Crossing numbers of graph drawings in space, under line, stair and
//! linking-based notions of crossing.

pub mod crossing;
pub mod error;
pub mod generate;
pub mod geom;
pub mod pipeline;
pub mod sametype;
pub mod stair;
pub mod topology;

pub use error::{Error, Result};
pub use geom::{
    plucker_from_segment, side_product, transversal_exists_segments, transversals_of_4_lines,
    PluckerLine, Point3, QuadExt, Rational, Segment3, Transversals, Vec3,
};
