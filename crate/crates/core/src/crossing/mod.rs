//! Graphs, spatial drawings and crossing counts.

pub mod count;
pub mod drawing;
pub mod graph;
pub mod lift;

pub use count::{
    common_sphere, count_line_crossings, count_planar_crossings, verify_crossing_witness, CountOptions,
    CrossingReport, CrossingReportDoc, CrossingWitness, Mode, WitnessDoc,
};
pub use drawing::{DrawingDoc, EdgeDoc, SpatialDrawing, VertexDoc};
pub use graph::{enumerate_disjoint_tuples, Edge, Graph};
pub use lift::{lift_to_sphere, lift_to_sphere_with, LiftOptions, LiftedDrawing};
