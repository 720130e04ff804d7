//! Stretched grids, stair-paths, stair-crossings and the combinatorial crossing bound.

mod closeness;
mod crossing;
mod drawing;
mod grid;
mod order;
mod path;

pub use closeness::sample_closeness;
pub use crossing::{
    line_meets_diagonal, pairing_condition, stair_crossing_exists, StairCrossing, StairLine, StairLineDoc,
    StairLineKind,
};
pub use drawing::{standard_stair_drawing, standard_straight_drawing, StairDrawing};
pub use grid::{close_to_piece, close_to_segment, grid_distance, point_distance, BoxPoint, GridPoint, StretchedGrid};
pub use order::{
    count_candidate_quadruples, enumerate_order_types, interval_graph, interval_width, order_type_count,
    stair_report, IntervalMatching, StairReport,
};
pub use path::{stair_path, Piece, StairPath};
