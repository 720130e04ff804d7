//! Standard drawings of the interval graph on the grid diagonal.

use num_bigint::BigInt;

use super::grid::{GridPoint, StretchedGrid};
use super::order::interval_graph;
use super::path::{stair_path, StairPath};
use crate::crossing::{Graph, SpatialDrawing};
use crate::error::{Error, Result};
use crate::geom::{Point3, Rational};

/// Vertex `i` at the diagonal grid point `p(5(i+1))`, edges as stair-paths.
#[derive(Clone, Debug)]
pub struct StairDrawing {
    pub graph: Graph,
    pub vertices: Vec<GridPoint>,
    pub paths: Vec<StairPath<BigInt>>,
}

impl StairDrawing {
    /// The same drawing with stair-paths as polylines.
    pub fn to_spatial(&self, grid: &StretchedGrid) -> Result<SpatialDrawing> {
        let positions = self.vertices.iter().map(|&v| to_point(&grid.point(v))).collect();
        let interiors = self
            .paths
            .iter()
            .map(|p| {
                let c = p.corners();
                c[1..c.len() - 1].iter().map(|x| to_point(x)).collect()
            })
            .collect();
        SpatialDrawing::new(self.graph.clone(), positions, interiors)
    }

    /// Grid index of each endpoint of edge `id`.
    pub fn anchors(&self, id: usize) -> (usize, usize) {
        let (u, v) = self.graph.edge(id);
        (self.vertices[u].idx[0], self.vertices[v].idx[0])
    }
}

fn to_point(x: &[BigInt]) -> Point3 {
    let r = |v: &BigInt| Rational::from_integer(v.clone());
    Point3::new(r(&x[0]), r(&x[1]), r(&x[2]))
}

fn placement(n: usize, grid: &StretchedGrid) -> Result<Vec<GridPoint>> {
    if grid.n() < 5 * n {
        return Err(Error::PreconditionViolated(format!(
            "grid has {} points per axis, need {}",
            grid.n(),
            5 * n
        )));
    }
    Ok((1..=n).map(|i| GridPoint::diagonal(5 * i)).collect())
}

pub fn standard_stair_drawing(n: usize, m: usize, grid: &StretchedGrid) -> Result<StairDrawing> {
    let graph = interval_graph(n, m)?;
    let vertices = placement(n, grid)?;
    let paths = graph
        .edges()
        .iter()
        .map(|&(u, v)| stair_path(&grid.point(vertices[u]), &grid.point(vertices[v])))
        .collect();
    Ok(StairDrawing { graph, vertices, paths })
}

/// Straight-line drawing with the same vertex placement.
pub fn standard_straight_drawing(n: usize, m: usize, grid: &StretchedGrid) -> Result<SpatialDrawing> {
    let graph = interval_graph(n, m)?;
    let positions = placement(n, grid)?.into_iter().map(|v| to_point(&grid.point(v))).collect();
    SpatialDrawing::straight(graph, positions)
}
