//! Subdivisions of complete graphs inside a graph.

use crate::crossing::{Graph, SpatialDrawing};
use crate::error::{Error, Result};
use crate::geom::Point3;

use super::cycle::PolygonalCycle;

/// Path between branch vertices `ends.0 < ends.1` (indices into `branch`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BranchPath {
    pub ends: (usize, usize),
    /// Graph vertices from `branch[ends.0]` to `branch[ends.1]`.
    pub vertices: Vec<usize>,
}

/// A subdivision of `K_t`: branch vertices and one path per pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subdivision {
    pub branch: Vec<usize>,
    pub paths: Vec<BranchPath>,
}

fn invalid(location: &str, message: String) -> Error {
    Error::Validation {
        location: location.into(),
        message,
    }
}

impl Subdivision {
    pub fn t(&self) -> usize {
        self.branch.len()
    }

    /// Path between branch indices `i` and `j`, oriented from `i`.
    pub fn path(&self, i: usize, j: usize) -> Vec<usize> {
        let (a, b) = (i.min(j), i.max(j));
        let p = self.paths.iter().find(|p| p.ends == (a, b)).expect("complete subdivision");
        let mut v = p.vertices.clone();
        if i > j {
            v.reverse();
        }
        v
    }

    /// Edge ids of all paths.
    pub fn edges(&self, g: &Graph) -> Vec<usize> {
        self.paths
            .iter()
            .flat_map(|p| p.vertices.windows(2).map(|w| g.edge_id(w[0], w[1]).expect("path edge")))
            .collect()
    }

    /// Checks that the paths are internally disjoint, use graph edges and connect every pair.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let t = self.t();
        let mut seen = vec![false; t * t];
        let mut used = vec![0usize; g.n()];
        for (k, p) in self.paths.iter().enumerate() {
            let (a, b) = p.ends;
            if a >= b || b >= t || seen[a * t + b] {
                return Err(invalid(&format!("paths[{k}]"), "bad or repeated branch pair".into()));
            }
            seen[a * t + b] = true;
            if p.vertices.first() != Some(&self.branch[a]) || p.vertices.last() != Some(&self.branch[b]) {
                return Err(invalid(&format!("paths[{k}]"), "path does not join its branch vertices".into()));
            }
            if p.vertices.windows(2).any(|w| !g.has_edge(w[0], w[1])) {
                return Err(invalid(&format!("paths[{k}]"), "path uses a missing edge".into()));
            }
            for &v in &p.vertices[1..p.vertices.len() - 1] {
                used[v] += 1;
            }
        }
        if self.paths.len() != t * (t - 1) / 2 {
            return Err(invalid("paths", format!("expected {} paths, got {}", t * (t - 1) / 2, self.paths.len())));
        }
        if self.branch.iter().any(|&b| used[b] > 0) || used.iter().any(|&u| u > 1) {
            return Err(invalid("paths", "paths are not internally disjoint".into()));
        }
        Ok(())
    }

    /// Closed polyline through the branch vertices `cyc` in order.
    pub fn cycle(&self, d: &SpatialDrawing, cyc: &[usize]) -> Result<PolygonalCycle> {
        let mut pts: Vec<Point3> = Vec::new();
        for k in 0..cyc.len() {
            let path = self.path(cyc[k], cyc[(k + 1) % cyc.len()]);
            for w in path.windows(2) {
                let id = d.graph().edge_id(w[0], w[1]).expect("path edge");
                let mut poly = d.points(id);
                if w[0] > w[1] {
                    poly.reverse();
                }
                pts.extend(poly.into_iter().skip(1));
            }
        }
        PolygonalCycle::new(pts)
    }
}

/// Recovers the subdivision of `K_t` formed by the whole graph with the given branch vertices.
pub fn trace_subdivision(g: &Graph, branch: &[usize]) -> Result<Subdivision> {
    let t = branch.len();
    let index = |v: usize| branch.iter().position(|&b| b == v);
    let mut paths = Vec::new();
    for (i, &b) in branch.iter().enumerate() {
        if b >= g.n() {
            return Err(invalid("branch", format!("vertex {b} out of range")));
        }
        if g.degree(b) != t - 1 {
            return Err(invalid("branch", format!("branch vertex {b} has degree {}, expected {}", g.degree(b), t - 1)));
        }
        for &first in g.neighbors(b) {
            let mut walk = vec![b, first];
            while index(*walk.last().unwrap()).is_none() {
                let cur = *walk.last().unwrap();
                let prev = walk[walk.len() - 2];
                if g.degree(cur) != 2 {
                    return Err(invalid("edges", format!("vertex {cur} on a path has degree {}", g.degree(cur))));
                }
                let next = g.neighbors(cur).iter().copied().find(|&x| x != prev).unwrap();
                walk.push(next);
            }
            let j = index(*walk.last().unwrap()).unwrap();
            if j == i {
                return Err(invalid("edges", format!("path from branch vertex {b} returns to itself")));
            }
            if i < j {
                paths.push(BranchPath { ends: (i, j), vertices: walk });
            }
        }
    }
    let sub = Subdivision { branch: branch.to_vec(), paths };
    sub.validate(g)?;
    if sub.edges(g).len() != g.m() {
        return Err(invalid("edges", "graph has edges outside the subdivision".into()));
    }
    Ok(sub)
}
