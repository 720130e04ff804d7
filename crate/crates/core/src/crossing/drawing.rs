use serde::{Deserialize, Serialize};

use super::graph::{Edge, Graph};
use crate::error::{Error, Result};
use crate::geom::{Point3, PointDoc, Segment3};

/// A graph with vertex positions in space and a polyline per edge.
///
/// Polylines are stored as interior points only; straight edges have none.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpatialDrawing {
    graph: Graph,
    positions: Vec<Point3>,
    interiors: Vec<Vec<Point3>>,
}

impl SpatialDrawing {
    pub fn new(graph: Graph, positions: Vec<Point3>, interiors: Vec<Vec<Point3>>) -> Result<Self> {
        if positions.len() != graph.n() {
            return Err(Error::validation(
                "vertices",
                format!("expected {} positions, got {}", graph.n(), positions.len()),
            ));
        }
        if interiors.len() != graph.m() {
            return Err(Error::validation(
                "edges",
                format!("expected {} polylines, got {}", graph.m(), interiors.len()),
            ));
        }
        let d = SpatialDrawing {
            graph,
            positions,
            interiors,
        };
        for id in 0..d.graph.m() {
            let pts = d.points(id);
            if pts.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::validation(
                    format!("edges[{id}].polyline"),
                    "consecutive polyline points coincide",
                ));
            }
        }
        Ok(d)
    }

    pub fn straight(graph: Graph, positions: Vec<Point3>) -> Result<Self> {
        let interiors = vec![Vec::new(); graph.m()];
        SpatialDrawing::new(graph, positions, interiors)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn positions(&self) -> &[Point3] {
        &self.positions
    }

    pub fn position(&self, v: usize) -> &Point3 {
        &self.positions[v]
    }

    pub fn interior(&self, id: usize) -> &[Point3] {
        &self.interiors[id]
    }

    pub fn is_straight(&self) -> bool {
        self.interiors.iter().all(Vec::is_empty)
    }

    /// Full polyline of an edge from its lower to its higher endpoint.
    pub fn points(&self, id: usize) -> Vec<Point3> {
        let (u, v) = self.graph.edge(id);
        let mut pts = Vec::with_capacity(self.interiors[id].len() + 2);
        pts.push(self.positions[u].clone());
        pts.extend(self.interiors[id].iter().cloned());
        pts.push(self.positions[v].clone());
        pts
    }

    pub fn segments(&self, id: usize) -> Vec<Segment3> {
        self.points(id)
            .windows(2)
            .map(|w| Segment3 {
                p: w[0].clone(),
                q: w[1].clone(),
            })
            .collect()
    }

    /// Adds one straight edge.
    pub fn with_straight_edge(&self, u: usize, v: usize) -> Result<Self> {
        let mut edges: Vec<Edge> = self.graph.edges().to_vec();
        edges.push((u, v));
        let graph = Graph::new(self.graph.n(), edges)?;
        let mut interiors = self.interiors.clone();
        interiors.push(Vec::new());
        SpatialDrawing::new(graph, self.positions.clone(), interiors)
    }

    pub fn to_doc(&self) -> DrawingDoc {
        DrawingDoc {
            n: self.graph.n(),
            vertices: self
                .positions
                .iter()
                .enumerate()
                .map(|(id, p)| VertexDoc {
                    id,
                    pos: PointDoc::from(p),
                })
                .collect(),
            edges: (0..self.graph.m())
                .map(|id| {
                    let (u, v) = self.graph.edge(id);
                    let polyline = if self.interiors[id].is_empty() {
                        Vec::new()
                    } else {
                        self.points(id).iter().map(PointDoc::from).collect()
                    };
                    EdgeDoc { u, v, polyline }
                })
                .collect(),
        }
    }

    pub fn from_doc(doc: &DrawingDoc) -> Result<Self> {
        let mut positions: Vec<Option<Point3>> = vec![None; doc.n];
        for (i, vd) in doc.vertices.iter().enumerate() {
            let loc = format!("vertices[{i}]");
            if vd.id >= doc.n {
                return Err(Error::validation(loc, format!("id {} out of range", vd.id)));
            }
            if positions[vd.id].is_some() {
                return Err(Error::validation(loc, format!("duplicate id {}", vd.id)));
            }
            let p = Point3::try_from(&vd.pos).map_err(|e| Error::validation(format!("{loc}.pos"), e.to_string()))?;
            positions[vd.id] = Some(p);
        }
        let positions: Vec<Point3> = positions
            .into_iter()
            .enumerate()
            .map(|(i, p)| p.ok_or_else(|| Error::validation("vertices", format!("missing vertex {i}"))))
            .collect::<Result<_>>()?;
        let graph = Graph::new(doc.n, doc.edges.iter().map(|e| (e.u, e.v)))?;
        let mut interiors = Vec::with_capacity(doc.edges.len());
        for (i, ed) in doc.edges.iter().enumerate() {
            let loc = format!("edges[{i}].polyline");
            if ed.polyline.is_empty() {
                interiors.push(Vec::new());
                continue;
            }
            let mut pts: Vec<Point3> = ed
                .polyline
                .iter()
                .map(|p| Point3::try_from(p).map_err(|e| Error::validation(&loc, e.to_string())))
                .collect::<Result<_>>()?;
            // Accept either orientation; store from the lower endpoint.
            if ed.u > ed.v {
                pts.reverse();
            }
            let (a, b) = graph.edge(i);
            if pts.len() < 2 || pts[0] != positions[a] || pts[pts.len() - 1] != positions[b] {
                return Err(Error::validation(loc, "polyline endpoints do not match vertex positions"));
            }
            interiors.push(pts[1..pts.len() - 1].to_vec());
        }
        SpatialDrawing::new(graph, positions, interiors)
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let doc: DrawingDoc =
            serde_json::from_str(s).map_err(|e| Error::validation(format!("line {}", e.line()), e.to_string()))?;
        SpatialDrawing::from_doc(&doc)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_doc()).expect("drawing serializes")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexDoc {
    pub id: usize,
    pub pos: PointDoc,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeDoc {
    pub u: usize,
    pub v: usize,
    #[serde(default)]
    pub polyline: Vec<PointDoc>,
}

/// Wire form of a drawing.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DrawingDoc {
    pub n: usize,
    pub vertices: Vec<VertexDoc>,
    pub edges: Vec<EdgeDoc>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::scalar::rat;

    const SAMPLE: &str = r#"{
  "n": 3,
  "vertices": [
    {"id": 0, "pos": ["0", "0", "0"]},
    {"id": 1, "pos": ["1/3", "0", "0"]},
    {"id": 2, "pos": ["0", "1", "-2/5"]}
  ],
  "edges": [
    {"u": 0, "v": 1, "polyline": []},
    {"u": 1, "v": 2, "polyline": [["1/3", "0", "0"], ["1", "1", "1"], ["0", "1", "-2/5"]]}
  ]
}"#;

    #[test]
    fn round_trip() {
        let d = SpatialDrawing::from_json(SAMPLE).unwrap();
        assert_eq!(d.position(1).x, rat(1, 3));
        assert_eq!(d.segments(1).len(), 2);
        let again = SpatialDrawing::from_json(&d.to_json()).unwrap();
        assert_eq!(again, d);
        assert_eq!(again.to_doc(), d.to_doc());
    }

    #[test]
    fn rejects_loops_and_bad_endpoints() {
        let looped = SAMPLE.replace(r#""u": 0, "v": 1"#, r#""u": 0, "v": 0"#);
        assert!(matches!(
            SpatialDrawing::from_json(&looped),
            Err(Error::Validation { .. })
        ));
        let bad = SAMPLE.replace(r#"["1", "1", "1"], ["0", "1", "-2/5"]"#, r#"["1", "1", "1"], ["0", "1", "2/5"]"#);
        assert!(SpatialDrawing::from_json(&bad).is_err());
        let decimal = SAMPLE.replace("1/3", "0.33");
        assert!(SpatialDrawing::from_json(&decimal).is_err());
    }
}
