//! Closed polygonal curves.

use crate::error::{Error, Result};
use crate::geom::{Point3, PointDoc, Segment3};

/// Simple closed polyline through at least three points.
#[derive(Clone, Debug, PartialEq)]
pub struct PolygonalCycle {
    points: Vec<Point3>,
}

impl PolygonalCycle {
    pub fn new(points: Vec<Point3>) -> Result<Self> {
        let n = points.len();
        if n < 3 {
            return Err(Error::Validation {
                location: "points".into(),
                message: format!("a cycle needs at least 3 points, got {n}"),
            });
        }
        for i in 0..n {
            if points[i] == points[(i + 1) % n] {
                return Err(Error::Validation {
                    location: format!("points[{i}]"),
                    message: "consecutive points coincide".into(),
                });
            }
        }
        let c = PolygonalCycle { points };
        let segs = c.segments();
        for i in 0..n {
            for j in (i + 1)..n {
                let ok = if j == i + 1 {
                    !folds_back(&segs[i], &segs[j])
                } else if i == 0 && j == n - 1 {
                    !folds_back(&segs[j], &segs[i])
                } else {
                    !segs[i].intersects(&segs[j])
                };
                if !ok {
                    return Err(Error::Validation {
                        location: format!("points[{i}]"),
                        message: format!("edges {i} and {j} intersect; the cycle is not simple"),
                    });
                }
            }
        }
        Ok(c)
    }

    pub fn points(&self) -> &[Point3] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn segments(&self) -> Vec<Segment3> {
        let n = self.points.len();
        (0..n)
            .map(|i| Segment3 {
                p: self.points[i].clone(),
                q: self.points[(i + 1) % n].clone(),
            })
            .collect()
    }

    pub fn reversed(&self) -> Self {
        let mut p = self.points.clone();
        p.reverse();
        PolygonalCycle { points: p }
    }

    pub fn map(&self, f: impl Fn(&Point3) -> Point3) -> Result<Self> {
        PolygonalCycle::new(self.points.iter().map(f).collect())
    }

    pub fn disjoint_from(&self, o: &PolygonalCycle) -> bool {
        let b = o.segments();
        self.segments().iter().all(|s| b.iter().all(|t| !s.intersects(t)))
    }

    pub fn to_doc(&self) -> Vec<PointDoc> {
        self.points.iter().map(PointDoc::from).collect()
    }

    pub fn from_doc(doc: &[PointDoc]) -> Result<Self> {
        PolygonalCycle::new(doc.iter().map(Point3::try_from).collect::<Result<_>>()?)
    }
}

/// Whether `b` (starting where `a` ends) runs back along `a`.
fn folds_back(a: &Segment3, b: &Segment3) -> bool {
    let back = &a.p - &a.q;
    let fwd = b.direction();
    back.cross(&fwd).is_zero() && num_traits::Signed::is_positive(&back.dot(&fwd))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pts(v: &[[i64; 3]]) -> Vec<Point3> {
        v.iter().map(|p| Point3::from_ints(p[0], p[1], p[2])).collect()
    }

    #[test]
    fn validation() {
        assert!(PolygonalCycle::new(pts(&[[0, 0, 0], [1, 0, 0], [0, 1, 0]])).is_ok());
        assert!(PolygonalCycle::new(pts(&[[0, 0, 0], [1, 0, 0]])).is_err());
        assert!(PolygonalCycle::new(pts(&[[0, 0, 0], [1, 0, 0], [2, 0, 0]])).is_err());
        assert!(PolygonalCycle::new(pts(&[[0, 0, 0], [1, 0, 0], [1, 0, 0], [0, 1, 0]])).is_err());
        // Bow tie.
        assert!(PolygonalCycle::new(pts(&[[0, 0, 0], [2, 2, 0], [2, 0, 0], [0, 2, 0]])).is_err());
        assert!(PolygonalCycle::new(pts(&[[0, 0, 0], [2, 0, 0], [2, 2, 0], [0, 2, 0]])).is_ok());
    }
}
