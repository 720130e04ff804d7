//! The Conway–Gordon parity check for spatial drawings of `K₆`.

use crate::crossing::SpatialDrawing;
use crate::error::{Error, Result};
use crate::geom::Point3;
use num_traits::Zero;

use super::cycle::PolygonalCycle;
use super::linking::linking_number;
use super::subdivision::{trace_subdivision, Subdivision};

/// Linking numbers of the ten disjoint triangle pairs of `K₆`.
#[derive(Clone, Debug)]
pub struct ConwayGordon {
    /// Each pair with its linking number; the first triangle contains vertex 0.
    pub pairs: Vec<([usize; 3], [usize; 3], i64)>,
    pub odd_pair: ([usize; 3], [usize; 3]),
    pub odd_lk: i64,
    pub parity_sum: u8,
}

/// A pair of disjoint cycles of a `K₆` subdivision with odd linking number.
#[derive(Clone, Debug)]
pub struct LinkedPair {
    pub triangles: ([usize; 3], [usize; 3]),
    pub cycles: (PolygonalCycle, PolygonalCycle),
    pub lk: i64,
}

/// The ten splits of `{0,…,5}` into two triangles.
pub fn triangle_pairs() -> Vec<([usize; 3], [usize; 3])> {
    let mut out = Vec::new();
    for i in 1..6 {
        for j in (i + 1)..6 {
            let rest: Vec<usize> = (1..6).filter(|&k| k != i && k != j).collect();
            out.push(([0, i, j], [rest[0], rest[1], rest[2]]));
        }
    }
    out
}

fn summarize(pairs: Vec<([usize; 3], [usize; 3], i64)>) -> Result<ConwayGordon> {
    let parity_sum = (pairs.iter().map(|p| p.2.rem_euclid(2)).sum::<i64>() % 2) as u8;
    let odd = pairs.iter().find(|p| p.2 % 2 != 0);
    match (odd, parity_sum) {
        (Some(&(a, b, lk)), 1) => Ok(ConwayGordon {
            odd_pair: (a, b),
            odd_lk: lk,
            parity_sum,
            pairs,
        }),
        _ => Err(Error::Invariant(format!("linking numbers of K6 sum to {parity_sum} mod 2"))),
    }
}

/// Straight-line `K₆` on six points in general position.
pub fn conway_gordon_check(points: &[Point3; 6]) -> Result<ConwayGordon> {
    for i in 0..6 {
        for j in (i + 1)..6 {
            if points[i] == points[j] {
                return Err(Error::DegeneratePosition(format!("points {i} and {j} coincide")));
            }
        }
    }
    for a in 0..6 {
        for b in (a + 1)..6 {
            for c in (b + 1)..6 {
                for d in (c + 1)..6 {
                    let (p, q, r, s) = (&points[a], &points[b], &points[c], &points[d]);
                    if (q - p).cross(&(r - p)).dot(&(s - p)).is_zero() {
                        return Err(Error::DegeneratePosition(format!("points {a}, {b}, {c}, {d} are coplanar")));
                    }
                }
            }
        }
    }
    let tri = |t: [usize; 3]| PolygonalCycle::new(t.iter().map(|&i| points[i].clone()).collect());
    let mut pairs = Vec::new();
    for (a, b) in triangle_pairs() {
        pairs.push((a, b, linking_number(&tri(a)?, &tri(b)?)?));
    }
    summarize(pairs)
}

/// Odd-linked cycle pair in a drawing whose graph is a subdivision of `K₆`
/// with the given branch vertices.
pub fn find_linked_pair(d: &SpatialDrawing, branch: &[usize; 6]) -> Result<LinkedPair> {
    let sub = trace_subdivision(d.graph(), branch)?;
    linked_pair_in(d, &sub)
}

/// Same as [`find_linked_pair`] for a `K₆` subdivision inside a larger graph.
pub fn linked_pair_in(d: &SpatialDrawing, sub: &Subdivision) -> Result<LinkedPair> {
    if sub.t() != 6 {
        return Err(Error::Validation {
            location: "branch".into(),
            message: format!("expected 6 branch vertices, got {}", sub.t()),
        });
    }
    sub.validate(d.graph())?;
    let mut pairs = Vec::new();
    let mut cycles = Vec::new();
    for (a, b) in triangle_pairs() {
        let (ca, cb) = (sub.cycle(d, &a)?, sub.cycle(d, &b)?);
        pairs.push((a, b, linking_number(&ca, &cb)?));
        cycles.push((ca, cb));
    }
    let cg = summarize(pairs)?;
    let k = cg.pairs.iter().position(|p| (p.0, p.1) == cg.odd_pair).unwrap();
    Ok(LinkedPair {
        triangles: cg.odd_pair,
        cycles: cycles.swap_remove(k),
        lk: cg.odd_lk,
    })
}
