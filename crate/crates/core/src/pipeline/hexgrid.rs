//! Three-regular hexagonal grid drawn on a sphere, plus one straight chord.
//!
//! The grid consists of `R = k + 1` concentric rings of `L = 4(k + 1)`
//! vertices. Vertex `i` of ring `r` joins vertex `i` of ring `r + 1` when
//! `i + r` is even, so consecutive rings bound hexagons. Truncation: the
//! degree-2 vertices of the innermost ring (odd `i`) are paired by chords
//! `(1,3), (5,7), …` inside it, and those of the outermost ring are pushed
//! outward and paired the same way outside it.

use std::cmp::Ordering;
use std::collections::{HashMap, VecDeque};

use num_traits::{Signed, Zero};

use crate::crossing::{lift_to_sphere_with, Graph, LiftOptions, SpatialDrawing};
use crate::error::{Error, Result};
use crate::geom::planar::{orient2d, segments_intersect_2d, Point2, SegmentRelation};
use crate::geom::scalar::rat;
use crate::geom::{Point3, Rational};

#[derive(Clone, Debug)]
pub struct HexGrid {
    /// The grid plus the special edge.
    pub graph: Graph,
    pub special_edge: (usize, usize),
    /// Plane drawing of the grid alone.
    pub planar: SpatialDrawing,
    /// Sphere drawing of the grid with the special edge as a straight chord.
    pub drawing: SpatialDrawing,
    pub rings: usize,
    pub face_distance: usize,
}

/// Rational point on the unit circle near angle `2π i / l`; `l` divisible by 4.
fn circle_point(i: usize, l: usize) -> [Rational; 2] {
    let quarter = l / 4;
    let (q, j) = (i / quarter, i % quarter);
    let theta = std::f64::consts::TAU * j as f64 / l as f64;
    let den = 8 * l as i64;
    let s = rat(((theta / 2.0).tan() * den as f64).round() as i64, den);
    let one = Rational::from_integer(1.into());
    let n = &one + &s * &s;
    let mut p = [(&one - &s * &s) / &n, (Rational::from_integer(2.into()) * &s) / &n];
    for _ in 0..q {
        p = [-p[1].clone(), p[0].clone()];
    }
    p
}

/// Ring structure: vertex ids, edges and plane positions.
fn rings(k: usize) -> (usize, usize, Vec<(usize, usize)>, Vec<Point2>) {
    let (r_count, l) = (k + 1, 4 * (k + 1));
    let id = |r: usize, i: usize| r * l + (i % l);
    let mut edges = Vec::new();
    for r in 0..r_count {
        for i in 0..l {
            edges.push((id(r, i), id(r, i + 1)));
            if r + 1 < r_count && (i + r) % 2 == 0 {
                edges.push((id(r, i), id(r + 1, i)));
            }
        }
    }
    for i in (1..l).step_by(4) {
        edges.push((id(0, i), id(0, i + 2)));
    }
    let top = r_count - 1;
    let outer: Vec<usize> = (0..l).filter(|i| (i + top) % 2 == 0).collect();
    for pair in outer.chunks(2) {
        edges.push((id(top, pair[0]), id(top, pair[1])));
    }
    let mut pos = Vec::with_capacity(r_count * l);
    for r in 0..r_count {
        for i in 0..l {
            let mut rho = 4 * (r as i64 + 1);
            if r == top && (i + top) % 2 == 0 {
                rho *= 2;
            }
            let [x, y] = circle_point(i, l);
            let f = Rational::from_integer(rho.into());
            pos.push([x * &f, y * &f]);
        }
    }
    (r_count, l, edges, pos)
}

/// Builds the grid, validates it, lifts it and adds the chord.
pub fn hexgrid_construction(k: usize, subdivision: usize) -> Result<HexGrid> {
    if k == 0 {
        return Err(Error::OutOfRange("grid scale k must be at least 1".into()));
    }
    let (r_count, l, edges, pos) = rings(k);
    let h = Graph::new(r_count * l, edges)?;
    check_cubic(&h)?;
    check_plane(&h, &pos)?;
    check_three_connected(&h)?;
    let faces = faces(&h, &pos);
    if h.n() + faces.len() != h.m() + 2 {
        return Err(Error::Invariant("grid embedding violates Euler's formula".into()));
    }
    let u = 0;
    let top = r_count - 1;
    let (v, face_distance) = (0..l)
        .map(|i| top * l + i)
        .filter(|&v| !h.has_edge(u, v))
        .map(|v| (v, face_distance(&h, &faces, u, v)))
        .max_by_key(|&(v, d)| (d, (v % l).abs_diff(l / 2) == 0))
        .expect("outer ring has non-neighbours of u");
    if face_distance < r_count.div_ceil(4) {
        return Err(Error::Invariant(format!("special vertices only {face_distance} faces apart")));
    }
    let positions: Vec<Point3> = pos.iter().map(|p| Point3::new(p[0].clone(), p[1].clone(), Rational::zero())).collect();
    let planar = SpatialDrawing::straight(h.clone(), positions)?;
    let lifted = lift_to_sphere_with(&planar, &LiftOptions { subdivision, ..LiftOptions::default() })?;
    let drawing = lifted.drawing.with_straight_edge(u, v)?;
    Ok(HexGrid {
        graph: drawing.graph().clone(),
        special_edge: (u, v),
        planar,
        drawing,
        rings: r_count,
        face_distance,
    })
}

fn check_cubic(g: &Graph) -> Result<()> {
    match (0..g.n()).find(|&v| g.degree(v) != 3) {
        Some(v) => Err(Error::Invariant(format!("grid vertex {v} has degree {}", g.degree(v)))),
        None => Ok(()),
    }
}

/// The straight-line drawing has no crossings or overlaps.
fn check_plane(g: &Graph, pos: &[Point2]) -> Result<()> {
    let e = g.edges();
    for i in 0..e.len() {
        for j in (i + 1)..e.len() {
            let ((a, b), (c, d)) = (e[i], e[j]);
            let shared = [a, b].iter().find(|x| **x == c || **x == d).copied();
            let ok = match shared {
                None => segments_intersect_2d(&pos[a], &pos[b], &pos[c], &pos[d]) == SegmentRelation::Disjoint,
                Some(s) => {
                    let p = if s == a { b } else { a };
                    let q = if s == c { d } else { c };
                    let (u, w) = (sub(&pos[p], &pos[s]), sub(&pos[q], &pos[s]));
                    orient2d(&pos[s], &pos[p], &pos[q]) != 0 || (&u[0] * &w[0] + &u[1] * &w[1]).is_negative()
                }
            };
            if !ok {
                return Err(Error::Invariant(format!("grid edges {:?} and {:?} cross", e[i], e[j])));
            }
        }
    }
    Ok(())
}

fn sub(a: &Point2, b: &Point2) -> Point2 {
    [&a[0] - &b[0], &a[1] - &b[1]]
}

/// No vertex is an articulation point of the graph minus any single vertex.
fn check_three_connected(g: &Graph) -> Result<()> {
    for removed in 0..g.n() {
        if let Some(cut) = articulation(g, removed) {
            return Err(Error::Invariant(format!("removing {removed} and {cut} disconnects the grid")));
        }
    }
    Ok(())
}

/// Some articulation point of `g − removed`, or a marker if it is disconnected.
fn articulation(g: &Graph, removed: usize) -> Option<usize> {
    let n = g.n();
    let start = (0..n).find(|&v| v != removed)?;
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut time = 0;
    // Iterative DFS: (vertex, parent, next neighbour index).
    let mut stack = vec![(start, usize::MAX, 0usize)];
    disc[start] = 0;
    low[start] = 0;
    let mut root_children = 0;
    while let Some(&mut (v, parent, ref mut idx)) = stack.last_mut() {
        if *idx < g.degree(v) {
            let w = g.neighbors(v)[*idx];
            *idx += 1;
            if w == removed || w == parent {
                continue;
            }
            if disc[w] == usize::MAX {
                time += 1;
                disc[w] = time;
                low[w] = time;
                if v == start {
                    root_children += 1;
                }
                stack.push((w, v, 0));
            } else {
                low[v] = low[v].min(disc[w]);
            }
        } else {
            stack.pop();
            if parent != usize::MAX {
                low[parent] = low[parent].min(low[v]);
                if parent != start && low[v] >= disc[parent] {
                    return Some(parent);
                }
            }
        }
    }
    if root_children > 1 {
        return Some(start);
    }
    let reached = disc.iter().enumerate().filter(|&(v, d)| v != removed && *d != usize::MAX).count();
    (reached < n - 1).then_some(start)
}

/// Counter-clockwise angular order of `a` and `b` around the origin.
fn angle_cmp(a: &Point2, b: &Point2) -> Ordering {
    let half = |p: &Point2| !(p[1].is_positive() || (p[1].is_zero() && p[0].is_positive()));
    let (ha, hb) = (half(a), half(b));
    if ha != hb {
        return ha.cmp(&hb);
    }
    let o = [Rational::zero(), Rational::zero()];
    match orient2d(&o, a, b) {
        1 => Ordering::Less,
        -1 => Ordering::Greater,
        _ => Ordering::Equal,
    }
}

/// Faces of the plane embedding as lists of directed edges.
fn faces(g: &Graph, pos: &[Point2]) -> Vec<Vec<(usize, usize)>> {
    let rot: Vec<Vec<usize>> = (0..g.n())
        .map(|v| {
            let mut nb = g.neighbors(v).to_vec();
            nb.sort_by(|&a, &b| angle_cmp(&sub(&pos[a], &pos[v]), &sub(&pos[b], &pos[v])));
            nb
        })
        .collect();
    let mut seen: HashMap<(usize, usize), bool> = HashMap::new();
    let mut out = Vec::new();
    for &(a, b) in g.edges() {
        for start in [(a, b), (b, a)] {
            if seen.contains_key(&start) {
                continue;
            }
            let mut face = Vec::new();
            let mut cur = start;
            loop {
                seen.insert(cur, true);
                face.push(cur);
                let (x, y) = cur;
                // Next edge: the neighbour of y just before x in counter-clockwise order.
                let r = &rot[y];
                let k = r.iter().position(|&w| w == x).unwrap();
                let z = r[(k + r.len() - 1) % r.len()];
                cur = (y, z);
                if cur == start {
                    break;
                }
            }
            out.push(face);
        }
    }
    out
}

/// Least dual distance between a face at `u` and a face at `v`.
fn face_distance(g: &Graph, faces: &[Vec<(usize, usize)>], u: usize, v: usize) -> usize {
    let mut owner: HashMap<(usize, usize), usize> = HashMap::new();
    for (f, face) in faces.iter().enumerate() {
        for &e in face {
            owner.insert(e, f);
        }
    }
    let mut dist = vec![usize::MAX; faces.len()];
    let mut queue = VecDeque::new();
    for (f, face) in faces.iter().enumerate() {
        if face.iter().any(|&(a, _)| a == u) {
            dist[f] = 0;
            queue.push_back(f);
        }
    }
    while let Some(f) = queue.pop_front() {
        for &(a, b) in &faces[f] {
            let h = owner[&(b, a)];
            if dist[h] == usize::MAX {
                dist[h] = dist[f] + 1;
                queue.push_back(h);
            }
        }
    }
    let _ = g;
    (0..faces.len())
        .filter(|&f| faces[f].iter().any(|&(a, _)| a == v))
        .map(|f| dist[f])
        .min()
        .unwrap_or(usize::MAX)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_is_cubic_plane_and_three_connected() {
        for k in 1..=4 {
            let (r, l, edges, pos) = rings(k);
            let h = Graph::new(r * l, edges).unwrap();
            check_cubic(&h).unwrap();
            check_plane(&h, &pos).unwrap();
            check_three_connected(&h).unwrap();
            assert_eq!(h.n() + faces(&h, &pos).len(), h.m() + 2);
        }
    }

    #[test]
    fn connectivity_check_detects_cuts() {
        // Two K4's sharing an edge: removing both shared vertices disconnects.
        let g = Graph::new(6, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (0, 4), (0, 5), (1, 4), (1, 5), (4, 5)]).unwrap();
        assert!(check_three_connected(&g).is_err());
        assert!(check_three_connected(&Graph::complete(5)).is_ok());
    }

    #[test]
    fn construction_k1() {
        let hg = hexgrid_construction(1, 2).unwrap();
        let (u, v) = hg.special_edge;
        assert!(u != v && !hg.planar.graph().has_edge(u, v));
        assert_eq!(hg.graph.m(), hg.planar.graph().m() + 1);
        assert!(hexgrid_construction(0, 2).is_err());
    }
}
