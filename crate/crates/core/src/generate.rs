//! Seeded generators: point sets, random graphs, drawings and linked-cycle fixtures.

use std::collections::HashSet;

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::crossing::{Graph, SpatialDrawing};
use crate::error::{Error, Result};
use crate::geom::planar::orient2d;
use crate::geom::scalar::{int, rat};
use crate::geom::{Point3, Rational};
use crate::sametype::PointMultiset;
use crate::topology::PolygonalCycle;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random rational in `[0, 1]` with denominator at most `den`.
pub fn unit_rational(rng: &mut impl Rng, den: i64) -> Rational {
    let q = rng.gen_range(1..=den);
    rat(rng.gen_range(0..=q), q)
}

/// Points of the unit cube with coordinate denominators at most `den`.
pub fn rational_points(count: usize, den: i64, seed: u64) -> Result<Vec<Point3>> {
    if den < 1 {
        return Err(Error::OutOfRange(format!("denominator bound {den}")));
    }
    let mut r = rng(seed);
    Ok((0..count)
        .map(|_| Point3::new(unit_rational(&mut r, den), unit_rational(&mut r, den), unit_rational(&mut r, den)))
        .collect())
}

/// Erdős–Rényi graph `G(n, p)`.
pub fn gnp(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::OutOfRange(format!("edge probability {p}")));
    }
    let mut r = rng(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if r.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges)
}

/// Uniform graph with exactly `m` edges.
pub fn gnm(n: usize, m: usize, seed: u64) -> Result<Graph> {
    let total = n * n.saturating_sub(1) / 2;
    if m > total {
        return Err(Error::OutOfRange(format!("{m} edges on {n} vertices")));
    }
    let mut r = rng(seed);
    let pair = |mut k: usize| {
        let mut u = 0;
        while k >= n - 1 - u {
            k -= n - 1 - u;
            u += 1;
        }
        (u, u + 1 + k)
    };
    Graph::new(n, sample(&mut r, total, m).into_iter().map(pair))
}

/// `copies` vertex-disjoint copies of `K_6`.
pub fn disjoint_k6s(copies: usize) -> Graph {
    (0..copies).fold(Graph::empty(0), |g, _| g.disjoint_union(&Graph::complete(6)))
}

/// Straight drawing with distinct integer positions in `[-range, range]³`.
pub fn random_straight_drawing(g: &Graph, seed: u64, range: i64) -> Result<SpatialDrawing> {
    let mut r = rng(seed);
    let mut used = HashSet::new();
    let mut pos = Vec::with_capacity(g.n());
    while pos.len() < g.n() {
        let c: [i64; 3] = std::array::from_fn(|_| r.gen_range(-range..=range));
        if used.insert(c) {
            pos.push(Point3::from_ints(c[0], c[1], c[2]));
        }
    }
    SpatialDrawing::straight(g.clone(), pos)
}

/// Straight drawing in `z = 0` with integer positions in `[-range, range]²`, no three collinear.
pub fn random_planar_drawing(g: &Graph, seed: u64, range: i64) -> Result<SpatialDrawing> {
    let mut r = rng(seed);
    let mut pts: Vec<[Rational; 2]> = Vec::with_capacity(g.n());
    let mut tries = 0;
    while pts.len() < g.n() {
        tries += 1;
        if tries > 100_000 {
            return Err(Error::RetryExhausted(tries));
        }
        let p = [int(r.gen_range(-range..=range)), int(r.gen_range(-range..=range))];
        let clash = pts.iter().any(|a| *a == p)
            || pts.iter().enumerate().any(|(i, a)| pts[i + 1..].iter().any(|b| orient2d(a, b, &p) == 0));
        if !clash {
            pts.push(p);
        }
    }
    let pos = pts.into_iter().map(|[x, y]| Point3::new(x, y, int(0))).collect();
    SpatialDrawing::straight(g.clone(), pos)
}

fn cycle(pts: &[[i64; 3]]) -> PolygonalCycle {
    PolygonalCycle::new(pts.iter().map(|p| Point3::from_ints(p[0], p[1], p[2])).collect()).expect("fixture cycle")
}

/// Two squares forming a Hopf link with linking number `+1`.
pub fn hopf_pair() -> (PolygonalCycle, PolygonalCycle) {
    hopf_at(0)
}

fn hopf_at(z: i64) -> (PolygonalCycle, PolygonalCycle) {
    (
        cycle(&[[-1, -1, z], [1, -1, z], [1, 1, z], [-1, 1, z]]),
        cycle(&[[0, 0, z + 1], [2, 0, z + 1], [2, 0, z - 1], [0, 0, z - 1]]),
    )
}

/// `count` Hopf pairs stacked along the z-axis, ten units apart.
pub fn stacked_hopf_pairs(count: usize) -> Vec<PolygonalCycle> {
    (0..count)
        .flat_map(|i| {
            let (a, b) = hopf_at(10 * i as i64);
            [a, b]
        })
        .collect()
}

/// Integer points in `[-range, range]^dim`, repeats allowed.
pub fn random_multiset(dim: usize, count: usize, range: i64, seed: u64) -> Result<PointMultiset> {
    let mut r = rng(seed);
    let pts = (0..count).map(|_| (0..dim).map(|_| int(r.gen_range(-range..=range))).collect()).collect();
    PointMultiset::new(dim, pts)
}
