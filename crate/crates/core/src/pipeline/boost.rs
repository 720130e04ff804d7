//! Space-crossing witnesses from linked cycle pairs on both sides of a bisection.

use std::collections::HashSet;

use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::crossing::{verify_crossing_witness, CrossingWitness, Graph, SpatialDrawing};
use crate::error::{Error, Result};
use crate::geom::{PluckerLine, QuadExt};
use crate::topology::{linked_pair_in, transversal_through_cycles, PolygonalCycle, Subdivision};

use super::bisection::{meets_bound, random_bisection, Bisection};
use super::k6::extract_disjoint_subdivisions;

/// Bisections tried before giving up.
pub const BISECTION_ATTEMPTS: usize = 32;

#[derive(Clone, Debug)]
pub struct BoostReport {
    pub bisection: Bisection,
    pub attempts: usize,
    /// Subdivisions found on each side.
    pub subdivisions: (usize, usize),
    pub witnesses: Vec<CrossingWitness>,
    pub diagnostics: Vec<String>,
}

/// A linked cycle pair with the vertex sequence of each cycle.
struct Pair {
    cycles: (PolygonalCycle, PolygonalCycle),
    walks: (Vec<usize>, Vec<usize>),
}

/// Moves vertices with more neighbours across to the other side until stable.
fn refine(g: &Graph, b: &Bisection) -> Bisection {
    let mut side = b.side.clone();
    loop {
        let mut moved = false;
        for v in 0..g.n() {
            let same = g.neighbors(v).iter().filter(|&&w| side[w] == side[v]).count();
            if 2 * same < g.degree(v) {
                side[v] = !side[v];
                moved = true;
            }
        }
        if !moved {
            break;
        }
    }
    let e1 = g.induced_edge_count(&side);
    let flipped: Vec<bool> = side.iter().map(|s| !s).collect();
    let e2 = g.induced_edge_count(&flipped);
    if meets_bound(e1, g.n(), g.m()) && meets_bound(e2, g.n(), g.m()) {
        Bisection { side, e1, e2, retries: b.retries }
    } else {
        b.clone()
    }
}

fn walk(sub: &Subdivision, tri: &[usize; 3]) -> Vec<usize> {
    let mut out = Vec::new();
    for k in 0..3 {
        out.extend(sub.path(tri[k], tri[(k + 1) % 3]).into_iter().skip(1));
    }
    out
}

fn pairs(d: &SpatialDrawing, subs: &[Subdivision]) -> Result<Vec<Pair>> {
    subs.iter()
        .map(|s| {
            let lp = linked_pair_in(d, s)?;
            let (a, b) = lp.triangles;
            Ok(Pair { cycles: lp.cycles, walks: (walk(s, &a), walk(s, &b)) })
        })
        .collect()
}

/// Runs the pipeline on a straight-line drawing.
pub fn boost_witness_pipeline(d: &SpatialDrawing, seed: u64, budget: u64) -> Result<BoostReport> {
    if !d.is_straight() {
        return Err(Error::PreconditionViolated("boost pipeline needs a straight-line drawing".into()));
    }
    let g = d.graph();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut best: Option<(Bisection, Vec<Subdivision>, Vec<Subdivision>)> = None;
    let mut attempts = 0;
    while attempts < BISECTION_ATTEMPTS {
        attempts += 1;
        let b = refine(g, &random_bisection(g, rng.gen())?);
        let left = extract_disjoint_subdivisions(&b.induced(g, true), budget, rng.gen());
        let right = extract_disjoint_subdivisions(&b.induced(g, false), budget, rng.gen());
        let score = left.len().min(right.len());
        if best.as_ref().is_none_or(|(_, l, r)| score > l.len().min(r.len())) {
            best = Some((b, left, right));
        }
        if score > 0 {
            break;
        }
    }
    let (bisection, left, right) = best.expect("at least one attempt");
    log::info!("boost: {} and {} subdivisions after {attempts} bisections", left.len(), right.len());
    let (p1, p2) = (pairs(d, &left)?, pairs(d, &right)?);
    let jobs: Vec<(usize, usize)> = (0..p1.len()).flat_map(|i| (0..p2.len()).map(move |j| (i, j))).collect();
    let found: Vec<Result<(Option<CrossingWitness>, Option<String>)>> = jobs
        .par_iter()
        .map(|&(i, j)| {
            let (a, b) = (&p1[i], &p2[j]);
            let cycles = [a.cycles.0.clone(), a.cycles.1.clone(), b.cycles.0.clone(), b.cycles.1.clone()];
            let walks = [&a.walks.0, &a.walks.1, &b.walks.0, &b.walks.1];
            let t = transversal_through_cycles(&cycles)?;
            let w = t.witness.map(|(tw, idx)| to_witness(d, &walks, &tw.params, idx, tw.line));
            Ok((w, t.diagnostic.map(|m| format!("pair ({i}, {j}): {m}"))))
        })
        .collect();
    let mut witnesses = Vec::new();
    let mut diagnostics = Vec::new();
    let mut seen = HashSet::new();
    for r in found {
        let (w, diag) = r?;
        diagnostics.extend(diag);
        if let Some(w) = w {
            let mut key = w.edges.clone();
            key.sort_unstable();
            if seen.insert(key) {
                if !verify_crossing_witness(d, &w) {
                    return Err(Error::Invariant(format!("boost witness on edges {:?} fails re-verification", w.edges)));
                }
                witnesses.push(w);
            }
        }
    }
    Ok(BoostReport {
        bisection,
        attempts,
        subdivisions: (left.len(), right.len()),
        witnesses,
        diagnostics,
    })
}

fn to_witness(
    d: &SpatialDrawing,
    walks: &[&Vec<usize>; 4],
    params: &[QuadExt],
    idx: [usize; 4],
    line: PluckerLine<QuadExt>,
) -> CrossingWitness {
    let g = d.graph();
    let mut edges = Vec::new();
    let mut endpoints = Vec::new();
    let mut ps = Vec::new();
    for k in 0..4 {
        let w = walks[k];
        let (x, y) = (w[idx[k]], w[(idx[k] + 1) % w.len()]);
        let id = g.edge_id(x, y).expect("cycle edge");
        let e = g.edge(id);
        edges.push(id);
        endpoints.push(e);
        ps.push(if e.0 == x { params[k].clone() } else { QuadExt::one() - params[k].clone() });
    }
    CrossingWitness { edges, endpoints, line, segments: vec![0; 4], params: ps }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{disjoint_k6s, random_straight_drawing};

    #[test]
    fn four_k6_fixture_yields_distinct_verified_witnesses() {
        let d = random_straight_drawing(&disjoint_k6s(4), 7, 1000).unwrap();
        let r = boost_witness_pipeline(&d, 1, 200_000).unwrap();
        assert!(r.subdivisions.0 >= 1 && r.subdivisions.1 >= 1);
        assert!(!r.witnesses.is_empty());
        let mut keys = HashSet::new();
        for w in &r.witnesses {
            assert!(verify_crossing_witness(&d, w));
            let mut k = w.edges.clone();
            k.sort_unstable();
            assert!(keys.insert(k));
        }
    }

    #[test]
    fn too_few_subdivisions_gives_nothing() {
        let d = random_straight_drawing(&disjoint_k6s(1), 3, 1000).unwrap();
        assert!(boost_witness_pipeline(&d, 0, 50_000).unwrap().witnesses.is_empty());
    }

    #[test]
    fn refinement_keeps_components_together() {
        let g = disjoint_k6s(2);
        let b = Bisection { side: (0..12).map(|v| v % 2 == 0).collect(), e1: 0, e2: 0, retries: 1 };
        let r = refine(&g, &b);
        for c in 0..2 {
            assert!((1..6).all(|v| r.side[6 * c + v] == r.side[6 * c]));
        }
    }
}
