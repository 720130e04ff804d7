//! Random vertex bisections with many edges on both sides.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::crossing::Graph;
use crate::error::{Error, Result};

const MAX_RETRIES: usize = 1000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bisection {
    /// `true` for vertices in the first class.
    pub side: Vec<bool>,
    pub e1: usize,
    pub e2: usize,
    pub retries: usize,
}

impl Bisection {
    pub fn class(&self, first: bool) -> Vec<usize> {
        (0..self.side.len()).filter(|&v| self.side[v] == first).collect()
    }

    /// Subgraph of edges inside one class, on the full vertex set.
    pub fn induced(&self, g: &Graph, first: bool) -> Graph {
        g.filter_edges(|(u, v)| self.side[u] == first && self.side[v] == first)
    }
}

/// `e ≥ |E|/4 − √(|V||E|)`, decided in integers.
pub fn meets_bound(e: usize, n: usize, m: usize) -> bool {
    let gap = m as i128 - 4 * e as i128;
    gap <= 0 || gap * gap <= 16 * n as i128 * m as i128
}

/// Fair random 2-colorings until both classes span enough edges.
pub fn random_bisection(g: &Graph, seed: u64) -> Result<Bisection> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for retries in 1..=MAX_RETRIES {
        let side: Vec<bool> = (0..g.n()).map(|_| rng.gen_bool(0.5)).collect();
        let e1 = g.induced_edge_count(&side);
        let flipped: Vec<bool> = side.iter().map(|s| !s).collect();
        let e2 = g.induced_edge_count(&flipped);
        if meets_bound(e1, g.n(), g.m()) && meets_bound(e2, g.n(), g.m()) {
            return Ok(Bisection { side, e1, e2, retries });
        }
    }
    Err(Error::RetryExhausted(MAX_RETRIES))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_bounds() {
        let b = random_bisection(&Graph::empty(10), 1).unwrap();
        assert_eq!(b.retries, 1);
        let b = random_bisection(&Graph::complete(8), 1).unwrap();
        assert_eq!(b.retries, 1);
        assert_eq!(b.e1 + b.e2 + (0..8).filter(|&v| b.side[v]).count() * (0..8).filter(|&v| !b.side[v]).count(), 28);
    }

    #[test]
    fn bound_check_is_exact() {
        // 4000/4 − √(200·4000) ≈ 105.57
        assert!(meets_bound(106, 200, 4000));
        assert!(!meets_bound(105, 200, 4000));
    }
}
