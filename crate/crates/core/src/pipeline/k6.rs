//! Heuristic search for subdivisions of `K_6`.

use std::collections::VecDeque;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::crossing::Graph;
use crate::topology::{BranchPath, Subdivision};

const T: usize = 6;
/// Pair orders tried per branch set before resampling it.
const ORDERS_PER_SET: usize = 4;

struct Search<'a> {
    g: &'a Graph,
    budget: u64,
    spent: u64,
}

impl Search<'_> {
    /// Shortest path from `a` to `b` through unblocked vertices.
    fn route(&mut self, a: usize, b: usize, blocked: &[bool]) -> Option<Vec<usize>> {
        let n = self.g.n();
        let mut prev = vec![usize::MAX; n];
        prev[a] = a;
        let mut queue = VecDeque::from([a]);
        while let Some(x) = queue.pop_front() {
            self.spent += 1;
            if self.spent > self.budget {
                return None;
            }
            for &y in self.g.neighbors(x) {
                if prev[y] != usize::MAX {
                    continue;
                }
                if y == b {
                    prev[y] = x;
                    let mut path = vec![b];
                    let mut c = b;
                    while c != a {
                        c = prev[c];
                        path.push(c);
                    }
                    path.reverse();
                    return Some(path);
                }
                if !blocked[y] {
                    prev[y] = x;
                    queue.push_back(y);
                }
            }
        }
        None
    }

    fn embed(&mut self, branch: &[usize], order: &[(usize, usize)]) -> Option<Subdivision> {
        let mut blocked = vec![false; self.g.n()];
        for &b in branch {
            blocked[b] = true;
        }
        let mut paths = Vec::with_capacity(order.len());
        for &(i, j) in order {
            let p = self.route(branch[i], branch[j], &blocked)?;
            for &v in &p[1..p.len() - 1] {
                blocked[v] = true;
            }
            paths.push(BranchPath { ends: (i, j), vertices: p });
        }
        paths.sort_by_key(|p| p.ends);
        Some(Subdivision { branch: branch.to_vec(), paths })
    }
}

/// Randomized search for a `K_6` subdivision within `budget` vertex expansions.
pub fn find_k6_subdivision(g: &Graph, budget: u64, seed: u64) -> Option<Subdivision> {
    let cands: Vec<usize> = (0..g.n()).filter(|&v| g.degree(v) >= T - 1).collect();
    if cands.len() < T {
        return None;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut s = Search { g, budget, spent: 0 };
    let pairs: Vec<(usize, usize)> = (0..T).flat_map(|i| ((i + 1)..T).map(move |j| (i, j))).collect();
    // Direct edges first: adjacent branch vertices cost no internal vertices.
    let by_adjacency = |branch: &[usize], order: &mut Vec<(usize, usize)>| {
        order.sort_by_key(|&(i, j)| !g.has_edge(branch[i], branch[j]));
    };
    let mut first = true;
    while s.spent < s.budget {
        let branch = if first && cands.len() >= T {
            // Highest-degree vertices first.
            let mut c = cands.clone();
            c.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
            c.truncate(T);
            c
        } else {
            sample_branch(g, &cands, &mut rng)
        };
        first = false;
        for attempt in 0..ORDERS_PER_SET {
            let mut order = pairs.clone();
            order.shuffle(&mut rng);
            if attempt == 0 {
                by_adjacency(&branch, &mut order);
            }
            if let Some(sub) = s.embed(&branch, &order) {
                debug_assert!(sub.validate(g).is_ok());
                return Some(sub);
            }
            if s.spent >= s.budget {
                break;
            }
        }
    }
    None
}

/// Degree-biased sample of distinct branch candidates.
fn sample_branch(g: &Graph, cands: &[usize], rng: &mut ChaCha8Rng) -> Vec<usize> {
    let mut pool: Vec<usize> = cands.to_vec();
    let mut out = Vec::with_capacity(T);
    while out.len() < T {
        let total: usize = pool.iter().map(|&v| g.degree(v)).sum();
        let mut r = rng.gen_range(0..total);
        let k = pool
            .iter()
            .position(|&v| {
                let d = g.degree(v);
                if r < d {
                    true
                } else {
                    r -= d;
                    false
                }
            })
            .unwrap();
        out.push(pool.swap_remove(k));
    }
    out
}

/// Greedily removes the edges of found subdivisions until the search fails.
pub fn extract_disjoint_subdivisions(g: &Graph, budget: u64, seed: u64) -> Vec<Subdivision> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cur = g.clone();
    let mut out = Vec::new();
    while let Some(sub) = find_k6_subdivision(&cur, budget, rng.gen()) {
        let used: std::collections::HashSet<(usize, usize)> =
            sub.edges(&cur).into_iter().map(|id| cur.edge(id)).collect();
        cur = cur.filter_edges(|e| !used.contains(&e));
        out.push(sub);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn gnp(n: usize, p: f64, seed: u64) -> Graph {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let edges: Vec<(usize, usize)> =
            (0..n).flat_map(|i| ((i + 1)..n).map(move |j| (i, j))).filter(|_| rng.gen_bool(p)).collect();
        Graph::new(n, edges).unwrap()
    }

    #[test]
    fn k6_is_found_as_itself() {
        let g = Graph::complete(6);
        let s = find_k6_subdivision(&g, 10_000, 1).unwrap();
        assert!(s.paths.iter().all(|p| p.vertices.len() == 2));
        s.validate(&g).unwrap();
    }

    #[test]
    fn k7_contains_k6() {
        let g = Graph::complete(7);
        find_k6_subdivision(&g, 10_000, 2).unwrap().validate(&g).unwrap();
    }

    #[test]
    fn trees_have_none() {
        // Star-of-stars: six hubs of degree ≥ 5.
        let mut edges = Vec::new();
        for h in 1..=6 {
            edges.push((0, h));
            for k in 0..5 {
                edges.push((h, 7 + 5 * (h - 1) + k));
            }
        }
        let g = Graph::new(37, edges).unwrap();
        assert!(find_k6_subdivision(&g, 20_000, 3).is_none());
    }

    #[test]
    fn subdivided_k6_is_found() {
        // K6 with every edge subdivided once.
        let mut edges = Vec::new();
        let mut next = 6;
        for i in 0..6 {
            for j in (i + 1)..6 {
                edges.push((i, next));
                edges.push((next, j));
                next += 1;
            }
        }
        let g = Graph::new(next, edges).unwrap();
        find_k6_subdivision(&g, 100_000, 4).unwrap().validate(&g).unwrap();
    }

    #[test]
    fn extraction_is_edge_disjoint() {
        let two = Graph::complete(6).disjoint_union(&Graph::complete(6));
        assert_eq!(extract_disjoint_subdivisions(&two, 50_000, 5).len(), 2);
        assert_eq!(extract_disjoint_subdivisions(&Graph::complete(6), 50_000, 5).len(), 1);
        let g = gnp(40, 0.5, 6);
        let subs = extract_disjoint_subdivisions(&g, 200_000, 7);
        assert!(!subs.is_empty());
        let mut seen = HashSet::new();
        for s in &subs {
            s.validate(&g).unwrap();
            for id in s.edges(&g) {
                assert!(seen.insert(id));
            }
        }
    }
}
