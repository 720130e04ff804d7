//! Interval graphs, order types of four intervals, and candidate counting.

use std::collections::HashMap;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::crossing::Graph;
use crate::error::{Error, Result};
use crate::geom::{format_rational, Rational};

/// Perfect matching on positions `0..8`: the endpoint order of four intervals.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntervalMatching {
    pub pairs: [(usize, usize); 4],
}

impl IntervalMatching {
    /// Connected components of the union of the four intervals.
    pub fn components(&self) -> usize {
        let mut close = [0usize; 8];
        for &(a, b) in &self.pairs {
            close[a] = b;
        }
        let mut comps = 0;
        let mut reach = 0;
        let mut open = false;
        for p in 0..8 {
            if !open || p > reach {
                comps += 1;
                reach = p;
            }
            open = true;
            reach = reach.max(close[p].max(p));
        }
        comps
    }

    /// Partner of each position.
    fn partner(&self) -> [usize; 8] {
        let mut m = [0; 8];
        for &(a, b) in &self.pairs {
            m[a] = b;
            m[b] = a;
        }
        m
    }
}

/// All 105 matchings, each with its component count.
pub fn enumerate_order_types() -> Vec<(IntervalMatching, usize)> {
    fn rec(free: &mut Vec<usize>, acc: &mut Vec<(usize, usize)>, out: &mut Vec<IntervalMatching>) {
        if free.is_empty() {
            out.push(IntervalMatching { pairs: [acc[0], acc[1], acc[2], acc[3]] });
            return;
        }
        let a = free.remove(0);
        for i in 0..free.len() {
            let b = free.remove(i);
            acc.push((a, b));
            rec(free, acc, out);
            acc.pop();
            free.insert(i, b);
        }
        free.insert(0, a);
    }
    let mut out = Vec::new();
    rec(&mut (0..8).collect(), &mut Vec::new(), &mut out);
    out.into_iter()
        .map(|m| {
            let r = m.components();
            (m, r)
        })
        .collect()
}

/// `D = ⌈2m/n⌉`.
pub fn interval_width(n: usize, m: usize) -> Result<usize> {
    if n < 2 || m == 0 || m > n * (n - 1) / 2 {
        return Err(Error::OutOfRange(format!("m = {m} outside 1..=C({n},2)")));
    }
    Ok((2 * m).div_ceil(n))
}

/// Vertices `0..n` (vertex `i` stands for `i + 1`), edges `{i, j}` with `|i − j| ≤ D`.
pub fn interval_graph(n: usize, m: usize) -> Result<Graph> {
    let d = interval_width(n, m)?;
    let edges = (0..n).flat_map(|i| ((i + 1)..n.min(i + d + 1)).map(move |j| (i, j)));
    Graph::new(n, edges)
}

/// Number of position 8-tuples `1 ≤ v₀ < … < v₇ ≤ n` with matched positions
/// at distance at most `d`.
pub fn order_type_count(m: &IntervalMatching, n: usize, d: usize) -> u128 {
    let partner = m.partner();
    const CLOSED: u16 = u16::MAX;
    // State: endpoints placed so far, and for each open interval (keyed by
    // its start) the distance from its start to the last vertex seen.
    let mut states: HashMap<(usize, [u16; 8]), u128> = HashMap::new();
    states.insert((0, [CLOSED; 8]), 1);
    for _ in 0..n {
        let mut next: HashMap<(usize, [u16; 8]), u128> = HashMap::new();
        for ((k, mut ages), cnt) in states {
            let mut dead = false;
            for a in ages.iter_mut().filter(|a| **a != CLOSED) {
                *a += 1;
                dead |= *a as usize > d;
            }
            if dead {
                continue;
            }
            *next.entry((k, ages)).or_default() += cnt;
            if k < 8 {
                let mut placed = ages;
                let p = partner[k];
                if p > k {
                    placed[k] = 0;
                } else {
                    placed[p] = CLOSED;
                }
                *next.entry((k + 1, placed)).or_default() += cnt;
            }
        }
        states = next;
    }
    states.into_iter().filter(|((k, _), _)| *k == 8).map(|(_, c)| c).sum()
}

/// Vertex-disjoint edge quadruples of the interval graph whose intervals
/// form at most two components.
pub fn count_candidate_quadruples(n: usize, m: usize) -> Result<u128> {
    let d = interval_width(n, m)?;
    Ok(enumerate_order_types()
        .iter()
        .filter(|(_, r)| *r <= 2)
        .map(|(t, _)| order_type_count(t, n, d))
        .sum())
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct StairReport {
    pub n: usize,
    pub m: usize,
    #[serde(rename = "D")]
    pub d: usize,
    pub count: u128,
    pub bound_105: u128,
    pub bound_6720: String,
    pub width_exact: bool,
    pub pass: bool,
}

/// Candidate count with the bounds `105 n² D⁶` and `6720 m⁶ / n⁴`; the
/// latter applies when `D = 2m/n` exactly.
pub fn stair_report(n: usize, m: usize) -> Result<StairReport> {
    let d = interval_width(n, m)?;
    let count = count_candidate_quadruples(n, m)?;
    let bound_105 = 105 * (n as u128).pow(2) * (d as u128).pow(6);
    let b6720 = Rational::new(BigInt::from(6720) * BigInt::from(m).pow(6), BigInt::from(n).pow(4));
    let width_exact = 2 * m == d * n;
    let pass = count <= bound_105 && (!width_exact || Rational::from_integer(BigInt::from(count)) <= b6720);
    Ok(StairReport {
        n,
        m,
        d,
        count,
        bound_105,
        bound_6720: format_rational(&b6720),
        width_exact,
        pass,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crossing::enumerate_disjoint_tuples;

    /// Components of the union of closed intervals, by sorting.
    fn oracle_components(iv: &[(usize, usize)]) -> usize {
        let mut v = iv.to_vec();
        v.sort();
        let mut comps = 0;
        let mut reach = None;
        for (a, b) in v {
            match reach {
                Some(r) if a <= r => reach = Some(r.max(b)),
                _ => {
                    comps += 1;
                    reach = Some(b);
                }
            }
        }
        comps
    }

    #[test]
    fn there_are_105_order_types() {
        let all = enumerate_order_types();
        assert_eq!(all.len(), 105);
        let nested = IntervalMatching { pairs: [(0, 7), (1, 6), (2, 5), (3, 4)] };
        assert_eq!(nested.components(), 1);
        let apart = IntervalMatching { pairs: [(0, 1), (2, 3), (4, 5), (6, 7)] };
        assert_eq!(apart.components(), 4);
        for (m, r) in &all {
            assert_eq!(*r, oracle_components(&m.pairs));
        }
        let small = all.iter().filter(|(_, r)| *r <= 2).count();
        assert_eq!(small, all.iter().filter(|(m, _)| oracle_components(&m.pairs) <= 2).count());
    }

    #[test]
    fn interval_graph_examples() {
        let g = interval_graph(10, 20).unwrap();
        assert_eq!(g.m(), 30);
        assert_eq!(interval_graph(10, 5).unwrap().m(), 9);
        assert_eq!(interval_graph(6, 15).unwrap().m(), 15);
        assert!(interval_graph(10, 46).is_err());
        assert!(interval_graph(10, 0).is_err());
    }

    fn brute(n: usize, m: usize) -> u128 {
        let g = interval_graph(n, m).unwrap();
        enumerate_disjoint_tuples(&g, 4)
            .iter()
            .filter(|t| {
                let iv: Vec<(usize, usize)> = t.iter().map(|&e| (g.edge(e).0, g.edge(e).1)).collect();
                oracle_components(&iv) <= 2
            })
            .count() as u128
    }

    #[test]
    fn candidate_count_matches_brute_force() {
        for (n, m) in [(9, 8), (9, 12), (10, 20), (11, 22), (12, 30), (8, 28), (7, 21)] {
            assert_eq!(count_candidate_quadruples(n, m).unwrap(), brute(n, m), "n={n} m={m}");
        }
    }

    #[test]
    fn per_type_counts_are_bounded() {
        let (n, d) = (14, 3);
        for (t, r) in enumerate_order_types() {
            assert!(order_type_count(&t, n, d) <= (n as u128).pow(r as u32) * (d as u128).pow(8 - r as u32));
        }
    }

    #[test]
    fn candidate_bound_holds() {
        let r = stair_report(16, 32).unwrap();
        assert_eq!(r.d, 4);
        assert!(r.width_exact && r.pass);
    }
}
