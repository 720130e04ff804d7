use std::collections::BTreeSet;

use crate::error::{Error, Result};

/// Unordered edge stored with `u < v`.
pub type Edge = (usize, usize);

/// A simple undirected graph on vertices `0..n`.
///
/// Edge ids are positions in the edge list, which keeps the input order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        let mut list = Vec::new();
        let mut adj = vec![Vec::new(); n];
        for (i, (u, v)) in edges.into_iter().enumerate() {
            let loc = format!("edges[{i}]");
            if u >= n || v >= n {
                return Err(Error::validation(loc, format!("vertex out of range in {{{u},{v}}}")));
            }
            if u == v {
                return Err(Error::validation(loc, format!("loop at vertex {u}")));
            }
            let e = (u.min(v), u.max(v));
            if !seen.insert(e) {
                return Err(Error::validation(loc, format!("duplicate edge {{{u},{v}}}")));
            }
            adj[u].push(v);
            adj[v].push(u);
            list.push(e);
        }
        Ok(Graph { n, edges: list, adj })
    }

    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            edges: Vec::new(),
            adj: vec![Vec::new(); n],
        }
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|u| ((u + 1)..n).map(move |v| (u, v)));
        Graph::new(n, edges).expect("complete graph is simple")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, id: usize) -> Edge {
        self.edges[id]
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(&v)
    }

    pub fn edge_id(&self, u: usize, v: usize) -> Option<usize> {
        let e = (u.min(v), u.max(v));
        self.edges.iter().position(|&x| x == e)
    }

    /// Subgraph keeping the edges for which `keep` holds; vertex set unchanged.
    pub fn filter_edges(&self, mut keep: impl FnMut(Edge) -> bool) -> Graph {
        let kept: Vec<Edge> = self.edges.iter().copied().filter(|&e| keep(e)).collect();
        Graph::new(self.n, kept).expect("subgraph of a simple graph")
    }

    /// Disjoint union, relabeling `other` by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let off = self.n;
        let edges = self
            .edges
            .iter()
            .copied()
            .chain(other.edges.iter().map(|&(u, v)| (u + off, v + off)));
        Graph::new(self.n + other.n, edges).expect("union of simple graphs")
    }

    /// Number of edges with both endpoints in `side`.
    pub fn induced_edge_count(&self, side: &[bool]) -> usize {
        self.edges.iter().filter(|&&(u, v)| side[u] && side[v]).count()
    }
}

fn disjoint(a: Edge, b: Edge) -> bool {
    a.0 != b.0 && a.0 != b.1 && a.1 != b.0 && a.1 != b.1
}

/// All `k`-sets of pairwise vertex-disjoint edges, as ascending edge-id tuples in
/// lexicographic order.
pub fn enumerate_disjoint_tuples(g: &Graph, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(g: &Graph, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        let need = k - cur.len();
        for id in start..g.m() {
            if g.m() - id < need {
                break;
            }
            let e = g.edge(id);
            if cur.iter().all(|&c| disjoint(g.edge(c), e)) {
                cur.push(id);
                rec(g, k, id + 1, cur, out);
                cur.pop();
            }
        }
    }
    if k > 0 {
        rec(g, k, 0, &mut cur, &mut out);
    }
    out
}
