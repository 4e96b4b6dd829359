//! Simple undirected graphs on labeled vertices `0..n`.
//!
//! The adjacency relation is stored as a packed bit string over the
//! upper-triangular pairs in graph6 order: for `j = 1..n` and `i = 0..j`,
//! pair `(i, j)` occupies bit `j * (j - 1) / 2 + i`.

mod canon;
mod enumerate;
mod format;

use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

pub use canon::{are_isomorphic, canonical_form, canonical_graph, CANON_MAX_ORDER};
pub use enumerate::{enumerate_graphs, ENUM_MAX_ORDER};
pub use format::{encode_edge_list, encode_graph6, parse_edge_list, parse_graph6};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },
    #[error("edge list parse error on line {line}: {reason}")]
    EdgeList { line: usize, reason: String },
    #[error("vertex {vertex} out of range for order {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    Loop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("order {n} exceeds the supported maximum {max}")]
    OrderTooLarge { n: usize, max: usize },
    #[error("order must be at least 1")]
    EmptyOrder,
}

#[inline]
fn pair_index(i: usize, j: usize) -> usize {
    debug_assert!(i < j);
    j * (j - 1) / 2 + i
}

/// A simple undirected graph.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: usize,
    bits: Vec<u64>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        let pairs = n * n.saturating_sub(1) / 2;
        Graph {
            n,
            bits: vec![0; pairs.div_ceil(64)],
        }
    }

    pub fn complete(n: usize) -> Self {
        complement(&Graph::empty(n))
    }

    pub fn path(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for v in 1..n {
            g.set_edge(v - 1, v, true);
        }
        g
    }

    pub fn cycle(n: usize) -> Self {
        let mut g = Graph::path(n);
        if n >= 3 {
            g.set_edge(0, n - 1, true);
        }
        g
    }

    /// `K_{1,k}` with the center at vertex 0.
    pub fn star(k: usize) -> Self {
        let mut g = Graph::empty(k + 1);
        for v in 1..=k {
            g.set_edge(0, v, true);
        }
        g
    }

    /// Builds a graph from an edge list, rejecting loops, duplicates and
    /// out-of-range endpoints.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph from a 0/1 adjacency matrix given row by row.
    /// Only the upper triangle is read; the caller is responsible for symmetry.
    pub fn from_adjacency_rows(rows: &[&[u8]]) -> Result<Self, GraphError> {
        let n = rows.len();
        let mut g = Graph::empty(n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(GraphError::VertexOutOfRange {
                    vertex: row.len(),
                    n,
                });
            }
            if row[i] != 0 {
                return Err(GraphError::Loop(i));
            }
            for j in i + 1..n {
                if row[j] != rows[j][i] {
                    return Err(GraphError::EdgeList {
                        line: i + 1,
                        reason: format!("adjacency not symmetric at ({i}, {j})"),
                    });
                }
                if row[j] != 0 {
                    g.set_edge(i, j, true);
                }
            }
        }
        Ok(g)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        if u == v {
            return false;
        }
        let k = if u < v { pair_index(u, v) } else { pair_index(v, u) };
        self.bits[k / 64] >> (k % 64) & 1 == 1
    }

    pub(crate) fn set_edge(&mut self, u: usize, v: usize, on: bool) {
        let k = if u < v { pair_index(u, v) } else { pair_index(v, u) };
        if on {
            self.bits[k / 64] |= 1 << (k % 64);
        } else {
            self.bits[k / 64] &= !(1 << (k % 64));
        }
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        for w in [u, v] {
            if w >= self.n {
                return Err(GraphError::VertexOutOfRange { vertex: w, n: self.n });
            }
        }
        if u == v {
            return Err(GraphError::Loop(u));
        }
        if self.has_edge(u, v) {
            return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
        }
        self.set_edge(u, v, true);
        Ok(())
    }

    /// Edges as `(u, v)` with `u < v`, in graph6 bit order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (1..self.n).flat_map(move |j| (0..j).map(move |i| (i, j)))
            .filter(move |&(i, j)| self.has_edge(i, j))
    }

    pub fn edge_count(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&u| self.has_edge(u, v))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors(v).count()
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = queue.pop_front() {
            for u in self.neighbors(v) {
                if !seen[u] {
                    seen[u] = true;
                    count += 1;
                    queue.push_back(u);
                }
            }
        }
        count == self.n
    }

    /// Relabels vertices so that vertex `v` of `self` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n, "permutation length must equal the order");
        let mut g = Graph::empty(self.n);
        for (u, v) in self.edges() {
            g.set_edge(perm[u], perm[v], true);
        }
        g
    }

    pub(crate) fn raw_bits(&self) -> &[u64] {
        &self.bits
    }

    pub(crate) fn pair_count(&self) -> usize {
        self.n * self.n.saturating_sub(1) / 2
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({})", encode_graph6(self))
    }
}

/// The complement graph: edges are exactly the non-edges of `g`.
pub fn complement(g: &Graph) -> Graph {
    let mut h = Graph::empty(g.n);
    let pairs = g.pair_count();
    for (w, src) in h.bits.iter_mut().zip(&g.bits) {
        *w = !src;
    }
    if !pairs.is_multiple_of(64) {
        if let Some(last) = h.bits.last_mut() {
            *last &= (1u64 << (pairs % 64)) - 1;
        }
    }
    h
}

/// Vertex degrees `d_i`, indexed by vertex.
pub fn degree_vector(g: &Graph) -> Vec<usize> {
    let mut d = vec![0; g.n];
    for (u, v) in g.edges() {
        d[u] += 1;
        d[v] += 1;
    }
    d
}
